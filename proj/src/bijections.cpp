#include "majidx/bijections.hpp"

#include <algorithm>
#include <numeric>

#include "majidx/error.hpp"
#include "majidx/mis.hpp"

namespace majidx {

namespace {

void require_disjoint(const Word& theta, const Word& pi, const char* op) {
  for (Letter x : pi.letters())
    if (theta.contains(x))
      throw InputError(std::string(op) + ": letter " + std::to_string(x) +
                       " occurs in both theta and pi");
}

void require_shuffle(const Word& theta, const Word& pi, const Word& sigma, const char* op) {
  require_disjoint(theta, pi, op);
  auto fail = [&] {
    throw InputError(std::string(op) + ": " + format_word(sigma) + " is not a shuffle of (" +
                     format_word(theta) + ") and (" + format_word(pi) + ")");
  };
  if (sigma.size() != theta.size() + pi.size()) fail();
  std::size_t ti = 0, pj = 0;
  for (Letter x : sigma.letters()) {
    if (ti < theta.size() && theta.letters()[ti] == x)
      ++ti;
    else if (pj < pi.size() && pi.letters()[pj] == x)
      ++pj;
    else
      fail();
  }
}

// For each letter x in (lo, hi], in increasing order, the number of letters
// <= lo standing to its right in `w` (letters above hi are ignored).
std::vector<std::int64_t> right_counts(const Word& w, std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> counts(static_cast<std::size_t>(hi - lo), 0);
  std::int64_t below_seen = 0;
  const auto letters = w.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    const Letter x = *it;
    if (x <= lo)
      ++below_seen;
    else if (x <= hi)
      counts[static_cast<std::size_t>(x - lo - 1)] = below_seen;
  }
  return counts;
}

Word increasing_run(std::int64_t from, std::int64_t to) {
  std::vector<Letter> v;
  for (Letter x = from; x <= to; ++x) v.push_back(x);
  return Word(std::move(v));
}

}  // namespace

Partition::Partition(std::vector<std::int64_t> parts, std::int64_t bound)
    : parts_(std::move(parts)), bound_(bound) {
  if (bound_ < 0) throw InputError("partition bound must be nonnegative");
  for (std::int64_t p : parts_)
    if (p < 0 || p > bound_)
      throw InputError("partition part " + std::to_string(p) + " outside [0, " +
                       std::to_string(bound_) + "]");
  std::sort(parts_.begin(), parts_.end());
}

std::int64_t Partition::weight() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), std::int64_t{0});
}

// ---------------------------------------------------------------------------

Word build_by_increments(std::span<const Letter> order, std::span<const std::int64_t> targets) {
  if (order.size() != targets.size())
    throw InputError("build_by_increments: order has " + std::to_string(order.size()) +
                     " letters but " + std::to_string(targets.size()) + " targets given");
  for (std::size_t i = 1; i <= targets.size(); ++i) {
    const std::int64_t t = targets[i - 1];
    if (t < 0 || t > static_cast<std::int64_t>(i) - 1)
      throw InputError("build_by_increments: target " + std::to_string(i) + " = " +
                       std::to_string(t) + " outside [0, " + std::to_string(i - 1) + "]");
  }
  Word current;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const MISequence seq = major_increments(current, order[i]);
    const std::size_t k = seq.position_of(targets[i]);
    if (k == 0)
      throw InvariantViolation("increment " + std::to_string(targets[i]) +
                               " missing from major increment sequence");
    current = insert_at(current, k, order[i]);
  }
  return current;
}

namespace {

void require_order(const Word& w, const Word& order, const char* op) {
  if (!w.is_permutation_of_n())
    throw InputError(std::string(op) + ": word must be a permutation of 1.." + std::to_string(w.size()));
  if (order.size() != w.size() || !order.is_permutation_of_n())
    throw InputError(std::string(op) + ": order must be a permutation of 1.." + std::to_string(w.size()));
}

}  // namespace

Word inv_to_maj(const Word& sigma, const Word& order) {
  require_order(sigma, order, "inv_to_maj");
  const std::vector<std::int64_t> terms = inversion_sequence(sigma);
  return build_by_increments(order.letters(), terms);
}

Word maj_to_inv(const Word& tau, const Word& order) {
  require_order(tau, order, "maj_to_inv");
  std::vector<std::int64_t> targets(tau.size());
  Word current = tau;
  for (std::size_t i = order.size(); i >= 1; --i) {
    const Letter x = order.letters()[i - 1];
    const std::size_t pos = *current.position_of(x);
    Word smaller = remove_at(current, pos);
    targets[i - 1] = maj(current) - maj(smaller);
    current = std::move(smaller);
  }
  return from_inversion_sequence(targets);
}

// ---------------------------------------------------------------------------

PhiResult phi(const Word& theta, const Word& pi, const Word& sigma) {
  require_shuffle(theta, pi, sigma, "phi");
  const std::size_t a = pi.size();
  const auto b = static_cast<std::int64_t>(theta.size());

  // Delete pi(1), pi(2), ... from the left; sigma_1 = sigma, sigma_{a+1} = theta.
  std::vector<TraceStep> steps;
  steps.reserve(a);
  Word current = sigma;
  for (std::size_t i = 1; i <= a; ++i) {
    const std::size_t k = *current.position_of(pi.letters()[i - 1]);
    Word next = remove_at(current, k);
    const std::int64_t m = maj(current) - maj(next);
    const std::int64_t t = m - d_k(pi, i);
    if (t < 0 || t > b)
      throw InvariantViolation("phi: residual t_" + std::to_string(i) + " = " + std::to_string(t) +
                               " outside [0, " + std::to_string(b) + "]");
    steps.push_back(TraceStep{i, k, m, t, std::move(current)});
    current = std::move(next);
  }
  std::reverse(steps.begin(), steps.end());

  std::vector<std::int64_t> residuals;
  residuals.reserve(a);
  for (const TraceStep& s : steps) residuals.push_back(s.t);
  return PhiResult{Partition(std::move(residuals), b), InsertionTrace{theta, std::move(steps)}};
}

PhiResult phi_inverse_traced(const Word& theta, const Word& pi, const Partition& lambda) {
  require_disjoint(theta, pi, "phi_inverse");
  const auto b = static_cast<std::int64_t>(theta.size());
  const std::size_t a = pi.size();
  if (lambda.size() != a)
    throw InputError("phi_inverse: partition must have " + std::to_string(a) +
                     " parts, each in [0, " + std::to_string(b) + "]");
  for (std::int64_t p : lambda.parts())
    if (p > b) throw InputError("phi_inverse: part " + std::to_string(p) + " exceeds " + std::to_string(b));

  const auto parts = lambda.parts();
  std::vector<bool> used(a, false);
  std::vector<TraceStep> steps;
  steps.reserve(a);

  Word current = theta;
  std::size_t limit = theta.size() + 1;  // admissible MIS prefix length
  for (std::size_t i = a; i >= 1; --i) {
    const Letter x = pi.letters()[i - 1];
    const MISequence seq = major_increments(current, x);
    const std::int64_t shift = d_k(pi, i);

    std::size_t chosen_k = 0, chosen_j = 0;
    for (std::size_t k = limit; k >= 1 && chosen_k == 0; --k) {
      const std::int64_t value = seq.at(k);
      for (std::size_t j = 0; j < a; ++j) {
        if (!used[j] && parts[j] + shift == value) {
          chosen_k = k;
          chosen_j = j;
          break;
        }
      }
    }
    if (chosen_k == 0)
      throw InvariantViolation("phi_inverse: no unused part matches the first " +
                               std::to_string(limit) + " major increments while inserting " +
                               std::to_string(x));
    used[chosen_j] = true;
    current = insert_at(current, chosen_k, x);
    steps.push_back(TraceStep{i, chosen_k, seq.at(chosen_k), parts[chosen_j], current});
    limit = chosen_k;
  }
  return PhiResult{lambda, InsertionTrace{theta, std::move(steps)}};
}

Word phi_inverse(const Word& theta, const Word& pi, const Partition& lambda) {
  PhiResult r = phi_inverse_traced(theta, pi, lambda);
  if (r.trace.steps.empty()) return theta;
  return std::move(r.trace.steps.back().sigma);
}

// ---------------------------------------------------------------------------

Partition psi(std::int64_t b, std::int64_t a, const Word& tau) {
  if (b < 0 || a < 0) throw InputError("psi: b and a must be nonnegative");
  if (static_cast<std::int64_t>(tau.size()) != a + b || !tau.is_permutation_of_n())
    throw InputError("psi: word must be a permutation of 1.." + std::to_string(a + b));
  require_shuffle(increasing_run(1, b), increasing_run(b + 1, a + b), tau, "psi");
  return Partition(right_counts(tau, b, a + b), b);
}

Word psi_inverse(std::int64_t b, std::int64_t a, const Partition& lambda) {
  if (b < 0 || a < 0) throw InputError("psi_inverse: b and a must be nonnegative");
  if (static_cast<std::int64_t>(lambda.size()) != a)
    throw InputError("psi_inverse: partition must have " + std::to_string(a) + " parts");
  for (std::int64_t p : lambda.parts())
    if (p > b) throw InputError("psi_inverse: part " + std::to_string(p) + " exceeds " + std::to_string(b));

  // Letter b+i has t_i = (i-th largest part) lesser letters to its right,
  // hence b - t_i lesser letters before it.
  const auto parts = lambda.parts();
  std::vector<Letter> out;
  out.reserve(static_cast<std::size_t>(a + b));
  std::size_t i = 0;  // next pi letter is b+i+1
  for (std::int64_t before = 0; before <= b; ++before) {
    while (i < parts.size() && b - parts[parts.size() - 1 - i] == before) {
      out.push_back(b + static_cast<Letter>(i) + 1);
      ++i;
    }
    if (before < b) out.push_back(before + 1);
  }
  return Word(std::move(out));
}

Word omega(std::span<const std::size_t> q, const Word& tau) {
  const std::size_t n = tau.size();
  if (!tau.is_permutation_of_n())
    throw InputError("omega: word must be a permutation of 1.." + std::to_string(n));
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i] < 1 || q[i] + 1 > n || (i > 0 && q[i] <= q[i - 1]))
      throw InputError("omega: Q must be strictly increasing within [1, " +
                       std::to_string(n == 0 ? 0 : n - 1) + "]");
  }
  if (!inverse_descent_set(tau).is_subset_of(q))
    throw InputError("omega: inverse descent set of " + format_word(tau) + " is not contained in Q");
  if (q.empty()) return tau;

  // Round r shuffles block r = (q_r+1 .. q_{r+1}) into the word built so far.
  Word current = increasing_run(1, static_cast<std::int64_t>(q[0]));
  for (std::size_t r = 0; r < q.size(); ++r) {
    const auto lo = static_cast<std::int64_t>(q[r]);
    const auto hi = static_cast<std::int64_t>(r + 1 < q.size() ? q[r + 1] : n);
    const Word restricted = subword(tau, [hi](Letter x) { return x <= hi; });
    const Partition lambda(right_counts(restricted, lo, hi), lo);
    current = phi_inverse(current, increasing_run(lo + 1, hi), lambda);
  }
  return current;
}

}  // namespace majidx
