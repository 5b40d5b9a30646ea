#include "majidx/mis.hpp"

#include <algorithm>

#include "majidx/error.hpp"

namespace majidx {

namespace {

void require_absent(const Word& sigma, Letter r, const char* op) {
  if (r <= 0) throw InputError(std::string(op) + ": letter must be positive");
  if (sigma.contains(r))
    throw InputError(std::string(op) + ": letter " + std::to_string(r) + " already in word");
}

void require_nonempty(const Word& sigma, const char* op) {
  if (sigma.empty()) throw InputError(std::string(op) + ": word must be nonempty");
}

void require_insert_position(const Word& sigma, std::size_t k, const char* op) {
  if (k < 1 || k > sigma.size() + 1)
    throw InputError(std::string(op) + ": k=" + std::to_string(k) + " outside [1, " +
                     std::to_string(sigma.size() + 1) + "]");
}

void require_letter_position(const Word& sigma, std::size_t k, const char* op) {
  if (k < 1 || k > sigma.size())
    throw InputError(std::string(op) + ": k=" + std::to_string(k) + " outside [1, " +
                     std::to_string(sigma.size()) + "]");
}

// Shared body of Algorithms L and G. They differ in the initial counters and
// in how the leftmost entry is taken; for i > 1 both append A at a descent
// and B at an ascent.
MISequence run_extreme(const Word& sigma, bool above) {
  const auto w = sigma.letters();
  const auto n = static_cast<std::int64_t>(w.size()) + 1;
  std::vector<std::int64_t> tau(w.size() + 1);
  std::int64_t a = above ? 1 : 0;
  std::int64_t b = above ? n - 1 : n - 2;
  tau[w.size()] = above ? 0 : n - 1;
  for (std::size_t i = w.size(); i >= 2; --i) {
    if (w[i - 2] > w[i - 1])
      tau[i - 1] = a++;
    else
      tau[i - 1] = b--;
  }
  tau[0] = above ? b : a;
  return MISequence(std::move(tau));
}

}  // namespace

std::size_t MISequence::position_of(std::int64_t value) const noexcept {
  auto it = std::find(entries_.begin(), entries_.end(), value);
  return it == entries_.end() ? 0 : static_cast<std::size_t>(it - entries_.begin()) + 1;
}

std::int64_t mi(const Word& sigma, std::size_t k, Letter r) {
  return maj(insert_at(sigma, k, r)) - maj(sigma);
}

MISequence mis_oracle(const Word& sigma, Letter r) {
  require_absent(sigma, r, "mis_oracle");
  const std::int64_t base = maj(sigma);
  std::vector<std::int64_t> out;
  out.reserve(sigma.size() + 1);
  for (std::size_t k = 1; k <= sigma.size() + 1; ++k) out.push_back(maj(insert_at(sigma, k, r)) - base);
  return MISequence(std::move(out));
}

std::int64_t mi_closed_form_max(const Word& sigma, std::size_t k) {
  require_insert_position(sigma, k, "mi_closed_form_max");
  const auto w = sigma.letters();
  if (k == w.size() + 1) return 0;
  const std::int64_t dk = d_k(w, k);
  if (k == 1 || w[k - 2] < w[k - 1]) return dk + static_cast<std::int64_t>(k);
  return dk + 1;
}

std::int64_t mi_closed_form_min(const Word& sigma, std::size_t k) {
  require_insert_position(sigma, k, "mi_closed_form_min");
  const auto w = sigma.letters();
  if (k == w.size() + 1) return static_cast<std::int64_t>(w.size());
  const std::int64_t dk = d_k(w, k);
  if (k > 1 && w[k - 2] < w[k - 1]) return dk + static_cast<std::int64_t>(k) - 1;
  return dk;
}

MISequence algorithm_l(const Word& sigma) {
  require_nonempty(sigma, "algorithm_l");
  return run_extreme(sigma, true);
}

MISequence algorithm_g(const Word& sigma) {
  require_nonempty(sigma, "algorithm_g");
  return run_extreme(sigma, false);
}

Segmentation segment(const Word& sigma, Letter r) {
  require_absent(sigma, r, "segment");
  Segmentation out;
  const auto w = sigma.letters();
  for (std::size_t i = 0; i < w.size(); ++i) {
    const SegmentKind kind = w[i] < r ? SegmentKind::lesser : SegmentKind::greater;
    if (!out.empty() && out.back().kind == kind)
      out.back().last = i + 1;
    else
      out.push_back(Segment{kind, i + 1, i + 1});
  }
  return out;
}

MISequence algorithm_lg(const Word& sigma, Letter r) {
  require_absent(sigma, r, "algorithm_lg");
  require_nonempty(sigma, "algorithm_lg");
  const auto w = sigma.letters();
  const auto n = static_cast<std::int64_t>(w.size()) + 1;
  std::vector<std::int64_t> tau(w.size() + 1);

  const bool last_lesser = w.back() < r;
  std::int64_t a = last_lesser ? 1 : 0;
  std::int64_t b = last_lesser ? n - 1 : n - 2;
  tau[w.size()] = last_lesser ? 0 : n - 1;

  for (std::size_t i = w.size(); i >= 2; --i) {
    const bool cur_lesser = w[i - 1] < r;
    const bool prev_lesser = w[i - 2] < r;
    bool take_a;
    if (cur_lesser == prev_lesser)
      take_a = w[i - 2] > w[i - 1];  // parts a, b
    else
      take_a = prev_lesser;          // part c takes A, part d takes B
    tau[i - 1] = take_a ? a++ : b--;
  }
  tau[0] = w[0] < r ? b : a;
  return MISequence(std::move(tau));
}

LgRun algorithm_lg_traced(const Word& sigma, Letter r) {
  require_absent(sigma, r, "algorithm_lg");
  require_nonempty(sigma, "algorithm_lg");
  const auto w = sigma.letters();
  const auto n = static_cast<std::int64_t>(w.size()) + 1;
  std::vector<std::int64_t> tau(w.size() + 1);
  LgRun run;

  const bool last_lesser = w.back() < r;
  CounterPair c{last_lesser ? 1 : 0, last_lesser ? n - 1 : n - 2};
  tau[w.size()] = last_lesser ? 0 : n - 1;
  run.initial = c;

  for (std::size_t i = w.size(); i >= 1; --i) {
    const bool cur_lesser = w[i - 1] < r;
    LgPart part;
    std::int64_t value;
    if (i == 1) {
      part = cur_lesser ? LgPart::a : LgPart::b;
      value = cur_lesser ? c.b : c.a;
    } else {
      const bool prev_lesser = w[i - 2] < r;
      if (cur_lesser == prev_lesser) {
        part = cur_lesser ? LgPart::a : LgPart::b;
        value = w[i - 2] > w[i - 1] ? c.a++ : c.b--;
      } else if (prev_lesser) {
        part = LgPart::c;
        value = c.a++;
      } else {
        part = LgPart::d;
        value = c.b--;
      }
    }
    tau[i - 1] = value;
    run.steps.push_back(LgStep{i, part, value, c});
  }
  run.sequence = MISequence(std::move(tau));
  return run;
}

MISequence major_increments(const Word& sigma, Letter r) {
  if (sigma.empty()) {
    require_absent(sigma, r, "major_increments");
    return MISequence({0});
  }
  return algorithm_lg(sigma, r);
}

CounterPair l_pair(const Word& sigma, std::size_t k) {
  require_letter_position(sigma, k, "l_pair");
  const std::int64_t dk = d_k(sigma, k);
  return {dk + 1, dk + static_cast<std::int64_t>(k)};
}

CounterPair g_pair(const Word& sigma, std::size_t k) {
  require_letter_position(sigma, k, "g_pair");
  const std::int64_t dk = d_k(sigma, k);
  return {dk, dk + static_cast<std::int64_t>(k) - 1};
}

bool is_ab_permutation(std::span<const std::int64_t> s) noexcept {
  const auto n = static_cast<std::int64_t>(s.size());
  std::vector<bool> seen(s.size(), false);
  std::int64_t lo = 0, hi = -1;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const std::int64_t x = s[i];
    if (x < 0 || x >= n || seen[static_cast<std::size_t>(x)]) return false;
    seen[static_cast<std::size_t>(x)] = true;
    if (i == 0) {
      lo = hi = x;
    } else if (x == lo - 1) {
      lo = x;
    } else if (x == hi + 1) {
      hi = x;
    } else {
      return false;
    }
  }
  return true;
}

}  // namespace majidx
