#include "majidx/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <numeric>
#include <random>
#include <thread>

#include "majidx/bijections.hpp"
#include "majidx/error.hpp"
#include "majidx/mis.hpp"
#include "majidx/qpoly.hpp"

namespace majidx {

namespace {

// ---------------------------------------------------------------------------
// Case runner

struct CaseLog {
  std::uint64_t cases = 0;
  std::uint64_t failures_total = 0;
  std::vector<Failure> failures;

  void fail(std::string check, std::string inputs, std::string expected, std::string actual) {
    ++failures_total;
    if (failures.size() < kMaxStoredFailures)
      failures.push_back(Failure{std::move(check), std::move(inputs), std::move(expected), std::move(actual)});
  }

  void absorb(CaseLog&& other) {
    cases += other.cases;
    failures_total += other.failures_total;
    for (Failure& f : other.failures) {
      if (failures.size() >= kMaxStoredFailures) break;
      failures.push_back(std::move(f));
    }
  }
};

struct Task {
  std::function<std::string()> describe;
  std::function<void(CaseLog&)> run;
};

// Runs the tasks on `workers` threads. Each task writes to its own log and
// the logs are merged in task order, so the result does not depend on the
// worker count.
CaseLog run_tasks(const std::vector<Task>& tasks, int workers) {
  std::vector<CaseLog> logs(tasks.size());
  auto body = [&](std::size_t i) {
    try {
      tasks[i].run(logs[i]);
    } catch (const std::exception& e) {
      logs[i].fail("completes without error", tasks[i].describe(), "no exception", e.what());
    }
  };
  if (workers <= 1 || tasks.size() < 2) {
    for (std::size_t i = 0; i < tasks.size(); ++i) body(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    const auto count = static_cast<std::size_t>(workers);
    for (std::size_t w = 0; w < std::min(count, tasks.size()); ++w)
      pool.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) body(i);
      });
  }
  CaseLog merged;
  for (CaseLog& l : logs) merged.absorb(std::move(l));
  return merged;
}

struct Prepared {
  RunConfig cfg;
  std::vector<std::string> warnings;
};

Prepared prepare(const RunConfig& cfg) {
  if (cfg.n_max < 1) throw InputError("n_max must be at least 1");
  if (cfg.sample_count < 0) throw InputError("sample count must be nonnegative");
  if (cfg.parallelism < 1) throw InputError("parallelism must be at least 1");
  Prepared p{cfg, {}};
  if (cfg.n_max > kMaxSweepN) {
    p.cfg.n_max = kMaxSweepN;
    p.warnings.push_back("n_max " + std::to_string(cfg.n_max) + " clamped to " +
                         std::to_string(kMaxSweepN) + ": sweep sizes grow factorially");
  }
  return p;
}

VerificationReport finish(Suite suite, const Prepared& p, CaseLog log,
                          std::chrono::steady_clock::time_point start) {
  VerificationReport r;
  r.suite = std::string(suite_name(suite));
  r.parameters = {{"n_max", static_cast<std::uint64_t>(p.cfg.n_max)},
                  {"seed", p.cfg.seed},
                  {"samples", static_cast<std::uint64_t>(p.cfg.sample_count)},
                  {"parallelism", static_cast<std::uint64_t>(p.cfg.parallelism)}};
  r.cases_checked = log.cases;
  r.failures = std::move(log.failures);
  r.failures_total = log.failures_total;
  r.warnings = p.warnings;
  r.elapsed_us = std::chrono::duration_cast<std::chrono::microseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  return r;
}

// ---------------------------------------------------------------------------
// Enumeration helpers

std::vector<Word> all_permutations(std::size_t n) {
  std::vector<Letter> w(n);
  std::iota(w.begin(), w.end(), Letter{1});
  std::vector<Word> out;
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::vector<std::vector<std::size_t>> compositions(std::size_t n, std::size_t max_parts) {
  std::vector<std::vector<std::size_t>> out;
  if (n == 0) return out;
  for (std::uint64_t cuts = 0; cuts < (std::uint64_t{1} << (n - 1)); ++cuts) {
    std::vector<std::size_t> parts;
    std::size_t run = 1;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (cuts >> i & 1) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    if (parts.size() <= max_parts) out.push_back(std::move(parts));
  }
  return out;
}

std::vector<std::vector<std::size_t>> subsets_up_to(std::size_t n_minus_1, std::size_t max_size) {
  std::vector<std::vector<std::size_t>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n_minus_1); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n_minus_1; ++i)
      if (mask >> i & 1) s.push_back(i + 1);
    if (s.size() <= max_size) out.push_back(std::move(s));
  }
  return out;
}

Word slice(const Word& w, std::size_t from, std::size_t to) {
  return Word(std::vector<Letter>(w.letters().begin() + static_cast<std::ptrdiff_t>(from),
                                  w.letters().begin() + static_cast<std::ptrdiff_t>(to)));
}

// All shuffles of blocks[0], ..., blocks[k-1], built by repeatedly shuffling
// the next block into every word obtained so far.
std::vector<Word> iterated_shuffles(const std::vector<Word>& blocks) {
  std::vector<Word> current{blocks.empty() ? Word() : blocks[0]};
  for (std::size_t i = 1; i < blocks.size(); ++i) {
    std::vector<Word> next;
    for (const Word& theta : current) {
      ShuffleStream stream(theta, blocks[i]);
      Word w;
      while (stream.next(w)) next.push_back(w);
    }
    current = std::move(next);
  }
  return current;
}

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::mt19937_64 case_rng(std::uint64_t seed, std::uint64_t salt, std::uint64_t index) {
  return std::mt19937_64(mix64(seed ^ mix64(salt * 0x100000001b3ULL + index)));
}

Word random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<Letter> w(n);
  std::iota(w.begin(), w.end(), Letter{1});
  std::shuffle(w.begin(), w.end(), rng);
  return Word(std::move(w));
}

std::string fmt(std::span<const std::int64_t> s) { return "(" + format_letters(s) + ")"; }
std::string fmt(const Word& w) { return format_word(w); }
std::string fmt(const MISequence& s) { return fmt(s.entries()); }
std::string fmt(const CounterPair& c) { return "(" + std::to_string(c.a) + "," + std::to_string(c.b) + ")"; }
std::string fmt(const Partition& p) { return "{" + format_letters(p.parts()) + "}"; }

std::string fmt_sizes(std::span<const std::size_t> s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + ")";
}

using BinomialTable = std::vector<std::vector<QPolynomial>>;

BinomialTable binomial_table(std::size_t n_max) {
  BinomialTable t(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n)
    for (std::size_t k = 0; k <= n; ++k) t[n].push_back(q_binomial(n, k));
  return t;
}

using MultinomialCache = std::map<std::vector<std::size_t>, QPolynomial>;

MultinomialCache multinomial_cache(std::size_t n_max) {
  MultinomialCache c;
  for (std::size_t n = 1; n <= n_max; ++n)
    for (auto& comp : compositions(n, n)) c.emplace(comp, q_multinomial(n, comp));
  return c;
}

void expect_poly(CaseLog& log, const char* check, const std::function<std::string()>& inputs,
                 const QPolynomial& expected, const QPolynomial& actual) {
  if (!(expected == actual)) log.fail(check, inputs(), expected.to_string(), actual.to_string());
}

void expect_mis(CaseLog& log, const char* check, const std::string& inputs,
                std::vector<std::int64_t> expected, const MISequence& actual) {
  if (!(MISequence(expected) == actual)) log.fail(check, inputs, fmt(expected), fmt(actual));
}

// ---------------------------------------------------------------------------
// mis

void check_mis_case(const Word& w, CaseLog& log) {
  const std::size_t n = w.size();
  const Word sigma = slice(w, 0, n - 1);
  const Letter r = w.letters()[n - 1];
  const auto inputs = [&] { return "sigma=" + fmt(sigma) + " r=" + std::to_string(r); };
  ++log.cases;

  const MISequence oracle = mis_oracle(sigma, r);
  if (!is_ab_permutation(oracle.entries()))
    log.fail("mis_oracle is an A-B permutation", inputs(), "A-B permutation of 0.." + std::to_string(n - 1),
             fmt(oracle));
  if (sigma.empty()) {
    if (!(oracle == MISequence({0}))) log.fail("empty word", inputs(), "(0)", fmt(oracle));
    return;
  }

  const MISequence lg = algorithm_lg(sigma, r);
  if (!(lg == oracle)) log.fail("algorithm_lg = mis_oracle", inputs(), fmt(oracle), fmt(lg));

  const auto s = sigma.letters();
  const LgRun run = algorithm_lg_traced(sigma, r);
  if (!(run.sequence == lg)) log.fail("traced run = plain run", inputs(), fmt(lg), fmt(run.sequence));
  const CounterPair initial = s.back() < r ? l_pair(sigma, n - 1) : g_pair(sigma, n - 1);
  if (!(run.initial == initial)) log.fail("initial counters", inputs(), fmt(initial), fmt(run.initial));
  for (const LgStep& step : run.steps) {
    if (step.iteration < 2) continue;
    const std::size_t k = step.iteration - 1;
    const bool lesser = s[k - 1] < r;
    const bool lesser_part = step.part == LgPart::a || step.part == LgPart::c;
    const CounterPair expected = lesser ? l_pair(sigma, k) : g_pair(sigma, k);
    if (lesser != lesser_part || !(step.after == expected))
      log.fail("counters after iteration " + std::to_string(step.iteration), inputs(), fmt(expected),
               fmt(step.after));
  }

  for (std::size_t k = 1; k < n; ++k) {
    const CounterPair l = l_pair(sigma, k), g = g_pair(sigma, k);
    if (l.a != g.a + 1 || l.b != g.b + 1)
      log.fail("L(sigma,k) = G(sigma,k) + (1,1)", inputs() + " k=" + std::to_string(k), fmt(g), fmt(l));
  }

  if (r == static_cast<Letter>(n)) {
    const MISequence l = algorithm_l(sigma);
    if (!(l == oracle)) log.fail("algorithm_l = mis_oracle", inputs(), fmt(oracle), fmt(l));
    for (std::size_t k = 1; k <= n; ++k) {
      const std::int64_t c = mi_closed_form_max(sigma, k);
      if (c != oracle.at(k))
        log.fail("closed form (*)", inputs() + " k=" + std::to_string(k), std::to_string(oracle.at(k)),
                 std::to_string(c));
    }
    // Same relative order with r below everything: entries shift by -1.
    std::vector<Letter> lifted(s.begin(), s.end());
    for (Letter& x : lifted) ++x;
    const MISequence low = mis_oracle(Word(lifted), 1);
    for (std::size_t k = 1; k < n; ++k)
      if (oracle.at(k) != low.at(k) + 1)
        log.fail("mi(max) = mi(min) + 1", inputs() + " k=" + std::to_string(k),
                 std::to_string(low.at(k) + 1), std::to_string(oracle.at(k)));
  }
  if (r == 1) {
    const MISequence g = algorithm_g(sigma);
    if (!(g == oracle)) log.fail("algorithm_g = mis_oracle", inputs(), fmt(oracle), fmt(g));
    for (std::size_t k = 1; k <= n; ++k) {
      const std::int64_t c = mi_closed_form_min(sigma, k);
      if (c != oracle.at(k))
        log.fail("closed form (**)", inputs() + " k=" + std::to_string(k), std::to_string(oracle.at(k)),
                 std::to_string(c));
    }
  }
}

void golden_mis(CaseLog& log) {
  ++log.cases;
  const Word sigma{4, 2, 6, 3, 5, 1};
  expect_mis(log, "MIS(426351, 7)", "sigma=426351 r=7", {4, 3, 5, 2, 6, 1, 0}, mis_oracle(sigma, 7));
  expect_mis(log, "algorithm_lg(426351, 7)", "sigma=426351 r=7", {4, 3, 5, 2, 6, 1, 0}, algorithm_lg(sigma, 7));
  const std::int64_t table[] = {13, 12, 14, 11, 15, 10, 9};
  for (std::size_t k = 1; k <= 7; ++k) {
    const std::int64_t m = maj(insert_at(sigma, k, 7));
    if (m != table[k - 1])
      log.fail("maj of 426351 with 7 at k", "k=" + std::to_string(k), std::to_string(table[k - 1]),
               std::to_string(m));
  }
}

// ---------------------------------------------------------------------------
// theorem11

void check_shuffle_pair(const Word& theta, const Word& pi, const BinomialTable& binom, CaseLog& log) {
  ++log.cases;
  const std::size_t a = pi.size(), b = theta.size(), n = a + b;
  const auto inputs = [&] { return "theta=" + fmt(theta) + " pi=" + fmt(pi); };

  ShuffleStream stream(theta, pi);
  std::vector<std::uint64_t> hist;
  std::vector<Partition> images;
  Word sigma;
  while (stream.next(sigma)) {
    const auto case_inputs = [&] { return inputs() + " sigma=" + fmt(sigma); };
    const std::int64_t m = maj(sigma);
    const auto e = static_cast<std::size_t>(m);
    if (e >= hist.size()) hist.resize(e + 1, 0);
    ++hist[e];

    const PhiResult res = phi(theta, pi, sigma);
    const std::int64_t lhs = m - maj(theta) - maj(pi);
    if (lhs != res.partition.weight())
      log.fail("maj(sigma) = maj(theta) + maj(pi) + |phi(sigma)|", case_inputs(), std::to_string(lhs),
               std::to_string(res.partition.weight()));

    // Trace shape and the nested residual sets T_1 <= ... <= T_a <= [0, b].
    Word before = theta;
    std::vector<std::int64_t> outer;
    for (std::int64_t x = 0; x <= static_cast<std::int64_t>(b); ++x) outer.push_back(x);
    std::size_t prev_k = b + 1;
    for (const TraceStep& step : res.trace.steps) {
      if (step.k > prev_k)
        log.fail("insertions move left", case_inputs() + " i=" + std::to_string(step.i),
                 "k <= " + std::to_string(prev_k), std::to_string(step.k));
      const MISequence seq = major_increments(before, pi.letters()[step.i - 1]);
      if (seq.at(step.k) != step.m)
        log.fail("m_i = MIS(sigma_{i+1}, pi(i))(k_i)", case_inputs() + " i=" + std::to_string(step.i),
                 std::to_string(seq.at(step.k)), std::to_string(step.m));
      const std::int64_t shift = d_k(pi, step.i);
      std::vector<std::int64_t> t_set;
      for (std::size_t k = 1; k <= step.k; ++k) t_set.push_back(seq.at(k) - shift);
      std::sort(t_set.begin(), t_set.end());
      if (!std::includes(outer.begin(), outer.end(), t_set.begin(), t_set.end()))
        log.fail("T_i nested in T_{i+1}", case_inputs() + " i=" + std::to_string(step.i), fmt(outer),
                 fmt(t_set));
      outer = std::move(t_set);
      prev_k = step.k;
      before = step.sigma;
    }

    const PhiResult back = phi_inverse_traced(theta, pi, res.partition);
    const Word rebuilt = back.trace.steps.empty() ? theta : back.trace.steps.back().sigma;
    if (!(rebuilt == sigma)) log.fail("phi_inverse(phi(sigma)) = sigma", case_inputs(), fmt(sigma), fmt(rebuilt));
    if (!(back.trace == res.trace))
      log.fail("insertion trace = deletion trace", case_inputs(), to_json(res.trace).dump(),
               to_json(back.trace).dump());
    images.push_back(res.partition);
  }

  const QPolynomial expected =
      binom[n][a].shift(static_cast<std::size_t>(maj(theta) + maj(pi)));
  expect_poly(log, "shuffle gf = q^(maj theta + maj pi) [n choose a]", inputs, expected,
              from_exponent_counts(hist));

  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());
  const BigInt size = binom[n][a].at_one();
  if (BigInt(images.size()) != size)
    log.fail("phi is onto P(b,a)", inputs(), size.str() + " distinct partitions", std::to_string(images.size()));
}

void golden_theorem11(const BinomialTable& binom, CaseLog& log) {
  const Word theta{5, 2, 7, 4}, pi{6, 3, 1};
  check_shuffle_pair(theta, pi, binom, log);
  const PhiResult res = phi(theta, pi, Word{5, 2, 7, 6, 3, 4, 1});
  if (!(res.partition == Partition({0, 3, 4}, 4)))
    log.fail("phi(5276341)", "theta=5274 pi=631", "{0 3 4}", fmt(res.partition));
  std::vector<std::int64_t> km;
  for (const TraceStep& s : res.trace.steps) {
    km.push_back(static_cast<std::int64_t>(s.k));
    km.push_back(s.m);
  }
  const std::vector<std::int64_t> expected{5, 4, 4, 1, 4, 5};
  if (km != expected) log.fail("phi trace (k_i, m_i)", "theta=5274 pi=631 sigma=5276341", fmt(expected), fmt(km));
}

// ---------------------------------------------------------------------------
// garsia-gessel / macmahon

void check_block_shuffles(const Word& w, const std::vector<std::size_t>& sizes, const MultinomialCache& mult,
                          CaseLog& log) {
  ++log.cases;
  std::vector<Word> blocks;
  std::size_t at = 0;
  std::int64_t maj_sum = 0;
  for (std::size_t s : sizes) {
    blocks.push_back(slice(w, at, at + s));
    maj_sum += maj(blocks.back());
    at += s;
  }
  const std::vector<Word> all = iterated_shuffles(blocks);
  const QPolynomial expected = mult.at(sizes).shift(static_cast<std::size_t>(maj_sum));
  expect_poly(
      log, "k-fold shuffle gf = q-multinomial * q^(sum maj)",
      [&] {
        std::string s = "blocks=";
        for (std::size_t i = 0; i < blocks.size(); ++i) s += (i ? "|" : "") + fmt(blocks[i]);
        return s;
      },
      expected, gf_maj(all));
}

void check_multiset(const std::vector<std::size_t>& comp, const MultinomialCache& mult, CaseLog& log) {
  const std::size_t n = std::accumulate(comp.begin(), comp.end(), std::size_t{0});
  const auto inputs = [&] { return "composition=" + fmt_sizes(comp); };

  std::vector<Letter> letters;
  for (std::size_t i = 0; i < comp.size(); ++i) letters.insert(letters.end(), comp[i], static_cast<Letter>(i + 1));
  std::vector<MultisetWord> words;
  do {
    words.emplace_back(letters);
  } while (std::next_permutation(letters.begin(), letters.end()));
  log.cases += words.size();

  const QPolynomial expected = mult.at(comp);
  expect_poly(log, "gf_maj over P(T) = q-multinomial", inputs, expected, gf_maj(words));
  expect_poly(log, "gf_inv over P(T) = q-multinomial", inputs, expected, gf_inv(words));
  if (std::all_of(comp.begin(), comp.end(), [](std::size_t x) { return x == 1; })) {
    const QPolynomial fact = q_factorial(n);
    expect_poly(log, "gf_maj over S_n = [n]_q!", inputs, fact, gf_maj(words));
    expect_poly(log, "gf_inv over S_n = [n]_q!", inputs, fact, gf_inv(words));
  }

  // Shuffles of the increasing blocks flatten onto P(T), keeping maj and inv.
  std::vector<Word> blocks;
  Letter next = 1;
  for (std::size_t s : comp) {
    std::vector<Letter> run(s);
    std::iota(run.begin(), run.end(), next);
    next += static_cast<Letter>(s);
    blocks.emplace_back(std::move(run));
  }
  std::vector<MultisetWord> flattened;
  for (const Word& sigma : iterated_shuffles(blocks)) {
    MultisetWord f = flatten_to_multiset(sigma, comp);
    if (maj(f) != maj(sigma) || inv(f) != inv(sigma))
      log.fail("flattening keeps maj and inv", inputs() + " sigma=" + fmt(sigma),
               std::to_string(maj(sigma)) + "," + std::to_string(inv(sigma)),
               std::to_string(maj(f)) + "," + std::to_string(inv(f)));
    flattened.push_back(std::move(f));
  }
  std::sort(flattened.begin(), flattened.end());
  if (flattened != words)
    log.fail("flattening is a bijection onto P(T)", inputs(), std::to_string(words.size()) + " words",
             std::to_string(flattened.size()) + " words, not matching");
}

// ---------------------------------------------------------------------------
// insertion

void check_insertion_order(const Word& order, const std::vector<Word>& perms, CaseLog& log) {
  std::vector<Word> images;
  images.reserve(perms.size());
  for (const Word& sigma : perms) {
    ++log.cases;
    const Word tau = inv_to_maj(sigma, order);
    if (maj(tau) != inv(sigma))
      log.fail("maj(inv_to_maj(sigma)) = inv(sigma)", "order=" + fmt(order) + " sigma=" + fmt(sigma),
               std::to_string(inv(sigma)), std::to_string(maj(tau)));
    const Word back = maj_to_inv(tau, order);
    if (!(back == sigma))
      log.fail("maj_to_inv(inv_to_maj(sigma)) = sigma", "order=" + fmt(order) + " sigma=" + fmt(sigma),
               fmt(sigma), fmt(back));
    images.push_back(tau);
  }
  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());
  if (images.size() != perms.size())
    log.fail("inv_to_maj is injective on S_n", "order=" + fmt(order), std::to_string(perms.size()),
             std::to_string(images.size()));
}

void golden_insertion(CaseLog& log) {
  const Word sigma{6, 2, 5, 7, 4, 3, 1};
  const Word orders[] = {Word::identity(7), Word{4, 2, 7, 3, 6, 1, 5}};
  const Word images[] = {Word{5, 4, 7, 2, 6, 3, 1}, Word{6, 4, 5, 3, 7, 2, 1}};
  for (int i = 0; i < 2; ++i) {
    ++log.cases;
    const Word tau = inv_to_maj(sigma, orders[i]);
    if (!(tau == images[i])) log.fail("inv_to_maj(6257431)", "order=" + fmt(orders[i]), fmt(images[i]), fmt(tau));
    const Word back = maj_to_inv(images[i], orders[i]);
    if (!(back == sigma)) log.fail("maj_to_inv", "order=" + fmt(orders[i]), fmt(sigma), fmt(back));
  }
}

// ---------------------------------------------------------------------------
// lemma41

void check_lemma(const Word& tau, Letter p, Letter q, CaseLog& log) {
  const MISequence small = mis_oracle(tau, p);
  const std::int64_t bump = q > p ? 1 : 0;
  for (std::size_t j = 1; j <= tau.size() + 1; ++j) {
    ++log.cases;
    const MISequence big = mis_oracle(insert_at(tau, j, p), q);
    std::vector<std::int64_t> lhs(big.entries().begin(), big.entries().begin() + static_cast<std::ptrdiff_t>(j));
    std::vector<std::int64_t> rhs(small.entries().begin(), small.entries().begin() + static_cast<std::ptrdiff_t>(j));
    for (auto& x : rhs) x += bump;
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    if (lhs != rhs)
      log.fail("prefix sets of MIS shift by chi(q>p)",
               "tau=" + fmt(tau) + " p=" + std::to_string(p) + " q=" + std::to_string(q) + " j=" + std::to_string(j),
               fmt(rhs), fmt(lhs));
  }
}

void golden_lemma(CaseLog& log) {
  const Word tau{4, 3, 6, 1, 5, 2};
  ++log.cases;
  expect_mis(log, "MIS(436152, 8)", "tau=436152", {4, 3, 5, 2, 6, 1, 0}, mis_oracle(tau, 8));
  expect_mis(log, "MIS(4361852, 7)", "tau=436152", {5, 4, 6, 3, 2, 7, 1, 0}, mis_oracle(insert_at(tau, 5, 8), 7));
  expect_mis(log, "MIS(436152, 7)", "tau=436152", {4, 3, 5, 2, 6, 1, 0}, mis_oracle(tau, 7));
  expect_mis(log, "MIS(4361752, 8)", "tau=436152", {5, 4, 6, 3, 7, 2, 1, 0}, mis_oracle(insert_at(tau, 5, 7), 8));
  check_lemma(tau, 8, 7, log);
  check_lemma(tau, 7, 8, log);
}

// ---------------------------------------------------------------------------
// idc

void check_idc(std::size_t n, const std::vector<std::size_t>& q, const MultinomialCache& mult, CaseLog& log) {
  const auto inputs = [&] { return "n=" + std::to_string(n) + " Q=" + fmt_sizes(q); };
  std::vector<std::size_t> sizes;
  std::size_t prev = 0;
  for (std::size_t x : q) {
    sizes.push_back(x - prev);
    prev = x;
  }
  sizes.push_back(n - prev);

  std::vector<Word> members, exact;
  for (const Word& w : all_permutations(n)) {
    const DescentSet d = inverse_descent_set(w);
    if (d.is_subset_of(q)) members.push_back(w);
    if (d.indices == q) exact.push_back(w);
  }
  log.cases += members.size();

  const QPolynomial expected = mult.at(sizes);
  expect_poly(log, "gf_maj over Des(sigma^-1) in Q", inputs, expected, gf_maj(members));
  expect_poly(log, "gf_inv over Des(sigma^-1) in Q", inputs, expected, gf_inv(members));
  expect_poly(log, "gf_maj = gf_inv on the exact class S_Q", inputs, gf_inv(exact), gf_maj(exact));

  std::vector<Word> images;
  for (const Word& tau : members) {
    const Word w = omega(q, tau);
    if (maj(w) != inv(tau))
      log.fail("maj(omega(tau)) = inv(tau)", inputs() + " tau=" + fmt(tau), std::to_string(inv(tau)),
               std::to_string(maj(w)));
    const DescentSet before = inverse_descent_set(tau), after = inverse_descent_set(w);
    if (!(before == after))
      log.fail("omega preserves Des(sigma^-1)", inputs() + " tau=" + fmt(tau) + " omega=" + fmt(w),
               fmt_sizes(before.indices), fmt_sizes(after.indices));
    images.push_back(w);
  }
  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());
  if (images.size() != members.size())
    log.fail("omega is injective", inputs(), std::to_string(members.size()), std::to_string(images.size()));
}

void golden_idc(CaseLog& log) {
  ++log.cases;
  const Word tau{5, 1, 2, 6, 3, 7, 4};
  const Partition lambda = psi(4, 3, tau);
  if (!(lambda == Partition({1, 2, 4}, 4))) log.fail("psi(5126374)", "b=4 a=3", "{1 2 4}", fmt(lambda));
  const std::size_t q[] = {4};
  const Word w = omega(q, tau);
  if (!(w == Word{5, 1, 2, 3, 6, 7, 4})) log.fail("omega(5126374)", "Q={4}", "5 1 2 3 6 7 4", fmt(w));
  if (inv(tau) != 7 || maj(w) != 7)
    log.fail("inv(tau) = maj(omega(tau)) = 7", "tau=5126374", "7,7",
             std::to_string(inv(tau)) + "," + std::to_string(maj(w)));
}

}  // namespace

// ---------------------------------------------------------------------------

std::optional<Suite> suite_from_name(std::string_view name) {
  for (Suite s : all_suites())
    if (suite_name(s) == name) return s;
  return std::nullopt;
}

std::string_view suite_name(Suite s) {
  switch (s) {
    case Suite::mis: return "mis";
    case Suite::theorem11: return "theorem11";
    case Suite::garsia_gessel: return "garsia-gessel";
    case Suite::macmahon: return "macmahon";
    case Suite::insertion: return "insertion";
    case Suite::lemma41: return "lemma41";
    case Suite::idc: return "idc";
  }
  return "unknown";
}

const std::vector<Suite>& all_suites() {
  static const std::vector<Suite> suites{Suite::mis,      Suite::theorem11, Suite::garsia_gessel, Suite::macmahon,
                                         Suite::insertion, Suite::lemma41,  Suite::idc};
  return suites;
}

VerificationReport verify(Suite s, const RunConfig& cfg) {
  switch (s) {
    case Suite::mis: return verify_mis(cfg);
    case Suite::theorem11: return verify_theorem11(cfg);
    case Suite::garsia_gessel: return verify_garsia_gessel(cfg);
    case Suite::macmahon: return verify_macmahon(cfg);
    case Suite::insertion: return verify_insertion_bijection(cfg);
    case Suite::lemma41: return verify_lemma41(cfg);
    case Suite::idc: return verify_idc(cfg);
  }
  throw InputError("unknown suite");
}

VerificationReport verify_mis(const RunConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  const Prepared p = prepare(cfg);
  std::vector<Task> tasks;
  for (std::size_t n = 1; n <= static_cast<std::size_t>(p.cfg.n_max); ++n)
    for (Word& w : all_permutations(n))
      tasks.push_back({[w] { return "sigma+r=" + fmt(w); }, [w](CaseLog& log) { check_mis_case(w, log); }});
  if (p.cfg.n_max >= 7) tasks.push_back({[] { return std::string("golden MIS(426351, 7)"); }, golden_mis});
  return finish(Suite::mis, p, run_tasks(tasks, p.cfg.parallelism), start);
}

VerificationReport verify_theorem11(const RunConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  const Prepared p = prepare(cfg);
  const auto n_max = static_cast<std::size_t>(p.cfg.n_max);
  const auto binom = std::make_shared<const BinomialTable>(binomial_table(n_max));

  // (theta, pi) ordered pairs correspond to (w = theta.pi, split point b).
  std::vector<Task> tasks;
  for (std::size_t n = 1; n <= std::min<std::size_t>(n_max, 7); ++n)
    for (Word& w : all_permutations(n))
      tasks.push_back({[w] { return "theta.pi=" + fmt(w); },
                       [w, binom](CaseLog& log) {
                         for (std::size_t b = 0; b <= w.size(); ++b)
                           check_shuffle_pair(slice(w, 0, b), slice(w, b, w.size()), *binom, log);
                       }});
  for (std::size_t n = 8; n <= n_max; ++n)
    for (std::int64_t i = 0; i < p.cfg.sample_count; ++i)
      tasks.push_back({[n, i] { return "sample n=" + std::to_string(n) + " #" + std::to_string(i); },
                       [n, i, binom, seed = p.cfg.seed](CaseLog& log) {
                         auto rng = case_rng(seed, 11 * 100 + n, static_cast<std::uint64_t>(i));
                         const Word w = random_permutation(n, rng);
                         const std::size_t b = std::uniform_int_distribution<std::size_t>(0, n)(rng);
                         check_shuffle_pair(slice(w, 0, b), slice(w, b, n), *binom, log);
                       }});
  if (n_max >= 7)
    tasks.push_back({[] { return std::string("golden phi(5276341)"); },
                     [binom](CaseLog& log) { golden_theorem11(*binom, log); }});
  return finish(Suite::theorem11, p, run_tasks(tasks, p.cfg.parallelism), start);
}

VerificationReport verify_garsia_gessel(const RunConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  const Prepared p = prepare(cfg);
  const auto n_max = static_cast<std::size_t>(p.cfg.n_max);
  const auto mult = std::make_shared<const MultinomialCache>(multinomial_cache(n_max));
  constexpr std::size_t kMaxBlocks = 4;

  std::vector<Task> tasks;
  for (std::size_t n = 1; n <= std::min<std::size_t>(n_max, 6); ++n) {
    const auto comps = compositions(n, kMaxBlocks);
    for (Word& w : all_permutations(n))
      tasks.push_back({[w] { return "w=" + fmt(w); },
                       [w, comps, mult](CaseLog& log) {
                         for (const auto& c : comps) check_block_shuffles(w, c, *mult, log);
                       }});
  }
  for (std::size_t n = 7; n <= n_max; ++n) {
    const auto comps = compositions(n, kMaxBlocks);
    for (std::int64_t i = 0; i < p.cfg.sample_count; ++i)
      tasks.push_back({[n, i] { return "sample n=" + std::to_string(n) + " #" + std::to_string(i); },
                       [n, i, comps, mult, seed = p.cfg.seed](CaseLog& log) {
                         auto rng = case_rng(seed, 3 * 100 + n, static_cast<std::uint64_t>(i));
                         const Word w = random_permutation(n, rng);
                         const auto& c = comps[std::uniform_int_distribution<std::size_t>(0, comps.size() - 1)(rng)];
                         check_block_shuffles(w, c, *mult, log);
                       }});
  }
  return finish(Suite::garsia_gessel, p, run_tasks(tasks, p.cfg.parallelism), start);
}

VerificationReport verify_macmahon(const RunConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  const Prepared p = prepare(cfg);
  const auto n_max = static_cast<std::size_t>(p.cfg.n_max);
  const auto mult = std::make_shared<const MultinomialCache>(multinomial_cache(n_max));
  std::vector<Task> tasks;
  for (std::size_t n = 1; n <= n_max; ++n)
    for (auto& comp : compositions(n, n))
      tasks.push_back({[comp] { return "composition=" + fmt_sizes(comp); },
                       [comp, mult](CaseLog& log) { check_multiset(comp, *mult, log); }});
  return finish(Suite::macmahon, p, run_tasks(tasks, p.cfg.parallelism), start);
}

VerificationReport verify_insertion_bijection(const RunConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  const Prepared p = prepare(cfg);
  std::vector<Task> tasks;
  for (std::size_t n = 1; n <= std::min<std::size_t>(static_cast<std::size_t>(p.cfg.n_max), 6); ++n) {
    auto perms = std::make_shared<const std::vector<Word>>(all_permutations(n));
    std::vector<Word> orders;
    if (static_cast<std::uint64_t>(p.cfg.sample_count) + 1 >= perms->size()) {
      orders = *perms;
    } else {
      orders.push_back(Word::identity(n));
      auto rng = case_rng(p.cfg.seed, 5 * 100 + n, 0);
      for (std::int64_t i = 0; i < p.cfg.sample_count; ++i) orders.push_back(random_permutation(n, rng));
    }
    for (Word& order : orders)
      tasks.push_back({[order] { return "order=" + fmt(order); },
                       [order, perms](CaseLog& log) { check_insertion_order(order, *perms, log); }});
  }
  if (p.cfg.n_max >= 7) tasks.push_back({[] { return std::string("golden inv_to_maj(6257431)"); }, golden_insertion});
  return finish(Suite::insertion, p, run_tasks(tasks, p.cfg.parallelism), start);
}

VerificationReport verify_lemma41(const RunConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  const Prepared p = prepare(cfg);
  std::vector<Task> tasks;
  // Relative orders of (tau, p, q): permutations of [m+2] read as tau.p.q.
  const std::size_t exhaustive = std::min<std::size_t>(6, static_cast<std::size_t>(p.cfg.n_max) - 1);
  for (std::size_t m = 0; m <= exhaustive; ++m)
    for (Word& w : all_permutations(m + 2))
      tasks.push_back({[w] { return "tau.p.q=" + fmt(w); },
                       [w, m](CaseLog& log) {
                         check_lemma(slice(w, 0, m), w.letters()[m], w.letters()[m + 1], log);
                       }});
  for (std::int64_t i = 0; i < p.cfg.sample_count; ++i)
    tasks.push_back({[i] { return "random #" + std::to_string(i); },
                     [i, seed = p.cfg.seed](CaseLog& log) {
                       auto rng = case_rng(seed, 41, static_cast<std::uint64_t>(i));
                       const std::size_t m = std::uniform_int_distribution<std::size_t>(7, 12)(rng);
                       std::vector<Letter> pool(3 * (m + 2));
                       std::iota(pool.begin(), pool.end(), Letter{1});
                       std::shuffle(pool.begin(), pool.end(), rng);
                       pool.resize(m + 2);
                       const Word tau(std::vector<Letter>(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(m)));
                       check_lemma(tau, pool[m], pool[m + 1], log);
                     }});
  if (p.cfg.n_max >= 7) tasks.push_back({[] { return std::string("golden MIS(436152, 7|8)"); }, golden_lemma});
  return finish(Suite::lemma41, p, run_tasks(tasks, p.cfg.parallelism), start);
}

VerificationReport verify_idc(const RunConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  const Prepared p = prepare(cfg);
  const auto n_max = static_cast<std::size_t>(p.cfg.n_max);
  const auto mult = std::make_shared<const MultinomialCache>(multinomial_cache(n_max));
  std::vector<Task> tasks;
  for (std::size_t n = 1; n <= n_max; ++n)
    for (auto& q : subsets_up_to(n - 1, 3))
      tasks.push_back({[n, q] { return "n=" + std::to_string(n) + " Q=" + fmt_sizes(q); },
                       [n, q, mult](CaseLog& log) { check_idc(n, q, *mult, log); }});
  if (n_max >= 7) tasks.push_back({[] { return std::string("golden omega(5126374)"); }, golden_idc});
  return finish(Suite::idc, p, run_tasks(tasks, p.cfg.parallelism), start);
}

// ---------------------------------------------------------------------------

json to_json(const VerificationReport& r) {
  json failures = json::array();
  for (const Failure& f : r.failures)
    failures.push_back({{"check", f.check}, {"inputs", f.inputs}, {"expected", f.expected}, {"actual", f.actual}});
  return {{"suite", r.suite},
          {"parameters", r.parameters},
          {"cases_checked", r.cases_checked},
          {"failures", failures},
          {"failures_total", r.failures_total},
          {"elapsed_us", r.elapsed_us},
          {"warnings", r.warnings},
          {"verdict", r.passed() ? "pass" : "fail"}};
}

VerificationReport report_from_json(const json& j) {
  try {
    VerificationReport r;
    r.suite = j.at("suite").get<std::string>();
    r.parameters = j.at("parameters").get<std::map<std::string, std::uint64_t>>();
    r.cases_checked = j.at("cases_checked").get<std::uint64_t>();
    for (const json& f : j.at("failures"))
      r.failures.push_back(Failure{f.at("check").get<std::string>(), f.at("inputs").get<std::string>(),
                                   f.at("expected").get<std::string>(), f.at("actual").get<std::string>()});
    r.failures_total = j.at("failures_total").get<std::uint64_t>();
    r.elapsed_us = j.at("elapsed_us").get<std::int64_t>();
    r.warnings = j.at("warnings").get<std::vector<std::string>>();
    const std::string verdict = j.at("verdict").get<std::string>();
    if (verdict != (r.passed() ? "pass" : "fail")) throw InputError("report verdict disagrees with failures");
    return r;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed report JSON: ") + e.what());
  }
}

std::string format_report_text(const VerificationReport& r) {
  std::string s = "suite: " + r.suite + "\nparameters:";
  for (const auto& [k, v] : r.parameters) s += " " + k + "=" + std::to_string(v);
  s += "\ncases checked: " + std::to_string(r.cases_checked);
  s += "\nfailures: " + std::to_string(r.failures_total) + "\n";
  for (const Failure& f : r.failures)
    s += "  [" + f.check + "] " + f.inputs + ": expected " + f.expected + ", got " + f.actual + "\n";
  if (r.failures.size() < r.failures_total)
    s += "  ... " + std::to_string(r.failures_total - r.failures.size()) + " more\n";
  for (const std::string& w : r.warnings) s += "warning: " + w + "\n";
  char elapsed[32];
  std::snprintf(elapsed, sizeof elapsed, "%.3f", static_cast<double>(r.elapsed_us) / 1e6);
  s += "elapsed: " + std::string(elapsed) + " s\n";
  s += std::string("verdict: ") + (r.passed() ? "PASS" : "FAIL") + "\n";
  return s;
}

}  // namespace majidx
