// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "majidx/bijections.hpp"
#include "majidx/harness.hpp"
#include "majidx/mis.hpp"
#include "majidx/qpoly.hpp"
#include "majidx/words.hpp"

using namespace majidx;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

int jobs() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

RunConfig config(int n, std::int64_t samples = 1000) {
  RunConfig c;
  c.n_max = n;
  c.sample_count = samples;
  c.parallelism = jobs();
  return c;
}

std::vector<std::int64_t> prefix(const MISequence& m, std::size_t k) {
  return {m.entries().begin(), m.entries().begin() + static_cast<std::ptrdiff_t>(k)};
}

Outcome from_report(const VerificationReport& r, double limit_s) {
  Outcome o;
  const double secs = static_cast<double>(r.elapsed_us) / 1e6;
  o.pass = r.passed() && (limit_s <= 0 || secs <= limit_s);
  char buf[160];
  std::snprintf(buf, sizeof buf, "%llu cases, %llu failures, %.2f s", static_cast<unsigned long long>(r.cases_checked),
                static_cast<unsigned long long>(r.failures_total), secs);
  o.detail = buf;
  if (limit_s > 0 && secs > limit_s) o.detail += " (over time limit)";
  if (!r.failures.empty()) {
    const Failure& f = r.failures.front();
    o.detail += "; first: " + f.check + " [" + f.inputs + "] expected " + f.expected + " got " + f.actual;
  }
  return o;
}

Outcome examples() {
  std::vector<std::string> bad;
  const auto expect = [&](bool ok, const char* what) {
    if (!ok) bad.emplace_back(what);
  };

  const Word s{4, 2, 6, 3, 5, 1};
  expect(major_increments(s, 7) == MISequence({4, 3, 5, 2, 6, 1, 0}), "MIS(426351,7)");
  const std::int64_t table[] = {13, 12, 14, 11, 15, 10, 9};
  for (std::size_t k = 1; k <= 7; ++k) expect(maj(insert_at(s, k, 7)) == table[k - 1], "maj table for 426351");

  const Word sigma{6, 2, 5, 7, 4, 3, 1};
  const Word t1 = inv_to_maj(sigma, Word::identity(7));
  const Word t2 = inv_to_maj(sigma, Word{4, 2, 7, 3, 6, 1, 5});
  expect(t1 == Word{5, 4, 7, 2, 6, 3, 1} && maj(t1) == 15, "inv_to_maj increasing order");
  expect(t2 == Word{6, 4, 5, 3, 7, 2, 1} && maj(t2) == 15, "inv_to_maj second order");

  const Segmentation sa = segment(Word{1, 7, 6, 2, 8, 3, 4}, 5);
  expect(sa.size() == 5 && sa[1] == Segment{SegmentKind::greater, 2, 3}, "segments of 1762834 about 5");
  expect(algorithm_lg(Word{4, 3, 6, 1, 8, 5, 2}, 7) == MISequence({5, 4, 6, 3, 2, 7, 1, 0}), "MIS(4361852,7)");
  expect(algorithm_lg(Word{5, 2, 7, 4, 1}, 3) == MISequence({3, 4, 2, 1, 5, 0}), "MIS(52741,3)");

  const Word theta{5, 2, 7, 4}, pi{6, 3, 1}, shuffled{5, 2, 7, 6, 3, 4, 1};
  const PhiResult r = phi(theta, pi, shuffled);
  expect(r.partition == Partition({0, 3, 4}, 4), "phi(5276341)");
  const std::vector<std::pair<std::size_t, std::int64_t>> km{{5, 4}, {4, 1}, {4, 5}};
  bool km_ok = r.trace.steps.size() == 3;
  for (std::size_t i = 0; km_ok && i < 3; ++i)
    km_ok = r.trace.steps[i].k == km[i].first && r.trace.steps[i].m == km[i].second;
  expect(km_ok, "phi trace (k_i, m_i)");

  const Word tau{4, 3, 6, 1, 5, 2};
  expect(mis_oracle(tau, 8) == MISequence({4, 3, 5, 2, 6, 1, 0}), "MIS(436152,8)");
  expect(mis_oracle(insert_at(tau, 5, 7), 8) == MISequence({5, 4, 6, 3, 7, 2, 1, 0}), "MIS(4361752,8)");

  expect(major_increments(Word{6, 1, 5, 2}, 7) == MISequence({3, 2, 4, 1, 0}), "MIS(6152,7)");
  expect(prefix(major_increments(Word{6, 1, 5, 7, 2}, 3), 4) == std::vector<std::int64_t>{2, 3, 1, 4},
         "4-prefix of MIS(61572,3)");
  const auto p3 = prefix(major_increments(Word{6, 1, 3, 5, 7, 2}, 4), 3);
  if (p3 != std::vector<std::int64_t>{3, 4, 2})
    bad.push_back("3-prefix of MIS(613572,4) is (" + std::to_string(p3[0]) + "," + std::to_string(p3[1]) + "," +
                  std::to_string(p3[2]) + "), stated (3,4,2)");

  const PhiResult back = phi_inverse_traced(theta, pi, Partition({0, 3, 4}, 4));
  expect(back.trace == r.trace, "phi_inverse steps");
  expect(back.trace.steps.size() == 3 && back.trace.steps[0].sigma == Word{5, 2, 7, 4, 1} &&
             back.trace.steps[1].sigma == Word{5, 2, 7, 3, 4, 1} && back.trace.steps[2].sigma == shuffled,
         "phi_inverse intermediate words");
  expect(major_increments(Word{5, 2, 7, 3, 4, 1}, 6) == MISequence({4, 3, 2, 5, 6, 1, 0}), "MIS(527341,6)");

  const Word idc{5, 1, 2, 6, 3, 7, 4};
  expect(psi(4, 3, idc) == Partition({1, 2, 4}, 4), "psi(5126374)");
  const std::size_t q[] = {4};
  expect(omega(q, idc) == Word{5, 1, 2, 3, 6, 7, 4}, "omega(5126374)");

  Outcome o;
  o.pass = bad.empty();
  o.detail = bad.empty() ? "all worked examples reproduced" : "mismatch:";
  for (const auto& b : bad) o.detail += " " + b + ";";
  return o;
}

Outcome qpoly_identities() {
  std::size_t checked = 0;
  std::string bad;
  for (std::size_t b = 0; b <= 10; ++b)
    for (std::size_t a = 0; a <= 10; ++a, ++checked)
      if (!(partition_gf(b, a) == q_binomial(a + b, a))) bad += " partition_gf(" + std::to_string(b) + "," + std::to_string(a) + ")";
  BigInt fact = 1;
  for (std::size_t n = 0; n <= 20; ++n) {
    if (n > 0) fact *= n;
    ++checked;
    if (q_factorial(n).at_one() != fact) bad += " [" + std::to_string(n) + "]_q!(1)";
    BigInt c = 1;
    for (std::size_t k = 0; k <= n; ++k, ++checked) {
      const QPolynomial p = q_binomial(n, k);
      if (!(p == q_binomial_by_division(n, k))) bad += " pascal(" + std::to_string(n) + "," + std::to_string(k) + ")";
      if (p.at_one() != c) bad += " binom(" + std::to_string(n) + "," + std::to_string(k) + ")(1)";
      c = c * (n - k) / (k + 1);
    }
  }
  Outcome o;
  o.pass = bad.empty();
  o.detail = std::to_string(checked) + " identities" + (bad.empty() ? "" : ", failing:" + bad);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"worked examples reproduced exactly", examples},
      {"algorithm_lg = mis_oracle and A-B shape, len(sigma) <= 7, <= 10 s",
       [] { return from_report(verify_mis(config(8)), 10); }},
      {"shuffle gf and phi bijection, n <= 7, <= 60 s", [] { return from_report(verify_theorem11(config(7)), 60); }},
      {"k-fold shuffle gf, n <= 6, k <= 4", [] { return from_report(verify_garsia_gessel(config(6)), 0); }},
      {"maj and inv over multiset permutations, n <= 8, <= 30 s",
       [] { return from_report(verify_macmahon(config(8)), 30); }},
      {"MIS prefix sets, exhaustive to length 6 plus 1000 random to length 12",
       [] { return from_report(verify_lemma41(config(7, 1000)), 0); }},
      {"inverse descent classes and omega, n <= 7, |Q| <= 3, <= 60 s",
       [] { return from_report(verify_idc(config(7)), 60); }},
      {"q-polynomial identities", qpoly_identities},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("criterion %zu: %s - %s (%s)\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first, o.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
