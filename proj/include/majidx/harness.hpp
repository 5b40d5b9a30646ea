#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "majidx/serialize.hpp"

namespace majidx {

enum class OutputFormat { text, json };

struct RunConfig {
  int n_max = 7;
  std::uint64_t seed = 1913;
  std::int64_t sample_count = 1000;
  OutputFormat output = OutputFormat::text;
  int parallelism = 1;
};

/// Largest n_max the sweeps accept; larger requests are clamped with a warning.
inline constexpr int kMaxSweepN = 9;

struct Failure {
  std::string check;
  std::string inputs;
  std::string expected;
  std::string actual;
  friend bool operator==(const Failure&, const Failure&) = default;
};

struct VerificationReport {
  std::string suite;
  std::map<std::string, std::uint64_t> parameters;
  std::uint64_t cases_checked = 0;
  /// First counterexamples in canonical case order; at most kMaxStoredFailures.
  std::vector<Failure> failures;
  std::uint64_t failures_total = 0;
  std::int64_t elapsed_us = 0;
  std::vector<std::string> warnings;

  bool passed() const noexcept { return failures_total == 0; }
};

inline constexpr std::size_t kMaxStoredFailures = 100;

enum class Suite { mis, theorem11, garsia_gessel, macmahon, insertion, lemma41, idc };

std::optional<Suite> suite_from_name(std::string_view name);
std::string_view suite_name(Suite s);
const std::vector<Suite>& all_suites();

VerificationReport verify(Suite s, const RunConfig& cfg);

/// algorithm_lg = mis_oracle, A-B shape, closed forms, counter pairs.
VerificationReport verify_mis(const RunConfig& cfg);
/// Shuffle generating function of (theta, pi) and the bijection phi.
VerificationReport verify_theorem11(const RunConfig& cfg);
/// k-fold shuffle generating function, k <= 4.
VerificationReport verify_garsia_gessel(const RunConfig& cfg);
/// maj and inv over multiset permutations; flattening of block shuffles.
VerificationReport verify_macmahon(const RunConfig& cfg);
/// inv_to_maj / maj_to_inv over S_n for several insertion orders.
VerificationReport verify_insertion_bijection(const RunConfig& cfg);
/// Prefix-set property of MIS under a preceding insertion.
VerificationReport verify_lemma41(const RunConfig& cfg);
/// Inverse descent classes and the bijection omega.
VerificationReport verify_idc(const RunConfig& cfg);

json to_json(const VerificationReport& r);
VerificationReport report_from_json(const json& j);
std::string format_report_text(const VerificationReport& r);

}  // namespace majidx
