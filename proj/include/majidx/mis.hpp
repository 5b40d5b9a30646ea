#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "majidx/words.hpp"

namespace majidx {

/// Major increment sequence MIS(sigma, r): entry k (1-based) is the change in
/// maj when r is inserted at position k of sigma. Always a permutation of
/// {0, ..., len(sigma)} whose prefixes are integer intervals.
class MISequence {
 public:
  MISequence() = default;
  explicit MISequence(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {}

  std::size_t size() const noexcept { return entries_.size(); }
  /// 1-based entry.
  std::int64_t at(std::size_t k) const { return entries_.at(k - 1); }
  std::span<const std::int64_t> entries() const noexcept { return entries_; }

  /// 1-based position holding `value`, or 0 when absent.
  std::size_t position_of(std::int64_t value) const noexcept;

  friend bool operator==(const MISequence&, const MISequence&) = default;

 private:
  std::vector<std::int64_t> entries_;
};

/// Counter variables (A, B) of Algorithms L, G and L-G.
struct CounterPair {
  std::int64_t a = 0;
  std::int64_t b = 0;
  friend bool operator==(const CounterPair&, const CounterPair&) = default;
};

enum class SegmentKind { lesser, greater };

/// A maximal run of letters all below (lesser) or all above (greater) r.
struct Segment {
  SegmentKind kind;
  std::size_t first;  // 1-based, inclusive
  std::size_t last;   // 1-based, inclusive
  friend bool operator==(const Segment&, const Segment&) = default;
};

using Segmentation = std::vector<Segment>;

/// mi(sigma, k, r) = maj(sigma with r at k) - maj(sigma), by explicit insertion.
std::int64_t mi(const Word& sigma, std::size_t k, Letter r);

/// MIS by n explicit insertions; O(n^2). Accepts the empty word.
MISequence mis_oracle(const Word& sigma, Letter r);

/// Closed forms for r above (max) or below (min) every letter of sigma.
std::int64_t mi_closed_form_max(const Word& sigma, std::size_t k);
std::int64_t mi_closed_form_min(const Word& sigma, std::size_t k);

/// MIS(sigma, r) for r > max(sigma), built right to left in O(n).
MISequence algorithm_l(const Word& sigma);
/// MIS(sigma, r) for r < min(sigma), built right to left in O(n).
MISequence algorithm_g(const Word& sigma);

Segmentation segment(const Word& sigma, Letter r);

/// Which part of the L-G step rule produced an entry.
///   a: inside a lesser segment (Algorithm L rule)
///   b: inside a greater segment (Algorithm G rule)
///   c: lesser letter on the left, greater on the right; takes A
///   d: greater letter on the left, lesser on the right; takes B
enum class LgPart { a, b, c, d };

struct LgStep {
  std::size_t iteration;  // i: the 1-based MIS entry computed
  LgPart part;
  std::int64_t value;     // entry written at position i
  CounterPair after;      // (A, B) once the step finished
};

struct LgRun {
  MISequence sequence;
  CounterPair initial;
  std::vector<LgStep> steps;  // in execution order, i = n-1 down to 1
};

/// MIS(sigma, r) for any r not in sigma, in O(n). Requires len(sigma) >= 1.
MISequence algorithm_lg(const Word& sigma, Letter r);

/// Same as algorithm_lg, additionally logging the counter state per step.
LgRun algorithm_lg_traced(const Word& sigma, Letter r);

/// MIS that also accepts the empty word ((0) in that case); otherwise
/// algorithm_lg. This is what the bijections use.
MISequence major_increments(const Word& sigma, Letter r);

/// L(sigma, k) = (d_k + 1, d_k + k), for 1 <= k <= len(sigma).
CounterPair l_pair(const Word& sigma, std::size_t k);
/// G(sigma, k) = (d_k, d_k + k - 1), for 1 <= k <= len(sigma).
CounterPair g_pair(const Word& sigma, std::size_t k);

/// True iff s is a permutation of {0..len-1} with every prefix an interval.
bool is_ab_permutation(std::span<const std::int64_t> s) noexcept;

}  // namespace majidx
