#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "majidx/words.hpp"

namespace majidx {

/// An element of P(b, a): a parts, each in [0, b], kept weakly increasing.
/// Repeated parts are allowed.
class Partition {
 public:
  Partition() = default;
  /// Sorts `parts`; throws InputError if any part falls outside [0, bound].
  Partition(std::vector<std::int64_t> parts, std::int64_t bound);

  std::span<const std::int64_t> parts() const noexcept { return parts_; }
  std::size_t size() const noexcept { return parts_.size(); }
  std::int64_t bound() const noexcept { return bound_; }
  /// |lambda|, the sum of the parts.
  std::int64_t weight() const noexcept;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<std::int64_t> parts_;
  std::int64_t bound_ = 0;
};

/// One insertion of pi(i) into sigma_{i+1}, producing sigma_i.
struct TraceStep {
  std::size_t i;     // index into pi, 1-based
  std::size_t k;     // insertion position k_i
  std::int64_t m;    // maj(sigma_i) - maj(sigma_{i+1})
  std::int64_t t;    // m_i - d_i(pi)
  Word sigma;        // sigma_i
  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

/// Insertion history of pi into theta. `steps` runs i = a down to 1, i.e. in
/// the order the letters are inserted; sigma_{a+1} is theta itself.
struct InsertionTrace {
  Word theta;
  std::vector<TraceStep> steps;
  friend bool operator==(const InsertionTrace&, const InsertionTrace&) = default;
};

struct PhiResult {
  Partition partition;
  InsertionTrace trace;
};

/// Inserts order(1), order(2), ... so that the i-th insertion raises maj by
/// exactly targets(i). Requires 0 <= targets(i) <= i-1.
Word build_by_increments(std::span<const Letter> order, std::span<const std::int64_t> targets);

/// Sends inv to maj: build_by_increments(order, inversion_sequence(sigma)).
Word inv_to_maj(const Word& sigma, const Word& order);
/// Inverse of inv_to_maj for the same order.
Word maj_to_inv(const Word& tau, const Word& order);

/// Shuffle of (theta, pi) -> partition in P(|theta|, |pi|) with
/// maj(sigma) = maj(theta) + maj(pi) + |lambda|, plus the insertion trace.
PhiResult phi(const Word& theta, const Word& pi, const Word& sigma);

/// Inverse of phi.
Word phi_inverse(const Word& theta, const Word& pi, const Partition& lambda);
/// Inverse of phi, also returning the insertion trace it built.
PhiResult phi_inverse_traced(const Word& theta, const Word& pi, const Partition& lambda);

/// Shuffle tau of (1..b) and (b+1..b+a) -> partition of the right-counts
/// t_i = #{x <= b right of b+i}; |psi(tau)| = inv(tau).
Partition psi(std::int64_t b, std::int64_t a, const Word& tau);
Word psi_inverse(std::int64_t b, std::int64_t a, const Partition& lambda);

/// Bijection on {sigma in S_n : Des(sigma^-1) subset of Q} sending inv to
/// maj; Des(sigma^-1) is preserved when |Q| = 1. `q` must be strictly increasing in
/// [1, n-1]. Rounds run over q in ascending order.
Word omega(std::span<const std::size_t> q, const Word& tau);

}  // namespace majidx
