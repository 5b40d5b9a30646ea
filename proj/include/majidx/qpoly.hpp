#pragma once

#include <cstddef>
#include <cstdint>
#include <ranges>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "majidx/words.hpp"

namespace majidx {

using BigInt = boost::multiprecision::cpp_int;

/// Polynomial in q with arbitrary-precision integer coefficients. Index d of
/// `coefficients()` is the coefficient of q^d; trailing zeros are trimmed, so
/// the zero polynomial has no coefficients.
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<BigInt> coeffs);
  static QPolynomial constant(std::int64_t c);
  /// q^d
  static QPolynomial monomial(std::size_t d);

  std::span<const BigInt> coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  std::int64_t degree() const noexcept { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
  BigInt coefficient(std::size_t d) const { return d < coeffs_.size() ? coeffs_[d] : BigInt(0); }
  BigInt at_one() const;

  QPolynomial shift(std::size_t c) const;
  /// Exact quotient; throws InvariantViolation when `divisor` does not divide.
  QPolynomial divide_exact(const QPolynomial& divisor) const;

  friend QPolynomial operator+(const QPolynomial& p, const QPolynomial& r);
  friend QPolynomial operator*(const QPolynomial& p, const QPolynomial& r);
  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

  /// "1 + 2q + 2q^2 + q^3"; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

inline QPolynomial add(const QPolynomial& p, const QPolynomial& r) { return p + r; }
inline QPolynomial mul(const QPolynomial& p, const QPolynomial& r) { return p * r; }
inline QPolynomial shift(const QPolynomial& p, std::size_t c) { return p.shift(c); }

/// [i]_q = 1 + q + ... + q^(i-1)
QPolynomial q_integer(std::size_t i);
/// [n]_q! = [1]_q [2]_q ... [n]_q
QPolynomial q_factorial(std::size_t n);
/// Gaussian binomial by the Pascal recurrence.
QPolynomial q_binomial(std::size_t n, std::size_t k);
/// Gaussian binomial as [n]_q! / ([k]_q! [n-k]_q!).
QPolynomial q_binomial_by_division(std::size_t n, std::size_t k);
/// q-multinomial as the telescoping product of q-binomials.
QPolynomial q_multinomial(std::size_t n, std::span<const std::size_t> parts);
/// q-multinomial as [n]_q! / prod [a_i]_q!.
QPolynomial q_multinomial_by_division(std::size_t n, std::span<const std::size_t> parts);
/// Sum of q^|lambda| over P(b, a), by enumerating the partitions.
QPolynomial partition_gf(std::size_t b, std::size_t a);

/// Builds a polynomial from a histogram of exponents.
QPolynomial from_exponent_counts(std::span<const std::uint64_t> counts);

namespace detail {
template <class R, class Stat>
QPolynomial gf_by(R&& words, Stat stat) {
  std::vector<std::uint64_t> counts;
  for (const auto& w : words) {
    const auto e = static_cast<std::size_t>(stat(w));
    if (e >= counts.size()) counts.resize(e + 1, 0);
    ++counts[e];
  }
  return from_exponent_counts(counts);
}
}  // namespace detail

/// Sum of q^maj(w) over a range of words.
template <std::ranges::input_range R>
QPolynomial gf_maj(R&& words) {
  return detail::gf_by(std::forward<R>(words), [](const auto& w) { return maj(w); });
}

/// Sum of q^inv(w) over a range of words.
template <std::ranges::input_range R>
QPolynomial gf_inv(R&& words) {
  return detail::gf_by(std::forward<R>(words), [](const auto& w) { return inv(w); });
}

}  // namespace majidx
