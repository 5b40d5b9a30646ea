#include "majidx/qpoly.hpp"

#include <numeric>

#include "majidx/error.hpp"

namespace majidx {

QPolynomial::QPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPolynomial QPolynomial::constant(std::int64_t c) { return QPolynomial({BigInt(c)}); }

QPolynomial QPolynomial::monomial(std::size_t d) {
  std::vector<BigInt> c(d + 1, BigInt(0));
  c[d] = 1;
  return QPolynomial(std::move(c));
}

void QPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt QPolynomial::at_one() const {
  BigInt sum = 0;
  for (const BigInt& c : coeffs_) sum += c;
  return sum;
}

QPolynomial QPolynomial::shift(std::size_t c) const {
  if (is_zero()) return *this;
  std::vector<BigInt> out(c, BigInt(0));
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return QPolynomial(std::move(out));
}

QPolynomial operator+(const QPolynomial& p, const QPolynomial& r) {
  std::vector<BigInt> out(std::max(p.coeffs_.size(), r.coeffs_.size()), BigInt(0));
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) out[i] += p.coeffs_[i];
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) out[i] += r.coeffs_[i];
  return QPolynomial(std::move(out));
}

QPolynomial operator*(const QPolynomial& p, const QPolynomial& r) {
  if (p.is_zero() || r.is_zero()) return QPolynomial();
  std::vector<BigInt> out(p.coeffs_.size() + r.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
    if (p.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < r.coeffs_.size(); ++j) out[i + j] += p.coeffs_[i] * r.coeffs_[j];
  }
  return QPolynomial(std::move(out));
}

QPolynomial QPolynomial::divide_exact(const QPolynomial& divisor) const {
  if (divisor.is_zero()) throw InvariantViolation("polynomial division by zero");
  if (is_zero()) return QPolynomial();
  if (degree() < divisor.degree())
    throw InvariantViolation("inexact polynomial division: " + to_string() + " / " + divisor.to_string());
  std::vector<BigInt> rem = coeffs_;
  const std::size_t dq = coeffs_.size() - divisor.coeffs_.size();
  std::vector<BigInt> quot(dq + 1, BigInt(0));
  const BigInt& lead = divisor.coeffs_.back();
  for (std::size_t s = dq + 1; s-- > 0;) {
    const BigInt& top = rem[s + divisor.coeffs_.size() - 1];
    if (top % lead != 0)
      throw InvariantViolation("inexact polynomial division: " + to_string() + " / " + divisor.to_string());
    const BigInt f = top / lead;
    quot[s] = f;
    if (f != 0)
      for (std::size_t j = 0; j < divisor.coeffs_.size(); ++j) rem[s + j] -= f * divisor.coeffs_[j];
  }
  for (const BigInt& c : rem)
    if (c != 0)
      throw InvariantViolation("inexact polynomial division: " + to_string() + " / " + divisor.to_string());
  return QPolynomial(std::move(quot));
}

std::string QPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t d = 0; d < coeffs_.size(); ++d) {
    BigInt c = coeffs_[d];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (s.empty())
      s += negative ? "-" : "";
    else
      s += negative ? " - " : " + ";
    const bool unit = c == 1;
    if (d == 0 || !unit) s += c.str();
    if (d >= 1) s += "q";
    if (d >= 2) s += "^" + std::to_string(d);
  }
  return s;
}

// ---------------------------------------------------------------------------

QPolynomial q_integer(std::size_t i) {
  return QPolynomial(std::vector<BigInt>(i, BigInt(1)));
}

QPolynomial q_factorial(std::size_t n) {
  QPolynomial out = QPolynomial::constant(1);
  for (std::size_t i = 2; i <= n; ++i) out = out * q_integer(i);
  return out;
}

QPolynomial q_binomial(std::size_t n, std::size_t k) {
  if (k > n) throw InputError("q_binomial: need 0 <= k <= n");
  // row[j] = [m choose j]; [m, j] = [m-1, j-1] + q^j [m-1, j]
  std::vector<QPolynomial> row(k + 1);
  row[0] = QPolynomial::constant(1);
  for (std::size_t m = 1; m <= n; ++m) {
    for (std::size_t j = std::min(m, k); j >= 1; --j) row[j] = row[j - 1] + row[j].shift(j);
  }
  return row[k];
}

QPolynomial q_binomial_by_division(std::size_t n, std::size_t k) {
  if (k > n) throw InputError("q_binomial: need 0 <= k <= n");
  return q_factorial(n).divide_exact(q_factorial(k) * q_factorial(n - k));
}

namespace {

void require_composition(std::size_t n, std::span<const std::size_t> parts) {
  const std::size_t total = std::accumulate(parts.begin(), parts.end(), std::size_t{0});
  if (total != n)
    throw InputError("q_multinomial: parts sum to " + std::to_string(total) + ", expected " +
                     std::to_string(n));
}

}  // namespace

QPolynomial q_multinomial(std::size_t n, std::span<const std::size_t> parts) {
  require_composition(n, parts);
  QPolynomial out = QPolynomial::constant(1);
  std::size_t running = 0;
  for (std::size_t a : parts) {
    running += a;
    out = out * q_binomial(running, a);
  }
  return out;
}

QPolynomial q_multinomial_by_division(std::size_t n, std::span<const std::size_t> parts) {
  require_composition(n, parts);
  QPolynomial denom = QPolynomial::constant(1);
  for (std::size_t a : parts) denom = denom * q_factorial(a);
  return q_factorial(n).divide_exact(denom);
}

QPolynomial partition_gf(std::size_t b, std::size_t a) {
  // Walk every weakly increasing sequence 0 <= p1 <= ... <= pa <= b.
  std::vector<std::uint64_t> counts(a * b + 1, 0);
  std::vector<std::size_t> parts(a, 0);
  std::size_t weight = 0;
  while (true) {
    ++counts[weight];
    std::size_t i = a;
    while (i > 0 && parts[i - 1] == b) --i;
    if (i == 0) break;
    const std::size_t v = parts[i - 1] + 1;
    for (std::size_t j = i - 1; j < a; ++j) {
      weight = weight - parts[j] + v;
      parts[j] = v;
    }
  }
  return from_exponent_counts(counts);
}

QPolynomial from_exponent_counts(std::span<const std::uint64_t> counts) {
  std::vector<BigInt> c;
  c.reserve(counts.size());
  for (std::uint64_t x : counts) c.emplace_back(x);
  return QPolynomial(std::move(c));
}

}  // namespace majidx
