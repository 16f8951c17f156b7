// Exact integers, rationals and dense polynomials over them.
//
// Everything here is a value type: polynomials are never mutated after
// construction, and every operation returns a fresh value.

#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace taylorcert {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Builds num/den in lowest terms with a positive denominator.
Rational make_rational(const BigInt& num, const BigInt& den);

std::string to_string(const BigInt& z);
/// "a" for integers, "a/b" otherwise.
std::string to_string(const Rational& q);

BigInt parse_bigint(const std::string& text);
Rational parse_rational(const std::string& text);

BigInt factorial(unsigned long n);

/// Floor square root of z >= 0 by integer Newton iteration.
BigInt isqrt(const BigInt& z);

/// True iff z >= 0 and isqrt(z)^2 == z.
bool is_perfect_square(const BigInt& z);

/// Dense univariate polynomial, lowest power first. The coefficient vector is
/// trimmed so the last entry is nonzero; the zero polynomial is empty and has
/// no degree.
template <typename Coeff>
class DensePoly {
 public:
  DensePoly() = default;
  explicit DensePoly(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  DensePoly(std::initializer_list<Coeff> coeffs)
      : DensePoly(std::vector<Coeff>(coeffs)) {}

  static DensePoly monomial(const Coeff& c, std::size_t k) {
    std::vector<Coeff> v(k + 1, Coeff(0));
    v[k] = c;
    return DensePoly(std::move(v));
  }

  const std::vector<Coeff>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  std::optional<std::size_t> degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
  }
  Coeff coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Coeff(0);
  }
  const Coeff& leading() const {
    if (coeffs_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
    return coeffs_.back();
  }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  DensePoly derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Coeff> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return DensePoly(std::move(d));
  }

  friend DensePoly operator+(const DensePoly& a, const DensePoly& b) {
    std::vector<Coeff> r(std::max(a.coeffs_.size(), b.coeffs_.size()), Coeff(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) r[i] += b.coeffs_[i];
    return DensePoly(std::move(r));
  }
  friend DensePoly operator-(const DensePoly& a, const DensePoly& b) {
    std::vector<Coeff> r(std::max(a.coeffs_.size(), b.coeffs_.size()), Coeff(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) r[i] -= b.coeffs_[i];
    return DensePoly(std::move(r));
  }
  friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> r(a.coeffs_.size() + b.coeffs_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return DensePoly(std::move(r));
  }
  friend DensePoly operator*(const Coeff& c, const DensePoly& a) {
    std::vector<Coeff> r(a.coeffs_);
    for (auto& x : r) x *= c;
    return DensePoly(std::move(r));
  }
  friend bool operator==(const DensePoly&, const DensePoly&) = default;

 private:
  std::vector<Coeff> coeffs_;
};

using RatPoly = DensePoly<Rational>;
using IntPoly = DensePoly<BigInt>;

RatPoly to_rational(const IntPoly& f);

/// Quotient and remainder over the rationals. Throws on a zero divisor.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& f, const RatPoly& g);

/// f / g when g is monic and divides f exactly; nullopt otherwise.
std::optional<IntPoly> divide_exact(const IntPoly& f, const IntPoly& g);

/// Exact Horner evaluation.
Rational eval_exact(const RatPoly& f, const Rational& a);
Rational eval_exact(const IntPoly& f, const Rational& a);
BigInt eval_exact(const IntPoly& f, const BigInt& a);

/// Human-readable form, highest power first: "x^3 + 6*x^2 + 12*x + 24".
std::string to_string(const IntPoly& f);
std::string to_string(const RatPoly& f);

/// Integer coefficient family (c_0, ..., c_n) of sum c_i x^i / i!, with c_n = 1.
class TaylorSpec {
 public:
  /// Throws std::invalid_argument unless there are at least two entries and
  /// the last is 1.
  static TaylorSpec from_coeffs(std::vector<BigInt> coeffs);
  /// x^n/n! + 2 * sum_{i<n} x^i/i!, the sum of the degree n and n-1 truncations.
  static TaylorSpec exp_sum(unsigned n);
  /// The truncated exponential sum_{i<=n} x^i/i!.
  static TaylorSpec truncated_exp(unsigned n);

  unsigned degree() const { return static_cast<unsigned>(coeffs_.size() - 1); }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  friend bool operator==(const TaylorSpec&, const TaylorSpec&) = default;

 private:
  explicit TaylorSpec(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {}
  std::vector<BigInt> coeffs_;
};

RatPoly make_taylor_poly(const TaylorSpec& spec);

struct ScaledPoly {
  IntPoly poly;  // monic
  BigInt scale;  // n!
};

/// n! * f as a monic integer polynomial. Throws std::invalid_argument when
/// the leading coefficient is not 1/n! or a coefficient fails to clear.
ScaledPoly to_monic_integer(const RatPoly& f);

/// n! * sum c_i x^i / i! computed directly from the coefficients.
IntPoly scaled_taylor_poly(const TaylorSpec& spec);

}  // namespace taylorcert
