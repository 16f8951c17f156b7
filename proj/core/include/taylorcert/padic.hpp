// p-adic valuations, base-p digit sums, factorial valuations and the
// Legendre symbol.

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include "taylorcert/exact.hpp"

namespace taylorcert {

/// An integer valuation or +infinity (only for the input 0).
class Valuation {
 public:
  static Valuation infinity() { return Valuation(); }
  explicit Valuation(long v) : value_(v) {}

  bool is_infinite() const { return !value_.has_value(); }
  /// Throws std::domain_error for infinity.
  long value() const;

  friend bool operator==(const Valuation&, const Valuation&) = default;
  friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
    if (a.is_infinite() || b.is_infinite()) {
      return static_cast<int>(a.is_infinite()) <=> static_cast<int>(b.is_infinite());
    }
    return *a.value_ <=> *b.value_;
  }

  std::string str() const;

 private:
  Valuation() = default;
  std::optional<long> value_;
};

/// v_p of an integer or rational. Throws std::invalid_argument unless p is prime.
Valuation v_p(const BigInt& m, std::uint64_t p);
Valuation v_p(const Rational& m, std::uint64_t p);

/// Sum of the base-p digits of n.
std::uint64_t digit_sum(std::uint64_t n, std::uint64_t p);

/// v_p(n!) = (n - s_p(n)) / (p - 1).
std::uint64_t legendre_factorial(std::uint64_t n, std::uint64_t p);

/// Euler's criterion a^((p-1)/2) mod p mapped to {-1, 0, 1}. Rejects p = 2
/// and composite p.
int legendre_symbol(const BigInt& a, std::uint64_t p);

}  // namespace taylorcert
