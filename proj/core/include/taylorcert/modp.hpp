// Polynomials over the prime field F_p, complete factorization, and the
// degree-pattern evidence built on it.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "taylorcert/exact.hpp"

namespace taylorcert {

/// Dense polynomial over F_p, lowest power first, entries in [0, p).
class ModPoly {
 public:
  ModPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs);
  /// The zero polynomial over F_p.
  explicit ModPoly(std::uint64_t p) : p_(p) {}

  std::uint64_t modulus() const { return p_; }
  const std::vector<std::uint64_t>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  std::optional<std::size_t> degree() const {
    if (c_.empty()) return std::nullopt;
    return c_.size() - 1;
  }
  std::uint64_t leading() const { return c_.empty() ? 0 : c_.back(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

  ModPoly monic() const;
  ModPoly derivative() const;
  std::uint64_t eval(std::uint64_t a) const;

  friend ModPoly operator+(const ModPoly& a, const ModPoly& b);
  friend ModPoly operator-(const ModPoly& a, const ModPoly& b);
  friend ModPoly operator*(const ModPoly& a, const ModPoly& b);
  friend bool operator==(const ModPoly&, const ModPoly&) = default;

  /// "x^2 + 9*x + 4"
  std::string str() const;

 private:
  std::uint64_t p_;
  std::vector<std::uint64_t> c_;
};

/// Quotient and remainder; throws on a zero divisor.
std::pair<ModPoly, ModPoly> divmod(const ModPoly& f, const ModPoly& g);
ModPoly operator%(const ModPoly& f, const ModPoly& g);
ModPoly operator/(const ModPoly& f, const ModPoly& g);

/// Monic gcd (zero only when both inputs are zero).
ModPoly gcd(const ModPoly& a, const ModPoly& b);

/// base^e mod m, with e given as a big integer.
ModPoly powmod(const ModPoly& base, const BigInt& e, const ModPoly& m);

/// Coefficientwise reduction; the degree drops when p divides the leading term.
ModPoly reduce_mod(const IntPoly& f, std::uint64_t p);

struct ModFactor {
  ModPoly poly;  // monic, irreducible
  unsigned multiplicity;
};

struct FactorizationModP {
  std::uint64_t p;
  std::uint64_t unit;
  /// Sorted by degree, then by coefficients from the leading term down.
  std::vector<ModFactor> factors;
};

/// Squarefree decomposition, distinct-degree and then equal-degree splitting.
/// The equal-degree splitter draws from an RNG seeded by a hash of (f, p), so
/// the result is reproducible. Throws std::invalid_argument on zero input.
FactorizationModP factor_modp(const ModPoly& f);

/// unit * prod factor^multiplicity.
ModPoly expand(const FactorizationModP& fac);

/// Rabin's test: x^(p^d) = x mod f and gcd(x^(p^(d/l)) - x, f) = 1 for each
/// prime l | d. Independent of factor_modp.
bool is_irreducible_modp(const ModPoly& f);

struct DegreePattern {
  std::vector<std::size_t> degrees;  // ascending, with multiplicity
  bool squarefree = false;
};

DegreePattern degree_multiset(const IntPoly& f, std::uint64_t p);

enum class OracleVerdict { irreducible, inconclusive };

struct OracleUse {
  std::uint64_t p;
  std::vector<std::size_t> degrees;
};

struct OracleSkip {
  std::uint64_t p;
  std::string reason;
};

struct OracleResult {
  OracleVerdict verdict = OracleVerdict::inconclusive;
  std::vector<OracleUse> used;
  std::vector<OracleSkip> skipped;
  std::string reason;
};

/// Intersects the achievable proper-factor degrees (subset sums of the
/// mod-p degree patterns) over the usable primes. An empty intersection
/// proves irreducibility over Q; this never claims reducibility.
OracleResult dedekind_irreducibility_oracle(const IntPoly& f, std::span<const std::uint64_t> primes);

/// The first `count` primes above `above` at which f stays squarefree of
/// full degree, searching primes below `limit`.
std::vector<std::uint64_t> usable_primes(const IntPoly& f, std::size_t count, std::uint64_t above = 1,
                                         std::uint64_t limit = 100'000);

/// Smallest prime q dividing every non-leading coefficient with q^2 not
/// dividing the constant term. Requires a monic input.
std::optional<BigInt> eisenstein_check(const IntPoly& f);

}  // namespace taylorcert
