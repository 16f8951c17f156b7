// Irreducibility certificates for sum c_i x^i / i! with c_n = 1 and
// c_0 = +-2^k, including the exp_sum family x^n/n! + 2 sum_{i<n} x^i/i!.
//
// A certificate is a verdict plus an ordered evidence chain. Every step
// carries the data needed to re-check it (replay_certificate does exactly
// that), so a certificate can be trusted without trusting the code that
// produced it.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "taylorcert/exact.hpp"
#include "taylorcert/modp.hpp"
#include "taylorcert/newton_polygon.hpp"

namespace taylorcert {

/// Rule names cited by evidence steps.
namespace rule {
inline constexpr const char* kLinear = "degree-one";
inline constexpr const char* kNotPowerOfTwo = "schur-family-degree-not-power-of-two";
inline constexpr const char* kUnitConstant = "schur-family-unit-constant";
inline constexpr const char* kSchurStructure = "schur-family-linear-factors-plus-large-cofactor";
inline constexpr const char* kNewtonPolygon = "newton-polygon-root-valuations";
inline constexpr const char* kRationalRoot = "rational-root-divides-constant";
inline constexpr const char* kEisenstein = "eisenstein";
inline constexpr const char* kDedekind = "frobenius-degree-patterns";
inline constexpr const char* kTermPositivity = "all-taylor-terms-positive";
inline constexpr const char* kMinusTwoPositive = "exp-sum-at-minus-two-positive";
}  // namespace rule

/// A cited result whose hypotheses were checked on the subject.
struct TheoremStep {
  std::string rule;
  std::string detail;
};

struct SlopeStep {
  SlopeCertificate cert;
};

/// Rational-root search over +-2^t, 0 <= t <= t_bound, keeping only exponents
/// the 2-adic polygon admits.
struct RootSearchStep {
  unsigned t_bound = 0;
  std::vector<long> admissible_t;
  std::vector<BigInt> candidates;
  std::vector<BigInt> roots;  // with multiplicity, in deflation order
};

struct EisensteinStep {
  IntPoly poly;
  BigInt prime;
};

struct OracleStep {
  IntPoly poly;
  OracleResult result;
};

/// value = f(point) computed exactly, plus the sign conclusion.
struct PositivityStep {
  std::string rule;
  Rational point;
  Rational value;
};

using EvidenceStep = std::variant<TheoremStep, SlopeStep, RootSearchStep, EisensteinStep, OracleStep, PositivityStep>;

enum class Verdict { irreducible, reducible, refused };

enum class CofactorStatus { not_applicable, irreducible, unresolved, contradicts_structure };

struct IntFactor {
  IntPoly poly;
  unsigned multiplicity;
};

struct IrreducibilityCertificate {
  Verdict verdict = Verdict::refused;
  /// f = scaled / scale with scaled = n! f.
  IntPoly scaled;
  BigInt scale;
  /// Only for reducible verdicts: linear factors x -+ 2^t, then the cofactor
  /// (omitted when it is 1). Their product equals `scaled`.
  std::vector<IntFactor> factors;
  CofactorStatus cofactor = CofactorStatus::not_applicable;
  std::vector<EvidenceStep> evidence;
  std::string note;
};

std::string to_string(Verdict v);
std::string to_string(CofactorStatus s);

/// Certifies sum c_i x^i / i! with c_0 = sign * 2^k. Refuses (verdict refused)
/// when c_0 is not +-2^k.
IrreducibilityCertificate certify_schur(const TaylorSpec& spec, unsigned k, int sign);

/// Reads k and the sign off c_0 and calls certify_schur; refuses when c_0 is
/// not a signed power of two.
IrreducibilityCertificate certify_schur(const TaylorSpec& spec);

/// Irreducibility of the exp_sum polynomial of degree n.
IrreducibilityCertificate certify_exp_sum(unsigned n);

/// Re-checks every evidence step and the factor product against `spec`.
bool replay_certificate(const IrreducibilityCertificate& cert, const TaylorSpec& spec);

struct MinusTwoValue {
  Rational value;
  /// value - value(n - 2); only for n >= 4.
  std::optional<Rational> increment;
  /// increment == 2^(n-2) (n-1)(n-4) / n!.
  bool increment_matches = true;
};

/// exp_sum_n(-2) for even n >= 2, with the step identity from n - 2 checked.
MinusTwoValue value_at_minus_two(unsigned n);

struct SylvesterWitness {
  std::uint64_t element;
  std::uint64_t prime;
};

/// Some m in {l+1, ..., l+k} with a prime factor q > k. Requires 1 <= k <= l.
SylvesterWitness sylvester_witness(std::uint64_t l, std::uint64_t k);

}  // namespace taylorcert
