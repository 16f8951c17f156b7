// Discriminants, alternating-group containment and the S_n / A_n decision for
// the exp_sum family x^n/n! + 2 sum_{i<n} x^i/i!.

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

enum class DiscriminantMethod { closed_form, resultant, both_agree };

std::string to_string(DiscriminantMethod m);

struct DiscriminantReport {
  unsigned n = 0;
  BigInt value;
  int sign = 0;
  bool is_square = false;
  /// exp_sum_n(-n).
  Rational at_minus_n;
  DiscriminantMethod method = DiscriminantMethod::closed_form;
  /// Signed prime factorization, filled in for n <= kFactoredDiscriminantLimit.
  std::optional<std::string> factored;
};

inline constexpr unsigned kFactoredDiscriminantLimit = 12;

/// Discriminant of n! exp_sum_n as (-1)^(n(n-1)/2) 2^(n-1) (n!)^n exp_sum_n(-n).
DiscriminantReport discriminant_closed_form(unsigned n);

/// Discriminant of a monic f of degree >= 2 as (-1)^(n(n-1)/2) Res(f, f'),
/// with the resultant taken as a fraction-free Sylvester determinant.
BigInt discriminant_resultant(const IntPoly& f);

/// Closed form checked against the resultant; method both_agree on success.
/// Throws std::logic_error if they differ.
DiscriminantReport discriminant_cross_checked(unsigned n);

enum class CycleTarget { long_cycle, transposition };

std::string to_string(CycleTarget t);

struct CycleWitness {
  CycleTarget target;
  std::uint64_t p;
  std::vector<std::size_t> pattern;
  FactorizationModP factorization;
};

inline constexpr std::uint64_t kWitnessPrimeBound = 10'000;

/// First prime p not dividing the discriminant of n! exp_sum_n whose
/// squarefree factorization has degrees [1, n-1] (long_cycle), [2, n-2] for
/// odd n or [1, 2, n-3] for even n (transposition). Throws std::runtime_error
/// when no prime below kWitnessPrimeBound qualifies.
CycleWitness cycle_type_witness(unsigned n, CycleTarget target);

/// A prime q in (n/2, n-2) whose q-adic polygon of exp_sum_n is
/// (0,0), (q,-1), (n,-1); q then divides the Newton index.
struct ChebyshevStep {
  std::uint64_t q;
  NewtonPolygon polygon;
  bool shape_ok;
};

/// Small degrees, where an (n-1)-cycle (and a transposition for n >= 5)
/// together with irreducibility give S_n.
struct CycleTypeStep {
  std::vector<CycleWitness> witnesses;
};

/// The degree-4 case: exp_sum_4 = (x+2) * cubic / 24.
struct CubicFactorStep {
  IntPoly cubic;
  BigInt eisenstein_prime;
  BigInt discriminant;
};

using ContainmentEvidence = std::variant<ChebyshevStep, CycleTypeStep, CubicFactorStep>;

/// Evidence that the Galois group of exp_sum_n contains A_n (n >= 3, n != 4):
/// a Chebyshev polygon step for n >= 8, cycle witnesses for 3 <= n <= 7.
/// Throws std::logic_error if the polygon shape deviates or no prime exists,
/// std::invalid_argument for n < 3 or n = 4.
ContainmentEvidence contains_alternating(unsigned n);

enum class FastPathKind { n_3_mod_4, even_odd_valuation, prime_condition };

std::string to_string(FastPathKind k);

struct FastPathCriterion {
  FastPathKind kind;
  /// (i) the smallest p = 3 mod 4 dividing n-4 (empty for n = 3); (ii) every
  /// prime p | n-1 with v_p(n!) odd; (iii) every odd p with v_p(n-2) = 1
  /// satisfying the factorial-sum condition.
  std::vector<std::uint64_t> primes;
};

/// Criteria that force the group to be S_n without the square test.
std::vector<FastPathCriterion> symmetric_fast_paths(unsigned n);

struct FactorialSumCondition {
  std::uint64_t p;
  /// sum_{i=1}^{p-1} 2^(p-1-i) i! mod p
  std::uint64_t residue;
  bool holds;
};

/// Rejects p = 2 and composite p.
FactorialSumCondition factorial_sum_condition(std::uint64_t p);

/// Primes 3 <= p <= limit at which the condition fails.
std::vector<std::uint64_t> factorial_sum_condition_failures(std::uint64_t limit);

/// Residues r mod 4p^2 with r = 1 mod 4 and r = 2 + p*u mod p^2 for some
/// 1 <= u <= p-1. Throws std::invalid_argument when the condition fails.
std::vector<std::uint64_t> residue_classes(std::uint64_t p);

enum class GroupKind { trivial, s3_on_cubic_factor, alternating, symmetric, contains_alternating_undecided };

struct GaloisCertificate {
  unsigned n = 0;
  GroupKind group = GroupKind::trivial;
  std::optional<ContainmentEvidence> containment;
  std::optional<DiscriminantReport> square_test;
  std::vector<FastPathCriterion> fast_paths;
  /// False when a fast path fired but the square test reported a square.
  bool fast_paths_agree = true;
  std::string note;
};

/// "trivial", "S3-on-cubic-factor", "S7", "A9", "contains-A9".
std::string group_name(const GaloisCertificate& cert);

GaloisCertificate classify(unsigned n);

/// Independent checks of the valuation arguments behind each fast path.

/// n = 3 mod 4: -n! exp_sum_n(-n) is a non-residue mod the smallest p = 3 mod 4
/// dividing n - 4 (for n = 3 the value -3 itself is checked as a non-square).
bool quadratic_character_check(unsigned n);

/// n even, p | n-1 with v_p(n!) odd: v_p(exp_sum_n(-n)) = -v_p(n!), odd.
bool odd_valuation_check(unsigned n, std::uint64_t p);

/// n = 1 mod 4, p || n-2 with the condition: v_p(n! exp_sum_n(-n)) = 1, and
/// n! exp_sum_n(-n) = (n-2)^2 n^(n-2) + 2 (n-2) K with K an integer. K is
/// negative for every such n (n = 5 gives K = -160); only integrality matters.
bool simple_valuation_check(unsigned n, std::uint64_t p);

}  // namespace taylorcert
