#include "taylorcert/schur.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "taylorcert/padic.hpp"
#include "taylorcert/primes.hpp"

namespace taylorcert {

namespace {

constexpr std::size_t kCofactorOraclePrimes = 25;

bool is_power_of_two(unsigned n) { return n >= 2 && (n & (n - 1)) == 0; }

unsigned log2_exact(unsigned n) {
  unsigned s = 0;
  while ((1u << s) < n) ++s;
  return s;
}

// c = sign * 2^k with k >= 0.
std::optional<std::pair<unsigned, int>> signed_power_of_two(const BigInt& c) {
  if (c == 0) return std::nullopt;
  const BigInt mag = abs(c);
  const std::size_t low = mpz_scan1(mag.get_mpz_t(), 0);
  if (mpz_sizeinbase(mag.get_mpz_t(), 2) != low + 1) return std::nullopt;
  return std::make_pair(static_cast<unsigned>(low), c > 0 ? 1 : -1);
}

BigInt signed_pow2(long t, int sign) {
  BigInt r = BigInt(1) << static_cast<mp_bitcnt_t>(t);
  return sign > 0 ? r : BigInt(-r);
}

IntPoly linear_with_root(const BigInt& r) { return IntPoly({BigInt(-r), BigInt(1)}); }

// Integer root valuations of the 2-adic polygon inside [0, bound].
std::vector<long> admissible_exponents(const IntPoly& scaled, unsigned bound) {
  std::vector<long> out;
  for (const auto& rv : root_valuations(build_np(scaled, 2))) {
    if (rv.valuation.get_den() != 1) continue;
    const long t = rv.valuation.get_num().get_si();
    if (t >= 0 && t <= static_cast<long>(bound)) out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<BigInt> candidates_for(const std::vector<long>& exponents) {
  std::vector<BigInt> out;
  for (long t : exponents) {
    out.push_back(signed_pow2(t, 1));
    out.push_back(signed_pow2(t, -1));
  }
  return out;
}

unsigned root_search_bound(unsigned k, unsigned n) { return k + static_cast<unsigned>(legendre_factorial(n, 2)); }

std::vector<IntFactor> group_linear(const std::vector<BigInt>& roots) {
  std::map<BigInt, unsigned> counts;
  for (const auto& r : roots) ++counts[r];
  std::vector<IntFactor> out;
  for (const auto& r : roots) {
    auto it = counts.find(r);
    if (it == counts.end()) continue;
    out.push_back({linear_with_root(r), it->second});
    counts.erase(it);
  }
  return out;
}

// Certifies the cofactor left after deflation: Eisenstein first, then the
// Frobenius degree-pattern oracle.
CofactorStatus certify_cofactor(const IntPoly& g, std::vector<EvidenceStep>& evidence) {
  if (*g.degree() == 1) return CofactorStatus::irreducible;
  if (auto q = eisenstein_check(g)) {
    evidence.push_back(EisensteinStep{g, *q});
    return CofactorStatus::irreducible;
  }
  const auto primes = usable_primes(g, kCofactorOraclePrimes);
  OracleStep step{g, dedekind_irreducibility_oracle(g, primes)};
  const bool ok = step.result.verdict == OracleVerdict::irreducible;
  evidence.push_back(std::move(step));
  return ok ? CofactorStatus::irreducible : CofactorStatus::unresolved;
}

IrreducibilityCertificate base_certificate(const TaylorSpec& spec) {
  IrreducibilityCertificate cert;
  cert.scaled = scaled_taylor_poly(spec);
  cert.scale = factorial(spec.degree());
  return cert;
}

IrreducibilityCertificate root_search_path(const TaylorSpec& spec, unsigned k) {
  const unsigned n = spec.degree();
  IrreducibilityCertificate cert = base_certificate(spec);
  cert.evidence.push_back(TheoremStep{rule::kSchurStructure,
                                      "constant term is a signed power of two, so any factorization is "
                                      "linear factors x -+ 2^t times one irreducible cofactor of degree > n/2"});
  try {
    cert.evidence.push_back(SlopeStep{power_of_two_slope_certificate(spec, log2_exact(n))});
  } catch (const CertificateRefused&) {
    // The full polygon below still constrains the candidate exponents.
  }

  RootSearchStep search;
  search.t_bound = root_search_bound(k, n);
  search.admissible_t = admissible_exponents(cert.scaled, search.t_bound);
  search.candidates = candidates_for(search.admissible_t);

  IntPoly current = cert.scaled;
  bool found = true;
  while (found && *current.degree() > 0) {
    found = false;
    for (const auto& r : search.candidates) {
      if (eval_exact(current, r) != 0) continue;
      current = *divide_exact(current, linear_with_root(r));
      search.roots.push_back(r);
      found = true;
      break;
    }
  }
  cert.evidence.push_back(search);

  if (search.roots.empty()) {
    cert.verdict = Verdict::irreducible;
    return cert;
  }
  cert.verdict = Verdict::reducible;
  cert.factors = group_linear(search.roots);
  const std::size_t d = *current.degree();
  if (d == 0) {
    cert.note = "splits completely into linear factors";
    return cert;
  }
  cert.factors.push_back({current, 1});
  if (2 * d <= n) {
    cert.cofactor = CofactorStatus::contradicts_structure;
    cert.note = "cofactor degree " + std::to_string(d) + " is not above n/2";
    return cert;
  }
  cert.cofactor = certify_cofactor(current, cert.evidence);
  if (cert.cofactor == CofactorStatus::unresolved) cert.note = "cofactor unresolved";
  return cert;
}

bool is_candidate(const BigInt& r, const std::vector<BigInt>& candidates) {
  return std::find(candidates.begin(), candidates.end(), r) != candidates.end();
}

bool replay_theorem(const TheoremStep& step, const TaylorSpec& spec) {
  const unsigned n = spec.degree();
  const auto c0 = signed_power_of_two(spec.coeffs()[0]);
  if (step.rule == rule::kLinear) return n == 1;
  if (step.rule == rule::kNotPowerOfTwo) return n >= 2 && !is_power_of_two(n) && c0.has_value();
  if (step.rule == rule::kUnitConstant) return is_power_of_two(n) && c0 && c0->first == 0;
  if (step.rule == rule::kSchurStructure) return n >= 2 && c0.has_value();
  if (step.rule == rule::kNewtonPolygon) {
    if (!is_power_of_two(n)) return false;
    const auto segs = build_np(make_taylor_poly(spec), 2).segments();
    return segs.size() == 1 && segs[0].slope == -1;
  }
  return false;
}

bool replay_root_search(const RootSearchStep& step, const IrreducibilityCertificate& cert, const TaylorSpec& spec) {
  const auto c0 = signed_power_of_two(spec.coeffs()[0]);
  if (!c0) return false;
  const unsigned n = spec.degree();
  if (step.t_bound != root_search_bound(c0->first, n)) return false;
  // Any integer root divides the constant term 2^k n!, so 2^t with t above the bound cannot occur.
  if (v_p(cert.scaled.coeffs()[0], 2).value() != static_cast<long>(step.t_bound)) return false;
  if (step.admissible_t != admissible_exponents(cert.scaled, step.t_bound)) return false;
  if (step.candidates != candidates_for(step.admissible_t)) return false;
  IntPoly current = cert.scaled;
  for (const auto& r : step.roots) {
    if (!is_candidate(r, step.candidates)) return false;
    auto q = divide_exact(current, linear_with_root(r));
    if (!q) return false;
    current = *q;
  }
  return std::none_of(step.candidates.begin(), step.candidates.end(),
                      [&](const BigInt& r) { return *current.degree() > 0 && eval_exact(current, r) == 0; });
}

bool replay_eisenstein(const EisensteinStep& step) {
  const auto& c = step.poly.coeffs();
  if (!step.poly.is_monic() || c.size() < 2 || !step.prime.fits_ulong_p() || !is_prime(step.prime.get_ui())) {
    return false;
  }
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    if (mpz_divisible_p(c[i].get_mpz_t(), step.prime.get_mpz_t()) == 0) return false;
  }
  const BigInt q2 = step.prime * step.prime;
  return mpz_divisible_p(c[0].get_mpz_t(), q2.get_mpz_t()) == 0;
}

bool replay_oracle(const OracleStep& step) {
  if (step.result.verdict != OracleVerdict::irreducible) return true;
  std::vector<std::uint64_t> primes;
  for (const auto& u : step.result.used) primes.push_back(u.p);
  return dedekind_irreducibility_oracle(step.poly, primes).verdict == OracleVerdict::irreducible;
}

bool replay_positivity(const PositivityStep& step, const TaylorSpec& spec) {
  const Rational value = eval_exact(make_taylor_poly(spec), step.point);
  if (value != step.value || value <= 0) return false;
  if (step.rule == rule::kTermPositivity) {
    return step.point > 0 && std::all_of(spec.coeffs().begin(), spec.coeffs().end(),
                                         [](const BigInt& c) { return c > 0; });
  }
  return step.rule == rule::kMinusTwoPositive;
}

// Every factor used by a certificate must divide: its product must be `scaled`.
bool factors_multiply_out(const IrreducibilityCertificate& cert) {
  IntPoly prod({BigInt(1)});
  for (const auto& f : cert.factors) {
    for (unsigned i = 0; i < f.multiplicity; ++i) prod = prod * f.poly;
  }
  return prod == cert.scaled;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::irreducible: return "irreducible";
    case Verdict::reducible: return "reducible";
    case Verdict::refused: return "refused";
  }
  return "unknown";
}

std::string to_string(CofactorStatus s) {
  switch (s) {
    case CofactorStatus::not_applicable: return "none";
    case CofactorStatus::irreducible: return "irreducible";
    case CofactorStatus::unresolved: return "unresolved";
    case CofactorStatus::contradicts_structure: return "contradicts-structure";
  }
  return "unknown";
}

IrreducibilityCertificate certify_schur(const TaylorSpec& spec, unsigned k, int sign) {
  const unsigned n = spec.degree();
  IrreducibilityCertificate cert = base_certificate(spec);
  if ((sign != 1 && sign != -1) || spec.coeffs()[0] != signed_pow2(k, sign)) {
    cert.verdict = Verdict::refused;
    cert.note = "constant coefficient " + spec.coeffs()[0].get_str() + " is not " + (sign < 0 ? "-" : "") + "2^" +
                std::to_string(k);
    return cert;
  }
  if (n == 1) {
    cert.verdict = Verdict::irreducible;
    cert.evidence.push_back(TheoremStep{rule::kLinear, "degree one"});
    return cert;
  }
  if (!is_power_of_two(n)) {
    cert.verdict = Verdict::irreducible;
    cert.evidence.push_back(TheoremStep{rule::kNotPowerOfTwo,
                                        "an odd prime q divides n, so n! f = x^n mod q and no factor x -+ 2^t exists"});
    return cert;
  }
  if (k == 0) {
    try {
      auto slope = power_of_two_slope_certificate(spec, log2_exact(n));
      cert.verdict = Verdict::irreducible;
      cert.evidence.push_back(TheoremStep{rule::kUnitConstant, "every root has 2-adic valuation strictly inside (0, 1)"});
      cert.evidence.push_back(SlopeStep{std::move(slope)});
      return cert;
    } catch (const CertificateRefused&) {
      // Unreachable for integer c_i; fall back to the explicit root search.
    }
  }
  return root_search_path(spec, k);
}

IrreducibilityCertificate certify_schur(const TaylorSpec& spec) {
  const auto c0 = signed_power_of_two(spec.coeffs()[0]);
  if (!c0) {
    IrreducibilityCertificate cert = base_certificate(spec);
    cert.verdict = Verdict::refused;
    cert.note = "constant coefficient " + spec.coeffs()[0].get_str() + " is not a signed power of two";
    return cert;
  }
  return certify_schur(spec, c0->first, c0->second);
}

IrreducibilityCertificate certify_exp_sum(unsigned n) {
  const TaylorSpec spec = TaylorSpec::exp_sum(n);
  if (!is_power_of_two(n) || n <= 4) return certify_schur(spec, 1, 1);

  IrreducibilityCertificate cert = base_certificate(spec);
  auto slope = power_of_two_slope_certificate(spec, log2_exact(n), PolyForm::rational);
  cert.evidence.push_back(TheoremStep{rule::kSchurStructure,
                                      "any factorization must contain a linear factor x -+ 2^t"});
  cert.evidence.push_back(TheoremStep{rule::kNewtonPolygon,
                                      "single 2-adic segment of slope -1: every root has valuation 1, "
                                      "so the only rational candidates are 2 and -2"});
  cert.evidence.push_back(SlopeStep{slope});

  RootSearchStep search;
  search.t_bound = root_search_bound(1, n);
  search.admissible_t = admissible_exponents(cert.scaled, search.t_bound);
  search.candidates = candidates_for(search.admissible_t);
  cert.evidence.push_back(search);

  const RatPoly f = make_taylor_poly(spec);
  cert.evidence.push_back(PositivityStep{rule::kTermPositivity, Rational(2), eval_exact(f, Rational(2))});
  cert.evidence.push_back(PositivityStep{rule::kMinusTwoPositive, Rational(-2), value_at_minus_two(n).value});
  cert.verdict = Verdict::irreducible;
  return cert;
}

bool replay_certificate(const IrreducibilityCertificate& cert, const TaylorSpec& spec) {
  if (cert.scaled != scaled_taylor_poly(spec) || cert.scale != factorial(spec.degree())) return false;
  if (cert.verdict == Verdict::refused) return !signed_power_of_two(spec.coeffs()[0]).has_value() || !cert.note.empty();
  if (cert.verdict == Verdict::reducible && !factors_multiply_out(cert)) return false;
  if (cert.verdict == Verdict::irreducible && !cert.factors.empty()) return false;
  if (cert.evidence.empty()) return false;
  for (const auto& step : cert.evidence) {
    const bool ok = std::visit(
        [&](const auto& s) -> bool {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, TheoremStep>) return replay_theorem(s, spec);
          if constexpr (std::is_same_v<T, SlopeStep>) {
            try {
              const auto again = power_of_two_slope_certificate(spec, s.cert.s, s.cert.form);
              return again.slope == s.cert.slope && again.left == s.cert.left && again.right == s.cert.right &&
                     again.candidate_exponents == s.cert.candidate_exponents;
            } catch (const std::exception&) {
              return false;
            }
          }
          if constexpr (std::is_same_v<T, RootSearchStep>) return replay_root_search(s, cert, spec);
          if constexpr (std::is_same_v<T, EisensteinStep>) return replay_eisenstein(s);
          if constexpr (std::is_same_v<T, OracleStep>) return replay_oracle(s);
          if constexpr (std::is_same_v<T, PositivityStep>) return replay_positivity(s, spec);
          return false;
        },
        step);
    if (!ok) return false;
  }
  return true;
}

MinusTwoValue value_at_minus_two(unsigned n) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("value_at_minus_two needs an even n >= 2");
  const Rational minus_two(-2);
  MinusTwoValue out;
  out.value = eval_exact(make_taylor_poly(TaylorSpec::exp_sum(n)), minus_two);
  if (n >= 4) {
    const Rational prev = eval_exact(make_taylor_poly(TaylorSpec::exp_sum(n - 2)), minus_two);
    out.increment = out.value - prev;
    const BigInt num = (BigInt(1) << (n - 2)) * (n - 1) * (static_cast<long>(n) - 4);
    out.increment_matches = *out.increment == make_rational(num, factorial(n));
  }
  return out;
}

SylvesterWitness sylvester_witness(std::uint64_t l, std::uint64_t k) {
  if (k < 1 || k > l) throw std::invalid_argument("sylvester_witness needs 1 <= k <= l");
  for (std::uint64_t m = l + 1; m <= l + k; ++m) {
    for (const auto& [q, e] : factor_integer(BigInt(static_cast<unsigned long>(m)))) {
      if (q > k) return {m, q.get_ui()};
    }
  }
  throw std::logic_error("no element of (l, l+k] has a prime factor above k");
}

}  // namespace taylorcert
