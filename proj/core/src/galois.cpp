#include "taylorcert/galois.hpp"

#include <algorithm>
#include <stdexcept>

#include "taylorcert/padic.hpp"
#include "taylorcert/primes.hpp"
#include "taylorcert/schur.hpp"

namespace taylorcert {

namespace {

__extension__ typedef unsigned __int128 u128;

Rational exp_sum_at(unsigned n, const Rational& a) {
  return eval_exact(make_taylor_poly(TaylorSpec::exp_sum(n)), a);
}

// n! exp_sum_n(-n), an integer.
BigInt scaled_at_minus_n(unsigned n) {
  return eval_exact(scaled_taylor_poly(TaylorSpec::exp_sum(n)), BigInt(-static_cast<long>(n)));
}

int sign_of(const BigInt& z) { return z > 0 ? 1 : (z < 0 ? -1 : 0); }

bool alternating_sign(unsigned n) { return (static_cast<unsigned long>(n) * (n - 1) / 2) % 2 == 1; }

BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m) {
  const std::size_t size = m.size();
  if (size == 0) return BigInt(1);
  int sign = 1;
  BigInt prev(1);
  for (std::size_t k = 0; k + 1 < size; ++k) {
    if (m[k][k] == 0) {
      std::size_t pivot = k + 1;
      while (pivot < size && m[pivot][k] == 0) ++pivot;
      if (pivot == size) return BigInt(0);
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j) {
        BigInt t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[size - 1][size - 1] : BigInt(-m[size - 1][size - 1]);
}

std::vector<std::size_t> target_pattern(unsigned n, CycleTarget target) {
  std::vector<std::size_t> pattern;
  if (target == CycleTarget::long_cycle) {
    pattern = {1, n - 1};
  } else if (n % 2 == 1) {
    pattern = {2, n - 2};
  } else {
    pattern = {1, 2, n - 3};
  }
  std::sort(pattern.begin(), pattern.end());
  return pattern;
}

std::optional<std::uint64_t> chebyshev_prime(unsigned n) {
  for (std::uint64_t q = n / 2 + 1; q + 2 < n; ++q) {
    if (2 * q > n && is_prime(q)) return q;
  }
  return std::nullopt;
}

std::optional<std::uint64_t> smallest_prime_3_mod_4(unsigned m) {
  if (m < 2) return std::nullopt;
  for (const auto& [q, e] : factor_integer(BigInt(m))) {
    if (q.get_ui() % 4 == 3) return q.get_ui();
  }
  return std::nullopt;
}

}  // namespace

std::string to_string(DiscriminantMethod m) {
  switch (m) {
    case DiscriminantMethod::closed_form: return "closed-form";
    case DiscriminantMethod::resultant: return "resultant";
    case DiscriminantMethod::both_agree: return "both-agree";
  }
  return "unknown";
}

std::string to_string(CycleTarget t) {
  return t == CycleTarget::long_cycle ? "long-cycle" : "transposition";
}

std::string to_string(FastPathKind k) {
  switch (k) {
    case FastPathKind::n_3_mod_4: return "n-3-mod-4";
    case FastPathKind::even_odd_valuation: return "even-n-odd-factorial-valuation";
    case FastPathKind::prime_condition: return "n-1-mod-4-prime-condition";
  }
  return "unknown";
}

DiscriminantReport discriminant_closed_form(unsigned n) {
  if (n == 0) throw std::invalid_argument("discriminant needs n >= 1");
  DiscriminantReport r;
  r.n = n;
  r.at_minus_n = exp_sum_at(n, Rational(-static_cast<long>(n)));
  BigInt fact_pow;
  mpz_pow_ui(fact_pow.get_mpz_t(), factorial(n).get_mpz_t(), n);
  const Rational exact = Rational(BigInt(BigInt(1) << (n - 1)) * fact_pow) * r.at_minus_n;
  if (exact.get_den() != 1) throw std::logic_error("closed-form discriminant is not an integer");
  r.value = alternating_sign(n) ? BigInt(-exact.get_num()) : BigInt(exact.get_num());
  r.sign = sign_of(r.value);
  r.is_square = is_perfect_square(r.value);
  r.method = DiscriminantMethod::closed_form;
  if (n <= kFactoredDiscriminantLimit && r.value != 0) r.factored = format_factorization(r.sign, factor_integer(r.value));
  return r;
}

BigInt discriminant_resultant(const IntPoly& f) {
  if (!f.is_monic()) throw std::invalid_argument("discriminant_resultant needs a monic polynomial");
  if (*f.degree() < 2) throw std::invalid_argument("discriminant_resultant needs degree >= 2");
  const std::size_t n = *f.degree();
  const IntPoly df = f.derivative();
  const std::size_t size = 2 * n - 1;
  std::vector<std::vector<BigInt>> m(size, std::vector<BigInt>(size, BigInt(0)));
  // n-1 shifted rows of f, then n shifted rows of f', highest power first.
  for (std::size_t r = 0; r + 1 < n; ++r) {
    for (std::size_t j = 0; j <= n; ++j) m[r][r + j] = f.coeffs()[n - j];
  }
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t j = 0; j < n; ++j) m[n - 1 + r][r + j] = df.coeffs()[n - 1 - j];
  }
  const BigInt res = bareiss_determinant(std::move(m));
  return alternating_sign(static_cast<unsigned>(n)) ? BigInt(-res) : res;
}

DiscriminantReport discriminant_cross_checked(unsigned n) {
  DiscriminantReport r = discriminant_closed_form(n);
  if (n < 2) return r;
  const BigInt other = discriminant_resultant(scaled_taylor_poly(TaylorSpec::exp_sum(n)));
  if (other != r.value) throw std::logic_error("closed-form and resultant discriminants differ at n = " + std::to_string(n));
  r.method = DiscriminantMethod::both_agree;
  return r;
}

CycleWitness cycle_type_witness(unsigned n, CycleTarget target) {
  if (n < 3) throw std::invalid_argument("cycle_type_witness needs n >= 3");
  const auto pattern = target_pattern(n, target);
  const BigInt disc = discriminant_closed_form(n).value;
  const IntPoly f = scaled_taylor_poly(TaylorSpec::exp_sum(n));
  for (const std::uint64_t p : primes_up_to(kWitnessPrimeBound)) {
    if (mpz_divisible_ui_p(disc.get_mpz_t(), p) != 0) continue;
    const auto g = reduce_mod(f, p);
    const auto fac = factor_modp(g);
    std::vector<std::size_t> degrees;
    bool squarefree = true;
    for (const auto& q : fac.factors) {
      if (q.multiplicity != 1) squarefree = false;
      degrees.push_back(*q.poly.degree());
    }
    std::sort(degrees.begin(), degrees.end());
    if (squarefree && degrees == pattern) return {target, p, degrees, fac};
  }
  throw std::runtime_error("no witness found below " + std::to_string(kWitnessPrimeBound));
}

ContainmentEvidence contains_alternating(unsigned n) {
  if (n < 3 || n == 4) throw std::invalid_argument("contains_alternating needs n >= 3, n != 4");
  if (certify_exp_sum(n).verdict != Verdict::irreducible) {
    throw std::logic_error("exp_sum_" + std::to_string(n) + " is not certified irreducible");
  }
  if (n >= 8) {
    const auto q = chebyshev_prime(n);
    if (!q) throw std::logic_error("no prime strictly between n/2 and n-2 for n = " + std::to_string(n));
    NewtonPolygon np = build_np(make_taylor_poly(TaylorSpec::exp_sum(n)), *q);
    const std::vector<PolygonVertex> expected = {{0, Rational(0)}, {*q, Rational(-1)}, {n, Rational(-1)}};
    if (np.vertices() != expected) {
      throw std::logic_error("unexpected " + std::to_string(*q) + "-adic polygon shape for n = " + std::to_string(n));
    }
    return ChebyshevStep{*q, std::move(np), true};
  }
  CycleTypeStep step;
  step.witnesses.push_back(cycle_type_witness(n, CycleTarget::long_cycle));
  if (n >= 5) step.witnesses.push_back(cycle_type_witness(n, CycleTarget::transposition));
  return step;
}

FactorialSumCondition factorial_sum_condition(std::uint64_t p) {
  if (!is_prime(p) || p == 2) throw std::invalid_argument("factorial_sum_condition needs an odd prime");
  // S_k = 2 S_{k-1} + k! gives sum_{i<=k} 2^(k-i) i!.
  std::uint64_t fact = 1, sum = 0;
  for (std::uint64_t i = 1; i < p; ++i) {
    fact = static_cast<std::uint64_t>(static_cast<u128>(fact) * i % p);
    sum = (2 * sum + fact) % p;
  }
  return {p, sum, sum != 0};
}

std::vector<std::uint64_t> factorial_sum_condition_failures(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for (const auto p : primes_up_to(limit)) {
    if (p == 2) continue;
    if (!factorial_sum_condition(p).holds) out.push_back(p);
  }
  return out;
}

std::vector<std::uint64_t> residue_classes(std::uint64_t p) {
  if (!factorial_sum_condition(p).holds) {
    throw std::invalid_argument("p = " + std::to_string(p) + " fails the factorial-sum condition");
  }
  const std::uint64_t p2 = p * p;
  std::vector<std::uint64_t> out;
  for (std::uint64_t u = 1; u < p; ++u) {
    const std::uint64_t base = (2 + p * u) % p2;
    for (std::uint64_t k = 0; k < 4; ++k) {
      const std::uint64_t r = base + k * p2;
      if (r % 4 == 1) {
        out.push_back(r);
        break;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FastPathCriterion> symmetric_fast_paths(unsigned n) {
  std::vector<FastPathCriterion> fired;
  if (n < 3) return fired;
  if (n % 4 == 3) {
    FastPathCriterion c{FastPathKind::n_3_mod_4, {}};
    if (n > 3) {
      const auto p = smallest_prime_3_mod_4(n - 4);
      if (!p) throw std::logic_error("n - 4 has no prime factor 3 mod 4");
      c.primes.push_back(*p);
    }
    fired.push_back(c);
  }
  if (n % 2 == 0) {
    FastPathCriterion c{FastPathKind::even_odd_valuation, {}};
    for (const auto& q : prime_divisors(BigInt(n - 1))) {
      if (legendre_factorial(n, q.get_ui()) % 2 == 1) c.primes.push_back(q.get_ui());
    }
    if (!c.primes.empty()) fired.push_back(c);
  }
  if (n % 4 == 1 && n >= 5) {
    FastPathCriterion c{FastPathKind::prime_condition, {}};
    for (const auto& [q, e] : factor_integer(BigInt(n - 2))) {
      const std::uint64_t p = q.get_ui();
      if (p != 2 && e == 1 && factorial_sum_condition(p).holds) c.primes.push_back(p);
    }
    if (!c.primes.empty()) fired.push_back(c);
  }
  return fired;
}

std::string group_name(const GaloisCertificate& cert) {
  const std::string n = std::to_string(cert.n);
  switch (cert.group) {
    case GroupKind::trivial: return "trivial";
    case GroupKind::s3_on_cubic_factor: return "S3-on-cubic-factor";
    case GroupKind::alternating: return "A" + n;
    case GroupKind::symmetric: return "S" + n;
    case GroupKind::contains_alternating_undecided: return "contains-A" + n;
  }
  return "unknown";
}

GaloisCertificate classify(unsigned n) {
  if (n == 0) throw std::invalid_argument("classify needs n >= 1");
  GaloisCertificate cert;
  cert.n = n;
  if (n <= 2) {
    cert.group = GroupKind::trivial;
    cert.square_test = discriminant_closed_form(n);
    cert.note = n == 1 ? "linear polynomial" : "square of a linear polynomial";
    return cert;
  }
  if (n == 4) {
    const IntPoly scaled = scaled_taylor_poly(TaylorSpec::exp_sum(4));
    const IntPoly cubic = *divide_exact(scaled, IntPoly({BigInt(2), BigInt(1)}));
    const auto q = eisenstein_check(cubic);
    if (!q) throw std::logic_error("cubic factor of exp_sum_4 is not Eisenstein");
    cert.group = GroupKind::s3_on_cubic_factor;
    cert.containment = CubicFactorStep{cubic, *q, discriminant_resultant(cubic)};
    cert.note = "group of the irreducible cubic factor; the linear factor x + 2 adds nothing";
    return cert;
  }
  cert.containment = contains_alternating(n);
  cert.square_test = discriminant_closed_form(n);
  cert.group = cert.square_test->is_square ? GroupKind::alternating : GroupKind::symmetric;
  cert.fast_paths = symmetric_fast_paths(n);
  cert.fast_paths_agree = cert.fast_paths.empty() || !cert.square_test->is_square;
  if (cert.group == GroupKind::alternating && cert.fast_paths.empty()) {
    cert.note = "A" + std::to_string(n) + " (not covered by the fast-path criteria)";
  }
  if (!cert.fast_paths_agree) cert.note = "fast path claims S_n but the discriminant is a square";
  return cert;
}

bool quadratic_character_check(unsigned n) {
  if (n % 4 != 3) return false;
  const BigInt value = -scaled_at_minus_n(n);
  if (n == 3) return !is_perfect_square(value);
  const auto p = smallest_prime_3_mod_4(n - 4);
  return p && legendre_symbol(value, *p) == -1;
}

bool odd_valuation_check(unsigned n, std::uint64_t p) {
  const Valuation v = v_p(exp_sum_at(n, Rational(-static_cast<long>(n))), p);
  if (v.is_infinite()) return false;
  const long expected = -static_cast<long>(legendre_factorial(n, p));
  return v.value() == expected && (v.value() % 2 != 0);
}

bool simple_valuation_check(unsigned n, std::uint64_t p) {
  if (n < 5) return false;
  const BigInt value = scaled_at_minus_n(n);
  const Valuation v = v_p(value, p);
  if (v.is_infinite() || v.value() != 1) return false;
  // sum_{i=0}^{n-4} (-n)^i n!/i!
  BigInt tail(0);
  const BigInt minus_n(-static_cast<long>(n));
  BigInt power(1);
  BigInt ratio = factorial(n);
  for (unsigned i = 0; i + 4 <= n; ++i) {
    tail += power * ratio;
    power *= minus_n;
    ratio /= (i + 1);
  }
  const BigInt m(n - 2);
  if (mpz_divisible_p(tail.get_mpz_t(), m.get_mpz_t()) == 0) return false;
  const BigInt k = tail / m;
  BigInt lead;
  mpz_pow_ui(lead.get_mpz_t(), BigInt(n).get_mpz_t(), n - 2);
  return value == m * m * lead + 2 * m * k;
}

}  // namespace taylorcert
