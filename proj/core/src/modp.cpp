#include "taylorcert/modp.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "taylorcert/primes.hpp"

namespace taylorcert {

namespace {

using u64 = std::uint64_t;
__extension__ typedef unsigned __int128 u128;

u64 mul_mod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }
u64 add_mod(u64 a, u64 b, u64 p) { return (a + b) % p; }
u64 sub_mod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

u64 pow_mod(u64 b, u64 e, u64 p) {
  u64 r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = mul_mod(r, b, p);
    b = mul_mod(b, b, p);
    e >>= 1;
  }
  return r;
}

u64 inv_mod(u64 a, u64 p) {
  if (a % p == 0) throw std::domain_error("inverse of zero mod p");
  return pow_mod(a, p - 2, p);
}

void check_same_field(const ModPoly& a, const ModPoly& b) {
  if (a.modulus() != b.modulus()) throw std::invalid_argument("polynomials over different prime fields");
}

ModPoly x_poly(u64 p) { return ModPoly(p, {0, 1}); }

ModPoly one_poly(u64 p) { return ModPoly(p, {1}); }

ModPoly mulmod(const ModPoly& a, const ModPoly& b, const ModPoly& m) { return (a * b) % m; }

// x^(p^k) mod m by k successive Frobenius powers.
ModPoly frobenius_power(const ModPoly& h, unsigned k, const ModPoly& m) {
  ModPoly r = h % m;
  const BigInt p(static_cast<unsigned long>(m.modulus()));
  for (unsigned i = 0; i < k; ++i) r = powmod(r, p, m);
  return r;
}

// Coefficients of f sit only at multiples of p; return g with g(x)^p = f(x).
ModPoly pth_root(const ModPoly& f) {
  const u64 p = f.modulus();
  std::vector<u64> c;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) c.push_back(f.coeffs()[i]);
  return ModPoly(p, std::move(c));
}

void squarefree_decompose(const ModPoly& f, unsigned scale, std::vector<ModFactor>& out) {
  if (f.is_one() || f.degree() == std::size_t{0}) return;
  const ModPoly df = f.derivative();
  if (df.is_zero()) {
    squarefree_decompose(pth_root(f), scale * static_cast<unsigned>(f.modulus()), out);
    return;
  }
  ModPoly c = gcd(f, df);
  ModPoly w = f / c;
  unsigned i = 1;
  while (!w.is_one()) {
    ModPoly y = gcd(w, c);
    ModPoly fac = w / y;
    if (!fac.is_one()) out.push_back({fac, i * scale});
    w = y;
    c = c / y;
    ++i;
  }
  if (!c.is_one()) squarefree_decompose(pth_root(c), scale * static_cast<unsigned>(f.modulus()), out);
}

struct DegreeBlock {
  ModPoly poly;
  std::size_t degree;
};

std::vector<DegreeBlock> distinct_degree(const ModPoly& f) {
  std::vector<DegreeBlock> out;
  const u64 p = f.modulus();
  ModPoly rest = f;
  ModPoly h = x_poly(p) % rest;
  const BigInt pp(static_cast<unsigned long>(p));
  for (std::size_t d = 1; 2 * d <= *rest.degree(); ++d) {
    h = powmod(h, pp, rest);
    ModPoly g = gcd(rest, h - x_poly(p));
    if (!g.is_one()) {
      out.push_back({g, d});
      rest = rest / g;
      h = h % rest;
    }
  }
  if (*rest.degree() > 0) out.push_back({rest, *rest.degree()});
  return out;
}

ModPoly random_poly(u64 p, std::size_t below_degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<u64> dist(0, p - 1);
  std::vector<u64> c(below_degree);
  for (auto& x : c) x = dist(rng);
  return ModPoly(p, std::move(c));
}

void equal_degree(const ModPoly& f, std::size_t d, std::mt19937_64& rng, std::vector<ModPoly>& out) {
  const std::size_t n = *f.degree();
  if (n == d) {
    out.push_back(f);
    return;
  }
  const u64 p = f.modulus();
  BigInt half;
  if (p != 2) {
    mpz_ui_pow_ui(half.get_mpz_t(), p, d);
    half = (half - 1) / 2;
  }
  while (true) {
    const ModPoly a = random_poly(p, n, rng);
    if (!a.degree() || *a.degree() == 0) continue;
    ModPoly b(p);
    if (p != 2) {
      b = powmod(a, half, f) - one_poly(p);
    } else {
      // Absolute trace a + a^2 + ... + a^(2^(d-1)).
      ModPoly t = a;
      b = a;
      for (std::size_t i = 1; i < d; ++i) {
        t = mulmod(t, t, f);
        b = b + t;
      }
    }
    const ModPoly g = gcd(b, f);
    if (g.is_zero() || !g.degree() || *g.degree() == 0 || *g.degree() == n) continue;
    equal_degree(g, d, rng, out);
    equal_degree(f / g, d, rng, out);
    return;
  }
}

std::uint64_t seed_for(const ModPoly& f) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  mix(f.modulus());
  for (auto c : f.coeffs()) mix(c);
  return h;
}

bool factor_less(const ModFactor& a, const ModFactor& b) {
  const auto& ca = a.poly.coeffs();
  const auto& cb = b.poly.coeffs();
  if (ca.size() != cb.size()) return ca.size() < cb.size();
  if (!std::equal(ca.rbegin(), ca.rend(), cb.rbegin())) {
    return std::lexicographical_compare(ca.rbegin(), ca.rend(), cb.rbegin(), cb.rend());
  }
  return a.multiplicity < b.multiplicity;
}

}  // namespace

ModPoly::ModPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
  if (p < 2) throw std::invalid_argument("modulus must be a prime");
  for (auto& x : c_) x %= p_;
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ModPoly ModPoly::monic() const {
  if (c_.empty()) return *this;
  const u64 inv = inv_mod(c_.back(), p_);
  std::vector<u64> r(c_);
  for (auto& x : r) x = mul_mod(x, inv, p_);
  return ModPoly(p_, std::move(r));
}

ModPoly ModPoly::derivative() const {
  if (c_.size() <= 1) return ModPoly(p_);
  std::vector<u64> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = mul_mod(c_[i], i % p_, p_);
  return ModPoly(p_, std::move(d));
}

std::uint64_t ModPoly::eval(std::uint64_t a) const {
  u64 acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = add_mod(mul_mod(acc, a % p_, p_), *it, p_);
  return acc;
}

ModPoly operator+(const ModPoly& a, const ModPoly& b) {
  check_same_field(a, b);
  const u64 p = a.modulus();
  std::vector<u64> r(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) r[i] = a.coeffs()[i];
  for (std::size_t i = 0; i < b.coeffs().size(); ++i) r[i] = add_mod(r[i], b.coeffs()[i], p);
  return ModPoly(p, std::move(r));
}

ModPoly operator-(const ModPoly& a, const ModPoly& b) {
  check_same_field(a, b);
  const u64 p = a.modulus();
  std::vector<u64> r(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) r[i] = a.coeffs()[i];
  for (std::size_t i = 0; i < b.coeffs().size(); ++i) r[i] = sub_mod(r[i], b.coeffs()[i], p);
  return ModPoly(p, std::move(r));
}

ModPoly operator*(const ModPoly& a, const ModPoly& b) {
  check_same_field(a, b);
  const u64 p = a.modulus();
  if (a.is_zero() || b.is_zero()) return ModPoly(p);
  std::vector<u64> r(a.coeffs().size() + b.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
      r[i + j] = add_mod(r[i + j], mul_mod(a.coeffs()[i], b.coeffs()[j], p), p);
    }
  }
  return ModPoly(p, std::move(r));
}

std::string ModPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k] == 0) continue;
    if (!first) out << " + ";
    first = false;
    if (k == 0) {
      out << c_[k];
      continue;
    }
    if (c_[k] != 1) out << c_[k] << "*";
    out << "x";
    if (k > 1) out << "^" << k;
  }
  return out.str();
}

std::pair<ModPoly, ModPoly> divmod(const ModPoly& f, const ModPoly& g) {
  check_same_field(f, g);
  if (g.is_zero()) throw std::domain_error("polynomial division by zero");
  const u64 p = f.modulus();
  std::vector<u64> rem = f.coeffs();
  const std::size_t dg = *g.degree();
  if (rem.size() <= dg) return {ModPoly(p), f};
  std::vector<u64> quo(rem.size() - dg, 0);
  const u64 inv = inv_mod(g.leading(), p);
  for (std::size_t k = rem.size(); k-- > dg;) {
    if (rem[k] == 0) continue;
    const u64 q = mul_mod(rem[k], inv, p);
    quo[k - dg] = q;
    for (std::size_t j = 0; j <= dg; ++j) {
      rem[k - dg + j] = sub_mod(rem[k - dg + j], mul_mod(q, g.coeffs()[j], p), p);
    }
  }
  return {ModPoly(p, std::move(quo)), ModPoly(p, std::move(rem))};
}

ModPoly operator%(const ModPoly& f, const ModPoly& g) { return divmod(f, g).second; }
ModPoly operator/(const ModPoly& f, const ModPoly& g) { return divmod(f, g).first; }

ModPoly gcd(const ModPoly& a, const ModPoly& b) {
  ModPoly x = a, y = b;
  while (!y.is_zero()) {
    ModPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ModPoly powmod(const ModPoly& base, const BigInt& e, const ModPoly& m) {
  if (e < 0) throw std::invalid_argument("negative exponent");
  const u64 p = m.modulus();
  ModPoly result = one_poly(p) % m;
  ModPoly b = base % m;
  const std::size_t bits = e == 0 ? 0 : mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mulmod(result, result, m);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mulmod(result, b, m);
  }
  return result;
}

ModPoly reduce_mod(const IntPoly& f, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  std::vector<u64> c;
  c.reserve(f.coeffs().size());
  for (const auto& a : f.coeffs()) c.push_back(mpz_fdiv_ui(a.get_mpz_t(), p));
  return ModPoly(p, std::move(c));
}

FactorizationModP factor_modp(const ModPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("cannot factor the zero polynomial");
  const u64 p = f.modulus();
  FactorizationModP result{p, f.leading(), {}};
  const ModPoly g = f.monic();
  std::mt19937_64 rng(seed_for(g));

  std::vector<ModFactor> squarefree;
  squarefree_decompose(g, 1, squarefree);
  for (const auto& part : squarefree) {
    for (const auto& block : distinct_degree(part.poly)) {
      std::vector<ModPoly> irreducibles;
      equal_degree(block.poly, block.degree, rng, irreducibles);
      for (auto& q : irreducibles) result.factors.push_back({q.monic(), part.multiplicity});
    }
  }
  std::sort(result.factors.begin(), result.factors.end(), factor_less);
  return result;
}

ModPoly expand(const FactorizationModP& fac) {
  ModPoly r(fac.p, {fac.unit});
  for (const auto& f : fac.factors) {
    for (unsigned i = 0; i < f.multiplicity; ++i) r = r * f.poly;
  }
  return r;
}

bool is_irreducible_modp(const ModPoly& f) {
  if (!f.degree() || *f.degree() == 0) return false;
  const ModPoly g = f.monic();
  const std::size_t n = *g.degree();
  if (n == 1) return true;
  const u64 p = g.modulus();
  const ModPoly x = x_poly(p);
  if (frobenius_power(x, static_cast<unsigned>(n), g) != x % g) return false;
  for (const auto& [l, e] : factor_integer(BigInt(static_cast<unsigned long>(n)))) {
    const unsigned k = static_cast<unsigned>(n / l.get_ui());
    const ModPoly h = frobenius_power(x, k, g);
    if (!gcd(h - x, g).is_one()) return false;
  }
  return true;
}

DegreePattern degree_multiset(const IntPoly& f, std::uint64_t p) {
  const ModPoly g = reduce_mod(f, p);
  DegreePattern pattern;
  if (g.is_zero()) return pattern;
  const auto fac = factor_modp(g);
  pattern.squarefree = true;
  for (const auto& q : fac.factors) {
    for (unsigned i = 0; i < q.multiplicity; ++i) pattern.degrees.push_back(*q.poly.degree());
    if (q.multiplicity > 1) pattern.squarefree = false;
  }
  std::sort(pattern.degrees.begin(), pattern.degrees.end());
  return pattern;
}

OracleResult dedekind_irreducibility_oracle(const IntPoly& f, std::span<const std::uint64_t> primes) {
  if (!f.is_monic()) throw std::invalid_argument("oracle needs a monic polynomial");
  const std::size_t n = *f.degree();
  OracleResult result;
  // achievable[d]: a proper factor of degree d is consistent with every usable prime so far.
  std::vector<bool> achievable(n + 1, true);
  if (n >= 1) {
    achievable[0] = false;
    achievable[n] = false;
  }
  for (const u64 p : primes) {
    const ModPoly g = reduce_mod(f, p);
    if (g.degree() != f.degree()) {
      result.skipped.push_back({p, "degree drops mod p"});
      continue;
    }
    const DegreePattern pattern = degree_multiset(f, p);
    if (!pattern.squarefree) {
      result.skipped.push_back({p, "not squarefree mod p"});
      continue;
    }
    std::vector<bool> sums(n + 1, false);
    sums[0] = true;
    for (const auto d : pattern.degrees) {
      for (std::size_t s = n; s >= d && s > 0; --s) {
        if (sums[s - d]) sums[s] = true;
      }
    }
    for (std::size_t d = 0; d <= n; ++d) achievable[d] = achievable[d] && sums[d];
    result.used.push_back({p, pattern.degrees});
  }
  if (result.used.empty()) {
    result.reason = "no usable prime";
    return result;
  }
  std::vector<std::size_t> left;
  for (std::size_t d = 1; d < n; ++d) {
    if (achievable[d]) left.push_back(d);
  }
  if (left.empty()) {
    result.verdict = OracleVerdict::irreducible;
    result.reason = "no proper factor degree is compatible with every usable prime";
  } else {
    std::ostringstream msg;
    msg << "factor degrees still compatible:";
    for (auto d : left) msg << " " << d;
    result.reason = msg.str();
  }
  return result;
}

std::vector<std::uint64_t> usable_primes(const IntPoly& f, std::size_t count, std::uint64_t above,
                                         std::uint64_t limit) {
  std::vector<u64> out;
  for (u64 p = next_prime(above); p < limit && out.size() < count; p = next_prime(p)) {
    if (reduce_mod(f, p).degree() != f.degree()) continue;
    if (degree_multiset(f, p).squarefree) out.push_back(p);
  }
  return out;
}

std::optional<BigInt> eisenstein_check(const IntPoly& f) {
  if (!f.is_monic()) throw std::invalid_argument("Eisenstein check needs a monic polynomial");
  const auto& c = f.coeffs();
  if (c.size() < 2 || c[0] == 0) return std::nullopt;
  for (const auto& q : prime_divisors(c[0])) {
    const bool divides_all = std::all_of(c.begin(), c.end() - 1, [&](const BigInt& a) {
      return mpz_divisible_p(a.get_mpz_t(), q.get_mpz_t()) != 0;
    });
    if (!divides_all) continue;
    const BigInt q2 = q * q;
    if (mpz_divisible_p(c[0].get_mpz_t(), q2.get_mpz_t()) == 0) return q;
  }
  return std::nullopt;
}

}  // namespace taylorcert
