#include "taylorcert/exact.hpp"

#include <cctype>
#include <sstream>

namespace taylorcert {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const BigInt& z) { return z.get_str(); }

std::string to_string(const Rational& q) { return q.get_str(); }

BigInt parse_bigint(const std::string& text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw std::invalid_argument("expected an integer, got '" + text + "'");
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw std::invalid_argument("expected an integer, got '" + text + "'");
    }
  }
  return BigInt(text[0] == '+' ? text.substr(1) : text, 10);
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_bigint(text));
  return make_rational(parse_bigint(text.substr(0, slash)), parse_bigint(text.substr(slash + 1)));
}

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt isqrt(const BigInt& z) {
  if (z < 0) throw std::domain_error("isqrt of a negative integer");
  if (z < 2) return z;
  // Start above the root: 2^ceil(bits/2) > sqrt(z).
  const std::size_t bits = mpz_sizeinbase(z.get_mpz_t(), 2);
  BigInt x = BigInt(1) << static_cast<mp_bitcnt_t>((bits + 1) / 2);
  while (true) {
    BigInt y = (x + z / x) >> 1;
    if (y >= x) return x;
    x = std::move(y);
  }
}

bool is_perfect_square(const BigInt& z) {
  if (z < 0) return false;
  const BigInt r = isqrt(z);
  return r * r == z;
}

RatPoly to_rational(const IntPoly& f) {
  std::vector<Rational> c;
  c.reserve(f.coeffs().size());
  for (const auto& a : f.coeffs()) c.emplace_back(a);
  return RatPoly(std::move(c));
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& f, const RatPoly& g) {
  if (g.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = f.coeffs();
  const std::size_t dg = *g.degree();
  if (rem.size() <= dg) return {RatPoly{}, f};
  std::vector<Rational> quo(rem.size() - dg, Rational(0));
  const Rational& lead = g.leading();
  for (std::size_t k = rem.size(); k-- > dg;) {
    if (rem[k] == 0) continue;
    Rational q = rem[k] / lead;
    quo[k - dg] = q;
    for (std::size_t j = 0; j <= dg; ++j) rem[k - dg + j] -= q * g.coeffs()[j];
  }
  return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

std::optional<IntPoly> divide_exact(const IntPoly& f, const IntPoly& g) {
  if (!g.is_monic()) throw std::invalid_argument("divide_exact needs a monic divisor");
  std::vector<BigInt> rem = f.coeffs();
  const std::size_t dg = *g.degree();
  if (f.is_zero()) return IntPoly{};
  if (rem.size() <= dg) return std::nullopt;
  std::vector<BigInt> quo(rem.size() - dg, BigInt(0));
  for (std::size_t k = rem.size(); k-- > dg;) {
    BigInt q = rem[k];
    quo[k - dg] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j <= dg; ++j) rem[k - dg + j] -= q * g.coeffs()[j];
  }
  for (std::size_t j = 0; j < dg; ++j) {
    if (rem[j] != 0) return std::nullopt;
  }
  return IntPoly(std::move(quo));
}

Rational eval_exact(const RatPoly& f, const Rational& a) {
  Rational acc(0);
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) acc = acc * a + *it;
  return acc;
}

Rational eval_exact(const IntPoly& f, const Rational& a) {
  Rational acc(0);
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) acc = acc * a + *it;
  return acc;
}

BigInt eval_exact(const IntPoly& f, const BigInt& a) {
  BigInt acc(0);
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) acc = acc * a + *it;
  return acc;
}

namespace {

template <typename Coeff>
std::string format_poly(const DensePoly<Coeff>& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = f.coeffs().size(); k-- > 0;) {
    const Coeff& c = f.coeffs()[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    Coeff mag = negative ? Coeff(-c) : c;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << "*";
    out << "x";
    if (k > 1) out << "^" << k;
  }
  return out.str();
}

}  // namespace

std::string to_string(const IntPoly& f) { return format_poly(f); }
std::string to_string(const RatPoly& f) { return format_poly(f); }

TaylorSpec TaylorSpec::from_coeffs(std::vector<BigInt> coeffs) {
  if (coeffs.size() < 2) throw std::invalid_argument("a Taylor spec needs degree n >= 1");
  if (coeffs.back() != 1) throw std::invalid_argument("a Taylor spec needs c_n = 1");
  return TaylorSpec(std::move(coeffs));
}

TaylorSpec TaylorSpec::exp_sum(unsigned n) {
  if (n == 0) throw std::invalid_argument("exp_sum needs n >= 1");
  std::vector<BigInt> c(n + 1, BigInt(2));
  c[n] = 1;
  return TaylorSpec(std::move(c));
}

TaylorSpec TaylorSpec::truncated_exp(unsigned n) {
  if (n == 0) throw std::invalid_argument("truncated_exp needs n >= 1");
  return TaylorSpec(std::vector<BigInt>(n + 1, BigInt(1)));
}

RatPoly make_taylor_poly(const TaylorSpec& spec) {
  std::vector<Rational> c;
  c.reserve(spec.coeffs().size());
  BigInt fact(1);
  for (std::size_t i = 0; i < spec.coeffs().size(); ++i) {
    if (i > 0) fact *= static_cast<unsigned long>(i);
    c.push_back(make_rational(spec.coeffs()[i], fact));
  }
  return RatPoly(std::move(c));
}

ScaledPoly to_monic_integer(const RatPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("zero polynomial has no monic integer form");
  const std::size_t n = *f.degree();
  const BigInt scale = factorial(n);
  if (f.leading() * scale != 1) {
    throw std::invalid_argument("leading coefficient is not 1/n!");
  }
  std::vector<BigInt> c;
  c.reserve(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    Rational scaled = f.coeffs()[i] * scale;
    if (scaled.get_den() != 1) {
      throw std::invalid_argument("coefficient of x^" + std::to_string(i) +
                                  " does not clear under the factorial scale");
    }
    c.push_back(scaled.get_num());
  }
  return {IntPoly(std::move(c)), scale};
}

IntPoly scaled_taylor_poly(const TaylorSpec& spec) {
  const std::size_t n = spec.degree();
  std::vector<BigInt> c(n + 1);
  // n!/i! built from the top down.
  BigInt ratio(1);
  for (std::size_t i = n + 1; i-- > 0;) {
    c[i] = spec.coeffs()[i] * ratio;
    ratio *= static_cast<unsigned long>(i);
  }
  return IntPoly(std::move(c));
}

}  // namespace taylorcert
