#include "taylorcert/padic.hpp"

#include <stdexcept>

#include "taylorcert/primes.hpp"

namespace taylorcert {

namespace {

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
}

long remove_factor(BigInt& m, std::uint64_t p) {
  const BigInt pp(static_cast<unsigned long>(p));
  return static_cast<long>(mpz_remove(m.get_mpz_t(), m.get_mpz_t(), pp.get_mpz_t()));
}

}  // namespace

long Valuation::value() const {
  if (!value_) throw std::domain_error("valuation is infinite");
  return *value_;
}

std::string Valuation::str() const { return value_ ? std::to_string(*value_) : "inf"; }

Valuation v_p(const BigInt& m, std::uint64_t p) {
  require_prime(p);
  if (m == 0) return Valuation::infinity();
  BigInt work = m;
  return Valuation(remove_factor(work, p));
}

Valuation v_p(const Rational& m, std::uint64_t p) {
  require_prime(p);
  if (m == 0) return Valuation::infinity();
  BigInt num = m.get_num();
  BigInt den = m.get_den();
  return Valuation(remove_factor(num, p) - remove_factor(den, p));
}

std::uint64_t digit_sum(std::uint64_t n, std::uint64_t p) {
  if (p < 2) throw std::invalid_argument("digit_sum needs base >= 2");
  std::uint64_t s = 0;
  while (n > 0) {
    s += n % p;
    n /= p;
  }
  return s;
}

std::uint64_t legendre_factorial(std::uint64_t n, std::uint64_t p) {
  require_prime(p);
  return (n - digit_sum(n, p)) / (p - 1);
}

int legendre_symbol(const BigInt& a, std::uint64_t p) {
  require_prime(p);
  if (p == 2) throw std::invalid_argument("legendre_symbol needs an odd prime");
  const BigInt pp(static_cast<unsigned long>(p));
  BigInt r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), pp.get_mpz_t());
  if (r == 0) return 0;
  const BigInt e((p - 1) / 2);
  mpz_powm(r.get_mpz_t(), r.get_mpz_t(), e.get_mpz_t(), pp.get_mpz_t());
  return r == 1 ? 1 : -1;
}

}  // namespace taylorcert
