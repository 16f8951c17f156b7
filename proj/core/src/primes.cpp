#include "taylorcert/primes.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace taylorcert {

namespace {

using u64 = std::uint64_t;
__extension__ typedef unsigned __int128 u128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

constexpr std::uint64_t kTrialLimit = 1'000'000;

const std::vector<u64>& small_primes() {
  static const std::vector<u64> primes = primes_up_to(kTrialLimit);
  return primes;
}

bool probably_prime(const BigInt& n) {
  if (n.fits_ulong_p()) return is_prime(n.get_ui());
  // Beyond 64 bits GMP's BPSW-backed test is used.
  return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

// Brent's variant of Pollard rho; returns a nontrivial factor of composite n.
BigInt pollard_brent(const BigInt& n) {
  if (mpz_even_p(n.get_mpz_t())) return BigInt(2);
  for (unsigned long c = 1;; ++c) {
    BigInt y = 2, x, q = 1, g = 1, ys;
    unsigned long r = 1;
    const unsigned long m = 128;
    auto f = [&](const BigInt& v) {
      BigInt t = v * v + c;
      mpz_mod(t.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
      return t;
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          BigInt d = x - y;
          q = q * abs(d);
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      }
      r <<= 1;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        BigInt d = abs(BigInt(x - ys));
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_large(const BigInt& n, std::vector<BigInt>& out) {
  if (n == 1) return;
  if (probably_prime(n)) {
    out.push_back(n);
    return;
  }
  const BigInt d = pollard_brent(n);
  split_large(d, out);
  split_large(BigInt(n / d), out);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t next_prime(std::uint64_t n) {
  u64 candidate = n + 1;
  while (!is_prime(candidate)) ++candidate;
  return candidate;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<u64> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(limit + 1, false);
  for (u64 i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

std::vector<std::pair<BigInt, unsigned>> factor_integer(const BigInt& z) {
  if (z == 0) throw std::domain_error("cannot factor zero");
  BigInt n = abs(z);
  std::vector<std::pair<BigInt, unsigned>> result;
  for (u64 p : small_primes()) {
    if (BigInt(p) * p > n) break;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p) == 0) continue;
    unsigned e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
      ++e;
    }
    result.emplace_back(BigInt(p), e);
  }
  if (n > 1) {
    std::vector<BigInt> large;
    split_large(n, large);
    std::sort(large.begin(), large.end());
    for (const auto& q : large) {
      if (!result.empty() && result.back().first == q) {
        ++result.back().second;
      } else {
        result.emplace_back(q, 1);
      }
    }
  }
  return result;
}

std::vector<BigInt> prime_divisors(const BigInt& z) {
  std::vector<BigInt> out;
  for (auto& [p, e] : factor_integer(z)) out.push_back(p);
  return out;
}

std::string format_factorization(int sign, const std::vector<std::pair<BigInt, unsigned>>& factors) {
  std::ostringstream out;
  if (sign < 0) out << "-";
  if (factors.empty()) {
    out << "1";
    return out.str();
  }
  bool first = true;
  for (const auto& [p, e] : factors) {
    if (!first) out << "*";
    first = false;
    out << p.get_str();
    if (e > 1) out << "^" << e;
  }
  return out.str();
}

}  // namespace taylorcert
