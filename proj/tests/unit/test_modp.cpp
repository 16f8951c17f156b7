#include "doctest.h"

#include <random>
#include <set>

#include "taylorcert/modp.hpp"
#include "taylorcert/primes.hpp"

using namespace taylorcert;

namespace {

IntPoly ints(std::initializer_list<long> c) {
  std::vector<BigInt> v;
  for (long x : c) v.emplace_back(x);
  return IntPoly(std::move(v));
}

IntPoly scaled_exp_sum(unsigned n) { return scaled_taylor_poly(TaylorSpec::exp_sum(n)); }

std::vector<std::string> factor_strings(const FactorizationModP& fac) {
  std::vector<std::string> out;
  for (const auto& f : fac.factors) {
    for (unsigned m = 0; m < f.multiplicity; ++m) out.push_back(f.poly.str());
  }
  return out;
}

ModPoly random_modpoly(std::mt19937_64& rng, std::uint64_t p, int max_degree) {
  std::uniform_int_distribution<int> deg(1, max_degree);
  std::uniform_int_distribution<std::uint64_t> coef(0, p - 1);
  std::vector<std::uint64_t> c(deg(rng) + 1);
  for (auto& x : c) x = coef(rng);
  if (c.back() == 0) c.back() = 1;
  return ModPoly(p, std::move(c));
}

}  // namespace

TEST_CASE("reduce_mod") {
  CHECK(reduce_mod(ints({12, 1}), 13) == ModPoly(13, {12, 1}));
  CHECK(reduce_mod(scaled_exp_sum(5), 5) == ModPoly(5, {0, 0, 0, 0, 0, 1}));
  CHECK(reduce_mod(scaled_exp_sum(6), 13) == ModPoly(13, {10, 10, 5, 6, 8, 12, 1}));
  CHECK(reduce_mod(ints({-1, 5}), 5) == ModPoly(5, {4}));
}

TEST_CASE("arithmetic") {
  const ModPoly f(7, {1, 2, 3});
  const ModPoly g(7, {6, 1});
  auto [q, r] = divmod(f, g);
  CHECK(q * g + r == f);
  CHECK(gcd(f * g, g * g) == g.monic());
  CHECK(powmod(ModPoly(7, {0, 1}), BigInt(7), g) == ModPoly(7, {1}));
  CHECK_THROWS(divmod(f, ModPoly(7)));
  CHECK(ModPoly(17, {4, 9, 1}).str() == "x^2 + 9*x + 4");
}

TEST_CASE("factor_modp reproduces the quoted factorizations") {
  CHECK(factor_strings(factor_modp(reduce_mod(scaled_exp_sum(5), 17))) ==
        std::vector<std::string>{"x^2 + 9*x + 4", "x^3 + x^2 + 10*x + 9"});
  CHECK(factor_strings(factor_modp(reduce_mod(scaled_exp_sum(5), 61))) ==
        std::vector<std::string>{"x + 14", "x^4 + 57*x^3 + 35*x^2 + 57*x + 52"});
  CHECK(factor_strings(factor_modp(reduce_mod(scaled_exp_sum(6), 47))) ==
        std::vector<std::string>{"x + 45", "x^2 + 2*x + 17", "x^3 + 12*x^2 + 24"});
  CHECK(factor_strings(factor_modp(reduce_mod(scaled_exp_sum(6), 13))) ==
        std::vector<std::string>{"x + 12", "x^5 + 8*x^3 + x^2 + 6*x + 3"});
  CHECK(factor_strings(factor_modp(reduce_mod(scaled_exp_sum(7), 13))) ==
        std::vector<std::string>{"x^2 + 5*x + 10", "x^5 + 9*x^4 + 3*x^3 + 3*x^2 + 10*x + 7"});
  CHECK(factor_strings(factor_modp(reduce_mod(scaled_exp_sum(7), 61))) ==
        std::vector<std::string>{"x + 50", "x^6 + 25*x^5 + 54*x^4 + 38*x^3 + 24*x^2 + 58*x + 43"});
}

TEST_CASE("factor_modp with repeated factors and small fields") {
  const ModPoly x_plus_1(2, {1, 1});
  const ModPoly f = x_plus_1 * x_plus_1 * x_plus_1 * ModPoly(2, {1, 1, 1});
  const auto fac = factor_modp(f);
  REQUIRE(fac.factors.size() == 2);
  CHECK(fac.factors[0].multiplicity == 3);
  CHECK(expand(fac) == f);
  // x^p - x splits into all linear factors.
  std::vector<std::uint64_t> c(6, 0);
  c[1] = 4;
  c[5] = 1;
  const auto lin = factor_modp(ModPoly(5, c));
  CHECK(lin.factors.size() == 5);
  CHECK_THROWS_AS(factor_modp(ModPoly(5)), std::invalid_argument);
}

TEST_CASE("factorization properties on random inputs") {
  std::mt19937_64 rng(424242);
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 13ull, 101ull, 65537ull}) {
    for (int i = 0; i < 80; ++i) {
      ModPoly f = random_modpoly(rng, p, 10);
      if (i % 4 == 0) f = f * random_modpoly(rng, p, 3) * random_modpoly(rng, p, 3);
      const auto fac = factor_modp(f);
      REQUIRE(expand(fac) == f);
      std::size_t total = 0;
      for (const auto& g : fac.factors) {
        REQUIRE(g.poly.leading() == 1);
        REQUIRE(is_irreducible_modp(g.poly));
        total += *g.poly.degree() * g.multiplicity;
      }
      REQUIRE(total == *f.degree());
      for (std::size_t k = 1; k < fac.factors.size(); ++k) {
        const auto& a = fac.factors[k - 1].poly;
        const auto& b = fac.factors[k].poly;
        REQUIRE((a.degree() < b.degree() ||
                 (a.degree() == b.degree() &&
                  std::lexicographical_compare(a.coeffs().rbegin(), a.coeffs().rend(), b.coeffs().rbegin(),
                                               b.coeffs().rend()))));
      }
      const auto again = factor_modp(f);
      REQUIRE(factor_strings(again) == factor_strings(fac));
    }
  }
}

TEST_CASE("is_irreducible_modp agrees with root counting in low degree") {
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
    for (std::uint64_t a = 0; a < p; ++a) {
      for (std::uint64_t b = 0; b < p; ++b) {
        for (std::uint64_t c = 0; c < p; ++c) {
          const ModPoly f(p, {c, b, a, 1});
          bool has_root = false;
          for (std::uint64_t x = 0; x < p; ++x) has_root = has_root || f.eval(x) == 0;
          REQUIRE(is_irreducible_modp(f) == !has_root);
        }
      }
    }
  }
}

TEST_CASE("degree_multiset") {
  auto d = degree_multiset(scaled_exp_sum(5), 17);
  CHECK(d.degrees == std::vector<std::size_t>{2, 3});
  CHECK(d.squarefree);
  d = degree_multiset(scaled_exp_sum(7), 13);
  CHECK(d.degrees == std::vector<std::size_t>{2, 5});
  d = degree_multiset(scaled_exp_sum(7), 61);
  CHECK(d.degrees == std::vector<std::size_t>{1, 6});
  CHECK(d.squarefree);

  SUBCASE("squarefree flag agrees with gcd(f, f')") {
    for (unsigned n = 2; n <= 30; ++n) {
      const IntPoly f = scaled_exp_sum(n);
      for (std::uint64_t p : primes_up_to(60)) {
        const auto pattern = degree_multiset(f, p);
        const ModPoly fp = reduce_mod(f, p);
        const bool coprime = gcd(fp, fp.derivative()).is_one();
        REQUIRE(pattern.squarefree == coprime);
        std::size_t total = 0;
        for (auto k : pattern.degrees) total += k;
        REQUIRE(total == *fp.degree());
      }
    }
  }
}

TEST_CASE("dedekind_irreducibility_oracle") {
  const std::vector<std::uint64_t> p5{17, 61};
  CHECK(dedekind_irreducibility_oracle(scaled_exp_sum(5), p5).verdict == OracleVerdict::irreducible);
  const std::vector<std::uint64_t> p7{13, 61};
  CHECK(dedekind_irreducibility_oracle(scaled_exp_sum(7), p7).verdict == OracleVerdict::irreducible);
  const std::vector<std::uint64_t> small{5, 7};
  CHECK(dedekind_irreducibility_oracle(ints({2, 3, 1}), small).verdict == OracleVerdict::inconclusive);

  SUBCASE("non-squarefree primes are skipped, not fatal") {
    const std::vector<std::uint64_t> ps{2, 3, 5};
    const auto r = dedekind_irreducibility_oracle(scaled_exp_sum(5), ps);
    CHECK(r.used.empty());
    CHECK(r.skipped.size() == 3);
    CHECK(r.verdict == OracleVerdict::inconclusive);
    CHECK_FALSE(r.reason.empty());
  }
  SUBCASE("never claims irreducible for a product") {
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<long> coef(-9, 9);
    std::uniform_int_distribution<int> deg(1, 5);
    for (int i = 0; i < 500; ++i) {
      auto random_monic = [&] {
        std::vector<BigInt> c(deg(rng) + 1);
        for (auto& x : c) x = coef(rng);
        c.back() = 1;
        return IntPoly(std::move(c));
      };
      const IntPoly f = random_monic() * random_monic();
      const auto ps = usable_primes(f, 8, 1, 2000);
      REQUIRE(dedekind_irreducibility_oracle(f, ps).verdict == OracleVerdict::inconclusive);
    }
  }
}

TEST_CASE("eisenstein_check") {
  CHECK(eisenstein_check(ints({12, 12, 6, 1})) == BigInt(3));
  CHECK(eisenstein_check(ints({24, 12, 6, 1})) == BigInt(3));
  CHECK_FALSE(eisenstein_check(ints({1, 1, 1})).has_value());
  CHECK(eisenstein_check(ints({2, 0, 1})) == BigInt(2));
}
