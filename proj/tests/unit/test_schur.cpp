#include "doctest.h"

#include "taylorcert/padic.hpp"
#include "taylorcert/primes.hpp"
#include "taylorcert/schur.hpp"

using namespace taylorcert;

namespace {

IntPoly ints(std::initializer_list<long> c) {
  std::vector<BigInt> v;
  for (long x : c) v.emplace_back(x);
  return IntPoly(std::move(v));
}

template <class T>
const T* find_step(const IrreducibilityCertificate& cert) {
  for (const auto& s : cert.evidence) {
    if (const T* p = std::get_if<T>(&s)) return p;
  }
  return nullptr;
}

IntPoly product(const std::vector<IntFactor>& factors) {
  IntPoly out = ints({1});
  for (const auto& f : factors) {
    for (unsigned m = 0; m < f.multiplicity; ++m) out = out * f.poly;
  }
  return out;
}

}  // namespace

TEST_CASE("certify_exp_sum small degrees") {
  SUBCASE("degree 2 splits as (x+2)^2 / 2") {
    const auto cert = certify_exp_sum(2);
    CHECK(cert.verdict == Verdict::reducible);
    REQUIRE(cert.factors.size() == 1);
    CHECK(cert.factors[0].poly == ints({2, 1}));
    CHECK(cert.factors[0].multiplicity == 2);
    CHECK(cert.scale == 2);
    CHECK(cert.note == "splits completely into linear factors");
    CHECK(replay_certificate(cert, TaylorSpec::exp_sum(2)));
  }
  SUBCASE("degree 4 is (x+2)(x^3+6x^2+12x+24) / 24") {
    const auto cert = certify_exp_sum(4);
    CHECK(cert.verdict == Verdict::reducible);
    REQUIRE(cert.factors.size() == 2);
    CHECK(cert.factors[0].poly == ints({2, 1}));
    CHECK(cert.factors[1].poly == ints({24, 12, 6, 1}));
    CHECK(cert.scale == 24);
    CHECK(cert.cofactor == CofactorStatus::irreducible);
    const auto* eis = find_step<EisensteinStep>(cert);
    REQUIRE(eis != nullptr);
    CHECK(eis->prime == 3);
    CHECK(replay_certificate(cert, TaylorSpec::exp_sum(4)));
  }
  SUBCASE("degree 5 by the non-power-of-two rule") {
    const auto cert = certify_exp_sum(5);
    CHECK(cert.verdict == Verdict::irreducible);
    const auto* step = find_step<TheoremStep>(cert);
    REQUIRE(step != nullptr);
    CHECK(step->rule == std::string(rule::kNotPowerOfTwo));
  }
  CHECK(certify_exp_sum(1).verdict == Verdict::irreducible);
}

TEST_CASE("certify_exp_sum at powers of two") {
  for (unsigned n : {8u, 16u, 32u, 64u}) {
    const auto cert = certify_exp_sum(n);
    CHECK(cert.verdict == Verdict::irreducible);
    const auto* slope = find_step<SlopeStep>(cert);
    REQUIRE(slope != nullptr);
    CHECK(slope->cert.slope == -1);
    const auto* search = find_step<RootSearchStep>(cert);
    REQUIRE(search != nullptr);
    CHECK(search->candidates == std::vector<BigInt>{BigInt(2), BigInt(-2)});
    CHECK(search->roots.empty());
    int positivity = 0;
    for (const auto& s : cert.evidence) {
      if (const auto* p = std::get_if<PositivityStep>(&s)) {
        CHECK(p->value > 0);
        ++positivity;
      }
    }
    CHECK(positivity == 2);
    CHECK(replay_certificate(cert, TaylorSpec::exp_sum(n)));
  }
}

TEST_CASE("irreducible exactly outside {2, 4} for n <= 120") {
  for (unsigned n = 1; n <= 120; ++n) {
    const auto cert = certify_exp_sum(n);
    const bool reducible = n == 2 || n == 4;
    REQUIRE(cert.verdict == (reducible ? Verdict::reducible : Verdict::irreducible));
    REQUIRE(replay_certificate(cert, TaylorSpec::exp_sum(n)));
    if (reducible) REQUIRE(product(cert.factors) == scaled_taylor_poly(TaylorSpec::exp_sum(n)));
  }
}

TEST_CASE("the degree-pattern oracle confirms irreducibility for 3 <= n <= 40") {
  for (unsigned n = 3; n <= 40; ++n) {
    if (n == 4) continue;
    const IntPoly f = scaled_taylor_poly(TaylorSpec::exp_sum(n));
    OracleResult r;
    for (std::size_t count = 8; count <= 64; count *= 2) {
      const auto primes = usable_primes(f, count, n);
      r = dedekind_irreducibility_oracle(f, primes);
      if (r.verdict == OracleVerdict::irreducible) break;
    }
    CAPTURE(n);
    CHECK(r.verdict == OracleVerdict::irreducible);
  }
}

TEST_CASE("certify_schur on other families") {
  SUBCASE("truncated exponentials are irreducible for 2 <= n <= 60") {
    for (unsigned n = 2; n <= 60; ++n) {
      const auto cert = certify_schur(TaylorSpec::truncated_exp(n));
      REQUIRE(cert.verdict == Verdict::irreducible);
      REQUIRE(replay_certificate(cert, TaylorSpec::truncated_exp(n)));
    }
  }
  SUBCASE("unit constant at n = 8 uses the slope in (0, 1)") {
    const auto cert = certify_schur(TaylorSpec::truncated_exp(8), 0, 1);
    const auto* slope = find_step<SlopeStep>(cert);
    REQUIRE(slope != nullptr);
    CHECK(slope->cert.slope == make_rational(BigInt(-7), BigInt(8)));
    CHECK(slope->cert.candidate_exponents.empty());
  }
  SUBCASE("constant not a power of two is refused") {
    const auto spec = TaylorSpec::from_coeffs({BigInt(3), BigInt(1), BigInt(1)});
    CHECK(certify_schur(spec).verdict == Verdict::refused);
    CHECK(certify_schur(TaylorSpec::exp_sum(3), 2, 1).verdict == Verdict::refused);
  }
  SUBCASE("negative constant") {
    // 2 * (-2 + x^2/2) = x^2 - 4 = (x - 2)(x + 2)
    const auto spec = TaylorSpec::from_coeffs({BigInt(-2), BigInt(0), BigInt(1)});
    const auto cert = certify_schur(spec);
    CHECK(cert.verdict == Verdict::reducible);
    CHECK(product(cert.factors) == ints({-4, 0, 1}));
    CHECK(replay_certificate(cert, spec));
  }
  SUBCASE("root-search bound covers the constant term's 2-adic valuation") {
    for (unsigned s = 1; s <= 5; ++s) {
      const unsigned n = 1u << s;
      for (unsigned k = 0; k <= 6; ++k) {
        std::vector<BigInt> c(n + 1, BigInt(1));
        c[0] = BigInt(1) << k;
        const auto spec = TaylorSpec::from_coeffs(c);
        const auto cert = certify_schur(spec);
        REQUIRE(cert.verdict != Verdict::refused);
        REQUIRE(replay_certificate(cert, spec));
        if (const auto* search = find_step<RootSearchStep>(cert)) {
          REQUIRE(Valuation(search->t_bound) == v_p(cert.scaled.coeff(0), 2));
        }
      }
    }
  }
}

TEST_CASE("replay rejects tampered certificates") {
  auto cert = certify_exp_sum(4);
  cert.factors[1].poly = ints({25, 12, 6, 1});
  CHECK_FALSE(replay_certificate(cert, TaylorSpec::exp_sum(4)));

  auto cert8 = certify_exp_sum(8);
  for (auto& s : cert8.evidence) {
    if (auto* p = std::get_if<PositivityStep>(&s)) p->value = -p->value;
  }
  CHECK_FALSE(replay_certificate(cert8, TaylorSpec::exp_sum(8)));
  CHECK_FALSE(replay_certificate(certify_exp_sum(6), TaylorSpec::exp_sum(5)));
}

TEST_CASE("value_at_minus_two") {
  CHECK(value_at_minus_two(2).value == 0);
  CHECK(value_at_minus_two(4).value == 0);
  const auto v6 = value_at_minus_two(6);
  CHECK(v6.value == make_rational(BigInt(2), BigInt(9)));
  REQUIRE(v6.increment.has_value());
  CHECK(*v6.increment == make_rational(BigInt(2), BigInt(9)));
  CHECK(v6.increment_matches);
  for (unsigned n = 6; n <= 100; n += 2) {
    const auto v = value_at_minus_two(n);
    REQUIRE(v.value > 0);
    REQUIRE(v.increment_matches);
  }
  CHECK_THROWS_AS(value_at_minus_two(5), std::invalid_argument);
}

TEST_CASE("sylvester_witness") {
  CHECK(sylvester_witness(1, 1).element == 2);
  CHECK(sylvester_witness(1, 1).prime == 2);
  CHECK(sylvester_witness(5, 3).element == 7);
  CHECK(sylvester_witness(5, 3).prime == 7);
  CHECK(sylvester_witness(8, 2).element == 9);
  CHECK(sylvester_witness(8, 2).prime == 3);
  for (std::uint64_t l = 1; l <= 300; ++l) {
    for (std::uint64_t k = 1; k <= l; ++k) {
      const auto w = sylvester_witness(l, k);
      REQUIRE(w.element > l);
      REQUIRE(w.element <= l + k);
      REQUIRE(w.prime > k);
      REQUIRE(w.element % w.prime == 0);
      REQUIRE(is_prime(w.prime));
    }
  }
  CHECK_THROWS_AS(sylvester_witness(3, 4), std::invalid_argument);
}
