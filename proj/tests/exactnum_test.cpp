#include <gtest/gtest.h>

#include <random>

#include "minkowski/exactnum.hpp"
#include "minkowski/polynomial.hpp"

using namespace minkowski;

TEST(ExactNum, GcdLcmAndPowers) {
  EXPECT_EQ(gcd(ExactInt(12), ExactInt(18)), 6);
  EXPECT_EQ(lcm(ExactInt(4), ExactInt(6)), 12);
  EXPECT_EQ(pow_int(ExactInt(3), 40), ExactInt("12157665459056928801"));
  EXPECT_EQ(powmod(ExactInt(2), ExactInt(10), ExactInt(1000)), 24);
}

TEST(ExactNum, ResidueOfRational) {
  EXPECT_EQ(residue_mod(ExactRat(1, 2), ExactInt(3)), 2);
  EXPECT_EQ(residue_mod(ExactRat(-1), ExactInt(5)), 4);
  EXPECT_THROW(residue_mod(ExactRat(1, 3), ExactInt(3)), input_error);
}

TEST(ExactNum, Primality) {
  const auto ps = primes_below(30);
  EXPECT_EQ(ps, (std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29}));
  EXPECT_TRUE(is_prime(ExactInt("170141183460469231731687303715884105727")));  // 2^127 - 1
  EXPECT_FALSE(is_prime(ExactInt("170141183460469231731687303715884105729")));
  EXPECT_FALSE(is_prime(std::uint64_t{1}));
  EXPECT_THROW(require_prime(ExactInt(9)), input_error);
}

TEST(ExactNum, ValuationsAndLegendre) {
  EXPECT_EQ(valuation(ExactInt(5760), ExactInt(2)), 7U);
  EXPECT_EQ(p_part(ExactInt(5760), ExactInt(3)).part, 9);
  EXPECT_EQ(factorial_valuation(100, 5), 24U);
  EXPECT_EQ(factorial_p_part(10, ExactInt(2)).value(), 256);
}

TEST(ExactNum, FactorizationRoundTrip) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint64_t> dist(1, 1'000'000'000'000ULL);
  for (int i = 0; i < 200; ++i) {
    const ExactInt v(dist(rng));
    const Factorization f = Factorization::of(v);
    EXPECT_EQ(f.value(), v);
    for (const auto& [p, e] : f.entries()) EXPECT_TRUE(is_prime(p));
  }
  // Product of two large primes exercises Pollard rho.
  const ExactInt a("1000000007"), b("998244353");
  const Factorization f = Factorization::of(a * b);
  EXPECT_EQ(f.exponent(a), 1U);
  EXPECT_EQ(f.exponent(b), 1U);
  EXPECT_THROW(Factorization::of(ExactInt(0)), input_error);
}

TEST(ExactNum, FactorizationAlgebra) {
  const Factorization a = Factorization::of(ExactInt(5760)), b = Factorization::of(ExactInt(48));
  EXPECT_EQ(a.to_string(), "2^7 · 3^2 · 5");
  EXPECT_EQ(Factorization().to_string(), "1");
  EXPECT_TRUE(b.divides(a));
  EXPECT_FALSE(a.divides(b));
  EXPECT_EQ((a / b).value(), 120);
  EXPECT_THROW(b / a, input_error);
  EXPECT_EQ(Factorization::lcm(a, Factorization::of(ExactInt(7))).value(), 40320);
  EXPECT_EQ(Factorization::factorial(6).value(), 720);
  EXPECT_EQ(a.restricted_to(ExactInt(3)).value(), 9);
  EXPECT_EQ(a.without(ExactInt(2)).value(), 45);
}

TEST(ExactNum, EulerPhiAndOrder) {
  EXPECT_EQ(euler_phi(12), 4U);
  EXPECT_EQ(euler_phi(1), 1U);
  EXPECT_EQ(multiplicative_order(2, 9), 6U);
  EXPECT_EQ(multiplicative_order(10, 7), 6U);
}

TEST(Polynomial, Arithmetic) {
  const RatPolynomial x = RatPolynomial::monomial(ExactRat(1), 1);
  const RatPolynomial p = x * x - RatPolynomial::constant(1);
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p(ExactRat(3)), 8);
  const auto [q, r] = p.divmod(x - RatPolynomial::constant(1));
  EXPECT_EQ(q, x + RatPolynomial::constant(1));
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(RatPolynomial().degree(), -1);
  EXPECT_THROW(p.divmod(RatPolynomial()), input_error);
  const RatPolynomial h{ExactRat(0), ExactRat(1, 8), ExactRat(5, 48)};
  EXPECT_EQ(h.denominator(), 48);
  EXPECT_FALSE(h.has_integer_coefficients());
  EXPECT_EQ(h.multiplied_truncated(h, 2), (RatPolynomial{ExactRat(0), ExactRat(0), ExactRat(1, 64)}));
}
