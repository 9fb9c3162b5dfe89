// Worked values for every public operation, one TEST per operation.

#include <gtest/gtest.h>

#include "minkowski/acceptance.hpp"
#include "minkowski/certificate.hpp"
#include "minkowski/finfield.hpp"
#include "minkowski/lattice.hpp"
#include "minkowski/seqcheck.hpp"

using namespace minkowski;

namespace {

GroupClosure<ExactRat> trivial_group(std::size_t n) {
  return closure(std::vector<RatMatrix>{RatMatrix::identity(n, ExactRat(1))});
}

}  // namespace

TEST(Examples, PPart) {
  EXPECT_EQ(p_part(ExactInt(5760), ExactInt(2)).valuation, 7U);
  EXPECT_EQ(p_part(ExactInt(5760), ExactInt(2)).part, 128);
  EXPECT_EQ(p_part(ExactInt(7), ExactInt(2)).part, 1);
  EXPECT_EQ(p_part(ExactInt(48), ExactInt(3)).valuation, 1U);
  EXPECT_EQ(p_part(ExactInt(48), ExactInt(3)).part, 3);
}

TEST(Examples, FactorialPPart) {
  EXPECT_EQ(factorial_p_part(6, ExactInt(3)).value(), 9);
  EXPECT_EQ(factorial_p_part(1, ExactInt(2)).value(), 1);
  EXPECT_EQ(factorial_p_part(10, ExactInt(2)).exponent(ExactInt(2)), 8U);
}

TEST(Examples, CycloField) {
  EXPECT_EQ(cyclo_field(5)->polynomial(), (std::vector<ExactInt>{1, 1, 1, 1, 1}));
  EXPECT_EQ(cyclo_field(4)->degree(), 2U);
  EXPECT_EQ(cyclo_field(1)->degree(), 1U);
}

TEST(Examples, CycloTrace) {
  EXPECT_EQ(cyclo_trace_to_Q(CycloElem::zeta(cyclo_field(4))), 0);
  EXPECT_EQ(cyclo_trace_to_Q(CycloElem::zeta(cyclo_field(5))), -1);
  EXPECT_EQ(cyclo_trace_to_Q(CycloElem(cyclo_field(4), ExactRat(3))), 6);
}

TEST(Examples, MinkowskiPPart) {
  EXPECT_EQ(minkowski_p_part(2, 2).value(), 8);
  EXPECT_EQ(minkowski_p_part(4, 5).value(), 5);
  EXPECT_EQ(minkowski_p_part(3, 7).value(), 1);
  EXPECT_EQ(minkowski_bound(2).to_string(), "2^3 · 3");
  EXPECT_EQ(minkowski_bound(1).to_string(), "2");
}

TEST(Examples, RecursionProducts) {
  EXPECT_EQ(minkowski_recursion_check(1).product_term.value(), 6);
  EXPECT_EQ(minkowski_recursion_check(2).product_term.value(), 60);
  const RecursionCheck r3 = minkowski_recursion_check(3);
  EXPECT_TRUE(r3.holds);
  EXPECT_EQ(r3.product_term.value(), ExactInt(2903040) / (2 * ExactInt(11520)));
}

TEST(Examples, SchurParams) {
  const SchurParams a = schur_params(SchurField::cyclotomic(4), 2);
  EXPECT_EQ(a.m, 2U);
  EXPECT_EQ(a.t, 1U);
  const SchurParams b = schur_params(SchurField::rational(), 3);
  EXPECT_EQ(b.m, 1U);
  EXPECT_EQ(b.t, 2U);
  const SchurParams c = schur_params(SchurField::cyclotomic(12), 5);
  EXPECT_EQ(c.m, 1U);
  EXPECT_EQ(c.t, 4U);
}

TEST(Examples, SchurBound) {
  EXPECT_EQ(schur_bound(1, SchurField::cyclotomic(1)).value(), 2);
  EXPECT_EQ(schur_bound(1, SchurField::cyclotomic(4)).value(), 4);
}

TEST(Examples, SchurDivisibility) {
  EXPECT_TRUE(schur_divisibility_checks(2, 3, SchurField::rational()).holds());
  EXPECT_TRUE(schur_divisibility_checks(1, 1, SchurField::cyclotomic(4)).holds());
  EXPECT_TRUE(schur_divisibility_checks(1, 2, SchurField::rational(), SchurField::cyclotomic(4)).monotone);
}

TEST(Examples, KatznelsonSinglePrime) {
  EXPECT_DOUBLE_EQ(katznelson_estimate(3, 1).constant, 2.0);
}

TEST(Examples, Closure) {
  EXPECT_EQ(trivial_group(3).order(), 1U);
  EXPECT_EQ(closure(a_m_representation(2)).order(), 6U);
}

TEST(Examples, WreathWitness) {
  EXPECT_EQ(closure(wreath_witness(2, 2)).order(), 8U);
  EXPECT_EQ(closure(wreath_witness(2, 3)).order(), 6U);
  EXPECT_EQ(closure(wreath_witness(4, 3)).order(), 72U);
  EXPECT_EQ(minkowski_p_part(4, 3).value(), 9);
}

TEST(Examples, TraceStats) {
  const TraceStats q8 = trace_stats(closure(q8_generators()), 2);
  EXPECT_EQ(q8.power_sums[1], 0);
  EXPECT_EQ(q8.power_sums[2], 8);
  const TraceStats id = trace_stats(trivial_group(3), 5);
  EXPECT_EQ(id.traces, (std::map<ExactRat, std::uint64_t>{{3, 1}}));
  EXPECT_TRUE(id.spectrum_ok);
  const TraceStats c3 = trace_stats(closure(std::vector<RatMatrix>{companion_order_three()}), 3);
  EXPECT_EQ(c3.traces, (std::map<ExactRat, std::uint64_t>{{-1, 2}, {2, 1}}));
  EXPECT_TRUE(c3.spectrum_ok);
}

TEST(Examples, FrobeniusSchur) {
  EXPECT_EQ(frobenius_schur_indicator(trivial_group(1)), 1);
  EXPECT_EQ(frobenius_schur_indicator(closure(std::vector<RatMatrix>{rotation_quarter_turn()})), 0);
}

TEST(Examples, Integralize) {
  const Integralization w = integralize(closure(wreath_witness(2, 2)));
  EXPECT_TRUE(is_integral(w.integral));
  EXPECT_EQ(w.integral.order(), 8U);

  const RatMatrix c(2, {1, ExactRat(1, 2), 0, 1});
  const auto G = closure(std::vector<RatMatrix>{rotation_quarter_turn()}).conjugated_by(c);
  EXPECT_FALSE(is_integral(G));
  const Integralization r = integralize(G);
  EXPECT_TRUE(is_integral(r.integral));
  EXPECT_EQ(r.integral.order(), 4U);
  EXPECT_EQ(trace_multiset(r.integral), (std::map<ExactRat, std::uint64_t>{{-2, 1}, {0, 2}, {2, 1}}));
}

TEST(Examples, ElementarySymmetric) {
  EXPECT_EQ(elementary_symmetric({1, 2, 3}, 2), 11);
  EXPECT_EQ(elementary_symmetric({}, 0), 1);
  EXPECT_EQ(elementary_symmetric({5}, 1), 5);
}

TEST(Examples, Vandermonde) {
  const VandermondePair a = vandermonde_pair({0, 1});
  EXPECT_EQ(a.V.a, (std::vector<ExactInt>{1, 0, 1, 1}));
  EXPECT_EQ(a.E.a, (std::vector<ExactInt>{-1, 0, 1, 1}));
  EXPECT_EQ(a.diagonal, (std::vector<ExactInt>{-1, 1}));
  EXPECT_TRUE(a.diagonal_ok);
  const VandermondePair b = vandermonde_pair({7});
  EXPECT_EQ(b.V.a, (std::vector<ExactInt>{1}));
  EXPECT_EQ(b.E.a, (std::vector<ExactInt>{1}));
  EXPECT_EQ(b.diagonal, (std::vector<ExactInt>{1}));
}

TEST(Examples, Certificate) {
  const CertificateReport c3 = schur_certificate(closure(std::vector<RatMatrix>{companion_order_three()}), 3);
  EXPECT_EQ(c3.per_t[0].product, 3);
  EXPECT_TRUE(c3.per_t[0].divisible);
  EXPECT_TRUE(schur_certificate(trivial_group(2), 2).overall);
  EXPECT_TRUE(schur_certificate(trivial_group(2), 7).overall);
}

TEST(Examples, GLOrder) {
  EXPECT_EQ(gl_order(2, 2).full.value(), 6);
  EXPECT_EQ(gl_order(2, 3).full.value(), 48);
  for (std::uint64_t q : {2, 3, 4, 5, 7, 9}) EXPECT_EQ(gl_order(1, q).full.value(), q - 1);
  EXPECT_EQ(gl_order_bruteforce(2, 2), 6);
  EXPECT_EQ(gl_order_bruteforce(1, 5), 4);
  EXPECT_EQ(gl_order_bruteforce(2, 3), 48);
}

TEST(Examples, SpecialPrime) {
  EXPECT_EQ(find_special_prime(3, 0), 2U);
  EXPECT_EQ(find_special_prime(5, 0), 2U);
  EXPECT_EQ(find_special_prime(7, 0), 3U);
  EXPECT_EQ(multiplicative_order(2, 49), 21U);  // why 2 is not special for 7
}

TEST(Examples, EllPartAtSpecialPrime) {
  const Lemma51Report a = lemma51_check(4, 1, 3, 2);
  EXPECT_EQ(a.predicted.value(), 9);
  EXPECT_EQ(a.actual.value(), 9);
  EXPECT_TRUE(a.match);
  const Lemma51Report b = lemma51_check(2, 2, 3, 2);
  EXPECT_EQ(b.tau, 1U);
  EXPECT_EQ(b.predicted.value(), 9);
  EXPECT_EQ(b.actual.value(), 9);
  const Lemma51Report c = lemma51_check(1, 1, 5, 2);
  EXPECT_EQ(c.tau, 4U);
  EXPECT_EQ(c.predicted.value(), 1);
  EXPECT_TRUE(c.match);
}

TEST(Examples, Reduction) {
  EXPECT_TRUE(reduce_mod_p(closure(wreath_witness(2, 2)), 3).report.injective);
  const auto pm = closure(std::vector<RatMatrix>{minus_identity(2)});
  const ReductionReport two = reduce_mod_p(pm, 2).report;
  EXPECT_EQ(std::count(two.kernel_element_orders.begin(), two.kernel_element_orders.end(), 2U), 1);
  EXPECT_TRUE(reduce_mod_p(pm, 5).report.injective);
}

TEST(Examples, IsometryOrder) {
  EXPECT_EQ(isometry_order(IsometryKind::symplectic, 2, 3, 1).value(), 24);
  for (std::uint64_t p : {3, 5, 7, 11}) EXPECT_EQ(isometry_order(IsometryKind::orthogonal, 1, p, 1).value(), 2);
  EXPECT_EQ(isometry_order(IsometryKind::unitary, 1, 7, 2).value(), 8);
}

TEST(Examples, TwoAdic) {
  EXPECT_TRUE(two_adic_checks(7, 3, 10));
  EXPECT_TRUE(two_adic_checks(3, 2, 10));
  for (std::uint64_t p : {3, 7, 11, 23, 47})
    for (std::uint64_t k = 2; k <= 5; ++k)
      if (satisfies_two_power_congruence(p, k)) {
        EXPECT_TRUE(two_adic_checks(p, k, 1));
        EXPECT_EQ(two_valuation(ExactInt(p + 1)), k);
      }
}

TEST(Examples, TwoPartsOfIsometryGroups) {
  const UnitaryTwoPart a = lemma510_two_part_check(SchurField::cyclotomic(8), 2, 7);
  EXPECT_EQ(a.iso_two_part.value(), 128);
  EXPECT_TRUE(a.holds());
  const UnitaryTwoPart b = lemma510_two_part_check(SchurField::cyclotomic(4), 1, 3);
  EXPECT_EQ(b.iso_two_part.value(), 4);
  EXPECT_EQ(b.schur_two_part.value(), 4);
  const RealTwoPart c = lemma510_real_check(2, 3, 1);
  EXPECT_EQ(c.actual.value(), 8);
  EXPECT_TRUE(c.holds());
}

TEST(Examples, Bernoulli) {
  EXPECT_EQ(bernoulli(2), ExactRat(1, 6));
  EXPECT_EQ(bernoulli(3), 0);
  EXPECT_EQ(bernoulli(12), ExactRat(-691, 2730));
  EXPECT_EQ(staudt_clausen_denominator(1), 6);
  EXPECT_EQ(staudt_clausen_denominator(2), 30);
  EXPECT_EQ(staudt_clausen_denominator(6), 2730);
  EXPECT_EQ(bernoulli_vs_minkowski(1).bernoulli_denominator, 6);
  EXPECT_EQ(bernoulli_vs_minkowski(2).bernoulli_denominator, 60);
  EXPECT_EQ(bernoulli_vs_minkowski(3).bernoulli_denominator, 126);
  EXPECT_TRUE(bernoulli_vs_minkowski(3).equal);
}

TEST(Examples, Hanna) {
  EXPECT_EQ(hanna_polynomial(2), RatPolynomial({ExactRat(0), ExactRat(5), ExactRat(3)}) * ExactRat(1, 24));
  EXPECT_EQ(hanna_polynomial(3), RatPolynomial({ExactRat(0), ExactRat(6), ExactRat(5), ExactRat(1)}) * ExactRat(1, 48));
  EXPECT_EQ(hanna_denominator_check(1).denominator, 2);
  EXPECT_EQ(hanna_denominator_check(2).denominator, 24);
  EXPECT_EQ(hanna_denominator_check(4).denominator, 5760);
  EXPECT_TRUE(hanna_denominator_check(4).equals_M);
}
