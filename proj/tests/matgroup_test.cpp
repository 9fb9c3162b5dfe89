#include <gtest/gtest.h>

#include <random>

#include "minkowski/acceptance.hpp"
#include "minkowski/lattice.hpp"
#include "minkowski/matgroup.hpp"

using namespace minkowski;

TEST(Closure, SmallGroups) {
  EXPECT_EQ(closure(std::vector<RatMatrix>{rotation_quarter_turn()}).order(), 4U);
  EXPECT_EQ(closure(std::vector<RatMatrix>{companion_order_three()}).order(), 3U);
  EXPECT_EQ(closure(q8_generators()).order(), 8U);
  const auto G = closure(std::vector<RatMatrix>{rotation_quarter_turn(), rat_matrix({{1, 0}, {0, -1}})});
  EXPECT_EQ(G.order(), 8U);
  EXPECT_TRUE(G.identity().is_identity());
  for (std::size_t i = 0; i < G.order(); ++i)
    for (std::size_t j = 0; j < G.order(); ++j) EXPECT_LT(G.multiply(i, j), G.order());
}

TEST(Closure, InfiniteGroupHitsCap) {
  EXPECT_THROW(closure(std::vector<RatMatrix>{rat_matrix({{1, 1}, {0, 1}})}, 500), capacity_error);
  EXPECT_THROW(closure(std::vector<RatMatrix>{rat_matrix({{2, 0}, {0, 1}})}, 500), capacity_error);
}

TEST(Closure, RejectsBadGenerators) {
  EXPECT_THROW(closure(std::vector<RatMatrix>{rat_matrix({{1, 0}, {0, 0}})}), input_error);
  EXPECT_THROW(closure(std::vector<RatMatrix>{rat_matrix({{1}}), rat_matrix({{1, 0}, {0, 1}})}), input_error);
}

TEST(Closure, ElementOrders) {
  EXPECT_EQ(element_order(rotation_quarter_turn(), 100), 4U);
  EXPECT_EQ(element_order(companion_order_three(), 100), 3U);
}

TEST(RootLattice, SymmetricGroupRepresentation) {
  for (std::size_t m = 1; m <= 4; ++m) {
    const auto G = closure(a_m_representation(m));
    EXPECT_EQ(ExactInt(static_cast<std::uint64_t>(G.order())), Factorization::factorial(m + 1).value());
    EXPECT_TRUE(is_integral(G));
  }
  // A transposition acts with trace m - 2.
  const auto s = a_m_representation(4);
  for (const auto& g : s) EXPECT_EQ(g.trace(), 2);
}

TEST(Witness, OrdersMatchFormula) {
  for (std::size_t n = 1; n <= 5; ++n)
    for (std::uint64_t p : primes_below(n + 2)) {
      const auto G = closure(wreath_witness(n, p));
      EXPECT_EQ(ExactInt(static_cast<std::uint64_t>(G.order())), wreath_witness_order(n, p)) << n << " " << p;
    }
  EXPECT_THROW(wreath_witness(2, 5), input_error);
  EXPECT_THROW(wreath_witness(4, 4), input_error);
}

TEST(Traces, Q8Statistics) {
  const auto G = closure(q8_generators());
  const TraceStats st = trace_stats(G, 2);
  EXPECT_EQ(st.a, 2U);
  EXPECT_EQ(st.m, (std::vector<std::uint64_t>{1, 6, 1}));
  EXPECT_TRUE(st.spectrum_ok);
  EXPECT_TRUE(st.fact1_ok);
  EXPECT_EQ(frobenius_schur_indicator(G), -1);
}

TEST(Traces, RealGroupsHaveIndicatorOne) {
  EXPECT_EQ(frobenius_schur_indicator(closure(wreath_witness(4, 3))), 1);
  EXPECT_EQ(frobenius_schur_indicator(closure(a_m_representation(3))), 1);
}

TEST(Traces, NonRationalTraceRejected) {
  const FieldPtr F = cyclo_field(3);
  const CycloMatrix g(1, {CycloElem::zeta(F)});
  const auto G = closure(std::vector<CycloMatrix>{g});
  EXPECT_THROW(trace_multiset(G), input_error);
}

TEST(Lattice, HermiteNormalForm) {
  IntColumns a;
  a.rows = 2;
  a.cols = {{2, 0}, {0, 2}, {1, 1}};
  const auto h = hermite_normal_form(a);
  // Lattice spanned by (2,0), (0,2), (1,1): basis (1,1), (0,2) in lower-triangular form.
  EXPECT_EQ(h, (std::vector<ExactInt>{1, 0, 1, 2}));
}

TEST(Lattice, IntegralizeRandomConjugates) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 10; ++trial) {
    const auto W = closure(wreath_witness(3, 2));
    const RatMatrix C = random_rational_conjugator(3, rng);
    const auto G = W.conjugated_by(C);
    const Integralization res = integralize(G);
    EXPECT_TRUE(is_integral(res.integral));
    EXPECT_EQ(res.integral.order(), G.order());
    EXPECT_EQ(trace_multiset(res.integral), trace_multiset(G));
  }
}

TEST(Lattice, AlreadyIntegralStaysIntegral) {
  const auto G = closure(std::vector<RatMatrix>{rotation_quarter_turn()});
  const Integralization res = integralize(G);
  EXPECT_TRUE(is_integral(res.integral));
  EXPECT_EQ(abs_value(numerator_of(res.basis_change.determinant())), 1);
}
