#include <gtest/gtest.h>

#include <random>

#include "minkowski/cyclotomic.hpp"
#include "minkowski/matrix.hpp"

using namespace minkowski;

TEST(Cyclotomic, PolynomialsAndDegrees) {
  EXPECT_EQ(cyclo_field(1)->polynomial(), (std::vector<ExactInt>{-1, 1}));
  EXPECT_EQ(cyclo_field(4)->polynomial(), (std::vector<ExactInt>{1, 0, 1}));
  EXPECT_EQ(cyclo_field(12)->polynomial(), (std::vector<ExactInt>{1, 0, -1, 0, 1}));
  // Phi_105 is the first with a coefficient outside {-1, 0, 1}.
  const auto& phi105 = cyclo_field(105)->polynomial();
  EXPECT_NE(std::find(phi105.begin(), phi105.end(), ExactInt(-2)), phi105.end());
  for (std::uint64_t k = 1; k <= 60; ++k) EXPECT_EQ(cyclo_field(k)->degree(), euler_phi(k)) << k;
  EXPECT_THROW(cyclo_field(0), input_error);
}

TEST(Cyclotomic, ZetaHasExactOrder) {
  for (std::uint64_t k : {3, 4, 5, 8, 12}) {
    const FieldPtr F = cyclo_field(k);
    const CycloElem z = CycloElem::zeta(F), one(F, ExactRat(1));
    CycloElem pw = one;
    for (std::uint64_t e = 1; e <= k; ++e) {
      pw = pw * z;
      EXPECT_EQ(pw == one, e == k) << "k=" << k << " e=" << e;
    }
  }
}

TEST(Cyclotomic, FieldAxiomsOnRandomElements) {
  const FieldPtr F = cyclo_field(15);
  std::mt19937_64 rng(15);
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  auto random_elem = [&] {
    std::vector<ExactRat> c;
    for (std::size_t i = 0; i < F->degree(); ++i) c.emplace_back(num(rng), den(rng));
    return CycloElem(F, c);
  };
  for (int i = 0; i < 30; ++i) {
    const CycloElem a = random_elem(), b = random_elem(), c = random_elem();
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ(a * b, b * a);
    if (!a.is_zero()) {
      EXPECT_EQ(a * a.inverse(), CycloElem(F, ExactRat(1)));
    }
  }
}

TEST(Cyclotomic, ErrorsAndTrace) {
  const FieldPtr F4 = cyclo_field(4), F3 = cyclo_field(3);
  const CycloElem i = CycloElem::zeta(F4);
  EXPECT_EQ(i * i, CycloElem(F4, ExactRat(-1)));
  EXPECT_THROW(CycloElem(F4, ExactRat(0)).inverse(), input_error);
  EXPECT_THROW(i + CycloElem::zeta(F3), input_error);
  EXPECT_EQ(cyclo_trace_to_Q(i), 0);
  EXPECT_EQ(cyclo_trace_to_Q(CycloElem::zeta(F3)), -1);  // zeta_3 + zeta_3^2
  EXPECT_EQ(i.galois_conjugate(3), -i);
  EXPECT_EQ(*CycloElem(F4, ExactRat(2, 3)).rational_value(), ExactRat(2, 3));
  EXPECT_FALSE(i.rational_value().has_value());
}

TEST(Matrix, DeterminantInverseAndPowers) {
  const RatMatrix a = rat_matrix({{2, 1}, {7, 4}});
  EXPECT_EQ(a.determinant(), 1);
  EXPECT_TRUE((a * a.inverse()).is_identity());
  EXPECT_THROW(rat_matrix({{1, 2}, {2, 4}}).inverse(), input_error);
  const RatMatrix r = rat_matrix({{0, -1}, {1, 0}});
  EXPECT_TRUE(r.pow(4).is_identity());
  EXPECT_FALSE(r.pow(2).is_identity());
  EXPECT_EQ(r.trace(), 0);
  EXPECT_THROW(RatMatrix(2, {ExactRat(1)}), input_error);
}
