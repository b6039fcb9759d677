#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "ranklab/gfq.hpp"

using namespace ranklab;

TEST(Gfq, LegendreExamples) {
  EXPECT_EQ(legendre(Field(3), FqElt{1}), 1);
  EXPECT_EQ(legendre(Field(3), FqElt{2}), -1);
  EXPECT_EQ(legendre(Field(5), FqElt{0}), 0);
}

TEST(Gfq, LegendreMatchesSquareTable) {
  for (int p : {3, 5, 7, 11, 13}) {
    Field F(p);
    std::vector<int> is_sq(p, 0);
    for (int t = 1; t < p; ++t) is_sq[t * t % p] = 1;
    for (int a = 1; a < p; ++a) EXPECT_EQ(F.legendre(a), is_sq[a] ? 1 : -1) << p << " " << a;
  }
}

TEST(Gfq, LegendreMultiplicative) {
  for (int p : {3, 5, 7, 11, 13}) {
    Field F(p);
    for (int x = 1; x < p; ++x)
      for (int y = 1; y < p; ++y) EXPECT_EQ(F.legendre(x * y), F.legendre(x) * F.legendre(y));
  }
}

TEST(Gfq, FieldBasics) {
  Field F(7);
  for (int a = 1; a < 7; ++a) EXPECT_EQ(F.mul(a, F.inv(a)), 1);
  EXPECT_EQ(F.mul(2, F.half()), 1);
  EXPECT_EQ(Field(3).nonsquare(), 2);
  EXPECT_EQ(Field(7).nonsquare(), 3);
  EXPECT_EQ(Field(5).primitive_root(), 2);
  EXPECT_THROW(Field(9), std::exception);
  EXPECT_THROW(Field(2), std::exception);
}

TEST(Gfq, GaussSumExamples) {
  cplx g3 = gauss_sum(3);
  EXPECT_NEAR(g3.real(), 0.0, 1e-12);
  EXPECT_NEAR(g3.imag(), std::sqrt(3.0), 1e-12);
  cplx g5 = gauss_sum(5);
  EXPECT_NEAR(g5.real(), std::sqrt(5.0), 1e-12);
  EXPECT_NEAR(g5.imag(), 0.0, 1e-12);
}

TEST(Gfq, GaussSumModulusAndSquare) {
  for (int p : {3, 5, 7, 11, 13}) {
    Field F(p);
    cplx g = gauss_sum(p);
    EXPECT_NEAR(std::norm(g), p, 1e-10);
    cplx g2 = g * g;
    EXPECT_NEAR(g2.real(), F.legendre(p - 1) * p, 1e-10);
    EXPECT_NEAR(g2.imag(), 0.0, 1e-10);
    // the other square class of characters
    cplx gs = gauss_sum(p, F.nonsquare());
    EXPECT_NEAR(std::abs(gs + g), 0.0, 1e-10);
  }
}

TEST(Gfq, CharacterValues) {
  AdditiveCharacter chi{3, 1};
  EXPECT_NEAR(std::abs(chi(0) - cplx(1, 0)), 0.0, 1e-15);
  cplx z3 = std::polar(1.0, 2 * std::numbers::pi / 3);
  EXPECT_NEAR(std::abs(chi(1) - z3), 0.0, 1e-15);
  AdditiveCharacter c5{5, 1};
  for (int s = 0; s < 5; ++s)
    for (int t = 0; t < 5; ++t) {
      EXPECT_EQ((c5.exponent(s) + c5.exponent(t)) % 5, c5.exponent((s + t) % 5));
      EXPECT_NEAR(std::abs(c5(s) * c5(t) - c5((s + t) % 5)), 0.0, 1e-14);
    }
}
