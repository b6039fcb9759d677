#include <gtest/gtest.h>

#include <random>
#include <set>

#include "ranklab/cyclo.hpp"
#include "ranklab/error.hpp"

using namespace ranklab;

TEST(Cyclo, CyclotomicPolynomials) {
  EXPECT_EQ(cyclotomic_polynomial(1), (std::vector<long long>{-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(3), (std::vector<long long>{1, 1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(4), (std::vector<long long>{1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(12), (std::vector<long long>{1, 0, -1, 0, 1}));
  // product over divisors is x^n - 1 (degree check)
  for (int n : {24, 180, 312}) {
    int deg = 0;
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) deg += static_cast<int>(cyclotomic_polynomial(d).size()) - 1;
    EXPECT_EQ(deg, n);
  }
}

TEST(Cyclo, RootSumsVanish) {
  for (int p : {3, 5, 7, 13}) {
    CycInt s(p);
    for (int t = 0; t < p; ++t) s += CycInt::root(p, t);
    EXPECT_TRUE(s.is_zero());
  }
  // inside a larger ring
  CycInt s(12);
  for (int t = 0; t < 3; ++t) s += CycInt::root(12, 4 * t);
  EXPECT_TRUE(s.is_zero());
}

TEST(Cyclo, ArithmeticMatchesComplex) {
  std::mt19937 rng(9);
  for (int e : {12, 24, 60}) {
    for (int trial = 0; trial < 50; ++trial) {
      CycInt a(e), b(e);
      for (int j = 0; j < e; ++j) {
        a[j] = static_cast<long long>(rng() % 5) - 2;
        b[j] = static_cast<long long>(rng() % 5) - 2;
      }
      auto prod = (a * b).to_complex();
      auto want = a.to_complex() * b.to_complex();
      EXPECT_NEAR(std::abs(prod - want), 0.0, 1e-8);
      EXPECT_NEAR(std::abs(a.conj().to_complex() - std::conj(a.to_complex())), 0.0, 1e-9);
      EXPECT_TRUE(a.conj().conj() == a);
      // canonical form evaluates to the same complex number
      auto can = a.canonical();
      std::complex<double> v = 0;
      for (size_t i = 0; i < can.size(); ++i) v += static_cast<double>(can[i]) * root_of_unity(e, static_cast<long long>(i));
      EXPECT_NEAR(std::abs(v - a.to_complex()), 0.0, 1e-8);
    }
  }
}

TEST(Cyclo, ChangeOrderAndDivision) {
  CycInt z3 = CycInt::root(3, 1);
  CycInt up = z3.change_order(12);
  EXPECT_EQ(up[4], 1);
  EXPECT_TRUE(up.change_order(3) == z3);
  EXPECT_THROW(CycInt::root(12, 1).change_order(3), Error);
  // (1 + zeta_3) * 6 divided by 3
  CycInt x = (CycInt(3, 1) + z3) * 6;
  EXPECT_TRUE(x.divide_exact(3) == (CycInt(3, 1) + z3) * 2);
  // -zeta_3^2 = 1 + zeta_3: division that needs reduction
  CycInt y = CycInt::root(3, 2) * -3;
  EXPECT_TRUE(y.divide_exact(3) == CycInt(3, 1) + z3);
  EXPECT_THROW((CycInt(3, 1) + z3).divide_exact(2), Error);
}

TEST(Cyclo, InnerProductExamples) {
  auto g1 = make_gl(1, 3);
  EXPECT_EQ(inner_product(trivial_character(g1), trivial_character(g1)), Rational(1));
  EXPECT_EQ(inner_product(regular_character(g1), trivial_character(g1)), Rational(1));
  auto g2 = make_gl(2, 3);
  EXPECT_EQ(inner_product(vector_permutation_character(g2), trivial_character(g2)), Rational(2));
}

TEST(Cyclo, BurnsideOrbitCount) {
  // oracle: orbits of GL_2(3) on F_3^2 x F_3^2 counted directly
  auto g = make_gl(2, 3);
  auto pc = vector_permutation_character(g);
  auto sq = tensor(pc, pc);
  std::set<std::pair<int, int>> seen;
  int orbits = 0;
  Field F(3);
  for (int v = 0; v < 81; ++v) {
    if (seen.count({v / 9, v % 9})) continue;
    ++orbits;
    for (size_t i = 0; i < g->order(); ++i) {
      FqMatrix m = g->element(i);
      int a = v / 9, b = v % 9;
      auto act = [&](int x) {
        int x0 = x / 3, x1 = x % 3;
        return F.reduce(m(0, 0) * x0 + m(0, 1) * x1) * 3 + F.reduce(m(1, 0) * x0 + m(1, 1) * x1);
      };
      seen.insert({act(a), act(b)});
    }
  }
  EXPECT_EQ(inner_product(sq, trivial_character(g)), Rational(orbits));
}

TEST(Cyclo, RestrictAndInduceDegrees) {
  auto g = make_gl(2, 3);
  auto h = h_subgroup(g, 1);
  EXPECT_TRUE(restrict(trivial_character(g), h) == trivial_character(h.group));
  auto rr = restrict(regular_character(g), h);
  EXPECT_EQ(rr.degree(), 48);
  EXPECT_EQ(inner_product(rr, trivial_character(h.group)), Rational(static_cast<long long>(g->order() / h.group->order())));
  auto ind = induce(trivial_character(h.group), h);
  EXPECT_EQ(ind.degree(), static_cast<long long>(g->order() / h.group->order()));
  // permutation character of GL_2 on nonzero vectors is Ind_{H_1} 1
  auto pc = vector_permutation_character(g) - trivial_character(g);
  EXPECT_TRUE(ind == pc);
}

TEST(Cyclo, TensorIdentity) {
  auto g = make_gl(2, 3);
  auto pc = vector_permutation_character(g);
  EXPECT_TRUE(tensor(pc, trivial_character(g)) == pc);
  EXPECT_EQ(tensor(pc, pc).degree(), 81);
}

TEST(Cyclo, ModRing) {
  auto R = ModRing::make(12);
  EXPECT_EQ((R.P - 1) % 12, 0u);
  EXPECT_EQ(R.pow(R.z, 12), 1u);
  EXPECT_NE(R.pow(R.z, 6), 1u);
  EXPECT_NE(R.pow(R.z, 4), 1u);
  CycInt a = CycInt::root(12, 5) + CycInt(12, 3);
  CycInt b = CycInt::root(12, 7) * 2;
  EXPECT_EQ(R.eval(a * b), R.mul(R.eval(a), R.eval(b)));
  CycInt s(12);
  for (int t = 0; t < 3; ++t) s += CycInt::root(12, 4 * t);
  EXPECT_EQ(R.eval(s), 0u);
}
