#include <gtest/gtest.h>

#include <random>
#include <set>

#include "ranklab/error.hpp"
#include "ranklab/oscsemi.hpp"

using namespace ranklab;

namespace {

double max_abs(const OperatorMatrix& m) { return m.cwiseAbs().maxCoeff(); }

// Lagrangians by brute force: all N-dim subspaces (as RREF of every N-tuple of vectors) that are isotropic.
std::set<Lagrangian> brute_lagrangians(const SymplecticSpace& s) {
  Field F(s.p);
  const int n = s.dim(), m = s.half();
  long long nv = 1;
  for (int i = 0; i < n; ++i) nv *= s.p;
  std::set<Lagrangian> out;
  std::vector<long long> pick(m, 0);
  std::function<void(int)> rec = [&](int k) {
    if (k == m) {
      FqMatrix r(m, n);
      for (int i = 0; i < m; ++i) {
        auto v = w_point(s.p, n / 2, pick[i]);
        for (int j = 0; j < n; ++j) r(i, j) = v[j];
      }
      auto l = make_lagrangian(F, r);
      if (is_lagrangian(s, l)) out.insert(l);
      return;
    }
    for (long long v = k == 0 ? 1 : pick[k - 1] + 1; v < nv; ++v) {
      pick[k] = v;
      rec(k + 1);
    }
  };
  rec(0);
  return out;
}

size_t random_element(std::mt19937& rng, const GroupPtr& g) { return rng() % g->order(); }

}  // namespace

TEST(Lagrangian, CountsAndBruteForce) {
  EXPECT_EQ(all_lagrangians(SymplecticSpace::standard(3, 1)).size(), 4u);
  auto l4 = all_lagrangians(SymplecticSpace::standard(3, 2));
  EXPECT_EQ(l4.size(), 40u);
  auto brute = brute_lagrangians(SymplecticSpace::standard(3, 2));
  EXPECT_EQ(std::set<Lagrangian>(l4.begin(), l4.end()), brute);
  auto d = all_lagrangians(SymplecticSpace::doubled(3, 1));
  EXPECT_EQ(std::set<Lagrangian>(d.begin(), d.end()), brute_lagrangians(SymplecticSpace::doubled(3, 1)));
  EXPECT_EQ(all_lagrangians(SymplecticSpace::standard(5, 2)).size(), static_cast<size_t>(lagrangian_count(2, 5)));
}

TEST(Lagrangian, CoordinateLagrangiansPresent) {
  Field F(3);
  auto ls = all_lagrangians(SymplecticSpace::standard(3, 2));
  EXPECT_TRUE(std::binary_search(ls.begin(), ls.end(), coordinate_x(F, 2)));
  EXPECT_TRUE(std::binary_search(ls.begin(), ls.end(), coordinate_y(F, 2)));
}

TEST(Lagrangian, CapExceeded) {
  try {
    all_lagrangians(SymplecticSpace::standard(3, 5), 1000);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "oscsemi.CapExceeded");
  }
}

TEST(Quantize, CoordinateExamples) {
  Field F(3);
  SchrodingerModel m(3, 2);
  auto qx = quantize(m, coordinate_x(F, 2));
  EXPECT_NEAR(std::abs(qx[0] - 1.0), 0.0, kOpTol);
  EXPECT_NEAR(qx.cwiseAbs().sum(), 1.0, kOpTol);
  auto qy = quantize(m, coordinate_y(F, 2));
  for (int i = 0; i < m.dim(); ++i) EXPECT_NEAR(std::abs(qy[i] - 1.0), 0.0, kOpTol);
}

TEST(Quantize, InvariantUnderLiftOfL) {
  for (auto [p, N] : {std::pair{3, 1}, std::pair{3, 2}, std::pair{5, 1}}) {
    SchrodingerModel m(p, N);
    for (const auto& l : all_lagrangians(SymplecticSpace::standard(p, N))) {
      auto q = quantize(m, l);
      for (int r = 0; r < l.basis.rows; ++r) {
        HeisenbergElement h{std::vector<int>(l.basis.a.begin() + r * 2 * N, l.basis.a.begin() + (r + 1) * 2 * N), 0};
        EXPECT_LT((m.rho(h) * q - q).cwiseAbs().maxCoeff(), kOpTol);
      }
    }
  }
}

TEST(Quantize, SymmetricGraphIsGaussian) {
  // L = {(S y, y)} quantizes to chi(y^t S y / 2)
  Field F(5);
  SchrodingerModel m(5, 1);
  for (int s = 0; s < 5; ++s) {
    FqMatrix r(1, 2);
    r(0, 0) = s;
    r(0, 1) = 1;
    auto q = quantize(m, make_lagrangian(F, r));
    for (int y = 0; y < 5; ++y)
      EXPECT_LT(std::abs(q[y] - root_of_unity(5, F.mul(F.half(), F.mul(s, F.mul(y, y))))), kOpTol);
  }
}

TEST(Quantize, SpEquivariantUpToPhase) {
  auto sp = make_sp(4, 3);
  const Field& F = sp->field();
  WeilRep w(sp);
  SchrodingerModel m(3, 2);
  std::mt19937 rng(2);
  auto ls = all_lagrangians(SymplecticSpace::standard(3, 2));
  for (int it = 0; it < 30; ++it) {
    size_t gi = random_element(rng, sp);
    const auto& l = ls[rng() % ls.size()];
    Eigen::VectorXcd lhs = quantize(m, transform(F, l, sp->element(gi)));
    Eigen::VectorXcd rhs = w.op(gi) * quantize(m, l);
    EXPECT_LT(proportionality_residual(lhs, rhs), 1e-9);
  }
}

TEST(Weyl, DeltaAndRoundTrip) {
  SchrodingerModel m(3, 1);
  Eigen::VectorXcd delta = Eigen::VectorXcd::Zero(9);
  delta[0] = 1;
  EXPECT_LT(max_abs(weyl_transform(m, delta) - OperatorMatrix::Identity(3, 3)), kOpTol);
  std::mt19937 rng(9);
  std::normal_distribution<double> nd;
  for (int it = 0; it < 100; ++it) {
    Eigen::VectorXcd f(9), g(9);
    for (int i = 0; i < 9; ++i) {
      f[i] = {nd(rng), nd(rng)};
      g[i] = {nd(rng), nd(rng)};
    }
    auto A = weyl_transform(m, f), B = weyl_transform(m, g);
    EXPECT_LT((inverse_weyl_transform(m, A) - f).cwiseAbs().maxCoeff(), kOpTol);
    EXPECT_LT(std::abs(hs_inner(A, B) - g.dot(f)), 1e-9);
  }
}

TEST(Weyl, ConstantIsRhoAverage) {
  SchrodingerModel m(3, 1);
  auto A = weyl_transform(m, Eigen::VectorXcd::Ones(9));
  OperatorMatrix direct = OperatorMatrix::Zero(3, 3);
  for (int i = 0; i < 9; ++i) direct += m.rho(HeisenbergElement{w_point(3, 1, i), 0});
  EXPECT_LT(max_abs(A - direct), kOpTol);
  // 1/d times this is the parity operator f(v) -> f(-v)
  OperatorMatrix P = A / 3.0;
  EXPECT_LT(max_abs(P * P - OperatorMatrix::Identity(3, 3)), kOpTol);
  for (int v = 0; v < 3; ++v) EXPECT_NEAR(std::abs(P((3 - v) % 3, v)), 1.0, kOpTol);
}

TEST(Composition, GraphsAndDiagonals) {
  auto sp = make_sp(2, 3);
  const Field& F = sp->field();
  auto delta = graph_lagrangian(F, FqMatrix::identity(2));
  auto anti = graph_lagrangian(F, FqMatrix::diag({2, 2}));
  FqMatrix dr(2, 4), ar(2, 4);
  for (int i = 0; i < 2; ++i) {
    dr(i, i) = dr(i, 2 + i) = 1;
    ar(i, i) = 1;
    ar(i, 2 + i) = 2;
  }
  EXPECT_EQ(delta, make_lagrangian(F, dr));
  EXPECT_EQ(anti, make_lagrangian(F, ar));
  auto space = SymplecticSpace::doubled(3, 1);
  for (const auto& l : all_lagrangians(space)) {
    EXPECT_EQ(compose(F, delta, l), l);
    EXPECT_EQ(compose(F, l, delta), l);
  }
  std::mt19937 rng(4);
  for (int it = 0; it < 50; ++it) {
    size_t a = random_element(rng, sp), b = random_element(rng, sp);
    EXPECT_EQ(compose(F, graph_lagrangian(F, sp->element(a)), graph_lagrangian(F, sp->element(b))),
              graph_lagrangian(F, sp->element(sp->mul(a, b))));
  }
}

TEST(Composition, IsotropicGraphsAndAssociativity) {
  auto sp = make_sp(2, 5);
  const Field& F = sp->field();
  auto space = SymplecticSpace::doubled(5, 1);
  std::mt19937 rng(6);
  for (int it = 0; it < 50; ++it)
    EXPECT_TRUE(is_lagrangian(space, graph_lagrangian(F, sp->element(random_element(rng, sp)))));
  auto ls = all_lagrangians(SymplecticSpace::doubled(3, 1));
  Field F3(3);
  auto space3 = SymplecticSpace::doubled(3, 1);
  for (int it = 0; it < 200; ++it) {
    const auto& a = ls[rng() % ls.size()];
    const auto& b = ls[rng() % ls.size()];
    const auto& c = ls[rng() % ls.size()];
    auto left = compose(F3, compose(F3, a, b), c), right = compose(F3, a, compose(F3, b, c));
    EXPECT_EQ(left, right);
    EXPECT_TRUE(is_lagrangian(space3, left));
  }
}

TEST(Semigroup, AllPairsF3) {
  auto rep = semigroup_check(3, 1);
  EXPECT_EQ(rep.lagrangians, 40);
  EXPECT_EQ(rep.pairs, 1600);
  EXPECT_EQ(rep.passed, 1600);
  EXPECT_EQ(rep.alpha_zero, 0);
  EXPECT_LT(rep.max_residual, 1e-8);
}

TEST(Semigroup, GraphsReproduceWeil) {
  auto sp = make_sp(2, 3);
  WeilRep w(sp);
  SchrodingerModel m(3, 1);
  for (size_t g = 0; g < sp->order(); ++g)
    EXPECT_LT(proportionality_residual(quantize_doubled(m, graph_lagrangian(sp->field(), sp->element(g))), w.op(g)),
              1e-9);
  // identity composition: q(Delta) is a multiple of I
  auto qd = quantize_doubled(m, graph_lagrangian(sp->field(), FqMatrix::identity(2)));
  EXPECT_LT(proportionality_residual(qd, OperatorMatrix::Identity(3, 3)), 1e-9);
}

TEST(Semigroup, TripleParametrization) {
  Field F(3);
  for (int N : {1, 2}) {
    auto space = SymplecticSpace::doubled(3, N);
    for (const auto& l : all_lagrangians(space)) ASSERT_TRUE(triple_relations_hold(F, N, l));
  }
}

TEST(Semigroup, SpSpOrbitCount) {
  EXPECT_EQ(sp_sp_orbit_count(3, 1), 2);
  EXPECT_EQ(sp_sp_orbit_count(3, 2), 3);
}

TEST(Commutant, Dimensions) {
  Field F(3);
  auto sp = make_sp(2, 3);
  EXPECT_EQ(commutant_dimension(F, 1, sp->generators()), 2);
  EXPECT_EQ(commutant_dimension(F, 1, {}), 9);
  EXPECT_EQ(commutant_dimension(F, 1, {FqMatrix::diag({2, 2})}), 5);
  SchrodingerModel m(3, 1);
  WeilRep w(sp);
  auto basis = commutant_basis(m, sp->generators());
  ASSERT_EQ(basis.size(), 2u);
  for (auto& b : basis)
    for (auto& g : sp->generators()) EXPECT_LT(max_abs(w.op(g) * b - b * w.op(g)), 1e-9);
  EXPECT_EQ(operator_span_rank(basis), 2);
}

TEST(Commutant, InvariantSemigroupSpan) {
  auto sp = make_sp(2, 3);
  WeilRep w(sp);
  auto full = invariant_semigroup_span(w, sp->generators());
  EXPECT_EQ(full.rank, 2);
  EXPECT_EQ(full.commutant_dim, 2);
  auto trivial = invariant_semigroup_span(w, {});
  EXPECT_EQ(trivial.fixed_lagrangians, 40);
  // Every linear Lagrangian is fixed by (-1, -1), so the span is the commutant of omega(+-I), not all of End.
  EXPECT_EQ(trivial.rank, 5);
  EXPECT_EQ(trivial.commutant_dim, 9);
  auto o1 = invariant_semigroup_span(w, {FqMatrix::diag({2, 2})});
  EXPECT_EQ(o1.rank, o1.commutant_dim) << o1.fixed_lagrangians << " fixed, " << o1.invariant << " invariant";
  EXPECT_EQ(o1.rank, 5);
}
