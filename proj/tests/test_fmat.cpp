#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "ranklab/fmat.hpp"
#include "ranklab/grp.hpp"

using namespace ranklab;

namespace {

FqMatrix from_rows(std::vector<std::vector<int>> r, int p) {
  FqMatrix m(static_cast<int>(r.size()), static_cast<int>(r[0].size()));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) m(i, j) = ((r[i][j] % p) + p) % p;
  return m;
}

FqMatrix random_matrix(std::mt19937& rng, int r, int c, int p) {
  FqMatrix m(r, c);
  for (auto& v : m.a) v = static_cast<int>(rng() % p);
  return m;
}

// Orbits of nondegenerate symmetric (or skew) matrices under S -> g^t S g,
// by breadth-first search over GL_n generators.
int congruence_orbits(int n, int p, bool skew, int rank_wanted, std::vector<FqMatrix>* reps) {
  Field F(p);
  auto gens = gl_generators(F, n);
  std::vector<FqMatrix> all;
  int cells = skew ? n * (n - 1) / 2 : n * (n + 1) / 2;
  long long total = 1;
  for (int i = 0; i < cells; ++i) total *= p;
  for (long long code = 0; code < total; ++code) {
    FqMatrix s(n, n);
    long long x = code;
    for (int i = 0; i < n; ++i)
      for (int j = skew ? i + 1 : i; j < n; ++j) {
        int v = static_cast<int>(x % p);
        x /= p;
        s(i, j) = v;
        s(j, i) = skew ? F.neg(v) : v;
      }
    if (mat_rank(F, s) == rank_wanted) all.push_back(s);
  }
  std::map<FqMatrix, int> seen;
  int orbits = 0;
  for (auto& s : all) {
    if (seen.count(s)) continue;
    if (reps) reps->push_back(s);
    std::vector<FqMatrix> q{s};
    seen[s] = orbits;
    for (size_t k = 0; k < q.size(); ++k)
      for (auto& g : gens) {
        FqMatrix t = mul(F, mul(F, transpose(g), q[k]), g);
        if (!seen.count(t)) {
          seen[t] = orbits;
          q.push_back(t);
        }
      }
    ++orbits;
  }
  return orbits;
}

}  // namespace

TEST(Fmat, RankExamples) {
  Field F3(3), F5(5);
  EXPECT_EQ(mat_rank(F3, FqMatrix(3, 2)), 0);
  EXPECT_EQ(mat_rank(F3, FqMatrix::identity(3)), 3);
  EXPECT_EQ(mat_rank(F5, from_rows({{1, 2}, {2, 4}}, 5)), 1);
}

TEST(Fmat, RankAgainstRandomConstruction) {
  std::mt19937 rng(7);
  Field F(5);
  for (int trial = 0; trial < 200; ++trial) {
    // product of a 4x2 and 2x5 matrix has rank <= 2; with independent rows exactly 2
    FqMatrix a = random_matrix(rng, 4, 2, 5), b = random_matrix(rng, 2, 5, 5);
    int ra = mat_rank(F, a), rb = mat_rank(F, b);
    int r = mat_rank(F, mul(F, a, b));
    EXPECT_LE(r, std::min(ra, rb));
    if (ra == 2 && rb == 2) EXPECT_EQ(r, 2);
  }
}

TEST(Fmat, RankSubadditiveAndBlockMonotone) {
  std::mt19937 rng(11);
  Field F(3);
  for (int trial = 0; trial < 300; ++trial) {
    FqMatrix a = random_matrix(rng, 3, 4, 3), b = random_matrix(rng, 3, 4, 3);
    EXPECT_LE(mat_rank(F, add(F, a, b)), mat_rank(F, a) + mat_rank(F, b));
    FqMatrix blk(2, 3);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 3; ++j) blk(i, j) = a(i, j);
    EXPECT_GE(mat_rank(F, a), mat_rank(F, blk));
  }
}

TEST(Fmat, InverseDetNullspace) {
  std::mt19937 rng(3);
  Field F(7);
  for (int trial = 0; trial < 100; ++trial) {
    FqMatrix m = random_matrix(rng, 3, 3, 7);
    if (det(F, m) == 0) {
      EXPECT_LT(mat_rank(F, m), 3);
      FqMatrix ns = nullspace(F, m);
      EXPECT_EQ(ns.rows, 3 - mat_rank(F, m));
      EXPECT_EQ(mat_rank(F, mul(F, m, transpose(ns))), 0);
      continue;
    }
    EXPECT_EQ(mul(F, m, inverse(F, m)), FqMatrix::identity(3));
  }
}

TEST(Fmat, ClassifyExamples) {
  Field F(3);
  auto z = classify_sym_form(F, FqMatrix(3, 3));
  EXPECT_EQ(z.rank, 0);
  auto h = classify_sym_form(F, FqMatrix::diag({1, 2}));
  EXPECT_EQ(h.rank, 2);
  EXPECT_EQ(h.tower, TowerTag::Split);
  auto ns = classify_sym_form(F, FqMatrix::diag({1, 1}));
  EXPECT_EQ(ns.rank, 2);
  EXPECT_EQ(ns.disc, -1);
  EXPECT_EQ(ns.tower, TowerTag::NonSplitEven);
  EXPECT_EQ(classify_sym_form(F, FqMatrix::diag({1})).tower, TowerTag::OddPlus);
  EXPECT_EQ(classify_sym_form(F, FqMatrix::diag({2})).tower, TowerTag::OddMinus);
  // all diagonal entries vanish: rank-1 split fallback
  auto off = classify_sym_form(F, from_rows({{0, 1}, {1, 0}}, 3));
  EXPECT_EQ(off.tower, TowerTag::Split);
}

TEST(Fmat, CongruenceDiagonalIsCongruent) {
  std::mt19937 rng(5);
  Field F(5);
  for (int trial = 0; trial < 200; ++trial) {
    FqMatrix s(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) s(i, j) = s(j, i) = static_cast<int>(rng() % 5);
    auto d = congruence_diagonal(F, s);
    int nz = 0;
    for (int v : d) nz += v != 0;
    EXPECT_EQ(nz, mat_rank(F, s));
  }
}

TEST(Fmat, TwoCongruenceOrbitsPerRank) {
  for (int p : {3, 5})
    for (int n = 1; n <= 3; ++n) {
      std::vector<FqMatrix> reps;
      EXPECT_EQ(congruence_orbits(n, p, false, n, &reps), 2) << "n=" << n << " p=" << p;
      Field F(p);
      ASSERT_EQ(reps.size(), 2u);
      EXPECT_NE(classify_sym_form(F, reps[0]), classify_sym_form(F, reps[1]));
    }
}

TEST(Fmat, OneSkewOrbitPerEvenRank) {
  for (int p : {3, 5})
    for (int n = 2; n <= 4; ++n)
      for (int r = 2; r <= n; r += 2) EXPECT_EQ(congruence_orbits(n, p, true, r, nullptr), 1);
}

TEST(Fmat, ClassConstantOnOrbits) {
  Field F(3);
  auto gens = gl_generators(F, 3);
  std::mt19937 rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    FqMatrix s(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) s(i, j) = s(j, i) = static_cast<int>(rng() % 3);
    auto c = classify_sym_form(F, s);
    for (auto& g : gens) EXPECT_EQ(classify_sym_form(F, mul(F, mul(F, transpose(g), s), g)), c);
  }
}

TEST(Fmat, WittDirectSum) {
  for (int p : {3, 5}) {
    Field F(p);
    std::vector<SymFormClass> classes{make_form_class(F, 0, 1)};
    for (int r = 1; r <= 3; ++r)
      for (int d : {1, -1}) classes.push_back(make_form_class(F, r, d));
    for (auto& c : classes) EXPECT_EQ(witt_direct_sum(F, make_form_class(F, 0, 1), c), c);
    // agreement with classifying the block-diagonal matrix
    auto rep = [&](const SymFormClass& c) {
      std::vector<int> d(c.rank, 1);
      if (c.rank > 0) {
        // signed discriminant (-1)^{floor(r/2)} prod
        int want = c.disc;
        int sign = (c.rank / 2) % 2 ? F.legendre(p - 1) : 1;
        if (want * sign == -1) d.back() = F.nonsquare();
      }
      return d.empty() ? FqMatrix(0, 0) : FqMatrix::diag(d);
    };
    for (auto& a : classes)
      for (auto& b : classes) {
        if (a.rank == 0 || b.rank == 0) continue;
        auto direct = classify_sym_form(F, block_diag(rep(a), rep(b)));
        EXPECT_EQ(witt_direct_sum(F, a, b), direct);
      }
    // cancellation
    for (auto& c : classes)
      for (auto& x : classes)
        for (auto& y : classes)
          if (witt_direct_sum(F, c, x) == witt_direct_sum(F, c, y)) EXPECT_EQ(x, y);
  }
  Field F3(3);
  auto one = make_form_class(F3, 1, 1);
  auto s = witt_direct_sum(F3, one, one);
  EXPECT_EQ(s.rank, 2);
  EXPECT_EQ(s.tower, TowerTag::NonSplitEven);
  auto hyp = make_form_class(F3, 2, 1);
  EXPECT_EQ(witt_direct_sum(F3, hyp, hyp).tower, TowerTag::Split);
}

TEST(Fmat, MatrixCharacters) {
  Field F(3);
  MatrixCharacter z{FqMatrix(2, 2)};
  EXPECT_EQ(char_rank(F, z), 0);
  FqMatrix e11(2, 2);
  e11(0, 0) = 1;
  EXPECT_EQ(char_rank(F, MatrixCharacter{e11}), 1);
  EXPECT_EQ(char_type(F, MatrixCharacter{e11}).tower, TowerTag::OddPlus);
  std::mt19937 rng(2);
  Field F5(5);
  for (int trial = 0; trial < 50; ++trial) {
    FqMatrix t = random_matrix(rng, 3, 2, 5);
    MatrixCharacter c{t};
    EXPECT_EQ(char_rank(F5, c), mat_rank(F5, t));
    FqMatrix s1 = random_matrix(rng, 2, 3, 5), s2 = random_matrix(rng, 2, 3, 5);
    EXPECT_EQ((c.exponent(F5, s1) + c.exponent(F5, s2)) % 5, c.exponent(F5, add(F5, s1, s2)));
  }
}
