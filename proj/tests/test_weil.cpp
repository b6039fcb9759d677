#include <gtest/gtest.h>

#include <map>
#include <set>
#include <random>

#include "ranklab/dixon.hpp"
#include "ranklab/error.hpp"
#include "ranklab/weil.hpp"

using namespace ranklab;

namespace {

double max_abs(const OperatorMatrix& m) { return m.cwiseAbs().maxCoeff(); }

HeisenbergElement random_heis(std::mt19937& rng, int p, int N) {
  HeisenbergElement h;
  h.w.resize(2 * N);
  for (int& x : h.w) x = static_cast<int>(rng() % p);
  h.t = static_cast<int>(rng() % p);
  return h;
}

std::vector<HeisenbergElement> all_heis(int p, int N) {
  std::vector<HeisenbergElement> out;
  long long total = 1;
  for (int i = 0; i < 2 * N + 1; ++i) total *= p;
  for (long long c = 0; c < total; ++c) {
    HeisenbergElement h;
    long long x = c;
    h.w.resize(2 * N);
    for (int& v : h.w) {
      v = static_cast<int>(x % p);
      x /= p;
    }
    h.t = static_cast<int>(x % p);
    out.push_back(h);
  }
  return out;
}

// Heisenberg generating set: unit vectors of W and the centre.
std::vector<HeisenbergElement> heis_gens(int N) {
  std::vector<HeisenbergElement> out;
  for (int i = 0; i < 2 * N; ++i) {
    HeisenbergElement h;
    h.w.assign(2 * N, 0);
    h.w[i] = 1;
    out.push_back(h);
  }
  HeisenbergElement z;
  z.w.assign(2 * N, 0);
  z.t = 1;
  out.push_back(z);
  return out;
}

// #{w in F_p^{2n} : g w = w}, by enumeration.
long long fixed_vectors(const Field& F, const FqMatrix& g) {
  const int n = g.rows;
  long long total = 1, count = 0;
  for (int i = 0; i < n; ++i) total *= F.p();
  std::vector<int> v(n);
  for (long long c = 0; c < total; ++c) {
    long long x = c;
    for (int i = 0; i < n; ++i) {
      v[i] = static_cast<int>(x % F.p());
      x /= F.p();
    }
    bool fixed = true;
    for (int i = 0; i < n && fixed; ++i) {
      long long s = 0;
      for (int j = 0; j < n; ++j) s += 1LL * g(i, j) * v[j];
      fixed = F.reduce(s) == v[i];
    }
    count += fixed;
  }
  return count;
}

}  // namespace

TEST(Heisenberg, GroupLaw) {
  Field F(5);
  std::mt19937 rng(3);
  for (int it = 0; it < 200; ++it) {
    auto a = random_heis(rng, 5, 2), b = random_heis(rng, 5, 2), c = random_heis(rng, 5, 2);
    auto l = heis_mul(F, heis_mul(F, a, b), c), r = heis_mul(F, a, heis_mul(F, b, c));
    EXPECT_EQ(l.w, r.w);
    EXPECT_EQ(l.t, r.t);
    auto e = heis_mul(F, a, heis_inv(F, a));
    EXPECT_EQ(e.t, 0);
    // central elements commute with everything
    HeisenbergElement z{std::vector<int>(4, 0), a.t};
    auto zb = heis_mul(F, z, b), bz = heis_mul(F, b, z);
    EXPECT_EQ(zb.t, bz.t);
  }
}

TEST(Schroedinger, CentreActsByScalar) {
  SchrodingerModel m(5, 2);
  HeisenbergElement z{std::vector<int>(4, 0), 2};
  OperatorMatrix r = m.rho(z);
  OperatorMatrix want = root_of_unity(5, 2) * OperatorMatrix::Identity(m.dim(), m.dim());
  EXPECT_LT(max_abs(r - want), kOpTol);
}

TEST(Schroedinger, TranslationIsPermutation) {
  SchrodingerModel m(3, 2);
  HeisenbergElement h{{0, 0, 1, 2}, 0};
  OperatorMatrix r = m.rho(h);
  for (int v = 0; v < m.dim(); ++v) {
    auto pv = m.point(v);
    std::vector<int> src = {(pv[0] + 2) % 3, (pv[1] + 1) % 3};
    EXPECT_LT(std::abs(r(v, m.index(src)) - 1.0), kOpTol);
    EXPECT_NEAR(r.row(v).cwiseAbs().sum(), 1.0, kOpTol);
  }
}

TEST(Schroedinger, Homomorphism) {
  std::mt19937 rng(11);
  int checked = 0;
  for (int p : {3, 5})
    for (int N = 1; N <= 3; ++N) {
      if (p == 5 && N == 3) continue;
      SchrodingerModel m(p, N, p == 3 ? 2 : 1);
      for (int it = 0; it < 100; ++it, ++checked) {
        auto a = random_heis(rng, p, N), b = random_heis(rng, p, N);
        double d = max_abs(m.rho(a) * m.rho(b) - m.rho(heis_mul(m.field(), a, b)));
        ASSERT_LT(d, kOpTol);
      }
    }
  EXPECT_GE(checked, 500);
}

TEST(Weil, IdentityAndTrivialGenerators) {
  auto g = make_sp(4, 3);
  WeilRep w(g);
  EXPECT_EQ(w.dim(), 9);
  EXPECT_LT(max_abs(w.op(g->identity()) - OperatorMatrix::Identity(9, 9)), kOpTol);
  FqMatrix zero(2, 2);
  EXPECT_LT(max_abs(w.op(sp_u(g->field(), zero)) - OperatorMatrix::Identity(9, 9)), kOpTol);
  EXPECT_LT(max_abs(w.op(sp_m(g->field(), FqMatrix::identity(2))) - OperatorMatrix::Identity(9, 9)), kOpTol);
}

TEST(Weil, GeneratorsAreUnitary) {
  for (auto [size, p] : {std::pair{2, 5}, std::pair{4, 3}}) {
    WeilRep w(make_sp(size, p));
    for (size_t k = 0; k < w.group()->generators().size(); ++k) {
      OperatorMatrix m = w.generator_matrix(static_cast<int>(k));
      EXPECT_LT(max_abs(m * m.adjoint() - OperatorMatrix::Identity(w.dim(), w.dim())), kOpTol);
    }
  }
}

TEST(Weil, IntertwinesHeisenberg) {
  for (auto [size, p] : {std::pair{2, 3}, std::pair{2, 5}, std::pair{2, 7}, std::pair{4, 3}}) {
    auto g = make_sp(size, p);
    const Field& F = g->field();
    for (int scale : {1, F.nonsquare()}) {
      WeilRep w(g, {scale});
      SchrodingerModel rho(p, size / 2, scale);
      for (size_t k = 0; k < g->generators().size(); ++k) {
        OperatorMatrix W = w.generator_matrix(static_cast<int>(k));
        for (auto& h : heis_gens(size / 2)) {
          auto gh = heis_act(F, g->generators()[k], h);
          double d = max_abs(W * rho.rho(h) * W.adjoint() - rho.rho(gh));
          EXPECT_LT(d, kOpTol) << "p=" << p << " gen " << k;
        }
      }
    }
  }
}

TEST(Weil, ExactMultiplicativity) {
  std::mt19937 rng(5);
  for (auto [size, p] : {std::pair{2, 5}, std::pair{2, 7}, std::pair{4, 3}}) {
    auto g = make_sp(size, p);
    for (int scale : {1, g->field().nonsquare()}) {
      WeilRep w(g, {scale});
      for (int it = 0; it < 40; ++it) {
        size_t a = rng() % g->order(), b = rng() % g->order();
        EXPECT_LT(max_abs(w.op(a) * w.op(b) - w.op(g->mul(a, b))), kOpTol);
      }
    }
  }
}

TEST(Weil, MinusIdentityIsParity) {
  auto g = make_sp(2, 3);
  WeilRep w(g);
  FqMatrix minus = FqMatrix::diag({2, 2});
  OperatorMatrix m = w.op(minus);
  EXPECT_LT(max_abs(m * m - OperatorMatrix::Identity(3, 3)), kOpTol);
  std::complex<double> tr = m.trace();
  EXPECT_GT(std::abs(std::abs(tr) - 3.0), 0.5);
  // eigenvalues +-1 with multiplicities (q+1)/2 and (q-1)/2
  EXPECT_NEAR(std::abs(tr.real()), 1.0, kOpTol);
}

TEST(Weil, StoneVonNeumannAveraging) {
  std::mt19937 rng(17);
  std::normal_distribution<double> nd;
  for (auto [size, p] : {std::pair{2, 3}, std::pair{4, 3}}) {
    auto g = make_sp(size, p);
    const Field& F = g->field();
    WeilRep w(g);
    SchrodingerModel rho(p, size / 2);
    auto H = all_heis(p, size / 2);
    std::vector<OperatorMatrix> rh;
    for (auto& h : H) rh.push_back(rho.rho(h));
    std::vector<size_t> sample = {g->identity()};
    for (int i = 0; i < 3; ++i) sample.push_back(rng() % g->order());
    for (size_t gi : sample) {
      FqMatrix gm = g->element(gi);
      OperatorMatrix C(w.dim(), w.dim());
      for (int i = 0; i < C.size(); ++i) C.data()[i] = {nd(rng), nd(rng)};
      OperatorMatrix A = OperatorMatrix::Zero(w.dim(), w.dim());
      for (size_t i = 0; i < H.size(); ++i) A += rho.rho(heis_act(F, gm, H[i])) * C * rh[i].adjoint();
      A /= static_cast<double>(H.size());
      OperatorMatrix W = w.op(gi);
      std::complex<double> lambda = (W.adjoint() * A).trace() / static_cast<double>(w.dim());
      ASSERT_GT(std::abs(lambda), 1e-6);
      EXPECT_LT(max_abs(A - lambda * W), 1e-8);
    }
  }
}

TEST(WeilCharacter, DegreeAndNorm) {
  for (auto [size, p] : {std::pair{2, 3}, std::pair{2, 5}, std::pair{4, 3}}) {
    auto g = make_sp(size, p);
    auto chi = weil_character(g);
    long long q = 1;
    for (int i = 0; i < size / 2; ++i) q *= p;
    EXPECT_EQ(chi.degree(), q);
    EXPECT_EQ(inner_product(chi, chi), Rational(2));
  }
}

TEST(WeilCharacter, SquaredNormCountsFixedVectors) {
  for (auto [size, p] : {std::pair{2, 3}, std::pair{2, 5}, std::pair{4, 3}}) {
    auto g = make_sp(size, p);
    auto chi = weil_character(g);
    auto lhs = tensor(chi, chi.conj());
    const Field& F = g->field();
    auto rhs = integer_class_function(g, [&](const FqMatrix& m) { return fixed_vectors(F, m); });
    EXPECT_TRUE(lhs == rhs) << "Sp_" << size << "(" << p << ")";
  }
}

TEST(WeilCharacter, TwoCentralCharactersDiffer) {
  for (auto [size, p] : {std::pair{2, 3}, std::pair{2, 5}, std::pair{4, 3}}) {
    auto g = make_sp(size, p);
    auto a = weil_character(g, 1), b = weil_character(g, g->field().nonsquare());
    EXPECT_FALSE(a == b);
    EXPECT_EQ(inner_product(a, b), Rational(0));
    // the four summands are irreducible of degrees (q +- 1)/2
    auto t = char_table(g);
    std::multiset<long long> degs;
    for (auto* f : {&a, &b}) {
      auto d = decompose(*f, t);
      for (int i = 0; i < t.size(); ++i)
        if (d.mult[i]) {
          EXPECT_EQ(d.mult[i], 1);
          degs.insert(t.degrees[i]);
        }
    }
    long long q = 1;
    for (int i = 0; i < size / 2; ++i) q *= p;
    EXPECT_EQ(degs, (std::multiset<long long>{(q - 1) / 2, (q - 1) / 2, (q + 1) / 2, (q + 1) / 2}));
  }
}

TEST(WeilCharacter, SL2TransportMatchesSp2) {
  auto sl = make_sl(2, 3);
  auto chi = weil_character(sl);
  EXPECT_EQ(chi.degree(), 3);
  EXPECT_EQ(inner_product(chi, chi), Rational(2));
  EXPECT_THROW(WeilRep{sl}, Error);
}

TEST(WeilCharacter, SiegelRestrictionTypes) {
  for (auto [size, p] : {std::pair{2, 3}, std::pair{4, 3}}) {
    auto g = make_sp(size, p);
    const Field& F = g->field();
    const int n = size / 2;
    for (int scale : {1, F.nonsquare()}) {
      auto chi = weil_character(g, scale);
      auto U = siegel_unipotent(g);
      auto res = restrict(chi, U);
      // gamma_T for every symmetric T
      std::map<int, long long> by_rank;
      int pairs = 1;
      for (int i = 0; i < n * (n + 1) / 2; ++i) pairs *= p;
      for (int code = 0; code < pairs; ++code) {
        FqMatrix t(n, n);
        int x = code;
        for (int i = 0; i < n; ++i)
          for (int j = i; j < n; ++j) {
            t(i, j) = t(j, i) = x % p;
            x /= p;
          }
        // gamma_T(u(S)) = chi_0(tr(T S)); T enters with a 1/2 on off-diagonal pairing
        std::vector<CycInt> vals;
        for (int c = 0; c < U.group->num_classes(); ++c) {
          FqMatrix m = U.group->element(U.group->class_rep(c)), s(n, n);
          for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) s(i, j) = m(i, n + j);
          vals.push_back(CycInt::root(U.group->exponent(),
                                      MatrixCharacter{t}.exponent(F, s) * (U.group->exponent() / p)));
        }
        auto mult = inner_product(res, ClassFunction(U.group, vals));
        ASSERT_EQ(mult.denominator(), 1);
        if (mult.numerator() == 0) continue;
        auto cls = char_type(F, MatrixCharacter{t});
        by_rank[cls.rank] += mult.numerator();
        if (cls.rank == 0) EXPECT_EQ(mult.numerator(), 1);
        if (cls.rank == 1) {
          // T = (b/2) y y^t is hit by y and -y
          EXPECT_EQ(mult.numerator(), 2);
          EXPECT_EQ(cls.disc, F.legendre(F.mul(F.reduce(scale), F.half())));
        }
        EXPECT_LE(cls.rank, 1);
      }
      long long q = 1;
      for (int i = 0; i < n; ++i) q *= p;
      EXPECT_EQ(by_rank[0] + by_rank[1], q);
    }
  }
}

TEST(DualPair, GLGLPointCounts) {
  auto g1 = make_gl(1, 3);
  auto j = glgl_character(g1, g1);
  EXPECT_EQ(j.values[0][0].as_integer(), 3);
  auto g3 = make_gl(3, 3);
  auto j31 = glgl_character(g3, g1);
  EXPECT_EQ(j31.values[0][0].as_integer(), 27);
  // restriction to GL_3 is the permutation character on F_3^3
  EXPECT_TRUE(joint_restrict_first(j31) == vector_permutation_character(g3));
  EXPECT_THROW(glgl_character(g3, g3), Error);
}

TEST(DualPair, GLGLMatchesBruteForceCount) {
  auto a = make_gl(2, 3), b = make_gl(2, 3);
  auto j = glgl_character(a, b);
  const Field& F = a->field();
  for (int c = 0; c < a->num_classes(); ++c)
    for (int d = 0; d < b->num_classes(); ++d) {
      FqMatrix g = a->element(a->class_rep(c)), h = b->element(b->class_rep(d));
      FqMatrix hi = inverse(F, h);
      long long count = 0;
      for (int code = 0; code < 81; ++code) {
        FqMatrix t(2, 2);
        int x = code;
        for (int& v : t.a) {
          v = x % 3;
          x /= 3;
        }
        count += mul(F, mul(F, g, t), hi) == t;
      }
      EXPECT_EQ(j.values[c][d].as_integer(), count);
    }
}

TEST(DualPair, SpOnePlusRestrictsToWeil) {
  auto sp = make_sp(2, 3);
  auto o1 = make_group(GroupSpec::parse("O:1:3:form=1"));
  auto j = spo_character(sp, o1);
  EXPECT_TRUE(joint_restrict_first(j) == weil_character(sp));
}

TEST(DualPair, SpOCommutes) {
  auto sp = make_sp(4, 3);
  auto o2 = make_group(GroupSpec::parse("O:2:3:form=1,2"));
  WeilRep w(sp, {1, 2});
  EXPECT_LT(spo_commutator_defect(w, o2), kOpTol);
  auto j = spo_character(sp, o2);
  EXPECT_EQ(j.values[0][0].as_integer(), 81);
  // the O side acts by permutations: its restriction counts fixed matrices
  auto second = joint_restrict_second(j);
  EXPECT_EQ(inner_product(second, second).denominator(), 1);
}

TEST(DualPair, DimCapExceeded) {
  auto sp = make_sp(4, 3);
  auto o = make_group(GroupSpec::parse("O:4:3:form=1,1,1,1"));
  try {
    spo_character(sp, o);
    FAIL() << "expected DimCapExceeded";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "weil.DimCapExceeded");
  }
}
