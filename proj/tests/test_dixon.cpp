#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "ranklab/dixon.hpp"
#include "ranklab/error.hpp"

using namespace ranklab;

namespace {

std::vector<long long> sorted_degrees(const CharacterTable& t) {
  auto d = t.degrees;
  std::sort(d.begin(), d.end());
  return d;
}

void regular_oracle(const CharacterTable& t) {
  auto d = decompose(regular_character(t.group), t);
  for (int i = 0; i < t.size(); ++i) EXPECT_EQ(d.mult[i], t.degrees[i]);
}

}  // namespace

TEST(Dixon, CyclicGroup) {
  FqMatrix u = FqMatrix::identity(2);
  u(0, 1) = 1;
  auto g = FiniteMatrixGroup::enumerate(3, 2, {u});
  auto t = char_table(g);
  ASSERT_EQ(t.size(), 3);
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(t.degrees[i], 1);
    for (auto& v : t.irr[i].values) {
      // each value is a single cube root of unity
      int nz = 0;
      for (int j = 0; j < v.e(); ++j) nz += v[j] != 0;
      EXPECT_EQ(nz, 1);
    }
  }
}

TEST(Dixon, GL23) {
  auto t = char_table(make_gl(2, 3));
  EXPECT_EQ(t.size(), 8);
  EXPECT_EQ(sorted_degrees(t), (std::vector<long long>{1, 1, 2, 2, 2, 3, 3, 4}));
  regular_oracle(t);
  // trivial first
  EXPECT_TRUE(t.irr[0] == trivial_character(t.group));
}

TEST(Dixon, SL23) {
  auto t = char_table(make_sl(2, 3));
  EXPECT_EQ(sorted_degrees(t), (std::vector<long long>{1, 1, 1, 2, 2, 2, 3}));
  regular_oracle(t);
}

TEST(Dixon, SmallTables) {
  for (auto spec : {"GL:1:3", "GL:2:5", "SL:2:5", "O:2:3:form=1,2", "O:2:3:form=1,1", "Sp:2:5"}) {
    auto g = make_group(GroupSpec::parse(spec));
    auto t = char_table(g);
    long long s = 0;
    for (auto d : t.degrees) s += d * d;
    EXPECT_EQ(s, static_cast<long long>(g->order())) << spec;
    regular_oracle(t);
  }
}

TEST(Dixon, LinearCharactersMatchDerivedIndex) {
  for (auto spec : {"GL:2:3", "GL:2:5", "SL:2:3", "O:2:3:form=1,1"}) {
    auto g = make_group(GroupSpec::parse(spec));
    auto t = char_table(g);
    long long lin = std::count(t.degrees.begin(), t.degrees.end(), 1LL);
    auto d = derived_subgroup(g);
    EXPECT_EQ(lin, static_cast<long long>(g->order() / d.group->order())) << spec;
  }
}

TEST(Dixon, Deterministic) {
  auto a = char_table(make_gl(2, 5));
  auto b = char_table(make_gl(2, 5), DixonOptions{12345});
  ASSERT_EQ(a.size(), b.size());
  for (int i = 0; i < a.size(); ++i)
    for (size_t c = 0; c < a.irr[i].values.size(); ++c)
      EXPECT_EQ(a.irr[i].values[c].coeffs(), b.irr[i].values[c].coeffs());
}

TEST(Dixon, DecomposeErrors) {
  auto t = char_table(make_gl(2, 3));
  auto d = decompose(t.irr[3], t);
  for (int i = 0; i < t.size(); ++i) EXPECT_EQ(d.mult[i], i == 3 ? 1 : 0);
  auto virt = t.irr[0] - t.irr[1];
  EXPECT_THROW(decompose(virt, t), Error);
  auto dv = decompose(virt, t, true);
  EXPECT_TRUE(dv.virtual_character);
  ClassFunction half = trivial_character(t.group);
  half.values[1] = CycInt(t.group->exponent(), 0);
  EXPECT_THROW(decompose(half, t), Error);
}

TEST(Dixon, BorelInductionGivesSteinberg) {
  auto g = make_gl(2, 3);
  auto t = char_table(g);
  auto b = parabolic(g, {1, 1});
  auto ind = induce(trivial_character(b.group), b);
  auto d = decompose(ind, t);
  EXPECT_EQ(d.mult[0], 1);
  int st = -1;
  for (int i = 0; i < t.size(); ++i)
    if (d.mult[i] && i) st = i;
  ASSERT_GE(st, 0);
  EXPECT_EQ(t.degrees[st], 3);
}

TEST(Dixon, FrobeniusReciprocity) {
  auto g = make_gl(2, 3);
  auto tg = char_table(g);
  auto h = parabolic(g, {1, 1});
  auto th = char_table(h.group);
  std::mt19937 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    ClassFunction f = trivial_character(h.group) * 0, x = trivial_character(g) * 0;
    for (int i = 0; i < th.size(); ++i) f += th.irr[i] * static_cast<long long>(rng() % 3);
    for (int i = 0; i < tg.size(); ++i) x += tg.irr[i] * static_cast<long long>(rng() % 3);
    EXPECT_EQ(inner_product(induce(f, h), x), inner_product(f, restrict(x, h)));
  }
}

TEST(Dixon, PermutationCharacterGL33) {
  auto g = make_gl(3, 3);
  auto t = char_table(g);
  auto d = decompose(vector_permutation_character(g), t);
  EXPECT_EQ(d.mult[0], 2);
  // 27 = 1 + 1 + 12 + 13: the point, the lines of F^3, and the sign twist on lines
  std::vector<long long> degs;
  for (int i = 0; i < t.size(); ++i)
    for (long long k = 0; k < d.mult[i]; ++k) degs.push_back(t.degrees[i]);
  EXPECT_EQ(degs, (std::vector<long long>{1, 1, 12, 13}));
}

TEST(Dixon, FastDecomposerAgreesWithExact) {
  auto t = char_table(make_gl(2, 5));
  FastDecomposer fd(t);
  for (int i = 0; i < t.size(); i += 2)
    for (int j = 0; j < t.size(); j += 3) {
      auto exact = decompose(tensor(t.irr[i], t.irr[j]), t).mult;
      EXPECT_EQ(fd.product(i, j), exact);
    }
}
