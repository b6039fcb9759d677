#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "ranklab/cache.hpp"
#include "ranklab/error.hpp"
#include "ranklab/report.hpp"
#include "ranklab/verify.hpp"

using namespace ranklab;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  auto d = fs::temp_directory_path() / ("ranklab_test_" + name);
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

std::string slurp(const fs::path& f) {
  std::ifstream is(f, std::ios::binary);
  return {std::istreambuf_iterator<char>(is), {}};
}

std::vector<std::string> split(const std::string& s, const std::string& sep) {
  std::vector<std::string> out;
  size_t a = 0, b;
  while ((b = s.find(sep, a)) != std::string::npos) {
    out.push_back(s.substr(a, b - a));
    a = b + sep.size();
  }
  if (a < s.size()) out.push_back(s.substr(a));
  return out;
}

std::string saved(const CharacterTable& t) {
  std::ostringstream os;
  save_table(t, os);
  return os.str();
}

}  // namespace

TEST(Cache, RoundTripIsExact) {
  for (auto spec : {"GL:2:3", "SL:2:5", "O:2:3:form=hyp"}) {
    auto g = make_group(GroupSpec::parse(spec));
    auto t = char_table(g);
    std::istringstream is(saved(t));
    auto back = load_table(g, is);
    ASSERT_TRUE(back) << spec;
    ASSERT_EQ(back->size(), t.size());
    EXPECT_EQ(back->degrees, t.degrees);
    for (int i = 0; i < t.size(); ++i) EXPECT_TRUE(back->irr[i] == t.irr[i]) << spec << " irrep " << i;
    EXPECT_EQ(saved(*back), saved(t));
  }
}

TEST(Cache, LayoutIsOneLinePerClassAndIrrep) {
  auto g = make_group(GroupSpec::parse("GL:2:3"));
  auto lines = split(saved(char_table(g)), "\n");
  EXPECT_EQ(lines[0], "ranklab-table " + std::to_string(kCacheSchema));
  EXPECT_EQ(lines[1], "spec GL:2:3");
  EXPECT_EQ(lines[2], "order 48");
  // header (6) + classes + "irreps" line + irreps
  ASSERT_EQ(lines.size(), 6u + 8 + 1 + 8);
  // class line: n*n entries, size, order, exponent power classes
  EXPECT_EQ(split(lines[6], " ").size(), 4u + 2 + g->exponent());
  // irrep line: degree, then e coefficients per class
  EXPECT_EQ(split(lines[15], " ").size(), 1u + 8 * g->exponent());
}

TEST(Cache, MismatchForcesRecompute) {
  auto g = make_group(GroupSpec::parse("GL:2:3"));
  const std::string text = saved(char_table(g));
  auto reload = [&](std::string s) {
    std::istringstream is(s);
    return load_table(g, is).has_value();
  };
  EXPECT_TRUE(reload(text));
  std::string schema = text;
  schema.replace(0, text.find('\n'), "ranklab-table " + std::to_string(kCacheSchema + 1));
  EXPECT_FALSE(reload(schema));
  EXPECT_FALSE(reload(text.substr(0, text.size() / 2)));
  // wrong group
  auto other = make_group(GroupSpec::parse("SL:2:3"));
  std::istringstream is(text);
  EXPECT_FALSE(load_table(other, is).has_value());
  // corrupt one character value: the certificate rejects it
  auto lines = split(text, "\n");
  auto toks = split(lines.back(), " ");
  toks[1] = std::to_string(std::stoll(toks[1]) + 1);
  std::string row;
  for (size_t i = 0; i < toks.size(); ++i) row += (i ? " " : "") + toks[i];
  lines.back() = row;
  std::string bad;
  for (auto& l : lines) bad += l + "\n";
  EXPECT_FALSE(reload(bad));
}

TEST(Cache, StoreWritesAndReloads) {
  auto dir = scratch("store");
  {
    TableStore s(dir);
    EXPECT_EQ(s.table("GL:2:3").size(), 8);
    EXPECT_FALSE(s.loaded_from_disk("GL:2:3"));
  }
  EXPECT_TRUE(fs::exists(dir / "GL_2_3.table"));
  TableStore s2(dir);
  EXPECT_EQ(s2.table("GL:2:3").size(), 8);
  EXPECT_TRUE(s2.loaded_from_disk("GL:2:3"));
  // a stale schema on disk is recomputed and overwritten
  std::ofstream(dir / "GL_2_3.table") << "ranklab-table 0\n";
  TableStore s3(dir);
  EXPECT_EQ(s3.table("GL:2:3").size(), 8);
  EXPECT_FALSE(s3.loaded_from_disk("GL:2:3"));
  TableStore s4(dir);
  s4.table("GL:2:3");
  EXPECT_TRUE(s4.loaded_from_disk("GL:2:3"));
}

TEST(Cache, DirectoryPrecedence) {
  ::setenv("RANKLAB_CACHE", "/env/dir", 1);
  EXPECT_EQ(resolve_cache_dir("flag"), fs::path("flag"));
  EXPECT_EQ(resolve_cache_dir(""), fs::path("/env/dir"));
  ::unsetenv("RANKLAB_CACHE");
  EXPECT_EQ(resolve_cache_dir(""), fs::path("cache"));
  EXPECT_EQ(spec_slug("O:2:3:form=1,1"), "O_2_3_form_1_1");
}

TEST(Report, LogCrOracle) {
  EXPECT_FALSE(log_cr({0, 0}, 3));
  EXPECT_FALSE(log_cr({1e-12, 0}, 3));
  EXPECT_NEAR(*log_cr({1, 0}, 3), 0.0, 1e-15);
  // |CR| = q^{-k/2} gives k
  for (int q : {3, 5, 9})
    for (int k = 1; k <= 4; ++k) EXPECT_NEAR(*log_cr(std::polar(std::pow(q, -k / 2.0), 0.7), q), k, 1e-12);
}

TEST(Report, CrtableCsvShape) {
  auto t = char_table(make_group(GroupSpec::parse("Sp:2:3")));
  auto dir = scratch("crtable");
  auto a = write_crtable(t, "transvection", dir);
  const std::string csv = slurp(a.csv);
  auto lines = split(csv, "\r\n");
  ASSERT_EQ(lines.size(), 8u);  // header + 7 irreps of SL_2(3)
  EXPECT_EQ(lines[0], "irrep_id,degree,u_rank,tensor_rank,cr_re,cr_im,cr_abs,log_cr");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), std::count(csv.begin(), csv.end(), '\r'));
  for (size_t i = 1; i < lines.size(); ++i) {
    auto f = split(lines[i], ",");
    ASSERT_EQ(f.size(), 8u) << lines[i];
    // recompute |CR| from the table itself
    const int irrep = std::stoi(f[0]);
    const size_t el = resolve_element(t.group, "transvection");
    auto v = t.irr[irrep].values[t.group->class_of(el)].to_complex() / double(t.degrees[irrep]);
    EXPECT_NEAR(std::stod(f[6]), std::abs(v), 1e-6);
    if (std::abs(v) < kZeroCR) EXPECT_EQ(f[7], "-inf");
    else EXPECT_NEAR(std::stod(f[7]), -2 * std::log(std::abs(v)) / std::log(3.0), 1e-6);
  }
}

TEST(Report, ZeroRatioUsesSentinel) {
  // Sp_4(3) has an irrep vanishing on the transvection
  auto t = char_table(make_group(GroupSpec::parse("GL:3:3")));
  std::ostringstream os;
  write_crtable_csv(os, char_ratio_table(t, {"transvection"}), 0, 3);
  EXPECT_NE(os.str().find(",-inf\r\n"), std::string::npos);
}

TEST(Report, SvgSelfContainedAndDeterministic) {
  auto t = char_table(make_group(GroupSpec::parse("GL:2:3")));
  auto d1 = scratch("svg1"), d2 = scratch("svg2");
  auto a = write_crtable(t, "transvection", d1);
  auto b = write_crtable(t, "transvection", d2);
  const std::string svg = slurp(a.svg);
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  EXPECT_EQ(svg.find("href"), std::string::npos);
  EXPECT_EQ(svg.find("http://www.w3.org/2000/svg"), svg.find("xmlns=\"") + 7);
  EXPECT_EQ(std::count(svg.begin(), svg.end(), '<') , std::count(svg.begin(), svg.end(), '>'));
  EXPECT_EQ(slurp(a.csv), slurp(b.csv));
  EXPECT_EQ(svg, slurp(b.svg));
  EXPECT_EQ(slurp(a.summary), slurp(b.summary));
}

TEST(Report, SummaryStrata) {
  auto t = char_table(make_group(GroupSpec::parse("GL:2:3")));
  auto recs = char_ratio_table(t, {"transvection"});
  auto s = summarize_cr(recs, 0);
  int total = 0;
  for (auto& st : s.strata) {
    total += st.count;
    EXPECT_LE(st.min_abs, st.max_abs);
  }
  EXPECT_EQ(total, t.size());
  std::ostringstream os;
  write_cr_summary(os, s, "GL:2:3");
  EXPECT_NE(os.str().find("finding"), std::string::npos);
}

TEST(Verify, UnknownSuiteThrows) {
  TableStore s;
  EXPECT_THROW(run_suite("nope", {}, s), Error);
  EXPECT_EQ(suite_names().size(), 10u);
}

TEST(Verify, SemigroupSuiteCountsPairs) {
  TableStore s;
  auto r = run_suite("semigroup", {}, s);
  EXPECT_TRUE(r.passed);
  bool saw = false;
  for (auto& c : r.checks) saw = saw || c.find("1600 pair checks") != std::string::npos;
  EXPECT_TRUE(saw);
}
