#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "ranklab/cache.hpp"
#include "ranklab/error.hpp"
#include "ranklab/oscsemi.hpp"
#include "ranklab/parallel.hpp"
#include "ranklab/rank.hpp"
#include "ranklab/report.hpp"
#include "ranklab/verify.hpp"

using namespace ranklab;

namespace {

struct Globals {
  std::string cache_dir;
  bool no_cache = false;
  uint64_t seed = 0;
  int threads = 0;
  std::string out = "out";
};

TableStore make_store(const Globals& g) {
  if (g.no_cache) return TableStore(std::nullopt, g.seed);
  return TableStore(resolve_cache_dir(g.cache_dir), g.seed);
}

std::string render(const std::function<void(std::ostream&)>& f) {
  std::ostringstream os;
  f(os);
  return os.str();
}

int cmd_table(const Globals& gl, const std::string& spec) {
  auto store = make_store(gl);
  const auto& t = store.table(spec);
  auto file = std::filesystem::path(gl.out) / ("table_" + spec_slug(spec) + ".csv");
  write_file(file, render([&](std::ostream& os) { write_table_csv(os, t); }));
  std::cout << t.group->spec.str() << ": |G| = " << t.group->order() << ", " << t.group->num_classes()
            << " classes, " << t.size() << " irreps" << (store.loaded_from_disk(spec) ? " (cached)" : "") << "\n"
            << "wrote " << file.string() << "\n";
  return 0;
}

int cmd_ranks(const Globals& gl, const std::string& spec) {
  auto store = make_store(gl);
  const auto& t = store.table(spec);
  auto recs = rank_records(t);
  sort_records(recs);
  auto file = std::filesystem::path(gl.out) / ("ranks_" + spec_slug(spec) + ".csv");
  write_file(file, render([&](std::ostream& os) { write_ranks_csv(os, recs); }));
  std::map<int, int> by_rank;
  for (auto& r : recs) ++by_rank[r.tensor_rank];
  std::cout << t.group->spec.str() << ": " << recs.size() << " irreps";
  for (auto [k, c] : by_rank) std::cout << ", tensor rank " << k << ": " << c;
  std::cout << "\nwrote " << file.string() << "\n";
  return 0;
}

int cmd_eta(const Globals& gl, const std::string& pair_spec, const std::string& mode) {
  auto pair = PairSpec::parse(pair_spec);
  EtaMode m = EtaMode::Auto;
  if (mode == "inrange") m = EtaMode::InRange;
  else if (mode == "newspectrum") m = EtaMode::NewSpectrum;
  else if (mode != "auto") throw Error("cli.BadMode", "mode must be auto, inrange or newspectrum");
  auto store = make_store(gl);
  const auto& t = store.table(pair.first().str());
  const auto& tp = store.table(pair.second().str());
  auto tab = eta_correspondence(pair, t, tp, m);
  auto file = std::filesystem::path(gl.out) / ("eta_" + spec_slug(pair.str()) + ".csv");
  write_file(file, render([&](std::ostream& os) { write_eta_csv(os, tab, t, tp); }));
  int mapped = 0;
  for (auto& r : tab.rows) mapped += r.eta >= 0;
  std::cout << pair.str() << ": " << mapped << "/" << tab.rows.size() << " irreps of " << pair.second().str()
            << " in the domain, injective: " << (tab.injective ? "yes" : "no") << "\nwrote " << file.string() << "\n";
  return 0;
}

int cmd_crtable(const Globals& gl, const std::string& spec, const std::string& element) {
  auto store = make_store(gl);
  const auto& t = store.table(spec);
  auto a = write_crtable(t, element, gl.out);
  std::cout << t.group->spec.str() << " at " << element << ": " << a.recs.size() << " CSV rows\n"
            << "wrote " << a.csv.string() << ", " << a.svg.string() << ", " << a.summary.string() << "\n";
  return 0;
}

int cmd_semigroup(int n, int p) {
  auto r = semigroup_check(p, n);
  std::cout << "2W with W = F_" << p << "^" << 2 * n << ": " << r.lagrangians << " Lagrangians, " << r.pairs
            << " pair checks, " << r.passed << " passed, max residual " << r.max_residual << "\n";
  return r.passed == r.pairs ? 0 : 1;
}

int cmd_verify(const Globals& gl, const std::string& which, const VerifyOptions& base) {
  std::vector<std::string> suites;
  if (which == "all") suites = suite_names();
  else suites = {which};
  VerifyOptions opt = base;
  opt.out_dir = gl.out;
  opt.seed = gl.seed;
  auto store = make_store(gl);
  bool ok = true;
  for (const auto& s : suites) {
    auto r = run_suite(s, opt, store);
    for (auto& c : r.checks) std::cout << "[" << s << "] " << c << "\n";
    for (auto& f : r.findings) std::cout << "[" << s << "] finding " << f << "\n";
    std::cout << "[" << s << "] " << (r.passed ? "PASS" : "FAIL") << " (" << r.checks.size() << " checks, "
              << fixed(r.seconds, 1) << " s)\n";
    ok = ok && r.passed;
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite classical groups, Weil representations and rank invariants"};
  app.require_subcommand(1);
  Globals gl;
  app.add_option("--cache-dir", gl.cache_dir, "Table cache directory (default $RANKLAB_CACHE, then ./cache)");
  app.add_flag("--no-cache", gl.no_cache, "Do not read or write the table cache");
  app.add_option("--seed", gl.seed, "Seed for the Dixon splitting fallback")->default_val(0);
  app.add_option("--threads", gl.threads, "Worker threads, 0 for all cores")->default_val(0);
  app.add_option("--out", gl.out, "Output directory")->default_val("out");

  std::string spec, pair, mode = "auto", element = "transvection", suite;
  int n = 1, p = 3;
  VerifyOptions vopt;

  auto* table = app.add_subcommand("table", "Build or load a character table and write it as CSV");
  table->add_option("spec", spec, "Group spec FAMILY:n:p[:form=...]")->required();
  auto* ranks = app.add_subcommand("ranks", "U-rank and tensor rank of every irreducible");
  ranks->add_option("spec", spec)->required();
  auto* eta = app.add_subcommand("eta", "Eta correspondence for a dual pair");
  eta->add_option("pair", pair, "GLGL:n:k:p or SpO:2n:p:form=d1,...")->required();
  eta->add_option("--mode", mode, "auto, inrange or newspectrum")->default_val("auto");
  auto* crtable = app.add_subcommand("crtable", "Character ratios against tensor rank (CSV and SVG)");
  crtable->add_option("spec", spec)->required();
  crtable->add_option("--element", element, "identity, transvection or class:i")->default_val("transvection");
  auto* semigroup = app.add_subcommand("semigroup", "Oscillator semigroup relation on all pairs of Lagrangians");
  semigroup->add_option("--n", n)->default_val(1);
  semigroup->add_option("--p", p)->default_val(3);
  auto* verify = app.add_subcommand("verify", "Run a verification suite, or all of them");
  verify->add_option("suite", suite, "all or one of the suite names")->required();
  verify->add_option("--n", vopt.n, "Semigroup suite: W = F_p^{2n}")->default_val(1);
  verify->add_option("--p", vopt.p, "Semigroup suite prime")->default_val(3);
  verify->add_option("--pairs", vopt.weil_pairs, "Random pairs per group in the weil suite")->default_val(10000);

  CLI11_PARSE(app, argc, argv);
  set_thread_count(gl.threads);

  try {
    if (*table) return cmd_table(gl, spec);
    if (*ranks) return cmd_ranks(gl, spec);
    if (*eta) return cmd_eta(gl, pair, mode);
    if (*crtable) return cmd_crtable(gl, spec, element);
    if (*semigroup) return cmd_semigroup(n, p);
    if (*verify) return cmd_verify(gl, suite, vopt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
