#include "ranklab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iterator>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "ranklab/error.hpp"
#include "ranklab/oscsemi.hpp"
#include "ranklab/rank.hpp"
#include "ranklab/report.hpp"
#include "ranklab/sps.hpp"
#include "ranklab/weil.hpp"

namespace ranklab {

namespace {

class Recorder {
 public:
  explicit Recorder(SuiteResult& r) : r_(r) {}
  bool check(bool ok, const std::string& what) {
    r_.checks.push_back((ok ? "ok   " : "FAIL ") + what);
    if (!ok) r_.passed = false;
    return ok;
  }
  void finding(const std::string& what) { r_.findings.push_back(what); }

 private:
  SuiteResult& r_;
};

std::string sci(double x) {
  std::ostringstream os;
  os.precision(2);
  os << std::scientific << x;
  return os.str();
}

std::string str_set(const std::vector<int>& v) {
  std::string s = "{";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double max_abs(const OperatorMatrix& m) { return m.cwiseAbs().maxCoeff(); }

void suite_tables(Recorder& rec, const VerifyOptions& opt, TableStore& store) {
  const std::vector<std::pair<std::string, double>> specs = {
      {"GL:1:3", 0},  {"GL:2:3", 0},  {"GL:2:5", 0}, {"SL:2:3", 0},          {"SL:2:5", 0},
      {"GL:3:3", 60}, {"Sp:4:3", 1800}, {"O:2:3:form=hyp", 0}, {"O:2:3:form=1,1", 0}};
  for (const auto& [spec, budget] : specs) {
    auto g = store.group(spec);
    auto t0 = std::chrono::steady_clock::now();
    auto t = char_table(g, DixonOptions{opt.seed});
    const double secs = seconds_since(t0);
    bool cert = true;
    std::string why;
    try {
      certify_table(t);
    } catch (const Error& e) {
      cert = false;
      why = std::string(" (") + e.what() + ")";
    }
    long long sq = 0;
    for (long long d : t.degrees) sq += d * d;
    rec.check(cert, spec + ": orthogonality certificates" + why);
    rec.check(sq == static_cast<long long>(g->order()),
              spec + ": sum d^2 = " + std::to_string(sq) + ", |G| = " + std::to_string(g->order()) + ", " +
                  std::to_string(t.size()) + " irreps");
    if (budget > 0)
      rec.check(secs <= budget, spec + ": table in " + fixed(secs, 2) + " s (budget " + fixed(budget, 0) + " s)");
    store.put(spec, std::move(t));
  }
}

void suite_weil(Recorder& rec, const VerifyOptions& opt, TableStore& store) {
  std::mt19937_64 rng(opt.seed);
  for (int p : {3, 5, 7}) {
    const std::string spec = "Sp:2:" + std::to_string(p);
    auto g = store.group(spec);
    const Field& F = g->field();
    WeilRep w(g);
    std::vector<OperatorMatrix> ops(g->order());
    for (size_t i = 0; i < g->order(); ++i) ops[i] = w.op(i);
    double dev = 0;
    for (long long it = 0; it < opt.weil_pairs; ++it) {
      size_t a = rng() % g->order(), b = rng() % g->order();
      dev = std::max(dev, max_abs(ops[a] * ops[b] - ops[g->mul(a, b)]));
    }
    rec.check(dev < 1e-9, spec + ": multiplicativity on " + std::to_string(opt.weil_pairs) +
                              " random pairs, max deviation " + sci(dev));

    double idev = 0;
    for (int scale : {1, F.nonsquare()}) {
      WeilRep ws(g, {scale});
      SchrodingerModel rho(p, 1, scale);
      std::vector<HeisenbergElement> hs;
      for (int x = 0; x < p; ++x)
        for (int y = 0; y < p; ++y)
          for (int z = 0; z < p; ++z) hs.push_back(HeisenbergElement{{x, y}, z});
      for (size_t k = 0; k < g->generators().size(); ++k) {
        OperatorMatrix W = ws.generator_matrix(static_cast<int>(k));
        for (const auto& h : hs)
          idev = std::max(idev, max_abs(W * rho.rho(h) * W.adjoint() - rho.rho(heis_act(F, g->generators()[k], h))));
      }
    }
    rec.check(idev < kOpTol, spec + ": intertwining on all generators x all of H, both central characters, max deviation " + sci(idev));

    const auto& t = store.table(spec);
    for (int scale : {1, F.nonsquare()}) {
      auto chi = weil_character(g, scale);
      Rational nn = inner_product(chi, chi);
      rec.check(nn == Rational(2), spec + " scale " + std::to_string(scale) + ": <chi_omega, chi_omega> = " +
                                       std::to_string(nn.numerator()) + "/" + std::to_string(nn.denominator()));
      std::multiset<long long> degs;
      auto d = decompose(chi, t);
      for (int i = 0; i < t.size(); ++i)
        for (long long m = 0; m < d.mult[i]; ++m) degs.insert(t.degrees[i]);
      rec.check(degs == std::multiset<long long>{(p - 1) / 2, (p + 1) / 2},
                spec + " scale " + std::to_string(scale) + ": summand degrees (q-1)/2, (q+1)/2");
    }
  }
  const auto& t4 = store.table("Sp:4:3");
  std::multiset<long long> degs;
  auto d = decompose(weil_character(t4.group, 1), t4);
  for (int i = 0; i < t4.size(); ++i)
    for (long long m = 0; m < d.mult[i]; ++m) degs.insert(t4.degrees[i]);
  rec.check(degs == std::multiset<long long>{4, 5}, "Sp:4:3: summand degrees (q^2-1)/2 = 4, (q^2+1)/2 = 5");
}

void suite_fixedpoints(Recorder& rec, const VerifyOptions&, TableStore& store) {
  for (int p : {3, 5}) {
    const std::string spec = "Sp:2:" + std::to_string(p);
    auto g = store.group(spec);
    const Field& F = g->field();
    auto fixed_points = integer_class_function(g, [&](const FqMatrix& x) {
      long long c = 1;
      for (int i = 0; i < x.rows - mat_rank(F, sub(F, x, FqMatrix::identity(x.rows))); ++i) c *= p;
      return c;
    });
    for (int scale : {1, F.nonsquare()}) {
      auto chi = weil_character(g, scale);
      auto sq = tensor(chi, chi.conj());
      int bad = 0;
      for (int c = 0; c < g->num_classes(); ++c)
        if (!(sq.values[c].change_order(g->exponent()) == fixed_points.values[c].change_order(g->exponent()))) ++bad;
      rec.check(bad == 0, spec + " scale " + std::to_string(scale) + ": |chi_omega|^2 = p^{dim ker(g-1)} on all " +
                              std::to_string(g->num_classes()) + " classes (" + std::to_string(bad) + " mismatches)");
    }
  }
}

void suite_semigroup(Recorder& rec, const VerifyOptions& opt, TableStore&) {
  const int p = opt.p, N = opt.n;
  auto rep = semigroup_check(p, N);
  const std::string tag = "2W, W = F_" + std::to_string(p) + "^" + std::to_string(2 * N);
  rec.check(rep.pairs == rep.lagrangians * rep.lagrangians,
            tag + ": " + std::to_string(rep.pairs) + " pair checks over " + std::to_string(rep.lagrangians) + " Lagrangians");
  rec.check(rep.passed == rep.pairs, tag + ": q(M)q(L) proportional to q(M o L) with residual < 1e-8 on " +
                                         std::to_string(rep.passed) + "/" + std::to_string(rep.pairs) + " pairs (max " +
                                         sci(rep.max_residual) + ")");
  rec.finding(tag + ": pairs with vanishing scalar: " + std::to_string(rep.alpha_zero));

  Field F(p);
  auto ls = all_lagrangians(SymplecticSpace::doubled(p, N));
  auto delta = graph_lagrangian(F, FqMatrix::identity(2 * N));
  int closed = 0, ident = 0;
  std::set<Lagrangian> all(ls.begin(), ls.end());
  for (const auto& a : ls) {
    ident += compose(F, delta, a) == a && compose(F, a, delta) == a;
    for (const auto& b : ls) closed += all.count(compose(F, a, b)) > 0;
  }
  rec.check(closed == static_cast<int>(ls.size() * ls.size()), tag + ": composition closed on L(2W)");
  rec.check(ident == static_cast<int>(ls.size()), tag + ": Delta(W) is a two-sided identity");
  SchrodingerModel m(p, N);
  double r = proportionality_residual(quantize_doubled(m, delta), OperatorMatrix::Identity(m.dim(), m.dim()));
  rec.check(r < 1e-8, tag + ": q(Delta) proportional to I (residual " + sci(r) + ")");

  std::vector<int> ns = p == 3 ? std::vector<int>{1, 2} : std::vector<int>{N};
  for (int n : ns) {
    int c = sp_sp_orbit_count(p, n);
    rec.check(c == n + 1, "(Sp x Sp)-orbits on L(2W), n = " + std::to_string(n) + ": " + std::to_string(c) +
                              " (expected n + 1)");
  }
}

void suite_span(Recorder& rec, const VerifyOptions&, TableStore& store) {
  auto g = store.group("Sp:2:3");
  const Field& F = g->field();
  WeilRep w(g);
  auto rep = invariant_semigroup_span(w, g->generators());
  // Sp-orbits on W by direct enumeration
  std::set<std::vector<int>> seen;
  int orbits = 0;
  for (int v = 0; v < 9; ++v) {
    std::vector<int> x{v / 3, v % 3};
    if (seen.count(x)) continue;
    ++orbits;
    for (size_t i = 0; i < g->order(); ++i) {
      FqMatrix e = g->element(i);
      seen.insert({F.add(F.mul(e(0, 0), x[0]), F.mul(e(0, 1), x[1])), F.add(F.mul(e(1, 0), x[0]), F.mul(e(1, 1), x[1]))});
    }
  }
  rec.check(rep.rank == 2 && orbits == 2,
            "(Sp_2(3), O_1): span of quantized invariant Lagrangians has rank " + std::to_string(rep.rank) +
                ", Sp-orbits on W = " + std::to_string(orbits) + " (" + std::to_string(rep.fixed_lagrangians) +
                " fixed Lagrangians)");
  rec.check(rep.rank == rep.commutant_dim, "span equals the commutant of omega(Sp_2(3)) (dim " +
                                               std::to_string(rep.commutant_dim) + ")");
  auto o1 = invariant_semigroup_span(w, {FqMatrix::diag({F.neg(1), F.neg(1)})});
  rec.check(o1.rank == o1.commutant_dim, "O_1 side: span rank " + std::to_string(o1.rank) + " = commutant dim " +
                                             std::to_string(o1.commutant_dim));
}

void suite_eta(Recorder& rec, const VerifyOptions&, TableStore& store) {
  const auto& sp4 = store.table("Sp:4:3");
  std::map<int, std::string> owner;
  for (const char* spec : {"SpO:4:3:form=1", "SpO:4:3:form=2"}) {
    auto pair = PairSpec::parse(spec);
    const auto& o = store.table(pair.second().str());
    auto tab = eta_correspondence(pair, sp4, o);
    for (const auto& r : tab.rows) {
      rec.check(r.eta >= 0 && r.multiplicity == 1 && r.eta_rank == 1 && r.lower_residual,
                std::string(spec) + " tau " + std::to_string(r.tau) + ": eta = " + std::to_string(r.eta) +
                    " (degree " + std::to_string(sp4.degrees[r.eta]) + "), multiplicity " + std::to_string(r.multiplicity) +
                    ", U-rank " + std::to_string(r.eta_rank) + ", residual constituents of lower U-rank");
      auto [it, fresh] = owner.insert({r.eta, spec});
      rec.check(fresh || it->second == spec, std::string(spec) + " tau " + std::to_string(r.tau) +
                                                 ": image not shared with the other O_1");
    }
    rec.check(tab.injective, std::string(spec) + ": eta injective");
  }
  auto pair = PairSpec::parse("GLGL:3:1:3");
  const auto& gl3 = store.table("GL:3:3");
  const auto& gl1 = store.table("GL:1:3");
  auto tab = eta_correspondence(pair, gl3, gl1);
  for (const auto& r : tab.rows)
    rec.check(r.eta >= 0 && r.multiplicity == 1 && r.eta_rank == 1 && r.lower_residual,
              "GLGL:3:1:3 nu " + std::to_string(r.tau) + ": eta = " + std::to_string(r.eta) + " (degree " +
                  std::to_string(gl3.degrees[r.eta]) + "), multiplicity 1, U-rank 1");
  rec.check(tab.injective, "GLGL:3:1:3: eta injective");
}

void suite_ranks(Recorder& rec, const VerifyOptions&, TableStore& store) {
  for (const char* spec : {"GL:2:3", "GL:3:3", "SL:2:3", "SL:2:5", "Sp:4:3"}) {
    const auto& t = store.table(spec);
    auto recs = rank_records(t);  // throws on u_rank > tensor_rank
    int maxu = 0, maxt = 0;
    for (auto& r : recs) {
      maxu = std::max(maxu, r.u.rank);
      maxt = std::max(maxt, r.tensor_rank);
    }
    rec.check(true, std::string(spec) + ": u_rank <= tensor_rank on all " + std::to_string(recs.size()) +
                        " irreps (max u " + std::to_string(maxu) + ", max tensor " + std::to_string(maxt) + ")");
    auto f = rank_filtration(t, recs, "tensor");
    rec.check(f.violations == 0, std::string(spec) + ": tensor filtration sub-additive on " +
                                     std::to_string(f.pairs_checked) + " pairs");
  }
  for (const char* spec : {"GL:1:3", "GL:2:3", "GL:2:5", "GL:3:3"}) {
    const auto& t = store.table(spec);
    auto closure = tensor_ranks(t);
    auto intr = tensor_ranks_intrinsic(t);
    rec.check(closure.rank == intr, std::string(spec) + ": tensor rank (closure) = tensor rank (H_k eigenvectors)");
    const int top = *std::max_element(closure.rank.begin(), closure.rank.end());
    // GL_1 is all linear characters, so it stabilizes at level 0
    const int n = t.group->n();
    rec.check(closure.reached_all && top <= n && (n == 1 || top == n),
              std::string(spec) + ": stabilization at k = n = " + std::to_string(n) + " (max " + std::to_string(top) +
                  ")");
  }
  {
    const auto& t = store.table("Sp:2:3");
    auto tr = tensor_ranks(t);
    const int top = *std::max_element(tr.rank.begin(), tr.rank.end());
    rec.check(tr.reached_all && top == 2, "Sp:2:3: stabilization at k = 2n = 2 (max " + std::to_string(top) + ")");
    const auto& t4 = store.table("Sp:4:3");
    auto tr4 = tensor_ranks(t4);
    rec.finding("Sp:4:3: tensor rank reaches every irrep by k = " +
                std::to_string(*std::max_element(tr4.rank.begin(), tr4.rank.end())) + " (bound 2n = 4)");
  }
  const auto& gl3 = store.table("GL:3:3");
  auto ag = agreement_report(gl3, rank_records(gl3));
  rec.check(ag.small_failures == 0, "GL:3:3: u_rank k < n/4 implies tensor rank k (" +
                                          std::to_string(ag.small_checked) + " irreps)");
  rec.check(ag.half_failures == 0, "GL:3:3: u_rank k < floor(n/2) implies tensor rank <= 2k (" +
                                          std::to_string(ag.half_checked) + " irreps)");
  rec.finding("GL:3:3: in-range irreps with tensor rank = u_rank: " + std::to_string(ag.in_range_equal) + "/" +
              std::to_string(ag.in_range));
  for (auto& f : ag.findings) rec.finding("GL:3:3 " + f);
}

void suite_sps(Recorder& rec, const VerifyOptions&, TableStore& store) {
  std::map<int, SpsData> data;
  for (int n = 1; n <= 3; ++n) {
    const std::string spec = "GL:" + std::to_string(n) + ":3";
    const auto& t = store.table(spec);
    data[n] = sps_data(t);  // throws unless every nu_D is unique and D -> nu_D injective
    const auto& s = data[n];
    rec.check(true, spec + ": nu_D unique for all " + std::to_string(s.parts.size()) + " partitions, injective");
    int maxdeg = 0;
    for (bool b : s.nu_max_degree) maxdeg += b;
    rec.finding(spec + ": nu_D is the top-degree constituent of I_D for " + std::to_string(maxdeg) + "/" +
                std::to_string(s.parts.size()) + " partitions");
    for (auto& r : sps_tensor_rank_check(s, t))
      rec.check(r.tensor_rank == r.expected, spec + " " + r.d.str() + ": tensor rank of nu_D = " +
                                                 std::to_string(r.tensor_rank) + " = n - d_1");
    for (const auto& d : s.parts) {
      auto w = whittaker_rank_check(d, t, s);
      std::string dom;
      for (auto& [dp, m] : w.in_dominating) dom += " " + dp.str() + ":" + std::to_string(m);
      rec.check(w.ok, spec + " " + d.str() + ": Whittaker multiplicity " + std::to_string(w.in_own) +
                          " in I_D, " + std::to_string(w.in_nu) + " in nu_D, dominating" + (dom.empty() ? " none" : dom));
    }
    for (size_t i = 0; i < s.parts.size(); ++i)
      for (size_t j = 0; j < s.parts.size(); ++j) {
        long long a = intertwining_number(s, static_cast<int>(i), static_cast<int>(j));
        long long b = sn_double_cosets(s.parts[i], s.parts[j]);
        rec.check(a == b, spec + " <I" + s.parts[i].str() + ", I" + s.parts[j].str() + "> = " + std::to_string(a) +
                              ", S_n double cosets " + std::to_string(b));
      }
  }
  for (int n = 1; n <= 3; ++n)
    for (int k = 1; k <= n; ++k)
      for (const auto& dhat : partitions(k)) {
        auto rep = pieri_check(dhat, store.table("GL:" + std::to_string(k) + ":3"), data[k],
                               store.table("GL:" + std::to_string(n) + ":3"), data[n]);
        std::string found;
        for (auto& d : rep.found) found += d.str();
        rec.check(rep.ok, "Pieri n=" + std::to_string(n) + " dhat=" + dhat.str() + ": constituents " + found +
                              (rep.multiplicity_free ? ", multiplicity free" : ", NOT multiplicity free"));
      }
  for (auto [n, a] : {std::pair{2, 1}, std::pair{3, 1}, std::pair{3, 2}}) {
    auto r = two_block_induction(store.group("GL:" + std::to_string(n) + ":3"), a, 0, 1);
    rec.check(r.norm == 1, "GL:" + std::to_string(n) + ":3 " + r.label + ": irreducible (norm " +
                               std::to_string(r.norm) + ", degree " + std::to_string(r.degree) + ")");
  }
}

void suite_etaformula(Recorder& rec, const VerifyOptions&, TableStore& store) {
  const auto& gl3 = store.table("GL:3:3");
  const auto& gl2 = store.table("GL:2:3");
  const auto& gl1 = store.table("GL:1:3");
  auto s3 = sps_data(gl3), s2 = sps_data(gl2), s1 = sps_data(gl1);
  const int target = s3.nu_of(Partition({2, 1}));

  auto rows = eta_sps_check(3, gl3, s3, gl1, s1);
  rec.check(rows.size() == 1 && rows[0].ok && rows[0].eta == target,
            "GLGL:3:1:3: eta(nu_[1]) = nu_[2,1] (irrep " + std::to_string(target) + ", degree " +
                std::to_string(gl3.degrees[target]) + ")");

  // Independent route: the trivial-isotypic part of L^2(F_3^3) under GL_1 is the even functions.
  const Field& F = gl3.group->field();
  auto perm = vector_permutation_character(gl3.group);
  auto neg = integer_class_function(gl3.group, [&](const FqMatrix& g) {
    long long c = 1;
    for (int i = 0; i < 3 - mat_rank(F, add(F, g, FqMatrix::identity(3))); ++i) c *= 3;
    return c;
  });
  auto twice = decompose(perm + neg, gl3).mult;
  auto probe = make_u_probe(gl3.group);
  std::vector<int> top;
  for (int i = 0; i < gl3.size(); ++i)
    if (twice[i] && u_rank(gl3.irr[i], probe).rank == 1) top.push_back(i);
  rec.check(top.size() == 1 && top[0] == target && twice[target] == 2,
            "even functions on F_3^3: unique U-rank-1 constituent " + str_set(top) + " with multiplicity 1");

  auto tab = eta_correspondence(PairSpec::parse("GLGL:3:2:3"), gl3, gl2);
  std::vector<int> expected, got;
  for (int l = 1; l <= 2; ++l)
    for (int i : new_spectrum(gl2, TowerTag::Split, l)) expected.push_back(i);
  std::sort(expected.begin(), expected.end());
  for (auto& r : tab.rows)
    if (r.eta >= 0) got.push_back(r.tau);
  rec.check(tab.domain_matches && got == expected,
            "GLGL:3:2:3: tau with new-spectrum images " + str_set(got) + " = new l-spectrum of GL_2, l >= 1 " +
                str_set(expected));
  const int triv = gl2.find(trivial_character(gl2.group));
  rec.finding("GLGL:3:2:3: domain is every GL_2(3) irrep except the trivial one (" +
              std::string(static_cast<int>(got.size()) == gl2.size() - 1 &&
                                  std::find(got.begin(), got.end(), triv) == got.end()
                              ? "yes"
                              : "no") +
              ")");
  for (auto& r : eta_sps_check(3, gl3, s3, gl2, s2))
    rec.check(r.ok, "GLGL:3:2:3 dhat " + r.dhat.str() + ": " +
                        (r.in_domain ? "eta(nu_dhat) = nu" + r.image.str() : std::string("outside the domain")));
}

void suite_crtable(Recorder& rec, const VerifyOptions& opt, TableStore& store) {
  for (const char* spec : {"Sp:4:3", "GL:3:3"}) {
    const auto& t = store.table(spec);
    auto a = write_crtable(t, "transvection", opt.out_dir);
    std::ostringstream again;
    write_crtable_csv(again, char_ratio_table(t, {"transvection"}), 0, t.group->p());
    std::ifstream csv(a.csv, std::ios::binary), svg(a.svg);
    std::string csv_text((std::istreambuf_iterator<char>(csv)), {}), svg_text((std::istreambuf_iterator<char>(svg)), {});
    const long long lines = std::count(csv_text.begin(), csv_text.end(), '\n');
    rec.check(lines == t.size() + 1, std::string(spec) + ": CSV " + a.csv.string() + " has " + std::to_string(lines - 1) +
                                         " rows for " + std::to_string(t.size()) + " irreps");
    rec.check(csv_text == again.str(), std::string(spec) + ": CSV identical on regeneration");
    rec.check(svg_text.rfind("<svg", 0) == 0 && svg_text.find("</svg>") != std::string::npos &&
                  svg_text.find("href") == std::string::npos,
              std::string(spec) + ": SVG " + a.svg.string() + " is self-contained");
    for (const auto& s : a.stats.strata)
      rec.finding(std::string(spec) + " tensor rank " + std::to_string(s.tensor_rank) + ": " + std::to_string(s.count) +
                  " irreps, max |CR| " + fixed(s.max_abs, 4) + ", min |CR| " + fixed(s.min_abs, 4) + ", mean ln|CR| " +
                  fixed(s.mean_log_abs, 4) + (s.zeros ? ", zeros " + std::to_string(s.zeros) : ""));
    rec.finding(std::string(spec) + ": mean ln|CR| strictly decreasing in tensor rank: " +
                (a.stats.mean_log_strictly_decreasing ? "yes" : "no"));
  }
}

const std::map<std::string, std::function<void(Recorder&, const VerifyOptions&, TableStore&)>>& registry() {
  static const std::map<std::string, std::function<void(Recorder&, const VerifyOptions&, TableStore&)>> r = {
      {"tables", suite_tables},   {"weil", suite_weil},   {"fixedpoints", suite_fixedpoints},         {"semigroup", suite_semigroup},
      {"span", suite_span},       {"eta", suite_eta},     {"ranks", suite_ranks},           {"sps", suite_sps},
      {"etaformula", suite_etaformula}, {"crtable", suite_crtable}};
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> n = {"tables", "weil",  "fixedpoints", "semigroup",  "span",
                                             "eta",    "ranks", "sps",    "etaformula", "crtable"};
  return n;
}

SuiteResult run_suite(const std::string& name, const VerifyOptions& opt, TableStore& store) {
  auto it = registry().find(name);
  if (it == registry().end()) throw Error("cli.UnknownSuite", "unknown verify suite '" + name + "'");
  SuiteResult r;
  r.suite = name;
  Recorder rec(r);
  auto t0 = std::chrono::steady_clock::now();
  try {
    it->second(rec, opt, store);
  } catch (const Error& e) {
    rec.check(false, std::string("aborted: ") + e.what());
  } catch (const std::exception& e) {
    rec.check(false, std::string("aborted: ") + e.what());
  }
  r.seconds = seconds_since(t0);
  return r;
}

}  // namespace ranklab
