#include "ranklab/rank.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "ranklab/error.hpp"
#include "ranklab/parallel.hpp"

namespace ranklab {

namespace {

bool is_hyperbolic(const GroupPtr& g) {
  if (g->spec.family != Family::OForm || !g->spec.form || g->n() % 2) return false;
  const auto& b = *g->spec.form;
  const int m = g->n() / 2;
  for (int i = 0; i < g->n(); ++i)
    for (int j = 0; j < g->n(); ++j)
      if (b(i, j) != ((j == i + m || i == j + m) ? 1 : 0)) return false;
  return true;
}

// Half the matrix size for Sp and O_{n,n}, matrix size for GL.
int family_n(const GroupPtr& g, RankFamily f) { return f == RankFamily::GL ? g->n() : g->n() / 2; }

long long to_integer(const CycInt& x, const char* what) {
  auto v = x.as_integer();
  if (!v) throw Error("rank.NotInteger", std::string(what) + " is not an integer");
  return *v;
}

long long nonneg_integer(const Rational& r, const char* what) {
  if (r.denominator() != 1 || r.numerator() < 0)
    throw TheoremFalsified("rank.NotACharacter", std::string(what) + " multiplicity is not a nonnegative integer");
  return r.numerator();
}

std::vector<int> linear_indices(const CharacterTable& t) {
  std::vector<int> out;
  for (int i = 0; i < t.size(); ++i)
    if (t.degrees[i] == 1) out.push_back(i);
  return out;
}

int trivial_index(const CharacterTable& t) {
  int i = t.find(trivial_character(t.group));
  if (i < 0) throw Error("rank.BadTable", "trivial character missing from table");
  return i;
}

std::vector<int> set_minus(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

RankFamily rank_family(const GroupPtr& g) {
  switch (g->spec.family) {
    case Family::GL: return RankFamily::GL;
    case Family::Sp: return RankFamily::Sp;
    case Family::SL:
      if (g->n() == 2) return RankFamily::Sp;
      break;
    case Family::OForm:
      if (is_hyperbolic(g)) return RankFamily::Onn;
      break;
    default: break;
  }
  throw Error("rank.UnsupportedFamily", "no rank theory for " + g->spec.str());
}

const char* family_name(RankFamily f) {
  switch (f) {
    case RankFamily::GL: return "GL";
    case RankFamily::Sp: return "Sp";
    case RankFamily::Onn: return "O_nn";
  }
  return "?";
}

UProbe make_u_probe(const GroupPtr& g) {
  UProbe pr;
  pr.family = rank_family(g);
  const Field& F = g->field();
  int a, b;
  if (pr.family == RankFamily::GL) {
    a = g->n() / 2;
    b = g->n() - a;
    pr.u = standard_subgroup(g, a, b);
    pr.max_rank = std::min(a, b);
    pr.low_bound = std::min(a, b);
  } else {
    a = b = g->n() / 2;
    pr.u = pr.family == RankFamily::Onn ? siegel_unipotent(g) : standard_subgroup(g, a, b);
    pr.max_rank = pr.family == RankFamily::Onn ? 2 * (a / 2) : a;
    pr.low_bound = pr.family == RankFamily::Onn ? a - 1 : a;
  }

  std::vector<FqMatrix> params;
  std::vector<std::pair<int, std::optional<SymFormClass>>> tags;
  for (int r = 0; r <= pr.max_rank; ++r) {
    if (pr.family == RankFamily::GL) {
      FqMatrix t(b, a);
      for (int i = 0; i < r; ++i) t(i, i) = 1;
      params.push_back(t);
      tags.push_back({r, std::nullopt});
    } else if (pr.family == RankFamily::Sp) {
      for (int d : {1, F.nonsquare()}) {
        if (r == 0 && d != 1) continue;
        FqMatrix t(a, a);
        for (int i = 0; i < r; ++i) t(i, i) = i + 1 == r ? d : 1;
        params.push_back(t);
        tags.push_back({r, r ? std::optional(char_type(F, MatrixCharacter{t})) : std::nullopt});
      }
    } else {
      if (r % 2) continue;
      FqMatrix t(a, a);
      for (int i = 0; i + 1 < r; i += 2) {
        t(i, i + 1) = 1;
        t(i + 1, i) = F.neg(1);
      }
      params.push_back(t);
      tags.push_back({r, std::nullopt});
    }
  }

  const auto& U = *pr.u.group;
  const int eu = U.exponent();
  for (size_t k = 0; k < params.size(); ++k) {
    std::vector<CycInt> vals;
    for (int c = 0; c < U.num_classes(); ++c) {
      FqMatrix m = U.element(U.class_rep(c));
      FqMatrix x(a, b);
      for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) x(i, j) = m(i, a + j);
      const int ex = trace(F, mul(F, params[k], x));
      vals.push_back(CycInt::root(eu, static_cast<long long>(ex) * eu / F.p()));
    }
    pr.reps.push_back({tags[k].first, tags[k].second, params[k], ClassFunction(pr.u.group, std::move(vals))});
  }
  return pr;
}

URank u_rank(const ClassFunction& chi, const UProbe& probe) {
  auto res = restrict(chi, probe.u);
  URank out;
  std::vector<SymFormClass> top;
  for (const auto& rep : probe.reps) {
    long long m = nonneg_integer(inner_product(res, rep.psi), "U-character");
    if (m == 0) continue;
    if (rep.rank > out.rank) {
      out.rank = rep.rank;
      top.clear();
    }
    if (rep.rank == out.rank && rep.type) top.push_back(*rep.type);
  }
  out.low = out.rank < probe.low_bound;
  if (probe.family == RankFamily::Sp && out.rank > 0 && !top.empty() &&
      std::all_of(top.begin(), top.end(), [&](const SymFormClass& c) { return c == top[0]; }))
    out.type = top[0];
  return out;
}

URank u_rank(const ClassFunction& chi) { return u_rank(chi, make_u_probe(chi.group)); }

TensorSetup tensor_setup(const CharacterTable& t) {
  const auto fam = rank_family(t.group);
  TensorSetup s;
  std::set<int> gens;
  if (fam == RankFamily::Sp) {
    s.level0 = {trivial_index(t)};
    const int ns = t.group->field().nonsquare();
    for (int b : {1, ns})
      for (int i : support(decompose(weil_character(t.group, b), t).mult)) gens.insert(i);
    s.bound = 2 * family_n(t.group, fam);
  } else {
    // GL: L^2(F^n) constituents and their twists. O_{n,n}: the (O_{n,n}, Sp_2) model on
    // M_{2n,1} is again the permutation character on vectors.
    s.level0 = linear_indices(t);
    auto base = support(decompose(vector_permutation_character(t.group), t).mult);
    for (int r : base)
      for (int l : s.level0) {
        int i = t.find(tensor(t.irr[r], t.irr[l]));
        if (i < 0) throw Error("rank.BadTable", "twist of an irreducible is not in the table");
        gens.insert(i);
      }
    s.bound = t.group->n();
  }
  s.generators.assign(gens.begin(), gens.end());
  return s;
}

TensorRanks tensor_ranks(const CharacterTable& t) {
  auto setup = tensor_setup(t);
  FastDecomposer fd(t);
  TensorRanks out;
  out.bound = setup.bound;
  out.rank.assign(t.size(), -1);
  std::vector<int> frontier = setup.level0;
  for (int i : frontier) out.rank[i] = 0;
  for (int k = 1; k <= setup.bound && !frontier.empty(); ++k) {
    std::vector<int> next;
    for (int s : frontier)
      for (int r : setup.generators)
        for (int c : support(fd.product(s, r)))
          if (out.rank[c] < 0) {
            out.rank[c] = k;
            next.push_back(c);
          }
    frontier = std::move(next);
  }
  out.reached_all = std::none_of(out.rank.begin(), out.rank.end(), [](int r) { return r < 0; });
  return out;
}

int tensor_rank(const ClassFunction& chi, const CharacterTable& t) {
  int i = t.find(chi);
  if (i < 0) throw Error("rank.NotIrreducible", "character not in table");
  auto tr = tensor_ranks(t);
  if (tr.rank[i] < 0)
    throw TheoremFalsified("rank.NotReached", "irreducible " + std::to_string(i) + " not reached by k <= " +
                                                  std::to_string(tr.bound));
  return tr.rank[i];
}

std::vector<int> tensor_ranks_intrinsic(const CharacterTable& t) {
  if (rank_family(t.group) != RankFamily::GL)
    throw Error("rank.UnsupportedFamily", "intrinsic tensor rank is defined for GL only");
  const int n = t.group->n();
  std::vector<int> out(t.size(), -1);
  // Linear characters factor through det and are trivial on [H_k, H_k] inside SL_n,
  // so twisting does not change the test.
  for (int k = 0; k <= n; ++k) {
    auto d = derived_subgroup(h_subgroup(t.group, k));
    auto one = trivial_character(d.group);
    for (int i = 0; i < t.size(); ++i) {
      if (out[i] >= 0) continue;
      if (inner_product(restrict(t.irr[i], d), one) > 0) out[i] = k;
    }
  }
  return out;
}

int tensor_rank_intrinsic(const ClassFunction& chi) {
  auto t = char_table(chi.group);
  int i = t.find(chi);
  if (i < 0) throw Error("rank.NotIrreducible", "character not in table");
  return tensor_ranks_intrinsic(t)[i];
}

std::vector<int> tower_form(const Field& F, TowerTag tower, int step) {
  if (step < 0) throw Error("rank.BadStep", "negative tower step");
  const int ns = F.nonsquare();
  std::vector<int> kernel;
  switch (tower) {
    case TowerTag::Zero:
    case TowerTag::Split: break;
    case TowerTag::OddPlus: kernel = {1}; break;
    case TowerTag::OddMinus: kernel = {ns}; break;
    case TowerTag::NonSplitEven: kernel = {1, F.neg(ns)}; break;
  }
  if (step == 0) return {};
  std::vector<int> form = kernel;
  const int planes = kernel.empty() ? step : step - 1;
  for (int i = 0; i < planes; ++i) {
    form.push_back(1);
    form.push_back(F.neg(1));
  }
  return form;
}

TowerTag parse_tower(const std::string& s) {
  if (s == "split" || s == "Split") return TowerTag::Split;
  if (s == "odd+" || s == "OddPlus" || s == "+") return TowerTag::OddPlus;
  if (s == "odd-" || s == "OddMinus" || s == "-") return TowerTag::OddMinus;
  if (s == "nonsplit" || s == "NonSplitEven") return TowerTag::NonSplitEven;
  throw Error("rank.BadTower", "unknown tower '" + s + "'");
}

ClassFunction tower_character(const GroupPtr& g, TowerTag tower, int step) {
  const auto fam = rank_family(g);
  ClassFunction out = trivial_character(g);
  if (fam == RankFamily::GL) {
    auto v = vector_permutation_character(g);
    for (int i = 0; i < step; ++i) out = tensor(out, v);
    return out;
  }
  if (fam != RankFamily::Sp) throw Error("rank.UnsupportedFamily", "towers are modeled for GL and Sp");
  const Field& F = g->field();
  // omega for chi_b depends only on the square class of b
  std::map<int, ClassFunction> cache;
  for (int b : tower_form(F, tower, step)) {
    const int cls = F.legendre(b);
    if (!cache.count(cls)) cache[cls] = weil_character(g, cls == 1 ? 1 : F.nonsquare());
    out = tensor(out, cache[cls]);
  }
  return out;
}

std::vector<int> new_spectrum(const CharacterTable& t, TowerTag tower, int step) {
  auto here = support(decompose(tower_character(t.group, tower, step), t).mult);
  if (step == 0) return here;
  auto before = support(decompose(tower_character(t.group, tower, step - 1), t).mult);
  return set_minus(here, before);
}

PairSpec PairSpec::parse(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ':')) parts.push_back(tok);
  auto num = [&](const std::string& x) {
    try {
      size_t pos = 0;
      int v = std::stoi(x, &pos);
      if (pos != x.size()) throw std::invalid_argument(x);
      return v;
    } catch (const std::exception&) {
      throw Error("rank.BadPair", "bad number '" + x + "' in " + s);
    }
  };
  PairSpec p;
  if (parts.size() == 4 && parts[0] == "GLGL") {
    p.kind = GLGL;
    p.n = num(parts[1]);
    p.k = num(parts[2]);
    p.p = num(parts[3]);
  } else if (parts.size() == 4 && parts[0] == "SpO" && parts[3].rfind("form=", 0) == 0) {
    p.kind = SpO;
    int size = num(parts[1]);
    if (size % 2) throw Error("rank.BadPair", "Sp size must be even in " + s);
    p.n = size / 2;
    p.p = num(parts[2]);
    std::stringstream fs(parts[3].substr(5));
    while (std::getline(fs, tok, ',')) p.form.push_back(num(tok));
    p.k = static_cast<int>(p.form.size());
  } else {
    throw Error("rank.BadPair", "expected GLGL:n:k:p or SpO:2n:p:form=d1,... got " + s);
  }
  if (p.n < 1 || p.k < 1 || !is_prime(p.p) || p.p == 2) throw Error("rank.BadPair", "bad parameters in " + s);
  return p;
}

std::string PairSpec::str() const {
  std::string s;
  if (kind == GLGL) return "GLGL:" + std::to_string(n) + ":" + std::to_string(k) + ":" + std::to_string(p);
  s = "SpO:" + std::to_string(2 * n) + ":" + std::to_string(p) + ":form=";
  for (size_t i = 0; i < form.size(); ++i) s += (i ? "," : "") + std::to_string(form[i]);
  return s;
}

GroupSpec PairSpec::first() const {
  GroupSpec g;
  g.family = kind == GLGL ? Family::GL : Family::Sp;
  g.n = kind == GLGL ? n : 2 * n;
  g.p = p;
  return g;
}

GroupSpec PairSpec::second() const {
  GroupSpec g;
  g.p = p;
  g.n = k;
  if (kind == GLGL) {
    g.family = Family::GL;
  } else {
    g.family = Family::OForm;
    Field F(p);
    std::vector<int> d;
    for (int x : form) d.push_back(F.reduce(x));
    g.form = FqMatrix::diag(d);
  }
  return g;
}

JointCharacter pair_character(const PairSpec& pair, const GroupPtr& g, const GroupPtr& gp) {
  return pair.kind == PairSpec::GLGL ? glgl_character(g, gp) : spo_character(g, gp);
}

namespace {

int work_order(const JointCharacter& j) { return std::lcm(j.L, std::lcm(j.g1->exponent(), j.g2->exponent())); }

// |G'| * Omega_tau(C) for every class C of G, in Z[zeta_W], W = work_order.
std::vector<CycInt> omega_scaled(const JointCharacter& j, const ClassFunction& tau) {
  const auto& G2 = *j.g2;
  const int W = work_order(j);
  std::vector<CycInt> conj_tau;
  for (int d = 0; d < G2.num_classes(); ++d) {
    CycInt v = tau.values[d].change_order(W).conj();
    v *= static_cast<long long>(G2.class_size(d));
    conj_tau.push_back(v);
  }
  std::vector<CycInt> out;
  for (size_t c = 0; c < j.values.size(); ++c) {
    CycInt s(W);
    for (int d = 0; d < G2.num_classes(); ++d) s += j.values[c][d].change_order(W) * conj_tau[d];
    out.push_back(s);
  }
  return out;
}

}  // namespace

std::vector<std::vector<long long>> joint_decomposition(const JointCharacter& j, const CharacterTable& t,
                                                        const CharacterTable& tp) {
  const auto& G1 = *j.g1;
  const int W = work_order(j);
  const long long denom = static_cast<long long>(G1.order() * j.g2->order());
  std::vector<std::vector<long long>> mult(tp.size(), std::vector<long long>(t.size(), 0));
  std::vector<std::vector<CycInt>> sigma_conj(t.size());
  for (int s = 0; s < t.size(); ++s)
    for (int c = 0; c < G1.num_classes(); ++c) {
      CycInt v = t.irr[s].values[c].change_order(W).conj();
      v *= static_cast<long long>(G1.class_size(c));
      sigma_conj[s].push_back(v);
    }
  parallel_for(tp.size(), [&](int ti) {
    auto om = omega_scaled(j, tp.irr[ti]);
    for (int s = 0; s < t.size(); ++s) {
      CycInt acc(W);
      for (int c = 0; c < G1.num_classes(); ++c) acc += om[c] * sigma_conj[s][c];
      long long m = to_integer(acc.divide_exact(denom), "joint multiplicity");
      if (m < 0) throw TheoremFalsified("rank.NotACharacter", "negative joint multiplicity");
      mult[ti][s] = m;
    }
  });
  return mult;
}

ClassFunction omega_tau(const JointCharacter& j, const ClassFunction& tau) {
  auto om = omega_scaled(j, tau);
  const long long order2 = static_cast<long long>(j.g2->order());
  const int e1 = j.g1->exponent();
  std::vector<CycInt> vals;
  for (auto& v : om) {
    // the value is a character value of G, so it lives in Z[zeta_e1]
    CycInt q = v.divide_exact(order2);
    vals.push_back(q.change_order(std::lcm(q.e(), e1)).change_order(e1));
  }
  return ClassFunction(j.g1, std::move(vals));
}

EtaTable eta_correspondence(const PairSpec& pair, const CharacterTable& t, const CharacterTable& tp, EtaMode mode) {
  EtaTable out;
  out.pair = pair;
  out.k = pair.k;
  if (mode == EtaMode::Auto)
    mode = pair.kind == PairSpec::SpO || 2 * pair.k <= pair.n ? EtaMode::InRange : EtaMode::NewSpectrum;
  out.mode = mode;
  if (mode == EtaMode::InRange) {
    const bool in_range = pair.kind == PairSpec::SpO ? pair.k <= pair.n : 2 * pair.k <= pair.n;
    if (!in_range) throw Error("rank.OutOfRange", pair.str() + " is outside the in-range eta theorem");
  } else if (pair.kind != PairSpec::GLGL) {
    throw Error("rank.UnsupportedFamily", "new-spectrum eta mode is modeled for GLGL only");
  }

  auto joint = pair_character(pair, t.group, tp.group);
  auto mult = joint_decomposition(joint, t, tp);

  std::vector<int> u(t.size(), 0), new_set;
  std::set<int> expected;
  if (mode == EtaMode::InRange) {
    auto probe = make_u_probe(t.group);
    parallel_for(t.size(), [&](int i) { u[i] = u_rank(t.irr[i], probe).rank; });
  } else {
    new_set = new_spectrum(t, TowerTag::Split, pair.k);
    for (int l = std::max(0, 2 * pair.k - pair.n); l <= pair.k; ++l)
      for (int i : new_spectrum(tp, TowerTag::Split, l)) expected.insert(i);
  }

  std::set<int> images;
  for (int ti = 0; ti < tp.size(); ++ti) {
    EtaRow row;
    row.tau = ti;
    row.omega = mult[ti];
    std::vector<int> cand;
    for (int s = 0; s < t.size(); ++s) {
      if (!mult[ti][s]) continue;
      bool hit = mode == EtaMode::InRange ? u[s] == pair.k : std::binary_search(new_set.begin(), new_set.end(), s);
      if (hit) cand.push_back(s);
      if (mode == EtaMode::InRange && u[s] > pair.k) row.lower_residual = false;
    }
    const std::string where = pair.str() + " tau=" + std::to_string(ti);
    if (mode == EtaMode::InRange) {
      if (cand.size() != 1)
        throw TheoremFalsified(where + ": " + std::to_string(cand.size()) + " constituents of U-rank " +
                               std::to_string(pair.k) + " in Omega_tau");
    } else {
      row.expected_in_domain = expected.count(ti) > 0;
      if (cand.size() > 1)
        throw TheoremFalsified(where + ": " + std::to_string(cand.size()) + " new-spectrum constituents in Omega_tau");
    }
    if (!cand.empty()) {
      row.eta = cand[0];
      row.multiplicity = mult[ti][row.eta];
      row.eta_rank = mode == EtaMode::InRange ? u[row.eta] : pair.k;
      if (row.multiplicity != 1)
        throw TheoremFalsified(where + ": eta(tau) has multiplicity " + std::to_string(row.multiplicity));
      if (!images.insert(row.eta).second) out.injective = false;
    }
    if (!row.lower_residual) throw TheoremFalsified(where + ": a constituent exceeds U-rank k");
    if (mode == EtaMode::NewSpectrum && (row.eta >= 0) != row.expected_in_domain) out.domain_matches = false;
    out.rows.push_back(std::move(row));
  }
  if (!out.injective) throw TheoremFalsified(pair.str() + ": eta is not injective");
  if (!out.domain_matches)
    throw TheoremFalsified(pair.str() + ": eta domain differs from the new l-spectrum of GL_k, l >= 2k - n");
  return out;
}

Subgroup standard_embedding(const GroupPtr& gn, const GroupPtr& gm) {
  const int n = gn->n(), m = gm->n();
  if (n > m) throw Error("rank.BadShape", "embedding needs n <= m");
  Subgroup s;
  s.parent = gm;
  s.group = gn;
  s.fusion = fusion_map(*gn, *gm, [&](const FqMatrix& x) {
    FqMatrix y = FqMatrix::identity(m);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) y(i, j) = x(i, j);
    return y;
  });
  return s;
}

bool asymptotic_rank_probe(const ClassFunction& chi, const CharacterTable& tm, int k, bool require_low) {
  if (rank_family(chi.group) != RankFamily::GL || rank_family(tm.group) != RankFamily::GL)
    throw Error("rank.UnsupportedFamily", "asymptotic probe uses the GL standard embedding");
  auto emb = standard_embedding(chi.group, tm.group);
  auto probe = make_u_probe(tm.group);
  for (int i = 0; i < tm.size(); ++i) {
    auto u = u_rank(tm.irr[i], probe);
    if (u.rank > k || (require_low && !u.low)) continue;
    if (inner_product(restrict(tm.irr[i], emb), chi) > 0) return true;
  }
  return false;
}

std::vector<RankRecord> rank_records(const CharacterTable& t) {
  const auto fam = rank_family(t.group);
  auto probe = make_u_probe(t.group);
  std::vector<RankRecord> recs(t.size());
  parallel_for(t.size(), [&](int i) {
    recs[i].irrep = i;
    recs[i].degree = t.degrees[i];
    recs[i].u = u_rank(t.irr[i], probe);
  });
  auto tr = tensor_ranks(t);
  std::vector<int> intr;
  if (fam == RankFamily::GL) intr = tensor_ranks_intrinsic(t);
  const std::string name = t.group->spec.str();
  for (int i = 0; i < t.size(); ++i) {
    recs[i].tensor_rank = tr.rank[i];
    if (!intr.empty()) recs[i].tensor_rank_intrinsic = intr[i];
    if (tr.rank[i] < 0)
      throw TheoremFalsified("rank.NotReached", name + " irrep " + std::to_string(i) + " not reached by tensor rank " +
                                                    std::to_string(tr.bound));
    if (recs[i].u.rank > tr.rank[i])
      throw TheoremFalsified(name + " irrep " + std::to_string(i) + ": u_rank " + std::to_string(recs[i].u.rank) +
                             " exceeds tensor rank " + std::to_string(tr.rank[i]));
  }
  return recs;
}

size_t resolve_element(const GroupPtr& g, const std::string& label) {
  if (label == "identity") return g->identity();
  if (label == "transvection") {
    GroupSpec s = g->spec;
    if (s.family == Family::SL) s.family = Family::GL;
    return g->index_checked(transvection(s));
  }
  if (label.rfind("class:", 0) == 0) {
    int c = -1;
    try {
      c = std::stoi(label.substr(6));
    } catch (const std::exception&) {
    }
    if (c < 0 || c >= g->num_classes()) throw Error("rank.BadElement", "no class " + label);
    return g->class_rep(c);
  }
  throw Error("rank.BadElement", "unknown element label '" + label + "'");
}

std::vector<RankRecord> char_ratio_table(const CharacterTable& t, const std::vector<std::string>& elements) {
  auto recs = rank_records(t);
  std::vector<int> classes;
  for (auto& e : elements) classes.push_back(t.group->class_of(resolve_element(t.group, e)));
  for (auto& r : recs)
    for (size_t e = 0; e < elements.size(); ++e)
      r.cr.push_back({elements[e], t.irr[r.irrep].values[classes[e]].to_complex() / static_cast<double>(r.degree)});
  sort_records(recs);
  return recs;
}

void sort_records(std::vector<RankRecord>& recs) {
  std::stable_sort(recs.begin(), recs.end(), [](const RankRecord& a, const RankRecord& b) {
    if (a.tensor_rank != b.tensor_rank) return a.tensor_rank < b.tensor_rank;
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.irrep < b.irrep;
  });
}

FiltrationReport rank_filtration(const CharacterTable& t, const std::vector<RankRecord>& recs, const std::string& notion) {
  if (notion != "tensor" && notion != "U") throw Error("rank.BadNotion", "notion must be U or tensor");
  const bool tens = notion == "tensor";
  std::vector<int> r(t.size(), 0);
  for (auto& rec : recs) r[rec.irrep] = tens ? rec.tensor_rank : rec.u.rank;
  FiltrationReport out;
  out.notion = notion;
  const int top = *std::max_element(r.begin(), r.end());
  out.levels.assign(top + 1, {});
  for (int i = 0; i < t.size(); ++i) out.levels[r[i]].push_back(i);
  const int low = tens ? 0 : make_u_probe(t.group).low_bound;
  FastDecomposer fd(t);
  for (int i = 0; i < t.size(); ++i)
    for (int j = i; j < t.size(); ++j) {
      const int s = r[i] + r[j];
      if (!tens && s >= low) continue;
      ++out.pairs_checked;
      for (int c : support(fd.product(i, j)))
        if (r[c] > s) ++out.violations;
    }
  return out;
}

AgreementReport agreement_report(const CharacterTable& t, const std::vector<RankRecord>& recs) {
  AgreementReport out;
  const auto fam = rank_family(t.group);
  const int n = family_n(t.group, fam);
  for (auto& rec : recs) {
    const int k = rec.u.rank;
    if (fam == RankFamily::GL) {
      if (4 * k < n) {
        ++out.small_checked;
        if (rec.tensor_rank != k) ++out.small_failures;
      }
      if (k < n / 2) {
        ++out.half_checked;
        if (rec.tensor_rank > 2 * k) ++out.half_failures;
      }
    }
    const bool in_range = fam == RankFamily::GL ? 2 * k <= n : k <= n;
    if (in_range) {
      ++out.in_range;
      if (rec.tensor_rank == k) {
        ++out.in_range_equal;
      } else {
        out.findings.push_back("irrep " + std::to_string(rec.irrep) + " (degree " + std::to_string(rec.degree) +
                               "): u_rank " + std::to_string(k) + ", tensor rank " + std::to_string(rec.tensor_rank));
      }
    }
  }
  return out;
}

ExhaustionReport exhaustion_report(const std::vector<RankRecord>& recs, int k, const std::vector<int>& images) {
  ExhaustionReport out;
  out.rank = k;
  std::set<int> img(images.begin(), images.end());
  for (auto& rec : recs) {
    if (rec.u.rank != k) continue;
    ++out.total;
    if (img.count(rec.irrep)) ++out.covered;
    else out.missing.push_back(rec.irrep);
  }
  return out;
}

BijectionReport new_spectrum_bijection(const std::vector<std::vector<long long>>& mult, const std::vector<int>& new_set) {
  BijectionReport out;
  out.new_spectrum = new_set;
  std::set<int> used;
  for (int s : new_set) {
    int tau = -1, count = 0;
    for (size_t ti = 0; ti < mult.size(); ++ti)
      if (mult[ti][s]) {
        ++count;
        tau = static_cast<int>(ti);
        if (mult[ti][s] != 1) out.ok = false;
      }
    if (count != 1) out.ok = false;
    if (tau >= 0) {
      out.matching.push_back({s, tau});
      if (!used.insert(tau).second) out.ok = false;
    }
  }
  return out;
}

}  // namespace ranklab
