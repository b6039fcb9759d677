#include "ranklab/sps.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "ranklab/error.hpp"
#include "ranklab/parallel.hpp"

namespace ranklab {

namespace {

// Class function on a subgroup from values at class representatives.
ClassFunction from_reps(const GroupPtr& h, const std::function<CycInt(const FqMatrix&)>& f) {
  std::vector<CycInt> v;
  for (int c = 0; c < h->num_classes(); ++c) v.push_back(f(h->element(h->class_rep(c))).change_order(h->exponent()));
  return ClassFunction(h, std::move(v));
}

FqMatrix block(const FqMatrix& m, int r0, int c0, int rows, int cols) {
  FqMatrix b(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) b(i, j) = m(r0 + i, c0 + j);
  return b;
}

void require_gl(const GroupPtr& g) {
  if (g->spec.family != Family::GL) throw Error("sps.UnsupportedFamily", "SPS layer is defined for GL_n");
}

}  // namespace

Partition::Partition(std::vector<int> p) {
  for (int x : p) {
    if (x < 0) throw Error("sps.BadPartition", "negative part");
    if (x > 0) parts.push_back(x);
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
}

Partition Partition::parse(const std::string& s) {
  std::string body;
  for (char c : s)
    if (c != '[' && c != ']' && c != ' ') body += c;
  std::vector<int> v;
  std::stringstream ss(body);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    try {
      size_t pos = 0;
      v.push_back(std::stoi(tok, &pos));
      if (pos != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw Error("sps.BadPartition", "bad part '" + tok + "' in " + s);
    }
  }
  return Partition(v);
}

int Partition::n() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string Partition::str() const {
  std::string s = "[";
  for (size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
  return s + "]";
}

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int maxp) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int x = std::min(left, maxp); x >= 1; --x) {
      cur.push_back(x);
      rec(left - x, x);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

bool dominance_leq(const Partition& a, const Partition& b) {
  if (a.n() != b.n()) throw Error("sps.SizeMismatch", a.str() + " and " + b.str() + " have different sizes");
  int sa = 0, sb = 0;
  for (int i = 0; i < std::max(a.length(), b.length()); ++i) {
    sa += a.row(i);
    sb += b.row(i);
    if (sa > sb) return false;
  }
  return true;
}

bool dominates_strictly(const Partition& a, const Partition& b) { return a != b && dominance_leq(b, a); }

ClassFunction parabolic_induced(const Partition& d, const GroupPtr& g) {
  require_gl(g);
  if (d.n() != g->n()) throw Error("sps.SizeMismatch", d.str() + " is not a partition of " + std::to_string(g->n()));
  if (d.length() == 1) return trivial_character(g);
  auto p = parabolic(g, d.parts);
  return induce(trivial_character(p.group), p);
}

int SpsData::index(const Partition& d) const {
  auto it = std::find(parts.begin(), parts.end(), d);
  if (it == parts.end()) throw Error("sps.SizeMismatch", d.str() + " is not a partition of this n");
  return static_cast<int>(it - parts.begin());
}

SpsData sps_data(const CharacterTable& t) {
  require_gl(t.group);
  SpsData s;
  s.group = t.group;
  s.parts = partitions(t.group->n());
  const int np = static_cast<int>(s.parts.size());
  s.induced.resize(np);
  s.mult.resize(np);
  parallel_for(np, [&](int i) {
    s.induced[i] = parabolic_induced(s.parts[i], t.group);
    s.mult[i] = decompose(s.induced[i], t).mult;
  });
  for (int i = 0; i < np; ++i) {
    std::vector<int> cand;
    for (int c = 0; c < t.size(); ++c) {
      if (s.mult[i][c] != 1) continue;
      bool elsewhere = false;
      for (int j = 0; j < np && !elsewhere; ++j)
        if (dominates_strictly(s.parts[j], s.parts[i]) && s.mult[j][c]) elsewhere = true;
      if (!elsewhere) cand.push_back(c);
    }
    if (cand.size() != 1)
      throw TheoremFalsified("sps.NuNotUnique", s.parts[i].str() + ": " + std::to_string(cand.size()) +
                                                    " candidates for nu_D in " + t.group->spec.str());
    s.nu.push_back(cand[0]);
    long long top = 0;
    int at_top = 0;
    for (int c = 0; c < t.size(); ++c)
      if (s.mult[i][c]) top = std::max(top, t.degrees[c]);
    for (int c = 0; c < t.size(); ++c)
      if (s.mult[i][c] && t.degrees[c] == top) ++at_top;
    s.nu_max_degree.push_back(at_top == 1 && t.degrees[cand[0]] == top);
  }
  auto sorted = s.nu;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw TheoremFalsified("sps.NuNotInjective", "D -> nu_D is not injective in " + t.group->spec.str());
  return s;
}

int nu_of(const Partition& d, const CharacterTable& t) { return sps_data(t).nu_of(d); }

std::vector<SpsRankRow> sps_tensor_rank_check(const SpsData& s, const CharacterTable& t) {
  auto tr = tensor_ranks(t);
  std::vector<SpsRankRow> out;
  const int n = t.group->n();
  for (size_t i = 0; i < s.parts.size(); ++i) {
    SpsRankRow r{s.parts[i], s.nu[i], n - s.parts[i].d1(), tr.rank[s.nu[i]]};
    if (r.tensor_rank != r.expected)
      throw TheoremFalsified("sps.RankMismatch", "tensor rank of nu" + r.d.str() + " is " + std::to_string(r.tensor_rank) +
                                                     ", expected n - d_1 = " + std::to_string(r.expected));
    out.push_back(r);
  }
  return out;
}

std::vector<Partition> pieri_expected(const Partition& dhat, int n) {
  std::vector<Partition> out;
  for (const auto& d : partitions(n)) {
    if (d.length() < dhat.length()) continue;
    bool ok = true;
    // horizontal strip: dhat_i <= d_i and d_{i+1} <= dhat_i
    for (int i = 0; i < d.length() && ok; ++i) {
      if (dhat.row(i) > d.row(i)) ok = false;
      if (i > 0 && d.row(i) > dhat.row(i - 1)) ok = false;
    }
    if (ok) out.push_back(d);
  }
  return out;
}

PieriReport pieri_check(const Partition& dhat, const CharacterTable& tk, const SpsData& sk, const CharacterTable& tn,
                        const SpsData& sn) {
  const int k = dhat.n(), n = tn.group->n();
  if (k != tk.group->n() || k < 1 || k > n) throw Error("sps.SizeMismatch", "pieri needs 1 <= |dhat| = k <= n");
  PieriReport rep;
  rep.dhat = dhat;
  rep.n = n;
  rep.expected = pieri_expected(dhat, n);
  const ClassFunction& nu = tk.irr[sk.nu_of(dhat)];
  ClassFunction ind;
  if (k == n) {
    ind = transport(nu, tn.group);
  } else {
    auto p = parabolic(tn.group, {k, n - k});
    auto f = from_reps(p.group, [&](const FqMatrix& m) {
      size_t idx = tk.group->index_checked(block(m, 0, 0, k, k));
      return nu.values[tk.group->class_of(idx)];
    });
    ind = induce(f, p);
  }
  auto mult = decompose(ind, tn).mult;
  std::vector<int> by_nu(tn.size(), -1);
  for (size_t i = 0; i < sn.parts.size(); ++i) by_nu[sn.nu[i]] = static_cast<int>(i);
  for (int c = 0; c < tn.size(); ++c) {
    if (!mult[c]) continue;
    if (mult[c] != 1) rep.multiplicity_free = false;
    if (by_nu[c] < 0) {
      rep.ok = false;  // a constituent outside the spherical principal series
      continue;
    }
    rep.found.push_back(sn.parts[by_nu[c]]);
  }
  std::sort(rep.found.begin(), rep.found.end());
  auto exp = rep.expected;
  std::sort(exp.begin(), exp.end());
  rep.ok = rep.ok && rep.multiplicity_free && rep.found == exp;
  return rep;
}

Partition eta_sps(const Partition& dhat, int n) {
  const int k = dhat.n();
  if (k > n) throw Error("sps.SizeMismatch", "|dhat| exceeds n");
  if (dhat.d1() > n - k)
    throw Error("sps.OutOfDomain", dhat.str() + " has a part larger than n - k = " + std::to_string(n - k));
  auto p = dhat.parts;
  p.push_back(n - k);
  return Partition(p);
}

std::vector<EtaSpsRow> eta_sps_check(int n, const CharacterTable& tn, const SpsData& sn, const CharacterTable& tk,
                                     const SpsData& sk) {
  const int k = tk.group->n();
  PairSpec pair;
  pair.kind = PairSpec::GLGL;
  pair.n = n;
  pair.k = k;
  pair.p = tn.group->p();
  auto tab = eta_correspondence(pair, tn, tk);
  std::vector<EtaSpsRow> out;
  for (const auto& dhat : sk.parts) {
    EtaSpsRow r;
    r.dhat = dhat;
    r.tau = sk.nu_of(dhat);
    r.eta = tab.rows[r.tau].eta;
    r.in_domain = dhat.d1() <= n - k;
    if (r.in_domain) {
      r.image = eta_sps(dhat, n);
      r.ok = r.eta == sn.nu_of(r.image);
    } else {
      r.ok = r.eta < 0;
    }
    out.push_back(r);
  }
  return out;
}

WhittakerReport whittaker_rank_check(const Partition& d, const CharacterTable& t, const SpsData& s) {
  WhittakerReport rep;
  rep.d = d;
  const int n = t.group->n();
  if (d.n() != n) throw Error("sps.SizeMismatch", d.str() + " is not a partition of " + std::to_string(n));
  auto ubar = lower_unipotent(t.group, d.parts);
  std::vector<int> off{0};
  for (int x : d.parts) off.push_back(off.back() + x);
  const int p = t.group->p();
  auto psi = from_reps(ubar.group, [&](const FqMatrix& m) {
    long long ex = 0;
    for (int i = 0; i + 1 < d.length(); ++i)
      for (int r = 0; r < d.parts[i + 1]; ++r) ex += m(off[i + 1] + r, off[i] + r);
    return CycInt::root(p, ex % p);
  });
  auto mult_in = [&](const ClassFunction& f) {
    Rational r = inner_product(restrict(f, ubar), psi);
    if (r.denominator() != 1 || r.numerator() < 0) throw Error("sps.NotInteger", "non-integral Whittaker multiplicity");
    return r.numerator();
  };
  const int i = s.index(d);
  rep.in_own = mult_in(s.induced[i]);
  rep.in_nu = mult_in(t.irr[s.nu[i]]);
  rep.ok = rep.in_own == 1 && rep.in_nu == 1;
  for (size_t j = 0; j < s.parts.size(); ++j)
    if (dominates_strictly(s.parts[j], d)) {
      long long m = mult_in(s.induced[j]);
      rep.in_dominating.push_back({s.parts[j], m});
      if (m != 0) rep.ok = false;
    }
  return rep;
}

long long intertwining_number(const SpsData& s, int i, int j) {
  Rational r = inner_product(s.induced[i], s.induced[j]);
  if (r.denominator() != 1) throw Error("sps.NotInteger", "non-integral intertwining number");
  return r.numerator();
}

long long sn_double_cosets(const Partition& a, const Partition& b) {
  const int n = a.n();
  if (b.n() != n) throw Error("sps.SizeMismatch", "partitions of different sizes");
  if (n > 8) throw Error("sps.CapExceeded", "S_n enumeration limited to n <= 8");
  std::vector<std::vector<int>> perms;
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 0);
  do perms.push_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  auto code = [&](const std::vector<int>& v) {
    long long c = 0;
    for (int x : v) c = c * n + x;
    return c;
  };
  std::map<long long, int> idx;
  for (size_t i = 0; i < perms.size(); ++i) idx[code(perms[i])] = static_cast<int>(i);
  // adjacent transpositions inside the blocks of a partition
  auto block_swaps = [](const Partition& p) {
    std::vector<int> sw;
    int o = 0;
    for (int x : p.parts) {
      for (int i = o; i + 1 < o + x; ++i) sw.push_back(i);
      o += x;
    }
    return sw;
  };
  std::vector<int> parent(perms.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  auto unite = [&](int x, int y) { parent[find(x)] = find(y); };
  const auto sa = block_swaps(a), sb = block_swaps(b);
  for (size_t i = 0; i < perms.size(); ++i) {
    for (int s : sa) {
      // left multiplication: swap values s, s+1
      auto v = perms[i];
      for (int& x : v) x = x == s ? s + 1 : x == s + 1 ? s : x;
      unite(static_cast<int>(i), idx[code(v)]);
    }
    for (int s : sb) {
      auto v = perms[i];
      std::swap(v[s], v[s + 1]);
      unite(static_cast<int>(i), idx[code(v)]);
    }
  }
  long long count = 0;
  for (size_t i = 0; i < perms.size(); ++i) count += find(static_cast<int>(i)) == static_cast<int>(i);
  return count;
}

InductionReport two_block_induction(const GroupPtr& g, int a, int e1, int e2) {
  require_gl(g);
  const int n = g->n(), p = g->p();
  if (a < 1 || a >= n) throw Error("sps.BadShape", "block size out of range");
  const Field& F = g->field();
  std::vector<int> log(p, 0);
  for (int j = 0, x = 1; j < p - 1; ++j, x = F.mul(x, F.primitive_root())) log[x] = j;
  auto par = parabolic(g, {a, n - a});
  auto f = from_reps(par.group, [&](const FqMatrix& m) {
    const int d1 = det(F, block(m, 0, 0, a, a)), d2 = det(F, block(m, a, a, n - a, n - a));
    return CycInt::root(p - 1, (1LL * e1 * log[d1] + 1LL * e2 * log[d2]) % (p - 1));
  });
  auto ind = induce(f, par);
  InductionReport r;
  r.label = "Ind_P(" + std::to_string(a) + "," + std::to_string(n - a) + ") chi" + std::to_string(e1) + " x chi" +
            std::to_string(e2);
  r.degree = ind.degree();
  Rational nn = inner_product(ind, ind);
  r.norm = nn.numerator() / nn.denominator();
  return r;
}

}  // namespace ranklab
