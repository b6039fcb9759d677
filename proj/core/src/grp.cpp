#include "ranklab/grp.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <tuple>
#include <unordered_set>

#include "ranklab/error.hpp"

namespace ranklab {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  return out;
}

}  // namespace

GroupSpec GroupSpec::parse(const std::string& s) {
  auto parts = split(s, ':');
  if (parts.size() < 3) throw Error("cli.BadSpec", "expected FAMILY:n:p, got " + s);
  GroupSpec g;
  const std::string& fam = parts[0];
  if (fam == "GL") g.family = Family::GL;
  else if (fam == "SL") g.family = Family::SL;
  else if (fam == "Sp") g.family = Family::Sp;
  else if (fam == "O" || fam == "OForm") g.family = Family::OForm;
  else throw Error("cli.BadSpec", "unknown family " + fam);
  try {
    g.n = std::stoi(parts[1]);
    g.p = std::stoi(parts[2]);
  } catch (const std::exception&) {
    throw Error("cli.BadSpec", "bad integer in " + s);
  }
  if (g.n < 1) throw Error("cli.BadSpec", "n must be positive");
  Field F(g.p);
  if (g.family == Family::Sp && g.n % 2 != 0) throw Error("cli.BadSpec", "Sp needs even matrix size");
  if (g.family == Family::OForm) {
    if (parts.size() < 4 || parts[3].rfind("form=", 0) != 0)
      throw Error("cli.BadSpec", "O needs form=d1,...,dn or form=hyp");
    std::string body = parts[3].substr(5);
    if (body == "hyp") {
      if (g.n % 2 != 0) throw Error("cli.BadSpec", "form=hyp needs even n");
      int m = g.n / 2;
      FqMatrix b(g.n, g.n);
      for (int i = 0; i < m; ++i) b(i, m + i) = b(m + i, i) = 1;
      g.form = b;
    } else {
      auto ds = split(body, ',');
      if (static_cast<int>(ds.size()) != g.n) throw Error("cli.BadSpec", "form length must equal n");
      std::vector<int> d;
      for (auto& x : ds) d.push_back(F.reduce(std::stoll(x)));
      g.form = FqMatrix::diag(d);
    }
    if (mat_rank(F, *g.form) != g.n) throw Error("cli.BadSpec", "form must be nondegenerate");
  } else if (parts.size() > 3) {
    throw Error("cli.BadSpec", "form= only applies to O");
  }
  return g;
}

std::string GroupSpec::str() const {
  std::ostringstream os;
  switch (family) {
    case Family::GL: os << "GL"; break;
    case Family::SL: os << "SL"; break;
    case Family::Sp: os << "Sp"; break;
    case Family::OForm: os << "O"; break;
    case Family::Custom: os << "Sub"; break;
  }
  os << ':' << n << ':' << p;
  if (family == Family::OForm && form) {
    const FqMatrix& b = *form;
    bool diag = true;
    for (int i = 0; i < b.rows; ++i)
      for (int j = 0; j < b.cols; ++j)
        if (i != j && b(i, j) != 0) diag = false;
    if (diag) {
      os << ":form=";
      for (int i = 0; i < b.rows; ++i) os << (i ? "," : "") << b(i, i);
    } else {
      os << ":form=hyp";
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------

uint64_t FiniteMatrixGroup::encode(const FqMatrix& m) const {
  uint64_t c = 0;
  for (int v : m.a) c = c * static_cast<uint64_t>(p()) + static_cast<uint64_t>(v);
  return c;
}

FqMatrix FiniteMatrixGroup::element(size_t i) const {
  FqMatrix m(n_, n_);
  const uint8_t* e = &ent_[i * n_ * n_];
  for (int k = 0; k < n_ * n_; ++k) m.a[k] = e[k];
  return m;
}

std::optional<size_t> FiniteMatrixGroup::index_of_code(uint64_t c) const {
  auto it = index_.find(c);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<size_t> FiniteMatrixGroup::index_of(const FqMatrix& m) const {
  if (m.rows != n_ || m.cols != n_) return std::nullopt;
  return index_of_code(encode(m));
}

size_t FiniteMatrixGroup::index_checked(const FqMatrix& m) const {
  auto i = index_of(m);
  if (!i) throw Error("grp.NotAMember", "matrix " + to_string(m) + " not in group");
  return *i;
}

void FiniteMatrixGroup::mul_raw(const uint8_t* x, const uint8_t* y, uint8_t* out) const {
  const int n = n_, p = F_.p();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int s = 0;
      for (int k = 0; k < n; ++k) s += x[i * n + k] * y[k * n + j];
      out[i * n + j] = static_cast<uint8_t>(s % p);
    }
}

size_t FiniteMatrixGroup::mul(size_t i, size_t j) const {
  uint8_t buf[64];
  mul_raw(&ent_[i * n_ * n_], &ent_[j * n_ * n_], buf);
  uint64_t c = 0;
  for (int k = 0; k < n_ * n_; ++k) c = c * static_cast<uint64_t>(p()) + buf[k];
  return index_.at(c);
}

std::vector<int> FiniteMatrixGroup::word(size_t i) const {
  std::vector<int> w;
  long long cur = static_cast<long long>(i);
  while (cur > 0) {
    w.push_back(pgen_[cur]);
    cur = parent_[cur];
  }
  std::reverse(w.begin(), w.end());
  return w;
}

std::shared_ptr<FiniteMatrixGroup> FiniteMatrixGroup::enumerate(int p, int n, std::vector<FqMatrix> gens,
                                                                size_t cap) {
  if (n * n > 64) throw Error("grp.BadShape", "matrix size too large for packed encoding");
  std::shared_ptr<FiniteMatrixGroup> g(new FiniteMatrixGroup(p, n));
  for (auto& m : gens)
    if (m.rows != n || m.cols != n) throw Error("grp.BadShape", "generator size mismatch");
  g->gens_ = std::move(gens);
  g->close(cap);
  g->compute_classes();
  return g;
}

void FiniteMatrixGroup::close(size_t cap) {
  const int nn = n_ * n_;
  const size_t ng = gens_.size();
  std::vector<std::vector<uint8_t>> graw(ng, std::vector<uint8_t>(nn));
  for (size_t k = 0; k < ng; ++k)
    for (int t = 0; t < nn; ++t) graw[k][t] = static_cast<uint8_t>(F_.reduce(gens_[k].a[t]));
  std::vector<uint8_t> id(nn, 0);
  for (int i = 0; i < n_; ++i) id[i * n_ + i] = 1;
  auto code_of = [&](const uint8_t* e) {
    uint64_t c = 0;
    for (int t = 0; t < nn; ++t) c = c * static_cast<uint64_t>(p()) + e[t];
    return c;
  };
  auto push = [&](const uint8_t* e, long long par, int gen) {
    uint64_t c = code_of(e);
    auto [it, fresh] = index_.emplace(c, static_cast<uint32_t>(codes_.size()));
    if (!fresh) return;
    if (codes_.size() >= cap)
      throw Error("grp.CapExceeded", "group order exceeds cap " + std::to_string(cap));
    codes_.push_back(c);
    ent_.insert(ent_.end(), e, e + nn);
    parent_.push_back(par);
    pgen_.push_back(gen);
  };
  push(id.data(), -1, -1);
  std::vector<uint8_t> buf(nn);
  for (size_t cur = 0; cur < codes_.size(); ++cur) {
    for (size_t k = 0; k < ng; ++k) {
      mul_raw(&ent_[cur * nn], graw[k].data(), buf.data());
      push(buf.data(), static_cast<long long>(cur), static_cast<int>(k));
    }
  }
  // inverses: child = parent * gen, so inv(child) = inv(gen) * inv(parent)
  std::vector<size_t> ginv(ng);
  for (size_t k = 0; k < ng; ++k) ginv[k] = index_checked(ranklab::inverse(F_, gens_[k]));
  inv_.assign(codes_.size(), 0);
  for (size_t i = 1; i < codes_.size(); ++i)
    inv_[i] = static_cast<uint32_t>(mul(ginv[pgen_[i]], inv_[parent_[i]]));
}

void FiniteMatrixGroup::compute_classes() {
  const size_t N = codes_.size();
  std::vector<size_t> gidx, ginv;
  for (auto& m : gens_) {
    size_t i = index_checked(m);
    gidx.push_back(i);
    ginv.push_back(inv_[i]);
  }
  std::vector<int> orbit(N, -1);
  std::vector<std::vector<size_t>> orbits;
  for (size_t s = 0; s < N; ++s) {
    if (orbit[s] >= 0) continue;
    int id = static_cast<int>(orbits.size());
    std::vector<size_t> members{s};
    orbit[s] = id;
    for (size_t q = 0; q < members.size(); ++q) {
      size_t x = members[q];
      for (size_t k = 0; k < gidx.size(); ++k) {
        size_t y = mul(mul(ginv[k], x), gidx[k]);
        if (orbit[y] < 0) {
          orbit[y] = id;
          members.push_back(y);
        }
      }
    }
    orbits.push_back(std::move(members));
  }
  auto elem_order = [&](size_t x) {
    int o = 1;
    size_t y = x;
    while (y != 0) {
      y = mul(y, x);
      ++o;
    }
    return o;
  };
  struct Info {
    int order;
    size_t size;
    uint64_t mincode;
    size_t rep;
    int old;
  };
  std::vector<Info> info;
  for (size_t o = 0; o < orbits.size(); ++o) {
    size_t rep = *std::min_element(orbits[o].begin(), orbits[o].end(),
                                   [&](size_t a, size_t b) { return codes_[a] < codes_[b]; });
    info.push_back({elem_order(rep), orbits[o].size(), codes_[rep], rep, static_cast<int>(o)});
  }
  std::sort(info.begin(), info.end(), [](const Info& a, const Info& b) {
    return std::tie(a.order, a.size, a.mincode) < std::tie(b.order, b.size, b.mincode);
  });
  std::vector<int> relabel(orbits.size());
  for (size_t c = 0; c < info.size(); ++c) relabel[info[c].old] = static_cast<int>(c);
  class_of_.resize(N);
  for (size_t i = 0; i < N; ++i) class_of_[i] = relabel[orbit[i]];
  const int nc = static_cast<int>(info.size());
  class_size_.resize(nc);
  class_rep_.resize(nc);
  class_order_.resize(nc);
  exponent_ = 1;
  for (int c = 0; c < nc; ++c) {
    class_size_[c] = info[c].size;
    class_rep_[c] = info[c].rep;
    class_order_[c] = info[c].order;
    exponent_ = std::lcm(exponent_, info[c].order);
  }
  inverse_class_.resize(nc);
  power_.assign(nc, std::vector<int>(exponent_));
  for (int c = 0; c < nc; ++c) {
    size_t g = class_rep_[c];
    inverse_class_[c] = class_of_[inv_[g]];
    size_t x = 0;
    for (int s = 0; s < exponent_; ++s) {
      power_[c][s] = class_of_[x];
      x = mul(x, g);
    }
  }
}

int FiniteMatrixGroup::power_class(int c, long long s) const {
  long long r = s % exponent_;
  if (r < 0) r += exponent_;
  return power_[c][static_cast<size_t>(r)];
}

std::vector<size_t> FiniteMatrixGroup::class_elements(int c) const {
  std::vector<size_t> out;
  for (size_t i = 0; i < order(); ++i)
    if (class_of_[i] == c) out.push_back(i);
  return out;
}

// ---------------------------------------------------------------------------

long long gl_order(int n, int p) {
  long long o = 1, qn = 1;
  for (int i = 0; i < n; ++i) qn *= p;
  long long qi = 1;
  for (int i = 0; i < n; ++i) {
    o *= (qn - qi);
    qi *= p;
  }
  return o;
}

long long sp_order(int m, int p) {
  long long o = 1;
  for (int i = 0; i < m * m; ++i) o *= p;
  long long q2 = 1;
  for (int i = 1; i <= m; ++i) {
    q2 *= 1LL * p * p;
    o *= (q2 - 1);
  }
  return o;
}

std::vector<FqMatrix> gl_generators(const Field& F, int n) {
  std::vector<FqMatrix> gens;
  FqMatrix d = FqMatrix::identity(n);
  d(0, 0) = F.primitive_root();
  if (n == 1) {
    gens.push_back(d);
    return gens;
  }
  FqMatrix t = FqMatrix::identity(n);
  t(0, 1) = 1;
  gens.push_back(t);
  gens.push_back(d);
  FqMatrix c(n, n);
  for (int i = 0; i < n; ++i) c((i + 1) % n, i) = 1;
  gens.push_back(c);
  return gens;
}

FqMatrix sp_u(const Field&, const FqMatrix& s) {
  int m = s.rows;
  FqMatrix g = FqMatrix::identity(2 * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) g(i, m + j) = s(i, j);
  return g;
}

FqMatrix sp_m(const Field& F, const FqMatrix& a) {
  return block_diag(a, transpose(inverse(F, a)));
}

FqMatrix sp_sigma(const Field& F, int m) {
  FqMatrix g(2 * m, 2 * m);
  for (int i = 0; i < m; ++i) {
    g(i, m + i) = 1;
    g(m + i, i) = F.neg(1);
  }
  return g;
}

FqMatrix sp_form(const Field& F, int m) { return sp_sigma(F, m); }

GroupPtr make_gl(int n, int p) {
  Field F(p);
  auto g = FiniteMatrixGroup::enumerate(p, n, gl_generators(F, n));
  g->spec = GroupSpec{Family::GL, n, p, std::nullopt};
  return g;
}

GroupPtr make_sl(int n, int p) {
  std::vector<FqMatrix> gens;
  for (int i = 0; i + 1 < n; ++i) {
    FqMatrix a = FqMatrix::identity(n), b = FqMatrix::identity(n);
    a(i, i + 1) = 1;
    b(i + 1, i) = 1;
    gens.push_back(a);
    gens.push_back(b);
  }
  if (n == 1) gens.push_back(FqMatrix::identity(1));
  auto g = FiniteMatrixGroup::enumerate(p, n, gens);
  g->spec = GroupSpec{Family::SL, n, p, std::nullopt};
  return g;
}

GroupPtr make_sp(int size, int p) {
  if (size % 2 != 0) throw Error("grp.BadShape", "Sp needs even size");
  Field F(p);
  const int m = size / 2;
  std::vector<FqMatrix> gens;
  for (int i = 0; i < m; ++i) {
    FqMatrix s(m, m);
    s(i, i) = 1;
    gens.push_back(sp_u(F, s));
  }
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      FqMatrix s(m, m);
      s(i, j) = s(j, i) = 1;
      gens.push_back(sp_u(F, s));
    }
  for (auto& a : gl_generators(F, m)) gens.push_back(sp_m(F, a));
  gens.push_back(sp_sigma(F, m));
  auto g = FiniteMatrixGroup::enumerate(p, size, gens);
  g->spec = GroupSpec{Family::Sp, size, p, std::nullopt};
  g->gen_kind = GenKind::WeilSp;
  return g;
}

namespace {

// Greedy generator discovery inside an ambient index space.
std::vector<size_t> greedy_generators(const FiniteMatrixGroup& g, const std::vector<size_t>& elements) {
  std::vector<char> in(g.order(), 0);
  std::vector<size_t> closure{0};
  in[0] = 1;
  std::vector<size_t> gens;
  for (size_t e : elements) {
    if (in[e]) continue;
    gens.push_back(e);
    // extend the closure: new elements are products with the enlarged generator set
    for (size_t q = 0; q < closure.size(); ++q) {
      for (size_t k = 0; k < gens.size(); ++k) {
        size_t y = g.mul(closure[q], gens[k]);
        if (!in[y]) {
          in[y] = 1;
          closure.push_back(y);
        }
      }
    }
  }
  std::vector<char> want(g.order(), 0);
  for (size_t e : elements) want[e] = 1;
  for (size_t c : closure)
    if (!want[c]) throw Error("grp.NotASubgroup", "element set is not closed under products");
  if (closure.size() != elements.size() + (want[0] ? 0 : 1))
    throw Error("grp.NotASubgroup", "element set is not a subgroup");
  return gens;
}

}  // namespace

std::vector<int> fusion_map(const FiniteMatrixGroup& sub, const FiniteMatrixGroup& parent,
                            const std::function<FqMatrix(const FqMatrix&)>& embed) {
  std::vector<int> f(sub.num_classes());
  for (int c = 0; c < sub.num_classes(); ++c)
    f[c] = parent.class_of(parent.index_checked(embed(sub.element(sub.class_rep(c)))));
  return f;
}

Subgroup subgroup_of(const GroupPtr& g, const std::vector<size_t>& elements) {
  std::vector<size_t> sorted = elements;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  auto gens_idx = greedy_generators(*g, sorted);
  std::vector<FqMatrix> gens;
  for (size_t i : gens_idx) gens.push_back(g->element(i));
  if (gens.empty()) gens.push_back(FqMatrix::identity(g->n()));
  auto h = FiniteMatrixGroup::enumerate(g->p(), g->n(), gens);
  h->spec = GroupSpec{Family::Custom, g->n(), g->p(), std::nullopt};
  Subgroup s{g, h, {}};
  s.fusion = fusion_map(*h, *g, [](const FqMatrix& m) { return m; });
  return s;
}

Subgroup subgroup_where(const GroupPtr& g, const std::function<bool(const FqMatrix&)>& pred) {
  std::vector<size_t> el;
  for (size_t i = 0; i < g->order(); ++i)
    if (pred(g->element(i))) el.push_back(i);
  return subgroup_of(g, el);
}

Subgroup whole_group(const GroupPtr& g) {
  Subgroup s{g, g, {}};
  s.fusion.resize(g->num_classes());
  std::iota(s.fusion.begin(), s.fusion.end(), 0);
  return s;
}

GroupPtr orthogonal_group(int p, const FqMatrix& form, size_t cap) {
  Field F(p);
  const int n = form.rows;
  if (!is_symmetric(form) || mat_rank(F, form) != n)
    throw Error("grp.BadForm", "form must be symmetric and nondegenerate");
  long long nv = 1;
  for (int i = 0; i < n; ++i) nv *= p;
  std::vector<std::vector<int>> vecs(nv, std::vector<int>(n));
  for (long long v = 0; v < nv; ++v) {
    long long x = v;
    for (int i = n - 1; i >= 0; --i) {
      vecs[v][i] = static_cast<int>(x % p);
      x /= p;
    }
  }
  auto bil = [&](const std::vector<int>& u, const std::vector<int>& w) {
    long long s = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) s += 1LL * u[i] * form(i, j) * w[j];
    return F.reduce(s);
  };
  // columns c_j with c_i^t B c_j = B_ij
  std::vector<FqMatrix> elems;
  std::vector<long long> cols(n);
  std::function<void(int)> rec = [&](int j) {
    if (j == n) {
      FqMatrix g(n, n);
      for (int c = 0; c < n; ++c)
        for (int r = 0; r < n; ++r) g(r, c) = vecs[cols[c]][r];
      elems.push_back(g);
      if (elems.size() > cap) throw Error("grp.CapExceeded", "orthogonal group exceeds cap");
      return;
    }
    for (long long v = 0; v < nv; ++v) {
      bool ok = true;
      for (int i = 0; i <= j && ok; ++i) {
        const auto& u = i == j ? vecs[v] : vecs[cols[i]];
        if (bil(u, vecs[v]) != form(i, j)) ok = false;
      }
      if (!ok) continue;
      cols[j] = v;
      rec(j + 1);
    }
  };
  rec(0);
  // greedy generators using successive closures
  std::vector<FqMatrix> gens;
  std::shared_ptr<FiniteMatrixGroup> cur = FiniteMatrixGroup::enumerate(p, n, {FqMatrix::identity(n)}, cap);
  std::sort(elems.begin(), elems.end());
  for (auto& e : elems) {
    if (cur->index_of(e)) continue;
    gens.push_back(e);
    cur = FiniteMatrixGroup::enumerate(p, n, gens, cap);
  }
  if (cur->order() != elems.size()) throw Error("grp.NotASubgroup", "isometry closure mismatch");
  cur->spec = GroupSpec{Family::OForm, n, p, form};
  return cur;
}

GroupPtr make_group(const GroupSpec& spec, size_t cap) {
  switch (spec.family) {
    case Family::GL: {
      if (gl_order(spec.n, spec.p) > static_cast<long long>(cap))
        throw Error("grp.CapExceeded", "projected order of " + spec.str() + " exceeds cap");
      return make_gl(spec.n, spec.p);
    }
    case Family::SL: {
      if (gl_order(spec.n, spec.p) / (spec.p - 1) > static_cast<long long>(cap))
        throw Error("grp.CapExceeded", "projected order of " + spec.str() + " exceeds cap");
      return make_sl(spec.n, spec.p);
    }
    case Family::Sp: {
      if (sp_order(spec.n / 2, spec.p) > static_cast<long long>(cap))
        throw Error("grp.CapExceeded", "projected order of " + spec.str() + " exceeds cap");
      return make_sp(spec.n, spec.p);
    }
    case Family::OForm: {
      if (!spec.form) throw Error("grp.BadForm", "OForm needs a form");
      return orthogonal_group(spec.p, *spec.form, cap);
    }
    case Family::Custom: break;
  }
  throw Error("grp.UnsupportedFamily", "cannot build " + spec.str());
}

Subgroup standard_subgroup(const GroupPtr& g, int a, int b, int pos) {
  const int n = g->n();
  if (a < 0 || b < 0 || pos < 0 || pos + a + b > n) throw Error("grp.BadShape", "a + b exceeds n");
  const int r0 = pos, c0 = pos + a;
  return subgroup_where(g, [&](const FqMatrix& m) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        bool in_block = i >= r0 && i < r0 + a && j >= c0 && j < c0 + b;
        int want = i == j ? 1 : 0;
        if (!in_block && m(i, j) != want) return false;
      }
    return true;
  });
}

Subgroup siegel_unipotent(const GroupPtr& g) {
  const auto fam = g->spec.family;
  if (fam == Family::OForm) {
    const auto& b = *g->spec.form;
    const int m = g->n() / 2;
    bool hyp = g->n() % 2 == 0;
    for (int i = 0; i < g->n() && hyp; ++i)
      for (int j = 0; j < g->n(); ++j) {
        int want = (j == i + m || i == j + m) ? 1 : 0;
        if (b(i, j) != want) hyp = false;
      }
    if (!hyp) throw Error("grp.UnsupportedFamily", "skew unipotent needs the hyperbolic form");
  } else if (fam != Family::Sp) {
    throw Error("grp.UnsupportedFamily", "siegel unipotent needs Sp or O_{n,n}");
  }
  const int m = g->n() / 2;
  return standard_subgroup(g, m, m, 0);
}

Subgroup h_subgroup(const GroupPtr& g, int k) {
  const int n = g->n();
  if (k < 0 || k > n) throw Error("grp.BadShape", "k out of range");
  return subgroup_where(g, [&](const FqMatrix& m) {
    for (int j = 0; j < k; ++j)
      for (int i = 0; i < n; ++i)
        if (m(i, j) != (i == j ? 1 : 0)) return false;
    return true;
  });
}

Subgroup derived_subgroup(const Subgroup& h) {
  const FiniteMatrixGroup& K = *h.group;
  std::vector<size_t> kg;
  for (auto& m : K.generators()) kg.push_back(K.index_checked(m));
  std::vector<char> in(K.order(), 0);
  std::vector<size_t> closure{0}, dgens;
  in[0] = 1;
  auto add_gen = [&](size_t x) {
    if (in[x]) return;
    dgens.push_back(x);
    for (size_t q = 0; q < closure.size(); ++q)
      for (size_t d : dgens) {
        size_t y = K.mul(closure[q], d);
        if (!in[y]) {
          in[y] = 1;
          closure.push_back(y);
        }
      }
  };
  for (size_t a : kg)
    for (size_t b : kg) add_gen(K.mul(K.mul(K.inverse(a), K.inverse(b)), K.mul(a, b)));
  // normal closure: conjugates of generators by the generators of K
  for (size_t q = 0; q < dgens.size(); ++q)
    for (size_t a : kg) add_gen(K.mul(K.mul(K.inverse(a), dgens[q]), a));
  std::vector<FqMatrix> gens;
  for (size_t d : dgens) gens.push_back(K.element(d));
  if (gens.empty()) gens.push_back(FqMatrix::identity(K.n()));
  auto d = FiniteMatrixGroup::enumerate(K.p(), K.n(), gens);
  d->spec = GroupSpec{Family::Custom, K.n(), K.p(), std::nullopt};
  Subgroup s{h.parent, d, {}};
  s.fusion = fusion_map(*d, *h.parent, [](const FqMatrix& m) { return m; });
  return s;
}

Subgroup derived_subgroup(const GroupPtr& g) { return derived_subgroup(whole_group(g)); }

namespace {

std::vector<int> block_index(const std::vector<int>& parts, int n) {
  std::vector<int> blk;
  for (size_t b = 0; b < parts.size(); ++b)
    for (int i = 0; i < parts[b]; ++i) blk.push_back(static_cast<int>(b));
  if (static_cast<int>(blk.size()) != n) throw Error("grp.BadShape", "parts must sum to n");
  return blk;
}

}  // namespace

Subgroup parabolic(const GroupPtr& g, const std::vector<int>& parts) {
  const int n = g->n();
  auto blk = block_index(parts, n);
  return subgroup_where(g, [&](const FqMatrix& m) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (blk[i] > blk[j] && m(i, j) != 0) return false;
    return true;
  });
}

Subgroup lower_unipotent(const GroupPtr& g, const std::vector<int>& parts) {
  const int n = g->n();
  auto blk = block_index(parts, n);
  return subgroup_where(g, [&](const FqMatrix& m) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (blk[i] == blk[j] && m(i, j) != (i == j ? 1 : 0)) return false;
        if (blk[i] < blk[j] && m(i, j) != 0) return false;
      }
    return true;
  });
}

FqMatrix transvection(const GroupSpec& spec) {
  Field F(spec.p);
  switch (spec.family) {
    case Family::GL:
    case Family::SL: {
      if (spec.n < 2) throw Error("grp.BadShape", "transvection needs n >= 2");
      FqMatrix t = FqMatrix::identity(spec.n);
      t(0, spec.n - 1) = 1;
      return t;
    }
    case Family::Sp: {
      int m = spec.n / 2;
      FqMatrix s(m, m);
      s(0, 0) = 1;
      return sp_u(F, s);
    }
    default: break;
  }
  throw Error("grp.UnsupportedFamily", "no transvection for " + spec.str());
}

}  // namespace ranklab
