#include "ranklab/cyclo.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>

#include "ranklab/error.hpp"

namespace ranklab {

std::vector<long long> cyclotomic_polynomial(int e) {
  static std::mutex mu;
  static std::map<int, std::vector<long long>> memo;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(e);
    if (it != memo.end()) return it->second;
  }
  // x^e - 1 divided by Phi_d for every proper divisor d
  std::vector<long long> num(e + 1, 0);
  num[0] = -1;
  num[e] = 1;
  for (int d = 1; d < e; ++d) {
    if (e % d != 0) continue;
    auto den = cyclotomic_polynomial(d);
    int dn = static_cast<int>(num.size()) - 1, dd = static_cast<int>(den.size()) - 1;
    std::vector<long long> q(dn - dd + 1, 0);
    for (int k = dn - dd; k >= 0; --k) {
      long long c = num[k + dd];  // den is monic
      q[k] = c;
      for (int i = 0; i <= dd; ++i) num[k + i] -= c * den[i];
    }
    for (int i = 0; i < dd; ++i)
      if (num[i] != 0) throw Error("cyclo.Internal", "inexact cyclotomic division");
    num = q;
  }
  std::lock_guard<std::mutex> lock(mu);
  memo[e] = num;
  return num;
}

std::shared_ptr<const CycloContext> cyclo_context(int e) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const CycloContext>> memo;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(e);
    if (it != memo.end()) return it->second;
  }
  if (e < 1) throw Error("cyclo.BadOrder", "order must be positive");
  auto ctx = std::make_shared<CycloContext>();
  ctx->e = e;
  ctx->cyclotomic = cyclotomic_polynomial(e);
  const int phi = static_cast<int>(ctx->cyclotomic.size()) - 1;
  ctx->phi = phi;
  ctx->red.assign(e, std::vector<long long>(phi, 0));
  std::vector<long long> cur(phi, 0);
  cur[0] = 1;
  if (phi == 0) cur.assign(1, 0);
  for (int j = 0; j < e; ++j) {
    ctx->red[j] = std::vector<long long>(cur.begin(), cur.begin() + phi);
    // multiply by x and reduce with the monic Phi_e
    std::vector<long long> nxt(phi + 1, 0);
    for (int i = 0; i < phi; ++i) nxt[i + 1] = cur[i];
    long long top = nxt[phi];
    for (int i = 0; i < phi; ++i) nxt[i] -= top * ctx->cyclotomic[i];
    nxt.resize(phi);
    cur = nxt;
  }
  std::lock_guard<std::mutex> lock(mu);
  memo[e] = ctx;
  return ctx;
}

CycInt::CycInt(int e, long long constant) : ctx_(cyclo_context(e)), c_(e, 0) { c_[0] = constant; }

CycInt CycInt::root(int e, long long j) {
  CycInt x(e);
  long long r = j % e;
  if (r < 0) r += e;
  x.c_[r] = 1;
  return x;
}

CycInt& CycInt::operator+=(const CycInt& o) {
  if (o.e() != e()) throw Error("cyclo.OrderMismatch", "adding elements of different cyclotomic rings");
  for (int j = 0; j < e(); ++j) c_[j] += o.c_[j];
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) {
  if (o.e() != e()) throw Error("cyclo.OrderMismatch", "subtracting elements of different cyclotomic rings");
  for (int j = 0; j < e(); ++j) c_[j] -= o.c_[j];
  return *this;
}

CycInt& CycInt::operator*=(long long k) {
  for (auto& v : c_) v *= k;
  return *this;
}

CycInt operator*(const CycInt& a, const CycInt& b) {
  if (a.e() != b.e()) throw Error("cyclo.OrderMismatch", "multiplying elements of different cyclotomic rings");
  const int e = a.e();
  CycInt r(e);
  std::vector<int> nb;
  for (int j = 0; j < e; ++j)
    if (b.c_[j] != 0) nb.push_back(j);
  for (int i = 0; i < e; ++i) {
    if (a.c_[i] == 0) continue;
    for (int j : nb) {
      int k = i + j;
      if (k >= e) k -= e;
      r.c_[k] += a.c_[i] * b.c_[j];
    }
  }
  return r;
}

CycInt CycInt::rotate(long long k) const {
  CycInt r(e());
  long long s = k % e();
  if (s < 0) s += e();
  for (int j = 0; j < e(); ++j)
    if (c_[j] != 0) r.c_[(j + s) % e()] = c_[j];
  return r;
}

CycInt CycInt::conj() const {
  CycInt r(e());
  for (int j = 0; j < e(); ++j) r.c_[j == 0 ? 0 : e() - j] = c_[j];
  return r;
}

std::vector<long long> CycInt::canonical() const {
  std::vector<long long> out(ctx_->phi, 0);
  for (int j = 0; j < e(); ++j) {
    if (c_[j] == 0) continue;
    const auto& r = ctx_->red[j];
    for (int i = 0; i < ctx_->phi; ++i) out[i] += c_[j] * r[i];
  }
  return out;
}

bool CycInt::is_zero() const {
  for (long long v : canonical())
    if (v != 0) return false;
  return true;
}

bool operator==(const CycInt& a, const CycInt& b) {
  if (a.e() == b.e()) return (a - b).is_zero();
  int l = std::lcm(a.e(), b.e());
  return (a.change_order(l) - b.change_order(l)).is_zero();
}

std::optional<long long> CycInt::as_integer() const {
  auto c = canonical();
  for (size_t i = 1; i < c.size(); ++i)
    if (c[i] != 0) return std::nullopt;
  return c.empty() ? 0 : c[0];
}

std::complex<double> CycInt::to_complex() const {
  std::complex<double> s = 0;
  for (int j = 0; j < e(); ++j)
    if (c_[j] != 0) s += static_cast<double>(c_[j]) * root_of_unity(e(), j);
  return s;
}

int CycInt::support_order() const {
  int g = e();
  for (int j = 0; j < e(); ++j)
    if (c_[j] != 0) g = std::gcd(g, j);
  return e() / g;
}

CycInt CycInt::change_order(int f) const {
  if (f == e()) return *this;
  CycInt r(f);
  for (int j = 0; j < e(); ++j) {
    if (c_[j] == 0) continue;
    long long num = 1LL * j * f;
    if (num % e() != 0)
      throw Error("cyclo.OrderMismatch", "value does not lie in the target cyclotomic ring");
    r.c_[static_cast<size_t>((num / e()) % f)] += c_[j];
  }
  return r;
}

CycInt CycInt::divide_exact(long long d) const {
  if (d == 0) throw Error("cyclo.DivByZero", "division by zero");
  bool direct = true;
  for (long long v : c_)
    if (v % d != 0) { direct = false; break; }
  if (direct) {
    CycInt r = *this;
    for (auto& v : r.c_) v /= d;
    return r;
  }
  int o = support_order();
  CycInt sub = change_order(o);
  auto can = sub.canonical();
  CycInt q(o);
  for (size_t i = 0; i < can.size(); ++i) {
    if (can[i] % d != 0) throw Error("cyclo.InexactDivision", "value not divisible");
    q.c_[i] = can[i] / d;
  }
  return q.change_order(e());
}

bool CycInt::is_nonneg_integer_combination() const {
  for (long long v : c_)
    if (v < 0) return false;
  return true;
}

// ---------------------------------------------------------------------------

long long ClassFunction::degree() const {
  auto d = values.at(0).as_integer();
  if (!d) throw Error("cyclo.NotRational", "value at identity is not an integer");
  return *d;
}

ClassFunction ClassFunction::conj() const {
  ClassFunction r = *this;
  for (auto& v : r.values) v = v.conj();
  return r;
}

bool ClassFunction::operator==(const ClassFunction& o) const {
  if (values.size() != o.values.size()) return false;
  for (size_t i = 0; i < values.size(); ++i)
    if (!(values[i] == o.values[i])) return false;
  return true;
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
  for (size_t i = 0; i < values.size(); ++i) values[i] += o.values[i];
  return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& o) {
  for (size_t i = 0; i < values.size(); ++i) values[i] -= o.values[i];
  return *this;
}

ClassFunction& ClassFunction::operator*=(long long k) {
  for (auto& v : values) v *= k;
  return *this;
}

ClassFunction integer_class_function(const GroupPtr& g, const std::function<long long(const FqMatrix&)>& f) {
  std::vector<CycInt> v;
  for (int c = 0; c < g->num_classes(); ++c) v.emplace_back(g->exponent(), f(g->element(g->class_rep(c))));
  return ClassFunction(g, std::move(v));
}

ClassFunction trivial_character(const GroupPtr& g) {
  return integer_class_function(g, [](const FqMatrix&) { return 1LL; });
}

ClassFunction regular_character(const GroupPtr& g) {
  std::vector<CycInt> v;
  for (int c = 0; c < g->num_classes(); ++c)
    v.emplace_back(g->exponent(), c == 0 ? static_cast<long long>(g->order()) : 0);
  return ClassFunction(g, std::move(v));
}

ClassFunction vector_permutation_character(const GroupPtr& g) {
  const Field& F = g->field();
  return integer_class_function(g, [&](const FqMatrix& m) {
    FqMatrix d = sub(F, m, FqMatrix::identity(m.rows));
    long long r = 1;
    for (int i = 0; i < m.rows - mat_rank(F, d); ++i) r *= F.p();
    return r;
  });
}

Rational inner_product(const ClassFunction& f, const ClassFunction& g) {
  if (f.group.get() != g.group.get() && f.group->order() != g.group->order())
    throw Error("cyclo.GroupMismatch", "inner product across groups");
  const int e = f.group->exponent();
  CycInt acc(e);
  for (size_t c = 0; c < f.values.size(); ++c) {
    CycInt t = f.values[c] * g.values[c].conj();
    t *= static_cast<long long>(f.group->class_size(static_cast<int>(c)));
    acc += t;
  }
  auto v = acc.as_integer();
  if (!v) throw Error("cyclo.NotRational", "inner product is not rational");
  return Rational(*v, static_cast<long long>(f.group->order()));
}

ClassFunction tensor(const ClassFunction& f, const ClassFunction& g) {
  ClassFunction r = f;
  for (size_t c = 0; c < r.values.size(); ++c) r.values[c] = f.values[c] * g.values[c];
  return r;
}

ClassFunction restrict(const ClassFunction& f, const Subgroup& h) {
  std::vector<CycInt> v;
  const int eh = h.group->exponent();
  for (int c = 0; c < h.group->num_classes(); ++c) v.push_back(f.values[h.fusion[c]].change_order(eh));
  return ClassFunction(h.group, std::move(v));
}

ClassFunction induce(const ClassFunction& f, const Subgroup& h) {
  const auto& G = *h.parent;
  const auto& H = *h.group;
  if (G.order() % H.order() != 0) throw Error("cyclo.NotASubgroup", "index is not integral");
  const long long index = static_cast<long long>(G.order() / H.order());
  std::vector<CycInt> v(G.num_classes(), CycInt(G.exponent()));
  for (int d = 0; d < H.num_classes(); ++d) {
    CycInt t = f.values[d].change_order(G.exponent());
    t *= static_cast<long long>(H.class_size(d));
    v[h.fusion[d]] += t;
  }
  for (int c = 0; c < G.num_classes(); ++c) {
    v[c] *= index;
    v[c] = v[c].divide_exact(static_cast<long long>(G.class_size(c)));
  }
  return ClassFunction(h.parent, std::move(v));
}

ClassFunction transport(const ClassFunction& f, const GroupPtr& target) {
  const auto& src = *f.group;
  if (src.order() != target->order()) throw Error("cyclo.GroupMismatch", "transport between groups of different order");
  std::vector<CycInt> v;
  for (int c = 0; c < target->num_classes(); ++c) {
    size_t i = src.index_checked(target->element(target->class_rep(c)));
    v.push_back(f.values[src.class_of(i)].change_order(target->exponent()));
  }
  return ClassFunction(target, std::move(v));
}

// ---------------------------------------------------------------------------

uint64_t mod_pow(uint64_t a, uint64_t k, uint64_t m) {
  unsigned __int128 r = 1, b = a % m;
  while (k) {
    if (k & 1) r = r * b % m;
    b = b * b % m;
    k >>= 1;
  }
  return static_cast<uint64_t>(r);
}

uint64_t primitive_root_mod(uint64_t P) {
  uint64_t n = P - 1;
  std::vector<uint64_t> fac;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      fac.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) fac.push_back(n);
  for (uint64_t g = 2;; ++g) {
    bool ok = true;
    for (uint64_t f : fac)
      if (mod_pow(g, (P - 1) / f, P) == 1) { ok = false; break; }
    if (ok) return g;
  }
}

ModRing ModRing::make(int e, uint64_t min_prime) {
  ModRing R;
  R.e = e;
  uint64_t k = (min_prime + e - 1) / e;
  for (;; ++k) {
    uint64_t P = k * e + 1;
    if (P > min_prime && is_prime(static_cast<long long>(P))) {
      R.P = P;
      break;
    }
  }
  R.z = mod_pow(primitive_root_mod(R.P), (R.P - 1) / e, R.P);
  R.zpow.resize(e);
  uint64_t x = 1;
  for (int j = 0; j < e; ++j) {
    R.zpow[j] = x;
    x = x * R.z % R.P;
  }
  return R;
}

uint64_t ModRing::inv(uint64_t a) const { return mod_pow(a, P - 2, P); }
uint64_t ModRing::pow(uint64_t a, uint64_t k) const { return mod_pow(a, k, P); }

uint64_t ModRing::eval(const CycInt& x) const {
  if (x.e() != e) throw Error("cyclo.OrderMismatch", "modular evaluation order mismatch");
  uint64_t s = 0;
  for (int j = 0; j < e; ++j) {
    long long c = x[j];
    if (c == 0) continue;
    long long r = c % static_cast<long long>(P);
    if (r < 0) r += static_cast<long long>(P);
    s = (s + static_cast<uint64_t>(r) * zpow[j]) % P;
  }
  return s;
}

uint64_t ModRing::eval_conj(const CycInt& x) const { return eval(x.conj()); }

}  // namespace ranklab
