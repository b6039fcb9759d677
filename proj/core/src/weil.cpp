#include "ranklab/weil.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "ranklab/error.hpp"
#include "ranklab/parallel.hpp"

namespace ranklab {

namespace {

int ipow(int p, int k) {
  long long r = 1;
  for (int i = 0; i < k; ++i) r *= p;
  return static_cast<int>(r);
}

std::vector<int> digits(int idx, int p, int len) {
  std::vector<int> v(len);
  for (int i = len - 1; i >= 0; --i) {
    v[i] = idx % p;
    idx /= p;
  }
  return v;
}

int undigits(const std::vector<int>& v, int p) {
  int idx = 0;
  for (int x : v) idx = idx * p + x;
  return idx;
}

}  // namespace

int symplectic_pairing(const Field& F, const std::vector<int>& w, const std::vector<int>& v) {
  const int N = static_cast<int>(w.size()) / 2;
  long long s = 0;
  for (int i = 0; i < N; ++i) s += 1LL * w[i] * v[N + i] - 1LL * w[N + i] * v[i];
  return F.reduce(s);
}

HeisenbergElement heis_mul(const Field& F, const HeisenbergElement& a, const HeisenbergElement& b) {
  HeisenbergElement r;
  r.w.resize(a.w.size());
  for (size_t i = 0; i < a.w.size(); ++i) r.w[i] = F.add(a.w[i], b.w[i]);
  r.t = F.add(F.add(a.t, b.t), F.mul(F.half(), symplectic_pairing(F, a.w, b.w)));
  return r;
}

HeisenbergElement heis_inv(const Field& F, const HeisenbergElement& a) {
  HeisenbergElement r;
  r.w.resize(a.w.size());
  for (size_t i = 0; i < a.w.size(); ++i) r.w[i] = F.neg(a.w[i]);
  r.t = F.neg(a.t);
  return r;
}

HeisenbergElement heis_act(const Field& F, const FqMatrix& g, const HeisenbergElement& h) {
  HeisenbergElement r;
  r.t = h.t;
  r.w.assign(h.w.size(), 0);
  for (int i = 0; i < g.rows; ++i) {
    long long s = 0;
    for (int j = 0; j < g.cols; ++j) s += 1LL * g(i, j) * h.w[j];
    r.w[i] = F.reduce(s);
  }
  return r;
}

SchrodingerModel::SchrodingerModel(int p, int N, int scale)
    : F_(p), N_(N), scale_(F_.reduce(scale)), dim_(ipow(p, N)) {
  if (scale_ == 0) throw Error("weil.BadCharacter", "central character must be nontrivial");
}

std::vector<int> SchrodingerModel::point(int idx) const { return digits(idx, F_.p(), N_); }
int SchrodingerModel::index(const std::vector<int>& y) const { return undigits(y, F_.p()); }

OperatorMatrix SchrodingerModel::rho(const HeisenbergElement& h) const {
  const int p = F_.p();
  std::vector<int> x(h.w.begin(), h.w.begin() + N_), y(h.w.begin() + N_, h.w.end());
  long long xy = 0;
  for (int i = 0; i < N_; ++i) xy += 1LL * x[i] * y[i];
  const int base = F_.sub(h.t, F_.mul(F_.half(), F_.reduce(xy)));
  OperatorMatrix m = OperatorMatrix::Zero(dim_, dim_);
  for (int v = 0; v < dim_; ++v) {
    auto pv = point(v);
    long long xv = 0;
    std::vector<int> src(N_);
    for (int i = 0; i < N_; ++i) {
      xv += 1LL * x[i] * pv[i];
      src[i] = F_.sub(pv[i], y[i]);
    }
    int ex = F_.add(base, F_.reduce(xv));
    m(v, index(src)) = root_of_unity(p, 1LL * scale_ * ex % p);
  }
  return m;
}

OperatorMatrix WeilGenerator::matrix(int d) const {
  OperatorMatrix m = OperatorMatrix::Identity(d, d);
  right_apply(m);
  return m;
}

void WeilGenerator::right_apply(OperatorMatrix& m) const {
  const int d = static_cast<int>(m.cols());
  switch (kind) {
    case Diagonal:
      for (int c = 0; c < d; ++c) m.col(c) *= diag[c];
      return;
    case Monomial: {
      OperatorMatrix out(m.rows(), d);
      for (int t = 0; t < d; ++t) out.col(src[t]) = sign * m.col(t);
      m.swap(out);
      return;
    }
    case Fourier: {
      const int L = static_cast<int>(scale.size());
      OperatorMatrix tmp(m.rows(), p);
      long long stride = 1;
      for (int j = L - 1; j >= 0; --j, stride *= p) {
        for (long long base = 0; base < d; ++base) {
          if ((base / stride) % p != 0) continue;
          for (int t = 0; t < p; ++t) tmp.col(t) = m.col(base + t * stride);
          for (int z = 0; z < p; ++z) {
            m.col(base + z * stride) = tmp.col(0);
            for (int t = 1; t < p; ++t)
              m.col(base + z * stride) += root_of_unity(p, 1LL * scale[j] * t * z % p) * tmp.col(t);
          }
        }
      }
      m *= sign;
      return;
    }
  }
}

WeilRep::WeilRep(GroupPtr sp, std::vector<int> column_scales)
    : sp_(std::move(sp)), scales_(std::move(column_scales)) {
  if (sp_->gen_kind != GenKind::WeilSp)
    throw Error("weil.WordUnavailable", "group was not enumerated over the Weil generators");
  if (scales_.empty()) throw Error("weil.BadCharacter", "need at least one column");
  const Field& F = sp_->field();
  for (int& b : scales_) {
    b = F.reduce(b);
    if (b == 0) throw Error("weil.BadCharacter", "column scale must be nonzero");
  }
  n_ = sp_->n() / 2;
  long long d = 1;
  for (int i = 0; i < n_ * columns(); ++i) {
    d *= F.p();
    if (d > (1LL << 24)) throw Error("weil.DimCapExceeded", "operator dimension too large");
  }
  dim_ = static_cast<int>(d);
  for (const auto& g : sp_->generators()) gens_.push_back(make_generator(g));
}

std::vector<int> WeilRep::point(int idx) const { return digits(idx, field().p(), n_ * columns()); }
int WeilRep::index(const std::vector<int>& t) const { return undigits(t, field().p()); }

std::complex<double> WeilRep::sigma_constant(int p, int n, int scale) {
  // c = (sum_z chi(-z^2/2))^{-n}; this is what makes (sigma u)^3 = 1 for every p.
  Field F(p);
  const cplx g = gauss_sum(p, F.mul(F.reduce(scale), F.neg(F.half())));
  return std::pow(g, -n);
}

WeilGenerator WeilRep::make_generator(const FqMatrix& g) const {
  const Field& F = field();
  const int p = F.p(), n = n_, k = columns();
  FqMatrix a(n, n), b(n, n), c(n, n), dd(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      a(i, j) = g(i, j);
      b(i, j) = g(i, n + j);
      c(i, j) = g(n + i, j);
      dd(i, j) = g(n + i, n + j);
    }
  const FqMatrix id = FqMatrix::identity(n);
  WeilGenerator out;
  if (g == sp_sigma(F, n)) {
    out.kind = WeilGenerator::Fourier;
    out.p = p;
    out.sign = 1.0;
    for (int bi : scales_) {
      out.sign *= sigma_constant(p, n, bi);
      for (int i = 0; i < n; ++i) out.scale.push_back(bi);
    }
    return out;
  }
  bool zero_c = std::all_of(c.a.begin(), c.a.end(), [](int x) { return x == 0; });
  if (zero_c && a == id && dd == id && is_symmetric(b)) {
    out.kind = WeilGenerator::Diagonal;
    out.diag.resize(dim_);
    for (int t = 0; t < dim_; ++t) {
      auto pt = point(t);
      long long s = 0;
      for (int col = 0; col < k; ++col) {
        long long q = 0;
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) q += 1LL * pt[col * n + i] * b(i, j) * pt[col * n + j];
        s += scales_[col] * F.reduce(q);
      }
      out.diag[t] = root_of_unity(p, F.mul(F.half(), F.reduce(s)));
    }
    return out;
  }
  bool zero_b = std::all_of(b.a.begin(), b.a.end(), [](int x) { return x == 0; });
  if (zero_b && zero_c && mul(F, transpose(a), dd) == id) {
    out.kind = WeilGenerator::Monomial;
    int eps = F.legendre(det(F, a));
    out.sign = (k % 2 == 1 && eps < 0) ? -1.0 : 1.0;
    out.src.resize(dim_);
    for (int t = 0; t < dim_; ++t) {
      auto pt = point(t);
      std::vector<int> s(pt.size());
      for (int col = 0; col < k; ++col)
        for (int i = 0; i < n; ++i) {
          long long v = 0;
          for (int j = 0; j < n; ++j) v += 1LL * a(j, i) * pt[col * n + j];
          s[col * n + i] = F.reduce(v);
        }
      out.src[t] = index(s);
    }
    return out;
  }
  throw Error("weil.WordUnavailable", "generator is not of type u(S), m(A) or sigma");
}

OperatorMatrix WeilRep::op(size_t element) const {
  OperatorMatrix m = OperatorMatrix::Identity(dim_, dim_);
  for (int k : sp_->word(element)) gens_[k].right_apply(m);
  return m;
}

OperatorMatrix WeilRep::op(const FqMatrix& g) const {
  auto idx = sp_->index_of(g);
  if (!idx) throw Error("weil.WordUnavailable", "element not in the enumerated group");
  return op(*idx);
}

namespace {

// Exact value from traces of powers g^m, m = 0..o-1, via multiplicities of eigenvalues.
CycInt snap_value(int o, int L, const std::function<std::complex<double>(int)>& trace_pow,
                  double* worst) {
  std::vector<std::complex<double>> tr(o);
  for (int m = 0; m < o; ++m) tr[m] = trace_pow(m);
  CycInt v(L);
  for (int t = 0; t < o; ++t) {
    std::complex<double> s = 0;
    for (int m = 0; m < o; ++m) s += tr[m] * root_of_unity(o, -(1LL * t * m % o));
    s /= static_cast<double>(o);
    double r = std::round(s.real());
    double res = std::max(std::abs(s.real() - r), std::abs(s.imag()));
    if (worst) *worst = std::max(*worst, res);
    if (res >= kSnapTol || r < 0)
      throw Error("weil.RoundingFailure", "trace does not snap to a character value");
    v[static_cast<int>(1LL * t * (L / o) % L)] += static_cast<long long>(r);
  }
  if (std::abs(v.to_complex() - tr[1 % o]) >= kSnapTol)
    throw Error("weil.RoundingFailure", "snapped value disagrees with trace");
  return v;
}

}  // namespace

ClassFunction snap_character(const GroupPtr& g, const std::vector<std::complex<double>>& traces) {
  const int e = g->exponent();
  std::vector<CycInt> vals;
  for (int c = 0; c < g->num_classes(); ++c) {
    const int o = g->class_order(c);
    vals.push_back(snap_value(o, e, [&](int m) { return traces[g->power_class(c, m)]; }, nullptr));
  }
  return ClassFunction(g, std::move(vals));
}

ClassFunction weil_character(const WeilRep& w) {
  const auto& g = w.group();
  std::vector<std::complex<double>> tr(g->num_classes());
  parallel_for(g->num_classes(), [&](size_t c) { tr[c] = w.op(g->class_rep(static_cast<int>(c))).trace(); });
  return snap_character(g, tr);
}

ClassFunction weil_character(const GroupPtr& g, int scale) {
  if (g->gen_kind == GenKind::WeilSp) return weil_character(WeilRep(g, {scale}));
  auto sp = make_sp(g->n(), g->p());
  if (sp->order() != g->order())
    throw Error("weil.WordUnavailable", "group is not the full symplectic group");
  return transport(weil_character(WeilRep(sp, {scale})), g);
}

namespace {

int nullity(const Field& F, const FqMatrix& m) { return m.cols - mat_rank(F, m); }

JointCharacter joint_snap_rows(const GroupPtr& g1, const GroupPtr& g2,
                               const std::function<std::vector<std::complex<double>>(int)>& row_traces) {
  JointCharacter j;
  j.g1 = g1;
  j.g2 = g2;
  j.L = std::lcm(g1->exponent(), g2->exponent());
  const int n1 = g1->num_classes(), n2 = g2->num_classes();
  std::vector<std::vector<std::complex<double>>> tr(n1, std::vector<std::complex<double>>(n2));
  parallel_for(static_cast<size_t>(n1), [&](size_t c) { tr[c] = row_traces(static_cast<int>(c)); });
  j.values.assign(n1, std::vector<CycInt>(n2, CycInt(j.L)));
  for (int c = 0; c < n1; ++c)
    for (int d = 0; d < n2; ++d) {
      const int o = std::lcm(g1->class_order(c), g2->class_order(d));
      j.values[c][d] = snap_value(o, j.L, [&](int m) {
        return tr[g1->power_class(c, m)][g2->power_class(d, m)];
      }, nullptr);
    }
  return j;
}

}  // namespace

JointCharacter glgl_character(const GroupPtr& gln, const GroupPtr& glk, int dim_cap) {
  const Field& F = gln->field();
  const int n = gln->n(), k = glk->n();
  long long d = 1;
  for (int i = 0; i < n * k; ++i) {
    d *= F.p();
    if (d > dim_cap) throw Error("weil.DimCapExceeded", "p^{nk} exceeds the operator cap");
  }
  JointCharacter j;
  j.g1 = gln;
  j.g2 = glk;
  j.L = 1;
  const int n1 = gln->num_classes(), n2 = glk->num_classes();
  j.values.assign(n1, std::vector<CycInt>(n2, CycInt(1)));
  parallel_for(static_cast<size_t>(n1), [&](size_t c) {
    FqMatrix g = gln->element(gln->class_rep(static_cast<int>(c)));
    for (int dd = 0; dd < n2; ++dd) {
      FqMatrix h = glk->element(glk->class_rep(dd));
      // vec(g T h^{-1}) = (h^{-t} kron g) vec(T)
      FqMatrix m = kron(F, transpose(inverse(F, h)), g);
      m = sub(F, m, FqMatrix::identity(m.rows));
      long long v = 1;
      for (int i = 0; i < nullity(F, m); ++i) v *= F.p();
      j.values[c][dd] = CycInt(1, v);
    }
  });
  return j;
}

std::vector<int> spo_orthogonal_source(const WeilRep& w, const FqMatrix& h) {
  const Field& F = w.field();
  const int n = w.n(), k = w.columns();
  // (pi(h) f)(T) = f(T h^{-t})
  FqMatrix m = transpose(inverse(F, h));
  std::vector<int> src(w.dim());
  for (int t = 0; t < w.dim(); ++t) {
    auto pt = w.point(t);
    std::vector<int> s(pt.size());
    for (int i = 0; i < n; ++i)
      for (int c = 0; c < k; ++c) {
        long long v = 0;
        for (int l = 0; l < k; ++l) v += 1LL * pt[l * n + i] * m(l, c);
        s[c * n + i] = F.reduce(v);
      }
    src[t] = w.index(s);
  }
  return src;
}

namespace {

std::vector<int> diagonal_scales(const GroupPtr& ob) {
  if (ob->spec.family != Family::OForm || !ob->spec.form)
    throw Error("weil.BadDualPair", "second member must be an orthogonal group with a form");
  const auto& b = *ob->spec.form;
  std::vector<int> s(b.rows);
  for (int i = 0; i < b.rows; ++i)
    for (int j = 0; j < b.cols; ++j) {
      if (i != j && b(i, j) != 0) throw Error("weil.BadDualPair", "form must be diagonal");
      if (i == j) s[i] = b(i, i);
    }
  return s;
}

}  // namespace

double spo_commutator_defect(const WeilRep& w, const GroupPtr& ob) {
  double worst = 0;
  for (const auto& h : ob->generators()) {
    WeilGenerator pi;
    pi.kind = WeilGenerator::Monomial;
    pi.src = spo_orthogonal_source(w, h);
    OperatorMatrix P = pi.matrix(w.dim());
    for (size_t k = 0; k < w.group()->generators().size(); ++k) {
      OperatorMatrix W = w.generator_matrix(static_cast<int>(k));
      worst = std::max(worst, (W * P - P * W).cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

JointCharacter spo_character(const GroupPtr& sp, const GroupPtr& ob, int dim_cap) {
  auto scales = diagonal_scales(ob);
  const int n = sp->n() / 2;
  long long d = 1;
  for (int i = 0; i < n * static_cast<int>(scales.size()); ++i) {
    d *= sp->p();
    if (d > dim_cap) throw Error("weil.DimCapExceeded", "p^{nk} exceeds the operator cap");
  }
  WeilRep w(sp, scales);
  if (spo_commutator_defect(w, ob) >= kOpTol)
    throw Error("weil.CommutationFailure", "dual pair actions do not commute");
  std::vector<std::vector<int>> srcs(ob->num_classes());
  for (int c = 0; c < ob->num_classes(); ++c)
    srcs[c] = spo_orthogonal_source(w, ob->element(ob->class_rep(c)));
  // tr(W P) = sum_T W[src[T], T] since P[T, src[T]] = 1
  return joint_snap_rows(sp, ob, [&](int c) {
    OperatorMatrix W = w.op(sp->class_rep(c));
    std::vector<std::complex<double>> row(srcs.size());
    for (size_t dd = 0; dd < srcs.size(); ++dd)
      for (int t = 0; t < w.dim(); ++t) row[dd] += W(srcs[dd][t], t);
    return row;
  });
}

ClassFunction joint_restrict_first(const JointCharacter& j) {
  std::vector<CycInt> v;
  for (auto& row : j.values) v.push_back(row[0].change_order(j.g1->exponent()));
  return ClassFunction(j.g1, std::move(v));
}

ClassFunction joint_restrict_second(const JointCharacter& j) {
  std::vector<CycInt> v;
  for (size_t d = 0; d < j.values[0].size(); ++d) v.push_back(j.values[0][d].change_order(j.g2->exponent()));
  return ClassFunction(j.g2, std::move(v));
}

}  // namespace ranklab
