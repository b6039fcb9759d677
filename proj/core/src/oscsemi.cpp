#include "ranklab/oscsemi.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "ranklab/error.hpp"
#include "ranklab/parallel.hpp"

namespace ranklab {

namespace {

FqMatrix standard_gram(int N) {
  FqMatrix j(2 * N, 2 * N);
  for (int i = 0; i < N; ++i) {
    j(i, N + i) = 1;
    j(N + i, i) = -1;
  }
  return j;
}

FqMatrix reduce_all(const Field& F, FqMatrix m) {
  for (int& x : m.a) x = F.reduce(x);
  return m;
}

std::vector<int> row_of(const FqMatrix& m, int i) {
  return std::vector<int>(m.a.begin() + static_cast<size_t>(i) * m.cols,
                          m.a.begin() + static_cast<size_t>(i + 1) * m.cols);
}

FqMatrix stack_rows(const std::vector<std::vector<int>>& rows, int cols) {
  FqMatrix m(static_cast<int>(rows.size()), cols);
  for (size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < cols; ++j) m(static_cast<int>(i), j) = rows[i][j];
  return m;
}

// Rows e_1..e_m, f_1..f_m of a symplectic basis: <e_i, f_j> = delta_ij, others 0.
FqMatrix symplectic_basis(const Field& F, const SymplecticSpace& s) {
  const int n = s.dim();
  std::vector<std::vector<int>> pool;
  for (int i = 0; i < n; ++i) {
    std::vector<int> v(n, 0);
    v[i] = 1;
    pool.push_back(v);
  }
  std::vector<std::vector<int>> es, fs;
  auto nonzero = [](const std::vector<int>& v) {
    return std::any_of(v.begin(), v.end(), [](int x) { return x != 0; });
  };
  while (!pool.empty()) {
    auto e = pool.front();
    pool.erase(pool.begin());
    if (!nonzero(e)) continue;
    size_t k = 0;
    while (k < pool.size() && pairing(F, s, e, pool[k]) == 0) ++k;
    if (k == pool.size()) throw Error("oscsemi.Degenerate", "form is degenerate");
    auto f = pool[k];
    pool.erase(pool.begin() + static_cast<long>(k));
    const int c = F.inv(pairing(F, s, e, f));
    for (int& x : f) x = F.mul(x, c);
    for (auto& v : pool) {
      const int a = F.neg(pairing(F, s, v, f)), b = pairing(F, s, v, e);
      for (int i = 0; i < n; ++i) v[i] = F.add(v[i], F.add(F.mul(a, e[i]), F.mul(b, f[i])));
    }
    es.push_back(e);
    fs.push_back(f);
  }
  es.insert(es.end(), fs.begin(), fs.end());
  return stack_rows(es, n);
}

}  // namespace

SymplecticSpace SymplecticSpace::standard(int p, int N) {
  return SymplecticSpace{p, reduce_all(Field(p), standard_gram(N))};
}

SymplecticSpace SymplecticSpace::doubled(int p, int N) {
  Field F(p);
  FqMatrix j = standard_gram(N);
  return SymplecticSpace{p, reduce_all(F, block_diag(j, scale(F, F.neg(1), reduce_all(F, j))))};
}

int pairing(const Field& F, const SymplecticSpace& s, const std::vector<int>& u, const std::vector<int>& v) {
  long long r = 0;
  for (int i = 0; i < s.dim(); ++i) {
    if (u[i] == 0) continue;
    for (int j = 0; j < s.dim(); ++j) r += 1LL * u[i] * s.gram(i, j) * v[j];
  }
  return F.reduce(r);
}

Lagrangian make_lagrangian(const Field& F, const FqMatrix& rows) { return Lagrangian{rref(F, rows)}; }

bool is_lagrangian(const SymplecticSpace& s, const Lagrangian& l) {
  Field F(s.p);
  if (l.basis.rows != s.half() || mat_rank(F, l.basis) != s.half()) return false;
  for (int i = 0; i < l.basis.rows; ++i)
    for (int j = i + 1; j < l.basis.rows; ++j)
      if (pairing(F, s, row_of(l.basis, i), row_of(l.basis, j)) != 0) return false;
  return true;
}

long long lagrangian_count(int m, int p) {
  long long c = 1, q = 1;
  for (int i = 1; i <= m; ++i) {
    q *= p;
    c *= q + 1;
  }
  return c;
}

std::vector<Lagrangian> all_lagrangians(const SymplecticSpace& s, size_t cap) {
  Field F(s.p);
  const int m = s.half(), p = s.p;
  if (lagrangian_count(m, p) > static_cast<long long>(cap))
    throw Error("oscsemi.CapExceeded", "too many Lagrangians to enumerate");
  FqMatrix P = symplectic_basis(F, s);
  // Every Lagrangian is the graph {a_i + sum_j S_ij b_j} of a symmetric S over one of the
  // 2^m coordinate splittings, with (a_i, b_i) = (f_i, -e_i) for i in I and (e_i, f_i) otherwise.
  const int sym = m * (m + 1) / 2;
  long long ns = 1;
  for (int i = 0; i < sym; ++i) ns *= p;
  std::set<Lagrangian> out;
  for (int mask = 0; mask < (1 << m); ++mask) {
    FqMatrix a(m, 2 * m), b(m, 2 * m);
    for (int i = 0; i < m; ++i) {
      if (mask >> i & 1) {
        a(i, m + i) = 1;
        b(i, i) = F.neg(1);
      } else {
        a(i, i) = 1;
        b(i, m + i) = 1;
      }
    }
    for (long long code = 0; code < ns; ++code) {
      FqMatrix S(m, m);
      long long x = code;
      for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
          S(i, j) = S(j, i) = static_cast<int>(x % p);
          x /= p;
        }
      FqMatrix rows = add(F, a, mul(F, S, b));
      out.insert(make_lagrangian(F, mul(F, rows, P)));
    }
  }
  return std::vector<Lagrangian>(out.begin(), out.end());
}

Lagrangian coordinate_x(const Field& F, int N) {
  FqMatrix r(N, 2 * N);
  for (int i = 0; i < N; ++i) r(i, i) = 1;
  return make_lagrangian(F, r);
}

Lagrangian coordinate_y(const Field& F, int N) {
  FqMatrix r(N, 2 * N);
  for (int i = 0; i < N; ++i) r(i, N + i) = 1;
  return make_lagrangian(F, r);
}

Lagrangian transform(const Field& F, const Lagrangian& l, const FqMatrix& g) {
  return make_lagrangian(F, mul(F, l.basis, transpose(g)));
}

Eigen::VectorXcd quantize(const SchrodingerModel& m, const Lagrangian& l) {
  const Field& F = m.field();
  const int N = m.N(), p = F.p();
  if (l.basis.rows != N || l.basis.cols != 2 * N) throw Error("oscsemi.BadShape", "Lagrangian of wrong size");
  Eigen::VectorXcd q = Eigen::VectorXcd::Zero(m.dim());
  long long total = 1;
  for (int i = 0; i < N; ++i) total *= p;
  std::vector<int> c(N), w(2 * N);
  for (long long code = 0; code < total; ++code) {
    long long x = code;
    for (int i = 0; i < N; ++i) {
      c[i] = static_cast<int>(x % p);
      x /= p;
    }
    for (int j = 0; j < 2 * N; ++j) {
      long long s = 0;
      for (int i = 0; i < N; ++i) s += 1LL * c[i] * l.basis(i, j);
      w[j] = F.reduce(s);
    }
    long long xy = 0;
    for (int i = 0; i < N; ++i) xy += 1LL * w[i] * w[N + i];
    std::vector<int> y(w.begin() + N, w.end());
    q[m.index(y)] = root_of_unity(p, 1LL * m.scale() * F.mul(F.half(), F.reduce(xy)) % p);
  }
  return q;
}

std::vector<int> w_point(int p, int N, long long idx) {
  std::vector<int> v(2 * N);
  for (int i = 2 * N - 1; i >= 0; --i) {
    v[i] = static_cast<int>(idx % p);
    idx /= p;
  }
  return v;
}

OperatorMatrix weyl_transform(const SchrodingerModel& m, const Eigen::VectorXcd& f) {
  if (m.dim() > kDimCap) throw Error("weil.DimCapExceeded", "model too large for the Weyl transform");
  OperatorMatrix a = OperatorMatrix::Zero(m.dim(), m.dim());
  for (long long i = 0; i < f.size(); ++i) {
    if (f[i] == std::complex<double>(0)) continue;
    a += f[i] * m.rho(HeisenbergElement{w_point(m.field().p(), m.N(), i), 0});
  }
  return a;
}

Eigen::VectorXcd inverse_weyl_transform(const SchrodingerModel& m, const OperatorMatrix& a) {
  long long total = static_cast<long long>(m.dim()) * m.dim();
  Eigen::VectorXcd f(total);
  for (long long i = 0; i < total; ++i) {
    OperatorMatrix r = m.rho(HeisenbergElement{w_point(m.field().p(), m.N(), i), 0});
    f[i] = (a * r.adjoint()).trace() / static_cast<double>(m.dim());
  }
  return f;
}

std::complex<double> hs_inner(const OperatorMatrix& a, const OperatorMatrix& b) {
  return (a * b.adjoint()).trace() / static_cast<double>(a.rows());
}

Lagrangian graph_lagrangian(const Field& F, const FqMatrix& g) {
  const int n = g.rows;
  FqMatrix r(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    r(i, i) = 1;
    for (int j = 0; j < n; ++j) r(i, n + j) = g(j, i);
  }
  return make_lagrangian(F, r);
}

Lagrangian compose(const Field& F, const Lagrangian& m, const Lagrangian& l) {
  const int k = l.basis.rows, n = l.basis.cols / 2;
  // coefficient pairs (lambda, mu) with lambda B_L = mu C_M
  FqMatrix sys(n, 2 * k);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < k; ++i) {
      sys(j, i) = l.basis(i, n + j);
      sys(j, k + i) = F.neg(m.basis(i, j));
    }
  FqMatrix ker = nullspace(F, sys);
  FqMatrix out(ker.rows, 2 * n);
  for (int r = 0; r < ker.rows; ++r)
    for (int j = 0; j < n; ++j) {
      long long a = 0, d = 0;
      for (int i = 0; i < k; ++i) {
        a += 1LL * ker(r, i) * l.basis(i, j);
        d += 1LL * ker(r, k + i) * m.basis(i, n + j);
      }
      out(r, j) = F.reduce(a);
      out(r, n + j) = F.reduce(d);
    }
  return make_lagrangian(F, out);
}

OperatorMatrix quantize_doubled(const SchrodingerModel& m, const Lagrangian& l) {
  const int d = m.dim(), N = m.N();
  const int dd = d * d;
  Eigen::MatrixXcd gram = Eigen::MatrixXcd::Zero(dd, dd);
  OperatorMatrix id = OperatorMatrix::Identity(d, d);
  for (int r = 0; r < l.basis.rows; ++r) {
    HeisenbergElement w, w2;
    w.w.assign(l.basis.a.begin() + static_cast<size_t>(r) * l.basis.cols,
               l.basis.a.begin() + static_cast<size_t>(r) * l.basis.cols + 2 * N);
    w2.w.assign(l.basis.a.begin() + static_cast<size_t>(r) * l.basis.cols + 2 * N,
                l.basis.a.begin() + static_cast<size_t>(r + 1) * l.basis.cols);
    OperatorMatrix a = m.rho(w), b = m.rho(w2);
    // vec(b A - A a) = (I kron b - a^T kron I) vec(A)
    Eigen::MatrixXcd sys = Eigen::MatrixXcd::Zero(dd, dd);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        sys.block(i * d, i * d, d, d) += (i == j ? 1.0 : 0.0) * b;
        sys.block(i * d, j * d, d, d) -= a(j, i) * id;
      }
    gram.noalias() += sys.adjoint() * sys;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram);
  if (dd > 1 && es.eigenvalues()[1] < 1e-6)
    throw Error("oscsemi.NotUnique", "invariant operator is not unique");
  Eigen::VectorXcd v = es.eigenvectors().col(0);
  OperatorMatrix A = Eigen::Map<OperatorMatrix>(v.data(), d, d);
  int best = 0;
  for (int i = 0; i < A.size(); ++i)
    if (std::abs(A.data()[i]) > std::abs(A.data()[best]) + 1e-9) best = i;
  A *= std::abs(A.data()[best]) / A.data()[best];
  A *= std::sqrt(static_cast<double>(d)) / A.norm();
  return A;
}

double proportionality_residual(const OperatorMatrix& a, const OperatorMatrix& b, std::complex<double>* lambda) {
  const double na = a.cwiseAbs().maxCoeff();
  const double nb2 = b.squaredNorm();
  if (nb2 < 1e-24) {
    if (lambda) *lambda = 0;
    return na < 1e-12 ? 0.0 : 1.0;
  }
  std::complex<double> lam = (b.adjoint() * a).trace() / nb2;
  if (lambda) *lambda = lam;
  if (na < 1e-12) return 0.0;
  return (a - lam * b).cwiseAbs().maxCoeff() / na;
}

SemigroupReport semigroup_check(int p, int N) {
  Field F(p);
  SchrodingerModel m(p, N);
  auto ls = all_lagrangians(SymplecticSpace::doubled(p, N));
  std::map<Lagrangian, int> index;
  for (size_t i = 0; i < ls.size(); ++i) index[ls[i]] = static_cast<int>(i);
  std::vector<OperatorMatrix> q(ls.size());
  parallel_for(ls.size(), [&](size_t i) { q[i] = quantize_doubled(m, ls[i]); });
  SemigroupReport rep;
  rep.lagrangians = static_cast<long long>(ls.size());
  for (size_t i = 0; i < ls.size(); ++i)
    for (size_t j = 0; j < ls.size(); ++j) {
      auto c = compose(F, ls[i], ls[j]);
      auto it = index.find(c);
      ++rep.pairs;
      if (it == index.end()) continue;
      OperatorMatrix prod = q[i] * q[j];
      std::complex<double> alpha;
      double res = proportionality_residual(prod, q[it->second], &alpha);
      rep.max_residual = std::max(rep.max_residual, res);
      if (std::abs(alpha) < 1e-9) ++rep.alpha_zero;
      if (res < 1e-8) ++rep.passed;
    }
  return rep;
}

TripleParts triple_parts(const Field& F, int N, const Lagrangian& l) {
  const int k = l.basis.rows, n = 2 * N;
  FqMatrix a(k, n), b(k, n);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < n; ++j) {
      a(i, j) = l.basis(i, j);
      b(i, j) = l.basis(i, n + j);
    }
  auto intersect = [&](const FqMatrix& keep, const FqMatrix& kill) {
    FqMatrix ker = nullspace(F, transpose(kill));
    if (ker.rows == 0) return FqMatrix(0, n);
    return rref(F, mul(F, ker, keep));
  };
  TripleParts t;
  t.lplus = intersect(a, b);
  t.lminus = intersect(b, a);
  t.pplus = rref(F, a);
  t.pminus = rref(F, b);
  return t;
}

bool triple_relations_hold(const Field& F, int N, const Lagrangian& l) {
  auto t = triple_parts(F, N, l);
  FqMatrix j = reduce_all(F, standard_gram(N));
  auto perp = [&](const FqMatrix& u) {
    if (u.rows == 0) return FqMatrix::identity(2 * N);
    return rref(F, nullspace(F, mul(F, u, j)));
  };
  return t.lplus.rows == t.lminus.rows && perp(t.lplus) == t.pplus && perp(t.lminus) == t.pminus;
}

std::vector<int> orbit_labels(const Field& F, int N, const std::vector<FqMatrix>& gens, int* count) {
  const int p = F.p();
  long long total = 1;
  for (int i = 0; i < 2 * N; ++i) total *= p;
  std::vector<int> label(total, -1);
  int next = 0;
  for (long long s = 0; s < total; ++s) {
    if (label[s] >= 0) continue;
    std::vector<long long> stack = {s};
    label[s] = next;
    while (!stack.empty()) {
      auto v = w_point(p, N, stack.back());
      stack.pop_back();
      for (const auto& g : gens) {
        long long idx = 0;
        for (int i = 0; i < 2 * N; ++i) {
          long long r = 0;
          for (int j = 0; j < 2 * N; ++j) r += 1LL * g(i, j) * v[j];
          idx = idx * p + F.reduce(r);
        }
        if (label[idx] < 0) {
          label[idx] = next;
          stack.push_back(idx);
        }
      }
    }
    ++next;
  }
  if (count) *count = next;
  return label;
}

int commutant_dimension(const Field& F, int N, const std::vector<FqMatrix>& gens) {
  int c = 0;
  orbit_labels(F, N, gens, &c);
  return c;
}

std::vector<OperatorMatrix> commutant_basis(const SchrodingerModel& m, const std::vector<FqMatrix>& gens) {
  int c = 0;
  auto lab = orbit_labels(m.field(), m.N(), gens, &c);
  std::vector<OperatorMatrix> out;
  for (int o = 0; o < c; ++o) {
    Eigen::VectorXcd f = Eigen::VectorXcd::Zero(static_cast<long>(lab.size()));
    for (size_t i = 0; i < lab.size(); ++i)
      if (lab[i] == o) f[static_cast<long>(i)] = 1.0;
    out.push_back(weyl_transform(m, f));
  }
  return out;
}

int operator_span_rank(const std::vector<OperatorMatrix>& ops, double tol) {
  if (ops.empty()) return 0;
  const long long sz = ops[0].size();
  Eigen::MatrixXcd M(sz, static_cast<long>(ops.size()));
  for (size_t i = 0; i < ops.size(); ++i)
    M.col(static_cast<long>(i)) = Eigen::Map<const Eigen::VectorXcd>(ops[i].data(), sz) / ops[i].norm();
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M);
  const auto& s = svd.singularValues();
  int r = 0;
  for (long i = 0; i < s.size(); ++i) r += s[i] > tol * s[0];
  return r;
}

SpanReport invariant_semigroup_span(const WeilRep& w, const std::vector<FqMatrix>& gens) {
  const Field& F = w.field();
  const int N = w.n();
  if (w.columns() != 1) throw Error("oscsemi.BadModel", "needs the basic oscillator representation");
  SchrodingerModel m(F.p(), N, w.scales()[0]);
  auto ls = all_lagrangians(SymplecticSpace::doubled(F.p(), N));
  std::vector<FqMatrix> doubled;
  std::vector<OperatorMatrix> omegas;
  for (const auto& g : gens) {
    doubled.push_back(block_diag(g, g));
    omegas.push_back(w.op(g));
  }
  std::vector<char> fixed(ls.size(), 0);
  parallel_for(ls.size(), [&](size_t i) {
    fixed[i] = std::all_of(doubled.begin(), doubled.end(),
                           [&](const FqMatrix& g) { return transform(F, ls[i], g) == ls[i]; });
  });
  SpanReport rep;
  std::vector<OperatorMatrix> kept;
  for (size_t i = 0; i < ls.size(); ++i) {
    if (!fixed[i]) continue;
    ++rep.fixed_lagrangians;
    OperatorMatrix q = quantize_doubled(m, ls[i]);
    bool commutes = true;
    for (const auto& om : omegas) commutes = commutes && (om * q - q * om).cwiseAbs().maxCoeff() < 1e-8;
    if (commutes) kept.push_back(q);
  }
  rep.invariant = static_cast<long long>(kept.size());
  rep.rank = operator_span_rank(kept);
  rep.commutant_dim = commutant_dimension(F, N, gens);
  return rep;
}

int sp_sp_orbit_count(int p, int N) {
  Field F(p);
  auto ls = all_lagrangians(SymplecticSpace::doubled(p, N));
  std::map<Lagrangian, int> index;
  for (size_t i = 0; i < ls.size(); ++i) index[ls[i]] = static_cast<int>(i);
  auto sp = make_sp(2 * N, p);
  const FqMatrix id = FqMatrix::identity(2 * N);
  std::vector<FqMatrix> gens;
  for (const auto& g : sp->generators()) {
    gens.push_back(block_diag(g, id));
    gens.push_back(block_diag(id, g));
  }
  std::vector<int> parent(ls.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  std::vector<std::vector<int>> img(ls.size(), std::vector<int>(gens.size()));
  parallel_for(ls.size(), [&](size_t i) {
    for (size_t k = 0; k < gens.size(); ++k) img[i][k] = index.at(transform(F, ls[i], gens[k]));
  });
  for (size_t i = 0; i < ls.size(); ++i)
    for (int j : img[i]) parent[find(static_cast<int>(i))] = find(j);
  int c = 0;
  for (size_t i = 0; i < ls.size(); ++i) c += find(static_cast<int>(i)) == static_cast<int>(i);
  return c;
}

}  // namespace ranklab
