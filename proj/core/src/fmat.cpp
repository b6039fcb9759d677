#include "ranklab/fmat.hpp"

#include <sstream>
#include <utility>

#include "ranklab/error.hpp"

namespace ranklab {

FqMatrix FqMatrix::identity(int n) {
  FqMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

FqMatrix FqMatrix::diag(const std::vector<int>& d) {
  int n = static_cast<int>(d.size());
  FqMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = d[i];
  return m;
}

FqMatrix mul(const Field& F, const FqMatrix& x, const FqMatrix& y) {
  if (x.cols != y.rows) throw Error("fmat.BadShape", "mul dimension mismatch");
  FqMatrix r(x.rows, y.cols);
  const int p = F.p();
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < y.cols; ++j) {
      long long s = 0;
      for (int k = 0; k < x.cols; ++k) s += 1LL * x(i, k) * y(k, j);
      r(i, j) = static_cast<int>(s % p);
    }
  return r;
}

FqMatrix add(const Field& F, const FqMatrix& x, const FqMatrix& y) {
  FqMatrix r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = F.add(x.a[i], y.a[i]);
  return r;
}

FqMatrix sub(const Field& F, const FqMatrix& x, const FqMatrix& y) {
  FqMatrix r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = F.sub(x.a[i], y.a[i]);
  return r;
}

FqMatrix scale(const Field& F, int c, const FqMatrix& x) {
  FqMatrix r = x;
  for (auto& v : r.a) v = F.mul(F.reduce(c), v);
  return r;
}

FqMatrix transpose(const FqMatrix& x) {
  FqMatrix r(x.cols, x.rows);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) r(j, i) = x(i, j);
  return r;
}

FqMatrix kron(const Field& F, const FqMatrix& x, const FqMatrix& y) {
  FqMatrix r(x.rows * y.rows, x.cols * y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j)
      for (int k = 0; k < y.rows; ++k)
        for (int l = 0; l < y.cols; ++l)
          r(i * y.rows + k, j * y.cols + l) = F.mul(x(i, j), y(k, l));
  return r;
}

FqMatrix block_diag(const FqMatrix& x, const FqMatrix& y) {
  FqMatrix r(x.rows + y.rows, x.cols + y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) r(i, j) = x(i, j);
  for (int i = 0; i < y.rows; ++i)
    for (int j = 0; j < y.cols; ++j) r(x.rows + i, x.cols + j) = y(i, j);
  return r;
}

FqMatrix rref(const Field& F, FqMatrix m, std::vector<int>* piv) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int sel = -1;
    for (int i = r; i < m.rows; ++i)
      if (m(i, c) != 0) { sel = i; break; }
    if (sel < 0) continue;
    if (sel != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m(sel, j), m(r, j));
    int iv = F.inv(m(r, c));
    for (int j = 0; j < m.cols; ++j) m(r, j) = F.mul(m(r, j), iv);
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      int f = m(i, c);
      for (int j = 0; j < m.cols; ++j) m(i, j) = F.sub(m(i, j), F.mul(f, m(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  FqMatrix out(r, m.cols);
  std::copy(m.a.begin(), m.a.begin() + static_cast<long>(r) * m.cols, out.a.begin());
  if (piv) *piv = std::move(pivots);
  return out;
}

int mat_rank(const Field& F, FqMatrix m) { return rref(F, std::move(m)).rows; }

int det(const Field& F, FqMatrix m) {
  if (m.rows != m.cols) throw Error("fmat.BadShape", "det of non-square matrix");
  int n = m.rows, d = 1;
  for (int c = 0; c < n; ++c) {
    int sel = -1;
    for (int i = c; i < n; ++i)
      if (m(i, c) != 0) { sel = i; break; }
    if (sel < 0) return 0;
    if (sel != c) {
      for (int j = 0; j < n; ++j) std::swap(m(sel, j), m(c, j));
      d = F.neg(d);
    }
    d = F.mul(d, m(c, c));
    int iv = F.inv(m(c, c));
    for (int i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      int f = F.mul(m(i, c), iv);
      for (int j = c; j < n; ++j) m(i, j) = F.sub(m(i, j), F.mul(f, m(c, j)));
    }
  }
  return d;
}

FqMatrix inverse(const Field& F, const FqMatrix& m) {
  int n = m.rows;
  FqMatrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  std::vector<int> piv;
  FqMatrix r = rref(F, aug, &piv);
  if (r.rows < n || piv[n - 1] != n - 1) throw Error("fmat.Singular", "matrix not invertible");
  FqMatrix out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = r(i, n + j);
  return out;
}

FqMatrix nullspace(const Field& F, const FqMatrix& m) {
  std::vector<int> piv;
  FqMatrix r = rref(F, m, &piv);
  std::vector<char> is_piv(m.cols, 0);
  for (int c : piv) is_piv[c] = 1;
  FqMatrix basis(m.cols - static_cast<int>(piv.size()), m.cols);
  int row = 0;
  for (int f = 0; f < m.cols; ++f) {
    if (is_piv[f]) continue;
    basis(row, f) = 1;
    for (int i = 0; i < r.rows; ++i) basis(row, piv[i]) = F.neg(r(i, f));
    ++row;
  }
  return basis;
}

int trace(const Field& F, const FqMatrix& m) {
  int t = 0;
  for (int i = 0; i < std::min(m.rows, m.cols); ++i) t = F.add(t, m(i, i));
  return t;
}

bool is_symmetric(const FqMatrix& m) {
  if (m.rows != m.cols) return false;
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < i; ++j)
      if (m(i, j) != m(j, i)) return false;
  return true;
}

std::string to_string(const FqMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < m.rows; ++i) {
    if (i) os << ';';
    for (int j = 0; j < m.cols; ++j) os << (j ? " " : "") << m(i, j);
  }
  os << ']';
  return os.str();
}

const char* tower_name(TowerTag t) {
  switch (t) {
    case TowerTag::Zero: return "Zero";
    case TowerTag::Split: return "Split";
    case TowerTag::NonSplitEven: return "NonSplitEven";
    case TowerTag::OddPlus: return "OddPlus";
    case TowerTag::OddMinus: return "OddMinus";
  }
  return "?";
}

// disc is the signed discriminant (-1)^{floor(k/2)} det, so the hyperbolic
// plane is square and a rank-1 form (a) has class of a.
SymFormClass make_form_class(const Field&, int rank, int disc) {
  SymFormClass c;
  c.rank = rank;
  c.disc = rank == 0 ? 1 : disc;
  if (rank == 0)
    c.tower = TowerTag::Zero;
  else if (rank % 2 == 0)
    c.tower = c.disc == 1 ? TowerTag::Split : TowerTag::NonSplitEven;
  else
    c.tower = c.disc == 1 ? TowerTag::OddPlus : TowerTag::OddMinus;
  return c;
}

std::vector<int> congruence_diagonal(const Field& F, FqMatrix s) {
  if (!is_symmetric(s)) throw Error("fmat.NotSymmetric", "form must be symmetric");
  const int n = s.rows;
  // Symmetric elimination: apply each row operation together with the
  // matching column operation so the matrix stays congruent to the input.
  auto add_multiple = [&](int dst, int src, int f) {
    for (int j = 0; j < n; ++j) s(dst, j) = F.add(s(dst, j), F.mul(f, s(src, j)));
    for (int i = 0; i < n; ++i) s(i, dst) = F.add(s(i, dst), F.mul(f, s(i, src)));
  };
  auto swap_idx = [&](int a, int b) {
    for (int j = 0; j < n; ++j) std::swap(s(a, j), s(b, j));
    for (int i = 0; i < n; ++i) std::swap(s(i, a), s(i, b));
  };
  for (int k = 0; k < n; ++k) {
    int sel = -1;
    for (int i = k; i < n; ++i)
      if (s(i, i) != 0) { sel = i; break; }
    if (sel < 0) {
      // all remaining diagonal entries vanish: split off x+y from an off-diagonal pair
      int pi = -1, pj = -1;
      for (int i = k; i < n && pi < 0; ++i)
        for (int j = i + 1; j < n; ++j)
          if (s(i, j) != 0) { pi = i; pj = j; break; }
      if (pi < 0) break;
      add_multiple(pi, pj, 1);
      sel = pi;
    }
    if (sel != k) swap_idx(sel, k);
    int iv = F.inv(s(k, k));
    for (int i = k + 1; i < n; ++i)
      if (s(i, k) != 0) add_multiple(i, k, F.neg(F.mul(s(i, k), iv)));
  }
  std::vector<int> d(n);
  for (int i = 0; i < n; ++i) d[i] = s(i, i);
  return d;
}

SymFormClass classify_sym_form(const Field& F, const FqMatrix& s) {
  auto d = congruence_diagonal(F, s);
  int rank = 0, prod = 1;
  for (int v : d)
    if (v != 0) { ++rank; prod = F.mul(prod, v); }
  if (rank == 0) return make_form_class(F, 0, 1);
  if ((rank / 2) % 2 == 1) prod = F.neg(prod);
  return make_form_class(F, rank, F.legendre(prod));
}

SymFormClass witt_direct_sum(const Field& F, const SymFormClass& c1, const SymFormClass& c2) {
  if (c1.rank == 0) return c2;
  if (c2.rank == 0) return c1;
  int disc = c1.disc * c2.disc;
  if (c1.rank % 2 == 1 && c2.rank % 2 == 1) disc *= F.legendre(F.p() - 1);
  return make_form_class(F, c1.rank + c2.rank, disc);
}

int char_rank(const Field& F, const MatrixCharacter& c) { return mat_rank(F, c.t); }

SymFormClass char_type(const Field& F, const MatrixCharacter& c) { return classify_sym_form(F, c.t); }

}  // namespace ranklab
