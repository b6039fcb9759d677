#include "ranklab/dixon.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "ranklab/error.hpp"
#include "ranklab/parallel.hpp"

namespace ranklab {

namespace {

// Dense matrix over F_ell with ell < 2^31.
struct ModMat {
  int rows = 0, cols = 0;
  std::vector<uint64_t> a;
  ModMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}
  uint64_t& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  uint64_t operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

ModMat rref_mod(ModMat m, uint64_t ell, std::vector<int>* piv) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int sel = -1;
    for (int i = r; i < m.rows; ++i)
      if (m(i, c) != 0) { sel = i; break; }
    if (sel < 0) continue;
    if (sel != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m(sel, j), m(r, j));
    uint64_t iv = mod_pow(m(r, c), ell - 2, ell);
    for (int j = 0; j < m.cols; ++j) m(r, j) = m(r, j) * iv % ell;
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      uint64_t f = m(i, c);
      for (int j = 0; j < m.cols; ++j) m(i, j) = (m(i, j) + (ell - f) * m(r, j)) % ell;
    }
    pivots.push_back(c);
    ++r;
  }
  ModMat out(r, m.cols);
  std::copy(m.a.begin(), m.a.begin() + static_cast<long>(r) * m.cols, out.a.begin());
  if (piv) *piv = pivots;
  return out;
}

// Rows spanning the left null space {c : c m = 0}.
ModMat left_null(const ModMat& m, uint64_t ell) {
  ModMat t(m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) t(j, i) = m(i, j);
  std::vector<int> piv;
  ModMat r = rref_mod(t, ell, &piv);
  std::vector<char> is_piv(t.cols, 0);
  for (int c : piv) is_piv[c] = 1;
  ModMat basis(t.cols - static_cast<int>(piv.size()), t.cols);
  int row = 0;
  for (int f = 0; f < t.cols; ++f) {
    if (is_piv[f]) continue;
    basis(row, f) = 1;
    for (int i = 0; i < r.rows; ++i) basis(row, piv[i]) = (ell - r(i, f)) % ell;
    ++row;
  }
  return basis;
}

struct Piece {
  ModMat basis;  // rows, RREF
  std::vector<int> piv;
};

// Split a joint-invariant subspace by the eigenspaces of one class matrix.
std::vector<Piece> split_piece(const Piece& pc, const ModMat& M, uint64_t ell) {
  const int m = pc.basis.rows, r = pc.basis.cols;
  // A(t, s): coordinate s of M applied to basis vector t
  ModMat A(m, m);
  for (int t = 0; t < m; ++t)
    for (int s = 0; s < m; ++s) {
      int col = pc.piv[s];
      uint64_t acc = 0;
      for (int k = 0; k < r; ++k) acc = (acc + M(col, k) * pc.basis(t, k)) % ell;
      A(t, s) = acc;
    }
  bool scalar = true;
  for (int t = 0; t < m && scalar; ++t)
    for (int s = 0; s < m; ++s)
      if (t != s && A(t, s) != 0) { scalar = false; break; }
  for (int t = 1; t < m && scalar; ++t)
    if (A(t, t) != A(0, 0)) scalar = false;
  if (scalar) return {pc};
  std::vector<Piece> out;
  int found = 0;
  for (uint64_t lam = 0; lam < ell && found < m; ++lam) {
    ModMat B = A;
    for (int t = 0; t < m; ++t) B(t, t) = (B(t, t) + ell - lam) % ell;
    ModMat ns = left_null(B, ell);
    if (ns.rows == 0) continue;
    ModMat vecs(ns.rows, r);
    for (int i = 0; i < ns.rows; ++i)
      for (int t = 0; t < m; ++t) {
        if (ns(i, t) == 0) continue;
        for (int k = 0; k < r; ++k) vecs(i, k) = (vecs(i, k) + ns(i, t) * pc.basis(t, k)) % ell;
      }
    Piece q{ModMat(0, 0), {}};
    q.basis = rref_mod(vecs, ell, &q.piv);
    found += q.basis.rows;
    out.push_back(std::move(q));
  }
  if (found != m) throw Error("dixon.SplitFailure", "class matrix not diagonalizable over F_ell");
  return out;
}

int compare_values(const ClassFunction& a, const ClassFunction& b) {
  for (size_t c = 0; c < a.values.size(); ++c) {
    auto x = a.values[c].canonical(), y = b.values[c].canonical();
    if (x < y) return -1;
    if (y < x) return 1;
  }
  return 0;
}

bool is_trivial(const ClassFunction& f) {
  for (auto& v : f.values) {
    auto i = v.as_integer();
    if (!i || *i != 1) return false;
  }
  return true;
}

}  // namespace

int CharacterTable::find(const ClassFunction& chi) const {
  for (int i = 0; i < size(); ++i)
    if (irr[i] == chi) return i;
  return -1;
}

CharacterTable char_table(const GroupPtr& gp, const DixonOptions& opt) {
  const FiniteMatrixGroup& G = *gp;
  const int r = G.num_classes();
  if (r > opt.max_classes) throw Error("dixon.ClassCapExceeded", "too many classes");
  const long long order = static_cast<long long>(G.order());
  const int e = G.exponent();
  // smallest prime ell = 1 mod e with ell > 2 sqrt|G|
  const double bound = 2.0 * std::sqrt(static_cast<double>(order));
  uint64_t ell = 0;
  for (uint64_t k = 1;; ++k) {
    uint64_t c = k * static_cast<uint64_t>(e) + 1;
    if (static_cast<double>(c) > bound && is_prime(static_cast<long long>(c))) {
      ell = c;
      break;
    }
  }

  // class matrices (M_i)_{jk} = #{x in C_i : x^{-1} z in C_j}, z in C_k
  std::vector<ModMat> M(r, ModMat(r, r));
  std::vector<std::vector<long long>> counts(r, std::vector<long long>(static_cast<size_t>(r) * r, 0));
  parallel_for(r, [&](int k) {
    size_t z = G.class_rep(k);
    auto& cnt = counts[k];
    for (size_t x = 0; x < G.order(); ++x) {
      int i = G.class_of(x);
      int j = G.class_of(G.mul(G.inverse(x), z));
      ++cnt[static_cast<size_t>(i) * r + j];
    }
  });
  for (int k = 0; k < r; ++k)
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) M[i](j, k) = static_cast<uint64_t>(counts[k][static_cast<size_t>(i) * r + j]) % ell;

  Piece whole{ModMat(r, r), {}};
  for (int i = 0; i < r; ++i) {
    whole.basis(i, i) = 1;
    whole.piv.push_back(i);
  }
  std::vector<Piece> pending{whole}, done;
  for (int i = 1; i < r && !pending.empty(); ++i) {
    std::vector<Piece> next;
    for (auto& pc : pending)
      for (auto& q : split_piece(pc, M[i], ell)) (q.basis.rows == 1 ? done : next).push_back(std::move(q));
    pending = std::move(next);
  }
  std::mt19937_64 rng(opt.seed);
  for (int attempt = 0; !pending.empty(); ++attempt) {
    if (attempt > 50) throw Error("dixon.SplitFailure", "eigenspaces did not separate");
    ModMat comb(r, r);
    for (int i = 0; i < r; ++i) {
      uint64_t c = rng() % ell;
      for (size_t t = 0; t < comb.a.size(); ++t) comb.a[t] = (comb.a[t] + c * M[i].a[t]) % ell;
    }
    std::vector<Piece> next;
    for (auto& pc : pending)
      for (auto& q : split_piece(pc, comb, ell)) (q.basis.rows == 1 ? done : next).push_back(std::move(q));
    pending = std::move(next);
  }
  if (static_cast<int>(done.size()) != r) throw Error("dixon.SplitFailure", "wrong number of characters");

  uint64_t zroot = mod_pow(primitive_root_mod(ell), (ell - 1) / e, ell);
  std::vector<uint64_t> zpow(e);
  for (int j = 0; j < e; ++j) zpow[j] = mod_pow(zroot, j, ell);
  const uint64_t inv_e = mod_pow(static_cast<uint64_t>(e) % ell, ell - 2, ell);
  const long long dmax = static_cast<long long>(std::sqrt(static_cast<double>(order))) + 1;

  CharacterTable T;
  T.group = gp;
  T.ell = static_cast<long long>(ell);
  std::vector<ClassFunction> chars(r);
  parallel_for(r, [&](int idx) {
    const Piece& pc = done[idx];
    std::vector<uint64_t> v(r);
    uint64_t v0inv = mod_pow(pc.basis(0, 0), ell - 2, ell);
    if (pc.basis(0, 0) == 0) throw Error("dixon.LiftFailure", "central character vanishes at identity");
    for (int k = 0; k < r; ++k) v[k] = pc.basis(0, k) * v0inv % ell;
    uint64_t s = 0;
    for (int j = 0; j < r; ++j) {
      uint64_t h = G.class_size(j) % ell;
      s = (s + v[j] * v[G.inverse_class(j)] % ell * mod_pow(h, ell - 2, ell)) % ell;
    }
    uint64_t d2 = static_cast<uint64_t>(order) % ell * mod_pow(s, ell - 2, ell) % ell;
    long long d = -1;
    for (long long c = 1; c <= dmax; ++c)
      if (static_cast<uint64_t>(c * c) % ell == d2) { d = c; break; }
    if (d < 0) throw Error("dixon.LiftFailure", "no admissible degree");
    std::vector<uint64_t> chi(r);
    for (int j = 0; j < r; ++j)
      chi[j] = v[j] * static_cast<uint64_t>(d) % ell * mod_pow(G.class_size(j) % ell, ell - 2, ell) % ell;
    std::vector<CycInt> vals;
    for (int j = 0; j < r; ++j) {
      CycInt x(e);
      long long total = 0;
      for (int t = 0; t < e; ++t) {
        uint64_t acc = 0;
        for (int m = 0; m < e; ++m) {
          uint64_t zi = zpow[static_cast<size_t>((static_cast<long long>(e) * e - 1LL * t * m) % e)];
          acc = (acc + chi[G.power_class(j, m)] * zi) % ell;
        }
        acc = acc * inv_e % ell;
        if (acc > static_cast<uint64_t>(d)) throw Error("dixon.LiftFailure", "eigenvalue multiplicity out of range");
        x[t] = static_cast<long long>(acc);
        total += x[t];
      }
      if (total != d) throw Error("dixon.LiftFailure", "multiplicities do not sum to the degree");
      vals.push_back(x);
    }
    chars[idx] = ClassFunction(gp, std::move(vals));
  });
  std::sort(chars.begin(), chars.end(), [](const ClassFunction& a, const ClassFunction& b) {
    long long da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    bool ta = is_trivial(a), tb = is_trivial(b);
    if (ta != tb) return ta;
    return compare_values(a, b) < 0;
  });
  T.irr = std::move(chars);
  for (auto& c : T.irr) T.degrees.push_back(c.degree());
  certify_table(T);
  return T;
}

void certify_table(const CharacterTable& t) {
  const auto& G = *t.group;
  const int r = G.num_classes();
  if (t.size() != r) throw Error("dixon.LiftFailure", "number of irreducibles differs from number of classes");
  long long sq = 0;
  for (long long d : t.degrees) {
    sq += d * d;
    if (static_cast<long long>(G.order()) % d != 0) throw Error("dixon.LiftFailure", "degree does not divide |G|");
  }
  if (sq != static_cast<long long>(G.order())) throw Error("dixon.LiftFailure", "sum of squared degrees differs from |G|");
  std::vector<Rational> bad;
  parallel_for(r, [&](int i) {
    for (int j = i; j < r; ++j) {
      Rational ip = inner_product(t.irr[i], t.irr[j]);
      if (ip != Rational(i == j ? 1 : 0)) throw Error("dixon.LiftFailure", "row orthogonality fails");
    }
  });
  const int e = G.exponent();
  parallel_for(r, [&](int a) {
    for (int b = a; b < r; ++b) {
      CycInt acc(e);
      for (int k = 0; k < r; ++k) acc += t.irr[k].values[a] * t.irr[k].values[b].conj();
      auto v = acc.as_integer();
      long long want = a == b ? static_cast<long long>(G.order() / G.class_size(a)) : 0;
      if (!v || *v != want) throw Error("dixon.LiftFailure", "column orthogonality fails");
    }
  });
}

Decomposition decompose(const ClassFunction& f, const CharacterTable& t, bool allow_virtual) {
  Decomposition d;
  ClassFunction rec = f;
  rec *= 0;
  for (int i = 0; i < t.size(); ++i) {
    Rational ip = inner_product(f, t.irr[i]);
    if (ip.denominator() != 1) throw Error("dixon.NonIntegerMultiplicity", "input is not a character");
    long long m = ip.numerator();
    if (m < 0) {
      if (!allow_virtual) throw Error("dixon.NegativeMultiplicity", "input is a virtual character");
      d.virtual_character = true;
    }
    d.mult.push_back(m);
    if (m != 0) rec += t.irr[i] * m;
  }
  if (!(rec == f)) throw Error("dixon.ReconstructionFailed", "sum of constituents differs from input");
  return d;
}

std::vector<int> support(const std::vector<long long>& mult) {
  std::vector<int> s;
  for (size_t i = 0; i < mult.size(); ++i)
    if (mult[i] != 0) s.push_back(static_cast<int>(i));
  return s;
}

FastDecomposer::FastDecomposer(const CharacterTable& t) : t_(&t), R_(ModRing::make(t.group->exponent())) {
  const auto& G = *t.group;
  inv_order_ = R_.inv(G.order() % R_.P);
  for (int c = 0; c < G.num_classes(); ++c) sizes_.push_back(G.class_size(c) % R_.P);
  for (auto& chi : t.irr) {
    std::vector<uint64_t> v, cv;
    for (auto& x : chi.values) {
      v.push_back(R_.eval(x));
      cv.push_back(R_.eval_conj(x));
    }
    val_.push_back(std::move(v));
    conj_.push_back(std::move(cv));
  }
}

std::vector<uint64_t> FastDecomposer::image(const ClassFunction& f) const {
  std::vector<uint64_t> img;
  for (auto& x : f.values) img.push_back(R_.eval(x.change_order(R_.e)));
  return img;
}

std::vector<long long> FastDecomposer::decompose_images(const std::vector<uint64_t>& img) const {
  const int r = static_cast<int>(val_.size());
  std::vector<long long> m(r);
  for (int k = 0; k < r; ++k) {
    uint64_t acc = 0;
    for (int c = 0; c < r; ++c) acc = (acc + sizes_[c] * img[c] % R_.P * conj_[k][c]) % R_.P;
    m[k] = R_.signed_value(acc * inv_order_ % R_.P);
  }
  // reconstruction in the modular image
  for (int c = 0; c < r; ++c) {
    uint64_t acc = 0;
    for (int k = 0; k < r; ++k) {
      if (m[k] == 0) continue;
      long long mk = m[k] % static_cast<long long>(R_.P);
      if (mk < 0) mk += static_cast<long long>(R_.P);
      acc = (acc + static_cast<uint64_t>(mk) * val_[k][c]) % R_.P;
    }
    if (acc != img[c]) throw Error("dixon.NonIntegerMultiplicity", "modular reconstruction failed");
  }
  return m;
}

std::vector<long long> FastDecomposer::decompose(const ClassFunction& f) const {
  auto m = decompose_images(image(f));
  long long deg = 0;
  for (size_t k = 0; k < m.size(); ++k) deg += m[k] * t_->degrees[k];
  if (deg != f.degree()) throw Error("dixon.ReconstructionFailed", "degree check failed");
  return m;
}

std::vector<long long> FastDecomposer::product(int i, int j) const {
  const int r = static_cast<int>(val_.size());
  std::vector<uint64_t> img(r);
  for (int c = 0; c < r; ++c) img[c] = val_[i][c] * val_[j][c] % R_.P;
  auto m = decompose_images(img);
  long long deg = 0;
  for (int k = 0; k < r; ++k) {
    if (m[k] < 0) throw Error("dixon.NegativeMultiplicity", "tensor product of characters has negative multiplicity");
    deg += m[k] * t_->degrees[k];
  }
  if (deg != t_->degrees[i] * t_->degrees[j]) throw Error("dixon.ReconstructionFailed", "degree check failed");
  return m;
}

}  // namespace ranklab
