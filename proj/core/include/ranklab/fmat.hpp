#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ranklab/gfq.hpp"

namespace ranklab {

// Dense row-major matrix over F_p. Entries are reduced residues.
struct FqMatrix {
  int rows = 0, cols = 0;
  std::vector<int> a;

  FqMatrix() = default;
  FqMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

  int& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  int operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static FqMatrix identity(int n);
  static FqMatrix diag(const std::vector<int>& d);
  friend bool operator==(const FqMatrix&, const FqMatrix&) = default;
  friend auto operator<=>(const FqMatrix& x, const FqMatrix& y) {
    if (auto c = x.rows <=> y.rows; c != 0) return c;
    if (auto c = x.cols <=> y.cols; c != 0) return c;
    return x.a <=> y.a;
  }
};

FqMatrix mul(const Field& F, const FqMatrix& x, const FqMatrix& y);
FqMatrix add(const Field& F, const FqMatrix& x, const FqMatrix& y);
FqMatrix sub(const Field& F, const FqMatrix& x, const FqMatrix& y);
FqMatrix scale(const Field& F, int c, const FqMatrix& x);
FqMatrix transpose(const FqMatrix& x);
// Kronecker product x (x) y.
FqMatrix kron(const Field& F, const FqMatrix& x, const FqMatrix& y);
FqMatrix block_diag(const FqMatrix& x, const FqMatrix& y);

int mat_rank(const Field& F, FqMatrix m);
int det(const Field& F, FqMatrix m);
FqMatrix inverse(const Field& F, const FqMatrix& m);
// Reduced row echelon form; zero rows are dropped. Pivot columns returned through piv.
FqMatrix rref(const Field& F, FqMatrix m, std::vector<int>* piv = nullptr);
// Basis (as rows) of {v : m v = 0}.
FqMatrix nullspace(const Field& F, const FqMatrix& m);
int trace(const Field& F, const FqMatrix& m);
bool is_symmetric(const FqMatrix& m);
std::string to_string(const FqMatrix& m);

enum class TowerTag { Zero, Split, NonSplitEven, OddPlus, OddMinus };
const char* tower_name(TowerTag t);

// Congruence class of a symmetric form: rank plus discriminant square class.
struct SymFormClass {
  int rank = 0;
  // +1 square, -1 nonsquare; meaningful for rank >= 1.
  int disc = 1;
  TowerTag tower = TowerTag::Zero;

  friend bool operator==(const SymFormClass&, const SymFormClass&) = default;
};

SymFormClass make_form_class(const Field& F, int rank, int disc);

// Congruence diagonalization g^t S g = diag(d_1..d_n). Returns the diagonal.
std::vector<int> congruence_diagonal(const Field& F, FqMatrix s);
SymFormClass classify_sym_form(const Field& F, const FqMatrix& s);
SymFormClass witt_direct_sum(const Field& F, const SymFormClass& c1, const SymFormClass& c2);

// gamma_T(S) = chi_0(tr(T S)).
struct MatrixCharacter {
  FqMatrix t;

  // Exponent j with gamma_T(S) = zeta_p^j.
  int exponent(const Field& F, const FqMatrix& s) const { return trace(F, mul(F, t, s)); }
};

int char_rank(const Field& F, const MatrixCharacter& c);
// Type of a character with symmetric parameter.
SymFormClass char_type(const Field& F, const MatrixCharacter& c);

}  // namespace ranklab
