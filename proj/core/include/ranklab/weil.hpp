#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "ranklab/cyclo.hpp"
#include "ranklab/grp.hpp"

namespace ranklab {

using OperatorMatrix = Eigen::MatrixXcd;

inline constexpr double kOpTol = 1e-9;
inline constexpr double kSnapTol = 1e-6;
inline constexpr int kDimCap = 2048;

// (w, t) with w = (x, y) in F_p^{2N}; law (w,t)(w',t') = (w+w', t+t'+<w,w'>/2).
struct HeisenbergElement {
  std::vector<int> w;
  int t = 0;
};

// <w,w'> = x.y' - y.x'
int symplectic_pairing(const Field& F, const std::vector<int>& w, const std::vector<int>& v);
HeisenbergElement heis_mul(const Field& F, const HeisenbergElement& a, const HeisenbergElement& b);
HeisenbergElement heis_inv(const Field& F, const HeisenbergElement& a);
// Action of a symplectic matrix on H(W): (w, t) -> (g w, t).
HeisenbergElement heis_act(const Field& F, const FqMatrix& g, const HeisenbergElement& h);

// Schroedinger model rho_chi on L^2(Y), Y = F_p^N, chi = chi_0(scale * .).
class SchrodingerModel {
 public:
  SchrodingerModel(int p, int N, int scale = 1);

  int dim() const { return dim_; }
  int N() const { return N_; }
  const Field& field() const { return F_; }
  int scale() const { return scale_; }
  std::vector<int> point(int idx) const;
  int index(const std::vector<int>& y) const;

  // rho(x + y, t) = rho(x) rho(y) chi(t - x.y/2), rho(y)f(v) = f(v - y), rho(x)f(v) = chi(x.v) f(v)
  OperatorMatrix rho(const HeisenbergElement& h) const;

 private:
  Field F_;
  int N_, scale_, dim_;
};

// One Weil generator, stored in structured form.
struct WeilGenerator {
  enum Kind { Diagonal, Monomial, Fourier } kind = Diagonal;
  Eigen::VectorXcd diag;           // Diagonal: (w f)(T) = diag[T] f(T)
  std::vector<int> src;            // Monomial: (w f)(T) = sign * f(src[T])
  std::complex<double> sign = 1.0;
  // Fourier: (w f)(T) = sign * sum_Z prod_j chi_0(scale[j] T_j Z_j) f(Z), one factor per digit
  std::vector<int> scale;
  int p = 0;

  OperatorMatrix matrix(int d) const;
  // M -> M * w
  void right_apply(OperatorMatrix& m) const;
};

// Oscillator representation of Sp_{2n} on L^2(M_{n,k}) = tensor over columns i of
// omega for chi_0(b_i .); k = 1 with b = (1) is the basic Weil representation.
class WeilRep {
 public:
  WeilRep(GroupPtr sp, std::vector<int> column_scales = {1});

  int dim() const { return dim_; }
  int n() const { return n_; }
  int columns() const { return static_cast<int>(scales_.size()); }
  const std::vector<int>& scales() const { return scales_; }
  const GroupPtr& group() const { return sp_; }
  const Field& field() const { return sp_->field(); }
  // Point T in M_{n,k}, entries column-major.
  std::vector<int> point(int idx) const;
  int index(const std::vector<int>& t) const;

  const WeilGenerator& generator(int k) const { return gens_[k]; }
  OperatorMatrix generator_matrix(int k) const { return gens_[k].matrix(dim_); }
  // Product of generator operators along the BFS word.
  OperatorMatrix op(size_t element) const;
  OperatorMatrix op(const FqMatrix& g) const;

  // Fourier normalization c with omega(sigma) = c * sum_z chi(y.z), c = G(-1/2)^{-n}.
  static std::complex<double> sigma_constant(int p, int n, int scale);

 private:
  WeilGenerator make_generator(const FqMatrix& g) const;

  GroupPtr sp_;
  std::vector<int> scales_;
  int n_, dim_;
  std::vector<WeilGenerator> gens_;
};

// Snap complex traces at class representatives to exact values by the
// eigenvalue-multiplicity transform over powers. Throws weil.RoundingFailure.
ClassFunction snap_character(const GroupPtr& g, const std::vector<std::complex<double>>& traces);

// Character of the oscillator representation with central character chi_0(scale .).
// G may be any enumeration of Sp_{2n}(p) (e.g. SL_2); words come from a Weil-generated copy.
ClassFunction weil_character(const GroupPtr& g, int scale = 1);
ClassFunction weil_character(const WeilRep& w);

// Class function on G x G' stored as a matrix over class pairs, values in Z[zeta_L].
struct JointCharacter {
  GroupPtr g1, g2;
  int L = 1;
  std::vector<std::vector<CycInt>> values;  // [class of g1][class of g2]
};

// (GL_n, GL_k) on L^2(M_{n,k}): (g, h) f(T) = f(g^{-1} T h), untwisted.
JointCharacter glgl_character(const GroupPtr& gln, const GroupPtr& glk, int dim_cap = kDimCap);
// (Sp_2n, O_B) with B diagonal: Sp through WeilRep with column scales b_i,
// O_B through f(T) -> f(T h^t).
JointCharacter spo_character(const GroupPtr& sp, const GroupPtr& ob, int dim_cap = kDimCap);
// Permutation matrix source map of O_B acting on M_{n,k}.
std::vector<int> spo_orthogonal_source(const WeilRep& w, const FqMatrix& h);
// Max deviation of [omega(gen), pi(h_gen)] over all generator pairs.
double spo_commutator_defect(const WeilRep& w, const GroupPtr& ob);

// Restriction of a joint character to the first or second factor.
ClassFunction joint_restrict_first(const JointCharacter& j);
ClassFunction joint_restrict_second(const JointCharacter& j);

}  // namespace ranklab
