#pragma once

#include <Eigen/Dense>
#include <vector>

#include "ranklab/weil.hpp"

namespace ranklab {

inline constexpr size_t kLagrangianCap = 100000;

// F_p^{2m} with an alternating nondegenerate Gram matrix.
struct SymplecticSpace {
  int p = 3;
  FqMatrix gram;

  int dim() const { return gram.rows; }
  int half() const { return gram.rows / 2; }
  // W = F_p^{2N}, <(x,y),(x',y')> = x.y' - y.x'
  static SymplecticSpace standard(int p, int N);
  // 2W = W+ (+) W- with <,>_{2W} = <,> - <,>
  static SymplecticSpace doubled(int p, int N);
};

int pairing(const Field& F, const SymplecticSpace& s, const std::vector<int>& u, const std::vector<int>& v);

// Row space of basis, kept in reduced row echelon form so equality is matrix equality.
struct Lagrangian {
  FqMatrix basis;

  friend bool operator==(const Lagrangian&, const Lagrangian&) = default;
  friend auto operator<=>(const Lagrangian& a, const Lagrangian& b) { return a.basis <=> b.basis; }
};

Lagrangian make_lagrangian(const Field& F, const FqMatrix& rows);
bool is_lagrangian(const SymplecticSpace& s, const Lagrangian& l);
// Number of Lagrangians in a 2m-dimensional space: prod_{i<=m} (p^i + 1).
long long lagrangian_count(int m, int p);
// Exhaustive, sorted. Throws oscsemi.CapExceeded above cap.
std::vector<Lagrangian> all_lagrangians(const SymplecticSpace& s, size_t cap = kLagrangianCap);

Lagrangian coordinate_x(const Field& F, int N);
Lagrangian coordinate_y(const Field& F, int N);
// Image under w -> g w.
Lagrangian transform(const Field& F, const Lagrangian& l, const FqMatrix& g);

// q_L supported on p_Y(L) with q_L(y) = chi(B(y,y)/2), B(y,y') = x.y' for (x,y) in L.
Eigen::VectorXcd quantize(const SchrodingerModel& m, const Lagrangian& l);

// Points of W indexed by base-p digits, x coordinates first.
std::vector<int> w_point(int p, int N, long long idx);
// f -> sum_w f(w) rho(w, 0)
OperatorMatrix weyl_transform(const SchrodingerModel& m, const Eigen::VectorXcd& f);
// A -> (w -> tr(A rho(w,0)^*) / d)
Eigen::VectorXcd inverse_weyl_transform(const SchrodingerModel& m, const OperatorMatrix& a);
// Hilbert-Schmidt pairing normalized by 1/dim.
std::complex<double> hs_inner(const OperatorMatrix& a, const OperatorMatrix& b);

Lagrangian graph_lagrangian(const Field& F, const FqMatrix& g);
// {(w, w') : exists w'' with (w, w'') in L and (w'', w') in M}
Lagrangian compose(const Field& F, const Lagrangian& m, const Lagrangian& l);
// The operator A with rho(w') A = A rho(w) for (w, w') in L, normalized to ||A||_F^2 = d.
OperatorMatrix quantize_doubled(const SchrodingerModel& m, const Lagrangian& l);

// min over lambda of ||a - lambda b||_max / ||a||_max; 1 when b vanishes.
double proportionality_residual(const OperatorMatrix& a, const OperatorMatrix& b, std::complex<double>* lambda = nullptr);

struct SemigroupReport {
  long long lagrangians = 0;
  long long pairs = 0;
  long long passed = 0;
  long long alpha_zero = 0;
  double max_residual = 0;
};
// q(M)q(L) = alpha q(M o L) over every pair of Lagrangians of 2W.
SemigroupReport semigroup_check(int p, int N);

// L+ = L cap W+, L- = L cap W-, projections p+(L), p-(L), as subspaces of W.
struct TripleParts {
  FqMatrix lplus, lminus, pplus, pminus;
};
TripleParts triple_parts(const Field& F, int N, const Lagrangian& l);
// dim L+ = dim L- and p+(L) = (L+)^perp, p-(L) = (L-)^perp
bool triple_relations_hold(const Field& F, int N, const Lagrangian& l);

// Orbits of the group generated by gens on W (as matrices acting on column vectors).
std::vector<int> orbit_labels(const Field& F, int N, const std::vector<FqMatrix>& gens, int* count = nullptr);
int commutant_dimension(const Field& F, int N, const std::vector<FqMatrix>& gens);
std::vector<OperatorMatrix> commutant_basis(const SchrodingerModel& m, const std::vector<FqMatrix>& gens);

struct SpanReport {
  long long fixed_lagrangians = 0;
  long long invariant = 0;  // fixed ones whose quantization commutes with omega(gens)
  int rank = 0;
  int commutant_dim = 0;
};
// Span of quantized (g, g)-fixed Lagrangians of 2W; gens must lie in w.group().
SpanReport invariant_semigroup_span(const WeilRep& w, const std::vector<FqMatrix>& gens);

// Number of Sp(W) x Sp(W) orbits on the Lagrangians of 2W.
int sp_sp_orbit_count(int p, int N);

// Numeric rank of a family of operators viewed as vectors.
int operator_span_rank(const std::vector<OperatorMatrix>& ops, double tol = 1e-8);

}  // namespace ranklab
