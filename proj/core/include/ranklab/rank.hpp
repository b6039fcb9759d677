#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "ranklab/dixon.hpp"
#include "ranklab/weil.hpp"

namespace ranklab {

// Families the rank notions are defined for. SL_2 is handled as Sp_2.
enum class RankFamily { GL, Sp, Onn };
RankFamily rank_family(const GroupPtr& g);
const char* family_name(RankFamily f);

struct URank {
  int rank = 0;
  bool low = false;
  std::optional<SymFormClass> type;  // Sp only, when a single type occurs at the top rank
};

// The abelian unipotent subgroup and one character per (rank, type) orbit.
struct UProbe {
  RankFamily family = RankFamily::GL;
  Subgroup u;
  int max_rank = 0;
  int low_bound = 0;  // rank < low_bound is low
  struct Rep {
    int rank;
    std::optional<SymFormClass> type;
    FqMatrix t;
    ClassFunction psi;
  };
  std::vector<Rep> reps;
};

UProbe make_u_probe(const GroupPtr& g);
URank u_rank(const ClassFunction& chi, const UProbe& probe);
URank u_rank(const ClassFunction& chi);

// Generating rank-one set, level zero and the stabilization bound of the tensor filtration.
struct TensorSetup {
  std::vector<int> level0;
  std::vector<int> generators;
  int bound = 0;
};
TensorSetup tensor_setup(const CharacterTable& t);

struct TensorRanks {
  std::vector<int> rank;  // -1 if not reached within the bound
  int bound = 0;
  bool reached_all = true;
};
TensorRanks tensor_ranks(const CharacterTable& t);
// Throws rank.NotReached (a TheoremFalsified) when chi is outside the closure.
int tensor_rank(const ClassFunction& chi, const CharacterTable& t);

// GL only: smallest k with <chi|[H_k, H_k], 1> > 0.
std::vector<int> tensor_ranks_intrinsic(const CharacterTable& t);
int tensor_rank_intrinsic(const ClassFunction& chi);

// Witt towers: step 0 is the zero space, step 1 the anisotropic kernel (H for the split
// tower), step k >= 2 the kernel plus (k-1) hyperbolic planes written as diag(1, -1).
std::vector<int> tower_form(const Field& F, TowerTag tower, int step);
TowerTag parse_tower(const std::string& s);
// Restriction to G of the step model: GL_n -> L^2(M_{n,step}); Sp -> tensor of omega_{chi_b}.
ClassFunction tower_character(const GroupPtr& g, TowerTag tower, int step);
std::vector<int> new_spectrum(const CharacterTable& t, TowerTag tower, int step);

// GLGL:n:k:p or SpO:size:p:form=d1,...
struct PairSpec {
  enum Kind { GLGL, SpO } kind = GLGL;
  int n = 1, k = 1, p = 3;
  std::vector<int> form;

  static PairSpec parse(const std::string& s);
  std::string str() const;
  GroupSpec first() const;
  GroupSpec second() const;
};

JointCharacter pair_character(const PairSpec& pair, const GroupPtr& g, const GroupPtr& gp);
// mult[tau][sigma] = multiplicity of sigma (x) tau in the joint character.
std::vector<std::vector<long long>> joint_decomposition(const JointCharacter& j, const CharacterTable& t,
                                                        const CharacterTable& tp);
// Character of the multiplicity space Omega_tau as a class function on G.
ClassFunction omega_tau(const JointCharacter& j, const ClassFunction& tau);

enum class EtaMode { Auto, InRange, NewSpectrum };

struct EtaRow {
  int tau = 0;
  int eta = -1;  // -1 when tau is outside the domain
  long long multiplicity = 0;
  int eta_rank = -1;
  std::vector<long long> omega;  // decomposition of Omega_tau over G
  bool lower_residual = true;    // other constituents of Omega_tau have smaller U-rank
  bool expected_in_domain = true;
};

struct EtaTable {
  PairSpec pair;
  EtaMode mode = EtaMode::InRange;
  int k = 0;
  std::vector<EtaRow> rows;
  bool injective = true;
  bool domain_matches = true;
};

// Throws TheoremFalsified on a failed uniqueness, multiplicity-one, injectivity or domain check.
EtaTable eta_correspondence(const PairSpec& pair, const CharacterTable& t, const CharacterTable& tp,
                            EtaMode mode = EtaMode::Auto);

// One-m witness: some irrep of G_m of U-rank <= k restricts to contain chi.
bool asymptotic_rank_probe(const ClassFunction& chi, const CharacterTable& tm, int k, bool require_low = false);
// Class fusion of GL_n into GL_m through g -> diag(g, I).
Subgroup standard_embedding(const GroupPtr& gn, const GroupPtr& gm);

struct RankRecord {
  int irrep = 0;
  long long degree = 0;
  URank u;
  int tensor_rank = -1;
  int tensor_rank_intrinsic = -1;
  std::vector<std::pair<std::string, std::complex<double>>> cr;
};

// u_rank and tensor ranks for every irrep; throws TheoremFalsified if u_rank > tensor_rank.
std::vector<RankRecord> rank_records(const CharacterTable& t);
// Element labels: identity, transvection, class:<i>.
size_t resolve_element(const GroupPtr& g, const std::string& label);
std::vector<RankRecord> char_ratio_table(const CharacterTable& t, const std::vector<std::string>& elements);
// Sorted by tensor rank then degree.
void sort_records(std::vector<RankRecord>& recs);

struct FiltrationReport {
  std::string notion;
  std::vector<std::vector<int>> levels;  // F^k \ F^{k-1}
  long long pairs_checked = 0;
  long long violations = 0;
};
// notion "tensor" or "U"
FiltrationReport rank_filtration(const CharacterTable& t, const std::vector<RankRecord>& recs, const std::string& notion);

struct AgreementReport {
  int small_checked = 0, small_failures = 0;  // u_rank k < n/4 => tensor rank k
  int half_checked = 0, half_failures = 0;  // u_rank k < floor(n/2) => tensor rank <= 2k
  int in_range = 0, in_range_equal = 0;           // u_rank k <= n/2, reported only
  std::vector<std::string> findings;
};
AgreementReport agreement_report(const CharacterTable& t, const std::vector<RankRecord>& recs);

// Fraction of U-rank-k irreps hit by a set of eta images.
struct ExhaustionReport {
  int rank = 0;
  int total = 0;
  int covered = 0;
  std::vector<int> missing;
};
ExhaustionReport exhaustion_report(const std::vector<RankRecord>& recs, int k, const std::vector<int>& images);

// New spectrum of the step model against the G'-isotypic structure: each new sigma
// must pair with a single tau with multiplicity one, injectively.
struct BijectionReport {
  std::vector<int> new_spectrum;
  std::vector<std::pair<int, int>> matching;  // (sigma, tau)
  bool ok = true;
};
BijectionReport new_spectrum_bijection(const std::vector<std::vector<long long>>& mult, const std::vector<int>& new_set);

}  // namespace ranklab
