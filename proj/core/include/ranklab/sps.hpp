#pragma once

#include <compare>
#include <string>
#include <vector>

#include "ranklab/dixon.hpp"
#include "ranklab/rank.hpp"

namespace ranklab {

struct Partition {
  std::vector<int> parts;  // weakly decreasing, positive

  Partition() = default;
  explicit Partition(std::vector<int> p);  // sorts descending, drops zeros
  static Partition parse(const std::string& s);  // "2,1"; "" or "0" is empty
  int n() const;
  int d1() const { return parts.empty() ? 0 : parts[0]; }
  int length() const { return static_cast<int>(parts.size()); }
  int row(int i) const { return i < length() ? parts[i] : 0; }
  std::string str() const;
  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;
};

// Reverse lexicographic: [n] first, [1^n] last.
std::vector<Partition> partitions(int n);
// Partial sums of a never exceed those of b. Throws sps.SizeMismatch.
bool dominance_leq(const Partition& a, const Partition& b);
bool dominates_strictly(const Partition& a, const Partition& b);  // a > b

// Ind_{P_D}^{GL_n} 1.
ClassFunction parabolic_induced(const Partition& d, const GroupPtr& g);

struct SpsData {
  GroupPtr group;
  std::vector<Partition> parts;
  std::vector<ClassFunction> induced;
  std::vector<std::vector<long long>> mult;  // decomposition of I_D
  std::vector<int> nu;
  std::vector<bool> nu_max_degree;  // nu_D is the unique top-degree constituent of I_D
  int index(const Partition& d) const;
  int nu_of(const Partition& d) const { return nu[index(d)]; }
};

// Throws TheoremFalsified when some nu_D is not unique or D -> nu_D is not injective.
SpsData sps_data(const CharacterTable& t);
int nu_of(const Partition& d, const CharacterTable& t);

struct SpsRankRow {
  Partition d;
  int nu = -1;
  int expected = 0;  // n - d_1
  int tensor_rank = -1;
};
// Throws TheoremFalsified on a mismatch.
std::vector<SpsRankRow> sps_tensor_rank_check(const SpsData& s, const CharacterTable& t);

// Diagrams D of size n containing dhat with D - dhat a horizontal strip.
std::vector<Partition> pieri_expected(const Partition& dhat, int n);

struct PieriReport {
  Partition dhat;
  int n = 0;
  std::vector<Partition> found, expected;
  bool multiplicity_free = true;
  bool ok = true;
};
// Decomposes Ind_{P_{k,n-k}}(nu_dhat (x) 1). Mismatches are reported, not thrown.
PieriReport pieri_check(const Partition& dhat, const CharacterTable& tk, const SpsData& sk, const CharacterTable& tn,
                        const SpsData& sn);

// Adjoin a part n - k. Throws sps.OutOfDomain when a part of dhat exceeds n - k.
Partition eta_sps(const Partition& dhat, int n);

struct EtaSpsRow {
  Partition dhat;
  Partition image;  // empty when outside the domain
  bool in_domain = true;
  int tau = -1;
  int eta = -1;  // numeric eta(nu_dhat), -1 outside the domain
  bool ok = true;
};
// Compares the rule with the numeric eta correspondence of (GL_n, GL_k) for every dhat of size k.
std::vector<EtaSpsRow> eta_sps_check(int n, const CharacterTable& tn, const SpsData& sn, const CharacterTable& tk,
                                     const SpsData& sk);

struct WhittakerReport {
  Partition d;
  long long in_own = 0;
  long long in_nu = 0;
  std::vector<std::pair<Partition, long long>> in_dominating;
  bool ok = true;
};
// Maximal-rank character of the lower block unipotent: chi_0(sum tr(T_i u_{i+1,i})), T_i = [I; 0].
WhittakerReport whittaker_rank_check(const Partition& d, const CharacterTable& t, const SpsData& s);

// <I_D1, I_D2> over GL_n(F_p).
long long intertwining_number(const SpsData& s, int i, int j);
// |S_a \ S_n / S_b| by enumeration of S_n.
long long sn_double_cosets(const Partition& a, const Partition& b);

struct InductionReport {
  std::string label;
  long long degree = 0;
  long long norm = 0;  // <Ind, Ind>
};
// Ind_{P_{a,n-a}} of (chi_{e1} o det) (x) (chi_{e2} o det), chi_e(g^j) = zeta_{p-1}^{e j}.
InductionReport two_block_induction(const GroupPtr& g, int a, int e1, int e2);

}  // namespace ranklab
