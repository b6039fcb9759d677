#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ranklab/fmat.hpp"
#include "ranklab/gfq.hpp"

namespace ranklab {

enum class Family { GL, SL, Sp, OForm, Custom };

struct GroupSpec {
  Family family = Family::GL;
  int n = 1;  // matrix size (2n for Sp_2n)
  int p = 3;
  std::optional<FqMatrix> form;  // OForm only

  // FAMILY:n:p[:form=d1,d2,...] with FAMILY in {GL, SL, Sp, O}; form=hyp gives [[0,I],[I,0]].
  static GroupSpec parse(const std::string& s);
  std::string str() const;
};

// Which generator list the BFS used. Weil operators need WeilSp words.
enum class GenKind { Generic, WeilSp };

inline constexpr size_t kDefaultCap = 2'000'000;

class FiniteMatrixGroup {
 public:
  // BFS closure from the identity; neighbor of x is x * gen[k], gens in list order.
  static std::shared_ptr<FiniteMatrixGroup> enumerate(int p, int n, std::vector<FqMatrix> gens,
                                                      size_t cap = kDefaultCap);

  const Field& field() const { return F_; }
  int p() const { return F_.p(); }
  int n() const { return n_; }
  size_t order() const { return codes_.size(); }
  const std::vector<FqMatrix>& generators() const { return gens_; }

  GroupSpec spec;
  GenKind gen_kind = GenKind::Generic;

  FqMatrix element(size_t i) const;
  uint64_t code(size_t i) const { return codes_[i]; }
  uint64_t encode(const FqMatrix& m) const;
  std::optional<size_t> index_of(const FqMatrix& m) const;
  std::optional<size_t> index_of_code(uint64_t c) const;
  size_t index_checked(const FqMatrix& m) const;

  size_t mul(size_t i, size_t j) const;
  size_t inverse(size_t i) const { return inv_[i]; }
  size_t identity() const { return 0; }
  // Generator indices along the BFS path, so element(i) = gen[w0] * gen[w1] * ...
  std::vector<int> word(size_t i) const;
  long long parent(size_t i) const { return parent_[i]; }
  int parent_gen(size_t i) const { return pgen_[i]; }

  // Conjugacy classes in canonical order (element order, class size, minimal code).
  int num_classes() const { return static_cast<int>(class_size_.size()); }
  int class_of(size_t i) const { return class_of_[i]; }
  size_t class_size(int c) const { return class_size_[c]; }
  size_t class_rep(int c) const { return class_rep_[c]; }
  int class_order(int c) const { return class_order_[c]; }
  int inverse_class(int c) const { return inverse_class_[c]; }
  // Class of g^s for g in class c, 0 <= s < exponent.
  int power_class(int c, long long s) const;
  const std::vector<int>& power_row(int c) const { return power_[c]; }
  int exponent() const { return exponent_; }
  std::vector<size_t> class_elements(int c) const;

 private:
  FiniteMatrixGroup(int p, int n) : F_(p), n_(n) {}
  void close(size_t cap);
  void compute_classes();
  void mul_raw(const uint8_t* x, const uint8_t* y, uint8_t* out) const;

  Field F_;
  int n_;
  std::vector<FqMatrix> gens_;
  std::vector<uint64_t> codes_;
  std::vector<uint8_t> ent_;
  std::unordered_map<uint64_t, uint32_t> index_;
  std::vector<long long> parent_;
  std::vector<int> pgen_;
  std::vector<uint32_t> inv_;
  std::vector<int> class_of_;
  std::vector<size_t> class_size_;
  std::vector<size_t> class_rep_;
  std::vector<int> class_order_;
  std::vector<int> inverse_class_;
  std::vector<std::vector<int>> power_;
  int exponent_ = 1;
};

using GroupPtr = std::shared_ptr<const FiniteMatrixGroup>;

// A subgroup enumerated in its own right, with the map from its classes to
// the classes of the ambient group.
struct Subgroup {
  GroupPtr parent;
  GroupPtr group;
  std::vector<int> fusion;  // subgroup class -> parent class
};

GroupPtr make_group(const GroupSpec& spec, size_t cap = kDefaultCap);
GroupPtr make_gl(int n, int p);
GroupPtr make_sl(int n, int p);
// Sp_{2m}(p) preserving the form of x.y' - y.x', enumerated over the Weil generator set.
GroupPtr make_sp(int size, int p);
GroupPtr orthogonal_group(int p, const FqMatrix& form, size_t cap = kDefaultCap);

// Weil generator matrices of Sp_{2m}: u(S) = [[I,S],[0,I]], m(A) = diag(A, A^{-t}), sigma = [[0,I],[-I,0]].
FqMatrix sp_u(const Field& F, const FqMatrix& s);
FqMatrix sp_m(const Field& F, const FqMatrix& a);
FqMatrix sp_sigma(const Field& F, int m);
FqMatrix sp_form(const Field& F, int m);
std::vector<FqMatrix> gl_generators(const Field& F, int n);

// Subgroup of the elements satisfying pred; greedy generator discovery, then enumeration.
Subgroup subgroup_where(const GroupPtr& g, const std::function<bool(const FqMatrix&)>& pred);
Subgroup subgroup_of(const GroupPtr& g, const std::vector<size_t>& elements);
// Class fusion for an embedding of a group of smaller matrix size.
std::vector<int> fusion_map(const FiniteMatrixGroup& sub, const FiniteMatrixGroup& parent,
                            const std::function<FqMatrix(const FqMatrix&)>& embed);

// Abelian block group {[[I_a, X],[0, I_b]]} placed at rows pos..pos+a-1, columns pos+a..pos+a+b-1.
Subgroup standard_subgroup(const GroupPtr& g, int a, int b, int pos = 0);
Subgroup siegel_unipotent(const GroupPtr& g);
Subgroup h_subgroup(const GroupPtr& g, int k);
Subgroup derived_subgroup(const Subgroup& h);
Subgroup derived_subgroup(const GroupPtr& g);
// Block upper triangular parabolic with diagonal block sizes parts.
Subgroup parabolic(const GroupPtr& g, const std::vector<int>& parts);
// Lower block unipotent radical opposite to parabolic(parts).
Subgroup lower_unipotent(const GroupPtr& g, const std::vector<int>& parts);
Subgroup whole_group(const GroupPtr& g);

FqMatrix transvection(const GroupSpec& spec);

long long gl_order(int n, int p);
long long sp_order(int m, int p);

}  // namespace ranklab
