#pragma once

#include <cstdint>
#include <vector>

#include "ranklab/cyclo.hpp"

namespace ranklab {

struct CharacterTable {
  GroupPtr group;
  std::vector<ClassFunction> irr;  // sorted by (degree, non-trivial, values)
  std::vector<long long> degrees;
  long long ell = 0;  // modular prime used for splitting

  int size() const { return static_cast<int>(irr.size()); }
  const ClassFunction& operator[](int i) const { return irr[i]; }
  // Index of an irreducible equal to chi, or -1.
  int find(const ClassFunction& chi) const;
};

struct DixonOptions {
  uint64_t seed = 0;
  int max_classes = 400;
};

CharacterTable char_table(const GroupPtr& g, const DixonOptions& opt = {});

// Exact row/column orthogonality, sum of squared degrees, degree divisibility.
// Throws dixon.LiftFailure on any violation.
void certify_table(const CharacterTable& t);

struct Decomposition {
  std::vector<long long> mult;
  bool virtual_character = false;  // some multiplicity negative
};

// Exact multiplicities with certified reconstruction.
Decomposition decompose(const ClassFunction& f, const CharacterTable& t, bool allow_virtual = false);
std::vector<int> support(const std::vector<long long>& mult);

// Modular images of a table for bulk decomposition of products of irreducibles.
class FastDecomposer {
 public:
  explicit FastDecomposer(const CharacterTable& t);

  // Multiplicities of chi_i (x) chi_j; degree sum certified exactly.
  std::vector<long long> product(int i, int j) const;
  std::vector<long long> decompose(const ClassFunction& f) const;
  std::vector<long long> decompose_images(const std::vector<uint64_t>& img) const;
  std::vector<uint64_t> image(const ClassFunction& f) const;
  const ModRing& ring() const { return R_; }

 private:
  const CharacterTable* t_;
  ModRing R_;
  uint64_t inv_order_;
  std::vector<uint64_t> sizes_;
  std::vector<std::vector<uint64_t>> val_, conj_;
};

}  // namespace ranklab
