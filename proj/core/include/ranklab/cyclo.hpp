#pragma once

#include <boost/rational.hpp>
#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "ranklab/grp.hpp"

namespace ranklab {

using Rational = boost::rational<long long>;

// Reduction data for Z[zeta_e]: Phi_e and x^j mod Phi_e for 0 <= j < e.
struct CycloContext {
  int e = 1;
  int phi = 1;
  std::vector<long long> cyclotomic;        // Phi_e, lowest degree first, monic
  std::vector<std::vector<long long>> red;  // red[j] = x^j mod Phi_e, length phi
};

std::shared_ptr<const CycloContext> cyclo_context(int e);
std::vector<long long> cyclotomic_polynomial(int e);

// Element sum_j c_j zeta_e^j of Z[zeta_e], stored in group-ring form.
// Equality and zero tests reduce modulo Phi_e.
class CycInt {
 public:
  CycInt() : CycInt(1) {}
  explicit CycInt(int e, long long constant = 0);

  int e() const { return ctx_->e; }
  const std::vector<long long>& coeffs() const { return c_; }
  long long& operator[](int j) { return c_[j]; }
  long long operator[](int j) const { return c_[j]; }

  static CycInt root(int e, long long j);

  CycInt& operator+=(const CycInt& o);
  CycInt& operator-=(const CycInt& o);
  CycInt& operator*=(long long k);
  friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
  friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
  friend CycInt operator*(const CycInt& a, const CycInt& b);
  friend CycInt operator*(CycInt a, long long k) { return a *= k; }
  friend bool operator==(const CycInt& a, const CycInt& b);

  // Multiplication by zeta_e^k.
  CycInt rotate(long long k) const;
  // zeta^j -> zeta^{-j}
  CycInt conj() const;
  // Coordinates in the power basis 1, zeta, ..., zeta^{phi-1}.
  std::vector<long long> canonical() const;
  bool is_zero() const;
  std::optional<long long> as_integer() const;
  std::complex<double> to_complex() const;
  // Lowest common order of the roots in the support.
  int support_order() const;
  // Re-express in Z[zeta_f]; requires every nonzero index j to satisfy f*j = 0 mod e
  // when f < e. Embedding into f a multiple of e always succeeds.
  CycInt change_order(int f) const;
  // Exact division by an integer inside Z[zeta_o], o = support_order().
  CycInt divide_exact(long long d) const;
  bool is_nonneg_integer_combination() const;

 private:
  std::shared_ptr<const CycloContext> ctx_;
  std::vector<long long> c_;
};

// Exact class function on the classes of a group.
struct ClassFunction {
  GroupPtr group;
  std::vector<CycInt> values;  // canonical class order

  ClassFunction() = default;
  ClassFunction(GroupPtr g, std::vector<CycInt> v) : group(std::move(g)), values(std::move(v)) {}

  long long degree() const;
  ClassFunction conj() const;
  bool operator==(const ClassFunction& o) const;
  ClassFunction& operator+=(const ClassFunction& o);
  ClassFunction& operator-=(const ClassFunction& o);
  ClassFunction& operator*=(long long k);
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
  friend ClassFunction operator*(ClassFunction a, long long k) { return a *= k; }
};

ClassFunction trivial_character(const GroupPtr& g);
ClassFunction regular_character(const GroupPtr& g);
// Class function with integer value f(rep) at each class.
ClassFunction integer_class_function(const GroupPtr& g, const std::function<long long(const FqMatrix&)>& f);
// Permutation character of the natural action on F_p^n.
ClassFunction vector_permutation_character(const GroupPtr& g);

Rational inner_product(const ClassFunction& f, const ClassFunction& g);
ClassFunction tensor(const ClassFunction& f, const ClassFunction& g);
ClassFunction restrict(const ClassFunction& f, const Subgroup& h);
ClassFunction induce(const ClassFunction& f, const Subgroup& h);
// Move values onto the classes of an equal group enumerated differently.
ClassFunction transport(const ClassFunction& f, const GroupPtr& target);

// Prime P = 1 mod e with a primitive e-th root z, for fast modular evaluation.
struct ModRing {
  int e = 1;
  uint64_t P = 0;
  uint64_t z = 0;
  std::vector<uint64_t> zpow;  // z^j, 0 <= j < e

  static ModRing make(int e, uint64_t min_prime = (1ULL << 30));
  uint64_t eval(const CycInt& x) const;
  uint64_t eval_conj(const CycInt& x) const;
  uint64_t mul(uint64_t a, uint64_t b) const { return a * b % P; }
  uint64_t add(uint64_t a, uint64_t b) const { uint64_t s = a + b; return s >= P ? s - P : s; }
  uint64_t inv(uint64_t a) const;
  uint64_t pow(uint64_t a, uint64_t k) const;
  long long signed_value(uint64_t a) const { return a > P / 2 ? static_cast<long long>(a) - static_cast<long long>(P) : static_cast<long long>(a); }
};

uint64_t mod_pow(uint64_t a, uint64_t k, uint64_t m);
// Smallest generator of (Z/P)^x for prime P.
uint64_t primitive_root_mod(uint64_t P);

}  // namespace ranklab
