#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace ranklab {

using cplx = std::complex<double>;

// Element of F_p, kept as a reduced residue.
struct FqElt {
  int value = 0;
  friend bool operator==(FqElt, FqElt) = default;
};

// Arithmetic context for the prime field F_p, p odd.
class Field {
 public:
  explicit Field(int p);

  int p() const { return p_; }
  int reduce(long long x) const {
    long long r = x % p_;
    return static_cast<int>(r < 0 ? r + p_ : r);
  }
  int add(int a, int b) const { int s = a + b; return s >= p_ ? s - p_ : s; }
  int sub(int a, int b) const { int s = a - b; return s < 0 ? s + p_ : s; }
  int neg(int a) const { return a == 0 ? 0 : p_ - a; }
  int mul(int a, int b) const { return static_cast<int>((1LL * a * b) % p_); }
  int inv(int a) const;
  int pow(int a, long long e) const;
  int half() const { return half_; }

  // Euler's criterion; 0 for a = 0.
  int legendre(int a) const;

  // Smallest quadratic non-residue, the canonical nonsquare class.
  int nonsquare() const { return nonsquare_; }
  // Smallest generator of F_p^x.
  int primitive_root() const { return primroot_; }

 private:
  int p_;
  int half_;
  int nonsquare_;
  int primroot_;
  std::vector<int> inv_;
};

bool is_prime(long long n);

inline int legendre(const Field& F, FqElt x) { return F.legendre(x.value); }

// chi_a(t) = exp(2 pi i a t / p). a = 1 is the basic character chi_0;
// a = nonsquare gives the other square class chi_s.
struct AdditiveCharacter {
  int p = 3;
  int scale = 1;

  // Exponent j with chi(t) = zeta_p^j.
  int exponent(int t) const {
    long long r = (1LL * scale * t) % p;
    return static_cast<int>(r < 0 ? r + p : r);
  }
  cplx operator()(int t) const;
};

// Complex p-th root of unity exp(2 pi i j / p), from a cached table.
cplx root_of_unity(int n, long long j);

// Sum over t of chi_a(t^2). Equals legendre(a) times the basic Gauss sum.
cplx gauss_sum(int p, int scale = 1);

}  // namespace ranklab
