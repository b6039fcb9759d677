#include "ranklab/gfq.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "ranklab/error.hpp"

namespace ranklab {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field::Field(int p) : p_(p) {
  if (p < 3 || !is_prime(p)) throw Error("gfq.BadModulus", "p must be an odd prime");
  inv_.assign(p, 0);
  for (int a = 1; a < p; ++a) inv_[a] = pow(a, p - 2);
  half_ = inv_[2];
  nonsquare_ = 0;
  for (int a = 2; a < p; ++a)
    if (legendre(a) == -1) { nonsquare_ = a; break; }
  primroot_ = 0;
  for (int g = 2; g < p; ++g) {
    int x = g % p, ord = 1;
    int y = x;
    while (y != 1) { y = mul(y, x); ++ord; }
    if (ord == p - 1) { primroot_ = x; break; }
  }
}

int Field::inv(int a) const {
  if (a == 0) throw Error("gfq.DivByZero", "inverse of zero");
  return inv_[a];
}

int Field::pow(int a, long long e) const {
  long long r = 1, b = reduce(a);
  while (e > 0) {
    if (e & 1) r = r * b % p_;
    b = b * b % p_;
    e >>= 1;
  }
  return static_cast<int>(r);
}

int Field::legendre(int a) const {
  a = reduce(a);
  if (a == 0) return 0;
  return pow(a, (p_ - 1) / 2) == 1 ? 1 : -1;
}

cplx root_of_unity(int n, long long j) {
  static std::mutex mu;
  static std::map<int, std::vector<cplx>> tables;
  std::lock_guard<std::mutex> lock(mu);
  auto it = tables.find(n);
  if (it == tables.end()) {
    std::vector<cplx> t(n);
    for (int k = 0; k < n; ++k) {
      double a = 2.0 * std::numbers::pi * k / n;
      t[k] = cplx(std::cos(a), std::sin(a));
    }
    it = tables.emplace(n, std::move(t)).first;
  }
  long long r = j % n;
  if (r < 0) r += n;
  return it->second[static_cast<size_t>(r)];
}

cplx AdditiveCharacter::operator()(int t) const { return root_of_unity(p, exponent(t)); }

cplx gauss_sum(int p, int scale) {
  AdditiveCharacter chi{p, scale};
  cplx s = 0;
  for (int t = 0; t < p; ++t) s += chi(static_cast<int>((1LL * t * t) % p));
  return s;
}

}  // namespace ranklab
