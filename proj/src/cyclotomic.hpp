#pragma once

#include <numeric>
#include <string>

#include "rational.hpp"

namespace chv {

// e^{2*pi*i*k/n} in lowest terms (0 <= k < n, gcd(k, n) = 1 after
// canonicalization; the identity is {0, 1}). Catalog entries only ever carry
// orders 1, 2 and 3; order 6 appears as the closure of mixed products.
struct RootOfUnity {
  int num = 0;
  int ord = 1;

  RootOfUnity() = default;
  RootOfUnity(int k, int n);

  static RootOfUnity one() { return RootOfUnity(); }
  bool is_one() const { return ord == 1; }

  RootOfUnity pow(long e) const;
  friend RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b);
  friend bool operator==(const RootOfUnity& a, const RootOfUnity& b) {
    return a.num == b.num && a.ord == b.ord;
  }
};

// Element a + b*omega of the field generated over the rationals by a
// primitive cube root of unity omega, with omega^2 = -1 - omega.
class Cyclotomic3 {
 public:
  Cyclotomic3() = default;
  Cyclotomic3(Rational a) : a_(std::move(a)) {}  // NOLINT: implicit by design
  Cyclotomic3(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static Cyclotomic3 omega() { return {Rational(0), Rational(1)}; }
  static Cyclotomic3 one() { return {Rational(1)}; }

  const Rational& re1() const { return a_; }    // coefficient of 1
  const Rational& romega() const { return b_; } // coefficient of omega

  bool is_rational() const { return b_.is_zero(); }
  // The rational coefficient, provided the omega part vanishes.
  Rational rational_part() const;

  Cyclotomic3 operator-() const { return {-a_, -b_}; }
  Cyclotomic3& operator+=(const Cyclotomic3& o);
  Cyclotomic3& operator-=(const Cyclotomic3& o);
  Cyclotomic3& operator*=(const Cyclotomic3& o);

  friend Cyclotomic3 operator+(Cyclotomic3 x, const Cyclotomic3& y) { return x += y; }
  friend Cyclotomic3 operator-(Cyclotomic3 x, const Cyclotomic3& y) { return x -= y; }
  friend Cyclotomic3 operator*(Cyclotomic3 x, const Cyclotomic3& y) { return x *= y; }

  Cyclotomic3 inverse() const;  // throws on zero
  friend Cyclotomic3 operator/(const Cyclotomic3& x, const Cyclotomic3& y) {
    return x * y.inverse();
  }

  friend bool operator==(const Cyclotomic3& x, const Cyclotomic3& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const Cyclotomic3& x, const Cyclotomic3& y) { return !(x == y); }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  std::string to_string() const;

 private:
  Rational a_;
  Rational b_;
};

// Exact image of a root of unity of order dividing 6.
Cyclotomic3 embed_root(const RootOfUnity& r);

// base^e by square and multiply, e >= 0.
Cyclotomic3 cyc_pow(Cyclotomic3 base, unsigned long e);

}  // namespace chv
