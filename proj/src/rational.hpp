#pragma once

#include <gmpxx.h>

#include <string>

namespace chv {

using BigInt = mpz_class;

// gmpxx lacks a long long constructor on some installations.
inline BigInt to_bigint(long long v) { return BigInt(static_cast<long>(v)); }

// Exact arbitrary-precision rational. Stored reduced with a positive
// denominator; zero is 0/1. Backed by GMP, which keeps results of
// arithmetic canonical; constructors canonicalize explicitly.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design
  Rational(const BigInt& n) : v_(n) {}
  Rational(const BigInt& num, const BigInt& den);

  const mpq_class& raw() const { return v_; }

  BigInt numerator() const { return BigInt(v_.get_num()); }
  BigInt denominator() const { return BigInt(v_.get_den()); }
  bool is_integer() const { return v_.get_den() == 1; }
  bool is_zero() const { return v_ == 0; }
  int sign() const { return sgn(v_); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);  // division by zero throws

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  Rational abs() const;
  Rational inverse() const;  // throws on zero

  // "3/4", integers without the denominator ("5", "-2", "0").
  std::string to_string() const;

  // Decimal expansion with the given number of fractional digits, truncated
  // toward zero and suffixed with "..." when inexact. For the labeled
  // approximation column only; exact output always goes through to_string.
  std::string to_decimal(int digits) const;

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

// base^exp with exp any integer; 0^negative throws.
Rational pow(const Rational& base, long exp);

// n^exp as an exact rational (exp may be negative; n must be nonzero then).
Rational int_pow(const BigInt& n, long exp);

}  // namespace chv
