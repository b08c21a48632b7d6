#include "rational.hpp"

#include "errors.hpp"

namespace chv {

Rational::Rational(const BigInt& num, const BigInt& den) : v_(num, den) {
  if (den == 0) throw BadArgument("rational with zero denominator");
  v_.canonicalize();
}

Rational Rational::operator-() const { return Rational(mpq_class(-v_)); }

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.v_ == 0) throw BadArgument("division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(v_))); }

Rational Rational::inverse() const {
  if (v_ == 0) throw BadArgument("inverse of zero");
  mpq_class r;
  mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
  return Rational(r);
}

std::string Rational::to_string() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::to_decimal(int digits) const {
  if (digits < 0) throw BadArgument("negative digit count");
  mpz_class num = v_.get_num();
  mpz_class den = v_.get_den();
  std::string sign_str = (sgn(num) < 0) ? "-" : "";
  num = ::abs(num);
  mpz_class ip = num / den;
  mpz_class rem = num % den;
  std::string out = sign_str + ip.get_str();
  if (digits == 0) return out + (rem != 0 ? "..." : "");
  out += ".";
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  mpz_class frac = rem * scale / den;
  std::string fs = frac.get_str();
  out += std::string(static_cast<size_t>(digits) - fs.size(), '0') + fs;
  if (rem * scale % den != 0) out += "...";
  return out;
}

Rational pow(const Rational& base, long exp) {
  if (exp == 0) return Rational(1);
  bool invert = exp < 0;
  if (invert && base.is_zero()) throw BadArgument("0 to a negative power");
  unsigned long e = invert ? static_cast<unsigned long>(-(exp + 1)) + 1ul
                           : static_cast<unsigned long>(exp);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.raw().get_num().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.raw().get_den().get_mpz_t(), e);
  Rational r{BigInt(num), BigInt(den)};
  return invert ? r.inverse() : r;
}

Rational int_pow(const BigInt& n, long exp) { return pow(Rational(n), exp); }

}  // namespace chv
