#include "cyclotomic.hpp"

#include "errors.hpp"

namespace chv {

RootOfUnity::RootOfUnity(int k, int n) {
  if (n <= 0) throw BadArgument("root of unity with nonpositive order");
  k %= n;
  if (k < 0) k += n;
  int g = std::gcd(k, n);
  num = k / g;
  ord = n / g;
}

RootOfUnity RootOfUnity::pow(long e) const {
  long k = (static_cast<long>(num) * (e % ord)) % ord;
  return RootOfUnity(static_cast<int>(k), ord);
}

RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b) {
  int l = std::lcm(a.ord, b.ord);
  return RootOfUnity(a.num * (l / a.ord) + b.num * (l / b.ord), l);
}

Rational Cyclotomic3::rational_part() const {
  if (!b_.is_zero()) throw NotRational("omega part is " + b_.to_string());
  return a_;
}

Cyclotomic3& Cyclotomic3::operator+=(const Cyclotomic3& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

Cyclotomic3& Cyclotomic3::operator-=(const Cyclotomic3& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

Cyclotomic3& Cyclotomic3::operator*=(const Cyclotomic3& o) {
  // (a1 + b1 w)(a2 + b2 w) with w^2 = -1 - w.
  Rational a = a_ * o.a_ - b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_ - b_ * o.b_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

Cyclotomic3 Cyclotomic3::inverse() const {
  // Norm (a + bw)(a + bw^2) = a^2 - ab + b^2, conjugate w -> w^2 = -1 - w.
  Rational n = a_ * a_ - a_ * b_ + b_ * b_;
  if (n.is_zero()) throw BadArgument("inverse of zero");
  Cyclotomic3 conj{a_ - b_, -b_};
  Rational ninv = n.inverse();
  return {conj.a_ * ninv, conj.b_ * ninv};
}

std::string Cyclotomic3::to_string() const {
  if (b_.is_zero()) return a_.to_string();
  std::string s = a_.is_zero() ? "" : a_.to_string() + " + ";
  return s + b_.to_string() + "*w";
}

Cyclotomic3 cyc_pow(Cyclotomic3 base, unsigned long e) {
  Cyclotomic3 acc = Cyclotomic3::one();
  while (e > 0) {
    if (e & 1ul) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

Cyclotomic3 embed_root(const RootOfUnity& r) {
  const Rational one(1);
  switch (r.ord) {
    case 1:
      return Cyclotomic3(one);
    case 2:
      return Cyclotomic3(-one);
    case 3:
      // w and w^2 = -1 - w.
      return r.num == 1 ? Cyclotomic3::omega() : Cyclotomic3{-one, -one};
    case 6:
      // e^{i pi/3} = -w^2 = 1 + w, e^{5 i pi/3} = -w.
      return r.num == 1 ? Cyclotomic3{one, one} : Cyclotomic3{Rational(0), -one};
    default:
      throw BadArgument("root of unity of unsupported order " + std::to_string(r.ord));
  }
}

}  // namespace chv
