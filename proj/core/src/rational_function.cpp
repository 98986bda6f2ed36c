#include "qaff/rational_function.hpp"

#include <stdexcept>

namespace qaff {

RationalFunction::RationalFunction(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  Polynomial g = gcd(num, den);
  if (g.is_constant()) {
    num_ = num;
    den_ = den;
  } else {
    num_ = num.divide_exact(g);
    den_ = den.divide_exact(g);
  }
  Rational lc = den_.leading().coef;
  if (lc != 1) {
    num_ *= Rational(1 / lc);
    den_ *= Rational(1 / lc);
  }
}

RationalFunction RationalFunction::from_coprime(Polynomial num, Polynomial den) {
  RationalFunction r;
  if (num.is_zero()) return r;
  Rational lc = den.leading().coef;
  if (lc != 1) {
    num *= Rational(1 / lc);
    den *= Rational(1 / lc);
  }
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  return r;
}

RationalFunction RationalFunction::operator-() const { return from_coprime(-num_, den_); }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  if (a.is_polynomial() && b.is_polynomial()) return RationalFunction(a.num_ + b.num_);
  // With g = gcd(b, d), a/b + c/d = (a d' + c b') / (b' d' g) and only g can share a factor with the numerator.
  Polynomial g = gcd(a.den_, b.den_);
  if (g.is_constant()) return RationalFunction::from_coprime(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  Polynomial da = a.den_.divide_exact(g), db = b.den_.divide_exact(g);
  Polynomial num = a.num_ * db + b.num_ * da;
  if (num.is_zero()) return {};
  Polynomial h = gcd(num, g);
  if (!h.is_constant()) {
    num = num.divide_exact(h);
    g = g.divide_exact(h);
  }
  return RationalFunction::from_coprime(std::move(num), da * db * g);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_polynomial() && b.is_polynomial()) return RationalFunction(a.num_ * b.num_);
  // Cross-cancel first so the products stay small.
  Polynomial g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
  Polynomial n1 = g1.is_constant() ? a.num_ : a.num_.divide_exact(g1);
  Polynomial d2 = g1.is_constant() ? b.den_ : b.den_.divide_exact(g1);
  Polynomial n2 = g2.is_constant() ? b.num_ : b.num_.divide_exact(g2);
  Polynomial d1 = g2.is_constant() ? a.den_ : a.den_.divide_exact(g2);
  return RationalFunction::from_coprime(n1 * n2, d1 * d2);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw std::domain_error("division by zero rational function");
  return a * RationalFunction::from_coprime(b.den_, b.num_);
}

RationalFunction RationalFunction::pow(int e) const {
  if (e < 0) {
    if (is_zero()) throw std::domain_error("negative power of zero");
    return from_coprime(den_, num_).pow(-e);
  }
  return from_coprime(num_.pow(unsigned(e)), den_.pow(unsigned(e)));
}

Rational RationalFunction::evaluate(const std::unordered_map<uint32_t, Rational>& point) const {
  Rational d = den_.evaluate(point);
  if (d == 0) throw std::domain_error("denominator vanishes at evaluation point");
  return num_.evaluate(point) / d;
}

std::string RationalFunction::to_string() const {
  if (is_polynomial() && den_.constant_term() == 1) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace qaff
