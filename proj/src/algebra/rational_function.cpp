#include "cohft/algebra/rational_function.hpp"

#include "cohft/algebra/gcd.hpp"

namespace cohft::algebra {

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void RationalFunction::normalize() {
  if (den_.is_zero()) throw AlgebraError("division by zero");
  if (num_.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  if (!den_.is_constant()) {
    Polynomial g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
  }
  BigRational lead = den_.leading_term().coefficient;
  if (lead != 1) {
    BigRational inv = BigRational(1) / lead;
    num_ *= inv;
    den_ *= inv;
  }
}

RationalFunction RationalFunction::from_coprime(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw AlgebraError("division by zero");
  RationalFunction r;
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  if (r.num_.is_zero()) r.den_ = Polynomial(1);
  BigRational lead = r.den_.leading_term().coefficient;
  if (lead != 1) {
    BigRational inv = BigRational(1) / lead;
    r.num_ *= inv;
    r.den_ *= inv;
  }
  return r;
}

RationalFunction rf_normalize(const Polynomial& num, const Polynomial& den) { return {num, den}; }

BigRational RationalFunction::constant_value() const {
  if (!is_constant()) throw AlgebraError("rational function is not constant");
  return num_.constant_value() / den_.constant_value();
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    normalize();
    return *this;
  }
  if (den_.is_constant() && o.den_.is_constant()) {
    num_ = num_ * o.den_.constant_value() + o.num_ * den_.constant_value();
    den_ = den_ * o.den_;
    normalize();
    return *this;
  }
  Polynomial g = gcd(den_, o.den_);
  Polynomial a = den_ / g;
  Polynomial b = o.den_ / g;
  num_ = num_ * b + o.num_ * a;
  den_ = a * o.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (is_zero() || o.is_zero()) return *this = RationalFunction();
  if (den_.is_constant() && o.den_.is_constant()) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
  }
  // cross-cancel before multiplying
  Polynomial g1 = gcd(num_, o.den_);
  Polynomial g2 = gcd(o.num_, den_);
  Polynomial n = (num_ / g1) * (o.num_ / g2);
  Polynomial d = (den_ / g2) * (o.den_ / g1);
  num_ = std::move(n);
  den_ = std::move(d);
  BigRational lead = den_.leading_term().coefficient;
  if (lead != 1) {
    num_ *= BigRational(1) / lead;
    den_ *= BigRational(1) / lead;
  }
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) { return *this *= o.inverse(); }

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw AlgebraError("division by zero");
  RationalFunction r;
  r.num_ = den_;
  r.den_ = num_;
  BigRational lead = r.den_.leading_term().coefficient;
  if (lead != 1) {
    r.num_ *= BigRational(1) / lead;
    r.den_ *= BigRational(1) / lead;
  }
  return r;
}

RationalFunction RationalFunction::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  RationalFunction r;
  r.num_ = num_.pow(static_cast<unsigned>(exponent));
  r.den_ = den_.pow(static_cast<unsigned>(exponent));
  return r;
}

RationalFunction RationalFunction::derivative(std::size_t var) const {
  if (den_.is_constant()) return {num_.derivative(var) * (BigRational(1) / den_.constant_value())};
  return {num_.derivative(var) * den_ - num_ * den_.derivative(var), den_ * den_};
}

RationalFunction substitute(const Polynomial& p, std::size_t var, const RationalFunction& value) {
  auto coeffs = p.coefficients_in(var);
  if (value.is_polynomial()) {
    Polynomial v = value.numerator() * (BigRational(1) / value.denominator().constant_value());
    return {p.substitute(var, v)};
  }
  // Homogenize: p(n/d) = sum c_k n^k d^(K-k) / d^K.
  std::size_t top = coeffs.size() - 1;
  Polynomial acc;
  Polynomial npow(1);
  std::vector<Polynomial> dpows(top + 1);
  dpows[0] = Polynomial(1);
  for (std::size_t k = 1; k <= top; ++k) dpows[k] = dpows[k - 1] * value.denominator();
  for (std::size_t k = 0; k <= top; ++k) {
    if (!coeffs[k].is_zero()) acc += coeffs[k] * npow * dpows[top - k];
    if (k < top) npow = npow * value.numerator();
  }
  return {acc, dpows[top]};
}

RationalFunction RationalFunction::substitute(std::size_t var, const RationalFunction& value) const {
  return algebra::substitute(num_, var, value) / algebra::substitute(den_, var, value);
}

BigRational RationalFunction::evaluate(std::span<const BigRational> point) const {
  BigRational d = den_.evaluate(point);
  if (d == 0) throw AlgebraError("division by zero");
  return num_.evaluate(point) / d;
}

std::string to_string(const RationalFunction& f, const VariableSet& vars) {
  if (f.is_polynomial()) {
    return to_string(f.numerator() * (BigRational(1) / f.denominator().constant_value()), vars);
  }
  return "(" + to_string(f.numerator(), vars) + ")/(" + to_string(f.denominator(), vars) + ")";
}

}  // namespace cohft::algebra
