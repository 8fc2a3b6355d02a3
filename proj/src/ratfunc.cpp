#include "knotconc/ratfunc.hpp"

namespace kc {

RationalFunction::RationalFunction(const LaurentPoly& num,
                                   const LaurentPoly& den) {
  if (den.is_zero())
    throw std::domain_error("rational function with zero denominator");
  if (num.is_zero()) {
    num_ = LaurentPoly();
    den_ = LaurentPoly::one();
    return;
  }
  LaurentPoly g = poly_gcd(num, den);
  LaurentPoly n = exact_div(num, g);
  LaurentPoly d = exact_div(den, g);
  // Push the denominator's unit into the numerator and make it monic.
  LaurentPoly d0 = normalize_unit(d).scaled(1 / normalize_unit(d).leading());
  LaurentPoly u = exact_div(d0, d);
  num_ = u * n;
  den_ = d0;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.is_zero()) throw std::domain_error("division by zero");
  return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::involution() const {
  return RationalFunction(num_.involution(), den_.involution());
}

std::string RationalFunction::str() const {
  if (is_in_lambda()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

QtModLambda reduce_mod_lambda(const RationalFunction& r) {
  QtModLambda out;
  if (r.is_zero() || r.is_in_lambda()) return out;
  LaurentPoly n = reduce_in_quotient(r.num(), r.den());
  // Re-canonicalize: the reduced numerator may share a factor with the
  // denominator; repeat until the proper-fraction shape is stable.
  RationalFunction c(n, r.den());
  while (!c.is_zero() && !c.is_in_lambda() &&
         (!c.num().is_ordinary() || c.num().degree() >= c.den().degree())) {
    c = RationalFunction(reduce_in_quotient(c.num(), c.den()), c.den());
  }
  if (c.is_in_lambda()) return out;  // landed in Lambda: zero coset
  out.rep_ = c;
  return out;
}

QtModLambda QtModLambda::operator-() const {
  return reduce_mod_lambda(-rep_);
}

QtModLambda QtModLambda::operator+(const QtModLambda& o) const {
  return reduce_mod_lambda(rep_ + o.rep_);
}

QtModLambda QtModLambda::operator-(const QtModLambda& o) const {
  return reduce_mod_lambda(rep_ - o.rep_);
}

QtModLambda QtModLambda::scaled(const LaurentPoly& p) const {
  return reduce_mod_lambda(rep_ * RationalFunction(p));
}

QtModLambda QtModLambda::scaled(const RationalFunction& r) const {
  return reduce_mod_lambda(rep_ * r);
}

QtModLambda QtModLambda::involution() const {
  return reduce_mod_lambda(rep_.involution());
}

}  // namespace kc
