#pragma once

#include "knotconc/laurent.hpp"

namespace kc {

// Element of Q(t) in canonical form: numerator and denominator coprime, the
// denominator a monic ordinary polynomial with nonzero constant term.
// Equality is structural.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(LaurentPoly::one()) {}
  explicit RationalFunction(const LaurentPoly& p)
      : num_(p), den_(LaurentPoly::one()) {}
  RationalFunction(const LaurentPoly& num, const LaurentPoly& den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_in_lambda() const { return den_ == LaurentPoly::one(); }

  RationalFunction operator-() const;
  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  bool operator==(const RationalFunction& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RationalFunction& o) const { return !(*this == o); }

  RationalFunction involution() const;

  std::string str() const;

 private:
  LaurentPoly num_, den_;
};

// Element of Q(t)/Lambda, the coefficient group of Gamma and the value group
// of the Blanchfield form. The canonical representative is a proper fraction:
// ordinary numerator of degree < degree of the (monic, nonzero constant
// term) denominator; the zero coset is 0/1.
class QtModLambda {
 public:
  QtModLambda() = default;

  const LaurentPoly& num() const { return rep_.num(); }
  const LaurentPoly& den() const { return rep_.den(); }
  const RationalFunction& rep() const { return rep_; }

  bool is_zero() const { return rep_.is_zero(); }

  QtModLambda operator-() const;
  QtModLambda operator+(const QtModLambda& o) const;
  QtModLambda operator-(const QtModLambda& o) const;
  bool operator==(const QtModLambda& o) const { return rep_ == o.rep_; }
  bool operator!=(const QtModLambda& o) const { return !(*this == o); }

  // Module action of Lambda (and of Q(t) scalars more generally).
  QtModLambda scaled(const LaurentPoly& p) const;
  QtModLambda scaled(const RationalFunction& r) const;

  QtModLambda involution() const;

  std::string str() const { return rep_.str(); }

  friend QtModLambda reduce_mod_lambda(const RationalFunction& r);

 private:
  RationalFunction rep_;
};

QtModLambda reduce_mod_lambda(const RationalFunction& r);

}  // namespace kc
