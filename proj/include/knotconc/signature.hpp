#pragma once

#include <optional>

#include "knotconc/enclosure.hpp"
#include "knotconc/seifert.hpp"

namespace kc {

// Squarefree part p / gcd(p, p') of an ordinary polynomial, monic.
LaurentPoly squarefree_part(const LaurentPoly& p);

// Number of distinct real roots of the squarefree polynomial p in (a, b).
// Requires p(a) != 0 and p(b) != 0.
int sturm_count(const LaurentPoly& p, const Rational& a, const Rational& b);

// For palindromic Delta of even degree 2d writes Delta = t^d * q(t + t^-1)
// and returns q (degree d in x).
LaurentPoly symmetrize_to_x(const LaurentPoly& delta);

// One jump of the signature function, located at theta = 2*pi*u.
struct JumpInterval {
  Interval u;                       // rigorous enclosure, fraction of circle
  std::optional<Rational> exact_u;  // present when the root is cyclotomic
};

// Piecewise-constant Levine-Tristram signature function on the circle.
struct SignatureFunction {
  std::vector<JumpInterval> jumps;  // ascending in u over (0, 1)
  std::vector<int> arc_values;      // jumps.size() + 1 values
  bool cyclotomic_flag = false;     // all unit-circle roots are roots of unity
};

// Normalized integral of the signature function over the circle (total
// measure 1). Exact when every unit-circle root of Delta is a root of unity;
// always carries a rigorous enclosure of width <= 2^-prec.
struct RhoIntegral {
  std::optional<Rational> exact;
  Rational lo, hi;

  Rational width() const { return hi - lo; }
  bool excludes_zero() const { return lo > 0 || hi < 0; }
};

SignatureFunction signature_function(const SeifertMatrix& v, long prec = 50);
RhoIntegral rho_integral(const SeifertMatrix& v, long prec = 50);
RhoIntegral rho_sum(const RhoIntegral& a, const RhoIntegral& b);

// An exact rational circle point strictly between angle 0 and the first
// jump of the signature function (any point with 0 < angle < pi if there
// are no jumps).
UnitCirclePoint near_one_sample(const SeifertMatrix& v, long prec = 50);

}  // namespace kc
