#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kc {

using Rational = mpq_class;

// Parses "num", "num/den" or "-num/den" into a canonical rational.
Rational parse_rational(const std::string& s);
std::string rational_str(const Rational& r);

// Element of Lambda = Q[t^{+-1}], stored as a sparse exponent -> coefficient
// map with no zero coefficients. The zero polynomial has an empty map.
class LaurentPoly {
 public:
  using TermMap = std::map<long, Rational>;

  LaurentPoly() = default;
  explicit LaurentPoly(const Rational& c) {
    if (c != 0) terms_[0] = c;
  }
  explicit LaurentPoly(long c) : LaurentPoly(Rational(c)) {}

  static LaurentPoly term(const Rational& c, long e);
  static LaurentPoly t(long e = 1) { return term(1, e); }
  static LaurentPoly one() { return LaurentPoly(1); }

  // Builds an ordinary polynomial from coefficients c0 + c1 t + c2 t^2 + ...
  static LaurentPoly from_coeffs(const std::vector<Rational>& coeffs);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Units of Lambda are c * t^k with c a nonzero rational.
  bool is_unit() const { return terms_.size() == 1; }
  bool is_ordinary() const { return is_zero() || low() >= 0; }

  long low() const;     // smallest exponent; requires nonzero
  long high() const;    // largest exponent; requires nonzero
  long degree() const { return high(); }
  long span() const { return high() - low(); }

  Rational coeff(long e) const;
  Rational leading() const;   // coefficient at high()
  Rational trailing() const;  // coefficient at low()

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  LaurentPoly scaled(const Rational& c) const;
  LaurentPoly shifted(long k) const;  // multiply by t^k

  // The ring automorphism p(t) |-> p(t^{-1}).
  LaurentPoly involution() const;

  // Evaluation at a nonzero rational (negative exponents allowed).
  Rational eval(const Rational& x) const;

  // Formal derivative; defined for ordinary polynomials.
  LaurentPoly derivative() const;

  bool is_palindromic() const;  // involution(p) == t^{-span} * p

  std::string str() const;  // human-readable, e.g. "t^2 - t + 1"

 private:
  void set(long e, const Rational& c);
  TermMap terms_;
};

LaurentPoly operator*(const Rational& c, const LaurentPoly& p);

// The unique u = +-t^k with u*p an ordinary polynomial with nonzero constant
// term and positive leading coefficient. Throws on zero input.
LaurentPoly normalize_unit(const LaurentPoly& p);

// Division with remainder for ordinary polynomials in Q[t].
// Returns (q, r) with p = q*d + r and deg r < deg d (r possibly 0).
std::pair<LaurentPoly, LaurentPoly> divmod_ordinary(const LaurentPoly& p,
                                                    const LaurentPoly& d);

// Division with remainder in Lambda: p = q*d + r with r = 0 or
// span(r) < span(d). The remainder need not be ordinary.
std::pair<LaurentPoly, LaurentPoly> divmod_laurent(const LaurentPoly& p,
                                                   const LaurentPoly& d);

bool divides(const LaurentPoly& d, const LaurentPoly& p);
LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& d);

struct Bezout {
  LaurentPoly g;  // monic ordinary polynomial with nonzero constant term
  LaurentPoly f;
  LaurentPoly h;  // f*p + h*q = g
};

// Extended Euclid in Lambda; the gcd is returned monic with nonzero
// constant term so coprimality is exactly "g == 1".
Bezout gcd_bezout(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly poly_gcd(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly poly_lcm(const LaurentPoly& p, const LaurentPoly& q);

// Canonical representative of c in Lambda/(d): the unique ordinary
// polynomial of degree < deg d congruent to c. Requires d ordinary with
// nonzero constant term (so t is invertible in the quotient).
LaurentPoly reduce_in_quotient(const LaurentPoly& c, const LaurentPoly& d);

unsigned euler_phi(unsigned n);
LaurentPoly cyclotomic(unsigned k);  // Phi_k, integer coefficients
bool is_in_T(unsigned k);            // at least three distinct prime divisors

}  // namespace kc
