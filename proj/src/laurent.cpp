#include "knotconc/laurent.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace kc {

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rational r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + s);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

std::string rational_str(const Rational& r) { return r.get_str(); }

void LaurentPoly::set(long e, const Rational& c) {
  if (c == 0)
    terms_.erase(e);
  else
    terms_[e] = c;
}

LaurentPoly LaurentPoly::term(const Rational& c, long e) {
  LaurentPoly p;
  p.set(e, c);
  return p;
}

LaurentPoly LaurentPoly::from_coeffs(const std::vector<Rational>& coeffs) {
  LaurentPoly p;
  for (size_t i = 0; i < coeffs.size(); ++i) p.set((long)i, coeffs[i]);
  return p;
}

long LaurentPoly::low() const {
  if (is_zero()) throw std::domain_error("low() of zero polynomial");
  return terms_.begin()->first;
}

long LaurentPoly::high() const {
  if (is_zero()) throw std::domain_error("high() of zero polynomial");
  return terms_.rbegin()->first;
}

Rational LaurentPoly::coeff(long e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational LaurentPoly::leading() const { return terms_.rbegin()->second; }
Rational LaurentPoly::trailing() const { return terms_.begin()->second; }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (auto& [e, c] : o.terms_) r.set(e, r.coeff(e) + c);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (auto& [e, c] : o.terms_) r.set(e, r.coeff(e) - c);
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  std::map<long, Rational> acc;
  for (auto& [e1, c1] : terms_)
    for (auto& [e2, c2] : o.terms_) acc[e1 + e2] += c1 * c2;
  LaurentPoly r;
  for (auto& [e, c] : acc) r.set(e, c);
  return r;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
  LaurentPoly r;
  if (c == 0) return r;
  for (auto& [e, k] : terms_) r.terms_[e] = k * c;
  return r;
}

LaurentPoly LaurentPoly::shifted(long k) const {
  LaurentPoly r;
  for (auto& [e, c] : terms_) r.terms_[e + k] = c;
  return r;
}

LaurentPoly LaurentPoly::involution() const {
  LaurentPoly r;
  for (auto& [e, c] : terms_) r.terms_[-e] = c;
  return r;
}

Rational LaurentPoly::eval(const Rational& x) const {
  if (is_zero()) return 0;
  if (x == 0) {
    if (low() < 0) throw std::domain_error("evaluating t^{<0} at 0");
    return coeff(0);
  }
  // Horner over the ordinary part after shifting by t^{-low}.
  Rational acc = 0;
  long prev = high();
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    for (long k = prev; k > it->first; --k) acc *= x;
    acc += it->second;
    prev = it->first;
  }
  if (low() != 0) {
    Rational p = 1;
    long m = low();
    for (long k = 0; k < (m > 0 ? m : -m); ++k) p *= x;
    if (m > 0)
      acc *= p;
    else
      acc /= p;
  }
  return acc;
}

LaurentPoly LaurentPoly::derivative() const {
  if (!is_ordinary()) throw std::domain_error("derivative of Laurent part");
  LaurentPoly r;
  for (auto& [e, c] : terms_)
    if (e > 0) r.terms_[e - 1] = c * e;
  return r;
}

bool LaurentPoly::is_palindromic() const {
  if (is_zero()) return true;
  return involution() == shifted(-high() - low());
}

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Rational c = it->second;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    Rational a = abs(c);
    long e = it->first;
    if (a != 1 || e == 0) os << a.get_str();
    if (e != 0) {
      if (a != 1) os << "*";
      os << "t";
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

LaurentPoly operator*(const Rational& c, const LaurentPoly& p) {
  return p.scaled(c);
}

LaurentPoly normalize_unit(const LaurentPoly& p) {
  if (p.is_zero())
    throw std::domain_error("zero polynomial has no unit normalization");
  LaurentPoly q = p.shifted(-p.low());
  if (q.leading() < 0) q = -q;
  return q;
}

std::pair<LaurentPoly, LaurentPoly> divmod_ordinary(const LaurentPoly& p,
                                                    const LaurentPoly& d) {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  if (!d.is_ordinary() || (!p.is_zero() && !p.is_ordinary()))
    throw std::domain_error("divmod_ordinary requires ordinary polynomials");
  LaurentPoly q, r = p;
  const long dd = d.degree();
  const Rational dl = d.leading();
  while (!r.is_zero() && r.degree() >= dd) {
    LaurentPoly m = LaurentPoly::term(r.leading() / dl, r.degree() - dd);
    q += m;
    r -= m * d;
  }
  return {q, r};
}

std::pair<LaurentPoly, LaurentPoly> divmod_laurent(const LaurentPoly& p,
                                                   const LaurentPoly& d) {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  if (p.is_zero()) return {LaurentPoly(), LaurentPoly()};
  const long m = p.low();
  LaurentPoly p0 = p.shifted(-m);
  LaurentPoly d0 = normalize_unit(d);
  auto [q0, r0] = divmod_ordinary(p0, d0);
  // d0 = u*d for the normalizing unit u = +-t^{-low(d)}, hence
  // p = (t^m q0 u) d + t^m r0.
  LaurentPoly u =
      LaurentPoly::term(d.leading() < 0 ? -1 : 1, -d.low());
  return {q0.shifted(m) * u, r0.shifted(m)};
}

bool divides(const LaurentPoly& d, const LaurentPoly& p) {
  if (p.is_zero()) return true;
  if (d.is_zero()) return false;
  return divmod_laurent(p, d).second.is_zero();
}

LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& d) {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  if (p.is_zero()) return LaurentPoly();
  if (d.is_unit())
    return p.shifted(-d.low()).scaled(1 / d.trailing());
  auto [q, r] = divmod_laurent(p, d);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

Bezout gcd_bezout(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.is_zero() && q.is_zero())
    throw std::domain_error("gcd of two zero polynomials");
  // Run extended Euclid in Q[t] on the unit-normalized inputs, then
  // translate the coefficients back. Lambda-units do not affect the gcd.
  LaurentPoly up, uq;  // units with p0 = up*p, q0 = uq*q
  LaurentPoly p0, q0;
  if (!p.is_zero()) {
    p0 = normalize_unit(p);
    up = exact_div(p0, p);
  }
  if (!q.is_zero()) {
    q0 = normalize_unit(q);
    uq = exact_div(q0, q);
  }
  // Invariants: r0 = a0*p0 + b0*q0, r1 = a1*p0 + b1*q0. Each remainder is
  // rescaled monic (a unit multiple, tracked in the cofactors) to keep the
  // chain's coefficients from swelling exponentially.
  LaurentPoly r0 = p0, r1 = q0;
  LaurentPoly a0 = LaurentPoly::one(), b0, a1, b1 = LaurentPoly::one();
  while (!r1.is_zero()) {
    auto [quo, rem] = divmod_ordinary(r0, r1);
    LaurentPoly a2 = a0 - quo * a1;
    LaurentPoly b2 = b0 - quo * b1;
    if (!rem.is_zero()) {
      mpz_class gn = 0, ld = 1;
      for (auto& [e, c] : rem.terms()) {
        mpz_gcd(gn.get_mpz_t(), gn.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(ld.get_mpz_t(), ld.get_mpz_t(), c.get_den().get_mpz_t());
      }
      Rational content(gn, ld);
      content.canonicalize();
      if (rem.leading() < 0) content = -content;
      rem = rem.scaled(1 / content);
      a2 = a2.scaled(1 / content);
      b2 = b2.scaled(1 / content);
    }
    r0 = r1;
    a0 = a1;
    b0 = b1;
    r1 = rem;
    a1 = a2;
    b1 = b2;
  }
  // Make the gcd monic with nonzero constant term.
  LaurentPoly g = normalize_unit(r0);
  LaurentPoly u = exact_div(g, r0).scaled(1 / g.leading());
  g = g.scaled(1 / g.leading());
  Bezout out;
  out.g = g;
  out.f = p.is_zero() ? LaurentPoly() : u * a0 * up;
  out.h = q.is_zero() ? LaurentPoly() : u * b0 * uq;
  return out;
}

LaurentPoly poly_gcd(const LaurentPoly& p, const LaurentPoly& q) {
  return gcd_bezout(p, q).g;
}

LaurentPoly poly_lcm(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.is_zero() || q.is_zero()) return LaurentPoly();
  LaurentPoly g = poly_gcd(p, q);
  LaurentPoly l = exact_div(p * q, g);
  LaurentPoly n = normalize_unit(l);
  return n.scaled(1 / n.leading());
}

LaurentPoly reduce_in_quotient(const LaurentPoly& c, const LaurentPoly& d) {
  if (d.is_zero()) throw std::domain_error("quotient by zero polynomial");
  if (!d.is_ordinary() || d.coeff(0) == 0)
    throw std::domain_error(
        "quotient modulus must be ordinary with nonzero constant term");
  if (c.is_zero()) return c;
  if (d.span() == 0) return LaurentPoly();  // modulus is a unit
  long m = c.low();
  LaurentPoly r = divmod_ordinary(c.shifted(std::max(0L, -m)), d).second;
  if (m < 0) {
    // t is invertible mod d: writing d = a0 + t*e gives t*(-e/a0) = 1 mod d.
    Rational a0 = d.coeff(0);
    LaurentPoly tinv = (d - LaurentPoly(a0)).shifted(-1).scaled(-1 / a0);
    for (long k = 0; k < -m; ++k)
      r = divmod_ordinary(r * tinv, d).second;
  }
  return r;
}

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      result -= result / p;
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

LaurentPoly cyclotomic(unsigned k) {
  if (k == 0) throw std::invalid_argument("cyclotomic index must be >= 1");
  static std::map<unsigned, LaurentPoly> cache;
  auto it = cache.find(k);
  if (it != cache.end()) return it->second;
  // Phi_k = (t^k - 1) / prod_{d | k, d < k} Phi_d
  LaurentPoly num = LaurentPoly::t(k) - LaurentPoly::one();
  for (unsigned d = 1; d < k; ++d)
    if (k % d == 0) num = exact_div(num, cyclotomic(d));
  cache[k] = num;
  return num;
}

bool is_in_T(unsigned k) {
  if (k == 0) throw std::invalid_argument("is_in_T requires k >= 1");
  int distinct = 0;
  unsigned n = k;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ++distinct;
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ++distinct;
  return distinct >= 3;
}

}  // namespace kc
