#include "knotconc/enclosure.hpp"

namespace kc {

Rational pow2(long e) {
  Rational r;
  if (e >= 0) {
    mpz_class n = 1;
    mpz_mul_2exp(n.get_mpz_t(), n.get_mpz_t(), (unsigned long)e);
    r = n;
  } else {
    mpz_class d = 1;
    mpz_mul_2exp(d.get_mpz_t(), d.get_mpz_t(), (unsigned long)(-e));
    r = Rational(1) / Rational(d);
  }
  return r;
}

namespace {

// Alternating-series bounds for arctan(1/x), x >= 2.
Interval arctan_inv(long x, const Rational& eps) {
  Rational xq(x);
  Rational x2 = xq * xq;
  Rational term = 1 / xq;
  Rational sum = 0;
  int sign = 1;
  long k = 0;
  while (term > eps / 4) {
    sum += sign > 0 ? term : -term;
    sign = -sign;
    term = term / x2 * Rational(2 * k + 1) / Rational(2 * k + 3);
    ++k;
  }
  // Next term bounds the truncation error; the series alternates.
  return sign > 0 ? Interval(sum, sum + term) : Interval(sum - term, sum);
}

}  // namespace

Interval pi_enclosure(const Rational& eps) {
  // Machin: pi = 16 arctan(1/5) - 4 arctan(1/239).
  Interval a = arctan_inv(5, eps / 32);
  Interval b = arctan_inv(239, eps / 8);
  return a.scaled(16) - b.scaled(4);
}

Interval cos_enclosure(const Rational& x, const Rational& eps) {
  Rational x2 = x * x;
  Rational term = 1;
  Rational sum = 0;
  int sign = 1;
  long k = 0;
  // Stop once terms are decreasing and below eps; the tail then alternates.
  while (!(term < eps && x2 < Rational((2 * k + 1) * (2 * k + 2)))) {
    sum += sign > 0 ? term : -term;
    sign = -sign;
    term = term * x2 / Rational((2 * k + 1) * (2 * k + 2));
    ++k;
    if (k > 10000) throw std::runtime_error("cos series did not converge");
  }
  return sign > 0 ? Interval(sum, sum + term) : Interval(sum - term, sum);
}

Interval acos_over_2pi(const Rational& v, const Rational& eps) {
  if (v <= -1 || v >= 1)
    throw std::invalid_argument("acos enclosure requires v in (-1,1)");
  Interval pi = pi_enclosure(eps / 16);
  Rational lo = 0, hi = pi.hi;
  Rational cos_eps = eps / 16;
  // Invariant: cos(lo) > v > cos(hi). cos(0)=1>v and cos(pi.hi)<-1+tiny<v.
  while (hi - lo > eps) {
    Rational mid = (lo + hi) / 2;
    for (;;) {
      Interval c = cos_enclosure(mid, cos_eps);
      if (c.lo > v) {
        lo = mid;
        break;
      }
      if (c.hi < v) {
        hi = mid;
        break;
      }
      // v is irrationally placed relative to cos(mid); tighten and retry.
      cos_eps /= 16;
    }
  }
  // theta in [lo, hi]; divide by 2*pi with outward rounding.
  Rational ulo = lo / (2 * pi.hi);
  Rational uhi = hi / (2 * pi.lo);
  return {ulo, uhi};
}

}  // namespace kc
