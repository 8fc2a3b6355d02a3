#pragma once

#include "knotconc/laurent.hpp"

namespace kc {

// Closed rational interval [lo, hi] used for rigorous enclosures.
struct Interval {
  Rational lo, hi;

  Interval() : lo(0), hi(0) {}
  explicit Interval(const Rational& x) : lo(x), hi(x) {}
  Interval(const Rational& a, const Rational& b) : lo(a), hi(b) {
    if (lo > hi) throw std::invalid_argument("inverted interval");
  }

  Rational width() const { return hi - lo; }
  bool is_point() const { return lo == hi; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains_zero() const { return lo <= 0 && 0 <= hi; }

  Interval operator+(const Interval& o) const {
    return {lo + o.lo, hi + o.hi};
  }
  Interval operator-(const Interval& o) const {
    return {lo - o.hi, hi - o.lo};
  }
  Interval scaled(const Rational& c) const {
    return c >= 0 ? Interval{lo * c, hi * c} : Interval{hi * c, lo * c};
  }
};

Rational pow2(long e);  // 2^e for any integer e

Interval pi_enclosure(const Rational& eps);
Interval cos_enclosure(const Rational& x, const Rational& eps);

// Enclosure of arccos(v) / (2*pi) for rational v in (-1, 1).
Interval acos_over_2pi(const Rational& v, const Rational& eps);

}  // namespace kc
