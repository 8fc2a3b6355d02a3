#pragma once

#include <vector>

#include "knotconc/laurent.hpp"

namespace kc {

// Integer Seifert matrix V with det(V - V^T) = +-1.
class SeifertMatrix {
 public:
  SeifertMatrix() = default;
  explicit SeifertMatrix(std::vector<std::vector<long>> entries);

  size_t size() const { return v_.size(); }
  long at(size_t i, size_t j) const { return v_[i][j]; }
  const std::vector<std::vector<long>>& entries() const { return v_; }
  bool operator==(const SeifertMatrix& o) const { return v_ == o.v_; }

  static SeifertMatrix unknot() { return SeifertMatrix(); }
  static SeifertMatrix trefoil();
  static SeifertMatrix figure_eight();

 private:
  std::vector<std::vector<long>> v_;
};

SeifertMatrix connected_sum(const SeifertMatrix& a, const SeifertMatrix& b);

// normalize_unit(det(tV - V^T)); satisfies Delta(1) = +-1.
LaurentPoly alexander_polynomial(const SeifertMatrix& v);

// 0 iff |Delta(-1)| = +-1 mod 8 (Murasugi criterion).
int arf_invariant(const SeifertMatrix& v);

// The presentation matrix tV - V^T over Lambda.
class PolyMatrix;
PolyMatrix alexander_presentation(const SeifertMatrix& v);

// Exact point on the unit circle.
struct UnitCirclePoint {
  Rational re, im;

  UnitCirclePoint(const Rational& a, const Rational& b);
  static UnitCirclePoint one() { return {1, 0}; }
  static UnitCirclePoint minus_one() { return {-1, 0}; }
  // Pythagorean parametrization ((1-s^2)/(1+s^2), 2s/(1+s^2)).
  static UnitCirclePoint from_tangent(const Rational& s);

  UnitCirclePoint conj() const { return {re, -im}; }
  bool operator==(const UnitCirclePoint& o) const {
    return re == o.re && im == o.im;
  }
};

struct GaussianRational {
  Rational re, im;

  GaussianRational() : re(0), im(0) {}
  GaussianRational(const Rational& r, const Rational& i) : re(r), im(i) {}
  bool is_zero() const { return re == 0 && im == 0; }
  GaussianRational conj() const { return {re, -im}; }
  GaussianRational operator+(const GaussianRational& o) const {
    return {re + o.re, im + o.im};
  }
  GaussianRational operator-(const GaussianRational& o) const {
    return {re - o.re, im - o.im};
  }
  GaussianRational operator*(const GaussianRational& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  GaussianRational operator/(const Rational& d) const {
    return {re / d, im / d};
  }
};

// Signature of a Hermitian matrix over Q(i) by exact symmetric elimination
// (Sylvester's law of inertia).
int hermitian_signature(std::vector<std::vector<GaussianRational>> h);

// Levine-Tristram signature at an exact circle point.
int levine_tristram_at(const SeifertMatrix& v, const UnitCirclePoint& omega);

}  // namespace kc
