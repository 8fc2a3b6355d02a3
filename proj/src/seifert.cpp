#include "knotconc/seifert.hpp"

#include <algorithm>

#include "knotconc/snf.hpp"

namespace kc {

namespace {

// Exact integer determinant via expansion in rationals (matrices are small).
Rational int_det(const std::vector<std::vector<long>>& m) {
  size_t n = m.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  Rational det = 1;
  for (size_t k = 0; k < n; ++k) {
    size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(a[p], a[k]);
      det = -det;
    }
    det *= a[k][k];
    for (size_t i = k + 1; i < n; ++i) {
      Rational f = a[i][k] / a[k][k];
      for (size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return det;
}

}  // namespace

SeifertMatrix::SeifertMatrix(std::vector<std::vector<long>> entries)
    : v_(std::move(entries)) {
  const size_t n = v_.size();
  for (auto& row : v_)
    if (row.size() != n)
      throw std::invalid_argument("Seifert matrix must be square");
  std::vector<std::vector<long>> skew(n, std::vector<long>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) skew[i][j] = v_[i][j] - v_[j][i];
  Rational d = int_det(skew);
  if (d != 1 && d != -1)
    throw std::invalid_argument("det(V - V^T) must be a unit");
}

SeifertMatrix SeifertMatrix::trefoil() {
  return SeifertMatrix({{-1, 1}, {0, -1}});
}

SeifertMatrix SeifertMatrix::figure_eight() {
  return SeifertMatrix({{1, 1}, {0, -1}});
}

SeifertMatrix connected_sum(const SeifertMatrix& a, const SeifertMatrix& b) {
  const size_t n = a.size(), m = b.size();
  std::vector<std::vector<long>> e(n + m, std::vector<long>(n + m, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) e[i][j] = a.at(i, j);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) e[n + i][n + j] = b.at(i, j);
  return SeifertMatrix(std::move(e));
}

PolyMatrix alexander_presentation(const SeifertMatrix& v) {
  const size_t n = v.size();
  PolyMatrix a(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      a.at(i, j) = LaurentPoly::term(v.at(i, j), 1) -
                   LaurentPoly(v.at(j, i));
  return a;
}

LaurentPoly alexander_polynomial(const SeifertMatrix& v) {
  if (v.size() == 0) return LaurentPoly::one();
  return normalize_unit(poly_det(alexander_presentation(v)));
}

int arf_invariant(const SeifertMatrix& v) {
  Rational d = alexander_polynomial(v).eval(-1);
  mpz_class n = abs(d.get_num());
  mpz_class r = n % 8;
  return (r == 1 || r == 7) ? 0 : 1;
}

UnitCirclePoint::UnitCirclePoint(const Rational& a, const Rational& b)
    : re(a), im(b) {
  if (re * re + im * im != 1)
    throw std::invalid_argument("point not on the unit circle");
}

UnitCirclePoint UnitCirclePoint::from_tangent(const Rational& s) {
  Rational d = 1 + s * s;
  return {(1 - s * s) / d, 2 * s / d};
}

int hermitian_signature(std::vector<std::vector<GaussianRational>> h) {
  const size_t n = h.size();
  for (auto& row : h)
    if (row.size() != n) throw std::invalid_argument("non-square matrix");
  int pos = 0, neg = 0;
  for (size_t k = 0; k < n; ++k) {
    // Find a nonzero diagonal entry (Hermitian, so diagonals are real).
    size_t p = n;
    for (size_t i = k; i < n; ++i)
      if (!h[i][i].is_zero()) {
        p = i;
        break;
      }
    if (p == n) {
      // All remaining diagonals vanish; make one nonzero via a congruence
      // e_i += conj(h_ij) e_j, which contributes 2|h_ij|^2 on the diagonal.
      size_t bi = n, bj = n;
      for (size_t i = k; i < n && bi == n; ++i)
        for (size_t j = i + 1; j < n; ++j)
          if (!h[i][j].is_zero()) {
            bi = i;
            bj = j;
            break;
          }
      if (bi == n) break;  // remaining block is zero
      GaussianRational c = h[bi][bj];
      for (size_t t = 0; t < n; ++t) h[bi][t] = h[bi][t] + c * h[bj][t];
      for (size_t t = 0; t < n; ++t)
        h[t][bi] = h[t][bi] + c.conj() * h[t][bj];
      p = bi;
    }
    if (p != k) {
      std::swap(h[p], h[k]);
      for (size_t t = 0; t < n; ++t) std::swap(h[t][p], h[t][k]);
    }
    Rational pivot = h[k][k].re;
    (pivot > 0 ? pos : neg)++;
    // Schur complement H' = H - (col_k * row_k) / pivot on the trailing block.
    std::vector<GaussianRational> rowk = h[k];
    for (size_t i = k + 1; i < n; ++i) {
      GaussianRational f = h[i][k] / pivot;
      if (f.is_zero()) continue;
      for (size_t j = k + 1; j < n; ++j)
        h[i][j] = h[i][j] - f * rowk[j];
    }
    for (size_t i = k + 1; i < n; ++i) {
      h[i][k] = GaussianRational();
      h[k][i] = GaussianRational();
    }
  }
  return pos - neg;
}

int levine_tristram_at(const SeifertMatrix& v, const UnitCirclePoint& omega) {
  const size_t n = v.size();
  if (n == 0 || omega == UnitCirclePoint::one()) return 0;
  GaussianRational a(1 - omega.re, -omega.im);       // 1 - omega
  GaussianRational b(1 - omega.re, omega.im);        // 1 - conj(omega)
  std::vector<std::vector<GaussianRational>> h(
      n, std::vector<GaussianRational>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      h[i][j] = a * GaussianRational(v.at(i, j), 0) +
                b * GaussianRational(v.at(j, i), 0);
  return hermitian_signature(std::move(h));
}

}  // namespace kc
