#include "knotconc/snf.hpp"

#include <algorithm>
#include <map>

namespace kc {

PolyMatrix PolyMatrix::identity(size_t n) {
  PolyMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = LaurentPoly::one();
  return m;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
  PolyMatrix r(rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (size_t j = 0; j < o.cols_; ++j)
        r.at(i, j) += at(i, k) * o.at(k, j);
    }
  return r;
}

bool PolyMatrix::is_diagonal() const {
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j)
      if (i != j && !at(i, j).is_zero()) return false;
  return true;
}

std::vector<LaurentPoly> PolyMatrix::column(size_t j) const {
  std::vector<LaurentPoly> v(rows_);
  for (size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

std::vector<LaurentPoly> PolyMatrix::apply(
    const std::vector<LaurentPoly>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("vector size mismatch");
  std::vector<LaurentPoly> r(rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
  return r;
}

LaurentPoly poly_det(const PolyMatrix& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("determinant of non-square matrix");
  size_t n = m.rows();
  if (n == 0) return LaurentPoly::one();
  // Column-subset DP: det of rows [n-k, n) on each k-subset of columns.
  std::map<unsigned long, LaurentPoly> cur;
  cur[0] = LaurentPoly::one();
  for (size_t row = 0; row < n; ++row) {
    std::map<unsigned long, LaurentPoly> next;
    for (auto& [mask, val] : cur) {
      if (val.is_zero()) continue;
      int sign = 1;
      for (size_t col = 0; col < n; ++col) {
        unsigned long bit = 1ul << col;
        if (mask & bit) continue;
        if (!m.at(row, col).is_zero()) {
          LaurentPoly add = m.at(row, col) * val;
          next[mask | bit] += sign > 0 ? add : -add;
        }
        sign = -sign;
      }
    }
    cur = std::move(next);
  }
  auto it = cur.find((n >= 64 ? ~0ul : (1ul << n) - 1));
  return it == cur.end() ? LaurentPoly() : it->second;
}

namespace {

// Elementary-operation tracker keeping D = U*A*W, U*Uinv = I, W*Winv = I.
struct SnfWork {
  PolyMatrix D, U, Uinv, W, Winv;

  explicit SnfWork(const PolyMatrix& a)
      : D(a),
        U(PolyMatrix::identity(a.rows())),
        Uinv(PolyMatrix::identity(a.rows())),
        W(PolyMatrix::identity(a.cols())),
        Winv(PolyMatrix::identity(a.cols())) {}

  void row_add(size_t i, size_t j, const LaurentPoly& c) {  // R_i += c*R_j
    for (size_t k = 0; k < D.cols(); ++k) D.at(i, k) += c * D.at(j, k);
    for (size_t k = 0; k < U.cols(); ++k) U.at(i, k) += c * U.at(j, k);
    for (size_t k = 0; k < Uinv.rows(); ++k)
      Uinv.at(k, j) -= c * Uinv.at(k, i);
  }
  void col_add(size_t j, size_t i, const LaurentPoly& c) {  // C_j += c*C_i
    for (size_t k = 0; k < D.rows(); ++k) D.at(k, j) += c * D.at(k, i);
    for (size_t k = 0; k < W.rows(); ++k) W.at(k, j) += c * W.at(k, i);
    for (size_t k = 0; k < Winv.cols(); ++k)
      Winv.at(i, k) -= c * Winv.at(j, k);
  }
  void row_swap(size_t i, size_t j) {
    if (i == j) return;
    for (size_t k = 0; k < D.cols(); ++k) std::swap(D.at(i, k), D.at(j, k));
    for (size_t k = 0; k < U.cols(); ++k) std::swap(U.at(i, k), U.at(j, k));
    for (size_t k = 0; k < Uinv.rows(); ++k)
      std::swap(Uinv.at(k, i), Uinv.at(k, j));
  }
  void col_swap(size_t i, size_t j) {
    if (i == j) return;
    for (size_t k = 0; k < D.rows(); ++k) std::swap(D.at(k, i), D.at(k, j));
    for (size_t k = 0; k < W.rows(); ++k) std::swap(W.at(k, i), W.at(k, j));
    for (size_t k = 0; k < Winv.cols(); ++k)
      std::swap(Winv.at(i, k), Winv.at(j, k));
  }
  void row_scale(size_t i, const LaurentPoly& u) {  // u a unit of Lambda
    LaurentPoly uinv = exact_div(LaurentPoly::one(), u);
    for (size_t k = 0; k < D.cols(); ++k) D.at(i, k) *= u;
    for (size_t k = 0; k < U.cols(); ++k) U.at(i, k) *= u;
    for (size_t k = 0; k < Uinv.rows(); ++k) Uinv.at(k, i) *= uinv;
  }
  void col_scale(size_t j, const LaurentPoly& u) {
    LaurentPoly uinv = exact_div(LaurentPoly::one(), u);
    for (size_t k = 0; k < D.rows(); ++k) D.at(k, j) *= u;
    for (size_t k = 0; k < W.rows(); ++k) W.at(k, j) *= u;
    for (size_t k = 0; k < Winv.cols(); ++k) Winv.at(j, k) *= uinv;
  }

  // Rational content of the working row/column of D; primitive rows keep
  // the Euclidean elimination from swelling exponentially.
  static Rational content(const std::vector<const LaurentPoly*>& ps) {
    mpz_class g = 0, l = 1;
    for (auto* p : ps)
      for (auto& [e, c] : p->terms()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
      }
    if (g == 0) return 1;
    Rational r(g, l);
    r.canonicalize();
    return r;
  }
  void row_normalize(size_t i) {
    std::vector<const LaurentPoly*> ps;
    for (size_t j = 0; j < D.cols(); ++j) ps.push_back(&D.at(i, j));
    Rational c = content(ps);
    if (c != 1) row_scale(i, LaurentPoly(1 / c));
  }
  void col_normalize(size_t j) {
    std::vector<const LaurentPoly*> ps;
    for (size_t i = 0; i < D.rows(); ++i) ps.push_back(&D.at(i, j));
    Rational c = content(ps);
    if (c != 1) col_scale(j, LaurentPoly(1 / c));
  }
  void pivot_monic(size_t k) {
    LaurentPoly p = D.at(k, k);
    LaurentPoly target = normalize_unit(p);
    target = target.scaled(1 / target.leading());
    if (!(p == target)) row_scale(k, exact_div(target, p));
  }

  // Unimodular 2x2 transform [rows i1, i2] <- [[f, h], [u, v]] [rows i1, i2]
  // with f*v - h*u = 1; the inverse [[v, -h], [-u, f]] updates Uinv.
  void row_transform2(size_t i1, size_t i2, const LaurentPoly& f,
                      const LaurentPoly& h, const LaurentPoly& u,
                      const LaurentPoly& v) {
    auto apply_rows = [&](PolyMatrix& mat) {
      for (size_t j = 0; j < mat.cols(); ++j) {
        LaurentPoly a = mat.at(i1, j), b = mat.at(i2, j);
        mat.at(i1, j) = f * a + h * b;
        mat.at(i2, j) = u * a + v * b;
      }
    };
    apply_rows(D);
    apply_rows(U);
    for (size_t r = 0; r < Uinv.rows(); ++r) {
      LaurentPoly a = Uinv.at(r, i1), b = Uinv.at(r, i2);
      Uinv.at(r, i1) = a * v - b * u;
      Uinv.at(r, i2) = -a * h + b * f;
    }
  }
  void col_transform2(size_t j1, size_t j2, const LaurentPoly& f,
                      const LaurentPoly& h, const LaurentPoly& u,
                      const LaurentPoly& v) {
    auto apply_cols = [&](PolyMatrix& mat) {
      for (size_t r = 0; r < mat.rows(); ++r) {
        LaurentPoly a = mat.at(r, j1), b = mat.at(r, j2);
        mat.at(r, j1) = a * f + b * h;
        mat.at(r, j2) = a * u + b * v;
      }
    };
    apply_cols(D);
    apply_cols(W);
    for (size_t c = 0; c < Winv.cols(); ++c) {
      LaurentPoly a = Winv.at(j1, c), b = Winv.at(j2, c);
      Winv.at(j1, c) = v * a - u * b;
      Winv.at(j2, c) = -h * a + f * b;
    }
  }
};

}  // namespace

SnfResult smith_normal_form(const PolyMatrix& a) {
  SnfWork w(a);
  const size_t m = a.rows(), n = a.cols();
  size_t k = 0;
  while (k < m && k < n) {
    // Pivot: nonzero entry of minimal span (degree after unit
    // normalization), ties broken row-major.
    size_t pi = m, pj = n;
    long best = -1;
    for (size_t i = k; i < m; ++i)
      for (size_t j = k; j < n; ++j) {
        const LaurentPoly& e = w.D.at(i, j);
        if (e.is_zero()) continue;
        if (best < 0 || e.span() < best) {
          best = e.span();
          pi = i;
          pj = j;
        }
      }
    if (best < 0) break;  // submatrix is zero
    w.row_swap(k, pi);
    w.col_swap(k, pj);

    bool dirty = true;
    while (dirty) {
      dirty = false;
      w.pivot_monic(k);
      // Clear the pivot column. A single unimodular Bezout transform per
      // entry replaces the remainder chain, so the coefficients stay at
      // gcd-cofactor size instead of swelling along the chain.
      for (size_t i = k + 1; i < m; ++i) {
        const LaurentPoly &a = w.D.at(k, k), &b = w.D.at(i, k);
        if (b.is_zero()) continue;
        if (divides(a, b)) {
          w.row_add(i, k, -exact_div(b, a));
          w.row_normalize(i);
          continue;
        }
        Bezout bez = gcd_bezout(a, b);
        w.row_transform2(k, i, bez.f, bez.h, -exact_div(b, bez.g),
                         exact_div(a, bez.g));
        w.row_normalize(k);
        w.row_normalize(i);
        w.pivot_monic(k);
        dirty = true;  // row k changed; re-examine the pivot row later
      }
      // Clear the pivot row.
      for (size_t j = k + 1; j < n; ++j) {
        const LaurentPoly &a = w.D.at(k, k), &b = w.D.at(k, j);
        if (b.is_zero()) continue;
        if (divides(a, b)) {
          w.col_add(j, k, -exact_div(b, a));
          w.col_normalize(j);
          continue;
        }
        Bezout bez = gcd_bezout(a, b);
        w.col_transform2(k, j, bez.f, bez.h, -exact_div(b, bez.g),
                         exact_div(a, bez.g));
        w.col_normalize(k);
        w.col_normalize(j);
        w.pivot_monic(k);
        dirty = true;  // column k changed; re-clear it
      }
      if (dirty) continue;
      // Enforce divisibility of the remaining block by the pivot.
      for (size_t i = k + 1; i < m && !dirty; ++i)
        for (size_t j = k + 1; j < n && !dirty; ++j)
          if (!divides(w.D.at(k, k), w.D.at(i, j))) {
            w.row_add(k, i, LaurentPoly::one());
            dirty = true;
          }
    }
    // Monic ordinary pivot.
    LaurentPoly p = w.D.at(k, k);
    LaurentPoly target = normalize_unit(p);
    target = target.scaled(1 / target.leading());
    w.row_scale(k, exact_div(target, p));
    ++k;
  }
  SnfResult res{std::move(w.U), std::move(w.Uinv), std::move(w.D),
                std::move(w.W), std::move(w.Winv), k};
  return res;
}

std::vector<LaurentPoly> SnfResult::diagonal() const {
  std::vector<LaurentPoly> d;
  for (size_t i = 0; i < std::min(D.rows(), D.cols()); ++i)
    d.push_back(D.at(i, i));
  return d;
}

std::optional<std::vector<LaurentPoly>> solve_linear(
    const PolyMatrix& a, const std::vector<LaurentPoly>& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("rhs size mismatch");
  SnfResult s = smith_normal_form(a);
  std::vector<LaurentPoly> ub = s.U.apply(b);
  std::vector<LaurentPoly> y(a.cols());
  for (size_t i = 0; i < a.rows(); ++i) {
    if (i < s.rank) {
      if (!divides(s.D.at(i, i), ub[i])) return std::nullopt;
      y[i] = exact_div(ub[i], s.D.at(i, i));
    } else if (!ub[i].is_zero()) {
      return std::nullopt;
    }
  }
  return s.W.apply(y);
}

std::vector<std::vector<LaurentPoly>> kernel_basis(const PolyMatrix& a) {
  SnfResult s = smith_normal_form(a);
  std::vector<std::vector<LaurentPoly>> basis;
  for (size_t j = s.rank; j < a.cols(); ++j) basis.push_back(s.W.column(j));
  return basis;
}

}  // namespace kc
