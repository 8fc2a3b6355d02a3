#pragma once

#include <optional>
#include <vector>

#include "knotconc/laurent.hpp"

namespace kc {

// Dense matrix over Lambda, row-major.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(size_t rows, size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static PolyMatrix identity(size_t n);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  LaurentPoly& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const LaurentPoly& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  PolyMatrix operator*(const PolyMatrix& o) const;
  bool operator==(const PolyMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  bool is_diagonal() const;
  std::vector<LaurentPoly> column(size_t j) const;
  std::vector<LaurentPoly> apply(const std::vector<LaurentPoly>& v) const;

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<LaurentPoly> a_;
};

// Exact determinant (cofactor expansion over column subsets).
LaurentPoly poly_det(const PolyMatrix& m);

// U*A*W = D with U, W invertible over Lambda (Uinv, Winv their inverses),
// D diagonal with monic invariant factors in a divisibility chain.
struct SnfResult {
  PolyMatrix U, Uinv, D, W, Winv;
  size_t rank = 0;
  std::vector<LaurentPoly> diagonal() const;
};

SnfResult smith_normal_form(const PolyMatrix& a);

// Solves A*x = b over Lambda if possible.
std::optional<std::vector<LaurentPoly>> solve_linear(
    const PolyMatrix& a, const std::vector<LaurentPoly>& b);

// Basis of { x : A*x = 0 } as a free Lambda-module.
std::vector<std::vector<LaurentPoly>> kernel_basis(const PolyMatrix& a);

}  // namespace kc
