#pragma once

#include <vector>

#include "hermiq/gf.hpp"

namespace hermiq {

/// Dense row-major matrix over a small Galois field. Codes here have
/// n <= 729, so nothing sparse is ever needed.
class Matrix {
 public:
  Matrix(FieldPtr field, int rows, int cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {}

  static Matrix identity(FieldPtr field, int n);

  const FieldPtr& field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Elem at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }
  void set(int r, int c, Elem v) {
    field_->check(v);
    a_[static_cast<size_t>(r) * cols_ + c] = v;
  }

  const Elem* row(int r) const { return a_.data() + static_cast<size_t>(r) * cols_; }
  Elem* row(int r) { return a_.data() + static_cast<size_t>(r) * cols_; }

  Matrix transposed() const;

  /// Rows of `other` appended below this matrix.
  Matrix stacked(const Matrix& other) const;

  bool is_zero() const;

  bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

 private:
  FieldPtr field_;
  int rows_;
  int cols_;
  std::vector<Elem> a_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<int> pivot_cols;
  int rank;
};

/// Reduced row echelon form with deterministic pivoting: leftmost nonzero
/// column, first nonzero row swapped up. Canonical across platforms.
RrefResult rref(const Matrix& m);

int rank(const Matrix& m);

/// Basis of { v : M v^T = 0 }, one row per free column of rref(M),
/// cols - rank rows in ascending free-column order.
Matrix nullspace_basis(const Matrix& m);

/// rowspace(a) subseteq rowspace(b), via rank(b) == rank(b stacked a).
bool is_subspace(const Matrix& a, const Matrix& b);

bool same_rowspace(const Matrix& a, const Matrix& b);

/// Euclidean inner products: entry (i,j) = sum_k a[i,k] * b[j,k].
Matrix gram_product(const Matrix& a, const Matrix& b);

}  // namespace hermiq
