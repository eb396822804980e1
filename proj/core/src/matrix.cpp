#include "hermiq/matrix.hpp"

#include <algorithm>

namespace hermiq {

Matrix Matrix::identity(FieldPtr field, int n) {
  Matrix m(std::move(field), n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Matrix Matrix::transposed() const {
  Matrix t(field_, cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.a_[static_cast<size_t>(c) * rows_ + r] = at(r, c);
  return t;
}

Matrix Matrix::stacked(const Matrix& other) const {
  if (other.cols_ != cols_ || other.field_.get() != field_.get())
    throw PreconditionError("stack: dimension or field mismatch");
  Matrix s(field_, rows_ + other.rows_, cols_);
  std::copy(a_.begin(), a_.end(), s.a_.begin());
  std::copy(other.a_.begin(), other.a_.end(), s.a_.begin() + a_.size());
  return s;
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](Elem v) { return v == 0; });
}

RrefResult rref(const Matrix& m) {
  const Field& f = *m.field();
  Matrix a = m;
  const int cols = a.cols();
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < a.rows(); ++c) {
    int pr = -1;
    for (int i = r; i < a.rows(); ++i)
      if (a.at(i, c) != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != r) std::swap_ranges(a.row(r), a.row(r) + cols, a.row(pr));
    Elem* prow = a.row(r);
    const Elem piv_inv = f.inv(prow[c]);
    if (piv_inv != 1)
      for (int j = c; j < cols; ++j) prow[j] = f.mul(prow[j], piv_inv);
    for (int i = 0; i < a.rows(); ++i) {
      if (i == r) continue;
      Elem* irow = a.row(i);
      const Elem v = irow[c];
      if (v == 0) continue;
      const Elem nv = f.neg(v);
      for (int j = c; j < cols; ++j) irow[j] = f.add(irow[j], f.mul(nv, prow[j]));
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(pivots), r};
}

int rank(const Matrix& m) { return rref(m).rank; }

Matrix nullspace_basis(const Matrix& m) {
  const Field& f = *m.field();
  RrefResult rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : rr.pivot_cols) is_pivot[c] = true;

  Matrix basis(m.field(), m.cols() - rr.rank, m.cols());
  int out = 0;
  for (int free_c = 0; free_c < m.cols(); ++free_c) {
    if (is_pivot[free_c]) continue;
    basis.set(out, free_c, 1);
    for (int i = 0; i < rr.rank; ++i) {
      const Elem v = rr.reduced.at(i, free_c);
      if (v != 0) basis.set(out, rr.pivot_cols[i], f.neg(v));
    }
    ++out;
  }
  return basis;
}

bool is_subspace(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols() || a.field().get() != b.field().get())
    throw PreconditionError("is_subspace: dimension or field mismatch");
  return rank(b) == rank(b.stacked(a));
}

bool same_rowspace(const Matrix& a, const Matrix& b) { return is_subspace(a, b) && is_subspace(b, a); }

Matrix gram_product(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols() || a.field().get() != b.field().get())
    throw PreconditionError("gram_product: dimension or field mismatch");
  const Field& f = *a.field();
  Matrix g(a.field(), a.rows(), b.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < b.rows(); ++j) {
      Elem s = 0;
      const Elem* ra = a.row(i);
      const Elem* rb = b.row(j);
      for (int k = 0; k < a.cols(); ++k) s = f.add(s, f.mul(ra[k], rb[k]));
      g.set(i, j, s);
    }
  return g;
}

}  // namespace hermiq
