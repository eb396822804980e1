#include <doctest.h>

#include <random>

#include "hermiq/codes.hpp"
#include "hermiq/matrix.hpp"

using namespace hermiq;

namespace {

Matrix random_matrix(const FieldPtr& f, int rows, int cols, std::mt19937& rng) {
  Matrix m(f, rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.set(r, c, static_cast<Elem>(rng() % f->order()));
  return m;
}

}  // namespace

TEST_CASE("rref basics") {
  auto f = Field::make(2, 2);
  Matrix id = Matrix::identity(f, 3);
  auto rr = rref(id);
  CHECK(rr.rank == 3);
  CHECK(rr.reduced == id);

  Matrix zero(f, 4, 5);
  CHECK(rank(zero) == 0);
}

TEST_CASE("full evaluation matrix at q=2 has rank 8") {
  CurvePtr c = Curve::make(2);
  Matrix full = evaluation_matrix(*c, c->hstar());
  CHECK(full.rows() == 8);
  CHECK(rank(full) == 8);
}

TEST_CASE("nullspace basics") {
  auto f = Field::make(2, 2);
  CHECK(nullspace_basis(Matrix::identity(f, 5)).rows() == 0);

  Matrix ones(f, 1, 6);
  for (int c = 0; c < 6; ++c) ones.set(0, c, 1);
  Matrix ns = nullspace_basis(ones);
  CHECK(ns.rows() == 5);
  CHECK(gram_product(ns, ones).is_zero());
}

TEST_CASE("dual of C_L(22Q) spans C_L(52Q) at q=4") {
  CurvePtr c = Curve::make(4);
  LinearCode low = onepoint_code(c, 22);
  Matrix ns = nullspace_basis(low.gen);
  CHECK(ns.rows() == 47);
  LinearCode high = onepoint_code(c, 52);
  CHECK(same_rowspace(ns, high.gen));
}

TEST_CASE("is_subspace on the 52Q chain") {
  CurvePtr c = Curve::make(4);
  auto f = c->field();
  Matrix zero_row(f, 1, 64);
  LinearCode e12 = improved_code(c, 12);
  CHECK(is_subspace(zero_row, e12.gen));

  LinearCode cl52 = onepoint_code(c, 52);
  CHECK(is_subspace(cl52.gen, e12.gen));
  CHECK(rank(cl52.gen) == 47);
  CHECK(rank(e12.gen) == 48);

  LinearCode e10 = improved_code(c, 10);
  CHECK(rank(e10.gen) == 49);
  CHECK_FALSE(is_subspace(e10.gen, e12.gen));
}

TEST_CASE("gram products of the classical pairs") {
  CurvePtr c = Curve::make(4);
  Matrix id = Matrix::identity(c->field(), 4);
  CHECK(gram_product(id, id) == id);

  LinearCode e5 = improved_code(c, 5);
  CHECK(gram_product(e5.gen, e5.gen).is_zero());

  LinearCode a = onepoint_code(c, 44);
  LinearCode b = onepoint_code(c, 22);
  CHECK(gram_product(a.gen, b.gen).is_zero());
}

TEST_CASE("mixed-field and mismatched-shape operands are rejected") {
  auto f4 = Field::make(2, 2);
  auto f9 = Field::make(3, 2);
  Matrix a(f4, 2, 3), b(f9, 2, 3), c(f4, 2, 4);
  CHECK_THROWS_AS(gram_product(a, b), PreconditionError);
  CHECK_THROWS_AS(gram_product(a, c), PreconditionError);
  CHECK_THROWS_AS(is_subspace(a, c), PreconditionError);
}

TEST_CASE("rank is transpose-invariant and nullspaces are orthogonal") {
  std::mt19937 rng(7);
  for (auto [p, e] : {std::pair{2, 2}, {3, 2}}) {
    auto f = Field::make(p, e);
    for (int t = 0; t < 20; ++t) {
      Matrix m = random_matrix(f, 3 + static_cast<int>(rng() % 6), 3 + static_cast<int>(rng() % 6), rng);
      CHECK(rank(m) == rank(m.transposed()));
      Matrix ns = nullspace_basis(m);
      CHECK(ns.rows() == m.cols() - rank(m));
      CHECK(gram_product(ns, m).is_zero());
    }
  }
}

TEST_CASE("mutual containment is row-space equality") {
  std::mt19937 rng(11);
  auto f = Field::make(2, 2);
  for (int t = 0; t < 20; ++t) {
    Matrix m = random_matrix(f, 4, 6, rng);
    auto rr = rref(m);
    Matrix reduced(f, rr.rank, 6);
    for (int r = 0; r < rr.rank; ++r)
      for (int c = 0; c < 6; ++c) reduced.set(r, c, rr.reduced.at(r, c));
    CHECK(same_rowspace(m, reduced));
    if (rr.rank > 0) {
      // drop a pivot row: containment only one way
      Matrix smaller(f, rr.rank - 1, 6);
      for (int r = 0; r + 1 < rr.rank; ++r)
        for (int c = 0; c < 6; ++c) smaller.set(r, c, rr.reduced.at(r, c));
      CHECK(is_subspace(smaller, m));
      CHECK_FALSE(is_subspace(m, smaller));
    }
  }
}
