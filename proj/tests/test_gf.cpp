#include <doctest.h>

#include <vector>

#include "hermiq/gf.hpp"

using namespace hermiq;

namespace {

// Test-side oracle: naive irreducibility over GF(2) by trial division with
// every lower-degree polynomial, on bitmask representations.
bool gf2_poly_irreducible(unsigned f, int deg) {
  for (int d = 1; d <= deg / 2; ++d) {
    for (unsigned g = 1u << d; g < (2u << d); ++g) {
      unsigned r = f;
      int rdeg = deg;
      while (rdeg >= d) {
        if (r & (1u << rdeg)) r ^= g << (rdeg - d);
        --rdeg;
      }
      if (r == 0) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("field_make picks the lexicographically smallest irreducible modulus") {
  auto f2 = Field::make(2, 1);
  CHECK(f2->order() == 2);
  CHECK(f2->modulus() == std::vector<int>{0, 1});  // modulus x

  auto f4 = Field::make(2, 2);
  CHECK(f4->modulus() == std::vector<int>{1, 1, 1});  // x^2 + x + 1

  // GF(32): compare against the independent scan oracle
  auto f32 = Field::make(2, 5);
  unsigned expected = 0;
  for (unsigned t = 0; t < 32; ++t) {
    if (gf2_poly_irreducible(t | 32u, 5)) {
      expected = t | 32u;
      break;
    }
  }
  unsigned got = 0;
  for (int i = 0; i <= 5; ++i) got |= static_cast<unsigned>(f32->modulus()[i]) << i;
  CHECK(got == expected);
  CHECK(f32->modulus() == std::vector<int>{1, 0, 1, 0, 0, 1});  // x^5 + x^2 + 1
}

TEST_CASE("field_make rejects bad parameters") {
  CHECK_THROWS_AS(Field::make(4, 1), PreconditionError);   // not prime
  CHECK_THROWS_AS(Field::make(2, 17), PreconditionError);  // above the 2^16 cap
  CHECK_NOTHROW(Field::make(2, 16));
}

TEST_CASE("GF(4) arithmetic matches polynomial arithmetic mod x^2+x+1") {
  auto f = Field::make(2, 2);
  // alpha = index 2; alpha * alpha = alpha + 1 = index 3
  CHECK(f->mul(2, 2) == 3);
  // exhaustive inverse search oracle
  for (Elem a = 1; a < 4; ++a) {
    Elem found = 0;
    for (Elem b = 1; b < 4; ++b)
      if (f->mul(a, b) == 1) found = b;
    CHECK(f->inv(a) == found);
  }
  CHECK(f->inv(2) == 3);
  CHECK_THROWS_AS(f->inv(0), PreconditionError);
}

TEST_CASE("identity laws hold in sample fields") {
  for (auto [p, e] : {std::pair{2, 1}, {2, 2}, {3, 2}, {5, 2}, {7, 2}, {2, 6}, {3, 4}}) {
    auto f = Field::make(p, e);
    for (int a = 0; a < f->order(); ++a) {
      CHECK(f->mul(static_cast<Elem>(a), 1) == a);
      CHECK(f->add(static_cast<Elem>(a), 0) == a);
      CHECK(f->add(static_cast<Elem>(a), f->neg(static_cast<Elem>(a))) == 0);
    }
  }
}

TEST_CASE("field axioms hold on all pairs for small fields") {
  for (auto [p, e] : {std::pair{2, 2}, {3, 2}, {2, 4}, {7, 1}}) {
    auto f = Field::make(p, e);
    const int N = f->order();
    REQUIRE(N <= 64);
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b) {
        CHECK(f->add(a, b) == f->add(b, a));
        CHECK(f->mul(a, b) == f->mul(b, a));
        for (int c : {0, 1, N - 1, (a + b) % N}) {
          CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
          CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
        }
      }
  }
}

TEST_CASE("pow agrees with repeated multiplication") {
  auto f = Field::make(3, 2);
  for (int a = 0; a < f->order(); ++a) {
    Elem acc = 1;
    for (int n = 0; n <= 12; ++n) {
      CHECK(f->pow(static_cast<Elem>(a), n) == acc);
      acc = f->mul(acc, static_cast<Elem>(a));
    }
  }
  CHECK(f->pow(0, 0) == 1);
  CHECK(f->pow(0, 5) == 0);
}

TEST_CASE("frobenius examples and involution") {
  auto f4 = Field::make(2, 2);
  CHECK(f4->frobenius(0, 2) == 0);
  CHECK(f4->frobenius(2, 2) == f4->pow(2, 2));
  CHECK(f4->frobenius(2, 2) == 3);  // alpha^2 = alpha + 1

  auto f9 = Field::make(3, 2);
  for (int a = 0; a < 9; ++a) CHECK(f9->frobenius(f9->frobenius(a, 3), 3) == a);
  CHECK_THROWS_AS(f9->frobenius(1, 2), PreconditionError);  // 2 is not a power of 3
}

TEST_CASE("frobenius is a field homomorphism") {
  auto f = Field::make(2, 4);  // GF(16), q = 4
  for (int a = 0; a < 16; ++a)
    for (int b = 0; b < 16; ++b) {
      CHECK(f->frobenius(f->add(a, b), 4) == f->add(f->frobenius(a, 4), f->frobenius(b, 4)));
      CHECK(f->frobenius(f->mul(a, b), 4) == f->mul(f->frobenius(a, 4), f->frobenius(b, 4)));
    }
}

TEST_CASE("exp table enumerates every nonzero element once") {
  for (auto [p, e] : {std::pair{2, 3}, {3, 2}, {5, 2}, {2, 8}}) {
    auto f = Field::make(p, e);
    std::vector<bool> seen(f->order(), false);
    Elem x = 1;
    int count = 0;
    do {
      CHECK(!seen[x]);
      seen[x] = true;
      ++count;
      x = f->mul(x, f->generator());
    } while (x != 1);
    CHECK(count == f->order() - 1);
  }
}
