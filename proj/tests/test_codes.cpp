#include <doctest.h>

#include <algorithm>

#include "hermiq/codes.hpp"

using namespace hermiq;

namespace {

// Test-side oracle: plain lexicographic message enumeration with a full
// matrix-vector product per message. Slow but independent of the Gray-order
// incremental search it checks.
WeightSearchResult brute_force_min_weight(const LinearCode& code) {
  const Field& f = *code.gen.field();
  const int Q = f.order(), k = code.k, n = code.n();
  std::vector<Elem> msg(k, 0);
  WeightSearchResult best{n + 1, {}, {}};
  while (true) {
    int i = k - 1;
    while (i >= 0 && msg[i] == Q - 1) msg[i--] = 0;
    if (i < 0) break;
    ++msg[i];
    std::vector<Elem> word(n, 0);
    for (int r = 0; r < k; ++r)
      if (msg[r] != 0)
        for (int c = 0; c < n; ++c) word[c] = f.add(word[c], f.mul(msg[r], code.gen.at(r, c)));
    const int w = static_cast<int>(std::count_if(word.begin(), word.end(), [](Elem v) { return v != 0; }));
    if (w < best.weight) best = {w, word, msg};
  }
  return best;
}

}  // namespace

TEST_CASE("one-point codes") {
  CurvePtr c4 = Curve::make(4);
  LinearCode a = onepoint_code(c4, 44);
  CHECK(a.n() == 64);
  CHECK(a.k == 39);
  CHECK(rank(a.gen) == 39);
  CHECK(onepoint_code(c4, 52).k == 47);

  CurvePtr c2 = Curve::make(2);
  LinearCode rep = onepoint_code(c2, 0);
  CHECK(rep.k == 1);
  for (int c = 0; c < 8; ++c) CHECK(rep.gen.at(0, c) == 1);
  CHECK_THROWS_AS(onepoint_code(c4, 76), PreconditionError);
}

TEST_CASE("improved codes") {
  CurvePtr c4 = Curve::make(4);
  CHECK(improved_code(c4, 5).k == 56);
  CHECK(same_rowspace(improved_code(c4, 10).gen, onepoint_code(c4, 54).gen));

  LinearCode e12 = improved_code(c4, 12);
  LinearCode cl52 = onepoint_code(c4, 52);
  CHECK(e12.k == 48);
  CHECK(is_subspace(cl52.gen, e12.gen));
  CHECK_FALSE(is_subspace(e12.gen, cl52.gen));

  CHECK_THROWS_WITH_AS(improved_code(c4, 7), doctest::Contains("nearest designed"), PreconditionError);
  CHECK_NOTHROW(improved_code(c4, 7, DeltaPolicy::AllowAny));
}

TEST_CASE("improved codes match their basis pole orders") {
  for (int q : {2, 3, 4}) {
    CurvePtr c = Curve::make(q);
    for (int delta : c->designed_distances()) {
      LinearCode e = improved_code(c, delta);
      CHECK(e.k == c->improved_dimension_oracle(delta));
      CHECK(rank(e.gen) == e.k);
      for (int l : e.basis_lambdas) CHECK(c->sigma(l) >= delta);
    }
  }
}

TEST_CASE("dual route builds the same improved code") {
  CurvePtr c2 = Curve::make(2);
  LinearCode a = improved_code(c2, 4);
  LinearCode b = improved_dual_code(c2, 4);
  CHECK(a.k == b.k);
  CHECK(same_rowspace(a.gen, b.gen));

  CurvePtr c4 = Curve::make(4);
  LinearCode e12 = improved_dual_code(c4, 12);
  CHECK(e12.k == 48);
  CHECK(same_rowspace(e12.gen, improved_code(c4, 12).gen));

  LinearCode full = improved_dual_code(c4, 1);
  CHECK(full.k == 64);

  for (int q : {2, 3}) {
    CurvePtr c = Curve::make(q);
    for (int delta : c->designed_distances())
      CHECK(same_rowspace(improved_code(c, delta).gen, improved_dual_code(c, delta).gen));
  }
}

TEST_CASE("dual is an involution with complementary dimension") {
  CurvePtr c4 = Curve::make(4);
  LinearCode full = improved_code(c4, 1);
  CHECK(dual(full).k == 0);

  LinearCode low = onepoint_code(c4, 22);
  LinearCode d = dual(low);
  CHECK(d.k == 64 - low.k);
  CHECK(same_rowspace(d.gen, onepoint_code(c4, 52).gen));
  CHECK(gram_product(low.gen, d.gen).is_zero());
  CHECK(same_rowspace(dual(d).gen, low.gen));
  CHECK(d.label.text() == "dual(onepoint:22)");
}

TEST_CASE("dual containment matches the arithmetic criterion") {
  CHECK(self_orth_condition(4, 20));
  CHECK(self_orth_condition(4, 27));
  CHECK_FALSE(self_orth_condition(4, 28));
  CHECK_FALSE(self_orth_condition(2, 5));

  CurvePtr c4 = Curve::make(4);
  CHECK(is_dual_containing(improved_code(c4, 5)));
  CHECK_FALSE(is_dual_containing(improved_code(c4, 28)));
  CHECK(is_dual_containing(improved_code(c4, 1)));

  for (int q : {2, 3}) {
    CurvePtr c = Curve::make(q);
    for (int delta : c->designed_distances())
      CHECK(is_dual_containing(improved_code(c, delta)) == self_orth_condition(q, delta));
  }
  for (int delta : {5, 12, 20, 27, 28})
    CHECK(is_dual_containing(improved_code(c4, delta, DeltaPolicy::AllowAny)) == self_orth_condition(4, delta));
}

TEST_CASE("containment is monotone in the design parameters") {
  for (int q : {2, 3}) {
    CurvePtr c = Curve::make(q);
    const auto& designed = c->designed_distances();
    for (size_t i = 1; i < designed.size(); ++i)
      CHECK(is_subspace(improved_code(c, designed[i]).gen, improved_code(c, designed[i - 1]).gen));
    for (int m = 0; m + 1 < c->n(); ++m)
      CHECK(is_subspace(onepoint_code(c, m).gen, onepoint_code(c, m + 1).gen));
  }
}

TEST_CASE("exhaustive minimum weights at q=2") {
  CurvePtr c2 = Curve::make(2);
  CHECK(min_weight_exhaustive(improved_code(c2, 4)).weight == 4);
  CHECK(min_weight_exhaustive(improved_code(c2, 8)).weight == 8);
  CHECK(min_weight_exhaustive(improved_code(c2, 1)).weight == 1);
  for (int delta : c2->designed_distances()) {
    auto res = min_weight_exhaustive(improved_code(c2, delta));
    CHECK(res.weight == delta);
    CHECK(static_cast<int>(std::count_if(res.witness.begin(), res.witness.end(),
                                         [](Elem v) { return v != 0; })) == delta);
  }
}

TEST_CASE("gray search agrees with the brute-force oracle, witness included") {
  CurvePtr c2 = Curve::make(2);
  for (int delta : {2, 3, 4, 5}) {
    LinearCode e = improved_code(c2, delta);
    auto fast = min_weight_exhaustive(e);
    auto slow = brute_force_min_weight(e);
    CHECK(fast.weight == slow.weight);
    CHECK(fast.message == slow.message);
    CHECK(fast.witness == slow.witness);
  }
  CurvePtr c3 = Curve::make(3);
  LinearCode small = improved_code(c3, 21, DeltaPolicy::AllowAny);  // tiny dimension
  REQUIRE(small.k <= 4);
  auto fast = min_weight_exhaustive(small);
  auto slow = brute_force_min_weight(small);
  CHECK(fast.weight == slow.weight);
  CHECK(fast.message == slow.message);
}

TEST_CASE("budget is enforced, never silently downgraded") {
  CurvePtr c4 = Curve::make(4);
  CHECK_THROWS_AS(min_weight_exhaustive(improved_code(c4, 5)), BudgetExceeded);  // 16^56 messages
  LinearCode tiny = improved_code(c4, 17, DeltaPolicy::AllowAny);
  CHECK_THROWS_AS(min_weight_exhaustive(tiny, 10), BudgetExceeded);
}

TEST_CASE("relative minimum weight") {
  CurvePtr c2 = Curve::make(2);
  LinearCode e4 = improved_code(c2, 4);
  LinearCode e4d = dual(e4);
  CHECK(relative_min_weight(e4, e4d) == 4);
  CHECK(relative_min_weight(e4, e4d) == min_weight_exhaustive(e4).weight);

  CHECK_THROWS_AS(relative_min_weight(e4, e4), PreconditionError);  // not strict

  LinearCode full = improved_code(c2, 1);
  LinearCode sum_zero = dual(improved_code(c2, 8));
  CHECK(relative_min_weight(full, sum_zero) == 1);
}

TEST_CASE("theoretical distances by label") {
  CurvePtr c4 = Curve::make(4);
  auto d5 = theoretical_distance(improved_code(c4, 5));
  REQUIRE(d5.has_value());
  CHECK(d5->value == 5);
  CHECK(d5->exact);

  auto d52 = theoretical_distance(onepoint_code(c4, 52));
  REQUIRE(d52.has_value());
  CHECK(d52->value == 12);
  CHECK_FALSE(d52->exact);  // strictly inside E(12)

  auto d54 = theoretical_distance(onepoint_code(c4, 54));
  REQUIRE(d54.has_value());
  CHECK(d54->value == 10);
  CHECK(d54->exact);  // coincides with E(10)

  CHECK_FALSE(theoretical_distance(dual(onepoint_code(c4, 52))).has_value());
}

TEST_CASE("lemma-4 correspondence on matrices") {
  for (int q : {2, 3, 4}) {
    CurvePtr c = Curve::make(q);
    for (int delta : c->designed_distances()) {
      if (delta <= q * q - q) continue;
      CHECK(same_rowspace(improved_code(c, delta).gen, onepoint_code(c, c->n() - delta).gen));
    }
    const int delta = q * q - q;
    LinearCode e = improved_code(c, delta, DeltaPolicy::AllowAny);
    LinearCode op = onepoint_code(c, c->n() - delta);
    CHECK(is_subspace(op.gen, e.gen));
    CHECK(e.k == op.k + 1);
    CHECK_FALSE(is_subspace(e.gen, op.gen));
  }
}
