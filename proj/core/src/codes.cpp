#include "hermiq/codes.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace hermiq {

CodeLabel CodeLabel::onepoint(int m) { return {LabelKind::OnePoint, m, nullptr, {}}; }
CodeLabel CodeLabel::improved(int delta) { return {LabelKind::Improved, delta, nullptr, {}}; }
CodeLabel CodeLabel::dual_of(const CodeLabel& inner) {
  return {LabelKind::DualOf, -1, std::make_shared<CodeLabel>(inner), {}};
}
CodeLabel CodeLabel::adhoc(std::string note) { return {LabelKind::AdHoc, -1, nullptr, std::move(note)}; }

std::string CodeLabel::text() const {
  switch (kind) {
    case LabelKind::OnePoint:
      return "onepoint:" + std::to_string(param);
    case LabelKind::Improved:
      return "improved:" + std::to_string(param);
    case LabelKind::DualOf:
      return "dual(" + inner->text() + ")";
    case LabelKind::AdHoc:
      return note;
  }
  return "adhoc";
}

Matrix evaluation_matrix(const Curve& curve, const std::vector<int>& lambdas) {
  const Field& f = *curve.field();
  Matrix m(curve.field(), static_cast<int>(lambdas.size()), curve.n());
  for (size_t r = 0; r < lambdas.size(); ++r) {
    const SemigroupElement& e = curve.element(lambdas[r]);
    for (int c = 0; c < curve.n(); ++c) {
      const AffinePoint& pt = curve.points()[c];
      m.set(static_cast<int>(r), c, f.mul(f.pow(pt.x, e.i), f.pow(pt.y, e.j)));
    }
  }
  return m;
}

LinearCode onepoint_code(CurvePtr curve, int m) {
  if (m < 0 || m > curve->max_pole_order())
    throw PreconditionError("one-point degree m out of range [0, " + std::to_string(curve->max_pole_order()) + "]");
  std::vector<int> lambdas;
  for (const auto& e : curve->semigroup()) {
    if (e.lambda > m) break;
    lambdas.push_back(e.lambda);
  }
  Matrix gen = evaluation_matrix(*curve, lambdas);
  const int k = static_cast<int>(lambdas.size());
  return {std::move(curve), std::move(gen), k, CodeLabel::onepoint(m), std::move(lambdas)};
}

namespace {

void require_designed(const Curve& curve, int delta) {
  if (curve.is_designed(delta)) return;
  const auto& d = curve.designed_distances();
  std::string msg = "delta " + std::to_string(delta) + " is not a designed distance for q=" +
                    std::to_string(curve.q()) + " (nearest designed:";
  auto it = std::lower_bound(d.begin(), d.end(), delta);
  if (it != d.begin()) msg += " " + std::to_string(*std::prev(it));
  if (it != d.end()) msg += " " + std::to_string(*it);
  msg += ")";
  throw PreconditionError(msg);
}

}  // namespace

LinearCode improved_code(CurvePtr curve, int delta, DeltaPolicy policy) {
  if (delta < 1 || delta > curve->n()) throw PreconditionError("delta out of range [1, q^3]");
  if (policy == DeltaPolicy::RequireDesigned) require_designed(*curve, delta);
  std::vector<int> lambdas;
  for (const auto& e : curve->semigroup())
    if (e.sigma >= delta) lambdas.push_back(e.lambda);
  Matrix gen = evaluation_matrix(*curve, lambdas);
  const int k = static_cast<int>(lambdas.size());
  return {std::move(curve), std::move(gen), k, CodeLabel::improved(delta), std::move(lambdas)};
}

LinearCode improved_dual_code(CurvePtr curve, int delta, DeltaPolicy policy) {
  if (delta < 1 || delta > curve->n()) throw PreconditionError("delta out of range [1, q^3]");
  if (policy == DeltaPolicy::RequireDesigned) require_designed(*curve, delta);
  std::vector<int> selected;
  for (const auto& e : curve->semigroup())
    if (e.mu < delta) selected.push_back(e.lambda);
  Matrix parity = evaluation_matrix(*curve, selected);
  Matrix gen = nullspace_basis(parity);
  const int k = gen.rows();
  return {std::move(curve), std::move(gen), k, CodeLabel::adhoc("improved-dual:" + std::to_string(delta)), {}};
}

LinearCode dual(const LinearCode& code) {
  Matrix gen = nullspace_basis(code.gen);
  const int k = gen.rows();
  return {code.curve, std::move(gen), k, CodeLabel::dual_of(code.label), {}};
}

bool is_dual_containing(const LinearCode& code) {
  LinearCode d = dual(code);
  return is_subspace(d.gen, code.gen);
}

bool self_orth_condition(int q, int delta) {
  if (delta < 1) throw PreconditionError("delta must be >= 1");
  const int q3 = q * q * q;
  return delta <= (q3 - q * q + q) / 2 + 1;
}

namespace {

// Enumerates every message with digit 0 pinned to `first`, the remaining
// digits in reflected mixed-radix Gray order, so consecutive codewords
// differ by one scaled generator row. visit(weight, msg, word) is called
// for each message, the pinned-zero message included.
template <typename Visit>
void scan_partition(const LinearCode& code, Elem first, Visit&& visit) {
  const Field& f = *code.gen.field();
  const int Q = f.order();
  const int k = code.k;
  const int n = code.gen.cols();

  std::vector<Elem> msg(k, 0);
  std::vector<Elem> word(n, 0);
  msg[0] = first;
  int weight = 0;
  if (first != 0) {
    const Elem* row0 = code.gen.row(0);
    for (int c = 0; c < n; ++c) {
      word[c] = f.mul(first, row0[c]);
      weight += word[c] != 0;
    }
  }
  visit(weight, msg, word);
  if (k == 1) return;

  const int t = k - 1;  // free digits 1..k-1
  std::vector<int> focus(t + 1);
  std::iota(focus.begin(), focus.end(), 0);
  std::vector<int> dir(t, +1);
  while (true) {
    const int j = focus[0];
    focus[0] = 0;
    if (j == t) break;
    const int digit = j + 1;
    const Elem old = msg[digit];
    const Elem next = static_cast<Elem>(old + dir[j]);
    msg[digit] = next;
    if (next == 0 || next == Q - 1) {
      dir[j] = -dir[j];
      focus[j] = focus[j + 1];
      focus[j + 1] = j + 1;
    }
    const Elem delta = f.sub(next, old);
    const Elem* row = code.gen.row(digit);
    for (int c = 0; c < n; ++c) {
      const Elem before = word[c];
      const Elem after = f.add(before, f.mul(delta, row[c]));
      word[c] = after;
      weight += (after != 0) - (before != 0);
    }
    visit(weight, msg, word);
  }
}

void check_budget(const LinearCode& code, std::uint64_t budget) {
  const std::uint64_t Q = code.gen.field()->order();
  std::uint64_t total = 1;
  for (int i = 0; i < code.k; ++i) {
    if (total > budget / Q)
      throw BudgetExceeded("message space (q^2)^" + std::to_string(code.k) + " exceeds search budget " +
                           std::to_string(budget));
    total *= Q;
  }
}

}  // namespace

WeightSearchResult min_weight_exhaustive(const LinearCode& code, std::uint64_t budget) {
  if (code.k < 1) throw PreconditionError("minimum weight of the zero code is undefined");
  check_budget(code, budget);
  const int Q = code.gen.field()->order();

  WeightSearchResult best;
  best.weight = std::numeric_limits<int>::max();
  for (int v = 0; v < Q; ++v) {
    scan_partition(code, static_cast<Elem>(v),
                   [&](int w, const std::vector<Elem>& msg, const std::vector<Elem>& word) {
                     if (w == 0) return;  // the zero message
                     if (w < best.weight ||
                         (w == best.weight && std::lexicographical_compare(msg.begin(), msg.end(),
                                                                           best.message.begin(),
                                                                           best.message.end()))) {
                       best.weight = w;
                       best.message = msg;
                       best.witness = word;
                     }
                   });
  }
  return best;
}

int relative_min_weight(const LinearCode& c1, const LinearCode& c2, std::uint64_t budget) {
  if (c1.n() != c2.n() || c1.gen.field().get() != c2.gen.field().get())
    throw PreconditionError("relative_min_weight: mismatched codes");
  RrefResult inner = rref(c2.gen);
  if (!is_subspace(c2.gen, c1.gen) || inner.rank >= rank(c1.gen))
    throw PreconditionError("relative_min_weight requires a strict subcode C2 of C1");
  check_budget(c1, budget);

  const Field& f = *c1.gen.field();
  const int n = c1.n();
  std::vector<Elem> reduced(n);
  auto in_c2 = [&](const std::vector<Elem>& word) {
    std::copy(word.begin(), word.end(), reduced.begin());
    for (int r = 0; r < inner.rank; ++r) {
      const Elem coef = reduced[inner.pivot_cols[r]];
      if (coef == 0) continue;
      const Elem* row = inner.reduced.row(r);
      for (int c = inner.pivot_cols[r]; c < n; ++c) reduced[c] = f.sub(reduced[c], f.mul(coef, row[c]));
    }
    return std::all_of(reduced.begin(), reduced.end(), [](Elem v) { return v == 0; });
  };

  const int Q = f.order();
  int best = std::numeric_limits<int>::max();
  for (int v = 0; v < Q; ++v) {
    scan_partition(c1, static_cast<Elem>(v), [&](int w, const std::vector<Elem>&, const std::vector<Elem>& word) {
      if (w == 0 || w >= best) return;
      if (!in_c2(word)) best = w;
    });
  }
  return best;
}

std::optional<DistanceBound> theoretical_distance(const LinearCode& code) {
  const Curve& c = *code.curve;
  switch (code.label.kind) {
    case LabelKind::Improved: {
      // effective designed distance: the smallest designed value >= delta
      const auto& d = c.designed_distances();
      auto it = std::lower_bound(d.begin(), d.end(), code.label.param);
      if (it == d.end()) return std::nullopt;
      return DistanceBound{*it, true};
    }
    case LabelKind::OnePoint: {
      const int m = code.label.param;
      const int bound = c.min_sigma_in_window(-1, m);
      const bool exact = c.onepoint_dimension(m) == c.improved_dimension_oracle(bound);
      return DistanceBound{bound, exact};
    }
    default:
      return std::nullopt;
  }
}

}  // namespace hermiq
