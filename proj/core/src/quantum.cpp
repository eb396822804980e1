#include "hermiq/quantum.hpp"

#include <algorithm>
#include <map>

namespace hermiq {
namespace {

int delta_max(int q) { return (q * q * q - q * q + q) / 2 + 1; }

int ceil_enlarged(int field_size, int d) {
  // ceil((1 + 1/field_size) * d)
  return ((field_size + 1) * d + field_size - 1) / field_size;
}

bool label_is_family(const CodeLabel& l) {
  return l.kind == LabelKind::OnePoint || l.kind == LabelKind::Improved;
}

// Dual-containment of a family-labeled code, decided arithmetically.
bool family_dual_containing(const Curve& c, const CodeLabel& l) {
  if (l.kind == LabelKind::Improved) return self_orth_condition(c.q(), l.param);
  if (l.kind == LabelKind::OnePoint) return 2 * l.param >= c.n() + 2 * c.genus() - 2;
  return false;
}

std::optional<DistanceBound> family_distance(const Curve& c, const CodeLabel& l) {
  if (!label_is_family(l)) return std::nullopt;
  switch (l.kind) {
    case LabelKind::Improved: {
      const auto& d = c.designed_distances();
      auto it = std::lower_bound(d.begin(), d.end(), l.param);
      if (it == d.end()) return std::nullopt;
      return DistanceBound{*it, true};
    }
    case LabelKind::OnePoint: {
      const int bound = c.min_sigma_in_window(-1, l.param);
      const bool exact = c.onepoint_dimension(l.param) == c.improved_dimension_oracle(bound);
      return DistanceBound{bound, exact};
    }
    default:
      return std::nullopt;
  }
}

// Relative distance d(A, B) for B a subcode of A, by theory alone:
// valid when B is zero, or B is the dual of a dual-containing family code,
// in which case every word of B is heavier than A's designed distance and
// the relative and plain distances coincide.
std::optional<DistanceBound> relative_theory(const Curve& curve, const CodeLabel& a_label, const CodeLabel& b_label,
                                             int b_dim) {
  const auto da = family_distance(curve, a_label);
  if (!da) return std::nullopt;
  if (b_dim == 0) return da;
  if (b_label.kind != LabelKind::DualOf || !b_label.inner) return std::nullopt;
  const CodeLabel& inner = *b_label.inner;
  if (!label_is_family(inner) || !family_dual_containing(curve, inner)) return std::nullopt;
  if (da->value > delta_max(curve.q())) return std::nullopt;
  return da;
}

DistanceBound relative_or_fallback(const Curve& curve, const LinearCode& a, const LinearCode& b,
                                   std::uint64_t budget) {
  if (auto t = relative_theory(curve, a.label, b.label, b.k)) return *t;
  // exhaustive only when the message space fits the budget
  std::uint64_t space = 1;
  const std::uint64_t Q = curve.field()->order();
  bool fits = true;
  for (int i = 0; i < a.k; ++i) {
    if (space > budget / Q) {
      fits = false;
      break;
    }
    space *= Q;
  }
  if (fits) {
    if (b.k == 0) return {min_weight_exhaustive(a, budget).weight, true};
    return {relative_min_weight(a, b, budget), true};
  }
  return {1, false};
}

std::string pair_provenance(const LinearCode& a, const LinearCode& b) {
  return a.label.text() + "," + b.label.text();
}

}  // namespace

int dual_degree(const Curve& curve, int m) { return curve.n() + 2 * curve.genus() - 2 - m; }

QuantumCodeRecord css_pair(const LinearCode& c1, const LinearCode& c2, std::uint64_t budget) {
  if (c1.curve.get() != c2.curve.get()) throw PreconditionError("css_pair: codes from different curves");
  const Curve& curve = *c1.curve;
  const int r1 = rank(c1.gen);
  const int r2 = rank(c2.gen);
  if (!is_subspace(c2.gen, c1.gen) || r2 >= r1)
    throw PreconditionError("css_pair requires a strict nesting C2 < C1");

  QuantumCodeRecord rec;
  rec.n = curve.n();
  rec.k = r1 - r2;
  rec.field_size = curve.field()->order();
  rec.dz = relative_or_fallback(curve, c1, c2, budget);
  // dx = d(C2^perp, C1^perp); theory reads the labels, the fallback
  // materializes both duals through the nullspace.
  const CodeLabel c2perp_label =
      (c2.label.kind == LabelKind::DualOf && c2.label.inner) ? *c2.label.inner : CodeLabel::dual_of(c2.label);
  if (auto t = relative_theory(curve, c2perp_label, CodeLabel::dual_of(c1.label), curve.n() - r1)) {
    rec.dx = *t;
  } else {
    LinearCode d2 = dual(c2);
    LinearCode d1 = dual(c1);
    rec.dx = relative_or_fallback(curve, d2, d1, budget);
  }
  rec.d_sym = std::min(rec.dz.value, rec.dx.value);
  rec.construction = "css(" + c1.label.text() + "," + c2.label.text() + ")";
  rec.provenance = pair_provenance(c1, c2);
  return rec;
}

QuantumCodeRecord css_dual_containing(const LinearCode& code, std::uint64_t budget) {
  const Curve& curve = *code.curve;
  if (!is_dual_containing(code)) throw PreconditionError("css_dual_containing: code does not contain its dual");
  const int r = rank(code.gen);

  QuantumCodeRecord rec;
  rec.n = curve.n();
  rec.k = 2 * r - curve.n();
  rec.field_size = curve.field()->order();
  DistanceBound d{1, false};
  if (auto t = relative_theory(curve, code.label, CodeLabel::dual_of(code.label), curve.n() - r)) {
    d = *t;
  } else {
    LinearCode dd = dual(code);
    d = relative_or_fallback(curve, code, dd, budget);
  }
  rec.dz = rec.dx = d;
  rec.d_sym = d.value;
  rec.construction = "css-dual-containing(" + code.label.text() + ")";
  rec.provenance = code.label.text();
  return rec;
}

QuantumCodeRecord steane_enlarge(const LinearCode& code, const LinearCode& larger, std::uint64_t budget) {
  if (code.curve.get() != larger.curve.get()) throw PreconditionError("steane_enlarge: codes from different curves");
  const Curve& curve = *code.curve;
  if (!is_dual_containing(code))
    throw PreconditionError("not-dual-containing: C must contain its Euclidean dual");
  const int rc = rank(code.gen);
  const int rp = rank(larger.gen);
  if (!is_subspace(code.gen, larger.gen) || rc >= rp)
    throw PreconditionError("not-nested: C must be a strict subcode of C'");
  if (rp < rc + 2)
    throw PreconditionError("codimension-below-2: k' = " + std::to_string(rp) + " < k + 2 = " +
                            std::to_string(rc + 2));

  const CodeLabel larger_dual = CodeLabel::dual_of(larger.label);
  DistanceBound d{1, false};
  DistanceBound dp{1, false};
  if (auto t = relative_theory(curve, code.label, larger_dual, curve.n() - rp)) {
    d = *t;
  } else {
    LinearCode ld = dual(larger);
    d = relative_or_fallback(curve, code, ld, budget);
  }
  if (auto t = relative_theory(curve, larger.label, larger_dual, curve.n() - rp)) {
    dp = *t;
  } else {
    LinearCode ld = dual(larger);
    dp = relative_or_fallback(curve, larger, ld, budget);
  }

  QuantumCodeRecord rec;
  rec.n = curve.n();
  rec.k = rc + rp - curve.n();
  rec.field_size = curve.field()->order();
  rec.d_sym = std::min(d.value, ceil_enlarged(rec.field_size, dp.value));
  rec.dz = rec.dx = DistanceBound{rec.d_sym, false};
  rec.construction = "steane(" + code.label.text() + "," + larger.label.text() + ")";
  rec.provenance = pair_provenance(code, larger);
  return rec;
}

QuantumCodeRecord enlarge_onepoint(CurvePtr curve, int delta) {
  const int q = curve->q();
  const int q2 = q * q;
  const int q3 = curve->n();
  if (!self_orth_condition(q, delta))
    throw PreconditionError("prop7 requires delta <= floor((q^3-q^2+q)/2)+1 = " + std::to_string(delta_max(q)) +
                            ", got " + std::to_string(delta));
  if (delta < q2 + 3)
    throw PreconditionError("prop7 requires delta >= q^2+3 = " + std::to_string(q2 + 3) + ", got " +
                            std::to_string(delta));
  const int step = (delta - 2) / (q2 + 1) + 1;  // ceil((delta-1)/(q^2+1))
  const int delta_prime = delta - step;

  LinearCode c = onepoint_code(curve, q3 - delta);
  LinearCode cp = onepoint_code(curve, q3 - delta_prime);
  if (rank(cp.gen) - rank(c.gen) != step)
    throw std::logic_error("prop7: codimension does not match ceil((delta-1)/(q^2+1))");

  QuantumCodeRecord rec = steane_enlarge(c, cp);
  if (rec.k != 2 * c.k - q3 + step) throw std::logic_error("prop7: dimension does not match the closed form");
  if (rec.d_sym < delta) throw std::logic_error("prop7: distance bound fell below delta");
  rec.construction = "prop7(delta=" + std::to_string(delta) + ")";
  return rec;
}

int steane_K(int q, int delta, int m) {
  if (m < 1 || m >= delta || delta > q * q) throw PreconditionError("steane_K requires 1 <= m < delta <= q^2");
  const auto d1 = delta_decompose(q, delta);
  const auto d2 = delta_decompose(q, delta - m);
  int sum = 0;
  for (int i = 1; i <= m; ++i) sum += tau(q, delta - i);
  return std::min(d1.a, d1.b) - std::min(d2.a, d2.b) + (d1.a * (d1.a - 1) - d2.a * (d2.a - 1)) / 2 + sum;
}

QuantumCodeRecord enlarge_improved(CurvePtr curve, int delta, int m) {
  const int q = curve->q();
  const int q3 = curve->n();
  if (!curve->is_designed(delta))
    throw PreconditionError("prop8 requires a designed delta; " + std::to_string(delta) + " is not designed");
  if (delta > q * q) throw PreconditionError("prop8 requires delta <= q^2");
  if (!self_orth_condition(q, delta))
    throw PreconditionError("prop8 requires delta <= floor((q^3-q^2+q)/2)+1");
  if (m < 1 || m >= delta) throw PreconditionError("prop8 requires 1 <= m < delta");

  const int K = steane_K(q, delta, m);
  const int oracle = curve->improved_dimension_oracle(delta - m) - curve->improved_dimension_oracle(delta);
  if (K != oracle) throw std::logic_error("steane_K disagrees with the dimension-difference oracle");
  if (K < 2)
    throw PreconditionError("codimension-below-2: K = " + std::to_string(K) + " for delta=" + std::to_string(delta) +
                            ", m=" + std::to_string(m) + "; choose a larger m");

  LinearCode c = improved_code(curve, delta);
  LinearCode cp = improved_code(curve, delta - m, DeltaPolicy::AllowAny);
  QuantumCodeRecord rec = steane_enlarge(c, cp);
  if (rec.k != 2 * c.k - q3 + K) throw std::logic_error("prop8: dimension does not match 2k - q^3 + K");
  if (rec.d_sym < delta - m + 1) throw std::logic_error("prop8: distance bound fell below delta - m + 1");
  rec.construction = "prop8(delta=" + std::to_string(delta) + ",m=" + std::to_string(m) + ")";
  return rec;
}

namespace {

struct MixedCandidate {
  int k;
  int d;
  int pref;  // 0 = improved pair, 1 = one-point into improved
  int p1;    // delta or m
  int p2;    // delta'
};

}  // namespace

std::vector<QuantumCodeRecord> enlarge_mixed_search(CurvePtr curve, std::optional<int> k_target) {
  const Curve& c = *curve;
  const int q = c.q();
  const int n = c.n();
  const int field = c.field()->order();
  const int dmax = delta_max(q);
  const auto& designed = c.designed_distances();
  const bool lemma4_only = q >= 7;  // keep the q=7 search at desk scale

  std::map<int, MixedCandidate> best;  // k -> candidate
  auto offer = [&](const MixedCandidate& cand) {
    if (cand.k < 1) return;
    if (k_target && cand.k != *k_target) return;
    auto it = best.find(cand.k);
    if (it == best.end() || cand.d > it->second.d ||
        (cand.d == it->second.d && std::tuple(cand.pref, cand.p1, cand.p2) <
                                       std::tuple(it->second.pref, it->second.p1, it->second.p2)))
      best[cand.k] = cand;
  };

  // improved into improved
  for (int delta : designed) {
    if (delta < 2 || !self_orth_condition(q, delta)) continue;
    if (lemma4_only && delta <= q * q - q) continue;
    const int dim_delta = c.improved_dimension_oracle(delta);
    for (int dp : designed) {
      if (dp >= delta) break;
      if (lemma4_only && dp <= q * q - q) continue;
      const int dim_dp = c.improved_dimension_oracle(dp);
      if (dim_dp < dim_delta + 2) continue;
      const int d = std::min(delta, ceil_enlarged(field, dp));
      offer({dim_delta + dim_dp - n, d, 0, delta, dp});
    }
  }

  // one-point into improved: containment needs min sigma over the
  // spanned pole orders to stay >= delta'
  const int dual_threshold = n + 2 * c.genus() - 2;  // dual-containing iff 2m >= this
  for (const auto& e : c.semigroup()) {
    const int m = e.lambda;
    if (2 * m < dual_threshold) continue;
    const int dim_m = c.onepoint_dimension(m);
    const int prefix_min = c.min_sigma_in_window(-1, m);
    for (int dp : designed) {
      if (dp > prefix_min) break;
      if (lemma4_only && dp <= q * q - q) continue;
      const int dim_dp = c.improved_dimension_oracle(dp);
      if (dim_dp < dim_m + 2) continue;
      const int d = std::min(prefix_min, ceil_enlarged(field, dp));
      offer({dim_m + dim_dp - n, d, 1, m, dp});
    }
  }

  // materialize winners on actual matrices, best k first
  std::vector<QuantumCodeRecord> out;
  for (auto it = best.rbegin(); it != best.rend(); ++it) {
    const MixedCandidate& cand = it->second;
    LinearCode inner = cand.pref == 0 ? improved_code(curve, cand.p1) : onepoint_code(curve, cand.p1);
    LinearCode outer = improved_code(curve, cand.p2, DeltaPolicy::AllowAny);
    QuantumCodeRecord rec = steane_enlarge(inner, outer);
    if (rec.k != cand.k || rec.d_sym != cand.d)
      throw std::logic_error("mixed search candidate disagrees with the materialized record");
    out.push_back(std::move(rec));
  }
  return out;
}

int goppa_bound(const Curve& curve, int m) {
  if (m >= curve.n()) throw PreconditionError("goppa_bound requires m < q^3");
  return std::max(curve.n() - m, 1);
}

int order_bound_onepoint(const Curve& curve, int m, int window_low) {
  if (m < 0 || m > curve.max_pole_order()) throw PreconditionError("order_bound_onepoint: m out of range");
  return curve.min_sigma_in_window(window_low, m);
}

}  // namespace hermiq
