#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hermiq/codes.hpp"

namespace hermiq {

/// Quantum code parameters derived from a pair of nested classical codes.
/// Distances are design bounds; `exact` marks values certified by the
/// designed-distance theory or by exhaustive search.
struct QuantumCodeRecord {
  int n;
  int k;
  int field_size;  // q^2
  DistanceBound dz;
  DistanceBound dx;
  int d_sym;
  std::string construction;
  std::string provenance;

  bool operator==(const QuantumCodeRecord&) const = default;
};

/// Asymmetric CSS from a strict nesting c2 < c1: [[n, k1-k2, dz/dx]] with
/// dz = d(c1, c2) and dx = d(c2^perp, c1^perp). Distances come from the
/// designed-distance theory when labels allow, else exhaustive search
/// within budget, else they are left as trivial bounds.
QuantumCodeRecord css_pair(const LinearCode& c1, const LinearCode& c2, std::uint64_t budget = kDefaultBudget);

/// Symmetric CSS [[n, 2k-n, d]] for a code containing its Euclidean dual.
QuantumCodeRecord css_dual_containing(const LinearCode& code, std::uint64_t budget = kDefaultBudget);

/// Steane enlargement of a dual-containing code C by a strictly larger C'
/// of codimension >= 2: [[n, k+k'-n, >= min{d, ceil((1+1/q^2) d')}]].
/// All dimensions are measured on the actual matrices.
QuantumCodeRecord steane_enlarge(const LinearCode& code, const LinearCode& larger,
                                 std::uint64_t budget = kDefaultBudget);

/// Closed-form enlargement of a one-point code (CLI construction `prop7`):
/// requires the self-orthogonality condition and delta >= q^2 + 3, pairs
/// C_L((q^3-delta)Q) with C_L((q^3-delta')Q) for
/// delta' = delta - ceil((delta-1)/(q^2+1)), and certifies
/// [[q^3, 2k - q^3 + ceil((delta-1)/(q^2+1)), >= delta]].
QuantumCodeRecord enlarge_onepoint(CurvePtr curve, int delta);

/// Codimension between improved codes of designed distance delta and
/// delta - m, by the closed form: min{a,b} - min{a',b'}
/// + (a(a-1) - a'(a'-1))/2 + sum_{i=1..m} tau(delta - i).
int steane_K(int q, int delta, int m);

/// Enlargement inside the improved family (CLI construction `prop8`):
/// [[q^3, 2k - q^3 + K, >= delta - m + 1]] when K >= 2.
QuantumCodeRecord enlarge_improved(CurvePtr curve, int delta, int m);

/// Enumerates Steane enlargements of one-point codes into improved codes
/// and improved codes into improved codes, keeps the best symmetric
/// distance per quantum dimension, and returns records sorted by
/// (k desc, d desc). Every emitted record is rebuilt on actual matrices.
std::vector<QuantumCodeRecord> enlarge_mixed_search(CurvePtr curve, std::optional<int> k_target = std::nullopt);

/// max(q^3 - m, 1): the designed-distance floor of C_L(D, mQ) from the
/// degree of the divisor.
int goppa_bound(const Curve& curve, int m);

/// min{ sigma(lambda) : window_low < lambda <= m }. With
/// window_low = q^3 + 2g - 2 - m this is the relative designed distance
/// of the dual-containing CSS pair on C_L(D, mQ).
int order_bound_onepoint(const Curve& curve, int m, int window_low = -1);

/// Degree of the dual one-point code: q^3 + 2g - 2 - m.
int dual_degree(const Curve& curve, int m);

}  // namespace hermiq
