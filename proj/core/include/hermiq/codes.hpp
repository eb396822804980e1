#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hermiq/curve.hpp"
#include "hermiq/matrix.hpp"

namespace hermiq {

enum class LabelKind { OnePoint, Improved, DualOf, AdHoc };

/// Construction provenance carried by every code.
struct CodeLabel {
  LabelKind kind = LabelKind::AdHoc;
  int param = -1;  // m for OnePoint, delta for Improved
  std::shared_ptr<const CodeLabel> inner;
  std::string note;  // display text for AdHoc

  static CodeLabel onepoint(int m);
  static CodeLabel improved(int delta);
  static CodeLabel dual_of(const CodeLabel& inner);
  static CodeLabel adhoc(std::string note = "adhoc");

  std::string text() const;
};

struct LinearCode {
  CurvePtr curve;
  Matrix gen;  // k x n generator
  int k;
  CodeLabel label;
  std::vector<int> basis_lambdas;  // the spanning pole orders, when monomial-spanned

  int n() const { return gen.cols(); }
};

/// Evaluation rows (x^i y^j at every affine point) for the given pole orders.
Matrix evaluation_matrix(const Curve& curve, const std::vector<int>& lambdas);

/// C_L(D, mQ): spanned by pole orders <= m, ascending.
LinearCode onepoint_code(CurvePtr curve, int m);

enum class DeltaPolicy { RequireDesigned, AllowAny };

/// Improved code spanned by { f_lambda : sigma(lambda) >= delta }. Designed
/// distances are the sigma values; other delta are accepted only with
/// DeltaPolicy::AllowAny (the distance promise then degrades to >= delta).
LinearCode improved_code(CurvePtr curve, int delta, DeltaPolicy policy = DeltaPolicy::RequireDesigned);

/// Dual route to the same code: nullspace of { f_lambda : mu(lambda) < delta }.
LinearCode improved_dual_code(CurvePtr curve, int delta, DeltaPolicy policy = DeltaPolicy::RequireDesigned);

/// Euclidean dual via nullspace of the generator.
LinearCode dual(const LinearCode& code);

/// True iff the code contains its Euclidean dual.
bool is_dual_containing(const LinearCode& code);

/// Arithmetic predicate: delta <= floor((q^3 - q^2 + q)/2) + 1, equivalent
/// to dual-containment of the one-point / improved codes of designed
/// distance delta.
bool self_orth_condition(int q, int delta);

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 26;

struct WeightSearchResult {
  int weight;
  std::vector<Elem> witness;  // the codeword attaining it
  std::vector<Elem> message;  // lexicographically first message attaining it
};

/// Exact minimum Hamming weight over all nonzero codewords, by Gray-order
/// enumeration of all (q^2)^k messages, partitioned on the first message
/// symbol. Throws BudgetExceeded when (q^2)^k > budget.
WeightSearchResult min_weight_exhaustive(const LinearCode& code, std::uint64_t budget = kDefaultBudget);

/// Exact minimum weight over c1 \ c2 for a strict subcode c2 of c1.
int relative_min_weight(const LinearCode& c1, const LinearCode& c2, std::uint64_t budget = kDefaultBudget);

struct DistanceBound {
  int value;
  bool exact;
};

/// Designed-distance value of a family-labeled code: delta (exact) for
/// improved codes, the min-sigma order bound for one-point codes (exact
/// when the code coincides with the matching improved code). nullopt for
/// duals and ad-hoc codes.
std::optional<DistanceBound> theoretical_distance(const LinearCode& code);

}  // namespace hermiq
