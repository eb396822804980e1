#pragma once

#include <memory>
#include <vector>

#include "hermiq/gf.hpp"

namespace hermiq {

struct AffinePoint {
  Elem x;
  Elem y;
};

/// One pole order of the Weierstrass semigroup restricted to the set where
/// the evaluation code strictly grows: lambda = i*q + j*(q+1) with
/// 0 <= i < q^2, 0 <= j < q, together with its sigma and mu values.
struct SemigroupElement {
  int lambda;
  int i;
  int j;
  int sigma;
  int mu;
};

struct DeltaDecomposition {
  int delta;
  int a;  // (delta-1) div q
  int b;  // (delta-1) mod q
};

DeltaDecomposition delta_decompose(int q, int delta);

/// Number of divisors d of n with d <= q and n/d <= q.
int tau(int q, int n);

/// Lower bound for sum_{i=delta}^{q^2} tau_q(i): q^2 - floor(delta + delta*ln(q^2/delta))
/// for q <= delta <= q^2, and q^2 - floor(delta + delta*ln(delta)) for delta < q.
int dimension_lower_bound(int q, int delta);

/// The curve y^q + y = x^(q+1) over GF(q^2): its q^3 affine rational points
/// in ascending (x,y) index order, genus q(q-1)/2, and the semigroup table
/// sorted by pole order.
class Curve {
 public:
  static std::shared_ptr<const Curve> make(int q);

  int q() const { return q_; }
  int n() const { return n_; }
  int genus() const { return genus_; }
  const FieldPtr& field() const { return field_; }

  const std::vector<AffinePoint>& points() const { return points_; }
  const std::vector<SemigroupElement>& semigroup() const { return semigroup_; }

  /// Sorted pole orders of the semigroup table.
  std::vector<int> hstar() const;

  bool in_hstar(int lambda) const;
  const SemigroupElement& element(int lambda) const;

  int sigma(int lambda) const { return element(lambda).sigma; }
  int mu(int lambda) const { return element(lambda).mu; }

  int max_pole_order() const { return semigroup_.back().lambda; }

  /// Count of pole orders <= m; for 2g-2 < m < q^3 this equals m - g + 1.
  int onepoint_dimension(int m) const;

  /// Closed-form dimension of the improved code, valid for 1 <= delta <= q^2.
  int improved_dimension(int delta) const;

  /// |{lambda : sigma(lambda) >= delta}| by full scan; the independent
  /// counting oracle for the closed form.
  int improved_dimension_oracle(int delta) const;

  /// sigma(H*) as a deduplicated ascending set: the designed distances.
  const std::vector<int>& designed_distances() const { return designed_; }
  bool is_designed(int delta) const;

  /// min{ sigma(lambda) : window_low < lambda <= m }; with window_low < 0
  /// the window is all pole orders <= m.
  int min_sigma_in_window(int window_low, int m) const;

 private:
  Curve() = default;

  int q_ = 0;
  int n_ = 0;
  int genus_ = 0;
  FieldPtr field_;
  std::vector<AffinePoint> points_;
  std::vector<SemigroupElement> semigroup_;
  std::vector<int> lambda_index_;  // lambda -> position in semigroup_, -1 if absent
  std::vector<int> designed_;
};

using CurvePtr = std::shared_ptr<const Curve>;

}  // namespace hermiq
