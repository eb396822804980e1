#include "hermiq/curve.hpp"

#include <algorithm>
#include <cmath>

namespace hermiq {

DeltaDecomposition delta_decompose(int q, int delta) {
  if (delta < 1) throw PreconditionError("delta must be >= 1");
  return {delta, (delta - 1) / q, (delta - 1) % q};
}

int tau(int q, int n) {
  if (n < 1) throw PreconditionError("tau argument must be >= 1");
  int count = 0;
  for (int d = 1; d <= q && d <= n; ++d)
    if (n % d == 0 && n / d <= q) ++count;
  return count;
}

int dimension_lower_bound(int q, int delta) {
  const int q2 = q * q;
  if (delta < 1 || delta > q2) throw PreconditionError("delta out of range for dimension_lower_bound");
  const double d = delta;
  double v;
  if (delta < q)
    v = d + d * std::log(d);
  else
    v = d + d * std::log(static_cast<double>(q2) / d);
  return q2 - static_cast<int>(std::floor(v));
}

namespace {

int sigma_of(int q, int i, int j) {
  const int q3 = q * q * q;
  if (i < q * q - q) return q3 - i * q - j * (q + 1);
  return (q * q - i) * (q - j);
}

struct FieldForQ {
  int p;
  int s;  // q = p^s
};

FieldForQ split_prime_power(int q) {
  for (int p = 2; p <= q; ++p) {
    if (!is_prime(p)) continue;
    int v = q, s = 0;
    while (v % p == 0) {
      v /= p;
      ++s;
    }
    if (v == 1) return {p, s};
  }
  throw PreconditionError("q is not a prime power");
}

}  // namespace

std::shared_ptr<const Curve> Curve::make(int q) {
  static const int supported[] = {2, 3, 4, 5, 7, 8, 9};
  if (std::find(std::begin(supported), std::end(supported), q) == std::end(supported))
    throw PreconditionError("unsupported q (expected one of 2,3,4,5,7,8,9)");

  auto c = std::shared_ptr<Curve>(new Curve);
  c->q_ = q;
  c->n_ = q * q * q;
  c->genus_ = q * (q - 1) / 2;
  const auto [p, s] = split_prime_power(q);
  c->field_ = Field::make(p, 2 * s);

  const Field& f = *c->field_;
  for (int xi = 0; xi < f.order(); ++xi)
    for (int yi = 0; yi < f.order(); ++yi) {
      const Elem x = static_cast<Elem>(xi), y = static_cast<Elem>(yi);
      if (f.add(f.frobenius(y, q), y) == f.pow(x, q + 1)) c->points_.push_back({x, y});
    }
  if (static_cast<int>(c->points_.size()) != c->n_)
    throw std::logic_error("curve point count != q^3");

  for (int i = 0; i < q * q; ++i)
    for (int j = 0; j < q; ++j) {
      const int lambda = i * q + j * (q + 1);
      const int mu = sigma_of(q, q * q - 1 - i, q - 1 - j);
      c->semigroup_.push_back({lambda, i, j, sigma_of(q, i, j), mu});
    }
  std::sort(c->semigroup_.begin(), c->semigroup_.end(),
            [](const SemigroupElement& a, const SemigroupElement& b) { return a.lambda < b.lambda; });
  for (size_t k = 1; k < c->semigroup_.size(); ++k)
    if (c->semigroup_[k].lambda == c->semigroup_[k - 1].lambda)
      throw std::logic_error("pole order collision in semigroup table");

  c->lambda_index_.assign(c->semigroup_.back().lambda + 1, -1);
  for (size_t k = 0; k < c->semigroup_.size(); ++k) c->lambda_index_[c->semigroup_[k].lambda] = static_cast<int>(k);

  std::vector<int> sigmas;
  for (const auto& e : c->semigroup_) sigmas.push_back(e.sigma);
  std::sort(sigmas.begin(), sigmas.end());
  sigmas.erase(std::unique(sigmas.begin(), sigmas.end()), sigmas.end());
  c->designed_ = std::move(sigmas);

  return c;
}

std::vector<int> Curve::hstar() const {
  std::vector<int> v;
  v.reserve(semigroup_.size());
  for (const auto& e : semigroup_) v.push_back(e.lambda);
  return v;
}

bool Curve::in_hstar(int lambda) const {
  return lambda >= 0 && lambda < static_cast<int>(lambda_index_.size()) && lambda_index_[lambda] >= 0;
}

const SemigroupElement& Curve::element(int lambda) const {
  if (!in_hstar(lambda)) throw PreconditionError("pole order " + std::to_string(lambda) + " not in H*(Q)");
  return semigroup_[lambda_index_[lambda]];
}

int Curve::onepoint_dimension(int m) const {
  if (m < 0 || m > max_pole_order())
    throw PreconditionError("one-point degree m out of range [0, " + std::to_string(max_pole_order()) + "]");
  int count = 0;
  for (const auto& e : semigroup_) {
    if (e.lambda > m) break;
    ++count;
  }
  return count;
}

int Curve::improved_dimension(int delta) const {
  if (delta < 1 || delta > q_ * q_)
    throw PreconditionError("improved_dimension requires 1 <= delta <= q^2");
  const auto [d, a, b] = delta_decompose(q_, delta);
  (void)d;
  int tail = 0;
  for (int i = delta; i <= q_ * q_; ++i) tail += tau(q_, i);
  return n_ - q_ * q_ - a * (a - 1) / 2 - std::min(a, b) + tail;
}

int Curve::improved_dimension_oracle(int delta) const {
  if (delta < 1) throw PreconditionError("delta must be >= 1");
  int count = 0;
  for (const auto& e : semigroup_)
    if (e.sigma >= delta) ++count;
  return count;
}

bool Curve::is_designed(int delta) const {
  return std::binary_search(designed_.begin(), designed_.end(), delta);
}

int Curve::min_sigma_in_window(int window_low, int m) const {
  int best = -1;
  for (const auto& e : semigroup_) {
    if (e.lambda > m) break;
    if (e.lambda <= window_low) continue;
    if (best < 0 || e.sigma < best) best = e.sigma;
  }
  if (best < 0) throw PreconditionError("empty pole-order window");
  return best;
}

}  // namespace hermiq
