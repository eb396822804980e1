#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace hermiq {

/// Field element, encoded as the base-p integer value of its
/// polynomial-basis coordinate vector (low degree first).
using Elem = std::uint16_t;

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// GF(p^e) with p prime and p^e <= 2^16. The modulus is the
/// lexicographically smallest monic irreducible of degree e over GF(p)
/// (coefficient lists compared low-degree-first as base-p integers), so
/// element encodings are reproducible across runs and platforms.
/// Multiplication goes through exp/log tables of the cyclic group.
class Field {
 public:
  static std::shared_ptr<const Field> make(int p, int e);

  int characteristic() const { return p_; }
  int degree() const { return e_; }
  int order() const { return order_; }

  /// Modulus coefficients c0..ce (low degree first, ce = 1).
  const std::vector<int>& modulus() const { return modulus_; }

  /// Generator of the multiplicative group used for the tables.
  Elem generator() const { return exp_[1]; }

  Elem add(Elem a, Elem b) const {
    if (p_ == 2) return a ^ b;
    if (!add_table_.empty()) return add_table_[static_cast<size_t>(a) * order_ + b];
    return add_slow(a, b);
  }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem neg(Elem a) const {
    if (p_ == 2) return a;
    if (!neg_table_.empty()) return neg_table_[a];
    return neg_slow(a);
  }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  Elem inv(Elem a) const;
  Elem pow(Elem a, long long n) const;

  /// a^q for q = p^k dividing the field order; tested for curve membership.
  Elem frobenius(Elem a, int q) const;

  bool contains(Elem a) const { return a < order_; }
  void check(Elem a) const;

  std::string to_string(Elem a) const;

 private:
  Field() = default;

  Elem add_slow(Elem a, Elem b) const;
  Elem neg_slow(Elem a) const;

  int p_ = 0;
  int e_ = 0;
  int order_ = 0;
  std::vector<int> modulus_;
  std::vector<Elem> exp_;        // length 2(order-1), doubled to skip the mod
  std::vector<int> log_;         // log_[0] unused
  std::vector<Elem> add_table_;  // full table for small odd-characteristic fields
  std::vector<Elem> neg_table_;
};

using FieldPtr = std::shared_ptr<const Field>;

bool is_prime(int n);

}  // namespace hermiq
