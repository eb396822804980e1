#include "hermiq/gf.hpp"

#include <algorithm>

namespace hermiq {
namespace {

// Polynomials over GF(p) as coefficient vectors, low degree first.
// Only used while constructing a Field; everything after runs on tables.
using Poly = std::vector<int>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mod(Poly f, const Poly& m, int p) {
  const int dm = static_cast<int>(m.size()) - 1;
  trim(f);
  while (static_cast<int>(f.size()) - 1 >= dm) {
    const int df = static_cast<int>(f.size()) - 1;
    const int lead = f.back();  // m is monic
    for (int i = 0; i <= dm; ++i) {
      int& c = f[df - dm + i];
      c = (c - lead * m[i]) % p;
      if (c < 0) c += p;
    }
    trim(f);
  }
  return f;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, int p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return poly_mod(std::move(r), m, p);
}

Elem poly_to_index(const Poly& f, int p) {
  long long idx = 0, w = 1;
  for (int c : f) {
    idx += c * w;
    w *= p;
  }
  return static_cast<Elem>(idx);
}

Poly index_to_poly(Elem a, int p) {
  Poly f;
  int v = a;
  while (v > 0) {
    f.push_back(v % p);
    v /= p;
  }
  return f;
}

Poly poly_gcd(Poly a, Poly b, int p) {
  // inverse of a leading coefficient mod p by scan (p is tiny)
  auto inv_mod = [p](int x) {
    for (int y = 1; y < p; ++y)
      if (x * y % p == 1) return y;
    return 0;
  };
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a mod b with b made monic on the fly
    Poly bm = b;
    const int li = inv_mod(bm.back());
    for (int& c : bm) c = c * li % p;
    a = poly_mod(std::move(a), bm, p);
    std::swap(a, b);
  }
  return a;
}

// f irreducible over GF(p)  <=>  gcd(f, x^(p^k) - x) is constant for all
// k <= deg(f)/2 (any proper factorization has a factor of degree <= d/2,
// and x^(p^k) - x is the product of all irreducibles of degree dividing k).
bool is_irreducible(const Poly& f, int p) {
  const int d = static_cast<int>(f.size()) - 1;
  if (d == 1) return true;
  if (f[0] == 0) return false;  // divisible by x
  Poly x = {0, 1};
  Poly xp = x;
  for (int k = 1; k <= d / 2; ++k) {
    // xp <- xp^p mod f, via p-fold multiplication (p is tiny)
    Poly t = {1};
    for (int i = 0; i < p; ++i) t = poly_mulmod(t, xp, f, p);
    xp = t;
    Poly diff = xp;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] - 1 % p + p) % p;
    trim(diff);
    Poly g = poly_gcd(f, diff, p);
    if (static_cast<int>(g.size()) - 1 >= 1) return false;
  }
  return true;
}

}  // namespace

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::shared_ptr<const Field> Field::make(int p, int e) {
  if (!is_prime(p)) throw PreconditionError("field characteristic must be prime, got " + std::to_string(p));
  if (e < 1) throw PreconditionError("extension degree must be >= 1");
  long long ord = 1;
  for (int i = 0; i < e; ++i) {
    ord *= p;
    if (ord > 65536) throw PreconditionError("field order exceeds 2^16 cap");
  }

  auto f = std::shared_ptr<Field>(new Field);
  f->p_ = p;
  f->e_ = e;
  f->order_ = static_cast<int>(ord);

  // Lexicographic scan over monic degree-e polynomials: the low-degree
  // coefficients (c0..c_{e-1}) are the base-p digits of t.
  for (long long t = 0;; ++t) {
    Poly cand(e + 1, 0);
    long long v = t;
    for (int i = 0; i < e; ++i) {
      cand[i] = static_cast<int>(v % p);
      v /= p;
    }
    cand[e] = 1;
    if (is_irreducible(cand, p)) {
      f->modulus_ = cand;
      break;
    }
  }

  // Find a generator of the multiplicative group by direct order test,
  // then fill exp/log. Fields are small enough that this is instant.
  const int n1 = f->order_ - 1;
  f->log_.assign(f->order_, 0);
  f->exp_.assign(std::max(2 * n1, 2), 0);
  Elem gen = 1;
  for (Elem c = 1; c < f->order_; ++c) {
    Poly g = index_to_poly(c, p);
    Poly acc = {1};
    int ord_c = 0;
    do {
      acc = poly_mulmod(acc, g, f->modulus_, p);
      ++ord_c;
    } while (!(acc.size() == 1 && acc[0] == 1));
    if (ord_c == n1) {
      gen = c;
      break;
    }
  }
  Poly acc = {1};
  Poly g = index_to_poly(gen, p);
  f->exp_[0] = 1;
  f->log_[1] = 0;
  for (int i = 1; i < n1; ++i) {
    acc = poly_mulmod(acc, g, f->modulus_, p);
    const Elem idx = poly_to_index(acc, p);
    f->exp_[i] = idx;
    f->log_[idx] = i;
  }
  for (int i = 0; i < n1; ++i) f->exp_[n1 + i] = f->exp_[i];
  if (n1 == 1) f->exp_[1] = 1;  // GF(2): 1*1 lands on exp_[0+0], keep slot sane

  if (p != 2 && f->order_ <= 256) {
    f->neg_table_.resize(f->order_);
    for (int a = 0; a < f->order_; ++a) f->neg_table_[a] = f->neg_slow(static_cast<Elem>(a));
    f->add_table_.resize(static_cast<size_t>(f->order_) * f->order_);
    for (int a = 0; a < f->order_; ++a)
      for (int b = 0; b < f->order_; ++b)
        f->add_table_[static_cast<size_t>(a) * f->order_ + b] = f->add_slow(static_cast<Elem>(a), static_cast<Elem>(b));
  }
  return f;
}

void Field::check(Elem a) const {
  if (a >= order_)
    throw PreconditionError("element index " + std::to_string(a) + " outside GF(" + std::to_string(order_) + ")");
}

Elem Field::add_slow(Elem a, Elem b) const {
  int r = 0, w = 1, x = a, y = b;
  while (x > 0 || y > 0) {
    r += (x % p_ + y % p_) % p_ * w;
    x /= p_;
    y /= p_;
    w *= p_;
  }
  return static_cast<Elem>(r);
}

Elem Field::neg_slow(Elem a) const {
  int r = 0, w = 1, x = a;
  while (x > 0) {
    r += (p_ - x % p_) % p_ * w;
    x /= p_;
    w *= p_;
  }
  return static_cast<Elem>(r);
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw PreconditionError("inversion of zero");
  const int n1 = order_ - 1;
  return exp_[(n1 - log_[a]) % n1];
}

Elem Field::pow(Elem a, long long n) const {
  if (a == 0) {
    if (n < 0) throw PreconditionError("inversion of zero");
    return n == 0 ? Elem{1} : Elem{0};
  }
  const int n1 = order_ - 1;
  if (n1 == 0) return 1;
  long long r = ((log_[a] * (n % n1)) % n1 + n1) % n1;
  return exp_[r];
}

Elem Field::frobenius(Elem a, int q) const {
  int v = q;
  int k = 0;
  while (v > 1 && v % p_ == 0) {
    v /= p_;
    ++k;
  }
  if (v != 1 || k == 0 || k > e_)
    throw PreconditionError("frobenius exponent must be a p-power dividing the field order");
  return pow(a, q);
}

std::string Field::to_string(Elem a) const { return std::to_string(a); }

}  // namespace hermiq
