#pragma once

// Truncated power series in x and catalytic variables, exact coefficients.
// Variable 0 is x. All monomials with total degree <= N are stored; every
// operator used by the built-in systems sends a monomial to monomials of
// equal or larger total degree (after the accompanying shift), so the
// truncation never feeds wrong values back into retained coefficients.
// Each series also records the total degree through which it is exact.

#include <gmpxx.h>

#include <algorithm>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace cmachine::series {

class MonomialSpace {
 public:
  MonomialSpace(int nvars, int order) : nvars_(nvars), order_(order) {
    if (nvars < 1 || nvars > 5) throw std::invalid_argument("1..5 variables supported");
    if (order < 0) throw std::invalid_argument("order must be nonnegative");
    std::size_t cells = 1;
    for (int v = 0; v < nvars; ++v) cells *= static_cast<std::size_t>(order + 1);
    lookup_.assign(cells, -1);
    std::vector<int> e(static_cast<std::size_t>(nvars), 0);
    enumerate(0, order, e);
  }

  int nvars() const { return nvars_; }
  int order() const { return order_; }
  std::size_t size() const { return exps_.size() / static_cast<std::size_t>(nvars_); }
  const int* exps(std::size_t i) const { return &exps_[i * static_cast<std::size_t>(nvars_)]; }
  int total(std::size_t i) const { return totals_[i]; }

  /// Index of the monomial with exponents e, or -1 when its total exceeds the order.
  long find(const int* e) const {
    std::size_t cell = 0;
    int t = 0;
    for (int v = 0; v < nvars_; ++v) {
      if (e[v] < 0) return -1;
      t += e[v];
      if (t > order_) return -1;
      cell = cell * static_cast<std::size_t>(order_ + 1) + static_cast<std::size_t>(e[v]);
    }
    return lookup_[cell];
  }

 private:
  void enumerate(int v, int left, std::vector<int>& e) {
    if (v == nvars_) {
      std::size_t cell = 0;
      int t = 0;
      for (int k = 0; k < nvars_; ++k) {
        cell = cell * static_cast<std::size_t>(order_ + 1) + static_cast<std::size_t>(e[static_cast<std::size_t>(k)]);
        t += e[static_cast<std::size_t>(k)];
      }
      lookup_[cell] = static_cast<long>(size());
      exps_.insert(exps_.end(), e.begin(), e.end());
      totals_.push_back(t);
      return;
    }
    for (int d = 0; d <= left; ++d) {
      e[static_cast<std::size_t>(v)] = d;
      enumerate(v + 1, left - d, e);
    }
    e[static_cast<std::size_t>(v)] = 0;
  }

  int nvars_, order_;
  std::vector<int> exps_;
  std::vector<int> totals_;
  std::vector<long> lookup_;
};

/// Raised when an exact operation is asked to divide something that does not divide.
class InexactDivision : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

template <class T = mpz_class>
class MultiSeries {
 public:
  using Space = std::shared_ptr<const MonomialSpace>;
  static constexpr int kZero = -1;  // substitution target meaning "set to 0"

  MultiSeries() = default;
  explicit MultiSeries(Space space) : space_(std::move(space)), c_(space_->size()), exact_(space_->order()) {}

  static MultiSeries constant(Space space, const T& k) {
    MultiSeries s(std::move(space));
    s.c_[0] = k;
    return s;
  }

  const Space& space() const { return space_; }
  int order() const { return space_->order(); }
  int nvars() const { return space_->nvars(); }
  /// Total degree through which every coefficient is known to be exact.
  int exact() const { return exact_; }
  void set_exact(int e) { exact_ = e; }
  std::size_t size() const { return c_.size(); }
  const T& operator[](std::size_t i) const { return c_[i]; }
  T& operator[](std::size_t i) { return c_[i]; }

  T coeff(const std::vector<int>& e) const {
    if (static_cast<int>(e.size()) != nvars()) throw std::invalid_argument("exponent arity mismatch");
    const long i = space_->find(e.data());
    return i < 0 ? T(0) : c_[static_cast<std::size_t>(i)];
  }
  void set_coeff(const std::vector<int>& e, const T& v) {
    const long i = space_->find(e.data());
    if (i < 0) throw std::out_of_range("monomial beyond truncation order");
    c_[static_cast<std::size_t>(i)] = v;
  }

  /// Coefficients of x^0..x^order at all catalytic exponents zero.
  std::vector<T> x_coeffs() const {
    std::vector<T> out(static_cast<std::size_t>(order()) + 1);
    std::vector<int> e(static_cast<std::size_t>(nvars()), 0);
    for (int n = 0; n <= order(); ++n) {
      e[0] = n;
      out[static_cast<std::size_t>(n)] = c_[static_cast<std::size_t>(space_->find(e.data()))];
    }
    return out;
  }

  friend MultiSeries operator+(const MultiSeries& l, const MultiSeries& r) {
    MultiSeries out = l;
    for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] += r.c_[i];
    out.exact_ = std::min(l.exact_, r.exact_);
    return out;
  }
  friend MultiSeries operator-(const MultiSeries& l, const MultiSeries& r) {
    MultiSeries out = l;
    for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] -= r.c_[i];
    out.exact_ = std::min(l.exact_, r.exact_);
    return out;
  }
  friend MultiSeries operator*(const T& k, const MultiSeries& s) {
    MultiSeries out = s;
    for (auto& x : out.c_) x *= k;
    return out;
  }
  friend bool operator==(const MultiSeries& l, const MultiSeries& r) { return l.c_ == r.c_; }

  /// Multiplies by var^k.
  MultiSeries shift(int var, int k = 1) const {
    MultiSeries out(space_);
    std::vector<int> e(static_cast<std::size_t>(nvars()));
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      std::copy(space_->exps(i), space_->exps(i) + nvars(), e.begin());
      e[static_cast<std::size_t>(var)] += k;
      const long j = space_->find(e.data());
      if (j >= 0) out.c_[static_cast<std::size_t>(j)] = c_[i];
    }
    out.exact_ = std::min(order(), exact_ + k);
    return out;
  }

  /// Exact division by var; every monomial free of var must vanish.
  MultiSeries divide(int var) const {
    MultiSeries out(space_);
    std::vector<int> e(static_cast<std::size_t>(nvars()));
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      std::copy(space_->exps(i), space_->exps(i) + nvars(), e.begin());
      if (e[static_cast<std::size_t>(var)] == 0)
        throw InexactDivision("division by a catalytic variable leaves a remainder");
      e[static_cast<std::size_t>(var)] -= 1;
      out.c_[static_cast<std::size_t>(space_->find(e.data()))] = c_[i];
    }
    out.exact_ = exact_ - 1;
    return out;
  }

  /// F with var set to 0.
  MultiSeries at_zero(int var) const {
    MultiSeries out(space_);
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (space_->exps(i)[var] == 0) out.c_[i] = c_[i];
    out.exact_ = exact_;
    return out;
  }

  /// (F - F|var=0) / var, the usual divided difference at 0.
  MultiSeries drop(int var) const { return (*this - at_zero(var)).divide(var); }

  /// Renames variables: map[v] is the new variable for v, or kZero.
  MultiSeries substitute(const std::vector<int>& map) const {
    check_map(map);
    MultiSeries out(space_);
    std::vector<int> e(static_cast<std::size_t>(nvars()));
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      if (!image(i, map, e)) continue;
      out.c_[static_cast<std::size_t>(space_->find(e.data()))] += c_[i];
    }
    out.exact_ = exact_;
    return out;
  }

  /// (F|var->p - F|var->q) / (p - q), other variables renamed by `rest`.
  /// Computed monomialwise: var^k -> sum_{i<k} p^i q^(k-1-i).
  MultiSeries divided_difference(int var, int p, int q, std::vector<int> rest) const {
    if (p == q) throw std::invalid_argument("divided difference needs two distinct variables");
    check_map(rest);
    rest[static_cast<std::size_t>(var)] = var;  // placeholder, its exponent is cleared below
    MultiSeries out(space_);
    std::vector<int> e(static_cast<std::size_t>(nvars()));
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      const int k = space_->exps(i)[var];
      if (k == 0) continue;
      if (!image(i, rest, e)) continue;
      e[static_cast<std::size_t>(var)] -= k;
      for (int j = 0; j < k; ++j) {
        e[static_cast<std::size_t>(p)] += j;
        e[static_cast<std::size_t>(q)] += k - 1 - j;
        const long idx = space_->find(e.data());
        if (idx >= 0) out.c_[static_cast<std::size_t>(idx)] += c_[i];
        e[static_cast<std::size_t>(p)] -= j;
        e[static_cast<std::size_t>(q)] -= k - 1 - j;
      }
    }
    out.exact_ = exact_ - 1;
    return out;
  }

  /// Multiplies by g(var) = sum g[j] var^j.
  MultiSeries times(int var, const std::vector<T>& g) const {
    MultiSeries out(space_);
    std::vector<int> e(static_cast<std::size_t>(nvars()));
    int low = static_cast<int>(g.size());
    for (std::size_t j = 0; j < g.size(); ++j)
      if (g[j] != 0) {
        low = static_cast<int>(j);
        break;
      }
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      std::copy(space_->exps(i), space_->exps(i) + nvars(), e.begin());
      const int base = e[static_cast<std::size_t>(var)];
      for (std::size_t j = 0; j < g.size(); ++j) {
        if (g[j] == 0) continue;
        e[static_cast<std::size_t>(var)] = base + static_cast<int>(j);
        const long idx = space_->find(e.data());
        if (idx < 0) break;
        out.c_[static_cast<std::size_t>(idx)] += g[j] * c_[i];
      }
    }
    out.exact_ = std::min(order(), exact_ + low);
    return out;
  }

  /// Full product of two series.
  friend MultiSeries operator*(const MultiSeries& l, const MultiSeries& r) {
    MultiSeries out(l.space_);
    const int nv = l.nvars();
    std::vector<int> e(static_cast<std::size_t>(nv));
    for (std::size_t i = 0; i < l.c_.size(); ++i) {
      if (l.c_[i] == 0) continue;
      for (std::size_t j = 0; j < r.c_.size(); ++j) {
        if (r.c_[j] == 0) continue;
        for (int v = 0; v < nv; ++v) e[static_cast<std::size_t>(v)] = l.space_->exps(i)[v] + r.space_->exps(j)[v];
        const long idx = l.space_->find(e.data());
        if (idx >= 0) out.c_[static_cast<std::size_t>(idx)] += l.c_[i] * r.c_[j];
      }
    }
    out.exact_ = std::min(l.exact_ + r.low_total(), r.exact_ + l.low_total());
    out.exact_ = std::min(out.exact_, l.order());
    return out;
  }

  int low_total() const {
    int low = order() + 1;
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (c_[i] != 0) low = std::min(low, space_->total(i));
    return low;
  }

 private:
  void check_map(const std::vector<int>& map) const {
    if (static_cast<int>(map.size()) != nvars()) throw std::invalid_argument("substitution arity mismatch");
    for (int t : map)
      if (t != kZero && (t < 0 || t >= nvars())) throw std::invalid_argument("substitution target out of range");
  }

  // Exponents of the image of monomial i under `map`; false when it maps to 0.
  bool image(std::size_t i, const std::vector<int>& map, std::vector<int>& e) const {
    std::fill(e.begin(), e.end(), 0);
    const int* src = space_->exps(i);
    for (int v = 0; v < nvars(); ++v) {
      if (src[v] == 0) continue;
      if (map[static_cast<std::size_t>(v)] == kZero) return false;
      e[static_cast<std::size_t>(map[static_cast<std::size_t>(v)])] += src[v];
    }
    return true;
  }

  Space space_;
  std::vector<T> c_;
  int exact_ = 0;
};

}  // namespace cmachine::series
