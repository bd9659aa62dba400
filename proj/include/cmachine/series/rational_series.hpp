#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "cmachine/count_series.hpp"

namespace cmachine::series {

using BigRat = mpq_class;

/// Power series in x with exact rational coefficients, known through x^order().
class RationalSeries {
 public:
  RationalSeries() = default;
  explicit RationalSeries(std::vector<BigRat> c) : c_(std::move(c)) {}

  static RationalSeries from_counts(const CountSeries& s, bool egf = false) {
    std::vector<BigRat> c(s.offset + s.size());
    BigInt fact = 1;
    for (std::size_t n = 0; n < c.size(); ++n) {
      if (n > 0) fact *= static_cast<unsigned long>(n);
      c[n] = BigRat(s.at(n));
      if (egf) {
        c[n] /= BigRat(fact);
        c[n].canonicalize();
      }
    }
    return RationalSeries(std::move(c));
  }

  static RationalSeries from_ints(const std::vector<long>& v) {
    std::vector<BigRat> c;
    for (long x : v) c.emplace_back(x);
    return RationalSeries(std::move(c));
  }

  /// Highest exact power; -1 for an empty series.
  int order() const { return static_cast<int>(c_.size()) - 1; }
  std::size_t size() const { return c_.size(); }
  const BigRat& operator[](std::size_t i) const { return c_[i]; }
  BigRat& operator[](std::size_t i) { return c_[i]; }
  const std::vector<BigRat>& coeffs() const { return c_; }

  RationalSeries truncate(int order) const {
    std::vector<BigRat> c(c_.begin(), c_.begin() + std::min<std::ptrdiff_t>(order + 1, static_cast<std::ptrdiff_t>(c_.size())));
    return RationalSeries(std::move(c));
  }

  friend RationalSeries operator+(const RationalSeries& l, const RationalSeries& r) {
    const std::size_t n = std::min(l.size(), r.size());
    std::vector<BigRat> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = l.c_[i] + r.c_[i];
    return RationalSeries(std::move(c));
  }
  friend RationalSeries operator-(const RationalSeries& l, const RationalSeries& r) {
    const std::size_t n = std::min(l.size(), r.size());
    std::vector<BigRat> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = l.c_[i] - r.c_[i];
    return RationalSeries(std::move(c));
  }
  friend RationalSeries operator*(const RationalSeries& l, const RationalSeries& r) {
    const std::size_t n = std::min(l.size(), r.size());
    std::vector<BigRat> c(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (l.c_[i] == 0) continue;
      for (std::size_t j = 0; i + j < n; ++j) c[i + j] += l.c_[i] * r.c_[j];
    }
    return RationalSeries(std::move(c));
  }
  friend RationalSeries operator*(const BigRat& k, const RationalSeries& s) {
    std::vector<BigRat> c(s.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = k * s.c_[i];
    return RationalSeries(std::move(c));
  }

  /// Multiplies by x^k, keeping the same order.
  RationalSeries shift(int k) const {
    std::vector<BigRat> c(size());
    for (std::size_t i = static_cast<std::size_t>(k); i < c.size(); ++i) c[i] = c_[i - static_cast<std::size_t>(k)];
    return RationalSeries(std::move(c));
  }

  /// f'; loses one order.
  RationalSeries derivative() const {
    std::vector<BigRat> c(size() > 0 ? size() - 1 : 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = c_[i + 1] * static_cast<unsigned long>(i + 1);
    return RationalSeries(std::move(c));
  }

  bool is_zero() const {
    for (const auto& x : c_)
      if (x != 0) return false;
    return true;
  }

  friend bool operator==(const RationalSeries& l, const RationalSeries& r) { return l.c_ == r.c_; }

 private:
  std::vector<BigRat> c_;
};

}  // namespace cmachine::series
