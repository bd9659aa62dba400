#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cmachine {

using BigInt = mpz_class;

/// Counting sequence a_offset, a_offset+1, ... with arbitrary-precision terms.
struct CountSeries {
  std::size_t offset = 0;
  std::vector<BigInt> coeffs;

  CountSeries() = default;
  explicit CountSeries(std::vector<BigInt> c, std::size_t off = 0) : offset(off), coeffs(std::move(c)) {}

  static CountSeries from_ints(const std::vector<long>& values) {
    CountSeries s;
    for (long v : values) s.coeffs.emplace_back(v);
    return s;
  }

  std::size_t size() const { return coeffs.size(); }
  bool empty() const { return coeffs.empty(); }

  /// Largest n with a_n available.
  std::size_t max_index() const {
    if (coeffs.empty()) throw std::out_of_range("empty count series");
    return offset + coeffs.size() - 1;
  }

  /// Coefficient of x^n; zero below the offset.
  BigInt at(std::size_t n) const {
    if (n < offset) return 0;
    if (n - offset >= coeffs.size()) throw std::out_of_range("term " + std::to_string(n) + " not available");
    return coeffs[n - offset];
  }

  CountSeries prefix(std::size_t n_max) const {
    CountSeries out;
    out.offset = offset;
    for (std::size_t i = 0; i < coeffs.size() && offset + i <= n_max; ++i) out.coeffs.push_back(coeffs[i]);
    return out;
  }

  std::vector<std::string> to_strings() const {
    std::vector<std::string> out;
    out.reserve(coeffs.size());
    for (const auto& c : coeffs) out.push_back(c.get_str());
    return out;
  }

  friend bool operator==(const CountSeries& l, const CountSeries& r) {
    return l.offset == r.offset && l.coeffs == r.coeffs;
  }
};

/// First index n at which the two series differ, over the common range.
inline std::optional<std::size_t> first_mismatch(const CountSeries& a, const CountSeries& b) {
  const std::size_t lo = std::min(a.offset, b.offset);
  const std::size_t hi = std::min(a.max_index(), b.max_index());
  for (std::size_t n = lo; n <= hi; ++n) {
    if (a.at(n) != b.at(n)) return n;
  }
  return std::nullopt;
}

}  // namespace cmachine
