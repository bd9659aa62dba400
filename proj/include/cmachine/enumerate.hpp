#pragma once

// Brute-force enumeration of Av(B): the oracle every other counting route is
// checked against.

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "cmachine/count_series.hpp"
#include "cmachine/permutation.hpp"

namespace cmachine {

inline constexpr int kDefaultBruteForceGuard = 11;

/// All permutations of length n avoiding every pattern in `basis`, in lexicographic order.
inline std::vector<Permutation> list_av(const PatternSet& basis, int n) {
  std::vector<Permutation> out;
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  do {
    if (avoids_all(std::span<const int>(v), basis)) out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

/// a_n = |Av_n(B)| for 0 <= n <= n_max by filtering all n! permutations.
inline CountSeries enumerate_av(const PatternSet& basis, int n_max, int guard = kDefaultBruteForceGuard) {
  if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");
  if (n_max > guard)
    throw std::invalid_argument("brute-force enumeration limited to n <= " + std::to_string(guard) +
                                " (requested " + std::to_string(n_max) + ")");
  CountSeries out;
  std::vector<int> v;
  for (int n = 0; n <= n_max; ++n) {
    v.resize(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    unsigned long count = 0;
    do {
      if (avoids_all(std::span<const int>(v), basis)) ++count;
    } while (std::next_permutation(v.begin(), v.end()));
    out.coeffs.emplace_back(count);
  }
  return out;
}

}  // namespace cmachine
