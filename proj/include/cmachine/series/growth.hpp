#pragma once

// Numerical growth-rate diagnostics. Purely informational; nothing else
// in the library relies on floating point.

#include <gmpxx.h>

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "cmachine/count_series.hpp"

namespace cmachine::series {

struct GrowthReport {
  double ratio = 0;       // a_n / a_{n-1} at the last term
  double root = 0;        // a_n^(1/n)
  double aitken = 0;      // Aitken delta-squared on the last three ratios
  double richardson = 0;  // n r_n - (n-1) r_{n-1}, cancels the 1/n term
  double estimate = 0;    // = richardson
  std::vector<double> ratios;  // last few consecutive ratios
  std::string trend;
};

inline double log_big(const BigInt& z) {
  long e = 0;
  const double m = mpz_get_d_2exp(&e, z.get_mpz_t());
  return std::log(m) + static_cast<double>(e) * std::log(2.0);
}

inline GrowthReport growth_estimate(const CountSeries& s) {
  if (s.size() < 50) throw std::invalid_argument("growth estimate needs at least 50 terms");
  const std::size_t n = s.max_index();
  for (std::size_t k = n - 3; k <= n; ++k)
    if (s.at(k) <= 0) throw std::invalid_argument("growth estimate needs positive tail terms");
  auto ratio = [&](std::size_t k) {
    mpq_class q(s.at(k), s.at(k - 1));
    q.canonicalize();
    return q.get_d();
  };
  GrowthReport r;
  const double r0 = ratio(n - 2), r1 = ratio(n - 1), r2 = ratio(n);
  r.ratio = r2;
  r.root = std::exp(log_big(s.at(n)) / static_cast<double>(n));
  const double d2 = r2 - 2 * r1 + r0;
  r.aitken = d2 == 0 ? r2 : r2 - (r2 - r1) * (r2 - r1) / d2;
  r.richardson = static_cast<double>(n) * r2 - static_cast<double>(n - 1) * r1;
  r.estimate = r.richardson;
  for (std::size_t k = n - 4; k <= n; ++k) r.ratios.push_back(ratio(k));
  r.trend = r2 > r1 ? "ratios increasing" : r2 < r1 ? "ratios decreasing" : "ratios flat";
  return r;
}

}  // namespace cmachine::series
