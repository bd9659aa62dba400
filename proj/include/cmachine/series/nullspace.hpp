#pragma once

// Exact integer nullspaces by fraction-free (Bareiss) elimination, plus a
// rank computation modulo a large prime used to skip hopeless candidates.

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace cmachine::series {

using IntMatrix = std::vector<std::vector<mpz_class>>;

namespace modp {

inline constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  std::uint64_t r = static_cast<std::uint64_t>(p & kPrime) + static_cast<std::uint64_t>(p >> 61);
  if (r >= kPrime) r -= kPrime;
  return r;
}
inline std::uint64_t add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = a + b;
  return r >= kPrime ? r - kPrime : r;
}
inline std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kPrime - b; }
inline std::uint64_t pow(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  for (; e; e >>= 1, a = mul(a, a))
    if (e & 1) r = mul(r, a);
  return r;
}
inline std::uint64_t inv(std::uint64_t a) { return pow(a, kPrime - 2); }
inline std::uint64_t reduce(const mpz_class& z) { return mpz_fdiv_ui(z.get_mpz_t(), kPrime); }

/// Rank of a matrix over GF(p); destroys its argument.
inline std::size_t rank(std::vector<std::vector<std::uint64_t>> m) {
  if (m.empty()) return 0;
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const std::uint64_t iv = inv(m[r][c]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      const std::uint64_t f = mul(m[i][c], iv);
      for (std::size_t j = c; j < cols; ++j) m[i][j] = sub(m[i][j], mul(f, m[r][j]));
    }
    ++r;
  }
  return r;
}

}  // namespace modp

/// Makes v primitive with its last nonzero entry positive.
inline void normalize_primitive(std::vector<mpz_class>& v) {
  mpz_class g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g == 0) return;
  for (std::size_t i = v.size(); i-- > 0;)
    if (v[i] != 0) {
      if (v[i] < 0) g = -g;
      break;
    }
  for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

/// Basis of {v : M v = 0} over Q, one integer primitive vector per free column
/// (free column set to 1, the other free columns 0), in column order.
inline std::vector<std::vector<mpz_class>> integer_nullspace(IntMatrix m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    pivots.push_back(c);
    ++r;
  }

  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<mpz_class>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<mpq_class> x(cols);
    x[f] = 1;
    for (std::size_t i = pivots.size(); i-- > 0;) {
      const std::size_t pc = pivots[i];
      mpq_class acc = 0;
      for (std::size_t j = pc + 1; j < cols; ++j)
        if (x[j] != 0) acc += mpq_class(m[i][j]) * x[j];
      x[pc] = -acc / mpq_class(m[i][pc]);
    }
    mpz_class l = 1;
    for (const auto& q : x) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    std::vector<mpz_class> v(cols);
    for (std::size_t j = 0; j < cols; ++j) {
      mpq_class t = x[j] * mpq_class(l);
      v[j] = t.get_num();
    }
    normalize_primitive(v);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace cmachine::series
