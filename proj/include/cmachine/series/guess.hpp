#pragma once

// Guess-and-check for polynomial relations P(x, f) = 0 and algebraic
// differential equations P(x, f, f', ..., f^(k)) = 0.
//
// A candidate monomial set is tested by solving the coefficient-matching
// system on all but the last kHeldOut known coefficients and then checking
// the held-out ones. Candidates whose matrix already has full column rank
// modulo a large prime cannot have a relation and are skipped without any
// big-integer work.

#include <gmpxx.h>

#include <json.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cmachine/count_series.hpp"
#include "cmachine/series/nullspace.hpp"
#include "cmachine/series/rational_series.hpp"

namespace cmachine::series {

inline constexpr int kHeldOut = 10;

/// Not enough coefficients for the requested bounds.
class InsufficientTerms : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------- relations

struct PolyRelation {
  // coef[j][i] multiplies x^i f^j
  std::vector<std::vector<BigInt>> coef;

  int df() const { return static_cast<int>(coef.size()) - 1; }
  int dx() const {
    int d = 0;
    for (const auto& row : coef)
      for (std::size_t i = 0; i < row.size(); ++i)
        if (row[i] != 0) d = std::max(d, static_cast<int>(i));
    return d;
  }
  BigInt at(int i, int j) const {
    if (j < 0 || j >= static_cast<int>(coef.size()) || i < 0 || i >= static_cast<int>(coef[static_cast<std::size_t>(j)].size()))
      return 0;
    return coef[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
  }

  struct Term {
    int x, f;
    BigInt c;
  };

  /// Builds a primitive, sign-normalized relation from loose terms.
  static PolyRelation from_terms(const std::vector<Term>& terms) {
    int mx = 0, mf = 0;
    for (const auto& t : terms) {
      if (t.x < 0 || t.f < 0) throw std::invalid_argument("negative exponent in relation");
      mx = std::max(mx, t.x);
      mf = std::max(mf, t.f);
    }
    PolyRelation r;
    r.coef.assign(static_cast<std::size_t>(mf) + 1, std::vector<BigInt>(static_cast<std::size_t>(mx) + 1));
    for (const auto& t : terms) r.coef[static_cast<std::size_t>(t.f)][static_cast<std::size_t>(t.x)] += t.c;
    r.normalize();
    return r;
  }

  /// Primitive, leading coefficient (largest f-degree, then x-degree) positive, trimmed.
  void normalize() {
    std::vector<BigInt> flat;
    for (const auto& row : coef) flat.insert(flat.end(), row.begin(), row.end());
    normalize_primitive(flat);
    std::size_t k = 0;
    for (auto& row : coef)
      for (auto& c : row) c = flat[k++];
    while (!coef.empty() && std::all_of(coef.back().begin(), coef.back().end(), [](const BigInt& c) { return c == 0; }))
      coef.pop_back();
    const int mx = dx();
    for (auto& row : coef) row.resize(static_cast<std::size_t>(mx) + 1);
  }

  std::vector<Term> terms() const {
    std::vector<Term> out;
    for (std::size_t j = 0; j < coef.size(); ++j)
      for (std::size_t i = 0; i < coef[j].size(); ++i)
        if (coef[j][i] != 0) out.push_back({static_cast<int>(i), static_cast<int>(j), coef[j][i]});
    return out;
  }

  friend bool operator==(const PolyRelation& l, const PolyRelation& r) { return l.coef == r.coef; }
};

struct AdeRelation {
  struct Term {
    int x;
    std::vector<int> f;  // f[j] = exponent of the j-th derivative
    BigInt c;
  };
  int order = 0;
  std::vector<Term> terms;

  int degree() const {
    int d = 0;
    for (const auto& t : terms) {
      int s = 0;
      for (int e : t.f) s += e;
      d = std::max(d, s);
    }
    return d;
  }

  /// Canonical form: merged, sorted, primitive, last term positive.
  void normalize() {
    std::map<std::pair<std::vector<int>, int>, BigInt> m;
    for (auto& t : terms) {
      t.f.resize(static_cast<std::size_t>(order) + 1, 0);
      m[{t.f, t.x}] += t.c;
    }
    std::vector<Term> sorted;
    for (auto& [k, c] : m)
      if (c != 0) sorted.push_back({k.second, k.first, c});
    std::stable_sort(sorted.begin(), sorted.end(), [](const Term& a, const Term& b) {
      int sa = 0, sb = 0;
      for (int e : a.f) sa += e;
      for (int e : b.f) sb += e;
      if (sa != sb) return sa < sb;
      if (a.f != b.f) return a.f < b.f;
      return a.x < b.x;
    });
    std::vector<BigInt> flat;
    for (const auto& t : sorted) flat.push_back(t.c);
    normalize_primitive(flat);
    for (std::size_t i = 0; i < sorted.size(); ++i) sorted[i].c = flat[i];
    terms = std::move(sorted);
  }

  bool involves_f() const {
    for (const auto& t : terms)
      for (int e : t.f)
        if (e > 0) return true;
    return false;
  }

  friend bool operator==(const AdeRelation& l, const AdeRelation& r) {
    if (l.order != r.order || l.terms.size() != r.terms.size()) return false;
    for (std::size_t i = 0; i < l.terms.size(); ++i)
      if (l.terms[i].x != r.terms[i].x || l.terms[i].f != r.terms[i].f || l.terms[i].c != r.terms[i].c) return false;
    return true;
  }
};

/// A guess together with the bounds that were actually searched.
template <class R>
struct GuessResult {
  std::optional<R> relation;
  std::string searched;
  explicit operator bool() const { return relation.has_value(); }
};

// ---------------------------------------------------------------- checking

inline bool verify_relation(const RationalSeries& f, const PolyRelation& rel) {
  if (rel.coef.empty()) return false;
  const std::size_t n = f.size();
  auto poly = [&](std::size_t j) {
    std::vector<BigRat> c(n);
    for (std::size_t i = 0; i < rel.coef[j].size() && i < n; ++i) c[i] = rel.coef[j][i];
    return RationalSeries(std::move(c));
  };
  RationalSeries acc = poly(rel.coef.size() - 1);
  for (std::size_t j = rel.coef.size() - 1; j-- > 0;) acc = acc * f + poly(j);
  return acc.is_zero();
}

inline bool verify_ade(const RationalSeries& f, const AdeRelation& rel) {
  if (!rel.involves_f()) return false;
  const int k = rel.order;
  if (f.order() < k) return false;
  std::vector<RationalSeries> der{f.truncate(f.order() - k)};
  RationalSeries d = f;
  for (int j = 1; j <= k; ++j) {
    d = d.derivative();
    der.push_back(d.truncate(f.order() - k));
  }
  const std::size_t n = der[0].size();
  RationalSeries total{std::vector<BigRat>(n)};
  for (const auto& t : rel.terms) {
    std::vector<BigRat> one(n);
    one[0] = 1;
    RationalSeries m(std::move(one));
    for (std::size_t j = 0; j < t.f.size(); ++j)
      for (int e = 0; e < t.f[j]; ++e) m = m * der[j];
    total = total + BigRat(t.c) * m.shift(t.x);
  }
  return total.is_zero();
}

// ---------------------------------------------------------------- search core

namespace detail {

// Integer multiple D*f of a rational series, with D the lcm of denominators.
struct Integral {
  std::vector<BigInt> c;
  BigInt scale;
};

inline Integral integral(const RationalSeries& f) {
  Integral out;
  out.scale = 1;
  for (const auto& q : f.coeffs()) mpz_lcm(out.scale.get_mpz_t(), out.scale.get_mpz_t(), q.get_den_mpz_t());
  for (const auto& q : f.coeffs()) {
    mpq_class t = q * mpq_class(out.scale);
    out.c.push_back(t.get_num());
  }
  return out;
}

inline std::vector<BigInt> mul_trunc(const std::vector<BigInt>& a, const std::vector<BigInt>& b, std::size_t n) {
  std::vector<BigInt> c(n);
  for (std::size_t i = 0; i < n && i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < n && j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

inline std::vector<std::uint64_t> mul_trunc(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b,
                                            std::size_t n) {
  std::vector<std::uint64_t> c(n, 0);
  for (std::size_t i = 0; i < n && i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < n && j < b.size(); ++j) c[i + j] = modp::add(c[i + j], modp::mul(a[i], b[j]));
  }
  return c;
}

// A monomial of the f-part, i.e. a product of derivatives of the integral series.
struct Base {
  std::vector<int> exps;  // exponent per derivative order
  int degree = 0;
};

// Products of derivatives of F, computed mod p eagerly and exactly on demand.
class BaseTable {
 public:
  BaseTable(const std::vector<BigInt>& F, int max_order) {
    der_.push_back(F);
    for (int j = 1; j <= max_order; ++j) {
      const auto& prev = der_.back();
      std::vector<BigInt> d(prev.size() > 0 ? prev.size() - 1 : 0);
      for (std::size_t i = 0; i < d.size(); ++i) d[i] = prev[i + 1] * static_cast<unsigned long>(i + 1);
      der_.push_back(std::move(d));
    }
    for (const auto& d : der_) {
      std::vector<std::uint64_t> m;
      for (const auto& x : d) m.push_back(modp::reduce(x));
      der_mod_.push_back(std::move(m));
    }
  }

  const std::vector<std::uint64_t>& mod(const std::vector<int>& e, std::size_t n) {
    auto key = std::make_pair(e, n);
    auto it = mod_.find(key);
    if (it != mod_.end()) return it->second;
    std::vector<std::uint64_t> v;
    const int j = last_nonzero(e);
    if (j < 0) {
      v.assign(n, 0);
      if (n > 0) v[0] = 1;
    } else {
      auto parent = e;
      --parent[static_cast<std::size_t>(j)];
      v = mul_trunc(mod(parent, n), der_mod_[static_cast<std::size_t>(j)], n);
    }
    return mod_.emplace(key, std::move(v)).first->second;
  }

  const std::vector<BigInt>& exact(const std::vector<int>& e, std::size_t n) {
    auto key = std::make_pair(e, n);
    auto it = exact_.find(key);
    if (it != exact_.end()) return it->second;
    std::vector<BigInt> v;
    const int j = last_nonzero(e);
    if (j < 0) {
      v.assign(n, 0);
      if (n > 0) v[0] = 1;
    } else {
      auto parent = e;
      --parent[static_cast<std::size_t>(j)];
      v = mul_trunc(exact(parent, n), der_[static_cast<std::size_t>(j)], n);
    }
    return exact_.emplace(key, std::move(v)).first->second;
  }

 private:
  static int last_nonzero(const std::vector<int>& e) {
    for (std::size_t j = e.size(); j-- > 0;)
      if (e[j] > 0) return static_cast<int>(j);
    return -1;
  }
  std::vector<std::vector<BigInt>> der_;
  std::vector<std::vector<std::uint64_t>> der_mod_;
  std::map<std::pair<std::vector<int>, std::size_t>, std::vector<std::uint64_t>> mod_;
  std::map<std::pair<std::vector<int>, std::size_t>, std::vector<BigInt>> exact_;
};

struct Column {
  std::size_t base;  // index into the candidate's base list
  int shift;         // power of x
};

// Solves one candidate. Returns coefficients per column (of the integral
// series) for the first nullspace vector that also kills the held-out rows.
inline std::optional<std::vector<BigInt>> fit(BaseTable& table, const std::vector<Base>& bases,
                                              const std::vector<Column>& cols, std::size_t rows) {
  const std::size_t fit_rows = rows - kHeldOut;
  std::vector<std::vector<std::uint64_t>> mm(fit_rows, std::vector<std::uint64_t>(cols.size(), 0));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const auto& s = table.mod(bases[cols[c].base].exps, rows);
    for (std::size_t r = static_cast<std::size_t>(cols[c].shift); r < fit_rows; ++r)
      mm[r][c] = s[r - static_cast<std::size_t>(cols[c].shift)];
  }
  if (modp::rank(std::move(mm)) == cols.size()) return std::nullopt;

  auto entry = [&](std::size_t r, std::size_t c) -> BigInt {
    const auto sh = static_cast<std::size_t>(cols[c].shift);
    if (r < sh) return 0;
    return table.exact(bases[cols[c].base].exps, rows)[r - sh];
  };
  IntMatrix m(fit_rows, std::vector<BigInt>(cols.size()));
  for (std::size_t r = 0; r < fit_rows; ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) m[r][c] = entry(r, c);
  for (auto& v : integer_nullspace(std::move(m), cols.size())) {
    bool ok = true;
    for (std::size_t r = fit_rows; r < rows && ok; ++r) {
      BigInt acc = 0;
      for (std::size_t c = 0; c < cols.size(); ++c)
        if (v[c] != 0) acc += v[c] * entry(r, c);
      ok = acc == 0;
    }
    if (ok) return v;
  }
  return std::nullopt;
}

// Rescales coefficients found for D*f back to f: a monomial of f-degree j
// picks up D^j.
inline void unscale(std::vector<BigInt>& v, const std::vector<int>& degrees, const BigInt& scale) {
  if (scale == 1) return;
  for (std::size_t c = 0; c < v.size(); ++c) {
    BigInt p;
    mpz_pow_ui(p.get_mpz_t(), scale.get_mpz_t(), static_cast<unsigned long>(degrees[c]));
    v[c] *= p;
  }
  normalize_primitive(v);
}

}  // namespace detail

// ---------------------------------------------------------------- guessers

/// Smallest (d_f, then d_x) polynomial relation with deg_x <= dx_max, deg_f <= df_max.
inline GuessResult<PolyRelation> guess_algebraic(const RationalSeries& f, int dx_max, int df_max) {
  if (dx_max < 0 || df_max < 1) throw std::invalid_argument("need d_x >= 0 and d_f >= 1");
  const std::size_t rows = f.size();
  const std::size_t unknowns = static_cast<std::size_t>(dx_max + 1) * static_cast<std::size_t>(df_max + 1);
  if (unknowns + kHeldOut > rows)
    throw InsufficientTerms("bounds (d_x=" + std::to_string(dx_max) + ", d_f=" + std::to_string(df_max) + ") need " +
                            std::to_string(unknowns + kHeldOut) + " terms, have " + std::to_string(rows));
  GuessResult<PolyRelation> out;
  out.searched = "d_f <= " + std::to_string(df_max) + ", d_x <= " + std::to_string(dx_max) + " on " +
                 std::to_string(rows) + " terms (" + std::to_string(kHeldOut) + " held out)";
  const auto F = detail::integral(f);
  detail::BaseTable table(F.c, 0);
  std::vector<detail::Base> bases;
  for (int j = 0; j <= df_max; ++j) bases.push_back({{j}, j});

  for (int df = 1; df <= df_max; ++df)
    for (int dx = 0; dx <= dx_max; ++dx) {
      std::vector<detail::Column> cols;
      std::vector<int> degrees;
      for (int j = 0; j <= df; ++j)
        for (int i = 0; i <= dx; ++i) {
          cols.push_back({static_cast<std::size_t>(j), i});
          degrees.push_back(j);
        }
      auto v = detail::fit(table, bases, cols, rows);
      if (!v) continue;
      detail::unscale(*v, degrees, F.scale);
      std::vector<PolyRelation::Term> terms;
      for (std::size_t c = 0; c < cols.size(); ++c)
        terms.push_back({cols[c].shift, static_cast<int>(cols[c].base), (*v)[c]});
      auto rel = PolyRelation::from_terms(terms);
      if (!verify_relation(f, rel)) continue;
      out.relation = std::move(rel);
      return out;
    }
  return out;
}

/// Exponent vectors over `vars` variables with total degree <= d, ordered by
/// (total, lexicographic).
inline std::vector<std::vector<int>> ade_monomials(int vars, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> e(static_cast<std::size_t>(vars), 0);
  auto rec = [&](auto&& self, int v, int left) -> void {
    if (v == vars) {
      out.push_back(e);
      return;
    }
    for (int x = 0; x <= left; ++x) {
      e[static_cast<std::size_t>(v)] = x;
      self(self, v + 1, left - x);
    }
    e[static_cast<std::size_t>(v)] = 0;
  };
  rec(rec, 0, d);
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    int sa = 0, sb = 0;
    for (int x : a) sa += x;
    for (int x : b) sb += x;
    if (sa != sb) return sa < sb;
    return a < b;
  });
  return out;
}

/// Algebraic differential equation of order <= k whose f-part has total
/// degree <= d. For each (k', d') in increasing order, the x-degree is raised
/// as far as the available terms allow.
inline GuessResult<AdeRelation> guess_ade(const RationalSeries& f, int k, int d) {
  if (k < 0 || d < 1) throw std::invalid_argument("need k >= 0 and d >= 1");
  const std::size_t terms = f.size();
  const std::size_t needed = ade_monomials(k + 1, d).size() + kHeldOut + static_cast<std::size_t>(k);
  if (needed > terms)
    throw InsufficientTerms("ADE bounds (k=" + std::to_string(k) + ", d=" + std::to_string(d) + ") need " +
                            std::to_string(needed) + " terms, have " + std::to_string(terms));
  const auto F = detail::integral(f);
  detail::BaseTable table(F.c, k);
  GuessResult<AdeRelation> out;
  int dx_lo = -1, dx_hi = -1;

  for (int kk = 0; kk <= k; ++kk)
    for (int dd = 1; dd <= d; ++dd) {
      std::vector<detail::Base> bases;
      for (auto& e : ade_monomials(kk + 1, dd)) {
        int s = 0;
        for (int x : e) s += x;
        bases.push_back({e, s});
      }
      const std::size_t rows = terms - static_cast<std::size_t>(kk);
      int dx = 0;
      for (; (static_cast<std::size_t>(dx) + 1) * bases.size() + kHeldOut <= rows; ++dx) {
        std::vector<detail::Column> cols;
        std::vector<int> degrees;
        for (std::size_t b = 0; b < bases.size(); ++b)
          for (int i = 0; i <= dx; ++i) {
            cols.push_back({b, i});
            degrees.push_back(bases[b].degree);
          }
        auto v = detail::fit(table, bases, cols, rows);
        if (!v) continue;
        detail::unscale(*v, degrees, F.scale);
        AdeRelation rel;
        rel.order = kk;
        for (std::size_t c = 0; c < cols.size(); ++c)
          if ((*v)[c] != 0) rel.terms.push_back({cols[c].shift, bases[cols[c].base].exps, (*v)[c]});
        rel.normalize();
        if (!rel.involves_f() || !verify_ade(f, rel)) continue;
        out.relation = std::move(rel);
        out.searched = "found at k=" + std::to_string(kk) + ", d=" + std::to_string(dd) + ", x-degree " +
                       std::to_string(dx);
        return out;
      }
      const int reached = dx - 1;
      dx_lo = dx_lo < 0 ? reached : std::min(dx_lo, reached);
      dx_hi = std::max(dx_hi, reached);
    }
  out.searched = "k <= " + std::to_string(k) + ", d <= " + std::to_string(d) + ", x-degree up to " +
                 std::to_string(dx_lo) + ".." + std::to_string(dx_hi) + " (as terms allow) on " +
                 std::to_string(terms) + " terms (" + std::to_string(kHeldOut) + " held out)";
  return out;
}

inline GuessResult<PolyRelation> guess_algebraic(const CountSeries& s, int dx, int df) {
  return guess_algebraic(RationalSeries::from_counts(s), dx, df);
}
inline GuessResult<AdeRelation> guess_ade(const CountSeries& s, int k, int d, bool egf = false) {
  return guess_ade(RationalSeries::from_counts(s, egf), k, d);
}

// ---------------------------------------------------------------- output

namespace detail {

inline std::string x_power(int i) {
  if (i == 0) return "";
  return i == 1 ? "x" : "x^" + std::to_string(i);
}

inline std::string poly_in_x(const std::vector<BigInt>& c) {
  std::string s;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    BigInt a = abs(c[i]);
    const bool neg = c[i] < 0;
    s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    if (i == 0) {
      s += a.get_str();
    } else {
      if (a != 1) s += a.get_str() + "*";
      s += x_power(static_cast<int>(i));
    }
  }
  return s.empty() ? "0" : s;
}

inline std::string derivative_name(std::size_t j) {
  if (j <= 3) return "f" + std::string(j, '\'');
  return "f^(" + std::to_string(j) + ")";
}

}  // namespace detail

inline std::string pretty(const PolyRelation& rel) {
  std::string s;
  for (std::size_t j = rel.coef.size(); j-- > 0;) {
    const auto& row = rel.coef[j];
    std::size_t nz = 0;
    for (const auto& c : row) nz += c != 0;
    if (nz == 0) continue;
    std::string p = detail::poly_in_x(row);
    bool neg = false;
    if (nz == 1 && p[0] == '-') {
      neg = true;
      p = p.substr(1);
    }
    if (nz > 1 && j > 0) p = "(" + p + ")";
    if (nz > 1 && j == 0 && !s.empty()) p = "(" + p + ")";
    std::string term;
    if (j == 0)
      term = p;
    else {
      const std::string fp = j == 1 ? "f" : "f^" + std::to_string(j);
      term = p == "1" ? fp : p + "*" + fp;
    }
    s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    s += term;
  }
  return (s.empty() ? "0" : s) + " = 0";
}

inline std::string pretty(const AdeRelation& rel) {
  std::string s;
  for (const auto& t : rel.terms) {
    std::vector<std::string> factors;
    if (t.x > 0) factors.push_back(detail::x_power(t.x));
    for (std::size_t j = 0; j < t.f.size(); ++j)
      if (t.f[j] > 0) factors.push_back(detail::derivative_name(j) + (t.f[j] > 1 ? "^" + std::to_string(t.f[j]) : ""));
    BigInt a = abs(t.c);
    const bool neg = t.c < 0;
    s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    std::string body;
    for (const auto& fct : factors) body += (body.empty() ? "" : "*") + fct;
    if (body.empty())
      s += a.get_str();
    else
      s += (a == 1 ? "" : a.get_str() + "*") + body;
  }
  return (s.empty() ? "0" : s) + " = 0";
}

inline nlohmann::json to_json(const PolyRelation& rel) {
  nlohmann::json mons = nlohmann::json::array();
  for (const auto& t : rel.terms()) mons.push_back({{"x", t.x}, {"f", t.f}, {"coef", t.c.get_str()}});
  return {{"type", "algebraic"}, {"monomials", mons}};
}

inline nlohmann::json to_json(const AdeRelation& rel) {
  nlohmann::json mons = nlohmann::json::array();
  for (const auto& t : rel.terms) mons.push_back({{"x", t.x}, {"f", t.f}, {"coef", t.c.get_str()}});
  return {{"type", "ade"}, {"order", rel.order}, {"monomials", mons}};
}

inline PolyRelation poly_relation_from_json(const nlohmann::json& j) {
  std::vector<PolyRelation::Term> terms;
  for (const auto& m : j.at("monomials")) {
    BigInt c;
    if (c.set_str(m.at("coef").get<std::string>(), 10) != 0) throw std::invalid_argument("bad coefficient");
    terms.push_back({m.at("x").get<int>(), m.at("f").get<int>(), c});
  }
  return PolyRelation::from_terms(terms);
}

inline AdeRelation ade_relation_from_json(const nlohmann::json& j) {
  AdeRelation rel;
  rel.order = j.at("order").get<int>();
  for (const auto& m : j.at("monomials")) {
    BigInt c;
    if (c.set_str(m.at("coef").get<std::string>(), 10) != 0) throw std::invalid_argument("bad coefficient");
    auto f = m.at("f").get<std::vector<int>>();
    if (static_cast<int>(f.size()) > rel.order + 1) throw std::invalid_argument("derivative beyond order");
    rel.terms.push_back({m.at("x").get<int>(), f, c});
  }
  rel.normalize();
  return rel;
}

}  // namespace cmachine::series
