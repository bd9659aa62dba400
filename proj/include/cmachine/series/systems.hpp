#pragma once

// Built-in functional-equation systems, solved by fixed-point iteration.
//
// Every unknown lives in one monomial space in x and the catalytic
// variables, truncated at total degree N. A catalytic variable counts
// container entries, and a container never holds more entries than there
// are outputs still to come, so total degree N is the natural cut.
// Iteration is Jacobi-style from the constant terms; one iteration applies
// one machine step, and a walk with i outputs has at most 2i steps.

#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "cmachine/series/multi_series.hpp"
#include "cmachine/series/rational_series.hpp"

namespace cmachine::series {

using MS = MultiSeries<mpz_class>;

/// The iteration did not settle within its budget.
class NoConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SystemResult {
  std::string id;
  int order = 0;
  std::vector<std::string> variables;  // variables[0] == "x"
  std::vector<std::string> names;
  std::vector<MS> components;
  RationalSeries primary;  // the counting series, catalytic variables at 0
  int iterations = 0;      // iterations until nothing changed
  std::vector<int> settled;  // settled[i]: last iteration that changed [x^i] of primary

  const MS& operator[](const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return components[i];
    throw std::out_of_range("no component " + name);
  }
};

struct SystemSpec {
  std::string id;
  std::string description;
  std::vector<std::string> variables;
  std::vector<std::string> names;
  std::vector<long> constants;  // initial iterate: constant term of each unknown
  std::function<std::vector<MS>(const std::vector<MS>&, const MS::Space&)> rhs;
  std::function<std::vector<mpz_class>(const std::vector<MS>&)> primary;
};

namespace detail {

inline std::vector<mpz_class> ones_from(int start, int order) {
  std::vector<mpz_class> g(static_cast<std::size_t>(order) + 1);
  for (int j = start; j <= order; ++j) g[static_cast<std::size_t>(j)] = 1;
  return g;
}

// Catalan numbers C_1, C_2, ... as the coefficients of C(x) - 1.
inline std::vector<mpz_class> catalan_tail(int order) {
  std::vector<mpz_class> g(static_cast<std::size_t>(order) + 1);
  for (int n = 1; n <= order; ++n) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), 2 * static_cast<unsigned long>(n), static_cast<unsigned long>(n));
    g[static_cast<std::size_t>(n)] = b / (n + 1);
  }
  return g;
}

inline std::vector<mpz_class> at_origin(const MS& s) { return s.x_coeffs(); }

constexpr int X = 0;
constexpr int Z = MS::kZero;

inline std::vector<SystemSpec> build_specs() {
  std::vector<SystemSpec> v;

  v.push_back({"catalan", "Av(12)-machine: f = 1 + x(f+g) + x/u (f - f(x,0)), g = u(f+g)", {"x", "u"}, {"f", "g"},
               {1, 0},
               [](const std::vector<MS>& s, const MS::Space&) {
                 const MS &f = s[0], &g = s[1];
                 const MS fg = f + g;
                 return std::vector<MS>{MS::constant(f.space(), 1) + fg.shift(X) + f.drop(1).shift(X), fg.shift(1)};
               },
               [](const std::vector<MS>& s) { return at_origin(s[0]); }});

  v.push_back({"schroder", "Av(312,213)-machine: g = 2u((f - f(x,0)) + g) + u f(x,0)", {"x", "u"}, {"f", "g"},
               {1, 0},
               [](const std::vector<MS>& s, const MS::Space&) {
                 const MS &f = s[0], &g = s[1];
                 const MS f0 = f.at_zero(1);
                 return std::vector<MS>{MS::constant(f.space(), 1) + (f + g).shift(X) + f.drop(1).shift(X),
                                        mpz_class(2) * ((f - f0) + g).shift(1) + f0.shift(1)};
               },
               [](const std::vector<MS>& s) { return at_origin(s[0]); }});

  // S_n = E + ... carries no x: pushing onto the empty container emits nothing.
  v.push_back({"fib-plus", "Av(231,312,321)-machine automaton E, S_p, S_n, D_p, D_n", {"x", "u"},
               {"E", "S_p", "S_n", "D_p", "D_n"}, {1, 0, 0, 0, 0},
               [](const std::vector<MS>& s, const MS::Space&) {
                 const MS &E = s[0], &Sp = s[1], &Sn = s[2], &Dp = s[3], &Dn = s[4];
                 return std::vector<MS>{
                     MS::constant(E.space(), 1) + E.shift(X) + Sp.at_zero(1).shift(X),
                     (Sn + Sp).shift(X) + Sp.drop(1).shift(X) + Dp.at_zero(1).shift(X),
                     E + (Sn + Sp).shift(1) + (Dn + Dp).shift(1, 2),
                     (Dn + Dp).shift(X) + Dp.drop(1).shift(X),
                     Sn + Sp,
                 };
               },
               [](const std::vector<MS>& s) { return at_origin(s[0]); }});

  v.push_back({"fib-minus", "Av(123,132,213)-machine grammar s, w_p, w_n, r_p, r_n", {"x"},
               {"s", "w_p", "w_n", "r_p", "r_n"}, {1, 1, 0, 1, 0},
               [](const std::vector<MS>& g, const MS::Space&) {
                 const MS &s = g[0], &wp = g[1], &wn = g[2], &rp = g[3], &rn = g[4];
                 const MS one = MS::constant(s.space(), 1);
                 const MS wtail = (wp + wn * wp + rn * wp).shift(X);
                 const MS rtail = (rp + wn * rp).shift(X);
                 return std::vector<MS>{one + (s + wn * s).shift(X), one + wtail, wtail, one + rtail, rtail};
               },
               [](const std::vector<MS>& s) { return at_origin(s[0]); }});

  // A(a,x), B(a,b,x); variables x=0, a=1, b=2.
  auto a_equation = [](const MS& A, const MS& B_at) {
    return MS::constant(A.space(), 1) + A.drop(1).shift(X) + A.shift(1) + B_at.shift(X);
  };

  v.push_back({"av4123-4231-4312", "Av(123,231,312)-machine A/B system", {"x", "a", "b"}, {"A", "B"}, {1, 0},
               [a_equation](const std::vector<MS>& s, const MS::Space& sp) {
                 const MS &A = s[0], &B = s[1];
                 const int N = sp->order();
                 const auto b_over = ones_from(1, N);  // b/(1-b)
                 const auto x_over = ones_from(1, N);  // x/(1-x)
                 const MS B0a = B.substitute({X, Z, 1});  // B(0,a,x)
                 const MS nb = A.drop(1).times(2, b_over).times(X, x_over) + B.times(2, b_over).times(X, x_over) +
                               B.drop(1).times(X, x_over);
                 return std::vector<MS>{a_equation(A, B0a), nb};
               },
               [](const std::vector<MS>& s) { return at_origin(s[0]); }});

  v.push_back({"av4123-4231", "Av(123,231)-machine A/B system with C(x)", {"x", "a", "b"}, {"A", "B"}, {1, 0},
               [a_equation](const std::vector<MS>& s, const MS::Space& sp) {
                 const MS &A = s[0], &B = s[1];
                 const int N = sp->order();
                 const auto b_over = ones_from(1, N);
                 const auto C = catalan_tail(N);
                 auto xC1 = std::vector<mpz_class>(static_cast<std::size_t>(N) + 1);  // x(1 + C(x))
                 xC1[1] = 1;
                 for (int n = 2; n <= N; ++n) xC1[static_cast<std::size_t>(n)] = C[static_cast<std::size_t>(n - 1)];
                 const MS B0a = B.substitute({X, Z, 1});
                 const MS nb = A.drop(1).times(2, b_over).times(X, C) + B.times(2, b_over).times(X, C) +
                               B.drop(1).times(X, xC1);
                 return std::vector<MS>{a_equation(A, B0a), nb};
               },
               [](const std::vector<MS>& s) { return at_origin(s[0]); }});

  // A(a,x), B(a,b,c,x); variables x=0, a=1, b=2, c=3.
  v.push_back({"av4123-4312", "Av(123,312)-machine A/B system", {"x", "a", "b", "c"}, {"A", "B"}, {1, 0},
               [a_equation](const std::vector<MS>& s, const MS::Space& sp) {
                 const MS &A = s[0], &B = s[1];
                 const int N = sp->order();
                 const auto c_over = ones_from(1, N);
                 const auto x_over = ones_from(1, N);
                 const MS Ba0a = B.substitute({X, 1, Z, 1});  // B(a,0,a,x)
                 const MS dA = A.divided_difference(1, 1, 2, {X, Z, 2, 3});  // (A(a)-A(b))/(a-b)
                 const MS nb = dA.times(3, c_over).times(X, x_over) + B.times(3, c_over).times(X, x_over) +
                               B.drop(2).times(X, x_over);
                 return std::vector<MS>{a_equation(A, Ba0a), nb};
               },
               [](const std::vector<MS>& s) { return at_origin(s[0]); }});

  v.push_back({"av4231-4321", "Av(231,321)-machine A_p/A_n/B_p/B_n system", {"x", "a", "b", "c"},
               {"A_p", "A_n", "B_p", "B_n"}, {1, 0, 0, 0},
               [](const std::vector<MS>& s, const MS::Space&) {
                 const MS &Ap = s[0], &An = s[1], &Bp = s[2], &Bn = s[3];
                 const MS A = Ap + An, B = Bp + Bn;
                 const MS Bp_aa0 = Bp.substitute({X, 1, 1, Z});  // B_p(a,a,0,x)
                 // (A(c) - A(b))/(c - b) and (B(c,c,c) - B(b,c,c))/(c - b)
                 const MS dA = A.divided_difference(1, 3, 2, {X, Z, 2, 3});
                 const MS dB = B.divided_difference(1, 3, 2, {X, Z, 3, 3});
                 return std::vector<MS>{
                     MS::constant(Ap.space(), 1) + A.shift(X) + Ap.drop(1).shift(X) + Bp_aa0.divide(1).shift(X),
                     A.shift(1),
                     B.shift(X) + Bp.drop(3).shift(X),
                     B.shift(1) + (dA + dB).shift(2, 2),
                 };
               },
               [](const std::vector<MS>& s) { return at_origin(s[0]); }});
  return v;
}

}  // namespace detail

inline const std::vector<SystemSpec>& system_specs() {
  static const std::vector<SystemSpec> specs = detail::build_specs();
  return specs;
}

inline std::vector<std::string> system_ids() {
  std::vector<std::string> ids;
  for (const auto& s : system_specs()) ids.push_back(s.id);
  return ids;
}

inline const SystemSpec& find_system(const std::string& id) {
  for (const auto& s : system_specs())
    if (s.id == id) return s;
  std::string known;
  for (const auto& s : system_specs()) known += (known.empty() ? "" : ", ") + s.id;
  throw std::invalid_argument("unknown system '" + id + "' (known: " + known + ")");
}

/// Iterates the system to a fixed point through total degree N.
/// max_iterations < 0 selects the default budget 2N + 4.
inline SystemResult iterate_system(const std::string& id, int N, int max_iterations = -1) {
  const auto& spec = find_system(id);
  const int nv = static_cast<int>(spec.variables.size());
  if (N < 0) throw std::invalid_argument("order must be nonnegative");
  if (N > (nv <= 2 ? 400 : nv == 3 ? 60 : 40)) throw std::invalid_argument("order too large for system " + id);
  const int budget = max_iterations < 0 ? 2 * N + 4 : max_iterations;
  auto space = std::make_shared<const MonomialSpace>(nv, N);

  std::vector<MS> cur;
  for (long c : spec.constants) cur.push_back(MS::constant(space, c));

  SystemResult out;
  out.id = id;
  out.order = N;
  out.variables = spec.variables;
  out.names = spec.names;
  out.settled.assign(static_cast<std::size_t>(N) + 1, 0);
  auto prim = spec.primary(cur);

  for (int it = 1;; ++it) {
    if (it > budget)
      throw NoConvergence("system " + id + " did not settle within " + std::to_string(budget) + " iterations");
    auto next = spec.rhs(cur, space);
    for (std::size_t k = 0; k < next.size(); ++k) {
      if (next[k].exact() < N)
        throw std::logic_error("system " + id + ": equation for " + spec.names[k] +
                               " is not exact through the truncation order");
      next[k].set_exact(N);
    }
    const auto p = spec.primary(next);
    for (std::size_t i = 0; i < p.size(); ++i)
      if (p[i] != prim[i]) out.settled[i] = it;
    prim = p;
    bool same = true;
    for (std::size_t k = 0; k < next.size() && same; ++k) same = next[k] == cur[k];
    cur = std::move(next);
    if (same) {
      out.iterations = it - 1;
      break;
    }
  }
  out.components = std::move(cur);
  std::vector<BigRat> c;
  for (const auto& z : prim) c.emplace_back(z);
  out.primary = RationalSeries(std::move(c));
  return out;
}

}  // namespace cmachine::series
