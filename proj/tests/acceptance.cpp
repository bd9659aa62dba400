// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cmachine/cmachine.hpp"

using namespace cmachine;
using namespace cmachine::series;

namespace {

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back("failed: " + what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

std::string fmt(double v, int prec = 2) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(prec) << v;
  return s.str();
}

int failures = 0;

void criterion(int id, const std::string& title, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.ok = false;
    o.notes.push_back(std::string("exception: ") + e.what());
  }
  if (!o.ok) ++failures;
  std::cout << "criterion " << id << ": " << (o.ok ? "PASS" : "FAIL") << "  " << title << " [" << fmt(seconds_since(t), 1)
            << " s]\n";
  for (const auto& n : o.notes) std::cout << "    " << n << "\n";
  std::cout.flush();
}

CountSeries to_counts(const RationalSeries& r) {
  CountSeries s;
  for (const auto& q : r.coeffs()) {
    if (q.get_den() != 1) throw std::runtime_error("non-integral coefficient");
    s.coeffs.push_back(q.get_num());
  }
  return s;
}

// 1 followed by the large Schroeder numbers, from their three-term recurrence.
CountSeries catalan_closed_form(int n_max) {
  std::vector<BigInt> c;
  for (unsigned long n = 0; n <= static_cast<unsigned long>(n_max); ++n) {
    BigInt b;
    mpz_bin_uiui(b.get_mpz_t(), 2 * n, n);
    c.push_back(b / (n + 1));
  }
  return CountSeries(c);
}

CountSeries schroder_recurrence(int n_max) {
  std::vector<BigInt> S{1, 2};
  for (int n = 2; static_cast<int>(S.size()) < n_max; ++n)
    S.push_back((3 * (2 * n - 1) * S[static_cast<std::size_t>(n - 1)] - (n - 2) * S[static_cast<std::size_t>(n - 2)]) /
                (n + 1));
  std::vector<BigInt> out{1};
  out.insert(out.end(), S.begin(), S.end());
  out.resize(static_cast<std::size_t>(n_max) + 1);
  return CountSeries(out);
}

PolyRelation f_plus_quartic() {
  return PolyRelation::from_terms({{2, 4, 2},   {1, 4, 8},  {0, 4, -1}, {3, 3, 1},   {2, 3, 4},  {1, 3, -46},
                                   {0, 3, 5},   {3, 2, 3},  {2, 2, -21}, {1, 2, 94}, {0, 2, -9}, {3, 1, 1},
                                   {2, 1, 12},  {1, 1, -82}, {0, 1, 7},  {2, 0, 3},  {1, 0, 26}, {0, 0, -2}});
}

PolyRelation f_minus_cubic() {
  return PolyRelation::from_terms({{0, 0, 1}, {1, 1, 1}, {0, 1, -1}, {1, 2, -1}, {1, 3, 1}});
}

}  // namespace

int main() {
  std::cout << "acceptance run\n";

  criterion(1, "machine counts equal brute force for every basis of <= 3 patterns of length <= 3, n <= 7",
            [](Outcome& o) {
              std::vector<Permutation> small;
              for (int n = 1; n <= 3; ++n) {
                std::vector<int> v(static_cast<std::size_t>(n));
                for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
                do small.emplace_back(v);
                while (std::next_permutation(v.begin(), v.end()));
              }
              int bases = 0;
              const auto t = std::chrono::steady_clock::now();
              for (unsigned mask = 1; mask < (1u << small.size()); ++mask) {
                if (__builtin_popcount(mask) > 3) continue;
                std::vector<Permutation> ps;
                for (std::size_t i = 0; i < small.size(); ++i)
                  if (mask & (1u << i)) ps.push_back(small[i]);
                const PatternSet basis(ps);
                ++bases;
                const auto got = machine_class_counts(basis, 7);
                const auto want = enumerate_av(one_skew_basis(basis), 7);
                if (auto bad = first_mismatch(got, want))
                  o.require(false, basis.to_string() + " differs at n=" + std::to_string(*bad));
              }
              const double secs = seconds_since(t);
              o.require(bases == 9 + 36 + 84, "expected 129 bases, saw " + std::to_string(bases));
              o.require(secs < 300, "runtime " + fmt(secs) + " s exceeds 5 minutes");
              o.note(std::to_string(bases) + " bases checked in " + fmt(secs) + " s");
            });

  criterion(2, "Catalan and Schroeder machines, iterated systems and their relations", [](Outcome& o) {
    const auto catalan = CountSeries::from_ints({1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862});
    const auto schroder = CountSeries::from_ints({1, 1, 2, 6, 22, 90, 394, 1806, 8558, 41586});
    for (const char* b : {"12", "21"})
      o.require(machine_class_counts(PatternSet::parse({b}), 9) == catalan, std::string("Av(") + b + ") machine");
    const std::vector<std::vector<std::string>> six = {{"312", "213"}, {"132", "231"}, {"312", "231"},
                                                       {"213", "132"}, {"321", "312"}, {"213", "123"}};
    for (const auto& b : six)
      o.require(machine_class_counts(PatternSet::parse(b), 9) == schroder,
                "Av(" + b[0] + "," + b[1] + ") machine gives the Schroeder prefix");
    const auto cat30 = iterate_system("catalan", 30), sch30 = iterate_system("schroder", 30);
    o.require(to_counts(cat30.primary).prefix(9) == catalan, "iterated Catalan system prefix");
    o.require(to_counts(sch30.primary).prefix(9) == schroder, "iterated Schroeder system prefix");
    o.require(verify_relation(cat30.primary, PolyRelation::from_terms({{1, 2, 1}, {0, 1, -1}, {0, 0, 1}})),
              "x f^2 - f + 1 = 0 through order 30");
    o.require(verify_relation(sch30.primary, PolyRelation::from_terms({{0, 2, 1}, {0, 1, -3}, {1, 1, 1}, {0, 0, 2}})),
              "f^2 - (3 - x) f + 2 = 0 through order 30");
    o.note("8 machines to n = 9; systems and relations through order 30");
  });

  criterion(3, "transport Av(12) -> Av(21) is an LR-maxima preserving bijection Av_n(312) -> Av_n(321), n <= 8",
            [](Outcome& o) {
              const auto from = PatternSet::parse({"12"}), to = PatternSet::parse({"21"});
              const auto target = PatternSet::parse({"321"});
              std::size_t total = 0;
              for (int n = 0; n <= 8; ++n) {
                const auto src = list_av(PatternSet::parse({"312"}), n);
                std::set<Permutation> images;
                for (const auto& pi : src) {
                  const auto img = transport(pi, from, to);
                  if (!img) {
                    o.require(false, "no image for " + pi.to_string());
                    continue;
                  }
                  o.require(avoids_all(*img, target), pi.to_string() + " lands outside Av(321)");
                  o.require(left_to_right_maxima(pi) == left_to_right_maxima(*img),
                            "LR maxima moved for " + pi.to_string());
                  images.insert(*img);
                }
                o.require(images.size() == src.size() && images.size() == list_av(target, n).size(),
                          "not a bijection at n=" + std::to_string(n));
                total += src.size();
              }
              o.note(std::to_string(total) + " permutations mapped");
            });

  criterion(4, "F+ machine: oracle, quartic verification and recovery, growth near 5.1621", [](Outcome& o) {
    const auto& info = engines::find_engine("fib-plus");
    o.require(engines::fib_plus_counts(8) == enumerate_av(info.generated(), 8), "engine vs brute force n <= 8");
    const auto s40 = RationalSeries::from_counts(engines::fib_plus_counts(39));
    o.require(verify_relation(s40, f_plus_quartic()), "quartic verifies on 40 terms");
    const auto g = guess_algebraic(s40, 3, 4);
    o.require(g && *g.relation == f_plus_quartic(), "guess (3,4) on 40 terms recovers the quartic");
    if (g) o.note("guessed: " + pretty(*g.relation));
    const auto gr = growth_estimate(engines::fib_plus_counts(300));
    o.require(std::abs(gr.estimate - 5.1621) / 5.1621 < 0.01, "growth estimate " + fmt(gr.estimate, 4));
    o.note("growth estimate at n=300: " + fmt(gr.estimate, 4) + " (ratio " + fmt(gr.ratio, 4) + ")");
  });

  criterion(5, "F- machine: oracle, cubic verification and recovery, growth near 5.219, strictness at n=7",
            [](Outcome& o) {
              const auto& info = engines::find_engine("fib-minus");
              o.require(engines::fib_minus_counts(8) == enumerate_av(info.generated(), 8), "engine vs brute force n <= 8");
              o.require(verify_relation(RationalSeries::from_counts(engines::fib_minus_counts(40)), f_minus_cubic()),
                        "cubic verifies through order 40");
              const auto g = guess_algebraic(engines::fib_minus_counts(39), 2, 3);
              o.require(g && *g.relation == f_minus_cubic(), "guess (2,3) recovers the cubic");
              if (g) o.note("guessed: " + pretty(*g.relation));
              const auto gr = growth_estimate(engines::fib_minus_counts(300));
              o.require(std::abs(gr.estimate - 5.219) / 5.219 < 0.01, "growth estimate " + fmt(gr.estimate, 4));
              const auto m7 = engines::fib_minus_counts(7).at(7), p7 = engines::fib_plus_counts(7).at(7);
              o.require(m7 > p7, "strict inequality at n=7");
              o.note("growth estimate at n=300: " + fmt(gr.estimate, 4) + "; n=7: " + m7.get_str() + " > " + p7.get_str());
            });

  criterion(6, "four engines vs oracle and simulator; 1000 and 300 term runs", [](Outcome& o) {
    for (const char* name : {"av4123-4231-4312", "av4123-4231", "av4123-4312", "av4231-4321"}) {
      const auto& info = engines::find_engine(name);
      o.require(engines::engine_counts(name, 8) == enumerate_av(info.generated(), 8),
                std::string(name) + " vs brute force n <= 8");
      o.require(engines::engine_counts(name, 10) == machine_class_counts(info.container, 10),
                std::string(name) + " vs generic machine n <= 10");
    }
    auto t = std::chrono::steady_clock::now();
    const auto big = engines::av4123_4231_4312_counts(999);
    const double s1 = seconds_since(t);
    o.require(big.size() == 1000 && s1 < 600, "1000 terms of av4123-4231-4312 in " + fmt(s1) + " s");
    t = std::chrono::steady_clock::now();
    const auto big2 = engines::av4231_4321_counts(299);
    const double s2 = seconds_since(t);
    o.require(big2.size() == 300, "300 terms of av4231-4321");
    o.note("av4123-4231-4312: 1000 terms in " + fmt(s1) + " s; a_999 has " +
           std::to_string(big.coeffs.back().get_str().size()) + " digits");
    o.note("av4231-4321: 300 terms in " + fmt(s2) + " s");
  });

  criterion(7, "iterated functional equations reproduce engine terms", [](Outcome& o) {
    const std::vector<std::pair<std::string, int>> runs = {
        {"av4123-4231-4312", 30}, {"av4123-4231", 25}, {"av4231-4321", 25}, {"av4123-4312", 25}};
    for (const auto& [id, order] : runs) {
      const auto r = iterate_system(id, order);
      const auto e = engines::engine_counts(id, order);
      o.require(to_counts(r.primary) == e, id + " through order " + std::to_string(order));
      bool settled = true;
      for (std::size_t i = 1; i < r.settled.size(); ++i) settled &= r.settled[i] <= 2 * static_cast<int>(i);
      o.require(settled, id + ": some x^i changed after iteration 2i");
      o.note(id + ": order " + std::to_string(order) + ", " + std::to_string(r.iterations) + " iterations");
    }
  });

  criterion(8, "no relation for the four sequences at (6,6) and ADE k <= 2, d <= 3; controls found", [](Outcome& o) {
    for (const char* name : {"av4123-4231-4312", "av4123-4231", "av4123-4312", "av4231-4321"}) {
      const auto s = engines::engine_counts(name, 199);
      const auto a = guess_algebraic(s, 6, 6);
      const auto d = guess_ade(s, 2, 3);
      o.require(!a, std::string(name) + ": unexpected algebraic relation");
      o.require(!d, std::string(name) + ": unexpected differential relation");
      o.note(std::string(name) + ": none within " + a.searched + "; none within " + d.searched);
    }
    const std::vector<std::pair<std::string, CountSeries>> controls = {
        {"Catalan", catalan_closed_form(199)},
        {"Schroeder", schroder_recurrence(199)},
        {"F+", engines::fib_plus_counts(199)},
        {"F-", engines::fib_minus_counts(199)}};
    o.require(controls[0].second.prefix(12) == machine_class_counts(PatternSet::parse({"12"}), 12),
              "Catalan control prefix matches its machine");
    o.require(controls[1].second.prefix(12) == machine_class_counts(PatternSet::parse({"312", "213"}), 12),
              "Schroeder control prefix matches its machine");
    for (const auto& [name, s] : controls) {
      const auto a = guess_algebraic(s, 6, 6);
      const auto d = guess_ade(s, 2, 3);
      o.require(static_cast<bool>(a), name + ": control relation not found at (6,6)");
      o.require(static_cast<bool>(d), name + ": control differential relation not found");
      o.note(name + ": algebraic " + (a ? "found, degree " + std::to_string(a.relation->df()) : std::string("missing")) +
             "; ADE " + (d ? d.searched : std::string("missing")));
    }
  });

  criterion(9, "Bell EGF relation B B' - B B'' + B'^2 = 0 from 25 terms", [](Outcome& o) {
    std::vector<BigInt> row{1}, bell{1};
    while (bell.size() < 25) {
      std::vector<BigInt> next{row.back()};
      for (const auto& v : row) next.push_back(next.back() + v);
      bell.push_back(next[0]);
      row = std::move(next);
    }
    const auto g = guess_ade(CountSeries(bell), 2, 2, true);
    AdeRelation want;
    want.order = 2;
    want.terms = {{0, {1, 1, 0}, 1}, {0, {1, 0, 1}, -1}, {0, {0, 2, 0}, 1}};
    want.normalize();
    o.require(g && *g.relation == want, "Bell relation recovered");
    if (g) o.note("guessed: " + pretty(*g.relation) + " (" + g.searched + ")");
  });

  std::cout << (failures == 0 ? "all criteria PASS" : std::to_string(failures) + " criteria FAIL") << "\n";
  return failures == 0 ? 0 : 1;
}
