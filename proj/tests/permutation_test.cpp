#include <gtest/gtest.h>

#include <random>

#include "cmachine/enumerate.hpp"
#include "cmachine/permutation.hpp"

using namespace cmachine;

namespace {

std::vector<Permutation> all_up_to(int n_max) {
  std::vector<Permutation> out;
  for (int n = 0; n <= n_max; ++n) {
    auto level = list_av(PatternSet{}, n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<long> to_longs(const CountSeries& s) {
  std::vector<long> v;
  for (const auto& c : s.coeffs) v.push_back(c.get_si());
  return v;
}

}  // namespace

TEST(ParsePermutation, Notations) {
  EXPECT_EQ(parse_permutation("231"), (Permutation{2, 3, 1}));
  EXPECT_EQ(parse_permutation(""), Permutation{});
  EXPECT_EQ(parse_permutation("5 3 4 1 2"), (Permutation{5, 3, 4, 1, 2}));
  EXPECT_EQ(parse_permutation("5,3, 4,1,2"), (Permutation{5, 3, 4, 1, 2}));
  EXPECT_EQ(parse_permutation("10 9 8 7 6 5 4 3 2 1").size(), 10);
}

TEST(ParsePermutation, Rejects) {
  EXPECT_THROW(parse_permutation("1 2 2"), std::invalid_argument);
  EXPECT_THROW(parse_permutation("1 3"), std::invalid_argument);
  EXPECT_THROW(parse_permutation("1 x 2"), std::invalid_argument);
  EXPECT_THROW(parse_permutation("0"), std::invalid_argument);
  EXPECT_THROW(parse_permutation("1234567891"), std::invalid_argument);
}

TEST(Contains, Examples) {
  EXPECT_TRUE(contains(Permutation{5, 3, 4, 1, 2}, Permutation{3, 2, 1}));
  EXPECT_TRUE(contains(Permutation{5, 3, 4, 1, 2}, Permutation{}));
  EXPECT_TRUE(contains(Permutation{}, Permutation{}));
  EXPECT_FALSE(contains(Permutation{2, 3, 1}, Permutation{3, 1, 2}));
  EXPECT_FALSE(contains(Permutation{1, 2}, Permutation{1, 2, 3}));
}

// Independent check: every subsequence, standardized.
TEST(Contains, MatchesSubsetScan) {
  const auto perms = all_up_to(5);
  for (const auto& pi : perms) {
    const int n = pi.size();
    std::vector<Permutation> subs;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> vals;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) vals.push_back(pi[static_cast<std::size_t>(i)]);
      subs.push_back(Permutation::standardize(vals));
    }
    for (const auto& sigma : all_up_to(4)) {
      const bool expected = std::find(subs.begin(), subs.end(), sigma) != subs.end();
      EXPECT_EQ(contains(pi, sigma), expected) << pi.to_string() << " / " << sigma.to_string();
    }
  }
}

TEST(Contains, PartialOrder) {
  const auto perms = all_up_to(5);
  for (const auto& a : perms) {
    EXPECT_TRUE(contains(a, a));
    for (const auto& b : perms) {
      if (a.size() == b.size() && a != b) {
        EXPECT_FALSE(contains(a, b) && contains(b, a));
      }
    }
  }
  // Transitivity on a sample of triples.
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
  for (int t = 0; t < 20000; ++t) {
    const auto& a = perms[pick(rng)];
    const auto& b = perms[pick(rng)];
    const auto& c = perms[pick(rng)];
    if (contains(a, b) && contains(b, c)) EXPECT_TRUE(contains(a, c));
  }
}

TEST(AvoidsAll, Examples) {
  EXPECT_TRUE(avoids_all(Permutation{3, 2, 1}, PatternSet{Permutation{3, 1, 2}}));
  EXPECT_FALSE(avoids_all(Permutation{1, 2, 3}, PatternSet{Permutation{1, 2}}));
  EXPECT_TRUE(avoids_all(Permutation{}, PatternSet{Permutation{1}, Permutation{2, 1}}));
}

TEST(EnumerateAv, KnownPrefixes) {
  EXPECT_EQ(to_longs(enumerate_av(PatternSet::parse({"312"}), 5)), (std::vector<long>{1, 1, 2, 5, 14, 42}));
  EXPECT_EQ(to_longs(enumerate_av(PatternSet::parse({"4312", "4213"}), 5)),
            (std::vector<long>{1, 1, 2, 6, 22, 90}));
  EXPECT_EQ(enumerate_av(PatternSet::parse({"4123", "4231", "4312"}), 4).at(4), 21);
}

TEST(EnumerateAv, Guard) {
  EXPECT_THROW(enumerate_av(PatternSet::parse({"12"}), 12), std::invalid_argument);
  EXPECT_THROW(enumerate_av(PatternSet::parse({"12"}), 5, 4), std::invalid_argument);
  EXPECT_NO_THROW(enumerate_av(PatternSet::parse({"12"}), 5, 5));
}

TEST(EnumerateAv, MonotoneUnderBasisGrowth) {
  const auto small = PatternSet::parse({"321"});
  const auto big = PatternSet::parse({"321", "2413"});
  const auto a = enumerate_av(small, 7), b = enumerate_av(big, 7);
  for (std::size_t n = 0; n <= 7; ++n) EXPECT_LE(b.at(n), a.at(n));
}

TEST(EnumerateAv, SymmetriesPreserveCounts) {
  std::mt19937 rng(11);
  const auto pool = all_up_to(4);
  std::uniform_int_distribution<std::size_t> pick(1, pool.size() - 1);
  for (int t = 0; t < 12; ++t) {
    std::vector<Permutation> b;
    for (int k = 0; k < 2; ++k) b.push_back(pool[pick(rng)]);
    const PatternSet basis(b);
    const auto base = enumerate_av(basis, 6);
    for (auto kind : {Symmetry::reverse, Symmetry::complement, Symmetry::inverse}) {
      EXPECT_EQ(enumerate_av(symmetry(basis, kind), 6), base) << basis.to_string();
    }
  }
}

TEST(EnumerateAv, ErdosSzekeresFiniteness) {
  for (int k = 1; k <= 3; ++k) {
    std::vector<int> inc(static_cast<std::size_t>(k + 1)), dec(static_cast<std::size_t>(k + 1));
    for (int i = 0; i <= k; ++i) {
      inc[static_cast<std::size_t>(i)] = i + 1;
      dec[static_cast<std::size_t>(i)] = k + 1 - i;
    }
    const PatternSet basis{Permutation(inc), Permutation(dec)};
    const int top = std::min(k * k + 2, 10);
    const auto counts = enumerate_av(basis, top);
    EXPECT_GT(counts.at(static_cast<std::size_t>(k * k)), 0);
    for (int n = k * k + 1; n <= top; ++n) EXPECT_EQ(counts.at(static_cast<std::size_t>(n)), 0);
  }
}

TEST(LeftToRightMaxima, Examples) {
  using V = std::vector<std::pair<int, int>>;
  EXPECT_EQ(left_to_right_maxima(Permutation{5, 3, 4, 1, 2}), (V{{1, 5}}));
  EXPECT_EQ(left_to_right_maxima(Permutation{1, 2, 3}), (V{{1, 1}, {2, 2}, {3, 3}}));
  EXPECT_EQ(left_to_right_maxima(Permutation{2, 3, 1}), (V{{1, 2}, {2, 3}}));
  EXPECT_TRUE(left_to_right_maxima(Permutation{}).empty());
}

TEST(Sums, Examples) {
  EXPECT_EQ(skew_sum(Permutation{1}, Permutation{1, 2}), (Permutation{3, 1, 2}));
  EXPECT_EQ(direct_sum(Permutation{2, 1}, Permutation{1}), (Permutation{2, 1, 3}));
  EXPECT_EQ(direct_sum(Permutation{}, Permutation{2, 3, 1}), (Permutation{2, 3, 1}));
  EXPECT_EQ(skew_sum(Permutation{2, 3, 1}, Permutation{}), (Permutation{2, 3, 1}));
}

TEST(Symmetry, Examples) {
  EXPECT_EQ(reverse(Permutation{2, 3, 1}), (Permutation{1, 3, 2}));
  EXPECT_EQ(complement(Permutation{2, 3, 1}), (Permutation{2, 1, 3}));
  EXPECT_EQ(inverse(Permutation{2, 3, 1}), (Permutation{3, 1, 2}));
}

TEST(Symmetry, Involutions) {
  for (const auto& p : all_up_to(5)) {
    EXPECT_EQ(reverse(reverse(p)), p);
    EXPECT_EQ(complement(complement(p)), p);
    EXPECT_EQ(inverse(inverse(p)), p);
  }
}

TEST(OneSkewBasis, Examples) {
  EXPECT_EQ(one_skew_basis(PatternSet::parse({"12"})), PatternSet::parse({"312"}));
  EXPECT_EQ(one_skew_basis(PatternSet::parse({"21"})), PatternSet::parse({"321"}));
  EXPECT_EQ(one_skew_basis(PatternSet::parse({"123", "231", "312"})),
            PatternSet::parse({"4123", "4231", "4312"}));
}

TEST(PatternSet, DeduplicatesAndNormalizes) {
  const auto b = PatternSet::parse({"12", "1 2", "123", "321"});
  EXPECT_EQ(b.size(), 3u);
  EXPECT_EQ(b.normalized(), PatternSet::parse({"12", "321"}));
  EXPECT_THROW(PatternSet(std::vector<Permutation>{Permutation{}}), std::invalid_argument);
}
