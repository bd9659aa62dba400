#include <gtest/gtest.h>

#include <set>

#include "cmachine/enumerate.hpp"
#include "cmachine/machine.hpp"

using namespace cmachine;

namespace {

std::vector<long> to_longs(const CountSeries& s) {
  std::vector<long> v;
  for (const auto& c : s.coeffs) v.push_back(c.get_si());
  return v;
}

using Op = GenerationOp;

}  // namespace

TEST(LegalActions, DecreasingContainer) {
  const ContainerState st{Permutation{2, 1}, true};
  const auto acts = legal_actions(st, PatternSet::parse({"12"}));
  EXPECT_EQ(acts, (std::vector<Op>{Op::bypass(), Op::pop(), Op::push(0)}));
}

TEST(LegalActions, SchroderContainerHasTwoPushSlots) {
  const ContainerState st{Permutation{1, 2}, true};
  const auto acts = legal_actions(st, PatternSet::parse({"312", "213"}));
  const auto pushes = std::count_if(acts.begin(), acts.end(), [](const Op& o) { return o.kind == Op::Kind::push; });
  EXPECT_EQ(pushes, 2);
}

TEST(LegalActions, EmptyContainer) {
  for (const auto& basis : {PatternSet::parse({"12"}), PatternSet::parse({"21"}), PatternSet::parse({"231", "312"})}) {
    const auto acts = legal_actions(ContainerState{Permutation{}, true}, basis);
    EXPECT_EQ(acts, (std::vector<Op>{Op::bypass(), Op::push(0)}));
  }
}

TEST(LegalActions, CantPopState) {
  const auto acts = legal_actions(ContainerState{Permutation{1}, false}, PatternSet::parse({"21"}));
  EXPECT_EQ(acts, (std::vector<Op>{Op::bypass(), Op::push(1)}));
}

TEST(LegalActions, RejectsStateOutsideClass) {
  EXPECT_THROW(legal_actions(ContainerState{Permutation{1, 2}, true}, PatternSet::parse({"12"})),
               std::invalid_argument);
}

TEST(Apply, Successors) {
  const ContainerState st{Permutation{2, 1}, true};
  EXPECT_EQ(apply(st, Op::pop()), (ContainerState{Permutation{1}, true}));
  EXPECT_EQ(apply(st, Op::push(0)), (ContainerState{Permutation{3, 2, 1}, false}));
  EXPECT_EQ(apply(ContainerState{Permutation{1}, false}, Op::bypass()), (ContainerState{Permutation{1}, true}));
}

TEST(CanonicalSequence, Examples) {
  const auto av12 = PatternSet::parse({"12"});
  EXPECT_EQ(canonical_sequence(Permutation{2, 3, 1}, av12),
            (GenerationSequence{Op::push(0), Op::bypass(), Op::bypass(), Op::pop()}));
  EXPECT_FALSE(canonical_sequence(Permutation{3, 1, 2}, av12).has_value());
  for (const auto& basis : {av12, PatternSet::parse({"21"}), PatternSet::parse({"1"})}) {
    EXPECT_EQ(canonical_sequence(Permutation::identity(5), basis), GenerationSequence(5, Op::bypass()));
  }
  EXPECT_EQ(canonical_sequence(Permutation{}, av12), GenerationSequence{});
}

// Canonical sequences exist exactly on Av(1 (-) B), replay to pi, and are canonical.
TEST(CanonicalSequence, CanonicityAndSkewClass) {
  for (const auto& basis : {PatternSet::parse({"12"}), PatternSet::parse({"21"}), PatternSet::parse({"312", "213"}),
                            PatternSet::parse({"231", "312", "321"}), PatternSet::parse({"123", "231"})}) {
    const ClassMembership cls(basis);
    const auto generated = one_skew_basis(basis);
    for (int n = 0; n <= 6; ++n) {
      for (const auto& pi : list_av(PatternSet{}, n)) {
        const auto seq = canonical_sequence(pi, cls);
        EXPECT_EQ(seq.has_value(), avoids_all(pi, generated)) << pi.to_string() << " " << basis.to_string();
        if (!seq) continue;
        EXPECT_TRUE(is_canonical(*seq)) << to_string(*seq);
        EXPECT_EQ(replay(*seq, cls), pi);
        for (std::size_t i = 1; i < seq->size(); ++i) {
          EXPECT_FALSE((*seq)[i - 1].kind == Op::Kind::push && (*seq)[i].kind == Op::Kind::pop);
        }
      }
    }
  }
}

TEST(IsCanonical, DetectsViolations) {
  EXPECT_FALSE(is_canonical({Op::push(0), Op::pop()}));
  EXPECT_TRUE(is_canonical({Op::bypass()}));
  EXPECT_TRUE(is_canonical({Op::push(0), Op::bypass(), Op::pop()}));
  EXPECT_FALSE(is_canonical({Op::pop()}));
  EXPECT_FALSE(is_canonical({Op::push(1)}));
  EXPECT_FALSE(is_canonical({Op::push(0), Op::bypass(), Op::pop(), Op::push(0)}));
}

TEST(MachineClassCounts, Catalan) {
  EXPECT_EQ(to_longs(machine_class_counts(PatternSet::parse({"21"}), 6)),
            (std::vector<long>{1, 1, 2, 5, 14, 42, 132}));
  EXPECT_EQ(to_longs(machine_class_counts(PatternSet::parse({"12"}), 6)),
            (std::vector<long>{1, 1, 2, 5, 14, 42, 132}));
}

TEST(MachineClassCounts, Schroder) {
  EXPECT_EQ(to_longs(machine_class_counts(PatternSet::parse({"312", "213"}), 5)),
            (std::vector<long>{1, 1, 2, 6, 22, 90}));
}

TEST(MachineClassCounts, MatchesOracle) {
  const auto basis = PatternSet::parse({"123", "231", "312"});
  const auto counts = machine_class_counts(basis, 7);
  EXPECT_EQ(to_longs(counts.prefix(4)), (std::vector<long>{1, 1, 2, 6, 21}));
  EXPECT_EQ(counts, enumerate_av(one_skew_basis(basis), 7));
}

TEST(MachineClassCounts, TrivialMachines) {
  // Av(1) holds nothing: only the identity is generated.
  EXPECT_EQ(to_longs(machine_class_counts(PatternSet::parse({"1"}), 5)), (std::vector<long>{1, 1, 1, 1, 1, 1}));
  // Unrestricted container generates everything.
  EXPECT_EQ(to_longs(machine_class_counts(PatternSet{}, 6)), (std::vector<long>{1, 1, 2, 6, 24, 120, 720}));
}

TEST(MachineClassCounts, FibonacciStrictness) {
  const auto minus = machine_class_counts(PatternSet::parse({"123", "132", "213"}), 7);
  const auto plus = machine_class_counts(PatternSet::parse({"231", "312", "321"}), 7);
  for (std::size_t n = 0; n <= 6; ++n) EXPECT_EQ(minus.at(n), plus.at(n)) << n;
  EXPECT_GT(minus.at(7), plus.at(7));
}

TEST(MachineClassCounts, Budget) {
  EXPECT_THROW(run_machine(PatternSet{}, 7, 100), StateBudgetExceeded);
  try {
    run_machine(PatternSet{}, 7, 100);
  } catch (const StateBudgetExceeded& e) {
    EXPECT_GT(e.states_reached(), 100u);
  }
}

TEST(Transport, Examples) {
  const auto av12 = PatternSet::parse({"12"}), av21 = PatternSet::parse({"21"});
  EXPECT_EQ(transport(Permutation{3, 2, 1}, av12, av21), (Permutation{3, 1, 2}));
  EXPECT_EQ(transport(Permutation{1, 2, 3}, av12, av21), (Permutation{1, 2, 3}));
  EXPECT_EQ(transport(Permutation{2, 3, 1}, av12, av21), (Permutation{2, 3, 1}));
  EXPECT_FALSE(transport(Permutation{3, 1, 2}, av12, av21).has_value());
  // Schroder target: the second push has two legal slots.
  EXPECT_FALSE(transport(Permutation{3, 2, 1}, av12, PatternSet::parse({"312", "213"})).has_value());
}

TEST(Transport, CatalanBijectionPreservesLeftToRightMaxima) {
  const auto av12 = PatternSet::parse({"12"}), av21 = PatternSet::parse({"21"});
  for (int n = 0; n <= 7; ++n) {
    std::set<Permutation> image;
    const auto source = list_av(PatternSet::parse({"312"}), n);
    for (const auto& pi : source) {
      const auto t = transport(pi, av12, av21);
      ASSERT_TRUE(t.has_value()) << pi.to_string();
      EXPECT_TRUE(avoids_all(*t, PatternSet::parse({"321"})));
      EXPECT_EQ(left_to_right_maxima(pi), left_to_right_maxima(*t));
      image.insert(*t);
    }
    EXPECT_EQ(image.size(), source.size());
    EXPECT_EQ(image.size(), list_av(PatternSet::parse({"321"}), n).size());
  }
}
