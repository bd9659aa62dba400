#pragma once

// Generic C-machine semantics. The container is stored as the order
// isomorphism type of its contents: every pushed entry is a new maximum, so the
// labelled values are never needed.

#include <cstddef>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "cmachine/count_series.hpp"
#include "cmachine/permutation.hpp"

namespace cmachine {

struct GenerationOp {
  enum class Kind { bypass, push, pop };

  Kind kind = Kind::bypass;
  int slot = 0;  // insertion position 0..k for a push into a container of size k

  static GenerationOp bypass() { return {Kind::bypass, 0}; }
  static GenerationOp pop() { return {Kind::pop, 0}; }
  static GenerationOp push(int slot) { return {Kind::push, slot}; }

  bool emits() const { return kind != Kind::push; }

  friend bool operator==(const GenerationOp&, const GenerationOp&) = default;

  std::string to_string() const {
    switch (kind) {
      case Kind::bypass:
        return "bypass";
      case Kind::pop:
        return "pop";
      case Kind::push:
        return "push(" + std::to_string(slot) + ")";
    }
    return "?";
  }
};

using GenerationSequence = std::vector<GenerationOp>;

inline std::string to_string(const GenerationSequence& seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out += ", ";
    out += seq[i].to_string();
  }
  return "[" + out + "]";
}

struct ContainerState {
  Permutation content;
  bool can_pop = true;

  friend bool operator==(const ContainerState&, const ContainerState&) = default;
};

class StateBudgetExceeded : public std::runtime_error {
 public:
  explicit StateBudgetExceeded(std::size_t reached)
      : std::runtime_error("state budget exceeded after " + std::to_string(reached) + " states"),
        reached_(reached) {}
  std::size_t states_reached() const { return reached_; }

 private:
  std::size_t reached_;
};

inline constexpr std::size_t kDefaultStateBudget = 10'000'000;

/// CMACHINE_STATE_BUDGET when set to a positive integer, else the default.
inline std::size_t state_budget_from_env() {
  if (const char* env = std::getenv("CMACHINE_STATE_BUDGET")) {
    try {
      const long long v = std::stoll(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return kDefaultStateBudget;
}

namespace detail {

// Container patterns are byte strings of ranks 1..k.
using PatternKey = std::string;

inline PatternKey insert_max(const PatternKey& pat, std::size_t slot) {
  PatternKey out = pat;
  out.insert(out.begin() + static_cast<std::ptrdiff_t>(slot), static_cast<char>(pat.size() + 1));
  return out;
}

inline PatternKey pop_front(const PatternKey& pat) {
  const char removed = pat.front();
  PatternKey out;
  out.reserve(pat.size() - 1);
  for (std::size_t i = 1; i < pat.size(); ++i) {
    const char c = pat[i];
    out.push_back(c > removed ? static_cast<char>(c - 1) : c);
  }
  return out;
}

inline PatternKey key_of(const Permutation& p) {
  PatternKey k;
  for (int v : p) k.push_back(static_cast<char>(v));
  return k;
}

inline Permutation permutation_of(const PatternKey& k) {
  std::vector<int> v;
  for (char c : k) v.push_back(static_cast<unsigned char>(c));
  return Permutation(std::move(v));
}

}  // namespace detail

/// Memoized membership test for container patterns against C = Av(basis).
class ClassMembership {
 public:
  explicit ClassMembership(PatternSet basis) : basis_(std::move(basis)) {}

  const PatternSet& basis() const { return basis_; }

  bool contains(const detail::PatternKey& pat) const {
    auto it = cache_.find(pat);
    if (it != cache_.end()) return it->second;
    std::vector<int> v(pat.begin(), pat.end());
    const bool ok = avoids_all(std::span<const int>(v), basis_);
    cache_.emplace(pat, ok);
    return ok;
  }

  bool contains(const Permutation& p) const { return contains(detail::key_of(p)); }

  /// Standardizes arbitrary distinct values first.
  bool contains_values(const std::vector<int>& values) const {
    return contains(Permutation::standardize(values));
  }

 private:
  PatternSet basis_;
  mutable std::unordered_map<detail::PatternKey, bool> cache_;
};

/// Legal canonical actions from `state`: bypass, then pop (if allowed), then pushes by slot.
inline std::vector<GenerationOp> legal_actions(const ContainerState& state, const ClassMembership& cls) {
  if (!cls.contains(state.content))
    throw std::invalid_argument("container " + state.content.to_string() + " is not in Av" +
                                cls.basis().to_string());
  std::vector<GenerationOp> out{GenerationOp::bypass()};
  if (!state.content.empty() && state.can_pop) out.push_back(GenerationOp::pop());
  const auto key = detail::key_of(state.content);
  for (std::size_t slot = 0; slot <= key.size(); ++slot) {
    if (cls.contains(detail::insert_max(key, slot))) out.push_back(GenerationOp::push(static_cast<int>(slot)));
  }
  return out;
}

inline std::vector<GenerationOp> legal_actions(const ContainerState& state, const PatternSet& basis) {
  return legal_actions(state, ClassMembership(basis));
}

/// Successor state; does not check class membership.
inline ContainerState apply(const ContainerState& state, const GenerationOp& op) {
  const auto key = detail::key_of(state.content);
  switch (op.kind) {
    case GenerationOp::Kind::bypass:
      return {state.content, true};
    case GenerationOp::Kind::pop:
      if (key.empty()) throw std::invalid_argument("pop from an empty container");
      return {detail::permutation_of(detail::pop_front(key)), true};
    case GenerationOp::Kind::push:
      if (op.slot < 0 || op.slot > static_cast<int>(key.size()))
        throw std::invalid_argument("push slot out of range");
      return {detail::permutation_of(detail::insert_max(key, static_cast<std::size_t>(op.slot))), false};
  }
  return state;
}

/// The unique sequence obeying pop-whenever-possible and LR-maxima-bypass that
/// generates `pi`, or nullopt when some forced push leaves the class.
inline std::optional<GenerationSequence> canonical_sequence(const Permutation& pi, const ClassMembership& cls) {
  const int n = pi.size();
  std::vector<int> pos(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(pi[static_cast<std::size_t>(i)])] = i;

  GenerationSequence ops;
  std::vector<int> container;  // actual values, left to right
  std::size_t next = 0;        // index into pi of the next output
  bool can_pop = true;

  auto drain = [&]() -> bool {
    while (!container.empty() && next < static_cast<std::size_t>(n) && container.front() == pi[next]) {
      if (!can_pop) return false;
      ops.push_back(GenerationOp::pop());
      container.erase(container.begin());
      ++next;
      can_pop = true;
    }
    return true;
  };

  for (int input = 1; input <= n; ++input) {
    if (!drain()) return std::nullopt;
    if (pi[next] == input) {
      ops.push_back(GenerationOp::bypass());
      ++next;
      can_pop = true;
      continue;
    }
    // The next output has already entered the machine but is not leftmost.
    if (pi[next] < input) return std::nullopt;
    std::size_t slot = 0;
    while (slot < container.size() &&
           pos[static_cast<std::size_t>(container[slot])] < pos[static_cast<std::size_t>(input)])
      ++slot;
    container.insert(container.begin() + static_cast<std::ptrdiff_t>(slot), input);
    if (!cls.contains_values(container)) return std::nullopt;
    ops.push_back(GenerationOp::push(static_cast<int>(slot)));
    can_pop = false;
  }
  if (!drain() || !container.empty()) return std::nullopt;
  return ops;
}

inline std::optional<GenerationSequence> canonical_sequence(const Permutation& pi, const PatternSet& basis) {
  return canonical_sequence(pi, ClassMembership(basis));
}

/// Runs an explicit sequence on the machine; nullopt if an operation is illegal
/// or the container is not empty at the end.
inline std::optional<Permutation> replay(const GenerationSequence& seq, const ClassMembership& cls) {
  std::vector<int> container, out;
  int input = 1;
  for (const auto& op : seq) {
    switch (op.kind) {
      case GenerationOp::Kind::bypass:
        out.push_back(input++);
        break;
      case GenerationOp::Kind::pop:
        if (container.empty()) return std::nullopt;
        out.push_back(container.front());
        container.erase(container.begin());
        break;
      case GenerationOp::Kind::push:
        if (op.slot < 0 || op.slot > static_cast<int>(container.size())) return std::nullopt;
        container.insert(container.begin() + op.slot, input++);
        if (!cls.contains_values(container)) return std::nullopt;
        break;
    }
  }
  if (!container.empty()) return std::nullopt;
  return Permutation(std::move(out));
}

/// Both uniqueness conventions: no pop directly after a push, and every
/// left-to-right maximum of the output is a bypass.
inline bool is_canonical(const GenerationSequence& seq) {
  std::vector<int> container;
  int input = 1, best = 0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const auto& op = seq[i];
    if (op.kind == GenerationOp::Kind::pop && i > 0 && seq[i - 1].kind == GenerationOp::Kind::push) return false;
    switch (op.kind) {
      case GenerationOp::Kind::bypass:
        best = input++;
        break;
      case GenerationOp::Kind::pop:
        if (container.empty()) return false;
        if (container.front() > best) return false;
        container.erase(container.begin());
        break;
      case GenerationOp::Kind::push:
        if (op.slot < 0 || op.slot > static_cast<int>(container.size())) return false;
        container.insert(container.begin() + op.slot, input++);
        break;
    }
  }
  return container.empty();
}

/// Replays the bypass/push/pop skeleton of `pi`'s canonical sequence in the
/// target machine. nullopt when `pi` is not generated by the source machine or
/// some push does not have exactly one legal slot in the target.
inline std::optional<Permutation> transport(const Permutation& pi, const PatternSet& from, const PatternSet& to) {
  const auto seq = canonical_sequence(pi, from);
  if (!seq) return std::nullopt;
  const ClassMembership target(to);
  std::vector<int> container, out;
  int input = 1;
  for (const auto& op : *seq) {
    switch (op.kind) {
      case GenerationOp::Kind::bypass:
        out.push_back(input++);
        break;
      case GenerationOp::Kind::pop:
        if (container.empty()) return std::nullopt;
        out.push_back(container.front());
        container.erase(container.begin());
        break;
      case GenerationOp::Kind::push: {
        int chosen = -1;
        for (std::size_t slot = 0; slot <= container.size(); ++slot) {
          auto trial = container;
          trial.insert(trial.begin() + static_cast<std::ptrdiff_t>(slot), input);
          if (target.contains_values(trial)) {
            if (chosen >= 0) return std::nullopt;
            chosen = static_cast<int>(slot);
          }
        }
        if (chosen < 0) return std::nullopt;
        container.insert(container.begin() + chosen, input++);
        break;
      }
    }
  }
  if (!container.empty()) return std::nullopt;
  return Permutation(std::move(out));
}

/// Output of the generic level-by-level automaton run.
struct MachineRun {
  CountSeries counts;
  std::vector<BigInt> level_mass;  // sum over live states at each output level
  std::size_t states_visited = 0;
};

/// Counts the class generated by the Av(basis)-machine by dynamic programming
/// over (container pattern, can_pop) states, one output level at a time.
/// Only states with (outputs + container size) <= n_max are kept; that
/// quantity never decreases along a run, so the pruning is exact.
inline MachineRun run_machine(const PatternSet& basis, int n_max, std::size_t budget = kDefaultStateBudget) {
  if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");
  using detail::PatternKey;
  const ClassMembership cls(basis);
  // buckets[s]: states whose container has size s; key = pattern + flag byte.
  using Bucket = std::unordered_map<PatternKey, BigInt>;
  constexpr char kCanPop = 'T', kCantPop = 'F';

  MachineRun run;
  std::vector<Bucket> cur(static_cast<std::size_t>(n_max) + 1);
  cur[0][PatternKey(1, kCanPop)] = 1;

  auto saturate = [&](std::vector<Bucket>& buckets, int max_size) {
    for (int s = 0; s < max_size; ++s) {
      for (const auto& [key, value] : buckets[static_cast<std::size_t>(s)]) {
        const PatternKey pat = key.substr(0, key.size() - 1);
        for (std::size_t slot = 0; slot <= pat.size(); ++slot) {
          PatternKey grown = detail::insert_max(pat, slot);
          if (!cls.contains(grown)) continue;
          grown.push_back(kCantPop);
          buckets[static_cast<std::size_t>(s) + 1][grown] += value;
        }
      }
    }
  };

  saturate(cur, n_max);
  for (int level = 0; level <= n_max; ++level) {
    const int max_size = n_max - level;
    BigInt mass = 0;
    for (int s = 0; s <= max_size; ++s) {
      run.states_visited += cur[static_cast<std::size_t>(s)].size();
      for (const auto& kv : cur[static_cast<std::size_t>(s)]) mass += kv.second;
    }
    if (run.states_visited > budget) throw StateBudgetExceeded(run.states_visited);
    run.level_mass.push_back(mass);
    const auto it = cur[0].find(PatternKey(1, kCanPop));
    run.counts.coeffs.push_back(it == cur[0].end() ? BigInt(0) : it->second);
    if (level == n_max) break;

    std::vector<Bucket> next(static_cast<std::size_t>(max_size));
    for (int s = 0; s <= max_size; ++s) {
      for (const auto& [key, value] : cur[static_cast<std::size_t>(s)]) {
        PatternKey pat = key.substr(0, key.size() - 1);
        if (s < max_size) next[static_cast<std::size_t>(s)][pat + kCanPop] += value;
        if (s > 0 && key.back() == kCanPop) {
          next[static_cast<std::size_t>(s) - 1][detail::pop_front(pat) + kCanPop] += value;
        }
      }
    }
    saturate(next, max_size - 1);
    cur = std::move(next);
  }
  return run;
}

inline CountSeries machine_class_counts(const PatternSet& basis, int n_max,
                                        std::size_t budget = kDefaultStateBudget) {
  return run_machine(basis, n_max, budget).counts;
}

}  // namespace cmachine
