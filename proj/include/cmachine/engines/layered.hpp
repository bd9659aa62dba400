#pragma once

// Engines whose container is described by a few entry counts (a, b[, c]) and
// a can-pop flag. Each keeps one dense array per flag, laid out by container
// size, and advances a level in place:
//   size k, ascending:  T[x] <- T[x] + F[x] + (pops landing in x)   (pops read size k+1, still old)
//                       F[y] <- (pushes landing in y)               (pushes read size k-1, already new)
// Only sizes <= n_max - level are live.

#include <array>
#include <string>
#include <vector>

#include "cmachine/engines/engine.hpp"

namespace cmachine::engines {

/// (a, b) with a + b <= n, grouped by size.
struct Grid2 {
  static constexpr int kDims = 2;
  int n = 0;
  static std::size_t base(int k) { return static_cast<std::size_t>(k) * (k + 1) / 2; }
  std::size_t at(int a, int b) const { return base(a + b) + static_cast<std::size_t>(a); }
  std::size_t size() const { return base(n + 1); }
  template <class Fn>
  void for_size(int k, Fn&& fn) const {
    for (int a = 0; a <= k; ++a) fn(at(a, k - a), std::array<int, 2>{a, k - a});
  }
};

/// (a, b, c) with a + b + c <= n, grouped by size.
struct Grid3 {
  static constexpr int kDims = 3;
  int n = 0;
  static std::size_t base(int k) { return static_cast<std::size_t>(k) * (k + 1) * (k + 2) / 6; }
  std::size_t at(int a, int b, int c) const {
    const int k = a + b + c;
    return base(k) + static_cast<std::size_t>(a) * (2 * k + 3 - a) / 2 + static_cast<std::size_t>(b);
  }
  std::size_t size() const { return base(n + 1); }
  template <class Fn>
  void for_size(int k, Fn&& fn) const {
    for (int a = 0; a <= k; ++a)
      for (int b = 0; a + b <= k; ++b) fn(at(a, b, k - a - b), std::array<int, 3>{a, b, k - a - b});
  }
};

template <class Grid>
class LayeredEngine : public Engine {
 public:
  void start(int n_max) override {
    n_max_ = n_max;
    level_ = 0;
    grid_.n = n_max;
    t_.assign(grid_.size(), BigInt(0));
    f_.assign(grid_.size(), BigInt(0));
    t_[0] = 1;
    for (int k = 1; k <= n_max; ++k) push_size(k);
  }

  void advance() override {
    ++level_;
    const int live = n_max_ - level_;
    for (int k = 0; k <= live; ++k) {
      emit_size(k);
      if (k > 0) push_size(k);
    }
    // Size live+1 can no longer reach the empty container in time.
    grid_.for_size(live + 1, [&](std::size_t i, const auto&) {
      BigInt().swap(t_[i]);
      BigInt().swap(f_[i]);
    });
  }

  int level() const override { return level_; }
  int n_max() const override { return n_max_; }
  BigInt term() const override { return t_[0]; }

  std::optional<BigInt> mass() const override {
    BigInt total = 0;
    for (int k = 0; k <= n_max_ - level_; ++k)
      grid_.for_size(k, [&](std::size_t i, const auto&) { total += t_[i] + f_[i]; });
    return total;
  }

  // key = coordinates followed by the flag (1 = can pop).
  std::vector<StateEntry> export_states() const override {
    std::vector<StateEntry> out;
    for (int k = 0; k <= n_max_ - level_; ++k) {
      grid_.for_size(k, [&](std::size_t i, const auto& xs) {
        for (int flag : {1, 0}) {
          const BigInt& v = flag ? t_[i] : f_[i];
          if (v == 0) continue;
          StateEntry e;
          e.key.assign(xs.begin(), xs.end());
          e.key.push_back(flag);
          e.count = v;
          out.push_back(std::move(e));
        }
      });
    }
    return out;
  }

  void import_states(int level, const std::vector<StateEntry>& states) override {
    std::fill(t_.begin(), t_.end(), BigInt(0));
    std::fill(f_.begin(), f_.end(), BigInt(0));
    level_ = level;
    for (const auto& e : states) {
      if (e.key.size() != Grid::kDims + 1) throw std::runtime_error("checkpoint state has wrong arity");
      int total = 0;
      for (int d = 0; d < Grid::kDims; ++d) total += e.key[static_cast<std::size_t>(d)];
      if (total > n_max_ - level) throw std::runtime_error("checkpoint state outside live range");
      std::size_t i;
      if constexpr (Grid::kDims == 2) {
        i = grid_.at(e.key[0], e.key[1]);
      } else {
        i = grid_.at(e.key[0], e.key[1], e.key[2]);
      }
      (e.key.back() ? t_[i] : f_[i]) = e.count;
    }
  }

 protected:
  virtual void emit_size(int k) = 0;
  virtual void push_size(int k) = 0;

  Grid grid_;
  std::vector<BigInt> t_, f_;
  int n_max_ = 0, level_ = 0;
};

/// Av(4123,4231,4312), the Av(123,231,312)-machine. States (a, b, P):
/// a = lower decreasing run, b = upper decreasing run to its right.
class Av4123_4231_4312 final : public LayeredEngine<Grid2> {
 public:
  std::string name() const override { return "av4123-4231-4312"; }

 protected:
  void emit_size(int k) override {
    for (int a = (k == 0 ? 0 : 1); a <= k; ++a) {
      const int b = k - a;
      BigInt& t = t_[grid_.at(a, b)];
      t += f_[grid_.at(a, b)];
      t += t_[grid_.at(a + 1, b)];  // pop an a entry
      if (b == 0 && k >= 1) t += t_[grid_.at(1, k)];  // last a popped: b entries drop to a
    }
  }
  void push_size(int k) override {
    for (int a = 1; a <= k; ++a) {
      const int b = k - a;
      const std::size_t src = b == 0 ? grid_.at(a - 1, 0) : grid_.at(a, b - 1);
      f_[grid_.at(a, b)] = t_[src] + f_[src];
    }
  }
};

/// Av(4123,4231), the Av(123,231)-machine. Container = [c][a][b]: c high and
/// leftmost (used as a stack), a low, b in between; all three decreasing.
class Av4123_4231 final : public LayeredEngine<Grid3> {
 public:
  std::string name() const override { return "av4123-4231"; }

 protected:
  void emit_size(int k) override {
    if (k == 0) {
      t_[0] += t_[grid_.at(1, 0, 0)];
      return;
    }
    for (int a = 1; a <= k; ++a) {
      for (int b = 0; a + b <= k; ++b) {
        const int c = k - a - b;
        if (b == 0 && c > 0) continue;
        const std::size_t i = grid_.at(a, b, c);
        BigInt& t = t_[i];
        t += f_[i];
        if (c > 0) {
          t += t_[grid_.at(a, b, c + 1)];
        } else if (b > 0) {
          t += t_[grid_.at(a, b, 1)];
          t += t_[grid_.at(a + 1, b, 0)];
        } else {
          t += t_[grid_.at(a + 1, 0, 0)];
          t += t_[grid_.at(1, a, 0)];
        }
      }
    }
  }
  void push_size(int k) override {
    for (int a = 1; a <= k; ++a) {
      for (int b = 0; a + b <= k; ++b) {
        const int c = k - a - b;
        if (b == 0 && c > 0) continue;
        std::size_t src;
        if (c > 0) {
          src = grid_.at(a, b, c - 1);
        } else if (b > 0) {
          src = grid_.at(a, b - 1, 0);
        } else {
          src = grid_.at(a - 1, 0, 0);
        }
        f_[grid_.at(a, b, c)] = t_[src] + f_[src];
      }
    }
  }
};

/// Av(4123,4312), the Av(123,312)-machine. Container = [b][c][a]: b middle,
/// c high, a low, each decreasing; b > 0 exactly when c > 0.
class Av4123_4312 final : public LayeredEngine<Grid3> {
 public:
  std::string name() const override { return "av4123-4312"; }

 protected:
  void emit_size(int k) override {
    for (int a = 0; a <= k; ++a) {
      for (int b = 0; a + b <= k; ++b) {
        const int c = k - a - b;
        if ((b == 0) != (c == 0)) continue;
        const std::size_t i = grid_.at(a, b, c);
        BigInt& t = t_[i];
        t += f_[i];
        if (b > 0) {
          t += t_[grid_.at(a, b + 1, c)];
        } else {
          t += t_[grid_.at(a + 1, 0, 0)];
          // Popping the last b merges c into a.
          for (int cc = 1; cc <= a; ++cc) t += t_[grid_.at(a - cc, 1, cc)];
        }
      }
    }
  }
  void push_size(int k) override {
    for (int a = 0; a <= k; ++a) {
      for (int b = 0; a + b <= k; ++b) {
        const int c = k - a - b;
        if ((b == 0) != (c == 0)) continue;
        std::size_t src;
        if (b == 0) {
          src = grid_.at(a - 1, 0, 0);
        } else if (c == 1) {
          src = grid_.at(a + b, 0, 0);  // split an all-a container
        } else {
          src = grid_.at(a, b, c - 1);
        }
        f_[grid_.at(a, b, c)] = t_[src] + f_[src];
      }
    }
  }
};

/// Av(4231,4321), the Av(231,321)-machine. a = rightmost increasing run,
/// b = rightmost 1(-)(12..l) component (so b = 0 or b >= 2), c = the rest.
class Av4231_4321 final : public LayeredEngine<Grid3> {
 public:
  std::string name() const override { return "av4231-4321"; }

 protected:
  static bool valid(int b, int c) { return b == 0 ? c == 0 : b >= 2; }

  void emit_size(int k) override {
    for (int a = 0; a <= k; ++a) {
      for (int b = 0; a + b <= k; ++b) {
        const int c = k - a - b;
        if (!valid(b, c)) continue;
        const std::size_t i = grid_.at(a, b, c);
        BigInt& t = t_[i];
        t += f_[i];
        if (b > 0) {
          t += t_[grid_.at(a, b, c + 1)];
        } else {
          t += t_[grid_.at(a + 1, 0, 0)];
          // Popping the top of the b component leaves one increasing run.
          for (int bb = 2; bb <= a + 1; ++bb) t += t_[grid_.at(a + 1 - bb, bb, 0)];
        }
      }
    }
  }

  void push_size(int k) override {
    // New maximum inside the a run: (a', s = b + c) -> (0, a' - i + 1, s + i), 0 <= i < a'.
    // Group sources of size k-1 by a', then each target is a suffix sum.
    std::vector<BigInt> by_a(static_cast<std::size_t>(k) + 1);
    for (int a = 1; a <= k - 1; ++a) {
      BigInt& m = by_a[static_cast<std::size_t>(a)];
      for (int b = 0; a + b <= k - 1; ++b) {
        const int c = k - 1 - a - b;
        if (!valid(b, c)) continue;
        const std::size_t i = grid_.at(a, b, c);
        m += t_[i];
        m += f_[i];
      }
    }
    BigInt suffix = 0;
    for (int bb = k; bb >= 2; --bb) {
      suffix += by_a[static_cast<std::size_t>(bb - 1)];
      f_[grid_.at(0, bb, k - bb)] = suffix;
    }
    // New maximum at the right end extends the a run.
    for (int a = 1; a <= k; ++a) {
      for (int b = 0; a + b <= k; ++b) {
        const int c = k - a - b;
        if (!valid(b, c)) continue;
        const std::size_t src = grid_.at(a - 1, b, c);
        f_[grid_.at(a, b, c)] = t_[src] + f_[src];
      }
    }
  }
};

}  // namespace cmachine::engines
