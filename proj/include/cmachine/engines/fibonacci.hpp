#pragma once

// The two Fibonacci machines.
//
// fib-plus: the Av(231,312,321)-machine as a five-state automaton. States are
// E (empty), S_p/S_n (rightmost layer holds one entry), D_p/D_n (rightmost
// layer holds two), with u = entries outside the rightmost layer.
//
// fib-minus: the Av(123,132,213)-machine through its unambiguous grammar,
// one coefficient of each nonterminal series per level.

#include <array>
#include <string>
#include <vector>

#include "cmachine/engines/engine.hpp"

namespace cmachine::engines {

class FibPlus final : public Engine {
 public:
  enum Tag { kSp = 0, kSn = 1, kDp = 2, kDn = 3 };

  std::string name() const override { return "fib-plus"; }

  void start(int n_max) override {
    n_max_ = n_max;
    level_ = 0;
    e_ = 1;
    for (auto& v : s_) v.assign(static_cast<std::size_t>(n_max) + 1, BigInt(0));
    saturate(n_max);
  }

  void advance() override {
    ++level_;
    const int live = n_max_ - level_;
    const std::size_t top = static_cast<std::size_t>(n_max_) + 1;
    std::array<std::vector<BigInt>, 4> next;
    for (auto& v : next) v.assign(top, BigInt(0));
    BigInt e = e_ + s_[kSp][0];
    for (int u = 0; u + 1 <= live; ++u) {
      const std::size_t i = static_cast<std::size_t>(u);
      next[kSp][i] = s_[kSp][i] + s_[kSn][i] + s_[kSp][i + 1];
      if (u == 0) next[kSp][i] += s_[kDp][0];
    }
    for (int u = 0; u + 2 <= live; ++u) {
      const std::size_t i = static_cast<std::size_t>(u);
      next[kDp][i] = s_[kDp][i] + s_[kDn][i] + s_[kDp][i + 1];
    }
    e_ = std::move(e);
    s_ = std::move(next);
    saturate(live);
  }

  int level() const override { return level_; }
  int n_max() const override { return n_max_; }
  BigInt term() const override { return e_; }

  std::optional<BigInt> mass() const override {
    BigInt total = e_;
    for (const auto& v : s_)
      for (const auto& x : v) total += x;
    return total;
  }

  // key = {tag, u}; E is tag -1.
  std::vector<StateEntry> export_states() const override {
    std::vector<StateEntry> out;
    if (e_ != 0) out.push_back({{-1, 0}, e_});
    for (int tag = 0; tag < 4; ++tag)
      for (std::size_t u = 0; u < s_[static_cast<std::size_t>(tag)].size(); ++u)
        if (s_[static_cast<std::size_t>(tag)][u] != 0)
          out.push_back({{tag, static_cast<int>(u)}, s_[static_cast<std::size_t>(tag)][u]});
    return out;
  }

  void import_states(int level, const std::vector<StateEntry>& states) override {
    level_ = level;
    e_ = 0;
    for (auto& v : s_) std::fill(v.begin(), v.end(), BigInt(0));
    for (const auto& st : states) {
      if (st.key.size() != 2 || st.key[0] < -1 || st.key[0] > 3 || st.key[1] < 0 || st.key[1] > n_max_)
        throw std::runtime_error("bad fib-plus checkpoint state");
      if (st.key[0] == -1) {
        e_ = st.count;
      } else {
        s_[static_cast<std::size_t>(st.key[0])][static_cast<std::size_t>(st.key[1])] = st.count;
      }
    }
  }

 private:
  // Pushes, by container size: S at u has size u+1, D at u has size u+2.
  void saturate(int live) {
    auto& sp = s_[kSp];
    auto& sn = s_[kSn];
    auto& dp = s_[kDp];
    auto& dn = s_[kDn];
    for (int size = 1; size <= live; ++size) {
      const std::size_t u = static_cast<std::size_t>(size - 1);
      // S_n at u: from E, from S at u-1 (new one-entry layer), from D at u-2.
      BigInt v = size == 1 ? e_ : BigInt(0);
      if (u >= 1) v += sn[u - 1] + sp[u - 1];
      if (u >= 2) v += dn[u - 2] + dp[u - 2];
      sn[u] = std::move(v);
      // D_n at size-2: widen the one-entry layer of S at the same u.
      if (size >= 2) dn[u - 1] = sn[u - 1] + sp[u - 1];
    }
  }

  int n_max_ = 0, level_ = 0;
  BigInt e_;
  std::array<std::vector<BigInt>, 4> s_;
};

class FibMinus final : public Engine {
 public:
  // s, w_p, w_n, r_p, r_n
  static constexpr std::size_t kSeries = 5;

  std::string name() const override { return "fib-minus"; }

  void start(int n_max) override {
    n_max_ = n_max;
    for (auto& v : g_) v.clear();
    // Constant terms: s, w_p, r_p contain the empty word.
    g_[0].push_back(1);
    g_[1].push_back(1);
    g_[2].push_back(0);
    g_[3].push_back(1);
    g_[4].push_back(0);
  }

  void advance() override {
    const std::size_t n = g_[0].size();
    auto conv = [&](const std::vector<BigInt>& p, const std::vector<BigInt>& q) {
      BigInt acc = 0;
      for (std::size_t i = 0; i < n; ++i) acc += p[i] * q[n - 1 - i];
      return acc;
    };
    const auto &s = g_[0], &wp = g_[1], &wn = g_[2], &rp = g_[3], &rn = g_[4];
    // [x^n] of each right-hand side; every product carries one factor x.
    BigInt ns = s[n - 1] + conv(wn, s);
    BigInt nwp = wp[n - 1] + conv(wn, wp) + conv(rn, wp);
    BigInt nwn = wp[n - 1] + conv(wn, wp) + conv(rn, wp);
    BigInt nrp = rp[n - 1] + conv(wn, rp);
    BigInt nrn = rp[n - 1] + conv(wn, rp);
    g_[0].push_back(std::move(ns));
    g_[1].push_back(std::move(nwp));
    g_[2].push_back(std::move(nwn));
    g_[3].push_back(std::move(nrp));
    g_[4].push_back(std::move(nrn));
  }

  int level() const override { return static_cast<int>(g_[0].size()) - 1; }
  int n_max() const override { return n_max_; }
  BigInt term() const override { return g_[0].back(); }

  // key = {series, power}
  std::vector<StateEntry> export_states() const override {
    std::vector<StateEntry> out;
    for (std::size_t k = 0; k < kSeries; ++k)
      for (std::size_t i = 0; i < g_[k].size(); ++i)
        out.push_back({{static_cast<int>(k), static_cast<int>(i)}, g_[k][i]});
    return out;
  }

  void import_states(int level, const std::vector<StateEntry>& states) override {
    for (auto& v : g_) v.assign(static_cast<std::size_t>(level) + 1, BigInt(0));
    for (const auto& st : states) {
      if (st.key.size() != 2 || st.key[0] < 0 || st.key[0] >= static_cast<int>(kSeries) || st.key[1] < 0 ||
          st.key[1] > level)
        throw std::runtime_error("bad fib-minus checkpoint state");
      g_[static_cast<std::size_t>(st.key[0])][static_cast<std::size_t>(st.key[1])] = st.count;
    }
  }

 private:
  int n_max_ = 0;
  std::array<std::vector<BigInt>, kSeries> g_;
};

}  // namespace cmachine::engines
