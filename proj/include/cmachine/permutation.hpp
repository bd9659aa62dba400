#pragma once

// Permutations in one-line notation, classical pattern containment and the
// elementary operations on permutation classes.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cmachine {

/// A rearrangement of 1..n. The empty permutation is legal.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
    validate();
  }

  Permutation(std::initializer_list<int> entries) : entries_(entries) { validate(); }

  static Permutation identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
    return Permutation(std::move(v));
  }

  /// Order-isomorphic standardization of arbitrary distinct values.
  template <class Range>
  static Permutation standardize(const Range& values) {
    std::vector<int> vals(std::begin(values), std::end(values));
    std::vector<std::size_t> idx(vals.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t l, std::size_t r) { return vals[l] < vals[r]; });
    std::vector<int> out(vals.size());
    for (std::size_t r = 0; r < idx.size(); ++r) out[idx[r]] = static_cast<int>(r) + 1;
    return Permutation(std::move(out));
  }

  int size() const { return static_cast<int>(entries_.size()); }
  bool empty() const { return entries_.empty(); }

  /// Zero-based access; the value is a rank in 1..n.
  int operator[](std::size_t i) const { return entries_[i]; }
  std::span<const int> entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& l, const Permutation& r) {
    if (l.size() != r.size()) return l.size() <=> r.size();
    return l.entries_ <=> r.entries_;
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(entries_[i]);
    }
    return out;
  }

 private:
  void validate() const {
    std::vector<bool> seen(entries_.size() + 1, false);
    for (int v : entries_) {
      if (v < 1 || v > static_cast<int>(entries_.size()))
        throw std::invalid_argument("permutation value out of range: " + std::to_string(v));
      if (seen[static_cast<std::size_t>(v)])
        throw std::invalid_argument("repeated permutation value: " + std::to_string(v));
      seen[static_cast<std::size_t>(v)] = true;
    }
  }

  std::vector<int> entries_;
};

/// Accepts "5 3 4 1 2", "5,3,4,1,2" or, for n <= 9, the digit string "53412".
inline Permutation parse_permutation(std::string_view text) {
  std::vector<int> values;
  bool has_separator = false;
  for (char ch : text) {
    if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) has_separator = true;
  }
  std::string token;
  auto flush = [&]() {
    if (token.empty()) return;
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(token, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed permutation token: '" + token + "'");
    }
    if (pos != token.size()) throw std::invalid_argument("malformed permutation token: '" + token + "'");
    values.push_back(v);
    token.clear();
  };
  for (char ch : text) {
    if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
      flush();
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      if (has_separator) {
        token += ch;
      } else {
        values.push_back(ch - '0');
      }
    } else {
      throw std::invalid_argument(std::string("malformed permutation token: '") + ch + "'");
    }
  }
  flush();
  if (!has_separator && values.size() > 9)
    throw std::invalid_argument("digit-string notation is limited to n <= 9; separate entries with spaces");
  return Permutation(std::move(values));
}

namespace detail {

// For each pattern position j, the pattern positions (among 0..j-1) holding
// the nearest smaller and nearest larger values; -1 when absent.
struct PatternBounds {
  std::vector<int> below;
  std::vector<int> above;
};

inline PatternBounds pattern_bounds(const Permutation& sigma) {
  const int k = sigma.size();
  PatternBounds pb{std::vector<int>(static_cast<std::size_t>(k), -1),
                   std::vector<int>(static_cast<std::size_t>(k), -1)};
  for (int j = 0; j < k; ++j) {
    const int v = sigma[static_cast<std::size_t>(j)];
    int lo = 0, hi = k + 1;
    for (int i = 0; i < j; ++i) {
      const int w = sigma[static_cast<std::size_t>(i)];
      if (w < v && w > lo) {
        lo = w;
        pb.below[static_cast<std::size_t>(j)] = i;
      }
      if (w > v && w < hi) {
        hi = w;
        pb.above[static_cast<std::size_t>(j)] = i;
      }
    }
  }
  return pb;
}

inline bool embed(std::span<const int> pi, const Permutation& sigma, const PatternBounds& pb,
                  std::vector<int>& chosen, int next_pos, int j) {
  const int k = sigma.size();
  const int n = static_cast<int>(pi.size());
  if (j == k) return true;
  const int lo_idx = pb.below[static_cast<std::size_t>(j)];
  const int hi_idx = pb.above[static_cast<std::size_t>(j)];
  const int lo = lo_idx < 0 ? 0 : chosen[static_cast<std::size_t>(lo_idx)];
  const int hi = hi_idx < 0 ? n + 1 : chosen[static_cast<std::size_t>(hi_idx)];
  // Leave room for the remaining k-j-1 pattern entries.
  for (int p = next_pos; p <= n - (k - j); ++p) {
    const int v = pi[static_cast<std::size_t>(p)];
    if (v <= lo || v >= hi) continue;
    chosen[static_cast<std::size_t>(j)] = v;
    if (embed(pi, sigma, pb, chosen, p + 1, j + 1)) return true;
  }
  return false;
}

}  // namespace detail

/// True iff some subsequence of `pi` is order isomorphic to `sigma`.
inline bool contains(std::span<const int> pi, const Permutation& sigma) {
  if (sigma.size() > static_cast<int>(pi.size())) return false;
  if (sigma.empty()) return true;
  const auto pb = detail::pattern_bounds(sigma);
  std::vector<int> chosen(static_cast<std::size_t>(sigma.size()));
  return detail::embed(pi, sigma, pb, chosen, 0, 0);
}

inline bool contains(const Permutation& pi, const Permutation& sigma) {
  return contains(pi.entries(), sigma);
}

/// A finite set of nonempty patterns, kept sorted by (length, entries) without duplicates.
/// Not forced to be an antichain; see `normalized()`.
class PatternSet {
 public:
  PatternSet() = default;

  explicit PatternSet(std::vector<Permutation> patterns) : patterns_(std::move(patterns)) {
    for (const auto& p : patterns_) {
      if (p.empty()) throw std::invalid_argument("pattern sets may not contain the empty permutation");
    }
    std::sort(patterns_.begin(), patterns_.end());
    patterns_.erase(std::unique(patterns_.begin(), patterns_.end()), patterns_.end());
  }

  PatternSet(std::initializer_list<Permutation> patterns)
      : PatternSet(std::vector<Permutation>(patterns)) {}

  /// Parses whitespace/comma notation per pattern, e.g. {"1 2", "312"}.
  static PatternSet parse(const std::vector<std::string>& texts) {
    std::vector<Permutation> ps;
    ps.reserve(texts.size());
    for (const auto& t : texts) ps.push_back(parse_permutation(t));
    return PatternSet(std::move(ps));
  }

  std::size_t size() const { return patterns_.size(); }
  bool empty() const { return patterns_.empty(); }
  auto begin() const { return patterns_.begin(); }
  auto end() const { return patterns_.end(); }
  const std::vector<Permutation>& patterns() const { return patterns_; }

  int max_length() const { return patterns_.empty() ? 0 : patterns_.back().size(); }

  /// The basis of Av(this): drop every pattern that contains another member.
  PatternSet normalized() const {
    std::vector<Permutation> keep;
    for (const auto& p : patterns_) {
      bool redundant = false;
      for (const auto& q : patterns_) {
        if (q != p && q.size() <= p.size() && contains(p, q)) {
          redundant = true;
          break;
        }
      }
      if (!redundant) keep.push_back(p);
    }
    return PatternSet(std::move(keep));
  }

  friend bool operator==(const PatternSet&, const PatternSet&) = default;

  std::string to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < patterns_.size(); ++i) {
      if (i) out += ", ";
      out += patterns_[i].to_string();
    }
    return out + "}";
  }

 private:
  std::vector<Permutation> patterns_;
};

inline bool avoids_all(std::span<const int> pi, const PatternSet& basis) {
  for (const auto& beta : basis) {
    if (contains(pi, beta)) return false;
  }
  return true;
}

inline bool avoids_all(const Permutation& pi, const PatternSet& basis) {
  return avoids_all(pi.entries(), basis);
}

/// Left-to-right maxima as 1-based (position, value) pairs.
inline std::vector<std::pair<int, int>> left_to_right_maxima(const Permutation& pi) {
  std::vector<std::pair<int, int>> out;
  int best = 0;
  for (int i = 0; i < pi.size(); ++i) {
    const int v = pi[static_cast<std::size_t>(i)];
    if (v > best) {
      out.emplace_back(i + 1, v);
      best = v;
    }
  }
  return out;
}

inline Permutation direct_sum(const Permutation& pi, const Permutation& sigma) {
  std::vector<int> v(pi.begin(), pi.end());
  for (int s : sigma) v.push_back(s + pi.size());
  return Permutation(std::move(v));
}

inline Permutation skew_sum(const Permutation& pi, const Permutation& sigma) {
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(pi.size() + sigma.size()));
  for (int p : pi) v.push_back(p + sigma.size());
  for (int s : sigma) v.push_back(s);
  return Permutation(std::move(v));
}

enum class Symmetry { reverse, complement, inverse };

inline Permutation symmetry(const Permutation& pi, Symmetry kind) {
  const int n = pi.size();
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    switch (kind) {
      case Symmetry::reverse:
        v[ui] = pi[static_cast<std::size_t>(n - 1 - i)];
        break;
      case Symmetry::complement:
        v[ui] = n + 1 - pi[ui];
        break;
      case Symmetry::inverse:
        v[static_cast<std::size_t>(pi[ui] - 1)] = i + 1;
        break;
    }
  }
  return Permutation(std::move(v));
}

inline Permutation reverse(const Permutation& pi) { return symmetry(pi, Symmetry::reverse); }
inline Permutation complement(const Permutation& pi) { return symmetry(pi, Symmetry::complement); }
inline Permutation inverse(const Permutation& pi) { return symmetry(pi, Symmetry::inverse); }

inline PatternSet symmetry(const PatternSet& basis, Symmetry kind) {
  std::vector<Permutation> out;
  for (const auto& b : basis) out.push_back(symmetry(b, kind));
  return PatternSet(std::move(out));
}

/// {1 (-) beta : beta in B}: the basis of the class generated by the Av(B)-machine.
inline PatternSet one_skew_basis(const PatternSet& basis) {
  std::vector<Permutation> out;
  const Permutation one{1};
  for (const auto& b : basis) out.push_back(skew_sum(one, b));
  return PatternSet(std::move(out));
}

}  // namespace cmachine
