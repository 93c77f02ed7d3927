#pragma once

// Binary sequences, the (v, w) pairs that index the recursion, the orders
// used to argue termination, and shuffle permutations.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "tlh/errors.hpp"

namespace tlh {

/// Finite 0/1 sequence, read left to right (index 1 first).
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::string_view bits) : bits_(bits) {
    if (bits_.find_first_not_of("01") != std::string::npos) {
      throw ParseError("bit string may only contain '0' and '1': \"" + bits_ + "\"");
    }
  }

  static BitString repeat(bool bit, std::size_t n) {
    BitString b;
    b.bits_.assign(n, bit ? '1' : '0');
    return b;
  }
  static BitString zeros(std::size_t n) { return repeat(false, n); }
  static BitString ones(std::size_t n) { return repeat(true, n); }

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }
  bool operator[](std::size_t i) const noexcept { return bits_[i] == '1'; }
  bool front() const noexcept { return bits_.front() == '1'; }
  bool back() const noexcept { return bits_.back() == '1'; }
  const std::string& str() const noexcept { return bits_; }

  std::size_t weight() const noexcept {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), '1'));
  }
  bool all_zero() const noexcept { return bits_.find('1') == std::string::npos; }

  BitString without_last() const {
    BitString b = *this;
    b.bits_.pop_back();
    return b;
  }
  BitString prepended(bool bit) const {
    BitString b;
    b.bits_.reserve(size() + 1);
    b.bits_.push_back(bit ? '1' : '0');
    b.bits_ += bits_;
    return b;
  }
  BitString appended(bool bit) const {
    BitString b = *this;
    b.bits_.push_back(bit ? '1' : '0');
    return b;
  }
  friend BitString operator+(const BitString& x, const BitString& y) {
    BitString b = x;
    b.bits_ += y.bits_;
    return b;
  }

  friend auto operator<=>(const BitString&, const BitString&) = default;
  friend bool operator==(const BitString&, const BitString&) = default;

 private:
  std::string bits_;
};

inline std::size_t weight(const BitString& v) noexcept { return v.weight(); }

/// Pairs i < j with s_i > s_j.
inline std::size_t inversions(std::span<const int> s) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (s[i] > s[j]) ++count;
    }
  }
  return count;
}

/// Pairs i < j with v_i = 1, v_j = 0.
inline std::size_t inversions(const BitString& v) noexcept {
  std::size_t ones = 0;
  std::size_t count = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i]) {
      ++ones;
    } else {
      count += ones;
    }
  }
  return count;
}

/// Parses comma-separated decimal integers; the empty string is the empty
/// sequence.
inline std::vector<int> parse_int_sequence(std::string_view text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    std::string item(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
    const std::size_t first = item.find_first_not_of(' ');
    const std::size_t last = item.find_last_not_of(' ');
    item = first == std::string::npos ? std::string() : item.substr(first, last - first + 1);
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw ParseError("not an integer: \"" + item + "\"");
    }
    if (used != item.size()) throw ParseError("not an integer: \"" + item + "\"");
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

/// A recursion state (v, w) with |v| = |w| = l; v has length m + l and w has
/// length n + l.
struct SeqPair {
  BitString v;
  BitString w;

  std::size_t l() const noexcept { return v.weight(); }
  std::size_t m() const noexcept { return v.size() - v.weight(); }
  std::size_t n() const noexcept { return w.size() - w.weight(); }

  /// "v|w", the form used in cache files and reports.
  std::string key() const { return v.str() + "|" + w.str(); }

  friend auto operator<=>(const SeqPair&, const SeqPair&) = default;
  friend bool operator==(const SeqPair&, const SeqPair&) = default;
};

inline SeqPair pair_validate(BitString v, BitString w) {
  if (v.weight() != w.weight()) throw WeightMismatch(v.weight(), w.weight());
  return {std::move(v), std::move(w)};
}

inline SeqPair pair_validate(std::string_view v, std::string_view w) {
  return pair_validate(BitString(v), BitString(w));
}

/// x <= y: shorter, or equal length and heavier, or equal length and weight
/// with no more inversions.
inline bool sequence_precedes(const BitString& x, const BitString& y) noexcept {
  if (x.size() != y.size()) return x.size() < y.size();
  if (x.weight() != y.weight()) return x.weight() > y.weight();
  return inversions(x) <= inversions(y);
}

/// Componentwise comparison of pairs under sequence_precedes. Reflexive and
/// transitive. Rules (3) and (4) of the recursion do not descend in this
/// order; see descent_measure for the order the evaluator relies on.
inline bool pair_precedes(const SeqPair& p, const SeqPair& q) noexcept {
  return sequence_precedes(p.v, q.v) && sequence_precedes(p.w, q.w);
}

inline bool pair_strictly_precedes(const SeqPair& p, const SeqPair& q) noexcept {
  return pair_precedes(p, q) && !pair_precedes(q, p);
}

/// Lexicographic key (total length, -total weight, total inversions). Every
/// rule of the recursion maps a pair to pairs with a strictly smaller key,
/// and each key value has finitely many predecessors.
struct DescentMeasure {
  std::size_t length = 0;
  std::size_t weight = 0;
  std::size_t inversions = 0;

  friend auto operator<=>(const DescentMeasure& x, const DescentMeasure& y) {
    if (auto c = x.length <=> y.length; c != 0) return c;
    if (auto c = y.weight <=> x.weight; c != 0) return c;
    return x.inversions <=> y.inversions;
  }
  friend bool operator==(const DescentMeasure&, const DescentMeasure&) = default;
};

inline DescentMeasure descent_measure(const SeqPair& p) noexcept {
  return {p.v.size() + p.w.size(), p.v.weight() + p.w.weight(), inversions(p.v) + inversions(p.w)};
}

// ---------------------------------------------------------------------------
// Shuffle permutations

/// One-line notation: perm[x-1] is the image of x.
using Permutation = std::vector<int>;

inline Permutation identity_permutation(std::size_t r) {
  Permutation p(r);
  for (std::size_t i = 0; i < r; ++i) p[i] = static_cast<int>(i + 1);
  return p;
}

/// (f g)(x) = f(g(x)).
inline Permutation compose(const Permutation& f, const Permutation& g) {
  Permutation out(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) out[x] = f[static_cast<std::size_t>(g[x] - 1)];
  return out;
}

/// Simple transposition s_i in S_r, 1 <= i < r.
inline Permutation simple_transposition(std::size_t r, std::size_t i) {
  Permutation p = identity_permutation(r);
  std::swap(p[i - 1], p[i]);
  return p;
}

/// The permutation sending {1..k} onto the zero positions of v and
/// {k+1..k+l} onto the one positions, each block in increasing order.
/// Built by the inductive rules: length one gives the identity,
/// pi_{v1} = pi_v + 1, and pi_{v0} = (pi_v + 1) s_{r-1} ... s_{r-l}.
inline Permutation shuffle_permutation(const BitString& v) {
  if (v.empty()) throw EmptyInput("shuffle permutation of the empty sequence");
  Permutation pi = identity_permutation(1);
  std::size_t ones = v[0] ? 1 : 0;
  for (std::size_t idx = 1; idx < v.size(); ++idx) {
    const std::size_t r = idx + 1;
    pi.push_back(static_cast<int>(r));
    if (!v[idx]) {
      // right-most factor acts first: s_{r-l}, then up to s_{r-1}
      Permutation tail = identity_permutation(r);
      for (std::size_t j = 1; j <= ones; ++j) tail = compose(tail, simple_transposition(r, r - j));
      pi = compose(pi, tail);
    } else {
      ++ones;
    }
  }
  return pi;
}

enum class ClosedFormulaReading {
  /// j-th factor s_{i_j} s_{i_j - 1} ... s_j, empty when i_j = j.
  as_stated,
  /// j-th factor s_{i_j - 1} ... s_j, empty when i_j = j.
  shifted,
};

/// Evaluates pi_v = (s_{i_1} ... s_1)(s_{i_2} ... s_2) ... (s_{i_k} ... s_k)
/// where i_1 < ... < i_k are the zero positions of v. Returns nullopt when
/// a factor names a generator outside S_r.
inline std::optional<Permutation> shuffle_permutation_closed(const BitString& v,
                                                             ClosedFormulaReading reading) {
  if (v.empty()) throw EmptyInput("shuffle permutation of the empty sequence");
  const std::size_t r = v.size();
  Permutation pi = identity_permutation(r);
  std::size_t j = 0;
  for (std::size_t pos = 1; pos <= r; ++pos) {
    if (v[pos - 1]) continue;
    ++j;
    if (pos == j) continue;
    const std::size_t top = reading == ClosedFormulaReading::as_stated ? pos : pos - 1;
    for (std::size_t g = top; g >= j; --g) {
      if (g >= r) return std::nullopt;
      pi = compose(pi, simple_transposition(r, g));
    }
  }
  return pi;
}

/// Generator word of the shuffle braid alpha_v, e.g. "s1 s2"; empty for the
/// identity.
inline std::string shuffle_braid_word(const BitString& v) {
  std::string word;
  std::size_t j = 0;
  for (std::size_t pos = 1; pos <= v.size(); ++pos) {
    if (v[pos - 1]) continue;
    ++j;
    for (std::size_t g = pos - 1; g >= j && g > 0; --g) {
      if (!word.empty()) word += ' ';
      word += "s" + std::to_string(g);
    }
  }
  return word;
}

}  // namespace tlh

template <>
struct std::hash<tlh::BitString> {
  std::size_t operator()(const tlh::BitString& b) const noexcept {
    return std::hash<std::string>{}(b.str());
  }
};

template <>
struct std::hash<tlh::SeqPair> {
  std::size_t operator()(const tlh::SeqPair& p) const noexcept {
    const std::size_t h = std::hash<std::string>{}(p.v.str());
    return h ^ (std::hash<std::string>{}(p.w.str()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  }
};
