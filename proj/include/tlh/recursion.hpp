#pragma once

// Memoized evaluation of p(v, w).
//
//   (1) p(∅, 0^n) = p(0^n, ∅) = ((1+a)/(1-q))^n
//   (2) p(v1, w1) = (t^l + a) p(v, w)
//   (3) p(v0, w1) = p(v, 1w)
//   (4) p(v1, w0) = p(1v, w)
//   (5) p(v0, w0) = t^-l p(1v, 1w) + q t^-l p(0v, 0w)
//
// with l = |v| = |w|. On identically zero pairs rule (5) refers to itself;
// its unique solution p(0^m, 0^n) = p(10^{m-1}, 10^{n-1}) / (1-q) is used
// instead.
//
// The evaluator never recurses on the call stack. It first walks the
// dependency graph with an explicit stack, then evaluates the discovered
// states in increasing descent_measure order. States with equal measure do
// not depend on each other, so each such level is split across workers.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "tlh/json_io.hpp"
#include "tlh/render.hpp"
#include "tlh/ring.hpp"
#include "tlh/sequences.hpp"

namespace tlh {

enum class RuleTag {
  BaseEmptyLeft,
  BaseEmptyRight,
  Rule2_bothEndOne,
  Rule3_v0w1,
  Rule4_v1w0,
  Rule5_bothEndZero,
  AllZeros,
};

inline std::string_view to_string(RuleTag tag) {
  switch (tag) {
    case RuleTag::BaseEmptyLeft: return "BaseEmptyLeft";
    case RuleTag::BaseEmptyRight: return "BaseEmptyRight";
    case RuleTag::Rule2_bothEndOne: return "Rule2_bothEndOne";
    case RuleTag::Rule3_v0w1: return "Rule3_v0w1";
    case RuleTag::Rule4_v1w0: return "Rule4_v1w0";
    case RuleTag::Rule5_bothEndZero: return "Rule5_bothEndZero";
    case RuleTag::AllZeros: return "AllZeros";
  }
  return "?";
}

inline RuleTag classify_rule(const SeqPair& p) {
  if (p.v.empty()) return RuleTag::BaseEmptyLeft;
  if (p.w.empty()) return RuleTag::BaseEmptyRight;
  const bool v1 = p.v.back();
  const bool w1 = p.w.back();
  if (v1 && w1) return RuleTag::Rule2_bothEndOne;
  if (!v1 && w1) return RuleTag::Rule3_v0w1;
  if (v1 && !w1) return RuleTag::Rule4_v1w0;
  if (p.v.all_zero() && p.w.all_zero()) return RuleTag::AllZeros;
  return RuleTag::Rule5_bothEndZero;
}

/// The rule that applies to a pair together with the pairs it refers to.
struct RuleStep {
  RuleTag tag{};
  std::vector<SeqPair> children;
};

inline RuleStep rule_step(const SeqPair& p) {
  const RuleTag tag = classify_rule(p);
  switch (tag) {
    case RuleTag::BaseEmptyLeft:
    case RuleTag::BaseEmptyRight:
      return {tag, {}};
    case RuleTag::Rule2_bothEndOne:
      return {tag, {{p.v.without_last(), p.w.without_last()}}};
    case RuleTag::Rule3_v0w1:
      return {tag, {{p.v.without_last(), p.w.without_last().prepended(true)}}};
    case RuleTag::Rule4_v1w0:
      return {tag, {{p.v.without_last().prepended(true), p.w.without_last()}}};
    case RuleTag::Rule5_bothEndZero: {
      const BitString v = p.v.without_last();
      const BitString w = p.w.without_last();
      return {tag, {{v.prepended(true), w.prepended(true)}, {v.prepended(false), w.prepended(false)}}};
    }
    case RuleTag::AllZeros:
      return {tag,
              {{p.v.without_last().prepended(true), p.w.without_last().prepended(true)}}};
  }
  return {tag, {}};
}

/// ((1+a)/(1-q))^n.
inline GradedSeries unknot_power(std::size_t n) {
  const LaurentPoly one_plus_a = LaurentPoly(1) + LaurentPoly::monomial(qat(0, 1, 0));
  DenomVector den;
  den.add(1, static_cast<int>(n));
  return GradedSeries(one_plus_a.pow(static_cast<unsigned>(n)), den);
}

/// t^l + a.
inline LaurentPoly t_power_plus_a(int l) {
  return LaurentPoly::monomial(qat(0, 0, l)) + LaurentPoly::monomial(qat(0, 1, 0));
}

/// Combines already evaluated children according to the rule for p.
inline GradedSeries apply_rule(const SeqPair& p, const RuleStep& step,
                               std::span<const GradedSeries* const> children) {
  switch (step.tag) {
    case RuleTag::BaseEmptyLeft:
    case RuleTag::BaseEmptyRight:
      return unknot_power(p.v.size() + p.w.size());
    case RuleTag::Rule2_bothEndOne: {
      const GradedSeries& c = *children[0];
      const int l = static_cast<int>(p.l()) - 1;
      return GradedSeries(c.numerator() * t_power_plus_a(l), c.denominator());
    }
    case RuleTag::Rule3_v0w1:
    case RuleTag::Rule4_v1w0:
      return *children[0];
    case RuleTag::Rule5_bothEndZero: {
      const int l = static_cast<int>(p.l());
      return children[0]->scaled(qat(0, 0, -l)) + children[1]->scaled(qat(1, 0, -l));
    }
    case RuleTag::AllZeros: {
      DenomVector den = children[0]->denominator();
      den.add(1);
      return GradedSeries(children[0]->numerator(), den);
    }
  }
  throw std::logic_error("unhandled rule");
}

struct MemoStats {
  std::size_t entries = 0;
  std::size_t hits = 0;
  std::size_t misses = 0;
  std::size_t max_depth = 0;
};

/// Outcome of reading a cache file.
struct CacheLoadReport {
  bool accepted = false;
  std::size_t entries = 0;
  std::string reason;
};

/// Concurrent map SeqPair -> canonical GradedSeries. Values are written
/// once; a second insert of the same key keeps the first value.
class MemoTable {
 public:
  using Value = std::shared_ptr<const GradedSeries>;

  static constexpr std::string_view kEncoderVersion = "ring-json/1";

  explicit MemoTable(std::size_t shard_count = 64)
      : shard_count_(shard_count == 0 ? 1 : shard_count),
        shards_(std::make_unique<Shard[]>(shard_count_)) {}

  MemoTable(const MemoTable&) = delete;
  MemoTable& operator=(const MemoTable&) = delete;

  /// Counted lookup: a hit when present, a miss otherwise.
  Value lookup(const SeqPair& key) const {
    Value v = peek(key);
    (v ? hits_ : misses_).fetch_add(1, std::memory_order_relaxed);
    return v;
  }

  /// Uncounted lookup.
  Value peek(const SeqPair& key) const {
    const Shard& s = shard(key);
    std::shared_lock lock(s.mutex);
    auto it = s.map.find(key);
    return it == s.map.end() ? nullptr : it->second.value;
  }

  bool contains(const SeqPair& key) const { return peek(key) != nullptr; }

  std::size_t depth_of(const SeqPair& key) const {
    const Shard& s = shard(key);
    std::shared_lock lock(s.mutex);
    auto it = s.map.find(key);
    return it == s.map.end() ? 0 : it->second.depth;
  }

  void count_miss() const { misses_.fetch_add(1, std::memory_order_relaxed); }

  /// Returns the stored value, which is the earlier one if the key exists.
  Value insert(const SeqPair& key, GradedSeries value, std::size_t depth = 0) {
    Shard& s = shard(key);
    std::unique_lock lock(s.mutex);
    auto [it, inserted] = s.map.try_emplace(key, Entry{nullptr, depth});
    if (inserted) it->second.value = std::make_shared<const GradedSeries>(std::move(value));
    return it->second.value;
  }

  std::size_t size() const {
    std::size_t n = 0;
    for (std::size_t i = 0; i < shard_count_; ++i) {
      std::shared_lock lock(shards_[i].mutex);
      n += shards_[i].map.size();
    }
    return n;
  }

  MemoStats stats() const {
    MemoStats st;
    for (std::size_t i = 0; i < shard_count_; ++i) {
      std::shared_lock lock(shards_[i].mutex);
      st.entries += shards_[i].map.size();
      for (const auto& [key, entry] : shards_[i].map) st.max_depth = std::max(st.max_depth, entry.depth);
    }
    st.hits = hits_.load();
    st.misses = misses_.load();
    return st;
  }

  /// All entries ordered by key.
  std::vector<std::pair<SeqPair, Value>> snapshot() const {
    std::vector<std::pair<SeqPair, Value>> out;
    for (std::size_t i = 0; i < shard_count_; ++i) {
      std::shared_lock lock(shards_[i].mutex);
      for (const auto& [key, entry] : shards_[i].map) out.emplace_back(key, entry.value);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
  }

  static std::string checksum(std::string_view text) {
    std::uint64_t h = 14695981039346656037ULL;  // FNV-1a
    for (unsigned char c : text) {
      h ^= c;
      h *= 1099511628211ULL;
    }
    static constexpr char digits[] = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i, h >>= 4U) out[static_cast<std::size_t>(i)] = digits[h & 0xFU];
    return out;
  }

  /// Header naming the encoder and a checksum of the body that follows it.
  static std::string header_line(std::string_view body) {
    return "tlh-memo encoder=" + std::string(kEncoderVersion) + " checksum=" + checksum(body);
  }

  /// Writes a header line followed by one JSON object {"v|w": series, ...}.
  void save(const std::filesystem::path& path) const {
    const auto tmp = std::filesystem::path(path.string() + ".tmp");
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) throw Error("cannot write cache file " + tmp.string());
      std::string body = "{";
      bool first = true;
      for (const auto& [key, value] : snapshot()) {
        body += (first ? "\n\"" : ",\n\"") + key.key() + "\":" + render_json(*value);
        first = false;
      }
      body += "\n}\n";
      out << header_line(body) << "\n" << body;
      if (!out) throw Error("failed writing cache file " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
  }

  /// Loads entries from a cache file. Entries are only trusted when the
  /// header names the current encoder with a matching checksum; otherwise
  /// nothing is loaded and the reason is reported.
  CacheLoadReport load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return {false, 0, "cannot open " + path.string()};
    std::string header;
    std::getline(in, header);
    std::stringstream body;
    body << in.rdbuf();
    const std::string text = body.str();
    if (header_line(text) != header) return {false, 0, "encoder version or checksum mismatch"};
    // Decode everything before touching the table so a bad file loads nothing.
    std::vector<std::pair<SeqPair, GradedSeries>> decoded;
    try {
      const RawJson root = parse_raw_json(text);
      if (root.kind != RawJson::Kind::Object) throw ParseError("cache body must be a JSON object");
      for (std::size_t i = 0; i < root.keys.size(); ++i) {
        const std::string& k = root.keys[i];
        const std::size_t bar = k.find('|');
        if (bar == std::string::npos) throw ParseError("cache key without '|': " + k);
        decoded.emplace_back(pair_validate(std::string_view(k).substr(0, bar), std::string_view(k).substr(bar + 1)),
                             series_from_json(root.items[i]));
      }
    } catch (const Error& e) {
      return {false, 0, e.what()};
    }
    for (auto& [p, s] : decoded) insert(p, std::move(s));
    return {true, decoded.size(), {}};
  }

 private:
  struct Entry {
    Value value;
    std::size_t depth = 0;
  };
  struct Shard {
    mutable std::shared_mutex mutex;
    std::unordered_map<SeqPair, Entry> map;
  };

  Shard& shard(const SeqPair& key) { return shards_[std::hash<SeqPair>{}(key) % shard_count_]; }
  const Shard& shard(const SeqPair& key) const {
    return shards_[std::hash<SeqPair>{}(key) % shard_count_];
  }

  std::size_t shard_count_;
  std::unique_ptr<Shard[]> shards_;
  mutable std::atomic<std::size_t> hits_{0};
  mutable std::atomic<std::size_t> misses_{0};
};

#ifdef NDEBUG
inline constexpr bool kCheckDescentByDefault = false;
#else
inline constexpr bool kCheckDescentByDefault = true;
#endif

struct EvalOptions {
  unsigned threads = 1;
  /// Verify that every rule edge strictly lowers descent_measure.
  bool check_descent = kCheckDescentByDefault;
  /// Store every intermediate value in the memo table. When false only the
  /// root is stored and intermediates are freed once their last parent is
  /// computed, which bounds memory for one-off evaluations of long pairs.
  bool retain_intermediate = true;
};

/// Raised when a rule edge fails to descend; indicates a broken rule table.
class DescentViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {

template <typename Fn>
void parallel_for(std::size_t begin, std::size_t end, unsigned threads, Fn&& fn) {
  const std::size_t count = end - begin;
  if (threads <= 1 || count < 2) {
    for (std::size_t i = begin; i < end; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{begin};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> workers;
    const auto n = static_cast<unsigned>(std::min<std::size_t>(threads, count));
    workers.reserve(n);
    for (unsigned t = 0; t < n; ++t) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < end; i = next++) {
          try {
            fn(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace detail

/// p(v, w) for a valid pair, memoized in `memo`.
inline GradedSeries eval_p(const SeqPair& root, MemoTable& memo, const EvalOptions& options = {}) {
  if (auto hit = memo.lookup(root)) return *hit;

  struct Node {
    SeqPair pair;
    RuleStep step;
    DescentMeasure measure;
  };
  std::vector<Node> nodes;
  std::unordered_set<SeqPair> seen{root};
  std::vector<SeqPair> stack{root};
  while (!stack.empty()) {
    SeqPair p = std::move(stack.back());
    stack.pop_back();
    RuleStep step = rule_step(p);
    const DescentMeasure measure = descent_measure(p);
    for (const SeqPair& child : step.children) {
      if (options.check_descent && !(descent_measure(child) < measure)) {
        throw DescentViolation("rule " + std::string(to_string(step.tag)) + " maps " + p.key() +
                               " to " + child.key() + " without descending");
      }
      if (seen.contains(child) || memo.contains(child)) continue;
      seen.insert(child);
      stack.push_back(child);
    }
    if (p != root) memo.count_miss();
    nodes.push_back({std::move(p), std::move(step), measure});
  }

  std::sort(nodes.begin(), nodes.end(), [](const Node& x, const Node& y) {
    return x.measure != y.measure ? x.measure < y.measure : x.pair < y.pair;
  });

  constexpr std::size_t kInMemo = static_cast<std::size_t>(-1);
  std::unordered_map<SeqPair, std::size_t> index;
  index.reserve(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) index.emplace(nodes[i].pair, i);
  std::vector<std::vector<std::size_t>> deps(nodes.size());
  std::vector<std::atomic<std::size_t>> parents(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (const SeqPair& child : nodes[i].step.children) {
      const auto it = index.find(child);
      const std::size_t j = it == index.end() ? kInMemo : it->second;
      deps[i].push_back(j);
      if (j != kInMemo) parents[j].fetch_add(1, std::memory_order_relaxed);
    }
  }
  std::vector<MemoTable::Value> values(nodes.size());
  std::vector<std::size_t> depths(nodes.size(), 0);

  auto compute = [&](std::size_t i) {
    const Node& node = nodes[i];
    std::vector<MemoTable::Value> held;
    std::vector<const GradedSeries*> children;
    std::size_t depth = 0;
    for (std::size_t c = 0; c < deps[i].size(); ++c) {
      const std::size_t j = deps[i][c];
      const SeqPair& child = node.step.children[c];
      if (j == kInMemo) {
        held.push_back(memo.lookup(child));
        depth = std::max(depth, memo.depth_of(child) + 1);
      } else {
        held.push_back(values[j]);
        depth = std::max(depth, depths[j] + 1);
      }
      if (!held.back()) throw std::logic_error("dependency " + child.key() + " not evaluated");
      children.push_back(held.back().get());
    }
    GradedSeries value = apply_rule(node.pair, node.step, children);
    depths[i] = depth;
    if (options.retain_intermediate || node.pair == root) {
      values[i] = memo.insert(node.pair, std::move(value), depth);
    } else {
      values[i] = std::make_shared<const GradedSeries>(std::move(value));
    }
    for (const std::size_t j : deps[i]) {
      if (j != kInMemo && parents[j].fetch_sub(1, std::memory_order_acq_rel) == 1) values[j].reset();
    }
  };

  std::size_t begin = 0;
  while (begin < nodes.size()) {
    std::size_t end = begin + 1;
    while (end < nodes.size() && nodes[end].measure == nodes[begin].measure) ++end;
    detail::parallel_for(begin, end, options.threads, compute);
    begin = end;
  }
  return *memo.peek(root);
}

/// Convenience overload with a private table.
inline GradedSeries eval_p(const SeqPair& root, const EvalOptions& options = {}) {
  MemoTable memo;
  return eval_p(root, memo, options);
}

}  // namespace tlh
