#pragma once

// Batch verification suites behind `tlh check`. Each suite returns one
// CheckCase per group of related checks; failures carry the first
// offending input.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "tlh/fillings.hpp"
#include "tlh/known_values.hpp"
#include "tlh/links.hpp"

namespace tlh {

struct CheckCase {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct CheckReport {
  std::string suite;
  std::vector<CheckCase> cases;

  bool all_pass() const {
    return std::all_of(cases.begin(), cases.end(), [](const CheckCase& c) { return c.pass; });
  }
};

struct CheckParams {
  int r = 3;
  std::optional<int> len;  // suite-specific default when absent
  int depth = 12;
  std::uint64_t seed = 7;
  unsigned threads = 1;
};

inline constexpr std::array<std::string_view, 6> kCheckSuites = {
    "paper-values", "symmetry", "positivity", "lemma53", "roundtrip", "unknot-family"};

/// Every bit string of length n.
inline std::vector<BitString> all_bit_strings(std::size_t n) {
  std::vector<BitString> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::string s(n, '0');
    for (std::size_t i = 0; i < n; ++i) {
      if ((mask >> i) & 1U) s[i] = '1';
    }
    out.emplace_back(s);
  }
  return out;
}

/// All pairs with |v| = |w|, len(v) <= max_v and len(w) <= max_w, and
/// len(v) + len(w) <= max_total.
inline std::vector<SeqPair> all_pairs(std::size_t max_v, std::size_t max_w, std::size_t max_total) {
  std::vector<SeqPair> out;
  for (std::size_t a = 0; a <= max_v; ++a) {
    for (std::size_t b = 0; b <= max_w && a + b <= max_total; ++b) {
      const auto vs = all_bit_strings(a);
      const auto ws = all_bit_strings(b);
      for (const auto& v : vs) {
        for (const auto& w : ws) {
          if (v.weight() == w.weight()) out.push_back({v, w});
        }
      }
    }
  }
  return out;
}

/// A random valid pair whose total length len(v) + len(w) is uniform in
/// [min_total, max_total]; the split and the weight are uniform too.
inline SeqPair random_pair(std::mt19937_64& rng, std::size_t min_total, std::size_t max_total) {
  const std::size_t total = std::uniform_int_distribution<std::size_t>(min_total, max_total)(rng);
  const std::size_t a = std::uniform_int_distribution<std::size_t>(0, total)(rng);
  const std::size_t b = total - a;
  const std::size_t l = std::uniform_int_distribution<std::size_t>(0, std::min(a, b))(rng);
  auto make = [&](std::size_t n) {
    std::string s(n, '0');
    std::fill(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(l), '1');
    std::shuffle(s.begin(), s.end(), rng);
    return BitString(s);
  };
  BitString v = make(a);
  BitString w = make(b);
  return {std::move(v), std::move(w)};
}

/// Every sequence in {0..r}^n.
inline std::vector<SigmaSeq> all_sigmas(int r, int n) {
  std::vector<SigmaSeq> out;
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  for (;;) {
    out.emplace_back(r, e);
    int i = n - 1;
    while (i >= 0 && e[static_cast<std::size_t>(i)] == r) e[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
    ++e[static_cast<std::size_t>(i)];
  }
  return out;
}

/// r uniform in [1, max_r], N uniform in [0, max_n], entries uniform in [0, r].
inline SigmaSeq random_sigma(std::mt19937_64& rng, int max_r, int max_n) {
  const int r = std::uniform_int_distribution<int>(1, max_r)(rng);
  const int n = std::uniform_int_distribution<int>(0, max_n)(rng);
  std::uniform_int_distribution<int> entry(0, r);
  std::vector<int> e(static_cast<std::size_t>(n));
  for (int& x : e) x = entry(rng);
  return SigmaSeq(r, std::move(e));
}

/// Every term sits on the (q,a,t) sublattice, in particular with even
/// T-exponent.
inline bool has_even_homological_degrees(const GradedSeries& s) {
  for (const auto& [m, c] : s.numerator().terms()) {
    if (m.texp % 2 != 0 || m.qexp % 2 != 0) return false;
  }
  return true;
}

inline bool denominator_is_q_only(const GradedSeries& s) {
  for (const auto& [i, d] : s.denominator().entries()) {
    if (i != 1) return false;
  }
  return true;
}

inline bool nonnegative(const LaurentPoly& p) {
  for (const auto& [m, c] : p.terms()) {
    if (c < 0) return false;
  }
  return true;
}

namespace detail {

inline void fail_once(CheckCase& c, const std::string& detail) {
  if (c.pass) c.detail = detail;
  c.pass = false;
}

inline CheckReport check_paper_values(const CheckParams& params) {
  CheckReport report{"paper-values", {}};
  MemoTable memo;
  const EvalOptions opts{params.threads};

  {
    const auto value = torus_link_homology({4, 6}, memo, opts);
    const auto expected = known::torus_4_6();
    report.cases.push_back({"T(4,6) equals the reference display", equal_as_values(value, expected),
                            value == expected ? "" : "got " + render_human(value)});
  }
  for (int l = 1; l <= 4; ++l) {
    const auto value = colored_torus_homology(1, 1, l, ColoredOrder::theorem, memo, opts);
    report.cases.push_back({"colored unknot l=" + std::to_string(l), value == known::colored_unknot(l),
                            ""});
  }
  {
    const auto expected = known::colored_trefoil_sym2();
    std::vector<std::string> matches;
    for (auto order : {ColoredOrder::theorem, ColoredOrder::example}) {
      const SeqPair pair = colored_pair(2, 3, 2, order);
      const GradedSeries raw = eval_p(pair, memo, opts);
      const GradedSeries with_prefactor = colored_prefactor(2) * raw;
      const std::string name = order == ColoredOrder::theorem ? "theorem" : "example";
      if (monomial_ratio(raw, expected)) matches.push_back(name + " " + pair.key() + " (raw)");
      if (monomial_ratio(with_prefactor, expected)) {
        matches.push_back(name + " " + pair.key() + " (with prefactor)");
      }
    }
    std::string detail = matches.empty() ? "no ordering matches" : "matches:";
    for (const auto& m : matches) detail += " " + m + ";";
    report.cases.push_back({"Sym^2 trefoil up to monomial", !matches.empty(), detail});
  }
  {
    const known::SigmaExample ex;
    const SigmaSeq s(ex.r, ex.sigma);
    const bool ok = v_of_sigma(s).str() == ex.v && w_of_sigma(s).str() == ex.w &&
                    filling_from_sigma(s).to_ascii() == ex.grid;
    report.cases.push_back({"sigma=(3,0,1,5), r=5: filling, v and w", ok,
                            "v=" + v_of_sigma(s).str() + " w=" + w_of_sigma(s).str()});
  }
  return report;
}

inline CheckReport check_symmetry(const CheckParams& params) {
  CheckReport report{"symmetry", {}};
  const int len = params.len.value_or(10);
  MemoTable memo;
  const EvalOptions opts{params.threads};
  auto check = [&](CheckCase& c, const SeqPair& p) {
    const auto x = eval_p(p, memo, opts);
    const auto y = eval_p({p.w, p.v}, memo, opts);
    if (x != y) fail_once(c, "p(" + p.key() + ") != p(w,v)");
    if (!has_even_homological_degrees(x)) fail_once(c, "odd T-degree in p(" + p.key() + ")");
  };

  const auto pairs = all_pairs(static_cast<std::size_t>(len), static_cast<std::size_t>(len),
                               static_cast<std::size_t>(len));
  CheckCase exhaustive{"exhaustive, len(v)+len(w) <= " + std::to_string(len) + " (" +
                           std::to_string(pairs.size()) + " pairs)",
                       true, ""};
  for (const auto& p : pairs) check(exhaustive, p);
  report.cases.push_back(exhaustive);

  std::mt19937_64 rng(params.seed);
  const auto max_total = static_cast<std::size_t>(len + 6);
  CheckCase random{"200 random pairs, " + std::to_string(len + 1) + " <= len(v)+len(w) <= " +
                       std::to_string(max_total) + ", seed " + std::to_string(params.seed),
                   true, ""};
  for (int i = 0; i < 200; ++i) check(random, random_pair(rng, static_cast<std::size_t>(len + 1), max_total));
  report.cases.push_back(random);
  return report;
}

inline CheckReport check_positivity(const CheckParams& params) {
  CheckReport report{"positivity", {}};
  const int len = params.len.value_or(6);
  MemoTable memo;
  const EvalOptions opts{params.threads};

  const auto pairs = all_pairs(static_cast<std::size_t>(len), static_cast<std::size_t>(len),
                               static_cast<std::size_t>(2 * len));
  CheckCase pos{"expansion to q-degree " + std::to_string(params.depth) + " of p(v,w), lengths <= " +
                    std::to_string(len) + " (" + std::to_string(pairs.size()) + " pairs)",
                true, ""};
  CheckCase parity{"even T-degrees and (1-q)-only denominators", true, ""};
  for (const auto& p : pairs) {
    const auto value = eval_p(p, memo, opts);
    if (!nonnegative(expand_series(value, params.depth))) fail_once(pos, "negative term in p(" + p.key() + ")");
    if (!has_even_homological_degrees(value)) fail_once(parity, "odd T-degree in p(" + p.key() + ")");
    if (!denominator_is_q_only(value)) fail_once(parity, "foreign denominator in p(" + p.key() + ")");
  }
  report.cases.push_back(pos);
  report.cases.push_back(parity);

  CheckCase torus{"expansion of T(m,n), m,n <= " + std::to_string(len), true, ""};
  for (int m = 1; m <= len; ++m) {
    for (int n = 1; n <= len; ++n) {
      const auto value = torus_link_homology({m, n}, memo, opts);
      if (!nonnegative(expand_series(value, params.depth)) || !has_even_homological_degrees(value)) {
        fail_once(torus, "T(" + std::to_string(m) + "," + std::to_string(n) + ")");
      }
    }
  }
  report.cases.push_back(torus);
  return report;
}

inline CheckReport check_lemma53(const CheckParams& params) {
  CheckReport report{"lemma53", {}};
  const int len = params.len.value_or(4);
  MemoTable memo;
  const EvalOptions opts{params.threads};
  for (int r = 1; r <= params.r; ++r) {
    for (int n = 0; n <= len; ++n) {
      const auto sigmas = all_sigmas(r, n);
      CheckCase c{"r=" + std::to_string(r) + " N=" + std::to_string(n) + " (" +
                      std::to_string(sigmas.size()) + " sequences)",
                  true, ""};
      for (const auto& s : sigmas) {
        const auto rep = verify_lemma53(s, memo, opts);
        for (const auto& chk : rep.checks) {
          if (!chk.pass) {
            fail_once(c, chk.name + (chk.k >= 0 ? " k=" + std::to_string(chk.k) : "") + " at sigma=(" +
                             s.str() + "): " + render_human(chk.lhs) + " vs " + render_human(chk.rhs));
          }
        }
      }
      report.cases.push_back(c);
    }
  }

  std::mt19937_64 rng(params.seed);
  CheckCase random{"100 random sequences, r <= 5, N <= 6, seed " + std::to_string(params.seed), true, ""};
  for (int i = 0; i < 100; ++i) {
    const SigmaSeq s = random_sigma(rng, 5, 6);
    for (const auto& chk : verify_lemma53(s, memo, opts).checks) {
      if (!chk.pass) fail_once(random, chk.name + " at sigma=(" + s.str() + "), r=" + std::to_string(s.r()));
    }
  }
  report.cases.push_back(random);
  return report;
}

/// Applies the sigma-level description of rotation to a sequence whose
/// last entry is k.
inline std::vector<SigmaSeq> rotated_sigmas(const SigmaSeq& s) {
  const int r = s.r();
  const int k = s.entries().back();
  const SigmaSeq head(r, std::vector<int>(s.entries().begin(), s.entries().end() - 1));
  if (k == 0) return {head};
  if (k < r) return {head.prepended(k - 1)};
  return {head.prepended(r), head.prepended(r - 1)};
}

inline CheckReport check_roundtrip(const CheckParams& params) {
  CheckReport report{"roundtrip", {}};
  const int rmax = std::max(params.r, 4);
  const int len = params.len.value_or(5);

  CheckCase sigma_rt{"sigma -> filling -> sigma, r <= " + std::to_string(rmax) + ", N <= " +
                         std::to_string(len),
                     true, ""};
  CheckCase w_rt{"sigma -> w -> filling -> sigma", true, ""};
  CheckCase weights{"|v(sigma)| = |w(sigma)|", true, ""};
  CheckCase rotation{"rotation matches the sigma-level rules", true, ""};
  for (int r = 1; r <= rmax; ++r) {
    for (int n = 0; n <= len; ++n) {
      for (const auto& s : all_sigmas(r, n)) {
        const Filling f = filling_from_sigma(s);
        if (sigma_from_filling(f) != s) fail_once(sigma_rt, "sigma=(" + s.str() + ")");
        const BitString w = w_of_sigma(s);
        if (sigma_from_filling(filling_from_w(r, n, w)) != s) fail_once(w_rt, "sigma=(" + s.str() + ")");
        if (v_of_sigma(s).weight() != w.weight()) fail_once(weights, "sigma=(" + s.str() + ")");
        if (n == 0) continue;
        const auto expected = rotated_sigmas(s);
        std::vector<SigmaSeq> got;
        if (rotation_case(f) == RotationCase::vacancy) {
          got = {sigma_from_filling(rotate(f, false)), sigma_from_filling(rotate(f, true))};
        } else {
          got = {sigma_from_filling(rotate(f))};
        }
        if (got != expected) fail_once(rotation, "sigma=(" + s.str() + ")");
      }
    }
  }
  report.cases.push_back(sigma_rt);
  report.cases.push_back(w_rt);
  report.cases.push_back(weights);
  report.cases.push_back(rotation);

  CheckCase perms{"shuffle permutations: inductive rules vs block definition, length <= 10", true, ""};
  CheckCase closed{"closed product formula (shifted reading) vs inductive rules", true, ""};
  for (std::size_t n = 1; n <= 10; ++n) {
    for (const auto& v : all_bit_strings(n)) {
      const Permutation pi = shuffle_permutation(v);
      std::size_t zero = 0;
      std::size_t one = n - v.weight();
      for (std::size_t pos = 0; pos < n; ++pos) {
        const std::size_t source = v[pos] ? one++ : zero++;
        if (pi[source] != static_cast<int>(pos + 1)) fail_once(perms, "v=" + v.str());
      }
      if (shuffle_permutation_closed(v, ClosedFormulaReading::shifted) != pi) {
        fail_once(closed, "v=" + v.str());
      }
    }
  }
  report.cases.push_back(perms);
  report.cases.push_back(closed);

  CheckCase json{"JSON encode/decode of p(v,w), len(v)+len(w) <= 8", true, ""};
  MemoTable memo;
  for (const auto& p : all_pairs(8, 8, 8)) {
    const auto value = eval_p(p, memo, EvalOptions{params.threads});
    if (parse_series_json(render_json(value)) != value) fail_once(json, p.key());
    if (from_exponent_terms(grading_convert(value.numerator(), Grading::qat), Grading::qat) !=
        value.numerator()) {
      fail_once(json, "grading round trip " + p.key());
    }
  }
  report.cases.push_back(json);
  return report;
}

inline CheckReport check_unknot_family(const CheckParams& params) {
  CheckReport report{"unknot-family", {}};
  const int len = params.len.value_or(12);
  MemoTable memo;
  const EvalOptions opts{params.threads};
  const GradedSeries unknot = unknot_power(1);
  for (int m = 1; m <= len; ++m) {
    const auto zeros = BitString::zeros(static_cast<std::size_t>(m));
    const auto one = BitString::zeros(1);
    const bool ok = eval_p({zeros, one}, memo, opts) == unknot && eval_p({one, zeros}, memo, opts) == unknot &&
                    torus_link_homology({m, 1}, memo, opts) == unknot;
    report.cases.push_back({"p(0^" + std::to_string(m) + ",0) = (1 + a)/(1 - q)", ok, ""});
  }
  return report;
}

}  // namespace detail

/// Runs a named suite; throws std::invalid_argument for unknown names.
inline CheckReport run_check(std::string_view suite, const CheckParams& params) {
  if (suite == "paper-values") return detail::check_paper_values(params);
  if (suite == "symmetry") return detail::check_symmetry(params);
  if (suite == "positivity") return detail::check_positivity(params);
  if (suite == "lemma53") return detail::check_lemma53(params);
  if (suite == "roundtrip") return detail::check_roundtrip(params);
  if (suite == "unknot-family") return detail::check_unknot_family(params);
  throw std::invalid_argument("unknown check suite: " + std::string(suite));
}

}  // namespace tlh
