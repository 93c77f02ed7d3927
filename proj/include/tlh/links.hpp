#pragma once

// Link-level invariants built on p(v, w): positive torus links, shuffled
// links, Sym^l-colored torus links, and the normalization shift.

#include <numeric>
#include <optional>
#include <string>

#include "tlh/recursion.hpp"

namespace tlh {

/// Positive torus link T(m, n), m, n >= 1.
struct TorusLinkSpec {
  int m = 1;
  int n = 1;

  void validate() const {
    if (m <= 0 || n <= 0) {
      throw DomainError("torus link T(" + std::to_string(m) + "," + std::to_string(n) +
                        ") needs m, n >= 1; only positive torus links are supported");
    }
  }
};

/// Writhe e, component count c and braid width of a braid closure.
struct NormalizationData {
  long writhe = 0;
  long components = 1;
  long strands = 1;

  /// (e + c - strands) / 2.
  long exponent() const {
    const long s = writhe + components - strands;
    if (s % 2 != 0) {
      throw ParityError("e + c - n = " + std::to_string(s) + " is odd");
    }
    return s / 2;
  }
};

/// The braid X_{m,n} on m + n strands has m*n positive crossings and its
/// closure has gcd(m, n) components.
inline NormalizationData normalization_data(const TorusLinkSpec& spec) {
  spec.validate();
  return {static_cast<long>(spec.m) * spec.n, std::gcd(spec.m, spec.n),
          static_cast<long>(spec.m) + spec.n};
}

/// (Q^-4 A T)^s with s = (e + c - strands) / 2.
inline Monomial normalization_shift(const NormalizationData& data) {
  const auto s = static_cast<int>(data.exponent());
  return {-4 * s, s, s};
}

inline Monomial normalization_shift(const TorusLinkSpec& spec) {
  return normalization_shift(normalization_data(spec));
}

/// Poincaré series of the homology of T(m, n): p(0^m, 0^n).
inline GradedSeries torus_link_homology(const TorusLinkSpec& spec, MemoTable& memo,
                                        const EvalOptions& options = {}) {
  spec.validate();
  return eval_p({BitString::zeros(static_cast<std::size_t>(spec.m)),
                 BitString::zeros(static_cast<std::size_t>(spec.n))},
                memo, options);
}

inline GradedSeries torus_link_homology(const TorusLinkSpec& spec) {
  MemoTable memo;
  return torus_link_homology(spec, memo);
}

/// torus_link_homology shifted by the normalization monomial. The result may
/// leave the (q,a,t) sublattice.
inline GradedSeries normalized_homology(const TorusLinkSpec& spec, MemoTable& memo,
                                        const EvalOptions& options = {}) {
  return torus_link_homology(spec, memo, options).scaled(normalization_shift(spec));
}

inline GradedSeries normalized_homology(const TorusLinkSpec& spec) {
  MemoTable memo;
  return normalized_homology(spec, memo);
}

/// p(v, w) / (1 - q) for |v| = |w| = 1: the homology of the torus braid
/// decorated by the shuffle braids of v and w.
inline GradedSeries shuffled_link_homology(const BitString& v, const BitString& w, MemoTable& memo,
                                           const EvalOptions& options = {}) {
  if (v.weight() != 1 || w.weight() != 1) {
    throw ColorError("shuffled links need |v| = |w| = 1, got |v| = " + std::to_string(v.weight()) +
                     ", |w| = " + std::to_string(w.weight()));
  }
  const GradedSeries p = eval_p({v, w}, memo, options);
  DenomVector den = p.denominator();
  den.add(1);
  return GradedSeries(p.numerator(), den);
}

/// prod_{i=1}^{l} 1/(1 - q t^{1-i}).
inline GradedSeries colored_prefactor(int l) {
  DenomVector den;
  for (int i = 1; i <= l; ++i) den.add(i);
  return GradedSeries(LaurentPoly(1), den);
}

enum class ColoredOrder {
  /// 1^l 0^{ml-l}, 1^l 0^{nl-l}
  theorem,
  /// 0^{ml-l} 1^l, 0^{nl-l} 1^l
  example,
};

inline SeqPair colored_pair(int m, int n, int l, ColoredOrder order) {
  const auto ones = BitString::ones(static_cast<std::size_t>(l));
  const auto zv = BitString::zeros(static_cast<std::size_t>(m * l - l));
  const auto zw = BitString::zeros(static_cast<std::size_t>(n * l - l));
  if (order == ColoredOrder::theorem) return {ones + zv, ones + zw};
  return {zv + ones, zw + ones};
}

inline void validate_colored(int m, int n, int l) {
  if (m <= 0 || n <= 0 || l <= 0) {
    throw DomainError("colored torus link needs m, n, l >= 1, got (" + std::to_string(m) + "," +
                      std::to_string(n) + "," + std::to_string(l) + ")");
  }
}

/// Sym^l-colored homology of T(m, n), up to an overall monomial:
/// prod_{i=1}^{l} (1 - q t^{1-i})^{-1} p(pair) for the chosen ordering.
inline GradedSeries colored_torus_homology(int m, int n, int l, ColoredOrder order, MemoTable& memo,
                                           const EvalOptions& options = {}) {
  validate_colored(m, n, l);
  return colored_prefactor(l) * eval_p(colored_pair(m, n, l, order), memo, options);
}

inline GradedSeries colored_torus_homology(int m, int n, int l) {
  MemoTable memo;
  return colored_torus_homology(m, n, l, ColoredOrder::theorem, memo);
}

/// Both orderings, with the monomial relating them when there is one.
struct ColoredComparison {
  GradedSeries theorem;
  GradedSeries example;
  std::optional<Monomial> example_over_theorem;
};

inline ColoredComparison colored_torus_homology_both(int m, int n, int l, MemoTable& memo,
                                                     const EvalOptions& options = {}) {
  ColoredComparison out;
  out.theorem = colored_torus_homology(m, n, l, ColoredOrder::theorem, memo, options);
  out.example = colored_torus_homology(m, n, l, ColoredOrder::example, memo, options);
  out.example_over_theorem = monomial_ratio(out.example, out.theorem);
  return out;
}

}  // namespace tlh
