#pragma once

// Published reference values, transcribed term by term. Used by the
// `check paper-values` suite and the acceptance tests.

#include <array>
#include <string_view>
#include <vector>

#include "tlh/render.hpp"
#include "tlh/ring.hpp"

namespace tlh::known {

/// Poincaré series of T(4,6) as
///   t^-8 (1+a) / (1-q)^2 * (B0 + a B1 + a^2 B2 + a^3 B3),
/// one string per a-degree block, line breaks as in the source display.
inline constexpr std::array<std::string_view, 4> kTorus46Blocks = {
    "- q^8 t - q^7 t^2 - q^6 t^3 - q^5 t^4 - q^4 t^5 - q^3 t^6 - q^2 t^7 - q t^8"
    " + q^8 + q^7 t + q t^7 + t^8"
    " + q^6 t - q^4 t^3 - q^3 t^4 + q t^6"
    " + q^5 t + 2 q^4 t^2 + 2 q^3 t^3 + 2 q^2 t^4 + q t^5",

    "-q^7 t - q^6 t^2 - q^5 t^3 - q^4 t^4 - q^3 t^5 - q^2 t^6 - q t^7"
    " + q^7 - q^5 t^2 - q^4 t^3 - q^3 t^4 - q^2 t^5 + t^7"
    " + q^6 + q^5 t - q^4 t^2 - 2 q^3 t^3 - q^2 t^4 + q t^5 + t^6"
    " + q^5 +3 q^4 t + 3 q^3 t^2 + 3 q^2 t^3 + 3 q t^4 + t^5"
    " + q^3 t + q^2 t^2 + q t^3",

    "-q^5 t - q^4 t^2 - q^3 t^3 - q^2 t^4 - q t^5"
    " +q^5 - q^3 t^2 - q^2 t^3 + t^5"
    " + q^4 + q^3 t + q t^3 + t^4"
    " + q^3 + 2 q^2 t + 2 q t^2 + t^3",

    "-q^2t - qt^2 + q^2 + qt + t^2",
};

inline GradedSeries torus_4_6() {
  LaurentPoly bracket;
  for (std::size_t j = 0; j < kTorus46Blocks.size(); ++j) {
    bracket += parse_poly(kTorus46Blocks[j]).shifted(qat(0, static_cast<int>(j), 0));
  }
  const LaurentPoly prefactor = parse_poly("t^-8 (1 + a)");
  DenomVector den;
  den.add(1, 2);
  return GradedSeries(prefactor * bracket, den);
}

/// prod_{i=1}^{l} (t^{i-1} + a) / (1 - q t^{1-i}).
inline GradedSeries colored_unknot(int l) {
  LaurentPoly num(1);
  DenomVector den;
  for (int i = 1; i <= l; ++i) {
    num = num * (LaurentPoly::monomial(qat(0, 0, i - 1)) + LaurentPoly::monomial(qat(0, 1, 0)));
    den.add(i);
  }
  return GradedSeries(num, den);
}

/// Reduced Sym^2-colored trefoil.
inline constexpr std::string_view kTrefoilSym2Reduced =
    "t^5 + q t^3 + q^2 t + q t^2 + a(t^3 +q t  + t^2  + q) + a^2";

/// Sym^2-colored trefoil, defined up to an overall monomial:
///   t^-5 (1+a)(t+a) / ((1-q)(1-q t^-1)) * reduced.
inline GradedSeries colored_trefoil_sym2() {
  DenomVector den;
  den.add(1);
  den.add(2);
  return GradedSeries(parse_poly("t^-5 (1+a) (t+a)") * parse_poly(kTrefoilSym2Reduced), den);
}

/// The 5 x 4 filling example.
struct SigmaExample {
  int r = 5;
  std::vector<int> sigma{3, 0, 1, 5};
  std::string_view v = "1110";
  std::string_view w = "010000100100";
  std::string_view grid =
      "0 1 0 0\n"
      "0 * 1 0\n"
      "0 * * 0\n"
      "1 * * 0\n"
      "* * * 0\n";
};

}  // namespace tlh::known
