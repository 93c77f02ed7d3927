#pragma once

// Text forms of polynomials and series: human, LaTeX and the JSON wire
// format, plus a reader for the human polynomial syntax.
//
// Values on the (q,a,t) sublattice print in q, a, t; anything else prints
// in the raw Q, A, T lattice variables. Human and LaTeX output group the
// numerator by a-degree, each block ordered by t-degree then q-degree.

#include <array>
#include <cctype>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "tlh/errors.hpp"
#include "tlh/ring.hpp"

namespace tlh {

enum class Grading { qat, QAT };

/// One term with its exponents written in a chosen grading.
struct ExponentTerm {
  std::array<int, 3> exponents{};
  Integer coeff;

  friend bool operator==(const ExponentTerm&, const ExponentTerm&) = default;
};

/// Relabels the exponents of f: (i, j, k) of q^i a^j t^k for Grading::qat,
/// (qexp, aexp, texp) for Grading::QAT. Throws LatticeError when a term is
/// off the (q,a,t) sublattice and qat is requested.
inline std::vector<ExponentTerm> grading_convert(const LaurentPoly& f, Grading to) {
  std::vector<ExponentTerm> out;
  out.reserve(f.size());
  for (const auto& [m, c] : f.terms()) {
    if (to == Grading::qat) {
      const QatExponent e = to_qat(m);
      out.push_back({{e.q, e.a, e.t}, c});
    } else {
      out.push_back({{m.qexp, m.aexp, m.texp}, c});
    }
  }
  return out;
}

/// Inverse of grading_convert.
inline LaurentPoly from_exponent_terms(const std::vector<ExponentTerm>& terms, Grading from) {
  std::vector<LaurentPoly::Term> out;
  for (const auto& t : terms) {
    const Monomial m = from == Grading::qat
                           ? to_QAT({t.exponents[0], t.exponents[1], t.exponents[2]})
                           : Monomial{t.exponents[0], t.exponents[1], t.exponents[2]};
    out.emplace_back(m, t.coeff);
  }
  return LaurentPoly::from_terms(std::move(out));
}

inline bool on_qat_lattice(const LaurentPoly& f) {
  for (const auto& term : f.terms()) {
    if (!on_qat_lattice(term.first)) return false;
  }
  return true;
}

namespace detail {

enum class Style { human, latex };

struct Vars {
  Grading grading;
  std::array<const char*, 3> names;  // order: q-like, a-like, t-like
};

inline Vars vars_for(Grading g) {
  return g == Grading::qat ? Vars{g, {"q", "a", "t"}} : Vars{g, {"Q", "A", "T"}};
}

inline std::string power(const char* name, int e, Style style) {
  if (e == 0) return {};
  std::string s = name;
  if (e != 1) {
    s += style == Style::latex ? "^{" + std::to_string(e) + "}" : "^" + std::to_string(e);
  }
  return s;
}

inline std::string join_factors(const std::vector<std::string>& parts, Style style) {
  std::string out;
  for (const auto& p : parts) {
    if (p.empty()) continue;
    if (!out.empty() && style == Style::human) out += ' ';
    out += p;
  }
  return out;
}

// Non-a variable part of a term, q before t.
inline std::string rest_part(const std::array<int, 3>& e, const Vars& v, Style style) {
  return join_factors({power(v.names[0], e[0], style), power(v.names[2], e[2], style)}, style);
}

inline std::string with_coefficient(const Integer& abs_coeff, const std::string& vars, Style style) {
  if (vars.empty()) return abs_coeff.str();
  if (abs_coeff == 1) return vars;
  return abs_coeff.str() + (style == Style::human ? " " : "") + vars;
}

// Appends "s" to out as a signed summand.
inline void append_signed(std::string& out, bool negative, const std::string& s) {
  if (out.empty()) {
    out = negative ? "-" + s : s;
  } else {
    out += negative ? " - " : " + ";
    out += s;
  }
}

inline std::string render_numerator(const LaurentPoly& f, Style style) {
  if (f.is_zero()) return "0";
  const Vars v = vars_for(on_qat_lattice(f) ? Grading::qat : Grading::QAT);
  // a-degree -> terms sorted by (t, q)
  std::map<int, std::vector<ExponentTerm>> blocks;
  for (auto& t : grading_convert(f, v.grading)) blocks[t.exponents[1]].push_back(std::move(t));

  std::string out;
  for (auto& [adeg, terms] : blocks) {
    std::sort(terms.begin(), terms.end(), [](const ExponentTerm& x, const ExponentTerm& y) {
      return x.exponents[2] != y.exponents[2] ? x.exponents[2] < y.exponents[2]
                                              : x.exponents[0] < y.exponents[0];
    });
    const std::string apart = power(v.names[1], adeg, style);
    if (terms.size() == 1 || apart.empty()) {
      for (const auto& t : terms) {
        const std::string vars = join_factors({apart, rest_part(t.exponents, v, style)}, style);
        append_signed(out, t.coeff < 0, with_coefficient(abs(t.coeff), vars, style));
      }
      continue;
    }
    std::string inner;
    for (const auto& t : terms) {
      append_signed(inner, t.coeff < 0,
                    with_coefficient(abs(t.coeff), rest_part(t.exponents, v, style), style));
    }
    const std::string block = apart + (style == Style::human ? " (" : "(") + inner + ")";
    append_signed(out, false, block);
  }
  return out;
}

inline std::string render_denominator_factor(int i, Grading g, Style style) {
  const Vars v = vars_for(g);
  const Monomial m = DenomVector::factor_monomial(i);
  std::string vars;
  if (g == Grading::qat) {
    const QatExponent e = to_qat(m);
    vars = join_factors({power(v.names[0], e.q, style), power(v.names[2], e.t, style)}, style);
  } else {
    vars = join_factors({power(v.names[0], m.qexp, style), power(v.names[2], m.texp, style)}, style);
  }
  return style == Style::human ? "(1 - " + vars + ")" : "(1-" + vars + ")";
}

inline std::string render_denominator(const DenomVector& den, Grading g, Style style) {
  std::string out;
  for (const auto& [i, d] : den.entries()) {
    out += render_denominator_factor(i, g, style);
    if (d != 1) out += style == Style::latex ? "^{" + std::to_string(d) + "}" : "^" + std::to_string(d);
  }
  return out;
}

}  // namespace detail

inline std::string render_human(const LaurentPoly& f) {
  return detail::render_numerator(f, detail::Style::human);
}

inline std::string render_human(const GradedSeries& s) {
  std::string num = detail::render_numerator(s.numerator(), detail::Style::human);
  if (s.denominator().empty()) return num;
  const Grading g = on_qat_lattice(s.numerator()) ? Grading::qat : Grading::QAT;
  if (s.numerator().size() > 1) num = "(" + num + ")";
  std::string den = detail::render_denominator(s.denominator(), g, detail::Style::human);
  if (s.denominator().entries().size() > 1) den = "(" + den + ")";
  return num + "/" + den;
}

inline std::string render_latex(const LaurentPoly& f) {
  return detail::render_numerator(f, detail::Style::latex);
}

inline std::string render_latex(const GradedSeries& s) {
  const std::string num = detail::render_numerator(s.numerator(), detail::Style::latex);
  if (s.denominator().empty()) return num;
  const Grading g = on_qat_lattice(s.numerator()) ? Grading::qat : Grading::QAT;
  return "\\frac{" + num + "}{" +
         detail::render_denominator(s.denominator(), g, detail::Style::latex) + "}";
}

inline std::string render_json(const LaurentPoly& f) {
  std::string out = "[";
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    if (!first) out += ',';
    first = false;
    out += '[' + std::to_string(m.qexp) + ',' + std::to_string(m.aexp) + ',' +
           std::to_string(m.texp) + ',' + c.str() + ']';
  }
  return out + "]";
}

/// Byte-stable encoding: terms sorted by (qexp, aexp, texp), factors by i.
inline std::string render_json(const GradedSeries& s) {
  std::string out = "{\"num\":" + render_json(s.numerator()) + ",\"den\":[";
  bool first = true;
  for (const auto& [i, d] : s.denominator().entries()) {
    if (!first) out += ',';
    first = false;
    out += '[' + std::to_string(i) + ',' + std::to_string(d) + ']';
  }
  return out + "]}";
}

enum class Format { human, latex, json };

inline std::string render(const GradedSeries& s, Format f) {
  switch (f) {
    case Format::human:
      return render_human(s);
    case Format::latex:
      return render_latex(s);
    case Format::json:
      return render_json(s);
  }
  return {};
}

namespace detail {

// Recursive-descent reader for sums of products such as
// "-q^8 t + 2 q^4 t^2 + a (t + q)". Accepts q, a, t and Q, A, T, optional
// '*', and LaTeX-style braced exponents.
class PolyReader {
 public:
  explicit PolyReader(std::string_view text) : s_(text) {}

  LaurentPoly read() {
    LaurentPoly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  LaurentPoly expr() {
    LaurentPoly sum;
    bool negative = false;
    if (peek('+') || peek('-')) negative = s_[pos_++] == '-';
    sum = negative ? -product() : product();
    while (peek('+') || peek('-')) {
      negative = s_[pos_++] == '-';
      sum += negative ? -product() : product();
    }
    return sum;
  }

  bool starts_factor() {
    skip();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == '(' ||
           std::string_view("qatQAT").find(c) != std::string_view::npos;
  }

  LaurentPoly product() {
    if (!starts_factor()) fail("expected a term");
    LaurentPoly p = factor();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        p = p * factor();
      } else if (starts_factor()) {
        p = p * factor();
      } else {
        return p;
      }
    }
  }

  int exponent() {
    skip();
    const bool braced = peek('{');
    if (braced) ++pos_;
    skip();
    bool negative = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) negative = s_[pos_++] == '-';
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an exponent");
    const int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
    if (braced) {
      if (!peek('}')) fail("expected '}'");
      ++pos_;
    }
    return negative ? -e : e;
  }

  LaurentPoly factor() {
    skip();
    LaurentPoly base;
    bool is_monomial = true;
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      base = LaurentPoly(Integer(std::string(s_.substr(start, pos_ - start))));
      is_monomial = false;
    } else if (c == '(') {
      ++pos_;
      base = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      is_monomial = base.size() == 1 && base.terms().front().second == 1;
    } else {
      ++pos_;
      Monomial m;
      switch (c) {
        case 'q': m = qat(1, 0, 0); break;
        case 'a': m = qat(0, 1, 0); break;
        case 't': m = qat(0, 0, 1); break;
        case 'Q': m = {1, 0, 0}; break;
        case 'A': m = {0, 1, 0}; break;
        default: m = {0, 0, 1}; break;
      }
      base = LaurentPoly::monomial(m);
    }
    if (!peek('^')) return base;
    ++pos_;
    const int e = exponent();
    if (e >= 0) return base.pow(static_cast<unsigned>(e));
    if (!is_monomial) fail("negative power of a non-monomial");
    return LaurentPoly::monomial(base.terms().front().first.pow(e));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Reads a polynomial written in the human syntax (also accepts the LaTeX
/// numerator syntax).
inline LaurentPoly parse_poly(std::string_view text) { return detail::PolyReader(text).read(); }

}  // namespace tlh
