#pragma once

// Exact arithmetic for graded dimensions.
//
// Everything lives on the (Q,A,T) exponent lattice. The derived variables
// q = Q^2, a = A Q^-2, t = T^2 Q^-2 span a sublattice; q^i a^j t^k sits at
// (2i - 2j - 2k, j, 2k). Series carry denominators drawn from the family
// (1 - q t^{1-i}) = (1 - Q^{2i} T^{2-2i}), i >= 1.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tlh/errors.hpp"

namespace tlh {

using Integer = boost::multiprecision::cpp_int;

/// Exponent vector on the (Q,A,T) lattice.
struct Monomial {
  int qexp = 0;
  int aexp = 0;
  int texp = 0;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;

  friend Monomial operator*(Monomial x, Monomial y) noexcept {
    return {x.qexp + y.qexp, x.aexp + y.aexp, x.texp + y.texp};
  }
  friend Monomial operator/(Monomial x, Monomial y) noexcept {
    return {x.qexp - y.qexp, x.aexp - y.aexp, x.texp - y.texp};
  }
  Monomial pow(int k) const noexcept { return {qexp * k, aexp * k, texp * k}; }
  bool is_one() const noexcept { return qexp == 0 && aexp == 0 && texp == 0; }
};

/// Exponents (i, j, k) of q^i a^j t^k.
struct QatExponent {
  int q = 0;
  int a = 0;
  int t = 0;

  friend auto operator<=>(const QatExponent&, const QatExponent&) = default;
};

constexpr Monomial qat(int i, int j, int k) noexcept {
  return {2 * i - 2 * j - 2 * k, j, 2 * k};
}

inline bool on_qat_lattice(Monomial m) noexcept {
  return m.qexp % 2 == 0 && m.texp % 2 == 0;
}

inline QatExponent to_qat(Monomial m) {
  if (!on_qat_lattice(m)) {
    throw LatticeError("monomial Q^" + std::to_string(m.qexp) + " A^" +
                       std::to_string(m.aexp) + " T^" + std::to_string(m.texp) +
                       " is not a (q,a,t) monomial");
  }
  return {m.qexp / 2 + m.aexp + m.texp / 2, m.aexp, m.texp / 2};
}

inline Monomial to_QAT(QatExponent e) noexcept { return qat(e.q, e.a, e.t); }

/// Twice the q-degree i = qexp/2 + aexp + texp/2. Doubled so that it stays
/// integral off the sublattice.
inline int twice_q_degree(Monomial m) noexcept {
  return m.qexp + 2 * m.aexp + m.texp;
}

/// Sparse integer Laurent polynomial in Q, A, T. Terms are kept sorted by
/// exponent with no zero coefficients, so equality is term-wise equality.
class LaurentPoly {
 public:
  using Term = std::pair<Monomial, Integer>;

  LaurentPoly() = default;
  LaurentPoly(int c) : LaurentPoly(Integer(c)) {}  // NOLINT(google-explicit-constructor)
  LaurentPoly(const Integer& c) {                   // NOLINT(google-explicit-constructor)
    if (c != 0) terms_.emplace_back(Monomial{}, c);
  }

  static LaurentPoly monomial(Monomial m, Integer c = 1) {
    LaurentPoly p;
    if (c != 0) p.terms_.emplace_back(m, std::move(c));
    return p;
  }

  /// Sums duplicate exponents and drops zeros.
  static LaurentPoly from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& x, const Term& y) { return x.first < y.first; });
    LaurentPoly p;
    p.terms_.reserve(terms.size());
    for (auto& term : terms) {
      if (!p.terms_.empty() && p.terms_.back().first == term.first) {
        p.terms_.back().second += term.second;
      } else {
        if (!p.terms_.empty() && p.terms_.back().second == 0) p.terms_.pop_back();
        p.terms_.push_back(std::move(term));
      }
    }
    if (!p.terms_.empty() && p.terms_.back().second == 0) p.terms_.pop_back();
    return p;
  }

  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  Integer coefficient(Monomial m) const {
    auto it = std::lower_bound(
        terms_.begin(), terms_.end(), m,
        [](const Term& term, const Monomial& key) { return term.first < key; });
    if (it == terms_.end() || it->first != m) return 0;
    return it->second;
  }

  LaurentPoly shifted(Monomial m) const {
    LaurentPoly p = *this;
    for (auto& term : p.terms_) term.first = term.first * m;
    return p;
  }

  LaurentPoly operator-() const {
    LaurentPoly p = *this;
    for (auto& term : p.terms_) term.second = -term.second;
    return p;
  }

  LaurentPoly& operator+=(const LaurentPoly& other) {
    *this = merge(*this, other, false);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& other) {
    *this = merge(*this, other, true);
    return *this;
  }

  friend LaurentPoly operator+(const LaurentPoly& x, const LaurentPoly& y) {
    return merge(x, y, false);
  }
  friend LaurentPoly operator-(const LaurentPoly& x, const LaurentPoly& y) {
    return merge(x, y, true);
  }

  friend LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y) {
    if (x.is_zero() || y.is_zero()) return {};
    if (y.size() == 1) return x.scaled_by_term(y.terms_.front());
    if (x.size() == 1) return y.scaled_by_term(x.terms_.front());
    std::vector<Term> products;
    products.reserve(x.size() * y.size());
    for (const auto& [mx, cx] : x.terms_) {
      for (const auto& [my, cy] : y.terms_) products.emplace_back(mx * my, cx * cy);
    }
    return from_terms(std::move(products));
  }

  LaurentPoly pow(unsigned k) const {
    LaurentPoly result(1);
    LaurentPoly base = *this;
    while (k != 0) {
      if (k & 1U) result = result * base;
      k >>= 1U;
      if (k != 0) base = base * base;
    }
    return result;
  }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  LaurentPoly scaled_by_term(const Term& t) const {
    LaurentPoly p = *this;
    for (auto& term : p.terms_) {
      term.first = term.first * t.first;
      term.second *= t.second;
    }
    return p;
  }

  static LaurentPoly merge(const LaurentPoly& x, const LaurentPoly& y, bool subtract) {
    LaurentPoly out;
    out.terms_.reserve(x.size() + y.size());
    auto ix = x.terms_.begin();
    auto iy = y.terms_.begin();
    while (ix != x.terms_.end() || iy != y.terms_.end()) {
      if (iy == y.terms_.end() || (ix != x.terms_.end() && ix->first < iy->first)) {
        out.terms_.push_back(*ix++);
      } else if (ix == x.terms_.end() || iy->first < ix->first) {
        out.terms_.emplace_back(iy->first, subtract ? Integer(-iy->second) : iy->second);
        ++iy;
      } else {
        Integer c = subtract ? Integer(ix->second - iy->second)
                             : Integer(ix->second + iy->second);
        if (c != 0) out.terms_.emplace_back(ix->first, std::move(c));
        ++ix;
        ++iy;
      }
    }
    return out;
  }

  std::vector<Term> terms_;
};

/// Divides f by (1 - m) when the division is exact.
///
/// Terms are partitioned into lines p + k*m of the lattice. f is divisible
/// iff the coefficients on every line sum to zero; the quotient coefficients
/// are then the running sums along each line.
inline std::optional<LaurentPoly> divide_one_minus(const LaurentPoly& f, Monomial m) {
  if (m.is_one()) return std::nullopt;
  if (f.is_zero()) return LaurentPoly{};

  const int Monomial::*axis = m.qexp != 0 ? &Monomial::qexp
                              : m.aexp != 0 ? &Monomial::aexp
                                            : &Monomial::texp;
  const int step = m.*axis;
  auto floor_div = [](int x, int y) {
    int q = x / y;
    if ((x % y != 0) && ((x < 0) != (y < 0))) --q;
    return q;
  };

  struct Placed {
    Monomial base;
    int k;
    const Integer* coeff;
  };
  std::vector<Placed> placed;
  placed.reserve(f.size());
  for (const auto& [mono, c] : f.terms()) {
    const int k = floor_div(mono.*axis, step);
    placed.push_back({mono / m.pow(k), k, &c});
  }
  std::sort(placed.begin(), placed.end(), [](const Placed& x, const Placed& y) {
    return x.base != y.base ? x.base < y.base : x.k < y.k;
  });

  std::vector<LaurentPoly::Term> quotient;
  std::size_t i = 0;
  while (i < placed.size()) {
    std::size_t j = i;
    Integer running = 0;
    while (j < placed.size() && placed[j].base == placed[i].base) {
      running += *placed[j].coeff;
      const bool line_continues =
          j + 1 < placed.size() && placed[j + 1].base == placed[i].base;
      const int next_k = line_continues ? placed[j + 1].k : placed[j].k + 1;
      if (running != 0) {
        for (int k = placed[j].k; k < next_k; ++k) {
          quotient.emplace_back(placed[i].base * m.pow(k), running);
        }
      }
      ++j;
    }
    if (running != 0) return std::nullopt;
    i = j;
  }
  return LaurentPoly::from_terms(std::move(quotient));
}

/// Multiset of denominator factors (1 - q t^{1-i}), keyed by i >= 1.
class DenomVector {
 public:
  DenomVector() = default;

  static Monomial factor_monomial(int i) noexcept { return {2 * i, 0, 2 - 2 * i}; }
  static LaurentPoly factor(int i) {
    return LaurentPoly(1) - LaurentPoly::monomial(factor_monomial(i));
  }

  int multiplicity(int i) const {
    auto it = mult_.find(i);
    return it == mult_.end() ? 0 : it->second;
  }

  void add(int i, int d = 1) {
    if (i < 1) throw Error("denominator index must be positive, got " + std::to_string(i));
    if (d <= 0) return;
    mult_[i] += d;
  }

  void remove_one(int i) {
    auto it = mult_.find(i);
    if (it == mult_.end()) return;
    if (--it->second == 0) mult_.erase(it);
  }

  bool empty() const noexcept { return mult_.empty(); }
  const std::map<int, int>& entries() const noexcept { return mult_; }

  /// Product of all factors as a polynomial.
  LaurentPoly expanded() const {
    LaurentPoly p(1);
    for (const auto& [i, d] : mult_) p = p * factor(i).pow(static_cast<unsigned>(d));
    return p;
  }

  friend bool operator==(const DenomVector&, const DenomVector&) = default;

 private:
  std::map<int, int> mult_;
};

/// Numerator over a product of (1 - q t^{1-i}) factors, always in lowest
/// terms with respect to that family.
class GradedSeries {
 public:
  GradedSeries() = default;
  GradedSeries(LaurentPoly num)  // NOLINT(google-explicit-constructor)
      : num_(std::move(num)) {}
  GradedSeries(LaurentPoly num, DenomVector den) : num_(std::move(num)), den_(std::move(den)) {
    canonicalize_in_place();
  }

  const LaurentPoly& numerator() const noexcept { return num_; }
  const DenomVector& denominator() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }

  GradedSeries scaled(Monomial m) const {
    GradedSeries s = *this;
    s.num_ = s.num_.shifted(m);
    return s;
  }

  GradedSeries operator-() const {
    GradedSeries s = *this;
    s.num_ = -s.num_;
    return s;
  }

  friend GradedSeries operator+(const GradedSeries& x, const GradedSeries& y) {
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    DenomVector lcd = x.den_;
    for (const auto& [i, d] : y.den_.entries()) {
      const int missing = d - lcd.multiplicity(i);
      if (missing > 0) lcd.add(i, missing);
    }
    return GradedSeries(x.lifted_numerator(lcd) + y.lifted_numerator(lcd), lcd);
  }

  friend GradedSeries operator-(const GradedSeries& x, const GradedSeries& y) { return x + (-y); }

  friend GradedSeries operator*(const GradedSeries& x, const GradedSeries& y) {
    if (x.is_zero() || y.is_zero()) return {};
    DenomVector den = x.den_;
    for (const auto& [i, d] : y.den_.entries()) den.add(i, d);
    return GradedSeries(x.num_ * y.num_, den);
  }

  friend bool operator==(const GradedSeries&, const GradedSeries&) = default;

 private:
  // Numerator rewritten over a denominator that contains den_.
  LaurentPoly lifted_numerator(const DenomVector& target) const {
    LaurentPoly p = num_;
    for (const auto& [i, d] : target.entries()) {
      const int extra = d - den_.multiplicity(i);
      if (extra > 0) p = p * DenomVector::factor(i).pow(static_cast<unsigned>(extra));
    }
    return p;
  }

  void canonicalize_in_place() {
    if (num_.is_zero()) {
      den_ = {};
      return;
    }
    std::vector<int> indices;
    for (const auto& [i, d] : den_.entries()) indices.push_back(i);
    for (int i : indices) {
      while (den_.multiplicity(i) > 0) {
        auto quotient = divide_one_minus(num_, DenomVector::factor_monomial(i));
        if (!quotient) break;
        num_ = std::move(*quotient);
        den_.remove_one(i);
      }
    }
  }

  LaurentPoly num_;
  DenomVector den_;
};

inline GradedSeries canonicalize_series(LaurentPoly num, DenomVector den) {
  return GradedSeries(std::move(num), std::move(den));
}

/// Value equality by cross-multiplication; agrees with == on canonical data.
inline bool equal_as_values(const GradedSeries& x, const GradedSeries& y) {
  return x.numerator() * y.denominator().expanded() ==
         y.numerator() * x.denominator().expanded();
}

/// The monomial m with x == m * y, if there is one.
inline std::optional<Monomial> monomial_ratio(const GradedSeries& x, const GradedSeries& y) {
  if (x.is_zero() || y.is_zero()) {
    if (x.is_zero() && y.is_zero()) return Monomial{};
    return std::nullopt;
  }
  if (x.denominator() != y.denominator() || x.numerator().size() != y.numerator().size()) {
    return std::nullopt;
  }
  const Monomial m = x.numerator().terms().front().first / y.numerator().terms().front().first;
  if (y.numerator().shifted(m) != x.numerator()) return std::nullopt;
  return m;
}

/// Terms of the power-series expansion of s with q-degree at most max_degree.
inline LaurentPoly expand_series(const GradedSeries& s, int max_degree) {
  if (s.is_zero()) return {};
  const int bound = 2 * max_degree;
  auto truncate = [bound](const LaurentPoly& p) {
    std::vector<LaurentPoly::Term> kept;
    for (const auto& term : p.terms()) {
      if (twice_q_degree(term.first) <= bound) kept.push_back(term);
    }
    return LaurentPoly::from_terms(std::move(kept));
  };

  int lowest = twice_q_degree(s.numerator().terms().front().first);
  for (const auto& term : s.numerator().terms()) lowest = std::min(lowest, twice_q_degree(term.first));
  LaurentPoly result = truncate(s.numerator());
  if (lowest > bound) return result;
  const int max_power = (bound - lowest) / 2;

  for (const auto& [i, d] : s.denominator().entries()) {
    std::vector<LaurentPoly::Term> geometric;
    for (int k = 0; k <= max_power; ++k) {
      geometric.emplace_back(DenomVector::factor_monomial(i).pow(k), 1);
    }
    const LaurentPoly series = LaurentPoly::from_terms(std::move(geometric));
    for (int rep = 0; rep < d; ++rep) result = truncate(result * series);
  }
  return result;
}

}  // namespace tlh
