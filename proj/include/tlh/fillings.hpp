#pragma once

// Admissible fillings of an r x N grid by 1, 0 and *, their sequences
// sigma, v(sigma), w(sigma), rotation, and the identities relating
// f(sigma) = p(v, w) and g(sigma) = p(v, w0).
//
// Rows are numbered from the top. Column i of the filling for sigma holds
// sigma_i zeros, then (if sigma_i < r) a 1 followed by stars.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tlh/recursion.hpp"

namespace tlh {

/// A sequence in {0, ..., r}^N.
class SigmaSeq {
 public:
  SigmaSeq(int r, std::vector<int> entries) : r_(r), entries_(std::move(entries)) {
    if (r_ < 1) throw DomainError("sigma needs r >= 1, got " + std::to_string(r_));
    for (int x : entries_) {
      if (x < 0 || x > r_) {
        throw DomainError("sigma entry " + std::to_string(x) + " outside [0, " + std::to_string(r_) +
                          "]");
      }
    }
  }

  int r() const noexcept { return r_; }
  std::size_t size() const noexcept { return entries_.size(); }
  const std::vector<int>& entries() const noexcept { return entries_; }
  int operator[](std::size_t i) const noexcept { return entries_[i]; }

  /// #{i : sigma_i < r}, the number of occupied columns.
  int occupied() const noexcept {
    return static_cast<int>(std::count_if(entries_.begin(), entries_.end(),
                                          [this](int x) { return x < r_; }));
  }

  SigmaSeq appended(int k) const {
    auto e = entries_;
    e.push_back(k);
    return {r_, std::move(e)};
  }
  SigmaSeq prepended(int k) const {
    std::vector<int> e{k};
    e.insert(e.end(), entries_.begin(), entries_.end());
    return {r_, std::move(e)};
  }
  SigmaSeq reversed() const {
    return {r_, std::vector<int>(entries_.rbegin(), entries_.rend())};
  }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i != 0) s += ',';
      s += std::to_string(entries_[i]);
    }
    return s;
  }

  friend bool operator==(const SigmaSeq&, const SigmaSeq&) = default;

 private:
  int r_;
  std::vector<int> entries_;
};

inline SigmaSeq rev(const SigmaSeq& s) { return s.reversed(); }

enum class Cell : char { Zero = '0', One = '1', Star = '*' };

class Filling {
 public:
  /// Validates admissibility: at most one 1 per column, stars exactly below
  /// a 1, zeros elsewhere.
  Filling(int rows, int cols, std::vector<Cell> cells)
      : rows_(rows), cols_(cols), cells_(std::move(cells)) {
    if (rows_ < 1 || cols_ < 0 ||
        cells_.size() != static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_)) {
      throw AdmissibilityError("filling dimensions do not match its cells");
    }
    for (int c = 0; c < cols_; ++c) {
      bool below_one = false;
      for (int r = 0; r < rows_; ++r) {
        const Cell x = at(r, c);
        if (below_one) {
          if (x != Cell::Star) throw AdmissibilityError(where(r, c) + " must be '*' below a '1'");
        } else if (x == Cell::One) {
          below_one = true;
        } else if (x == Cell::Star) {
          throw AdmissibilityError(where(r, c) + " is '*' with no '1' above it");
        }
      }
    }
  }

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  Cell at(int row, int col) const { return cells_[index(row, col)]; }
  const std::vector<Cell>& cells() const noexcept { return cells_; }

  /// Row of the 1 in column col, if the column is occupied.
  std::optional<int> one_row(int col) const {
    for (int r = 0; r < rows_; ++r) {
      if (at(r, col) == Cell::One) return r;
    }
    return std::nullopt;
  }

  /// Whether no row holds two 1s. Not required for admissibility here.
  bool rows_have_distinct_ones() const {
    for (int r = 0; r < rows_; ++r) {
      int ones = 0;
      for (int c = 0; c < cols_; ++c) ones += at(r, c) == Cell::One ? 1 : 0;
      if (ones > 1) return false;
    }
    return true;
  }

  /// One line per row, top first, cells separated by spaces.
  std::string to_ascii() const {
    std::string out;
    for (int r = 0; r < rows_; ++r) {
      for (int c = 0; c < cols_; ++c) {
        if (c != 0) out += ' ';
        out += static_cast<char>(at(r, c));
      }
      out += '\n';
    }
    return out;
  }

  friend bool operator==(const Filling&, const Filling&) = default;

 private:
  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(col);
  }
  static std::string where(int r, int c) {
    return "cell (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ")";
  }

  int rows_;
  int cols_;
  std::vector<Cell> cells_;
};

inline Filling filling_from_sigma(const SigmaSeq& s) {
  const int rows = s.r();
  const int cols = static_cast<int>(s.size());
  std::vector<Cell> cells(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Cell::Zero);
  for (int c = 0; c < cols; ++c) {
    const int zeros = s[static_cast<std::size_t>(c)];
    for (int r = zeros; r < rows; ++r) {
      cells[static_cast<std::size_t>(r * cols + c)] = r == zeros ? Cell::One : Cell::Star;
    }
  }
  return {rows, cols, std::move(cells)};
}

inline SigmaSeq sigma_from_filling(const Filling& f) {
  std::vector<int> e;
  for (int c = 0; c < f.cols(); ++c) e.push_back(f.one_row(c).value_or(f.rows()));
  return {f.rows(), std::move(e)};
}

inline BitString v_of_filling(const Filling& f) {
  BitString v;
  for (int c = 0; c < f.cols(); ++c) v = v.appended(f.one_row(c).has_value());
  return v;
}

/// Reads the cells row by row from the bottom, left to right, skipping stars.
inline BitString w_of_filling(const Filling& f) {
  std::string bits;
  for (int r = f.rows() - 1; r >= 0; --r) {
    for (int c = 0; c < f.cols(); ++c) {
      const Cell x = f.at(r, c);
      if (x != Cell::Star) bits += x == Cell::One ? '1' : '0';
    }
  }
  return BitString(bits);
}

inline BitString v_of_sigma(const SigmaSeq& s) { return v_of_filling(filling_from_sigma(s)); }
inline BitString w_of_sigma(const SigmaSeq& s) { return w_of_filling(filling_from_sigma(s)); }

/// Rebuilds the filling from w by reading w right to left while filling
/// cells right to left, top row first; cells under a placed 1 are stars.
inline Filling filling_from_w(int rows, int cols, const BitString& w) {
  if (rows < 1 || cols < 0) throw ReconstructionError("grid must have r >= 1 and N >= 0");
  std::vector<Cell> cells(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Cell::Zero);
  std::vector<bool> occupied(static_cast<std::size_t>(cols), false);
  std::size_t next = w.size();
  for (int r = 0; r < rows; ++r) {
    for (int c = cols - 1; c >= 0; --c) {
      Cell& cell = cells[static_cast<std::size_t>(r * cols + c)];
      if (occupied[static_cast<std::size_t>(c)]) {
        cell = Cell::Star;
        continue;
      }
      if (next == 0) {
        throw ReconstructionError("w = \"" + w.str() + "\" is too short for a " + std::to_string(rows) +
                                  "x" + std::to_string(cols) + " filling");
      }
      if (w[--next]) {
        cell = Cell::One;
        occupied[static_cast<std::size_t>(c)] = true;
      }
    }
  }
  if (next != 0) {
    throw ReconstructionError("w = \"" + w.str() + "\" is too long for a " + std::to_string(rows) +
                              "x" + std::to_string(cols) + " filling");
  }
  return {rows, cols, std::move(cells)};
}

enum class RotationCase {
  /// Right-most column is 1, *, ..., *: it is deleted.
  delete_column,
  /// Right-most column occupied below the top row: it moves to the front,
  /// shifted up one row.
  shift_occupied,
  /// Right-most column unoccupied: it moves to the front shifted up, leaving
  /// the bottom-left cell to be filled.
  vacancy,
};

inline RotationCase rotation_case(const Filling& f) {
  if (f.cols() < 1) throw FillArgError("cannot rotate a filling with no columns");
  const auto row = f.one_row(f.cols() - 1);
  if (!row) return RotationCase::vacancy;
  return *row == 0 ? RotationCase::delete_column : RotationCase::shift_occupied;
}

/// Deletes the top-right entry and moves every label to its successor in
/// the reading order. `fill` supplies the bottom-left cell and must be given
/// exactly in the vacancy case.
inline Filling rotate(const Filling& f, std::optional<bool> fill = std::nullopt) {
  const RotationCase kind = rotation_case(f);
  if ((kind == RotationCase::vacancy) != fill.has_value()) {
    throw FillArgError(kind == RotationCase::vacancy
                           ? "rotation leaves a vacancy; a fill bit is required"
                           : "rotation leaves no vacancy; no fill bit may be given");
  }
  const int rows = f.rows();
  const int cols = f.cols();
  if (kind == RotationCase::delete_column) {
    std::vector<Cell> cells;
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < cols - 1; ++c) cells.push_back(f.at(r, c));
    }
    return {rows, cols - 1, std::move(cells)};
  }
  std::vector<Cell> cells(f.cells().size());
  auto put = [&](int r, int c, Cell x) { cells[static_cast<std::size_t>(r * cols + c)] = x; };
  for (int r = 0; r < rows; ++r) {
    for (int c = 1; c < cols; ++c) put(r, c, f.at(r, c - 1));
  }
  for (int r = 0; r + 1 < rows; ++r) put(r, 0, f.at(r + 1, cols - 1));
  if (kind == RotationCase::shift_occupied) {
    put(rows - 1, 0, Cell::Star);
  } else {
    put(rows - 1, 0, *fill ? Cell::One : Cell::Zero);
  }
  return {rows, cols, std::move(cells)};
}

/// Both fillings of the vacancy case: (fill 0, fill 1).
inline std::pair<Filling, Filling> rotate_both(const Filling& f) {
  return {rotate(f, false), rotate(f, true)};
}

/// c(sigma) = inv(sigma) + sum_{k=1}^{r} C(#{i : k <= sigma_i <= r}, 2).
inline std::size_t c_statistic(const SigmaSeq& s) {
  std::size_t c = inversions(std::span<const int>(s.entries()));
  for (int k = 1; k <= s.r(); ++k) {
    const auto count = static_cast<std::size_t>(
        std::count_if(s.entries().begin(), s.entries().end(), [k](int x) { return x >= k; }));
    if (count >= 2) c += count * (count - 1) / 2;
  }
  return c;
}

inline SeqPair sigma_pair(const SigmaSeq& s) { return {v_of_sigma(s), w_of_sigma(s)}; }

/// f(sigma) = p(v(sigma), w(sigma)).
inline GradedSeries f_sigma(const SigmaSeq& s, MemoTable& memo, const EvalOptions& options = {}) {
  return eval_p(sigma_pair(s), memo, options);
}

/// g(sigma) = p(v(sigma), w(sigma)0).
inline GradedSeries g_sigma(const SigmaSeq& s, MemoTable& memo, const EvalOptions& options = {}) {
  const SeqPair p = sigma_pair(s);
  return eval_p({p.v, p.w.appended(false)}, memo, options);
}

struct IdentityCheck {
  std::string name;  // "L1", ..., "K3"
  int k = -1;        // the k of L2, K1a, K2; -1 otherwise
  bool pass = false;
  GradedSeries lhs;
  GradedSeries rhs;
};

struct Lemma53Report {
  SigmaSeq sigma;
  std::vector<IdentityCheck> checks;

  bool all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.pass; });
  }
};

/// Evaluates both sides of every identity whose prefix is sigma:
///   L1  f(s0)   = (t^l + a) f(s)
///   L2  f(sk)   = f((k-1)s)                         1 <= k <= r-1
///   L3  f(sr)   = t^-l f((r-1)s) + q t^-l f(rs)
///   K1a g(sk0)  = (t^{l+1} + a) g((k-1)s)           1 <= k <= r-1
///   K1b g(sr0)  = g((r-1)s)
///   K2  g(sk)   = g((k-1)s)                         1 <= k <= r-1
///   K3  g(sr)   = t^-l g((r-1)s) + q t^-l g(rs)
/// with l = #{i : s_i < r}. K1a is not checked at k = 0, where (k-1)s is
/// not a sequence.
inline Lemma53Report verify_lemma53(const SigmaSeq& s, MemoTable& memo,
                                    const EvalOptions& options = {}) {
  const int r = s.r();
  const int l = s.occupied();
  auto f = [&](const SigmaSeq& x) { return f_sigma(x, memo, options); };
  auto g = [&](const SigmaSeq& x) { return g_sigma(x, memo, options); };
  auto times = [](const LaurentPoly& factor, const GradedSeries& x) {
    return GradedSeries(x.numerator() * factor, x.denominator());
  };
  auto rotation_sum = [&](const GradedSeries& occupied, const GradedSeries& empty) {
    return occupied.scaled(qat(0, 0, -l)) + empty.scaled(qat(1, 0, -l));
  };

  Lemma53Report report{s, {}};
  auto record = [&](std::string name, int k, GradedSeries lhs, GradedSeries rhs) {
    const bool pass = lhs == rhs;
    report.checks.push_back({std::move(name), k, pass, std::move(lhs), std::move(rhs)});
  };

  record("L1", -1, f(s.appended(0)), times(t_power_plus_a(l), f(s)));
  for (int k = 1; k <= r - 1; ++k) record("L2", k, f(s.appended(k)), f(s.prepended(k - 1)));
  record("L3", -1, f(s.appended(r)), rotation_sum(f(s.prepended(r - 1)), f(s.prepended(r))));
  for (int k = 1; k <= r - 1; ++k) {
    record("K1a", k, g(s.appended(k).appended(0)), times(t_power_plus_a(l + 1), g(s.prepended(k - 1))));
  }
  record("K1b", -1, g(s.appended(r).appended(0)), g(s.prepended(r - 1)));
  for (int k = 1; k <= r - 1; ++k) record("K2", k, g(s.appended(k)), g(s.prepended(k - 1)));
  record("K3", -1, g(s.appended(r)), rotation_sum(g(s.prepended(r - 1)), g(s.prepended(r))));
  return report;
}

}  // namespace tlh
