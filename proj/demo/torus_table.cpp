// Prints the homology of T(m, n) for small m <= n, sharing one memo table,
// together with the leading coefficients of the q-expansion.

#include <iostream>

#include "tlh/tlh.hpp"

int main() {
  tlh::MemoTable memo;
  for (int m = 1; m <= 4; ++m) {
    for (int n = m; n <= 5; ++n) {
      const auto series = tlh::torus_link_homology({m, n}, memo);
      std::cout << "T(" << m << "," << n << ") = " << tlh::render_human(series) << "\n";
      std::cout << "  up to q^3: " << tlh::render_human(tlh::expand_series(series, 3)) << "\n";
    }
  }
  const auto st = memo.stats();
  std::cout << "memo entries: " << st.entries << ", hits: " << st.hits << "\n";
}
