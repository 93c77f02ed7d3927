// Walks the rotation orbit of a filling and prints f(sigma) along the way.

#include <iostream>
#include <vector>

#include "tlh/tlh.hpp"

int main() {
  tlh::MemoTable memo;
  tlh::SigmaSeq sigma(3, {2, 0, 3});
  tlh::Filling filling = tlh::filling_from_sigma(sigma);

  for (int step = 0; step < 4 && filling.cols() > 0; ++step) {
    const auto s = tlh::sigma_from_filling(filling);
    std::cout << "sigma = (" << s.str() << ")  v = " << tlh::v_of_sigma(s).str()
              << "  w = " << tlh::w_of_sigma(s).str() << "\n"
              << filling.to_ascii() << "f = " << tlh::render_human(tlh::f_sigma(s, memo)) << "\n\n";
    // In the two-way case keep the branch that leaves the new cell empty.
    filling = tlh::rotation_case(filling) == tlh::RotationCase::vacancy ? tlh::rotate(filling, false)
                                                                          : tlh::rotate(filling);
  }
}
