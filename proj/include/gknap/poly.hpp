/* poly.hpp -- small nonnegative-coefficient polynomials for size bounds */

#pragma once

#include <cstdint>
#include <vector>

namespace gknap {

// Coefficients highest degree first; {1, 8, 8} is x^2 + 8x + 8.
struct Poly {
  std::vector<uint64_t> coeffs;

  uint64_t eval(uint64_t x) const {
    uint64_t acc = 0;
    for (uint64_t c : coeffs) acc = acc * x + c;
    return acc;
  }
};

}  // namespace gknap
