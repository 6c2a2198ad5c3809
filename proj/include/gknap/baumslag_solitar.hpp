/* baumslag_solitar.hpp -- power-edge saturation for SSP over BS(n, +-n) */

#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "gknap/bigint.hpp"
#include "gknap/report.hpp"
#include "gknap/word.hpp"

namespace gknap {

// BS(n, sign*n) = <a, t | t^-1 a^n t = a^{sign*n}> over the fixed
// alphabet a = generator 0, t = generator 1.
struct BsParams {
  uint32_t n = 1;
  int sign = 1;  // +1 or -1
};

// Edges carry either a t-step or an a-power; a^0 doubles as epsilon.
struct PowerEdge {
  uint32_t src = 0;
  uint32_t tgt = 0;
  int8_t t_step = 0;  // +1 = t, -1 = t^-1, 0 = a-power
  BigInt apow;        // exponent c of a^c when t_step == 0
  int32_t marker = -1;
  std::array<int64_t, 3> parents{-1, -1, -1};
};

struct PowerEdgeGraph {
  uint32_t states = 0;
  uint32_t initial = 0;
  uint32_t final_state = 0;
  std::vector<PowerEdge> edges;
};

// Subset sum over BS(n, +-n): chain graph of skippable blocks followed by
// the inverted target, saturated with a-power composition and the
// t a^{cn} t^-1 pinch (sign-flipped for BS(n,-n)).  Exponent magnitudes
// stay within the total a-letter count of the input.
SolverReport bs_ssp(const BsParams& params, const std::vector<Word>& gens,
                    const Word& target);

}  // namespace gknap
