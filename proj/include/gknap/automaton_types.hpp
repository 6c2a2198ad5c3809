/* automaton_types.hpp -- witness structures shared by graphs and reports */

#pragma once

#include <cstdint>
#include <vector>

namespace gknap {

// What a priced graph was built as.  Decides how derivation-tree leaf
// markers are turned into a solution witness.
enum class GraphKind {
  Plain,       // no witness interpretation
  SspChain,    // block chain, marker i = "block i taken"
  BsmpBlocks,  // m blocks of k choices, marker = block*gen_count + gen
  FreeSmp,     // bouquet, marker = gen index, repetitions allowed
  Kop1Chain,   // ssp chain plus letter layers, ssp markers only
  Kop2Prefix,  // prefix graphs, witness also carries the matched prefix
};

struct SolutionWitness {
  GraphKind kind = GraphKind::Plain;
  // SspChain / Kop1Chain / BsmpBlocks(expanded): epsilon_i per block.
  std::vector<int64_t> exponents;
  // BsmpBlocks / FreeSmp: generator indices in product order.
  std::vector<uint32_t> factors;
  // Kop2Prefix: length of the target prefix the product reached.
  uint32_t prefix_len = 0;
};

}  // namespace gknap
