/* presentation.hpp -- finite group presentations and symmetrized relator sets */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gknap/word.hpp"

namespace gknap {

// A presentation <X | R>.  `symmetrized` is the closure of the cyclically
// reduced relators under inversion and cyclic shift, with duplicates
// removed; every solver works with that set.
struct Presentation {
  Alphabet alphabet;
  std::vector<Word> relators;     // as supplied (possibly unreduced)
  std::vector<Word> symmetrized;  // cyclically reduced closure, deduplicated

  bool is_free() const { return symmetrized.empty(); }

  // ||R|| = sum of |r| over the symmetrized set.
  uint64_t norm_sum() const;

  // C = max |r| over the symmetrized set, 0 when free.
  uint32_t max_relator_len() const;
};

// Validates the relators against the alphabet and computes the symmetrized
// closure.  Throws std::invalid_argument if a relator freely reduces to the
// identity.
Presentation make_presentation(Alphabet alphabet, std::vector<Word> relators);

// Parses "a,b | aa, bbb".  The part before '|' lists generator names, the
// part after lists relators; both comma separated.  Omitting '|' (or an
// empty relator list) gives a free group.
Presentation parse_presentation(const std::string& text);

}  // namespace gknap
