/* group_oracle.hpp -- canonical-form arithmetic for nilpotent group classes */

#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "gknap/word.hpp"

namespace gknap {

// A group given by exact arithmetic on canonical forms.  Elements are
// fixed-length integer vectors; vector equality is group equality.
struct GroupOracle {
  using Elem = std::vector<int64_t>;

  virtual ~GroupOracle() = default;
  virtual uint32_t rank() const = 0;  // number of generators
  virtual Elem identity() const = 0;
  virtual Elem mul_letter(const Elem& e, Letter l) const = 0;
  // Lower bound on the word length of e (metric reject for searches).
  virtual uint64_t length_lower_bound(const Elem& e) const = 0;
};

// Z^d with componentwise addition; generator i shifts coordinate i.
std::unique_ptr<GroupOracle> free_abelian_oracle(uint32_t d);

// Discrete Heisenberg group: elements (x, y, z) composing by the
// unitriangular matrix law (x,y,z)(x',y',z') = (x+x', y+y', z+z'+x*y').
// Generator 0 shifts x, generator 1 shifts y.
std::unique_ptr<GroupOracle> heisenberg_oracle();

GroupOracle::Elem evaluate_word(const GroupOracle& o, const Word& w);

}  // namespace gknap
