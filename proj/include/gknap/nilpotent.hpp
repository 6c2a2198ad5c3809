/* nilpotent.hpp -- ball enumeration and subset-sum DP over nilpotent groups */

#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "gknap/group_oracle.hpp"
#include "gknap/report.hpp"
#include "gknap/word.hpp"

namespace gknap {

// Cayley ball of a given radius: canonical elements in BFS order, each
// with a geodesic witness word.  Neighbours are recovered through the
// oracle plus the index map.
struct Ball {
  uint32_t radius = 0;
  std::vector<GroupOracle::Elem> elems;
  std::vector<Word> witness;  // witness[i] evaluates to elems[i], length = BFS depth
  std::map<GroupOracle::Elem, uint32_t> index;

  int64_t find(const GroupOracle::Elem& e) const {
    auto it = index.find(e);
    return it == index.end() ? -1 : static_cast<int64_t>(it->second);
  }
};

Ball build_ball(const GroupOracle& oracle, const Alphabet& alphabet, uint32_t n);

// Subset sum by the prefix-set recursion P_i = P_{i-1} u P_{i-1}*g_i,
// tracking the cheapest selection mask per element.  Reports the minimal
// number of taken factors as cost.  Needs gens.size() < 64.
SolverReport nilpotent_ssp(const GroupOracle& oracle, const Alphabet& alphabet,
                           const std::vector<Word>& gens, const Word& target);

// Bounded submonoid membership through the m-fold block expansion; cost =
// minimal factor count, witness lists factor indices in product order.
SolverReport nilpotent_bsmp(const GroupOracle& oracle, const Alphabet& alphabet,
                            const std::vector<Word>& gens, const Word& target,
                            uint64_t m);

}  // namespace gknap
