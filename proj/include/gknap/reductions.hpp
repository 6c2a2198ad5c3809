/* reductions.hpp -- instance-to-instance transformations */

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gknap/oracles.hpp"
#include "gknap/report.hpp"
#include "gknap/word.hpp"

namespace gknap {

// --- bounded knapsack <-> subset sum --------------------------------------

// m copies of each generator in block order; a BKP exponent vector maps to
// the per-block count of taken copies.
std::vector<Word> bkp_to_ssp(const std::vector<Word>& gens, uint64_t m);

// SSP exponent vector (length k*m) back to BKP exponents (length k).
std::vector<int64_t> bkp_exponents_from_ssp(const std::vector<int64_t>& ssp_exps,
                                            size_t k, uint64_t m);

// --- bounded submonoid membership -> subset sum optimization ---------------

// m repeats of the whole generator list: w_1..w_k w_1..w_k ...
std::vector<Word> bsmp_to_ssop(const std::vector<Word>& gens, uint64_t m);

// Chosen blocks in order become the factor sequence.
std::vector<uint32_t> bsmp_factors_from_ssop(const std::vector<int64_t>& ssp_exps,
                                             size_t k);

// --- integer knapsack -> knapsack ------------------------------------------

// w_1, w_1^-1, w_2, w_2^-1, ...
std::vector<Word> ikp_to_kp(const std::vector<Word>& gens);

// KP exponents over the doubled list to signed IKP exponents.
std::vector<int64_t> ikp_exponents_from_kp(const std::vector<int64_t>& kp_exps);

// --- search from decision ---------------------------------------------------

// Recovers an SSP witness with at most k calls of a decision procedure:
// fix e_1 by deciding the k-1 tail instance, fold w_1 into the target if
// taken, repeat.  Returns nullopt when the decider answers "no" up front
// or "unknown" anywhere.
std::optional<std::vector<int64_t>> search_from_decision(
    const std::function<Decision(const std::vector<Word>&, const Word&)>& decide,
    std::vector<Word> gens, Word target);

// --- zero-one equations -> SSP over Z^omega ---------------------------------

struct ZoeInstance {
  uint32_t n = 0;
  std::vector<std::vector<int>> matrix;  // n rows of n entries in {0,1}
};

ZoeInstance parse_zoe(const std::string& text);  // "n\nrow\n...": 0/1, spaces

// Finitely supported integer sequence.
struct ZOmegaElement {
  std::map<uint32_t, int64_t> coords;  // zero coefficients never stored

  void add(uint32_t i, int64_t delta);
  bool operator==(const ZOmegaElement& o) const { return coords == o.coords; }
  bool is_zero() const { return coords.empty(); }
};

ZOmegaElement zomega_sum(const ZOmegaElement& a, const ZOmegaElement& b);

// Row i becomes sum_j a_ij e_j; target is e_1 + ... + e_n.
std::pair<std::vector<ZOmegaElement>, ZOmegaElement> zoe_to_ssp(const ZoeInstance& z);

// Exhaustive subset-sum over Z^omega elements.
BruteResult zomega_brute_ssp(const std::vector<ZOmegaElement>& gens,
                             const ZOmegaElement& target);
BruteResult zoe_bruteforce(const ZoeInstance& z);

// --- binary basis encoding ---------------------------------------------------

// e_i  -> 0101(00)^i 11,  -e_i -> 0100(00)^i 11.
std::string encode_basis(uint32_t i, int sign);
std::pair<uint32_t, int> decode_basis(const std::string& bits);  // throws on junk

// --- binary subset sum -> SSP over BS(1,2) -----------------------------------

// Each number sum 2^{n_j} becomes the word prod_j t^{-n_j} a t^{n_j} over
// alphabet {a, t}; the target number likewise.  Positive over BS(1,2) iff
// the numeric subset sum is solvable.
std::pair<std::vector<Word>, Word> binary_ssp_to_bs12(
    const std::vector<uint64_t>& numbers, uint64_t target);

}  // namespace gknap
