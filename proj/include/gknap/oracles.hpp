/* oracles.hpp -- word problem oracles and brute-force reference solvers */

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "gknap/bigint.hpp"
#include "gknap/presentation.hpp"
#include "gknap/report.hpp"
#include "gknap/word.hpp"

namespace gknap {

// Answers "is w the identity of G" exactly.
using WpOracle = std::function<bool(const Word&)>;

WpOracle wp_free(uint32_t rank);

// Free product of cyclic groups: generator i has order orders[i];
// order 0 means an infinite factor.
WpOracle wp_free_product_cyclic(std::vector<uint64_t> orders);

// Baumslag-Solitar BS(m, n) = <a, t | t^-1 a^m t = a^n> over alphabet
// {a, t} with a = generator 0.  Britton reduction; m, n nonzero.
WpOracle wp_bs(int64_t m, int64_t n);

// Independent BS(1,2) check through the affine action a: x -> x + 1,
// t: x -> x / 2 on dyadic rationals.
WpOracle wp_bs12_affine();

// Z^rank written multiplicatively.
WpOracle wp_abelianization(uint32_t rank);

// Discrete Heisenberg group on two generators.
WpOracle wp_heisenberg();

// Exact oracle when the presentation is recognizably free or a free
// product of cyclics (every relator a power of a single generator).
std::optional<WpOracle> oracle_for_presentation(const Presentation& p);

// --- reference solvers ----------------------------------------------------
//
// Plain enumerations against a word problem oracle.  They are the ground
// truth the graph solvers are checked against, so they share no code with
// the solver path.  Each takes a node cap; when the enumeration would
// exceed it the result reports cap_exceeded instead of guessing.

struct BruteResult {
  Decision decision = Decision::Unknown;
  std::vector<int64_t> exponents;  // subset/knapsack witnesses
  std::vector<uint32_t> factors;   // submonoid witnesses
  std::optional<BigInt> cost;      // optimization variants
  bool cap_exceeded = false;
};

// Subset sum: all 2^k sign vectors.
BruteResult brute_ssp(const WpOracle& wp, const std::vector<Word>& gens,
                      const Word& target, uint64_t max_nodes = 1u << 22);

// Subset sum optimization: minimal number of taken blocks.
BruteResult brute_ssop(const WpOracle& wp, const std::vector<Word>& gens,
                       const Word& target, uint64_t max_nodes = 1u << 22);

// Bounded knapsack, exponents in [0, m]: all (m+1)^k vectors.
BruteResult brute_bkp(const WpOracle& wp, const std::vector<Word>& gens,
                      const Word& target, uint64_t m,
                      uint64_t max_nodes = 1u << 22);

// Bounded submonoid membership: all products of at most m factors.
BruteResult brute_bsmp(const WpOracle& wp, const std::vector<Word>& gens,
                       const Word& target, uint64_t m,
                       uint64_t max_nodes = 1u << 22);

// Knapsack with exponent cap against an arbitrary oracle (same search
// space as brute_bkp with m = cap).
BruteResult brute_kp(const WpOracle& wp, const std::vector<Word>& gens,
                     const Word& target, uint64_t cap,
                     uint64_t max_nodes = 1u << 22);

// Knapsack over a free group with exponent cap, free reduction maintained
// incrementally along the search tree.
BruteResult brute_kp_free(const std::vector<Word>& gens, const Word& target,
                          uint64_t cap, uint64_t max_nodes = 1u << 26);

// Minimal N such that some w_1^{e_1}..w_k^{e_k} u = target with |u| <= N,
// e_i in [0, cap], over a free group.  cost = N*, exponents = argmin.
// cap = 1 gives the subset (0/1) variant.
BruteResult brute_kop1_free(const std::vector<Word>& gens, const Word& target,
                            uint64_t cap = 1);

// Same with u restricted to suffixes of the reduced target; also reports
// the matched prefix length in factors[0] when solvable.
BruteResult brute_kop2_free(const std::vector<Word>& gens, const Word& target,
                            uint64_t cap = 1);

}  // namespace gknap
