/* hyperbolic.hpp -- saturation-driven solvers over free and presented groups */

#pragma once

#include <cstdint>
#include <vector>

#include "gknap/automaton.hpp"
#include "gknap/poly.hpp"
#include "gknap/presentation.hpp"
#include "gknap/report.hpp"
#include "gknap/word.hpp"

namespace gknap {

// Exponent bound for knapsack: solve BKP with m = max(p(n), torsion_cap)
// where n is the summed instance length.
struct KpBoundConfig {
  Poly p{{1, 8, 8}};         // x^2 + 8x + 8
  uint64_t torsion_cap = 1;  // maximum torsion order E

  uint64_t bound_for(uint64_t n) const {
    uint64_t v = p.eval(n);
    return v > torsion_cap ? v : torsion_cap;
  }
};

// All solvers follow the same three-valued contract: an epsilon edge is a
// proof of "yes" (witness re-verified when a word-problem oracle for the
// presentation exists); an exhausted saturation yields "no" only when
// completeness is established -- free groups, a caller-vouched depth
// (params.trusted_depth), or an exact oracle cross-check -- and
// "unknown" otherwise.

// Subset sum: does some w_1^{e_1} ... w_k^{e_k} with e_i in {0,1} equal
// target in the presented group?
SolverReport solve_ssp(const Presentation& pres, const std::vector<Word>& gens,
                       const Word& target, const SaturationParams& params = {});

// Subset sum optimization: additionally minimizes the number of taken
// factors (cost).
SolverReport solve_ssop(const Presentation& pres, const std::vector<Word>& gens,
                        const Word& target, const SaturationParams& params = {});

// Bounded knapsack, exponents in [0, m].
SolverReport solve_bkp(const Presentation& pres, const std::vector<Word>& gens,
                       const Word& target, uint64_t m,
                       const SaturationParams& params = {});

// Bounded submonoid membership: product of at most m factors from gens,
// repetitions allowed; cost = minimal factor count.
SolverReport solve_bsmp(const Presentation& pres, const std::vector<Word>& gens,
                        const Word& target, uint64_t m,
                        const SaturationParams& params = {});

// Knapsack with nonnegative exponents.  Free groups are decided exactly
// (loop acceptor, no cap); otherwise exponents are capped by the bound
// and a "no" carries bound_used / bound_relative.
SolverReport solve_kp(const Presentation& pres, const std::vector<Word>& gens,
                      const Word& target, const KpBoundConfig& bound = {},
                      const SaturationParams& params = {});

// Knapsack optimization: minimal total exponent sum (exact over free
// groups, among bounded solutions otherwise).
SolverReport solve_kop(const Presentation& pres, const std::vector<Word>& gens,
                       const Word& target, const KpBoundConfig& bound = {},
                       const SaturationParams& params = {});

// Integer knapsack (signed exponents) by doubling the generator list.
SolverReport solve_ikp(const Presentation& pres, const std::vector<Word>& gens,
                       const Word& target, const KpBoundConfig& bound = {},
                       const SaturationParams& params = {});

// Minimal N with w_1^{e_1}...w_k^{e_k} u = target, |u| <= N: linear scan
// over N from 0 to |target|.  ssop1 takes e_i in {0,1}; kop1 allows
// nonnegative exponents through the knapsack bound.
SolverReport solve_ssop1(const Presentation& pres, const std::vector<Word>& gens,
                         const Word& target, const Alphabet& alphabet,
                         const SaturationParams& params = {});
SolverReport solve_kop1(const Presentation& pres, const std::vector<Word>& gens,
                        const Word& target, const Alphabet& alphabet,
                        const SaturationParams& params = {},
                        const KpBoundConfig& bound = {});

// Same minimization with u constrained to lie on the segment [1, target]:
// the product must be a prefix of the reduced target.  Free groups only.
SolverReport solve_ssop2(uint32_t free_rank, const std::vector<Word>& gens,
                         const Word& target, const SaturationParams& params = {});
SolverReport solve_kop2(uint32_t free_rank, const std::vector<Word>& gens,
                        const Word& target, const SaturationParams& params = {},
                        const KpBoundConfig& bound = {});

// Submonoid membership over a free group (unbounded factor count);
// cost = minimal factor count.
SolverReport solve_smp_free(uint32_t free_rank, const std::vector<Word>& gens,
                            const Word& target,
                            const SaturationParams& params = {});

}  // namespace gknap
