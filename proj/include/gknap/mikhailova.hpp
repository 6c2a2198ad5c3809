/* mikhailova.hpp -- the F(X) x F(X) construction and its bounded word search */

#pragma once

#include <cstdint>
#include <vector>

#include "gknap/poly.hpp"
#include "gknap/presentation.hpp"
#include "gknap/report.hpp"
#include "gknap/word.hpp"

namespace gknap {

// An element of F(X) x F(X); canonical form keeps both sides reduced.
struct PairWord {
  Word left;
  Word right;
};

// The generator set {(r, 1) : r in R} u {(x, x^-1) : x in X^{+-1}} and the
// constants the membership bound needs.
struct MikhailovaGens {
  Presentation pres;
  std::vector<PairWord> gens;  // relator pairs first, then letter pairs
  size_t relator_count = 0;
  uint64_t C = 0;  // max relator length
};

MikhailovaGens build_generators(const Presentation& pres);

// m + 8*(C*m + w_len).
uint64_t membership_bound(uint64_t w_len, uint64_t m, uint64_t C);

// The word problem instance "w = 1 in <X | R>" as a bounded-length
// subgroup membership question for ((w, 1), n).
struct BgwpInstance {
  MikhailovaGens gens;
  PairWord target;
  uint64_t n = 0;
};

BgwpInstance wp_to_bgwp(const Presentation& pres, const Poly& dehn_poly,
                        const Word& w);

// Decomposition of a generator product with trivial right component into
// w_0 r_1 w_1 ... r_m w_m; both structure identities are re-verified by
// free reduction.  Factors are signed 1-based indices into gens.gens
// (negative = inverse).
struct WitnessExpansion {
  std::vector<Word> segments;  // w_0 .. w_m
  std::vector<Word> relators;  // r_1 .. r_m
  Word left_product;           // reduced product of the left components
};

WitnessExpansion expand_witness(const MikhailovaGens& gens,
                                const std::vector<int32_t>& factors);

// Bounded generalized word problem: is target a product of at most n
// generators and inverses?  The right component is peeled with letter
// pairs, then the left residue is searched by breadth-first relator
// insertion with canonical-form deduplication and length/area caps.
// Witness factors are encoded as 2*index + (1 if inverted); "no" is only
// reported when it is exact (abelianization obstruction or a closed
// search); a capped search that finds nothing reports unknown.
SolverReport bgwp_bruteforce(const MikhailovaGens& gens, const PairWord& target,
                             uint64_t n);

}  // namespace gknap
