/* hyperbolic.cpp -- saturation drivers for the knapsack problem family */

#include "gknap/hyperbolic.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>

#include "gknap/oracles.hpp"
#include "gknap/reductions.hpp"

namespace gknap {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void check_instance(const Presentation& pres, const std::vector<Word>& gens,
                    const Word& target) {
  if (target.alphabet_size != pres.alphabet.size)
    throw std::invalid_argument("target alphabet mismatch");
  for (const Word& w : gens)
    if (w.alphabet_size != pres.alphabet.size)
      throw std::invalid_argument("generator alphabet mismatch");
}

uint64_t instance_size(const std::vector<Word>& gens, const Word& target) {
  uint64_t l = target.letters.size();
  for (const Word& w : gens) l += w.letters.size();
  return l;
}

void fill_stats(SolverReport& rep, const PricedAutomaton& g,
                Clock::time_point t0, bool keep_graph = false) {
  rep.stats.states = g.state_count();
  rep.stats.edges = g.edges.size();
  rep.stats.rounds = g.rounds;
  rep.stats.millis = ms_since(t0);
  if (keep_graph) rep.graph = std::make_shared<PricedAutomaton>(g);
}

Word product_of_exponents(uint32_t alphabet, const std::vector<Word>& gens,
                          const std::vector<int64_t>& exps) {
  Word acc{alphabet, {}};
  for (size_t i = 0; i < gens.size() && i < exps.size(); ++i)
    for (int64_t j = 0; j < exps[i]; ++j)
      acc = free_reduce(concat(acc, gens[i]));
  return acc;
}

Word product_of_factors(uint32_t alphabet, const std::vector<Word>& gens,
                        const std::vector<uint32_t>& factors) {
  Word acc{alphabet, {}};
  for (uint32_t f : factors) acc = free_reduce(concat(acc, gens.at(f)));
  return acc;
}

bool oracle_equal(const WpOracle& wp, const Word& a, const Word& b) {
  return wp(concat(a, invert(b)));
}

// What an exhausted saturation may report.  Free groups need one folding
// pass, so exhaustion is conclusive; otherwise a definite "no" needs
// either the caller vouching for the depth or an exact referee agreeing.
Decision settle_exhausted(const Presentation& pres,
                          const SaturationParams& params,
                          const std::function<BruteResult()>& referee) {
  if (pres.is_free() || params.trusted_depth) return Decision::No;
  if (!referee) return Decision::Unknown;
  BruteResult ref = referee();
  if (ref.cap_exceeded || ref.decision == Decision::Unknown)
    return Decision::Unknown;
  // A referee hit the saturation missed means the depth was too small;
  // report that honestly instead of adopting the referee's witness.
  return ref.decision == Decision::No ? Decision::No : Decision::Unknown;
}

// --- exponent blocks ------------------------------------------------------
//
// A generator with exponent range [0, m] is realized either as skippable
// sub-blocks spelling w^1, w^2, w^4, ... (binary split of m, so subset
// sums cover exactly 0..m and boundary counts stay logarithmic), or, in
// free groups, as a loop contributing `power` per traversal with no cap.

struct ExpBlock {
  size_t gen = 0;      // index into the original generator list
  uint64_t power = 1;  // exponent contributed per traversal
  Word word;           // reduced spelling of gens[gen]^power
};

Word word_power(const Word& w, uint64_t p) {
  Word acc{w.alphabet_size, {}};
  Word sq = w;
  for (uint64_t rest = p; rest; rest >>= 1) {
    if (rest & 1) acc = free_reduce(concat(acc, sq));
    if (rest > 1) sq = free_reduce(concat(sq, sq));
  }
  return acc;
}

std::vector<ExpBlock> unit_blocks(const std::vector<Word>& gens) {
  std::vector<ExpBlock> out;
  out.reserve(gens.size());
  for (size_t i = 0; i < gens.size(); ++i)
    out.push_back({i, 1, free_reduce(gens[i])});
  return out;
}

std::vector<ExpBlock> binary_split(const std::vector<Word>& gens, uint64_t m) {
  std::vector<ExpBlock> out;
  for (size_t i = 0; i < gens.size(); ++i) {
    Word red = free_reduce(gens[i]);
    if (red.letters.empty()) continue;  // identity factor, exponent moot
    uint64_t covered = 0;
    for (uint64_t p = 1; covered + p <= m; p <<= 1) {
      out.push_back({i, p, word_power(red, p)});
      covered += p;
    }
    if (covered < m) out.push_back({i, m - covered, word_power(red, m - covered)});
  }
  return out;
}

std::vector<int64_t> decode_exponents(const std::vector<ExpBlock>& blocks,
                                      const std::vector<int64_t>& counts,
                                      size_t k) {
  std::vector<int64_t> e(k, 0);
  for (size_t i = 0; i < blocks.size() && i < counts.size(); ++i)
    e[blocks[i].gen] += static_cast<int64_t>(blocks[i].power) * counts[i];
  return e;
}

// Spells w from `from` into `to` through fresh states; price and marker
// go on the last edge.
void span_word(PricedAutomaton& g, StateId from, StateId to, const Word& w,
               BigInt price, int32_t marker) {
  if (w.letters.empty()) {
    g.add_edge(from, kEpsilonLabel, to, std::move(price), marker);
    return;
  }
  StateId cur = from;
  for (size_t i = 0; i + 1 < w.letters.size(); ++i) {
    StateId nx = g.add_state();
    g.add_edge(cur, letter_label(w.letters[i]), nx, 0);
    cur = nx;
  }
  g.add_edge(cur, letter_label(w.letters.back()), to, std::move(price), marker);
}

// Appends the exponent chain: loop mode hangs each block as a cycle at its
// own node (unbounded traversals), block mode as a skippable branch.
StateId append_exp_chain(PricedAutomaton& g, StateId cur,
                         const std::vector<ExpBlock>& blocks, bool loops) {
  for (size_t i = 0; i < blocks.size(); ++i) {
    const ExpBlock& b = blocks[i];
    if (b.word.letters.empty()) continue;
    if (loops) {
      span_word(g, cur, cur, b.word, BigInt(b.power),
                static_cast<int32_t>(i));
      StateId nxt = g.add_state();
      g.add_edge(cur, kEpsilonLabel, nxt, 0);
      cur = nxt;
    } else {
      StateId nxt = g.add_state();
      g.add_edge(cur, kEpsilonLabel, nxt, 0);
      span_word(g, cur, nxt, b.word, BigInt(b.power),
                static_cast<int32_t>(i));
      cur = nxt;
    }
  }
  return cur;
}

// N layers each offering any single alphabet letter (price 1) or a skip.
StateId append_letter_layers(PricedAutomaton& g, StateId cur,
                             const Alphabet& ab, uint32_t n) {
  for (uint32_t i = 0; i < n; ++i) {
    StateId nxt = g.add_state();
    g.add_edge(cur, kEpsilonLabel, nxt, 0);
    for (uint32_t gen = 0; gen < ab.size; ++gen) {
      g.add_edge(cur, letter_label(Letter{gen, +1}), nxt, 1);
      g.add_edge(cur, letter_label(Letter{gen, -1}), nxt, 1);
    }
    cur = nxt;
  }
  return cur;
}

PricedAutomaton build_exp_chain_graph(uint32_t alphabet,
                                      const std::vector<ExpBlock>& blocks,
                                      bool loops, const Word& target,
                                      const Alphabet* layer_ab,
                                      uint32_t radius, GraphKind kind) {
  PricedAutomaton g(alphabet);
  g.kind = kind;
  g.block_count = static_cast<uint32_t>(blocks.size());
  g.gen_count = g.block_count;
  StateId cur = g.add_state();
  g.initial = cur;
  cur = append_exp_chain(g, cur, blocks, loops);
  if (layer_ab) cur = append_letter_layers(g, cur, *layer_ab, radius);
  g.finals = {g.add_word_path(cur, invert(target), 0)};
  return g;
}

// Exponent-chain driver shared by KP, KOP, IKP and BKP.  `m` empty means
// free-group loops (no exponent cap).
SolverReport run_exp(const Presentation& pres, const std::vector<Word>& gens,
                     const Word& target, std::optional<uint64_t> m,
                     SaturationParams params, bool minimize) {
  auto t0 = Clock::now();
  bool loops = !m.has_value();
  std::vector<ExpBlock> blocks =
      loops ? unit_blocks(gens) : binary_split(gens, *m);
  if (minimize) params.stop_on_epsilon = false;

  uint64_t l = target.letters.size();
  for (const Word& w : gens)
    l += w.letters.size() * (loops ? uint64_t(1) : *m);
  PricedAutomaton sat = saturate(
      build_exp_chain_graph(pres.alphabet.size, blocks, loops, target,
                            nullptr, 0, GraphKind::SspChain),
      pres.symmetrized, params, std::max<uint64_t>(l, 1));
  EpsilonAnswer eps = epsilon_answer(sat);
  std::optional<WpOracle> wp = oracle_for_presentation(pres);

  SolverReport rep;
  if (eps.accepted) {
    SolutionWitness w = extract_witness(sat, GraphKind::SspChain);
    w.exponents = decode_exponents(blocks, w.exponents, gens.size());
    if (wp) {
      Word prod = product_of_exponents(pres.alphabet.size, gens, w.exponents);
      if (!oracle_equal(*wp, prod, target))
        throw std::logic_error("accepted witness failed the oracle re-check");
      rep.verified = true;
    }
    rep.decision = Decision::Yes;
    rep.witness = std::move(w);
    if (minimize) rep.cost = eps.cost;
  } else {
    std::function<BruteResult()> referee;
    if (wp && m) {
      const WpOracle& oracle = *wp;
      uint64_t cap = *m;
      referee = [&oracle, &gens, &target, cap] {
        return brute_bkp(oracle, gens, target, cap);
      };
    }
    rep.decision = settle_exhausted(pres, params, referee);
  }
  fill_stats(rep, sat, t0, params.keep_graph);
  return rep;
}

}  // namespace

SolverReport solve_ssp(const Presentation& pres, const std::vector<Word>& gens,
                       const Word& target, const SaturationParams& params) {
  check_instance(pres, gens, target);
  auto t0 = Clock::now();
  PricedAutomaton sat =
      saturate(build_ssp_graph(gens, target), pres.symmetrized, params,
               std::max<uint64_t>(instance_size(gens, target), 1));
  EpsilonAnswer eps = epsilon_answer(sat);
  std::optional<WpOracle> wp = oracle_for_presentation(pres);

  SolverReport rep;
  if (eps.accepted) {
    SolutionWitness w = extract_witness(sat, GraphKind::SspChain);
    if (wp) {
      Word prod = product_of_exponents(pres.alphabet.size, gens, w.exponents);
      if (!oracle_equal(*wp, prod, target))
        throw std::logic_error("accepted witness failed the oracle re-check");
      rep.verified = true;
    }
    rep.decision = Decision::Yes;
    rep.witness = std::move(w);
    if (pres.is_free()) rep.cost = eps.cost;
  } else {
    std::function<BruteResult()> referee;
    if (wp) {
      const WpOracle& oracle = *wp;
      referee = [&oracle, &gens, &target] {
        return brute_ssp(oracle, gens, target);
      };
    }
    rep.decision = settle_exhausted(pres, params, referee);
  }
  fill_stats(rep, sat, t0, params.keep_graph);
  return rep;
}

SolverReport solve_ssop(const Presentation& pres, const std::vector<Word>& gens,
                        const Word& target, const SaturationParams& params) {
  check_instance(pres, gens, target);
  auto t0 = Clock::now();
  SaturationParams p = params;
  p.stop_on_epsilon = false;
  PricedAutomaton sat =
      saturate(build_ssp_graph(gens, target), pres.symmetrized, p,
               std::max<uint64_t>(instance_size(gens, target), 1));
  EpsilonAnswer eps = epsilon_answer(sat);
  std::optional<WpOracle> wp = oracle_for_presentation(pres);

  SolverReport rep;
  if (eps.accepted) {
    SolutionWitness w = extract_witness(sat, GraphKind::SspChain);
    if (wp) {
      Word prod = product_of_exponents(pres.alphabet.size, gens, w.exponents);
      if (!oracle_equal(*wp, prod, target))
        throw std::logic_error("accepted witness failed the oracle re-check");
      rep.verified = true;
    }
    rep.decision = Decision::Yes;
    rep.cost = eps.cost;
    rep.witness = std::move(w);
  } else {
    std::function<BruteResult()> referee;
    if (wp) {
      const WpOracle& oracle = *wp;
      referee = [&oracle, &gens, &target] {
        return brute_ssop(oracle, gens, target);
      };
    }
    rep.decision = settle_exhausted(pres, p, referee);
  }
  fill_stats(rep, sat, t0, params.keep_graph);
  return rep;
}

SolverReport solve_bkp(const Presentation& pres, const std::vector<Word>& gens,
                       const Word& target, uint64_t m,
                       const SaturationParams& params) {
  check_instance(pres, gens, target);
  return run_exp(pres, gens, target, m, params, false);
}

SolverReport solve_bsmp(const Presentation& pres, const std::vector<Word>& gens,
                        const Word& target, uint64_t m,
                        const SaturationParams& params) {
  check_instance(pres, gens, target);
  auto t0 = Clock::now();
  SaturationParams p = params;
  p.stop_on_epsilon = false;
  uint64_t l = target.letters.size();
  for (const Word& w : gens) l += m * w.letters.size();
  PricedAutomaton sat =
      saturate(build_bsmp_graph(gens, target, static_cast<uint32_t>(m)),
               pres.symmetrized, p, std::max<uint64_t>(l, 1));
  EpsilonAnswer eps = epsilon_answer(sat);
  std::optional<WpOracle> wp = oracle_for_presentation(pres);

  SolverReport rep;
  if (eps.accepted) {
    SolutionWitness w = extract_witness(sat, GraphKind::BsmpBlocks);
    if (wp) {
      Word prod = product_of_factors(pres.alphabet.size, gens, w.factors);
      if (!oracle_equal(*wp, prod, target))
        throw std::logic_error("accepted witness failed the oracle re-check");
      rep.verified = true;
    }
    rep.decision = Decision::Yes;
    rep.cost = eps.cost;
    rep.witness = std::move(w);
  } else {
    std::function<BruteResult()> referee;
    if (wp) {
      const WpOracle& oracle = *wp;
      referee = [&oracle, &gens, &target, m] {
        return brute_bsmp(oracle, gens, target, m);
      };
    }
    rep.decision = settle_exhausted(pres, p, referee);
  }
  fill_stats(rep, sat, t0, params.keep_graph);
  return rep;
}

SolverReport solve_kp(const Presentation& pres, const std::vector<Word>& gens,
                      const Word& target, const KpBoundConfig& bound,
                      const SaturationParams& params) {
  check_instance(pres, gens, target);
  if (pres.is_free())
    return run_exp(pres, gens, target, std::nullopt, params, false);
  uint64_t m = bound.bound_for(instance_size(gens, target));
  SolverReport rep = run_exp(pres, gens, target, m, params, false);
  rep.bound_used = m;
  if (rep.decision == Decision::No) rep.bound_relative = true;
  return rep;
}

SolverReport solve_kop(const Presentation& pres, const std::vector<Word>& gens,
                       const Word& target, const KpBoundConfig& bound,
                       const SaturationParams& params) {
  check_instance(pres, gens, target);
  if (pres.is_free())
    return run_exp(pres, gens, target, std::nullopt, params, true);
  uint64_t m = bound.bound_for(instance_size(gens, target));
  SolverReport rep = run_exp(pres, gens, target, m, params, true);
  rep.bound_used = m;
  if (rep.decision == Decision::No) rep.bound_relative = true;
  return rep;
}

SolverReport solve_ikp(const Presentation& pres, const std::vector<Word>& gens,
                       const Word& target, const KpBoundConfig& bound,
                       const SaturationParams& params) {
  check_instance(pres, gens, target);
  std::vector<Word> doubled = ikp_to_kp(gens);
  SolverReport rep;
  if (pres.is_free()) {
    rep = run_exp(pres, doubled, target, std::nullopt, params, false);
  } else {
    uint64_t m = bound.bound_for(instance_size(doubled, target));
    rep = run_exp(pres, doubled, target, m, params, false);
    rep.bound_used = m;
    if (rep.decision == Decision::No) rep.bound_relative = true;
  }
  if (rep.witness)
    rep.witness->exponents = ikp_exponents_from_kp(rep.witness->exponents);
  return rep;
}

namespace {

// Radius scan shared by the distance-minimizing solvers: the exponent
// chain plus n free letters must reach the target; the first accepting n
// is the distance.  u = target always succeeds at n = |target|, so the
// scan terminates.
SolverReport scan_radius(const Presentation& pres,
                         const std::vector<ExpBlock>& blocks, bool loops,
                         size_t orig_k, const Word& target,
                         const Alphabet& alphabet,
                         const SaturationParams& params) {
  auto t0 = Clock::now();
  SolverReport rep;
  Word tred = free_reduce(target);
  uint64_t base_l = 1;
  for (const ExpBlock& b : blocks) base_l += b.word.letters.size();
  base_l += tred.letters.size();

  for (uint32_t n = 0;; ++n) {
    if (n > tred.letters.size())
      throw std::logic_error("radius scan overran its ceiling");
    PricedAutomaton sat = saturate(
        build_exp_chain_graph(alphabet.size, blocks, loops, tred, &alphabet,
                              n, GraphKind::Kop1Chain),
        pres.symmetrized, params, base_l + n);
    EpsilonAnswer eps = epsilon_answer(sat);
    if (!eps.accepted) continue;

    SolutionWitness w = extract_witness(sat, GraphKind::Kop1Chain);
    w.exponents = decode_exponents(blocks, w.exponents, orig_k);
    rep.decision = Decision::Yes;
    rep.cost = BigInt(n);
    rep.witness = std::move(w);
    fill_stats(rep, sat, t0, params.keep_graph);
    return rep;
  }
}

// Exact distance re-check for free groups.
void verify_radius(SolverReport& rep, const std::vector<Word>& gens,
                   const Word& target, uint32_t alphabet) {
  if (rep.decision != Decision::Yes || !rep.witness || !rep.cost) return;
  Word prod = product_of_exponents(alphabet, gens, rep.witness->exponents);
  Word rest = free_reduce(concat(invert(prod), target));
  if (BigInt(rest.letters.size()) > *rep.cost)
    throw std::logic_error("accepted witness failed the distance re-check");
  rep.verified = true;
}

}  // namespace

SolverReport solve_ssop1(const Presentation& pres, const std::vector<Word>& gens,
                         const Word& target, const Alphabet& alphabet,
                         const SaturationParams& params) {
  check_instance(pres, gens, target);
  if (alphabet.size != pres.alphabet.size)
    throw std::invalid_argument("alphabet mismatch");
  std::vector<ExpBlock> blocks = unit_blocks(gens);
  SolverReport rep =
      scan_radius(pres, blocks, false, gens.size(), target, alphabet, params);
  if (pres.is_free()) verify_radius(rep, gens, target, alphabet.size);
  return rep;
}

SolverReport solve_kop1(const Presentation& pres, const std::vector<Word>& gens,
                        const Word& target, const Alphabet& alphabet,
                        const SaturationParams& params,
                        const KpBoundConfig& bound) {
  check_instance(pres, gens, target);
  if (alphabet.size != pres.alphabet.size)
    throw std::invalid_argument("alphabet mismatch");
  SolverReport rep;
  if (pres.is_free()) {
    rep = scan_radius(pres, unit_blocks(gens), true, gens.size(), target,
                      alphabet, params);
    verify_radius(rep, gens, target, alphabet.size);
  } else {
    uint64_t m = bound.bound_for(instance_size(gens, target));
    rep = scan_radius(pres, binary_split(gens, m), false, gens.size(), target,
                      alphabet, params);
    rep.bound_used = m;
  }
  return rep;
}

namespace {

// Prefix acceptor: the line of the reduced target with, at every vertex
// p_j, a fresh copy of the reversed inverse exponent chain.  An epsilon
// edge into the copy attached at p_j certifies that some chain product
// equals the length-j prefix.
PricedAutomaton build_prefix_graph(uint32_t free_rank,
                                   const std::vector<ExpBlock>& rev_blocks,
                                   bool loops, const Word& tred) {
  PricedAutomaton g(free_rank);
  g.kind = GraphKind::Kop2Prefix;
  g.block_count = static_cast<uint32_t>(rev_blocks.size());
  g.gen_count = g.block_count;

  StateId line = g.add_state();
  g.initial = line;
  std::vector<StateId> verts{line};
  for (const Letter& l : tred.letters) {
    StateId next = g.add_state();
    g.add_edge(line, letter_label(l), next, 0);
    line = next;
    verts.push_back(line);
  }

  for (uint32_t j = 0; j < verts.size(); ++j) {
    // Anchor each copy on a fresh state: a loop hung directly on a line
    // vertex would let walks bound for later finals pick up this copy's
    // markers in passing.
    StateId anchor = g.add_state();
    g.add_edge(verts[j], kEpsilonLabel, anchor, 0);
    StateId cur = append_exp_chain(g, anchor, rev_blocks, loops);
    g.finals.push_back(cur);
    g.final_tags.push_back(j);
  }
  return g;
}

// Picks the accepting final with the longest matched prefix and verifies
// the prefix property by free reduction.  Free groups only.
SolverReport run_prefix(uint32_t free_rank, const std::vector<Word>& gens,
                        bool loops, const Word& target,
                        const SaturationParams& params) {
  auto t0 = Clock::now();
  for (const Word& w : gens)
    if (w.alphabet_size != free_rank)
      throw std::invalid_argument("generator alphabet mismatch");
  if (target.alphabet_size != free_rank)
    throw std::invalid_argument("target alphabet mismatch");

  // Reversed inverses: the chain after p_j must spell the inverse of the
  // block product, last factor first.
  std::vector<ExpBlock> rev;
  for (size_t b = gens.size(); b-- > 0;)
    rev.push_back({b, 1, free_reduce(invert(gens[b]))});

  Word tred = free_reduce(target);
  PricedAutomaton sat =
      saturate(build_prefix_graph(free_rank, rev, loops, tred), {}, params,
               std::max<uint64_t>(instance_size(gens, tred), 1));

  bool found = false;
  int64_t best_edge = -1;
  uint32_t best_tag = 0;
  for (size_t i = 0; i < sat.finals.size(); ++i) {
    StateId f = sat.finals[i];
    int64_t e = -1;
    if (f != sat.initial) {
      e = sat.find_edge_id(sat.initial, kEpsilonLabel, f);
      if (e < 0) continue;
    }
    if (!found || sat.final_tags[i] > best_tag) {
      found = true;
      best_edge = e;
      best_tag = sat.final_tags[i];
    }
  }
  if (!found) throw std::logic_error("prefix graph rejected the empty product");

  SolutionWitness w = extract_witness_at(sat, GraphKind::Kop2Prefix, best_edge);
  w.exponents = decode_exponents(rev, w.exponents, gens.size());
  w.prefix_len = best_tag;
  Word prod = product_of_exponents(free_rank, gens, w.exponents);
  Word v = free_reduce(prod);
  if (v.letters.size() != best_tag)
    throw std::logic_error("prefix witness length mismatch");
  for (size_t j = 0; j < v.letters.size(); ++j)
    if (!(v.letters[j] == tred.letters[j]))
      throw std::logic_error("prefix witness mismatch");

  SolverReport rep;
  rep.verified = true;
  rep.decision = Decision::Yes;
  rep.cost = BigInt(tred.letters.size() - best_tag);
  rep.witness = std::move(w);
  fill_stats(rep, sat, t0, params.keep_graph);
  return rep;
}

}  // namespace

SolverReport solve_ssop2(uint32_t free_rank, const std::vector<Word>& gens,
                         const Word& target, const SaturationParams& params) {
  return run_prefix(free_rank, gens, false, target, params);
}

SolverReport solve_kop2(uint32_t free_rank, const std::vector<Word>& gens,
                        const Word& target, const SaturationParams& params,
                        const KpBoundConfig& bound) {
  (void)bound;  // loops are exact in free groups, no exponent cap needed
  return run_prefix(free_rank, gens, true, target, params);
}

SolverReport solve_smp_free(uint32_t free_rank, const std::vector<Word>& gens,
                            const Word& target,
                            const SaturationParams& params) {
  auto t0 = Clock::now();
  for (const Word& w : gens)
    if (w.alphabet_size != free_rank)
      throw std::invalid_argument("generator alphabet mismatch");
  if (target.alphabet_size != free_rank)
    throw std::invalid_argument("target alphabet mismatch");

  PricedAutomaton sat =
      saturate(build_free_smp_graph(gens, target), {}, params,
               std::max<uint64_t>(instance_size(gens, target), 1));
  EpsilonAnswer eps = epsilon_answer(sat);
  SolverReport rep;
  if (eps.accepted) {
    SolutionWitness w = extract_witness(sat, GraphKind::FreeSmp);
    WpOracle wp = wp_free(free_rank);
    Word prod = product_of_factors(free_rank, gens, w.factors);
    if (!oracle_equal(wp, prod, target))
      throw std::logic_error("accepted witness failed the oracle re-check");
    rep.verified = true;
    rep.decision = Decision::Yes;
    rep.cost = eps.cost;
    rep.witness = std::move(w);
  } else {
    rep.decision = Decision::No;
  }
  fill_stats(rep, sat, t0, params.keep_graph);
  return rep;
}

}  // namespace gknap
