/* automaton.hpp -- priced automata over group alphabets, folding, completion */

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gknap/automaton_types.hpp"
#include "gknap/bigint.hpp"
#include "gknap/word.hpp"

namespace gknap {

using StateId = uint32_t;

// Edge labels: 0 is epsilon, letter (g, sign) maps to 1 + 2g + (sign < 0).
inline constexpr uint32_t kEpsilonLabel = 0;

inline uint32_t letter_label(Letter l) {
  return 1u + 2u * l.gen + (l.sign < 0 ? 1u : 0u);
}

inline Letter label_letter(uint32_t label) {  // pre: label != 0
  return Letter{(label - 1u) / 2u, ((label - 1u) & 1u) ? -1 : +1};
}

inline uint32_t inverse_label(uint32_t label) {
  return label == kEpsilonLabel ? kEpsilonLabel : (((label - 1u) ^ 1u) + 1u);
}

struct AutomatonEdge {
  StateId src = 0;
  StateId tgt = 0;
  uint32_t label = kEpsilonLabel;
  // Construction tag on base edges (block index etc.), -1 elsewhere.
  int32_t marker = -1;
  // Derivation: this edge is the composition of parent1 then parent2,
  // or a base edge when parent1 < 0.
  int64_t parent1 = -1;
  int64_t parent2 = -1;
  BigInt price;
};

struct EpsilonAnswer {
  bool accepted = false;
  BigInt cost;        // meaningful only when accepted
  int64_t edge = -1;  // winning epsilon edge, -1 if initial is final
};

// A finite automaton with one initial state, a set of final states, and
// at most one stored edge per (src, label, tgt) triple.  Prices are
// nonnegative; parallel derivations of the same triple keep the cheaper
// price.  States are never merged by any operation here.
struct PricedAutomaton {
  uint32_t alphabet_size = 0;
  StateId initial = 0;
  std::vector<StateId> finals;
  // Optional per-final tag with builder-defined meaning (prefix graphs
  // store the prefix length).  Either empty or parallel to `finals`.
  std::vector<uint32_t> final_tags;
  std::vector<AutomatonEdge> edges;
  std::vector<std::vector<uint32_t>> out_edges;  // per state, edge ids
  std::vector<std::vector<uint32_t>> in_edges;
  GraphKind kind = GraphKind::Plain;
  uint32_t block_count = 0;  // chain/block constructions
  uint32_t gen_count = 0;    // generator list length, for marker decoding
  uint32_t rounds = 0;       // set by saturate()

  explicit PricedAutomaton(uint32_t alphabet = 0) : alphabet_size(alphabet) {}

  uint32_t state_count() const { return static_cast<uint32_t>(out_edges.size()); }
  StateId add_state();

  // Adds (or re-prices) an edge.  Returns (edge id, true if newly added).
  // An existing triple keeps the smaller of old and new price; the
  // derivation pointers follow whichever price is kept.
  std::pair<uint32_t, bool> add_edge(StateId src, uint32_t label, StateId tgt,
                                     BigInt price, int32_t marker = -1,
                                     int64_t parent1 = -1, int64_t parent2 = -1);

  const AutomatonEdge* find_edge(StateId src, uint32_t label, StateId tgt) const;
  int64_t find_edge_id(StateId src, uint32_t label, StateId tgt) const;

  // Appends trail of states spelling `w` from `from`; returns the end state.
  // The supplied price goes on the last edge (ignored when w is empty),
  // the marker likewise.
  StateId add_word_path(StateId from, const Word& w, BigInt last_price,
                        int32_t marker = -1);

 private:
  friend void fold_in_place(PricedAutomaton&);

  // Folding phases: closure of the edge set under label composition
  // (fresh edges carry a provisional zero price), then exact repricing
  // by shortest-derivation search seeded from the first `seeded` edges,
  // which predate the closure and hence hold valid upper bounds.
  void fold_structural();
  void fold_prices(size_t seeded);

  // Open-addressed (key, edge id) table; folding probes it on every
  // composition candidate, which is too hot for a node-based map.
  struct EdgeIndex {
    std::vector<uint64_t> keys;  // 0 marks a free slot
    std::vector<uint32_t> vals;
    size_t used = 0;
    bool has_zero = false;  // the all-zero key is stored out of line
    uint32_t zero_val = 0;

    int64_t find(uint64_t key) const;
    void insert(uint64_t key, uint32_t val);  // pre: key absent
    void grow();
  };
  EdgeIndex edge_index_;
  uint64_t edge_key(StateId src, uint32_t label, StateId tgt) const;
};

// --- constructions ------------------------------------------------------

// Subset-sum graph: a chain of k blocks, block i offering either the path
// spelling gens[i] (price 1 on its last edge, marker i) or a zero-price
// skip, followed by target^{-1} into the unique final state.
PricedAutomaton build_ssp_graph(const std::vector<Word>& gens, const Word& target);

// Bounded submonoid-membership graph: m sequential blocks, each offering a
// zero-price skip or any gens[i] path (price 1, marker block*k + i),
// then target^{-1} to the final state.
PricedAutomaton build_bsmp_graph(const std::vector<Word>& gens, const Word& target,
                                 uint32_t m);

// Submonoid membership in a free group: a one-state bouquet of gens loops
// (price 1, marker i on each last edge) with a target^{-1} tail.
PricedAutomaton build_free_smp_graph(const std::vector<Word>& gens,
                                     const Word& target);

// Ssp chain without the tail, then N layers each offering any single
// letter of the alphabet or a skip, then the target^{-1} tail.  Letter
// layer edges carry price 1 but no marker.
PricedAutomaton build_kop1_graph(const std::vector<Word>& gens, const Word& target,
                                 uint32_t N, const Alphabet& alphabet);

// --- operations ---------------------------------------------------------

// Relator completion CC: for every state of g and every r in relators,
// attach a fresh zero-price loop spelling r at that state.  Pure; g is
// not modified.
PricedAutomaton r_completion(const PricedAutomaton& g,
                             const std::vector<Word>& relators);

// Fold F: closes the edge set under label composition
//   (x, x^-1) -> eps, (x, eps) -> x, (eps, x) -> x, (eps, eps) -> eps
// for consecutive edges, never merging states, and reprices every edge to
// the cheapest derivation from base edges.  Pure and idempotent.
PricedAutomaton fold(const PricedAutomaton& g);

// In-place variants used by saturation loops.
void r_completion_in_place(PricedAutomaton& g, const std::vector<Word>& relators);
void fold_in_place(PricedAutomaton& g);

struct SaturationParams {
  double c0 = 1.0;  // nonnegative
  double c1 = 2.0;  // nonnegative
  enum class Mode { Fixed, Adaptive } mode = Mode::Adaptive;
  uint32_t max_rounds = 32;  // round cap in both modes, >= 1
  // Fixed mode fidelity switch: run all completions first and fold once
  // at the end instead of interleaving.
  bool pure_completion = false;
  // Adaptive mode normally stops at the first accepting epsilon edge.
  // Optimization drivers clear this so later rounds can still lower
  // prices; the no-progress cut then ends the loop.
  bool stop_on_epsilon = true;
  // Retain the saturated graph in the report (dump support).
  bool keep_graph = false;
  // Caller vouches the configured depth is complete for their
  // presentation, so solvers may report "no" on exhaustion.
  bool trusted_depth = false;
};

// Interleaved completion/folding.  `l` is the instance size the round
// bound is computed from: fixed mode runs ceil(c0 + c1*log2(max(l,2)))
// completion rounds; adaptive mode stops early when an epsilon edge from
// the initial state to a final state appears or when a round adds no new
// edge between previously existing states, and gives up after max_rounds.
// g.rounds counts folding passes including the initial relator-free one.
PricedAutomaton saturate(const PricedAutomaton& g, const std::vector<Word>& relators,
                         const SaturationParams& params, uint64_t l);

// Is there an epsilon edge from the initial state to a final state (or is
// the initial state final)?  Returns the cheapest such edge.
EpsilonAnswer epsilon_answer(const PricedAutomaton& g);

// Replays the derivation tree of the winning epsilon edge down to base
// edges and decodes their markers according to `kind`, which must match
// g.kind.  Requires epsilon_answer(g).accepted.
SolutionWitness extract_witness(const PricedAutomaton& g, GraphKind kind);

// Same replay for a caller-chosen accepting edge (-1 when the initial
// state is itself final).  Prefix graphs use this to pick the final with
// the longest matched prefix rather than the cheapest one.
SolutionWitness extract_witness_at(const PricedAutomaton& g, GraphKind kind,
                                   int64_t epsilon_edge);

// One line per edge: "src label tgt price", after '#' comment lines with
// the state count, initial and finals.
std::string to_dump_string(const PricedAutomaton& g, const Alphabet& alphabet);

}  // namespace gknap
