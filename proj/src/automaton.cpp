/* automaton.cpp -- priced automata: constructions, folding, completion */

#include "gknap/automaton.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace gknap {

namespace {

void check_same_alphabet(const std::vector<Word>& gens, const Word& target) {
  for (const Word& w : gens)
    if (w.alphabet_size != target.alphabet_size)
      throw std::invalid_argument("generator/target alphabet mismatch");
}

// Spells w from `from` into `to` through fresh states.  Empty w becomes a
// single epsilon edge.  `last_price`/`marker` go on the final edge.
void path_to(PricedAutomaton& g, StateId from, const Word& w, StateId to,
             BigInt last_price, int32_t marker) {
  if (w.empty()) {
    g.add_edge(from, kEpsilonLabel, to, std::move(last_price), marker);
    return;
  }
  StateId cur = from;
  for (size_t i = 0; i + 1 < w.size(); ++i) {
    StateId next = g.add_state();
    g.add_edge(cur, letter_label(w.letters[i]), next, 0);
    cur = next;
  }
  g.add_edge(cur, letter_label(w.letters.back()), to, std::move(last_price), marker);
}

}  // namespace

StateId PricedAutomaton::add_state() {
  out_edges.emplace_back();
  in_edges.emplace_back();
  if (out_edges.size() > (1u << 28))
    throw std::length_error("automaton too large");
  return static_cast<StateId>(out_edges.size() - 1);
}

namespace {

inline uint64_t mix64(uint64_t x) {
  x ^= x >> 33;
  x *= 0xff51afd7ed558ccdULL;
  x ^= x >> 33;
  x *= 0xc4ceb9fe1a85ec53ULL;
  x ^= x >> 33;
  return x;
}

}  // namespace

int64_t PricedAutomaton::EdgeIndex::find(uint64_t key) const {
  if (key == 0) return has_zero ? static_cast<int64_t>(zero_val) : -1;
  if (keys.empty()) return -1;
  size_t mask = keys.size() - 1;
  size_t i = mix64(key) & mask;
  while (keys[i] != 0) {
    if (keys[i] == key) return vals[i];
    i = (i + 1) & mask;
  }
  return -1;
}

void PricedAutomaton::EdgeIndex::insert(uint64_t key, uint32_t val) {
  if (key == 0) {
    has_zero = true;
    zero_val = val;
    return;
  }
  if (10 * (used + 1) >= 7 * keys.size()) grow();
  size_t mask = keys.size() - 1;
  size_t i = mix64(key) & mask;
  while (keys[i] != 0) i = (i + 1) & mask;
  keys[i] = key;
  vals[i] = val;
  ++used;
}

void PricedAutomaton::EdgeIndex::grow() {
  size_t cap = keys.empty() ? 64 : keys.size() * 2;
  std::vector<uint64_t> old_keys = std::move(keys);
  std::vector<uint32_t> old_vals = std::move(vals);
  keys.assign(cap, 0);
  vals.assign(cap, 0);
  size_t mask = cap - 1;
  for (size_t j = 0; j < old_keys.size(); ++j) {
    if (old_keys[j] == 0) continue;
    size_t i = mix64(old_keys[j]) & mask;
    while (keys[i] != 0) i = (i + 1) & mask;
    keys[i] = old_keys[j];
    vals[i] = old_vals[j];
  }
}

uint64_t PricedAutomaton::edge_key(StateId src, uint32_t label, StateId tgt) const {
  // 28 bits per state, 8 for the label; alphabet_size <= 127 keeps labels
  // under 256.
  return (static_cast<uint64_t>(src) << 36) |
         (static_cast<uint64_t>(tgt) << 8) | label;
}

std::pair<uint32_t, bool> PricedAutomaton::add_edge(StateId src, uint32_t label,
                                                    StateId tgt, BigInt price,
                                                    int32_t marker, int64_t parent1,
                                                    int64_t parent2) {
  if (src >= state_count() || tgt >= state_count())
    throw std::out_of_range("edge endpoint out of range");
  if (label != kEpsilonLabel && label_letter(label).gen >= alphabet_size)
    throw std::out_of_range("edge label out of range");
  if (label > 255) throw std::length_error("alphabet too large for edge index");
  if (price < 0) throw std::invalid_argument("negative edge price");

  uint64_t key = edge_key(src, label, tgt);
  int64_t hit = edge_index_.find(key);
  if (hit >= 0) {
    AutomatonEdge& e = edges[hit];
    if (price < e.price) {
      e.price = std::move(price);
      e.marker = marker;
      e.parent1 = parent1;
      e.parent2 = parent2;
    }
    return {static_cast<uint32_t>(hit), false};
  }
  uint32_t id = static_cast<uint32_t>(edges.size());
  edges.push_back(AutomatonEdge{src, tgt, label, marker, parent1, parent2,
                                std::move(price)});
  edge_index_.insert(key, id);
  out_edges[src].push_back(id);
  in_edges[tgt].push_back(id);
  return {id, true};
}

const AutomatonEdge* PricedAutomaton::find_edge(StateId src, uint32_t label,
                                                StateId tgt) const {
  int64_t id = find_edge_id(src, label, tgt);
  return id < 0 ? nullptr : &edges[id];
}

int64_t PricedAutomaton::find_edge_id(StateId src, uint32_t label,
                                      StateId tgt) const {
  return edge_index_.find(edge_key(src, label, tgt));
}

StateId PricedAutomaton::add_word_path(StateId from, const Word& w,
                                       BigInt last_price, int32_t marker) {
  if (w.empty()) return from;
  StateId end = from;
  for (size_t i = 0; i + 1 < w.size(); ++i) {
    StateId next = add_state();
    add_edge(end, letter_label(w.letters[i]), next, 0);
    end = next;
  }
  StateId last = add_state();
  add_edge(end, letter_label(w.letters.back()), last, std::move(last_price), marker);
  return last;
}

// --- constructions ------------------------------------------------------

PricedAutomaton build_ssp_graph(const std::vector<Word>& gens, const Word& target) {
  check_same_alphabet(gens, target);
  PricedAutomaton g(target.alphabet_size);
  g.kind = GraphKind::SspChain;
  g.block_count = static_cast<uint32_t>(gens.size());
  g.gen_count = g.block_count;

  StateId cur = g.add_state();
  g.initial = cur;
  for (size_t i = 0; i < gens.size(); ++i) {
    StateId next = g.add_state();
    g.add_edge(cur, kEpsilonLabel, next, 0);  // skip first: empty gens dedup free
    path_to(g, cur, gens[i], next, 1, static_cast<int32_t>(i));
    cur = next;
  }
  g.finals = {g.add_word_path(cur, invert(target), 0)};
  return g;
}

PricedAutomaton build_bsmp_graph(const std::vector<Word>& gens, const Word& target,
                                 uint32_t m) {
  check_same_alphabet(gens, target);
  PricedAutomaton g(target.alphabet_size);
  g.kind = GraphKind::BsmpBlocks;
  g.block_count = m;
  g.gen_count = static_cast<uint32_t>(gens.size());

  StateId cur = g.add_state();
  g.initial = cur;
  for (uint32_t b = 0; b < m; ++b) {
    StateId next = g.add_state();
    g.add_edge(cur, kEpsilonLabel, next, 0);
    for (size_t i = 0; i < gens.size(); ++i)
      path_to(g, cur, gens[i], next, 1,
              static_cast<int32_t>(b * gens.size() + i));
    cur = next;
  }
  g.finals = {g.add_word_path(cur, invert(target), 0)};
  return g;
}

PricedAutomaton build_free_smp_graph(const std::vector<Word>& gens,
                                     const Word& target) {
  check_same_alphabet(gens, target);
  PricedAutomaton g(target.alphabet_size);
  g.kind = GraphKind::FreeSmp;
  g.gen_count = static_cast<uint32_t>(gens.size());

  StateId hub = g.add_state();
  g.initial = hub;
  for (size_t i = 0; i < gens.size(); ++i)
    path_to(g, hub, gens[i], hub, 1, static_cast<int32_t>(i));
  g.finals = {g.add_word_path(hub, invert(target), 0)};
  return g;
}

PricedAutomaton build_kop1_graph(const std::vector<Word>& gens, const Word& target,
                                 uint32_t N, const Alphabet& alphabet) {
  check_same_alphabet(gens, target);
  if (target.alphabet_size != alphabet.size)
    throw std::invalid_argument("alphabet mismatch");
  PricedAutomaton g(alphabet.size);
  g.kind = GraphKind::Kop1Chain;
  g.block_count = static_cast<uint32_t>(gens.size());
  g.gen_count = g.block_count;

  StateId cur = g.add_state();
  g.initial = cur;
  for (size_t i = 0; i < gens.size(); ++i) {
    StateId next = g.add_state();
    g.add_edge(cur, kEpsilonLabel, next, 0);
    path_to(g, cur, gens[i], next, 1, static_cast<int32_t>(i));
    cur = next;
  }
  for (uint32_t j = 0; j < N; ++j) {
    StateId next = g.add_state();
    g.add_edge(cur, kEpsilonLabel, next, 0);
    for (uint32_t x = 0; x < alphabet.size; ++x) {
      g.add_edge(cur, letter_label(Letter(x, +1)), next, 1);
      g.add_edge(cur, letter_label(Letter(x, -1)), next, 1);
    }
    cur = next;
  }
  g.finals = {g.add_word_path(cur, invert(target), 0)};
  return g;
}

// --- completion and folding ----------------------------------------------

void r_completion_in_place(PricedAutomaton& g, const std::vector<Word>& relators) {
  Alphabet plain{g.alphabet_size, {}};
  for (const Word& r : relators) {
    if (r.empty()) throw std::invalid_argument("empty relator");
    validate_word(r, plain);
  }
  uint32_t pre = g.state_count();
  for (StateId s = 0; s < pre; ++s)
    for (const Word& r : relators) path_to(g, s, r, s, 0, -1);
}

PricedAutomaton r_completion(const PricedAutomaton& g,
                             const std::vector<Word>& relators) {
  PricedAutomaton out = g;
  r_completion_in_place(out, relators);
  return out;
}

// Phase 1: close the edge set under composition.  Purely structural;
// fresh edges record their derivation and a provisional zero price that
// phase 2 replaces, existing triples are left alone.  Scans run over
// compact label/endpoint arrays and per-(state, label) buckets: an
// epsilon edge composes with every neighbour, anything else only with
// epsilon and inverse-labelled ones.
void PricedAutomaton::fold_structural() {
  const size_t L = 2 * size_t(alphabet_size) + 1;
  const size_t N = state_count();
  std::vector<uint8_t> lab_of;
  std::vector<uint32_t> src_of, tgt_of;
  lab_of.reserve(edges.size() * 2);
  src_of.reserve(edges.size() * 2);
  tgt_of.reserve(edges.size() * 2);
  for (const AutomatonEdge& e : edges) {
    lab_of.push_back(static_cast<uint8_t>(e.label));
    src_of.push_back(e.src);
    tgt_of.push_back(e.tgt);
  }
  std::vector<std::vector<uint32_t>> out_by(N * L), in_by(N * L);
  for (uint32_t i = 0; i < edges.size(); ++i) {
    out_by[src_of[i] * L + lab_of[i]].push_back(i);
    in_by[tgt_of[i] * L + lab_of[i]].push_back(i);
  }

  std::vector<uint32_t> work(edges.size());
  std::iota(work.begin(), work.end(), 0u);
  // Each adjacent pair is composed exactly once, by whichever side pops
  // later; the probe into the edge index dominates, so halving attempts
  // matters.
  std::vector<char> popped(edges.size(), 0);

  auto insert = [&](StateId s, uint32_t lab, StateId t, uint32_t p1, uint32_t p2) {
    uint64_t key = edge_key(s, lab, t);
    if (edge_index_.find(key) >= 0) return;
    uint32_t id = static_cast<uint32_t>(edges.size());
    edges.push_back(AutomatonEdge{s, t, lab, -1, static_cast<int64_t>(p1),
                                  static_cast<int64_t>(p2), 0});
    edge_index_.insert(key, id);
    out_edges[s].push_back(id);
    in_edges[t].push_back(id);
    lab_of.push_back(static_cast<uint8_t>(lab));
    src_of.push_back(s);
    tgt_of.push_back(t);
    out_by[s * L + lab].push_back(id);
    in_by[t * L + lab].push_back(id);
    work.push_back(id);
    popped.push_back(0);
  };

  while (!work.empty()) {
    uint32_t e = work.back();
    work.pop_back();
    popped[e] = 1;
    StateId s = src_of[e];
    StateId t = tgt_of[e];
    uint32_t lab = lab_of[e];

    if (lab == kEpsilonLabel) {
      auto& outs = out_edges[t];
      for (size_t i = 0; i < outs.size(); ++i) {
        uint32_t f = outs[i];
        if (popped[f]) insert(s, lab_of[f], tgt_of[f], e, f);
      }
      auto& ins = in_edges[s];
      for (size_t i = 0; i < ins.size(); ++i) {
        uint32_t f = ins[i];
        if (popped[f]) insert(src_of[f], lab_of[f], t, f, e);
      }
    } else {
      uint32_t inv = inverse_label(lab);
      {
        auto& b = out_by[t * L + kEpsilonLabel];
        for (size_t i = 0; i < b.size(); ++i)
          if (popped[b[i]]) insert(s, lab, tgt_of[b[i]], e, b[i]);
      }
      {
        auto& b = out_by[t * L + inv];
        for (size_t i = 0; i < b.size(); ++i)
          if (popped[b[i]]) insert(s, kEpsilonLabel, tgt_of[b[i]], e, b[i]);
      }
      {
        auto& b = in_by[s * L + kEpsilonLabel];
        for (size_t i = 0; i < b.size(); ++i)
          if (popped[b[i]]) insert(src_of[b[i]], lab, t, b[i], e);
      }
      {
        auto& b = in_by[s * L + inv];
        for (size_t i = 0; i < b.size(); ++i)
          if (popped[b[i]]) insert(src_of[b[i]], kEpsilonLabel, t, b[i], e);
      }
    }
  }
}

// Phase 2: settle every edge at its cheapest derivation.  The first
// `seeded` edges predate the closure, so their stored prices are valid
// upper bounds and enter the queue up front; closure edges enter when a
// derivation first reaches them.  Relaxing a composition once the later
// of its two parts settles yields exact minima: a composition price is
// the sum of two nonnegative parts, hence no composite can undercut a
// settled part.
void PricedAutomaton::fold_prices(size_t seeded) {
  const size_t m = edges.size();
  const size_t L = 2 * size_t(alphabet_size) + 1;
  const size_t N = state_count();
  std::vector<uint8_t> lab_of(m);
  std::vector<uint32_t> src_of(m), tgt_of(m);
  for (uint32_t i = 0; i < m; ++i) {
    lab_of[i] = static_cast<uint8_t>(edges[i].label);
    src_of[i] = edges[i].src;
    tgt_of[i] = edges[i].tgt;
  }
  std::vector<std::vector<uint32_t>> out_by(N * L), in_by(N * L);
  for (uint32_t i = 0; i < m; ++i) {
    out_by[src_of[i] * L + lab_of[i]].push_back(i);
    in_by[tgt_of[i] * L + lab_of[i]].push_back(i);
  }

  std::vector<char> settled(m, 0);
  std::vector<char> priced(m, 0);

  // Everything derivable at price zero settles first by plain worklist
  // closure; most edges of a completed graph fall in this class, and the
  // queue with its big-integer keys is wasted on them.
  {
    std::vector<uint32_t> zwork;
    std::vector<char> zpopped(m, 0);
    for (uint32_t i = 0; i < seeded; ++i) {
      if (edges[i].price == 0) {
        settled[i] = 1;
        priced[i] = 1;
        zwork.push_back(i);
      }
    }
    auto zderive = [&](StateId cs, uint32_t cl, StateId ct, int64_t p1,
                       int64_t p2) {
      int64_t id = find_edge_id(cs, cl, ct);
      if (id < 0) throw std::logic_error("composition missing after closure");
      if (settled[id]) return;
      AutomatonEdge& e = edges[id];
      e.price = 0;
      e.marker = -1;
      e.parent1 = p1;
      e.parent2 = p2;
      settled[id] = 1;
      priced[id] = 1;
      zwork.push_back(static_cast<uint32_t>(id));
    };
    while (!zwork.empty()) {
      uint32_t e = zwork.back();
      zwork.pop_back();
      zpopped[e] = 1;
      StateId s = src_of[e];
      StateId t = tgt_of[e];
      uint32_t lab = lab_of[e];
      if (lab == kEpsilonLabel) {
        for (uint32_t f : out_edges[t])
          if (zpopped[f]) zderive(s, lab_of[f], tgt_of[f], e, f);
        for (uint32_t f : in_edges[s])
          if (zpopped[f]) zderive(src_of[f], lab_of[f], t, f, e);
      } else {
        uint32_t inv = inverse_label(lab);
        for (uint32_t f : out_by[t * L + kEpsilonLabel])
          if (zpopped[f]) zderive(s, lab, tgt_of[f], e, f);
        for (uint32_t f : out_by[t * L + inv])
          if (zpopped[f]) zderive(s, kEpsilonLabel, tgt_of[f], e, f);
        for (uint32_t f : in_by[s * L + kEpsilonLabel])
          if (zpopped[f]) zderive(src_of[f], lab, t, f, e);
        for (uint32_t f : in_by[s * L + inv])
          if (zpopped[f]) zderive(src_of[f], kEpsilonLabel, t, f, e);
      }
    }
  }

  using QE = std::pair<BigInt, uint32_t>;
  std::priority_queue<QE, std::vector<QE>, std::greater<QE>> pq;
  for (uint32_t i = 0; i < seeded; ++i) {
    if (settled[i]) continue;
    pq.emplace(edges[i].price, i);
    priced[i] = 1;
  }

  auto relax = [&](StateId cs, uint32_t cl, StateId ct, const BigInt& a,
                   const BigInt& b, int64_t p1, int64_t p2) {
    int64_t id = find_edge_id(cs, cl, ct);
    if (id < 0) throw std::logic_error("composition missing after closure");
    if (settled[id]) return;
    AutomatonEdge& e = edges[id];
    BigInt cand = a + b;
    if (!priced[id] || cand < e.price) {
      e.price = cand;
      e.marker = -1;
      e.parent1 = p1;
      e.parent2 = p2;
      priced[id] = 1;
      pq.emplace(std::move(cand), static_cast<uint32_t>(id));
    }
  };

  while (!pq.empty()) {
    BigInt price = pq.top().first;
    uint32_t e = pq.top().second;
    pq.pop();
    if (settled[e] || price != edges[e].price) continue;
    settled[e] = 1;
    StateId s = src_of[e];
    StateId t = tgt_of[e];
    uint32_t lab = lab_of[e];

    if (lab == kEpsilonLabel) {
      for (uint32_t f : out_edges[t]) {
        if (!settled[f]) continue;
        relax(s, lab_of[f], tgt_of[f], edges[e].price, edges[f].price, e, f);
      }
      for (uint32_t f : in_edges[s]) {
        if (!settled[f]) continue;
        relax(src_of[f], lab_of[f], t, edges[f].price, edges[e].price, f, e);
      }
    } else {
      uint32_t inv = inverse_label(lab);
      for (uint32_t f : out_by[t * L + kEpsilonLabel]) {
        if (!settled[f]) continue;
        relax(s, lab, tgt_of[f], edges[e].price, edges[f].price, e, f);
      }
      for (uint32_t f : out_by[t * L + inv]) {
        if (!settled[f]) continue;
        relax(s, kEpsilonLabel, tgt_of[f], edges[e].price, edges[f].price, e, f);
      }
      for (uint32_t f : in_by[s * L + kEpsilonLabel]) {
        if (!settled[f]) continue;
        relax(src_of[f], lab, t, edges[f].price, edges[e].price, f, e);
      }
      for (uint32_t f : in_by[s * L + inv]) {
        if (!settled[f]) continue;
        relax(src_of[f], kEpsilonLabel, t, edges[f].price, edges[e].price, f, e);
      }
    }
  }
}

void fold_in_place(PricedAutomaton& g) {
  size_t seeded = g.edges.size();
  g.fold_structural();
  g.fold_prices(seeded);
}

PricedAutomaton fold(const PricedAutomaton& g) {
  PricedAutomaton out = g;
  fold_in_place(out);
  return out;
}

PricedAutomaton saturate(const PricedAutomaton& g, const std::vector<Word>& relators,
                         const SaturationParams& params, uint64_t l) {
  if (params.c0 < 0 || params.c1 < 0)
    throw std::invalid_argument("negative saturation constants");
  if (params.mode == SaturationParams::Mode::Adaptive && params.max_rounds < 1)
    throw std::invalid_argument("adaptive mode needs max_rounds >= 1");

  const bool fixed = params.mode == SaturationParams::Mode::Fixed;
  uint32_t k_bound = static_cast<uint32_t>(std::ceil(
      params.c0 +
      params.c1 * std::log2(static_cast<double>(std::max<uint64_t>(l, 2)))));
  if (k_bound > params.max_rounds) k_bound = params.max_rounds;

  PricedAutomaton cur = g;

  if (fixed && params.pure_completion && !relators.empty()) {
    for (uint32_t i = 0; i < k_bound; ++i) r_completion_in_place(cur, relators);
    fold_in_place(cur);
    cur.rounds = k_bound + 1;
    return cur;
  }

  fold_in_place(cur);
  cur.rounds = 1;
  if (relators.empty()) return cur;
  const bool adaptive = !fixed;
  const bool eager = params.stop_on_epsilon;
  if (adaptive && eager && epsilon_answer(cur).accepted) return cur;

  const uint32_t limit = fixed ? k_bound : params.max_rounds;
  for (uint32_t i = 0; i < limit; ++i) {
    uint32_t pre_states = cur.state_count();
    r_completion_in_place(cur, relators);
    size_t post_cc_edges = cur.edges.size();
    fold_in_place(cur);
    cur.rounds += 1;
    if (adaptive) {
      if (eager && epsilon_answer(cur).accepted) break;
      // Progress means folding derived a new edge between states that
      // already existed before this round.  Fresh loop skeletons attach the
      // same way every round, so a round without such an edge is a fixpoint
      // of the part we can ever decide from.
      bool progress = false;
      for (size_t j = post_cc_edges; j < cur.edges.size() && !progress; ++j)
        progress = cur.edges[j].src < pre_states && cur.edges[j].tgt < pre_states;
      if (!progress) break;
    }
  }
  return cur;
}

EpsilonAnswer epsilon_answer(const PricedAutomaton& g) {
  EpsilonAnswer ans;
  for (StateId f : g.finals) {
    if (f == g.initial) return EpsilonAnswer{true, 0, -1};
    int64_t id = g.find_edge_id(g.initial, kEpsilonLabel, f);
    if (id < 0) continue;
    if (!ans.accepted || g.edges[id].price < ans.cost) {
      ans.accepted = true;
      ans.cost = g.edges[id].price;
      ans.edge = id;
    }
  }
  return ans;
}

SolutionWitness extract_witness(const PricedAutomaton& g, GraphKind kind) {
  EpsilonAnswer ans = epsilon_answer(g);
  if (!ans.accepted) throw std::logic_error("extract_witness: graph rejects");
  return extract_witness_at(g, kind, ans.edge);
}

SolutionWitness extract_witness_at(const PricedAutomaton& g, GraphKind kind,
                                   int64_t epsilon_edge) {
  if (kind != g.kind) throw std::invalid_argument("construction kind mismatch");

  std::vector<int32_t> markers;  // base-edge markers in path order
  if (epsilon_edge >= 0) {
    std::vector<int64_t> stack{epsilon_edge};
    while (!stack.empty()) {
      int64_t e = stack.back();
      stack.pop_back();
      const AutomatonEdge& ed = g.edges[e];
      if (ed.parent1 >= 0) {
        stack.push_back(ed.parent2);
        stack.push_back(ed.parent1);
      } else if (ed.marker >= 0) {
        markers.push_back(ed.marker);
      }
    }
  }

  SolutionWitness w;
  w.kind = kind;
  switch (kind) {
    case GraphKind::SspChain:
    case GraphKind::Kop1Chain:
    case GraphKind::Kop2Prefix:
      // Multiplicity counting covers both skippable blocks (each marker
      // seen at most once) and loop blocks (one hit per traversal).
      w.exponents.assign(g.block_count, 0);
      for (int32_t mk : markers) {
        if (mk < 0 || static_cast<uint32_t>(mk) >= g.block_count)
          throw std::logic_error("marker out of range");
        w.exponents[mk] += 1;
      }
      break;
    case GraphKind::BsmpBlocks:
      for (int32_t mk : markers) {
        if (g.gen_count == 0) throw std::logic_error("marker without generators");
        w.factors.push_back(static_cast<uint32_t>(mk) % g.gen_count);
      }
      break;
    case GraphKind::FreeSmp:
      for (int32_t mk : markers) w.factors.push_back(static_cast<uint32_t>(mk));
      break;
    case GraphKind::Plain:
      break;
  }

  if (kind == GraphKind::Kop2Prefix) {
    StateId hit = epsilon_edge >= 0 ? g.edges[epsilon_edge].tgt : g.initial;
    for (size_t i = 0; i < g.finals.size(); ++i)
      if (g.finals[i] == hit && i < g.final_tags.size()) {
        w.prefix_len = g.final_tags[i];
        break;
      }
  }
  return w;
}

std::string to_dump_string(const PricedAutomaton& g, const Alphabet& alphabet) {
  std::ostringstream os;
  os << "# states " << g.state_count() << "\n";
  os << "# initial " << g.initial << "\n";
  os << "# finals";
  for (StateId f : g.finals) os << ' ' << f;
  os << "\n";
  for (const AutomatonEdge& e : g.edges) {
    os << e.src << '\t';
    if (e.label == kEpsilonLabel)
      os << "eps";
    else
      os << format_word(Word{g.alphabet_size, {label_letter(e.label)}}, alphabet);
    os << '\t' << e.tgt << '\t' << e.price << "\n";
  }
  return os.str();
}

}  // namespace gknap
