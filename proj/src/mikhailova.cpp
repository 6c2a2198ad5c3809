/* mikhailova.cpp -- generator pairs, witness structure, insertion search */

#include "gknap/mikhailova.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <queue>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace gknap {

namespace {

using Clock = std::chrono::steady_clock;

bool same_word(const Word& a, const Word& b) {
  if (a.letters.size() != b.letters.size()) return false;
  for (size_t i = 0; i < a.letters.size(); ++i)
    if (!(a.letters[i] == b.letters[i])) return false;
  return true;
}

std::vector<uint32_t> word_key(const Word& w) {
  std::vector<uint32_t> k;
  k.reserve(w.letters.size());
  for (const Letter& l : w.letters)
    k.push_back((l.gen << 1) | (l.sign < 0 ? 1u : 0u));
  return k;
}

std::vector<int64_t> abelianization(const Word& w, uint32_t rank) {
  std::vector<int64_t> v(rank, 0);
  for (const Letter& l : w.letters) v[l.gen] += l.sign;
  return v;
}

// The letter map x -> x^-1 extended multiplicatively (an involution of
// the free group): signs flip, order stays.
Word flip_signs(const Word& w) {
  Word out = w;
  for (Letter& l : out.letters) l.sign = static_cast<int8_t>(-l.sign);
  return out;
}

Word reverse_word(const Word& w) {
  Word out{w.alphabet_size, {}};
  out.letters.assign(w.letters.rbegin(), w.letters.rend());
  return out;
}

}  // namespace

MikhailovaGens build_generators(const Presentation& pres) {
  MikhailovaGens mg;
  mg.pres = pres;
  mg.C = pres.max_relator_len();
  for (const Word& r : pres.symmetrized) {
    if (r.letters.empty()) throw std::invalid_argument("empty relator");
    mg.gens.push_back({r, Word{pres.alphabet.size, {}}});
  }
  mg.relator_count = mg.gens.size();
  for (uint32_t g = 0; g < pres.alphabet.size; ++g)
    for (int8_t sign : {int8_t{1}, int8_t{-1}}) {
      Word l{pres.alphabet.size, {Letter{g, sign}}};
      Word r{pres.alphabet.size, {Letter{g, static_cast<int8_t>(-sign)}}};
      mg.gens.push_back({std::move(l), std::move(r)});
    }
  return mg;
}

uint64_t membership_bound(uint64_t w_len, uint64_t m, uint64_t C) {
  return m + 8 * (C * m + w_len);
}

BgwpInstance wp_to_bgwp(const Presentation& pres, const Poly& dehn_poly,
                        const Word& w) {
  BgwpInstance inst;
  inst.gens = build_generators(pres);
  Word wr = free_reduce(w);
  uint64_t area = dehn_poly.eval(wr.letters.size());
  inst.n = membership_bound(wr.letters.size(), area, inst.gens.C);
  inst.target = {std::move(wr), Word{pres.alphabet.size, {}}};
  return inst;
}

WitnessExpansion expand_witness(const MikhailovaGens& mg,
                                const std::vector<int32_t>& factors) {
  uint32_t rank = mg.pres.alphabet.size;
  WitnessExpansion out;
  Word segment{rank, {}};
  Word left_total{rank, {}};
  Word right_total{rank, {}};

  for (int32_t f : factors) {
    if (f == 0) throw std::invalid_argument("factor indices are 1-based");
    size_t idx = static_cast<size_t>(f > 0 ? f : -f) - 1;
    if (idx >= mg.gens.size()) throw std::invalid_argument("factor out of range");
    PairWord p = mg.gens[idx];
    if (f < 0) {
      p.left = invert(p.left);
      p.right = invert(p.right);
    }
    left_total = concat(left_total, p.left);
    right_total = free_reduce(concat(right_total, p.right));
    if (idx < mg.relator_count) {
      out.segments.push_back(free_reduce(segment));
      out.relators.push_back(p.left);
      segment = Word{rank, {}};
    } else {
      segment.letters.push_back(p.left.letters[0]);
    }
  }
  out.segments.push_back(free_reduce(segment));
  if (!right_total.letters.empty())
    throw std::invalid_argument("right component not trivial");

  Word seg_cat{rank, {}};
  for (const Word& s : out.segments) seg_cat = concat(seg_cat, s);
  if (!free_reduce(seg_cat).letters.empty())
    throw std::logic_error("segments do not multiply to the identity");

  // left product must equal the product of prefix-conjugated relators
  Word prefix = out.segments[0];
  Word rhs{rank, {}};
  for (size_t i = 0; i < out.relators.size(); ++i) {
    Word conj = concat(prefix, concat(out.relators[i], invert(prefix)));
    rhs = free_reduce(concat(rhs, conj));
    prefix = free_reduce(concat(prefix, out.segments[i + 1]));
  }
  out.left_product = free_reduce(left_total);
  if (!same_word(out.left_product, rhs))
    throw std::logic_error("conjugate form does not match the left product");
  return out;
}

namespace {

struct InsertionNode {
  Word word;
  int64_t parent = -1;
  uint32_t relator = 0;  // index of the inserted relator pair
  Word conj;             // prefix in front of the insertion point
  uint32_t area = 0;
};

}  // namespace

SolverReport bgwp_bruteforce(const MikhailovaGens& mg, const PairWord& target,
                             uint64_t n) {
  auto t0 = Clock::now();
  uint32_t rank = mg.pres.alphabet.size;
  if (target.left.alphabet_size != rank || target.right.alphabet_size != rank)
    throw std::invalid_argument("target alphabet mismatch");

  Word tl = free_reduce(target.left);
  Word tr = free_reduce(target.right);

  // Letter pairs cancel the right component: appending the pairs spelling
  // reverse(tr) multiplies the right by tr^-1 and the left by reverse(tr).
  Word peel = reverse_word(tr);
  Word residue = free_reduce(concat(tl, peel));

  SolverReport rep;

  bool relators_abelian_zero = true;
  for (size_t i = 0; i < mg.relator_count; ++i) {
    for (int64_t c : abelianization(mg.gens[i].left, rank))
      if (c != 0) relators_abelian_zero = false;
  }
  if (relators_abelian_zero) {
    for (int64_t c : abelianization(residue, rank))
      if (c != 0) {
        // no generator product can move the joint abelianization
        rep.decision = Decision::No;
        rep.stats.millis =
            std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        return rep;
      }
  }

  // Relator insertion search: residue is in the normal closure of R iff
  // it reduces to the empty word by inserting relators at arbitrary split
  // points.  Shortest words are expanded first so derivations that never
  // grow the word (adjacent swaps, cancellations) are found without
  // flooding a breadth-first layer.  Caps keep the search finite; a
  // capped miss is unknown, a closed search is an exact no.
  const uint32_t area_cap = 18;
  const uint64_t len_cap = residue.letters.size() + 3 * mg.C + 8;

  std::vector<InsertionNode> nodes;
  std::map<std::vector<uint32_t>, int64_t> visited;
  using Rank = std::tuple<size_t, uint32_t, int64_t>;
  std::priority_queue<Rank, std::vector<Rank>, std::greater<Rank>> frontier;
  uint64_t expansions = 0;
  bool pruned = false;
  int64_t hit = -1;

  nodes.push_back({residue, -1, 0, Word{rank, {}}, 0});
  visited.emplace(word_key(residue), 0);
  frontier.push({residue.letters.size(), 0, 0});
  if (residue.letters.empty()) hit = 0;

  while (hit < 0 && !frontier.empty()) {
    int64_t cur = std::get<2>(frontier.top());
    frontier.pop();
    if (nodes[cur].area == area_cap) {
      pruned = true;
      continue;
    }
    Word u = nodes[cur].word;
    for (size_t split = 0; split <= u.letters.size() && hit < 0; ++split) {
      Word head{rank, {}};
      head.letters.assign(u.letters.begin(), u.letters.begin() + split);
      Word tail{rank, {}};
      tail.letters.assign(u.letters.begin() + split, u.letters.end());
      for (size_t ri = 0; ri < mg.relator_count && hit < 0; ++ri) {
        ++expansions;
        Word cand = free_reduce(concat(head, concat(mg.gens[ri].left, tail)));
        if (cand.letters.size() > len_cap) {
          pruned = true;
          continue;
        }
        auto key = word_key(cand);
        if (visited.count(key)) continue;
        int64_t id = static_cast<int64_t>(nodes.size());
        nodes.push_back({std::move(cand), cur, static_cast<uint32_t>(ri), head,
                         nodes[cur].area + 1});
        visited.emplace(std::move(key), id);
        if (nodes[id].word.letters.empty()) hit = id;
        frontier.push({nodes[id].word.letters.size(), nodes[id].area, id});
      }
    }
  }

  rep.stats.states = nodes.size();
  rep.stats.edges = expansions;
  rep.stats.millis =
      std::chrono::duration<double, std::milli>(Clock::now() - t0).count();

  if (hit < 0) {
    rep.decision = pruned ? Decision::Unknown : Decision::No;
    return rep;
  }

  // Unwind the insertion chain: if u' = reduce(head r tail) came from u,
  // then u = head r^-1 head^-1 u', so the residue is the product of the
  // prefix-conjugated inverse relators in path order.
  std::map<std::vector<uint32_t>, uint32_t> relator_index;
  for (size_t i = 0; i < mg.relator_count; ++i)
    relator_index.emplace(word_key(mg.gens[i].left), static_cast<uint32_t>(i));

  std::vector<uint32_t> factors;
  auto push_letter = [&](Letter l) {
    uint32_t idx = static_cast<uint32_t>(mg.relator_count) + 2 * l.gen +
                   (l.sign < 0 ? 1 : 0);
    factors.push_back(2 * idx);
  };
  uint32_t area = nodes[hit].area;
  std::vector<int64_t> chain;
  for (int64_t id = hit; id > 0; id = nodes[id].parent) chain.push_back(id);
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    const InsertionNode& nd = nodes[*it];
    Word rinv = invert(mg.gens[nd.relator].left);
    auto ri = relator_index.find(word_key(rinv));
    if (ri == relator_index.end())
      throw std::logic_error("relator set is not closed under inversion");
    for (const Letter& l : nd.conj.letters) push_letter(l);
    factors.push_back(2 * ri->second);
    for (const Letter& l : invert(nd.conj).letters) push_letter(l);
  }
  for (const Letter& l : invert(peel).letters) push_letter(l);

  if (factors.size() > n) {
    // found a certificate, but not within the requested factor budget
    rep.decision = Decision::Unknown;
    rep.stats.rounds = area;
    return rep;
  }

  Word lcheck{rank, {}};
  Word rcheck{rank, {}};
  for (uint32_t f : factors) {
    const PairWord& p = mg.gens[f >> 1];
    Word pl = (f & 1) ? invert(p.left) : p.left;
    Word pr = (f & 1) ? invert(p.right) : p.right;
    lcheck = free_reduce(concat(lcheck, pl));
    rcheck = free_reduce(concat(rcheck, pr));
  }
  if (!same_word(lcheck, tl) || !same_word(rcheck, tr))
    throw std::logic_error("factor sequence failed the pair re-check");

  SolutionWitness w;
  w.kind = GraphKind::FreeSmp;
  w.factors = std::move(factors);
  rep.decision = Decision::Yes;
  rep.cost = BigInt(w.factors.size());
  rep.witness = std::move(w);
  rep.verified = true;
  rep.stats.rounds = area;
  return rep;
}

}  // namespace gknap
