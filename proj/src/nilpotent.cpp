/* nilpotent.cpp -- ball BFS and the prefix-set subset-sum solver */

#include "gknap/nilpotent.hpp"

#include <chrono>
#include <stdexcept>
#include <utility>

#include "gknap/reductions.hpp"

namespace gknap {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void check_alphabet(const GroupOracle& oracle, const Alphabet& alphabet,
                    const std::vector<Word>& gens, const Word& target) {
  if (alphabet.size != oracle.rank())
    throw std::invalid_argument("alphabet does not match the oracle rank");
  if (target.alphabet_size != alphabet.size)
    throw std::invalid_argument("target alphabet mismatch");
  for (const Word& w : gens)
    if (w.alphabet_size != alphabet.size)
      throw std::invalid_argument("generator alphabet mismatch");
}

GroupOracle::Elem apply_word(const GroupOracle& oracle,
                             const GroupOracle::Elem& from, const Word& w) {
  GroupOracle::Elem e = from;
  for (const Letter& l : w.letters) e = oracle.mul_letter(e, l);
  return e;
}

}  // namespace

Ball build_ball(const GroupOracle& oracle, const Alphabet& alphabet, uint32_t n) {
  if (alphabet.size != oracle.rank())
    throw std::invalid_argument("alphabet does not match the oracle rank");

  Ball ball;
  ball.radius = n;
  GroupOracle::Elem id = oracle.identity();
  ball.elems.push_back(id);
  ball.witness.push_back(Word{alphabet.size, {}});
  ball.index.emplace(std::move(id), 0);

  size_t layer_begin = 0;
  for (uint32_t depth = 1; depth <= n; ++depth) {
    size_t layer_end = ball.elems.size();
    for (size_t i = layer_begin; i < layer_end; ++i)
      for (uint32_t gen = 0; gen < alphabet.size; ++gen)
        for (int8_t sign : {int8_t{1}, int8_t{-1}}) {
          GroupOracle::Elem nb =
              oracle.mul_letter(ball.elems[i], Letter{gen, sign});
          if (ball.index.count(nb)) continue;
          Word w = ball.witness[i];
          w.letters.push_back(Letter{gen, sign});
          ball.index.emplace(nb, static_cast<uint32_t>(ball.elems.size()));
          ball.elems.push_back(std::move(nb));
          ball.witness.push_back(std::move(w));
        }
    layer_begin = layer_end;
  }
  return ball;
}

SolverReport nilpotent_ssp(const GroupOracle& oracle, const Alphabet& alphabet,
                           const std::vector<Word>& gens, const Word& target) {
  check_alphabet(oracle, alphabet, gens, target);
  if (gens.size() >= 64)
    throw std::invalid_argument("selection mask limited to 63 generators");
  auto t0 = Clock::now();

  GroupOracle::Elem tgt = evaluate_word(oracle, target);
  uint64_t budget = 0;
  for (const Word& w : gens) budget += w.letters.size();

  SolverReport rep;
  if (oracle.length_lower_bound(tgt) > budget) {
    // target outside the ball any selection can reach
    rep.decision = Decision::No;
    rep.stats.millis = ms_since(t0);
    return rep;
  }

  // elem -> (taken count, selection mask), keeping the cheapest mask
  std::map<GroupOracle::Elem, std::pair<uint64_t, uint64_t>> prefix;
  prefix.emplace(oracle.identity(), std::make_pair(uint64_t{0}, uint64_t{0}));
  uint64_t probes = 0;

  for (size_t i = 0; i < gens.size(); ++i) {
    auto snapshot = prefix;
    for (const auto& [elem, tag] : snapshot) {
      GroupOracle::Elem next = apply_word(oracle, elem, gens[i]);
      ++probes;
      auto cand = std::make_pair(tag.first + 1, tag.second | (uint64_t{1} << i));
      auto [it, fresh] = prefix.emplace(std::move(next), cand);
      if (!fresh && cand.first < it->second.first) it->second = cand;
    }
  }

  rep.stats.states = prefix.size();
  rep.stats.edges = probes;
  rep.stats.rounds = static_cast<uint32_t>(gens.size());
  auto hit = prefix.find(tgt);
  if (hit == prefix.end()) {
    rep.decision = Decision::No;
  } else {
    SolutionWitness w;
    w.kind = GraphKind::SspChain;
    w.exponents.assign(gens.size(), 0);
    for (size_t i = 0; i < gens.size(); ++i)
      if (hit->second.second & (uint64_t{1} << i)) w.exponents[i] = 1;

    GroupOracle::Elem check = oracle.identity();
    for (size_t i = 0; i < gens.size(); ++i)
      if (w.exponents[i]) check = apply_word(oracle, check, gens[i]);
    if (check != tgt)
      throw std::logic_error("selection failed the arithmetic re-check");

    rep.decision = Decision::Yes;
    rep.cost = BigInt(hit->second.first);
    rep.witness = std::move(w);
    rep.verified = true;
  }
  rep.stats.millis = ms_since(t0);
  return rep;
}

SolverReport nilpotent_bsmp(const GroupOracle& oracle, const Alphabet& alphabet,
                            const std::vector<Word>& gens, const Word& target,
                            uint64_t m) {
  check_alphabet(oracle, alphabet, gens, target);
  auto t0 = Clock::now();
  std::vector<Word> expanded = bsmp_to_ssop(gens, m);
  SolverReport rep = nilpotent_ssp(oracle, alphabet, expanded, target);
  // A subset of the expansion may take several factors from one block, so
  // membership holds only when the cheapest selection fits the bound.
  if (rep.decision == Decision::Yes && *rep.cost > m) {
    rep.decision = Decision::No;
    rep.cost.reset();
    rep.witness.reset();
    rep.verified = false;
  }
  if (rep.witness) {
    SolutionWitness w;
    w.kind = GraphKind::BsmpBlocks;
    w.factors = bsmp_factors_from_ssop(rep.witness->exponents, gens.size());
    rep.witness = std::move(w);
  }
  rep.stats.millis = ms_since(t0);
  return rep;
}

}  // namespace gknap
