/* test_automata.cpp -- graphs, folding, completion, witness replay */

#include <algorithm>
#include <random>
#include <set>
#include <tuple>
#include <vector>

#include "doctest.h"
#include "gknap/automaton.hpp"
#include "gknap/oracles.hpp"
#include "gknap/presentation.hpp"
#include "gknap/word.hpp"

using namespace gknap;

namespace {

Word random_word(std::mt19937_64& rng, uint32_t rank, size_t len) {
  Word w(rank);
  for (size_t i = 0; i < len; ++i)
    w.letters.push_back(
        Letter(static_cast<uint32_t>(rng() % rank), rng() % 2 ? 1 : -1));
  return w;
}

using EdgeTuple = std::tuple<StateId, uint32_t, StateId, BigInt>;

std::vector<EdgeTuple> edge_set(const PricedAutomaton& g) {
  std::vector<EdgeTuple> out;
  for (const AutomatonEdge& e : g.edges)
    out.emplace_back(e.src, e.label, e.tgt, e.price);
  std::sort(out.begin(), out.end());
  return out;
}

PricedAutomaton random_graph(std::mt19937_64& rng) {
  PricedAutomaton g(2);
  uint32_t n = 2 + rng() % 6;
  for (uint32_t i = 0; i < n; ++i) g.add_state();
  g.initial = 0;
  g.finals.push_back(static_cast<StateId>(rng() % n));
  uint32_t m = 1 + rng() % (2 * n);
  for (uint32_t i = 0; i < m; ++i)
    g.add_edge(static_cast<StateId>(rng() % n), static_cast<uint32_t>(rng() % 5),
               static_cast<StateId>(rng() % n), BigInt(rng() % 4));
  return g;
}

void enum_accepted(const PricedAutomaton& g, StateId s, Word& cur, size_t cap,
                   int fuel, std::vector<Word>& out) {
  if (fuel <= 0) return;
  if (std::find(g.finals.begin(), g.finals.end(), s) != g.finals.end())
    out.push_back(cur);
  for (uint32_t eid : g.out_edges[s]) {
    const AutomatonEdge& e = g.edges[eid];
    if (e.label == kEpsilonLabel) {
      enum_accepted(g, e.tgt, cur, cap, fuel - 1, out);
    } else if (cur.letters.size() < cap) {
      cur.letters.push_back(label_letter(e.label));
      enum_accepted(g, e.tgt, cur, cap, fuel - 1, out);
      cur.letters.pop_back();
    }
  }
}

std::vector<Word> accepted_words(const PricedAutomaton& g, size_t cap) {
  std::vector<Word> out;
  Word cur(g.alphabet_size);
  enum_accepted(g, g.initial, cur, cap, 64, out);
  return out;
}

}  // namespace

TEST_SUITE("automata") {

TEST_CASE("label arithmetic round trips") {
  for (uint32_t gen = 0; gen < 3; ++gen)
    for (int sign : {1, -1}) {
      Letter l(gen, sign);
      uint32_t lab = letter_label(l);
      CHECK(lab != kEpsilonLabel);
      CHECK(label_letter(lab) == l);
      CHECK(label_letter(inverse_label(lab)) == l.inverse());
      CHECK(inverse_label(inverse_label(lab)) == lab);
    }
  CHECK(inverse_label(kEpsilonLabel) == kEpsilonLabel);
}

TEST_CASE("empty instance graph accepts at cost zero") {
  PricedAutomaton g = build_ssp_graph({}, Word(2));
  CHECK(g.state_count() == 1);
  EpsilonAnswer a = epsilon_answer(g);
  CHECK(a.accepted);
  CHECK(a.cost == 0);
  CHECK(a.edge == -1);
}

TEST_CASE("add_edge keeps the cheaper price per triple") {
  PricedAutomaton g(1);
  StateId s = g.add_state();
  StateId t = g.add_state();
  auto [e1, fresh1] = g.add_edge(s, 1, t, BigInt(5));
  CHECK(fresh1);
  auto [e2, fresh2] = g.add_edge(s, 1, t, BigInt(3));
  CHECK(!fresh2);
  CHECK(e1 == e2);
  CHECK(g.edges[e1].price == 3);
  g.add_edge(s, 1, t, BigInt(9));
  CHECK(g.edges[e1].price == 3);
}

TEST_CASE("fold is idempotent on random graphs") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 200; ++i) {
    PricedAutomaton g = random_graph(rng);
    PricedAutomaton f1 = fold(g);
    PricedAutomaton f2 = fold(f1);
    CHECK(f1.state_count() == f2.state_count());
    CHECK(edge_set(f1) == edge_set(f2));
  }
}

TEST_CASE("folded subset-sum graphs decide free instances") {
  std::mt19937_64 rng(42);
  WpOracle wp = wp_free(2);
  for (int i = 0; i < 300; ++i) {
    size_t k = 1 + rng() % 3;
    std::vector<Word> gens;
    for (size_t j = 0; j < k; ++j)
      gens.push_back(random_word(rng, 2, 1 + rng() % 3));
    Word target = random_word(rng, 2, rng() % 4);
    PricedAutomaton f = fold(build_ssp_graph(gens, target));
    BruteResult br = brute_ssp(wp, gens, target);
    REQUIRE(!br.cap_exceeded);
    CHECK(epsilon_answer(f).accepted == (br.decision == Decision::Yes));
  }
}

TEST_CASE("completion adds one relator loop per state") {
  Presentation pres = parse_presentation("a,b | aa, bbb");
  REQUIRE(pres.symmetrized.size() == 4);
  REQUIRE(pres.norm_sum() == 10);

  std::mt19937_64 rng(43);
  for (int i = 0; i < 50; ++i) {
    size_t k = 1 + rng() % 3;
    std::vector<Word> gens;
    for (size_t j = 0; j < k; ++j)
      gens.push_back(random_word(rng, 2, 1 + rng() % 4));
    Word target = random_word(rng, 2, rng() % 4);
    PricedAutomaton g = build_ssp_graph(gens, target);
    PricedAutomaton cc = r_completion(g, pres.symmetrized);
    uint64_t n = g.state_count();
    // each loop spelling r adds |r| - 1 fresh states and |r| edges
    CHECK(cc.state_count() ==
          n * (1 + pres.norm_sum() - pres.symmetrized.size()));
    CHECK(cc.edges.size() == g.edges.size() + n * pres.norm_sum());
    CHECK(cc.state_count() <= n * (1 + pres.norm_sum()));
  }
}

TEST_CASE("completion preserves accepted images") {
  Presentation pres = parse_presentation("a,b | aa, bbb");
  WpOracle wp = wp_free_product_cyclic({2, 3});
  std::mt19937_64 rng(44);
  for (int i = 0; i < 30; ++i) {
    size_t k = 1 + rng() % 2;
    std::vector<Word> gens;
    for (size_t j = 0; j < k; ++j)
      gens.push_back(random_word(rng, 2, 1 + rng() % 3));
    Word target = random_word(rng, 2, rng() % 3);
    PricedAutomaton g = build_ssp_graph(gens, target);
    PricedAutomaton cc = r_completion(g, pres.symmetrized);

    std::vector<Word> before = accepted_words(g, 6);
    std::vector<Word> after = accepted_words(cc, 6);
    // old accepted words stay accepted verbatim
    for (const Word& v : before) {
      bool found = std::any_of(after.begin(), after.end(),
                               [&](const Word& u) { return u == v; });
      CHECK(found);
    }
    // new accepted words carry no new group images
    for (const Word& u : after) {
      bool matched = std::any_of(before.begin(), before.end(), [&](const Word& v) {
        return wp(free_reduce(concat(u, invert(v))));
      });
      CHECK(matched);
    }
  }
}

TEST_CASE("torsion pair folds to an epsilon edge in one completion round") {
  Presentation pres = parse_presentation("a,b | aa");
  std::vector<Word> gens = {parse_word("a", pres.alphabet)};
  Word target = parse_word("A", pres.alphabet);
  PricedAutomaton g = build_ssp_graph(gens, target);
  CHECK(!epsilon_answer(fold(g)).accepted);  // free reduction alone fails

  SaturationParams params;
  PricedAutomaton s = saturate(g, pres.symmetrized, params, 2);
  EpsilonAnswer a = epsilon_answer(s);
  CHECK(a.accepted);
  CHECK(a.cost == 1);
  CHECK(s.rounds <= 2);  // initial fold plus one completion round

  SolutionWitness w = extract_witness(s, GraphKind::SspChain);
  REQUIRE(w.exponents.size() == 1);
  CHECK(w.exponents[0] == 1);
}

TEST_CASE("witness replay recovers taken blocks on free instances") {
  std::mt19937_64 rng(45);
  for (int i = 0; i < 200; ++i) {
    size_t k = 1 + rng() % 3;
    std::vector<Word> gens;
    for (size_t j = 0; j < k; ++j)
      gens.push_back(random_word(rng, 2, 1 + rng() % 3));
    // build a guaranteed-positive instance: target = product of a subset
    uint64_t mask = rng() % (uint64_t(1) << k);
    Word target(2);
    for (size_t j = 0; j < k; ++j)
      if ((mask >> j) & 1) target = concat(target, gens[j]);
    target = free_reduce(target);

    PricedAutomaton f = fold(build_ssp_graph(gens, target));
    EpsilonAnswer a = epsilon_answer(f);
    REQUIRE(a.accepted);
    SolutionWitness w = extract_witness(f, GraphKind::SspChain);
    REQUIRE(w.exponents.size() == k);
    Word prod(2);
    for (size_t j = 0; j < k; ++j) {
      CHECK(w.exponents[j] >= 0);
      CHECK(w.exponents[j] <= 1);
      if (w.exponents[j]) prod = concat(prod, gens[j]);
    }
    CHECK(free_reduce(concat(prod, invert(target))).empty());
  }
}

TEST_CASE("epsilon_answer picks the cheapest accepting edge") {
  PricedAutomaton g(1);
  StateId a = g.add_state();
  StateId b = g.add_state();
  g.initial = a;
  g.finals.push_back(b);
  g.add_edge(a, kEpsilonLabel, b, BigInt(7));
  EpsilonAnswer ans = epsilon_answer(g);
  CHECK(ans.accepted);
  CHECK(ans.cost == 7);
  g.add_edge(a, kEpsilonLabel, b, BigInt(2));
  ans = epsilon_answer(g);
  CHECK(ans.cost == 2);
}

TEST_CASE("dump format is stable") {
  PricedAutomaton g(2);
  StateId s = g.add_state();
  StateId t = g.add_state();
  g.initial = s;
  g.finals.push_back(t);
  g.add_edge(s, letter_label(Letter(0, 1)), t, BigInt(1));
  g.add_edge(t, kEpsilonLabel, s, BigInt(0));
  std::string dump = to_dump_string(g, Alphabet(2));
  CHECK(dump ==
        "# states 2\n"
        "# initial 0\n"
        "# finals 1\n"
        "0\ta\t1\t1\n"
        "1\teps\t0\t0\n");
}

TEST_CASE("saturation rounds stay at one on free instances") {
  std::mt19937_64 rng(46);
  for (int i = 0; i < 50; ++i) {
    std::vector<Word> gens = {random_word(rng, 2, 1 + rng() % 4)};
    Word target = random_word(rng, 2, rng() % 5);
    PricedAutomaton g = build_ssp_graph(gens, target);
    PricedAutomaton s = saturate(g, {}, {}, 8);
    CHECK(s.rounds == 1);
  }
}

}  // TEST_SUITE
