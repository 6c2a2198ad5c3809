/* test_mikhailova.cpp -- pair generators, witness expansion, bounded search */

#include <string>
#include <vector>

#include "doctest.h"
#include "gknap/mikhailova.hpp"
#include "gknap/oracles.hpp"
#include "gknap/presentation.hpp"
#include "gknap/word.hpp"

using namespace gknap;

namespace {

const Presentation kZ2 = parse_presentation("a,b | abAB");

// all freely reduced words of the given length over two generators
void reduced_words(size_t len, std::vector<Word>& out) {
  std::vector<Word> cur{Word(2)};
  for (size_t l = 0; l < len; ++l) {
    std::vector<Word> next;
    for (const Word& w : cur)
      for (uint32_t g = 0; g < 2; ++g)
        for (int8_t s : {int8_t{1}, int8_t{-1}}) {
          if (!w.letters.empty() && w.letters.back().gen == g &&
              w.letters.back().sign == -s)
            continue;
          Word e = w;
          e.letters.push_back(Letter{g, s});
          next.push_back(std::move(e));
        }
    cur = std::move(next);
  }
  out.insert(out.end(), cur.begin(), cur.end());
}

bool zero_abelianization(const Word& w) {
  int64_t a = 0, b = 0;
  for (const Letter& l : w.letters) (l.gen == 0 ? a : b) += l.sign;
  return a == 0 && b == 0;
}

std::vector<int32_t> signed_factors(const std::vector<uint32_t>& encoded) {
  std::vector<int32_t> out;
  for (uint32_t f : encoded) {
    int32_t idx = static_cast<int32_t>(f >> 1) + 1;
    out.push_back((f & 1) ? -idx : idx);
  }
  return out;
}

bool words_equal(const Word& a, const Word& b) {
  return format_word(a) == format_word(b);
}

}  // namespace

TEST_SUITE("mikhailova") {

TEST_CASE("generator pairs cover relators and letters") {
  MikhailovaGens mg = build_generators(kZ2);
  CHECK(mg.relator_count == 8);  // symmetrized commutator
  CHECK(mg.gens.size() == 12);
  CHECK(mg.C == 4);

  for (size_t i = 0; i < mg.relator_count; ++i) {
    CHECK(mg.gens[i].right.letters.empty());
    CHECK(mg.gens[i].left.letters.size() == 4);
    // the symmetrized set is closed under inversion
    bool found = false;
    Word inv = invert(mg.gens[i].left);
    for (size_t j = 0; j < mg.relator_count; ++j)
      if (words_equal(mg.gens[j].left, inv)) found = true;
    CHECK(found);
  }
  for (size_t i = mg.relator_count; i < mg.gens.size(); ++i) {
    REQUIRE(mg.gens[i].left.letters.size() == 1);
    REQUIRE(mg.gens[i].right.letters.size() == 1);
    Letter l = mg.gens[i].left.letters[0];
    Letter r = mg.gens[i].right.letters[0];
    CHECK(l.gen == r.gen);
    CHECK(l.sign == -r.sign);
  }
}

TEST_CASE("membership bound is affine in its inputs") {
  CHECK(membership_bound(0, 0, 4) == 0);
  CHECK(membership_bound(2, 1, 4) == 49);
  for (uint64_t m = 0; m < 5; ++m)
    for (uint64_t w = 0; w < 5; ++w) {
      CHECK(membership_bound(w, m + 1, 4) > membership_bound(w, m, 4));
      CHECK(membership_bound(w + 1, m, 4) > membership_bound(w, m, 4));
    }
}

TEST_CASE("word problem instances pick the polynomial budget") {
  Alphabet f2(2);
  Poly square{{1, 0, 0}};
  BgwpInstance inst = wp_to_bgwp(kZ2, square, parse_word("abAB", f2));
  CHECK(inst.n == 560);  // 16 + 8*(4*16 + 4)
  CHECK(words_equal(inst.target.left, parse_word("abAB", f2)));
  CHECK(inst.target.right.letters.empty());

  // the input is reduced before the budget is computed
  BgwpInstance red = wp_to_bgwp(kZ2, square, parse_word("aAabAB", f2));
  CHECK(red.n == 560);
  CHECK(words_equal(red.target.left, parse_word("abAB", f2)));
}

TEST_CASE("witness expansion validates the derivation shape") {
  MikhailovaGens mg = build_generators(kZ2);
  Alphabet f2(2);

  // a lone relator: empty segments around it
  WitnessExpansion lone = expand_witness(mg, {1});
  REQUIRE(lone.relators.size() == 1);
  CHECK(words_equal(lone.relators[0], mg.gens[0].left));
  REQUIRE(lone.segments.size() == 2);
  CHECK(lone.segments[0].letters.empty());
  CHECK(lone.segments[1].letters.empty());
  CHECK(words_equal(lone.left_product, mg.gens[0].left));

  // letter pairs cancelling on both sides
  WitnessExpansion pair = expand_witness(mg, {9, 10});
  CHECK(pair.relators.empty());
  REQUIRE(pair.segments.size() == 1);
  CHECK(pair.segments[0].letters.empty());
  CHECK(pair.left_product.letters.empty());

  // a conjugated relator keeps the prefix form
  WitnessExpansion conj = expand_witness(mg, {9, 1, 10});
  REQUIRE(conj.relators.size() == 1);
  REQUIRE(conj.segments.size() == 2);
  CHECK(format_word(conj.segments[0], f2) == "a");
  CHECK(format_word(conj.segments[1], f2) == "A");
  CHECK(words_equal(conj.left_product,
                    free_reduce(concat(parse_word("a", f2),
                                       concat(mg.gens[0].left,
                                              parse_word("A", f2))))));

  // inverted letter pairs work through the sign
  WitnessExpansion invpair = expand_witness(mg, {-9, -10});
  CHECK(invpair.left_product.letters.empty());

  CHECK_THROWS_AS(expand_witness(mg, {0}), std::invalid_argument);
  CHECK_THROWS_AS(expand_witness(mg, {13}), std::invalid_argument);
  // a lone letter pair leaves the right component nontrivial
  CHECK_THROWS_AS(expand_witness(mg, {9}), std::invalid_argument);
  // segments that do not cancel leave the right side dirty too
  CHECK_THROWS_AS(expand_witness(mg, {9, 9}), std::invalid_argument);
}

TEST_CASE("single pairs and peeled rights resolve directly") {
  MikhailovaGens mg = build_generators(kZ2);
  Alphabet f2(2);

  // a letter-pair generator is its own witness
  SolverReport gen = bgwp_bruteforce(
      mg, {parse_word("a", f2), parse_word("A", f2)}, 5);
  REQUIRE(gen.decision == Decision::Yes);
  CHECK(gen.verified);
  REQUIRE(gen.witness.has_value());
  REQUIRE(gen.witness->factors.size() == 1);
  CHECK(words_equal(mg.gens[gen.witness->factors[0] >> 1].left,
                    parse_word("a", f2)));

  SolverReport peel =
      bgwp_bruteforce(mg, {parse_word("B", f2), parse_word("b", f2)}, 5);
  REQUIRE(peel.decision == Decision::Yes);
  REQUIRE(peel.witness->factors.size() == 1);
  CHECK(*peel.cost == 1);

  // the twisted diagonal rejects the plain one
  SolverReport plain = bgwp_bruteforce(
      mg, {parse_word("a", f2), parse_word("a", f2)}, 50);
  CHECK(plain.decision == Decision::No);

  // mixed components combine the peel with one insertion
  SolverReport mixed = bgwp_bruteforce(
      mg, {parse_word("ab", f2), parse_word("BA", f2)}, 50);
  REQUIRE(mixed.decision == Decision::Yes);
  CHECK(mixed.verified);
  size_t relators_used = 0;
  Word lprod(2), rprod(2);
  for (uint32_t f : mixed.witness->factors) {
    REQUIRE((f >> 1) < mg.gens.size());
    const PairWord& p = mg.gens[f >> 1];
    lprod = free_reduce(concat(lprod, (f & 1) ? invert(p.left) : p.left));
    rprod = free_reduce(concat(rprod, (f & 1) ? invert(p.right) : p.right));
    if ((f >> 1) < mg.relator_count) ++relators_used;
  }
  CHECK(relators_used >= 1);
  CHECK(words_equal(lprod, parse_word("ab", f2)));
  CHECK(words_equal(rprod, parse_word("BA", f2)));
}

TEST_CASE("membership matches the abelianization over the commutator quotient") {
  Poly square{{1, 0, 0}};
  std::vector<Word> words;
  for (size_t len = 0; len <= 4; ++len) reduced_words(len, words);
  reduced_words(6, words);

  int yes_count = 0, no_count = 0;
  for (const Word& w : words) {
    bool expect = zero_abelianization(w);
    if (w.letters.size() == 6 && !expect) continue;  // cheap obstruction, skip bulk
    BgwpInstance inst = wp_to_bgwp(kZ2, square, w);
    SolverReport rep = bgwp_bruteforce(inst.gens, inst.target, inst.n);
    REQUIRE(rep.decision != Decision::Unknown);
    CHECK((rep.decision == Decision::Yes) == expect);
    if (rep.decision == Decision::Yes) {
      ++yes_count;
      CHECK(rep.verified);
      REQUIRE(rep.cost.has_value());
      CHECK(*rep.cost <= BigInt(inst.n));
      WitnessExpansion exp =
          expand_witness(inst.gens, signed_factors(rep.witness->factors));
      CHECK(words_equal(exp.left_product, free_reduce(w)));
    } else {
      ++no_count;
    }
  }
  CHECK(yes_count > 20);
  CHECK(no_count > 100);
}

TEST_CASE("budget shortfall reports unknown, never no") {
  MikhailovaGens mg = build_generators(kZ2);
  Alphabet f2(2);
  Word w = free_reduce(parse_word("aabABA", f2));  // conjugated commutator
  PairWord target{w, Word(2)};

  SolverReport full = bgwp_bruteforce(mg, target, 500);
  REQUIRE(full.decision == Decision::Yes);
  REQUIRE(full.witness->factors.size() > 2);

  SolverReport starved = bgwp_bruteforce(mg, target, 2);
  CHECK(starved.decision == Decision::Unknown);
  CHECK(!starved.witness.has_value());
}

TEST_CASE("alphabet mismatches are rejected") {
  MikhailovaGens mg = build_generators(kZ2);
  CHECK_THROWS_AS(bgwp_bruteforce(mg, {Word(3), Word(3)}, 5),
                  std::invalid_argument);
}

}  // TEST_SUITE
