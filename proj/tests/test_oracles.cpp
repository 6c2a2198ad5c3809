/* test_oracles.cpp -- word problem oracles and brute-force reference solvers */

#include <random>
#include <vector>

#include "doctest.h"
#include "gknap/group_oracle.hpp"
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

Word commutator(const Word& u, const Word& v) {
  return free_reduce(concat(concat(u, v), concat(invert(u), invert(v))));
}

Word product_of(const std::vector<Word>& gens, const std::vector<int64_t>& exps) {
  Word p(gens.empty() ? 0 : gens[0].alphabet_size);
  for (size_t i = 0; i < gens.size(); ++i) {
    Word g = exps[i] >= 0 ? gens[i] : invert(gens[i]);
    for (int64_t j = 0; j < (exps[i] >= 0 ? exps[i] : -exps[i]); ++j)
      p = concat(p, g);
  }
  return free_reduce(p);
}

}  // namespace

TEST_SUITE("oracles") {

TEST_CASE("free oracle is free reduction") {
  WpOracle wp = wp_free(2);
  Alphabet f2(2);
  CHECK(wp(Word(2)));
  CHECK(wp(parse_word("aA", f2)));
  CHECK(wp(parse_word("abBA", f2)));
  CHECK(!wp(parse_word("ab", f2)));
  std::mt19937_64 rng(101);
  for (int i = 0; i < 300; ++i) {
    Word w = random_word(rng, 2, rng() % 10);
    CHECK(wp(w) == free_reduce(w).empty());
  }
}

TEST_CASE("free product of cyclics") {
  WpOracle wp = wp_free_product_cyclic({2, 3});
  Alphabet f2(2);
  for (const char* t : {"", "aa", "AA", "bbb", "BBB", "aabbb", "abbbA", "aaaa"})
    CHECK(wp(parse_word(t, f2)));
  for (const char* t : {"a", "b", "ab", "bb", "abab", "aab", "ababab"})
    CHECK(!wp(parse_word(t, f2)));

  // order 0 marks an infinite factor
  WpOracle wp_inf = wp_free_product_cyclic({0, 0});
  WpOracle wf = wp_free(2);
  std::mt19937_64 rng(102);
  for (int i = 0; i < 200; ++i) {
    Word w = random_word(rng, 2, rng() % 8);
    CHECK(wp_inf(w) == wf(w));
  }
}

TEST_CASE("abelianization oracle counts signed letters") {
  WpOracle wp = wp_abelianization(2);
  Alphabet f2(2);
  CHECK(wp(parse_word("abAB", f2)));
  CHECK(wp(parse_word("aBAb", f2)));
  CHECK(!wp(parse_word("aab", f2)));
  std::mt19937_64 rng(103);
  for (int i = 0; i < 300; ++i) {
    Word w = random_word(rng, 2, rng() % 10);
    int64_t ca = 0, cb = 0;
    for (Letter l : w.letters) (l.gen == 0 ? ca : cb) += l.sign;
    CHECK(wp(w) == (ca == 0 && cb == 0));
  }
}

TEST_CASE("heisenberg oracle") {
  WpOracle wp = wp_heisenberg();
  Alphabet f2(2);
  Word x = parse_word("a", f2);
  Word y = parse_word("b", f2);
  Word c = commutator(x, y);
  CHECK(!wp(c));                   // the commutator is central, not trivial
  CHECK(wp(commutator(c, x)));
  CHECK(wp(commutator(c, y)));
  CHECK(!wp(parse_word("aabbbAABBB", f2)));  // x^2 y^3 x^-2 y^-3 = z^6

  auto oracle = heisenberg_oracle();
  std::mt19937_64 rng(104);
  for (int i = 0; i < 400; ++i) {
    Word w = random_word(rng, 2, rng() % 9);
    CHECK(wp(w) == (evaluate_word(*oracle, w) == oracle->identity()));
  }
}

TEST_CASE("baumslag-solitar britton reduction") {
  Alphabet at(2, {"a", "t"});
  WpOracle bs12 = wp_bs(1, 2);
  CHECK(bs12(parse_word("TatAA", at)));   // t^-1 a t = a^2
  CHECK(bs12(parse_word("aaTAt", at)));
  CHECK(!bs12(parse_word("atAT", at)));   // not abelian
  CHECK(!bs12(parse_word("t", at)));
  CHECK(!bs12(parse_word("a", at)));

  WpOracle bs22 = wp_bs(2, 2);
  CHECK(bs22(parse_word("TaatAA", at)));
  CHECK(!bs22(parse_word("TatA", at)));   // odd power cannot pinch

  WpOracle bs2m2 = wp_bs(2, -2);
  CHECK(bs2m2(parse_word("Taataa", at)));  // t^-1 a^2 t = a^-2
  CHECK(!bs2m2(parse_word("TaatAA", at)));
}

TEST_CASE("affine model agrees with britton on bs(1,2)") {
  WpOracle britton = wp_bs(1, 2);
  WpOracle affine = wp_bs12_affine();
  std::mt19937_64 rng(105);
  for (int i = 0; i < 500; ++i) {
    Word w = random_word(rng, 2, rng() % 9);
    CHECK(britton(w) == affine(w));
  }
}

TEST_CASE("presentation oracle covers free products of cyclics") {
  Presentation free2 = parse_presentation("a,b |");
  auto o1 = oracle_for_presentation(free2);
  REQUIRE(o1.has_value());
  Alphabet f2(2);
  CHECK(!(*o1)(parse_word("ab", f2)));
  CHECK((*o1)(parse_word("abBA", f2)));

  Presentation a2b3 = parse_presentation("a,b | aa, bbb");
  auto o2 = oracle_for_presentation(a2b3);
  REQUIRE(o2.has_value());
  WpOracle ref = wp_free_product_cyclic({2, 3});
  std::mt19937_64 rng(106);
  for (int i = 0; i < 200; ++i) {
    Word w = random_word(rng, 2, rng() % 8);
    CHECK((*o2)(w) == ref(w));
  }

  Presentation surface = parse_presentation("a,b | abAB");
  CHECK(!oracle_for_presentation(surface).has_value());
}

TEST_CASE("brute subset sum finds fewest-block witnesses first") {
  WpOracle wp = wp_free(2);
  Alphabet f2(2);
  std::vector<Word> gens = {parse_word("ab", f2), parse_word("a", f2),
                            parse_word("b", f2)};
  Word target = parse_word("ab", f2);
  BruteResult r = brute_ssp(wp, gens, target);
  CHECK(r.decision == Decision::Yes);
  REQUIRE(r.exponents.size() == 3);
  CHECK(r.exponents == std::vector<int64_t>{1, 0, 0});
  CHECK(free_reduce(concat(product_of(gens, r.exponents), invert(target))).empty());

  BruteResult opt = brute_ssop(wp, gens, target);
  CHECK(opt.decision == Decision::Yes);
  REQUIRE(opt.cost.has_value());
  CHECK(*opt.cost == 1);

  BruteResult neg = brute_ssp(wp, gens, parse_word("bbbb", f2));
  CHECK(neg.decision == Decision::No);
  CHECK(!neg.cap_exceeded);
}

TEST_CASE("brute bounded knapsack respects the exponent box") {
  WpOracle wp = wp_free(1);
  Alphabet f1(1);
  std::vector<Word> gens = {parse_word("a", f1)};
  Word target = parse_word("aaa", f1);
  BruteResult r3 = brute_bkp(wp, gens, target, 3);
  CHECK(r3.decision == Decision::Yes);
  CHECK(r3.exponents == std::vector<int64_t>{3});
  BruteResult r2 = brute_bkp(wp, gens, target, 2);
  CHECK(r2.decision == Decision::No);
}

TEST_CASE("brute bounded submonoid membership") {
  WpOracle wp = wp_free(2);
  Alphabet f2(2);
  std::vector<Word> gens = {parse_word("a", f2), parse_word("b", f2)};
  Word target = parse_word("ab", f2);
  BruteResult r = brute_bsmp(wp, gens, target, 2);
  CHECK(r.decision == Decision::Yes);
  CHECK(r.factors == std::vector<uint32_t>{0, 1});
  BruteResult r1 = brute_bsmp(wp, gens, target, 1);
  CHECK(r1.decision == Decision::No);
  // factor order matters: ba != ab in a free group
  BruteResult swapped = brute_bsmp(wp, {parse_word("b", f2), parse_word("a", f2)},
                                   target, 2);
  CHECK(swapped.decision == Decision::Yes);
  CHECK(swapped.factors == std::vector<uint32_t>{1, 0});
}

TEST_CASE("generic and free knapsack enumerations agree") {
  WpOracle wp = wp_free(2);
  std::mt19937_64 rng(107);
  for (int i = 0; i < 60; ++i) {
    size_t k = 1 + rng() % 2;
    std::vector<Word> gens;
    for (size_t j = 0; j < k; ++j)
      gens.push_back(random_word(rng, 2, 1 + rng() % 2));
    Word target = random_word(rng, 2, rng() % 4);
    BruteResult a = brute_kp(wp, gens, target, 6);
    BruteResult b = brute_kp_free(gens, target, 6);
    REQUIRE(!a.cap_exceeded);
    REQUIRE(!b.cap_exceeded);
    CHECK(a.decision == b.decision);
    if (b.decision == Decision::Yes) {
      REQUIRE(b.exponents.size() == k);
      CHECK(free_reduce(concat(product_of(gens, b.exponents), invert(target)))
                .empty());
    }
  }
}

TEST_CASE("prefix-tail minimizations over a free group") {
  Alphabet f2(2);
  std::vector<Word> gens = {parse_word("aa", f2)};
  Word target = parse_word("aaa", f2);

  BruteResult k1 = brute_kop1_free(gens, target, 1);
  CHECK(k1.decision == Decision::Yes);
  REQUIRE(k1.cost.has_value());
  CHECK(*k1.cost == 1);
  CHECK(k1.exponents == std::vector<int64_t>{1});

  BruteResult k1_wide = brute_kop1_free({parse_word("a", f2)}, target, 3);
  REQUIRE(k1_wide.cost.has_value());
  CHECK(*k1_wide.cost == 0);
  CHECK(k1_wide.exponents == std::vector<int64_t>{3});

  std::vector<Word> gp = {parse_word("ab", f2)};
  Word t2 = parse_word("abab", f2);
  BruteResult k2 = brute_kop2_free(gp, t2, 1);
  CHECK(k2.decision == Decision::Yes);
  REQUIRE(k2.cost.has_value());
  CHECK(*k2.cost == 2);
  REQUIRE(!k2.factors.empty());
  CHECK(k2.factors[0] == 2);  // matched prefix length
  BruteResult k2_wide = brute_kop2_free(gp, t2, 2);
  REQUIRE(k2_wide.cost.has_value());
  CHECK(*k2_wide.cost == 0);
  CHECK(k2_wide.factors[0] == 4);
}

TEST_CASE("node caps surface instead of wrong answers") {
  WpOracle wp = wp_free(2);
  Alphabet f2(2);
  std::vector<Word> gens = {parse_word("a", f2), parse_word("a", f2),
                            parse_word("a", f2)};
  Word target = parse_word("b", f2);
  BruteResult r = brute_ssp(wp, gens, target, 2);
  CHECK(r.cap_exceeded);
  CHECK(r.decision == Decision::Unknown);
  BruteResult full = brute_ssp(wp, gens, target);
  CHECK(full.decision == Decision::No);
  CHECK(!full.cap_exceeded);
}

}  // TEST_SUITE
