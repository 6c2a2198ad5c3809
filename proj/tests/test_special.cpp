/* test_special.cpp -- nilpotent ball solvers and Baumslag-Solitar saturation */

#include <set>
#include <random>
#include <vector>

#include "doctest.h"
#include "gknap/baumslag_solitar.hpp"
#include "gknap/group_oracle.hpp"
#include "gknap/nilpotent.hpp"
#include "gknap/oracles.hpp"
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

Word subset_product(std::mt19937_64& rng, const std::vector<Word>& gens) {
  Word p(gens.empty() ? 2 : gens[0].alphabet_size);
  for (const Word& g : gens)
    if (rng() % 2) p = concat(p, g);
  return p;
}

GroupOracle::Elem selection_value(const GroupOracle& o,
                                  const std::vector<Word>& gens,
                                  const std::vector<int64_t>& exps) {
  Word p(gens.empty() ? o.rank() : gens[0].alphabet_size);
  for (size_t i = 0; i < gens.size(); ++i)
    if (exps[i]) p = concat(p, gens[i]);
  return evaluate_word(o, p);
}

// all words of length <= n, including the empty one
std::vector<Word> words_up_to(uint32_t rank, size_t n) {
  std::vector<Word> out{Word(rank)};
  size_t begin = 0;
  for (size_t len = 1; len <= n; ++len) {
    size_t end = out.size();
    for (size_t i = begin; i < end; ++i)
      for (uint32_t g = 0; g < rank; ++g)
        for (int8_t s : {int8_t{1}, int8_t{-1}}) {
          Word w = out[i];
          w.letters.push_back(Letter{g, s});
          out.push_back(std::move(w));
        }
    begin = end;
  }
  return out;
}

// smallest factor budget the brute search accepts, scanned upward
std::optional<uint64_t> min_factor_count(const WpOracle& wp,
                                         const std::vector<Word>& gens,
                                         const Word& target, uint64_t m) {
  for (uint64_t c = 0; c <= m; ++c)
    if (brute_bsmp(wp, gens, target, c).decision == Decision::Yes) return c;
  return std::nullopt;
}

}  // namespace

TEST_SUITE("special") {

TEST_CASE("free abelian balls grow quadratically") {
  auto oracle = free_abelian_oracle(2);
  Alphabet ab(2);
  for (uint32_t n = 0; n <= 20; ++n) {
    Ball ball = build_ball(*oracle, ab, n);
    CHECK(ball.radius == n);
    CHECK(ball.elems.size() == 2ull * n * n + 2ull * n + 1);
    CHECK(ball.index.size() == ball.elems.size());
  }
}

TEST_CASE("ball witnesses are geodesics") {
  auto oracle = free_abelian_oracle(2);
  Ball ball = build_ball(*oracle, Alphabet(2), 6);
  for (size_t i = 0; i < ball.elems.size(); ++i) {
    CHECK(evaluate_word(*oracle, ball.witness[i]) == ball.elems[i]);
    // the taxicab norm is the exact word length in Z^2
    CHECK(ball.witness[i].letters.size() ==
          oracle->length_lower_bound(ball.elems[i]));
    CHECK(ball.find(ball.elems[i]) == static_cast<int64_t>(i));
  }
  GroupOracle::Elem far{7, 0};
  CHECK(ball.find(far) == -1);
}

TEST_CASE("heisenberg ball matches word enumeration") {
  auto oracle = heisenberg_oracle();
  Ball ball = build_ball(*oracle, Alphabet(2), 3);
  std::set<GroupOracle::Elem> seen;
  for (const Word& w : words_up_to(2, 3))
    seen.insert(evaluate_word(*oracle, w));
  std::set<GroupOracle::Elem> listed(ball.elems.begin(), ball.elems.end());
  CHECK(listed == seen);
  CHECK(listed.size() == ball.elems.size());  // no duplicates
  for (size_t i = 0; i < ball.elems.size(); ++i) {
    CHECK(ball.witness[i].letters.size() <= 3);
    CHECK(oracle->length_lower_bound(ball.elems[i]) <=
          ball.witness[i].letters.size());
  }
}

TEST_CASE("heisenberg subset sum agrees with brute force") {
  auto oracle = heisenberg_oracle();
  WpOracle wp = wp_heisenberg();
  Alphabet ab(2);
  std::mt19937_64 rng(301);
  int yes_count = 0, no_count = 0;
  for (int i = 0; i < 120; ++i) {
    std::vector<Word> gens;
    size_t k = 1 + rng() % 5;
    for (size_t j = 0; j < k; ++j)
      gens.push_back(random_word(rng, 2, 1 + rng() % 3));
    Word target =
        i % 2 ? random_word(rng, 2, rng() % 5) : subset_product(rng, gens);

    SolverReport rep = nilpotent_ssp(*oracle, ab, gens, target);
    BruteResult ref = brute_ssp(wp, gens, target);
    REQUIRE(ref.decision != Decision::Unknown);
    CHECK(rep.decision == ref.decision);
    if (rep.decision == Decision::Yes) {
      ++yes_count;
      CHECK(rep.verified);
      REQUIRE(rep.witness.has_value());
      const auto& e = rep.witness->exponents;
      REQUIRE(e.size() == gens.size());
      for (int64_t v : e) CHECK((v == 0 || v == 1));
      CHECK(selection_value(*oracle, gens, e) == evaluate_word(*oracle, target));
      BruteResult opt = brute_ssop(wp, gens, target);
      REQUIRE(rep.cost.has_value());
      REQUIRE(opt.cost.has_value());
      CHECK(*rep.cost == *opt.cost);
    } else {
      ++no_count;
    }
  }
  CHECK(yes_count > 10);
  CHECK(no_count > 10);
}

TEST_CASE("free abelian subset sum agrees with brute force") {
  auto oracle = free_abelian_oracle(3);
  WpOracle wp = wp_abelianization(3);
  Alphabet ab(3);
  std::mt19937_64 rng(302);
  for (int i = 0; i < 80; ++i) {
    std::vector<Word> gens;
    size_t k = 1 + rng() % 4;
    for (size_t j = 0; j < k; ++j)
      gens.push_back(random_word(rng, 3, 1 + rng() % 3));
    Word target =
        i % 2 ? random_word(rng, 3, rng() % 4) : subset_product(rng, gens);
    SolverReport rep = nilpotent_ssp(*oracle, ab, gens, target);
    BruteResult ref = brute_ssp(wp, gens, target);
    CHECK(rep.decision == ref.decision);
  }
}

TEST_CASE("selection cost is the minimal taken count") {
  auto oracle = heisenberg_oracle();
  Alphabet ab(2);
  Word x = parse_word("a", ab);
  Word y = parse_word("b", ab);
  Word xy = parse_word("ab", ab);

  SolverReport rep = nilpotent_ssp(*oracle, ab, {x, y, xy}, xy);
  REQUIRE(rep.decision == Decision::Yes);
  REQUIRE(rep.cost.has_value());
  CHECK(*rep.cost == 1);
  CHECK(rep.witness->exponents == std::vector<int64_t>{0, 0, 1});

  // pruning: the target sits outside any reachable ball
  SolverReport no = nilpotent_ssp(*oracle, ab, {x}, parse_word("aaaaa", ab));
  CHECK(no.decision == Decision::No);
}

TEST_CASE("bounded membership respects the factor budget") {
  auto oracle = heisenberg_oracle();
  WpOracle wp = wp_heisenberg();
  Alphabet ab(2);
  Word x = parse_word("a", ab);
  Word y = parse_word("b", ab);
  Word xy = parse_word("ab", ab);

  // two factors are needed, so the budget of one must reject
  SolverReport one = nilpotent_bsmp(*oracle, ab, {x, y}, xy, 1);
  CHECK(one.decision == Decision::No);
  SolverReport two = nilpotent_bsmp(*oracle, ab, {x, y}, xy, 2);
  REQUIRE(two.decision == Decision::Yes);
  CHECK(two.witness->factors == std::vector<uint32_t>{0, 1});
  CHECK(*two.cost == 2);

  std::mt19937_64 rng(303);
  for (int i = 0; i < 80; ++i) {
    std::vector<Word> gens;
    size_t k = 1 + rng() % 3;
    for (size_t j = 0; j < k; ++j)
      gens.push_back(random_word(rng, 2, 1 + rng() % 2));
    Word target = random_word(rng, 2, rng() % 4);
    uint64_t m = 1 + rng() % 4;

    SolverReport rep = nilpotent_bsmp(*oracle, ab, gens, target, m);
    BruteResult ref = brute_bsmp(wp, gens, target, m);
    REQUIRE(!ref.cap_exceeded);
    CHECK(rep.decision == ref.decision);
    if (rep.decision == Decision::Yes) {
      REQUIRE(rep.witness.has_value());
      const auto& f = rep.witness->factors;
      CHECK(f.size() <= m);
      Word prod(2);
      for (uint32_t idx : f) {
        REQUIRE(idx < gens.size());
        prod = concat(prod, gens[idx]);
      }
      CHECK(evaluate_word(*oracle, prod) == evaluate_word(*oracle, target));
      auto best = min_factor_count(wp, gens, target, m);
      REQUIRE(best.has_value());
      CHECK(*rep.cost == BigInt(*best));
    }
  }
}

TEST_CASE("bs subset sum agrees with britton reduction") {
  Alphabet ab(2, {"a", "t"});
  std::mt19937_64 rng(304);
  int yes_count = 0;
  for (uint32_t n : {1u, 2u, 3u}) {
    for (int sign : {1, -1}) {
      WpOracle wp = wp_bs(n, sign * static_cast<int64_t>(n));
      for (int i = 0; i < 50; ++i) {
        std::vector<Word> gens;
        size_t k = 1 + rng() % 3;
        for (size_t j = 0; j < k; ++j)
          gens.push_back(random_word(rng, 2, 1 + rng() % 4));
        Word target =
            i % 2 ? random_word(rng, 2, rng() % 5) : subset_product(rng, gens);

        SolverReport rep = bs_ssp({n, sign}, gens, target);
        BruteResult ref = brute_ssp(wp, gens, target);
        CHECK(rep.decision == ref.decision);
        if (rep.decision == Decision::Yes) {
          ++yes_count;
          CHECK(rep.verified);
          const auto& e = rep.witness->exponents;
          Word prod(2);
          for (size_t j = 0; j < gens.size(); ++j) {
            CHECK((e[j] == 0 || e[j] == 1));
            if (e[j]) prod = concat(prod, gens[j]);
          }
          CHECK(wp(concat(prod, invert(target))));
        }
      }
    }
  }
  CHECK(yes_count > 30);
}

TEST_CASE("power conjugation sign matters") {
  Alphabet ab(2, {"a", "t"});
  std::vector<Word> gens = {parse_word("Taat", ab)};  // t^-1 a^2 t
  Word target = parse_word("AA", ab);
  SolverReport flip = bs_ssp({2, -1}, gens, target);
  CHECK(flip.decision == Decision::Yes);
  CHECK(flip.verified);
  SolverReport keep = bs_ssp({2, 1}, gens, target);
  CHECK(keep.decision == Decision::No);
  // with the plus sign the conjugate equals a^2 instead
  SolverReport plus = bs_ssp({2, 1}, gens, parse_word("aa", ab));
  CHECK(plus.decision == Decision::Yes);
}

TEST_CASE("empty targets accept with the empty selection") {
  auto oracle = heisenberg_oracle();
  Alphabet ab(2);
  Word empty(2);
  SolverReport nil = nilpotent_ssp(*oracle, ab, {parse_word("ab", ab)}, empty);
  REQUIRE(nil.decision == Decision::Yes);
  CHECK(*nil.cost == 0);
  CHECK(nil.witness->exponents == std::vector<int64_t>{0});

  Alphabet bsab(2, {"a", "t"});
  SolverReport bs = bs_ssp({1, 1}, {parse_word("at", bsab)}, Word(2));
  REQUIRE(bs.decision == Decision::Yes);
  CHECK(bs.witness->exponents == std::vector<int64_t>{0});
}

TEST_CASE("input validation rejects mismatched alphabets") {
  auto oracle = heisenberg_oracle();
  CHECK_THROWS_AS(
      nilpotent_ssp(*oracle, Alphabet(3), {Word(3)}, Word(3)),
      std::invalid_argument);
  CHECK_THROWS_AS(bs_ssp({1, 1}, {Word(3)}, Word(3)), std::invalid_argument);
  CHECK_THROWS_AS(bs_ssp({0, 1}, {Word(2)}, Word(2)), std::invalid_argument);
  CHECK_THROWS_AS(bs_ssp({1, 2}, {Word(2)}, Word(2)), std::invalid_argument);
}

}  // TEST_SUITE
