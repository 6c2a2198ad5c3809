/* brute.cpp -- enumeration reference solvers */

#include <stdexcept>

#include "gknap/oracles.hpp"

namespace gknap {

namespace {

Word product_of(const std::vector<Word>& gens, const std::vector<int64_t>& exps,
                uint32_t alphabet_size) {
  Word prod{alphabet_size, {}};
  for (size_t i = 0; i < gens.size(); ++i)
    for (int64_t e = 0; e < exps[i]; ++e) prod = concat(prod, gens[i]);
  return prod;
}

bool is_identity(const WpOracle& wp, const Word& prod, const Word& target) {
  return wp(concat(prod, invert(target)));
}

// Free-reduced stack with an undo journal, for incremental search.
struct RedStack {
  std::vector<Letter> st;
  struct Ev {
    bool cancelled;
    Letter letter;
  };
  std::vector<Ev> journal;

  void push(Letter l) {
    if (!st.empty() && st.back() == l.inverse()) {
      journal.push_back({true, st.back()});
      st.pop_back();
    } else {
      journal.push_back({false, l});
      st.push_back(l);
    }
  }
  void push_word(const Word& w) {
    for (const Letter& l : w.letters) push(l);
  }
  size_t mark() const { return journal.size(); }
  void rewind(size_t to) {
    while (journal.size() > to) {
      Ev e = journal.back();
      journal.pop_back();
      if (e.cancelled)
        st.push_back(e.letter);
      else
        st.pop_back();
    }
  }
};

}  // namespace

BruteResult brute_ssp(const WpOracle& wp, const std::vector<Word>& gens,
                      const Word& target, uint64_t max_nodes) {
  BruteResult res;
  size_t k = gens.size();
  if (k >= 62 || (uint64_t(1) << k) > max_nodes) {
    res.cap_exceeded = true;
    return res;
  }
  // masks in popcount order, so the first hit is also the cheapest
  for (size_t take = 0; take <= k; ++take) {
    for (uint64_t mask = 0; mask < (uint64_t(1) << k); ++mask) {
      if (static_cast<size_t>(__builtin_popcountll(mask)) != take) continue;
      std::vector<int64_t> exps(k, 0);
      for (size_t i = 0; i < k; ++i) exps[i] = (mask >> i) & 1;
      if (is_identity(wp, product_of(gens, exps, target.alphabet_size), target)) {
        res.decision = Decision::Yes;
        res.cost = BigInt(static_cast<int64_t>(take));
        res.exponents = std::move(exps);
        return res;
      }
    }
  }
  res.decision = Decision::No;
  return res;
}

BruteResult brute_ssop(const WpOracle& wp, const std::vector<Word>& gens,
                       const Word& target, uint64_t max_nodes) {
  BruteResult res;
  size_t k = gens.size();
  if (k >= 62 || (uint64_t(1) << k) > max_nodes) {
    res.cap_exceeded = true;
    return res;
  }
  res.decision = Decision::No;
  for (uint64_t mask = 0; mask < (uint64_t(1) << k); ++mask) {
    std::vector<int64_t> exps(k, 0);
    int64_t taken = 0;
    for (size_t i = 0; i < k; ++i) {
      exps[i] = (mask >> i) & 1;
      taken += exps[i];
    }
    if (res.decision == Decision::Yes && BigInt(taken) >= *res.cost) continue;
    if (is_identity(wp, product_of(gens, exps, target.alphabet_size), target)) {
      res.decision = Decision::Yes;
      res.cost = BigInt(taken);
      res.exponents = std::move(exps);
    }
  }
  return res;
}

BruteResult brute_bkp(const WpOracle& wp, const std::vector<Word>& gens,
                      const Word& target, uint64_t m, uint64_t max_nodes) {
  BruteResult res;
  size_t k = gens.size();
  double nodes = 1;
  for (size_t i = 0; i < k; ++i) nodes *= double(m + 1);
  if (nodes > double(max_nodes)) {
    res.cap_exceeded = true;
    return res;
  }
  std::vector<int64_t> exps(k, 0);
  while (true) {
    if (is_identity(wp, product_of(gens, exps, target.alphabet_size), target)) {
      res.decision = Decision::Yes;
      res.exponents = exps;
      return res;
    }
    size_t i = 0;
    while (i < k && exps[i] == int64_t(m)) exps[i++] = 0;
    if (i == k) break;
    ++exps[i];
  }
  res.decision = Decision::No;
  return res;
}

BruteResult brute_bsmp(const WpOracle& wp, const std::vector<Word>& gens,
                       const Word& target, uint64_t m, uint64_t max_nodes) {
  BruteResult res;
  uint64_t nodes = 0;
  std::vector<uint32_t> seq;
  Word prod{target.alphabet_size, {}};

  // depth-first over factor sequences of length <= m
  std::function<bool(const Word&)> rec = [&](const Word& cur) -> bool {
    if (++nodes > max_nodes) {
      res.cap_exceeded = true;
      return true;
    }
    if (is_identity(wp, cur, target)) {
      res.decision = Decision::Yes;
      res.factors = seq;
      return true;
    }
    if (seq.size() == m) return false;
    for (uint32_t i = 0; i < gens.size(); ++i) {
      seq.push_back(i);
      if (rec(concat(cur, gens[i]))) return true;
      seq.pop_back();
    }
    return false;
  };
  if (!rec(prod) && !res.cap_exceeded) res.decision = Decision::No;
  return res;
}

BruteResult brute_kp(const WpOracle& wp, const std::vector<Word>& gens,
                     const Word& target, uint64_t cap, uint64_t max_nodes) {
  return brute_bkp(wp, gens, target, cap, max_nodes);
}

BruteResult brute_kp_free(const std::vector<Word>& gens, const Word& target,
                          uint64_t cap, uint64_t max_nodes) {
  BruteResult res;
  Word tgt = free_reduce(target);
  RedStack stack;
  std::vector<int64_t> exps(gens.size(), 0);
  uint64_t nodes = 0;

  std::function<bool(size_t)> rec = [&](size_t i) -> bool {
    if (++nodes > max_nodes) {
      res.cap_exceeded = true;
      return true;
    }
    if (i == gens.size()) {
      if (stack.st.size() != tgt.size()) return false;
      for (size_t j = 0; j < tgt.size(); ++j)
        if (!(stack.st[j] == tgt.letters[j])) return false;
      res.decision = Decision::Yes;
      res.exponents = exps;
      return true;
    }
    size_t m = stack.mark();
    for (uint64_t e = 0; e <= cap; ++e) {
      if (e > 0) stack.push_word(gens[i]);
      exps[i] = int64_t(e);
      if (rec(i + 1)) return true;
    }
    exps[i] = 0;
    stack.rewind(m);
    return false;
  };
  if (!rec(0) && !res.cap_exceeded) res.decision = Decision::No;
  return res;
}

namespace {

// All exponent vectors in [0, cap]^k, mixed radix.  Throws rather than
// silently truncating an oversized search space.
std::vector<std::vector<int64_t>> exponent_grid(size_t k, uint64_t cap) {
  uint64_t total = 1;
  for (size_t i = 0; i < k; ++i) {
    if (total > (uint64_t(1) << 24) / (cap + 1))
      throw std::invalid_argument("exponent grid too large");
    total *= cap + 1;
  }
  std::vector<std::vector<int64_t>> grid;
  grid.reserve(total);
  std::vector<int64_t> cur(k, 0);
  for (uint64_t v = 0; v < total; ++v) {
    uint64_t rest = v;
    for (size_t i = 0; i < k; ++i) {
      cur[i] = static_cast<int64_t>(rest % (cap + 1));
      rest /= cap + 1;
    }
    grid.push_back(cur);
  }
  return grid;
}

}  // namespace

BruteResult brute_kop1_free(const std::vector<Word>& gens, const Word& target,
                            uint64_t cap) {
  BruteResult res;
  res.decision = Decision::Yes;
  for (const auto& exps : exponent_grid(gens.size(), cap)) {
    Word prod{target.alphabet_size, {}};
    for (size_t i = 0; i < gens.size(); ++i)
      for (int64_t j = 0; j < exps[i]; ++j) prod = concat(prod, gens[i]);
    Word rest = free_reduce(concat(invert(prod), target));
    if (!res.cost || BigInt(rest.size()) < *res.cost) {
      res.cost = BigInt(rest.size());
      res.exponents = exps;
    }
  }
  return res;
}

BruteResult brute_kop2_free(const std::vector<Word>& gens, const Word& target,
                            uint64_t cap) {
  BruteResult res;
  Word tgt = free_reduce(target);
  for (const auto& exps : exponent_grid(gens.size(), cap)) {
    Word prod{target.alphabet_size, {}};
    for (size_t i = 0; i < gens.size(); ++i)
      for (int64_t j = 0; j < exps[i]; ++j) prod = concat(prod, gens[i]);
    Word v = free_reduce(prod);
    if (v.size() > tgt.size()) continue;
    bool prefix = true;
    for (size_t j = 0; j < v.size() && prefix; ++j)
      prefix = v.letters[j] == tgt.letters[j];
    if (!prefix) continue;
    BigInt cand = BigInt(tgt.size() - v.size());
    if (!res.cost || cand < *res.cost) {
      res.decision = Decision::Yes;
      res.cost = cand;
      res.exponents = exps;
      res.factors = {static_cast<uint32_t>(v.size())};
    }
  }
  return res;
}

}  // namespace gknap
