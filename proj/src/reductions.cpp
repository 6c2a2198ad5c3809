/* reductions.cpp -- instance transformations and their witness mappings */

#include "gknap/reductions.hpp"

#include <sstream>
#include <stdexcept>

namespace gknap {

std::vector<Word> bkp_to_ssp(const std::vector<Word>& gens, uint64_t m) {
  std::vector<Word> out;
  out.reserve(gens.size() * m);
  for (const Word& w : gens)
    for (uint64_t c = 0; c < m; ++c) out.push_back(w);
  return out;
}

std::vector<int64_t> bkp_exponents_from_ssp(const std::vector<int64_t>& ssp_exps,
                                            size_t k, uint64_t m) {
  if (ssp_exps.size() != k * m) throw std::invalid_argument("block shape mismatch");
  std::vector<int64_t> out(k, 0);
  for (size_t i = 0; i < k; ++i)
    for (uint64_t c = 0; c < m; ++c) out[i] += ssp_exps[i * m + c];
  return out;
}

std::vector<Word> bsmp_to_ssop(const std::vector<Word>& gens, uint64_t m) {
  std::vector<Word> out;
  out.reserve(gens.size() * m);
  for (uint64_t b = 0; b < m; ++b)
    for (const Word& w : gens) out.push_back(w);
  return out;
}

std::vector<uint32_t> bsmp_factors_from_ssop(const std::vector<int64_t>& ssp_exps,
                                             size_t k) {
  std::vector<uint32_t> out;
  for (size_t j = 0; j < ssp_exps.size(); ++j)
    if (ssp_exps[j]) out.push_back(static_cast<uint32_t>(j % k));
  return out;
}

std::vector<Word> ikp_to_kp(const std::vector<Word>& gens) {
  std::vector<Word> out;
  out.reserve(gens.size() * 2);
  for (const Word& w : gens) {
    out.push_back(w);
    out.push_back(invert(w));
  }
  return out;
}

std::vector<int64_t> ikp_exponents_from_kp(const std::vector<int64_t>& kp_exps) {
  if (kp_exps.size() % 2 != 0) throw std::invalid_argument("odd exponent list");
  std::vector<int64_t> out(kp_exps.size() / 2);
  for (size_t i = 0; i < out.size(); ++i)
    out[i] = kp_exps[2 * i] - kp_exps[2 * i + 1];
  return out;
}

std::optional<std::vector<int64_t>> search_from_decision(
    const std::function<Decision(const std::vector<Word>&, const Word&)>& decide,
    std::vector<Word> gens, Word target) {
  // One positivity check, then one call per generator.  The greedy is
  // only valid on positive instances, so negatives stop at call one.
  Decision first = decide(gens, target);
  if (first != Decision::Yes) return std::nullopt;
  std::vector<int64_t> eps;
  eps.reserve(gens.size());
  while (!gens.empty()) {
    std::vector<Word> tail(gens.begin() + 1, gens.end());
    Decision without = decide(tail, target);
    if (without == Decision::Yes) {
      eps.push_back(0);
    } else if (without == Decision::No) {
      // the remaining instance is positive, so w_1 must be taken
      eps.push_back(1);
      target = concat(invert(gens.front()), target);
    } else {
      return std::nullopt;
    }
    gens = std::move(tail);
  }
  return eps;
}

ZoeInstance parse_zoe(const std::string& text) {
  std::istringstream in(text);
  ZoeInstance z;
  if (!(in >> z.n) || z.n == 0) throw std::invalid_argument("bad ZOE header");
  z.matrix.assign(z.n, std::vector<int>(z.n, 0));
  for (uint32_t i = 0; i < z.n; ++i)
    for (uint32_t j = 0; j < z.n; ++j) {
      int v;
      if (!(in >> v) || (v != 0 && v != 1))
        throw std::invalid_argument("ZOE entries must be 0 or 1");
      z.matrix[i][j] = v;
    }
  return z;
}

void ZOmegaElement::add(uint32_t i, int64_t delta) {
  if (delta == 0) return;
  auto it = coords.find(i);
  if (it == coords.end()) {
    coords.emplace(i, delta);
  } else {
    it->second += delta;
    if (it->second == 0) coords.erase(it);
  }
}

ZOmegaElement zomega_sum(const ZOmegaElement& a, const ZOmegaElement& b) {
  ZOmegaElement out = a;
  for (auto [i, v] : b.coords) out.add(i, v);
  return out;
}

std::pair<std::vector<ZOmegaElement>, ZOmegaElement> zoe_to_ssp(
    const ZoeInstance& z) {
  std::vector<ZOmegaElement> gens(z.n);
  for (uint32_t i = 0; i < z.n; ++i)
    for (uint32_t j = 0; j < z.n; ++j)
      if (z.matrix[i][j]) gens[i].add(j, 1);
  ZOmegaElement target;
  for (uint32_t j = 0; j < z.n; ++j) target.add(j, 1);
  return {std::move(gens), std::move(target)};
}

BruteResult zomega_brute_ssp(const std::vector<ZOmegaElement>& gens,
                             const ZOmegaElement& target) {
  BruteResult res;
  size_t k = gens.size();
  if (k >= 30) {
    res.cap_exceeded = true;
    return res;
  }
  for (uint64_t mask = 0; mask < (uint64_t(1) << k); ++mask) {
    ZOmegaElement sum;
    for (size_t i = 0; i < k; ++i)
      if ((mask >> i) & 1) sum = zomega_sum(sum, gens[i]);
    if (sum == target) {
      res.decision = Decision::Yes;
      res.exponents.assign(k, 0);
      for (size_t i = 0; i < k; ++i) res.exponents[i] = (mask >> i) & 1;
      return res;
    }
  }
  res.decision = Decision::No;
  return res;
}

BruteResult zoe_bruteforce(const ZoeInstance& z) {
  // directly: does some subset of rows sum to the all-ones vector
  BruteResult res;
  if (z.n >= 30) {
    res.cap_exceeded = true;
    return res;
  }
  for (uint64_t mask = 0; mask < (uint64_t(1) << z.n); ++mask) {
    bool ok = true;
    for (uint32_t j = 0; j < z.n && ok; ++j) {
      int sum = 0;
      for (uint32_t i = 0; i < z.n; ++i)
        if ((mask >> i) & 1) sum += z.matrix[i][j];
      ok = sum == 1;
    }
    if (ok) {
      res.decision = Decision::Yes;
      res.exponents.assign(z.n, 0);
      for (uint32_t i = 0; i < z.n; ++i) res.exponents[i] = (mask >> i) & 1;
      return res;
    }
  }
  res.decision = Decision::No;
  return res;
}

std::string encode_basis(uint32_t i, int sign) {
  std::string out = sign > 0 ? "0101" : "0100";
  for (uint32_t j = 0; j < i; ++j) out += "00";
  out += "11";
  return out;
}

std::pair<uint32_t, int> decode_basis(const std::string& bits) {
  if (bits.size() < 6 || bits.substr(0, 3) != "010")
    throw std::invalid_argument("bad basis code");
  if (bits[3] != '0' && bits[3] != '1')
    throw std::invalid_argument("bad basis code");
  int sign = bits[3] == '1' ? +1 : -1;
  if (bits.size() % 2 != 0 || bits.substr(bits.size() - 2) != "11")
    throw std::invalid_argument("bad basis code");
  std::string mid = bits.substr(4, bits.size() - 6);
  if (mid.size() % 2 != 0) throw std::invalid_argument("bad basis code");
  for (size_t j = 0; j < mid.size(); ++j)
    if (mid[j] != '0') throw std::invalid_argument("bad basis code");
  return {static_cast<uint32_t>(mid.size() / 2), sign};
}

std::pair<std::vector<Word>, Word> binary_ssp_to_bs12(
    const std::vector<uint64_t>& numbers, uint64_t target) {
  auto number_word = [&](uint64_t v) {
    Word w{2, {}};
    for (uint32_t bit = 0; bit < 64; ++bit) {
      if (!((v >> bit) & 1)) continue;
      // t^-bit a t^bit
      for (uint32_t j = 0; j < bit; ++j) w.letters.emplace_back(1, -1);
      w.letters.emplace_back(0, +1);
      for (uint32_t j = 0; j < bit; ++j) w.letters.emplace_back(1, +1);
    }
    return w;
  };
  std::vector<Word> gens;
  gens.reserve(numbers.size());
  for (uint64_t v : numbers) gens.push_back(number_word(v));
  return {std::move(gens), number_word(target)};
}

}  // namespace gknap
