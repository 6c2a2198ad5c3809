/* wp_oracles.cpp -- exact word problem deciders for the benchmark groups */

#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "gknap/oracles.hpp"

namespace gknap {

WpOracle wp_free(uint32_t rank) {
  return [rank](const Word& w) {
    if (w.alphabet_size != rank)
      throw std::invalid_argument("word rank does not match free rank");
    return free_reduce(w).empty();
  };
}

WpOracle wp_free_product_cyclic(std::vector<uint64_t> orders) {
  return [orders = std::move(orders)](const Word& w) {
    if (w.alphabet_size != orders.size())
      throw std::invalid_argument("word rank does not match order list");
    std::vector<std::pair<uint32_t, int64_t>> syll;  // (gen, exponent)
    for (const Letter& l : w.letters) {
      if (!syll.empty() && syll.back().first == l.gen) {
        syll.back().second += l.sign;
      } else {
        syll.emplace_back(l.gen, l.sign);
      }
      uint64_t o = orders[syll.back().first];
      if (o > 0) syll.back().second %= static_cast<int64_t>(o);
      if (syll.back().second == 0) syll.pop_back();
    }
    return syll.empty();
  };
}

WpOracle wp_bs(int64_t m, int64_t n) {
  if (m == 0 || n == 0) throw std::invalid_argument("BS parameters must be nonzero");
  return [m, n](const Word& w) {
    if (w.alphabet_size != 2)
      throw std::invalid_argument("BS words use the two-letter alphabet a, t");
    // Alternating form a^{x0} t^{e1} a^{x1} ...; Britton: a pinch
    // t^-1 a^{km} t -> a^{kn} or t a^{kn} t^-1 -> a^{km} whenever the
    // divisibility holds.
    BigInt head = 0;
    std::vector<std::pair<int, BigInt>> stack;  // (t sign, a-exponent after it)
    auto top_exp = [&]() -> BigInt& { return stack.empty() ? head : stack.back().second; };
    for (const Letter& l : w.letters) {
      if (l.gen == 0) {
        top_exp() += l.sign;
        continue;
      }
      int eps = l.sign;
      if (!stack.empty() && stack.back().first == -eps) {
        const BigInt& x = stack.back().second;
        // pattern t^{-eps} a^x t^{eps}
        BigInt from = (eps > 0) ? m : n;
        BigInt to = (eps > 0) ? n : m;
        if (x % from == 0) {
          BigInt converted = (x / from) * to;
          stack.pop_back();
          top_exp() += converted;
          continue;
        }
      }
      stack.emplace_back(eps, BigInt(0));
    }
    return stack.empty() && head == 0;
  };
}

WpOracle wp_bs12_affine() {
  return [](const Word& w) {
    if (w.alphabet_size != 2)
      throw std::invalid_argument("BS words use the two-letter alphabet a, t");
    // Maps x -> 2^p x + q with q = qnum / 2^qscale, composed so that the
    // first letter acts last.
    int64_t p = 0;
    BigInt qnum = 0;
    int64_t qscale = 0;
    for (const Letter& l : w.letters) {
      if (l.gen == 0) {
        // F(x + r) adds 2^p r to q
        int64_t shift = p + qscale;
        if (shift < 0) {
          qnum <<= (-p) - qscale;
          qscale = -p;
          shift = 0;
        }
        qnum += l.sign > 0 ? (BigInt(1) << shift) : -(BigInt(1) << shift);
      } else {
        p += l.sign > 0 ? -1 : +1;  // t halves, so F(t x) loses a power
      }
    }
    return p == 0 && qnum == 0;
  };
}

WpOracle wp_abelianization(uint32_t rank) {
  return [rank](const Word& w) {
    if (w.alphabet_size != rank)
      throw std::invalid_argument("word rank does not match abelianization rank");
    std::vector<int64_t> sums(rank, 0);
    for (const Letter& l : w.letters) sums[l.gen] += l.sign;
    for (int64_t s : sums)
      if (s != 0) return false;
    return true;
  };
}

WpOracle wp_heisenberg() {
  return [](const Word& w) {
    if (w.alphabet_size != 2)
      throw std::invalid_argument("Heisenberg words use two generators");
    int64_t a = 0, b = 0, c = 0;
    for (const Letter& l : w.letters) {
      if (l.gen == 0) {
        a += l.sign;
      } else if (l.sign > 0) {
        c += a;
        b += 1;
      } else {
        c -= a;
        b -= 1;
      }
    }
    return a == 0 && b == 0 && c == 0;
  };
}

std::optional<WpOracle> oracle_for_presentation(const Presentation& p) {
  if (p.is_free()) return wp_free(p.alphabet.size);
  std::vector<uint64_t> orders(p.alphabet.size, 0);
  for (const Word& r : p.relators) {
    Word core = cyclic_reduce(r).core;
    uint32_t gen = core.letters.front().gen;
    for (const Letter& l : core.letters)
      if (l.gen != gen) return std::nullopt;  // mixed relator, not recognized
    int64_t exp = 0;
    for (const Letter& l : core.letters) exp += l.sign;
    uint64_t o = static_cast<uint64_t>(std::abs(exp));
    if (o == 0) return std::nullopt;  // e.g. a A a, reduced away oddly
    orders[gen] = orders[gen] == 0 ? o : std::gcd(orders[gen], o);
  }
  return wp_free_product_cyclic(std::move(orders));
}

}  // namespace gknap
