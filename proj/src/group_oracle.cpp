/* group_oracle.cpp -- free abelian and Heisenberg canonical forms */

#include "gknap/group_oracle.hpp"

#include <cstdlib>
#include <stdexcept>

namespace gknap {

namespace {

struct FreeAbelianOracle final : GroupOracle {
  uint32_t d;

  explicit FreeAbelianOracle(uint32_t dim) : d(dim) {}

  uint32_t rank() const override { return d; }
  Elem identity() const override { return Elem(d, 0); }

  Elem mul_letter(const Elem& e, Letter l) const override {
    if (l.gen >= d) throw std::invalid_argument("letter out of rank");
    Elem out = e;
    out[l.gen] += l.sign;
    return out;
  }

  uint64_t length_lower_bound(const Elem& e) const override {
    // L1 norm, which is the exact word metric here.
    uint64_t s = 0;
    for (int64_t c : e) s += static_cast<uint64_t>(c < 0 ? -c : c);
    return s;
  }
};

struct HeisenbergOracle final : GroupOracle {
  uint32_t rank() const override { return 2; }
  Elem identity() const override { return {0, 0, 0}; }

  Elem mul_letter(const Elem& e, Letter l) const override {
    if (l.gen >= 2) throw std::invalid_argument("letter out of rank");
    Elem out = e;
    if (l.gen == 0) {
      out[0] += l.sign;
    } else {
      out[1] += l.sign;
      out[2] += e[0] * l.sign;
    }
    return out;
  }

  uint64_t length_lower_bound(const Elem& e) const override {
    uint64_t base = static_cast<uint64_t>(std::llabs(e[0])) +
                    static_cast<uint64_t>(std::llabs(e[1]));
    // |z| grows at most quadratically with the word length: a length-L
    // word keeps |x| <= L, and each y step moves z by the current x.
    uint64_t zq = 4 * static_cast<uint64_t>(std::llabs(e[2]));
    uint64_t root = 0;
    while (root * root < zq) ++root;
    return base > root ? base : root;
  }
};

}  // namespace

std::unique_ptr<GroupOracle> free_abelian_oracle(uint32_t d) {
  if (d == 0) throw std::invalid_argument("rank must be positive");
  return std::make_unique<FreeAbelianOracle>(d);
}

std::unique_ptr<GroupOracle> heisenberg_oracle() {
  return std::make_unique<HeisenbergOracle>();
}

GroupOracle::Elem evaluate_word(const GroupOracle& o, const Word& w) {
  GroupOracle::Elem e = o.identity();
  for (const Letter& l : w.letters) e = o.mul_letter(e, l);
  return e;
}

}  // namespace gknap
