/* presentation.cpp -- relator symmetrization and presentation parsing */

#include "gknap/presentation.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace gknap {

namespace {

std::vector<Letter> shift_of(const std::vector<Letter>& v, size_t k) {
  std::vector<Letter> out;
  out.reserve(v.size());
  for (size_t i = 0; i < v.size(); ++i) out.push_back(v[(i + k) % v.size()]);
  return out;
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> parts;
  size_t start = 0;
  while (true) {
    size_t comma = s.find(',', start);
    if (comma == std::string::npos) {
      parts.push_back(trim(s.substr(start)));
      break;
    }
    parts.push_back(trim(s.substr(start, comma - start)));
    start = comma + 1;
  }
  return parts;
}

}  // namespace

uint64_t Presentation::norm_sum() const {
  uint64_t total = 0;
  for (const Word& r : symmetrized) total += r.size();
  return total;
}

uint32_t Presentation::max_relator_len() const {
  size_t best = 0;
  for (const Word& r : symmetrized) best = std::max(best, r.size());
  return static_cast<uint32_t>(best);
}

Presentation make_presentation(Alphabet alphabet, std::vector<Word> relators) {
  alphabet.validate();
  Presentation p;
  p.alphabet = std::move(alphabet);
  p.relators = std::move(relators);

  std::set<std::vector<std::pair<uint32_t, int>>> seen;
  auto key_of = [](const Word& w) {
    std::vector<std::pair<uint32_t, int>> k;
    k.reserve(w.size());
    for (const Letter& l : w.letters) k.emplace_back(l.gen, l.sign);
    return k;
  };

  for (const Word& r : p.relators) {
    validate_word(r, p.alphabet);
    Word core = cyclic_reduce(r).core;
    if (core.empty())
      throw std::invalid_argument("relator freely reduces to the identity");
    Word icore = invert(core);
    for (size_t k = 0; k < core.size(); ++k) {
      for (const Word* base : {&core, &icore}) {
        Word s{base->alphabet_size, shift_of(base->letters, k)};
        if (seen.insert(key_of(s)).second) p.symmetrized.push_back(std::move(s));
      }
    }
  }
  return p;
}

Presentation parse_presentation(const std::string& text) {
  size_t bar = text.find('|');
  std::string left = trim(bar == std::string::npos ? text : text.substr(0, bar));
  std::string right = bar == std::string::npos ? "" : trim(text.substr(bar + 1));

  if (left.empty()) throw std::invalid_argument("presentation lists no generators");
  std::vector<std::string> names = split_csv(left);
  for (const std::string& n : names)
    if (n.empty()) throw std::invalid_argument("empty generator name");
  Alphabet alphabet{static_cast<uint32_t>(names.size()), names};

  std::vector<Word> relators;
  if (!right.empty())
    for (const std::string& part : split_csv(right))
      if (!part.empty()) relators.push_back(parse_word(part, alphabet));

  return make_presentation(std::move(alphabet), std::move(relators));
}

}  // namespace gknap
