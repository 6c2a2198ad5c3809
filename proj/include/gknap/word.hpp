/* word.hpp -- letters and words over an inverse-closed group alphabet */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gknap {

/// One generator occurrence: 0-based generator index plus a sign.
struct Letter {
    uint32_t gen = 0;
    int8_t sign = 1;  ///< +1 for the generator, -1 for its inverse

    Letter() = default;
    Letter(uint32_t g, int s) : gen(g), sign(static_cast<int8_t>(s < 0 ? -1 : 1)) {}

    Letter inverse() const { return Letter(gen, -sign); }

    friend bool operator==(const Letter& a, const Letter& b) {
        return a.gen == b.gen && a.sign == b.sign;
    }
    friend bool operator!=(const Letter& a, const Letter& b) { return !(a == b); }
};

/// Generating set of a group. Words refer to generators by index; the
/// optional names are only used when rendering or parsing text.
struct Alphabet {
    uint32_t size = 0;
    std::vector<std::string> names;  ///< empty, or one printable token per generator

    Alphabet() = default;
    explicit Alphabet(uint32_t n) : size(n) {}
    Alphabet(uint32_t n, std::vector<std::string> nm) : size(n), names(std::move(nm)) {}

    /// Throws std::invalid_argument when names are present but not a
    /// distinct, non-empty, one-per-generator list.
    void validate() const;
};

/// A word is a sequence of letters over a fixed alphabet size. The empty
/// word is the group identity and renders as "1".
struct Word {
    uint32_t alphabet_size = 0;
    std::vector<Letter> letters;

    Word() = default;
    explicit Word(uint32_t n) : alphabet_size(n) {}
    Word(uint32_t n, std::vector<Letter> ls) : alphabet_size(n), letters(std::move(ls)) {}

    size_t size() const { return letters.size(); }
    bool empty() const { return letters.empty(); }

    friend bool operator==(const Word& a, const Word& b) {
        return a.alphabet_size == b.alphabet_size && a.letters == b.letters;
    }
    friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }
};

/// Throws std::invalid_argument when some letter index is out of range.
void validate_word(const Word& w);

/// Same, and also requires the word's alphabet size to match.
void validate_word(const Word& w, const Alphabet& alphabet);

/// Deletes adjacent x x^-1 pairs until none remain. The result is the
/// unique freely reduced representative.
Word free_reduce(const Word& w);

/// Result of cyclic_reduce: w is equal in the free group to
/// conjugator^-1 * core * conjugator, and core is cyclically reduced.
struct CyclicReduction {
    Word core;
    Word conjugator;
};

/// Freely reduces, then peels matched first/last letter pairs.
CyclicReduction cyclic_reduce(const Word& w);

/// Formal inverse: reversed word with all signs flipped.
Word invert(const Word& w);

/// Concatenation without reduction. Throws std::invalid_argument when the
/// alphabet sizes differ.
Word concat(const Word& a, const Word& b);

/// Parses word text. Accepted syntaxes:
///  - "1" or "" for the empty word;
///  - letter syntax for alphabets of size <= 26: 'a'..'z' are generators
///    0..25 in order, 'A'..'Z' their inverses (when the alphabet carries
///    single-letter names, those letters are used instead of positions);
///  - token syntax g<i> / G<i> for any size, e.g. "g0G12".
/// Throws std::invalid_argument on anything else.
Word parse_word(const std::string& text, const Alphabet& alphabet);

/// Renders a word in letter syntax when the alphabet size permits (<= 26),
/// token syntax otherwise. parse_word(format_word(w), Alphabet(n)) == w.
std::string format_word(const Word& w);

/// Same, but uses the alphabet's single-letter names when present.
std::string format_word(const Word& w, const Alphabet& alphabet);

}  // namespace gknap
