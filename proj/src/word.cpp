/* word.cpp -- free reduction, cyclic reduction and word text syntax */

#include "gknap/word.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <unordered_set>

namespace gknap {

void Alphabet::validate() const {
    if (names.empty()) return;
    if (names.size() != size)
        throw std::invalid_argument("alphabet names must match the alphabet size");
    std::unordered_set<std::string> seen;
    for (const auto& n : names) {
        if (n.empty())
            throw std::invalid_argument("alphabet names must be non-empty");
        for (char c : n)
            if (!std::isprint(static_cast<unsigned char>(c)) || std::isspace(static_cast<unsigned char>(c)))
                throw std::invalid_argument("alphabet names must be printable tokens");
        if (!seen.insert(n).second)
            throw std::invalid_argument("alphabet names must be pairwise distinct");
    }
}

void validate_word(const Word& w) {
    for (const Letter& l : w.letters)
        if (l.gen >= w.alphabet_size)
            throw std::invalid_argument("word letter out of alphabet range");
}

void validate_word(const Word& w, const Alphabet& alphabet) {
    if (w.alphabet_size != alphabet.size)
        throw std::invalid_argument("word alphabet size mismatch");
    validate_word(w);
}

Word free_reduce(const Word& w) {
    Word out(w.alphabet_size);
    out.letters.reserve(w.letters.size());
    for (const Letter& l : w.letters) {
        if (!out.letters.empty() && out.letters.back() == l.inverse())
            out.letters.pop_back();
        else
            out.letters.push_back(l);
    }
    return out;
}

CyclicReduction cyclic_reduce(const Word& w) {
    Word core = free_reduce(w);
    std::vector<Letter> peeled;  // outermost first
    size_t lo = 0, hi = core.letters.size();
    while (hi - lo >= 2 && core.letters[lo] == core.letters[hi - 1].inverse()) {
        peeled.push_back(core.letters[hi - 1]);
        ++lo;
        --hi;
    }
    CyclicReduction res;
    res.core = Word(w.alphabet_size,
                    std::vector<Letter>(core.letters.begin() + lo, core.letters.begin() + hi));
    // w = conjugator^-1 * core * conjugator: the innermost peeled letter
    // comes first in the conjugator.
    res.conjugator = Word(w.alphabet_size,
                          std::vector<Letter>(peeled.rbegin(), peeled.rend()));
    return res;
}

Word invert(const Word& w) {
    Word out(w.alphabet_size);
    out.letters.reserve(w.letters.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        out.letters.push_back(it->inverse());
    return out;
}

Word concat(const Word& a, const Word& b) {
    if (a.alphabet_size != b.alphabet_size)
        throw std::invalid_argument("concat: alphabet mismatch");
    Word out = a;
    out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
    return out;
}

namespace {

// Letter-name table: maps 'a'..'z' to a generator index, either positionally
// or through single-letter alphabet names. Returns size 0 when letter syntax
// is unavailable.
std::vector<int> letter_table(const Alphabet& alphabet) {
    std::vector<int> table(26, -1);
    bool named = !alphabet.names.empty();
    if (named) {
        for (const auto& n : alphabet.names)
            if (n.size() != 1 || !std::islower(static_cast<unsigned char>(n[0])))
                named = false;
    }
    if (named) {
        for (uint32_t i = 0; i < alphabet.size; ++i)
            table[alphabet.names[i][0] - 'a'] = static_cast<int>(i);
        return table;
    }
    if (alphabet.size > 26) return {};
    for (uint32_t i = 0; i < alphabet.size; ++i)
        table['a' + i - 'a'] = static_cast<int>(i);
    return table;
}

}  // namespace

Word parse_word(const std::string& text, const Alphabet& alphabet) {
    alphabet.validate();
    Word out(alphabet.size);
    if (text.empty() || text == "1") return out;

    std::vector<int> table = letter_table(alphabet);
    size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        // Token syntax: g<i> / G<i>. A digit must follow, otherwise 'g' is
        // treated as a plain letter.
        if ((c == 'g' || c == 'G') && i + 1 < text.size() &&
            std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
            size_t j = i + 1;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            unsigned long idx = std::stoul(text.substr(i + 1, j - i - 1));
            if (idx >= alphabet.size)
                throw std::invalid_argument("parse_word: generator index out of range: " +
                                            text.substr(i, j - i));
            out.letters.emplace_back(static_cast<uint32_t>(idx), c == 'g' ? 1 : -1);
            i = j;
            continue;
        }
        int sign = 1;
        if (std::isupper(static_cast<unsigned char>(c))) {
            sign = -1;
            c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        }
        if (c < 'a' || c > 'z' || table.empty() || table[c - 'a'] < 0)
            throw std::invalid_argument(std::string("parse_word: unknown letter '") +
                                        text[i] + "'");
        out.letters.emplace_back(static_cast<uint32_t>(table[c - 'a']), sign);
        ++i;
    }
    return out;
}

std::string format_word(const Word& w) {
    return format_word(w, Alphabet(w.alphabet_size));
}

std::string format_word(const Word& w, const Alphabet& alphabet) {
    if (w.letters.empty()) return "1";
    std::vector<int> table = letter_table(alphabet);
    std::string out;
    for (const Letter& l : w.letters) {
        if (!table.empty()) {
            // Invert the table: find the display letter for l.gen.
            char base = 0;
            if (!alphabet.names.empty() && l.gen < alphabet.names.size() &&
                alphabet.names[l.gen].size() == 1)
                base = alphabet.names[l.gen][0];
            else if (alphabet.names.empty() && w.alphabet_size <= 26 && l.gen < 26)
                base = static_cast<char>('a' + l.gen);
            if (base) {
                out += l.sign > 0 ? base
                                  : static_cast<char>(std::toupper(static_cast<unsigned char>(base)));
                continue;
            }
        }
        out += (l.sign > 0 ? "g" : "G") + std::to_string(l.gen);
    }
    return out;
}

}  // namespace gknap
