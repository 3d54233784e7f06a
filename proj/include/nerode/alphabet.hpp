#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nerode {

/// A word is a finite sequence of alphabet symbols; the empty string is ε.
using Word = std::string;

/// An ordered set of distinct symbols. The construction order is fixed and
/// used for every canonical enumeration (breadth-first searches, witness
/// tie-breaking, transition tables).
class Alphabet {
public:
    /// Builds an alphabet from the given symbols, keeping their order.
    /// Throws std::invalid_argument on duplicates, empty input, or
    /// non-printable / whitespace characters.
    explicit Alphabet(std::string_view symbols);

    int size() const { return static_cast<int>(symbols_.size()); }
    char symbol(int index) const { return symbols_.at(static_cast<size_t>(index)); }
    const std::string& symbols() const { return symbols_; }

    bool contains(char c) const { return index_table_[static_cast<unsigned char>(c)] >= 0; }

    /// Position of a symbol in the fixed order; -1 if absent.
    int index_of(char c) const { return index_table_[static_cast<unsigned char>(c)]; }

    bool contains_word(const Word& w) const;

    bool operator==(const Alphabet& other) const { return symbols_ == other.symbols_; }
    bool operator!=(const Alphabet& other) const { return !(*this == other); }

private:
    std::string symbols_;
    int index_table_[256];
};

/// All words over the alphabet with length <= max_len, ordered by length
/// then lexicographically in alphabet order.
std::vector<Word> all_words_up_to(const Alphabet& alphabet, int max_len);

} // namespace nerode
