#include "nerode/alphabet.hpp"

#include <cctype>

namespace nerode {

Alphabet::Alphabet(std::string_view symbols) {
    if (symbols.empty())
        throw std::invalid_argument("alphabet must not be empty");
    for (int& slot : index_table_)
        slot = -1;
    for (char c : symbols) {
        auto uc = static_cast<unsigned char>(c);
        if (!std::isprint(uc) || std::isspace(uc))
            throw std::invalid_argument("alphabet symbols must be printable and non-blank");
        if (index_table_[uc] >= 0)
            throw std::invalid_argument(std::string("duplicate alphabet symbol '") + c + "'");
        index_table_[uc] = static_cast<int>(symbols_.size());
        symbols_.push_back(c);
    }
}

bool Alphabet::contains_word(const Word& w) const {
    for (char c : w)
        if (!contains(c))
            return false;
    return true;
}

std::vector<Word> all_words_up_to(const Alphabet& alphabet, int max_len) {
    std::vector<Word> words{Word{}};
    size_t level_begin = 0;
    for (int len = 1; len <= max_len; ++len) {
        size_t level_end = words.size();
        for (size_t i = level_begin; i < level_end; ++i)
            for (int s = 0; s < alphabet.size(); ++s)
                words.push_back(words[i] + alphabet.symbol(s));
        level_begin = level_end;
    }
    return words;
}

} // namespace nerode
