#pragma once

#include <random>

#include "nerode/alphabet.hpp"
#include "nerode/regex.hpp"

namespace testutil {

// Random expression with at most `budget` AST nodes. Fixed-seed generators
// keep every run of the suite on the same inputs.
inline nerode::Regex random_regex(std::mt19937& rng, int budget, const nerode::Alphabet& alphabet) {
    auto leaf = [&]() {
        if (std::uniform_int_distribution<int>(0, 5)(rng) == 0)
            return nerode::Regex::empty();
        int i = std::uniform_int_distribution<int>(0, alphabet.size() - 1)(rng);
        return nerode::Regex::symbol(alphabet.symbol(i));
    };
    if (budget <= 1)
        return leaf();
    switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
    case 0:
        return leaf();
    case 1:
        return nerode::Regex::star(random_regex(rng, budget - 1, alphabet));
    case 2: {
        if (budget < 3)
            return nerode::Regex::star(random_regex(rng, budget - 1, alphabet));
        int left = std::uniform_int_distribution<int>(1, budget - 2)(rng);
        return nerode::Regex::alt(random_regex(rng, left, alphabet),
                                  random_regex(rng, budget - 1 - left, alphabet));
    }
    default: {
        if (budget < 3)
            return nerode::Regex::star(random_regex(rng, budget - 1, alphabet));
        int left = std::uniform_int_distribution<int>(1, budget - 2)(rng);
        return nerode::Regex::concat(random_regex(rng, left, alphabet),
                                     random_regex(rng, budget - 1 - left, alphabet));
    }
    }
}

inline nerode::Word random_word(std::mt19937& rng, const nerode::Alphabet& alphabet, int max_len) {
    int len = std::uniform_int_distribution<int>(0, max_len)(rng);
    nerode::Word w;
    w.reserve(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i)
        w += alphabet.symbol(std::uniform_int_distribution<int>(0, alphabet.size() - 1)(rng));
    return w;
}

} // namespace testutil
