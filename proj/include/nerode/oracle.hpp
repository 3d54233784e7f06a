#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "nerode/dfa.hpp"

namespace nerode {

/// A named membership predicate over Σ*. This is the common shape for every
/// language the toolkit handles: regular ones carry the recognizing DFA
/// alongside the predicate (the two always agree), non-regular ones are
/// predicate-only. Predicates are pure, so oracles can be probed from many
/// threads at once.
struct LanguageOracle {
    std::string name;
    Alphabet alphabet;
    std::function<bool(const Word&)> membership;
    std::optional<Dfa> dfa;

    /// Evaluates the predicate; throws std::invalid_argument when the word
    /// uses characters outside the alphabet.
    bool member(const Word& w) const {
        if (!alphabet.contains_word(w))
            throw std::invalid_argument("word uses characters outside the oracle's alphabet");
        return membership(w);
    }

    bool unary() const { return alphabet.size() == 1; }
};

/// Wraps a DFA as an oracle; membership delegates to the automaton.
LanguageOracle oracle_from_dfa(std::string name, const Dfa& d);

} // namespace nerode
