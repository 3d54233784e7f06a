#pragma once

#include <optional>
#include <set>
#include <vector>

#include "nerode/regex.hpp"

namespace nerode {

/// One nondeterministic transition; a missing symbol is an ε-move.
struct NfaTransition {
    int from;
    std::optional<char> symbol;
    int to;
};

/// Nondeterministic automaton with ε-moves, the intermediate form between
/// expressions and deterministic automata.
struct Nfa {
    int state_count = 0;
    int initial = 0;
    std::set<int> finals;
    std::vector<NfaTransition> transitions;
};

/// Compiles an expression into an equivalent NFA fragment by structural
/// recursion. The result has exactly one final state with no outgoing
/// transitions, and at most 2 * node_count(e) states.
Nfa thompson_nfa(const Regex& e);

} // namespace nerode
