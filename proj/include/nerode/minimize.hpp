#pragma once

#include <optional>
#include <vector>

#include "nerode/dfa.hpp"

namespace nerode {

/// Grouping of a DFA's states into indistinguishability classes: two states
/// share a block iff no word separates them (reads from one into a final
/// state exactly when it does from the other).
struct Partition {
    std::vector<std::vector<int>> blocks;
    std::vector<int> block_of;

    int block_count() const { return static_cast<int>(blocks.size()); }
};

/// Iterated refinement over all states of d (reachable or not): start from
/// the final/non-final split and split blocks by their per-symbol successor
/// blocks until stable.
Partition indistinguishability_partition(const Dfa& d);

/// Canonical minimal automaton for L(d): unreachable states are dropped,
/// indistinguishable states merged, and the quotient renumbered by
/// breadth-first discovery order with alphabet-ordered edges. Two automata
/// recognize the same language iff their minimized forms are structurally
/// identical.
Dfa minimize(const Dfa& d);

/// Number of equivalence classes of the "no distinguishing extension"
/// relation over all of Σ*, i.e. the state count of minimize(d). Counts the
/// sink class whenever it is distinguishable from the rest.
int mn_index(const Dfa& d);

/// Shortest word (alphabet-order tie-break) that reads from s into a final
/// state but from t into a non-final one, or vice versa; nullopt iff the two
/// states are indistinguishable. Throws std::invalid_argument on bad ids.
std::optional<Word> state_distinguisher(const Dfa& d, int s, int t);

/// Shortest extension z such that exactly one of x·z, y·z is accepted;
/// nullopt iff x and y are equivalent for L(d). Throws std::invalid_argument
/// when x or y uses characters outside the alphabet.
std::optional<Word> distinguishing_extension(const Dfa& d, const Word& x, const Word& y);

} // namespace nerode
