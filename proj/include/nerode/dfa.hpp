#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nerode/alphabet.hpp"
#include "nerode/nfa.hpp"
#include "nerode/regex.hpp"

namespace nerode {

/// Total deterministic automaton: every (state, symbol) pair has exactly one
/// successor. Immutable after construction; all operations below build new
/// automata, and membership queries may run concurrently on a shared value.
class Dfa {
public:
    /// delta is row-major: delta[s * alphabet.size() + i] is the successor of
    /// state s on the i-th alphabet symbol. Throws std::invalid_argument when
    /// the table is not total or any id is out of range.
    Dfa(Alphabet alphabet, int state_count, int initial,
        const std::vector<int>& finals, std::vector<int> delta);

    const Alphabet& alphabet() const { return alphabet_; }
    int state_count() const { return state_count_; }
    int initial() const { return initial_; }

    bool is_final(int state) const { return final_.at(static_cast<size_t>(state)); }
    std::vector<int> finals() const;

    int next_by_index(int state, int symbol_index) const {
        return delta_[static_cast<size_t>(state) * alphabet_.size()
                      + static_cast<size_t>(symbol_index)];
    }

    /// Successor on a symbol; throws std::invalid_argument for characters
    /// outside the alphabet.
    int next(int state, char symbol) const;

    /// State reached from `state` by reading the whole word.
    int run_from(int state, const Word& w) const;

    /// Membership: one table lookup per character.
    bool accepts(const Word& w) const { return is_final(run_from(initial_, w)); }

private:
    Alphabet alphabet_;
    int state_count_;
    int initial_;
    std::vector<bool> final_;
    std::vector<int> delta_;
};

/// Determinization by the subset construction. Only subsets reachable from
/// the ε-closure of the NFA's initial state are materialized; the empty
/// subset serves as the sink, so the result is total. States are numbered in
/// breadth-first discovery order with alphabet-ordered edges, which makes
/// the construction deterministic.
Dfa subset_construct(const Nfa& n, const Alphabet& alphabet);

/// thompson_nfa followed by subset_construct.
Dfa regex_to_dfa(const Regex& e, const Alphabet& alphabet);

/// Product automaton over reachable state pairs; accepts w iff
/// combine(w in L(a), w in L(b)). Both inputs must share one alphabet.
Dfa product(const Dfa& a, const Dfa& b, const std::function<bool(bool, bool)>& combine);

Dfa unite(const Dfa& a, const Dfa& b);
Dfa intersect(const Dfa& a, const Dfa& b);
Dfa difference(const Dfa& a, const Dfa& b);

/// Swaps final and non-final states; recognizes the complement language.
Dfa complement(const Dfa& d);

/// Shortest accepted word, ties broken by alphabet order; nullopt iff the
/// language is empty.
std::optional<Word> shortest_accepted(const Dfa& d);

bool is_empty(const Dfa& d);

/// Shortest word accepted by exactly one of the two automata; nullopt iff
/// they recognize the same language.
std::optional<Word> counterexample(const Dfa& a, const Dfa& b);

bool equivalent(const Dfa& a, const Dfa& b);

/// For every state, the shortest word reaching it from the initial state
/// (alphabet-order tie-break); nullopt for unreachable states.
std::vector<std::optional<Word>> state_access_words(const Dfa& d);

/// Converts back to an expression by state elimination, removing states in
/// descending id order so the output is reproducible. The result denotes
/// exactly L(d); round-trip equivalence is checked in the test suite.
Regex dfa_to_regex(const Dfa& d);

/// Line-based plain-text serialization:
///
///   alphabet: <symbols>
///   states: <n>
///   initial: <id>
///   final: <id list>
///   trans: <from> <symbol> <to>   (one line per pair, every pair exactly once)
std::string to_text(const Dfa& d);

/// Parses the to_text format; throws std::runtime_error on malformed input,
/// including missing or duplicated (state, symbol) pairs.
Dfa dfa_from_text(const std::string& text);

/// Graphviz export: final states as double circles, the initial state marked
/// by an edge from a point node labeled "start", parallel edges merged into
/// one comma-separated label.
std::string to_dot(const Dfa& d);

} // namespace nerode
