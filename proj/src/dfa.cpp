#include "nerode/dfa.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace nerode {

Dfa::Dfa(Alphabet alphabet, int state_count, int initial,
         const std::vector<int>& finals, std::vector<int> delta)
    : alphabet_(std::move(alphabet)),
      state_count_(state_count),
      initial_(initial),
      final_(static_cast<size_t>(state_count), false),
      delta_(std::move(delta)) {
    if (state_count_ < 1)
        throw std::invalid_argument("a DFA needs at least one state");
    if (initial_ < 0 || initial_ >= state_count_)
        throw std::invalid_argument("initial state out of range");
    if (delta_.size() != static_cast<size_t>(state_count_) * alphabet_.size())
        throw std::invalid_argument("transition table is not total");
    for (int target : delta_)
        if (target < 0 || target >= state_count_)
            throw std::invalid_argument("transition target out of range");
    for (int f : finals) {
        if (f < 0 || f >= state_count_)
            throw std::invalid_argument("final state out of range");
        final_[static_cast<size_t>(f)] = true;
    }
}

std::vector<int> Dfa::finals() const {
    std::vector<int> result;
    for (int s = 0; s < state_count_; ++s)
        if (final_[static_cast<size_t>(s)])
            result.push_back(s);
    return result;
}

int Dfa::next(int state, char symbol) const {
    int index = alphabet_.index_of(symbol);
    if (index < 0)
        throw std::invalid_argument(std::string("character '") + symbol
                                    + "' is not in the alphabet");
    return next_by_index(state, index);
}

int Dfa::run_from(int state, const Word& w) const {
    for (char c : w)
        state = next(state, c);
    return state;
}

// ---------------------------------------------------------------------------
// Subset construction.

namespace {

void eps_closure_into(const std::vector<std::vector<int>>& eps, std::vector<char>& mark,
                      std::vector<int>& out, int seed) {
    if (mark[static_cast<size_t>(seed)])
        return;
    mark[static_cast<size_t>(seed)] = 1;
    out.push_back(seed);
    std::vector<int> stack{seed};
    while (!stack.empty()) {
        int s = stack.back();
        stack.pop_back();
        for (int t : eps[static_cast<size_t>(s)]) {
            if (!mark[static_cast<size_t>(t)]) {
                mark[static_cast<size_t>(t)] = 1;
                out.push_back(t);
                stack.push_back(t);
            }
        }
    }
}

} // namespace

Dfa subset_construct(const Nfa& n, const Alphabet& alphabet) {
    const int k = alphabet.size();
    std::vector<std::vector<int>> eps(static_cast<size_t>(n.state_count));
    // moves[s][i]: targets of state s on the i-th alphabet symbol.
    std::vector<std::vector<std::vector<int>>> moves(
        static_cast<size_t>(n.state_count),
        std::vector<std::vector<int>>(static_cast<size_t>(k)));
    for (const NfaTransition& t : n.transitions) {
        if (t.from < 0 || t.from >= n.state_count || t.to < 0 || t.to >= n.state_count)
            throw std::invalid_argument("NFA transition out of range");
        if (!t.symbol) {
            eps[static_cast<size_t>(t.from)].push_back(t.to);
        } else {
            int index = alphabet.index_of(*t.symbol);
            if (index < 0)
                throw std::invalid_argument(std::string("NFA symbol '") + *t.symbol
                                            + "' is not in the alphabet");
            moves[static_cast<size_t>(t.from)][static_cast<size_t>(index)].push_back(t.to);
        }
    }

    std::vector<char> mark(static_cast<size_t>(n.state_count), 0);
    auto closure = [&](const std::vector<int>& seeds) {
        std::fill(mark.begin(), mark.end(), 0);
        std::vector<int> subset;
        for (int s : seeds)
            eps_closure_into(eps, mark, subset, s);
        std::sort(subset.begin(), subset.end());
        return subset;
    };

    std::map<std::vector<int>, int> subset_ids;
    std::vector<std::vector<int>> subsets;
    auto intern = [&](std::vector<int> subset) {
        auto [it, inserted] = subset_ids.emplace(std::move(subset), static_cast<int>(subsets.size()));
        if (inserted)
            subsets.push_back(it->first);
        return it->second;
    };

    intern(closure({n.initial}));
    std::vector<int> delta;
    std::vector<int> finals;
    for (int id = 0; id < static_cast<int>(subsets.size()); ++id) {
        // subsets grows while we iterate; the loop is the BFS worklist.
        for (int i = 0; i < k; ++i) {
            std::vector<int> seeds;
            for (int s : subsets[static_cast<size_t>(id)])
                for (int t : moves[static_cast<size_t>(s)][static_cast<size_t>(i)])
                    seeds.push_back(t);
            delta.push_back(intern(closure(seeds)));
        }
        for (int s : subsets[static_cast<size_t>(id)])
            if (n.finals.count(s)) {
                finals.push_back(id);
                break;
            }
    }
    // intern() may have appended subsets after their delta rows were filled;
    // rows for those are produced by the loop above because `subsets.size()`
    // is re-read each iteration. At this point delta covers every subset.
    return Dfa(alphabet, static_cast<int>(subsets.size()), 0, finals, std::move(delta));
}

Dfa regex_to_dfa(const Regex& e, const Alphabet& alphabet) {
    return subset_construct(thompson_nfa(e), alphabet);
}

// ---------------------------------------------------------------------------
// Boolean combinations.

Dfa product(const Dfa& a, const Dfa& b, const std::function<bool(bool, bool)>& combine) {
    if (a.alphabet() != b.alphabet())
        throw std::invalid_argument("product requires a shared alphabet");
    const int k = a.alphabet().size();
    std::vector<int> pair_id(static_cast<size_t>(a.state_count()) * b.state_count(), -1);
    auto key = [&](int s, int t) {
        return static_cast<size_t>(s) * b.state_count() + static_cast<size_t>(t);
    };

    std::vector<std::pair<int, int>> pairs;
    auto intern = [&](int s, int t) {
        int& slot = pair_id[key(s, t)];
        if (slot < 0) {
            slot = static_cast<int>(pairs.size());
            pairs.emplace_back(s, t);
        }
        return slot;
    };

    intern(a.initial(), b.initial());
    std::vector<int> delta;
    std::vector<int> finals;
    for (int id = 0; id < static_cast<int>(pairs.size()); ++id) {
        auto [s, t] = pairs[static_cast<size_t>(id)];
        for (int i = 0; i < k; ++i)
            delta.push_back(intern(a.next_by_index(s, i), b.next_by_index(t, i)));
        if (combine(a.is_final(s), b.is_final(t)))
            finals.push_back(id);
    }
    return Dfa(a.alphabet(), static_cast<int>(pairs.size()), 0, finals, std::move(delta));
}

Dfa unite(const Dfa& a, const Dfa& b) {
    return product(a, b, [](bool x, bool y) { return x || y; });
}

Dfa intersect(const Dfa& a, const Dfa& b) {
    return product(a, b, [](bool x, bool y) { return x && y; });
}

Dfa difference(const Dfa& a, const Dfa& b) {
    return product(a, b, [](bool x, bool y) { return x && !y; });
}

Dfa complement(const Dfa& d) {
    std::vector<int> flipped;
    for (int s = 0; s < d.state_count(); ++s)
        if (!d.is_final(s))
            flipped.push_back(s);
    std::vector<int> delta;
    delta.reserve(static_cast<size_t>(d.state_count()) * d.alphabet().size());
    for (int s = 0; s < d.state_count(); ++s)
        for (int i = 0; i < d.alphabet().size(); ++i)
            delta.push_back(d.next_by_index(s, i));
    return Dfa(d.alphabet(), d.state_count(), d.initial(), flipped, std::move(delta));
}

// ---------------------------------------------------------------------------
// Reachability queries. All searches expand states in alphabet order, so the
// first word found for any state is the shortest one, lexicographically
// least among equals.

std::vector<std::optional<Word>> state_access_words(const Dfa& d) {
    std::vector<std::optional<Word>> access(static_cast<size_t>(d.state_count()));
    std::deque<int> queue;
    access[static_cast<size_t>(d.initial())] = Word{};
    queue.push_back(d.initial());
    while (!queue.empty()) {
        int s = queue.front();
        queue.pop_front();
        for (int i = 0; i < d.alphabet().size(); ++i) {
            int t = d.next_by_index(s, i);
            if (!access[static_cast<size_t>(t)]) {
                access[static_cast<size_t>(t)] = *access[static_cast<size_t>(s)]
                                                 + d.alphabet().symbol(i);
                queue.push_back(t);
            }
        }
    }
    return access;
}

std::optional<Word> shortest_accepted(const Dfa& d) {
    std::vector<std::optional<Word>> access = state_access_words(d);
    std::optional<Word> best;
    for (int s = 0; s < d.state_count(); ++s) {
        if (!d.is_final(s) || !access[static_cast<size_t>(s)])
            continue;
        const Word& w = *access[static_cast<size_t>(s)];
        if (!best || w.size() < best->size() || (w.size() == best->size() && w < *best))
            best = w;
    }
    return best;
}

bool is_empty(const Dfa& d) { return !shortest_accepted(d).has_value(); }

std::optional<Word> counterexample(const Dfa& a, const Dfa& b) {
    return shortest_accepted(product(a, b, [](bool x, bool y) { return x != y; }));
}

bool equivalent(const Dfa& a, const Dfa& b) { return !counterexample(a, b).has_value(); }

// ---------------------------------------------------------------------------
// Plain-text format.

std::string to_text(const Dfa& d) {
    std::ostringstream out;
    out << "alphabet: " << d.alphabet().symbols() << '\n';
    out << "states: " << d.state_count() << '\n';
    out << "initial: " << d.initial() << '\n';
    out << "final:";
    for (int f : d.finals())
        out << ' ' << f;
    out << '\n';
    for (int s = 0; s < d.state_count(); ++s)
        for (int i = 0; i < d.alphabet().size(); ++i)
            out << "trans: " << s << ' ' << d.alphabet().symbol(i) << ' '
                << d.next_by_index(s, i) << '\n';
    return out.str();
}

namespace {

std::runtime_error format_error(int line_no, const std::string& what) {
    return std::runtime_error("DFA text, line " + std::to_string(line_no) + ": " + what);
}

} // namespace

Dfa dfa_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;

    std::optional<Alphabet> alphabet;
    int state_count = -1;
    int initial = -1;
    std::vector<int> finals;
    bool finals_seen = false;
    std::vector<int> delta;
    std::vector<char> filled;

    auto expect_int = [&](std::istringstream& fields, const char* what) {
        long long value;
        if (!(fields >> value))
            throw format_error(line_no, std::string("expected ") + what);
        return value;
    };

    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        std::istringstream fields(line);
        std::string tag;
        fields >> tag;
        if (tag == "alphabet:") {
            std::string symbols;
            if (!(fields >> symbols))
                throw format_error(line_no, "expected alphabet symbols");
            alphabet.emplace(symbols);
        } else if (tag == "states:") {
            state_count = static_cast<int>(expect_int(fields, "a state count"));
            if (!alphabet)
                throw format_error(line_no, "alphabet must come first");
            if (state_count < 1)
                throw format_error(line_no, "state count must be positive");
            delta.assign(static_cast<size_t>(state_count) * alphabet->size(), -1);
            filled.assign(delta.size(), 0);
        } else if (tag == "initial:") {
            initial = static_cast<int>(expect_int(fields, "a state id"));
        } else if (tag == "final:") {
            finals_seen = true;
            long long f;
            while (fields >> f)
                finals.push_back(static_cast<int>(f));
        } else if (tag == "trans:") {
            if (!alphabet || state_count < 0)
                throw format_error(line_no, "trans before alphabet/states");
            int from = static_cast<int>(expect_int(fields, "a source state"));
            std::string symbol;
            if (!(fields >> symbol) || symbol.size() != 1)
                throw format_error(line_no, "expected a single-character symbol");
            int to = static_cast<int>(expect_int(fields, "a target state"));
            int index = alphabet->index_of(symbol[0]);
            if (index < 0)
                throw format_error(line_no, "symbol not in the alphabet");
            if (from < 0 || from >= state_count || to < 0 || to >= state_count)
                throw format_error(line_no, "state id out of range");
            size_t slot = static_cast<size_t>(from) * alphabet->size()
                          + static_cast<size_t>(index);
            if (filled[slot])
                throw format_error(line_no, "duplicate (state, symbol) pair");
            filled[slot] = 1;
            delta[slot] = to;
        } else {
            throw format_error(line_no, "unknown directive '" + tag + "'");
        }
    }

    if (!alphabet)
        throw std::runtime_error("DFA text: missing alphabet line");
    if (state_count < 0)
        throw std::runtime_error("DFA text: missing states line");
    if (initial < 0)
        throw std::runtime_error("DFA text: missing initial line");
    if (!finals_seen)
        throw std::runtime_error("DFA text: missing final line");
    for (size_t slot = 0; slot < filled.size(); ++slot)
        if (!filled[slot])
            throw std::runtime_error("DFA text: transition table is not total");
    return Dfa(*alphabet, state_count, initial, finals, std::move(delta));
}

// ---------------------------------------------------------------------------
// Graphviz export.

std::string to_dot(const Dfa& d) {
    std::ostringstream out;
    out << "digraph dfa {\n";
    out << "  rankdir=LR;\n";
    out << "  __start [shape=point, label=\"start\"];\n";
    for (int s = 0; s < d.state_count(); ++s)
        out << "  q" << s << " [shape=" << (d.is_final(s) ? "doublecircle" : "circle")
            << ", label=\"q" << s << "\"];\n";
    out << "  __start -> q" << d.initial() << ";\n";
    for (int s = 0; s < d.state_count(); ++s) {
        // One edge per target, labels merged in alphabet order.
        std::map<int, std::string> labels;
        for (int i = 0; i < d.alphabet().size(); ++i) {
            std::string& label = labels[d.next_by_index(s, i)];
            if (!label.empty())
                label += ',';
            label += d.alphabet().symbol(i);
        }
        for (const auto& [target, label] : labels)
            out << "  q" << s << " -> q" << target << " [label=\"" << label << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace nerode
