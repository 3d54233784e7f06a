#include "nerode/nfa.hpp"

namespace nerode {

namespace {

struct Fragment {
    int start;
    int accept;
};

class Builder {
public:
    Fragment build(const Regex& e) {
        switch (e.kind()) {
        case Regex::Kind::Empty: {
            // Two disconnected states: nothing is accepted.
            Fragment f{new_state(), new_state()};
            return f;
        }
        case Regex::Kind::Symbol: {
            Fragment f{new_state(), new_state()};
            add_edge(f.start, e.symbol_char(), f.accept);
            return f;
        }
        case Regex::Kind::Union: {
            Fragment a = build(e.left());
            Fragment b = build(e.right());
            Fragment f{new_state(), new_state()};
            add_eps(f.start, a.start);
            add_eps(f.start, b.start);
            add_eps(a.accept, f.accept);
            add_eps(b.accept, f.accept);
            return f;
        }
        case Regex::Kind::Concat: {
            Fragment a = build(e.left());
            Fragment b = build(e.right());
            add_eps(a.accept, b.start);
            return {a.start, b.accept};
        }
        case Regex::Kind::Star: {
            Fragment inner = build(e.inner());
            Fragment f{new_state(), new_state()};
            add_eps(f.start, inner.start);
            add_eps(f.start, f.accept);
            add_eps(inner.accept, inner.start);
            add_eps(inner.accept, f.accept);
            return f;
        }
        }
        throw std::logic_error("unreachable regex kind");
    }

    Nfa finish(Fragment f) {
        nfa_.initial = f.start;
        nfa_.finals = {f.accept};
        return std::move(nfa_);
    }

private:
    Nfa nfa_;

    int new_state() { return nfa_.state_count++; }

    void add_edge(int from, char symbol, int to) {
        nfa_.transitions.push_back({from, symbol, to});
    }

    void add_eps(int from, int to) {
        nfa_.transitions.push_back({from, std::nullopt, to});
    }
};

} // namespace

Nfa thompson_nfa(const Regex& e) {
    Builder builder;
    Fragment f = builder.build(e);
    return builder.finish(f);
}

} // namespace nerode
