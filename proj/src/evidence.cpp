#include "nerode/evidence.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "nerode/dfa.hpp"
#include "nerode/minimize.hpp"

namespace nerode {

ObservationTable ObservationTable::build(const LanguageOracle& o, std::vector<Word> prefixes,
                                         std::vector<Word> extensions) {
    ObservationTable t;
    t.prefixes = std::move(prefixes);
    t.extensions = std::move(extensions);
    t.entries.resize(t.prefixes.size());

    if (o.dfa.has_value()) {
        // Two prefixes landing on the same state share one row, so each row
        // is computed once per reachable state instead of once per prefix.
        const Dfa& d = *o.dfa;
        std::vector<std::vector<bool>> state_row(d.state_count());
        std::vector<bool> filled(d.state_count(), false);
        for (std::size_t i = 0; i < t.prefixes.size(); ++i) {
            int q = d.run_from(d.initial(), t.prefixes[i]);
            if (!filled[q]) {
                std::vector<bool> row(t.extensions.size());
                for (std::size_t j = 0; j < t.extensions.size(); ++j)
                    row[j] = d.is_final(d.run_from(q, t.extensions[j]));
                state_row[q] = std::move(row);
                filled[q] = true;
            }
            t.entries[i] = state_row[q];
        }
        return t;
    }

    for (std::size_t i = 0; i < t.prefixes.size(); ++i) {
        t.entries[i].resize(t.extensions.size());
        for (std::size_t j = 0; j < t.extensions.size(); ++j)
            t.entries[i][j] = o.member(t.prefixes[i] + t.extensions[j]);
    }
    return t;
}

int ObservationTable::distinct_row_count() const {
    std::set<std::vector<bool>> rows(entries.begin(), entries.end());
    return static_cast<int>(rows.size());
}

std::string Verdict::to_string() const {
    switch (kind) {
    case VerdictKind::Stabilized:
        return "stabilized(" + std::to_string(index) + ")";
    case VerdictKind::Growing:
        return "growing";
    case VerdictKind::Inconclusive:
        return "inconclusive";
    }
    return "inconclusive";
}

std::vector<Word> horizon_words(const Alphabet& alphabet, int horizon) {
    if (horizon < 0)
        throw std::invalid_argument("horizon must be non-negative");
    if (alphabet.size() == 1) {
        std::vector<Word> words;
        words.reserve(static_cast<std::size_t>(horizon) + 1);
        for (int i = 0; i <= horizon; ++i)
            words.emplace_back(static_cast<std::size_t>(i), alphabet.symbol(0));
        return words;
    }
    // Enumerating every word becomes infeasible fast, so past length 7 only
    // the single-symbol spikes are kept. They are what separates the unary
    // slices, which is where the zoo's hard languages live.
    std::vector<Word> words = all_words_up_to(alphabet, std::min(horizon, 7));
    for (int len = 8; len <= horizon; ++len)
        for (char s : alphabet.symbols())
            words.emplace_back(static_cast<std::size_t>(len), s);
    return words;
}

EvidenceReport class_count_series(const LanguageOracle& o, const std::vector<int>& horizons) {
    if (horizons.empty())
        throw std::invalid_argument("horizons must be non-empty");
    for (std::size_t i = 1; i < horizons.size(); ++i)
        if (horizons[i] <= horizons[i - 1])
            throw std::invalid_argument("horizons must be strictly increasing");

    EvidenceReport r;
    r.oracle_name = o.name;
    r.horizons = horizons;
    for (int h : horizons) {
        std::vector<Word> words = horizon_words(o.alphabet, h);
        ObservationTable t = ObservationTable::build(o, words, words);
        r.class_counts.push_back(t.distinct_row_count());
    }

    std::size_t n = r.class_counts.size();
    if (n >= 3) {
        int a = r.class_counts[n - 3];
        int b = r.class_counts[n - 2];
        int c = r.class_counts[n - 1];
        if (a == c && b == c)
            r.verdict = {VerdictKind::Stabilized, c};
        else if (a < b && b < c)
            r.verdict = {VerdictKind::Growing, 0};
    }
    return r;
}

std::string EvidenceReport::to_text() const {
    std::ostringstream out;
    out << "oracle: " << oracle_name << "\n";
    for (std::size_t i = 0; i < horizons.size(); ++i)
        out << "  horizon " << horizons[i] << ": " << class_counts[i] << " classes\n";
    out << "verdict: " << verdict.to_string() << "\n";
    return out.str();
}

std::string EvidenceReport::to_csv() const {
    std::ostringstream out;
    out << "horizon,class_count\n";
    for (std::size_t i = 0; i < horizons.size(); ++i)
        out << horizons[i] << "," << class_counts[i] << "\n";
    return out.str();
}

std::optional<std::pair<int, int>> unary_periodicity_check(const LanguageOracle& o,
                                                           int max_preperiod, int max_period,
                                                           int horizon) {
    if (max_preperiod < 0)
        throw std::invalid_argument("max_preperiod must be non-negative");
    if (max_period < 1)
        throw std::invalid_argument("max_period must be positive");
    if (horizon < max_preperiod + 2 * max_period)
        throw std::invalid_argument("horizon too small to witness the requested bounds");

    // Membership along the spike x^0, x^1, ..., x^horizon of the first symbol.
    char x = o.alphabet.symbol(0);
    std::vector<bool> m(static_cast<std::size_t>(horizon) + 1);
    if (o.dfa.has_value()) {
        const Dfa& d = *o.dfa;
        int q = d.initial();
        for (int i = 0; i <= horizon; ++i) {
            m[i] = d.is_final(q);
            q = d.next(q, x);
        }
    } else {
        Word w;
        w.reserve(static_cast<std::size_t>(horizon));
        for (int i = 0; i <= horizon; ++i) {
            m[i] = o.member(w);
            w.push_back(x);
        }
    }

    for (int t = 0; t <= max_preperiod; ++t) {
        for (int p = 1; p <= max_period; ++p) {
            bool ok = true;
            for (int i = t; i + p <= horizon; ++i) {
                if (m[i] != m[i + p]) {
                    ok = false;
                    break;
                }
            }
            if (ok)
                return std::make_pair(t, p);
        }
    }
    return std::nullopt;
}

std::vector<PrimesDemoRow> primes_demo(int k) {
    if (k < 1)
        throw std::invalid_argument("k must be at least 1");
    std::vector<PrimesDemoRow> rows;
    rows.reserve(static_cast<std::size_t>(k));
    for (int j = 1; j <= k; ++j) {
        PrimeSet s = PrimeSet::first(j);
        rows.push_back({s, mn_index(prime_union_dfa(s))});
    }
    return rows;
}

std::string primes_demo_report(const std::vector<PrimesDemoRow>& rows) {
    std::ostringstream out;
    out << "minimal automata for \"some prime in S divides the a/b balance\"\n\n";
    bool increasing = true;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        out << "  S = " << rows[i].primes.to_string() << ": " << rows[i].state_count
            << " states (product of S = " << rows[i].primes.product() << ")\n";
        if (i > 0 && rows[i].state_count <= rows[i - 1].state_count)
            increasing = false;
    }
    out << "\nstate counts strictly increasing: " << (increasing ? "yes" : "no") << "\n\n";
    out << "A word's balance differs from +1 and -1 exactly when some prime divides\n"
           "the balance. If only finitely many primes existed, that language would\n"
           "be the union above taken over all of them: a single automaton whose size\n"
           "is fixed once and for all. But its class counts grow without bound (run\n"
           "`evidence xi-ne-pm1`), so no finite automaton recognizes it. Hence no\n"
           "finite set of primes suffices: there are infinitely many primes.\n";
    return out.str();
}

} // namespace nerode
