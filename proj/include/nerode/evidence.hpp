#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nerode/oracle.hpp"
#include "nerode/zoo.hpp"

namespace nerode {

/// Membership matrix of prefix·extension words. Distinct rows give a lower
/// bound on the number of equivalence classes of the language, because words
/// with different rows are separated by one of the listed extensions.
struct ObservationTable {
    std::vector<Word> prefixes;
    std::vector<Word> extensions;
    std::vector<std::vector<bool>> entries; // entries[i][j] = member(prefixes[i] + extensions[j])

    /// Fills the matrix from the oracle. When the oracle carries a DFA the
    /// fill runs each prefix once and reuses per-state rows; the resulting
    /// matrix is identical to the cell-by-cell evaluation.
    static ObservationTable build(const LanguageOracle& o, std::vector<Word> prefixes,
                                  std::vector<Word> extensions);

    int distinct_row_count() const;
};

enum class VerdictKind { Stabilized, Growing, Inconclusive };

struct Verdict {
    VerdictKind kind = VerdictKind::Inconclusive;
    int index = 0; // meaningful only when kind == Stabilized

    std::string to_string() const;
};

/// Distinct-row counts of nested observation tables at a list of horizons,
/// plus a verdict on the trend. "stabilized(c)" is evidence that the
/// language has exactly c classes; "growing" is evidence that no finite
/// bound exists. Neither is a proof, since the tables are finite.
struct EvidenceReport {
    std::string oracle_name;
    std::vector<int> horizons;
    std::vector<int> class_counts;
    Verdict verdict;

    std::string to_text() const;
    std::string to_csv() const; // header "horizon,class_count"
};

/// The prefix/extension set probed at a horizon: for unary alphabets, all
/// spikes x^i with i <= horizon; otherwise every word of length <= min(horizon, 7)
/// plus the single-symbol spikes x^i up to the horizon. Ordered by length,
/// then lexicographically.
std::vector<Word> horizon_words(const Alphabet& alphabet, int horizon);

/// Builds one square observation table per horizon (prefixes = extensions =
/// horizon_words) and reports the distinct-row counts. The verdict is
/// stabilized(c) when the last three counts all equal c, growing when they
/// are strictly increasing, and inconclusive otherwise (including fewer than
/// three horizons). Horizons must be non-empty and strictly increasing.
EvidenceReport class_count_series(const LanguageOracle& o, const std::vector<int>& horizons);

/// Searches for a preperiod/period pair (t, p), t <= max_preperiod and
/// 1 <= p <= max_period, such that membership of x^i equals membership of
/// x^(i+p) for all t <= i <= horizon - p, where x is the oracle's first
/// symbol. Returns the lexicographically least pair, or nullopt when none
/// fits the bounds. Every regular language passes once the bounds exceed its
/// minimal automaton size, so a persistent absence under growing bounds is
/// non-regularity evidence for the unary slice. Requires
/// horizon >= max_preperiod + 2 * max_period.
std::optional<std::pair<int, int>> unary_periodicity_check(const LanguageOracle& o,
                                                           int max_preperiod, int max_period,
                                                           int horizon);

struct PrimesDemoRow {
    PrimeSet primes;
    int state_count;
};

/// For j = 1..k, the minimal state count of the union of the balance-divisibility
/// languages over the first j primes. The counts equal the product of the
/// primes involved, so they grow without bound.
std::vector<PrimesDemoRow> primes_demo(int k);

/// Renders the rows plus the concluding argument: a finite set of primes
/// would put a fixed finite bound on these automata, while the
/// balance-not-±1 language provably needs unboundedly many classes, so the
/// primes cannot be finite in number.
std::string primes_demo_report(const std::vector<PrimesDemoRow>& rows);

} // namespace nerode
