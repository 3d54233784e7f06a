#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "helpers.hpp"
#include "nerode/evidence.hpp"
#include "nerode/minimize.hpp"

using namespace nerode;

namespace {
const Alphabet kA("a");
const Alphabet kAb("ab");

std::vector<Word> spikes(int from, int to) {
    std::vector<Word> words;
    for (int i = from; i <= to; ++i)
        words.emplace_back(static_cast<size_t>(i), 'a');
    return words;
}

LanguageOracle without_dfa(const LanguageOracle& o) {
    return LanguageOracle{o.name, o.alphabet, o.membership, std::nullopt};
}
} // namespace

TEST_CASE("observation table rows fingerprint the residues") {
    LanguageOracle o = *find_oracle("Ln:3");
    std::vector<Word> words = all_words_up_to(kAb, 3);
    ObservationTable t = ObservationTable::build(o, words, words);
    CHECK(t.prefixes.size() == words.size());
    CHECK(t.extensions.size() == words.size());
    CHECK(t.distinct_row_count() == 3);
}

TEST_CASE("table dimensions and cells match the oracle") {
    LanguageOracle o = *find_oracle("len-mod:5:3");
    std::vector<Word> prefixes = all_words_up_to(kAb, 2);
    std::vector<Word> extensions = all_words_up_to(kAb, 4);
    ObservationTable t = ObservationTable::build(o, prefixes, extensions);
    REQUIRE(t.entries.size() == prefixes.size());
    for (size_t i = 0; i < prefixes.size(); ++i) {
        REQUIRE(t.entries[i].size() == extensions.size());
        for (size_t j = 0; j < extensions.size(); ++j)
            CHECK(t.entries[i][j] == o.member(prefixes[i] + extensions[j]));
    }
}

TEST_CASE("the automaton-backed fill equals the cell-by-cell fill") {
    std::mt19937 rng(61);
    for (const char* name : {"Ln:3", "len-mod:5:3", "ex2"}) {
        LanguageOracle fast = *find_oracle(name);
        REQUIRE(fast.dfa.has_value());
        LanguageOracle slow = without_dfa(fast);

        std::vector<Word> prefixes, extensions;
        for (int i = 0; i < 25; ++i) {
            prefixes.push_back(testutil::random_word(rng, fast.alphabet, 9));
            extensions.push_back(testutil::random_word(rng, fast.alphabet, 9));
        }
        ObservationTable a = ObservationTable::build(fast, prefixes, extensions);
        ObservationTable b = ObservationTable::build(slow, prefixes, extensions);
        CHECK(a.entries == b.entries);
        CHECK(a.distinct_row_count() == b.distinct_row_count());
    }
}

TEST_CASE("fibonacci spike prefixes are pairwise separated") {
    LanguageOracle o = *find_oracle("fib");
    std::vector<Word> prefixes{Word(2, 'a'), Word(8, 'a'), Word(34, 'a')};
    std::vector<Word> extensions = spikes(0, 21); // includes a^1, a^5, a^21
    ObservationTable t = ObservationTable::build(o, prefixes, extensions);
    CHECK(t.distinct_row_count() == 3);
}

TEST_CASE("powers-of-two tables keep growing with the horizon") {
    LanguageOracle o = *find_oracle("pow2");
    auto count_at = [&](int h) {
        std::vector<Word> words = spikes(0, h);
        return ObservationTable::build(o, words, words).distinct_row_count();
    };
    CHECK(count_at(32) > count_at(16));
    CHECK(count_at(64) > count_at(32));
}

TEST_CASE("distinct rows never exceed the true index") {
    for (const LanguageOracle& o : zoo_oracles()) {
        if (!o.dfa.has_value())
            continue;
        std::vector<Word> words = horizon_words(o.alphabet, 16);
        ObservationTable t = ObservationTable::build(o, words, words);
        CHECK(t.distinct_row_count() <= mn_index(*o.dfa));
    }
    // ...and reach it once the horizon covers the machine.
    LanguageOracle l5 = *find_oracle("Ln:5");
    std::vector<Word> words = horizon_words(kAb, 8);
    CHECK(ObservationTable::build(l5, words, words).distinct_row_count() == 5);
}

TEST_CASE("horizon word sets") {
    CHECK(horizon_words(kA, 3) == std::vector<Word>{"", "a", "aa", "aaa"});
    CHECK(horizon_words(kAb, 2) == all_words_up_to(kAb, 2));

    std::vector<Word> words = horizon_words(kAb, 9);
    CHECK(words.size() == all_words_up_to(kAb, 7).size() + 4); // spikes of length 8 and 9
    CHECK(words[words.size() - 4] == Word(8, 'a'));
    CHECK(words[words.size() - 3] == Word(8, 'b'));
    CHECK(words.back() == Word(9, 'b'));
    CHECK_THROWS_AS(horizon_words(kAb, -1), std::invalid_argument);
}

TEST_CASE("class counts are monotone under nested horizons") {
    for (const char* name : {"pow2", "xi-ne-pm1", "ex2"}) {
        EvidenceReport r = class_count_series(*find_oracle(name), {4, 8, 12, 16});
        for (size_t i = 1; i < r.class_counts.size(); ++i)
            CHECK(r.class_counts[i] >= r.class_counts[i - 1]);
    }
}

TEST_CASE("series verdicts") {
    CHECK(class_count_series(*find_oracle("Ln:5"), {8, 16, 32}).verdict.to_string()
          == "stabilized(5)");
    CHECK(class_count_series(*find_oracle("pow2"), {16, 32, 64, 128}).verdict.to_string()
          == "growing");
    CHECK(class_count_series(*find_oracle("xi-ne-pm1"), {8, 16, 32}).verdict.to_string()
          == "growing");
    // Two horizons cannot witness a trend.
    CHECK(class_count_series(*find_oracle("Ln:5"), {4, 8}).verdict.kind
          == VerdictKind::Inconclusive);

    CHECK_THROWS_AS(class_count_series(*find_oracle("Ln:2"), {}), std::invalid_argument);
    CHECK_THROWS_AS(class_count_series(*find_oracle("Ln:2"), {8, 8, 16}), std::invalid_argument);
    CHECK_THROWS_AS(class_count_series(*find_oracle("Ln:2"), {16, 8}), std::invalid_argument);
}

TEST_CASE("report serialization is stable") {
    EvidenceReport r = class_count_series(*find_oracle("Ln:2"), {2, 4, 6});
    CHECK(r.to_text() == "oracle: Ln:2\n"
                         "  horizon 2: 2 classes\n"
                         "  horizon 4: 2 classes\n"
                         "  horizon 6: 2 classes\n"
                         "verdict: stabilized(2)\n");
    CHECK(r.to_csv() == "horizon,class_count\n2,2\n4,2\n6,2\n");
}

TEST_CASE("periodicity search returns the least witness") {
    // Length residue 3 mod 5: period five, no preperiod.
    CHECK(unary_periodicity_check(*find_oracle("len-mod:5:3"), 64, 64, 4096)
          == std::pair<int, int>(0, 5));

    // Everything accepted: period one.
    LanguageOracle all = oracle_from_dfa("all", Dfa(kA, 1, 0, {0}, {0}));
    CHECK(unary_periodicity_check(all, 4, 4, 16) == std::pair<int, int>(0, 1));

    // Length at least two: preperiod absorbs the ramp.
    LanguageOracle tail{"len>=2", kA, [](const Word& w) { return w.size() >= 2; }, std::nullopt};
    CHECK(unary_periodicity_check(tail, 4, 4, 16) == std::pair<int, int>(2, 1));
}

TEST_CASE("powers of two admit no short period") {
    CHECK(!unary_periodicity_check(*find_oracle("pow2"), 64, 64, 4096).has_value());
}

TEST_CASE("periodicity search validates its bounds") {
    LanguageOracle o = *find_oracle("pow2");
    CHECK_THROWS_AS(unary_periodicity_check(o, 4, 4, 11), std::invalid_argument);
    CHECK_THROWS_AS(unary_periodicity_check(o, -1, 4, 100), std::invalid_argument);
    CHECK_THROWS_AS(unary_periodicity_check(o, 4, 0, 100), std::invalid_argument);
    CHECK(unary_periodicity_check(o, 4, 4, 12).has_value() == false);
}

TEST_CASE("a regular unary slice always yields a pair") {
    // Ln:3 restricted to a-spikes: a^i accepted iff i is a multiple of 3.
    CHECK(unary_periodicity_check(*find_oracle("Ln:3"), 8, 8, 64)
          == std::pair<int, int>(0, 3));
}

TEST_CASE("prime union growth table") {
    std::vector<PrimesDemoRow> rows = primes_demo(3);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].primes.to_string() == "{2}");
    CHECK(rows[0].state_count == 2);
    CHECK(rows[1].state_count == 6);
    CHECK(rows[2].state_count == 30);
    for (const PrimesDemoRow& row : rows)
        CHECK(row.state_count == row.primes.product());
    CHECK_THROWS_AS(primes_demo(0), std::invalid_argument);
}

TEST_CASE("the demo report walks through the contradiction") {
    std::string report = primes_demo_report(primes_demo(2));
    CHECK(report.find("S = {2}: 2 states") != std::string::npos);
    CHECK(report.find("S = {2,3}: 6 states") != std::string::npos);
    CHECK(report.find("strictly increasing: yes") != std::string::npos);
    CHECK(report.find("infinitely many primes") != std::string::npos);
}
