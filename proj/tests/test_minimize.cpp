#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "helpers.hpp"
#include "nerode/minimize.hpp"
#include "nerode/zoo.hpp"

using namespace nerode;

namespace {
const Alphabet kAb("ab");

Dfa compile(const char* text, const Alphabet& alphabet) {
    return regex_to_dfa(parse_regex(text, alphabet), alphabet);
}

// Exhaustive reference for state_distinguisher: first word in
// length-then-alphabet order that separates the two states.
std::optional<Word> brute_distinguisher(const Dfa& d, int s, int t, int max_len) {
    for (const Word& w : all_words_up_to(d.alphabet(), max_len))
        if (d.is_final(d.run_from(s, w)) != d.is_final(d.run_from(t, w)))
            return w;
    return std::nullopt;
}
} // namespace

TEST_CASE("cyclic balance automata are already minimal") {
    for (int n : {1, 2, 3, 7, 12})
        CHECK(minimize(divisibility_dfa(n)).state_count() == n);
}

TEST_CASE("unreachable states are dropped") {
    // State 2 is equivalent to state 0 but never reached; delta keeps it alive.
    Dfa d(kAb, 3, 0, {0, 2}, {1, 1, 0, 0, 1, 1});
    Dfa m = minimize(d);
    CHECK(m.state_count() == 2);
    CHECK(equivalent(m, divisibility_dfa(2)));
}

TEST_CASE("indistinguishable states are merged") {
    // Length parity tracked with a duplicated 4-cycle; only parity matters.
    Dfa d(kAb, 4, 0, {1, 3}, {1, 1, 2, 2, 3, 3, 0, 0});
    Dfa m = minimize(d);
    CHECK(m.state_count() == 2);
    CHECK(m.accepts("a"));
    CHECK(m.accepts("aba"));
    CHECK(!m.accepts(""));
    CHECK(!m.accepts("bb"));
}

TEST_CASE("minimization canonicalizes: equal languages give identical tables") {
    Dfa from_regex = minimize(regex_to_dfa(ex2_regex(), Alphabet("abc")));
    Dfa from_machine = minimize(ex2_machine());
    CHECK(to_text(from_regex) == to_text(from_machine));

    CHECK(to_text(minimize(compile("a.a*", kAb))) == to_text(minimize(compile("a*.a", kAb))));
}

TEST_CASE("minimize preserves the language and is idempotent") {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 60; ++trial) {
        Regex e = testutil::random_regex(rng, 9, kAb);
        Dfa d = regex_to_dfa(e, kAb);
        Dfa m = minimize(d);
        CAPTURE(format_regex(e));
        CHECK(equivalent(d, m));
        CHECK(m.state_count() <= d.state_count());
        CHECK(to_text(minimize(m)) == to_text(m));
    }
}

TEST_CASE("the index counts every class, sink included") {
    CHECK(mn_index(compile("a", kAb)) == 3); // before a, after a, dead
    CHECK(mn_index(compile("\\0", kAb)) == 1);
    CHECK(mn_index(compile("(a+b)*", kAb)) == 1);
    CHECK(mn_index(len_mod_dfa(5, 3)) == 5);
}

TEST_CASE("the partition covers all states, reachable or not") {
    Dfa d(kAb, 3, 0, {0, 2}, {1, 1, 0, 0, 1, 1}); // state 2 unreachable, acts like 0
    Partition p = indistinguishability_partition(d);
    CHECK(p.block_count() == 2);
    REQUIRE(p.block_of.size() == 3);
    CHECK(p.block_of[0] == p.block_of[2]);
    CHECK(p.block_of[0] != p.block_of[1]);

    int covered = 0;
    for (const std::vector<int>& block : p.blocks) {
        CHECK(!block.empty());
        covered += static_cast<int>(block.size());
        for (int s : block)
            CHECK(p.block_of[static_cast<size_t>(s)] == p.block_of[block.front()]);
    }
    CHECK(covered == 3);
}

TEST_CASE("state distinguishers: base cases") {
    Dfa d = divisibility_dfa(3);
    CHECK(state_distinguisher(d, 0, 1) == Word("")); // finality already differs
    CHECK(state_distinguisher(d, 1, 2) == Word("a")); // 1+1 = 2 stays out, 2+1 = 0 accepts
    CHECK(!state_distinguisher(d, 1, 1).has_value());
    CHECK_THROWS_AS(state_distinguisher(d, 0, 7), std::invalid_argument);
    CHECK_THROWS_AS(state_distinguisher(d, -1, 0), std::invalid_argument);
}

TEST_CASE("state distinguishers match brute-force search") {
    std::mt19937 rng(555);
    int checked = 0;
    for (int trial = 0; trial < 30; ++trial) {
        Regex e = testutil::random_regex(rng, 8, kAb);
        Dfa d = regex_to_dfa(e, kAb);
        // Distinguishable states of a k-state machine are separated by a
        // word shorter than k, so length-8 search is exhaustive only for
        // small machines; larger ones are skipped.
        if (d.state_count() > 9)
            d = minimize(d);
        if (d.state_count() > 9)
            continue;
        ++checked;
        CAPTURE(format_regex(e));
        for (int s = 0; s < d.state_count(); ++s) {
            for (int t = 0; t < d.state_count(); ++t) {
                std::optional<Word> fast = state_distinguisher(d, s, t);
                std::optional<Word> slow = brute_distinguisher(d, s, t, 8);
                CHECK(fast == slow);
            }
        }
    }
    CHECK(checked >= 20);
}

TEST_CASE("same block means no distinguisher, different blocks means one") {
    Dfa d = unite(divisibility_dfa(2), divisibility_dfa(3)); // 6 reachable states
    Partition p = indistinguishability_partition(d);
    for (int s = 0; s < d.state_count(); ++s)
        for (int t = 0; t < d.state_count(); ++t) {
            bool same = p.block_of[static_cast<size_t>(s)] == p.block_of[static_cast<size_t>(t)];
            CHECK(state_distinguisher(d, s, t).has_value() == !same);
        }
}

TEST_CASE("distinguishing extensions act on words") {
    Dfa d = divisibility_dfa(3);
    CHECK(distinguishing_extension(d, "a", "aa") == Word("a"));
    CHECK(distinguishing_extension(d, "", "ab") == std::nullopt); // both at residue 0
    CHECK(distinguishing_extension(d, "ab", "ba") == std::nullopt);
    CHECK(distinguishing_extension(d, "", "a") == Word(""));
    CHECK_THROWS_AS(distinguishing_extension(d, "ac", ""), std::invalid_argument);

    // The returned extension genuinely separates the two words.
    std::mt19937 rng(808);
    Dfa m = len_mod_dfa(4, 1);
    for (int trial = 0; trial < 50; ++trial) {
        Word x = testutil::random_word(rng, kAb, 9);
        Word y = testutil::random_word(rng, kAb, 9);
        std::optional<Word> z = distinguishing_extension(m, x, y);
        if (z.has_value())
            CHECK(m.accepts(x + *z) != m.accepts(y + *z));
        else
            CHECK(x.size() % 4 == y.size() % 4);
    }
}
