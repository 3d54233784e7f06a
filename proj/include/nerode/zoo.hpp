#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nerode/dfa.hpp"
#include "nerode/oracle.hpp"

namespace nerode {

/// a-count minus b-count of a word over {a, b}. Additive under
/// concatenation. Throws std::invalid_argument on other characters.
long long xi(const Word& w);

/// Trial-division primality test; inputs here are desk-scale.
bool is_prime(long long n);

/// An ordered set of distinct primes.
class PrimeSet {
public:
    /// Throws std::invalid_argument on duplicates, non-primes, or an empty
    /// set.
    explicit PrimeSet(std::vector<int> primes);

    /// The first k primes, ascending.
    static PrimeSet first(int k);

    const std::vector<int>& primes() const { return primes_; }
    long long product() const;
    std::string to_string() const; // e.g. "{2,3,5}"

private:
    std::vector<int> primes_;
};

/// The n-state cyclic automaton over {a, b} that tracks xi(w) mod n:
/// states are residues 0..n-1, 'a' steps forward, 'b' steps back, and
/// residue 0 is both initial and final. Accepts exactly the words whose
/// balance xi(w) is divisible by n. Already minimal. Throws for n < 1.
Dfa divisibility_dfa(int n);

/// Union of divisibility_dfa(p) over the primes of s, minimized: accepts the
/// words whose balance is divisible by at least one prime in s.
Dfa prime_union_dfa(const PrimeSet& s);

/// Words over {a, b} whose length is congruent to r mod m. Throws unless
/// 0 <= r < m.
Dfa len_mod_dfa(int m, int r);

/// Expression over {a, b, c} for "contains at least one a".
Regex ex1_regex();

/// Expression over {a, b, c} for "every a has some b to its right".
Regex ex2_regex();

/// Minimized automata compiled from the two expressions above.
Dfa ex1_dfa();
Dfa ex2_dfa();

/// Hand-built two-state machine for the ex2 language: state 0 (initial,
/// final) means no 'a' is waiting for a 'b'; reading 'a' moves to state 1
/// and only 'b' moves back.
Dfa ex2_machine();

/// The fixed oracle collection: predicate-backed pow2, fib, prime-len and
/// xi-ne-pm1, plus DFA-backed ex1, ex2, len-mod:5:3, Ln:2, Ln:3, Ln:5.
std::vector<LanguageOracle> zoo_oracles();

/// Resolves an oracle identifier: any fixed zoo name, or the parametric
/// forms "Ln:<n>" and "len-mod:<m>:<r>". Returns nullopt for unknown names.
std::optional<LanguageOracle> find_oracle(const std::string& name);

} // namespace nerode
