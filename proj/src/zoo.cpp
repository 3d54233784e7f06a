#include "nerode/zoo.hpp"

#include <algorithm>
#include <sstream>

#include "nerode/minimize.hpp"

namespace nerode {

LanguageOracle oracle_from_dfa(std::string name, const Dfa& d) {
    return LanguageOracle{std::move(name), d.alphabet(),
                          [d](const Word& w) { return d.accepts(w); }, d};
}

long long xi(const Word& w) {
    long long balance = 0;
    for (char c : w) {
        if (c == 'a')
            ++balance;
        else if (c == 'b')
            --balance;
        else
            throw std::invalid_argument("xi is defined over the alphabet {a, b}");
    }
    return balance;
}

bool is_prime(long long n) {
    if (n < 2)
        return false;
    for (long long f = 2; f * f <= n; ++f)
        if (n % f == 0)
            return false;
    return true;
}

PrimeSet::PrimeSet(std::vector<int> primes) : primes_(std::move(primes)) {
    if (primes_.empty())
        throw std::invalid_argument("prime set must not be empty");
    for (int p : primes_)
        if (!is_prime(p))
            throw std::invalid_argument(std::to_string(p) + " is not prime");
    std::vector<int> sorted = primes_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("prime set has duplicates");
}

PrimeSet PrimeSet::first(int k) {
    if (k < 1)
        throw std::invalid_argument("need at least one prime");
    std::vector<int> primes;
    for (int candidate = 2; static_cast<int>(primes.size()) < k; ++candidate)
        if (is_prime(candidate))
            primes.push_back(candidate);
    return PrimeSet(std::move(primes));
}

long long PrimeSet::product() const {
    long long result = 1;
    for (int p : primes_)
        result *= p;
    return result;
}

std::string PrimeSet::to_string() const {
    std::ostringstream out;
    out << '{';
    for (size_t i = 0; i < primes_.size(); ++i) {
        if (i > 0)
            out << ',';
        out << primes_[i];
    }
    out << '}';
    return out.str();
}

Dfa divisibility_dfa(int n) {
    if (n < 1)
        throw std::invalid_argument("divisibility modulus must be positive");
    std::vector<int> delta;
    delta.reserve(static_cast<size_t>(n) * 2);
    for (int r = 0; r < n; ++r) {
        delta.push_back((r + 1) % n);     // a
        delta.push_back((r + n - 1) % n); // b
    }
    return Dfa(Alphabet("ab"), n, 0, {0}, std::move(delta));
}

Dfa prime_union_dfa(const PrimeSet& s) {
    std::optional<Dfa> acc;
    for (int p : s.primes()) {
        Dfa next = divisibility_dfa(p);
        acc = acc ? unite(*acc, next) : next;
    }
    return minimize(*acc);
}

Dfa len_mod_dfa(int m, int r) {
    if (m < 1 || r < 0 || r >= m)
        throw std::invalid_argument("need 0 <= r < m");
    std::vector<int> delta;
    for (int s = 0; s < m; ++s) {
        delta.push_back((s + 1) % m); // a
        delta.push_back((s + 1) % m); // b
    }
    return Dfa(Alphabet("ab"), m, 0, {r}, std::move(delta));
}

Regex ex1_regex() {
    static const Regex e = parse_regex("(a+b+c)*.a.(a+b+c)*", Alphabet("abc"));
    return e;
}

Regex ex2_regex() {
    static const Regex e = parse_regex("(b+c)* + (a+b+c)*.a.(a+b+c)*.b.(b+c)*", Alphabet("abc"));
    return e;
}

Dfa ex1_dfa() { return minimize(regex_to_dfa(ex1_regex(), Alphabet("abc"))); }

Dfa ex2_dfa() { return minimize(regex_to_dfa(ex2_regex(), Alphabet("abc"))); }

Dfa ex2_machine() {
    // state 0: every a so far has a b after it; state 1: some a is waiting.
    //            a  b  c
    // delta:  0: 1  0  0
    //         1: 1  0  1
    return Dfa(Alphabet("abc"), 2, 0, {0}, {1, 0, 0, 1, 0, 1});
}

namespace {

bool is_power_of_two(size_t n) { return n > 0 && (n & (n - 1)) == 0; }

bool is_fibonacci_length(size_t n) {
    if (n == 0)
        return false;
    size_t prev = 1, curr = 1; // F(1) = F(2) = 1
    while (curr < n) {
        size_t next = prev + curr;
        prev = curr;
        curr = next;
    }
    return curr == n;
}

LanguageOracle pow2_oracle() {
    return {"pow2", Alphabet("a"), [](const Word& w) { return is_power_of_two(w.size()); },
            std::nullopt};
}

LanguageOracle fib_oracle() {
    return {"fib", Alphabet("a"), [](const Word& w) { return is_fibonacci_length(w.size()); },
            std::nullopt};
}

LanguageOracle prime_len_oracle() {
    return {"prime-len", Alphabet("a"),
            [](const Word& w) { return is_prime(static_cast<long long>(w.size())); },
            std::nullopt};
}

LanguageOracle xi_ne_pm1_oracle() {
    return {"xi-ne-pm1", Alphabet("ab"),
            [](const Word& w) {
                long long balance = xi(w);
                return balance != 1 && balance != -1;
            },
            std::nullopt};
}

// "Ln:<n>" -> n, "len-mod:<m>:<r>" -> (m, r); nullopt when the text does not
// match the pattern.
std::optional<std::vector<int>> parse_params(const std::string& name, const std::string& prefix,
                                             size_t count) {
    if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0)
        return std::nullopt;
    std::vector<int> values;
    std::string rest = name.substr(prefix.size());
    std::istringstream in(rest);
    std::string field;
    while (std::getline(in, field, ':')) {
        if (field.empty() || field.find_first_not_of("0123456789") != std::string::npos)
            return std::nullopt;
        if (field.size() > 9)
            return std::nullopt;
        values.push_back(std::stoi(field));
    }
    if (values.size() != count)
        return std::nullopt;
    return values;
}

} // namespace

std::vector<LanguageOracle> zoo_oracles() {
    std::vector<LanguageOracle> oracles;
    oracles.push_back(pow2_oracle());
    oracles.push_back(fib_oracle());
    oracles.push_back(prime_len_oracle());
    oracles.push_back(xi_ne_pm1_oracle());
    oracles.push_back(oracle_from_dfa("ex1", ex1_dfa()));
    oracles.push_back(oracle_from_dfa("ex2", ex2_dfa()));
    oracles.push_back(oracle_from_dfa("len-mod:5:3", len_mod_dfa(5, 3)));
    for (int n : {2, 3, 5})
        oracles.push_back(oracle_from_dfa("Ln:" + std::to_string(n), divisibility_dfa(n)));
    return oracles;
}

std::optional<LanguageOracle> find_oracle(const std::string& name) {
    if (name == "pow2")
        return pow2_oracle();
    if (name == "fib")
        return fib_oracle();
    if (name == "prime-len")
        return prime_len_oracle();
    if (name == "xi-ne-pm1")
        return xi_ne_pm1_oracle();
    if (name == "ex1")
        return oracle_from_dfa("ex1", ex1_dfa());
    if (name == "ex2")
        return oracle_from_dfa("ex2", ex2_dfa());
    if (auto params = parse_params(name, "Ln:", 1)) {
        if ((*params)[0] < 1)
            return std::nullopt;
        return oracle_from_dfa(name, divisibility_dfa((*params)[0]));
    }
    if (auto params = parse_params(name, "len-mod:", 2)) {
        int m = (*params)[0], r = (*params)[1];
        if (m < 1 || r < 0 || r >= m)
            return std::nullopt;
        return oracle_from_dfa(name, len_mod_dfa(m, r));
    }
    return std::nullopt;
}

} // namespace nerode
