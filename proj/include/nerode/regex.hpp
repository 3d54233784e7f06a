#pragma once

#include <memory>
#include <set>
#include <stdexcept>
#include <string>

#include "nerode/alphabet.hpp"

namespace nerode {

/// Immutable expression tree over the five constructors: the empty set,
/// single symbols, union, concatenation, and star. There is no separate
/// epsilon node; star(empty()) denotes {ε} and prints as "\e".
///
/// Values are cheap to copy (shared, immutable nodes) and safe to share
/// across threads.
class Regex {
public:
    enum class Kind { Empty, Symbol, Union, Concat, Star };

    static Regex empty();
    static Regex symbol(char c);
    static Regex alt(Regex lhs, Regex rhs);
    static Regex concat(Regex lhs, Regex rhs);
    static Regex star(Regex inner);

    /// star(empty()), the canonical expression for {ε}.
    static Regex epsilon() { return star(empty()); }

    Kind kind() const;
    char symbol_char() const;
    Regex left() const;
    Regex right() const;
    Regex inner() const;

    bool is_epsilon() const;
    int node_count() const;

    /// Structural equality (same tree shape, not language equality).
    bool operator==(const Regex& other) const;
    bool operator!=(const Regex& other) const { return !(*this == other); }

private:
    struct Node;
    explicit Regex(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/// Error raised by parse_regex, carrying the offending byte offset.
struct ParseError : std::runtime_error {
    ParseError(const std::string& message, size_t position)
        : std::runtime_error(message), pos(position) {}
    size_t pos;
};

/// Parses the plain-text grammar
///
///   regex  := union
///   union  := concat ("+" concat)*
///   concat := star (("." )? star)*
///   star   := atom "*"*
///   atom   := SYMBOL | "\0" | "\e" | "(" regex ")"
///
/// with precedence star > concatenation > union and left-associative binary
/// operators. SYMBOL is any printable non-metacharacter, or a
/// backslash-escaped metacharacter (the metacharacters are + . * ( ) \).
/// Whitespace between tokens is ignored. "\0" is the empty set and "\e" is
/// shorthand for "\0*", i.e. {ε}. Concatenation may be written with an
/// explicit "." or by juxtaposition; "." is canonical on output.
///
/// Throws ParseError on malformed input or symbols outside the alphabet.
Regex parse_regex(std::string_view text, const Alphabet& alphabet);

/// Renders the expression with minimal parentheses, such that
/// parse_regex(format_regex(e), alphabet) is structurally equal to e.
std::string format_regex(const Regex& e);

/// The words of the expression's language with length <= max_len, computed
/// by structural recursion on the tree. This is the brute-force reference
/// semantics that automata are checked against; it shares no code with the
/// compilation pipeline.
std::set<Word> enumerate_language(const Regex& e, int max_len);

} // namespace nerode
