#include "nerode/regex.hpp"

#include <cctype>

namespace nerode {

struct Regex::Node {
    Kind kind;
    char sym = '\0';
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
};

Regex Regex::empty() {
    static const auto node = std::make_shared<const Node>(Node{Kind::Empty, '\0', nullptr, nullptr});
    return Regex(node);
}

Regex Regex::symbol(char c) {
    return Regex(std::make_shared<const Node>(Node{Kind::Symbol, c, nullptr, nullptr}));
}

Regex Regex::alt(Regex lhs, Regex rhs) {
    return Regex(std::make_shared<const Node>(
        Node{Kind::Union, '\0', std::move(lhs.node_), std::move(rhs.node_)}));
}

Regex Regex::concat(Regex lhs, Regex rhs) {
    return Regex(std::make_shared<const Node>(
        Node{Kind::Concat, '\0', std::move(lhs.node_), std::move(rhs.node_)}));
}

Regex Regex::star(Regex inner) {
    return Regex(std::make_shared<const Node>(
        Node{Kind::Star, '\0', std::move(inner.node_), nullptr}));
}

Regex::Kind Regex::kind() const { return node_->kind; }

char Regex::symbol_char() const {
    if (kind() != Kind::Symbol)
        throw std::logic_error("symbol_char on a non-symbol node");
    return node_->sym;
}

Regex Regex::left() const {
    if (kind() != Kind::Union && kind() != Kind::Concat)
        throw std::logic_error("left on a leaf or star node");
    return Regex(node_->lhs);
}

Regex Regex::right() const {
    if (kind() != Kind::Union && kind() != Kind::Concat)
        throw std::logic_error("right on a leaf or star node");
    return Regex(node_->rhs);
}

Regex Regex::inner() const {
    if (kind() != Kind::Star)
        throw std::logic_error("inner on a non-star node");
    return Regex(node_->lhs);
}

bool Regex::is_epsilon() const {
    return kind() == Kind::Star && node_->lhs->kind == Kind::Empty;
}

namespace {

int count_nodes(const Regex& e) {
    switch (e.kind()) {
    case Regex::Kind::Empty:
    case Regex::Kind::Symbol:
        return 1;
    case Regex::Kind::Star:
        return 1 + count_nodes(e.inner());
    case Regex::Kind::Union:
    case Regex::Kind::Concat:
        return 1 + count_nodes(e.left()) + count_nodes(e.right());
    }
    return 0;
}

bool structurally_equal(const Regex& a, const Regex& b) {
    if (a.kind() != b.kind())
        return false;
    switch (a.kind()) {
    case Regex::Kind::Empty:
        return true;
    case Regex::Kind::Symbol:
        return a.symbol_char() == b.symbol_char();
    case Regex::Kind::Star:
        return structurally_equal(a.inner(), b.inner());
    case Regex::Kind::Union:
    case Regex::Kind::Concat:
        return structurally_equal(a.left(), b.left()) && structurally_equal(a.right(), b.right());
    }
    return false;
}

} // namespace

int Regex::node_count() const { return count_nodes(*this); }

bool Regex::operator==(const Regex& other) const {
    if (node_ == other.node_)
        return true;
    return structurally_equal(*this, other);
}

// ---------------------------------------------------------------------------
// Parser: recursive descent over raw text, one token of lookahead.

namespace {

constexpr bool is_metacharacter(char c) {
    return c == '+' || c == '.' || c == '*' || c == '(' || c == ')' || c == '\\';
}

class Parser {
public:
    Parser(std::string_view text, const Alphabet& alphabet)
        : text_(text), alphabet_(alphabet) {}

    Regex parse() {
        skip_blanks();
        if (at_end())
            throw ParseError("empty expression", 0);
        Regex e = parse_union();
        skip_blanks();
        if (!at_end()) {
            if (peek() == ')')
                throw ParseError("unbalanced parenthesis", pos_);
            throw ParseError(std::string("unexpected '") + peek() + "'", pos_);
        }
        return e;
    }

private:
    std::string_view text_;
    const Alphabet& alphabet_;
    size_t pos_ = 0;

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    void skip_blanks() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
            ++pos_;
    }

    // True when the upcoming token can start an atom, i.e. a juxtaposed
    // concatenation operand.
    bool at_atom_start() {
        skip_blanks();
        if (at_end())
            return false;
        char c = peek();
        return c == '(' || c == '\\' || !is_metacharacter(c);
    }

    Regex parse_union() {
        Regex e = parse_concat();
        while (true) {
            skip_blanks();
            if (at_end() || peek() != '+')
                return e;
            size_t op_pos = pos_;
            ++pos_;
            if (!at_atom_start())
                throw ParseError("dangling '+'", op_pos);
            e = Regex::alt(std::move(e), parse_concat());
        }
    }

    Regex parse_concat() {
        Regex e = parse_star();
        while (true) {
            skip_blanks();
            if (!at_end() && peek() == '.') {
                size_t op_pos = pos_;
                ++pos_;
                if (!at_atom_start())
                    throw ParseError("dangling '.'", op_pos);
                e = Regex::concat(std::move(e), parse_star());
            } else if (at_atom_start()) {
                e = Regex::concat(std::move(e), parse_star());
            } else {
                return e;
            }
        }
    }

    Regex parse_star() {
        Regex e = parse_atom();
        while (true) {
            skip_blanks();
            if (at_end() || peek() != '*')
                return e;
            ++pos_;
            e = Regex::star(std::move(e));
        }
    }

    Regex parse_atom() {
        skip_blanks();
        if (at_end())
            throw ParseError("expected an atom", pos_);
        size_t start = pos_;
        char c = peek();
        if (c == '(') {
            ++pos_;
            Regex e = parse_union();
            skip_blanks();
            if (at_end() || peek() != ')')
                throw ParseError("unbalanced parenthesis", start);
            ++pos_;
            return e;
        }
        if (c == ')')
            throw ParseError("unbalanced parenthesis", start);
        if (c == '*')
            throw ParseError("dangling '*'", start);
        if (c == '+' || c == '.')
            throw ParseError(std::string("dangling '") + c + "'", start);
        if (c == '\\') {
            ++pos_;
            if (at_end())
                throw ParseError("dangling escape", start);
            char esc = text_[pos_++];
            if (esc == '0')
                return Regex::empty();
            if (esc == 'e')
                return Regex::epsilon();
            if (is_metacharacter(esc))
                return make_symbol(esc, start);
            throw ParseError(std::string("unknown escape '\\") + esc + "'", start);
        }
        ++pos_;
        return make_symbol(c, start);
    }

    Regex make_symbol(char c, size_t at) {
        if (!alphabet_.contains(c))
            throw ParseError(std::string("symbol '") + c + "' is not in the alphabet", at);
        return Regex::symbol(c);
    }
};

} // namespace

Regex parse_regex(std::string_view text, const Alphabet& alphabet) {
    return Parser(text, alphabet).parse();
}

// ---------------------------------------------------------------------------
// Printer. Precedence levels: union 0, concat 1, star 2, atom 3. A
// subexpression is parenthesized when its level is below what the context
// requires; the right operand of a binary operator requires one level more
// than the left, which pins the left-associative shape.

namespace {

int print_level(const Regex& e) {
    switch (e.kind()) {
    case Regex::Kind::Union:
        return 0;
    case Regex::Kind::Concat:
        return 1;
    case Regex::Kind::Star:
        return 2;
    default:
        return 3;
    }
}

void print_into(const Regex& e, int min_level, std::string& out) {
    if (e.is_epsilon()) {
        out += "\\e";
        return;
    }
    bool parens = print_level(e) < min_level;
    if (parens)
        out += '(';
    switch (e.kind()) {
    case Regex::Kind::Empty:
        out += "\\0";
        break;
    case Regex::Kind::Symbol: {
        char c = e.symbol_char();
        if (is_metacharacter(c))
            out += '\\';
        out += c;
        break;
    }
    case Regex::Kind::Union:
        print_into(e.left(), 0, out);
        out += " + ";
        print_into(e.right(), 1, out);
        break;
    case Regex::Kind::Concat:
        print_into(e.left(), 1, out);
        out += '.';
        print_into(e.right(), 2, out);
        break;
    case Regex::Kind::Star:
        print_into(e.inner(), 2, out);
        out += '*';
        break;
    }
    if (parens)
        out += ')';
}

} // namespace

std::string format_regex(const Regex& e) {
    std::string out;
    print_into(e, 0, out);
    return out;
}

// ---------------------------------------------------------------------------
// Bounded enumeration.

std::set<Word> enumerate_language(const Regex& e, int max_len) {
    switch (e.kind()) {
    case Regex::Kind::Empty:
        return {};
    case Regex::Kind::Symbol:
        if (max_len >= 1)
            return {Word(1, e.symbol_char())};
        return {};
    case Regex::Kind::Union: {
        std::set<Word> result = enumerate_language(e.left(), max_len);
        std::set<Word> rhs = enumerate_language(e.right(), max_len);
        result.insert(rhs.begin(), rhs.end());
        return result;
    }
    case Regex::Kind::Concat: {
        std::set<Word> lhs = enumerate_language(e.left(), max_len);
        std::set<Word> rhs = enumerate_language(e.right(), max_len);
        std::set<Word> result;
        for (const Word& u : lhs)
            for (const Word& v : rhs)
                if (static_cast<int>(u.size() + v.size()) <= max_len)
                    result.insert(u + v);
        return result;
    }
    case Regex::Kind::Star: {
        std::set<Word> base = enumerate_language(e.inner(), max_len);
        std::set<Word> result{Word{}};
        // Close under one more concatenation with the base until nothing
        // new fits under the length cap.
        bool grew = true;
        while (grew) {
            grew = false;
            std::set<Word> fresh;
            for (const Word& u : result)
                for (const Word& v : base)
                    if (static_cast<int>(u.size() + v.size()) <= max_len) {
                        Word w = u + v;
                        if (!result.count(w))
                            fresh.insert(std::move(w));
                    }
            if (!fresh.empty()) {
                result.insert(fresh.begin(), fresh.end());
                grew = true;
            }
        }
        return result;
    }
    }
    return {};
}

} // namespace nerode
