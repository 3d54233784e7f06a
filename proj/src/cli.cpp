#include "nerode/cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"

#include "nerode/dfa.hpp"
#include "nerode/evidence.hpp"
#include "nerode/minimize.hpp"
#include "nerode/regex.hpp"
#include "nerode/zoo.hpp"

namespace nerode {
namespace {

std::string display_word(const Word& w) { return w.empty() ? "ε" : w; }

bool is_meta(char c) {
    return c == '+' || c == '.' || c == '*' || c == '(' || c == ')' || c == '\\';
}

// Symbols literally appearing in expression texts, sorted and deduplicated.
// Escaped metacharacters count as symbols; "\0" and "\e" contribute nothing.
std::string inferred_symbols(const std::vector<std::string>& texts) {
    std::set<char> symbols;
    for (const std::string& t : texts) {
        for (std::size_t i = 0; i < t.size(); ++i) {
            char c = t[i];
            if (c == '\\') {
                if (i + 1 < t.size() && is_meta(t[i + 1]))
                    symbols.insert(t[i + 1]);
                ++i;
            } else if (!is_meta(c) && std::isprint(static_cast<unsigned char>(c))
                       && !std::isspace(static_cast<unsigned char>(c))) {
                symbols.insert(c);
            }
        }
    }
    return std::string(symbols.begin(), symbols.end());
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write '" + path + "'");
    out << content;
    if (!out.flush())
        throw std::runtime_error("cannot write '" + path + "'");
}

// Language inputs for one command: positional expressions (regex text or zoo
// name) and/or --dfa file paths.
struct InputSpec {
    std::vector<std::string> texts;
    std::vector<std::string> files;
    std::string alphabet_flag;
};

// Resolves the inputs to automata, positional texts first, then --dfa files.
// Zoo names take precedence over reading a text as an expression. The
// expression alphabet is, in order: --alphabet, the alphabet of the first
// zoo input, the symbols occurring in the expression texts, "a".
std::vector<Dfa> automata(const InputSpec& in, std::size_t expected) {
    if (in.texts.size() + in.files.size() != expected) {
        throw std::invalid_argument(
            expected == 1 ? "expected exactly one input (an expression or a --dfa file)"
                          : "expected exactly two inputs (expressions and/or --dfa files)");
    }

    std::vector<std::optional<LanguageOracle>> zoo;
    std::vector<std::string> plain;
    std::optional<Alphabet> oracle_alphabet;
    for (const std::string& t : in.texts) {
        zoo.push_back(find_oracle(t));
        if (zoo.back().has_value()) {
            if (!oracle_alphabet)
                oracle_alphabet = zoo.back()->alphabet;
        } else {
            plain.push_back(t);
        }
    }

    std::optional<Alphabet> alphabet;
    if (!in.alphabet_flag.empty())
        alphabet = Alphabet(in.alphabet_flag);
    else if (oracle_alphabet)
        alphabet = oracle_alphabet;
    else if (!plain.empty()) {
        std::string symbols = inferred_symbols(plain);
        alphabet = Alphabet(symbols.empty() ? "a" : symbols);
    }

    std::vector<Dfa> result;
    for (std::size_t i = 0; i < in.texts.size(); ++i) {
        if (zoo[i].has_value()) {
            if (!zoo[i]->dfa.has_value())
                throw std::invalid_argument("oracle '" + in.texts[i]
                                            + "' has no finite automaton; only `match` and "
                                              "`evidence` accept it");
            result.push_back(*zoo[i]->dfa);
        } else {
            result.push_back(regex_to_dfa(parse_regex(in.texts[i], *alphabet), *alphabet));
        }
    }
    for (const std::string& f : in.files)
        result.push_back(dfa_from_text(read_file(f)));
    return result;
}

// Splits a command's positionals into the language input and trailing word
// arguments: the input may instead come from a --dfa file, in which case all
// positionals are words.
InputSpec peel_words(std::vector<std::string> pos, std::vector<std::string> files,
                     std::string alphabet_flag, std::size_t word_count,
                     std::vector<Word>& words_out) {
    std::size_t given = pos.size() + files.size();
    if (given != word_count + 1)
        throw std::invalid_argument("expected one input (an expression or a --dfa file) plus "
                                    + std::to_string(word_count)
                                    + (word_count == 1 ? " word" : " words"));
    if (pos.size() < word_count)
        throw std::invalid_argument("word arguments must be positional");
    words_out.assign(pos.end() - static_cast<std::ptrdiff_t>(word_count), pos.end());
    pos.erase(pos.end() - static_cast<std::ptrdiff_t>(word_count), pos.end());
    return InputSpec{std::move(pos), std::move(files), std::move(alphabet_flag)};
}

int cmd_state_report(const InputSpec& in, const std::string& out_path,
                     const std::string& dot_path, std::ostream& out) {
    Dfa m = minimize(automata(in, 1).front());
    out << "states: " << m.state_count() << "\n";
    if (!out_path.empty())
        write_file(out_path, to_text(m));
    if (!dot_path.empty())
        write_file(dot_path, to_dot(m));
    return 0;
}

int cmd_match(const InputSpec& in, const Word& word, std::ostream& out) {
    bool member;
    std::optional<LanguageOracle> o;
    if (in.files.empty() && in.texts.size() == 1)
        o = find_oracle(in.texts.front());
    if (o.has_value())
        member = o->member(word);
    else
        member = automata(in, 1).front().accepts(word);
    out << (member ? "member" : "non-member") << "\n";
    return member ? 0 : 1;
}

int cmd_equiv(const InputSpec& in, std::ostream& out) {
    std::vector<Dfa> ms = automata(in, 2);
    if (ms[0].alphabet() != ms[1].alphabet())
        throw std::invalid_argument("inputs use different alphabets ('"
                                    + ms[0].alphabet().symbols() + "' vs '"
                                    + ms[1].alphabet().symbols() + "'); pass --alphabet");
    std::optional<Word> witness = counterexample(ms[0], ms[1]);
    if (!witness.has_value()) {
        out << "equivalent\n";
        return 0;
    }
    out << "inequivalent: " << display_word(*witness) << "\n";
    return 1;
}

int cmd_classes(const InputSpec& in, std::ostream& out) {
    Dfa m = minimize(automata(in, 1).front());
    std::vector<Word> reps;
    for (const std::optional<Word>& w : state_access_words(m))
        reps.push_back(*w); // minimized automata have no unreachable states
    std::sort(reps.begin(), reps.end(), [](const Word& x, const Word& y) {
        return x.size() != y.size() ? x.size() < y.size() : x < y;
    });
    out << "classes: " << m.state_count() << "\n";
    for (const Word& w : reps)
        out << display_word(w) << "\n";
    return 0;
}

int cmd_distinguish(const InputSpec& in, const Word& x, const Word& y, std::ostream& out) {
    Dfa m = automata(in, 1).front();
    std::optional<Word> z = distinguishing_extension(m, x, y);
    out << (z.has_value() ? display_word(*z) : "equivalent") << "\n";
    return 0;
}

int cmd_evidence(const std::string& name, const std::vector<int>& horizons, bool csv,
                 std::ostream& out) {
    std::optional<LanguageOracle> o = find_oracle(name);
    if (!o.has_value())
        throw std::invalid_argument("unknown oracle '" + name + "'");
    EvidenceReport r = class_count_series(*o, horizons);
    out << (csv ? r.to_csv() : r.to_text());
    return 0;
}

int cmd_primes_demo(int k, int max_k, std::ostream& out) {
    if (k < 1 || k > max_k)
        throw std::invalid_argument("k must be between 1 and " + std::to_string(max_k)
                                    + " (raise --max-k to go further)");
    out << primes_demo_report(primes_demo(k));
    return 0;
}

int cmd_dot(const InputSpec& in, const std::string& out_path, std::ostream& out) {
    // File inputs are rendered exactly as stored; expressions are compiled
    // and minimized first so the picture is the canonical machine.
    std::string dot;
    if (!in.files.empty())
        dot = to_dot(automata(in, 1).front());
    else
        dot = to_dot(minimize(automata(in, 1).front()));
    if (!out_path.empty())
        write_file(out_path, dot);
    else
        out << dot;
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"regular-language workbench: expressions, automata, equivalence classes, "
                 "and non-regularity evidence"};
    app.name("nerode");
    app.require_subcommand(1);

    // Zoo names (Ln:<n>, len-mod:<m>:<r>, ex1, ex2, pow2, fib, prime-len,
    // xi-ne-pm1) are accepted anywhere an expression is and take precedence
    // over reading the text as an expression.
    const char* expr_help = "expression text or zoo name";
    const char* alphabet_help =
        "expression alphabet (default: symbols occurring in the expressions)";
    const char* dfa_help = "read an automaton from a file instead";

    std::vector<std::string> compile_pos, compile_files;
    std::string compile_alphabet, compile_out, compile_dot;
    CLI::App* compile = app.add_subcommand(
        "compile", "compile an expression to its minimal automaton and print the state count");
    compile->add_option("input", compile_pos, expr_help);
    compile->add_option("--dfa", compile_files, dfa_help);
    compile->add_option("--alphabet", compile_alphabet, alphabet_help);
    compile->add_option("--out", compile_out, "write the automaton in text format to this path");
    compile->add_option("--dot", compile_dot, "write Graphviz output to this path");

    std::vector<std::string> min_pos, min_files;
    std::string min_alphabet, min_out, min_dot;
    CLI::App* min = app.add_subcommand("min", "minimize an automaton and print the state count");
    min->add_option("input", min_pos, expr_help);
    min->add_option("--dfa", min_files, dfa_help);
    min->add_option("--alphabet", min_alphabet, alphabet_help);
    min->add_option("--out", min_out, "write the minimized automaton to this path");
    min->add_option("--dot", min_dot, "write Graphviz output to this path");

    std::vector<std::string> match_pos, match_files;
    std::string match_alphabet;
    CLI::App* match = app.add_subcommand("match", "test whether a word is in the language");
    match->add_option("input-and-word", match_pos,
                      "expression or zoo name, then the word (use \"\" for the empty word)");
    match->add_option("--dfa", match_files, dfa_help);
    match->add_option("--alphabet", match_alphabet, alphabet_help);

    std::vector<std::string> equiv_pos, equiv_files;
    std::string equiv_alphabet;
    CLI::App* equiv = app.add_subcommand(
        "equiv", "test two languages for equality; prints the shortest witness if they differ");
    equiv->add_option("inputs", equiv_pos, expr_help);
    equiv->add_option("--dfa", equiv_files, "read automata from files");
    equiv->add_option("--alphabet", equiv_alphabet, alphabet_help);

    std::vector<std::string> classes_pos, classes_files;
    std::string classes_alphabet;
    CLI::App* classes = app.add_subcommand(
        "classes",
        "print the number of equivalence classes and one shortest representative per class");
    classes->add_option("input", classes_pos, expr_help);
    classes->add_option("--dfa", classes_files, dfa_help);
    classes->add_option("--alphabet", classes_alphabet, alphabet_help);

    std::vector<std::string> dist_pos, dist_files;
    std::string dist_alphabet;
    CLI::App* dist = app.add_subcommand(
        "distinguish", "print the shortest extension separating two words, or \"equivalent\"");
    dist->add_option("input-and-words", dist_pos,
                     "expression or zoo name, then the two words to separate");
    dist->add_option("--dfa", dist_files, dfa_help);
    dist->add_option("--alphabet", dist_alphabet, alphabet_help);

    std::string ev_name;
    std::vector<int> ev_horizons{16, 32, 64, 128};
    bool ev_csv = false;
    CLI::App* evidence = app.add_subcommand(
        "evidence", "probe an oracle's equivalence-class counts at growing horizons");
    evidence->add_option("oracle", ev_name, "zoo oracle name")->required();
    evidence
        ->add_option("--horizons", ev_horizons, "comma-separated horizons (default 16,32,64,128)")
        ->delimiter(',');
    evidence->add_flag("--csv", ev_csv, "emit horizon,class_count rows instead of text");

    int pd_k = 4;
    int pd_max_k = 4;
    CLI::App* primes = app.add_subcommand(
        "primes-demo", "minimal automata over growing prime sets, with the infinitude argument");
    primes->add_option("k", pd_k, "number of primes (default 4)");
    primes->add_option("--max-k", pd_max_k, "upper bound on k (automata grow as the primorial)");

    std::vector<std::string> dot_pos, dot_files;
    std::string dot_alphabet, dot_out;
    CLI::App* dot = app.add_subcommand("dot", "emit a Graphviz rendering of the automaton");
    dot->add_option("input", dot_pos, expr_help);
    dot->add_option("--dfa", dot_files, "read an automaton from a file (rendered as-is)");
    dot->add_option("--alphabet", dot_alphabet, alphabet_help);
    dot->add_option("--out", dot_out, "write to this path instead of standard output");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(compile))
            return cmd_state_report({compile_pos, compile_files, compile_alphabet}, compile_out,
                                    compile_dot, out);
        if (app.got_subcommand(min))
            return cmd_state_report({min_pos, min_files, min_alphabet}, min_out, min_dot, out);
        if (app.got_subcommand(match)) {
            std::vector<Word> words;
            InputSpec in = peel_words(match_pos, match_files, match_alphabet, 1, words);
            return cmd_match(in, words[0], out);
        }
        if (app.got_subcommand(equiv))
            return cmd_equiv({equiv_pos, equiv_files, equiv_alphabet}, out);
        if (app.got_subcommand(classes))
            return cmd_classes({classes_pos, classes_files, classes_alphabet}, out);
        if (app.got_subcommand(dist)) {
            std::vector<Word> words;
            InputSpec in = peel_words(dist_pos, dist_files, dist_alphabet, 2, words);
            return cmd_distinguish(in, words[0], words[1], out);
        }
        if (app.got_subcommand(evidence))
            return cmd_evidence(ev_name, ev_horizons, ev_csv, out);
        if (app.got_subcommand(primes))
            return cmd_primes_demo(pd_k, pd_max_k, out);
        if (app.got_subcommand(dot))
            return cmd_dot({dot_pos, dot_files, dot_alphabet}, dot_out, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << " (at position " << e.pos << ")\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

} // namespace nerode
