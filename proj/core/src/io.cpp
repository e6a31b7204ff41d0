#include "artin/io.hpp"

#include <cctype>
#include <charconv>
#include <string>
#include <vector>

namespace artin {

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;
    int line = 1;
    int col = 1;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
    void advance() {
        if (text[pos] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++pos;
    }
    void skip_space_and_comments() {
        while (!done()) {
            char c = peek();
            if (c == '#') {
                while (!done() && peek() != '\n')
                    advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }
};

struct Token {
    std::string_view text;
    int line;
    int col;
};

long long parse_int(std::string_view s, int line, int col, const char* what) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw parse_error(std::string("malformed ") + what + " '" + std::string(s) + "'",
                          line, col);
    return value;
}

// One word token `x<i>` or `x<i>^<int>` at a known position.
void apply_word_token(std::vector<Letter>& out, std::string_view tok, int rank, int line,
                      int col, long long& budget, long long limit) {
    if (tok.size() < 2 || tok[0] != 'x')
        throw parse_error("expected word token like x2 or x2^-1, got '" + std::string(tok) + "'",
                          line, col);
    std::size_t caret = tok.find('^');
    std::string_view idx_part = tok.substr(1, caret == std::string_view::npos
                                                  ? std::string_view::npos
                                                  : caret - 1);
    long long idx = parse_int(idx_part, line, col, "generator index");
    if (idx < 1)
        throw parse_error("generator index must be >= 1", line, col);
    if (idx > rank)
        throw parse_error("generator x" + std::to_string(idx) + " outside rank " +
                              std::to_string(rank),
                          line, col);
    long long exp = 1;
    if (caret != std::string_view::npos) {
        std::string_view exp_part = tok.substr(caret + 1);
        exp = parse_int(exp_part, line, col, "exponent");
        if (exp == 0)
            throw parse_error("exponent must be nonzero", line, col);
    }
    long long count = exp < 0 ? -exp : exp;
    budget -= count;
    if (budget < 0)
        throw resource_limit_error("word letter count exceeds the limit of " +
                                   std::to_string(limit) + " letters");
    Letter l = exp > 0 ? Letter(idx) : Letter(-idx);
    for (long long t = 0; t < count; ++t)
        out.push_back(l);
}

// Parses word text starting at (line0, col0); whitespace may include
// newlines.
Word parse_word_at(std::string_view text, int rank, int line0, int col0,
                   const ParseLimits& limits) {
    std::vector<Letter> letters;
    long long budget = limits.max_word_letters;
    int line = line0, col = col0;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            if (c == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++i;
            continue;
        }
        std::size_t start = i;
        int tline = line, tcol = col;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            ++col;
        }
        apply_word_token(letters, text.substr(start, i - start), rank, tline, tcol, budget,
                         limits.max_word_letters);
    }
    return Word(rank, letters);
}

} // namespace

Word parse_word(std::string_view text, int rank, const ParseLimits& limits) {
    return parse_word_at(text, rank, 1, 1, limits);
}

std::string format_word(const Word& w) {
    std::string out;
    const auto& ls = w.letters();
    std::size_t i = 0;
    while (i < ls.size()) {
        std::size_t j = i;
        while (j < ls.size() && ls[j] == ls[i])
            ++j;
        if (!out.empty())
            out += ' ';
        long long run = static_cast<long long>(j - i);
        long long exp = ls[i] > 0 ? run : -run;
        out += 'x';
        out += std::to_string(generator_of(ls[i]));
        if (exp != 1) {
            out += '^';
            out += std::to_string(exp);
        }
        i = j;
    }
    return out;
}

namespace {

struct Line {
    std::string_view text;
    int number;
};

// Non-blank, non-comment lines with their 1-based numbers.
std::vector<Line> significant_lines(std::string_view text) {
    std::vector<Line> out;
    int number = 1;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos
                                                     ? std::string_view::npos
                                                     : eol - pos);
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first != std::string_view::npos && line[first] != '#')
            out.push_back({line, number});
        if (eol == std::string_view::npos)
            break;
        pos = eol + 1;
        ++number;
    }
    return out;
}

std::string_view trimmed(std::string_view s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string_view::npos)
        return {};
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

} // namespace

Presentation parse_presentation(std::string_view text, const ParseLimits& limits) {
    std::vector<Line> lines = significant_lines(text);
    if (lines.empty())
        throw parse_error("expected header line n=<N>", 1, 1);
    std::string_view header = trimmed(lines[0].text);
    if (!header.starts_with("n="))
        throw parse_error("expected header line n=<N>, got '" + std::string(header) + "'",
                          lines[0].number, 1);
    long long n = parse_int(header.substr(2), lines[0].number, 3, "generator count");
    if (n < 0 || n > 1'000'000)
        throw parse_error("generator count out of range", lines[0].number, 3);
    std::vector<Word> relators;
    for (long long i = 1; i <= n; ++i) {
        if (static_cast<std::size_t>(i) >= lines.size())
            throw parse_error("missing relator line r" + std::to_string(i),
                              lines.back().number, 1);
        const Line& ln = lines[static_cast<std::size_t>(i)];
        std::string_view s = ln.text;
        std::string expect = "r" + std::to_string(i) + ":";
        std::size_t start = s.find_first_not_of(" \t");
        if (start == std::string_view::npos || s.substr(start, expect.size()) != expect)
            throw parse_error("expected relator line starting with '" + expect + "'",
                              ln.number, static_cast<int>(start == std::string_view::npos
                                                              ? 1
                                                              : start + 1));
        std::size_t word_off = start + expect.size();
        relators.push_back(parse_word_at(s.substr(word_off), static_cast<int>(n), ln.number,
                                         static_cast<int>(word_off + 1), limits));
    }
    if (lines.size() > static_cast<std::size_t>(n) + 1)
        throw parse_error("unexpected extra line after relators",
                          lines[static_cast<std::size_t>(n) + 1].number, 1);
    return Presentation(static_cast<int>(n), std::move(relators));
}

std::string format_presentation(const Presentation& p) {
    std::string out = "n=" + std::to_string(p.size()) + "\n";
    for (int i = 1; i <= p.size(); ++i) {
        std::string w = format_word(p.relator(i));
        out += "r" + std::to_string(i) + ":";
        if (!w.empty()) {
            out += ' ';
            out += w;
        }
        out += '\n';
    }
    return out;
}

namespace {

Token next_token(Cursor& c) {
    c.skip_space_and_comments();
    if (c.done())
        throw parse_error("unexpected end of input", c.line, c.col);
    int line = c.line, col = c.col;
    std::size_t start = c.pos;
    char ch = c.peek();
    if (ch == '(' || ch == ')') {
        c.advance();
        return {c.text.substr(start, 1), line, col};
    }
    while (!c.done()) {
        char cc = c.peek();
        if (cc == '(' || cc == ')' || cc == '#' ||
            std::isspace(static_cast<unsigned char>(cc)))
            break;
        c.advance();
    }
    return {c.text.substr(start, c.pos - start), line, col};
}

Block parse_block(Cursor& c) {
    Token open = next_token(c);
    if (open.text != "(")
        throw parse_error("expected '('", open.line, open.col);
    Token kw = next_token(c);
    if (kw.text != "block")
        throw parse_error("expected 'block', got '" + std::string(kw.text) + "'", kw.line,
                          kw.col);
    Token range = next_token(c);
    std::size_t dots = range.text.find("..");
    if (dots == std::string_view::npos)
        throw parse_error("expected chord range like 1..3, got '" + std::string(range.text) +
                              "'",
                          range.line, range.col);
    Block b;
    b.start = static_cast<int>(
        parse_int(range.text.substr(0, dots), range.line, range.col, "chord index"));
    b.end = static_cast<int>(
        parse_int(range.text.substr(dots + 2), range.line, range.col, "chord index"));
    Token exp = next_token(c);
    if (!exp.text.starts_with("e="))
        throw parse_error("expected exponent like e=2, got '" + std::string(exp.text) + "'",
                          exp.line, exp.col);
    b.exponent = static_cast<int>(parse_int(exp.text.substr(2), exp.line, exp.col, "exponent"));
    for (;;) {
        c.skip_space_and_comments();
        if (c.done())
            throw parse_error("unclosed block", open.line, open.col);
        if (c.peek() == ')') {
            c.advance();
            return b;
        }
        if (c.peek() != '(')
            throw parse_error("expected child block or ')'", c.line, c.col);
        b.children.push_back(parse_block(c));
    }
}

} // namespace

FramedTwistTree parse_framed_tree(std::string_view text, const ParseLimits& limits) {
    FramedTwistTree ft;
    Cursor c{text};
    for (;;) {
        c.skip_space_and_comments();
        if (c.done())
            throw parse_error("expected framing line", c.line, c.col);
        if (c.peek() != '(')
            break;
        ft.tree.roots.push_back(parse_block(c));
    }
    Token kw = next_token(c);
    if (kw.text != "framing:")
        throw parse_error("expected 'framing:', got '" + std::string(kw.text) + "'", kw.line,
                          kw.col);
    long long max_chords = limits.max_word_letters;
    for (;;) {
        c.skip_space_and_comments();
        if (c.done())
            break;
        if (c.line != kw.line)
            throw parse_error("unexpected content after framing line", c.line, c.col);
        Token v = next_token(c);
        ft.framing.push_back(
            static_cast<int>(parse_int(v.text, v.line, v.col, "framing value")));
        if (static_cast<long long>(ft.framing.size()) > max_chords)
            throw resource_limit_error("framing length exceeds the limit of " +
                                       std::to_string(max_chords) + " chords");
    }
    ft.tree.chords = static_cast<int>(ft.framing.size());
    return ft;
}

namespace {

void format_block(const Block& b, std::string& out) {
    out += "(block " + std::to_string(b.start) + ".." + std::to_string(b.end) +
           " e=" + std::to_string(b.exponent);
    for (const Block& child : b.children) {
        out += ' ';
        format_block(child, out);
    }
    out += ')';
}

} // namespace

std::string format_framed_tree(const FramedTwistTree& ft) {
    std::string out;
    for (const Block& r : ft.tree.roots) {
        format_block(r, out);
        out += '\n';
    }
    out += "framing:";
    for (int m : ft.framing) {
        out += ' ';
        out += std::to_string(m);
    }
    out += '\n';
    return out;
}

std::string format_verdict(const Verdict& v) {
    std::string out = "admissible: ";
    out += v.admissible ? "yes" : "no";
    out += "\ncase: ";
    out += to_string(v.matched_case);
    out += '\n';
    if (v.witness)
        out += format_presentation(*v.witness);
    return out;
}

std::string format_abelian(const AbelianInvariants& a) {
    std::string out = "invariant_factors:";
    for (long long d : a.invariant_factors) {
        out += ' ';
        out += std::to_string(d);
    }
    out += "\nfree_rank: " + std::to_string(a.free_rank) + "\n";
    return out;
}

} // namespace artin
