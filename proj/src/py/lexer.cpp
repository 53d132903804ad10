#include "py/lexer.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <unordered_set>

namespace apievo::py {

namespace {

bool is_name_start(unsigned char c) {
    return std::isalpha(c) || c == '_' || c >= 0x80;
}
bool is_name_cont(unsigned char c) {
    return std::isalnum(c) || c == '_' || c >= 0x80;
}
bool is_string_prefix(std::string_view s) {
    if (s.empty() || s.size() > 2) return false;
    for (char c : s) {
        char l = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        if (l != 'r' && l != 'b' && l != 'f' && l != 'u') return false;
    }
    return true;
}

const std::array<std::string_view, 5> kOps3 = {"**=", "//=", ">>=", "<<=", "..."};
const std::array<std::string_view, 19> kOps2 = {"**", "//", "<<", ">>", "<=", ">=", "==",
                                                "!=", "->", ":=", "+=", "-=", "*=", "/=",
                                                "%=", "@=", "&=", "|=", "^="};
const std::string_view kOps1 = "+-*/%@&|^~<>=()[]{},:.;";

struct Lexer {
    std::string_view src;
    std::size_t pos = 0;
    int line = 1;
    int col = 1;
    bool strict;  // indentation tracking + throwing
    std::vector<Token> out;
    std::vector<int> indents{0};
    int bracket_depth = 0;
    bool line_has_tokens = false;

    explicit Lexer(std::string_view s, bool strict_mode) : src(s), strict(strict_mode) {
        // UTF-8 BOM
        if (src.size() >= 3 && src.substr(0, 3) == "\xEF\xBB\xBF") pos = 3;
    }

    [[noreturn]] void fail(const std::string& msg, int l, int c) {
        throw Error(Errc::syntax_error, msg, l, c);
    }

    char peek(std::size_t ahead = 0) const {
        return pos + ahead < src.size() ? src[pos + ahead] : '\0';
    }
    bool eof() const { return pos >= src.size(); }

    void advance() {
        if (eof()) return;
        if (src[pos] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++pos;
    }

    void push(TokType t, std::size_t begin, int tline, int tcol) {
        out.push_back({t, std::string(src.substr(begin, pos - begin)), tline, tcol, begin, pos});
        if (t != TokType::Newline) line_has_tokens = true;
    }

    void emit_newline() {
        if (!out.empty() && out.back().type != TokType::Newline) {
            out.push_back({TokType::Newline, "\n", line, col, pos, pos});
        }
        line_has_tokens = false;
    }

    // Measures indentation at the current position (start of a physical line).
    // Returns -1 for blank / comment-only lines, which are skipped entirely.
    int measure_indent() {
        int width = 0;
        std::size_t p = pos;
        while (p < src.size()) {
            char c = src[p];
            if (c == ' ') {
                ++width;
            } else if (c == '\t') {
                width = (width / 8 + 1) * 8;
            } else {
                break;
            }
            ++p;
        }
        if (p >= src.size()) return -1;
        if (src[p] == '\n' || src[p] == '\r' || src[p] == '#') return -1;
        return width;
    }

    void handle_indent(int width) {
        if (width > indents.back()) {
            indents.push_back(width);
            out.push_back({TokType::Indent, "", line, 1, pos, pos});
        } else {
            while (width < indents.back()) {
                indents.pop_back();
                out.push_back({TokType::Dedent, "", line, 1, pos, pos});
            }
            if (width != indents.back()) {
                if (strict) fail("unindent does not match any outer indentation level", line, 1);
                indents.push_back(width);  // lenient: adopt the stray level
            }
        }
    }

    void scan_string(std::size_t token_begin, int tline, int tcol) {
        // pos sits on the opening quote; prefix (if any) already consumed.
        std::string_view prefix = src.substr(token_begin, pos - token_begin);
        bool raw = prefix.find('r') != std::string_view::npos ||
                   prefix.find('R') != std::string_view::npos;
        char quote = peek();
        advance();
        bool triple = peek() == quote && peek(1) == quote;
        if (triple) {
            advance();
            advance();
        }
        while (true) {
            if (eof()) {
                if (strict) fail("unterminated string literal", tline, tcol);
                break;
            }
            char c = peek();
            if (!raw && c == '\\') {
                advance();
                if (!eof()) advance();
                continue;
            }
            if (raw && c == '\\') {
                // a backslash never ends a raw literal, but still escapes the quote
                advance();
                if (!eof()) advance();
                continue;
            }
            if (c == quote) {
                if (!triple) {
                    advance();
                    break;
                }
                if (peek(1) == quote && peek(2) == quote) {
                    advance();
                    advance();
                    advance();
                    break;
                }
                advance();
                continue;
            }
            if (c == '\n' && !triple) {
                if (strict) fail("unterminated string literal", tline, tcol);
                break;  // lenient: close at end of line
            }
            advance();
        }
        push(TokType::String, token_begin, tline, tcol);
    }

    void scan_number(std::size_t begin, int tline, int tcol) {
        bool hex = peek() == '0' && (peek(1) == 'x' || peek(1) == 'X');
        while (!eof()) {
            char c = peek();
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.') {
                char prev = src[pos - 1];
                advance();
                (void)prev;
                continue;
            }
            if ((c == '+' || c == '-') && !hex && pos > begin) {
                char prev = static_cast<char>(std::tolower(static_cast<unsigned char>(src[pos - 1])));
                if (prev == 'e') {
                    advance();
                    continue;
                }
            }
            break;
        }
        push(TokType::Number, begin, tline, tcol);
    }

    void run() {
        bool at_line_start = true;
        while (!eof()) {
            if (at_line_start && bracket_depth == 0) {
                int width = measure_indent();
                if (width < 0) {
                    // blank or comment-only line: consume it without tokens
                    while (!eof() && peek() != '\n') advance();
                    if (!eof()) advance();
                    continue;
                }
                if (strict) handle_indent(width);
                while (!eof() && (peek() == ' ' || peek() == '\t')) advance();
                at_line_start = false;
                continue;
            }
            char c = peek();
            if (c == '\r') {
                advance();
                continue;
            }
            if (c == '\n') {
                advance();
                if (bracket_depth == 0) {
                    if (line_has_tokens) emit_newline();
                    at_line_start = true;
                }
                continue;
            }
            if (c == ' ' || c == '\t') {
                advance();
                continue;
            }
            if (c == '#') {
                while (!eof() && peek() != '\n') advance();
                continue;
            }
            if (c == '\\' && peek(1) == '\n') {
                advance();
                advance();
                continue;  // explicit line continuation
            }
            if (c == '\\' && peek(1) == '\r' && peek(2) == '\n') {
                advance();
                advance();
                advance();
                continue;
            }

            std::size_t begin = pos;
            int tline = line, tcol = col;

            if (is_name_start(static_cast<unsigned char>(c))) {
                while (!eof() && is_name_cont(static_cast<unsigned char>(peek()))) advance();
                std::string_view word = src.substr(begin, pos - begin);
                if (is_string_prefix(word) && (peek() == '"' || peek() == '\'')) {
                    scan_string(begin, tline, tcol);
                } else {
                    push(TokType::Name, begin, tline, tcol);
                }
                continue;
            }
            if (c == '"' || c == '\'') {
                scan_string(begin, tline, tcol);
                continue;
            }
            if (std::isdigit(static_cast<unsigned char>(c)) ||
                (c == '.' && std::isdigit(static_cast<unsigned char>(peek(1))))) {
                scan_number(begin, tline, tcol);
                continue;
            }

            // operators, longest match first
            std::string_view rest = src.substr(pos);
            auto try_ops = [&](auto& table) -> bool {
                for (std::string_view op : table) {
                    if (rest.substr(0, op.size()) == op) {
                        for (std::size_t i = 0; i < op.size(); ++i) advance();
                        push(TokType::Op, begin, tline, tcol);
                        return true;
                    }
                }
                return false;
            };
            if (try_ops(kOps3) || try_ops(kOps2)) continue;
            if (kOps1.find(c) != std::string_view::npos) {
                if (c == '(' || c == '[' || c == '{') ++bracket_depth;
                if (c == ')' || c == ']' || c == '}') bracket_depth = std::max(0, bracket_depth - 1);
                advance();
                push(TokType::Op, begin, tline, tcol);
                continue;
            }
            if (c == '!') {
                // bare '!' only appears in '!=' which kOps2 already matched
                if (strict) fail("unexpected character '!'", tline, tcol);
                advance();
                continue;
            }
            if (strict) fail(std::string("unexpected character '") + c + "'", tline, tcol);
            advance();
        }
        if (line_has_tokens) emit_newline();
        if (strict) {
            while (indents.size() > 1) {
                indents.pop_back();
                out.push_back({TokType::Dedent, "", line, col, pos, pos});
            }
        }
        out.push_back({TokType::End, "", line, col, pos, pos});
    }
};

const std::unordered_set<std::string_view> kKeywords = {
    "False",  "None",   "True",    "and",   "as",     "assert", "async",  "await",
    "break",  "class",  "continue", "def",  "del",    "elif",   "else",   "except",
    "finally", "for",   "from",    "global", "if",    "import", "in",     "is",
    "lambda", "nonlocal", "not",   "or",    "pass",   "raise",  "return", "try",
    "while",  "with",   "yield"};

}  // namespace

std::vector<Token> tokenize(std::string_view src) {
    Lexer lex(src, /*strict=*/true);
    lex.run();
    return std::move(lex.out);
}

std::vector<Token> tokenize_lenient(std::string_view src) {
    Lexer lex(src, /*strict=*/false);
    lex.run();
    return std::move(lex.out);
}

bool is_keyword(std::string_view name) {
    return kKeywords.count(name) > 0;
}

}  // namespace apievo::py
