#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace apievo::py {

enum class TokType { Name, Number, String, Op, Newline, Indent, Dedent, End };

struct Token {
    TokType type = TokType::End;
    std::string text;
    int line = 1;  // 1-based
    int col = 1;   // 1-based
    std::size_t begin = 0;
    std::size_t end = 0;

    bool is(TokType t) const { return type == t; }
    bool is_op(std::string_view s) const { return type == TokType::Op && text == s; }
    bool is_name(std::string_view s) const { return type == TokType::Name && text == s; }
};

/// Tokenizes source with full indentation tracking (Indent/Dedent/Newline).
/// Newlines inside brackets and after backslash continuations are suppressed.
/// Comments and blank lines produce no tokens. Throws Error(syntax_error) on
/// unterminated strings, inconsistent dedents, or stray characters.
std::vector<Token> tokenize(std::string_view src);

/// Best-effort flat scan: no Indent/Dedent, never throws. Unterminated
/// strings run to end of line (or file for triple quotes) and unknown bytes
/// are skipped. Newline tokens are kept at bracket depth zero.
std::vector<Token> tokenize_lenient(std::string_view src);

/// True for Python keywords that can never start or continue a dotted
/// reference chain.
bool is_keyword(std::string_view name);

}  // namespace apievo::py
