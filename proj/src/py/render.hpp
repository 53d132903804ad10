#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "py/lexer.hpp"

namespace apievo::py {

/// Canonical form of a string-literal token: lowercase prefix (the legacy
/// 'u' is dropped), single-quote style when the body contains neither a
/// single quote nor a backslash, verbatim otherwise.
std::string canonical_string_token(std::string_view token_text);

/// Renders a token stream into normal form: one logical line per Newline,
/// four spaces per indent level, tokens single-space separated, canonical
/// strings, trailing commas dropped. Comments never reach the stream.
std::string render_normalized(const std::vector<Token>& tokens);

/// Normal form of a whole source text: strict tokenization when possible,
/// best-effort flat scan otherwise. Idempotent.
std::string normalize_source(std::string_view text);

/// Normal form of a single expression slice (one line, no indentation).
std::string normalize_expr(std::string_view text);

}  // namespace apievo::py
