#include "py/render.hpp"

#include <algorithm>
#include <cctype>

namespace apievo::py {

namespace {

bool is_closer(const Token& t) {
    return t.is_op(")") || t.is_op("]") || t.is_op("}");
}

}  // namespace

std::string canonical_string_token(std::string_view text) {
    std::size_t q = text.find_first_of("\"'");
    if (q == std::string_view::npos) return std::string(text);
    std::string prefix;
    for (char c : text.substr(0, q)) {
        char l = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        if (l != 'u') prefix += l;
    }
    char quote = text[q];
    bool triple = text.size() >= q + 6 && text[q + 1] == quote && text[q + 2] == quote;
    std::size_t body_begin = q + (triple ? 3 : 1);
    std::size_t body_end = text.size();
    std::size_t closer = triple ? 3 : 1;
    if (text.size() >= body_begin + closer) {
        // tolerate unterminated literals from the lenient scanner
        bool terminated = true;
        for (std::size_t k = 0; k < closer; ++k) {
            if (text[text.size() - 1 - k] != quote) terminated = false;
        }
        if (terminated && text.size() - closer >= body_begin) body_end = text.size() - closer;
    }
    std::string_view body = text.substr(body_begin, body_end - body_begin);
    bool simple = body.find('\'') == std::string_view::npos &&
                  body.find('\\') == std::string_view::npos;
    std::string out = prefix;
    std::string q3(triple ? 3 : 1, simple ? '\'' : quote);
    out += q3;
    out += body;
    out += q3;
    return out;
}

std::string render_normalized(const std::vector<Token>& tokens) {
    std::string out;
    int level = 0;
    bool at_line_start = true;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        const Token& t = tokens[i];
        switch (t.type) {
            case TokType::Indent:
                ++level;
                continue;
            case TokType::Dedent:
                level = std::max(0, level - 1);
                continue;
            case TokType::Newline:
                if (!at_line_start) out += '\n';
                at_line_start = true;
                continue;
            case TokType::End:
                continue;
            default:
                break;
        }
        if (t.is_op(",") && i + 1 < tokens.size() && is_closer(tokens[i + 1])) {
            continue;  // trailing comma
        }
        if (at_line_start) {
            out.append(static_cast<std::size_t>(level) * 4, ' ');
            at_line_start = false;
        } else {
            out += ' ';
        }
        if (t.type == TokType::String) {
            out += canonical_string_token(t.text);
        } else {
            out += t.text;
        }
    }
    if (!out.empty() && out.back() != '\n') out += '\n';
    return out;
}

std::string normalize_source(std::string_view text) {
    try {
        return render_normalized(tokenize(text));
    } catch (const Error&) {
        return render_normalized(tokenize_lenient(text));
    }
}

std::string normalize_expr(std::string_view text) {
    auto tokens = tokenize_lenient(text);
    std::string out;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        const Token& t = tokens[i];
        if (t.type == TokType::Newline || t.type == TokType::End || t.type == TokType::Indent ||
            t.type == TokType::Dedent) {
            continue;
        }
        if (t.is_op(",") && i + 1 < tokens.size() && is_closer(tokens[i + 1])) continue;
        if (!out.empty()) out += ' ';
        out += t.type == TokType::String ? canonical_string_token(t.text) : t.text;
    }
    return out;
}

}  // namespace apievo::py
