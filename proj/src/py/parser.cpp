#include "py/parser.hpp"

#include <algorithm>
#include <cctype>

namespace apievo::py {

namespace {

bool bracket_open(const Token& t) {
    return t.is_op("(") || t.is_op("[") || t.is_op("{");
}
bool bracket_close(const Token& t) {
    return t.is_op(")") || t.is_op("]") || t.is_op("}");
}

std::string trim(std::string_view s) {
    std::size_t b = s.find_first_not_of(" \t\r\n\\");
    if (b == std::string_view::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n\\");
    return std::string(s.substr(b, e - b + 1));
}

struct Parser {
    std::string_view src;
    ParseMode mode;
    std::vector<Token> toks;
    std::size_t i = 0;
    ParsedUnit unit;

    Parser(std::string_view source, ParseMode m) : src(source), mode(m) {
        toks = tokenize(source);
    }

    const Token& cur() const { return toks[i]; }
    const Token& at(std::size_t k) const { return toks[std::min(k, toks.size() - 1)]; }
    const Token& peek(std::size_t ahead = 1) const { return at(i + ahead); }
    void next() {
        if (i + 1 < toks.size()) ++i;
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw Error(Errc::syntax_error, msg, cur().line, cur().col);
    }
    [[noreturn]] void unsupported(const std::string& msg, int line, int col) {
        throw Error(Errc::unsupported_construct, msg, line, col);
    }

    void expect_op(std::string_view op) {
        if (!cur().is_op(op)) fail("expected '" + std::string(op) + "'");
        next();
    }

    void skip_newline() {
        if (cur().is(TokType::Newline)) next();
    }

    // --- docstrings -------------------------------------------------------

    bool is_plain_string(const Token& t) const {
        if (!t.is(TokType::String)) return false;
        // f-strings are expressions, not docstrings
        std::size_t q = t.text.find_first_of("\"'");
        std::string_view prefix = std::string_view(t.text).substr(0, q);
        return prefix.find('f') == std::string_view::npos &&
               prefix.find('F') == std::string_view::npos;
    }

    std::optional<std::string> try_docstring() {
        if (!is_plain_string(cur())) return std::nullopt;
        // the statement must consist only of (implicitly concatenated) strings
        std::size_t j = i;
        std::string value;
        while (is_plain_string(at(j))) {
            value += cook_string_token(at(j).text);
            ++j;
        }
        if (!at(j).is(TokType::Newline) && !at(j).is(TokType::Dedent) && !at(j).is(TokType::End)) {
            return std::nullopt;  // string is part of a larger expression
        }
        i = j;
        skip_newline();
        return value;
    }

    // --- expression slices ------------------------------------------------

    // Consumes tokens until one of the stop ops appears at relative bracket
    // depth zero; commas inside a lambda header do not stop the scan.
    // Returns the [begin, end) byte span of the consumed slice.
    std::pair<std::size_t, std::size_t> consume_expr(const std::vector<std::string_view>& stops) {
        int depth = 0;
        int lambda_depth = -1;
        std::size_t begin = cur().begin;
        std::size_t end = begin;
        while (!cur().is(TokType::End)) {
            const Token& t = cur();
            if (t.is(TokType::Newline) || t.is(TokType::Indent) || t.is(TokType::Dedent)) break;
            if (depth == 0 && lambda_depth < 0) {
                bool stop = false;
                for (auto s : stops) {
                    if (t.is_op(s) || t.is_name(s)) stop = true;
                }
                if (stop) break;
            }
            if (t.is_name("lambda") && lambda_depth < 0) lambda_depth = depth;
            if (t.is_op(":") && lambda_depth == depth) lambda_depth = -1;
            if (bracket_open(t)) ++depth;
            if (bracket_close(t)) {
                if (depth == 0) break;  // closing bracket of an enclosing context
                --depth;
            }
            end = t.end;
            next();
        }
        return {begin, end};
    }

    std::string slice(std::size_t b, std::size_t e) const {
        return trim(src.substr(b, e - b));
    }

    // --- parameters -------------------------------------------------------

    std::vector<Parameter> parse_params(int def_line) {
        std::vector<Parameter> params;
        bool keyword_only = false;
        bool saw_var_kw = false;
        bool default_seen = false;
        std::size_t slash_at = std::string::npos;  // params before '/' become positional-only
        expect_op("(");
        while (!cur().is_op(")")) {
            if (cur().is(TokType::End)) fail("unterminated parameter list");
            if (cur().is_op("*")) {
                next();
                if (cur().is_op(",") || cur().is_op(")")) {
                    if (keyword_only) fail("duplicate '*' in parameter list");
                    keyword_only = true;
                } else {
                    if (!cur().is(TokType::Name)) fail("expected name after '*'");
                    Parameter p;
                    p.name = cur().text;
                    p.kind = ParamKind::VarPositional;
                    next();
                    if (cur().is_op(":")) {
                        next();
                        auto [b, e] = consume_expr({"=", ",", ")"});
                        p.annotation_text = slice(b, e);
                    }
                    if (keyword_only ||
                        std::any_of(params.begin(), params.end(), [](const Parameter& q) {
                            return q.kind == ParamKind::VarPositional;
                        })) {
                        fail("only one var-positional parameter is allowed");
                    }
                    keyword_only = true;
                    params.push_back(std::move(p));
                }
            } else if (cur().is_op("**")) {
                next();
                if (!cur().is(TokType::Name)) fail("expected name after '**'");
                if (saw_var_kw) fail("only one var-keyword parameter is allowed");
                Parameter p;
                p.name = cur().text;
                p.kind = ParamKind::VarKeyword;
                next();
                if (cur().is_op(":")) {
                    next();
                    auto [b, e] = consume_expr({"=", ",", ")"});
                    p.annotation_text = slice(b, e);
                }
                saw_var_kw = true;
                params.push_back(std::move(p));
            } else if (cur().is_op("/")) {
                if (slash_at != std::string::npos) fail("duplicate '/' in parameter list");
                slash_at = params.size();
                next();
            } else if (cur().is(TokType::Name)) {
                Parameter p;
                p.name = cur().text;
                p.kind = keyword_only ? ParamKind::KeywordOnly : ParamKind::PositionalOrKeyword;
                next();
                if (cur().is_op(":")) {
                    next();
                    auto [b, e] = consume_expr({"=", ",", ")"});
                    p.annotation_text = slice(b, e);
                }
                if (cur().is_op("=")) {
                    next();
                    auto [b, e] = consume_expr({",", ")"});
                    p.default_text = slice(b, e);
                    default_seen = true;
                } else if (!keyword_only && default_seen) {
                    throw Error(Errc::syntax_error,
                                "parameter without default follows parameter with default",
                                def_line, 1);
                }
                if (saw_var_kw) fail("parameter after var-keyword parameter");
                params.push_back(std::move(p));
            } else {
                fail("unexpected token in parameter list: '" + cur().text + "'");
            }
            if (cur().is_op(",")) {
                next();
            } else if (!cur().is_op(")")) {
                fail("expected ',' or ')' in parameter list");
            }
        }
        next();  // ')'
        if (slash_at != std::string::npos) {
            for (std::size_t k = 0; k < slash_at && k < params.size(); ++k) {
                if (params[k].kind == ParamKind::PositionalOrKeyword) {
                    params[k].kind = ParamKind::Positional;
                }
            }
        }
        return params;
    }

    // --- suite context ----------------------------------------------------

    enum class Ctx { Module, Class, Def, Conditional };

    // frames from the module outward; used to decide how a nested def/class
    // is treated (recorded / silently skipped / unsupported)
    std::vector<Ctx> ctx_stack{Ctx::Module};

    bool inside_def() const {
        return std::find(ctx_stack.begin(), ctx_stack.end(), Ctx::Def) != ctx_stack.end();
    }
    bool inside_conditional() const {
        return std::find(ctx_stack.begin(), ctx_stack.end(), Ctx::Conditional) != ctx_stack.end();
    }

    // --- statements -------------------------------------------------------

    std::vector<std::string> parse_decorators() {
        std::vector<std::string> decs;
        while (cur().is_op("@")) {
            next();
            auto [b, e] = consume_expr({});
            decs.push_back(slice(b, e));
            skip_newline();
        }
        return decs;
    }

    DefNode parse_def(std::vector<std::string> decorators, bool is_async) {
        DefNode def;
        def.decorators = std::move(decorators);
        def.is_async = is_async;
        def.line = cur().line;
        next();  // 'def'
        if (!cur().is(TokType::Name)) fail("expected function name");
        def.name = cur().text;
        next();
        def.params = parse_params(def.line);
        if (cur().is_op("->")) {
            next();
            auto [b, e] = consume_expr({":"});
            def.return_annotation = slice(b, e);
        }
        expect_op(":");
        ctx_stack.push_back(Ctx::Def);
        if (cur().is(TokType::Newline)) {
            next();
            if (cur().is(TokType::Indent)) {
                next();
                def.docstring = try_docstring();
                parse_suite_body();
            } else {
                fail("expected an indented block");
            }
        } else {
            // inline body: `def f(): "doc"` or `def f(): ...`
            def.docstring = try_docstring();
            if (!def.docstring) consume_simple_line();
            skip_newline();
        }
        ctx_stack.pop_back();
        return def;
    }

    ClassNode parse_class(std::vector<std::string> decorators) {
        ClassNode cls;
        cls.decorators = std::move(decorators);
        cls.line = cur().line;
        next();  // 'class'
        if (!cur().is(TokType::Name)) fail("expected class name");
        cls.name = cur().text;
        next();
        if (cur().is_op("(")) {
            int depth = 0;
            while (!cur().is(TokType::End)) {
                if (bracket_open(cur())) ++depth;
                if (bracket_close(cur())) {
                    --depth;
                    if (depth == 0) {
                        next();
                        break;
                    }
                }
                next();
            }
        }
        expect_op(":");
        ctx_stack.push_back(Ctx::Class);
        if (cur().is(TokType::Newline)) {
            next();
            if (cur().is(TokType::Indent)) {
                next();
                cls.docstring = try_docstring();
                parse_members(&cls);
            } else {
                fail("expected an indented block");
            }
        } else {
            cls.docstring = try_docstring();
            if (!cls.docstring) consume_simple_line();
            skip_newline();
        }
        ctx_stack.pop_back();
        return cls;
    }

    void parse_import() {
        const Token& head = cur();
        std::size_t stmt_begin = head.begin;
        if (head.is_name("import")) {
            next();
            while (true) {
                ImportBinding b;
                b.kind = ImportBinding::Kind::Module;
                b.line = head.line;
                b.stmt_begin = stmt_begin;
                b.module_begin = cur().begin;
                std::string dotted;
                while (cur().is(TokType::Name) || cur().is_op(".")) {
                    if (cur().is_name("as")) break;
                    dotted += cur().text;
                    b.module_end = cur().end;
                    next();
                }
                b.module = dotted;
                if (cur().is_name("as")) {
                    next();
                    if (!cur().is(TokType::Name)) fail("expected alias name");
                    b.alias = cur().text;
                    next();
                }
                b.stmt_end = toks[i - 1].end;
                unit.imports.push_back(b);
                if (cur().is_op(",")) {
                    next();
                    continue;
                }
                break;
            }
        } else {  // from X import ...
            next();
            std::size_t module_begin = cur().begin;
            std::size_t module_end = module_begin;
            std::string dotted;
            bool relative = false;
            while (cur().is(TokType::Name) || cur().is_op(".") || cur().is_op("...")) {
                if (cur().is_name("import")) break;
                if (cur().is_op(".") || cur().is_op("...")) relative = relative || dotted.empty();
                dotted += cur().text;
                module_end = cur().end;
                next();
            }
            if (!cur().is_name("import")) fail("expected 'import' in from-import");
            next();
            bool parenthesized = cur().is_op("(");
            if (parenthesized) next();
            if (cur().is_op("*")) {
                ImportBinding b;
                b.kind = ImportBinding::Kind::FromItem;
                b.module = dotted;
                b.item = "*";
                b.line = head.line;
                b.relative = relative;
                b.stmt_begin = stmt_begin;
                b.module_begin = module_begin;
                b.module_end = module_end;
                b.item_begin = cur().begin;
                b.item_end = cur().end;
                next();
                b.stmt_end = toks[i - 1].end;
                unit.imports.push_back(b);
            } else {
                while (cur().is(TokType::Name)) {
                    ImportBinding b;
                    b.kind = ImportBinding::Kind::FromItem;
                    b.module = dotted;
                    b.line = head.line;
                    b.relative = relative;
                    b.stmt_begin = stmt_begin;
                    b.module_begin = module_begin;
                    b.module_end = module_end;
                    b.item = cur().text;
                    b.item_begin = cur().begin;
                    b.item_end = cur().end;
                    next();
                    if (cur().is_name("as")) {
                        next();
                        if (!cur().is(TokType::Name)) fail("expected alias name");
                        b.alias = cur().text;
                        next();
                    }
                    b.stmt_end = toks[i - 1].end;
                    unit.imports.push_back(b);
                    if (cur().is_op(",")) {
                        next();
                        continue;
                    }
                    break;
                }
            }
            if (parenthesized) {
                if (!cur().is_op(")")) fail("expected ')' to close import list");
                next();
                // statement span must include the closing paren
                if (!unit.imports.empty()) {
                    for (auto it = unit.imports.rbegin();
                         it != unit.imports.rend() && it->stmt_begin == stmt_begin; ++it) {
                        it->stmt_end = toks[i - 1].end;
                    }
                }
            }
        }
        if (!cur().is(TokType::Newline) && !cur().is(TokType::End) && !cur().is_op(";")) {
            fail("unexpected token after import statement");
        }
        if (cur().is_op(";")) {
            consume_simple_line();
        }
        skip_newline();
    }

    void parse_with() {
        WithBlock block;
        next();  // 'with'
        bool outer_paren = false;
        // `with (a() as x, b() as y):` — strip the grouping parens
        if (cur().is_op("(")) {
            int depth = 0;
            std::size_t j = i;
            while (!at(j).is(TokType::End)) {
                if (bracket_open(at(j))) ++depth;
                if (bracket_close(at(j))) {
                    --depth;
                    if (depth == 0) break;
                }
                ++j;
            }
            if (at(j + 1).is_op(":")) {
                outer_paren = true;
                next();
            }
        }
        while (true) {
            auto [b, e] = consume_expr({"as", ",", ":", ")"});
            block.item_exprs.push_back(slice(b, e));
            if (cur().is_name("as")) {
                next();
                consume_expr({",", ":", ")"});
            }
            if (cur().is_op(",")) {
                next();
                continue;
            }
            break;
        }
        if (outer_paren) {
            if (!cur().is_op(")")) fail("expected ')' in with statement");
            next();
        }
        expect_op(":");
        ctx_stack.push_back(Ctx::Conditional);
        if (cur().is(TokType::Newline)) {
            next();
            if (!cur().is(TokType::Indent)) fail("expected an indented block");
            next();
            block.body_begin = cur().begin;
            parse_suite_body();
            block.body_end = i > 0 ? toks[i - 1].end : block.body_begin;
        } else {
            block.body_begin = cur().begin;
            consume_simple_line();
            block.body_end = i > 0 ? toks[i - 1].end : block.body_begin;
            skip_newline();
        }
        ctx_stack.pop_back();
        unit.withs.push_back(std::move(block));
    }

    // Consumes the rest of a simple (non-compound) logical line, tracking
    // brackets; stops before Newline/Dedent/End.
    void consume_simple_line() {
        int depth = 0;
        while (!cur().is(TokType::End)) {
            const Token& t = cur();
            if (t.is(TokType::Newline) || t.is(TokType::Dedent)) break;
            if (bracket_open(t)) ++depth;
            if (bracket_close(t)) --depth;
            next();
        }
    }

    // Generic statement: consume the logical line; when it introduces a
    // suite (trailing ':'), recurse with Conditional context.
    void parse_generic_statement() {
        int depth = 0;
        bool ends_with_colon = false;
        while (!cur().is(TokType::End)) {
            const Token& t = cur();
            if (t.is(TokType::Newline) || t.is(TokType::Dedent)) break;
            if (bracket_open(t)) ++depth;
            if (bracket_close(t)) --depth;
            if (depth == 0 && t.is_op(":")) {
                next();
                if (cur().is(TokType::Newline)) {
                    ends_with_colon = true;
                    break;
                }
                continue;  // inline suite or annotation; keep consuming
            }
            if (depth == 0 && t.is_name("lambda")) {
                // swallow the lambda header colon
                next();
                while (!cur().is(TokType::End) && !cur().is(TokType::Newline) &&
                       !(depth == 0 && cur().is_op(":"))) {
                    if (bracket_open(cur())) ++depth;
                    if (bracket_close(cur())) --depth;
                    next();
                }
                if (cur().is_op(":")) next();
                continue;
            }
            next();
        }
        skip_newline();
        if (ends_with_colon && cur().is(TokType::Indent)) {
            next();
            ctx_stack.push_back(Ctx::Conditional);
            parse_suite_body();
            ctx_stack.pop_back();
        }
    }

    // Body of a def or generic compound: statements until the matching
    // Dedent. Definitions are validated for placement but not recorded.
    void parse_suite_body() {
        while (!cur().is(TokType::Dedent) && !cur().is(TokType::End)) {
            parse_statement(nullptr);
        }
        if (cur().is(TokType::Dedent)) next();
    }

    // Class or module members: records defs/classes into `into` (class) or
    // unit top level (nullptr at module scope is handled by parse_module).
    void parse_members(ClassNode* into) {
        while (!cur().is(TokType::Dedent) && !cur().is(TokType::End)) {
            parse_statement(into);
        }
        if (cur().is(TokType::Dedent)) next();
    }

    void parse_statement(ClassNode* cls) {
        if (cur().is(TokType::Newline)) {
            next();
            return;
        }
        std::vector<std::string> decorators;
        if (cur().is_op("@")) {
            decorators = parse_decorators();
            if (!cur().is_name("def") && !cur().is_name("class") && !cur().is_name("async")) {
                fail("decorator must be followed by a definition");
            }
        }
        bool is_async = false;
        if (cur().is_name("async") && peek().is_name("def")) {
            is_async = true;
            next();
        }
        if (cur().is_name("def")) {
            handle_def(std::move(decorators), is_async, cls);
            return;
        }
        if (cur().is_name("class")) {
            handle_class(std::move(decorators), cls);
            return;
        }
        if (cur().is_name("import") || cur().is_name("from")) {
            parse_import();
            return;
        }
        if (cur().is_name("with") || (cur().is_name("async") && peek().is_name("with"))) {
            if (cur().is_name("async")) next();
            parse_with();
            return;
        }
        parse_generic_statement();
    }

    void handle_def(std::vector<std::string> decorators, bool is_async, ClassNode* cls) {
        int line = cur().line, col = cur().col;
        bool record = !inside_def() && !inside_conditional();
        if (!record && !inside_def() && inside_conditional() && mode == ParseMode::ApiSurface) {
            unsupported("conditional definition affects the API surface", line, col);
        }
        DefNode def = parse_def(std::move(decorators), is_async);
        if (!record) return;  // nested function: excluded
        if (cls) {
            cls->member_order.emplace_back(false, cls->defs.size());
            cls->defs.push_back(std::move(def));
        } else {
            unit.member_order.emplace_back(false, unit.defs.size());
            unit.defs.push_back(std::move(def));
        }
    }

    void handle_class(std::vector<std::string> decorators, ClassNode* cls) {
        int line = cur().line, col = cur().col;
        bool record = !inside_def() && !inside_conditional();
        if (!record && !inside_def() && inside_conditional() && mode == ParseMode::ApiSurface) {
            unsupported("conditional definition affects the API surface", line, col);
        }
        ClassNode node = parse_class(std::move(decorators));
        if (!record) return;
        if (cls) {
            cls->member_order.emplace_back(true, cls->classes.size());
            cls->classes.push_back(std::move(node));
        } else {
            unit.member_order.emplace_back(true, unit.classes.size());
            unit.classes.push_back(std::move(node));
        }
    }

    void parse_module() {
        unit.module_docstring = try_docstring();
        while (!cur().is(TokType::End)) {
            if (cur().is(TokType::Dedent)) {
                next();
                continue;
            }
            parse_statement(nullptr);
        }
    }

    // --- call scanning (separate pass over the token stream) --------------

    void scan_calls() {
        for (std::size_t k = 0; k + 1 < toks.size(); ++k) {
            const Token& t = toks[k];
            if (!t.is(TokType::Name) || is_keyword(t.text)) continue;
            if (k > 0) {
                const Token& prev = toks[k - 1];
                if (prev.is_op(".")) continue;  // mid-chain
            }
            std::vector<std::string> chain{t.text};
            std::size_t j = k;
            while (toks[j + 1].is_op(".") && toks[j + 2].is(TokType::Name) &&
                   !is_keyword(toks[j + 2].text)) {
                chain.push_back(toks[j + 2].text);
                j += 2;
            }
            if (!toks[j + 1].is_op("(")) continue;
            CallSite call;
            call.chain = std::move(chain);
            call.chain_begin = t.begin;
            call.chain_end = toks[j].end;
            call.line = t.line;
            call.lparen = toks[j + 1].begin;
            parse_call_args(j + 1, call);
            unit.calls.push_back(std::move(call));
        }
    }

    // tokens[open_idx] is '('; fills args and rparen.
    void parse_call_args(std::size_t open_idx, CallSite& call) {
        std::size_t j = open_idx + 1;
        int depth = 1;
        int lambda_depth = -1;
        CallArg arg;
        bool in_arg = false;
        auto flush = [&](std::size_t end_offset) {
            if (!in_arg) return;
            arg.end = end_offset;
            if (!arg.keyword) {
                arg.value_begin = arg.begin;
            }
            arg.value_end = end_offset;
            call.args.push_back(arg);
            arg = CallArg{};
            in_arg = false;
        };
        std::size_t last_end = toks[open_idx].end;
        while (!toks[j].is(TokType::End)) {
            const Token& t = toks[j];
            if (bracket_open(t)) ++depth;
            if (bracket_close(t)) {
                --depth;
                if (depth == 0) {
                    flush(last_end);
                    call.rparen = t.begin;
                    return;
                }
            }
            if (depth == 1 && lambda_depth < 0 && t.is_op(",")) {
                flush(last_end);
                ++j;
                continue;
            }
            if (t.is_name("lambda") && lambda_depth < 0) lambda_depth = depth;
            if (t.is_op(":") && lambda_depth == depth) lambda_depth = -1;
            if (!in_arg && !t.is(TokType::Newline)) {
                in_arg = true;
                arg.begin = t.begin;
                // keyword argument: NAME '=' not followed by '=' handled by
                // the lexer emitting '==' as one token
                if (depth == 1 && t.is(TokType::Name) && !is_keyword(t.text) &&
                    toks[j + 1].is_op("=")) {
                    arg.keyword = t.text;
                    arg.kw_begin = t.begin;
                    arg.kw_end = t.end;
                    arg.value_begin = toks[j + 2].begin;
                    last_end = toks[j + 1].end;
                    j += 2;
                    continue;
                }
            }
            last_end = t.end;
            ++j;
        }
        flush(last_end);
        call.rparen = toks[j].begin;
    }
};

}  // namespace

std::string ImportBinding::bound_name() const {
    if (!alias.empty()) return alias;
    if (kind == Kind::FromItem) return item;
    auto dot = module.find('.');
    return dot == std::string::npos ? module : module.substr(0, dot);
}

std::string CallSite::dotted() const {
    std::string out;
    for (std::size_t k = 0; k < chain.size(); ++k) {
        if (k) out += '.';
        out += chain[k];
    }
    return out;
}

ParsedUnit parse_unit(std::string_view src, ParseMode mode) {
    Parser p(src, mode);
    p.parse_module();
    p.scan_calls();
    p.unit.tokens = std::move(p.toks);
    return std::move(p.unit);
}

std::string cook_string_token(std::string_view text) {
    std::size_t q = text.find_first_of("\"'");
    if (q == std::string_view::npos) return std::string(text);
    std::string_view prefix = text.substr(0, q);
    bool raw = prefix.find('r') != std::string_view::npos ||
               prefix.find('R') != std::string_view::npos;
    char quote = text[q];
    std::size_t body_begin = q + 1;
    std::size_t body_end = text.size();
    if (text.size() >= q + 6 && text[q + 1] == quote && text[q + 2] == quote) {
        body_begin = q + 3;
        body_end = text.size() >= body_begin + 3 ? text.size() - 3 : body_begin;
    } else if (text.size() >= q + 2 && text.back() == quote) {
        body_end = text.size() - 1;
    }
    std::string_view body = text.substr(body_begin, body_end - body_begin);
    if (raw) return std::string(body);
    std::string out;
    out.reserve(body.size());
    for (std::size_t k = 0; k < body.size(); ++k) {
        char c = body[k];
        if (c != '\\' || k + 1 >= body.size()) {
            out += c;
            continue;
        }
        char e = body[++k];
        switch (e) {
            case 'n': out += '\n'; break;
            case 't': out += '\t'; break;
            case 'r': out += '\r'; break;
            case 'a': out += '\a'; break;
            case 'b': out += '\b'; break;
            case 'f': out += '\f'; break;
            case 'v': out += '\v'; break;
            case '0': out += '\0'; break;
            case '\\': out += '\\'; break;
            case '\'': out += '\''; break;
            case '"': out += '"'; break;
            case '\n': break;  // continuation
            case 'x': {
                if (k + 2 < body.size() && std::isxdigit(static_cast<unsigned char>(body[k + 1])) &&
                    std::isxdigit(static_cast<unsigned char>(body[k + 2]))) {
                    auto hex = [](char h) {
                        return std::isdigit(static_cast<unsigned char>(h))
                                   ? h - '0'
                                   : std::tolower(static_cast<unsigned char>(h)) - 'a' + 10;
                    };
                    out += static_cast<char>(hex(body[k + 1]) * 16 + hex(body[k + 2]));
                    k += 2;
                } else {
                    out += "\\x";
                }
                break;
            }
            default:
                out += '\\';
                out += e;
        }
    }
    return out;
}

}  // namespace apievo::py
