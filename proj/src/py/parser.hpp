#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "model.hpp"
#include "py/lexer.hpp"

namespace apievo::py {

struct DefNode {
    std::string name;
    std::vector<Parameter> params;
    std::optional<std::string> return_annotation;
    std::optional<std::string> docstring;
    std::vector<std::string> decorators;
    bool is_async = false;
    int line = 0;
};

struct ClassNode {
    std::string name;
    std::optional<std::string> docstring;
    std::vector<std::string> decorators;
    int line = 0;
    std::vector<DefNode> defs;
    std::vector<ClassNode> classes;
    // (is_class, index into defs/classes) in source order
    std::vector<std::pair<bool, std::size_t>> member_order;
};

struct ImportBinding {
    enum class Kind { Module, FromItem };
    Kind kind = Kind::Module;
    std::string module;  // dotted module path; for FromItem the 'from' module
    std::string item;    // imported name (FromItem only)
    std::string alias;   // explicit 'as' alias, empty if none
    int line = 0;
    std::size_t stmt_begin = 0, stmt_end = 0;      // whole statement span
    std::size_t module_begin = 0, module_end = 0;  // dotted module text span
    std::size_t item_begin = 0, item_end = 0;      // FromItem name token span
    bool relative = false;                         // leading-dot import

    /// The name this import binds in scope: the alias if present, otherwise
    /// the item (from-import) or the root segment (module import).
    std::string bound_name() const;
};

struct CallArg {
    std::optional<std::string> keyword;
    std::size_t begin = 0, end = 0;              // full argument span
    std::size_t value_begin = 0, value_end = 0;  // value expression span
    std::size_t kw_begin = 0, kw_end = 0;        // keyword name token span
};

struct CallSite {
    std::vector<std::string> chain;  // dotted name parts of the callee
    std::size_t chain_begin = 0, chain_end = 0;
    std::size_t lparen = 0, rparen = 0;  // offsets of '(' and matching ')'
    std::vector<CallArg> args;
    int line = 0;

    std::string dotted() const;
};

struct WithBlock {
    std::vector<std::string> item_exprs;  // raw context expressions, 'as' targets stripped
    std::size_t body_begin = 0, body_end = 0;
};

enum class ParseMode {
    ApiSurface,  // library source: conditional def/class raises UnsupportedConstruct
    Snippet,     // arbitrary code fragment: any structurally valid statement
};

struct ParsedUnit {
    std::optional<std::string> module_docstring;
    std::vector<DefNode> defs;
    std::vector<ClassNode> classes;
    std::vector<std::pair<bool, std::size_t>> member_order;  // (is_class, index)
    std::vector<ImportBinding> imports;
    std::vector<CallSite> calls;
    std::vector<WithBlock> withs;
    std::vector<Token> tokens;
};

/// Parses one source unit. Throws Error(syntax_error) for malformed input
/// and, in ApiSurface mode, Error(unsupported_construct) for definitions
/// nested in conditional suites at module or class level.
ParsedUnit parse_unit(std::string_view src, ParseMode mode);

/// Decodes a string-literal token into its cooked value (prefix handling,
/// common backslash escapes; raw literals keep the body verbatim).
std::string cook_string_token(std::string_view token_text);

}  // namespace apievo::py
