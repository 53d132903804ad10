#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace apievo {

enum class EntityKind { Library, Module, Class, Function, Method };
enum class ParamKind { Positional, PositionalOrKeyword, KeywordOnly, VarPositional, VarKeyword };
enum class Binding { None, StaticMethod, ClassMethod, Property };

const char* to_string(EntityKind k);
const char* to_string(ParamKind k);
const char* to_string(Binding b);
EntityKind entity_kind_from(std::string_view s);
ParamKind param_kind_from(std::string_view s);
Binding binding_from(std::string_view s);

struct Parameter {
    std::string name;
    ParamKind kind = ParamKind::PositionalOrKeyword;
    std::optional<std::string> default_text;
    std::optional<std::string> annotation_text;

    bool operator==(const Parameter&) const = default;
};

struct ApiEntity {
    EntityKind kind = EntityKind::Function;
    std::string name;
    std::string qualified_name;
    std::string defined_in_module;
    std::vector<Parameter> parameters;
    std::optional<std::string> return_annotation;
    std::optional<std::string> docstring;
    bool is_private = false;
    Binding binding = Binding::None;
    std::vector<std::string> decorators;  // verbatim text, without the leading '@'

    bool is_callable() const { return kind == EntityKind::Function || kind == EntityKind::Method; }
    /// The final dotted segment ("load" for "acme.utils.load").
    std::string simple_name() const { return name; }

    bool operator==(const ApiEntity&) const = default;
};

/// All API entities of one library version, keyed by qualified name. The
/// root package is stored once with kind=Library (it doubles as the root
/// module: its docstring comes from the root __init__ unit).
struct ApiInventory {
    std::string version_label;
    std::map<std::string, ApiEntity> entities;

    const ApiEntity* find(std::string_view qualified_name) const;
    const ApiEntity* library() const;
    /// Functions and methods, optionally with private entities filtered out.
    std::vector<const ApiEntity*> callables(bool include_private) const;
    /// Throws Error(invalid_inventory) when structural invariants are broken.
    void validate() const;

    /// One JSON object per line, sorted by qualified name, LF endings.
    std::string to_jsonl() const;
    static ApiInventory from_jsonl(std::string_view text, std::string version_label);

    bool operator==(const ApiInventory&) const = default;
};

struct SourceFile {
    std::string relative_path;
    std::string text;
};

struct SourceTree {
    std::string root_path;
    std::string version_label;
    std::vector<SourceFile> files;
};

/// Version labels are classified by release granularity: "major" when minor
/// and patch components are absent or zero (2.0.0, 3.0), otherwise "minor".
bool is_major_version_label(std::string_view label);

}  // namespace apievo
