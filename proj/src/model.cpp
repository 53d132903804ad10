#include "model.hpp"

#include <nlohmann/json.hpp>

#include <cctype>
#include <sstream>

namespace apievo {

using nlohmann::json;

const char* to_string(EntityKind k) {
    switch (k) {
        case EntityKind::Library: return "library";
        case EntityKind::Module: return "module";
        case EntityKind::Class: return "class";
        case EntityKind::Function: return "function";
        case EntityKind::Method: return "method";
    }
    return "?";
}

const char* to_string(ParamKind k) {
    switch (k) {
        case ParamKind::Positional: return "positional";
        case ParamKind::PositionalOrKeyword: return "positional-or-keyword";
        case ParamKind::KeywordOnly: return "keyword-only";
        case ParamKind::VarPositional: return "var-positional";
        case ParamKind::VarKeyword: return "var-keyword";
    }
    return "?";
}

const char* to_string(Binding b) {
    switch (b) {
        case Binding::None: return "";
        case Binding::StaticMethod: return "staticmethod";
        case Binding::ClassMethod: return "classmethod";
        case Binding::Property: return "property";
    }
    return "";
}

EntityKind entity_kind_from(std::string_view s) {
    if (s == "library") return EntityKind::Library;
    if (s == "module") return EntityKind::Module;
    if (s == "class") return EntityKind::Class;
    if (s == "function") return EntityKind::Function;
    if (s == "method") return EntityKind::Method;
    throw Error(Errc::invalid_argument, "unknown entity kind: " + std::string(s));
}

ParamKind param_kind_from(std::string_view s) {
    if (s == "positional") return ParamKind::Positional;
    if (s == "positional-or-keyword") return ParamKind::PositionalOrKeyword;
    if (s == "keyword-only") return ParamKind::KeywordOnly;
    if (s == "var-positional") return ParamKind::VarPositional;
    if (s == "var-keyword") return ParamKind::VarKeyword;
    throw Error(Errc::invalid_argument, "unknown parameter kind: " + std::string(s));
}

Binding binding_from(std::string_view s) {
    if (s.empty()) return Binding::None;
    if (s == "staticmethod") return Binding::StaticMethod;
    if (s == "classmethod") return Binding::ClassMethod;
    if (s == "property") return Binding::Property;
    throw Error(Errc::invalid_argument, "unknown binding: " + std::string(s));
}

const ApiEntity* ApiInventory::find(std::string_view qualified_name) const {
    auto it = entities.find(std::string(qualified_name));
    return it == entities.end() ? nullptr : &it->second;
}

const ApiEntity* ApiInventory::library() const {
    for (const auto& [qn, e] : entities) {
        if (e.kind == EntityKind::Library) return &e;
    }
    return nullptr;
}

std::vector<const ApiEntity*> ApiInventory::callables(bool include_private) const {
    std::vector<const ApiEntity*> out;
    for (const auto& [qn, e] : entities) {
        if (!e.is_callable()) continue;
        if (!include_private && e.is_private) continue;
        out.push_back(&e);
    }
    return out;
}

void ApiInventory::validate() const {
    int libraries = 0;
    for (const auto& [qn, e] : entities) {
        if (qn != e.qualified_name) {
            throw Error(Errc::invalid_inventory, "entity keyed under wrong qualified name: " + qn);
        }
        if (e.kind == EntityKind::Library) {
            ++libraries;
            continue;
        }
        const ApiEntity* mod = find(e.defined_in_module);
        if (!mod || (mod->kind != EntityKind::Module && mod->kind != EntityKind::Library)) {
            throw Error(Errc::invalid_inventory,
                        "defined_in_module '" + e.defined_in_module + "' of '" + qn +
                            "' is not a module in the inventory");
        }
        if (e.kind != EntityKind::Module) {
            // qualified name must be defined_in_module + "." + class path + name
            const std::string prefix = e.defined_in_module + ".";
            if (qn.rfind(prefix, 0) != 0 || qn.substr(qn.rfind('.') + 1) != e.name) {
                throw Error(Errc::invalid_inventory, "inconsistent qualified name: " + qn);
            }
        }
        int var_pos = 0, var_kw = 0;
        for (const auto& p : e.parameters) {
            if (p.kind == ParamKind::VarPositional) ++var_pos;
            if (p.kind == ParamKind::VarKeyword) ++var_kw;
        }
        if (var_pos > 1 || var_kw > 1) {
            throw Error(Errc::invalid_inventory, "duplicate var parameters in " + qn);
        }
    }
    if (libraries != 1) {
        throw Error(Errc::invalid_inventory,
                    "inventory must contain exactly one library entity, found " +
                        std::to_string(libraries));
    }
}

namespace {

json param_to_json(const Parameter& p) {
    json j;
    j["name"] = p.name;
    j["kind"] = to_string(p.kind);
    j["default_text"] = p.default_text ? json(*p.default_text) : json(nullptr);
    j["annotation_text"] = p.annotation_text ? json(*p.annotation_text) : json(nullptr);
    return j;
}

Parameter param_from_json(const json& j) {
    Parameter p;
    p.name = j.at("name").get<std::string>();
    p.kind = param_kind_from(j.at("kind").get<std::string>());
    if (j.contains("default_text") && !j["default_text"].is_null())
        p.default_text = j["default_text"].get<std::string>();
    if (j.contains("annotation_text") && !j["annotation_text"].is_null())
        p.annotation_text = j["annotation_text"].get<std::string>();
    return p;
}

}  // namespace

std::string ApiInventory::to_jsonl() const {
    std::ostringstream out;
    for (const auto& [qn, e] : entities) {  // std::map: already sorted by qualified name
        json j;
        j["kind"] = to_string(e.kind);
        j["name"] = e.name;
        j["qualified_name"] = e.qualified_name;
        j["defined_in_module"] = e.defined_in_module;
        json params = json::array();
        for (const auto& p : e.parameters) params.push_back(param_to_json(p));
        j["parameters"] = params;
        j["return_annotation"] = e.return_annotation ? json(*e.return_annotation) : json(nullptr);
        j["docstring"] = e.docstring ? json(*e.docstring) : json(nullptr);
        j["private"] = e.is_private;
        j["binding"] = e.binding == Binding::None ? json(nullptr) : json(to_string(e.binding));
        out << j.dump() << "\n";
    }
    return out.str();
}

ApiInventory ApiInventory::from_jsonl(std::string_view text, std::string version_label) {
    ApiInventory inv;
    inv.version_label = std::move(version_label);
    std::size_t start = 0;
    int line_no = 0;
    while (start < text.size()) {
        std::size_t nl = text.find('\n', start);
        std::string_view line = text.substr(start, nl == std::string_view::npos ? std::string_view::npos
                                                                                : nl - start);
        start = nl == std::string_view::npos ? text.size() : nl + 1;
        ++line_no;
        if (line.empty() || line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
        json j;
        try {
            j = json::parse(line);
        } catch (const json::parse_error& e) {
            throw Error(Errc::io_failure,
                        "invalid inventory line " + std::to_string(line_no) + ": " + e.what())
                .with_byte_offset(e.byte);
        }
        ApiEntity entity;
        entity.kind = entity_kind_from(j.at("kind").get<std::string>());
        entity.name = j.at("name").get<std::string>();
        entity.qualified_name = j.at("qualified_name").get<std::string>();
        entity.defined_in_module = j.at("defined_in_module").get<std::string>();
        for (const auto& pj : j.at("parameters")) entity.parameters.push_back(param_from_json(pj));
        if (!j.at("return_annotation").is_null())
            entity.return_annotation = j["return_annotation"].get<std::string>();
        if (!j.at("docstring").is_null()) entity.docstring = j["docstring"].get<std::string>();
        entity.is_private = j.value("private", false);
        if (j.contains("binding") && !j["binding"].is_null())
            entity.binding = binding_from(j["binding"].get<std::string>());
        inv.entities[entity.qualified_name] = std::move(entity);
    }
    inv.validate();
    return inv;
}

bool is_major_version_label(std::string_view label) {
    // read up to three numeric dot-separated components
    int parts[3] = {0, 0, 0};
    int idx = 0;
    std::size_t i = 0;
    while (i < label.size() && idx < 3) {
        if (!std::isdigit(static_cast<unsigned char>(label[i]))) break;
        int value = 0;
        while (i < label.size() && std::isdigit(static_cast<unsigned char>(label[i]))) {
            value = value * 10 + (label[i] - '0');
            ++i;
        }
        parts[idx++] = value;
        if (i < label.size() && label[i] == '.') ++i;
    }
    return parts[1] == 0 && parts[2] == 0;
}

}  // namespace apievo
