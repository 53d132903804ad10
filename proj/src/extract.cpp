#include "extract.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "py/parser.hpp"

namespace apievo::extract {

namespace fs = std::filesystem;

namespace {

bool name_is_private(std::string_view name) {
    return !name.empty() && name[0] == '_';
}

Binding binding_from_decorators(const std::vector<std::string>& decorators) {
    for (const auto& d : decorators) {
        if (d == "staticmethod") return Binding::StaticMethod;
        if (d == "classmethod") return Binding::ClassMethod;
        if (d == "property") return Binding::Property;
    }
    return Binding::None;
}

void emit_def(const py::DefNode& def, const std::string& module_name,
              const std::string& scope_qualified, bool in_class, bool scope_private,
              std::vector<ApiEntity>& out) {
    ApiEntity e;
    e.kind = in_class ? EntityKind::Method : EntityKind::Function;
    e.name = def.name;
    e.qualified_name = scope_qualified + "." + def.name;
    e.defined_in_module = module_name;
    e.parameters = def.params;
    e.return_annotation = def.return_annotation;
    e.docstring = def.docstring;
    e.decorators = def.decorators;
    e.is_private = scope_private || name_is_private(def.name);
    if (in_class) e.binding = binding_from_decorators(def.decorators);
    out.push_back(std::move(e));
}

void emit_class(const py::ClassNode& cls, const std::string& module_name,
                const std::string& scope_qualified, bool scope_private,
                std::vector<ApiEntity>& out) {
    ApiEntity e;
    e.kind = EntityKind::Class;
    e.name = cls.name;
    e.qualified_name = scope_qualified + "." + cls.name;
    e.defined_in_module = module_name;
    e.docstring = cls.docstring;
    e.decorators = cls.decorators;
    e.is_private = scope_private || name_is_private(cls.name);
    bool member_private = e.is_private;
    std::string member_scope = e.qualified_name;
    out.push_back(std::move(e));
    for (const auto& [is_class, idx] : cls.member_order) {
        if (is_class) {
            emit_class(cls.classes[idx], module_name, member_scope, member_private, out);
        } else {
            emit_def(cls.defs[idx], module_name, member_scope, true, member_private, out);
        }
    }
}

std::string library_name_for(const ApiInventory& inv, const SourceTree& tree) {
    std::set<std::string> roots;
    for (const auto& [qn, e] : inv.entities) {
        if (e.kind != EntityKind::Module) continue;
        roots.insert(qn.substr(0, qn.find('.')));
    }
    if (roots.size() == 1) return *roots.begin();
    fs::path root(tree.root_path);
    std::string stem = root.filename().string();
    if (stem.empty() || stem == "." || stem == "..") stem = root.parent_path().filename().string();
    if (!stem.empty()) return stem;
    return roots.empty() ? std::string("library") : *roots.begin();
}

}  // namespace

std::string module_name_for_path(std::string_view relative_path) {
    std::string p(relative_path);
    std::replace(p.begin(), p.end(), '\\', '/');
    if (p.size() > 3 && p.substr(p.size() - 3) == ".py") p.resize(p.size() - 3);
    std::replace(p.begin(), p.end(), '/', '.');
    const std::string init = "__init__";
    if (p == init) return "";
    if (p.size() > init.size() + 1 && p.compare(p.size() - init.size() - 1, init.size() + 1,
                                                "." + init) == 0) {
        p.resize(p.size() - init.size() - 1);
    }
    return p;
}

std::vector<ApiEntity> parse_source_unit(std::string_view source_text,
                                         const std::string& module_qualified_name) {
    py::ParsedUnit unit = py::parse_unit(source_text, py::ParseMode::ApiSurface);

    std::vector<ApiEntity> out;
    ApiEntity module;
    module.kind = EntityKind::Module;
    module.name = module_qualified_name.substr(module_qualified_name.rfind('.') + 1);
    module.qualified_name = module_qualified_name;
    module.defined_in_module = module_qualified_name;
    module.docstring = unit.module_docstring;
    module.is_private = false;
    for (std::size_t pos = 0; pos < module_qualified_name.size();) {
        std::size_t dot = module_qualified_name.find('.', pos);
        std::string_view seg(module_qualified_name.data() + pos,
                             (dot == std::string::npos ? module_qualified_name.size() : dot) - pos);
        if (name_is_private(seg)) module.is_private = true;
        if (dot == std::string::npos) break;
        pos = dot + 1;
    }
    bool module_private = module.is_private;
    out.push_back(std::move(module));

    for (const auto& [is_class, idx] : unit.member_order) {
        if (is_class) {
            emit_class(unit.classes[idx], module_qualified_name, module_qualified_name,
                       module_private, out);
        } else {
            emit_def(unit.defs[idx], module_qualified_name, module_qualified_name, false,
                     module_private, out);
        }
    }
    return out;
}

ExtractionReport extract_inventory(const SourceTree& tree) {
    if (tree.files.empty()) {
        throw Error(Errc::empty_tree, "source tree has no files");
    }
    ExtractionReport report;
    report.inventory.version_label = tree.version_label;

    std::vector<const SourceFile*> ordered;
    ordered.reserve(tree.files.size());
    for (const auto& f : tree.files) ordered.push_back(&f);
    std::sort(ordered.begin(), ordered.end(),
              [](const SourceFile* a, const SourceFile* b) {
                  return a->relative_path < b->relative_path;
              });

    {
        std::set<std::string> seen;
        for (const auto* f : ordered) {
            if (!seen.insert(f->relative_path).second) {
                throw Error(Errc::invalid_argument,
                            "duplicate relative path in tree: " + f->relative_path);
            }
            if (f->relative_path.size() < 3 ||
                f->relative_path.substr(f->relative_path.size() - 3) != ".py") {
                throw Error(Errc::invalid_argument,
                            "not a source file: " + f->relative_path);
            }
        }
    }

    auto& entities = report.inventory.entities;
    for (const auto* file : ordered) {
        std::string module = module_name_for_path(file->relative_path);
        if (module.empty()) continue;  // bare top-level __init__.py
        std::vector<ApiEntity> batch;
        try {
            batch = parse_source_unit(file->text, module);
        } catch (const Error& e) {
            report.issues.push_back(
                {file->relative_path, e.code(), e.what(), e.line(), e.col()});
            continue;
        }
        for (auto& entity : batch) {
            auto [it, inserted] = entities.insert({entity.qualified_name, entity});
            if (!inserted) {
                report.warnings.push_back("shadowed definition: " + entity.qualified_name +
                                          " redefined in " + file->relative_path);
                it->second = std::move(entity);
            }
        }
    }

    // The root package entity doubles as the root module; when the root has
    // no module of its own it is synthesized without a docstring.
    std::string lib_name = library_name_for(report.inventory, tree);
    auto it = entities.find(lib_name);
    if (it != entities.end() && it->second.kind == EntityKind::Module) {
        it->second.kind = EntityKind::Library;
    } else if (it == entities.end()) {
        ApiEntity lib;
        lib.kind = EntityKind::Library;
        lib.name = lib_name;
        lib.qualified_name = lib_name;
        lib.defined_in_module = lib_name;
        entities[lib_name] = std::move(lib);
    }
    return report;
}

ExtractionReport extract_directory(const fs::path& root, const std::string& version_label) {
    if (!fs::exists(root)) {
        throw Error(Errc::io_failure, "no such directory: " + root.string());
    }
    SourceTree tree;
    tree.root_path = root.string();
    tree.version_label = version_label;
    for (auto it = fs::recursive_directory_iterator(root);
         it != fs::recursive_directory_iterator(); ++it) {
        if (!it->is_regular_file() || it->path().extension() != ".py") continue;
        std::ifstream in(it->path(), std::ios::binary);
        if (!in) {
            throw Error(Errc::io_failure, "cannot read " + it->path().string());
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        tree.files.push_back({fs::relative(it->path(), root).generic_string(), buf.str()});
    }
    if (tree.files.empty()) {
        throw Error(Errc::empty_tree, "no source files under " + root.string());
    }
    return extract_inventory(tree);
}

}  // namespace apievo::extract
