#include "graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace apievo::graph {

using nlohmann::json;

const char* to_string(NodeKind k) {
    switch (k) {
        case NodeKind::Library: return "library";
        case NodeKind::Module: return "module";
        case NodeKind::Class: return "class";
        case NodeKind::Function: return "function";
        case NodeKind::Method: return "method";
        case NodeKind::Parameter: return "parameter";
        case NodeKind::Literal: return "literal";
    }
    return "?";
}

const char* to_string(EdgeKind k) {
    switch (k) {
        case EdgeKind::HasModule: return "has_module";
        case EdgeKind::HasClass: return "has_class";
        case EdgeKind::HasFunction: return "has_function";
        case EdgeKind::HasMethod: return "has_method";
        case EdgeKind::HasParameter: return "has_parameter";
        case EdgeKind::Returns: return "returns";
        case EdgeKind::HasDescription: return "has_description";
    }
    return "?";
}

NodeKind node_kind_from(std::string_view s) {
    if (s == "library") return NodeKind::Library;
    if (s == "module") return NodeKind::Module;
    if (s == "class") return NodeKind::Class;
    if (s == "function") return NodeKind::Function;
    if (s == "method") return NodeKind::Method;
    if (s == "parameter") return NodeKind::Parameter;
    if (s == "literal") return NodeKind::Literal;
    throw Error(Errc::invalid_argument, "unknown node kind: " + std::string(s));
}

EdgeKind edge_kind_from(std::string_view s) {
    if (s == "has_module") return EdgeKind::HasModule;
    if (s == "has_class") return EdgeKind::HasClass;
    if (s == "has_function") return EdgeKind::HasFunction;
    if (s == "has_method") return EdgeKind::HasMethod;
    if (s == "has_parameter") return EdgeKind::HasParameter;
    if (s == "returns") return EdgeKind::Returns;
    if (s == "has_description") return EdgeKind::HasDescription;
    throw Error(Errc::invalid_argument, "unknown edge kind: " + std::string(s));
}

std::string entity_node_id(std::string_view version, std::string_view qn) {
    std::string id(version);
    id += "::";
    id += qn;
    return id;
}

std::string param_node_id(std::string_view version, std::string_view owner_qn,
                          std::string_view param_name) {
    std::string id = entity_node_id(version, owner_qn);
    id += "#";
    id += param_name;
    return id;
}

namespace {

// literal leaves use a '#!' marker that can never collide with a parameter
// name (parameters own the plain '#' suffix)
std::string literal_node_id(std::string_view version, std::string_view owner_qn,
                            std::string_view role) {
    std::string id = entity_node_id(version, owner_qn);
    id += "#!";
    id += role == "docstring" ? "doc" : "returns";
    return id;
}

NodeKind node_kind_of(const ApiEntity& e) {
    switch (e.kind) {
        case EntityKind::Library: return NodeKind::Library;
        case EntityKind::Module: return NodeKind::Module;
        case EntityKind::Class: return NodeKind::Class;
        case EntityKind::Function: return NodeKind::Function;
        case EntityKind::Method: return NodeKind::Method;
    }
    return NodeKind::Function;
}

EntityKind entity_kind_of(NodeKind k) {
    switch (k) {
        case NodeKind::Library: return EntityKind::Library;
        case NodeKind::Module: return EntityKind::Module;
        case NodeKind::Class: return EntityKind::Class;
        case NodeKind::Function: return EntityKind::Function;
        case NodeKind::Method: return EntityKind::Method;
        default:
            throw Error(Errc::invalid_argument, "node kind is not an entity kind");
    }
}

}  // namespace

const Node* VersionGraph::find(const std::string& id) const {
    auto it = nodes.find(id);
    return it == nodes.end() ? nullptr : &it->second;
}

std::optional<std::string> VersionGraph::lookup_node(std::string_view qualified_name) const {
    std::string id = entity_node_id(version_label, qualified_name);
    auto it = nodes.find(id);
    if (it == nodes.end()) return std::nullopt;
    if (std::holds_alternative<EntityPayload>(it->second.payload)) return id;
    return std::nullopt;
}

VersionGraph build_graph(const ApiInventory& inventory) {
    inventory.validate();
    VersionGraph g;
    g.version_label = inventory.version_label;
    const std::string& ver = inventory.version_label;

    const ApiEntity* library = inventory.library();

    for (const auto& [qn, e] : inventory.entities) {
        Node node;
        node.id = entity_node_id(ver, qn);
        node.kind = node_kind_of(e);
        node.payload = EntityPayload{e.qualified_name, e.name, e.defined_in_module, e.is_private,
                                     e.binding};
        g.nodes[node.id] = std::move(node);

        // containment edge to the parent
        if (e.kind != EntityKind::Library) {
            std::string parent_qn;
            EdgeKind kind;
            if (e.kind == EntityKind::Module) {
                // longest dotted prefix that exists, else the library root
                parent_qn = library->qualified_name;
                std::string prefix = qn;
                while (true) {
                    auto dot = prefix.rfind('.');
                    if (dot == std::string::npos) break;
                    prefix.resize(dot);
                    if (inventory.find(prefix)) {
                        parent_qn = prefix;
                        break;
                    }
                }
                kind = EdgeKind::HasModule;
            } else {
                auto dot = qn.rfind('.');
                parent_qn = qn.substr(0, dot);
                kind = e.kind == EntityKind::Class    ? EdgeKind::HasClass
                       : e.kind == EntityKind::Method ? EdgeKind::HasMethod
                                                      : EdgeKind::HasFunction;
            }
            g.edges.push_back({entity_node_id(ver, parent_qn), kind, entity_node_id(ver, qn)});
        }

        int index = 0;
        for (const auto& p : e.parameters) {
            Node pn;
            pn.id = param_node_id(ver, qn, p.name);
            pn.kind = NodeKind::Parameter;
            pn.payload = ParamPayload{qn, p, index++};
            g.edges.push_back({entity_node_id(ver, qn), EdgeKind::HasParameter, pn.id});
            g.nodes[pn.id] = std::move(pn);
        }
        if (e.docstring) {
            Node ln;
            ln.id = literal_node_id(ver, qn, "docstring");
            ln.kind = NodeKind::Literal;
            ln.payload = LiteralPayload{qn, "docstring", *e.docstring};
            g.edges.push_back({entity_node_id(ver, qn), EdgeKind::HasDescription, ln.id});
            g.nodes[ln.id] = std::move(ln);
        }
        if (e.return_annotation) {
            Node ln;
            ln.id = literal_node_id(ver, qn, "return_annotation");
            ln.kind = NodeKind::Literal;
            ln.payload = LiteralPayload{qn, "return_annotation", *e.return_annotation};
            g.edges.push_back({entity_node_id(ver, qn), EdgeKind::Returns, ln.id});
            g.nodes[ln.id] = std::move(ln);
        }
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

json graph_to_json(const VersionGraph& g) {
    json out;
    out["schema_version"] = kSchemaVersion;
    out["version_label"] = g.version_label;
    json nodes = json::array();
    for (const auto& [id, node] : g.nodes) {  // map order == sorted by id
        json n;
        n["id"] = id;
        n["kind"] = to_string(node.kind);
        if (const auto* e = std::get_if<EntityPayload>(&node.payload)) {
            n["qualified_name"] = e->qualified_name;
            n["name"] = e->name;
            n["defined_in_module"] = e->defined_in_module;
            n["private"] = e->is_private;
            n["binding"] = e->binding == Binding::None ? json(nullptr) : json(to_string(e->binding));
        } else if (const auto* p = std::get_if<ParamPayload>(&node.payload)) {
            n["owner"] = p->owner;
            n["name"] = p->param.name;
            n["param_kind"] = to_string(p->param.kind);
            n["default_text"] =
                p->param.default_text ? json(*p->param.default_text) : json(nullptr);
            n["annotation_text"] =
                p->param.annotation_text ? json(*p->param.annotation_text) : json(nullptr);
            n["index"] = p->index;
        } else if (const auto* l = std::get_if<LiteralPayload>(&node.payload)) {
            n["owner"] = l->owner;
            n["role"] = l->role;
            n["text"] = l->text;
        }
        nodes.push_back(std::move(n));
    }
    out["nodes"] = std::move(nodes);
    json edges = json::array();
    for (const auto& e : g.edges) {
        edges.push_back({{"source", e.source}, {"kind", to_string(e.kind)}, {"target", e.target}});
    }
    out["edges"] = std::move(edges);
    return out;
}

VersionGraph graph_from_json(const json& j) {
    if (!j.contains("schema_version") || !j["schema_version"].is_number_integer()) {
        throw Error(Errc::format_version_mismatch, "graph file lacks a schema_version");
    }
    int schema = j["schema_version"].get<int>();
    if (schema != kSchemaVersion) {
        throw Error(Errc::format_version_mismatch,
                    "unsupported graph schema_version " + std::to_string(schema));
    }
    VersionGraph g;
    g.version_label = j.at("version_label").get<std::string>();
    for (const auto& n : j.at("nodes")) {
        Node node;
        node.id = n.at("id").get<std::string>();
        node.kind = node_kind_from(n.at("kind").get<std::string>());
        if (node.kind == NodeKind::Parameter) {
            ParamPayload p;
            p.owner = n.at("owner").get<std::string>();
            p.param.name = n.at("name").get<std::string>();
            p.param.kind = param_kind_from(n.at("param_kind").get<std::string>());
            if (!n.at("default_text").is_null())
                p.param.default_text = n["default_text"].get<std::string>();
            if (!n.at("annotation_text").is_null())
                p.param.annotation_text = n["annotation_text"].get<std::string>();
            p.index = n.at("index").get<int>();
            node.payload = std::move(p);
        } else if (node.kind == NodeKind::Literal) {
            node.payload = LiteralPayload{n.at("owner").get<std::string>(),
                                          n.at("role").get<std::string>(),
                                          n.at("text").get<std::string>()};
        } else {
            EntityPayload e;
            e.qualified_name = n.at("qualified_name").get<std::string>();
            e.name = n.at("name").get<std::string>();
            e.defined_in_module = n.at("defined_in_module").get<std::string>();
            e.is_private = n.value("private", false);
            if (n.contains("binding") && !n["binding"].is_null())
                e.binding = binding_from(n["binding"].get<std::string>());
            node.payload = std::move(e);
        }
        g.nodes[node.id] = std::move(node);
    }
    for (const auto& e : j.at("edges")) {
        g.edges.push_back({e.at("source").get<std::string>(),
                           edge_kind_from(e.at("kind").get<std::string>()),
                           e.at("target").get<std::string>()});
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

void save_graph(const VersionGraph& g, const std::filesystem::path& destination) {
    std::ofstream out(destination, std::ios::binary);
    if (!out) {
        throw Error(Errc::io_failure, "cannot open for writing: " + destination.string());
    }
    out << graph_to_json(g).dump(2) << "\n";
    if (!out) {
        throw Error(Errc::io_failure, "write failed: " + destination.string());
    }
}

VersionGraph load_graph(const std::filesystem::path& source) {
    std::ifstream in(source, std::ios::binary);
    if (!in) {
        throw Error(Errc::io_failure, "cannot open: " + source.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    json j;
    try {
        j = json::parse(buf.str());
    } catch (const json::parse_error& e) {
        throw Error(Errc::io_failure,
                    "malformed graph file " + source.string() + " at byte " +
                        std::to_string(e.byte) + ": " + e.what())
            .with_byte_offset(e.byte);
    }
    try {
        return graph_from_json(j);
    } catch (const json::exception& e) {
        throw Error(Errc::io_failure, "graph file " + source.string() + ": " + e.what());
    }
}

ApiInventory inventory_from_graph(const VersionGraph& g) {
    ApiInventory inv;
    inv.version_label = g.version_label;
    for (const auto& [id, node] : g.nodes) {
        const auto* e = std::get_if<EntityPayload>(&node.payload);
        if (!e) continue;
        ApiEntity entity;
        entity.kind = entity_kind_of(node.kind);
        entity.name = e->name;
        entity.qualified_name = e->qualified_name;
        entity.defined_in_module = e->defined_in_module;
        entity.is_private = e->is_private;
        entity.binding = e->binding;
        inv.entities[entity.qualified_name] = std::move(entity);
    }
    for (const auto& [id, node] : g.nodes) {
        if (const auto* p = std::get_if<ParamPayload>(&node.payload)) {
            auto it = inv.entities.find(p->owner);
            if (it == inv.entities.end()) {
                throw Error(Errc::invalid_inventory, "parameter node without owner: " + id);
            }
            auto& params = it->second.parameters;
            if (params.size() <= static_cast<std::size_t>(p->index)) {
                params.resize(static_cast<std::size_t>(p->index) + 1);
            }
            params[static_cast<std::size_t>(p->index)] = p->param;
        } else if (const auto* l = std::get_if<LiteralPayload>(&node.payload)) {
            auto it = inv.entities.find(l->owner);
            if (it == inv.entities.end()) {
                throw Error(Errc::invalid_inventory, "literal node without owner: " + id);
            }
            if (l->role == "docstring") {
                it->second.docstring = l->text;
            } else {
                it->second.return_annotation = l->text;
            }
        }
    }
    inv.validate();
    return inv;
}

}  // namespace apievo::graph
