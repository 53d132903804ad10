#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "model.hpp"

namespace apievo::graph {

inline constexpr int kSchemaVersion = 1;

enum class NodeKind { Library, Module, Class, Function, Method, Parameter, Literal };
enum class EdgeKind { HasModule, HasClass, HasFunction, HasMethod, HasParameter, Returns, HasDescription };

const char* to_string(NodeKind k);
const char* to_string(EdgeKind k);
NodeKind node_kind_from(std::string_view s);
EdgeKind edge_kind_from(std::string_view s);

struct EntityPayload {
    std::string qualified_name;
    std::string name;
    std::string defined_in_module;
    bool is_private = false;
    Binding binding = Binding::None;
};

struct ParamPayload {
    std::string owner;  // qualified name of the callable
    Parameter param;
    int index = 0;
};

struct LiteralPayload {
    std::string owner;
    std::string role;  // "docstring" | "return_annotation"
    std::string text;
};

struct Node {
    std::string id;
    NodeKind kind = NodeKind::Function;
    std::variant<EntityPayload, ParamPayload, LiteralPayload> payload;
};

struct Edge {
    std::string source;
    EdgeKind kind = EdgeKind::HasModule;
    std::string target;

    auto tie() const { return std::tie(source, kind, target); }
    bool operator<(const Edge& o) const { return tie() < o.tie(); }
    bool operator==(const Edge& o) const { return tie() == o.tie(); }
};

std::string entity_node_id(std::string_view version, std::string_view qualified_name);
std::string param_node_id(std::string_view version, std::string_view owner_qn,
                          std::string_view param_name);

struct VersionGraph {
    std::string version_label;
    std::map<std::string, Node> nodes;  // by node id
    std::vector<Edge> edges;            // sorted by (source, kind, target)

    const Node* find(const std::string& id) const;
    /// Entity node id for a qualified name; empty when absent.
    std::optional<std::string> lookup_node(std::string_view qualified_name) const;
};

/// Pure function of the inventory: one node per entity, parameter and
/// literal leaf (docstring / return annotation), containment edges forming
/// a forest rooted at the library node.
VersionGraph build_graph(const ApiInventory& inventory);

nlohmann::json graph_to_json(const VersionGraph& graph);
VersionGraph graph_from_json(const nlohmann::json& j);

void save_graph(const VersionGraph& graph, const std::filesystem::path& destination);
VersionGraph load_graph(const std::filesystem::path& source);

/// Rebuilds the inventory embedded in a graph (decorator text is not
/// persisted; everything that feeds diffing round-trips).
ApiInventory inventory_from_graph(const VersionGraph& graph);

}  // namespace apievo::graph
