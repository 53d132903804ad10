#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "model.hpp"

namespace apievo::diff {

inline constexpr int kSchemaVersion = 1;

enum class EvolutionKind { Add, Retain, Remove, Rename, Relocate, ParameterChange };
enum class ParamChangeKind { ParamAdded, ParamRemoved, ParamRenamed, DefaultChanged, KindChanged, Reordered };

const char* to_string(EvolutionKind k);
const char* to_string(ParamChangeKind k);
EvolutionKind evolution_kind_from(std::string_view s);
ParamChangeKind param_change_kind_from(std::string_view s);

struct ParamChange {
    ParamChangeKind change = ParamChangeKind::ParamAdded;
    std::optional<Parameter> old_param;
    std::optional<Parameter> new_param;

    bool operator==(const ParamChange&) const = default;
};

struct EvolutionEdge {
    std::optional<std::string> old_node;  // NodeId in the old version graph
    std::optional<std::string> new_node;  // NodeId in the new version graph
    EvolutionKind kind = EvolutionKind::Retain;
    double score = 1.0;
    std::vector<ParamChange> param_changes;

    bool operator==(const EvolutionEdge&) const = default;
};

struct DiffOptions {
    double relocate_threshold = 0.7;
    double rename_threshold = 0.75;
    double rename_margin = 0.1;  // lead required over the runner-up candidate
    bool include_private = false;
};

struct EvolutionGraph {
    std::string old_version;
    std::string new_version;
    std::vector<EvolutionEdge> edges;  // sorted by (old, new)

    const EvolutionEdge* edge_from(std::string_view old_qualified_name) const;
};

/// Weighted signature similarity: 0.6 * Jaccard of parameter-name sets
/// + 0.2 * [same parameter count] + 0.2 * token Jaccard of docstrings.
/// When either docstring is absent its weight moves to the parameter term.
/// Throws Error(not_callable) unless both entities are functions or methods.
double signature_similarity(const ApiEntity& f, const ApiEntity& g);

/// Signature delta between two callables, ordered by old-signature position
/// then new-signature position.
std::vector<ParamChange> detect_parameter_changes(const ApiEntity& f, const ApiEntity& g);

/// Classifies every callable of both inventories into typed evolution
/// edges: exact-name matches first, then relocate (same simple name,
/// different module), then rename (same module), then remove/add.
EvolutionGraph diff_versions(const ApiInventory& older, const ApiInventory& newer,
                             const DiffOptions& options = {});

nlohmann::json evolution_to_json(const EvolutionGraph& g);
EvolutionGraph evolution_from_json(const nlohmann::json& j);
void save_evolution(const EvolutionGraph& g, const std::filesystem::path& destination);
EvolutionGraph load_evolution(const std::filesystem::path& source);

/// Qualified name embedded in a NodeId ("1.0.0::acme.load" -> "acme.load").
std::string qualified_name_of_node(std::string_view node_id);

}  // namespace apievo::diff
