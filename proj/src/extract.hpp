#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "model.hpp"

namespace apievo::extract {

/// Parses one source unit into its API entities: the module entity first,
/// then every top-level and class-nested definition in source order.
/// Functions nested inside function bodies are excluded. Throws
/// Error(syntax_error) or Error(unsupported_construct).
std::vector<ApiEntity> parse_source_unit(std::string_view source_text,
                                         const std::string& module_qualified_name);

struct FileIssue {
    std::string path;
    Errc code = Errc::syntax_error;
    std::string message;
    int line = 0;
    int col = 0;
};

struct ExtractionReport {
    ApiInventory inventory;
    std::vector<FileIssue> issues;      // per-file errors; extraction continued
    std::vector<std::string> warnings;  // shadowed definitions etc.
};

/// Builds the inventory for a whole source tree. Module names derive from
/// relative paths (strip .py, path separators to dots, drop a trailing
/// __init__ segment). Files are processed in sorted path order so the
/// result is byte-identical regardless of input ordering. Throws
/// Error(empty_tree) when the tree has no files.
ExtractionReport extract_inventory(const SourceTree& tree);

/// Collects every .py file under root (sorted relative paths) and extracts.
ExtractionReport extract_directory(const std::filesystem::path& root,
                                   const std::string& version_label);

/// Module name for a relative source path ("acme/io.py" -> "acme.io").
std::string module_name_for_path(std::string_view relative_path);

}  // namespace apievo::extract
