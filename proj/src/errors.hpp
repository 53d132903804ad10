#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace apievo {

enum class Errc {
    io_failure,
    syntax_error,
    unsupported_construct,
    empty_tree,
    invalid_inventory,
    format_version_mismatch,
    same_version,
    not_callable,
    chain_gap,
    source_not_in_subgraph,
    unparseable_snippet,
    rewrite_conflict,
    backend_unavailable,
    empty_generation,
    candidate_count_mismatch,
    report_passed,
    invalid_argument,
};

const char* errc_name(Errc code);

/// Domain error carrying an optional source location (line/col are 1-based,
/// byte_offset is set for file-format failures).
class Error : public std::runtime_error {
public:
    Error(Errc code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}
    Error(Errc code, std::string message, int line, int col)
        : std::runtime_error(std::move(message)), code_(code), line_(line), col_(col) {}

    Errc code() const { return code_; }
    int line() const { return line_; }
    int col() const { return col_; }
    std::size_t byte_offset() const { return byte_offset_; }
    Error& with_byte_offset(std::size_t offset) {
        byte_offset_ = offset;
        return *this;
    }

private:
    Errc code_;
    int line_ = 0;
    int col_ = 0;
    std::size_t byte_offset_ = 0;
};

}  // namespace apievo
