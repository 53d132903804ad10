#include "errors.hpp"

namespace apievo {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::io_failure: return "IoFailure";
        case Errc::syntax_error: return "SyntaxError";
        case Errc::unsupported_construct: return "UnsupportedConstruct";
        case Errc::empty_tree: return "EmptyTree";
        case Errc::invalid_inventory: return "InvalidInventory";
        case Errc::format_version_mismatch: return "FormatVersionMismatch";
        case Errc::same_version: return "SameVersion";
        case Errc::not_callable: return "NotCallable";
        case Errc::chain_gap: return "ChainGapError";
        case Errc::source_not_in_subgraph: return "SourceNotInSubgraph";
        case Errc::unparseable_snippet: return "UnparseableSnippet";
        case Errc::rewrite_conflict: return "RewriteConflict";
        case Errc::backend_unavailable: return "BackendUnavailable";
        case Errc::empty_generation: return "EmptyGeneration";
        case Errc::candidate_count_mismatch: return "CandidateCountMismatch";
        case Errc::report_passed: return "ReportPassed";
        case Errc::invalid_argument: return "InvalidArgument";
    }
    return "UnknownError";
}

}  // namespace apievo
