#include "scidiag/errors.hpp"

namespace scidiag {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::io_error: return "IoError";
        case ErrorCode::parse_error: return "ParseError";
        case ErrorCode::config_error: return "ConfigError";
        case ErrorCode::network_error: return "NetworkError";
        case ErrorCode::permanent_missing: return "PermanentMissing";
        case ErrorCode::duplicate_entry: return "DuplicateEntry";
        case ErrorCode::no_latex_source: return "NoLatexSource";
        case ErrorCode::no_main_file: return "NoMainFile";
        case ErrorCode::cyclic_include: return "CyclicInclude";
        case ErrorCode::empty_document: return "EmptyDocument";
        case ErrorCode::unknown_label: return "UnknownLabel";
        case ErrorCode::compile_failed: return "CompileFailed";
        case ErrorCode::compile_timeout: return "CompileTimeout";
        case ErrorCode::page_out_of_range: return "PageOutOfRange";
        case ErrorCode::no_table_detected: return "NoTableDetected";
        case ErrorCode::empty_outline: return "EmptyOutline";
        case ErrorCode::outline_unavailable: return "OutlineUnavailable";
        case ErrorCode::judge_format_error: return "JudgeFormatError";
        case ErrorCode::precondition: return "PreconditionViolated";
    }
    return "UnknownError";
}

}  // namespace scidiag
