#pragma once

#include <stdexcept>
#include <string>

namespace scidiag {

// Stable error codes used in exceptions and per-paper event logs.
enum class ErrorCode {
    io_error,
    parse_error,
    config_error,
    network_error,      // retryable
    permanent_missing,  // 404/410 from the archive endpoint
    duplicate_entry,
    no_latex_source,
    no_main_file,
    cyclic_include,
    empty_document,
    unknown_label,
    compile_failed,
    compile_timeout,
    page_out_of_range,
    no_table_detected,
    empty_outline,
    outline_unavailable,
    judge_format_error,
    precondition,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

}  // namespace scidiag
