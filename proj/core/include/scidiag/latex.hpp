#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scidiag/types.hpp"

namespace scidiag {

namespace latex {

/// Removes unescaped '%' to end of line (newline kept). A line that was all
/// comment becomes blank and therefore acts as a paragraph boundary.
std::string strip_comments(std::string_view text);

/// One past the closing brace of the group opening at `pos` (text[pos]=='{'),
/// or npos when unbalanced.
std::size_t skip_braced(std::string_view text, std::size_t pos);

struct EnvBlock {
    std::string name;
    std::size_t begin = 0;       // offset of "\begin{"
    std::size_t body_begin = 0;  // first char after "\begin{name}"
    std::size_t body_end = 0;    // offset of "\end{"
    std::size_t end = 0;         // one past "\end{name}"
    bool balanced = true;
};

/// Next figure/table-like environment at or after `from`. Unbalanced
/// environments are reported with balanced=false and end == npos.
std::optional<EnvBlock> find_env(std::string_view text,
                                 const std::vector<std::string>& names,
                                 std::size_t from);

struct CommandArg {
    std::string value;        // brace interior
    std::size_t begin = 0;    // offset of the backslash
    std::size_t end = 0;      // one past the closing brace
};

/// First occurrence of \command[opt]{arg} at or after `from`.
std::optional<CommandArg> find_command_arg(std::string_view text, std::string_view command,
                                           std::size_t from = 0);

/// All \ref/\cref/\Cref/\autoref labels in order, comma lists split,
/// duplicates removed.
std::vector<std::string> extract_ref_labels(std::string_view text);

}  // namespace latex

/// The unique .tex file containing \begin{document}; ties broken by
/// \documentclass, then lexicographic order. Throws NoMainFile.
std::filesystem::path resolve_main_file(const std::filesystem::path& source_root);

/// Recursively inlines \input/\include (comment-stripped). Throws
/// CyclicInclude naming the cycle. Missing targets inline empty + warning.
std::string inline_inputs(const std::filesystem::path& source_root,
                          const std::filesystem::path& main_file,
                          std::vector<ParseWarning>* warnings = nullptr);

/// Parses the inlined main text into the structured model: labeled
/// figure/table environments become DiagramEnvs, the remaining body splits
/// into cleaned paragraphs on blank lines. Throws EmptyDocument.
DocumentModel parse_latex(const std::string& main_text,
                          const std::filesystem::path& source_root,
                          const PaperId& paper_id);

std::string model_to_json(const DocumentModel& model);
DocumentModel model_from_json(const std::string& json_text);

}  // namespace scidiag
