#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace scidiag {

/// Citation tags (\cite, \citep, \citet, \citealp, optional [..] arguments)
/// become the literal token "<cite>". Returns nullopt when the paragraph must
/// be dropped: an inline $...$ span with interior longer than 40 characters,
/// an unterminated $, or a paragraph that is nothing but display math.
std::optional<std::string> clean_paragraph(std::string_view raw,
                                           std::vector<std::string>* warnings = nullptr);

/// Just the citation rule, used for caption text where the math drop rule
/// does not apply.
std::string replace_citation_tags(std::string_view raw);

/// Maximum interior length of an inline math span before the paragraph is dropped.
inline constexpr std::size_t kInlineMathLimit = 40;

}  // namespace scidiag
