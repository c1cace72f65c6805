#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "scidiag/types.hpp"

namespace scidiag {

struct AlignConfig {
    std::size_t context_cap = 512;
    std::size_t analysis_cap = 256;
};

/// Smallest paragraph index referencing `label`; nullopt when never
/// referenced. Throws UnknownLabel when the label is not a diagram label.
std::optional<int> first_reference(const DocumentModel& model, const std::string& label);

/// Maximal contiguous suffix of whole paragraphs strictly before
/// `boundary_paragraph` totalling at most `context_cap` tokens, joined by
/// blank lines. When even the nearest paragraph alone is over the cap, its
/// last `context_cap` tokens are taken instead (the only truncation case).
std::pair<std::string, std::size_t> build_context(const DocumentModel& model,
                                                  int boundary_paragraph,
                                                  std::size_t context_cap = 512);

/// One Alignment per paragraph that references at least one known diagram
/// label. Paragraphs over the analysis cap, or referencing only unknown
/// labels, are skipped with a warning.
std::vector<Alignment> group_corefs(const DocumentModel& model, const AlignConfig& config = {},
                                    std::vector<ParseWarning>* warnings = nullptr);

std::string alignments_to_json(const std::vector<Alignment>& alignments);
std::vector<Alignment> alignments_from_json(const std::string& json_text);

}  // namespace scidiag
