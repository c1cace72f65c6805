#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace scidiag {

struct TokenSpan {
    std::size_t begin = 0;  // byte offset into the input
    std::size_t end = 0;
};

/// The one tokenizer used for every token count in the pipeline and for the
/// n-gram metrics. Tokens are maximal runs of alphanumeric bytes (UTF-8
/// continuation bytes count as word bytes); every other non-whitespace byte
/// is a single-character token.
std::vector<std::string> tokenize(std::string_view text);
std::vector<TokenSpan> tokenize_spans(std::string_view text);
std::size_t token_count(std::string_view text);

/// Lowercased tokens, for the evaluation metrics.
std::vector<std::string> tokenize_lower(std::string_view text);

}  // namespace scidiag
