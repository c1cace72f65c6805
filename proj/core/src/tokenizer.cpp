#include "scidiag/tokenizer.hpp"

#include <cctype>

namespace scidiag {

namespace {

inline bool is_space_byte(unsigned char c) { return std::isspace(c) != 0; }

// Alphanumeric ASCII plus any byte >= 0x80 so multi-byte UTF-8 sequences stay
// inside one token instead of exploding into per-byte "punctuation".
inline bool is_word_byte(unsigned char c) { return std::isalnum(c) != 0 || c >= 0x80; }

}  // namespace

std::vector<TokenSpan> tokenize_spans(std::string_view text) {
    std::vector<TokenSpan> spans;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (is_space_byte(c)) {
            ++i;
            continue;
        }
        if (is_word_byte(c)) {
            std::size_t j = i + 1;
            while (j < n && is_word_byte(static_cast<unsigned char>(text[j]))) ++j;
            spans.push_back({i, j});
            i = j;
        } else {
            spans.push_back({i, i + 1});
            ++i;
        }
    }
    return spans;
}

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    for (const TokenSpan& s : tokenize_spans(text)) {
        tokens.emplace_back(text.substr(s.begin, s.end - s.begin));
    }
    return tokens;
}

std::size_t token_count(std::string_view text) { return tokenize_spans(text).size(); }

std::vector<std::string> tokenize_lower(std::string_view text) {
    std::vector<std::string> tokens = tokenize(text);
    for (std::string& t : tokens) {
        for (char& c : t) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    return tokens;
}

}  // namespace scidiag
