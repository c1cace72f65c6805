#include "scidiag/text_clean.hpp"

#include <array>
#include <cctype>

namespace scidiag {

namespace {

bool is_escaped(std::string_view s, std::size_t pos) {
    std::size_t backslashes = 0;
    while (pos > 0 && s[pos - 1] == '\\') {
        ++backslashes;
        --pos;
    }
    return (backslashes % 2) == 1;
}

// Reads a balanced {...} group starting at pos (s[pos] == '{').
// Returns one past the closing brace, or npos when unbalanced.
std::size_t skip_braced(std::string_view s, std::size_t pos) {
    int depth = 0;
    for (std::size_t i = pos; i < s.size(); ++i) {
        if (s[i] == '\\') {
            ++i;  // skip escaped char
            continue;
        }
        if (s[i] == '{') ++depth;
        else if (s[i] == '}') {
            if (--depth == 0) return i + 1;
        }
    }
    return std::string_view::npos;
}

std::size_t skip_bracketed(std::string_view s, std::size_t pos) {
    int depth = 0;
    for (std::size_t i = pos; i < s.size(); ++i) {
        if (s[i] == '\\') {
            ++i;
            continue;
        }
        if (s[i] == '[') ++depth;
        else if (s[i] == ']') {
            if (--depth == 0) return i + 1;
        }
    }
    return std::string_view::npos;
}

// Longest-first so \citealp is not mistaken for \cite.
constexpr std::array<std::string_view, 4> kCiteCommands = {"citealp", "citep", "citet", "cite"};

std::string replace_citations(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    std::size_t i = 0;
    while (i < raw.size()) {
        if (raw[i] == '\\') {
            bool replaced = false;
            for (std::string_view cmd : kCiteCommands) {
                if (raw.compare(i + 1, cmd.size(), cmd) != 0) continue;
                std::size_t j = i + 1 + cmd.size();
                // Reject longer command names sharing the prefix (\citeauthor).
                if (j < raw.size() && (std::isalpha(static_cast<unsigned char>(raw[j])) != 0)) continue;
                if (j < raw.size() && raw[j] == '*') ++j;
                while (j < raw.size() && raw[j] == '[') {
                    std::size_t k = skip_bracketed(raw, j);
                    if (k == std::string_view::npos) break;
                    j = k;
                }
                if (j < raw.size() && raw[j] == '{') {
                    std::size_t k = skip_braced(raw, j);
                    if (k != std::string_view::npos) {
                        out += "<cite>";
                        i = k;
                        replaced = true;
                    }
                }
                break;
            }
            if (replaced) continue;
        }
        out.push_back(raw[i]);
        ++i;
    }
    return out;
}

constexpr std::array<std::string_view, 11> kDisplayEnvs = {
    "equation", "equation*", "align", "align*", "eqnarray", "eqnarray*",
    "displaymath", "gather", "gather*", "multline", "multline*"};

bool starts_display_env(std::string_view s, std::size_t pos, std::size_t* end) {
    constexpr std::string_view begin_tag = "\\begin{";
    if (s.compare(pos, begin_tag.size(), begin_tag) != 0) return false;
    std::size_t close = s.find('}', pos + begin_tag.size());
    if (close == std::string_view::npos) return false;
    std::string_view name = s.substr(pos + begin_tag.size(), close - pos - begin_tag.size());
    for (std::string_view env : kDisplayEnvs) {
        if (name == env) {
            std::string end_tag = "\\end{" + std::string(name) + "}";
            std::size_t e = s.find(end_tag, close);
            if (e == std::string_view::npos) return false;
            *end = e + end_tag.size();
            return true;
        }
    }
    return false;
}

}  // namespace

std::string replace_citation_tags(std::string_view raw) { return replace_citations(raw); }

std::optional<std::string> clean_paragraph(std::string_view raw,
                                           std::vector<std::string>* warnings) {
    std::string text = replace_citations(raw);

    // Scan math. Display math ($$..$$, \[..\], equation-like environments) is
    // kept verbatim; inline $..$ interiors over the limit drop the paragraph.
    std::string prose;  // text with display math removed, for the math-only check
    prose.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c == '\\' && i + 1 < text.size() && text[i + 1] == '[') {
            std::size_t e = text.find("\\]", i + 2);
            if (e == std::string::npos) {
                if (warnings) warnings->push_back("unterminated display math");
                return std::nullopt;
            }
            i = e + 2;
            continue;
        }
        std::size_t env_end = 0;
        if (c == '\\' && starts_display_env(text, i, &env_end)) {
            i = env_end;
            continue;
        }
        if (c == '$' && !is_escaped(text, i)) {
            if (i + 1 < text.size() && text[i + 1] == '$') {
                std::size_t e = text.find("$$", i + 2);
                if (e == std::string::npos) {
                    if (warnings) warnings->push_back("unterminated display math");
                    return std::nullopt;
                }
                i = e + 2;
                continue;
            }
            std::size_t e = i + 1;
            while (e < text.size() && !(text[e] == '$' && !is_escaped(text, e))) ++e;
            if (e >= text.size()) {
                if (warnings) warnings->push_back("unterminated inline math");
                return std::nullopt;
            }
            if (e - i - 1 > kInlineMathLimit) return std::nullopt;
            prose.append(text, i, e + 1 - i);
            i = e + 1;
            continue;
        }
        prose.push_back(c);
        ++i;
    }

    bool only_math = true;
    for (char c : prose) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            only_math = false;
            break;
        }
    }
    if (only_math) return std::nullopt;

    return text;
}

}  // namespace scidiag
