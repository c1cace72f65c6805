#include "scidiag/latex.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "scidiag/errors.hpp"
#include "scidiag/fsutil.hpp"
#include "scidiag/text_clean.hpp"
#include "scidiag/tokenizer.hpp"

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

namespace scidiag {

namespace latex {

std::string strip_comments(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    bool in_comment = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '\n') {
            in_comment = false;
            out.push_back(c);
            continue;
        }
        if (in_comment) continue;
        if (c == '\\' && i + 1 < text.size()) {
            out.push_back(c);
            out.push_back(text[i + 1]);
            ++i;
            continue;
        }
        if (c == '%') {
            in_comment = true;
            continue;
        }
        out.push_back(c);
    }
    return out;
}

std::size_t skip_braced(std::string_view text, std::size_t pos) {
    int depth = 0;
    for (std::size_t i = pos; i < text.size(); ++i) {
        if (text[i] == '\\') {
            ++i;
            continue;
        }
        if (text[i] == '{') ++depth;
        else if (text[i] == '}') {
            if (--depth == 0) return i + 1;
        }
    }
    return std::string_view::npos;
}

static std::size_t skip_bracketed(std::string_view text, std::size_t pos) {
    int depth = 0;
    for (std::size_t i = pos; i < text.size(); ++i) {
        if (text[i] == '\\') {
            ++i;
            continue;
        }
        if (text[i] == '[') ++depth;
        else if (text[i] == ']') {
            if (--depth == 0) return i + 1;
        }
    }
    return std::string_view::npos;
}

std::optional<EnvBlock> find_env(std::string_view text, const std::vector<std::string>& names,
                                 std::size_t from) {
    std::optional<EnvBlock> best;
    for (const std::string& name : names) {
        const std::string begin_tag = "\\begin{" + name + "}";
        std::size_t b = text.find(begin_tag, from);
        if (b == std::string_view::npos) continue;
        if (best && b >= best->begin) continue;

        EnvBlock env;
        env.name = name;
        env.begin = b;
        env.body_begin = b + begin_tag.size();

        const std::string end_tag = "\\end{" + name + "}";
        int depth = 1;
        std::size_t cursor = env.body_begin;
        while (depth > 0) {
            std::size_t nb = text.find(begin_tag, cursor);
            std::size_t ne = text.find(end_tag, cursor);
            if (ne == std::string_view::npos) {
                env.balanced = false;
                env.body_end = text.size();
                env.end = std::string_view::npos;
                break;
            }
            if (nb != std::string_view::npos && nb < ne) {
                ++depth;
                cursor = nb + begin_tag.size();
            } else {
                --depth;
                if (depth == 0) {
                    env.body_end = ne;
                    env.end = ne + end_tag.size();
                } else {
                    cursor = ne + end_tag.size();
                }
            }
        }
        best = env;
    }
    return best;
}

std::optional<CommandArg> find_command_arg(std::string_view text, std::string_view command,
                                           std::size_t from) {
    const std::string tag = "\\" + std::string(command);
    std::size_t pos = from;
    while ((pos = text.find(tag, pos)) != std::string_view::npos) {
        std::size_t after = pos + tag.size();
        // reject longer command names (\captionof when searching \caption)
        if (after < text.size() && std::isalpha(static_cast<unsigned char>(text[after]))) {
            pos = after;
            continue;
        }
        std::size_t cursor = after;
        if (cursor < text.size() && text[cursor] == '*') ++cursor;  // starred forms
        while (cursor < text.size() && std::isspace(static_cast<unsigned char>(text[cursor]))) ++cursor;
        if (cursor < text.size() && text[cursor] == '[') {
            std::size_t k = skip_bracketed(text, cursor);
            if (k == std::string_view::npos) return std::nullopt;
            cursor = k;
        }
        if (cursor >= text.size() || text[cursor] != '{') {
            pos = after;
            continue;
        }
        std::size_t close = skip_braced(text, cursor);
        if (close == std::string_view::npos) return std::nullopt;
        CommandArg arg;
        arg.value = std::string(text.substr(cursor + 1, close - cursor - 2));
        arg.begin = pos;
        arg.end = close;
        return arg;
    }
    return std::nullopt;
}

std::vector<std::string> extract_ref_labels(std::string_view text) {
    static const std::vector<std::string> kRefCommands = {"ref", "cref", "Cref", "autoref"};
    std::vector<std::string> labels;
    std::set<std::string> seen;
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] != '\\') {
            ++i;
            continue;
        }
        bool matched = false;
        for (const std::string& cmd : kRefCommands) {
            if (text.compare(i + 1, cmd.size(), cmd) != 0) continue;
            std::size_t after = i + 1 + cmd.size();
            if (after < text.size() && std::isalpha(static_cast<unsigned char>(text[after]))) continue;
            if (after >= text.size() || text[after] != '{') continue;
            std::size_t close = skip_braced(text, after);
            if (close == std::string_view::npos) continue;
            std::string inside(text.substr(after + 1, close - after - 2));
            std::stringstream ss(inside);
            std::string item;
            while (std::getline(ss, item, ',')) {
                // trim
                std::size_t b = item.find_first_not_of(" \t\n");
                std::size_t e = item.find_last_not_of(" \t\n");
                if (b == std::string::npos) continue;
                std::string label = item.substr(b, e - b + 1);
                if (seen.insert(label).second) labels.push_back(label);
            }
            i = close;
            matched = true;
            break;
        }
        if (!matched) i += 2;  // skip the backslash and the next char
    }
    return labels;
}

}  // namespace latex

fs::path resolve_main_file(const fs::path& source_root) {
    std::vector<fs::path> candidates;
    std::vector<fs::path> with_class;
    for (const fs::path& rel : list_files(source_root)) {
        if (rel.extension() != ".tex") continue;
        std::string content = latex::strip_comments(read_file(source_root / rel));
        if (content.find("\\begin{document}") == std::string::npos) continue;
        candidates.push_back(rel);
        if (content.find("\\documentclass") != std::string::npos) with_class.push_back(rel);
    }
    if (candidates.empty()) {
        throw Error(ErrorCode::no_main_file, "no .tex file with \\begin{document} under " +
                                                 source_root.string());
    }
    if (candidates.size() == 1) return source_root / candidates.front();
    const auto& pool = with_class.empty() ? candidates : with_class;
    return source_root / *std::min_element(pool.begin(), pool.end());
}

namespace {

std::string inline_inputs_rec(const fs::path& root, const fs::path& file,
                              std::vector<fs::path>& stack, std::vector<ParseWarning>* warnings) {
    for (const fs::path& active : stack) {
        if (fs::equivalent(active, file)) {
            std::string cycle;
            for (const fs::path& p : stack) cycle += p.filename().string() + " -> ";
            cycle += file.filename().string();
            throw Error(ErrorCode::cyclic_include, cycle);
        }
    }
    stack.push_back(file);
    std::string text = latex::strip_comments(read_file(file));

    std::string out;
    out.reserve(text.size());
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::optional<latex::CommandArg> next;
        for (std::string_view cmd : {"input", "include"}) {
            auto arg = latex::find_command_arg(text, cmd, pos);
            if (arg && (!next || arg->begin < next->begin)) next = arg;
        }
        if (!next) {
            out.append(text, pos, text.size() - pos);
            break;
        }
        out.append(text, pos, next->begin - pos);
        fs::path target = root / next->value;
        if (!target.has_extension()) target += ".tex";
        if (fs::exists(target)) {
            out += inline_inputs_rec(root, target, stack, warnings);
        } else if (warnings) {
            warnings->push_back({"missing_input", next->value});
        }
        pos = next->end;
    }
    stack.pop_back();
    return out;
}

const std::vector<std::string> kDiagramEnvs = {"figure", "figure*", "table", "table*"};

// Heading and structural commands that break paragraphs without contributing text.
const std::vector<std::string> kHeadingCommands = {
    "chapter", "section", "subsection", "subsubsection", "paragraph", "subparagraph",
    "title", "author", "date", "bibliography", "bibliographystyle"};

const std::vector<std::string> kBareBreakCommands = {
    "\\maketitle", "\\tableofcontents", "\\appendix", "\\clearpage", "\\newpage",
    "\\begin{abstract}", "\\end{abstract}", "\\noindent"};

std::string trim(std::string_view s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

// Joins the paragraph's physical lines with single spaces.
std::string normalize_paragraph(std::string_view raw) {
    std::string out;
    std::stringstream ss{std::string(raw)};
    std::string line;
    while (std::getline(ss, line)) {
        std::string t = trim(line);
        if (t.empty()) continue;
        if (!out.empty()) out.push_back(' ');
        out += t;
    }
    return out;
}

std::vector<std::string> resolve_graphics(const fs::path& root, const std::string& raw_path,
                                          std::vector<ParseWarning>* warnings) {
    static const std::vector<std::string> kExts = {".png", ".jpg", ".jpeg", ".pdf"};
    fs::path p = root / raw_path;
    if (p.has_extension()) {
        if (fs::exists(p)) return {raw_path};
        if (warnings) warnings->push_back({"missing_graphics", raw_path});
        return {};
    }
    for (const std::string& ext : kExts) {
        fs::path probe = p;
        probe += ext;
        if (fs::exists(probe)) return {raw_path + ext};
    }
    if (warnings) warnings->push_back({"missing_graphics", raw_path});
    return {};
}

}  // namespace

std::string inline_inputs(const fs::path& source_root, const fs::path& main_file,
                          std::vector<ParseWarning>* warnings) {
    std::vector<fs::path> stack;
    return inline_inputs_rec(source_root, main_file, stack, warnings);
}

DocumentModel parse_latex(const std::string& main_text, const fs::path& source_root,
                          const PaperId& paper_id) {
    DocumentModel model;
    model.paper_id = paper_id;

    std::string text = latex::strip_comments(main_text);

    // Restrict to the document body when present.
    std::size_t body_begin = text.find("\\begin{document}");
    std::size_t body_end = text.find("\\end{document}");
    if (body_begin != std::string::npos) {
        body_begin += std::string("\\begin{document}").size();
        if (body_end == std::string::npos || body_end < body_begin) body_end = text.size();
        text = text.substr(body_begin, body_end - body_begin);
    }

    // Pull out figure/table environments, masking them with paragraph breaks.
    std::string masked;
    masked.reserve(text.size());
    std::size_t pos = 0;
    while (true) {
        auto env = latex::find_env(text, kDiagramEnvs, pos);
        if (!env) {
            masked.append(text, pos, text.size() - pos);
            break;
        }
        masked.append(text, pos, env->begin - pos);
        masked += "\n\n";
        if (!env->balanced) {
            model.warnings.push_back({"unbalanced_environment", env->name});
            pos = env->body_begin;  // recover: re-parse the interior as body text
            continue;
        }
        pos = env->end;

        std::string body(text.substr(env->body_begin, env->body_end - env->body_begin));
        bool is_table = env->name.rfind("table", 0) == 0;

        DiagramEnv diagram;
        diagram.kind = is_table ? DiagramKind::table : DiagramKind::figure;

        auto label = latex::find_command_arg(body, "label");
        if (!label) continue;  // unlabeled environments are never referenced
        diagram.label = trim(label->value);

        std::string cleaned_body = body;
        auto caption = latex::find_command_arg(cleaned_body, "caption");
        if (caption) {
            diagram.caption = replace_citation_tags(normalize_paragraph(caption->value));
            cleaned_body.erase(caption->begin, caption->end - caption->begin);
        }

        if (is_table) {
            auto body_label = latex::find_command_arg(cleaned_body, "label");
            if (body_label) cleaned_body.erase(body_label->begin, body_label->end - body_label->begin);
            diagram.latex_body = trim(cleaned_body);
            if (diagram.latex_body.empty()) {
                model.warnings.push_back({"empty_table_body", diagram.label});
                continue;
            }
        } else {
            std::size_t gpos = 0;
            while (auto g = latex::find_command_arg(body, "includegraphics", gpos)) {
                for (std::string& resolved : resolve_graphics(source_root, trim(g->value),
                                                              &model.warnings)) {
                    diagram.graphics_paths.push_back(std::move(resolved));
                }
                gpos = g->end;
            }
            if (diagram.graphics_paths.empty()) {
                model.warnings.push_back({"figure_without_graphics", diagram.label});
                continue;
            }
        }

        if (model.label_index.count(diagram.label)) {
            model.warnings.push_back({"duplicate_label", diagram.label});
            continue;  // first definition wins
        }
        model.label_index[diagram.label] = model.diagrams.size();
        model.diagrams.push_back(std::move(diagram));
    }

    // Headings break paragraphs but are not paragraphs themselves.
    for (const std::string& cmd : kHeadingCommands) {
        std::size_t p = 0;
        while (auto arg = latex::find_command_arg(masked, cmd, p)) {
            masked.replace(arg->begin, arg->end - arg->begin, "\n\n");
            p = arg->begin;
        }
    }
    for (const std::string& tag : kBareBreakCommands) {
        std::size_t p = 0;
        while ((p = masked.find(tag, p)) != std::string::npos) {
            bool is_break = tag != "\\noindent";
            masked.replace(p, tag.size(), is_break ? "\n\n" : " ");
        }
    }
    // Body-level \label anchors (sections, equations) are not prose.
    {
        std::size_t p = 0;
        while (auto arg = latex::find_command_arg(masked, "label", p)) {
            masked.erase(arg->begin, arg->end - arg->begin);
            p = arg->begin;
        }
    }

    // Split on blank lines.
    std::vector<std::string> raw_paragraphs;
    {
        std::string current;
        std::stringstream ss(masked);
        std::string line;
        auto flush = [&] {
            if (!trim(current).empty()) raw_paragraphs.push_back(current);
            current.clear();
        };
        while (std::getline(ss, line)) {
            if (trim(line).empty()) {
                flush();
            } else {
                current += line;
                current.push_back('\n');
            }
        }
        flush();
    }

    int index = 0;
    for (const std::string& raw : raw_paragraphs) {
        std::string normalized = normalize_paragraph(raw);
        std::vector<std::string> clean_warnings;
        auto cleaned = clean_paragraph(normalized, &clean_warnings);
        for (const std::string& w : clean_warnings) model.warnings.push_back({"math", w});
        if (!cleaned) continue;
        Paragraph p;
        p.index = index++;
        p.text = *cleaned;
        p.ref_labels = latex::extract_ref_labels(p.text);
        p.token_count = token_count(p.text);
        model.paragraphs.push_back(std::move(p));
    }

    if (model.paragraphs.empty()) {
        throw Error(ErrorCode::empty_document, "no paragraphs for " + paper_id.arxiv_id);
    }
    return model;
}

std::string model_to_json(const DocumentModel& model) {
    ordered_json j;
    j["arxiv_id"] = model.paper_id.arxiv_id;
    j["category"] = model.paper_id.category;
    j["year"] = model.paper_id.year;
    j["paragraphs"] = ordered_json::array();
    for (const Paragraph& p : model.paragraphs) {
        j["paragraphs"].push_back({{"index", p.index},
                                   {"text", p.text},
                                   {"ref_labels", p.ref_labels},
                                   {"token_count", p.token_count}});
    }
    j["diagrams"] = ordered_json::array();
    for (const DiagramEnv& d : model.diagrams) {
        j["diagrams"].push_back({{"kind", to_string(d.kind)},
                                 {"label", d.label},
                                 {"caption", d.caption},
                                 {"graphics_paths", d.graphics_paths},
                                 {"latex_body", d.latex_body}});
    }
    j["warnings"] = ordered_json::array();
    for (const ParseWarning& w : model.warnings) {
        j["warnings"].push_back({{"code", w.code}, {"detail", w.detail}});
    }
    return j.dump(2);
}

DocumentModel model_from_json(const std::string& json_text) {
    ordered_json j = ordered_json::parse(json_text);
    DocumentModel model;
    model.paper_id.arxiv_id = j.at("arxiv_id").get<std::string>();
    model.paper_id.category = j.at("category").get<std::string>();
    model.paper_id.year = j.at("year").get<int>();
    for (const auto& pj : j.at("paragraphs")) {
        Paragraph p;
        p.index = pj.at("index").get<int>();
        p.text = pj.at("text").get<std::string>();
        p.ref_labels = pj.at("ref_labels").get<std::vector<std::string>>();
        p.token_count = pj.at("token_count").get<std::size_t>();
        model.paragraphs.push_back(std::move(p));
    }
    for (const auto& dj : j.at("diagrams")) {
        DiagramEnv d;
        d.kind = dj.at("kind").get<std::string>() == "table" ? DiagramKind::table
                                                             : DiagramKind::figure;
        d.label = dj.at("label").get<std::string>();
        d.caption = dj.at("caption").get<std::string>();
        d.graphics_paths = dj.at("graphics_paths").get<std::vector<std::string>>();
        d.latex_body = dj.at("latex_body").get<std::string>();
        model.label_index.emplace(d.label, model.diagrams.size());
        model.diagrams.push_back(std::move(d));
    }
    if (j.contains("warnings")) {
        for (const auto& wj : j.at("warnings")) {
            model.warnings.push_back({wj.at("code").get<std::string>(),
                                      wj.at("detail").get<std::string>()});
        }
    }
    return model;
}

}  // namespace scidiag
