#include "scidiag/align.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "scidiag/errors.hpp"
#include "scidiag/tokenizer.hpp"

using ordered_json = nlohmann::ordered_json;

namespace scidiag {

std::optional<int> first_reference(const DocumentModel& model, const std::string& label) {
    if (!model.label_index.count(label)) {
        throw Error(ErrorCode::unknown_label, label);
    }
    for (const Paragraph& p : model.paragraphs) {
        if (std::find(p.ref_labels.begin(), p.ref_labels.end(), label) != p.ref_labels.end()) {
            return p.index;
        }
    }
    return std::nullopt;
}

std::pair<std::string, std::size_t> build_context(const DocumentModel& model,
                                                  int boundary_paragraph,
                                                  std::size_t context_cap) {
    if (boundary_paragraph <= 0) return {"", 0};
    const int boundary = std::min<int>(boundary_paragraph, static_cast<int>(model.paragraphs.size()));

    int start = boundary;
    std::size_t total = 0;
    while (start > 0 && total + model.paragraphs[start - 1].token_count <= context_cap) {
        total += model.paragraphs[start - 1].token_count;
        --start;
    }

    if (start == boundary) {
        // Nearest paragraph alone exceeds the cap: keep its trailing tokens.
        const std::string& text = model.paragraphs[boundary - 1].text;
        auto spans = tokenize_spans(text);
        if (spans.size() <= context_cap) return {text, spans.size()};
        std::size_t from = spans[spans.size() - context_cap].begin;
        return {text.substr(from), context_cap};
    }

    std::string context;
    for (int i = start; i < boundary; ++i) {
        if (!context.empty()) context += "\n\n";
        context += model.paragraphs[i].text;
    }
    return {context, total};
}

std::vector<Alignment> group_corefs(const DocumentModel& model, const AlignConfig& config,
                                    std::vector<ParseWarning>* warnings) {
    std::vector<Alignment> alignments;
    for (const Paragraph& p : model.paragraphs) {
        if (p.ref_labels.empty()) continue;
        std::vector<std::string> known;
        for (const std::string& label : p.ref_labels) {
            if (model.label_index.count(label)) known.push_back(label);
        }
        if (known.empty()) {
            if (warnings) warnings->push_back({"unknown_labels_only", "paragraph " +
                                                                          std::to_string(p.index)});
            continue;
        }
        if (p.token_count > config.analysis_cap) {
            if (warnings) warnings->push_back({"analysis_over_cap", "paragraph " +
                                                                        std::to_string(p.index)});
            continue;
        }

        Alignment a;
        a.diagram_labels = std::move(known);
        a.analysis_paragraph = p.index;
        int earliest = p.index;
        for (const std::string& label : a.diagram_labels) {
            if (auto first = first_reference(model, label)) {
                earliest = std::min(earliest, *first);
            }
        }
        a.first_ref_paragraph = earliest;
        std::tie(a.context, a.context_token_count) =
            build_context(model, earliest, config.context_cap);
        alignments.push_back(std::move(a));
    }
    return alignments;
}

std::string alignments_to_json(const std::vector<Alignment>& alignments) {
    ordered_json arr = ordered_json::array();
    for (const Alignment& a : alignments) {
        arr.push_back({{"diagram_labels", a.diagram_labels},
                       {"first_ref_paragraph", a.first_ref_paragraph},
                       {"analysis_paragraph", a.analysis_paragraph},
                       {"context", a.context},
                       {"context_token_count", a.context_token_count}});
    }
    return arr.dump(2);
}

std::vector<Alignment> alignments_from_json(const std::string& json_text) {
    ordered_json arr = ordered_json::parse(json_text);
    std::vector<Alignment> alignments;
    for (const auto& aj : arr) {
        Alignment a;
        a.diagram_labels = aj.at("diagram_labels").get<std::vector<std::string>>();
        a.first_ref_paragraph = aj.at("first_ref_paragraph").get<int>();
        a.analysis_paragraph = aj.at("analysis_paragraph").get<int>();
        a.context = aj.at("context").get<std::string>();
        a.context_token_count = aj.at("context_token_count").get<std::size_t>();
        alignments.push_back(std::move(a));
    }
    return alignments;
}

}  // namespace scidiag
