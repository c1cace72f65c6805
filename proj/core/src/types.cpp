#include "scidiag/types.hpp"

#include <cctype>

namespace scidiag {

bool valid_arxiv_id(const std::string& id) {
    if (id.empty()) return false;
    auto all_digits = [](std::string_view s) {
        if (s.empty()) return false;
        for (char c : s) {
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        }
        return true;
    };
    auto dot = id.find('.');
    auto slash = id.find('/');
    if (slash == std::string::npos) {
        // modern: digits.digits
        if (dot == std::string::npos) return false;
        return all_digits(std::string_view(id).substr(0, dot)) &&
               all_digits(std::string_view(id).substr(dot + 1));
    }
    // legacy: archive/digits, archive is lowercase letters plus '-' '.'
    std::string_view archive = std::string_view(id).substr(0, slash);
    std::string_view number = std::string_view(id).substr(slash + 1);
    if (archive.empty() || !all_digits(number)) return false;
    for (char c : archive) {
        if (!(std::islower(static_cast<unsigned char>(c)) || c == '-' || c == '.')) return false;
    }
    return true;
}

const char* to_string(DiagramKind k) {
    return k == DiagramKind::figure ? "figure" : "table";
}

const char* to_string(PayloadKind k) {
    switch (k) {
        case PayloadKind::figure_image: return "figure_image";
        case PayloadKind::table_image: return "table_image";
        case PayloadKind::table_latex: return "table_latex";
    }
    return "?";
}

const char* to_string(TaskKind t) {
    switch (t) {
        case TaskKind::captioning: return "captioning";
        case TaskKind::analysis: return "analysis";
        case TaskKind::outline_rec: return "outline_rec";
    }
    return "?";
}

const char* to_string(Split s) {
    switch (s) {
        case Split::train: return "train";
        case Split::val: return "val";
        case Split::test: return "test";
    }
    return "?";
}

const char* to_string(OutlineStyle s) {
    return s == OutlineStyle::concise ? "concise" : "keypoints";
}

std::optional<TaskKind> task_from_string(const std::string& s) {
    if (s == "captioning") return TaskKind::captioning;
    if (s == "analysis") return TaskKind::analysis;
    if (s == "outline_rec") return TaskKind::outline_rec;
    return std::nullopt;
}

std::optional<Split> split_from_string(const std::string& s) {
    if (s == "train") return Split::train;
    if (s == "val") return Split::val;
    if (s == "test") return Split::test;
    return std::nullopt;
}

std::optional<PayloadKind> payload_kind_from_string(const std::string& s) {
    if (s == "figure_image") return PayloadKind::figure_image;
    if (s == "table_image") return PayloadKind::table_image;
    if (s == "table_latex") return PayloadKind::table_latex;
    return std::nullopt;
}

}  // namespace scidiag
