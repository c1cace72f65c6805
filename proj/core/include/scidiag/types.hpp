#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace scidiag {

struct PaperId {
    std::string arxiv_id;  // "2101.00001" or legacy "cs/0506001"
    std::string category;
    int year = 0;

    bool operator==(const PaperId&) const = default;
};

/// Modern "digits.digits" or legacy "archive/digits" (archive may contain
/// dots and dashes, e.g. "math-ph/0506001").
bool valid_arxiv_id(const std::string& id);

enum class DiagramKind { figure, table };

struct DiagramEnv {
    DiagramKind kind = DiagramKind::figure;
    std::string label;
    std::string caption;                      // cleaned
    std::vector<std::string> graphics_paths;  // figures, relative to source root
    std::string latex_body;                   // tables, caption line excluded
};

struct Paragraph {
    int index = 0;
    std::string text;  // cleaned
    std::vector<std::string> ref_labels;  // in-text order, duplicates removed
    std::size_t token_count = 0;
};

struct ParseWarning {
    std::string code;
    std::string detail;
};

struct DocumentModel {
    PaperId paper_id;
    std::vector<Paragraph> paragraphs;
    std::vector<DiagramEnv> diagrams;
    std::map<std::string, std::size_t> label_index;  // label -> index into diagrams
    std::vector<ParseWarning> warnings;

    const DiagramEnv* find_diagram(const std::string& label) const {
        auto it = label_index.find(label);
        return it == label_index.end() ? nullptr : &diagrams[it->second];
    }
};

struct Alignment {
    std::vector<std::string> diagram_labels;  // in-text order of the analysis paragraph
    int first_ref_paragraph = 0;              // earliest first-reference over the group
    int analysis_paragraph = 0;
    std::string context;
    std::size_t context_token_count = 0;
};

enum class OutlineStyle { concise, keypoints };

struct Outline {
    OutlineStyle style = OutlineStyle::concise;
    std::vector<std::string> points;
    std::string rendered;  // points joined by newline, numbered for keypoints
    std::size_t token_count = 0;
};

enum class PayloadKind { figure_image, table_image, table_latex };

struct DiagramPayload {
    PayloadKind kind = PayloadKind::figure_image;
    std::string value;  // image path relative to dataset root, or LaTeX code
};

enum class TaskKind { captioning, analysis, outline_rec };
enum class Split { train, val, test };

struct TaskSample {
    std::string sample_id;
    TaskKind task = TaskKind::captioning;
    PaperId paper_id;
    Split split = Split::train;
    std::string context;
    std::optional<std::string> outline;
    std::vector<DiagramPayload> diagrams;
    std::string instruction;
    std::string target;
};

const char* to_string(DiagramKind k);
const char* to_string(PayloadKind k);
const char* to_string(TaskKind t);
const char* to_string(Split s);
const char* to_string(OutlineStyle s);

std::optional<TaskKind> task_from_string(const std::string& s);
std::optional<Split> split_from_string(const std::string& s);
std::optional<PayloadKind> payload_kind_from_string(const std::string& s);

}  // namespace scidiag
