#include "scidiag/manifest.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "scidiag/errors.hpp"
#include "scidiag/fsutil.hpp"

using ordered_json = nlohmann::ordered_json;

namespace scidiag {

const char* to_string(EntryStatus s) {
    switch (s) {
        case EntryStatus::pending: return "pending";
        case EntryStatus::downloaded: return "downloaded";
        case EntryStatus::parsed: return "parsed";
        case EntryStatus::failed: return "failed";
    }
    return "?";
}

std::optional<EntryStatus> entry_status_from_string(const std::string& s) {
    if (s == "pending") return EntryStatus::pending;
    if (s == "downloaded") return EntryStatus::downloaded;
    if (s == "parsed") return EntryStatus::parsed;
    if (s == "failed") return EntryStatus::failed;
    return std::nullopt;
}

ManifestEntry* CorpusManifest::find(const std::string& arxiv_id) {
    for (ManifestEntry& e : entries) {
        if (e.paper_id.arxiv_id == arxiv_id) return &e;
    }
    return nullptr;
}

const ManifestEntry* CorpusManifest::find(const std::string& arxiv_id) const {
    for (const ManifestEntry& e : entries) {
        if (e.paper_id.arxiv_id == arxiv_id) return &e;
    }
    return nullptr;
}

ManifestEntry& CorpusManifest::add(const ManifestEntry& entry) {
    if (find(entry.paper_id.arxiv_id)) {
        throw Error(ErrorCode::duplicate_entry, entry.paper_id.arxiv_id);
    }
    entries.push_back(entry);
    return entries.back();
}

CorpusManifest load_manifest(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::io_error, "cannot open manifest " + path.string());

    CorpusManifest manifest;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        ordered_json j;
        try {
            j = ordered_json::parse(line);
        } catch (const std::exception& e) {
            throw Error(ErrorCode::parse_error,
                        "manifest " + path.string() + " line " + std::to_string(line_no) + ": " +
                            e.what());
        }
        try {
            ManifestEntry entry;
            entry.paper_id.arxiv_id = j.at("arxiv_id").get<std::string>();
            entry.paper_id.category = j.at("category").get<std::string>();
            entry.paper_id.year = j.at("year").get<int>();
            entry.source_path = j.at("source_path").get<std::string>();
            auto status = entry_status_from_string(j.at("status").get<std::string>());
            if (!status) throw std::runtime_error("bad status");
            entry.status = *status;
            entry.checksum = j.at("checksum").get<std::string>();
            entry.version = j.value("version", std::string("latest"));
            entry.error = j.value("error", std::string());
            manifest.add(entry);
        } catch (const Error&) {
            throw;  // DuplicateEntry keeps its own code
        } catch (const std::exception& e) {
            throw Error(ErrorCode::parse_error,
                        "manifest " + path.string() + " line " + std::to_string(line_no) + ": " +
                            e.what());
        }
    }
    return manifest;
}

void save_manifest(const CorpusManifest& manifest, const std::filesystem::path& path) {
    std::ostringstream out;
    for (const ManifestEntry& e : manifest.entries) {
        ordered_json j;
        j["arxiv_id"] = e.paper_id.arxiv_id;
        j["category"] = e.paper_id.category;
        j["year"] = e.paper_id.year;
        j["source_path"] = e.source_path;
        j["status"] = to_string(e.status);
        j["checksum"] = e.checksum;
        j["version"] = e.version;
        j["error"] = e.error;
        out << j.dump() << "\n";
    }
    write_file_atomic(path, out.str());
}

}  // namespace scidiag
