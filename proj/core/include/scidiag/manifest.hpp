#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "scidiag/types.hpp"

namespace scidiag {

enum class EntryStatus { pending, downloaded, parsed, failed };

const char* to_string(EntryStatus s);
std::optional<EntryStatus> entry_status_from_string(const std::string& s);

struct ManifestEntry {
    PaperId paper_id;
    std::string source_path;  // relative to the corpus dir
    EntryStatus status = EntryStatus::pending;
    std::string checksum;     // sha256 of the downloaded archive
    std::string version = "latest";
    std::string error;

    bool operator==(const ManifestEntry&) const = default;
};

/// Line-delimited JSON, one entry per line, fixed key order:
/// arxiv_id, category, year, source_path, status, checksum, version, error.
struct CorpusManifest {
    std::vector<ManifestEntry> entries;

    ManifestEntry* find(const std::string& arxiv_id);
    const ManifestEntry* find(const std::string& arxiv_id) const;

    /// Throws DuplicateEntry when the id is already present.
    ManifestEntry& add(const ManifestEntry& entry);

    bool operator==(const CorpusManifest&) const = default;
};

CorpusManifest load_manifest(const std::filesystem::path& path);
void save_manifest(const CorpusManifest& manifest, const std::filesystem::path& path);

}  // namespace scidiag
