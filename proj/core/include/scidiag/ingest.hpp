#pragma once

#include <chrono>
#include <filesystem>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "scidiag/manifest.hpp"
#include "scidiag/types.hpp"

namespace scidiag {

struct PaperSource {
    PaperId id;
    std::filesystem::path source_dir;  // unpacked LaTeX tree
};

struct IndexFilters {
    std::optional<int> from_year;
    std::optional<int> to_year;
    std::vector<std::string> categories;  // empty = all
};

/// GET {index_url}?from_year=&to_year=&category=... returning a JSON array of
/// {"arxiv_id","category","year"}. Result is filtered, de-duplicated by id
/// (first record wins) and sorted by id. Network trouble raises the
/// retryable NetworkError; malformed records raise ParseError naming the
/// offending array index.
std::vector<PaperId> fetch_paper_index(const std::string& index_url, const IndexFilters& filters);

/// Minimum spacing between requests to one host.
class HostRateLimiter {
public:
    explicit HostRateLimiter(std::chrono::milliseconds interval) : interval_(interval) {}
    void wait(const std::string& host);

private:
    std::chrono::milliseconds interval_;
    std::mutex mutex_;
    std::map<std::string, std::chrono::steady_clock::time_point> last_;
};

struct DownloadOptions {
    std::string archive_url_template;  // "{id}" placeholder
    std::filesystem::path corpus_dir;
    std::chrono::milliseconds min_request_interval{1000};
    int max_retries = 3;
    std::chrono::milliseconds retry_backoff{250};
    int workers = 4;
};

enum class DownloadOutcome { downloaded, skipped, failed, failed_permanent };

class Downloader {
public:
    explicit Downloader(DownloadOptions options);

    /// Fetches, checksums and unpacks one paper under
    /// corpus_dir/sources/<id>; the manifest entry transitions to
    /// `downloaded` (or `failed` with a reason). Entries already downloaded
    /// are left untouched.
    DownloadOutcome download_source(const PaperId& paper_id, CorpusManifest& manifest);

    /// Concurrent download across distinct ids; manifest mutation serialized.
    void download_all(const std::vector<PaperId>& ids, CorpusManifest& manifest);

private:
    DownloadOptions options_;
    HostRateLimiter limiter_;
    std::mutex manifest_mutex_;
};

}  // namespace scidiag
