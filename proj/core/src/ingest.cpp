#include "scidiag/ingest.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "scidiag/archive.hpp"
#include "scidiag/errors.hpp"
#include "scidiag/fsutil.hpp"
#include "scidiag/hash.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace scidiag {

namespace {

struct UrlParts {
    std::string origin;  // scheme://host[:port]
    std::string path;    // leading slash, may carry a query
    std::string host;
};

UrlParts split_url(const std::string& url) {
    auto scheme_end = url.find("://");
    if (scheme_end == std::string::npos) {
        throw Error(ErrorCode::config_error, "URL without scheme: " + url);
    }
    auto path_begin = url.find('/', scheme_end + 3);
    UrlParts parts;
    if (path_begin == std::string::npos) {
        parts.origin = url;
        parts.path = "/";
    } else {
        parts.origin = url.substr(0, path_begin);
        parts.path = url.substr(path_begin);
    }
    std::string authority = parts.origin.substr(scheme_end + 3);
    auto colon = authority.rfind(':');
    parts.host = colon == std::string::npos ? authority : authority.substr(0, colon);
    return parts;
}

std::string replace_placeholder(std::string templ, const std::string& key,
                                const std::string& value) {
    const std::string tag = "{" + key + "}";
    std::size_t pos;
    while ((pos = templ.find(tag)) != std::string::npos) {
        templ.replace(pos, tag.size(), value);
    }
    return templ;
}

}  // namespace

std::vector<PaperId> fetch_paper_index(const std::string& index_url, const IndexFilters& filters) {
    UrlParts url = split_url(index_url);
    httplib::Client client(url.origin);
    client.set_connection_timeout(10);
    client.set_read_timeout(30);

    httplib::Params params;
    if (filters.from_year) params.emplace("from_year", std::to_string(*filters.from_year));
    if (filters.to_year) params.emplace("to_year", std::to_string(*filters.to_year));
    for (const std::string& c : filters.categories) params.emplace("category", c);
    std::string path = params.empty() ? url.path : httplib::append_query_params(url.path, params);

    auto res = client.Get(path);
    if (!res) {
        throw Error(ErrorCode::network_error,
                    "index fetch failed: " + httplib::to_string(res.error()));
    }
    if (res->status != 200) {
        throw Error(ErrorCode::network_error,
                    "index returned HTTP " + std::to_string(res->status));
    }

    json doc;
    try {
        doc = json::parse(res->body);
    } catch (const std::exception& e) {
        throw Error(ErrorCode::parse_error, std::string("index response is not JSON: ") + e.what());
    }
    if (!doc.is_array()) {
        throw Error(ErrorCode::parse_error, "index response is not a JSON array");
    }

    std::vector<PaperId> out;
    std::set<std::string> seen;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        const json& rec = doc[i];
        if (!rec.is_object() || !rec.contains("arxiv_id") || !rec["arxiv_id"].is_string() ||
            !rec.contains("category") || !rec["category"].is_string() || !rec.contains("year") ||
            !rec["year"].is_number_integer()) {
            throw Error(ErrorCode::parse_error, "malformed index record #" + std::to_string(i));
        }
        PaperId id{rec["arxiv_id"].get<std::string>(), rec["category"].get<std::string>(),
                   rec["year"].get<int>()};
        if (!valid_arxiv_id(id.arxiv_id)) {
            throw Error(ErrorCode::parse_error,
                        "invalid arxiv id in index record #" + std::to_string(i) + ": " +
                            id.arxiv_id);
        }
        if (filters.from_year && id.year < *filters.from_year) continue;
        if (filters.to_year && id.year > *filters.to_year) continue;
        if (!filters.categories.empty() &&
            std::find(filters.categories.begin(), filters.categories.end(), id.category) ==
                filters.categories.end()) {
            continue;
        }
        if (seen.insert(id.arxiv_id).second) out.push_back(std::move(id));
    }
    std::sort(out.begin(), out.end(),
              [](const PaperId& a, const PaperId& b) { return a.arxiv_id < b.arxiv_id; });
    return out;
}

void HostRateLimiter::wait(const std::string& host) {
    std::chrono::steady_clock::time_point wake;
    {
        std::lock_guard lock(mutex_);
        auto now = std::chrono::steady_clock::now();
        auto it = last_.find(host);
        wake = (it == last_.end()) ? now : std::max(now, it->second + interval_);
        last_[host] = wake;
    }
    std::this_thread::sleep_until(wake);
}

Downloader::Downloader(DownloadOptions options)
    : options_(std::move(options)), limiter_(options_.min_request_interval) {}

DownloadOutcome Downloader::download_source(const PaperId& paper_id, CorpusManifest& manifest) {
    {
        std::lock_guard lock(manifest_mutex_);
        ManifestEntry* existing = manifest.find(paper_id.arxiv_id);
        if (existing && existing->status == EntryStatus::downloaded) {
            return DownloadOutcome::skipped;  // idempotent resume
        }
        if (!existing) {
            ManifestEntry fresh;
            fresh.paper_id = paper_id;
            manifest.add(fresh);
        }
    }

    auto record = [&](EntryStatus status, const std::string& checksum, const std::string& rel_path,
                      const std::string& error) {
        std::lock_guard lock(manifest_mutex_);
        ManifestEntry* entry = manifest.find(paper_id.arxiv_id);
        entry->status = status;
        entry->checksum = checksum;
        entry->source_path = rel_path;
        entry->error = error;
    };

    const std::string url_str =
        replace_placeholder(options_.archive_url_template, "id", paper_id.arxiv_id);
    UrlParts url = split_url(url_str);

    httplib::Result res;
    for (int attempt = 0;; ++attempt) {
        limiter_.wait(url.host);
        httplib::Client client(url.origin);
        client.set_connection_timeout(10);
        client.set_read_timeout(60);
        res = client.Get(url.path);
        if (res && res->status == 200) break;
        if (res && (res->status == 404 || res->status == 410)) {
            record(EntryStatus::failed, "", "", "PermanentMissing(" + std::to_string(res->status) + ")");
            return DownloadOutcome::failed_permanent;
        }
        if (attempt + 1 >= options_.max_retries) {
            std::string why = res ? "HTTP " + std::to_string(res->status)
                                  : httplib::to_string(res.error());
            record(EntryStatus::failed, "", "", "NetworkError(" + why + ")");
            return DownloadOutcome::failed;
        }
        std::this_thread::sleep_for(options_.retry_backoff * (1 << attempt));
    }

    std::vector<unsigned char> bytes(res->body.begin(), res->body.end());
    const std::string checksum = sha256_hex(bytes);

    {
        // Unchanged archive for an entry that previously unpacked fine: no-op.
        std::lock_guard lock(manifest_mutex_);
        ManifestEntry* entry = manifest.find(paper_id.arxiv_id);
        if (entry->checksum == checksum && entry->status == EntryStatus::downloaded) {
            return DownloadOutcome::skipped;
        }
    }

    const std::string rel = "sources/" + sanitize_id_for_path(paper_id.arxiv_id);
    const fs::path dest = options_.corpus_dir / rel;
    std::vector<std::string> files;
    try {
        files = extract_archive(bytes, dest);
    } catch (const Error& e) {
        record(EntryStatus::failed, checksum, rel, std::string("CorruptArchive: ") + e.what());
        return DownloadOutcome::failed;
    }

    bool has_tex = std::any_of(files.begin(), files.end(), [](const std::string& f) {
        return f.size() > 4 && f.compare(f.size() - 4, 4, ".tex") == 0;
    });
    if (!has_tex) {
        record(EntryStatus::failed, checksum, rel, "NoLatexSource");
        return DownloadOutcome::failed;
    }

    record(EntryStatus::downloaded, checksum, rel, "");
    return DownloadOutcome::downloaded;
}

void Downloader::download_all(const std::vector<PaperId>& ids, CorpusManifest& manifest) {
    std::atomic<std::size_t> next{0};
    const int workers = std::max(1, options_.workers);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= ids.size()) return;
                download_source(ids[i], manifest);
            }
        });
    }
    for (std::thread& t : pool) t.join();
}

}  // namespace scidiag
