#include "scidiag/archive.hpp"

#include <zlib.h>

#include <cstring>

#include "scidiag/errors.hpp"
#include "scidiag/fsutil.hpp"

namespace fs = std::filesystem;

namespace scidiag {

std::vector<unsigned char> gunzip(const std::vector<unsigned char>& bytes) {
    z_stream strm{};
    // 15 window bits + 32: auto-detect zlib or gzip framing
    if (inflateInit2(&strm, 15 + 32) != Z_OK) {
        throw Error(ErrorCode::io_error, "inflateInit2 failed");
    }
    std::vector<unsigned char> out;
    out.reserve(bytes.size() * 4);
    unsigned char buffer[1 << 16];
    strm.next_in = const_cast<unsigned char*>(bytes.data());
    strm.avail_in = static_cast<uInt>(bytes.size());
    int rc = Z_OK;
    while (rc != Z_STREAM_END) {
        strm.next_out = buffer;
        strm.avail_out = sizeof(buffer);
        rc = inflate(&strm, Z_NO_FLUSH);
        if (rc != Z_OK && rc != Z_STREAM_END) {
            inflateEnd(&strm);
            throw Error(ErrorCode::parse_error,
                        std::string("corrupt gzip stream: ") + (strm.msg ? strm.msg : "inflate error"));
        }
        out.insert(out.end(), buffer, buffer + (sizeof(buffer) - strm.avail_out));
        if (rc == Z_OK && strm.avail_in == 0 && strm.avail_out != 0) {
            inflateEnd(&strm);
            throw Error(ErrorCode::parse_error, "truncated gzip stream");
        }
    }
    inflateEnd(&strm);
    return out;
}

namespace {

constexpr std::size_t kBlock = 512;

unsigned long parse_octal(const char* field, std::size_t len) {
    unsigned long value = 0;
    for (std::size_t i = 0; i < len; ++i) {
        char c = field[i];
        if (c == '\0' || c == ' ') break;
        if (c < '0' || c > '7') throw Error(ErrorCode::parse_error, "bad octal field in tar header");
        value = value * 8 + static_cast<unsigned long>(c - '0');
    }
    return value;
}

bool zero_block(const unsigned char* p) {
    for (std::size_t i = 0; i < kBlock; ++i) {
        if (p[i] != 0) return false;
    }
    return true;
}

bool header_checksum_ok(const unsigned char* h) {
    unsigned long stored;
    try {
        stored = parse_octal(reinterpret_cast<const char*>(h) + 148, 8);
    } catch (const Error&) {
        return false;
    }
    unsigned long sum = 0;
    for (std::size_t i = 0; i < kBlock; ++i) {
        sum += (i >= 148 && i < 156) ? ' ' : h[i];
    }
    return sum == stored;
}

}  // namespace

bool looks_like_gzip(const std::vector<unsigned char>& bytes) {
    return bytes.size() >= 2 && bytes[0] == 0x1f && bytes[1] == 0x8b;
}

bool looks_like_tar(const std::vector<unsigned char>& bytes) {
    return bytes.size() >= kBlock && !zero_block(bytes.data()) && header_checksum_ok(bytes.data());
}

std::vector<TarEntry> untar(const std::vector<unsigned char>& bytes) {
    std::vector<TarEntry> entries;
    std::size_t pos = 0;
    std::string pending_long_name;
    while (pos + kBlock <= bytes.size()) {
        const unsigned char* h = bytes.data() + pos;
        if (zero_block(h)) break;  // end-of-archive marker
        if (!header_checksum_ok(h)) {
            throw Error(ErrorCode::parse_error, "corrupt tar header at offset " + std::to_string(pos));
        }
        const char* hc = reinterpret_cast<const char*>(h);
        std::string name(hc, strnlen(hc, 100));
        unsigned long size = parse_octal(hc + 124, 12);
        char type = hc[156];
        std::string prefix(hc + 345, strnlen(hc + 345, 155));
        if (!prefix.empty()) name = prefix + "/" + name;
        if (!pending_long_name.empty()) {
            name = pending_long_name;
            pending_long_name.clear();
        }
        pos += kBlock;
        std::size_t data_blocks = (size + kBlock - 1) / kBlock;
        if (pos + data_blocks * kBlock > bytes.size()) {
            throw Error(ErrorCode::parse_error, "truncated tar archive");
        }
        if (type == 'L') {  // GNU long name
            pending_long_name.assign(reinterpret_cast<const char*>(bytes.data() + pos), size);
            while (!pending_long_name.empty() && pending_long_name.back() == '\0') {
                pending_long_name.pop_back();
            }
        } else if (type == '0' || type == '\0' || type == '5') {
            TarEntry entry;
            entry.name = name;
            entry.is_dir = (type == '5');
            if (!entry.is_dir) {
                entry.data.assign(bytes.data() + pos, bytes.data() + pos + size);
            }
            entries.push_back(std::move(entry));
        }
        // other types (symlinks, pax headers) skipped
        pos += data_blocks * kBlock;
    }
    return entries;
}

namespace {

// Reject absolute paths and traversal; strip leading "./".
std::optional<fs::path> safe_relative(const std::string& name) {
    fs::path p(name);
    if (p.is_absolute()) return std::nullopt;
    fs::path out;
    for (const auto& part : p) {
        if (part == "..") return std::nullopt;
        if (part == ".") continue;
        out /= part;
    }
    if (out.empty()) return std::nullopt;
    return out;
}

}  // namespace

std::vector<std::string> extract_archive(const std::vector<unsigned char>& bytes,
                                         const fs::path& dest) {
    std::vector<unsigned char> payload = looks_like_gzip(bytes) ? gunzip(bytes) : bytes;
    std::vector<std::string> written;
    fs::create_directories(dest);
    if (looks_like_tar(payload)) {
        for (const TarEntry& entry : untar(payload)) {
            auto rel = safe_relative(entry.name);
            if (!rel) continue;
            if (entry.is_dir) {
                fs::create_directories(dest / *rel);
            } else {
                write_file_atomic(dest / *rel, entry.data);
                written.push_back(rel->generic_string());
            }
        }
    } else {
        // Bare (possibly gzipped) single file: the arXiv legacy layout.
        write_file_atomic(dest / "main.tex", payload);
        written.push_back("main.tex");
    }
    return written;
}

}  // namespace scidiag
