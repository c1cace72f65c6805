#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace scidiag {

/// zlib-wrapped inflate accepting gzip or zlib framing. Throws ParseError on
/// corrupt input.
std::vector<unsigned char> gunzip(const std::vector<unsigned char>& bytes);

struct TarEntry {
    std::string name;
    std::vector<unsigned char> data;
    bool is_dir = false;
};

/// ustar/GNU tar reader (regular files, dirs, GNU long names). Throws
/// ParseError on a malformed header.
std::vector<TarEntry> untar(const std::vector<unsigned char>& bytes);

bool looks_like_gzip(const std::vector<unsigned char>& bytes);
bool looks_like_tar(const std::vector<unsigned char>& bytes);

/// Unpacks a source bundle (.tar.gz / .tar / bare gzipped file) under dest.
/// A bare non-tar payload is written as dest/main.tex. Entry names escaping
/// dest are rejected. Returns the relative paths written.
std::vector<std::string> extract_archive(const std::vector<unsigned char>& bytes,
                                         const std::filesystem::path& dest);

}  // namespace scidiag
