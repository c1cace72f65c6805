#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace scidiag {

std::string read_file(const std::filesystem::path& path);
std::vector<unsigned char> read_file_bytes(const std::filesystem::path& path);

/// Writes via a temp file + rename so readers never observe partial content.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);
void write_file_atomic(const std::filesystem::path& path, const std::vector<unsigned char>& content);

/// Recursive listing of regular files under root, sorted, paths relative to root.
std::vector<std::filesystem::path> list_files(const std::filesystem::path& root);

/// "2101.00001" stays as is; legacy ids like "cs/0506001" become "cs_0506001".
std::string sanitize_id_for_path(const std::string& arxiv_id);

}  // namespace scidiag
