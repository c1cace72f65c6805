#include "scidiag/fsutil.hpp"

#include <algorithm>
#include <fstream>

#include "scidiag/errors.hpp"

namespace fs = std::filesystem;

namespace scidiag {

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::io_error, "cannot open " + path.string());
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return content;
}

std::vector<unsigned char> read_file_bytes(const fs::path& path) {
    std::string s = read_file(path);
    return std::vector<unsigned char>(s.begin(), s.end());
}

static void write_atomic_impl(const fs::path& path, const void* data, size_t len) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error(ErrorCode::io_error, "cannot write " + tmp.string());
        out.write(static_cast<const char*>(data), static_cast<std::streamsize>(len));
        if (!out) throw Error(ErrorCode::io_error, "short write to " + tmp.string());
    }
    fs::rename(tmp, path);
}

void write_file_atomic(const fs::path& path, std::string_view content) {
    write_atomic_impl(path, content.data(), content.size());
}

void write_file_atomic(const fs::path& path, const std::vector<unsigned char>& content) {
    write_atomic_impl(path, content.data(), content.size());
}

std::vector<fs::path> list_files(const fs::path& root) {
    std::vector<fs::path> out;
    if (!fs::exists(root)) return out;
    for (const auto& entry : fs::recursive_directory_iterator(root)) {
        if (entry.is_regular_file()) out.push_back(fs::relative(entry.path(), root));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string sanitize_id_for_path(const std::string& arxiv_id) {
    std::string s = arxiv_id;
    std::replace(s.begin(), s.end(), '/', '_');
    return s;
}

}  // namespace scidiag
