#include "scidiag/image.hpp"

#include <zlib.h>

#include <algorithm>
#include <cstring>
#include <fstream>
#include <sstream>

#include "scidiag/errors.hpp"
#include "scidiag/fsutil.hpp"

namespace fs = std::filesystem;

namespace scidiag {

double bbox_iou(const BBox& a, const BBox& b) {
    const int ix0 = std::max(a.x0, b.x0);
    const int iy0 = std::max(a.y0, b.y0);
    const int ix1 = std::min(a.x1, b.x1);
    const int iy1 = std::min(a.y1, b.y1);
    const double inter = static_cast<double>(std::max(0, ix1 - ix0)) * std::max(0, iy1 - iy0);
    const double area_a = static_cast<double>(a.width()) * a.height();
    const double area_b = static_cast<double>(b.width()) * b.height();
    const double uni = area_a + area_b - inter;
    return uni <= 0 ? 0.0 : inter / uni;
}

GrayImage load_pgm(const fs::path& path) {
    std::string content = read_file(path);
    std::istringstream in(content);
    std::string magic;
    in >> magic;
    if (magic != "P5" && magic != "P2") {
        throw Error(ErrorCode::parse_error, "not a PGM file: " + path.string());
    }
    auto next_value = [&in]() {
        for (;;) {
            int c = in.peek();
            if (c == '#') {
                std::string comment;
                std::getline(in, comment);
            } else if (std::isspace(c)) {
                in.get();
            } else {
                break;
            }
        }
        long v;
        in >> v;
        return v;
    };
    const long w = next_value();
    const long h = next_value();
    const long maxval = next_value();
    if (w <= 0 || h <= 0 || maxval <= 0 || maxval > 255) {
        throw Error(ErrorCode::parse_error, "bad PGM header: " + path.string());
    }
    GrayImage img(static_cast<int>(w), static_cast<int>(h));
    if (magic == "P5") {
        in.get();  // single whitespace after maxval
        in.read(reinterpret_cast<char*>(img.pixels.data()),
                static_cast<std::streamsize>(img.pixels.size()));
        if (in.gcount() != static_cast<std::streamsize>(img.pixels.size())) {
            throw Error(ErrorCode::parse_error, "truncated PGM data: " + path.string());
        }
    } else {
        for (std::uint8_t& px : img.pixels) {
            long v;
            in >> v;
            if (!in) throw Error(ErrorCode::parse_error, "truncated PGM data: " + path.string());
            px = static_cast<std::uint8_t>(v);
        }
    }
    return img;
}

void save_pgm(const GrayImage& image, const fs::path& path) {
    std::ostringstream out;
    out << "P5\n" << image.width << " " << image.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(image.pixels.data()),
              static_cast<std::streamsize>(image.pixels.size()));
    write_file_atomic(path, out.str());
}

namespace {

void put_u32_be(std::string& s, std::uint32_t v) {
    s.push_back(static_cast<char>((v >> 24) & 0xff));
    s.push_back(static_cast<char>((v >> 16) & 0xff));
    s.push_back(static_cast<char>((v >> 8) & 0xff));
    s.push_back(static_cast<char>(v & 0xff));
}

void append_chunk(std::string& out, const char type[4], const std::string& data) {
    put_u32_be(out, static_cast<std::uint32_t>(data.size()));
    std::string body(type, 4);
    body += data;
    out += body;
    const auto crc = crc32(0, reinterpret_cast<const Bytef*>(body.data()),
                           static_cast<uInt>(body.size()));
    put_u32_be(out, static_cast<std::uint32_t>(crc));
}

}  // namespace

void write_png_gray(const GrayImage& image, const fs::path& path) {
    std::string png("\x89PNG\r\n\x1a\n", 8);

    std::string ihdr;
    put_u32_be(ihdr, static_cast<std::uint32_t>(image.width));
    put_u32_be(ihdr, static_cast<std::uint32_t>(image.height));
    ihdr.push_back(8);   // bit depth
    ihdr.push_back(0);   // color type: grayscale
    ihdr.push_back(0);   // compression
    ihdr.push_back(0);   // filter
    ihdr.push_back(0);   // interlace
    append_chunk(png, "IHDR", ihdr);

    // filter byte 0 per scanline
    std::string raw;
    raw.reserve(static_cast<std::size_t>(image.height) * (image.width + 1));
    for (int y = 0; y < image.height; ++y) {
        raw.push_back(0);
        raw.append(reinterpret_cast<const char*>(&image.pixels[static_cast<std::size_t>(y) *
                                                               image.width]),
                   static_cast<std::size_t>(image.width));
    }
    uLongf bound = compressBound(static_cast<uLong>(raw.size()));
    std::string idat(bound, '\0');
    if (compress2(reinterpret_cast<Bytef*>(idat.data()), &bound,
                  reinterpret_cast<const Bytef*>(raw.data()), static_cast<uLong>(raw.size()),
                  Z_BEST_COMPRESSION) != Z_OK) {
        throw Error(ErrorCode::io_error, "PNG deflate failed");
    }
    idat.resize(bound);
    append_chunk(png, "IDAT", idat);
    append_chunk(png, "IEND", "");

    write_file_atomic(path, png);
}

GrayImage crop_image(const GrayImage& image, const BBox& box) {
    if (!box.valid() || box.x0 < 0 || box.y0 < 0 || box.x1 > image.width ||
        box.y1 > image.height) {
        throw Error(ErrorCode::precondition, "crop box out of bounds");
    }
    GrayImage out(box.width(), box.height());
    for (int y = 0; y < out.height; ++y) {
        std::memcpy(&out.at(0, y), &image.at(box.x0, box.y0 + y),
                    static_cast<std::size_t>(out.width));
    }
    return out;
}

}  // namespace scidiag
