#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

namespace scidiag {

struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;  // row-major

    GrayImage() = default;
    GrayImage(int w, int h, std::uint8_t fill = 255)
        : width(w), height(h), pixels(static_cast<std::size_t>(w) * h, fill) {}

    std::uint8_t at(int x, int y) const { return pixels[static_cast<std::size_t>(y) * width + x]; }
    std::uint8_t& at(int x, int y) { return pixels[static_cast<std::size_t>(y) * width + x]; }
    bool empty() const { return pixels.empty(); }
};

/// Pixel box, end-exclusive: width = x1-x0, height = y1-y0.
struct BBox {
    int x0 = 0, y0 = 0, x1 = 0, y1 = 0;

    int width() const { return x1 - x0; }
    int height() const { return y1 - y0; }
    bool valid() const { return x0 < x1 && y0 < y1; }
    bool operator==(const BBox&) const = default;
};

double bbox_iou(const BBox& a, const BBox& b);

GrayImage load_pgm(const std::filesystem::path& path);
void save_pgm(const GrayImage& image, const std::filesystem::path& path);

/// Minimal 8-bit grayscale PNG encoder (zlib-deflated, filter 0).
void write_png_gray(const GrayImage& image, const std::filesystem::path& path);

/// Pixel-identical copy of the boxed region. The box must lie within bounds.
GrayImage crop_image(const GrayImage& image, const BBox& box);

}  // namespace scidiag
