#pragma once

#include "scidiag/image.hpp"

namespace scidiag {

struct CannyParams {
    double sigma = 1.4;     // Gaussian blur
    double low = 50.0;      // hysteresis thresholds on 0-255 gradient magnitude
    double high = 150.0;
};

/// Classic Canny: Gaussian blur, Sobel gradients, non-maximum suppression,
/// hysteresis. Returns a 0/255 edge map of the same dimensions.
GrayImage canny_edges(const GrayImage& image, const CannyParams& params = {});

struct BBoxDetectParams {
    CannyParams canny;
    double margin_frac = 0.05;  // outer band excluded from edge collection
    int padding = 8;            // expansion around the detected bounds
};

/// Bounds of all edge pixels inside the margin-trimmed working area, padded
/// and clamped to the image. Throws NoTableDetected when the working area
/// has no edges.
BBox detect_table_bbox(const GrayImage& page, const BBoxDetectParams& params = {});

}  // namespace scidiag
