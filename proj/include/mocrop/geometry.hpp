#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <string>

#include "mocrop/errors.hpp"
#include "mocrop/image.hpp"
#include "mocrop/types.hpp"

// Stage 3 box normalization and Stage 4 pixel mapping, plus the center-crop
// fallback and the quadratic FLOPs model used for resolution bookkeeping.

namespace mocrop {

// Fixed-precision decimal formatting, locale-independent. All text outputs
// use 6 decimals so golden files are byte-stable.
inline std::string format_fixed(double value, int precision = 6) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed,
                                   precision);
    return std::string(buf, res.ptr);
}

inline NormalizedBox grid_to_normalized(const GridBox& box, const GridSpec& grid) {
    NormalizedBox n;
    n.cx = (box.j + box.width / 2.0) / grid.cols;
    n.cy = (box.i + box.height / 2.0) / grid.rows;
    n.w = static_cast<double>(box.width) / grid.cols;
    n.h = static_cast<double>(box.height) / grid.rows;
    return n;
}

// Pixel mapping with clamping:
//   x1 = max(0, floor((cx - w/2) * W))   x2 = min(W, floor((cx + w/2) * W))
// and likewise for y. A collapsed result (possible only for pathological
// inputs, e.g. w * W < 1) raises DegenerateBoxError.
inline PixelBox normalized_to_pixels(const NormalizedBox& n, std::uint32_t width,
                                     std::uint32_t height) {
    const auto w = static_cast<double>(width);
    const auto h = static_cast<double>(height);
    PixelBox p;
    p.x1 = static_cast<int>(std::max(0.0, std::floor((n.cx - n.w / 2.0) * w)));
    p.y1 = static_cast<int>(std::max(0.0, std::floor((n.cy - n.h / 2.0) * h)));
    p.x2 = static_cast<int>(std::min(w, std::floor((n.cx + n.w / 2.0) * w)));
    p.y2 = static_cast<int>(std::min(h, std::floor((n.cy + n.h / 2.0) * h)));
    if (p.x1 >= p.x2 || p.y1 >= p.y2) {
        throw DegenerateBoxError("normalized box (" + format_fixed(n.cx) + ", " +
                                 format_fixed(n.cy) + ", " + format_fixed(n.w) + ", " +
                                 format_fixed(n.h) + ") collapses on a " +
                                 std::to_string(width) + "x" + std::to_string(height) + " frame");
    }
    return p;
}

// Inverse bookkeeping for boxes that did not come from the grid (fallback
// decisions): exact center/size fractions of the pixel box.
inline NormalizedBox pixels_to_normalized(const PixelBox& p, std::uint32_t width,
                                          std::uint32_t height) {
    NormalizedBox n;
    n.cx = (p.x1 + p.x2) / (2.0 * width);
    n.cy = (p.y1 + p.y2) / (2.0 * height);
    n.w = static_cast<double>(p.width()) / width;
    n.h = static_cast<double>(p.height()) / height;
    return n;
}

inline Frame crop_frame(const Frame& frame, const PixelBox& box) {
    validate_pixel_box(box, static_cast<std::uint32_t>(frame.width),
                       static_cast<std::uint32_t>(frame.height));
    Frame out;
    out.width = box.width();
    out.height = box.height();
    out.rgb.resize(static_cast<std::size_t>(out.width) * out.height * 3);
    for (int v = 0; v < out.height; ++v) {
        const std::uint8_t* src = frame.pixel(box.x1, box.y1 + v);
        std::copy_n(src, static_cast<std::size_t>(out.width) * 3, out.pixel(0, v));
    }
    return out;
}

// Centered box with side scale sqrt(alpha), so its pixel area matches the
// adaptive search's area semantics (alpha is an area ratio throughout).
inline PixelBox center_crop_box(std::uint32_t width, std::uint32_t height, double alpha) {
    if (!(alpha > 0.0 && alpha <= 1.0)) throw ConfigError("alpha must lie in (0,1]");
    const double side = std::sqrt(alpha);
    const int w = static_cast<int>(std::floor(width * side));
    const int h = static_cast<int>(std::floor(height * side));
    if (w < 1 || h < 1) {
        throw DegenerateBoxError("center crop collapses for alpha " + format_fixed(alpha) +
                                 " on a " + std::to_string(width) + "x" + std::to_string(height) +
                                 " frame");
    }
    const int x1 = (static_cast<int>(width) - w) / 2;
    const int y1 = (static_cast<int>(height) - h) / 2;
    return PixelBox{x1, y1, x1 + w, y1 + h};
}

// Fraction of FLOPs saved when a fully convolutional backbone runs at
// res_out instead of res_in: 1 - (res_out/res_in)^2. Matches ResNet-50's
// reported reduction at 192/224; architectures with resolution-dependent
// head costs deviate from the quadratic model.
inline double flops_ratio(double res_out, double res_in) {
    const double r = res_out / res_in;
    return 1.0 - r * r;
}

// Standard 4-number normalized text form: "cx cy w h", 6 decimals.
inline std::string format_normalized(const NormalizedBox& n) {
    return format_fixed(n.cx) + " " + format_fixed(n.cy) + " " + format_fixed(n.w) + " " +
           format_fixed(n.h);
}

} // namespace mocrop
