#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mocrop/errors.hpp"

namespace mocrop {

// One codec motion vector: origin point in frame coordinates ((0,0) top-left)
// plus a displacement, attributed to the frame it was decoded from. Origins
// are sub-pixel (macroblock centers); f32 is exact for quarter-pel codec data.
struct MotionVector {
    std::uint32_t frame_index = 0;
    float x = 0.0f;
    float y = 0.0f;
    float dx = 0.0f;
    float dy = 0.0f;

    friend bool operator==(const MotionVector&, const MotionVector&) = default;
};

inline double magnitude(const MotionVector& v) {
    return std::sqrt(static_cast<double>(v.dx) * v.dx +
                     static_cast<double>(v.dy) * v.dy);
}

// All motion vectors of one clip, in ingest order, plus frame dimensions.
struct ClipMotionField {
    std::uint32_t width = 0;
    std::uint32_t height = 0;
    std::string clip_id;
    std::vector<MotionVector> vectors;

    std::size_t size() const { return vectors.size(); }
    bool empty() const { return vectors.empty(); }

    friend bool operator==(const ClipMotionField&, const ClipMotionField&) = default;

    // Equality of frame dimensions and vectors, ignoring clip_id. The binary
    // sidecar header has no clip_id field, so round-trips through it compare
    // with this.
    bool same_content(const ClipMotionField& o) const {
        return width == o.width && height == o.height && vectors == o.vectors;
    }
};

// Throws ValidationError if v lies outside the half-open frame bounds or
// carries non-finite values. `where` names the record in the message.
inline void validate_vector(const MotionVector& v, std::uint32_t width,
                            std::uint32_t height, const std::string& where) {
    if (!std::isfinite(v.x) || !std::isfinite(v.y) ||
        !std::isfinite(v.dx) || !std::isfinite(v.dy)) {
        throw ValidationError(where + ": non-finite coordinate or displacement");
    }
    if (v.x < 0.0f || v.x >= static_cast<float>(width) ||
        v.y < 0.0f || v.y >= static_cast<float>(height)) {
        throw ValidationError(where + ": origin (" + std::to_string(v.x) + ", " +
                              std::to_string(v.y) + ") outside frame " +
                              std::to_string(width) + "x" + std::to_string(height));
    }
}

inline void validate_field(const ClipMotionField& field) {
    if (field.width == 0 || field.height == 0) {
        throw ValidationError("frame dimensions must be positive");
    }
    for (std::size_t k = 0; k < field.vectors.size(); ++k) {
        validate_vector(field.vectors[k], field.width, field.height,
                        "record " + std::to_string(k));
    }
}

// h x w cell grid a frame is discretized into.
struct GridSpec {
    int rows = 6;
    int cols = 8;

    int cells() const { return rows * cols; }

    friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

// Keeps naive search tractable; the configured grids are tiny in practice.
inline constexpr int kMaxGridCells = 4096;

inline void validate_grid(const GridSpec& g, int max_cells = kMaxGridCells) {
    if (g.rows < 1 || g.cols < 1) {
        throw ConfigError("grid must have at least one row and one column");
    }
    if (g.rows > max_cells || g.cols > max_cells || g.cells() > max_cells) {
        throw ConfigError("grid " + std::to_string(g.rows) + "x" +
                          std::to_string(g.cols) + " exceeds " +
                          std::to_string(max_cells) + " cells");
    }
}

// Motion-density map: per-cell counts of sampled motion vector origins.
struct MotionDensityMap {
    GridSpec grid;
    std::vector<std::int64_t> counts;  // row-major, grid.rows * grid.cols
    std::int64_t total = 0;

    std::int64_t at(int i, int j) const { return counts[static_cast<std::size_t>(i) * grid.cols + j]; }
    std::int64_t& at(int i, int j) { return counts[static_cast<std::size_t>(i) * grid.cols + j]; }

    friend bool operator==(const MotionDensityMap&, const MotionDensityMap&) = default;
};

// Axis-aligned cell rectangle: top-left cell (i,j), extent height x width cells.
struct GridBox {
    int i = 0;
    int j = 0;
    int height = 1;  // H_s
    int width = 1;   // W_s

    friend bool operator==(const GridBox&, const GridBox&) = default;
};

inline bool box_valid_for(const GridBox& b, const GridSpec& g) {
    return b.height >= 1 && b.height <= g.rows && b.width >= 1 && b.width <= g.cols &&
           b.i >= 0 && b.i <= g.rows - b.height && b.j >= 0 && b.j <= g.cols - b.width;
}

// Center/size box as fractions of frame dimensions.
struct NormalizedBox {
    double cx = 0.5;
    double cy = 0.5;
    double w = 1.0;
    double h = 1.0;

    friend bool operator==(const NormalizedBox&, const NormalizedBox&) = default;
};

// Half-open pixel rectangle [x1,x2) x [y1,y2).
struct PixelBox {
    int x1 = 0;
    int y1 = 0;
    int x2 = 0;
    int y2 = 0;

    int width() const { return x2 - x1; }
    int height() const { return y2 - y1; }
    std::int64_t area() const { return static_cast<std::int64_t>(width()) * height(); }

    friend bool operator==(const PixelBox&, const PixelBox&) = default;
};

inline void validate_pixel_box(const PixelBox& b, std::uint32_t width, std::uint32_t height) {
    if (b.x1 < 0 || b.y1 < 0 || b.x1 >= b.x2 || b.y1 >= b.y2 ||
        b.x2 > static_cast<int>(width) || b.y2 > static_cast<int>(height)) {
        throw ValidationError("pixel box (" + std::to_string(b.x1) + "," + std::to_string(b.y1) +
                              ")-(" + std::to_string(b.x2) + "," + std::to_string(b.y2) +
                              ") invalid for frame " + std::to_string(width) + "x" +
                              std::to_string(height));
    }
}

// Full pipeline configuration. Exactly one of epsilon / epsilon_percentile is
// active; the percentile route is the default since a fixed threshold rarely
// transfers across codecs.
struct MoCropConfig {
    std::optional<double> epsilon;                   // absolute |dp| threshold
    std::optional<double> epsilon_percentile = 25.0; // percentile of |dp| per clip
    std::size_t sample_budget = 4096;                // N
    GridSpec grid{6, 8};
    double alpha = 0.75;  // target crop area as a fraction of frame area
    double delta = 0.1;   // area band tolerance
    std::uint64_t seed = 0;
    bool enable_dm = true;
    bool enable_mcs = true;
    bool enable_gmc = false;
    bool flat_fallback = true;
    double flatness_threshold = 0.0;  // 0 => fall back only on zero/uniform maps

    void validate() const {
        if (epsilon.has_value() == epsilon_percentile.has_value()) {
            throw ConfigError("exactly one of epsilon / epsilon_percentile must be set");
        }
        if (epsilon && (!std::isfinite(*epsilon) || *epsilon < 0.0)) {
            throw ConfigError("epsilon must be finite and >= 0");
        }
        if (epsilon_percentile &&
            (!std::isfinite(*epsilon_percentile) || *epsilon_percentile < 0.0 ||
             *epsilon_percentile >= 100.0)) {
            throw ConfigError("epsilon percentile must lie in [0,100)");
        }
        if (sample_budget < 1) {
            throw ConfigError("sample budget must be >= 1");
        }
        validate_grid(grid);
        if (!(alpha > 0.0 && alpha <= 1.0)) {
            throw ConfigError("alpha must lie in (0,1]");
        }
        if (!(delta >= 0.0 && delta < 1.0)) {
            throw ConfigError("delta must lie in [0,1)");
        }
        if (!(flatness_threshold >= 0.0 && flatness_threshold <= 1.0)) {
            throw ConfigError("flatness threshold must lie in [0,1]");
        }
    }
};

enum class CropMode {
    adaptive,
    center_fallback,
};

inline const char* to_string(CropMode m) {
    return m == CropMode::adaptive ? "adaptive" : "center_fallback";
}

// The per-clip result: the chosen box in all three coordinate systems plus
// provenance. md_map is retained for diagnostics (map export, flatness checks).
struct CropDecision {
    std::optional<GridBox> grid_box;  // absent in fallback mode
    NormalizedBox normalized;
    PixelBox pixel;
    CropMode mode = CropMode::adaptive;
    std::int64_t score = 0;  // motion mass inside grid_box; 0 for fallback
    MotionDensityMap md_map;
};

} // namespace mocrop
