#pragma once

#include <string>

#include "mocrop/denoise.hpp"
#include "mocrop/density.hpp"
#include "mocrop/errors.hpp"
#include "mocrop/geometry.hpp"
#include "mocrop/search.hpp"
#include "mocrop/types.hpp"

// The full per-clip pipeline: one crop box per clip, computed once and applied
// to every frame.

namespace mocrop {

namespace detail {

inline CropDecision fallback_decision(const ClipMotionField& field, const MoCropConfig& cfg,
                                      MotionDensityMap md) {
    CropDecision d;
    d.mode = CropMode::center_fallback;
    d.pixel = center_crop_box(field.width, field.height, cfg.alpha);
    d.normalized = pixels_to_normalized(d.pixel, field.width, field.height);
    d.score = 0;
    d.md_map = std::move(md);
    return d;
}

} // namespace detail

// merge -> (GMC) -> filter -> (sample) -> MD map -> flat check -> search ->
// normalize -> pixel map. Disabling DM skips the magnitude filter; disabling
// MCS uses every filtered vector. An empty working set or a collapsed pixel
// box falls back to the center crop rather than failing the clip.
inline CropDecision run_mocrop(const ClipMotionField& field, const MoCropConfig& cfg) {
    cfg.validate();
    const ShapeSet shapes = enumerate_shapes(cfg.grid, cfg.alpha, cfg.delta);

    ClipMotionField working = merge_frames(field);
    if (cfg.enable_gmc) working = global_motion_compensate(working);
    if (cfg.enable_dm && !working.empty()) {
        const double eps =
            cfg.epsilon ? *cfg.epsilon : epsilon_from_percentile(working, *cfg.epsilon_percentile);
        working = filter_static(working, eps);
    }
    if (cfg.enable_mcs) working = mc_sample(working, cfg.sample_budget, cfg.seed);

    MotionDensityMap md = build_md_map(working, cfg.grid);
    if (cfg.flat_fallback && is_flat(md, cfg.flatness_threshold)) {
        return detail::fallback_decision(field, cfg, std::move(md));
    }

    const SearchResult found = search_integral(md, shapes);
    const NormalizedBox norm = grid_to_normalized(found.box, cfg.grid);
    PixelBox pixel;
    try {
        pixel = normalized_to_pixels(norm, field.width, field.height);
    } catch (const DegenerateBoxError&) {
        return detail::fallback_decision(field, cfg, std::move(md));
    }

    CropDecision d;
    d.grid_box = found.box;
    d.normalized = norm;
    d.pixel = pixel;
    d.mode = CropMode::adaptive;
    d.score = found.score;
    d.md_map = std::move(md);
    return d;
}

// Decision text format (stable CLI contract):
//   mode <adaptive|center_fallback>
//   norm <cx> <cy> <w> <h>
//   pixel <x1> <y1> <x2> <y2>
//   score <n>
inline std::string format_decision(const CropDecision& d) {
    std::string out;
    out += "mode ";
    out += to_string(d.mode);
    out += "\nnorm " + format_normalized(d.normalized);
    out += "\npixel " + std::to_string(d.pixel.x1) + " " + std::to_string(d.pixel.y1) + " " +
           std::to_string(d.pixel.x2) + " " + std::to_string(d.pixel.y2);
    out += "\nscore " + std::to_string(d.score) + "\n";
    return out;
}

} // namespace mocrop
