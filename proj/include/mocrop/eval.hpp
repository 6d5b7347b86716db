#pragma once

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mocrop/geometry.hpp"
#include "mocrop/pipeline.hpp"
#include "mocrop/synth.hpp"
#include "mocrop/types.hpp"

// Crop-policy scoring on synthetic clips: MoCrop vs. a fixed center crop vs.
// a seeded random crop of the same area, each measured by IoU against the
// generator's ground-truth actor box.

namespace mocrop {

inline double iou(const PixelBox& a, const PixelBox& b) {
    const int ix1 = std::max(a.x1, b.x1);
    const int iy1 = std::max(a.y1, b.y1);
    const int ix2 = std::min(a.x2, b.x2);
    const int iy2 = std::min(a.y2, b.y2);
    const std::int64_t inter = (ix2 > ix1 && iy2 > iy1)
                                   ? static_cast<std::int64_t>(ix2 - ix1) * (iy2 - iy1)
                                   : 0;
    const std::int64_t uni = a.area() + b.area() - inter;
    return uni > 0 ? static_cast<double>(inter) / static_cast<double>(uni) : 0.0;
}

// Same dimensions as the center crop, placed uniformly at random. The seed
// derives from the clip seed so reports are reproducible clip by clip.
inline PixelBox random_crop_box(std::uint32_t width, std::uint32_t height, double alpha,
                                std::uint64_t clip_seed) {
    const PixelBox c = center_crop_box(width, height, alpha);
    SeededRng rng(clip_seed ^ 0x9e3779b97f4a7c15ULL);
    const int x1 = static_cast<int>(rng.bounded(static_cast<std::uint64_t>(width) - c.width() + 1));
    const int y1 = static_cast<int>(rng.bounded(static_cast<std::uint64_t>(height) - c.height() + 1));
    return PixelBox{x1, y1, x1 + c.width(), y1 + c.height()};
}

struct EvalReport {
    struct ClipResult {
        std::string clip_id;
        double mocrop = 0.0;
        double center = 0.0;
        double random = 0.0;
    };
    std::vector<ClipResult> clips;
    double mean_mocrop = 0.0;
    double mean_center = 0.0;
    double mean_random = 0.0;
};

inline EvalReport evaluate(const std::vector<SynthSpec>& specs, const MoCropConfig& cfg) {
    if (specs.empty()) throw ValidationError("evaluate needs at least one clip spec");
    cfg.validate();

    EvalReport report;
    report.clips.reserve(specs.size());
    for (const SynthSpec& spec : specs) {
        const SynthClip clip = gen_synthetic(spec);
        const CropDecision decision = run_mocrop(clip.field, cfg);

        EvalReport::ClipResult row;
        row.clip_id = spec.clip_id;
        row.mocrop = iou(decision.pixel, clip.truth);
        row.center = iou(center_crop_box(spec.width, spec.height, cfg.alpha), clip.truth);
        row.random = iou(random_crop_box(spec.width, spec.height, cfg.alpha, spec.seed), clip.truth);
        report.mean_mocrop += row.mocrop;
        report.mean_center += row.center;
        report.mean_random += row.random;
        report.clips.push_back(std::move(row));
    }
    const auto n = static_cast<double>(report.clips.size());
    report.mean_mocrop /= n;
    report.mean_center /= n;
    report.mean_random /= n;
    return report;
}

// Line-oriented log: one line per clip, then a "mean" line.
inline void write_report_text(const EvalReport& r, std::ostream& out) {
    for (std::size_t k = 0; k < r.clips.size(); ++k) {
        const auto& c = r.clips[k];
        out << "clip " << k << " id " << c.clip_id << " mocrop " << format_fixed(c.mocrop)
            << " center " << format_fixed(c.center) << " random " << format_fixed(c.random)
            << '\n';
    }
    out << "mean mocrop " << format_fixed(r.mean_mocrop) << " center "
        << format_fixed(r.mean_center) << " random " << format_fixed(r.mean_random) << '\n';
}

// Machine-readable summary, config echoed for provenance.
inline nlohmann::json report_summary(const EvalReport& r, const MoCropConfig& cfg) {
    nlohmann::json cfg_echo{
        {"grid", std::to_string(cfg.grid.rows) + "x" + std::to_string(cfg.grid.cols)},
        {"alpha", cfg.alpha},
        {"delta", cfg.delta},
        {"samples", cfg.sample_budget},
        {"seed", cfg.seed},
        {"dm", cfg.enable_dm},
        {"mcs", cfg.enable_mcs},
        {"gmc", cfg.enable_gmc},
        {"flat_fallback", cfg.flat_fallback},
    };
    if (cfg.epsilon) {
        cfg_echo["epsilon"] = *cfg.epsilon;
    } else {
        cfg_echo["epsilon_percentile"] = *cfg.epsilon_percentile;
    }
    return nlohmann::json{
        {"clips", r.clips.size()},
        {"mean_iou",
         {{"mocrop", r.mean_mocrop}, {"center", r.mean_center}, {"random", r.mean_random}}},
        {"config", cfg_echo},
    };
}

} // namespace mocrop
