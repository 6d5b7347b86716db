#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "mocrop/image.hpp"
#include "mocrop/rng.hpp"
#include "mocrop/types.hpp"

// Seeded synthetic clips with known ground truth: an "actor" rectangle that
// emits strong motion vectors, uniform near-static background noise, and an
// optional camera pan added to every displacement. Frames are schematic flat
// colors; the generator exists to exercise geometry and density logic, not
// recognition.

namespace mocrop {

struct SynthSpec {
    std::uint32_t width = 224;
    std::uint32_t height = 224;
    int num_frames = 8;
    PixelBox actor_box{56, 56, 168, 168};  // ground truth
    int actor_mv_per_frame = 300;
    int noise_mv_per_frame = 30;
    double pan_dx = 0.0;
    double pan_dy = 0.0;
    std::uint64_t seed = 0;
    std::string clip_id = "synth";

    void validate() const {
        if (width == 0 || height == 0) throw ValidationError("frame dimensions must be positive");
        validate_pixel_box(actor_box, width, height);
        if (num_frames < 1) throw ValidationError("clip needs at least one frame");
        if (actor_mv_per_frame < 0 || noise_mv_per_frame < 0) {
            throw ValidationError("vector counts must be non-negative");
        }
    }
};

struct SynthClip {
    ClipMotionField field;
    std::vector<Frame> frames;
    PixelBox truth;
};

// Actor displacements sit well above any sensible epsilon; noise stays below
// 0.5 so a magnitude filter can always separate the two.
inline constexpr double kActorSpeed = 6.0;
inline constexpr double kNoiseSpeedMax = 0.5;

inline SynthClip gen_synthetic(const SynthSpec& spec) {
    spec.validate();
    SeededRng rng(spec.seed);

    SynthClip clip;
    clip.truth = spec.actor_box;
    clip.field.width = spec.width;
    clip.field.height = spec.height;
    clip.field.clip_id = spec.clip_id;

    const auto& a = spec.actor_box;
    for (int f = 0; f < spec.num_frames; ++f) {
        for (int k = 0; k < spec.actor_mv_per_frame; ++k) {
            MotionVector v;
            v.frame_index = static_cast<std::uint32_t>(f);
            v.x = static_cast<float>(rng.real_in(a.x1, a.x2));
            v.y = static_cast<float>(rng.real_in(a.y1, a.y2));
            const double angle = rng.real_in(0.0, 2.0 * std::numbers::pi);
            v.dx = static_cast<float>(kActorSpeed * std::cos(angle) + spec.pan_dx);
            v.dy = static_cast<float>(kActorSpeed * std::sin(angle) + spec.pan_dy);
            clip.field.vectors.push_back(v);
        }
        for (int k = 0; k < spec.noise_mv_per_frame; ++k) {
            MotionVector v;
            v.frame_index = static_cast<std::uint32_t>(f);
            v.x = static_cast<float>(rng.real_in(0.0, spec.width));
            v.y = static_cast<float>(rng.real_in(0.0, spec.height));
            const double angle = rng.real_in(0.0, 2.0 * std::numbers::pi);
            const double speed = rng.real_in(0.0, kNoiseSpeedMax);
            v.dx = static_cast<float>(speed * std::cos(angle) + spec.pan_dx);
            v.dy = static_cast<float>(speed * std::sin(angle) + spec.pan_dy);
            clip.field.vectors.push_back(v);
        }
    }

    // rng.real_in(lo, hi) can in principle return hi under rounding; fold the
    // half-open bound back in rather than rejecting at ingest.
    for (MotionVector& v : clip.field.vectors) {
        if (v.x >= static_cast<float>(spec.width)) v.x = std::nextafter(static_cast<float>(spec.width), 0.0f);
        if (v.y >= static_cast<float>(spec.height)) v.y = std::nextafter(static_cast<float>(spec.height), 0.0f);
    }

    Frame base;
    base.width = static_cast<int>(spec.width);
    base.height = static_cast<int>(spec.height);
    base.rgb.assign(static_cast<std::size_t>(base.width) * base.height * 3, 40);
    for (int y = a.y1; y < a.y2; ++y) {
        for (int x = a.x1; x < a.x2; ++x) {
            std::uint8_t* px = base.pixel(x, y);
            px[0] = 200;
            px[1] = 80;
            px[2] = 80;
        }
    }
    clip.frames.assign(static_cast<std::size_t>(spec.num_frames), base);
    return clip;
}

// ---- Spec set presets for the evaluation harness ---------------------------
//
// All presets are deterministic in (count, base_seed). Placement draws come
// from one generator seeded with base_seed; each clip's own MV seed is
// derived from its index.

namespace detail {

inline PixelBox actor_box_at(double cx, double cy, int side, std::uint32_t width,
                             std::uint32_t height) {
    int x1 = static_cast<int>(std::lround(cx)) - side / 2;
    int y1 = static_cast<int>(std::lround(cy)) - side / 2;
    x1 = std::clamp(x1, 0, static_cast<int>(width) - side);
    y1 = std::clamp(y1, 0, static_cast<int>(height) - side);
    return PixelBox{x1, y1, x1 + side, y1 + side};
}

} // namespace detail

// Actor boxes centered uniformly in the outer half (by area) of the feasible
// center region, so the center crop is systematically misplaced while an
// adaptive crop can still cover the actor fully.
inline std::vector<SynthSpec> make_outer_half_specs(int count, std::uint64_t base_seed) {
    constexpr std::uint32_t kFrame = 224;
    constexpr int kSide = 140;
    const double lo = kSide / 2.0;            // feasible center range per axis
    const double hi = kFrame - kSide / 2.0;
    const double mid = kFrame / 2.0;
    const double inner_half = (hi - lo) / (2.0 * std::numbers::sqrt2);  // inner box of half area

    SeededRng rng(base_seed);
    std::vector<SynthSpec> specs;
    specs.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        double cx = 0.0, cy = 0.0;
        do {
            cx = rng.real_in(lo, hi);
            cy = rng.real_in(lo, hi);
        } while (std::abs(cx - mid) <= inner_half && std::abs(cy - mid) <= inner_half);

        SynthSpec spec;
        spec.width = kFrame;
        spec.height = kFrame;
        spec.num_frames = 8;
        spec.actor_box = detail::actor_box_at(cx, cy, kSide, kFrame, kFrame);
        spec.actor_mv_per_frame = 300;
        spec.noise_mv_per_frame = 30;
        spec.seed = base_seed + 1000003ULL * static_cast<std::uint64_t>(k + 1);
        spec.clip_id = "outer_" + std::to_string(k);
        specs.push_back(spec);
    }
    return specs;
}

// Actors dead center: the regime where a center crop is already optimal.
inline std::vector<SynthSpec> make_centered_specs(int count, std::uint64_t base_seed) {
    constexpr std::uint32_t kFrame = 224;
    constexpr int kSide = 140;
    std::vector<SynthSpec> specs;
    specs.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        SynthSpec spec;
        spec.width = kFrame;
        spec.height = kFrame;
        spec.num_frames = 8;
        spec.actor_box = detail::actor_box_at(kFrame / 2.0, kFrame / 2.0, kSide, kFrame, kFrame);
        spec.actor_mv_per_frame = 300;
        spec.noise_mv_per_frame = 30;
        spec.seed = base_seed + 1000003ULL * static_cast<std::uint64_t>(k + 1);
        spec.clip_id = "center_" + std::to_string(k);
        specs.push_back(spec);
    }
    return specs;
}

// Noise-dominated clips (noise:actor vectors 10:1, noise displacements below
// the generator's 0.5 ceiling) with actors placed anywhere feasible.
inline std::vector<SynthSpec> make_noise_heavy_specs(int count, std::uint64_t base_seed) {
    constexpr std::uint32_t kFrame = 224;
    constexpr int kSide = 120;
    SeededRng rng(base_seed);
    std::vector<SynthSpec> specs;
    specs.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        const double cx = rng.real_in(kSide / 2.0, kFrame - kSide / 2.0);
        const double cy = rng.real_in(kSide / 2.0, kFrame - kSide / 2.0);
        SynthSpec spec;
        spec.width = kFrame;
        spec.height = kFrame;
        spec.num_frames = 8;
        spec.actor_box = detail::actor_box_at(cx, cy, kSide, kFrame, kFrame);
        spec.actor_mv_per_frame = 60;
        spec.noise_mv_per_frame = 600;
        spec.seed = base_seed + 1000003ULL * static_cast<std::uint64_t>(k + 1);
        spec.clip_id = "noise_" + std::to_string(k);
        specs.push_back(spec);
    }
    return specs;
}

// Pan-dominated clips: the noise-heavy layout plus a 5 px camera pan in a
// random per-clip direction.
inline std::vector<SynthSpec> make_pan_specs(int count, std::uint64_t base_seed) {
    std::vector<SynthSpec> specs = make_noise_heavy_specs(count, base_seed);
    SeededRng rng(base_seed ^ 0x5851f42d4c957f2dULL);
    for (int k = 0; k < count; ++k) {
        const double angle = rng.real_in(0.0, 2.0 * std::numbers::pi);
        specs[static_cast<std::size_t>(k)].pan_dx = 5.0 * std::cos(angle);
        specs[static_cast<std::size_t>(k)].pan_dy = 5.0 * std::sin(angle);
        specs[static_cast<std::size_t>(k)].clip_id = "pan_" + std::to_string(k);
    }
    return specs;
}

} // namespace mocrop
