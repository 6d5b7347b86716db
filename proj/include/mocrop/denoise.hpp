#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "mocrop/errors.hpp"
#include "mocrop/types.hpp"

// Stage 1: suppress static/near-static vectors, pool the clip's vectors into
// one working set, and optionally remove a global (camera) motion estimate.

namespace mocrop {

// q-th percentile of the magnitude distribution by nearest rank: the value at
// 0-based index ceil(q/100 * n) - 1 of the ascending sort. q = 0 returns the
// minimum.
inline double epsilon_from_percentile(const ClipMotionField& field, double q) {
    if (field.empty()) {
        throw ValidationError("cannot take a magnitude percentile of an empty field");
    }
    if (!(q >= 0.0 && q < 100.0)) {
        throw ConfigError("percentile must lie in [0,100)");
    }
    std::vector<double> mags;
    mags.reserve(field.size());
    for (const MotionVector& v : field.vectors) mags.push_back(magnitude(v));
    std::sort(mags.begin(), mags.end());
    const auto n = static_cast<double>(mags.size());
    auto idx = static_cast<std::ptrdiff_t>(std::ceil(q * n / 100.0)) - 1;
    if (idx < 0) idx = 0;
    return mags[static_cast<std::size_t>(idx)];
}

// Keeps vectors with magnitude strictly above epsilon; order preserved.
inline ClipMotionField filter_static(const ClipMotionField& field, double epsilon) {
    ClipMotionField out;
    out.width = field.width;
    out.height = field.height;
    out.clip_id = field.clip_id;
    out.vectors.reserve(field.size());
    for (const MotionVector& v : field.vectors) {
        if (magnitude(v) > epsilon) out.vectors.push_back(v);
    }
    return out;
}

// Pools vectors across the clip's frames into one set. Density building
// ignores frame attribution, so this is the identity on the sequence;
// frame_index stays on each record for diagnostics.
inline ClipMotionField merge_frames(const ClipMotionField& field) {
    return field;
}

// Subtracts the component-wise median displacement from every vector. For
// even counts the lower median is used, so the subtracted value is always a
// displacement present in the data. Origins are untouched.
inline ClipMotionField global_motion_compensate(const ClipMotionField& field) {
    if (field.empty()) return field;

    std::vector<float> xs, ys;
    xs.reserve(field.size());
    ys.reserve(field.size());
    for (const MotionVector& v : field.vectors) {
        xs.push_back(v.dx);
        ys.push_back(v.dy);
    }
    const std::size_t mid = (xs.size() - 1) / 2;  // lower median
    std::nth_element(xs.begin(), xs.begin() + static_cast<std::ptrdiff_t>(mid), xs.end());
    std::nth_element(ys.begin(), ys.begin() + static_cast<std::ptrdiff_t>(mid), ys.end());
    const float med_dx = xs[mid];
    const float med_dy = ys[mid];

    ClipMotionField out = field;
    for (MotionVector& v : out.vectors) {
        v.dx -= med_dx;
        v.dy -= med_dy;
    }
    return out;
}

} // namespace mocrop
