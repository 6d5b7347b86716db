#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <vector>

#include "mocrop/rng.hpp"
#include "mocrop/types.hpp"

// Stage 2: Monte Carlo downsampling of the filtered vectors to a budget, and
// accumulation of origins into the motion-density map.

namespace mocrop {

// Uniform sample of min(budget, |field|) vectors without replacement, via a
// single-pass reservoir (Algorithm R) over the input order. Relative input
// order is preserved in the output. When the budget covers the whole field
// the input is returned untouched and the generator is never advanced.
inline ClipMotionField mc_sample(const ClipMotionField& field, std::size_t budget,
                                 std::uint64_t seed) {
    const std::size_t n = field.size();
    const std::size_t k = std::min(budget, n);
    if (k == n) return field;

    std::vector<std::size_t> picked(k);
    std::iota(picked.begin(), picked.end(), std::size_t{0});
    SeededRng rng(seed);
    for (std::size_t t = k; t < n; ++t) {
        const std::uint64_t j = rng.bounded(t + 1);
        if (j < k) picked[static_cast<std::size_t>(j)] = t;
    }
    std::sort(picked.begin(), picked.end());

    ClipMotionField out;
    out.width = field.width;
    out.height = field.height;
    out.clip_id = field.clip_id;
    out.vectors.reserve(k);
    for (std::size_t idx : picked) out.vectors.push_back(field.vectors[idx]);
    return out;
}

// Counts origins per grid cell. Cells are half-open:
//   C_ij = [j*W/w, (j+1)*W/w) x [i*H/h, (i+1)*H/h)
// so cell indices are floor(y*h/H), floor(x*w/W). The clamp only absorbs
// floating-point rounding at the exact right/bottom edge; genuinely
// out-of-bounds origins were rejected at ingest.
inline MotionDensityMap build_md_map(const ClipMotionField& field, const GridSpec& grid) {
    MotionDensityMap map;
    map.grid = grid;
    map.counts.assign(static_cast<std::size_t>(grid.cells()), 0);
    for (const MotionVector& v : field.vectors) {
        int i = static_cast<int>(std::floor(static_cast<double>(v.y) * grid.rows / field.height));
        int j = static_cast<int>(std::floor(static_cast<double>(v.x) * grid.cols / field.width));
        i = std::clamp(i, 0, grid.rows - 1);
        j = std::clamp(j, 0, grid.cols - 1);
        ++map.at(i, j);
    }
    map.total = static_cast<std::int64_t>(field.size());
    return map;
}

// A map is flat when it carries no usable concentration: zero total motion,
// or a count spread within threshold * total/(h*w). At the default threshold
// of 0 this means "zero total or all counts equal".
inline bool is_flat(const MotionDensityMap& map, double threshold) {
    if (map.total == 0) return true;
    const auto [lo, hi] = std::minmax_element(map.counts.begin(), map.counts.end());
    const double spread = static_cast<double>(*hi - *lo);
    const double scale = static_cast<double>(std::max<std::int64_t>(map.total, 1)) /
                         static_cast<double>(map.grid.cells());
    return spread <= threshold * scale;
}

// Binary PGM export of the map, counts rescaled so the max count maps to 255
// (floor scaling). An all-zero map renders all black.
inline void render_pgm(const MotionDensityMap& map, std::ostream& out) {
    const std::int64_t peak = map.counts.empty()
                                  ? 0
                                  : *std::max_element(map.counts.begin(), map.counts.end());
    std::vector<std::uint8_t> gray(map.counts.size(), 0);
    if (peak > 0) {
        for (std::size_t idx = 0; idx < map.counts.size(); ++idx) {
            gray[idx] = static_cast<std::uint8_t>(map.counts[idx] * 255 / peak);
        }
    }
    out << "P5\n" << map.grid.cols << ' ' << map.grid.rows << "\n255\n";
    out.write(reinterpret_cast<const char*>(gray.data()), static_cast<std::streamsize>(gray.size()));
}

} // namespace mocrop
