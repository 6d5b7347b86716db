#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mocrop/density.hpp"
#include "mocrop/errors.hpp"
#include "mocrop/pipeline.hpp"
#include "mocrop/rng.hpp"
#include "mocrop/search.hpp"

// Microbenchmark harness for the three search backends. Before any timing it
// checks three-way result agreement on the benchmark maps; a disagreement is
// a hard error carrying the differing boxes.

namespace mocrop {

struct BenchRow {
    std::string backend;
    GridSpec grid;
    double median_us = 0.0;
};

struct BenchReport {
    std::vector<BenchRow> rows;
    int runs = 0;
    std::size_t maps_checked = 0;
};

namespace detail {

inline MotionDensityMap random_map(const GridSpec& grid, SeededRng& rng, std::int64_t max_count) {
    MotionDensityMap map;
    map.grid = grid;
    map.counts.resize(static_cast<std::size_t>(grid.cells()));
    map.total = 0;
    for (auto& c : map.counts) {
        c = static_cast<std::int64_t>(rng.bounded(static_cast<std::uint64_t>(max_count + 1)));
        map.total += c;
    }
    return map;
}

template <typename Fn>
double median_time_us(Fn&& fn, int runs) {
    std::vector<double> times;
    times.reserve(static_cast<std::size_t>(runs));
    for (int r = 0; r < runs; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        fn(r);
        const auto t1 = std::chrono::steady_clock::now();
        times.push_back(std::chrono::duration<double, std::micro>(t1 - t0).count());
    }
    std::sort(times.begin(), times.end());
    return times[times.size() / 2];
}

inline std::string describe(const SearchResult& r) {
    return "box(i=" + std::to_string(r.box.i) + ", j=" + std::to_string(r.box.j) +
           ", h=" + std::to_string(r.box.height) + ", w=" + std::to_string(r.box.width) +
           ") score=" + std::to_string(r.score);
}

} // namespace detail

// Times each backend on random maps over the given grids (alpha/delta fix the
// shape band). One map per run, drawn from a seeded pool. Results (the boxes)
// are deterministic; only the timings vary run to run.
inline BenchReport run_bench(const std::vector<GridSpec>& grids, int runs, std::uint64_t seed,
                             double alpha = 0.75, double delta = 0.1) {
    if (runs < 1) throw ConfigError("bench needs at least one run");
    BenchReport report;
    report.runs = runs;

    for (const GridSpec& grid : grids) {
        validate_grid(grid);
        const ShapeSet shapes = enumerate_shapes(grid, alpha, delta);

        SeededRng rng(seed);
        constexpr std::size_t kPoolSize = 32;
        std::vector<MotionDensityMap> pool;
        pool.reserve(kPoolSize);
        for (std::size_t k = 0; k < kPoolSize; ++k) {
            pool.push_back(detail::random_map(grid, rng, 20));
        }

        for (const MotionDensityMap& map : pool) {
            const SearchResult a = search_naive(map, shapes);
            const SearchResult b = search_integral(map, shapes);
            const SearchResult c = search_sliding_best(map, shapes);
            if (!(a == b && b == c)) {
                throw Error("backend disagreement on " + std::to_string(grid.rows) + "x" +
                            std::to_string(grid.cols) + ": naive " + detail::describe(a) +
                            ", integral " + detail::describe(b) + ", sliding " +
                            detail::describe(c));
            }
            ++report.maps_checked;
        }

        const auto map_for = [&](int r) -> const MotionDensityMap& {
            return pool[static_cast<std::size_t>(r) % pool.size()];
        };
        report.rows.push_back({"naive", grid, detail::median_time_us(
            [&](int r) { search_naive(map_for(r), shapes); }, runs)});
        report.rows.push_back({"integral", grid, detail::median_time_us(
            [&](int r) { search_integral(map_for(r), shapes); }, runs)});
        report.rows.push_back({"sliding", grid, detail::median_time_us(
            [&](int r) { search_sliding_best(map_for(r), shapes); }, runs)});
        report.rows.push_back({"sliding-single", grid, detail::median_time_us(
            [&](int r) { search_sliding(map_for(r), shapes.front()); }, runs)});
    }
    return report;
}

} // namespace mocrop
