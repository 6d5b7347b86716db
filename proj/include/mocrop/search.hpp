#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mocrop/errors.hpp"
#include "mocrop/types.hpp"

// Stage 3: area-constrained maximum-mass submatrix search over the MD map.
//
// Three backends with an identical contract, including the tie-break order
// (max score, then smallest i, j, height, width):
//
//   search_naive    - direct summation per window, O(h^3 w^3) worst case.
//                     Reference backend for the other two; kept free of
//                     shared scoring code.
//   search_integral - 2D integral image, O(1) per window, O(#candidates).
//   search_sliding  - fixed single shape, running row/column sums, O(hw).

namespace mocrop {

struct Shape {
    int height = 1;  // H_s
    int width = 1;   // W_s

    friend bool operator==(const Shape&, const Shape&) = default;
    friend auto operator<=>(const Shape&, const Shape&) = default;
};

using ShapeSet = std::vector<Shape>;

struct SearchResult {
    GridBox box;
    std::int64_t score = 0;

    friend bool operator==(const SearchResult&, const SearchResult&) = default;
};

// All (height, width) pairs whose cell area lies in the band
// [(1-delta)*alpha*h*w, (1+delta)*alpha*h*w], ascending by (height, width).
// An empty band is a configuration error.
inline ShapeSet enumerate_shapes(const GridSpec& grid, double alpha, double delta) {
    const double target = alpha * grid.rows * grid.cols;
    const double lo = (1.0 - delta) * target;
    const double hi = (1.0 + delta) * target;
    ShapeSet shapes;
    for (int height = 1; height <= grid.rows; ++height) {
        for (int width = 1; width <= grid.cols; ++width) {
            const double area = static_cast<double>(height) * width;
            if (area >= lo && area <= hi) shapes.push_back({height, width});
        }
    }
    if (shapes.empty()) {
        throw ConfigError("area band [" + std::to_string(lo) + ", " + std::to_string(hi) +
                          "] admits no rectangle on a " + std::to_string(grid.rows) + "x" +
                          std::to_string(grid.cols) + " grid");
    }
    return shapes;
}

// Shared tie-break for the integral and sliding backends: higher score wins;
// equal scores prefer the lexicographically smaller (i, j, height, width).
inline bool improves(const SearchResult& cand, const SearchResult& best) {
    if (cand.score != best.score) return cand.score > best.score;
    const auto key = [](const GridBox& b) {
        return std::tuple(b.i, b.j, b.height, b.width);
    };
    return key(cand.box) < key(best.box);
}

// Reference backend: every window summed cell by cell. Deliberately
// self-contained, including its own tie-break, so it can vouch for the
// fast backends.
inline SearchResult search_naive(const MotionDensityMap& map, const ShapeSet& shapes) {
    if (shapes.empty()) throw ConfigError("search requires a non-empty shape set");
    const GridSpec& g = map.grid;
    bool have_best = false;
    SearchResult best;
    for (const Shape& s : shapes) {
        for (int i = 0; i + s.height <= g.rows; ++i) {
            for (int j = 0; j + s.width <= g.cols; ++j) {
                std::int64_t mass = 0;
                for (int p = i; p < i + s.height; ++p) {
                    for (int q = j; q < j + s.width; ++q) {
                        mass += map.at(p, q);
                    }
                }
                bool take = !have_best;
                if (have_best) {
                    if (mass > best.score) {
                        take = true;
                    } else if (mass == best.score) {
                        take = std::tuple(i, j, s.height, s.width) <
                               std::tuple(best.box.i, best.box.j, best.box.height, best.box.width);
                    }
                }
                if (take) {
                    best = SearchResult{GridBox{i, j, s.height, s.width}, mass};
                    have_best = true;
                }
            }
        }
    }
    return best;
}

// Prefix-sum table with a zero row/column: table(i, j) holds the sum of all
// counts in rows < i, cols < j, so any window sum is four lookups.
struct IntegralImage {
    GridSpec grid;
    std::vector<std::int64_t> table;  // (rows+1) x (cols+1), row-major

    std::int64_t at(int i, int j) const {
        return table[static_cast<std::size_t>(i) * (grid.cols + 1) + j];
    }
    std::int64_t& at(int i, int j) {
        return table[static_cast<std::size_t>(i) * (grid.cols + 1) + j];
    }

    std::int64_t window_sum(const GridBox& b) const {
        return at(b.i + b.height, b.j + b.width) - at(b.i, b.j + b.width) -
               at(b.i + b.height, b.j) + at(b.i, b.j);
    }
};

inline IntegralImage build_integral(const MotionDensityMap& map) {
    IntegralImage img;
    img.grid = map.grid;
    img.table.assign(static_cast<std::size_t>(map.grid.rows + 1) * (map.grid.cols + 1), 0);
    for (int i = 0; i < map.grid.rows; ++i) {
        for (int j = 0; j < map.grid.cols; ++j) {
            img.at(i + 1, j + 1) =
                map.at(i, j) + img.at(i, j + 1) + img.at(i + 1, j) - img.at(i, j);
        }
    }
    return img;
}

inline SearchResult search_integral(const MotionDensityMap& map, const ShapeSet& shapes) {
    if (shapes.empty()) throw ConfigError("search requires a non-empty shape set");
    const IntegralImage img = build_integral(map);
    const GridSpec& g = map.grid;
    bool have_best = false;
    SearchResult best;
    for (const Shape& s : shapes) {
        for (int i = 0; i + s.height <= g.rows; ++i) {
            for (int j = 0; j + s.width <= g.cols; ++j) {
                const GridBox box{i, j, s.height, s.width};
                const SearchResult cand{box, img.window_sum(box)};
                if (!have_best || improves(cand, best)) {
                    best = cand;
                    have_best = true;
                }
            }
        }
    }
    return best;
}

// Fixed-shape backend: horizontal running sums of width W_s per row, then
// vertical running sums of height H_s down each column.
inline SearchResult search_sliding(const MotionDensityMap& map, Shape shape) {
    const GridSpec& g = map.grid;
    if (shape.height < 1 || shape.height > g.rows || shape.width < 1 || shape.width > g.cols) {
        throw ConfigError("sliding-window shape does not fit the grid");
    }
    const int row_positions = g.cols - shape.width + 1;

    std::vector<std::int64_t> row_sums(static_cast<std::size_t>(g.rows) * row_positions, 0);
    for (int i = 0; i < g.rows; ++i) {
        std::int64_t run = 0;
        for (int q = 0; q < shape.width; ++q) run += map.at(i, q);
        row_sums[static_cast<std::size_t>(i) * row_positions] = run;
        for (int j = 1; j < row_positions; ++j) {
            run += map.at(i, j + shape.width - 1) - map.at(i, j - 1);
            row_sums[static_cast<std::size_t>(i) * row_positions + j] = run;
        }
    }

    bool have_best = false;
    SearchResult best;
    for (int j = 0; j < row_positions; ++j) {
        std::int64_t run = 0;
        for (int p = 0; p < shape.height; ++p) {
            run += row_sums[static_cast<std::size_t>(p) * row_positions + j];
        }
        for (int i = 0; i + shape.height <= g.rows; ++i) {
            if (i > 0) {
                run += row_sums[static_cast<std::size_t>(i + shape.height - 1) * row_positions + j] -
                       row_sums[static_cast<std::size_t>(i - 1) * row_positions + j];
            }
            const SearchResult cand{GridBox{i, j, shape.height, shape.width}, run};
            if (!have_best || improves(cand, best)) {
                best = cand;
                have_best = true;
            }
        }
    }
    return best;
}

// Sliding backend lifted to a shape set: best per-shape result under the
// common tie-break.
inline SearchResult search_sliding_best(const MotionDensityMap& map, const ShapeSet& shapes) {
    if (shapes.empty()) throw ConfigError("search requires a non-empty shape set");
    bool have_best = false;
    SearchResult best;
    for (const Shape& s : shapes) {
        const SearchResult cand = search_sliding(map, s);
        if (!have_best || improves(cand, best)) {
            best = cand;
            have_best = true;
        }
    }
    return best;
}

} // namespace mocrop
