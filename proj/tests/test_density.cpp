#include <map>
#include <sstream>

#include <catch2/catch_amalgamated.hpp>

#include "mocrop/density.hpp"
#include "mocrop/rng.hpp"

#include "support/oracles.hpp"

using namespace mocrop;

namespace {

ClipMotionField uniform_field(std::size_t count, std::uint32_t width, std::uint32_t height,
                              std::uint64_t seed) {
    ClipMotionField field;
    field.width = width;
    field.height = height;
    SeededRng rng(seed);
    for (std::size_t k = 0; k < count; ++k) {
        MotionVector v;
        v.frame_index = 0;
        v.x = static_cast<float>(rng.real_in(0.0, width));
        v.y = static_cast<float>(rng.real_in(0.0, height));
        if (v.x >= static_cast<float>(width)) v.x = 0.0f;
        if (v.y >= static_cast<float>(height)) v.y = 0.0f;
        v.dx = 1.0f;
        v.dy = 1.0f;
        field.vectors.push_back(v);
    }
    return field;
}

} // namespace

TEST_CASE("sample: budget covering the field is the identity", "[density]") {
    const auto field = uniform_field(10, 100, 100, 1);
    CHECK(mc_sample(field, 100, 42) == field);
    CHECK(mc_sample(field, 10, 42) == field);
}

TEST_CASE("sample: empty field stays empty for any budget", "[density]") {
    ClipMotionField empty;
    empty.width = empty.height = 10;
    CHECK(mc_sample(empty, 5, 0).empty());
}

TEST_CASE("sample: deterministic for a fixed seed, different across seeds", "[density]") {
    const auto field = uniform_field(1000, 100, 100, 2);
    const auto a = mc_sample(field, 100, 7);
    const auto b = mc_sample(field, 100, 7);
    CHECK(a == b);
    const auto c = mc_sample(field, 100, 8);
    CHECK(a.size() == c.size());
    CHECK_FALSE(a == c);
}

TEST_CASE("sample: output is an order-preserving sub-multiset", "[density]") {
    const auto field = uniform_field(500, 100, 100, 3);
    const auto sampled = mc_sample(field, 80, 9);
    REQUIRE(sampled.size() == 80);
    // Every sampled vector appears in the input, in input order.
    std::size_t cursor = 0;
    for (const auto& v : sampled.vectors) {
        while (cursor < field.size() && !(field.vectors[cursor] == v)) ++cursor;
        REQUIRE(cursor < field.size());
        ++cursor;
    }
}

TEST_CASE("sample: inclusion probability is uniform (binomial 3-sigma)", "[density]") {
    // Light version of the acceptance statistics: fixed field, many seeds,
    // per-vector inclusion frequency k/n within 3 standard errors.
    const std::size_t n = 400;
    const std::size_t k = 100;
    const int trials = 200;
    const auto field = uniform_field(n, 100, 100, 4);

    std::vector<int> included(n, 0);
    for (int t = 0; t < trials; ++t) {
        const auto sampled = mc_sample(field, k, 1000 + static_cast<std::uint64_t>(t));
        std::size_t cursor = 0;
        for (const auto& v : sampled.vectors) {
            while (!(field.vectors[cursor] == v)) ++cursor;
            ++included[cursor];
            ++cursor;
        }
    }
    const double p = static_cast<double>(k) / static_cast<double>(n);
    const double se = std::sqrt(p * (1.0 - p) / trials);
    int outliers = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double freq = static_cast<double>(included[i]) / trials;
        if (std::abs(freq - p) > 3.0 * se) ++outliers;
    }
    // 3 sigma leaves ~0.27% expected outliers; allow a small margin on 400 draws.
    CHECK(outliers <= 4);
}

TEST_CASE("map: single vector at the origin lands in cell (0,0)", "[density]") {
    ClipMotionField field;
    field.width = field.height = 100;
    field.vectors.push_back({0, 0.0f, 0.0f, 1.0f, 1.0f});
    const auto map = build_md_map(field, {2, 2});
    CHECK(map.at(0, 0) == 1);
    CHECK(map.at(0, 1) == 0);
    CHECK(map.at(1, 0) == 0);
    CHECK(map.at(1, 1) == 0);
    CHECK(map.total == 1);
}

TEST_CASE("map: half-open cells put (50,50) into cell (1,1) on a 2x2 grid", "[density]") {
    ClipMotionField field;
    field.width = field.height = 100;
    field.vectors.push_back({0, 50.0f, 50.0f, 1.0f, 1.0f});
    const auto map = build_md_map(field, {2, 2});
    CHECK(map.at(1, 1) == 1);
}

TEST_CASE("map: matches the point-in-rectangle oracle cell by cell", "[density]") {
    const auto field = uniform_field(1000, 224, 224, 5);
    const GridSpec grid{6, 8};
    const auto map = build_md_map(field, grid);
    const auto expected = oracle::cell_counts(field, grid.rows, grid.cols);
    for (int i = 0; i < grid.rows; ++i) {
        for (int j = 0; j < grid.cols; ++j) {
            CHECK(map.at(i, j) == expected[static_cast<std::size_t>(i) * grid.cols + j]);
        }
    }
}

TEST_CASE("map: conservation, total equals the vector count", "[density]") {
    for (std::uint64_t seed : {10ULL, 11ULL, 12ULL}) {
        const auto field = uniform_field(777, 160, 120, seed);
        const auto map = build_md_map(field, {6, 8});
        std::int64_t sum = 0;
        for (auto c : map.counts) sum += c;
        CHECK(sum == 777);
        CHECK(map.total == 777);
    }
}

TEST_CASE("map: 2x refinement sums back to the coarse map", "[density]") {
    // 64x64 frame, 4x4 vs 8x8 grids: cell edges align exactly.
    const auto field = uniform_field(2000, 64, 64, 6);
    const auto coarse = build_md_map(field, {4, 4});
    const auto fine = build_md_map(field, {8, 8});
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            const std::int64_t block = fine.at(2 * i, 2 * j) + fine.at(2 * i, 2 * j + 1) +
                                       fine.at(2 * i + 1, 2 * j) + fine.at(2 * i + 1, 2 * j + 1);
            CHECK(block == coarse.at(i, j));
        }
    }
}

TEST_CASE("flat: all-zero map is flat", "[density]") {
    MotionDensityMap map;
    map.grid = {2, 2};
    map.counts = {0, 0, 0, 0};
    map.total = 0;
    CHECK(is_flat(map, 0.0));
}

TEST_CASE("flat: uniform counts are flat at threshold 0", "[density]") {
    MotionDensityMap map;
    map.grid = {2, 2};
    map.counts = {5, 5, 5, 5};
    map.total = 20;
    CHECK(is_flat(map, 0.0));
}

TEST_CASE("flat: one hot cell is not flat at threshold 0", "[density]") {
    MotionDensityMap map;
    map.grid = {2, 2};
    map.counts = {5, 5, 6, 5};
    map.total = 21;
    CHECK_FALSE(is_flat(map, 0.0));
    CHECK(is_flat(map, 1.0));  // spread 1 <= 1.0 * 21/4
}

TEST_CASE("pgm: 1x1 zero map renders a single zero byte", "[density]") {
    MotionDensityMap map;
    map.grid = {1, 1};
    map.counts = {0};
    map.total = 0;
    std::ostringstream out;
    render_pgm(map, out);
    CHECK(out.str() == std::string("P5\n1 1\n255\n") + std::string(1, '\0'));
}

TEST_CASE("pgm: floor rescale maps [1,2] to [127,255]", "[density]") {
    MotionDensityMap map;
    map.grid = {1, 2};
    map.counts = {1, 2};
    map.total = 3;
    std::ostringstream out;
    render_pgm(map, out);
    const std::string bytes = out.str();
    REQUIRE(bytes.size() == std::string("P5\n2 1\n255\n").size() + 2);
    CHECK(static_cast<unsigned char>(bytes[bytes.size() - 2]) == 127);
    CHECK(static_cast<unsigned char>(bytes[bytes.size() - 1]) == 255);
}

TEST_CASE("pgm: a 6x8 map exports as an 8-wide, 6-high image", "[density]") {
    MotionDensityMap map;
    map.grid = {6, 8};
    map.counts.assign(48, 1);
    map.total = 48;
    std::ostringstream out;
    render_pgm(map, out);
    CHECK(out.str().starts_with("P5\n8 6\n255\n"));
}
