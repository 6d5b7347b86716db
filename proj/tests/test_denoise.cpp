#include <catch2/catch_amalgamated.hpp>

#include "mocrop/denoise.hpp"
#include "mocrop/rng.hpp"

#include "support/oracles.hpp"

using namespace mocrop;

namespace {

ClipMotionField field_with_displacements(const std::vector<std::pair<float, float>>& disps) {
    ClipMotionField field;
    field.width = 100;
    field.height = 100;
    for (std::size_t k = 0; k < disps.size(); ++k) {
        MotionVector v;
        v.frame_index = static_cast<std::uint32_t>(k / 3);
        v.x = static_cast<float>(k % 10) * 5.0f;
        v.y = static_cast<float>(k % 7) * 5.0f;
        v.dx = disps[k].first;
        v.dy = disps[k].second;
        field.vectors.push_back(v);
    }
    return field;
}

ClipMotionField random_motion(std::size_t count, std::uint64_t seed) {
    SeededRng rng(seed);
    std::vector<std::pair<float, float>> disps;
    disps.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        disps.emplace_back(static_cast<float>(rng.real_in(-8.0, 8.0)),
                           static_cast<float>(rng.real_in(-8.0, 8.0)));
    }
    return field_with_displacements(disps);
}

} // namespace

TEST_CASE("percentile: nearest rank on [0,0,0,5] at q=50 is 0", "[denoise]") {
    const auto field = field_with_displacements({{0, 0}, {0, 0}, {0, 0}, {5, 0}});
    CHECK(epsilon_from_percentile(field, 50.0) == 0.0);
}

TEST_CASE("percentile: q=0 returns the minimum", "[denoise]") {
    const auto field = field_with_displacements({{1, 0}, {2, 0}, {3, 0}, {4, 0}});
    CHECK(epsilon_from_percentile(field, 0.0) == 1.0);
}

TEST_CASE("percentile: matches the sort-and-index oracle on random data", "[denoise]") {
    const auto field = random_motion(1000, 99);
    std::vector<double> mags;
    for (const auto& v : field.vectors) mags.push_back(magnitude(v));
    for (double q : {0.0, 10.0, 25.0, 30.0, 50.0, 90.0, 99.9}) {
        CHECK(epsilon_from_percentile(field, q) == oracle::percentile(mags, q));
    }
}

TEST_CASE("percentile: empty field is an error", "[denoise]") {
    ClipMotionField empty;
    empty.width = empty.height = 10;
    CHECK_THROWS_AS(epsilon_from_percentile(empty, 25.0), ValidationError);
}

TEST_CASE("filter: strict inequality drops zero vectors at epsilon 0", "[denoise]") {
    const auto field = field_with_displacements({{0, 0}, {0, 0}});
    CHECK(filter_static(field, 0.0).empty());
}

TEST_CASE("filter: boundary behavior around magnitude 5", "[denoise]") {
    const auto field = field_with_displacements({{3, 4}});
    CHECK(filter_static(field, 5.0).empty());     // 5 > 5 is false
    CHECK(filter_static(field, 4.9).size() == 1);
    CHECK(filter_static(field, -0.0).size() == 1);
}

TEST_CASE("filter: empty field stays empty", "[denoise]") {
    ClipMotionField empty;
    empty.width = empty.height = 10;
    CHECK(filter_static(empty, 1.0).empty());
}

TEST_CASE("filter: monotone in epsilon and idempotent", "[denoise]") {
    const auto field = random_motion(500, 7);
    double prev_eps = 0.0;
    std::size_t prev_size = filter_static(field, prev_eps).size();
    for (double eps : {0.5, 1.0, 2.0, 4.0, 8.0}) {
        const auto filtered = filter_static(field, eps);
        CHECK(filtered.size() <= prev_size);
        // kept set is a subsequence of the looser filter's kept set
        CHECK(filter_static(filtered, eps) == filtered);
        prev_size = filtered.size();
    }
}

TEST_CASE("merge: pools frames without touching the sequence", "[denoise]") {
    auto field = random_motion(6, 3);
    field.vectors[0].frame_index = 0;
    field.vectors[3].frame_index = 1;
    const auto merged = merge_frames(field);
    CHECK(merged == field);
    CHECK(merged.size() == 6);
}

TEST_CASE("gmc: constant pan is removed entirely", "[denoise]") {
    const auto field = field_with_displacements({{2, 0}, {2, 0}, {2, 0}});
    const auto out = global_motion_compensate(field);
    for (const auto& v : out.vectors) {
        CHECK(v.dx == 0.0f);
        CHECK(v.dy == 0.0f);
    }
}

TEST_CASE("gmc: odd count takes the exact median", "[denoise]") {
    const auto field = field_with_displacements({{1, 0}, {3, 0}, {5, 0}});
    const auto out = global_motion_compensate(field);
    CHECK(out.vectors[0].dx == -2.0f);
    CHECK(out.vectors[1].dx == 0.0f);
    CHECK(out.vectors[2].dx == 2.0f);
}

TEST_CASE("gmc: even count takes the lower median", "[denoise]") {
    const auto field = field_with_displacements({{1, 0}, {2, 0}, {3, 0}, {4, 0}});
    const auto out = global_motion_compensate(field);
    CHECK(out.vectors[0].dx == -1.0f);  // lower median is 2
}

TEST_CASE("gmc: empty field passes through", "[denoise]") {
    ClipMotionField empty;
    empty.width = empty.height = 10;
    CHECK(global_motion_compensate(empty).empty());
}

TEST_CASE("gmc then filter empties a constant-displacement field", "[denoise]") {
    const auto field = field_with_displacements(
        std::vector<std::pair<float, float>>(20, {4.0f, -3.0f}));
    const auto out = filter_static(global_motion_compensate(field), 0.001);
    CHECK(out.empty());
}

TEST_CASE("gmc preserves origins", "[denoise]") {
    const auto field = random_motion(50, 21);
    const auto out = global_motion_compensate(field);
    REQUIRE(out.size() == field.size());
    for (std::size_t k = 0; k < field.size(); ++k) {
        CHECK(out.vectors[k].x == field.vectors[k].x);
        CHECK(out.vectors[k].y == field.vectors[k].y);
    }
}
