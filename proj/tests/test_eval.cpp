#include <sstream>

#include <catch2/catch_amalgamated.hpp>

#include "mocrop/eval.hpp"

using namespace mocrop;
using Catch::Matchers::WithinAbs;

namespace {

MoCropConfig eval_config() {
    MoCropConfig cfg;
    cfg.alpha = 0.5;
    cfg.delta = 0.1;
    cfg.seed = 42;
    return cfg;
}

} // namespace

TEST_CASE("iou: identical boxes score 1", "[eval]") {
    CHECK(iou({10, 10, 50, 50}, {10, 10, 50, 50}) == 1.0);
}

TEST_CASE("iou: disjoint boxes score 0", "[eval]") {
    CHECK(iou({0, 0, 10, 10}, {20, 20, 30, 30}) == 0.0);
}

TEST_CASE("iou: half-overlapping boxes score 1/3", "[eval]") {
    CHECK_THAT(iou({0, 0, 100, 100}, {50, 0, 150, 100}), WithinAbs(1.0 / 3.0, 1e-12));
}

TEST_CASE("random crop: stays inside the frame and is seed-stable", "[eval]") {
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
        const PixelBox a = random_crop_box(224, 224, 0.5, seed);
        const PixelBox b = random_crop_box(224, 224, 0.5, seed);
        CHECK(a == b);
        CHECK(a.x1 >= 0);
        CHECK(a.y1 >= 0);
        CHECK(a.x2 <= 224);
        CHECK(a.y2 <= 224);
        CHECK(a.area() == center_crop_box(224, 224, 0.5).area());
    }
}

TEST_CASE("evaluate: centered actors make center crop about as good as mocrop", "[eval]") {
    const auto specs = make_centered_specs(10, 77);
    const EvalReport report = evaluate(specs, eval_config());
    CHECK(std::abs(report.mean_mocrop - report.mean_center) < 0.15);
    CHECK(report.mean_center > 0.6);
}

TEST_CASE("evaluate: zero-motion clips degenerate to the center policy", "[eval]") {
    std::vector<SynthSpec> specs;
    for (int k = 0; k < 5; ++k) {
        SynthSpec spec;
        spec.actor_mv_per_frame = 0;
        spec.noise_mv_per_frame = 0;
        spec.seed = static_cast<std::uint64_t>(k);
        spec.clip_id = "still_" + std::to_string(k);
        specs.push_back(spec);
    }
    const EvalReport report = evaluate(specs, eval_config());
    for (const auto& row : report.clips) {
        CHECK(row.mocrop == row.center);
    }
}

TEST_CASE("evaluate: report is deterministic and well-formed", "[eval]") {
    const auto specs = make_outer_half_specs(5, 3);
    const MoCropConfig cfg = eval_config();
    const EvalReport a = evaluate(specs, cfg);
    const EvalReport b = evaluate(specs, cfg);

    std::ostringstream ta, tb;
    write_report_text(a, ta);
    write_report_text(b, tb);
    CHECK(ta.str() == tb.str());

    for (const auto& row : a.clips) {
        CHECK(row.mocrop >= 0.0);
        CHECK(row.mocrop <= 1.0);
        CHECK(row.center >= 0.0);
        CHECK(row.center <= 1.0);
        CHECK(row.random >= 0.0);
        CHECK(row.random <= 1.0);
    }

    const auto summary = report_summary(a, cfg);
    CHECK(summary["clips"] == 5);
    CHECK(summary["mean_iou"].contains("mocrop"));
    CHECK(summary["config"]["alpha"] == 0.5);
}

TEST_CASE("evaluate: empty spec list is rejected", "[eval]") {
    CHECK_THROWS_AS(evaluate({}, eval_config()), ValidationError);
}
