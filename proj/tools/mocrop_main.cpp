// mocrop: clip-level adaptive cropping driven by codec motion vectors.
//
// Subcommands: box, crop, map, synth, eval, bench. Every command is
// deterministic given its flags, input bytes, and seed (bench timings
// excepted). Exit codes: 0 success, 1 internal error, 2 input/IO error,
// 3 validation/config error.

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "mocrop/mocrop.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitInternal = 1;
constexpr int kExitInput = 2;
constexpr int kExitValidation = 3;

mocrop::GridSpec parse_grid(const std::string& text) {
    const auto sep = text.find('x');
    if (sep == std::string::npos) {
        throw mocrop::ConfigError("grid must be ROWSxCOLS, e.g. 6x8, got '" + text + "'");
    }
    try {
        return mocrop::GridSpec{std::stoi(text.substr(0, sep)), std::stoi(text.substr(sep + 1))};
    } catch (const std::exception&) {
        throw mocrop::ConfigError("grid must be ROWSxCOLS, e.g. 6x8, got '" + text + "'");
    }
}

std::pair<std::uint32_t, std::uint32_t> parse_frame_size(const std::string& text) {
    const auto sep = text.find('x');
    if (sep == std::string::npos) {
        throw mocrop::ConfigError("frame size must be WIDTHxHEIGHT, e.g. 224x224, got '" + text +
                                  "'");
    }
    try {
        const long w = std::stol(text.substr(0, sep));
        const long h = std::stol(text.substr(sep + 1));
        if (w < 1 || h < 1) throw mocrop::ConfigError("frame size must be positive");
        return {static_cast<std::uint32_t>(w), static_cast<std::uint32_t>(h)};
    } catch (const mocrop::ConfigError&) {
        throw;
    } catch (const std::exception&) {
        throw mocrop::ConfigError("frame size must be WIDTHxHEIGHT, got '" + text + "'");
    }
}

std::vector<double> parse_csv_doubles(const std::string& text, std::size_t expect,
                                      const char* what) {
    std::vector<double> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            values.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw mocrop::ConfigError(std::string(what) + ": bad number '" + item + "'");
        }
    }
    if (values.size() != expect) {
        throw mocrop::ConfigError(std::string(what) + " expects " + std::to_string(expect) +
                                  " comma-separated numbers, got '" + text + "'");
    }
    return values;
}

void write_file(const fs::path& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw mocrop::IoError("cannot open " + path.string() + " for writing");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw mocrop::IoError("write failed for " + path.string());
}

// Flags mirrored one-to-one onto MoCropConfig. A key=value config file
// (--config) supplies defaults; explicit flags override it.
struct ConfigFlags {
    std::string grid = "6x8";
    double alpha = 0.75;
    double delta = 0.1;
    std::size_t samples = 4096;
    double epsilon = 0.0;
    double epsilon_percentile = 25.0;
    bool epsilon_set = false;
    std::uint64_t seed = 0;
    bool dm = true;
    bool mcs = true;
    bool gmc = false;
    bool fallback = true;
    double flatness_threshold = 0.0;

    void attach(CLI::App* cmd) {
        cmd->set_config("--config", "", "Read flag defaults from a key=value file");
        cmd->add_option("--grid", grid, "Density grid as ROWSxCOLS")->capture_default_str();
        cmd->add_option("--alpha", alpha, "Target crop area ratio in (0,1]")
            ->capture_default_str();
        cmd->add_option("--delta", delta, "Area band tolerance in [0,1)")->capture_default_str();
        cmd->add_option("--samples,-N", samples, "Monte Carlo sample budget")
            ->capture_default_str();
        auto* eps = cmd->add_option("--epsilon", epsilon, "Absolute magnitude threshold");
        auto* pct = cmd->add_option("--epsilon-percentile", epsilon_percentile,
                                    "Per-clip magnitude percentile threshold")
                        ->capture_default_str();
        eps->excludes(pct);
        pct->excludes(eps);
        cmd->callback([this, eps]() { epsilon_set = eps->count() > 0; });
        cmd->add_option("--seed", seed, "RNG seed")->envname("MOCROP_SEED")
            ->capture_default_str();
        cmd->add_flag("--dm,!--no-dm", dm, "Denoise (magnitude filter) stage");
        cmd->add_flag("--mcs,!--no-mcs", mcs, "Monte Carlo sampling stage");
        cmd->add_flag("--gmc,!--no-gmc", gmc, "Global motion compensation");
        cmd->add_flag("--fallback,!--no-fallback", fallback, "Center-crop fallback on flat maps");
        cmd->add_option("--flatness-threshold", flatness_threshold,
                        "Count-spread tolerance for the flat-map check")
            ->capture_default_str();
    }

    mocrop::MoCropConfig to_config() const {
        mocrop::MoCropConfig cfg;
        cfg.grid = parse_grid(grid);
        cfg.alpha = alpha;
        cfg.delta = delta;
        cfg.sample_budget = samples;
        if (epsilon_set) {
            cfg.epsilon = epsilon;
            cfg.epsilon_percentile.reset();
        } else {
            cfg.epsilon.reset();
            cfg.epsilon_percentile = epsilon_percentile;
        }
        cfg.seed = seed;
        cfg.enable_dm = dm;
        cfg.enable_mcs = mcs;
        cfg.enable_gmc = gmc;
        cfg.flat_fallback = fallback;
        cfg.flatness_threshold = flatness_threshold;
        cfg.validate();
        mocrop::enumerate_shapes(cfg.grid, cfg.alpha, cfg.delta);  // reject empty bands at load
        return cfg;
    }
};

// Fans work items out over a small thread pool. Each item is isolated; the
// first failure (by input order) is rethrown after all threads join.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& work) {
    const auto workers = static_cast<std::size_t>(std::max(1, jobs));
    if (workers == 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) work(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(count);
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < std::min(workers, count); ++t) {
        pool.emplace_back([&]() {
            for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
                try {
                    work(i);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    for (const auto& err : errors) {
        if (err) std::rethrow_exception(err);
    }
}

struct BoxArgs {
    std::vector<std::string> sidecars;
    std::string out;
    std::string out_dir;
    int jobs = 1;
    ConfigFlags cfg;
};

int cmd_box(const BoxArgs& args) {
    const mocrop::MoCropConfig cfg = args.cfg.to_config();
    if (args.sidecars.size() > 1 && args.out_dir.empty()) {
        throw mocrop::ConfigError("multiple sidecars require --out-dir");
    }
    if (!args.out_dir.empty()) fs::create_directories(args.out_dir);

    std::vector<std::string> texts(args.sidecars.size());
    parallel_for(args.sidecars.size(), args.jobs, [&](std::size_t i) {
        const mocrop::ClipMotionField field = mocrop::load_sidecar(args.sidecars[i]);
        texts[i] = mocrop::format_decision(mocrop::run_mocrop(field, cfg));
    });

    for (std::size_t i = 0; i < texts.size(); ++i) {
        if (!args.out_dir.empty()) {
            const fs::path out = fs::path(args.out_dir) /
                                 (fs::path(args.sidecars[i]).stem().string() + ".box.txt");
            write_file(out, texts[i]);
        } else if (!args.out.empty()) {
            write_file(args.out, texts[i]);
        } else {
            std::cout << texts[i];
        }
    }
    return 0;
}

struct MapArgs {
    std::vector<std::string> sidecars;
    std::string out;
    std::string out_dir;
    int jobs = 1;
    ConfigFlags cfg;
};

int cmd_map(const MapArgs& args) {
    const mocrop::MoCropConfig cfg = args.cfg.to_config();
    if (args.sidecars.size() > 1 && args.out_dir.empty()) {
        throw mocrop::ConfigError("multiple sidecars require --out-dir");
    }
    if (!args.out_dir.empty()) fs::create_directories(args.out_dir);

    std::vector<std::string> images(args.sidecars.size());
    parallel_for(args.sidecars.size(), args.jobs, [&](std::size_t i) {
        const mocrop::ClipMotionField field = mocrop::load_sidecar(args.sidecars[i]);
        const mocrop::CropDecision decision = mocrop::run_mocrop(field, cfg);
        std::ostringstream pgm;
        mocrop::render_pgm(decision.md_map, pgm);
        images[i] = pgm.str();
    });

    for (std::size_t i = 0; i < images.size(); ++i) {
        if (!args.out_dir.empty()) {
            const fs::path out =
                fs::path(args.out_dir) / (fs::path(args.sidecars[i]).stem().string() + ".pgm");
            write_file(out, images[i]);
        } else if (args.out == "-") {
            std::cout << images[i];
        } else if (!args.out.empty()) {
            write_file(args.out, images[i]);
        } else {
            write_file(fs::path(args.sidecars[i]).stem().string() + ".pgm", images[i]);
        }
    }
    return 0;
}

struct CropArgs {
    std::string sidecar;
    std::string frames_dir;
    std::string out_dir;
    int jobs = 1;
    ConfigFlags cfg;
};

int cmd_crop(const CropArgs& args) {
    const mocrop::MoCropConfig cfg = args.cfg.to_config();
    const mocrop::ClipMotionField field = mocrop::load_sidecar(args.sidecar);

    std::vector<fs::path> frame_paths;
    for (const auto& entry : fs::directory_iterator(args.frames_dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".ppm") {
            frame_paths.push_back(entry.path());
        }
    }
    std::sort(frame_paths.begin(), frame_paths.end());
    if (frame_paths.empty()) {
        throw mocrop::IoError("no .ppm frames found in " + args.frames_dir);
    }

    const mocrop::CropDecision decision = mocrop::run_mocrop(field, cfg);
    fs::create_directories(args.out_dir);

    parallel_for(frame_paths.size(), args.jobs, [&](std::size_t i) {
        const mocrop::Frame frame = mocrop::load_ppm(frame_paths[i]);
        if (frame.width != static_cast<int>(field.width) ||
            frame.height != static_cast<int>(field.height)) {
            throw mocrop::ValidationError(
                frame_paths[i].string() + ": frame is " + std::to_string(frame.width) + "x" +
                std::to_string(frame.height) + " but sidecar says " + std::to_string(field.width) +
                "x" + std::to_string(field.height));
        }
        const mocrop::Frame cropped = mocrop::crop_frame(frame, decision.pixel);
        mocrop::save_ppm(cropped, fs::path(args.out_dir) / frame_paths[i].filename());
    });

    write_file(fs::path(args.out_dir) / "decision.txt", mocrop::format_decision(decision));
    return 0;
}

struct SynthArgs {
    std::string frame_size = "224x224";
    int num_frames = 8;
    std::string actor = "56,56,168,168";
    int actor_mv = 300;
    int noise_mv = 30;
    std::string pan = "0,0";
    std::uint64_t seed = 0;
    std::string clip_id = "synth";
    std::string format = "binary";
    std::string out_dir;
};

int cmd_synth(const SynthArgs& args) {
    mocrop::SynthSpec spec;
    const auto [w, h] = parse_frame_size(args.frame_size);
    spec.width = w;
    spec.height = h;
    spec.num_frames = args.num_frames;
    const auto box = parse_csv_doubles(args.actor, 4, "--actor");
    spec.actor_box = mocrop::PixelBox{static_cast<int>(box[0]), static_cast<int>(box[1]),
                                      static_cast<int>(box[2]), static_cast<int>(box[3])};
    spec.actor_mv_per_frame = args.actor_mv;
    spec.noise_mv_per_frame = args.noise_mv;
    const auto pan = parse_csv_doubles(args.pan, 2, "--pan");
    spec.pan_dx = pan[0];
    spec.pan_dy = pan[1];
    spec.seed = args.seed;
    spec.clip_id = args.clip_id;

    const mocrop::SynthClip clip = mocrop::gen_synthetic(spec);
    fs::create_directories(args.out_dir);

    std::ostringstream sidecar;
    if (args.format == "binary") {
        mocrop::write_binary(clip.field, sidecar);
        write_file(fs::path(args.out_dir) / "clip.mvs", sidecar.str());
    } else if (args.format == "jsonl") {
        mocrop::write_jsonl(clip.field, sidecar);
        write_file(fs::path(args.out_dir) / "clip.jsonl", sidecar.str());
    } else {
        throw mocrop::ConfigError("--format must be binary or jsonl, got '" + args.format + "'");
    }

    for (std::size_t i = 0; i < clip.frames.size(); ++i) {
        char name[32];
        std::snprintf(name, sizeof name, "frame_%03zu.ppm", i);
        mocrop::save_ppm(clip.frames[i], fs::path(args.out_dir) / name);
    }

    write_file(fs::path(args.out_dir) / "truth.txt",
               std::to_string(clip.truth.x1) + " " + std::to_string(clip.truth.y1) + " " +
                   std::to_string(clip.truth.x2) + " " + std::to_string(clip.truth.y2) + "\n");
    return 0;
}

// Manifest: one clip per line of whitespace-separated key=value tokens.
// Keys: frame=WxH frames=N actor=x1,y1,x2,y2 actor_mv=N noise_mv=N
//       pan=DX,DY seed=S id=NAME. '#' starts a comment.
std::vector<mocrop::SynthSpec> load_manifest(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw mocrop::IoError("cannot open " + path.string());
    std::vector<mocrop::SynthSpec> specs;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream tokens(line);
        std::string tok;
        mocrop::SynthSpec spec;
        bool any = false;
        while (tokens >> tok) {
            const auto eq = tok.find('=');
            if (eq == std::string::npos) {
                throw mocrop::ParseError(path.string() + ":" + std::to_string(line_no) +
                                         ": expected key=value, got '" + tok + "'");
            }
            const std::string key = tok.substr(0, eq);
            const std::string value = tok.substr(eq + 1);
            try {
                if (key == "frame") {
                    const auto [w, h] = parse_frame_size(value);
                    spec.width = w;
                    spec.height = h;
                } else if (key == "frames") {
                    spec.num_frames = std::stoi(value);
                } else if (key == "actor") {
                    const auto box = parse_csv_doubles(value, 4, "actor");
                    spec.actor_box = mocrop::PixelBox{static_cast<int>(box[0]),
                                                      static_cast<int>(box[1]),
                                                      static_cast<int>(box[2]),
                                                      static_cast<int>(box[3])};
                } else if (key == "actor_mv") {
                    spec.actor_mv_per_frame = std::stoi(value);
                } else if (key == "noise_mv") {
                    spec.noise_mv_per_frame = std::stoi(value);
                } else if (key == "pan") {
                    const auto pan = parse_csv_doubles(value, 2, "pan");
                    spec.pan_dx = pan[0];
                    spec.pan_dy = pan[1];
                } else if (key == "seed") {
                    spec.seed = std::stoull(value);
                } else if (key == "id") {
                    spec.clip_id = value;
                } else {
                    throw mocrop::ParseError(path.string() + ":" + std::to_string(line_no) +
                                             ": unknown key '" + key + "'");
                }
            } catch (const mocrop::Error&) {
                throw;
            } catch (const std::exception&) {
                throw mocrop::ParseError(path.string() + ":" + std::to_string(line_no) +
                                         ": bad value for '" + key + "'");
            }
            any = true;
        }
        if (any) specs.push_back(spec);
    }
    if (specs.empty()) throw mocrop::ValidationError(path.string() + ": no clip specs found");
    return specs;
}

struct EvalArgs {
    std::string manifest;
    std::string preset;
    int clips = 100;
    std::uint64_t base_seed = 1;
    std::string summary;
    ConfigFlags cfg;
};

int cmd_eval(const EvalArgs& args) {
    const mocrop::MoCropConfig cfg = args.cfg.to_config();
    std::vector<mocrop::SynthSpec> specs;
    if (!args.manifest.empty()) {
        specs = load_manifest(args.manifest);
    } else if (args.preset == "outer") {
        specs = mocrop::make_outer_half_specs(args.clips, args.base_seed);
    } else if (args.preset == "center") {
        specs = mocrop::make_centered_specs(args.clips, args.base_seed);
    } else if (args.preset == "noise") {
        specs = mocrop::make_noise_heavy_specs(args.clips, args.base_seed);
    } else if (args.preset == "pan") {
        specs = mocrop::make_pan_specs(args.clips, args.base_seed);
    } else if (args.preset.empty()) {
        throw mocrop::ConfigError("eval needs --manifest or --preset");
    } else {
        throw mocrop::ConfigError("unknown preset '" + args.preset +
                                  "' (expected outer|center|noise|pan)");
    }

    const mocrop::EvalReport report = mocrop::evaluate(specs, cfg);
    mocrop::write_report_text(report, std::cout);
    const std::string summary = mocrop::report_summary(report, cfg).dump();
    if (args.summary.empty()) {
        std::cout << summary << '\n';
    } else {
        write_file(args.summary, summary + "\n");
    }
    return 0;
}

struct BenchArgs {
    int runs = 200;
    std::uint64_t seed = 7;
    double alpha = 0.75;
    double delta = 0.1;
};

int cmd_bench(const BenchArgs& args) {
    const std::vector<mocrop::GridSpec> grids{{6, 8}, {12, 16}, {24, 32}};
    const mocrop::BenchReport report =
        mocrop::run_bench(grids, args.runs, args.seed, args.alpha, args.delta);
    std::cout << "agreement checked on " << report.maps_checked << " maps, timing median of "
              << report.runs << " runs\n";
    std::cout << "backend          grid     median_us\n";
    for (const auto& row : report.rows) {
        char line[96];
        std::snprintf(line, sizeof line, "%-16s %-8s %.3f\n", row.backend.c_str(),
                      (std::to_string(row.grid.rows) + "x" + std::to_string(row.grid.cols)).c_str(),
                      row.median_us);
        std::cout << line;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Motion-vector driven clip-level adaptive cropping"};
    app.require_subcommand(1);

    BoxArgs box;
    auto* box_cmd = app.add_subcommand("box", "Compute the crop decision for sidecar clips");
    box_cmd->add_option("sidecar", box.sidecars, "Motion-vector sidecar file(s)")
        ->required()
        ->check(CLI::ExistingFile);
    box_cmd->add_option("--out", box.out, "Write the decision here instead of stdout");
    box_cmd->add_option("--out-dir", box.out_dir, "Per-clip output directory (multi-input)");
    box_cmd->add_option("--jobs", box.jobs, "Parallel clips")->capture_default_str();
    box.cfg.attach(box_cmd);

    MapArgs map;
    auto* map_cmd = app.add_subcommand("map", "Export the motion-density map as PGM");
    map_cmd->add_option("sidecar", map.sidecars, "Motion-vector sidecar file(s)")
        ->required()
        ->check(CLI::ExistingFile);
    map_cmd->add_option("--out", map.out, "Output PGM path ('-' for stdout)");
    map_cmd->add_option("--out-dir", map.out_dir, "Per-clip output directory (multi-input)");
    map_cmd->add_option("--jobs", map.jobs, "Parallel clips")->capture_default_str();
    map.cfg.attach(map_cmd);

    CropArgs crop;
    auto* crop_cmd = app.add_subcommand("crop", "Crop a directory of PPM frames with one decision");
    crop_cmd->add_option("sidecar", crop.sidecar, "Motion-vector sidecar file")
        ->required()
        ->check(CLI::ExistingFile);
    crop_cmd->add_option("--frames", crop.frames_dir, "Directory of input .ppm frames")
        ->required()
        ->check(CLI::ExistingDirectory);
    crop_cmd->add_option("--out-dir", crop.out_dir, "Output directory")->required();
    crop_cmd->add_option("--jobs", crop.jobs, "Parallel frames")->capture_default_str();
    crop.cfg.attach(crop_cmd);

    SynthArgs synth;
    auto* synth_cmd = app.add_subcommand("synth", "Generate a synthetic clip with ground truth");
    synth_cmd->add_option("--frame", synth.frame_size, "Frame size WIDTHxHEIGHT")
        ->capture_default_str();
    synth_cmd->add_option("--frames", synth.num_frames, "Number of frames")->capture_default_str();
    synth_cmd->add_option("--actor", synth.actor, "Actor box x1,y1,x2,y2")->capture_default_str();
    synth_cmd->add_option("--actor-mv", synth.actor_mv, "Actor vectors per frame")
        ->capture_default_str();
    synth_cmd->add_option("--noise-mv", synth.noise_mv, "Noise vectors per frame")
        ->capture_default_str();
    synth_cmd->add_option("--pan", synth.pan, "Camera pan dx,dy added to every displacement")
        ->capture_default_str();
    synth_cmd->add_option("--seed", synth.seed, "RNG seed")->envname("MOCROP_SEED")
        ->capture_default_str();
    synth_cmd->add_option("--clip-id", synth.clip_id, "Clip identifier")->capture_default_str();
    synth_cmd->add_option("--format", synth.format, "Sidecar carrier: binary or jsonl")
        ->capture_default_str();
    synth_cmd->add_option("--out-dir", synth.out_dir, "Output directory")->required();

    EvalArgs eval;
    auto* eval_cmd = app.add_subcommand("eval", "Score crop policies by IoU on synthetic clips");
    eval_cmd->add_option("--manifest", eval.manifest, "Clip spec manifest (key=value lines)")
        ->check(CLI::ExistingFile);
    eval_cmd->add_option("--preset", eval.preset, "Generated spec set: outer|center|noise|pan");
    eval_cmd->add_option("--clips", eval.clips, "Clip count for --preset")->capture_default_str();
    eval_cmd->add_option("--base-seed", eval.base_seed, "Base seed for --preset")
        ->capture_default_str();
    eval_cmd->add_option("--summary", eval.summary, "Write the JSON summary here");
    eval.cfg.attach(eval_cmd);

    BenchArgs bench;
    auto* bench_cmd = app.add_subcommand("bench", "Time the three search backends");
    bench_cmd->add_option("--runs", bench.runs, "Timed runs per backend (median reported)")
        ->capture_default_str();
    bench_cmd->add_option("--seed", bench.seed, "Map generator seed")->capture_default_str();
    bench_cmd->add_option("--alpha", bench.alpha, "Target area ratio")->capture_default_str();
    bench_cmd->add_option("--delta", bench.delta, "Area band tolerance")->capture_default_str();

    try {
        app.parse(argc, argv);
        if (box_cmd->parsed()) return cmd_box(box);
        if (map_cmd->parsed()) return cmd_map(map);
        if (crop_cmd->parsed()) return cmd_crop(crop);
        if (synth_cmd->parsed()) return cmd_synth(synth);
        if (eval_cmd->parsed()) return cmd_eval(eval);
        if (bench_cmd->parsed()) return cmd_bench(bench);
        return kExitInternal;
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitInput;
    } catch (const mocrop::IoError& e) {
        std::cerr << "mocrop: " << e.what() << '\n';
        return kExitInput;
    } catch (const mocrop::ParseError& e) {
        std::cerr << "mocrop: " << e.what() << '\n';
        return kExitInput;
    } catch (const mocrop::FormatError& e) {
        std::cerr << "mocrop: " << e.what() << '\n';
        return kExitInput;
    } catch (const mocrop::ValidationError& e) {
        std::cerr << "mocrop: " << e.what() << '\n';
        return kExitValidation;
    } catch (const mocrop::ConfigError& e) {
        std::cerr << "mocrop: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "mocrop: internal error: " << e.what() << '\n';
        return kExitInternal;
    }
}
