// cintrec command line tool: simulation, imaging and reconstruction
// driven by a flat key = value config file.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "cintrec/io.hpp"
#include "cintrec/kernel_model.hpp"
#include "cintrec/medium.hpp"
#include "cintrec/pipeline.hpp"

using namespace cintrec;
namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitStageFailure = 2;
constexpr int kExitEmptyReconstruction = 3;

struct Common {
    std::string config_path;
    std::string dir_override;
    int threads = 1;
};

RunConfig load(const Common& c) {
    RunConfig cfg = load_config(c.config_path);
    if (!c.dir_override.empty()) cfg.output_dir = c.dir_override;
    return cfg;
}

ArrayData load_data(const RunConfig& cfg, const fs::path& dir, const std::string& data_path) {
    const fs::path p = data_path.empty() ? dir / "data.csv" : fs::path(data_path);
    ArrayData data = read_data_csv(p);
    data.geometry.aperture = cfg.physics.aperture;
    return data;
}

Pt2 resolve_z0(const fs::path& dir, std::optional<double> zc, std::optional<double> zr) {
    if (zc && zr) return {*zc, *zr};
    std::ifstream in(dir / "peaks_cint.json");
    if (!in) throw std::runtime_error("no --z0 given and no peaks_cint.json in " + dir.string());
    const auto j = ordered_json::parse(in);
    if (j.at("peaks").empty()) throw std::runtime_error("peaks_cint.json holds no peaks");
    const auto& p = j.at("peaks").front();
    return {p.at("cross").get<double>(), p.at("range").get<double>()};
}

ordered_json peaks_json(const PeakList& peaks) {
    ordered_json j;
    j["threshold"] = peaks.threshold;
    j["radius_cross"] = peaks.radius_cross;
    j["radius_range"] = peaks.radius_range;
    j["peaks"] = ordered_json::array();
    for (const auto& p : peaks.peaks)
        j["peaks"].push_back(
            {{"cross", p.position.cross}, {"range", p.position.range}, {"magnitude", p.magnitude}});
    return j;
}

void write_synth_manifest(const RunConfig& cfg, const fs::path& dir) {
    ordered_json m;
    m["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
    ordered_json echo;
    std::istringstream is(render_config(cfg));
    std::string line;
    while (std::getline(is, line)) {
        const auto eq = line.find(" = ");
        if (eq != std::string::npos) echo[line.substr(0, eq)] = line.substr(eq + 3);
    }
    m["config"] = echo;
    m["files"]["data.csv"] = {{"bytes", fs::file_size(dir / "data.csv")},
                              {"fnv1a64", fnv1a_hex(dir / "data.csv")}};
    write_text(dir / "manifest.json", m.dump(2) + "\n");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"passive-array imaging in random media"};
    app.require_subcommand(1);

    Common common;
    app.add_option("--threads", common.threads, "worker threads for image evaluation")
        ->capture_default_str();

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("-c,--config", common.config_path, "run config file")->required();
        sub->add_option("-d,--dir", common.dir_override, "output directory (overrides config)");
    };

    auto* cmd_scales = app.add_subcommand("scales", "derived statistical and resolution scales");
    add_common(cmd_scales);

    auto* cmd_medium = app.add_subcommand("medium", "raster sample of the medium realization");
    add_common(cmd_medium);
    double box_cross_lo = -8.0, box_cross_hi = 8.0, box_range_lo = 0.0, box_range_hi = -1.0;
    int raster_cross = 64, raster_range = 512;
    cmd_medium->add_option("--cross-lo", box_cross_lo, "box lower cross-range bound");
    cmd_medium->add_option("--cross-hi", box_cross_hi, "box upper cross-range bound");
    cmd_medium->add_option("--range-lo", box_range_lo, "box lower range bound");
    cmd_medium->add_option("--range-hi", box_range_hi, "box upper range bound (default: L)");
    cmd_medium->add_option("--samples-cross", raster_cross, "raster rows");
    cmd_medium->add_option("--samples-range", raster_range, "raster columns");

    auto* cmd_synth = app.add_subcommand("synth", "synthesize array data");
    add_common(cmd_synth);

    std::string data_path;
    auto* cmd_cint = app.add_subcommand("cint", "interferometric image on the coarse mesh");
    add_common(cmd_cint);
    cmd_cint->add_option("--data", data_path, "data csv (default: <dir>/data.csv)");

    auto* cmd_offset = app.add_subcommand("offset-image", "two-point image around an anchor");
    add_common(cmd_offset);
    cmd_offset->add_option("--data", data_path, "data csv (default: <dir>/data.csv)");
    std::optional<double> z0_cross, z0_range;
    cmd_offset->add_option("--z0-cross", z0_cross, "anchor cross-range (default: top CINT peak)");
    cmd_offset->add_option("--z0-range", z0_range, "anchor range");

    auto* cmd_kernel = app.add_subcommand("kernel", "model envelope on the fine mesh");
    add_common(cmd_kernel);
    cmd_kernel->add_option("--z0-cross", z0_cross, "anchor cross-range (default: top CINT peak)");
    cmd_kernel->add_option("--z0-range", z0_range, "anchor range");

    auto* cmd_reconstruct = app.add_subcommand("reconstruct", "constellation from offsets");
    add_common(cmd_reconstruct);
    std::string offsets_path;
    cmd_reconstruct->add_option("--offsets", offsets_path,
                                "offsets json (default: <dir>/offsets.json, falling back to "
                                "peaks_offset.json + --z0)");
    cmd_reconstruct->add_option("--z0-cross", z0_cross, "anchor cross-range");
    cmd_reconstruct->add_option("--z0-range", z0_range, "anchor range");

    auto* cmd_migrate = app.add_subcommand("migrate", "diagnostic travel-time migration image");
    add_common(cmd_migrate);
    cmd_migrate->add_option("--data", data_path, "data csv (default: <dir>/data.csv)");

    auto* cmd_pipeline = app.add_subcommand("pipeline", "full run: synth through reconstruction");
    add_common(cmd_pipeline);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    RunConfig cfg;
    try {
        cfg = load(common);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    }

    try {
        const fs::path dir = cfg.output_dir;
        fs::create_directories(dir);

        if (cmd_scales->parsed()) {
            const ScaleReport scales = compute_scales(cfg.physics);
            write_text(dir / "scales.json", scales_json(cfg.physics, scales));
            for (const auto& [name, value] : scales.validity_ratios)
                if (value >= 1.0)
                    std::fprintf(stderr, "warning: regime ratio %s = %g is not << 1\n",
                                 name.c_str(), value);
            std::printf("%s\n", (dir / "scales.json").string().c_str());
        }

        if (cmd_medium->parsed()) {
            const auto medium =
                generate_medium(cfg.medium_seed, cfg.num_modes, 1 + cfg.physics.cross_range_dim,
                                cfg.physics.ell, cfg.physics.sigma);
            if (box_range_hi < box_range_lo) box_range_hi = cfg.physics.L;
            GridSpec spec;
            spec.origin_cross = box_cross_lo;
            spec.origin_range = box_range_lo;
            spec.ncross = raster_cross;
            spec.nrange = raster_range;
            spec.dcross = (box_cross_hi - box_cross_lo) / (raster_cross - 1);
            spec.drange = (box_range_hi - box_range_lo) / (raster_range - 1);
            std::vector<double> mu(static_cast<size_t>(spec.count()));
            for (int ic = 0; ic < spec.ncross; ++ic)
                for (int ir = 0; ir < spec.nrange; ++ir)
                    mu[ic * spec.nrange + ir] = eval_mu(medium, spec.node3(ic, ir));
            write_field_csv(dir / "medium.csv", spec, mu);
            write_field_pgm(dir / "medium.pgm", spec.nrange, spec.ncross, mu, -3.0, 3.0);
            std::printf("%s\n", (dir / "medium.csv").string().c_str());
        }

        if (cmd_synth->parsed()) {
            const ArrayData data = synthesize_from_config(cfg);
            write_data_csv(dir / "data.csv", data);
            write_synth_manifest(cfg, dir);
            std::printf("%s\n", (dir / "data.csv").string().c_str());
        }

        if (cmd_cint->parsed() || cmd_migrate->parsed()) {
            const ScaleReport scales = compute_scales(cfg.physics);
            const ArrayData data = load_data(cfg, dir, data_path);
            const GridSpec grid = coarse_grid_spec(cfg, scales);
            if (cmd_cint->parsed()) {
                std::vector<double> w;
                if (cfg.apodize) w = apodization_weights(data.geometry, cfg.physics);
                const auto img = cint_image(data, grid, WindowConfig::from_scales(scales),
                                            cfg.physics, common.threads, w);
                write_image_csv(dir / "image_cint.csv", img);
                write_image_pgm(dir / "image_cint.pgm", img);
                const auto peaks = detect_peaks(img, cfg.cint_threshold,
                                                scales.cross_range_res_cint, scales.range_res_cint);
                write_text(dir / "peaks_cint.json", peaks_json(peaks).dump(2) + "\n");
                std::printf("%s\n", (dir / "image_cint.csv").string().c_str());
            } else {
                const auto img = migration_image(data, grid, cfg.physics, common.threads);
                write_image_csv(dir / "image_migration.csv", img);
                write_image_pgm(dir / "image_migration.pgm", img);
                std::printf("%s\n", (dir / "image_migration.csv").string().c_str());
            }
        }

        if (cmd_offset->parsed()) {
            const ScaleReport scales = compute_scales(cfg.physics);
            const ArrayData data = load_data(cfg, dir, data_path);
            const Pt2 z0 = resolve_z0(dir, z0_cross, z0_range);
            const GridSpec grid = fine_grid_spec(cfg, scales, z0, nullptr);
            std::vector<double> w;
            if (cfg.apodize) w = apodization_weights(data.geometry, cfg.physics);
            const auto img = offset_image(data, {z0.cross, 0.0, z0.range}, grid,
                                          WindowConfig::from_scales(scales), cfg.physics,
                                          common.threads, w);
            write_image_csv(dir / "image_offset.csv", img);
            write_image_pgm(dir / "image_offset.pgm", img);
            const auto peaks =
                detect_peaks(img, cfg.offset_threshold, cfg.suppression_cross_px * grid.dcross,
                             cfg.suppression_range_px * grid.drange);
            ordered_json j = peaks_json(peaks);
            j["z0"] = {{"cross", z0.cross}, {"range", z0.range}};
            write_text(dir / "peaks_offset.json", j.dump(2) + "\n");
            std::printf("%s\n", (dir / "image_offset.csv").string().c_str());
        }

        if (cmd_kernel->parsed()) {
            const ScaleReport scales = compute_scales(cfg.physics);
            const Pt2 z0 = resolve_z0(dir, z0_cross, z0_range);
            const GridSpec grid = fine_grid_spec(cfg, scales, z0, nullptr);
            SourceSet sources;
            for (const auto& s : cfg.sources) sources.positions.push_back({s.cross, 0.0, s.range});
            std::vector<double> values(static_cast<size_t>(grid.count()));
            for (int ic = 0; ic < grid.ncross; ++ic)
                for (int ir = 0; ir < grid.nrange; ++ir)
                    values[ic * grid.nrange + ir] =
                        kernel_sum({z0.cross, 0.0, z0.range}, grid.node3(ic, ir), sources, scales,
                                   cfg.physics);
            write_field_csv(dir / "image_kernel.csv", grid, values);
            std::printf("%s\n", (dir / "image_kernel.csv").string().c_str());
        }

        if (cmd_reconstruct->parsed()) {
            const ScaleReport scales = compute_scales(cfg.physics);
            const Tol2 tol = fine_tolerance(cfg, scales);
            OffsetSet est;
            est.tol = tol;
            Pt2 z0{};
            const fs::path off_file =
                offsets_path.empty() ? dir / "offsets.json" : fs::path(offsets_path);
            if (fs::exists(off_file)) {
                std::ifstream in(off_file);
                const auto j = ordered_json::parse(in);
                z0 = {j.at("z0").at("cross").get<double>(), j.at("z0").at("range").get<double>()};
                for (const auto& e : j.at("filtered"))
                    est.offsets.push_back(
                        {e.at("cross").get<double>(), e.at("range").get<double>()});
            } else {
                z0 = resolve_z0(dir, z0_cross, z0_range);
                std::ifstream in(dir / "peaks_offset.json");
                if (!in)
                    throw std::runtime_error("neither offsets.json nor peaks_offset.json found");
                const auto j = ordered_json::parse(in);
                PeakList peaks;
                for (const auto& p : j.at("peaks"))
                    peaks.peaks.push_back(
                        {{p.at("cross").get<double>(), p.at("range").get<double>()},
                         p.at("magnitude").get<double>()});
                est = symmetry_filter(peaks_to_offsets(peaks, z0, tol));
            }
            const auto rec = reconstruct(est, z0, tol);
            ordered_json j;
            j["anchor"] = {{"cross", z0.cross}, {"range", z0.range}};
            j["outcome"] = rec ? "ok" : "empty";
            j["points"] = ordered_json::array();
            if (rec)
                for (const auto& p : rec->points)
                    j["points"].push_back({{"cross", p.cross}, {"range", p.range}});
            write_text(dir / "reconstruction.json", j.dump(2) + "\n");
            std::printf("%s\n", (dir / "reconstruction.json").string().c_str());
            if (!rec) {
                std::fprintf(stderr, "error: no constellation reproduces the offset set\n");
                return kExitEmptyReconstruction;
            }
        }

        if (cmd_pipeline->parsed()) {
            const PipelineResult result = run_pipeline(cfg, common.threads);
            std::printf("%s\n", result.manifest_file.string().c_str());
            if (result.reconstruction_empty) {
                std::fprintf(stderr, "error: reconstruction is empty\n");
                return kExitEmptyReconstruction;
            }
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitStageFailure;
    }
    return kExitOk;
}
