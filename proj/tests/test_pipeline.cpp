#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <string>

#include "cintrec/io.hpp"
#include "cintrec/pipeline.hpp"
#include "test_helpers.hpp"

using namespace cintrec;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir() {
    const fs::path p = fs::temp_directory_path() / "cintrec_test_pipeline";
    fs::create_directories(p);
    return p;
}

fs::path write_file(const std::string& name, const std::string& content) {
    const fs::path p = temp_dir() / name;
    std::ofstream(p) << content;
    return p;
}

std::string toy_config_text(const std::string& outdir) {
    return "# toy single-source run\n"
           "physics.lambda0 = 0.05\n"
           "physics.ell = 1\n"
           "physics.L = 30\n"
           "physics.aperture = 4\n"
           "physics.sigma = 0.008\n"
           "physics.B_frac = 0.2\n"
           "array.num_receivers = 16\n"
           "freq.count = 65\n"
           "medium.num_modes = 512\n"
           "noise.level = 0\n"
           "seed.medium = 808\n"
           "seed.noise = 4242\n"
           "sources.count = 1\n"
           "source.0.cross = 0.21\n"
           "source.0.range = 30.04\n"
           "coarse.center_cross = 0\n"
           "coarse.center_range = 30\n"
           "coarse.half_extent_cross_px = 3\n"
           "coarse.half_extent_range_px = 4\n"
           "fine.half_extent_cross_px = 8\n"
           "fine.half_extent_range_px = 8\n"
           "output.dir = " +
           outdir + "\n";
}

}  // namespace

TEST_CASE("empty config enumerates required keys") {
    const auto p = write_file("empty.cfg", "# nothing here\n");
    try {
        load_config(p);
        FAIL("expected a config error");
    } catch (const std::exception& e) {
        const std::string msg = e.what();
        CHECK(msg.find("missing required keys") != std::string::npos);
        CHECK(msg.find("physics.lambda0") != std::string::npos);
        CHECK(msg.find("seed.medium") != std::string::npos);
        CHECK(msg.find("seed.noise") != std::string::npos);
        CHECK(msg.find("sources.count") != std::string::npos);
    }
}

TEST_CASE("duplicate keys report both lines") {
    const auto p = write_file("dup.cfg", "physics.lambda0 = 0.05\nphysics.lambda0 = 0.06\n");
    try {
        load_config(p);
        FAIL("expected a config error");
    } catch (const std::exception& e) {
        const std::string msg = e.what();
        CHECK(msg.find("duplicate key 'physics.lambda0'") != std::string::npos);
        CHECK(msg.find("lines 1 and 2") != std::string::npos);
    }
}

TEST_CASE("unknown keys are rejected with their line") {
    auto text = toy_config_text((temp_dir() / "out_unknown").string());
    text += "physics.lambda = 1\n";
    const auto p = write_file("unknown.cfg", text);
    try {
        load_config(p);
        FAIL("expected a config error");
    } catch (const std::exception& e) {
        const std::string msg = e.what();
        CHECK(msg.find("unknown key 'physics.lambda'") != std::string::npos);
    }
}

TEST_CASE("malformed numbers are rejected") {
    auto text = toy_config_text((temp_dir() / "out_bad").string());
    text += "peaks.cint_threshold = banana\n";
    const auto p = write_file("bad.cfg", text);
    CHECK_THROWS(load_config(p));
}

TEST_CASE("config round trip") {
    const auto p = write_file("roundtrip.cfg", toy_config_text((temp_dir() / "out_rt").string()));
    const RunConfig cfg = load_config(p);
    const auto emitted = temp_dir() / "resolved.cfg";
    emit_config(cfg, emitted);
    const RunConfig again = load_config(emitted);
    CHECK(render_config(cfg) == render_config(again));
}

TEST_CASE("single-source pipeline ends at the anchor") {
    const fs::path out = temp_dir() / "single";
    fs::remove_all(out);
    const auto p = write_file("single.cfg", toy_config_text(out.string()));
    const RunConfig cfg = load_config(p);

    const PipelineResult result = run_pipeline(cfg, 1);
    CHECK_FALSE(result.reconstruction_empty);
    REQUIRE(result.reconstruction.size() == 1);
    CHECK(result.reconstruction[0].cross == result.z0.cross);

    // anchor within one CINT cell of the true source
    CHECK(std::abs(result.z0.cross - 0.21) <= result.scales.cross_range_res_cint);
    CHECK(std::abs(result.z0.range - 30.04) <= result.scales.range_res_cint);

    for (const char* name :
         {"scales.json", "medium.csv", "medium.pgm", "data.csv", "image_cint.csv",
          "image_cint.pgm", "peaks_cint.json", "image_offset.csv", "image_offset.pgm",
          "peaks_offset.json", "offsets.json", "reconstruction.json", "manifest.json"})
        CHECK(fs::exists(out / name));
}

TEST_CASE("synth output consumed from disk reproduces the in-memory image") {
    const fs::path out = temp_dir() / "isolation";
    fs::remove_all(out);
    fs::create_directories(out);
    const auto p = write_file("iso.cfg", toy_config_text(out.string()));
    const RunConfig cfg = load_config(p);
    const ScaleReport scales = compute_scales(cfg.physics);

    const ArrayData data = synthesize_from_config(cfg);
    write_data_csv(out / "data.csv", data);
    const ArrayData reloaded = read_data_csv(out / "data.csv");

    REQUIRE(reloaded.values.size() == data.values.size());
    for (size_t i = 0; i < data.values.size(); ++i) CHECK(reloaded.values[i] == data.values[i]);

    const GridSpec grid = coarse_grid_spec(cfg, scales);
    const WindowConfig win = WindowConfig::from_scales(scales);
    const auto img_mem = cint_image(data, grid, win, cfg.physics);
    const auto img_disk = cint_image(reloaded, grid, win, cfg.physics);
    for (size_t i = 0; i < img_mem.values.size(); ++i)
        CHECK(img_mem.values[i] == img_disk.values[i]);
}

TEST_CASE("automatic fine extent derives from the CINT peak support") {
    const fs::path out = temp_dir() / "auto_fine";
    fs::remove_all(out);
    auto text = toy_config_text(out.string());
    text.replace(text.find("fine.half_extent_cross_px = 8"), 29, "fine.half_extent_cross_px = -1");
    const auto p = write_file("auto.cfg", text);
    const RunConfig cfg = load_config(p);
    CHECK(cfg.fine.half_cross_px == -1);

    const PipelineResult result = run_pipeline(cfg, 1);
    CHECK_FALSE(result.reconstruction_empty);
}

TEST_CASE("output directory falls back to the environment") {
    auto text = toy_config_text("PLACEHOLDER");
    text.erase(text.find("output.dir"));
    const auto p = write_file("noout.cfg", text);

    setenv("CINTREC_OUT_DIR", "/tmp/cintrec_envdir", 1);
    CHECK(load_config(p).output_dir == "/tmp/cintrec_envdir");
    unsetenv("CINTREC_OUT_DIR");
    CHECK(load_config(p).output_dir == "out");
}

TEST_CASE("validation rejects oversized coarse pixels") {
    auto text = toy_config_text((temp_dir() / "out_px").string());
    text += "coarse.pixel_factor_cross = 1.5\n";
    const auto p = write_file("px.cfg", text);
    const RunConfig cfg = load_config(p);
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}
