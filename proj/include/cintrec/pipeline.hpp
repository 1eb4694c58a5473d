#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "cintrec/config.hpp"
#include "cintrec/constellation.hpp"
#include "cintrec/forward.hpp"
#include "cintrec/imaging.hpp"
#include "cintrec/scales.hpp"

namespace cintrec {

inline constexpr const char* kToolName = "cintrec";
inline constexpr const char* kToolVersion = "0.1.0";

/// Imaging-mesh parameters. Pixel sizes are factors of the matching
/// resolution scale (CINT limits for the coarse mesh, homogeneous-medium
/// limits for the fine mesh). A negative fine half-extent selects the
/// automatic extent derived from the CINT peak support (half-maximum box
/// padded by one CINT cell).
struct GridConfig {
    double center_cross = 0.0;
    double center_range = 0.0;
    double pixel_factor_cross = 1.0;
    double pixel_factor_range = 1.0;
    int half_cross_px = -1;
    int half_range_px = -1;
};

/// Full parameter surface of one run. Every random draw is controlled by
/// an explicit seed.
struct RunConfig {
    PhysicsConfig physics;
    int num_receivers = 0;
    bool apodize = false;
    int freq_count = 257;
    int num_modes = 4096;
    double noise_level = 0.0;
    uint64_t medium_seed = 0;
    uint64_t noise_seed = 0;
    std::vector<Pt2> sources;
    GridConfig coarse;
    GridConfig fine{0.0, 0.0, 3.92, 0.537, -1, -1};
    double cint_threshold = 0.5;
    double offset_threshold = 0.15;
    double suppression_cross_px = 1.0;  ///< offset-peak suppression radius, fine cells
    double suppression_range_px = 1.0;
    double tolerance_px = 1.0;
    std::string output_dir;

    void validate() const;
};

/// Parses the flat `key = value` config format (# comments). Unknown and
/// duplicate keys are errors; missing required keys are enumerated.
RunConfig load_config(const std::filesystem::path& file);

/// Renders the fully resolved config in the same format; reloading the
/// output reproduces the config exactly.
std::string render_config(const RunConfig& cfg);
void emit_config(const RunConfig& cfg, const std::filesystem::path& file);

struct PipelineResult {
    ScaleReport scales;
    Pt2 z0{};
    int num_offset_peaks = 0;
    int num_offsets_filtered = 0;
    bool reconstruction_empty = false;
    std::vector<Pt2> reconstruction;
    std::filesystem::path manifest_file;
};

/// Runs scales -> medium -> synth -> CINT image -> peak pick -> offset
/// image -> offsets -> symmetry filter -> reconstruct, writing every
/// artifact plus manifest.json into cfg.output_dir. Stage errors are
/// rethrown with the stage name attached. An empty reconstruction is a
/// reported outcome, not an error.
PipelineResult run_pipeline(const RunConfig& cfg, int threads = 1);

/// Derived helpers shared by the CLI subcommands.
GridSpec coarse_grid_spec(const RunConfig& cfg, const ScaleReport& scales);
GridSpec fine_grid_spec(const RunConfig& cfg, const ScaleReport& scales, Pt2 z0,
                        const ImageGrid* cint = nullptr);
Tol2 fine_tolerance(const RunConfig& cfg, const ScaleReport& scales);
ArrayData synthesize_from_config(const RunConfig& cfg);
std::string scales_json(const PhysicsConfig& physics, const ScaleReport& scales);

}  // namespace cintrec
