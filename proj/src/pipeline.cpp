#include "cintrec/pipeline.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "cintrec/io.hpp"
#include "cintrec/medium.hpp"

namespace cintrec {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

struct RawEntry {
    std::string value;
    int line = 0;
};

struct RawConfig {
    std::map<std::string, RawEntry> kv;
    std::set<std::string> consumed;
    std::vector<std::string> errors;

    bool has(const std::string& key) const { return kv.count(key) != 0; }

    const RawEntry* take(const std::string& key) {
        auto it = kv.find(key);
        if (it == kv.end()) return nullptr;
        consumed.insert(key);
        return &it->second;
    }
};

RawConfig parse_raw(const fs::path& file) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open config " + file.string());
    RawConfig raw;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        const std::string stripped = trim(line);
        if (stripped.empty()) continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos) {
            raw.errors.push_back("line " + std::to_string(lineno) + ": expected 'key = value'");
            continue;
        }
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key.empty() || value.empty()) {
            raw.errors.push_back("line " + std::to_string(lineno) + ": empty key or value");
            continue;
        }
        if (auto it = raw.kv.find(key); it != raw.kv.end()) {
            raw.errors.push_back("duplicate key '" + key + "' (lines " +
                                 std::to_string(it->second.line) + " and " +
                                 std::to_string(lineno) + ")");
            continue;
        }
        raw.kv[key] = {value, lineno};
    }
    return raw;
}

class Extractor {
public:
    explicit Extractor(RawConfig& raw) : raw_(raw) {}

    double number(const std::string& key, bool required, double fallback = 0.0) {
        const RawEntry* e = raw_.take(key);
        if (!e) {
            if (required) missing_.push_back(key);
            return fallback;
        }
        try {
            size_t pos = 0;
            const double v = std::stod(e->value, &pos);
            if (pos != e->value.size()) throw std::invalid_argument("trailing characters");
            return v;
        } catch (const std::exception&) {
            raw_.errors.push_back("line " + std::to_string(e->line) + ": key '" + key +
                                  "' is not a number");
            return fallback;
        }
    }

    int integer(const std::string& key, bool required, int fallback = 0) {
        return static_cast<int>(number(key, required, fallback));
    }

    uint64_t seed(const std::string& key) {
        const RawEntry* e = raw_.take(key);
        if (!e) {
            missing_.push_back(key);
            return 0;
        }
        try {
            return std::stoull(e->value);
        } catch (const std::exception&) {
            raw_.errors.push_back("line " + std::to_string(e->line) + ": key '" + key +
                                  "' is not an unsigned integer");
            return 0;
        }
    }

    bool boolean(const std::string& key, bool fallback) {
        const RawEntry* e = raw_.take(key);
        if (!e) return fallback;
        if (e->value == "true") return true;
        if (e->value == "false") return false;
        raw_.errors.push_back("line " + std::to_string(e->line) + ": key '" + key +
                              "' must be 'true' or 'false'");
        return fallback;
    }

    std::string text(const std::string& key, const std::string& fallback) {
        const RawEntry* e = raw_.take(key);
        return e ? e->value : fallback;
    }

    const std::vector<std::string>& missing() const { return missing_; }

private:
    RawConfig& raw_;
    std::vector<std::string> missing_;
};

std::string default_output_dir() {
    if (const char* env = std::getenv("CINTREC_OUT_DIR"); env && *env) return env;
    return "out";
}

std::vector<std::pair<std::string, std::string>> config_kv(const RunConfig& c) {
    std::vector<std::pair<std::string, std::string>> kv;
    auto d = [&](const std::string& k, double v) { kv.emplace_back(k, format_double(v)); };
    auto i = [&](const std::string& k, long long v) { kv.emplace_back(k, std::to_string(v)); };
    d("physics.lambda0", c.physics.lambda0);
    d("physics.ell", c.physics.ell);
    d("physics.L", c.physics.L);
    d("physics.aperture", c.physics.aperture);
    d("physics.sigma", c.physics.sigma);
    d("physics.B_frac", c.physics.B_frac);
    d("physics.X_factor", c.physics.X_factor);
    d("physics.Omega_factor", c.physics.Omega_factor);
    i("physics.cross_range_dim", c.physics.cross_range_dim);
    i("array.num_receivers", c.num_receivers);
    kv.emplace_back("array.apodize", c.apodize ? "true" : "false");
    i("freq.count", c.freq_count);
    i("medium.num_modes", c.num_modes);
    d("noise.level", c.noise_level);
    i("seed.medium", static_cast<long long>(c.medium_seed));
    i("seed.noise", static_cast<long long>(c.noise_seed));
    i("sources.count", static_cast<long long>(c.sources.size()));
    for (size_t s = 0; s < c.sources.size(); ++s) {
        d("source." + std::to_string(s) + ".cross", c.sources[s].cross);
        d("source." + std::to_string(s) + ".range", c.sources[s].range);
    }
    d("coarse.center_cross", c.coarse.center_cross);
    d("coarse.center_range", c.coarse.center_range);
    d("coarse.pixel_factor_cross", c.coarse.pixel_factor_cross);
    d("coarse.pixel_factor_range", c.coarse.pixel_factor_range);
    i("coarse.half_extent_cross_px", c.coarse.half_cross_px);
    i("coarse.half_extent_range_px", c.coarse.half_range_px);
    d("fine.pixel_factor_cross", c.fine.pixel_factor_cross);
    d("fine.pixel_factor_range", c.fine.pixel_factor_range);
    i("fine.half_extent_cross_px", c.fine.half_cross_px);
    i("fine.half_extent_range_px", c.fine.half_range_px);
    d("peaks.cint_threshold", c.cint_threshold);
    d("peaks.offset_threshold", c.offset_threshold);
    d("peaks.suppression_cross_px", c.suppression_cross_px);
    d("peaks.suppression_range_px", c.suppression_range_px);
    d("peaks.tolerance_px", c.tolerance_px);
    kv.emplace_back("output.dir", c.output_dir);
    return kv;
}

json scales_to_json(const ScaleReport& s) {
    json j;
    j["S"] = s.S;
    j["Omega_d"] = s.Omega_d;
    j["X_d"] = s.X_d;
    j["Omega"] = s.Omega;
    j["X"] = s.X;
    j["Omega_e"] = s.Omega_e;
    j["X_e"] = s.X_e;
    j["gamma"] = s.gamma;
    j["theta"] = s.theta;
    j["cross_range_res_cint"] = s.cross_range_res_cint;
    j["range_res_cint"] = s.range_res_cint;
    j["cross_range_res_fine"] = s.cross_range_res_fine;
    j["range_res_fine"] = s.range_res_fine;
    json ratios;
    for (const auto& [name, value] : s.validity_ratios) {
        ratios[name] = {{"value", value}, {"target", "<<1"}};
    }
    j["validity_ratios"] = ratios;
    return j;
}

json point_json(Pt2 p) { return json{{"cross", p.cross}, {"range", p.range}}; }

json peaks_to_json(const PeakList& pl) {
    json j;
    j["threshold"] = pl.threshold;
    j["radius_cross"] = pl.radius_cross;
    j["radius_range"] = pl.radius_range;
    j["peaks"] = json::array();
    for (const auto& p : pl.peaks) {
        json e = point_json(p.position);
        e["magnitude"] = p.magnitude;
        j["peaks"].push_back(e);
    }
    return j;
}

void dump_json(const json& j, const fs::path& file) { write_text(file, j.dump(2) + "\n"); }

}  // namespace

void RunConfig::validate() const {
    physics.validate();
    if (physics.cross_range_dim != 1)
        throw std::invalid_argument("RunConfig: the imaging pipeline is planar (cross_range_dim = 1)");
    if (num_receivers < 2) throw std::invalid_argument("RunConfig: array.num_receivers must be >= 2");
    if (freq_count < 2) throw std::invalid_argument("RunConfig: freq.count must be >= 2");
    if (noise_level < 0.0) throw std::invalid_argument("RunConfig: noise.level must be >= 0");
    if (sources.empty()) throw std::invalid_argument("RunConfig: at least one source required");
    for (const auto& s : sources)
        if (!(s.range > 0.0)) throw std::invalid_argument("RunConfig: source ranges must be positive");
    if (coarse.half_cross_px < 0 || coarse.half_range_px < 0)
        throw std::invalid_argument("RunConfig: coarse grid extents are required");
    if (!(coarse.pixel_factor_cross > 0.0 && coarse.pixel_factor_cross <= 1.0) ||
        !(coarse.pixel_factor_range > 0.0 && coarse.pixel_factor_range <= 1.0))
        throw std::invalid_argument(
            "RunConfig: coarse pixels must not exceed the CINT resolution limits");
    if (!(fine.pixel_factor_cross > 0.0) || !(fine.pixel_factor_range > 0.0))
        throw std::invalid_argument("RunConfig: fine pixel factors must be positive");
    if (!(cint_threshold > 0.0 && cint_threshold < 1.0) ||
        !(offset_threshold > 0.0 && offset_threshold < 1.0))
        throw std::invalid_argument("RunConfig: peak thresholds must lie in (0, 1)");
    if (!(suppression_cross_px > 0.0) || !(suppression_range_px > 0.0))
        throw std::invalid_argument("RunConfig: suppression radii must be positive");
    if (!(tolerance_px > 0.0)) throw std::invalid_argument("RunConfig: peaks.tolerance_px must be positive");
}

RunConfig load_config(const fs::path& file) {
    RawConfig raw = parse_raw(file);
    Extractor get(raw);
    RunConfig c;

    c.physics.lambda0 = get.number("physics.lambda0", true);
    c.physics.ell = get.number("physics.ell", false, 1.0);
    c.physics.L = get.number("physics.L", true);
    c.physics.aperture = get.number("physics.aperture", true);
    c.physics.sigma = get.number("physics.sigma", true);
    c.physics.B_frac = get.number("physics.B_frac", true);
    c.physics.X_factor = get.number("physics.X_factor", false, 1.0 / 3.0);
    c.physics.Omega_factor = get.number("physics.Omega_factor", false, 1.0 / 3.0);
    c.physics.cross_range_dim = get.integer("physics.cross_range_dim", false, 1);
    c.num_receivers = get.integer("array.num_receivers", true);
    c.apodize = get.boolean("array.apodize", false);
    c.freq_count = get.integer("freq.count", false, 257);
    c.num_modes = get.integer("medium.num_modes", false, 4096);
    c.noise_level = get.number("noise.level", true);
    c.medium_seed = get.seed("seed.medium");
    c.noise_seed = get.seed("seed.noise");

    const int ns = get.integer("sources.count", true);
    for (int s = 0; s < ns; ++s) {
        const std::string base = "source." + std::to_string(s) + ".";
        Pt2 p;
        p.cross = get.number(base + "cross", true);
        p.range = get.number(base + "range", true);
        c.sources.push_back(p);
    }

    c.coarse.center_cross = get.number("coarse.center_cross", true);
    c.coarse.center_range = get.number("coarse.center_range", true);
    c.coarse.pixel_factor_cross = get.number("coarse.pixel_factor_cross", false, 1.0);
    c.coarse.pixel_factor_range = get.number("coarse.pixel_factor_range", false, 1.0);
    c.coarse.half_cross_px = get.integer("coarse.half_extent_cross_px", true);
    c.coarse.half_range_px = get.integer("coarse.half_extent_range_px", true);
    c.fine.pixel_factor_cross = get.number("fine.pixel_factor_cross", false, 3.92);
    c.fine.pixel_factor_range = get.number("fine.pixel_factor_range", false, 0.537);
    c.fine.half_cross_px = get.integer("fine.half_extent_cross_px", false, -1);
    c.fine.half_range_px = get.integer("fine.half_extent_range_px", false, -1);
    c.cint_threshold = get.number("peaks.cint_threshold", false, 0.5);
    c.offset_threshold = get.number("peaks.offset_threshold", false, 0.15);
    c.suppression_cross_px = get.number("peaks.suppression_cross_px", false, 1.0);
    c.suppression_range_px = get.number("peaks.suppression_range_px", false, 1.0);
    c.tolerance_px = get.number("peaks.tolerance_px", false, 1.0);
    c.output_dir = get.text("output.dir", default_output_dir());

    std::vector<std::string> problems = raw.errors;
    if (!get.missing().empty()) {
        std::string msg = "missing required keys:";
        for (const auto& k : get.missing()) msg += " " + k;
        problems.push_back(msg);
    }
    for (const auto& [key, entry] : raw.kv) {
        if (!raw.consumed.count(key))
            problems.push_back("unknown key '" + key + "' (line " + std::to_string(entry.line) + ")");
    }
    if (!problems.empty()) {
        std::string msg = "config errors in " + file.string() + ":";
        for (const auto& p : problems) msg += "\n  " + p;
        throw std::runtime_error(msg);
    }
    return c;
}

std::string render_config(const RunConfig& cfg) {
    std::ostringstream os;
    for (const auto& [k, v] : config_kv(cfg)) os << k << " = " << v << "\n";
    return os.str();
}

void emit_config(const RunConfig& cfg, const fs::path& file) { write_text(file, render_config(cfg)); }

GridSpec coarse_grid_spec(const RunConfig& cfg, const ScaleReport& scales) {
    return GridSpec::centered({cfg.coarse.center_cross, cfg.coarse.center_range},
                              cfg.coarse.pixel_factor_cross * scales.cross_range_res_cint,
                              cfg.coarse.pixel_factor_range * scales.range_res_cint,
                              cfg.coarse.half_cross_px, cfg.coarse.half_range_px);
}

GridSpec fine_grid_spec(const RunConfig& cfg, const ScaleReport& scales, Pt2 z0,
                        const ImageGrid* cint) {
    const double dc = cfg.fine.pixel_factor_cross * scales.cross_range_res_fine;
    const double dr = cfg.fine.pixel_factor_range * scales.range_res_fine;
    int hc = cfg.fine.half_cross_px;
    int hr = cfg.fine.half_range_px;
    if (hc < 0 || hr < 0) {
        if (!cint)
            throw std::invalid_argument("fine grid extents unset and no CINT image to derive them");
        // Support of the CINT peak: half-maximum box around the global
        // maximum, padded by one CINT cell.
        double peak = 0.0;
        for (const auto& v : cint->values) peak = std::max(peak, std::abs(v));
        double c_lo = z0.cross, c_hi = z0.cross, r_lo = z0.range, r_hi = z0.range;
        for (int ic = 0; ic < cint->spec.ncross; ++ic) {
            for (int ir = 0; ir < cint->spec.nrange; ++ir) {
                if (std::abs(cint->at(ic, ir)) < 0.5 * peak) continue;
                const Pt2 p = cint->spec.node(ic, ir);
                c_lo = std::min(c_lo, p.cross);
                c_hi = std::max(c_hi, p.cross);
                r_lo = std::min(r_lo, p.range);
                r_hi = std::max(r_hi, p.range);
            }
        }
        const double half_c =
            std::max(z0.cross - c_lo, c_hi - z0.cross) + cint->spec.dcross;
        const double half_r =
            std::max(z0.range - r_lo, r_hi - z0.range) + cint->spec.drange;
        if (hc < 0) hc = static_cast<int>(std::ceil(half_c / dc));
        if (hr < 0) hr = static_cast<int>(std::ceil(half_r / dr));
    }
    return GridSpec::centered(z0, dc, dr, hc, hr);
}

Tol2 fine_tolerance(const RunConfig& cfg, const ScaleReport& scales) {
    return {cfg.tolerance_px * cfg.fine.pixel_factor_cross * scales.cross_range_res_fine,
            cfg.tolerance_px * cfg.fine.pixel_factor_range * scales.range_res_fine};
}

ArrayData synthesize_from_config(const RunConfig& cfg) {
    const ArrayGeometry geom = ArrayGeometry::linear(cfg.num_receivers, cfg.physics.aperture);
    SourceSet sources;
    for (const auto& s : cfg.sources) sources.positions.push_back({s.cross, 0.0, s.range});
    const MediumRealization medium =
        generate_medium(cfg.medium_seed, cfg.num_modes, 1 + cfg.physics.cross_range_dim,
                        cfg.physics.ell, cfg.physics.sigma);
    const FrequencyGrid grid = FrequencyGrid::make(cfg.physics, cfg.freq_count);
    return synthesize(geom, sources, medium, cfg.physics, grid, cfg.noise_level, cfg.noise_seed);
}

std::string scales_json(const PhysicsConfig& physics, const ScaleReport& scales) {
    json j = scales_to_json(scales);
    j["gamma1_min"] = gamma1(0.0, scales.theta);  // attained at zero center offset
    j["c0"] = physics.c0();
    j["k0"] = physics.k0();
    j["B"] = physics.bandwidth();
    return j.dump(2) + "\n";
}

PipelineResult run_pipeline(const RunConfig& cfg, int threads) {
    cfg.validate();
    const fs::path outdir = cfg.output_dir;
    fs::create_directories(outdir);

    PipelineResult result;
    json timings;
    std::vector<std::string> warnings;
    const auto stage = [&](const std::string& name, auto&& body) {
        const auto t0 = std::chrono::steady_clock::now();
        try {
            body();
        } catch (const std::exception& e) {
            throw std::runtime_error("stage '" + name + "' failed: " + e.what());
        }
        timings[name] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    };

    ScaleReport scales;
    stage("scales", [&] {
        scales = compute_scales(cfg.physics);
        write_text(outdir / "scales.json", scales_json(cfg.physics, scales));
        for (const auto& [name, value] : scales.validity_ratios)
            if (value >= 1.0)
                warnings.push_back("regime ratio " + name + " = " + format_double(value) +
                                   " is not << 1");
    });

    MediumRealization medium;
    stage("medium", [&] {
        medium = generate_medium(cfg.medium_seed, cfg.num_modes, 1 + cfg.physics.cross_range_dim,
                                 cfg.physics.ell, cfg.physics.sigma);
        const int nc = 32, nr = 256;
        GridSpec spec;
        spec.origin_cross = -0.5 * cfg.physics.aperture;
        spec.origin_range = 0.0;
        spec.dcross = cfg.physics.aperture / (nc - 1);
        spec.drange = cfg.physics.L / (nr - 1);
        spec.ncross = nc;
        spec.nrange = nr;
        std::vector<double> mu(static_cast<size_t>(nc) * nr);
        for (int ic = 0; ic < nc; ++ic)
            for (int ir = 0; ir < nr; ++ir)
                mu[ic * nr + ir] = eval_mu(medium, spec.node3(ic, ir));
        write_field_csv(outdir / "medium.csv", spec, mu);
        write_field_pgm(outdir / "medium.pgm", nr, nc, mu, -3.0, 3.0);
    });

    ArrayData data;
    stage("synth", [&] {
        SourceSet sources;
        for (const auto& s : cfg.sources) sources.positions.push_back({s.cross, 0.0, s.range});
        const ArrayGeometry geom = ArrayGeometry::linear(cfg.num_receivers, cfg.physics.aperture);
        const FrequencyGrid grid = FrequencyGrid::make(cfg.physics, cfg.freq_count);
        data = synthesize(geom, sources, medium, cfg.physics, grid, cfg.noise_level, cfg.noise_seed);
        write_data_csv(outdir / "data.csv", data);
    });

    const WindowConfig win = WindowConfig::from_scales(scales);
    std::vector<double> rweights;
    if (cfg.apodize) rweights = apodization_weights(data.geometry, cfg.physics);

    ImageGrid img_cint;
    PeakList cint_peaks;
    stage("cint", [&] {
        const GridSpec grid = coarse_grid_spec(cfg, scales);
        img_cint = cint_image(data, grid, win, cfg.physics, threads, rweights);
        write_image_csv(outdir / "image_cint.csv", img_cint);
        write_image_pgm(outdir / "image_cint.pgm", img_cint);
        cint_peaks = detect_peaks(img_cint, cfg.cint_threshold, scales.cross_range_res_cint,
                                  scales.range_res_cint);
        dump_json(peaks_to_json(cint_peaks), outdir / "peaks_cint.json");
        if (cint_peaks.peaks.empty())
            throw std::runtime_error("no CINT peak found in the search domain");
        result.z0 = cint_peaks.peaks.front().position;
    });

    ImageGrid img_off;
    PeakList off_peaks;
    stage("offset", [&] {
        const GridSpec grid = fine_grid_spec(cfg, scales, result.z0, &img_cint);
        const Vec3 z0{result.z0.cross, 0.0, result.z0.range};
        img_off = offset_image(data, z0, grid, win, cfg.physics, threads, rweights);
        write_image_csv(outdir / "image_offset.csv", img_off);
        write_image_pgm(outdir / "image_offset.pgm", img_off);
        off_peaks = detect_peaks(img_off, cfg.offset_threshold,
                                 cfg.suppression_cross_px * grid.dcross,
                                 cfg.suppression_range_px * grid.drange);
        json jpk = peaks_to_json(off_peaks);
        jpk["z0"] = point_json(result.z0);
        dump_json(jpk, outdir / "peaks_offset.json");
        result.num_offset_peaks = static_cast<int>(off_peaks.peaks.size());
    });

    stage("reconstruct", [&] {
        const Tol2 tol = fine_tolerance(cfg, scales);
        const OffsetSet raw = peaks_to_offsets(off_peaks, result.z0, tol);
        const OffsetSet filtered = symmetry_filter(raw);
        result.num_offsets_filtered = static_cast<int>(filtered.offsets.size());
        if (!raw.offsets.empty() && filtered.offsets.empty())
            warnings.push_back("symmetry filter removed every offset; reporting the anchor only");

        json joff;
        joff["z0"] = point_json(result.z0);
        joff["tolerance"] = {{"cross", tol.cross}, {"range", tol.range}};
        joff["raw"] = json::array();
        for (size_t i = 0; i < raw.offsets.size(); ++i) {
            json e = point_json(raw.offsets[i]);
            e["magnitude"] = raw.magnitudes[i];
            joff["raw"].push_back(e);
        }
        joff["filtered"] = json::array();
        for (const auto& e : filtered.offsets) joff["filtered"].push_back(point_json(e));
        dump_json(joff, outdir / "offsets.json");

        const auto rec = reconstruct(filtered, result.z0, tol);
        json jrec;
        if (rec) {
            result.reconstruction = rec->points;
            jrec["outcome"] = "ok";
            jrec["anchor"] = point_json(rec->anchor);
            jrec["points"] = json::array();
            for (const auto& p : rec->points) jrec["points"].push_back(point_json(p));
            // The reflected constellation reproduces the same offset set;
            // flag the ambiguity when it is a genuinely different point set.
            std::vector<Pt2> refl;
            for (const auto& p : rec->points) refl.push_back(rec->anchor - (p - rec->anchor));
            jrec["reflection_ambiguous"] = [&] {
                std::vector<bool> used(rec->points.size(), false);
                for (const auto& p : refl) {
                    bool found = false;
                    for (size_t i = 0; i < rec->points.size(); ++i)
                        if (!used[i] && vec_eq(p, rec->points[i], tol)) {
                            used[i] = true;
                            found = true;
                            break;
                        }
                    if (!found) return true;
                }
                return false;
            }();
        } else {
            result.reconstruction_empty = true;
            jrec["outcome"] = "empty";
            jrec["anchor"] = point_json(result.z0);
            jrec["points"] = json::array();
        }
        dump_json(jrec, outdir / "reconstruction.json");
    });

    json manifest;
    manifest["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
    json cfg_echo;
    for (const auto& [k, v] : config_kv(cfg)) cfg_echo[k] = v;
    manifest["config"] = cfg_echo;
    manifest["scales"] = scales_to_json(scales);
    manifest["warnings"] = warnings;
    manifest["results"] = {{"z0", point_json(result.z0)},
                           {"num_offset_peaks", result.num_offset_peaks},
                           {"num_offsets_filtered", result.num_offsets_filtered},
                           {"outcome", result.reconstruction_empty ? "empty" : "ok"}};
    manifest["timings_s"] = timings;
    json files;
    for (const char* name :
         {"scales.json", "medium.csv", "medium.pgm", "data.csv", "image_cint.csv",
          "image_cint.pgm", "peaks_cint.json", "image_offset.csv", "image_offset.pgm",
          "peaks_offset.json", "offsets.json", "reconstruction.json"}) {
        const fs::path f = outdir / name;
        files[name] = {{"bytes", fs::file_size(f)}, {"fnv1a64", fnv1a_hex(f)}};
    }
    manifest["files"] = files;
    result.manifest_file = outdir / "manifest.json";
    dump_json(manifest, result.manifest_file);

    result.scales = scales;
    return result;
}

}  // namespace cintrec
