#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cintrec/scales.hpp"
#include "test_helpers.hpp"

using namespace cintrec;
using cintrec::testing::paper_config;

namespace {
bool close_rel(double a, double b, double tol) { return std::abs(a - b) <= tol * std::abs(b); }
}  // namespace

TEST_CASE("published scale table is reproduced") {
    const ScaleReport r = compute_scales(paper_config());

    // Rounded published values, 2% slack.
    CHECK(close_rel(r.Omega_d, 0.039, 0.02));
    CHECK(close_rel(r.X_d, 0.068, 0.02));
    CHECK(close_rel(r.X_e, 0.0214, 0.02));
    CHECK(close_rel(r.Omega_e, 0.0124, 0.02));
    CHECK(close_rel(r.gamma, 1.025, 0.02));
    CHECK(close_rel(r.cross_range_res_cint, 0.0654, 0.02));
    CHECK(close_rel(r.range_res_cint, 1.4e-4, 0.02));
    CHECK(close_rel(r.cross_range_res_fine, 8.8e-5, 0.02));
    CHECK(close_rel(r.range_res_fine, 8.8e-6, 0.02));

    // Direct arithmetic on the mean-free-path formula.
    CHECK(close_rel(r.S, 2.44541, 1e-3));
}

TEST_CASE("regime ratios of the published configuration") {
    const PhysicsConfig cfg = paper_config();
    const auto ratios = check_regime(cfg, compute_scales(cfg));

    CHECK(close_rel(ratios.at("ray_bound_sqrt_lambda0_L_over_ell"), 0.0938083, 1e-3));
    CHECK(close_rel(ratios.at("sigma_upper_sigma_L_over_sqrt_lambda0_ell"), 0.482418, 1e-3));
    CHECK(close_rel(ratios.at("paraxial_a4_over_lambda0_L3"), 11.6364, 1e-3));
    CHECK(ratios.at("paraxial_a4_over_lambda0_L3") > 1.0);  // violated, warning only
    CHECK(ratios.at("mean_free_path_S_over_L") < 1.0);

    CHECK_NOTHROW(check_regime(cfg, compute_scales(cfg), false));
    CHECK_THROWS(check_regime(cfg, compute_scales(cfg), true));
}

TEST_CASE("unit identities") {
    const PhysicsConfig cfg = paper_config();
    CHECK(cfg.k0() * cfg.lambda0 == doctest::Approx(2.0 * 3.14159265358979323846).epsilon(1e-15));
    CHECK(cfg.c0() == doctest::Approx(cfg.lambda0 * PhysicsConfig::omega0 / (2.0 * 3.14159265358979323846)));
}

TEST_CASE("monotonicity in sigma") {
    PhysicsConfig cfg = paper_config();
    const ScaleReport r1 = compute_scales(cfg);
    cfg.sigma *= 2.0;
    const ScaleReport r2 = compute_scales(cfg);
    CHECK(r2.Omega_d < r1.Omega_d);
    CHECK(r2.X_d < r1.X_d);
    CHECK(r2.S < r1.S);
}

TEST_CASE("effective scales are strictly squeezed") {
    // random valid configs
    uint64_t state = 12345;
    auto unif = [&]() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<double>(state >> 11) * 0x1.0p-53;
    };
    for (int trial = 0; trial < 200; ++trial) {
        PhysicsConfig cfg;
        cfg.lambda0 = std::pow(10.0, -5.0 + 3.0 * unif());
        cfg.ell = 1.0;
        cfg.L = 50.0 + 1000.0 * unif();
        cfg.aperture = 1.0 + 30.0 * unif();
        cfg.sigma = std::pow(10.0, -6.0 + 3.0 * unif());
        cfg.B_frac = 0.05 + 0.9 * unif();
        cfg.X_factor = 0.05 + 0.95 * unif();
        cfg.Omega_factor = 0.05 + 0.95 * unif();
        const ScaleReport r = compute_scales(cfg);
        CHECK(r.Omega_e < r.Omega);
        CHECK(r.Omega_e < r.Omega_d);
        CHECK(r.Omega_e < 2.0 * cfg.bandwidth());
        CHECK(r.X_e < r.X);
        CHECK(r.X_e < r.X_d);
        CHECK(r.X_e < cfg.aperture / 3.0);
        CHECK(r.gamma > 1.0);
        CHECK(r.gamma < 4.0 / 3.0);
    }
}

TEST_CASE("dimensionless quantities are scale invariant") {
    PhysicsConfig cfg = paper_config();
    const ScaleReport r1 = compute_scales(cfg);
    const double c = 7.3;
    cfg.lambda0 *= c;
    cfg.ell *= c;
    cfg.L *= c;
    cfg.aperture *= c;
    const ScaleReport r2 = compute_scales(cfg);
    CHECK(r2.gamma == doctest::Approx(r1.gamma).epsilon(1e-12));
    CHECK(r2.theta == doctest::Approx(r1.theta).epsilon(1e-12));
    for (const auto& [name, value] : r1.validity_ratios)
        CHECK(r2.validity_ratios.at(name) == doctest::Approx(value).epsilon(1e-12));
}

TEST_CASE("gamma1 lower bound") {
    const ScaleReport r = compute_scales(paper_config());
    CHECK(gamma1(0.0, r.theta) == doctest::Approx(6.0 * std::sqrt(2.0)).epsilon(1e-15));
    CHECK(gamma1(0.5, r.theta) > 6.0 * std::sqrt(2.0));
}

TEST_CASE("invalid configs are rejected") {
    PhysicsConfig cfg = paper_config();
    cfg.sigma = -1.0;
    CHECK_THROWS_AS(compute_scales(cfg), std::invalid_argument);
    cfg = paper_config();
    cfg.B_frac = 1.5;
    CHECK_THROWS_AS(compute_scales(cfg), std::invalid_argument);
    cfg = paper_config();
    cfg.lambda0 = 0.0;
    CHECK_THROWS_AS(compute_scales(cfg), std::invalid_argument);
    cfg = paper_config();
    cfg.cross_range_dim = 3;
    CHECK_THROWS_AS(compute_scales(cfg), std::invalid_argument);
}
