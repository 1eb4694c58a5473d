#include "cintrec/scales.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cintrec {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
}

ScaleReport compute_scales(const PhysicsConfig& cfg) {
    cfg.validate();
    ScaleReport r;

    const double w0 = PhysicsConfig::omega0;
    const double B = cfg.bandwidth();
    const double c0 = cfg.c0();
    const double k0 = cfg.k0();

    r.Omega_d = 2.0 * w0 * std::pow(two_pi, -1.25) * cfg.lambda0 / (cfg.sigma * std::sqrt(cfg.ell * cfg.L));
    r.X_d = std::sqrt(3.0) * cfg.ell * r.Omega_d / w0;
    r.S = 8.0 * cfg.lambda0 * cfg.lambda0 / (std::pow(two_pi, 2.5) * cfg.sigma * cfg.sigma * cfg.ell);

    r.Omega = cfg.Omega_factor * r.Omega_d;
    r.X = cfg.X_factor * r.X_d;

    const double a6 = cfg.aperture / 6.0;
    r.Omega_e = 1.0 / std::sqrt(1.0 / (r.Omega * r.Omega) + 1.0 / (r.Omega_d * r.Omega_d) + 1.0 / (4.0 * B * B));
    r.X_e = 1.0 / std::sqrt(1.0 / (r.X * r.X) + 1.0 / (r.X_d * r.X_d) + 1.0 / (4.0 * a6 * a6));

    r.gamma = 4.0 * r.X_d * r.X_d / (4.0 * r.X_d * r.X_d - r.X_e * r.X_e);
    r.theta = w0 * r.X_e / (r.Omega_e * a6);

    r.cross_range_res_cint = cfg.L / (k0 * r.X_e);
    r.range_res_cint = c0 / r.Omega_e;
    r.cross_range_res_fine = cfg.L / (k0 * cfg.aperture);
    r.range_res_fine = c0 / B;

    r.validity_ratios = check_regime(cfg, r);

    for (double v : {r.S, r.Omega_d, r.X_d, r.Omega_e, r.X_e, r.gamma, r.theta,
                     r.cross_range_res_cint, r.range_res_cint,
                     r.cross_range_res_fine, r.range_res_fine}) {
        if (!std::isfinite(v) || v <= 0.0)
            throw std::invalid_argument("compute_scales: non-finite derived scale; check units");
    }
    return r;
}

std::map<std::string, double> check_regime(const PhysicsConfig& cfg, const ScaleReport& report,
                                           bool strict) {
    std::map<std::string, double> ratios;
    // Geometrical-optics and amplitude-fluctuation bounds of the random
    // travel time model, the paraxial residual, and the strong-scattering
    // requirement. Each ratio should be << 1.
    ratios["ray_bound_sqrt_lambda0_L_over_ell"] = std::sqrt(cfg.lambda0 * cfg.L) / cfg.ell;
    ratios["sigma_upper_sigma_L_over_sqrt_lambda0_ell"] =
        cfg.sigma * cfg.L / std::sqrt(cfg.lambda0 * cfg.ell);
    ratios["sigma_lower_wavefront_over_sigma"] =
        std::pow(cfg.lambda0, 2.0 / 3.0) * std::pow(cfg.ell, 1.0 / 6.0) /
        (std::pow(cfg.L, 5.0 / 6.0) * cfg.sigma);
    ratios["paraxial_a4_over_lambda0_L3"] =
        std::pow(cfg.aperture, 4.0) / (cfg.lambda0 * cfg.L * cfg.L * cfg.L);
    ratios["mean_free_path_S_over_L"] = report.S / cfg.L;

    if (strict) {
        for (const auto& [name, value] : ratios) {
            if (!(value < 1.0))
                throw std::runtime_error("check_regime: ratio " + name + " = " +
                                         std::to_string(value) + " is not << 1");
        }
    }
    return ratios;
}

double gamma1(double zeta_bar_sq, double theta) {
    return 6.0 * std::sqrt(2.0 * (1.0 + zeta_bar_sq / (2.0 * theta * theta)));
}

}  // namespace cintrec
