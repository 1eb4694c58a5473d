#pragma once

#include <map>
#include <string>

#include "cintrec/config.hpp"

namespace cintrec {

/// Derived statistical and resolution scales of a configuration.
/// All members are in the internal (ell, omega0) unit system.
struct ScaleReport {
    double S = 0.0;         ///< scattering mean free path
    double Omega_d = 0.0;   ///< decorrelation frequency
    double X_d = 0.0;       ///< decorrelation length
    double Omega = 0.0;     ///< correlation-window frequency parameter
    double X = 0.0;         ///< receiver-pair window parameter
    double Omega_e = 0.0;   ///< effective frequency scale
    double X_e = 0.0;       ///< effective length scale
    double gamma = 0.0;
    double theta = 0.0;
    double cross_range_res_cint = 0.0;  ///< L / (k0 X_e)
    double range_res_cint = 0.0;        ///< c0 / Omega_e
    double cross_range_res_fine = 0.0;  ///< L / (k0 a)
    double range_res_fine = 0.0;        ///< c0 / B
    /// Named dimensionless ratios; every listed ratio is expected << 1.
    std::map<std::string, double> validity_ratios;
};

/// Computes every derived scale. Throws on invalid or unit-inconsistent
/// input (non-finite intermediates).
ScaleReport compute_scales(const PhysicsConfig& cfg);

/// Returns the named validity ratios of the modeling regime. Ratios are
/// advisory; with strict=true a ratio >= 1 raises instead.
std::map<std::string, double> check_regime(const PhysicsConfig& cfg, const ScaleReport& report,
                                           bool strict = false);

/// gamma1 coefficient of the kernel envelope at reduced center offset
/// zeta_bar; equals 6*sqrt(2) at zeta_bar = 0.
double gamma1(double zeta_bar_sq, double theta);

}  // namespace cintrec
