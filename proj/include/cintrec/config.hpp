#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cintrec {

/// Physical parameters of a simulation, in the internal unit system where
/// the correlation length ell and the central frequency omega0 are the
/// units of length and frequency. Lengths are therefore expressed in
/// multiples of ell and frequencies in multiples of omega0; configs keep
/// ell explicit so that scale-invariance properties remain testable.
struct PhysicsConfig {
    double lambda0 = 0.0;       ///< central wavelength
    double ell = 1.0;           ///< correlation length of the medium
    double L = 0.0;             ///< range of the imaging region center
    double aperture = 0.0;      ///< array aperture a
    double sigma = 0.0;         ///< fluctuation strength of the wave speed
    double B_frac = 0.0;        ///< bandwidth as a fraction of omega0
    double X_factor = 1.0 / 3.0;      ///< X = X_factor * X_d
    double Omega_factor = 1.0 / 3.0;  ///< Omega = Omega_factor * Omega_d
    int cross_range_dim = 1;    ///< 1 for planar setups, 2 for full 3D

    static constexpr double omega0 = 1.0;

    double bandwidth() const { return B_frac * omega0; }
    double c0() const { return lambda0 * omega0 / (2.0 * std::numbers::pi); }
    double k0() const { return 2.0 * std::numbers::pi / lambda0; }

    void validate() const {
        auto positive = [](double v) { return v > 0.0 && std::isfinite(v); };
        if (!positive(lambda0) || !positive(ell) || !positive(L) || !positive(aperture))
            throw std::invalid_argument("PhysicsConfig: lengths must be finite and positive");
        if (!positive(sigma))
            throw std::invalid_argument("PhysicsConfig: sigma must be positive");
        if (!(B_frac > 0.0 && B_frac < 1.0))
            throw std::invalid_argument("PhysicsConfig: B_frac must lie in (0, 1)");
        if (!(X_factor > 0.0 && X_factor <= 1.0) || !(Omega_factor > 0.0 && Omega_factor <= 1.0))
            throw std::invalid_argument("PhysicsConfig: window factors must lie in (0, 1]");
        if (cross_range_dim != 1 && cross_range_dim != 2)
            throw std::invalid_argument("PhysicsConfig: cross_range_dim must be 1 or 2");
    }
};

}  // namespace cintrec
