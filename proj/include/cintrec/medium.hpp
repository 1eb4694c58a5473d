#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "cintrec/config.hpp"
#include "cintrec/geometry.hpp"

namespace cintrec {

/// One seeded realization of the stationary Gaussian random field mu with
/// autocorrelation exp(-|du|^2 / 2), represented as a truncated random
/// Fourier series
///
///   mu(u) = sum_j w_j [ A_j cos(k_j . u) + B_j sin(k_j . u) ],
///
/// where the wavevectors k_j are importance-sampled from the normalized
/// spectral density (a standard normal in dim dimensions), A_j, B_j are
/// unit normals and w_j = 1/sqrt(num_modes). The ensemble autocorrelation
/// is exact for every mode count; a single realization approaches a
/// Gaussian field as num_modes grows.
///
/// Immutable after construction; concurrent evaluation is safe.
struct MediumRealization {
    uint64_t seed = 0;
    int dim = 2;                 ///< 1 + cross_range_dim
    double ell = 1.0;
    double sigma = 0.0;
    std::vector<std::array<double, 3>> wavevectors;       ///< first `dim` entries used
    std::vector<std::pair<double, double>> amplitudes;    ///< (cosine, sine)
    std::vector<double> weights;

    /// Series value at a dimensionless argument u (already divided by ell).
    double eval_dimensionless(std::array<double, 3> u) const;
};

/// Draw order per mode: wavevector components, cosine amplitude, sine
/// amplitude, all from one SplitMix64 stream seeded with `seed`.
MediumRealization generate_medium(uint64_t seed, int num_modes, int dim, double ell, double sigma);

/// Evaluates mu at a spatial point (physical units); the argument of the
/// series is point / ell. For dim == 2 the point is (cross1, range).
double eval_mu(const MediumRealization& m, const Vec3& point);

/// Random travel time perturbation along the straight segment from y to x,
///
///   delta_tau = sigma |x - y| / (2 c0) * integral_0^1 mu(((1-u) y + u x)/ell) du,
///
/// evaluated with a composite 5-point Gauss-Legendre rule whose
/// subinterval length along the segment is at most `step` (default
/// ell/5). The node sums are carried out in closed form per mode, so the
/// cost is independent of the segment length.
double delta_tau(const MediumRealization& m, const Vec3& x, const Vec3& y,
                 const PhysicsConfig& cfg, double step = -1.0);

}  // namespace cintrec
