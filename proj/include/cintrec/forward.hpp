#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "cintrec/config.hpp"
#include "cintrec/geometry.hpp"
#include "cintrec/medium.hpp"

namespace cintrec {

using cdouble = std::complex<double>;

/// Receiver positions. All receivers sit in the range = 0 plane.
struct ArrayGeometry {
    std::vector<Vec3> receivers;
    double aperture = 0.0;

    /// Uniform line array of n receivers spanning [-aperture/2, aperture/2]
    /// along the first cross-range axis.
    static ArrayGeometry linear(int n, double aperture);

    void validate() const;
    int count() const { return static_cast<int>(receivers.size()); }
};

struct SourceSet {
    std::vector<Vec3> positions;  ///< ranges must be positive
    void validate() const;
};

/// Uniform angular-frequency grid for the synthesized band.
struct FrequencyGrid {
    std::vector<double> omegas;
    double omega0 = PhysicsConfig::omega0;
    double domega = 0.0;

    /// n uniform samples covering [omega0 - 4B, omega0 + 4B].
    static FrequencyGrid make(const PhysicsConfig& cfg, int n = 257);
    /// Unchecked uniform grid, for synthetic test data.
    static FrequencyGrid uniform(double lo, double hi, int n);

    int count() const { return static_cast<int>(omegas.size()); }
    /// Duration of the unambiguous time window, 2*pi / domega.
    double time_window() const;
};

/// Frequency-domain array recordings p_hat(omega, x_r).
struct ArrayData {
    std::vector<cdouble> values;      ///< [receiver * nfreq + freq], with noise
    std::vector<cdouble> noise_free;  ///< same layout, before noise
    FrequencyGrid grid;
    ArrayGeometry geometry;
    double noise_level = 0.0;

    cdouble at(int receiver, int freq) const { return values[receiver * grid.count() + freq]; }
};

/// Fourier transform of the emitted pulse: real positive Gaussian of
/// standard deviation proportional to the bandwidth.
cdouble pulse_spectrum(double omega, const PhysicsConfig& cfg);

/// Random travel time Green's function: unit-modulus random phase over the
/// exact Euclidean travel time, deterministic 1/(4 pi |x-y|) amplitude.
cdouble green_function(double omega, const Vec3& x, const Vec3& y,
                       const MediumRealization& m, const PhysicsConfig& cfg);

/// Synthesizes p_hat(omega, x_r) = f_hat(omega) sum_s G_hat(omega, x_r, y_s)
/// plus circular complex Gaussian noise of standard deviation
/// noise_level * max |p_hat| (global maximum over all entries).
/// Noise is drawn from a SplitMix64 stream in (receiver, frequency) order.
ArrayData synthesize(const ArrayGeometry& geometry, const SourceSet& sources,
                     const MediumRealization& m, const PhysicsConfig& cfg,
                     const FrequencyGrid& grid, double noise_level, uint64_t noise_seed);

/// Inverse discrete Fourier synthesis of one receiver trace,
/// p(t) = sum_omega (domega / 2 pi) exp(-i omega t) p_hat(omega).
/// The requested times must span no more than the unambiguous window.
std::vector<cdouble> time_trace(const ArrayData& data, int receiver, std::span<const double> times);

}  // namespace cintrec
