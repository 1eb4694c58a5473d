#pragma once

#include <complex>
#include <span>
#include <vector>

#include "cintrec/config.hpp"
#include "cintrec/forward.hpp"
#include "cintrec/geometry.hpp"
#include "cintrec/scales.hpp"

namespace cintrec {

/// Gaussian window parameters of the correlation (Omega) and of the
/// receiver-pair weighting (X).
struct WindowConfig {
    double Omega = 0.0;
    double X = 0.0;

    static WindowConfig from_scales(const ScaleReport& s) { return {s.Omega, s.X}; }
};

/// Rectangular imaging mesh in the (cross-range, range) plane.
struct GridSpec {
    double origin_cross = 0.0;  ///< position of node (0, 0)
    double origin_range = 0.0;
    double dcross = 0.0;
    double drange = 0.0;
    int ncross = 0;
    int nrange = 0;

    static GridSpec centered(Pt2 center, double dcross, double drange, int half_ncross,
                             int half_nrange);

    Pt2 node(int ic, int ir) const {
        return {origin_cross + ic * dcross, origin_range + ir * drange};
    }
    Vec3 node3(int ic, int ir) const {
        return {origin_cross + ic * dcross, 0.0, origin_range + ir * drange};
    }
    int count() const { return ncross * nrange; }
};

struct ImageGrid {
    GridSpec spec;
    std::vector<cdouble> values;  ///< [ic * nrange + ir]

    cdouble at(int ic, int ir) const { return values[ic * spec.nrange + ir]; }
};

struct Peak {
    Pt2 position;
    double magnitude = 0.0;
};

struct PeakList {
    std::vector<Peak> peaks;  ///< magnitudes descending
    double threshold = 0.0;   ///< absolute magnitude threshold applied
    double radius_cross = 0.0;
    double radius_range = 0.0;
};

/// Time-domain cross-correlation around time t at lag tdiff, computed by
/// trapezoid quadrature of the windowed product of receiver traces.
/// Slow; serves as the ground-truth oracle for correlation_fd.
cdouble correlation_td(const ArrayData& data, int r, int rp, double t, double tdiff,
                       const WindowConfig& win);

/// Same correlation as a banded double sum over frequency pairs; pairs
/// with |omega1 - omega2| > 5 Omega are skipped.
cdouble correlation_fd(const ArrayData& data, int r, int rp, double t, double tdiff,
                       const WindowConfig& win);

/// Two-point interferometric image value
///   I(y, y') = sum_{r,r'} Psi(|x_r - x_r'|/X) C(tau_bar, tau_diff, x_r, x_r'),
/// with the correlation evaluated at the search-point travel times that
/// compensate the r leg with tau(x_r, y) and the r' leg with tau(x_r', y').
/// Receiver pairs beyond 5X are skipped; summation order is fixed.
/// Optional per-receiver weights (e.g. Gaussian aperture apodization)
/// multiply into the pair weight; empty means unit weights.
cdouble two_point_image(const ArrayData& data, const Vec3& y, const Vec3& yp,
                        const WindowConfig& win, const PhysicsConfig& cfg,
                        std::span<const double> receiver_weights = {});

/// I(y, y) on every node of the grid.
ImageGrid cint_image(const ArrayData& data, const GridSpec& grid, const WindowConfig& win,
                     const PhysicsConfig& cfg, int threads = 1,
                     std::span<const double> receiver_weights = {});

/// I(z0, y) on every node of the grid.
ImageGrid offset_image(const ArrayData& data, const Vec3& z0, const GridSpec& grid,
                       const WindowConfig& win, const PhysicsConfig& cfg, int threads = 1,
                       std::span<const double> receiver_weights = {});

/// Conventional travel-time migration sum_r p(tau(x_r, y), x_r); diagnostic
/// only, statistically unstable in strong clutter.
ImageGrid migration_image(const ArrayData& data, const GridSpec& grid, const PhysicsConfig& cfg,
                          int threads = 1);

/// Local maxima of |values| above threshold_frac * global max, greedily
/// kept in descending magnitude; candidates strictly inside the
/// suppression box of an accepted peak are dropped. Peak positions are
/// grid nodes.
PeakList detect_peaks(const ImageGrid& img, double threshold_frac, double radius_cross,
                      double radius_range);

/// Gaussian aperture taper exp(-|x_r|^2 / (2 (a/6)^2)) per receiver.
std::vector<double> apodization_weights(const ArrayGeometry& geometry, const PhysicsConfig& cfg);

}  // namespace cintrec
