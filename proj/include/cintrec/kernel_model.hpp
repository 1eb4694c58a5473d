#pragma once

#include <array>

#include "cintrec/config.hpp"
#include "cintrec/forward.hpp"
#include "cintrec/geometry.hpp"
#include "cintrec/scales.hpp"

namespace cintrec {

/// Center/difference coordinates of one point pair, split into the
/// cross-range plane and the range axis.
struct CenterDiff {
    std::array<double, 2> bar = {0.0, 0.0};  ///< (y + y')/2, cross-range
    std::array<double, 2> til = {0.0, 0.0};  ///< y - y', cross-range
    double bar3 = 0.0;                       ///< (y3 + y3')/2
    double til3 = 0.0;                       ///< y3 - y3'
};

CenterDiff center_diff(const Vec3& y, const Vec3& yp);

/// Reconstructs (y, y') from center/difference coordinates.
std::pair<Vec3, Vec3> from_center_diff(const CenterDiff& cd);

/// Search pair (y) and source pair (z) in center/difference form.
struct KernelPoint {
    CenterDiff y;
    CenterDiff z;
};

KernelPoint make_kernel_point(const Vec3& y, const Vec3& yp, const Vec3& z, const Vec3& zp);

/// Closed-form magnitude envelope of the imaging kernel, normalized to 1
/// when every offset vanishes. The full complex kernel carries an extra
/// amplitude factor and phase that the magnitude-level validation does
/// not use.
double kernel_envelope(const KernelPoint& kp, const ScaleReport& scales,
                       const PhysicsConfig& cfg);

/// Sum of kernel envelopes over all ordered source pairs: an
/// envelope-level predictor of |I(y, y')| up to a multiplicative constant.
double kernel_sum(const Vec3& y, const Vec3& yp, const SourceSet& sources,
                  const ScaleReport& scales, const PhysicsConfig& cfg);

}  // namespace cintrec
