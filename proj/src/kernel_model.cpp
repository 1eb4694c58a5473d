#include "cintrec/kernel_model.hpp"

#include <cmath>

namespace cintrec {

namespace {
double sq(double v) { return v * v; }
double norm2(const std::array<double, 2>& v) { return v[0] * v[0] + v[1] * v[1]; }
}  // namespace

CenterDiff center_diff(const Vec3& y, const Vec3& yp) {
    CenterDiff cd;
    cd.bar = {0.5 * (y.cross1 + yp.cross1), 0.5 * (y.cross2 + yp.cross2)};
    cd.til = {y.cross1 - yp.cross1, y.cross2 - yp.cross2};
    cd.bar3 = 0.5 * (y.range + yp.range);
    cd.til3 = y.range - yp.range;
    return cd;
}

std::pair<Vec3, Vec3> from_center_diff(const CenterDiff& cd) {
    Vec3 y{cd.bar[0] + 0.5 * cd.til[0], cd.bar[1] + 0.5 * cd.til[1], cd.bar3 + 0.5 * cd.til3};
    Vec3 yp{cd.bar[0] - 0.5 * cd.til[0], cd.bar[1] - 0.5 * cd.til[1], cd.bar3 - 0.5 * cd.til3};
    return {y, yp};
}

KernelPoint make_kernel_point(const Vec3& y, const Vec3& yp, const Vec3& z, const Vec3& zp) {
    return {center_diff(y, yp), center_diff(z, zp)};
}

double kernel_envelope(const KernelPoint& kp, const ScaleReport& scales,
                       const PhysicsConfig& cfg) {
    const double c0 = cfg.c0();
    const double k0 = cfg.k0();
    const double B = cfg.bandwidth();

    const std::array<double, 2> dbar = {kp.z.bar[0] - kp.y.bar[0], kp.z.bar[1] - kp.y.bar[1]};
    const std::array<double, 2> dtil = {kp.z.til[0] - kp.y.til[0], kp.z.til[1] - kp.y.til[1]};

    const double cross_center_scale = cfg.L / (k0 * scales.X_e);
    const double zeta_bar_sq = norm2(dbar) / sq(cross_center_scale);
    const double g1 = gamma1(zeta_bar_sq, scales.theta);

    const double mod_z = std::sqrt(norm2(kp.z.bar) + sq(kp.z.bar3));
    const double mod_y = std::sqrt(norm2(kp.y.bar) + sq(kp.y.bar3));

    const double e = norm2(kp.z.til) / (2.0 * scales.gamma * sq(scales.X_d)) +
                     sq(kp.z.til3 - kp.y.til3) / (2.0 * sq(c0 / B)) +
                     norm2(dtil) / (2.0 * sq(g1 * cfg.L / (k0 * cfg.aperture))) +
                     norm2(dbar) / (2.0 * sq(cross_center_scale)) +
                     sq(mod_z - mod_y) / (2.0 * sq(c0 / scales.Omega_e));
    return std::exp(-e);
}

double kernel_sum(const Vec3& y, const Vec3& yp, const SourceSet& sources,
                  const ScaleReport& scales, const PhysicsConfig& cfg) {
    double acc = 0.0;
    for (const auto& zs : sources.positions)
        for (const auto& zsp : sources.positions)
            acc += kernel_envelope(make_kernel_point(y, yp, zs, zsp), scales, cfg);
    return acc;
}

}  // namespace cintrec
