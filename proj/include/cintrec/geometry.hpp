#pragma once

#include <array>
#include <cmath>
#include <span>

namespace cintrec {

/// Spatial point. Coordinates are split into up to two cross-range
/// components and one range component (the array-to-source axis).
/// Planar (2D) setups leave cross2 at zero.
struct Vec3 {
    double cross1 = 0.0;
    double cross2 = 0.0;
    double range = 0.0;
};

inline Vec3 operator+(const Vec3& a, const Vec3& b) {
    return {a.cross1 + b.cross1, a.cross2 + b.cross2, a.range + b.range};
}

inline Vec3 operator-(const Vec3& a, const Vec3& b) {
    return {a.cross1 - b.cross1, a.cross2 - b.cross2, a.range - b.range};
}

inline Vec3 operator*(double s, const Vec3& a) {
    return {s * a.cross1, s * a.cross2, s * a.range};
}

inline double norm(const Vec3& a) {
    return std::sqrt(a.cross1 * a.cross1 + a.cross2 * a.cross2 + a.range * a.range);
}

inline double dist(const Vec3& a, const Vec3& b) { return norm(a - b); }

inline double cross_dist(const Vec3& a, const Vec3& b) {
    const double d1 = a.cross1 - b.cross1;
    const double d2 = a.cross2 - b.cross2;
    return std::sqrt(d1 * d1 + d2 * d2);
}

/// Point in the imaging plane (one cross-range axis, one range axis).
struct Pt2 {
    double cross = 0.0;
    double range = 0.0;
};

inline Pt2 operator+(Pt2 a, Pt2 b) { return {a.cross + b.cross, a.range + b.range}; }
inline Pt2 operator-(Pt2 a, Pt2 b) { return {a.cross - b.cross, a.range - b.range}; }
inline Pt2 operator-(Pt2 a) { return {-a.cross, -a.range}; }

}  // namespace cintrec
