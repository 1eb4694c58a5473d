#include "cintrec/forward.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cintrec/rng.hpp"

namespace cintrec {

namespace {
constexpr double pi = std::numbers::pi;
constexpr double two_pi = 2.0 * std::numbers::pi;

cdouble polar1(double phase) { return {std::cos(phase), std::sin(phase)}; }
}  // namespace

ArrayGeometry ArrayGeometry::linear(int n, double aperture) {
    if (n < 2) throw std::invalid_argument("ArrayGeometry: need at least 2 receivers");
    ArrayGeometry g;
    g.aperture = aperture;
    g.receivers.resize(n);
    const double dx = aperture / (n - 1);
    for (int i = 0; i < n; ++i) g.receivers[i] = {-0.5 * aperture + i * dx, 0.0, 0.0};
    return g;
}

void ArrayGeometry::validate() const {
    if (receivers.size() < 2) throw std::invalid_argument("ArrayGeometry: need at least 2 receivers");
    if (!(aperture > 0.0)) throw std::invalid_argument("ArrayGeometry: aperture must be positive");
    double max_sep = 0.0;
    for (const auto& r : receivers) {
        if (r.range != 0.0) throw std::invalid_argument("ArrayGeometry: receivers must be at range 0");
        for (const auto& q : receivers) max_sep = std::max(max_sep, cross_dist(r, q));
    }
    if (max_sep > aperture * (1.0 + 1e-12))
        throw std::invalid_argument("ArrayGeometry: receiver span exceeds the aperture");
}

void SourceSet::validate() const {
    if (positions.empty()) throw std::invalid_argument("SourceSet: empty source set");
    for (const auto& s : positions)
        if (!(s.range > 0.0)) throw std::invalid_argument("SourceSet: source ranges must be positive");
}

FrequencyGrid FrequencyGrid::make(const PhysicsConfig& cfg, int n) {
    const double B = cfg.bandwidth();
    return uniform(PhysicsConfig::omega0 - 4.0 * B, PhysicsConfig::omega0 + 4.0 * B, n);
}

FrequencyGrid FrequencyGrid::uniform(double lo, double hi, int n) {
    if (n < 1 || !(hi >= lo)) throw std::invalid_argument("FrequencyGrid: bad band");
    FrequencyGrid g;
    g.omegas.resize(n);
    g.domega = n > 1 ? (hi - lo) / (n - 1) : 1.0;
    for (int i = 0; i < n; ++i) g.omegas[i] = lo + i * g.domega;
    return g;
}

double FrequencyGrid::time_window() const { return two_pi / domega; }

cdouble pulse_spectrum(double omega, const PhysicsConfig& cfg) {
    const double B = cfg.bandwidth();
    const double d = omega - PhysicsConfig::omega0;
    return std::sqrt(std::sqrt(two_pi) / B) * std::exp(-d * d / (4.0 * B * B));
}

cdouble green_function(double omega, const Vec3& x, const Vec3& y,
                       const MediumRealization& m, const PhysicsConfig& cfg) {
    const double d = dist(x, y);
    if (!(d > 0.0)) throw std::invalid_argument("green_function: coincident points");
    const double tau = d / cfg.c0();
    const double dtau = delta_tau(m, x, y, cfg);
    return polar1(omega * (tau + dtau)) / (4.0 * pi * d);
}

ArrayData synthesize(const ArrayGeometry& geometry, const SourceSet& sources,
                     const MediumRealization& m, const PhysicsConfig& cfg,
                     const FrequencyGrid& grid, double noise_level, uint64_t noise_seed) {
    geometry.validate();
    sources.validate();
    const int nr = geometry.count();
    const int nf = grid.count();
    const int ns = static_cast<int>(sources.positions.size());

    ArrayData data;
    data.grid = grid;
    data.geometry = geometry;
    data.noise_level = noise_level;
    data.noise_free.assign(static_cast<size_t>(nr) * nf, cdouble(0.0, 0.0));

    // delta_tau is frequency independent; one ray integral per (r, s).
    std::vector<double> total_tau(static_cast<size_t>(nr) * ns);
    std::vector<double> inv_dist(static_cast<size_t>(nr) * ns);
    for (int r = 0; r < nr; ++r) {
        for (int s = 0; s < ns; ++s) {
            const Vec3& xr = geometry.receivers[r];
            const Vec3& ys = sources.positions[s];
            const double d = dist(xr, ys);
            total_tau[r * ns + s] = d / cfg.c0() + delta_tau(m, xr, ys, cfg);
            inv_dist[r * ns + s] = 1.0 / (4.0 * pi * d);
        }
    }

    // The pulse multiplies each source term before accumulation so that
    // multi-source data is bit-identical to the sum of single-source runs.
    for (int r = 0; r < nr; ++r) {
        for (int k = 0; k < nf; ++k) {
            const double w = grid.omegas[k];
            const cdouble pulse = pulse_spectrum(w, cfg);
            cdouble sum(0.0, 0.0);
            for (int s = 0; s < ns; ++s)
                sum += pulse * (inv_dist[r * ns + s] * polar1(w * total_tau[r * ns + s]));
            data.noise_free[r * nf + k] = sum;
        }
    }

    data.values = data.noise_free;
    if (noise_level > 0.0) {
        double peak = 0.0;
        for (const auto& v : data.noise_free) peak = std::max(peak, std::abs(v));
        const double s = noise_level * peak / std::sqrt(2.0);  // per quadrature component
        Rng rng(noise_seed);
        for (auto& v : data.values) {
            const double re = rng.normal();
            const double im = rng.normal();
            v += cdouble(s * re, s * im);
        }
    }
    return data;
}

std::vector<cdouble> time_trace(const ArrayData& data, int receiver, std::span<const double> times) {
    if (receiver < 0 || receiver >= data.geometry.count())
        throw std::out_of_range("time_trace: receiver index");
    if (!times.empty()) {
        const auto [lo, hi] = std::minmax_element(times.begin(), times.end());
        if (*hi - *lo > data.grid.time_window())
            throw std::invalid_argument("time_trace: requested duration exceeds the unambiguous window");
    }
    const int nf = data.grid.count();
    const double scale = data.grid.domega / two_pi;
    std::vector<cdouble> out(times.size());
    for (size_t i = 0; i < times.size(); ++i) {
        cdouble acc(0.0, 0.0);
        for (int k = 0; k < nf; ++k)
            acc += polar1(-data.grid.omegas[k] * times[i]) * data.values[receiver * nf + k];
        out[i] = scale * acc;
    }
    return out;
}

}  // namespace cintrec
