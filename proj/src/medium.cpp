#include "cintrec/medium.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "cintrec/rng.hpp"

namespace cintrec {

namespace {

// 5-point Gauss-Legendre nodes/weights mapped to [0, 1].
constexpr std::array<double, 5> kGlNode = {
    0.5 - 0.45308992296933200, 0.5 - 0.26923465505284155, 0.5,
    0.5 + 0.26923465505284155, 0.5 + 0.45308992296933200,
};
constexpr std::array<double, 5> kGlWeight = {
    0.5 * 0.23692688505618909, 0.5 * 0.47862867049936647, 0.5 * 0.56888888888888889,
    0.5 * 0.47862867049936647, 0.5 * 0.23692688505618909,
};

std::array<double, 3> to_field_coords(const Vec3& p, int dim, double ell) {
    if (dim == 2) return {p.cross1 / ell, p.range / ell, 0.0};
    return {p.cross1 / ell, p.cross2 / ell, p.range / ell};
}

// sum_{i=0}^{N-1} exp(i * i * delta)
std::complex<double> geometric_phase_sum(double delta, int n) {
    if (std::abs(std::sin(0.5 * delta)) < 1e-12) {
        const double phase = 0.5 * delta * (n - 1);
        return {n * std::cos(phase), n * std::sin(phase)};
    }
    const double amp = std::sin(0.5 * n * delta) / std::sin(0.5 * delta);
    const double phase = 0.5 * delta * (n - 1);
    return {amp * std::cos(phase), amp * std::sin(phase)};
}

}  // namespace

double MediumRealization::eval_dimensionless(std::array<double, 3> u) const {
    double acc = 0.0;
    for (size_t j = 0; j < wavevectors.size(); ++j) {
        const auto& k = wavevectors[j];
        const double phase = k[0] * u[0] + k[1] * u[1] + k[2] * u[2];
        acc += weights[j] * (amplitudes[j].first * std::cos(phase) +
                             amplitudes[j].second * std::sin(phase));
    }
    return acc;
}

MediumRealization generate_medium(uint64_t seed, int num_modes, int dim, double ell, double sigma) {
    if (dim != 2 && dim != 3) throw std::invalid_argument("generate_medium: dim must be 2 or 3");
    if (ell <= 0.0 || sigma <= 0.0)
        throw std::invalid_argument("generate_medium: ell and sigma must be positive");
    // Below ~16 modes the sampled spectrum is too sparse to resemble the
    // target autocorrelation within any single realization.
    if (num_modes < 16)
        throw std::invalid_argument("generate_medium: num_modes too small for usable spectral coverage");

    MediumRealization m;
    m.seed = seed;
    m.dim = dim;
    m.ell = ell;
    m.sigma = sigma;
    m.wavevectors.resize(num_modes);
    m.amplitudes.resize(num_modes);
    m.weights.assign(num_modes, 1.0 / std::sqrt(static_cast<double>(num_modes)));

    Rng rng(seed);
    for (int j = 0; j < num_modes; ++j) {
        std::array<double, 3> k = {0.0, 0.0, 0.0};
        for (int d = 0; d < dim; ++d) k[d] = rng.normal();
        m.wavevectors[j] = k;
        const double a = rng.normal();
        const double b = rng.normal();
        m.amplitudes[j] = {a, b};
    }
    return m;
}

double eval_mu(const MediumRealization& m, const Vec3& point) {
    return m.eval_dimensionless(to_field_coords(point, m.dim, m.ell));
}

double delta_tau(const MediumRealization& m, const Vec3& x, const Vec3& y,
                 const PhysicsConfig& cfg, double step) {
    const double len = dist(x, y);
    if (!(len > 0.0)) throw std::invalid_argument("delta_tau: coincident endpoints");
    if (step <= 0.0) step = m.ell / 5.0;

    const int n = std::max(1, static_cast<int>(std::ceil(len / step)));
    const auto u0 = to_field_coords(y, m.dim, m.ell);
    const auto u1 = to_field_coords(x, m.dim, m.ell);
    const std::array<double, 3> du = {u1[0] - u0[0], u1[1] - u0[1], u1[2] - u0[2]};

    // The line integral of each Fourier mode over the composite
    // Gauss-Legendre grid reduces to a geometric phase sum, so the total
    // cost is O(num_modes) regardless of n.
    double integral = 0.0;
    for (size_t j = 0; j < m.wavevectors.size(); ++j) {
        const auto& k = m.wavevectors[j];
        const double a = k[0] * u0[0] + k[1] * u0[1] + k[2] * u0[2];
        const double c = k[0] * du[0] + k[1] * du[1] + k[2] * du[2];
        const double delta = c / n;

        std::complex<double> nodes(0.0, 0.0);
        for (int q = 0; q < 5; ++q) {
            const double ph = delta * kGlNode[q];
            nodes += kGlWeight[q] * std::complex<double>(std::cos(ph), std::sin(ph));
        }
        const std::complex<double> z = geometric_phase_sum(delta, n) *
                                       std::complex<double>(std::cos(a), std::sin(a)) * nodes;
        integral += m.weights[j] *
                    (m.amplitudes[j].first * z.real() + m.amplitudes[j].second * z.imag()) / n;
    }
    return cfg.sigma * len / (2.0 * cfg.c0()) * integral;
}

}  // namespace cintrec
