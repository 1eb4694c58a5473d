#include "cintrec/imaging.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cintrec/parallel.hpp"

namespace cintrec {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;
constexpr double kWindowSigmas = 5.0;  // truncation of Psi and Phi_hat

cdouble polar1(double phase) { return {std::cos(phase), std::sin(phase)}; }

struct BandWeights {
    int K = 0;                   // |omega1 - omega2| <= K * domega
    std::vector<double> w;       // w[|delta|], includes (domega/2pi)^2 and Phi_hat
};

BandWeights band_weights(const FrequencyGrid& grid, double Omega) {
    if (!(Omega > 0.0)) throw std::invalid_argument("WindowConfig: Omega must be positive");
    BandWeights b;
    const double cut = kWindowSigmas * Omega / grid.domega;
    b.K = std::min(grid.count() - 1, static_cast<int>(std::floor(cut)));
    const double scale = grid.domega / two_pi;
    b.w.resize(b.K + 1);
    for (int d = 0; d <= b.K; ++d) {
        const double u = d * grid.domega / Omega;
        b.w[d] = scale * scale * std::sqrt(two_pi) * std::exp(-0.5 * u * u);
    }
    return b;
}

// sum_{delta=-K..K} w[|delta|] sum_m a(m) conj(b(m - delta))
cdouble banded_sum(std::span<const cdouble> a, std::span<const cdouble> b, const BandWeights& bw) {
    const int n = static_cast<int>(a.size());
    cdouble acc(0.0, 0.0);
    for (int delta = -bw.K; delta <= bw.K; ++delta) {
        const int mlo = std::max(0, delta);
        const int mhi = std::min(n, n + delta);
        cdouble s(0.0, 0.0);
        for (int m = mlo; m < mhi; ++m) s += a[m] * std::conj(b[m - delta]);
        acc += bw.w[std::abs(delta)] * s;
    }
    return acc;
}

// p_hat(omega, r) exp(-i omega tau(x_r, y)) for all receivers and frequencies
void compensated_legs(const ArrayData& data, const Vec3& y, const PhysicsConfig& cfg,
                      std::vector<cdouble>& out) {
    const int nr = data.geometry.count();
    const int nf = data.grid.count();
    out.resize(static_cast<size_t>(nr) * nf);
    const double inv_c0 = 1.0 / cfg.c0();
    for (int r = 0; r < nr; ++r) {
        const double tau = dist(data.geometry.receivers[r], y) * inv_c0;
        for (int k = 0; k < nf; ++k)
            out[r * nf + k] = data.values[r * nf + k] * polar1(-data.grid.omegas[k] * tau);
    }
}

struct PairTable {
    struct Entry {
        int r, rp;
        double weight;  // Psi * receiver weights
    };
    std::vector<Entry> entries;  // lexicographic (r, rp)
};

PairTable pair_table(const ArrayGeometry& g, double X, std::span<const double> rweights) {
    if (!(X > 0.0)) throw std::invalid_argument("WindowConfig: X must be positive");
    if (!rweights.empty() && rweights.size() != static_cast<size_t>(g.count()))
        throw std::invalid_argument("receiver_weights size mismatch");
    PairTable t;
    const int nr = g.count();
    for (int r = 0; r < nr; ++r) {
        for (int rp = 0; rp < nr; ++rp) {
            const double d = dist(g.receivers[r], g.receivers[rp]);
            if (d > kWindowSigmas * X) continue;
            double w = std::exp(-0.5 * d * d / (X * X));
            if (!rweights.empty()) w *= rweights[r] * rweights[rp];
            t.entries.push_back({r, rp, w});
        }
    }
    return t;
}

cdouble image_value(const ArrayData& data, std::span<const cdouble> legs_a,
                    std::span<const cdouble> legs_b, const PairTable& pairs,
                    const BandWeights& bw) {
    const int nf = data.grid.count();
    cdouble acc(0.0, 0.0);
    for (const auto& e : pairs.entries) {
        const std::span<const cdouble> a = legs_a.subspan(static_cast<size_t>(e.r) * nf, nf);
        const std::span<const cdouble> b = legs_b.subspan(static_cast<size_t>(e.rp) * nf, nf);
        acc += e.weight * banded_sum(a, b, bw);
    }
    return acc;
}

void check_grid_time_span(const ArrayData& data, const GridSpec& grid, const PhysicsConfig& cfg) {
    // Images are periodic in the mean travel time with period 2 pi/domega;
    // a grid whose range extent approaches c0 * window would alias ghosts
    // of its own sources.
    const double range_extent = std::abs(grid.drange) * (grid.nrange - 1);
    if (range_extent >= cfg.c0() * data.grid.time_window())
        throw std::invalid_argument("image grid exceeds the aliasing-safe travel-time range");
}

}  // namespace

GridSpec GridSpec::centered(Pt2 center, double dcross, double drange, int half_ncross,
                            int half_nrange) {
    GridSpec g;
    g.dcross = dcross;
    g.drange = drange;
    g.ncross = 2 * half_ncross + 1;
    g.nrange = 2 * half_nrange + 1;
    g.origin_cross = center.cross - half_ncross * dcross;
    g.origin_range = center.range - half_nrange * drange;
    return g;
}

cdouble correlation_fd(const ArrayData& data, int r, int rp, double t, double tdiff,
                       const WindowConfig& win) {
    const int nf = data.grid.count();
    const BandWeights bw = band_weights(data.grid, win.Omega);
    std::vector<cdouble> a(nf), b(nf);
    for (int k = 0; k < nf; ++k) {
        const double w = data.grid.omegas[k];
        a[k] = data.values[r * nf + k] * polar1(w * (0.5 * tdiff - t));
        b[k] = data.values[rp * nf + k] * polar1(-w * (0.5 * tdiff + t));
    }
    return banded_sum(a, b, bw);
}

cdouble correlation_td(const ArrayData& data, int r, int rp, double t, double tdiff,
                       const WindowConfig& win) {
    if (!(win.Omega > 0.0)) throw std::invalid_argument("WindowConfig: Omega must be positive");
    const double half = 8.0 / win.Omega;  // Gaussian window support
    if (2.0 * half + std::abs(tdiff) > data.grid.time_window())
        throw std::invalid_argument("correlation_td: window exceeds the resolvable time range");

    double omega_max = 0.0;
    for (double w : data.grid.omegas) omega_max = std::max(omega_max, std::abs(w));
    const double hmax = std::numbers::pi / (8.0 * omega_max);
    const int n = static_cast<int>(std::ceil(2.0 * half / hmax));
    const double h = 2.0 * half / n;

    std::vector<double> s1(n + 1), s2(n + 1);
    for (int i = 0; i <= n; ++i) {
        const double s = t - half + i * h;
        s1[i] = s - 0.5 * tdiff;
        s2[i] = s + 0.5 * tdiff;
    }
    const auto p1 = time_trace(data, r, s1);
    const auto p2 = time_trace(data, rp, s2);

    cdouble acc(0.0, 0.0);
    for (int i = 0; i <= n; ++i) {
        const double s = t - half + i * h;
        const double u = win.Omega * (t - s);
        const double wtrap = (i == 0 || i == n) ? 0.5 : 1.0;
        acc += wtrap * win.Omega * std::exp(-0.5 * u * u) * p1[i] * std::conj(p2[i]);
    }
    return h * acc;
}

cdouble two_point_image(const ArrayData& data, const Vec3& y, const Vec3& yp,
                        const WindowConfig& win, const PhysicsConfig& cfg,
                        std::span<const double> receiver_weights) {
    const BandWeights bw = band_weights(data.grid, win.Omega);
    const PairTable pairs = pair_table(data.geometry, win.X, receiver_weights);
    std::vector<cdouble> legs_a, legs_b;
    compensated_legs(data, y, cfg, legs_a);
    compensated_legs(data, yp, cfg, legs_b);
    return image_value(data, legs_a, legs_b, pairs, bw);
}

ImageGrid cint_image(const ArrayData& data, const GridSpec& grid, const WindowConfig& win,
                     const PhysicsConfig& cfg, int threads,
                     std::span<const double> receiver_weights) {
    check_grid_time_span(data, grid, cfg);
    const BandWeights bw = band_weights(data.grid, win.Omega);
    const PairTable pairs = pair_table(data.geometry, win.X, receiver_weights);

    ImageGrid img;
    img.spec = grid;
    img.values.assign(grid.count(), cdouble(0.0, 0.0));
    parallel_for(grid.count(), threads, [&](int idx) {
        const int ic = idx / grid.nrange;
        const int ir = idx % grid.nrange;
        std::vector<cdouble> legs;
        compensated_legs(data, grid.node3(ic, ir), cfg, legs);
        img.values[idx] = image_value(data, legs, legs, pairs, bw);
    });
    return img;
}

ImageGrid offset_image(const ArrayData& data, const Vec3& z0, const GridSpec& grid,
                       const WindowConfig& win, const PhysicsConfig& cfg, int threads,
                       std::span<const double> receiver_weights) {
    check_grid_time_span(data, grid, cfg);
    const BandWeights bw = band_weights(data.grid, win.Omega);
    const PairTable pairs = pair_table(data.geometry, win.X, receiver_weights);
    std::vector<cdouble> legs_a;
    compensated_legs(data, z0, cfg, legs_a);

    ImageGrid img;
    img.spec = grid;
    img.values.assign(grid.count(), cdouble(0.0, 0.0));
    parallel_for(grid.count(), threads, [&](int idx) {
        const int ic = idx / grid.nrange;
        const int ir = idx % grid.nrange;
        std::vector<cdouble> legs_b;
        compensated_legs(data, grid.node3(ic, ir), cfg, legs_b);
        img.values[idx] = image_value(data, legs_a, legs_b, pairs, bw);
    });
    return img;
}

ImageGrid migration_image(const ArrayData& data, const GridSpec& grid, const PhysicsConfig& cfg,
                          int threads) {
    check_grid_time_span(data, grid, cfg);
    const int nr = data.geometry.count();
    const int nf = data.grid.count();
    const double scale = data.grid.domega / two_pi;
    const double inv_c0 = 1.0 / cfg.c0();

    ImageGrid img;
    img.spec = grid;
    img.values.assign(grid.count(), cdouble(0.0, 0.0));
    parallel_for(grid.count(), threads, [&](int idx) {
        const int ic = idx / grid.nrange;
        const int ir = idx % grid.nrange;
        const Vec3 y = grid.node3(ic, ir);
        cdouble acc(0.0, 0.0);
        for (int r = 0; r < nr; ++r) {
            const double tau = dist(data.geometry.receivers[r], y) * inv_c0;
            for (int k = 0; k < nf; ++k)
                acc += polar1(-data.grid.omegas[k] * tau) * data.values[r * nf + k];
        }
        img.values[idx] = scale * acc;
    });
    return img;
}

PeakList detect_peaks(const ImageGrid& img, double threshold_frac, double radius_cross,
                      double radius_range) {
    if (!(threshold_frac > 0.0 && threshold_frac < 1.0))
        throw std::invalid_argument("detect_peaks: threshold_frac must lie in (0, 1)");
    const int nc = img.spec.ncross;
    const int nr = img.spec.nrange;
    std::vector<double> mag(img.values.size());
    double peak = 0.0;
    for (size_t i = 0; i < img.values.size(); ++i) {
        mag[i] = std::abs(img.values[i]);
        peak = std::max(peak, mag[i]);
    }

    PeakList out;
    out.radius_cross = radius_cross;
    out.radius_range = radius_range;
    out.threshold = threshold_frac * peak;
    if (peak == 0.0) return out;

    std::vector<std::pair<int, int>> candidates;
    for (int ic = 0; ic < nc; ++ic) {
        for (int ir = 0; ir < nr; ++ir) {
            const double v = mag[ic * nr + ir];
            if (v <= out.threshold) continue;
            bool is_max = true;
            for (int dc = -1; dc <= 1 && is_max; ++dc) {
                for (int dr = -1; dr <= 1; ++dr) {
                    if (dc == 0 && dr == 0) continue;
                    const int jc = ic + dc, jr = ir + dr;
                    if (jc < 0 || jc >= nc || jr < 0 || jr >= nr) continue;
                    if (mag[jc * nr + jr] > v) {
                        is_max = false;
                        break;
                    }
                }
            }
            if (is_max) candidates.emplace_back(ic, ir);
        }
    }

    std::sort(candidates.begin(), candidates.end(), [&](const auto& a, const auto& b) {
        const double ma = mag[a.first * nr + a.second];
        const double mb = mag[b.first * nr + b.second];
        if (ma != mb) return ma > mb;
        return a < b;
    });

    for (const auto& [ic, ir] : candidates) {
        const Pt2 pos = img.spec.node(ic, ir);
        bool suppressed = false;
        for (const auto& p : out.peaks) {
            if (std::abs(p.position.cross - pos.cross) < radius_cross &&
                std::abs(p.position.range - pos.range) < radius_range) {
                suppressed = true;
                break;
            }
        }
        if (!suppressed) out.peaks.push_back({pos, mag[ic * nr + ir]});
    }
    return out;
}

std::vector<double> apodization_weights(const ArrayGeometry& geometry, const PhysicsConfig& cfg) {
    const double s = cfg.aperture / 6.0;
    std::vector<double> w(geometry.count());
    for (int r = 0; r < geometry.count(); ++r) {
        const auto& x = geometry.receivers[r];
        const double d2 = x.cross1 * x.cross1 + x.cross2 * x.cross2;
        w[r] = std::exp(-0.5 * d2 / (s * s));
    }
    return w;
}

}  // namespace cintrec
