#include "cintrec/constellation.hpp"

#include <cmath>
#include <stdexcept>

namespace cintrec {

namespace {

void check_tol(Tol2 tol) {
    if (!(tol.cross > 0.0) || !(tol.range > 0.0))
        throw std::invalid_argument("tolerance components must be positive");
}

bool contains_pt(std::span<const Pt2> set, Pt2 v, Tol2 tol) {
    for (const auto& u : set)
        if (vec_eq(u, v, tol)) return true;
    return false;
}

struct Search {
    const OffsetSet& estimate;
    Pt2 z0;
    Tol2 tol;
    std::size_t node_cap;
    std::size_t nodes = 0;

    bool matches_estimate(const std::vector<Pt2>& y) const {
        const OffsetSet e = build_offsets(y, tol);
        return offsets_equal(e.offsets, estimate.offsets, tol);
    }

    // The recursion consumes the offset list front to back; the recursive
    // call sees the suffix after the consumed element.
    std::optional<std::vector<Pt2>> run(std::size_t first, std::vector<Pt2>& y) {
        if (++nodes > node_cap)
            throw std::runtime_error("reconstruct: node budget exhausted");
        if (matches_estimate(y)) return y;
        for (std::size_t i = first; i < estimate.offsets.size(); ++i) {
            const Pt2 cand = z0 + estimate.offsets[i];
            bool admissible = true;
            for (const auto& q : y) {
                if (!estimate.contains(q - cand) || !estimate.contains(cand - q)) {
                    admissible = false;
                    break;
                }
            }
            if (!admissible) continue;
            y.push_back(cand);
            auto r = run(i + 1, y);
            y.pop_back();
            if (r) return r;
        }
        return std::nullopt;
    }
};

}  // namespace

bool vec_eq(Pt2 u, Pt2 v, Tol2 tol) {
    return std::abs(u.cross - v.cross) < tol.cross && std::abs(u.range - v.range) < tol.range;
}

bool OffsetSet::contains(Pt2 v) const { return contains_pt(offsets, v, tol); }

bool offsets_equal(std::span<const Pt2> a, std::span<const Pt2> b, Tol2 tol) {
    for (const auto& u : a)
        if (!contains_pt(b, u, tol)) return false;
    for (const auto& v : b)
        if (!contains_pt(a, v, tol)) return false;
    return true;
}

OffsetSet build_offsets(std::span<const Pt2> points, Tol2 tol) {
    check_tol(tol);
    OffsetSet out;
    out.tol = tol;
    for (std::size_t s = 0; s < points.size(); ++s) {
        for (std::size_t sp = 0; sp < points.size(); ++sp) {
            if (s == sp) continue;
            const Pt2 e = points[s] - points[sp];
            if (!out.contains(e)) out.offsets.push_back(e);
        }
    }
    return out;
}

OffsetSet symmetry_filter(const OffsetSet& set) {
    OffsetSet out;
    out.tol = set.tol;
    const bool with_mag = set.magnitudes.size() == set.offsets.size();
    for (std::size_t i = 0; i < set.offsets.size(); ++i) {
        if (!set.contains(-set.offsets[i])) continue;
        out.offsets.push_back(set.offsets[i]);
        if (with_mag) out.magnitudes.push_back(set.magnitudes[i]);
    }
    return out;
}

OffsetSet peaks_to_offsets(const PeakList& peaks, Pt2 z0, Tol2 tol) {
    check_tol(tol);
    OffsetSet out;
    out.tol = tol;
    for (const auto& p : peaks.peaks) {
        const Pt2 e = p.position - z0;
        if (vec_eq(e, Pt2{0.0, 0.0}, tol)) continue;  // self-peak
        if (out.contains(e)) continue;
        out.offsets.push_back(e);
        out.magnitudes.push_back(p.magnitude);
    }
    return out;
}

std::optional<Constellation> reconstruct(const OffsetSet& estimate, Pt2 z0, Tol2 tol,
                                         const ReconstructOptions& opts,
                                         std::size_t* nodes_explored) {
    check_tol(tol);
    Search search{estimate, z0, tol, opts.node_cap};
    std::vector<Pt2> y = {z0};
    auto r = search.run(0, y);
    if (nodes_explored) *nodes_explored = search.nodes;
    if (!r) return std::nullopt;
    return Constellation{std::move(*r), z0};
}

bool congruent_up_to_reflection(const Constellation& a, const Constellation& b, Tol2 tol) {
    if (a.points.size() != b.points.size()) return false;
    const Pt2 shift = a.anchor - b.anchor;
    for (const bool reflect : {false, true}) {
        std::vector<Pt2> moved;
        moved.reserve(b.points.size());
        for (const auto& p : b.points) {
            const Pt2 q = reflect ? b.anchor - (p - b.anchor) : p;
            moved.push_back(q + shift);
        }
        bool ok = true;
        std::vector<bool> used(moved.size(), false);
        for (const auto& p : a.points) {
            bool found = false;
            for (std::size_t i = 0; i < moved.size(); ++i) {
                if (!used[i] && vec_eq(p, moved[i], tol)) {
                    used[i] = true;
                    found = true;
                    break;
                }
            }
            if (!found) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

}  // namespace cintrec
