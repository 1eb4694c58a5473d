#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "cintrec/geometry.hpp"
#include "cintrec/imaging.hpp"

namespace cintrec {

/// Per-axis tolerance for point equality in the imaging plane.
struct Tol2 {
    double cross = 0.0;
    double range = 0.0;
};

/// Finite set of offset vectors with tolerance-aware set semantics: no
/// two stored offsets are equal within the tolerance. Offsets keep the
/// order in which they were admitted (reconstruction consumes them in
/// this order); `magnitudes`, when nonempty, parallels `offsets`.
struct OffsetSet {
    std::vector<Pt2> offsets;
    std::vector<double> magnitudes;
    Tol2 tol;

    bool contains(Pt2 v) const;
};

/// Recovered source constellation, anchored at z0 (anchor is a member).
struct Constellation {
    std::vector<Pt2> points;
    Pt2 anchor;
};

/// Componentwise |u_i - v_i| < tol_i on every axis.
bool vec_eq(Pt2 u, Pt2 v, Tol2 tol);

/// All pairwise offsets { y_s - y_s' : s != s' }, deduplicated under
/// vec_eq; symmetric under negation. Insertion order is lexicographic in
/// the generating pair indices.
OffsetSet build_offsets(std::span<const Pt2> points, Tol2 tol);

/// Removes every offset whose negation is absent (within tolerance).
OffsetSet symmetry_filter(const OffsetSet& set);

/// Offsets z_j - z0 of detected peaks, excluding the self-peak at the
/// origin; keeps the peak-magnitude (descending) order.
OffsetSet peaks_to_offsets(const PeakList& peaks, Pt2 z0, Tol2 tol);

struct ReconstructOptions {
    std::size_t node_cap = 1'000'000;  ///< recursion-node budget
};

/// Recursive exhaustive search for a point set Y with offset set equal to
/// `estimate` (tolerance-equality of sets), anchored at z0. Offsets are
/// consumed in stored order. Returns nullopt when no constellation
/// matches. If some Y0 with E(Y0) = estimate exists, the result is
/// non-empty and reproduces the offset set; it is unique only up to the
/// reflection about z0 (and not always then, for repeated offsets).
/// Throws when the node budget is exhausted.
std::optional<Constellation> reconstruct(const OffsetSet& estimate, Pt2 z0, Tol2 tol,
                                         const ReconstructOptions& opts = {},
                                         std::size_t* nodes_explored = nullptr);

/// True iff the point sets coincide under vec_eq after translating the
/// anchors together, directly or after reflection about the anchor.
bool congruent_up_to_reflection(const Constellation& a, const Constellation& b, Tol2 tol);

/// Tolerance-equality of two offset collections (mutual inclusion).
bool offsets_equal(std::span<const Pt2> a, std::span<const Pt2> b, Tol2 tol);

}  // namespace cintrec
