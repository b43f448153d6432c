#pragma once

#include "fmasr/norms.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace fmasr {

struct LatticeVec {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend bool operator==(const LatticeVec&, const LatticeVec&) = default;
};

inline std::int64_t dot(LatticeVec a, LatticeVec b) { return a.x * b.x + a.y * b.y; }
inline std::int64_t cross(LatticeVec a, LatticeVec b) { return a.x * b.y - a.y * b.x; }
inline Vec2 to_vec2(LatticeVec a) {
    return {static_cast<double>(a.x), static_cast<double>(a.y)};
}

/** Sum with overflow detection; mesh vertices stay tiny for valid norms, so an
 * overflow always signals an invalid norm or a bug. */
LatticeVec checked_add(LatticeVec a, LatticeVec b);

/** Lattice triangle with one vertex at the origin: |det(u,v)| = 1, <u,v> >= 0. */
struct ElementaryTriangle {
    LatticeVec u, v;

    std::int64_t s() const { return dot(u, v); }
};

/** The two refinements (u, u+v) and (u+v, v); s grows by at least 1. */
std::pair<ElementaryTriangle, ElementaryTriangle> children(const ElementaryTriangle& T);

/** Inverse of children; empty for the four root triangles spanned by
 * (+-1,0),(0,+-1). */
std::optional<ElementaryTriangle> parent(const ElementaryTriangle& T);

/** Boundary cycle of a star-shaped lattice mesh: counter-clockwise, starting
 * at (1,0), stored without the closing repeat. Consecutive vertices satisfy
 * det = 1 and <.,.> >= 0; the triangle count equals boundary.size(). */
struct StencilMesh {
    std::vector<LatticeVec> boundary;

    std::size_t cardinality() const { return boundary.size(); }
};

/** Refine the four axis-aligned root triangles until every boundary pair is
 * F-acute (two-list construction). safety_cap bounds the loop iterations and
 * converts an invalid norm into an error instead of non-termination. */
StencilMesh build_mesh(const OffsetNorm& F, std::int64_t safety_cap = 10'000'000);

/** Mesh refined until s(T) >= kappa; F-acute for every norm whose anisotropy
 * ratio is at most kappa. */
StencilMesh isotropic_mesh(double kappa);

/** Cardinality of the mesh of the rotated norm at theta = 2*pi*k/theta_samples
 * for k = 0..theta_samples-1. */
std::vector<std::pair<double, int>> mesh_cardinality_stats(const OffsetNorm& F,
                                                           int theta_samples);

}  // namespace fmasr
