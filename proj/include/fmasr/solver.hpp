#pragma once

#include "fmasr/grid.hpp"

#include <limits>

namespace fmasr {

constexpr double INF = std::numeric_limits<double>::infinity();

/** Escape-time values plus the trial/accepted flags of the marching loop.
 * monotone_violations counts accepted finite values that undercut an earlier
 * acceptance; it stays zero whenever every stencil pair is acute. */
struct DistanceField {
    std::vector<double> value;
    std::vector<std::uint8_t> accepted;
    std::size_t monotone_violations = 0;
};

struct EdgeSolveResult {
    double value = INF;
    double t_star = 0.0;  // minimizer of t*d_p + (1-t)*d_q + F(t*p + (1-t)*q)
    bool interior = false;
};

/** Minimize t*d_p + (1-t)*d_q + F(t*p + (1-t)*q) over t in [0,1].
 * Closed form: the linear omega part shifts d_p, d_q, leaving a pure-quadratic
 * stationarity problem; near-degenerate discriminants fall back to a
 * golden-section search. Infinite inputs short-circuit to the finite endpoint
 * and are never fed to the quadratic. */
EdgeSolveResult hopf_lax_edge(const OffsetNorm& F, Vec2 p, Vec2 q, double d_p, double d_q);

/** Update of x from the whole stencil boundary; independent of d(x). */
double hopf_lax_full(const DistanceField& d, std::uint32_t x, const StencilTable& table);

/** Update of x restricted to the vertex y and the boundary segments [y,z]
 * whose far vertex z is already accepted. */
double hopf_lax_partial(const DistanceField& d, std::uint32_t x, std::uint32_t y,
                        const StencilTable& table);

enum class MonotonePolicy {
    require,  // throw on a non-monotone acceptance (guaranteed for acute stencils)
    record,   // count violations (fixed stencils without an acuteness guarantee)
};

/** Single-pass marching: accept the minimal trial point (ties to the smallest
 * index), update its still-trial dependents through hopf_lax_partial.
 * Unreachable points end at +inf, accepted last. */
DistanceField fast_march(const DiscreteDomain& domain, const StencilTable& table,
                         MonotonePolicy policy = MonotonePolicy::require);

/** max over interior x of |d(x) - hopf_lax_full(d, x)| / (1 + d(x)); a pair of
 * infinities contributes zero. */
double residual(const DistanceField& d, const StencilTable& table);

}  // namespace fmasr
