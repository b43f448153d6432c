#pragma once

#include "fmasr/solver.hpp"

namespace fmasr {

/** Fixed 8-neighbor boundary cycle shared by every grid point. */
const std::vector<LatticeVec>& fm8_cycle();

/** One-ring of the standard grid triangulation: six triangles around each
 * vertex, cut along (1,1)/(-1,-1). */
const std::vector<LatticeVec>& agsi_cycle();

StencilTable fm8_stencils(DiscreteDomain& domain, const MetricField& metric);
StencilTable agsi_stencils(DiscreteDomain& domain, const MetricField& metric);

/** Fast marching on the fixed 8-neighbor stencil. The cycle is not acute for
 * strong anisotropy, so non-monotone acceptances are counted instead of
 * rejected. */
DistanceField fm8_solve(DiscreteDomain& domain, const MetricField& metric);

/** Adaptive Gauss-Seidel iteration on a prebuilt table: FIFO queue with
 * in-queue flags, seeded with the points depending on the Dirichlet set; a
 * point whose value dropped by more than tol since its dependents were last
 * notified reactivates them. Throws after 10^4 * N pops. */
DistanceField agsi_run(const DiscreteDomain& domain, const StencilTable& table,
                       double tol = 1e-8);

DistanceField agsi_solve(DiscreteDomain& domain, const MetricField& metric, double tol = 1e-8);

}  // namespace fmasr
