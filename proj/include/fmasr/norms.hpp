#pragma once

#include "fmasr/geometry.hpp"

#include <functional>

namespace fmasr {

/** Asymmetric norm F(u) = sqrt(u'Mu) - <omega,Mu> with M SPD and <omega,M omega> < 1.
 *
 * The family is closed under duality and rotation and is differentiable away
 * from the origin, so the acute-angle predicate is exact and the edge update
 * has a closed-form minimizer. It covers the euclidean, anisotropic euclidean
 * (omega = 0) and drift ("offsetted") cases.
 */
struct OffsetNorm {
    SymMat2 M;
    Vec2 omega{0.0, 0.0};

    bool valid() const { return M.positive_definite() && M.quad(omega) < 1.0; }
};

/** F(u); total, >= 0, zero only at the origin. */
double norm_eval(const OffsetNorm& F, Vec2 u);

/** Gradient of F at u != 0; satisfies <u, grad F(u)> = F(u). */
Vec2 norm_grad(const OffsetNorm& F, Vec2 u);

/** Dual norm F*(v) = max_{u != 0} <u,v>/F(u), same parametric family. */
OffsetNorm dual_norm(const OffsetNorm& F);

/** True iff F(u + t v) >= F(u) and F(v + t u) >= F(v) for all t >= 0.
 * Borderline (zero) gradient pairings count as acute. */
bool is_acute(const OffsetNorm& F, Vec2 u, Vec2 v);

/** max F(u)/F(v) over unit u,v: 1024-direction sampling plus golden-section
 * refinement of the extrema. */
double anisotropy_ratio(const OffsetNorm& F);

/** Parameters of u -> F(R_theta^T u): M' = R M R^T, omega' = R omega. */
OffsetNorm rotate_norm(const OffsetNorm& F, double theta);

/** Minimize (maximize) a scalar function on [a,b] by golden-section search;
 * returns the midpoint of the final bracket. */
double golden_section(const std::function<double(double)>& f, double a, double b,
                      bool maximize, int iterations);

/** Field of asymmetric norms over a rectangular domain. kappa_bound is a
 * declared upper bound on the pointwise anisotropy ratio. */
struct MetricField {
    std::function<OffsetNorm(Vec2)> eval;
    Rect domain;
    double kappa_bound = 1.0;
};

}  // namespace fmasr
