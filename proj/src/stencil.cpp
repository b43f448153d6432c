#include "fmasr/stencil.hpp"

#include <stdexcept>

namespace fmasr {

LatticeVec checked_add(LatticeVec a, LatticeVec b) {
    LatticeVec r;
    if (__builtin_add_overflow(a.x, b.x, &r.x) || __builtin_add_overflow(a.y, b.y, &r.y))
        throw std::overflow_error("lattice vector overflow");
    return r;
}

std::pair<ElementaryTriangle, ElementaryTriangle> children(const ElementaryTriangle& T) {
    LatticeVec w = checked_add(T.u, T.v);
    return {ElementaryTriangle{T.u, w}, ElementaryTriangle{w, T.v}};
}

std::optional<ElementaryTriangle> parent(const ElementaryTriangle& T) {
    std::int64_t nu = dot(T.u, T.u), nv = dot(T.v, T.v);
    if (nu == nv) return std::nullopt;  // equal lengths only in the root triangles
    if (nu < nv) return ElementaryTriangle{T.u, {T.v.x - T.u.x, T.v.y - T.u.y}};
    return ElementaryTriangle{{T.u.x - T.v.x, T.u.y - T.v.y}, T.v};
}

StencilMesh build_mesh(const OffsetNorm& F, std::int64_t safety_cap) {
    std::vector<LatticeVec> L{{1, 0}};
    std::vector<LatticeVec> M{{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
    std::int64_t steps = 0;
    while (!M.empty()) {
        if (++steps > safety_cap) throw std::runtime_error("norm violates ASC finiteness");
        LatticeVec u = L.back(), v = M.back();
        if (is_acute(F, to_vec2(u), to_vec2(v))) {
            M.pop_back();
            L.push_back(v);
        } else {
            M.push_back(checked_add(u, v));
        }
    }
    if (!(L.back() == LatticeVec{1, 0}))
        throw std::logic_error("mesh boundary did not close");
    L.pop_back();  // cycle closure is implicit
    return {std::move(L)};
}

namespace {

void emit_refined(LatticeVec u, LatticeVec v, double kappa, std::vector<LatticeVec>& out) {
    if (static_cast<double>(dot(u, v)) >= kappa) {
        out.push_back(u);
        return;
    }
    LatticeVec w = checked_add(u, v);
    emit_refined(u, w, kappa, out);
    emit_refined(w, v, kappa, out);
}

}  // namespace

StencilMesh isotropic_mesh(double kappa) {
    const LatticeVec ring[5] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {1, 0}};
    std::vector<LatticeVec> out;
    for (int r = 0; r < 4; ++r) emit_refined(ring[r], ring[r + 1], kappa, out);
    return {std::move(out)};
}

std::vector<std::pair<double, int>> mesh_cardinality_stats(const OffsetNorm& F,
                                                           int theta_samples) {
    std::vector<std::pair<double, int>> out;
    out.reserve(theta_samples);
    for (int k = 0; k < theta_samples; ++k) {
        double theta = 2.0 * M_PI * k / theta_samples;
        StencilMesh mesh = build_mesh(rotate_norm(F, theta));
        out.emplace_back(theta, static_cast<int>(mesh.cardinality()));
    }
    return out;
}

}  // namespace fmasr
