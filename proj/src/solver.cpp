#include "fmasr/solver.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

namespace fmasr {

EdgeSolveResult hopf_lax_edge(const OffsetNorm& F, Vec2 p, Vec2 q, double d_p, double d_q) {
    if (std::isinf(d_p) && std::isinf(d_q)) return {INF, 0.0, false};
    if (std::isinf(d_p)) return {d_q + norm_eval(F, q), 0.0, false};
    if (std::isinf(d_q)) return {d_p + norm_eval(F, p), 1.0, false};

    Vec2 Mo = F.M.apply(F.omega);
    double sp = d_p - dot(Mo, p);  // shifted values: the omega term is linear in t
    double sq = d_q - dot(Mo, q);
    Vec2 e = p - q;
    double a = F.M.quad(e);
    double b = dot(q, F.M.apply(e));
    double c = F.M.quad(q);
    double alpha = sp - sq;
    auto objective = [&](double t) {
        double Q = std::fmax(a * t * t + 2.0 * b * t + c, 0.0);
        return t * sp + (1.0 - t) * sq + std::sqrt(Q);
    };

    double t;
    bool interior;
    double denom = a - alpha * alpha;
    if (std::fabs(denom) <= 1e-14 * a) {
        t = golden_section(objective, 0.0, 1.0, false, 60);
        interior = true;  // demoted below if an endpoint is at least as good
    } else if (denom < 0.0) {
        // |alpha| > |p-q|_M: the objective is monotone
        t = alpha > 0.0 ? 0.0 : 1.0;
        interior = false;
    } else {
        double s = std::sqrt(std::fmax(a * c - b * b, 0.0) / denom);
        double stat = (-b - alpha * s) / a;
        t = std::clamp(stat, 0.0, 1.0);
        interior = stat > 0.0 && stat < 1.0;
    }

    double value = objective(t);
    double v0 = objective(0.0), v1 = objective(1.0);
    if (v0 < value || v1 < value) {
        interior = false;
        if (v0 <= v1) {
            value = v0;
            t = 0.0;
        } else {
            value = v1;
            t = 1.0;
        }
    }
    return {value, t, interior};
}

namespace {

inline double slot_value(const DistanceField& d, std::uint32_t idx) {
    return idx == OUTSIDE ? INF : d.value[idx];
}

}  // namespace

double hopf_lax_full(const DistanceField& d, std::uint32_t x, const StencilTable& table) {
    const std::size_t begin = table.row_begin[x], end = table.row_begin[x + 1];
    const std::size_t m = end - begin;
    const OffsetNorm& G = table.local_norm[x];
    double best = INF;
    for (std::size_t k = 0; k < m; ++k) {
        const auto& s1 = table.slots[begin + k];
        const auto& s2 = table.slots[begin + (k + 1) % m];
        double d1 = slot_value(d, s1.neighbor);
        double d2 = slot_value(d, s2.neighbor);
        if (std::isinf(d1) && std::isinf(d2)) continue;
        EdgeSolveResult r =
            hopf_lax_edge(G, table.slot_offset(s1), table.slot_offset(s2), d1, d2);
        best = std::fmin(best, r.value);
    }
    return best;
}

double hopf_lax_partial(const DistanceField& d, std::uint32_t x, std::uint32_t y,
                        const StencilTable& table) {
    const std::size_t begin = table.row_begin[x], end = table.row_begin[x + 1];
    const std::size_t m = end - begin;
    const OffsetNorm& G = table.local_norm[x];
    double best = INF;
    double dy = d.value[y];
    for (std::size_t k = 0; k < m; ++k) {
        const auto& sy = table.slots[begin + k];
        if (sy.neighbor != y) continue;
        Vec2 py = table.slot_offset(sy);
        best = std::fmin(best, dy + norm_eval(G, py));
        for (std::size_t adj : {(k + m - 1) % m, (k + 1) % m}) {
            const auto& sz = table.slots[begin + adj];
            if (sz.neighbor == OUTSIDE || !d.accepted[sz.neighbor]) continue;
            EdgeSolveResult r =
                hopf_lax_edge(G, py, table.slot_offset(sz), dy, d.value[sz.neighbor]);
            best = std::fmin(best, r.value);
        }
    }
    return best;
}

DistanceField fast_march(const DiscreteDomain& domain, const StencilTable& table,
                         MonotonePolicy policy) {
    const std::size_t count = domain.point_count();
    DistanceField d;
    d.value.assign(count, INF);
    d.accepted.assign(count, 0);

    using Entry = std::pair<double, std::uint32_t>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    for (std::size_t i = domain.interior_count; i < count; ++i) {
        d.value[i] = 0.0;
        heap.push({0.0, static_cast<std::uint32_t>(i)});
    }

    double last = -INF;
    while (!heap.empty()) {
        auto [v, y] = heap.top();
        heap.pop();
        if (d.accepted[y] || v != d.value[y]) continue;  // stale lazy-deletion entry
        d.accepted[y] = 1;
        if (v < last) {
            if (policy == MonotonePolicy::require)
                throw std::logic_error("acceptance order not monotone");
            ++d.monotone_violations;
        } else {
            last = v;
        }
        for (std::size_t k = table.rev_begin[y]; k < table.rev_begin[y + 1]; ++k) {
            std::uint32_t x = table.rev[k];
            if (d.accepted[x]) continue;
            double nv = hopf_lax_partial(d, x, y, table);
            if (nv < d.value[x]) {
                d.value[x] = nv;
                heap.push({nv, x});
            }
        }
    }
    for (std::size_t i = 0; i < count; ++i) d.accepted[i] = 1;  // +inf leftovers
    return d;
}

double residual(const DistanceField& d, const StencilTable& table) {
    double worst = 0.0;
    for (std::uint32_t x = 0; x + 1 < table.row_begin.size(); ++x) {
        double full = hopf_lax_full(d, x, table);
        double dx = d.value[x];
        if (std::isinf(dx) && std::isinf(full)) continue;
        if (std::isinf(dx) != std::isinf(full)) return INF;
        worst = std::fmax(worst, std::fabs(dx - full) / (1.0 + dx));
    }
    return worst;
}

}  // namespace fmasr
