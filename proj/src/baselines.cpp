#include "fmasr/baselines.hpp"

#include <cmath>
#include <queue>
#include <stdexcept>

namespace fmasr {

const std::vector<LatticeVec>& fm8_cycle() {
    static const std::vector<LatticeVec> cycle = {{1, 0},  {1, 1},   {0, 1},  {-1, 1},
                                                  {-1, 0}, {-1, -1}, {0, -1}, {1, -1}};
    return cycle;
}

const std::vector<LatticeVec>& agsi_cycle() {
    static const std::vector<LatticeVec> cycle = {{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}};
    return cycle;
}

StencilTable fm8_stencils(DiscreteDomain& domain, const MetricField& metric) {
    return assemble_fixed_stencils(domain, metric, fm8_cycle());
}

StencilTable agsi_stencils(DiscreteDomain& domain, const MetricField& metric) {
    return assemble_fixed_stencils(domain, metric, agsi_cycle());
}

DistanceField fm8_solve(DiscreteDomain& domain, const MetricField& metric) {
    StencilTable table = fm8_stencils(domain, metric);
    return fast_march(domain, table, MonotonePolicy::record);
}

DistanceField agsi_run(const DiscreteDomain& domain, const StencilTable& table, double tol) {
    const std::size_t count = domain.point_count();
    DistanceField d;
    d.value.assign(count, INF);
    d.accepted.assign(count, 0);
    for (std::size_t i = domain.interior_count; i < count; ++i) d.value[i] = 0.0;

    std::queue<std::uint32_t> active;
    std::vector<std::uint8_t> queued(domain.interior_count, 0);
    auto activate = [&](std::uint32_t x) {
        if (!queued[x]) {
            queued[x] = 1;
            active.push(x);
        }
    };
    for (std::size_t y = domain.interior_count; y < count; ++y)
        for (std::size_t k = table.rev_begin[y]; k < table.rev_begin[y + 1]; ++k)
            activate(table.rev[k]);

    // value each dependent set last saw; drift beyond tol forces a re-notification
    std::vector<double> notified(domain.interior_count, INF);
    const std::uint64_t pop_limit = 10000ull * count;
    std::uint64_t pops = 0;
    while (!active.empty()) {
        if (++pops > pop_limit) throw std::runtime_error("AGSI failed to converge");
        std::uint32_t x = active.front();
        active.pop();
        queued[x] = 0;
        double nv = hopf_lax_full(d, x, table);
        if (nv < d.value[x]) d.value[x] = nv;
        if (notified[x] - nv > tol) {
            notified[x] = nv;
            for (std::size_t k = table.rev_begin[x]; k < table.rev_begin[x + 1]; ++k)
                activate(table.rev[k]);
        }
    }
    for (std::size_t i = 0; i < count; ++i) d.accepted[i] = 1;
    return d;
}

DistanceField agsi_solve(DiscreteDomain& domain, const MetricField& metric, double tol) {
    StencilTable table = agsi_stencils(domain, metric);
    return agsi_run(domain, table, tol);
}

}  // namespace fmasr
