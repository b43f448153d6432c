#include "fmasr/grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace fmasr {

namespace {

Vec2 position_to_lattice(const GridSpec& spec, Vec2 p) {
    Vec2 r = rotate(p, -spec.theta);
    return {r.x / spec.h - spec.offset.x, r.y / spec.h - spec.offset.y};
}

std::string point_str(Vec2 p) {
    return "(" + std::to_string(p.x) + ", " + std::to_string(p.y) + ")";
}

}  // namespace

DiscreteDomain discretize(const GridSpec& spec, const std::vector<Vec2>& sources) {
    if (!(spec.h > 0.0)) throw std::invalid_argument("grid scale must be positive");
    if (!(spec.bbox.width() > 0.0) || !(spec.bbox.height() > 0.0))
        throw std::invalid_argument("degenerate domain box");

    // lattice-coordinate bounding box of the four corners, with slack
    const Rect& bb = spec.bbox;
    Vec2 corners[4] = {{bb.xmin, bb.ymin}, {bb.xmax, bb.ymin}, {bb.xmin, bb.ymax}, {bb.xmax, bb.ymax}};
    double lo_x = 0, hi_x = 0, lo_y = 0, hi_y = 0;
    for (int k = 0; k < 4; ++k) {
        Vec2 l = position_to_lattice(spec, corners[k]);
        if (k == 0 || l.x < lo_x) lo_x = l.x;
        if (k == 0 || l.x > hi_x) hi_x = l.x;
        if (k == 0 || l.y < lo_y) lo_y = l.y;
        if (k == 0 || l.y > hi_y) hi_y = l.y;
    }
    auto imin = static_cast<std::int64_t>(std::floor(lo_x)) - 1;
    auto imax = static_cast<std::int64_t>(std::ceil(hi_x)) + 1;
    auto jmin = static_cast<std::int64_t>(std::floor(lo_y)) - 1;
    auto jmax = static_cast<std::int64_t>(std::ceil(hi_y)) + 1;

    std::vector<LatticeVec> source_lattice;
    for (Vec2 s : sources) {
        if (!bb.contains(s)) throw std::invalid_argument("source outside domain: " + point_str(s));
        Vec2 l = position_to_lattice(spec, s);
        LatticeVec rounded{static_cast<std::int64_t>(std::llround(l.x)),
                           static_cast<std::int64_t>(std::llround(l.y))};
        if (!bb.contains(spec.lattice_to_position(rounded), 1e-9 * spec.h))
            throw std::invalid_argument("no grid point near source " + point_str(s));
        if (std::find(source_lattice.begin(), source_lattice.end(), rounded) == source_lattice.end())
            source_lattice.push_back(rounded);
    }

    DiscreteDomain dom;
    dom.spec = spec;
    const double tol = 1e-9 * spec.h;
    for (std::int64_t j = jmin; j <= jmax; ++j) {
        for (std::int64_t i = imin; i <= imax; ++i) {
            LatticeVec l{i, j};
            Vec2 p = spec.lattice_to_position(l);
            if (!bb.contains(p, tol)) continue;
            if (std::find(source_lattice.begin(), source_lattice.end(), l) != source_lattice.end())
                continue;  // Dirichlet points are appended after the interior
            dom.lattice.push_back(l);
            dom.positions.push_back(p);
        }
    }
    dom.interior_count = dom.lattice.size();
    if (dom.interior_count == 0) throw std::invalid_argument("empty interior");
    for (LatticeVec l : source_lattice) {
        dom.lattice.push_back(l);
        dom.positions.push_back(spec.lattice_to_position(l));
    }
    dom.index_of.reserve(dom.lattice.size());
    for (std::uint32_t i = 0; i < dom.lattice.size(); ++i)
        dom.index_of.emplace(DiscreteDomain::key(dom.lattice[i]), i);
    return dom;
}

namespace {

void append_cycle(StencilTable& table, DiscreteDomain& domain, std::uint32_t point,
                  const std::vector<LatticeVec>& cycle) {
    const bool escape = domain.spec.bc == BoundaryModel::escape;
    for (LatticeVec w : cycle) {
        LatticeVec nb{domain.lattice[point].x + w.x, domain.lattice[point].y + w.y};
        std::uint32_t idx = domain.find(nb);
        if (idx == OUTSIDE && escape) {
            idx = static_cast<std::uint32_t>(domain.point_count());
            domain.lattice.push_back(nb);
            domain.positions.push_back(domain.spec.lattice_to_position(nb));
            domain.index_of.emplace(DiscreteDomain::key(nb), idx);
        }
        if (w.x < INT32_MIN || w.x > INT32_MAX || w.y < INT32_MIN || w.y > INT32_MAX)
            throw std::overflow_error("stencil offset out of range");
        table.slots.push_back({static_cast<std::int32_t>(w.x),
                               static_cast<std::int32_t>(w.y), idx});
    }
}

void build_reverse(StencilTable& table, std::size_t point_count, std::size_t interior_count) {
    std::vector<std::size_t> counts(point_count, 0);
    for (const auto& s : table.slots)
        if (s.neighbor != OUTSIDE) ++counts[s.neighbor];
    table.rev_begin.assign(point_count + 1, 0);
    for (std::size_t i = 0; i < point_count; ++i)
        table.rev_begin[i + 1] = table.rev_begin[i] + counts[i];
    table.rev.resize(table.rev_begin.back());
    std::vector<std::size_t> cursor(table.rev_begin.begin(), table.rev_begin.end() - 1);
    for (std::uint32_t x = 0; x < interior_count; ++x) {
        for (std::size_t k = table.row_begin[x]; k < table.row_begin[x + 1]; ++k) {
            std::uint32_t y = table.slots[k].neighbor;
            if (y != OUTSIDE) table.rev[cursor[y]++] = x;
        }
    }
}

OffsetNorm local_norm_at(const DiscreteDomain& domain, const MetricField& metric,
                         std::uint32_t point) {
    Vec2 p = domain.positions[point];
    OffsetNorm F = metric.eval(p);
    if (!F.valid())
        throw std::invalid_argument("metric invalid at " + point_str(p));
    return rotate_norm(F, -domain.spec.theta);
}

}  // namespace

StencilTable assemble_stencils(DiscreteDomain& domain, const MetricField& metric) {
    StencilTable table;
    table.h = domain.spec.h;
    const std::size_t n = domain.interior_count;
    table.row_begin.reserve(n + 1);
    table.local_norm.reserve(n);
    table.row_begin.push_back(0);
    for (std::uint32_t i = 0; i < n; ++i) {
        OffsetNorm G = local_norm_at(domain, metric, i);
        StencilMesh mesh;
        try {
            mesh = build_mesh(G);
        } catch (const std::exception& e) {
            throw std::runtime_error("stencil construction failed at " +
                                     point_str(domain.positions[i]) + ": " + e.what());
        }
        append_cycle(table, domain, i, mesh.boundary);
        table.row_begin.push_back(table.slots.size());
        table.local_norm.push_back(G);
    }
    build_reverse(table, domain.point_count(), n);
    return table;
}

StencilTable assemble_fixed_stencils(DiscreteDomain& domain, const MetricField& metric,
                                     const std::vector<LatticeVec>& cycle) {
    StencilTable table;
    table.h = domain.spec.h;
    const std::size_t n = domain.interior_count;
    table.row_begin.reserve(n + 1);
    table.local_norm.reserve(n);
    table.row_begin.push_back(0);
    for (std::uint32_t i = 0; i < n; ++i) {
        table.local_norm.push_back(local_norm_at(domain, metric, i));
        append_cycle(table, domain, i, cycle);
        table.row_begin.push_back(table.slots.size());
    }
    build_reverse(table, domain.point_count(), n);
    return table;
}

}  // namespace fmasr
