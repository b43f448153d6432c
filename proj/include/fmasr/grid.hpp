#pragma once

#include "fmasr/norms.hpp"
#include "fmasr/stencil.hpp"

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace fmasr {

/** Dirichlet-set model: point_source keeps zero values at the sources and
 * treats lattice points outside the box as unreachable; escape additionally
 * turns every outside lattice point referenced by a stencil into a zero-value
 * boundary point (escape-time problem). */
enum class BoundaryModel { point_source, escape };

/** Lattice h * R_theta * (offset + Z^2) intersected with the box. */
struct GridSpec {
    double h = 1.0;
    double theta = 0.0;
    Vec2 offset{0.0, 0.0};  // in lattice units
    Rect bbox;
    BoundaryModel bc = BoundaryModel::point_source;

    Vec2 lattice_to_position(LatticeVec l) const {
        return rotate({h * (offset.x + static_cast<double>(l.x)),
                       h * (offset.y + static_cast<double>(l.y))},
                      theta);
    }
};

constexpr std::uint32_t OUTSIDE = 0xffffffffu;

/** Grid points of one run, interior first, Dirichlet (zero-value) points after.
 * index_of maps packed lattice coordinates to point indices. */
struct DiscreteDomain {
    GridSpec spec;
    std::vector<LatticeVec> lattice;
    std::vector<Vec2> positions;
    std::size_t interior_count = 0;
    std::unordered_map<std::uint64_t, std::uint32_t> index_of;

    std::size_t point_count() const { return positions.size(); }
    bool is_interior(std::uint32_t i) const { return i < interior_count; }

    static std::uint64_t key(LatticeVec l) {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(l.x)) << 32) |
               static_cast<std::uint32_t>(l.y);
    }
    std::uint32_t find(LatticeVec l) const {
        auto it = index_of.find(key(l));
        return it == index_of.end() ? OUTSIDE : it->second;
    }
};

/** Enumerate the lattice points inside spec.bbox (row-major over lattice
 * coordinates); the lattice points nearest to the sources become the Dirichlet
 * set. Throws if no interior point remains. */
DiscreteDomain discretize(const GridSpec& spec, const std::vector<Vec2>& sources);

/** Per-interior-point stencils (boundary cycles in lattice offsets plus
 * resolved neighbor indices) and the transposed adjacency. local_norm[i] is
 * the point's metric pulled back to the lattice frame, so geometry everywhere
 * downstream is h * (integer offset). */
struct StencilTable {
    struct Slot {
        std::int32_t ox = 0, oy = 0;
        std::uint32_t neighbor = OUTSIDE;
    };

    double h = 1.0;
    std::vector<Slot> slots;
    std::vector<std::size_t> row_begin;  // interior_count + 1 entries
    std::vector<OffsetNorm> local_norm;  // per interior point
    std::vector<std::uint32_t> rev;      // x lists with y a stencil vertex of x
    std::vector<std::size_t> rev_begin;  // point_count + 1 entries

    std::size_t total_slots() const { return slots.size(); }
    Vec2 slot_offset(const Slot& s) const {
        return {h * static_cast<double>(s.ox), h * static_cast<double>(s.oy)};
    }
};

/** Build the adaptive stencil of every interior point from its own norm
 * (escape mode materializes referenced outside points as Dirichlet points,
 * which appends to the domain). */
StencilTable assemble_stencils(DiscreteDomain& domain, const MetricField& metric);

/** Same resolution/transpose plumbing with one fixed boundary cycle shared by
 * all points (FM-8 and one-ring baselines). */
StencilTable assemble_fixed_stencils(DiscreteDomain& domain, const MetricField& metric,
                                     const std::vector<LatticeVec>& cycle);

}  // namespace fmasr
