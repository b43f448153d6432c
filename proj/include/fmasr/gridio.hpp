#pragma once

#include "fmasr/solver.hpp"

#include <string>

namespace fmasr {

/** Rectangular raster of solved values over the lattice window
 * [0,nx) x [0,ny): cell (i,j) sits at h * R_theta * (origin + (i,j)) and holds
 * value[j*nx + i], +inf for lattice points absent from the solved domain.
 * origin absorbs both the grid offset and the window position, so a file is
 * self-describing. */
struct GridFile {
    std::int64_t nx = 0, ny = 0;
    double h = 1.0, theta = 0.0;
    Vec2 origin{0.0, 0.0};  // lattice units
    std::vector<double> values;

    double at(std::int64_t i, std::int64_t j) const {
        return values[static_cast<std::size_t>(j * nx + i)];
    }
    Vec2 position(std::int64_t i, std::int64_t j) const {
        return rotate({h * (origin.x + static_cast<double>(i)),
                       h * (origin.y + static_cast<double>(j))},
                      theta);
    }
};

/** Raster the solved field over the lattice bounding window of the in-box
 * points (escape-band points fall outside the window and are dropped). */
GridFile field_to_grid(const DiscreteDomain& domain, const DistanceField& d);

/** ASCII: header `grid v1 <nx> <ny> <h> <theta> <ox> <oy>`, then nx*ny
 * row-major values, literal `inf` for +inf. %.17g, so reload is bit-exact. */
void write_grid(const std::string& path, const GridFile& g);
GridFile read_grid(const std::string& path);

/** 8-bit binary PGM, [0, max finite] mapped to [0,255], +inf white; rows top
 * to bottom are j = ny-1 .. 0. */
void write_pgm(const std::string& path, const GridFile& g);

}  // namespace fmasr
