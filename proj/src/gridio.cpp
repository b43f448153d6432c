#include "fmasr/gridio.hpp"

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace fmasr {

namespace {

[[noreturn]] void bad_file(const std::string& path, const std::string& what) {
    throw std::runtime_error("bad grid file " + path + ": " + what);
}

}  // namespace

GridFile field_to_grid(const DiscreteDomain& domain, const DistanceField& d) {
    const double tol = 1e-9 * domain.spec.h;
    std::int64_t imin = 0, imax = -1, jmin = 0, jmax = -1;
    bool first = true;
    for (std::size_t i = 0; i < domain.point_count(); ++i) {
        if (!domain.is_interior(static_cast<std::uint32_t>(i)) &&
            !domain.spec.bbox.contains(domain.positions[i], tol))
            continue;  // escape-band point
        LatticeVec l = domain.lattice[i];
        if (first) {
            imin = imax = l.x;
            jmin = jmax = l.y;
            first = false;
        } else {
            imin = std::min(imin, l.x);
            imax = std::max(imax, l.x);
            jmin = std::min(jmin, l.y);
            jmax = std::max(jmax, l.y);
        }
    }
    if (first) throw std::runtime_error("no in-box points to raster");

    GridFile g;
    g.nx = imax - imin + 1;
    g.ny = jmax - jmin + 1;
    g.h = domain.spec.h;
    g.theta = domain.spec.theta;
    g.origin = {domain.spec.offset.x + static_cast<double>(imin),
                domain.spec.offset.y + static_cast<double>(jmin)};
    g.values.assign(static_cast<std::size_t>(g.nx * g.ny), INF);
    for (std::size_t i = 0; i < domain.point_count(); ++i) {
        LatticeVec l = domain.lattice[i];
        if (l.x < imin || l.x > imax || l.y < jmin || l.y > jmax) continue;
        g.values[static_cast<std::size_t>((l.y - jmin) * g.nx + (l.x - imin))] = d.value[i];
    }
    return g;
}

void write_grid(const std::string& path, const GridFile& g) {
    std::FILE* f = std::fopen(path.c_str(), "w");
    if (!f) throw std::runtime_error("cannot write " + path);
    std::fprintf(f, "grid v1 %" PRId64 " %" PRId64 " %.17g %.17g %.17g %.17g\n", g.nx, g.ny, g.h,
                 g.theta, g.origin.x, g.origin.y);
    for (std::int64_t j = 0; j < g.ny; ++j) {
        for (std::int64_t i = 0; i < g.nx; ++i) {
            double v = g.at(i, j);
            if (std::isinf(v))
                std::fputs(i ? " inf" : "inf", f);
            else
                std::fprintf(f, i ? " %.17g" : "%.17g", v);
        }
        std::fputc('\n', f);
    }
    if (std::fclose(f) != 0) throw std::runtime_error("cannot write " + path);
}

GridFile read_grid(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::string word, version;
    if (!(in >> word >> version) || word != "grid" || version != "v1")
        bad_file(path, "missing `grid v1` header");

    // tokenize by hand: istream double extraction rejects the `inf` literal
    auto next_real = [&](const char* what) {
        std::string tok;
        if (!(in >> tok)) bad_file(path, std::string("truncated, expected ") + what);
        char* end = nullptr;
        double v = std::strtod(tok.c_str(), &end);
        if (end != tok.c_str() + tok.size()) bad_file(path, "not a number: " + tok);
        return v;
    };

    GridFile g;
    double nx = next_real("nx"), ny = next_real("ny");
    g.nx = static_cast<std::int64_t>(nx);
    g.ny = static_cast<std::int64_t>(ny);
    if (g.nx <= 0 || g.ny <= 0 || nx != static_cast<double>(g.nx) || ny != static_cast<double>(g.ny))
        bad_file(path, "bad dimensions");
    g.h = next_real("h");
    g.theta = next_real("theta");
    g.origin.x = next_real("ox");
    g.origin.y = next_real("oy");
    if (!(g.h > 0.0)) bad_file(path, "non-positive h");

    g.values.resize(static_cast<std::size_t>(g.nx * g.ny));
    for (auto& v : g.values) v = next_real("value");
    std::string extra;
    if (in >> extra) bad_file(path, "trailing data: " + extra);
    return g;
}

void write_pgm(const std::string& path, const GridFile& g) {
    double max = 0.0;
    for (double v : g.values)
        if (std::isfinite(v)) max = std::fmax(max, v);

    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << "P5\n" << g.nx << " " << g.ny << "\n255\n";
    std::vector<unsigned char> row(static_cast<std::size_t>(g.nx));
    for (std::int64_t j = g.ny - 1; j >= 0; --j) {
        for (std::int64_t i = 0; i < g.nx; ++i) {
            double v = g.at(i, j);
            double shade = !std::isfinite(v) ? 255.0 : max > 0.0 ? 255.0 * v / max : 0.0;
            row[static_cast<std::size_t>(i)] =
                static_cast<unsigned char>(std::clamp(std::lround(shade), 0l, 255l));
        }
        out.write(reinterpret_cast<const char*>(row.data()), static_cast<std::streamsize>(row.size()));
    }
    if (!out) throw std::runtime_error("cannot write " + path);
}

}  // namespace fmasr
