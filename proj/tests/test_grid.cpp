#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fmasr/gridio.hpp"
#include "test_support.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>

using namespace fmasr;
using namespace fmasr::testing;

namespace {

const OffsetNorm euclid{SymMat2::identity(), {0.0, 0.0}};

GridSpec box_spec(double h, Rect bbox, BoundaryModel bc = BoundaryModel::point_source) {
    GridSpec spec;
    spec.h = h;
    spec.bbox = bbox;
    spec.bc = bc;
    return spec;
}

std::string thrown(const std::function<void()>& f) {
    try {
        f();
    } catch (const std::exception& e) {
        return e.what();
    }
    return "";
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("three by three discretization") {
    DiscreteDomain dom = discretize(box_spec(1.0, {-1.0, -1.0, 1.0, 1.0}), {{0.0, 0.0}});
    CHECK(dom.interior_count == 8);
    REQUIRE(dom.point_count() == 9);
    CHECK(dom.lattice[8] == LatticeVec{0, 0});  // the source comes last
    CHECK(dom.lattice[0] == LatticeVec{-1, -1});
    CHECK(dom.lattice[1] == LatticeVec{0, -1});
    CHECK(dom.lattice[4] == LatticeVec{1, 0});  // (0,0) skipped in row-major order
    CHECK(dom.is_interior(7));
    CHECK_FALSE(dom.is_interior(8));
    CHECK(dom.find({0, 0}) == 8);
    CHECK(dom.find({1, 1}) == 7);
    CHECK(dom.find({2, 0}) == OUTSIDE);
    for (std::size_t i = 0; i < dom.point_count(); ++i) {
        Vec2 p = dom.positions[i];
        CHECK(p.x == static_cast<double>(dom.lattice[i].x));
        CHECK(p.y == static_cast<double>(dom.lattice[i].y));
    }
}

TEST_CASE("centered odd grid hits the source exactly") {
    int n = 31;
    DiscreteDomain dom = discretize(box_spec(1.0 / (n - 1), {-0.5, -0.5, 0.5, 0.5}), {{0.0, 0.0}});
    CHECK(dom.interior_count == static_cast<std::size_t>(n * n - 1));
    CHECK(dom.point_count() == static_cast<std::size_t>(n * n));
    CHECK(dom.positions.back().x == 0.0);
    CHECK(dom.positions.back().y == 0.0);
}

TEST_CASE("quarter turn preserves the point count") {
    GridSpec spec = box_spec(0.125, {-0.5, -0.5, 0.5, 0.5});
    std::size_t straight = discretize(spec, {{0.0, 0.0}}).point_count();
    spec.theta = M_PI / 2;
    CHECK(discretize(spec, {{0.0, 0.0}}).point_count() == straight);
}

TEST_CASE("rotated offset lattice stays in the box") {
    GridSpec spec = box_spec(0.21, {-1.0, -0.25, 1.0, 1.0});
    spec.theta = 0.3;
    spec.offset = {0.25, -0.5};
    DiscreteDomain dom = discretize(spec, {});
    REQUIRE(dom.interior_count > 0);
    for (std::size_t i = 0; i < dom.point_count(); ++i) {
        CHECK(spec.bbox.contains(dom.positions[i], 1e-9 * spec.h));
        Vec2 expect = rotate({spec.h * (spec.offset.x + static_cast<double>(dom.lattice[i].x)),
                              spec.h * (spec.offset.y + static_cast<double>(dom.lattice[i].y))},
                             spec.theta);
        CHECK(dom.positions[i].x == expect.x);
        CHECK(dom.positions[i].y == expect.y);
    }
}

TEST_CASE("discretization errors") {
    Rect box{-1.0, -1.0, 1.0, 1.0};
    CHECK_THROWS_WITH_AS(discretize(box_spec(0.0, box), {}), "grid scale must be positive",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(discretize(box_spec(1.0, {0.0, 0.0, 0.0, 1.0}), {}),
                         "degenerate domain box", std::invalid_argument);
    CHECK(thrown([&] { discretize(box_spec(1.0, box), {{5.0, 5.0}}); })
              .rfind("source outside domain", 0) == 0);
    CHECK(thrown([&] { discretize(box_spec(1.0, {0.3, 0.3, 1.45, 1.45}), {{0.45, 1.0}}); })
              .rfind("no grid point near source", 0) == 0);
    CHECK_THROWS_WITH_AS(discretize(box_spec(1.0, {-0.1, -0.1, 0.1, 0.1}), {{0.0, 0.0}}),
                         "empty interior", std::invalid_argument);
}

TEST_CASE("adaptive assembly of a euclidean field is the diamond everywhere") {
    DiscreteDomain dom = discretize(box_spec(0.2, {-1.0, -1.0, 1.0, 1.0}), {{0.0, 0.0}});
    StencilTable table = assemble_stencils(dom, constant_metric(euclid, dom.spec.bbox, 1.0));
    const LatticeVec diamond[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    REQUIRE(table.row_begin.size() == dom.interior_count + 1);
    for (std::uint32_t x = 0; x < dom.interior_count; ++x) {
        REQUIRE(table.row_begin[x + 1] - table.row_begin[x] == 4);
        for (int k = 0; k < 4; ++k) {
            const auto& s = table.slots[table.row_begin[x] + k];
            CHECK(s.ox == diamond[k].x);
            CHECK(s.oy == diamond[k].y);
            LatticeVec nb{dom.lattice[x].x + s.ox, dom.lattice[x].y + s.oy};
            CHECK(s.neighbor == dom.find(nb));
        }
    }
}

TEST_CASE("reverse adjacency transposes the forward table") {
    TestCase seismic = make_test_case("seismic");
    SolveRun run = solve_test(seismic, "fm-asr", 21);
    const StencilTable& t = run.table;
    const std::size_t np = run.domain.point_count();
    std::vector<std::vector<std::uint32_t>> forward(np);
    for (std::uint32_t x = 0; x < run.domain.interior_count; ++x)
        for (std::size_t k = t.row_begin[x]; k < t.row_begin[x + 1]; ++k)
            if (t.slots[k].neighbor != OUTSIDE) forward[t.slots[k].neighbor].push_back(x);
    REQUIRE(t.rev_begin.size() == np + 1);
    for (std::size_t y = 0; y < np; ++y) {
        std::vector<std::uint32_t> listed(t.rev.begin() + t.rev_begin[y],
                                          t.rev.begin() + t.rev_begin[y + 1]);
        std::sort(listed.begin(), listed.end());
        std::sort(forward[y].begin(), forward[y].end());
        CHECK(listed == forward[y]);
    }
}

TEST_CASE("assembly is deterministic") {
    TestCase current = make_test_case("current");
    GridSpec spec = box_spec(1.0 / 20, current.bbox);
    DiscreteDomain da = discretize(spec, {{0.0, 0.0}});
    DiscreteDomain db = discretize(spec, {{0.0, 0.0}});
    CHECK(da.lattice == db.lattice);
    StencilTable ta = assemble_stencils(da, current.metric);
    StencilTable tb = assemble_stencils(db, current.metric);
    REQUIRE(ta.slots.size() == tb.slots.size());
    for (std::size_t k = 0; k < ta.slots.size(); ++k) {
        CHECK(ta.slots[k].ox == tb.slots[k].ox);
        CHECK(ta.slots[k].oy == tb.slots[k].oy);
        CHECK(ta.slots[k].neighbor == tb.slots[k].neighbor);
    }
    CHECK(ta.row_begin == tb.row_begin);
    CHECK(ta.rev == tb.rev);
    CHECK(ta.rev_begin == tb.rev_begin);
}

TEST_CASE("stencil offsets respect the anisotropy bound") {
    TestCase current = make_test_case("current");
    SolveRun run = solve_test(current, "fm-asr", 31);
    const StencilTable& t = run.table;
    double cap = 2.0 * current.metric.kappa_bound + 1e-6;
    for (const auto& s : t.slots) CHECK(std::hypot(s.ox, s.oy) <= cap);
    for (std::uint32_t x = 0; x < run.domain.interior_count; x += 37) {
        double local = 2.0 * anisotropy_ratio(t.local_norm[x]) + 1e-6;
        for (std::size_t k = t.row_begin[x]; k < t.row_begin[x + 1]; ++k)
            CHECK(std::hypot(t.slots[k].ox, t.slots[k].oy) <= local);
    }
}

TEST_CASE("escape mode materializes the outside band") {
    DiscreteDomain dom = discretize(box_spec(0.5, {-1.0, -1.0, 1.0, 1.0}, BoundaryModel::escape), {});
    CHECK(dom.interior_count == 25);
    StencilTable table = assemble_stencils(dom, constant_metric(euclid, dom.spec.bbox, 1.0));
    CHECK(dom.point_count() == 45);  // 20 one-step band points materialized
    for (std::size_t i = 25; i < 45; ++i)
        CHECK_FALSE(dom.spec.bbox.contains(dom.positions[i], 1e-9 * dom.spec.h));

    DistanceField d = fast_march(dom, table);
    CHECK(d.monotone_violations == 0);
    CHECK(residual(d, table) <= 1e-12);
    for (std::size_t i = 0; i < 25; ++i) CHECK(std::isfinite(d.value[i]));

    const double h = 0.5;
    // corner escapes through one edge solve between two zero-value band points
    CHECK(d.value[dom.find({2, 2})] == doctest::Approx(h / std::sqrt(2.0)).epsilon(1e-14));
    // center needs at least the continuous escape time 2h and clearly under 3h
    double center = d.value[dom.find({0, 0})];
    CHECK(center >= 2.0 * h);
    CHECK(center <= 3.0 * h);

    // euclidean symmetry is exact in floating point
    for (std::int64_t i = -2; i <= 2; ++i)
        for (std::int64_t j = -2; j <= 2; ++j) {
            double v = d.value[dom.find({i, j})];
            CHECK(v == d.value[dom.find({-i, j})]);
            CHECK(v == d.value[dom.find({i, -j})]);
            CHECK(v == d.value[dom.find({j, i})]);
        }
}

TEST_CASE("raster window drops the escape band") {
    DiscreteDomain dom = discretize(box_spec(0.5, {-1.0, -1.0, 1.0, 1.0}, BoundaryModel::escape), {});
    StencilTable table = assemble_stencils(dom, constant_metric(euclid, dom.spec.bbox, 1.0));
    DistanceField d = fast_march(dom, table);
    GridFile g = field_to_grid(dom, d);
    CHECK(g.nx == 5);
    CHECK(g.ny == 5);
    CHECK(g.h == 0.5);
    CHECK(g.origin.x == -2.0);
    CHECK(g.origin.y == -2.0);
    for (std::int64_t j = -2; j <= 2; ++j)
        for (std::int64_t i = -2; i <= 2; ++i)
            CHECK(g.at(i + 2, j + 2) == d.value[dom.find({i, j})]);
    Vec2 corner = g.position(0, 0);
    CHECK(corner.x == -1.0);
    CHECK(corner.y == -1.0);
}

TEST_CASE("grid file round-trip is bit-exact") {
    GridFile g;
    g.nx = 3;
    g.ny = 2;
    g.h = 0.25;
    g.theta = 0.3;
    g.origin = {-1.0, 2.0};
    g.values = {0.1, 1.0 / 3.0, INF, 5e-17, 1e300, 123456.75};
    std::string path = temp_path("fmasr_roundtrip.grid");
    write_grid(path, g);

    std::string text = slurp(path);
    CHECK(text.rfind("grid v1 3 2 0.25 ", 0) == 0);
    CHECK(text.find("inf") != std::string::npos);

    GridFile r = read_grid(path);
    CHECK(r.nx == g.nx);
    CHECK(r.ny == g.ny);
    CHECK(r.h == g.h);
    CHECK(r.theta == g.theta);
    CHECK(r.origin.x == g.origin.x);
    CHECK(r.origin.y == g.origin.y);
    REQUIRE(r.values.size() == g.values.size());
    for (std::size_t k = 0; k < g.values.size(); ++k) CHECK(r.values[k] == g.values[k]);
    std::remove(path.c_str());
}

TEST_CASE("grid file parse errors") {
    std::string path = temp_path("fmasr_bad.grid");
    auto write_text = [&](const std::string& text) {
        std::ofstream out(path);
        out << text;
    };
    CHECK(thrown([&] { read_grid(temp_path("fmasr_does_not_exist.grid")); })
              .rfind("cannot read", 0) == 0);
    write_text("grud v1 1 1 1 0 0 0\n0\n");
    CHECK(thrown([&] { read_grid(path); }).find("missing `grid v1` header") != std::string::npos);
    write_text("grid v1 0 1 1 0 0 0\n");
    CHECK(thrown([&] { read_grid(path); }).find("bad dimensions") != std::string::npos);
    write_text("grid v1 1 1 1 0 0 0\nabc\n");
    CHECK(thrown([&] { read_grid(path); }).find("not a number") != std::string::npos);
    write_text("grid v1 1 1 1 0 0 0\n");
    CHECK(thrown([&] { read_grid(path); }).find("truncated") != std::string::npos);
    write_text("grid v1 1 1 1 0 0 0\n0 7\n");
    CHECK(thrown([&] { read_grid(path); }).find("trailing data") != std::string::npos);
    write_text("grid v1 1 1 -1 0 0 0\n0\n");
    CHECK(thrown([&] { read_grid(path); }).find("non-positive h") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("pgm bytes") {
    GridFile g;
    g.nx = 2;
    g.ny = 2;
    g.h = 1.0;
    g.values = {0.0, 1.0, 2.0, INF};
    std::string path = temp_path("fmasr_test.pgm");
    write_pgm(path, g);
    std::string bytes = slurp(path);
    const std::string header = "P5\n2 2\n255\n";
    REQUIRE(bytes.size() == header.size() + 4);
    CHECK(bytes.rfind(header, 0) == 0);
    // top row first (j = 1): value 2 -> 255, inf -> 255; then 0 -> 0, 1 -> 128
    CHECK(static_cast<unsigned char>(bytes[header.size() + 0]) == 255);
    CHECK(static_cast<unsigned char>(bytes[header.size() + 1]) == 255);
    CHECK(static_cast<unsigned char>(bytes[header.size() + 2]) == 0);
    CHECK(static_cast<unsigned char>(bytes[header.size() + 3]) == 128);
    std::remove(path.c_str());
}
