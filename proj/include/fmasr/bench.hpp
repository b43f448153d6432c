#pragma once

#include "fmasr/baselines.hpp"
#include "fmasr/gridio.hpp"

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace fmasr {

/** One benchmark configuration: domain box, point source, metric field, the
 * region errors are measured on, and the analytic solution when one exists. */
struct TestCase {
    std::string id;
    Rect bbox;
    Vec2 source{0.0, 0.0};
    MetricField metric;
    std::function<bool(Vec2)> valid_region;
    std::function<double(Vec2)> exact;  // null unless an analytic solution is known
};

const std::vector<std::string>& test_ids();  // current, spiral, seismic, segmentation
TestCase make_test_case(const std::string& id);

/** asinh |z|: the analytic escape time of the spiral test. */
double exact_spiral(Vec2 z);

struct SolveRun {
    DiscreteDomain domain;
    StencilTable table;
    DistanceField field;
    double prep_seconds = 0.0;   // discretization + stencil assembly
    double solve_seconds = 0.0;  // marching / iteration
};

/** Discretize, assemble, and solve one configuration with fm-asr, fm-8 or
 * agsi. */
SolveRun solve_test(const TestCase& test, const std::string& solver_id, int n, double theta = 0.0,
                    Vec2 offset = {0.0, 0.0}, BoundaryModel bc = BoundaryModel::point_source);

/** Solved raster with bilinear interpolation; exact at raster nodes. */
struct ReferenceField {
    GridFile grid;

    double interpolate(Vec2 p) const;
};

/** Solve test at ref_n x ref_n (theta 0, point source) and cache the raster
 * under cache_dir as ref_<test>_<ref_n>_<solver>.grid; an existing file is
 * reloaded instead (the format round-trips bit-exactly). */
ReferenceField reference_solution(const TestCase& test, int ref_n, const std::string& solver_id,
                                  const std::string& cache_dir = "ref-cache");

struct ErrorReport {
    int n = 0;
    std::int64_t points = 0;
    double prep_seconds = 0.0;
    double solve_seconds = 0.0;
    double linf = 0.0;
    double l1_avg = 0.0;
    std::int64_t inf_points = 0;  // +inf values inside the valid region, counted at inf_cap
};

/** Errors against truth over the valid-region interior points. */
ErrorReport compute_errors(const DiscreteDomain& domain, const DistanceField& d,
                           const std::function<double(Vec2)>& truth, const TestCase& test,
                           double inf_cap = 1e6);

/** truth_mode is `analytic` or `reference:<ref_n>:<solver>`. */
std::function<double(Vec2)> resolve_truth(const TestCase& test, const std::string& truth_mode,
                                          const std::string& cache_dir = "ref-cache");

extern const char* const csv_header;  // test,solver,n,points,prep_seconds,solve_seconds,linf,l1_avg

/** One row per n: solve, time, compare. A failing run yields a NaN row on
 * stderr notice and the sweep continues. Rows are appended to csv when given
 * (header not included). */
std::vector<ErrorReport> run_benchmark(const TestCase& test, const std::string& solver_id,
                                       const std::vector<int>& n_list,
                                       const std::string& truth_mode, std::ostream* csv,
                                       const std::string& cache_dir = "ref-cache");

}  // namespace fmasr
