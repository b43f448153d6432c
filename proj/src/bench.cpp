#include "fmasr/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <limits>
#include <memory>
#include <ostream>
#include <stdexcept>

namespace fmasr {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool always(Vec2) { return true; }

TestCase make_current() {
    constexpr double gamma = 0.9;
    TestCase t;
    t.id = "current";
    t.bbox = {-0.5, -0.5, 0.5, 0.5};
    t.metric.domain = t.bbox;
    t.metric.kappa_bound = (1.0 + gamma) / (1.0 - gamma);
    // the speed profile enters through the dual norm |u| + <w(z),u>
    t.metric.eval = [](Vec2 z) {
        double s = gamma * std::sin(4.0 * M_PI * z.x) * std::sin(4.0 * M_PI * z.y);
        return dual_norm({SymMat2::identity(), {s, 0.0}});
    };
    t.valid_region = always;
    return t;
}

TestCase make_spiral() {
    TestCase t;
    t.id = "spiral";
    t.bbox = {-10.0, -10.0, 10.0, 10.0};
    t.metric.domain = t.bbox;
    double rmax = length({10.0, 10.0});
    double gmax = rmax / std::sqrt(1.0 + rmax * rmax);
    t.metric.kappa_bound = (1.0 + gmax) / (1.0 - gmax);
    t.metric.eval = [](Vec2 z) {
        double f = 1.0 / std::sqrt(1.0 + dot(z, z));
        return OffsetNorm{SymMat2::identity(), f * perp(z)};
    };
    t.valid_region = [](Vec2 z) { return length(z) <= 10.0; };
    t.exact = exact_spiral;
    return t;
}

TestCase make_seismic() {
    constexpr double lam1 = 1.0 / (0.8 * 0.8), lam2 = 1.0 / (0.2 * 0.2);
    TestCase t;
    t.id = "seismic";
    t.bbox = {-0.5, -0.5, 0.5, 0.5};
    t.metric.domain = t.bbox;
    t.metric.kappa_bound = std::sqrt(lam2 / lam1);
    // eigenvector (1, c) with c the layer slope, eigenvalues lam1 / lam2
    t.metric.eval = [](Vec2 z) {
        double c = 0.5 * M_PI * std::cos(4.0 * M_PI * z.x);
        double n2 = 1.0 + c * c;
        SymMat2 M{(lam1 + lam2 * c * c) / n2, (lam1 - lam2) * c / n2, (lam1 * c * c + lam2) / n2};
        return OffsetNorm{M, {0.0, 0.0}};
    };
    t.valid_region = always;
    return t;
}

struct SpiralCurve {
    static constexpr double turns = 3.0;
    static constexpr double phi_max = turns * 2.0 * M_PI;
    static constexpr double growth = 0.45 / phi_max;
    static constexpr double half_width = 1.0 / 200.0;
    static constexpr int coarse_samples = 192;

    static Vec2 at(double phi) {
        return {growth * phi * std::cos(phi), growth * phi * std::sin(phi)};
    }
    static Vec2 tangent(double phi) {
        double cp = std::cos(phi), sp = std::sin(phi);
        Vec2 d{growth * (cp - phi * sp), growth * (sp + phi * cp)};
        double len = length(d);
        return {d.x / len, d.y / len};
    }

    /** Parameter of the curve point nearest to z: coarse scan plus a
     * golden-section polish one coarse step around the best sample. */
    static double nearest(Vec2 z) {
        auto d2 = [z](double phi) {
            Vec2 e = at(phi) - z;
            return dot(e, e);
        };
        double step = phi_max / coarse_samples;
        double best_phi = 0.0, best = d2(0.0);
        for (int k = 1; k <= coarse_samples; ++k) {
            double phi = k * step;
            double v = d2(phi);
            if (v < best) {
                best = v;
                best_phi = phi;
            }
        }
        double lo = std::fmax(best_phi - step, 0.0), hi = std::fmin(best_phi + step, phi_max);
        return golden_section(d2, lo, hi, false, 48);
    }
};

TestCase make_segmentation() {
    TestCase t;
    t.id = "segmentation";
    t.bbox = {-0.5, -0.5, 0.5, 0.5};
    t.metric.domain = t.bbox;
    t.metric.kappa_bound = 100.0;
    t.metric.eval = [](Vec2 z) {
        double phi = SpiralCurve::nearest(z);
        Vec2 e = SpiralCurve::at(phi) - z;
        if (dot(e, e) > SpiralCurve::half_width * SpiralCurve::half_width)
            return OffsetNorm{SymMat2::identity(), {0.0, 0.0}};
        Vec2 tg = SpiralCurve::tangent(phi);
        Vec2 nm = perp(tg);
        constexpr double lam_t = 1e-4;  // riding the curve is 100x cheaper
        SymMat2 M{lam_t * tg.x * tg.x + nm.x * nm.x, lam_t * tg.x * tg.y + nm.x * nm.y,
                  lam_t * tg.y * tg.y + nm.y * nm.y};
        return OffsetNorm{M, {0.0, 0.0}};
    };
    t.valid_region = always;
    return t;
}

}  // namespace

const std::vector<std::string>& test_ids() {
    static const std::vector<std::string> ids = {"current", "spiral", "seismic", "segmentation"};
    return ids;
}

TestCase make_test_case(const std::string& id) {
    if (id == "current") return make_current();
    if (id == "spiral") return make_spiral();
    if (id == "seismic") return make_seismic();
    if (id == "segmentation") return make_segmentation();
    throw std::invalid_argument("unknown test case: " + id);
}

double exact_spiral(Vec2 z) { return std::asinh(length(z)); }

SolveRun solve_test(const TestCase& test, const std::string& solver_id, int n, double theta,
                    Vec2 offset, BoundaryModel bc) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("n must be odd and >= 3");
    GridSpec spec;
    spec.h = test.bbox.width() / (n - 1);
    spec.theta = theta;
    spec.offset = offset;
    spec.bbox = test.bbox;
    spec.bc = bc;
    std::vector<Vec2> sources;
    if (bc == BoundaryModel::point_source) sources.push_back(test.source);

    SolveRun run;
    auto t0 = Clock::now();
    run.domain = discretize(spec, sources);
    if (solver_id == "fm-asr") {
        run.table = assemble_stencils(run.domain, test.metric);
        run.prep_seconds = seconds_since(t0);
        auto t1 = Clock::now();
        run.field = fast_march(run.domain, run.table, MonotonePolicy::require);
        run.solve_seconds = seconds_since(t1);
    } else if (solver_id == "fm-8") {
        run.table = fm8_stencils(run.domain, test.metric);
        run.prep_seconds = seconds_since(t0);
        auto t1 = Clock::now();
        run.field = fast_march(run.domain, run.table, MonotonePolicy::record);
        run.solve_seconds = seconds_since(t1);
    } else if (solver_id == "agsi") {
        run.table = agsi_stencils(run.domain, test.metric);
        run.prep_seconds = seconds_since(t0);
        auto t1 = Clock::now();
        run.field = agsi_run(run.domain, run.table);
        run.solve_seconds = seconds_since(t1);
    } else {
        throw std::invalid_argument("unknown solver: " + solver_id);
    }
    return run;
}

double ReferenceField::interpolate(Vec2 p) const {
    const GridFile& g = grid;
    Vec2 l = rotate(p, -g.theta);
    auto snap = [](double s) {
        double r = std::round(s);
        return std::fabs(s - r) < 1e-9 ? r : s;
    };
    double sx = std::clamp(snap(l.x / g.h - g.origin.x), 0.0, static_cast<double>(g.nx - 1));
    double sy = std::clamp(snap(l.y / g.h - g.origin.y), 0.0, static_cast<double>(g.ny - 1));
    std::int64_t i0 = std::min(static_cast<std::int64_t>(sx), std::max<std::int64_t>(g.nx - 2, 0));
    std::int64_t j0 = std::min(static_cast<std::int64_t>(sy), std::max<std::int64_t>(g.ny - 2, 0));
    std::int64_t i1 = std::min(i0 + 1, g.nx - 1), j1 = std::min(j0 + 1, g.ny - 1);
    double fx = sx - static_cast<double>(i0), fy = sy - static_cast<double>(j0);

    double acc = 0.0;
    bool hit_inf = false;
    auto add = [&](double w, double v) {
        if (w == 0.0) return;
        if (std::isinf(v))
            hit_inf = true;
        else
            acc += w * v;
    };
    add((1.0 - fx) * (1.0 - fy), g.at(i0, j0));
    add(fx * (1.0 - fy), g.at(i1, j0));
    add((1.0 - fx) * fy, g.at(i0, j1));
    add(fx * fy, g.at(i1, j1));
    return hit_inf ? INF : acc;
}

ReferenceField reference_solution(const TestCase& test, int ref_n, const std::string& solver_id,
                                  const std::string& cache_dir) {
    if (ref_n < 3 || ref_n % 2 == 0) throw std::invalid_argument("ref_n must be odd and >= 3");
    std::filesystem::create_directories(cache_dir);
    std::string path =
        cache_dir + "/ref_" + test.id + "_" + std::to_string(ref_n) + "_" + solver_id + ".grid";
    if (std::filesystem::exists(path)) return {read_grid(path)};

    SolveRun run = solve_test(test, solver_id, ref_n);
    GridFile g = field_to_grid(run.domain, run.field);
    write_grid(path, g);
    return {std::move(g)};
}

ErrorReport compute_errors(const DiscreteDomain& domain, const DistanceField& d,
                           const std::function<double(Vec2)>& truth, const TestCase& test,
                           double inf_cap) {
    ErrorReport r;
    r.points = static_cast<std::int64_t>(domain.point_count());
    std::size_t m = 0;
    double sum = 0.0;
    for (std::size_t i = 0; i < domain.interior_count; ++i) {
        Vec2 p = domain.positions[i];
        if (!test.valid_region(p)) continue;
        ++m;
        double v = d.value[i], t = truth(p);
        double err;
        if (std::isinf(v) && std::isinf(t)) {
            err = 0.0;
        } else if (std::isinf(v) || std::isinf(t)) {
            ++r.inf_points;
            err = inf_cap;
        } else {
            err = std::fabs(v - t);
        }
        r.linf = std::fmax(r.linf, err);
        sum += err;
    }
    if (m == 0) throw std::runtime_error("empty valid region");
    r.l1_avg = sum / static_cast<double>(m);
    return r;
}

std::function<double(Vec2)> resolve_truth(const TestCase& test, const std::string& truth_mode,
                                          const std::string& cache_dir) {
    if (truth_mode == "analytic") {
        if (!test.exact)
            throw std::invalid_argument("test has no analytic solution: " + test.id);
        return test.exact;
    }
    const std::string prefix = "reference:";
    if (truth_mode.rfind(prefix, 0) == 0) {
        std::string rest = truth_mode.substr(prefix.size());
        auto colon = rest.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("bad truth mode: " + truth_mode);
        int ref_n = 0;
        try {
            std::size_t used = 0;
            ref_n = std::stoi(rest.substr(0, colon), &used);
            if (used != colon) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw std::invalid_argument("bad truth mode: " + truth_mode);
        }
        std::string solver_id = rest.substr(colon + 1);
        auto ref = std::make_shared<ReferenceField>(
            reference_solution(test, ref_n, solver_id, cache_dir));
        return [ref](Vec2 p) { return ref->interpolate(p); };
    }
    throw std::invalid_argument("bad truth mode: " + truth_mode);
}

const char* const csv_header = "test,solver,n,points,prep_seconds,solve_seconds,linf,l1_avg";

std::vector<ErrorReport> run_benchmark(const TestCase& test, const std::string& solver_id,
                                       const std::vector<int>& n_list,
                                       const std::string& truth_mode, std::ostream* csv,
                                       const std::string& cache_dir) {
    auto truth = resolve_truth(test, truth_mode, cache_dir);
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    std::vector<ErrorReport> rows;
    for (int n : n_list) {
        ErrorReport r;
        r.n = n;
        try {
            SolveRun run = solve_test(test, solver_id, n);
            r = compute_errors(run.domain, run.field, truth, test);
            r.n = n;
            r.prep_seconds = run.prep_seconds;
            r.solve_seconds = run.solve_seconds;
        } catch (const std::exception& e) {
            std::fprintf(stderr, "bench %s/%s n=%d failed: %s\n", test.id.c_str(),
                         solver_id.c_str(), n, e.what());
            r = ErrorReport{};
            r.n = n;
            r.prep_seconds = r.solve_seconds = r.linf = r.l1_avg = nan;
        }
        rows.push_back(r);
        if (csv) {
            char line[256];
            std::snprintf(line, sizeof line, "%s,%s,%d,%lld,%.17g,%.17g,%.17g,%.17g",
                          test.id.c_str(), solver_id.c_str(), r.n,
                          static_cast<long long>(r.points), r.prep_seconds, r.solve_seconds,
                          r.linf, r.l1_avg);
            *csv << line << '\n';
        }
    }
    return rows;
}

}  // namespace fmasr
