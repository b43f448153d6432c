#include "fmasr/bench.hpp"
#include "fmasr/stencil.hpp"

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <utility>

namespace py = pybind11;

namespace {

using Abc = std::tuple<double, double, double>;
using Xy = std::pair<double, double>;

fmasr::OffsetNorm to_norm(const Abc& m, const Xy& omega) {
    return {{std::get<0>(m), std::get<1>(m), std::get<2>(m)}, {omega.first, omega.second}};
}

Xy from_vec(fmasr::Vec2 v) { return {v.x, v.y}; }

}  // namespace

PYBIND11_MODULE(fmasr, m) {
    m.doc() = "2D anisotropic escape-time solver: FM-ASR with FM-8 and AGSI baselines";

    m.def(
        "norm_eval",
        [](const Abc& mat, const Xy& omega, const Xy& u) {
            return fmasr::norm_eval(to_norm(mat, omega), {u.first, u.second});
        },
        py::arg("m"), py::arg("omega"), py::arg("u"));
    m.def(
        "norm_grad",
        [](const Abc& mat, const Xy& omega, const Xy& u) {
            return from_vec(fmasr::norm_grad(to_norm(mat, omega), {u.first, u.second}));
        },
        py::arg("m"), py::arg("omega"), py::arg("u"));
    m.def(
        "dual_norm",
        [](const Abc& mat, const Xy& omega) {
            fmasr::OffsetNorm d = fmasr::dual_norm(to_norm(mat, omega));
            return std::make_pair(Abc{d.M.a, d.M.b, d.M.c}, from_vec(d.omega));
        },
        py::arg("m"), py::arg("omega"));
    m.def(
        "is_acute",
        [](const Abc& mat, const Xy& omega, const Xy& u, const Xy& v) {
            return fmasr::is_acute(to_norm(mat, omega), {u.first, u.second}, {v.first, v.second});
        },
        py::arg("m"), py::arg("omega"), py::arg("u"), py::arg("v"));
    m.def(
        "anisotropy_ratio",
        [](const Abc& mat, const Xy& omega) {
            return fmasr::anisotropy_ratio(to_norm(mat, omega));
        },
        py::arg("m"), py::arg("omega"));
    m.def(
        "rotate_norm",
        [](const Abc& mat, const Xy& omega, double theta) {
            fmasr::OffsetNorm r = fmasr::rotate_norm(to_norm(mat, omega), theta);
            return std::make_pair(Abc{r.M.a, r.M.b, r.M.c}, from_vec(r.omega));
        },
        py::arg("m"), py::arg("omega"), py::arg("theta"));

    m.def(
        "build_mesh",
        [](const Abc& mat, const Xy& omega) {
            std::vector<std::pair<std::int64_t, std::int64_t>> out;
            for (auto w : fmasr::build_mesh(to_norm(mat, omega)).boundary)
                out.emplace_back(w.x, w.y);
            return out;
        },
        py::arg("m"), py::arg("omega"));
    m.def(
        "isotropic_mesh",
        [](double kappa) {
            std::vector<std::pair<std::int64_t, std::int64_t>> out;
            for (auto w : fmasr::isotropic_mesh(kappa).boundary) out.emplace_back(w.x, w.y);
            return out;
        },
        py::arg("kappa"));
    m.def(
        "mesh_cardinality_stats",
        [](const Abc& mat, const Xy& omega, int samples) {
            return fmasr::mesh_cardinality_stats(to_norm(mat, omega), samples);
        },
        py::arg("m"), py::arg("omega"), py::arg("samples"));

    m.def(
        "hopf_lax_edge",
        [](const Abc& mat, const Xy& omega, const Xy& p, const Xy& q, double d_p, double d_q) {
            auto r = fmasr::hopf_lax_edge(to_norm(mat, omega), {p.first, p.second},
                                          {q.first, q.second}, d_p, d_q);
            return std::make_tuple(r.value, r.t_star, r.interior);
        },
        py::arg("m"), py::arg("omega"), py::arg("p"), py::arg("q"), py::arg("d_p"),
        py::arg("d_q"));

    m.def(
        "exact_spiral", [](const Xy& z) { return fmasr::exact_spiral({z.first, z.second}); },
        py::arg("z"));
    m.def("test_ids", [] { return fmasr::test_ids(); });
    m.def(
        "solve_test",
        [](const std::string& test_id, const std::string& solver_id, int n) {
            fmasr::TestCase test = fmasr::make_test_case(test_id);
            fmasr::SolveRun run = fmasr::solve_test(test, solver_id, n);
            double max_finite = 0.0;
            for (double v : run.field.value)
                if (std::isfinite(v)) max_finite = std::fmax(max_finite, v);
            py::dict out;
            out["test"] = test_id;
            out["solver"] = solver_id;
            out["n"] = n;
            out["points"] = run.domain.point_count();
            out["prep_seconds"] = run.prep_seconds;
            out["solve_seconds"] = run.solve_seconds;
            out["residual"] = fmasr::residual(run.field, run.table);
            out["max_value"] = max_finite;
            return out;
        },
        py::arg("test"), py::arg("solver"), py::arg("n"));
}
