#include "fmasr/bench.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

fmasr::Vec2 parse_pair(const std::string& s, const std::string& flag) {
    double x = 0.0, y = 0.0;
    char tail = 0;
    if (std::sscanf(s.c_str(), "%lf,%lf%c", &x, &y, &tail) != 2)
        throw CLI::ValidationError(flag, "expected x,y");
    return {x, y};
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t from = 0;
    while (true) {
        std::size_t to = s.find(sep, from);
        out.push_back(s.substr(from, to - from));
        if (to == std::string::npos) break;
        from = to + 1;
    }
    return out;
}

int run_solve(const std::string& test_id, const std::string& solver_id, int n, double theta,
              const std::string& offset_str, const std::string& bc, const std::string& out_path,
              const std::string& pgm_path) {
    fmasr::TestCase test = fmasr::make_test_case(test_id);
    fmasr::SolveRun run = fmasr::solve_test(
        test, solver_id, n, theta, parse_pair(offset_str, "--offset"),
        bc == "escape" ? fmasr::BoundaryModel::escape : fmasr::BoundaryModel::point_source);
    fmasr::GridFile g = fmasr::field_to_grid(run.domain, run.field);
    fmasr::write_grid(out_path, g);
    if (!pgm_path.empty()) fmasr::write_pgm(pgm_path, g);
    std::printf("%s %s n=%d points=%zu prep=%.3fs solve=%.3fs residual=%.3g violations=%zu\n",
                test_id.c_str(), solver_id.c_str(), n, run.domain.point_count(), run.prep_seconds,
                run.solve_seconds, fmasr::residual(run.field, run.table),
                run.field.monotone_violations);
    return 0;
}

int run_bench(const std::string& test_id, const std::string& solvers, const std::string& n_list,
              const std::string& truth, const std::string& csv_path) {
    std::vector<int> ns;
    for (const std::string& tok : split(n_list, ',')) {
        std::size_t used = 0;
        int n = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("bad --n-list entry: " + tok);
        ns.push_back(n);
    }
    fmasr::TestCase test = fmasr::make_test_case(test_id);
    std::ofstream csv(csv_path);
    if (!csv) throw std::runtime_error("cannot write " + csv_path);
    csv << fmasr::csv_header << '\n';
    std::size_t rows = 0;
    for (const std::string& solver_id : split(solvers, ','))
        rows += fmasr::run_benchmark(test, solver_id, ns, truth, &csv).size();
    std::printf("wrote %zu rows to %s\n", rows, csv_path.c_str());
    return 0;
}

int run_stencil_stats(const std::string& m_str, const std::string& omega_str, int samples,
                      const std::string& csv_path) {
    double a = 0.0, b = 0.0, c = 0.0;
    char tail = 0;
    if (std::sscanf(m_str.c_str(), "%lf,%lf,%lf%c", &a, &b, &c, &tail) != 3)
        throw CLI::ValidationError("--m", "expected a,b,c");
    fmasr::OffsetNorm F{{a, b, c}, parse_pair(omega_str, "--omega")};
    if (!F.valid())
        throw std::invalid_argument("invalid norm: m must be SPD with <omega,m omega> < 1");

    auto stats = fmasr::mesh_cardinality_stats(F, samples);
    std::ofstream csv(csv_path);
    if (!csv) throw std::runtime_error("cannot write " + csv_path);
    csv << "theta,cardinality\n";
    long total = 0, max = 0;
    for (auto [theta, card] : stats) {
        char line[64];
        std::snprintf(line, sizeof line, "%.17g,%d", theta, card);
        csv << line << '\n';
        total += card;
        max = std::max<long>(max, card);
    }
    std::printf("samples=%d mean=%.3f max=%ld\n", samples,
                static_cast<double>(total) / samples, max);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"2D anisotropic escape-time solver: FM-ASR with FM-8 and AGSI baselines"};
    app.require_subcommand(1);
    const std::vector<std::string> solver_ids = {"fm-asr", "fm-8", "agsi"};

    auto* solve = app.add_subcommand("solve", "Solve one configuration and write the value grid");
    std::string test_id, solver_id = "fm-asr", out_path, pgm_path, bc = "source";
    std::string offset_str = "0,0";
    int n = 0;
    double theta = 0.0;
    solve->add_option("--test", test_id, "Test case id")
        ->required()
        ->check(CLI::IsMember(fmasr::test_ids()));
    solve->add_option("--solver", solver_id, "Solver id")->check(CLI::IsMember(solver_ids));
    solve->add_option("--n", n, "Grid resolution, odd")->required();
    solve->add_option("--theta", theta, "Grid rotation in radians");
    solve->add_option("--offset", offset_str, "Grid offset in lattice units, x,y");
    solve->add_option("--bc", bc, "Dirichlet model: zero at the source or on the outer boundary")
        ->check(CLI::IsMember({"source", "escape"}));
    solve->add_option("--out", out_path, "Output grid file")->required();
    solve->add_option("--pgm", pgm_path, "Optional grayscale preview image");

    auto* bench = app.add_subcommand("bench", "Error and timing sweep over resolutions");
    std::string btest, bsolvers, bnlist, btruth, bcsv;
    bench->add_option("--test", btest, "Test case id")
        ->required()
        ->check(CLI::IsMember(fmasr::test_ids()));
    bench->add_option("--solver", bsolvers, "Solver id(s), comma-separated")->required();
    bench->add_option("--n-list", bnlist, "Resolutions, comma-separated odd ints")->required();
    bench->add_option("--truth", btruth, "analytic | reference:<ref_n>:<solver>")->required();
    bench->add_option("--csv", bcsv, "Output CSV path")->required();

    auto* stats = app.add_subcommand("stencil-stats", "Stencil cardinality per grid orientation");
    std::string m_str, omega_str = "0,0", scsv;
    int samples = 0;
    stats->add_option("--m", m_str, "Symmetric matrix entries a,b,c")->required();
    stats->add_option("--omega", omega_str, "Drift vector x,y");
    stats->add_option("--samples", samples, "Orientation count")
        ->required()
        ->check(CLI::PositiveNumber);
    stats->add_option("--csv", scsv, "Output CSV path")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed())
            return run_solve(test_id, solver_id, n, theta, offset_str, bc, out_path, pgm_path);
        if (bench->parsed()) return run_bench(btest, bsolvers, bnlist, btruth, bcsv);
        return run_stencil_stats(m_str, omega_str, samples, scsv);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
