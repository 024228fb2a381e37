// End-to-end acceptance checks. Each check prints one PASS/FAIL line; the
// exit code is the number of failures. argv[1] names the CLI binary, which
// the performance and determinism checks shell out to.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "netbound/bt_alg.hpp"
#include "netbound/frame.hpp"
#include "netbound/generators.hpp"
#include "netbound/net_alg.hpp"
#include "netbound/oracles.hpp"
#include "netbound/tree_decomposition.hpp"

#include "../unit/support.hpp"

using namespace netbound;
using netbound::testing::random_frame;
using netbound::testing::random_plane_graph;

namespace {

namespace fs = std::filesystem;

int g_failures = 0;

void report(const std::string& name, bool ok, const std::string& detail) {
    std::cout << (ok ? "PASS" : "FAIL") << ": " << name;
    if (!detail.empty()) std::cout << " — " << detail;
    std::cout << '\n';
    std::cout.flush();
    if (!ok) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double x) {
    std::ostringstream ss;
    ss.precision(3);
    ss << std::fixed << x;
    return ss.str();
}

/// Run `cli args > outfile 2>&1`, returning true on exit code 0.
bool run_cli(const std::string& cli, const std::string& args, const fs::path& outfile) {
    const std::string cmd = cli + " " + args + " > " + outfile.string() + " 2>&1";
    return std::system(cmd.c_str()) == 0;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// ─── 1. Net order on triangular grids ───────────────────────────────────────

void check_triangular_net_order() {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string vals;
    for (int n = 3; n <= 8; ++n) {
        const PlaneGraph g = make_triangular_grid(n);
        // One straight side of the outer triangle per color.
        const Frame3 f = make_frame(g, n - 1, 2 * (n - 1));
        const int order = net_alg(g, f).order;
        if (order != n) ok = false;
        vals += (n == 3 ? "orders " : ", ") + std::to_string(order);
    }
    const double s = seconds_since(t0);
    if (s >= 5.0) ok = false;
    report("triangular grid n=3..8 has net order n, under 5 s", ok, vals + " in " + fmt(s) + " s");
}

// ─── 2. Fifteen-cycle cover ─────────────────────────────────────────────────

void check_c15_cover() {
    const PlaneGraph g = make_cycle(15);
    const Frame3 f = make_frame(g, 5, 10);
    const NetCoverResult r = net_alg(g, f);
    const bool pair_ok = verify_cover(g, f, {5, 10});
    report("C15 split at 5,10 has net order 2 and {5,10} is a cover", r.order == 2 && pair_ok,
           "order " + std::to_string(r.order) + ", pair " + (pair_ok ? "accepted" : "rejected"));
}

// ─── 3. Fast cover vs exhaustive cover ──────────────────────────────────────

void check_net_alg_matches_oracle(std::vector<PlaneGraph>& suite) {
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(20240817u);
    int mismatches = 0;
    const int trials = 500;
    for (int t = 0; t < trials; ++t) {
        const int n = 3 + static_cast<int>(rng() % 8);
        PlaneGraph g = random_plane_graph(n, rng);
        const Frame3 f = random_frame(g, rng);
        if (net_alg(g, f).order != brute_net_order(g, f).order) ++mismatches;
        suite.push_back(std::move(g));
    }
    const double s = seconds_since(t0);
    report("minimum net cover matches the exhaustive oracle on 500 random graphs",
           mismatches == 0 && s < 120.0,
           std::to_string(mismatches) + " mismatches in " + fmt(s) + " s");
}

// ─── 4. Cover criterion equivalence ─────────────────────────────────────────

void check_cover_criterion() {
    std::mt19937_64 rng(424242u);
    int failures = 0;
    const int trials = 100;
    for (int t = 0; t < trials; ++t) {
        const int n = 3 + static_cast<int>(rng() % 6);
        const PlaneGraph g = random_plane_graph(n, rng);
        const Frame3 f = random_frame(g, rng);
        if (!check_min_cover_theorem(g, f)) ++failures;
    }
    report("face-graph cover criterion agrees with vine enumeration on 100 instances",
           failures == 0, std::to_string(failures) + " counterexamples");
}

// ─── 5. Bounds sandwich against exact treewidth ─────────────────────────────

void check_sandwich(std::vector<PlaneGraph>& suite) {
    std::mt19937_64 rng(99173u);
    int violations = 0;
    const int trials = 200;
    for (int t = 0; t < trials; ++t) {
        const int n = 3 + static_cast<int>(rng() % 10);
        PlaneGraph g = random_plane_graph(n, rng);
        const int tw = brute_treewidth(g).treewidth;
        const int bn = tw + 1;
        const int kb = bt_alg(g).kb;
        if (!(kb <= bn && tw <= 4 * kb - 1)) ++violations;
        suite.push_back(std::move(g));
    }
    report("kb <= bramble number and treewidth <= 4*kb-1 on 200 random graphs", violations == 0,
           std::to_string(violations) + " violations");
}

// ─── 6. Decomposition validity and width ────────────────────────────────────

void check_decompositions(const std::vector<PlaneGraph>& random_suites) {
    std::vector<PlaneGraph> graphs = random_suites;
    for (int n = 2; n <= 12; ++n) graphs.push_back(make_square_grid(n));
    for (int n = 3; n <= 10; ++n) graphs.push_back(make_triangular_grid(n));
    int bad = 0;
    for (const PlaneGraph& g : graphs) {
        const BtResult bt = bt_alg(g);
        const DecompositionResult dec = build_decomposition(g, bt);
        if (!validate_tree_decomposition(g, dec.decomposition).ok ||
            dec.decomposition.width() > 4 * bt.kb - 1)
            ++bad;
    }
    report("every decomposition is valid with width <= 4*kb-1", bad == 0,
           std::to_string(graphs.size()) + " graphs, " + std::to_string(bad) + " bad");
}

// ─── 7. Square-grid sandwich ────────────────────────────────────────────────

void check_grid_sandwich() {
    bool ok = true;
    std::string vals;
    for (int n = 4; n <= 12; ++n) {
        const int kb = bt_alg(make_square_grid(n)).kb;
        if (!((n + 3) / 4 <= kb && kb <= n + 1)) ok = false;
        vals += (n == 4 ? "kb " : ", ") + std::to_string(kb);
    }
    report("square grid n=4..12 has ceil(n/4) <= kb <= n+1", ok, vals);
}

// ─── 8. Performance through the CLI ─────────────────────────────────────────

void check_performance(const std::string& cli, const fs::path& dir) {
    const fs::path sink = dir / "out.txt";
    bool gen_ok = true;
    for (int n : {16, 32, 50})
        gen_ok = gen_ok && run_cli(cli, "gen -t grid -n " + std::to_string(n) + " -o " +
                                            (dir / ("g" + std::to_string(n) + ".pgr")).string(),
                                   sink);
    if (!gen_ok) {
        report("grid(50) bounds under 5 min; 16 -> 32 grows runtime < 16x", false,
               "could not generate grids through the CLI");
        return;
    }

    const auto time_bounds = [&](int n, int repeats) {
        double best = 1e18;
        for (int r = 0; r < repeats; ++r) {
            const auto t0 = std::chrono::steady_clock::now();
            if (!run_cli(cli, "bounds " + (dir / ("g" + std::to_string(n) + ".pgr")).string(), sink))
                return -1.0;
            best = std::min(best, seconds_since(t0));
        }
        return best;
    };

    const double t50 = time_bounds(50, 1);
    const double t16 = time_bounds(16, 3);
    const double t32 = time_bounds(32, 3);
    const bool ok = t50 > 0 && t16 > 0 && t32 > 0 && t50 < 300.0 && t32 < 16.0 * t16;
    report("grid(50) bounds under 5 min; 16 -> 32 grows runtime < 16x", ok,
           "t50 " + fmt(t50) + " s, t16 " + fmt(t16) + " s, t32 " + fmt(t32) + " s (ratio " +
               fmt(t32 / t16) + ")");
}

// ─── 9. Determinism through the CLI ─────────────────────────────────────────

void check_determinism(const std::string& cli, const fs::path& dir) {
    const fs::path sink = dir / "gen.txt";
    std::vector<fs::path> inputs;
    const auto gen = [&](const std::string& name, const std::string& args) {
        const fs::path p = dir / name;
        if (run_cli(cli, "gen " + args + " -o " + p.string(), sink)) inputs.push_back(p);
    };
    gen("d_grid7.pgr", "-t grid -n 7");
    gen("d_tri6.pgr", "-t tri -n 6");
    gen("d_cycle15.pgr", "-t cycle -n 15");
    gen("d_rand40.pgr", "-t random -n 40 --seed 7");
    gen("d_rand60.pgr", "-t random -n 60 --seed 9");
    {
        // A disconnected input exercises per-component reporting.
        const fs::path p = dir / "d_two_triangles.pgr";
        std::ofstream out(p);
        out << "p pgr 6 6\nr 1 2 3\nr 2 3 1\nr 3 1 2\nr 4 5 6\nr 5 6 4\nr 6 4 5\no 1 2\n";
        inputs.push_back(p);
    }

    bool ok = inputs.size() == 6;
    std::string why = ok ? std::to_string(inputs.size()) + " inputs, bounds and decompose stable"
                         : "could not generate the input suite";
    for (const fs::path& in : inputs) {
        if (!ok) break;
        const fs::path o1 = dir / "r1.txt", o2 = dir / "r2.txt";
        const fs::path t1 = dir / "r1.td", t2 = dir / "r2.td";
        if (!run_cli(cli, "bounds " + in.string(), o1) ||
            !run_cli(cli, "bounds " + in.string(), o2) ||
            !run_cli(cli, "decompose " + in.string() + " -o " + t1.string(), sink) ||
            !run_cli(cli, "decompose " + in.string() + " -o " + t2.string(), sink)) {
            ok = false;
            why = in.filename().string() + ": CLI run failed";
            break;
        }
        if (slurp(o1) != slurp(o2) || slurp(t1) != slurp(t2)) {
            ok = false;
            why = in.filename().string() + ": outputs differ between runs";
            break;
        }
    }
    report("repeated bounds/decompose runs are byte-identical", ok, why);
}

// ─── 10. Six-row triangular grid fixture ────────────────────────────────────

void check_tri6_fixture() {
    const int kb = bt_alg(make_triangular_grid(6)).kb;
    report("six-row triangular grid kb lands in the guaranteed interval [2,6]", 2 <= kb && kb <= 6,
           "kb " + std::to_string(kb));
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: " << argv[0] << " <path-to-cli-binary>\n";
        return 64;
    }
    const std::string cli = argv[1];
    const fs::path dir = fs::temp_directory_path() / "netbound_acceptance";
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        std::cerr << "cannot create " << dir << ": " << ec.message() << '\n';
        return 64;
    }

    check_triangular_net_order();
    check_c15_cover();
    std::vector<PlaneGraph> randomSuites;
    check_net_alg_matches_oracle(randomSuites);
    check_cover_criterion();
    check_sandwich(randomSuites);
    check_decompositions(randomSuites);
    check_grid_sandwich();
    check_performance(cli, dir);
    check_determinism(cli, dir);
    check_tri6_fixture();

    std::cout << (g_failures == 0 ? "all acceptance checks passed"
                                  : std::to_string(g_failures) + " acceptance check(s) failed")
              << '\n';
    return g_failures;
}
