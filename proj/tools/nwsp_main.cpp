#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "nwsp/io.hpp"
#include "nwsp/ldd.hpp"

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream f(path);
    if (!f) throw nwsp::InvalidInput("cannot open " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

nwsp::GenMode parse_mode(const std::string& s) {
    if (s == "random") return nwsp::GenMode::RawRandom;
    if (s == "potential") return nwsp::GenMode::HiddenPotential;
    if (s == "cycle") return nwsp::GenMode::PlantedCycle;
    throw nwsp::InvalidInput("unknown mode `" + s + "` (random|potential|cycle)");
}

struct CommonTuning {
    uint64_t budget_factor = 64;
    int attempts = 3;
    int max_restarts = 100;
    double c_sample = 4.0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--budget-factor", budget_factor, "per-attempt step budget factor");
        cmd->add_option("--attempts", attempts, "Monte-Carlo attempts per log2(n)");
        cmd->add_option("--max-restarts", max_restarts, "Las-Vegas restart cap");
        cmd->add_option("--c-sample", c_sample, "decomposition sampling constant");
    }

    nwsp::SolverConstants constants() const {
        nwsp::SolverConstants c;
        c.budget_factor = budget_factor;
        c.mc_attempts_factor = attempts;
        c.max_restarts = max_restarts;
        c.c_sample = c_sample;
        return c;
    }
};

int run_solve(const std::string& input, long long source_1based, uint64_t seed,
              const CommonTuning& tuning) {
    nwsp::ParsedInstance inst = nwsp::parse_dimacs(read_input(input));
    long long src = source_1based;
    if (src == 0) src = inst.source ? *inst.source + 1 : 1;
    if (src < 1 || src > inst.graph.n()) {
        std::cerr << "error: source out of range\n";
        return 2;
    }
    nwsp::SolveConfig config;
    config.seed = seed;
    config.constants = tuning.constants();
    try {
        nwsp::SsspResult res = nwsp::solve(inst.graph, static_cast<int>(src - 1), config);
        std::cout << "c steps " << res.diag.steps_total << "\n";
        std::cout << "c attempts " << res.diag.mc_attempts << "\n";
        std::cout << "c restarts " << res.diag.restarts << "\n";
        std::cout << nwsp::write_result(res);
        return res.is_tree() ? 0 : 1;
    } catch (const nwsp::InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}

int run_ldd(const std::string& input, long long diameter, uint64_t seed, double c_sample) {
    nwsp::ParsedInstance inst = nwsp::parse_dimacs(read_input(input));
    nwsp::LddParams params;
    params.diameter = diameter;
    params.global_n = std::max(inst.graph.n(), 2);
    params.c_sample = c_sample;
    nwsp::Rng rng(seed);
    nwsp::LddResult res = nwsp::low_diam_decomposition(inst.graph, params, rng);
    for (int e : res.removed) std::cout << (e + 1) << "\n";
    std::cout << "c removed " << res.removed.size() << "\n";
    std::cout << "c boundary_edges " << res.stats.boundary_edges << "\n";
    std::cout << "c premature_terminations " << res.stats.premature_terminations << "\n";
    std::cout << "c recursive_calls " << res.stats.recursive_calls << "\n";
    std::cout << "c max_depth " << res.stats.max_depth << "\n";
    return 0;
}

int run_verify(const std::string& input, const std::string& result_path, long long source_1based) {
    nwsp::ParsedInstance inst = nwsp::parse_dimacs(read_input(input));
    const nwsp::Graph& g = inst.graph;
    nwsp::ParsedResult pr = nwsp::parse_result(read_input(result_path));

    std::optional<std::string> bad;
    if (pr.is_tree) {
        long long src = source_1based;
        if (src == 0) src = inst.source ? *inst.source + 1 : 1;
        if (src < 1 || src > g.n()) {
            std::cerr << "error: source out of range\n";
            return 2;
        }
        if (static_cast<int>(pr.dist.size()) != g.n()) {
            bad = "tree has wrong vertex count";
        } else {
            nwsp::ShortestPathTree t(g.n(), static_cast<int>(src - 1));
            t.dist = pr.dist;
            t.reached = pr.reached;
            t.parent_edge = pr.parent_edge;
            bad = nwsp::verify_tree(g, t);
        }
    } else {
        // The cycle format carries vertices only; reconstruct each hop with
        // the lightest parallel edge and check the claim is achievable.
        nwsp::NegativeCycle c;
        c.vertices = pr.cycle_vertices;
        nwsp::Weight total = 0;
        for (size_t i = 0; i < c.vertices.size() && !bad; ++i) {
            int u = c.vertices[i];
            int v = c.vertices[(i + 1) % c.vertices.size()];
            if (u < 0 || u >= g.n() || v < 0 || v >= g.n()) {
                bad = "cycle vertex out of range";
                break;
            }
            int best = -1;
            for (int e : g.out_edges(u))
                if (g.dst(e) == v && (best == -1 || g.weight(e) < g.weight(best))) best = e;
            if (best == -1) {
                bad = "cycle hop has no edge";
                break;
            }
            c.edges.push_back(best);
            total += g.weight(best);
        }
        if (!bad) {
            c.weight = total;
            if (total > pr.cycle_weight) bad = "claimed weight is below every edge selection";
            if (!bad) bad = nwsp::verify_negative_cycle(g, c);
        }
    }

    if (bad) {
        std::cout << "violation: " << *bad << "\n";
        return 1;
    }
    std::cout << "ok\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"negative-weight single-source shortest paths"};
    app.require_subcommand(1);

    std::string input = "-";
    uint64_t seed = 0;
    CommonTuning tuning;

    auto* solve_cmd = app.add_subcommand("solve", "shortest path tree or negative cycle");
    long long source = 0;
    solve_cmd->add_option("--input", input, "DIMACS file or - for stdin");
    solve_cmd->add_option("--source", source, "source vertex (1-based; default from file or 1)");
    solve_cmd->add_option("--seed", seed, "random seed");
    tuning.attach(solve_cmd);

    auto* ldd_cmd = app.add_subcommand("ldd", "low-diameter decomposition");
    std::string ldd_input = "-";
    long long diameter = 1;
    uint64_t ldd_seed = 0;
    double ldd_c_sample = 4.0;
    ldd_cmd->add_option("--input", ldd_input, "DIMACS file or - for stdin");
    ldd_cmd->add_option("--diameter", diameter, "diameter bound D")->required();
    ldd_cmd->add_option("--seed", ldd_seed, "random seed");
    ldd_cmd->add_option("--c-sample", ldd_c_sample, "sampling constant");

    auto* gen_cmd = app.add_subcommand("gen", "instance generator");
    int gen_n = 16, gen_m = 48;
    long long gen_wmin = -8, gen_wmax = 15;
    std::string gen_mode = "random";
    uint64_t gen_seed = 0;
    long long gen_source = 0;
    gen_cmd->add_option("--n", gen_n, "vertex count");
    gen_cmd->add_option("--m", gen_m, "edge count");
    gen_cmd->add_option("--wmin", gen_wmin, "minimum weight");
    gen_cmd->add_option("--wmax", gen_wmax, "maximum weight");
    gen_cmd->add_option("--mode", gen_mode, "random|potential|cycle");
    gen_cmd->add_option("--seed", gen_seed, "random seed");
    gen_cmd->add_option("--source", gen_source, "emit `s` line (1-based)");

    auto* verify_cmd = app.add_subcommand("verify", "check a solve result");
    std::string verify_input = "-";
    std::string verify_result;
    long long verify_source = 0;
    verify_cmd->add_option("--input", verify_input, "DIMACS file or - for stdin");
    verify_cmd->add_option("--result", verify_result, "result file")->required();
    verify_cmd->add_option("--source", verify_source, "source vertex (1-based)");

    auto* bench_cmd = app.add_subcommand("bench", "solver vs Bellman-Ford step counts");
    std::vector<int> sizes{1024, 4096};
    int edge_factor = 4;
    long long bench_wmax = 100;
    uint64_t bench_seed = 0;
    int parallel = 1;
    bool with_times = false;
    CommonTuning bench_tuning;
    bench_cmd->add_option("--sizes", sizes, "instance sizes")->delimiter(',');
    bench_cmd->add_option("--edge-factor", edge_factor, "m = factor * n");
    bench_cmd->add_option("--wmax", bench_wmax, "weight magnitude");
    bench_cmd->add_option("--seed", bench_seed, "random seed");
    bench_cmd->add_option("--parallel", parallel, "concurrent instances");
    bench_cmd->add_flag("--with-times", with_times, "append wall-clock columns");
    bench_tuning.attach(bench_cmd);

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve_cmd->parsed()) return run_solve(input, source, seed, tuning);
        if (ldd_cmd->parsed()) return run_ldd(ldd_input, diameter, ldd_seed, ldd_c_sample);
        if (gen_cmd->parsed()) {
            nwsp::GeneratorSpec spec;
            spec.n = gen_n;
            spec.m = gen_m;
            spec.wmin = gen_wmin;
            spec.wmax = gen_wmax;
            spec.mode = parse_mode(gen_mode);
            spec.seed = gen_seed;
            nwsp::Graph g = nwsp::generate(spec);
            std::optional<int> src;
            if (gen_source >= 1) src = static_cast<int>(gen_source - 1);
            std::cout << nwsp::write_dimacs(g, src);
            return 0;
        }
        if (verify_cmd->parsed()) return run_verify(verify_input, verify_result, verify_source);
        if (bench_cmd->parsed()) {
            nwsp::BenchConfig config;
            config.sizes = sizes;
            config.edge_factor = edge_factor;
            config.wmax = bench_wmax;
            config.seed = bench_seed;
            config.parallel = parallel;
            config.constants = bench_tuning.constants();
            std::cout << nwsp::write_bench_table(nwsp::bench(config), with_times);
            return 0;
        }
    } catch (const nwsp::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
