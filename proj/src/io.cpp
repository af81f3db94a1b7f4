#include "nwsp/io.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include "nwsp/rng.hpp"

namespace nwsp {

ParsedInstance parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int n = -1;
    long long m = -1;
    std::optional<int> source;
    std::vector<Edge> edges;

    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;  // blank line
        auto fail = [&](const std::string& why) {
            throw InvalidInput("line " + std::to_string(lineno) + ": " + why);
        };
        if (tag == "c") continue;
        if (tag == "p") {
            std::string kind;
            if (n != -1) fail("duplicate problem line");
            if (!(ls >> kind >> n >> m) || kind != "sp" || n < 0 || m < 0)
                fail("expected `p sp <n> <m>`");
            edges.reserve(static_cast<size_t>(m));
        } else if (tag == "a") {
            if (n == -1) fail("arc before problem line");
            long long u, v;
            std::string w;
            if (!(ls >> u >> v >> w)) fail("expected `a <u> <v> <w>`");
            if (u < 1 || u > n || v < 1 || v > n) fail("vertex out of range");
            edges.push_back({static_cast<int>(u - 1), static_cast<int>(v - 1),
                             weight_from_string(w)});
        } else if (tag == "s") {
            long long v;
            if (!(ls >> v)) fail("expected `s <v>`");
            if (n == -1) fail("source before problem line");
            if (v < 1 || v > n) fail("source out of range");
            source = static_cast<int>(v - 1);
        } else {
            fail("unknown line tag `" + tag + "`");
        }
    }
    if (n == -1) throw InvalidInput("missing problem line");
    if (static_cast<long long>(edges.size()) != m)
        throw InvalidInput("arc count " + std::to_string(edges.size()) +
                           " does not match declared m = " + std::to_string(m));
    return {build_graph(n, edges), source};
}

std::string write_dimacs(const Graph& g, std::optional<int> source) {
    std::ostringstream out;
    out << "p sp " << g.n() << ' ' << g.m() << '\n';
    if (source) out << "s " << (*source + 1) << '\n';
    for (int e = 0; e < g.m(); ++e)
        out << "a " << (g.src(e) + 1) << ' ' << (g.dst(e) + 1) << ' '
            << weight_to_string(g.weight(e)) << '\n';
    return out.str();
}

std::string write_result(const SsspResult& res) {
    std::ostringstream out;
    if (res.is_tree()) {
        const ShortestPathTree& t = res.tree();
        for (size_t v = 0; v < t.dist.size(); ++v) {
            out << "v " << (v + 1) << ' ';
            if (t.reached[v])
                out << weight_to_string(t.dist[v]);
            else
                out << "inf";
            out << ' ';
            if (t.parent_edge[v] == ShortestPathTree::kNoParent)
                out << '-';
            else
                out << (t.parent_edge[v] + 1);
            out << '\n';
        }
    } else {
        const NegativeCycle& c = res.cycle();
        out << "cycle";
        for (int v : c.vertices) out << ' ' << (v + 1);
        out << " weight " << weight_to_string(c.weight) << '\n';
    }
    return out.str();
}

ParsedResult parse_result(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    ParsedResult r;
    bool saw_any = false;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "c") continue;
        if (tag == "v") {
            long long id;
            std::string dist, parent;
            if (!(ls >> id >> dist >> parent)) throw InvalidInput("bad tree line: " + line);
            if (id != static_cast<long long>(r.dist.size()) + 1)
                throw InvalidInput("tree lines out of order");
            saw_any = true;
            r.is_tree = true;
            if (dist == "inf") {
                r.reached.push_back(0);
                r.dist.push_back(0);
            } else {
                r.reached.push_back(1);
                r.dist.push_back(weight_from_string(dist));
            }
            r.parent_edge.push_back(parent == "-" ? -1
                                                  : static_cast<int>(std::stoll(parent) - 1));
        } else if (tag == "cycle") {
            saw_any = true;
            r.is_tree = false;
            std::vector<std::string> toks;
            std::string t;
            while (ls >> t) toks.push_back(t);
            if (toks.size() < 3 || toks[toks.size() - 2] != "weight")
                throw InvalidInput("bad cycle line: " + line);
            for (size_t i = 0; i + 2 < toks.size(); ++i)
                r.cycle_vertices.push_back(static_cast<int>(std::stoll(toks[i]) - 1));
            r.cycle_weight = weight_from_string(toks.back());
        } else {
            throw InvalidInput("unknown result line: " + line);
        }
    }
    if (!saw_any) throw InvalidInput("empty result");
    return r;
}

namespace {

Weight uniform_weight(Rng& rng, Weight lo, Weight hi) {
    // Generator ranges are modest; draw through a 64-bit span.
    auto span = static_cast<uint64_t>(hi - lo);
    return lo + static_cast<Weight>(rng.next_below(span + 1));
}

}  // namespace

Graph generate(const GeneratorSpec& spec) {
    if (spec.n < 1) throw InvalidInput("generator requires n >= 1");
    if (spec.m < 0) throw InvalidInput("generator requires m >= 0");
    if (spec.wmin > spec.wmax) throw InvalidInput("generator weight range is empty");
    if (spec.wmax > kInputWeightGuard || spec.wmin < -kInputWeightGuard)
        throw InvalidInput("generator weight range exceeds the input guard");
    Rng rng(spec.seed);
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(spec.m));
    const auto n64 = static_cast<uint64_t>(spec.n);

    switch (spec.mode) {
        case GenMode::RawRandom: {
            for (int i = 0; i < spec.m; ++i) {
                int u = static_cast<int>(rng.next_below(n64));
                int v = static_cast<int>(rng.next_below(n64));
                edges.push_back({u, v, uniform_weight(rng, spec.wmin, spec.wmax)});
            }
            break;
        }
        case GenMode::HiddenPotential: {
            if (spec.wmax < 0)
                throw InvalidInput("hidden-potential mode requires wmax >= 0");
            Weight p_range = spec.wmin < 0 ? std::min(-spec.wmin, spec.wmax) : 0;
            std::vector<Weight> pot(static_cast<size_t>(spec.n));
            for (auto& p : pot)
                p = static_cast<Weight>(rng.next_below(static_cast<uint64_t>(p_range) + 1));
            for (int i = 0; i < spec.m; ++i) {
                int u = static_cast<int>(rng.next_below(n64));
                int v = static_cast<int>(rng.next_below(n64));
                Weight lo = std::max<Weight>(0, spec.wmin - pot[u] + pot[v]);
                Weight hi = spec.wmax - pot[u] + pot[v];
                Weight w_nonneg = uniform_weight(rng, lo, hi);
                edges.push_back({u, v, w_nonneg + pot[u] - pot[v]});
            }
            break;
        }
        case GenMode::PlantedCycle: {
            if (spec.m < 1) throw InvalidInput("planted-cycle mode requires m >= 1");
            int max_len = std::min({spec.n, spec.m, 8});
            int len = max_len <= 1
                          ? 1
                          : 2 + static_cast<int>(rng.next_below(static_cast<uint64_t>(max_len) - 1));
            // Distinct cycle vertices by partial Fisher-Yates.
            std::vector<int> ids(static_cast<size_t>(spec.n));
            for (int i = 0; i < spec.n; ++i) ids[i] = i;
            for (int i = 0; i < len; ++i) {
                int j = i + static_cast<int>(rng.next_below(n64 - static_cast<uint64_t>(i)));
                std::swap(ids[i], ids[j]);
            }
            Weight sum = 0;
            for (int i = 0; i < len; ++i) {
                int u = ids[i];
                int v = ids[(i + 1) % len];
                Weight w;
                if (i + 1 < len) {
                    w = uniform_weight(rng, spec.wmin, spec.wmax);
                } else {
                    w = -1 - sum;  // close the cycle at total weight -1
                }
                sum += w;
                edges.push_back({u, v, w});
            }
            for (int i = len; i < spec.m; ++i) {
                int u = static_cast<int>(rng.next_below(n64));
                int v = static_cast<int>(rng.next_below(n64));
                edges.push_back({u, v, uniform_weight(rng, spec.wmin, spec.wmax)});
            }
            break;
        }
    }
    return build_graph(spec.n, edges);
}

namespace {

BenchRow bench_one(int n, const BenchConfig& config, uint64_t seed) {
    GeneratorSpec gs;
    gs.n = n;
    gs.m = n * config.edge_factor;
    gs.wmin = -config.wmax;
    gs.wmax = config.wmax;
    gs.mode = GenMode::HiddenPotential;
    gs.seed = seed;
    Graph g = generate(gs);

    BenchRow row;
    row.n = n;
    row.m = g.m();
    row.seed = seed;

    SolveConfig sc;
    sc.seed = seed + 1;
    sc.constants = config.constants;
    auto t0 = std::chrono::steady_clock::now();
    SsspResult res = solve(g, 0, sc);
    auto t1 = std::chrono::steady_clock::now();
    row.solver_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    row.solver_steps = res.diag.steps_total;
    row.solver_attempts = res.diag.mc_attempts;
    row.solver_restarts = res.diag.restarts;
    if (!res.is_tree()) throw InternalError("bench instance unexpectedly produced a cycle");

    // Textbook Bellman-Ford does exactly n rounds of m relaxation attempts;
    // execute it for wall-clock honesty while that is affordable.
    row.bf_steps = static_cast<uint64_t>(n) * static_cast<uint64_t>(g.m());
    if (row.bf_steps <= config.bf_run_limit) {
        auto b0 = std::chrono::steady_clock::now();
        std::vector<Weight> d(static_cast<size_t>(n), kNoDist);
        d[0] = 0;
        for (int round = 0; round < n; ++round) {
            for (int e = 0; e < g.m(); ++e) {
                if (d[g.src(e)] == kNoDist) continue;
                Weight nd = d[g.src(e)] + g.weight(e);
                if (nd < d[g.dst(e)]) d[g.dst(e)] = nd;
            }
        }
        auto b1 = std::chrono::steady_clock::now();
        row.bf_ms = std::chrono::duration<double, std::milli>(b1 - b0).count();
        row.bf_executed = true;
    }
    return row;
}

}  // namespace

std::vector<BenchRow> bench(const BenchConfig& config) {
    std::vector<BenchRow> rows(config.sizes.size());
    if (config.parallel > 1) {
        std::vector<std::thread> threads;
        std::atomic<size_t> next{0};
        for (int t = 0; t < config.parallel; ++t) {
            threads.emplace_back([&] {
                for (size_t i = next.fetch_add(1); i < config.sizes.size();
                     i = next.fetch_add(1))
                    rows[i] = bench_one(config.sizes[i], config, config.seed + i);
            });
        }
        for (auto& t : threads) t.join();
    } else {
        for (size_t i = 0; i < config.sizes.size(); ++i)
            rows[i] = bench_one(config.sizes[i], config, config.seed + i);
    }
    return rows;
}

std::string write_bench_table(const std::vector<BenchRow>& rows, bool with_times) {
    std::ostringstream out;
    out << "n\tm\tseed\tsolver_steps\tattempts\trestarts\tbf_steps\tbf_executed";
    if (with_times) out << "\tsolver_ms\tbf_ms";
    out << '\n';
    for (const BenchRow& r : rows) {
        out << r.n << '\t' << r.m << '\t' << r.seed << '\t' << r.solver_steps << '\t'
            << r.solver_attempts << '\t' << r.solver_restarts << '\t' << r.bf_steps << '\t'
            << (r.bf_executed ? 1 : 0);
        if (with_times) out << '\t' << r.solver_ms << '\t' << r.bf_ms;
        out << '\n';
    }
    return out.str();
}

}  // namespace nwsp
