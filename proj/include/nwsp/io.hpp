#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nwsp/graph.hpp"
#include "nwsp/solver.hpp"

namespace nwsp {

struct ParsedInstance {
    Graph graph;
    std::optional<int> source;  // 0-based
};

// DIMACS shortest-path dialect: `c` comments, one `p sp <n> <m>`, arcs
// `a <u> <v> <w>` with 1-based vertices, negative weights permitted, and an
// optional `s <v>` source line. Arc count must equal m.
ParsedInstance parse_dimacs(const std::string& text);

std::string write_dimacs(const Graph& g, std::optional<int> source = std::nullopt);

// Trees as `v <id> <dist|inf> <parent-edge|->` per vertex (ids and edge ids
// 1-based, ascending); cycles as `cycle <v1> ... <vk> weight <w>`.
std::string write_result(const SsspResult& res);

struct ParsedResult {
    // Tree fields (dist parallel to vertices; parent_edge 0-based or -1).
    bool is_tree = false;
    std::vector<Weight> dist;
    std::vector<char> reached;
    std::vector<int> parent_edge;
    // Cycle fields.
    std::vector<int> cycle_vertices;  // 0-based
    Weight cycle_weight = 0;
};

ParsedResult parse_result(const std::string& text);

enum class GenMode { RawRandom, HiddenPotential, PlantedCycle };

struct GeneratorSpec {
    int n = 1;
    int m = 0;
    Weight wmin = -8;
    Weight wmax = 15;
    GenMode mode = GenMode::RawRandom;
    uint64_t seed = 0;
};

// Deterministic per seed. HiddenPotential provably emits no negative cycle
// (weights are nonnegative values minus a potential difference); PlantedCycle
// embeds a simple cycle of total weight -1 (its closing edge may exceed the
// requested range to force the sum).
Graph generate(const GeneratorSpec& spec);

// Relaxation-certificate check; std::nullopt means the tree is exact SSSP.
inline std::optional<std::string> verify_tree(const Graph& g, const ShortestPathTree& t) {
    return check_tree_certificate(g, t);
}

inline std::optional<std::string> verify_negative_cycle(const Graph& g, const NegativeCycle& c) {
    return check_negative_cycle(g, c);
}

struct BenchConfig {
    std::vector<int> sizes;
    int edge_factor = 4;
    Weight wmax = 100;
    uint64_t seed = 0;
    SolverConstants constants;
    int parallel = 1;
    // Textbook Bellman-Ford is executed only up to this many n*m steps; its
    // step count is the same closed form either way.
    uint64_t bf_run_limit = 300'000'000;
};

struct BenchRow {
    int n = 0;
    int m = 0;
    uint64_t seed = 0;
    uint64_t solver_steps = 0;
    int solver_attempts = 0;
    int solver_restarts = 0;
    uint64_t bf_steps = 0;
    bool bf_executed = false;
    double solver_ms = 0;  // not part of the deterministic table
    double bf_ms = 0;
};

std::vector<BenchRow> bench(const BenchConfig& config);

// Machine-readable TSV; deterministic (timings only with with_times = true).
std::string write_bench_table(const std::vector<BenchRow>& rows, bool with_times = false);

}  // namespace nwsp
