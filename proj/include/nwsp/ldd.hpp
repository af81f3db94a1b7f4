#pragma once

#include <cstdint>
#include <vector>

#include "nwsp/graph.hpp"
#include "nwsp/rng.hpp"
#include "nwsp/sssp.hpp"

namespace nwsp {

enum class BallDir { In, Out };

struct LddParams {
    Weight diameter = 1;   // D >= 1
    int global_n = 2;      // vertex count of the top-level problem
    double c_sample = 4.0; // k = ceil(c_sample * ln(global_n)) phase-1 samples
    int p_numerator = 80;  // p = min{1, p_numerator * log2(global_n) / D}
};

struct LddStats {
    uint64_t boundary_edges = 0;
    uint64_t premature_terminations = 0;
    uint64_t recursive_calls = 0;
    int max_depth = 0;
    int max_vertex_participation = 0;
};

// Edge set whose removal leaves only SCCs of weak diameter <= D, plus
// diagnostics. The weak-diameter property holds deterministically; randomness
// only affects how many edges are removed.
struct LddResult {
    std::vector<int> removed;  // ascending edge ids
    LddStats stats;
};

// Exact ball by truncated Dijkstra plus its boundary: edges leaving an
// out-ball / entering an in-ball. Requires nonnegative weights.
std::pair<std::vector<int>, std::vector<int>> bounded_ball(const Graph& g, int v, Weight radius,
                                                           BallDir dir);

LddResult low_diam_decomposition(const Graph& g, const LddParams& params, Rng& rng,
                                 StepBudget* budget = nullptr);

}  // namespace nwsp
