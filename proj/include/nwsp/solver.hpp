#pragma once

#include <optional>
#include <variant>

#include "nwsp/graph.hpp"
#include "nwsp/scaledown.hpp"
#include "nwsp/sssp.hpp"

namespace nwsp {

struct SsspResult {
    std::variant<ShortestPathTree, NegativeCycle> outcome;
    RunDiagnostics diag;

    bool is_tree() const { return std::holds_alternative<ShortestPathTree>(outcome); }
    const ShortestPathTree& tree() const { return std::get<ShortestPathTree>(outcome); }
    const NegativeCycle& cycle() const { return std::get<NegativeCycle>(outcome); }
};

struct SolveConfig {
    uint64_t seed = 0;
    SolverConstants constants;
};

// Relaxation certificate: dist(s) = 0, parent edges tight and acyclic, every
// edge out of a reached vertex relaxed, unreached vertices have no reached
// in-neighbor. Passing certifies exact SSSP distances and the absence of
// negative cycles reachable from s. Returns a violation message or nothing.
std::optional<std::string> check_tree_certificate(const Graph& g, const ShortestPathTree& t);

// Chains, closes, and sums strictly negative. Returns a violation or nothing.
std::optional<std::string> check_negative_cycle(const Graph& g, const NegativeCycle& c);

// Scaling main loop (weights x2n, halving rounds of scale_down, +1 rounding,
// Dijkstra). Requires w(e) >= -1. Returns the exact tree from s in original
// weights plus the final scaled-graph potential (w_scaled_phi >= -1).
// Never terminates on negative cycles: surfaces as BudgetExhausted.
std::pair<ShortestPathTree, PriceFunction> sp_main(const Graph& g, int s, ExecutionContext& ctx);

// Integral phi with w_phi(e) >= 0 for every edge, extracted from dummy-source
// distances of the rounded graph (verified before returning). Accepts any
// integral weights; documented precondition of the classic interface is
// w(e) >= -1. Throws BudgetExhausted when a negative cycle is present.
PriceFunction make_nonneg_potentials(const Graph& g, ExecutionContext& ctx,
                                     const PriceFunction* warm_start = nullptr);

// Bit-scaling ladder: level weights ceil(w / 2^(t-i)), potentials doubled
// between levels, each level repaired by make_nonneg_potentials. Returns phi
// with w_phi >= 0.
PriceFunction goldberg_solve(const Graph& g, ExecutionContext& ctx);

// Monte-Carlo wrapper: escalating per-attempt step budgets up to
// budget_factor * (m+n+1) * ceil(log2 n)^5, at most mc_attempts_factor *
// ceil(log2 n) attempts. A returned tree is always certificate-checked and
// therefore correct; graphs with a negative cycle always error.
ShortestPathTree sp_monte_carlo(const Graph& g, int s, ExecutionContext& ctx);

// Same attempt loop, but returns the verified nonnegative-making potential
// instead of a tree (this is what the threshold search consumes).
PriceFunction mc_potentials(const Graph& g, ExecutionContext& ctx,
                            const PriceFunction* warm_start = nullptr);

// Binary search for the smallest B >= 0 such that H^{+B} shows no negative
// cycle. With every Monte-Carlo probe good: B = 0 iff H is cycle-free, else
// H^{+B} is clean and H^{+(B-1)} is not.
Weight find_thresh(const Graph& h, int s, ExecutionContext& ctx);

// Las-Vegas solver for w(e) >= -1: threshold gate, then either a certified
// tree or a summation-verified negative cycle, restarting internally on any
// failed verification. Throws InternalError at the restart cap.
SsspResult sp_las_vegas(const Graph& g, int s, ExecutionContext& ctx);

// Arbitrary cycle by depth-first search; weight is the recomputed sum (not
// necessarily negative). std::nullopt on acyclic graphs.
std::optional<NegativeCycle> find_any_cycle(const Graph& g);

// Full pipeline for arbitrary integral weights: out-degree reduction, the
// Las-Vegas machinery on the reduced graph, results mapped back through the
// gadget. Negative cycles anywhere (even unreachable from s) are returned as
// verified explicit cycles.
SsspResult solve(const Graph& g_in, int s, const SolveConfig& config);

}  // namespace nwsp
