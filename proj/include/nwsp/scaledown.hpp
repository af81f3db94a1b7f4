#pragma once

#include "nwsp/graph.hpp"
#include "nwsp/ldd.hpp"
#include "nwsp/rng.hpp"
#include "nwsp/sssp.hpp"

namespace nwsp {

// Tunable constants threaded through every randomized routine.
struct SolverConstants {
    double c_sample = 4.0;         // LDD phase-1 sampling constant
    int p_numerator = 80;          // LDD ball-radius numerator
    uint64_t budget_factor = 64;   // full per-attempt budget = bf * (m+n+1) * ceil(log2 n)^5
    int mc_attempts_factor = 3;    // attempts = factor * ceil(log2 n)
    int max_restarts = 100;        // Las-Vegas restart cap
};

struct RunDiagnostics {
    uint64_t steps_total = 0;  // budget steps accumulated over finished budgets
    int mc_attempts = 0;       // Monte-Carlo attempts consumed
    int restarts = 0;          // Las-Vegas restarts / retries
};

// Seeded RNG + shared step budget + the global vertex count the probabilistic
// analysis is phrased in, passed by reference through nested calls.
struct ExecutionContext {
    Rng rng;
    StepBudget budget;
    int global_n = 2;
    SolverConstants constants;
    RunDiagnostics diag;

    explicit ExecutionContext(uint64_t seed = 0) : rng(seed) {}
};

struct ScaleDownInput {
    const Graph& graph;
    Weight delta;  // >= 1
    Weight b;      // >= 1; every weight >= -2b (checked)
};

// Recursive scaling core: returns integral phi with w_phi(e) >= -B for every
// edge (postcondition w^B_phi >= 0 is verified before returning). May throw
// BudgetExhausted when the input hides a negative cycle or violates the
// eta(G^B) <= Delta requirement.
PriceFunction scale_down(const ScaleDownInput& in, ExecutionContext& ctx);

}  // namespace nwsp
