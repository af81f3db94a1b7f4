#pragma once

#include <stdexcept>
#include <string>

namespace nwsp {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input: out-of-range endpoint, weight guard violation, bad format.
struct InvalidInput : Error {
    explicit InvalidInput(const std::string& msg) : Error(msg) {}
};

// An internal arithmetic result left the 128-bit safety envelope.
struct OverflowError : Error {
    explicit OverflowError(const std::string& msg) : Error(msg) {}
};

// A routine that requires nonnegative weights saw a negative one.
struct NegativeWeightPresent : Error {
    explicit NegativeWeightPresent(const std::string& msg) : Error(msg) {}
};

// fix_dag_edges: contracting the partition does not yield a DAG under the
// partition's claimed topological order.
struct PartitionNotDag : Error {
    explicit PartitionNotDag(const std::string& msg) : Error(msg) {}
};

// fix_dag_edges: some part contains a negative edge.
struct NegativeIntraPartEdge : Error {
    explicit NegativeIntraPartEdge(const std::string& msg) : Error(msg) {}
};

// A potentially non-terminating routine ran out of its step budget. Signals a
// negative cycle or an undersized budget.
struct BudgetExhausted : Error {
    explicit BudgetExhausted(const std::string& msg) : Error(msg) {}
};

// Stronger form of BudgetExhausted: the run produced a certificate that a
// negative cycle exists (queue-addition count impossible for cycle-free
// inputs), so the non-termination is not in doubt.
struct NegativeCycleCertified : BudgetExhausted {
    explicit NegativeCycleCertified(const std::string& msg) : BudgetExhausted(msg) {}
};

// The Monte-Carlo wrapper used up all attempts without producing a certified
// tree. Guaranteed outcome on graphs with a negative cycle.
struct MonteCarloError : Error {
    explicit MonteCarloError(const std::string& msg) : Error(msg) {}
};

// Restart cap exceeded or a supposedly-impossible internal check failed.
struct InternalError : Error {
    explicit InternalError(const std::string& msg) : Error(msg) {}
};

}  // namespace nwsp
