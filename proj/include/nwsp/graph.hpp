#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "nwsp/errors.hpp"

namespace nwsp {

// All edge weights and distances are 128-bit signed integers so that the
// internal x2n / xn^3 weight transforms stay exact.
using Weight = __int128;

// Guard on weights accepted from callers/files. Leaves headroom for the
// internal scaling transforms at n <= 2^20.
inline constexpr Weight kInputWeightGuard = Weight(1) << 90;

// Hard envelope for internally derived weights; transforms that would exceed
// it throw OverflowError instead of wrapping.
inline constexpr Weight kArithmeticGuard = Weight(1) << 120;

std::string weight_to_string(Weight w);
Weight weight_from_string(const std::string& s);  // throws InvalidInput

struct Edge {
    int src;
    int dst;
    Weight w;
};

// Immutable directed weighted multigraph. Vertices are 0..n-1; parallel edges
// and self-loops are permitted. Edge ids equal construction order. Forward and
// reverse adjacency are CSR indexes over edge ids.
class Graph {
  public:
    Graph() = default;
    Graph(int n, std::vector<int> src, std::vector<int> dst, std::vector<Weight> w);

    int n() const { return n_; }
    int m() const { return static_cast<int>(src_.size()); }

    int src(int e) const { return src_[e]; }
    int dst(int e) const { return dst_[e]; }
    Weight weight(int e) const { return w_[e]; }
    Edge edge(int e) const { return {src_[e], dst_[e], w_[e]}; }

    std::span<const Weight> weights() const { return w_; }

    // Out-edge ids of u, in insertion order.
    std::span<const int> out_edges(int u) const {
        return {out_ids_.data() + out_off_[u], out_ids_.data() + out_off_[u + 1]};
    }
    // In-edge ids of u.
    std::span<const int> in_edges(int u) const {
        return {in_ids_.data() + in_off_[u], in_ids_.data() + in_off_[u + 1]};
    }

    int out_degree(int u) const { return out_off_[u + 1] - out_off_[u]; }
    int in_degree(int u) const { return in_off_[u + 1] - in_off_[u]; }

    // Same topology with different weights (edge ids unchanged).
    Graph with_weights(std::vector<Weight> w) const;

    Weight min_weight() const;  // 0 if no edges
    Weight max_weight() const;  // 0 if no edges
    bool has_negative_edge() const { return min_weight() < 0; }

  private:
    int n_ = 0;
    std::vector<int> src_, dst_;
    std::vector<Weight> w_;
    std::vector<int> out_off_, out_ids_;
    std::vector<int> in_off_, in_ids_;

    void build_index();
};

// Per-vertex integer potential; reweights edges as
// w_phi(u,v) = w(u,v) + phi(u) - phi(v).
struct PriceFunction {
    std::vector<Weight> values;

    PriceFunction() = default;
    explicit PriceFunction(int n) : values(static_cast<size_t>(n), 0) {}
    explicit PriceFunction(std::vector<Weight> v) : values(std::move(v)) {}

    int size() const { return static_cast<int>(values.size()); }
    Weight operator[](int v) const { return values[v]; }
    Weight& operator[](int v) { return values[v]; }

    // Pointwise composition.
    PriceFunction plus(const PriceFunction& other) const;
};

// Disjoint vertex sets covering 0..n-1, with `order` a topological order of
// the contracted graph when the partition claims to be a DAG partition.
struct VertexPartition {
    std::vector<std::vector<int>> parts;
    std::vector<int> part_of;
    std::vector<int> order;
};

// Bookkeeping for reduce_out_degree. For every gadget edge, edge_map holds
// kGadgetEdge; otherwise the originating edge id (with identical weight).
struct GadgetMapping {
    static constexpr int kGadgetEdge = -1;

    int orig_n = 0;
    std::vector<int> rep;       // original vertex -> canonical gadget vertex
    std::vector<int> owner;     // gadget vertex -> original vertex
    std::vector<int> edge_map;  // gadget edge -> original edge id or kGadgetEdge
};

// Subgraph with back-references to the graph it was taken from.
struct Subgraph {
    Graph graph;
    std::vector<int> orig_vertex;  // new vertex id -> original vertex id
    std::vector<int> orig_edge;    // new edge id -> original edge id
};

// Same vertex set, some edges dropped; orig_edge maps surviving edge ids back.
struct EdgeSubgraph {
    Graph graph;
    std::vector<int> orig_edge;
};

// Validating constructor: endpoints in range, |w| <= kInputWeightGuard.
Graph build_graph(int n, const std::vector<Edge>& edges);

// G_s: new vertex s = n with a weight-0 edge to every v and no in-edges.
// Original edge ids unchanged; dummy edges get ids m..m+n-1.
std::pair<Graph, int> add_dummy_source(const Graph& g);

// G^B: adds B to negative edge weights only.
Graph shift_negative_weights(const Graph& g, Weight b);

// G^{+B}: adds B to every edge weight.
Graph shift_all_weights(const Graph& g, Weight b);

// All weights multiplied by c > 0. Throws OverflowError past the envelope.
Graph scale_weights(const Graph& g, Weight c);

// Weights clamped below at 0.
Graph clamp_nonnegative(const Graph& g);

// G_phi. Topology and edge ids unchanged.
Graph apply_price(const Graph& g, const PriceFunction& phi);

// Maximal SCCs with `order` a topological order of the condensation.
VertexPartition strongly_connected_components(const Graph& g);

// Replaces every vertex by a zero-weight directed cycle of length
// max(1, in_deg + out_deg); each original edge attaches to a distinct cycle
// node. Output out-degree <= 3 everywhere; distances between representatives
// equal original distances.
std::pair<Graph, GadgetMapping> reduce_out_degree(const Graph& g);

// W_G = max(2, -min edge weight).
Weight max_neg_magnitude(const Graph& g);

// Subgraph on the same vertex set without the edges whose ids are flagged in
// `drop` (size m, nonzero = drop).
EdgeSubgraph remove_edges(const Graph& g, const std::vector<char>& drop);
EdgeSubgraph remove_edges(const Graph& g, const std::vector<int>& drop_ids);

// G[V'] with vertices relabeled densely in ascending original order.
Subgraph induced_subgraph(const Graph& g, const std::vector<int>& verts);

}  // namespace nwsp
