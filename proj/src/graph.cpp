#include "nwsp/graph.hpp"

#include <algorithm>
#include <limits>

namespace nwsp {

std::string weight_to_string(Weight w) {
    if (w == 0) return "0";
    bool neg = w < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(w + 1)) + 1
                              : static_cast<unsigned __int128>(w);
    char buf[48];
    int pos = 48;
    while (u > 0) {
        buf[--pos] = static_cast<char>('0' + static_cast<int>(u % 10));
        u /= 10;
    }
    std::string s;
    if (neg) s.push_back('-');
    s.append(buf + pos, buf + 48);
    return s;
}

Weight weight_from_string(const std::string& s) {
    size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
        neg = s[i] == '-';
        ++i;
    }
    if (i == s.size()) throw InvalidInput("empty integer literal");
    unsigned __int128 u = 0;
    const unsigned __int128 lim = static_cast<unsigned __int128>(1) << 126;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw InvalidInput("bad integer literal: " + s);
        u = u * 10 + static_cast<unsigned>(s[i] - '0');
        if (u > lim) throw InvalidInput("integer literal out of range: " + s);
    }
    Weight w = static_cast<Weight>(u);
    return neg ? -w : w;
}

void Graph::build_index() {
    const int m = static_cast<int>(src_.size());
    out_off_.assign(static_cast<size_t>(n_) + 1, 0);
    in_off_.assign(static_cast<size_t>(n_) + 1, 0);
    for (int e = 0; e < m; ++e) {
        ++out_off_[src_[e] + 1];
        ++in_off_[dst_[e] + 1];
    }
    for (int v = 0; v < n_; ++v) {
        out_off_[v + 1] += out_off_[v];
        in_off_[v + 1] += in_off_[v];
    }
    out_ids_.resize(m);
    in_ids_.resize(m);
    std::vector<int> ocur(out_off_.begin(), out_off_.end() - 1);
    std::vector<int> icur(in_off_.begin(), in_off_.end() - 1);
    for (int e = 0; e < m; ++e) {
        out_ids_[ocur[src_[e]]++] = e;
        in_ids_[icur[dst_[e]]++] = e;
    }
}

Graph::Graph(int n, std::vector<int> src, std::vector<int> dst, std::vector<Weight> w)
    : n_(n), src_(std::move(src)), dst_(std::move(dst)), w_(std::move(w)) {
    build_index();
}

Graph Graph::with_weights(std::vector<Weight> w) const {
    Graph g = *this;
    g.w_ = std::move(w);
    return g;
}

Weight Graph::min_weight() const {
    Weight m = 0;
    bool first = true;
    for (Weight w : w_) {
        if (first || w < m) m = w;
        first = false;
    }
    return m;
}

Weight Graph::max_weight() const {
    Weight m = 0;
    bool first = true;
    for (Weight w : w_) {
        if (first || w > m) m = w;
        first = false;
    }
    return m;
}

PriceFunction PriceFunction::plus(const PriceFunction& other) const {
    if (values.size() != other.values.size())
        throw InvalidInput("price function length mismatch in composition");
    PriceFunction out(static_cast<int>(values.size()));
    for (size_t i = 0; i < values.size(); ++i) out.values[i] = values[i] + other.values[i];
    return out;
}

Graph build_graph(int n, const std::vector<Edge>& edges) {
    if (n < 0) throw InvalidInput("negative vertex count");
    std::vector<int> src, dst;
    std::vector<Weight> w;
    src.reserve(edges.size());
    dst.reserve(edges.size());
    w.reserve(edges.size());
    for (size_t i = 0; i < edges.size(); ++i) {
        const Edge& e = edges[i];
        if (e.src < 0 || e.src >= n || e.dst < 0 || e.dst >= n)
            throw InvalidInput("edge " + std::to_string(i) + " endpoint out of range");
        if (e.w > kInputWeightGuard || e.w < -kInputWeightGuard)
            throw InvalidInput("edge " + std::to_string(i) + " weight exceeds |w| <= 2^90 guard");
        src.push_back(e.src);
        dst.push_back(e.dst);
        w.push_back(e.w);
    }
    return Graph(n, std::move(src), std::move(dst), std::move(w));
}

std::pair<Graph, int> add_dummy_source(const Graph& g) {
    const int n = g.n();
    const int m = g.m();
    std::vector<int> src, dst;
    std::vector<Weight> w;
    src.reserve(m + n);
    dst.reserve(m + n);
    w.reserve(m + n);
    for (int e = 0; e < m; ++e) {
        src.push_back(g.src(e));
        dst.push_back(g.dst(e));
        w.push_back(g.weight(e));
    }
    for (int v = 0; v < n; ++v) {
        src.push_back(n);
        dst.push_back(v);
        w.push_back(0);
    }
    return {Graph(n + 1, std::move(src), std::move(dst), std::move(w)), n};
}

namespace {

void check_envelope(Weight w) {
    if (w > kArithmeticGuard || w < -kArithmeticGuard)
        throw OverflowError("derived edge weight left the 128-bit safety envelope");
}

}  // namespace

Graph shift_negative_weights(const Graph& g, Weight b) {
    if (b < 1) throw InvalidInput("shift_negative_weights requires B >= 1");
    std::vector<Weight> w(g.weights().begin(), g.weights().end());
    for (Weight& x : w)
        if (x < 0) x += b;
    return g.with_weights(std::move(w));
}

Graph shift_all_weights(const Graph& g, Weight b) {
    if (b < 0) throw InvalidInput("shift_all_weights requires B >= 0");
    std::vector<Weight> w(g.weights().begin(), g.weights().end());
    for (Weight& x : w) {
        x += b;
        check_envelope(x);
    }
    return g.with_weights(std::move(w));
}

Graph scale_weights(const Graph& g, Weight c) {
    if (c <= 0) throw InvalidInput("scale_weights requires c >= 1");
    std::vector<Weight> w(g.weights().begin(), g.weights().end());
    for (Weight& x : w) {
        if (x != 0 && (x > kArithmeticGuard / c || x < -kArithmeticGuard / c))
            throw OverflowError("scale_weights: c * |w| exceeds the safety envelope");
        x *= c;
    }
    return g.with_weights(std::move(w));
}

Graph clamp_nonnegative(const Graph& g) {
    std::vector<Weight> w(g.weights().begin(), g.weights().end());
    for (Weight& x : w)
        if (x < 0) x = 0;
    return g.with_weights(std::move(w));
}

Graph apply_price(const Graph& g, const PriceFunction& phi) {
    if (phi.size() != g.n()) throw InvalidInput("price function length mismatch");
    std::vector<Weight> w(static_cast<size_t>(g.m()));
    for (int e = 0; e < g.m(); ++e) {
        w[e] = g.weight(e) + phi[g.src(e)] - phi[g.dst(e)];
        check_envelope(w[e]);
    }
    return g.with_weights(std::move(w));
}

// Iterative Tarjan. Emits SCCs in reverse topological order of the
// condensation, then reverses so `order` lists part ids topologically.
VertexPartition strongly_connected_components(const Graph& g) {
    const int n = g.n();
    VertexPartition p;
    p.part_of.assign(n, -1);

    std::vector<int> index(n, -1), low(n, 0), on_stack(n, 0);
    std::vector<int> stack;
    stack.reserve(n);
    int next_index = 0;

    // Explicit DFS frames: (vertex, position in its out-edge list).
    std::vector<std::pair<int, int>> frames;
    for (int root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        frames.push_back({root, 0});
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!frames.empty()) {
            auto& [v, i] = frames.back();
            auto out = g.out_edges(v);
            if (i < static_cast<int>(out.size())) {
                int to = g.dst(out[i]);
                ++i;
                if (index[to] == -1) {
                    index[to] = low[to] = next_index++;
                    stack.push_back(to);
                    on_stack[to] = 1;
                    frames.push_back({to, 0});
                } else if (on_stack[to]) {
                    low[v] = std::min(low[v], index[to]);
                }
            } else {
                if (low[v] == index[v]) {
                    int part = static_cast<int>(p.parts.size());
                    p.parts.emplace_back();
                    int u;
                    do {
                        u = stack.back();
                        stack.pop_back();
                        on_stack[u] = 0;
                        p.part_of[u] = part;
                        p.parts[part].push_back(u);
                    } while (u != v);
                }
                int done = v;
                frames.pop_back();
                if (!frames.empty()) {
                    int parent = frames.back().first;
                    low[parent] = std::min(low[parent], low[done]);
                }
            }
        }
    }

    // Tarjan finishes sinks first; reversed part ids are topological.
    const int k = static_cast<int>(p.parts.size());
    p.order.resize(k);
    for (int i = 0; i < k; ++i) p.order[i] = k - 1 - i;
    return p;
}

std::pair<Graph, GadgetMapping> reduce_out_degree(const Graph& g) {
    const int n = g.n();
    const int m = g.m();

    GadgetMapping map;
    map.orig_n = n;
    map.rep.resize(n);

    // Gadget-vertex layout: vertex v owns a contiguous block of
    // max(1, in_deg + out_deg) nodes starting at rep[v].
    std::vector<int> block(n);
    int total = 0;
    for (int v = 0; v < n; ++v) {
        map.rep[v] = total;
        block[v] = std::max(1, g.in_degree(v) + g.out_degree(v));
        total += block[v];
    }
    map.owner.resize(total);
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < block[v]; ++i) map.owner[map.rep[v] + i] = v;

    std::vector<int> src, dst;
    std::vector<Weight> w;

    // Zero-weight cycles. Degenerate single-node blocks get no edge.
    for (int v = 0; v < n; ++v) {
        if (block[v] == 1) continue;
        for (int i = 0; i < block[v]; ++i) {
            src.push_back(map.rep[v] + i);
            dst.push_back(map.rep[v] + (i + 1) % block[v]);
            w.push_back(0);
            map.edge_map.push_back(GadgetMapping::kGadgetEdge);
        }
    }

    // Attach each original edge to a distinct node of each endpoint's cycle:
    // out-edges take slots 0..out_deg-1 at the source, in-edges take slots
    // out_deg..out_deg+in_deg-1 at the destination.
    std::vector<int> out_slot(n, 0), in_slot(n);
    for (int v = 0; v < n; ++v) in_slot[v] = g.out_degree(v);
    for (int e = 0; e < m; ++e) {
        int u = g.src(e), v = g.dst(e);
        int from = map.rep[u] + (block[u] == 1 ? 0 : out_slot[u]++);
        int to = map.rep[v] + (block[v] == 1 ? 0 : in_slot[v]++);
        src.push_back(from);
        dst.push_back(to);
        w.push_back(g.weight(e));
        map.edge_map.push_back(e);
    }

    return {Graph(total, std::move(src), std::move(dst), std::move(w)), std::move(map)};
}

Weight max_neg_magnitude(const Graph& g) {
    Weight lo = g.min_weight();
    return std::max<Weight>(2, -lo);
}

EdgeSubgraph remove_edges(const Graph& g, const std::vector<char>& drop) {
    if (static_cast<int>(drop.size()) != g.m())
        throw InvalidInput("remove_edges: drop mask size mismatch");
    EdgeSubgraph out;
    std::vector<int> src, dst;
    std::vector<Weight> w;
    for (int e = 0; e < g.m(); ++e) {
        if (drop[e]) continue;
        src.push_back(g.src(e));
        dst.push_back(g.dst(e));
        w.push_back(g.weight(e));
        out.orig_edge.push_back(e);
    }
    out.graph = Graph(g.n(), std::move(src), std::move(dst), std::move(w));
    return out;
}

EdgeSubgraph remove_edges(const Graph& g, const std::vector<int>& drop_ids) {
    std::vector<char> drop(static_cast<size_t>(g.m()), 0);
    for (int e : drop_ids) {
        if (e < 0 || e >= g.m()) throw InvalidInput("remove_edges: invalid edge id");
        drop[e] = 1;
    }
    return remove_edges(g, drop);
}

Subgraph induced_subgraph(const Graph& g, const std::vector<int>& verts) {
    Subgraph out;
    std::vector<int> local(g.n(), -1);
    out.orig_vertex = verts;
    std::sort(out.orig_vertex.begin(), out.orig_vertex.end());
    for (size_t i = 0; i < out.orig_vertex.size(); ++i) {
        int v = out.orig_vertex[i];
        if (v < 0 || v >= g.n()) throw InvalidInput("induced_subgraph: invalid vertex");
        if (local[v] != -1) throw InvalidInput("induced_subgraph: duplicate vertex");
        local[v] = static_cast<int>(i);
    }
    std::vector<int> src, dst;
    std::vector<Weight> w;
    for (int e = 0; e < g.m(); ++e) {
        int u = local[g.src(e)], v = local[g.dst(e)];
        if (u == -1 || v == -1) continue;
        src.push_back(u);
        dst.push_back(v);
        w.push_back(g.weight(e));
        out.orig_edge.push_back(e);
    }
    out.graph = Graph(static_cast<int>(out.orig_vertex.size()), std::move(src), std::move(dst),
                      std::move(w));
    return out;
}

}  // namespace nwsp
