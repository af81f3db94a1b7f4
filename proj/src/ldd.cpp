#include "nwsp/ldd.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <queue>

namespace nwsp {

namespace {

using HeapEntry = std::pair<Weight, int>;
using MinHeap = std::priority_queue<HeapEntry, std::vector<HeapEntry>, std::greater<HeapEntry>>;

// Truncated Dijkstra workhorse shared by the public bounded_ball and the
// decomposition. Labels are epoch-stamped so repeated carving does not pay
// O(n) initialization per ball.
struct BallScratch {
    std::vector<Weight> dist;
    std::vector<uint32_t> seen_stamp;
    std::vector<uint32_t> done_stamp;
    uint32_t epoch = 0;

    explicit BallScratch(int n)
        : dist(static_cast<size_t>(n), 0),
          seen_stamp(static_cast<size_t>(n), 0),
          done_stamp(static_cast<size_t>(n), 0) {}

    bool seen(int v) const { return seen_stamp[v] == epoch; }
    bool done(int v) const { return done_stamp[v] == epoch; }
};

// Vertices u with dist(v,u) <= radius (dir Out) or dist(u,v) <= radius
// (dir In), restricted to `alive` when given. Returned in settle order.
std::vector<int> grow_ball(const Graph& g, int v, Weight radius, BallDir dir,
                           const std::vector<char>* alive, BallScratch& scratch,
                           StepBudget* budget) {
    ++scratch.epoch;
    std::vector<int> ball;
    MinHeap q;
    scratch.dist[v] = 0;
    scratch.seen_stamp[v] = scratch.epoch;
    q.push({0, v});
    if (budget) budget->tick();

    while (!q.empty()) {
        if (budget) budget->check();
        auto [d, u] = q.top();
        q.pop();
        if (budget) budget->tick();
        if (d > radius) break;
        if (scratch.done(u) || d != scratch.dist[u]) continue;
        scratch.done_stamp[u] = scratch.epoch;
        ball.push_back(u);
        auto edges = dir == BallDir::Out ? g.out_edges(u) : g.in_edges(u);
        for (int e : edges) {
            if (budget) budget->tick();
            int x = dir == BallDir::Out ? g.dst(e) : g.src(e);
            if (alive && !(*alive)[x]) continue;
            Weight nd = d + g.weight(e);
            if (nd > radius) continue;
            if (!scratch.seen(x) || nd < scratch.dist[x]) {
                scratch.dist[x] = nd;
                scratch.seen_stamp[x] = scratch.epoch;
                q.push({nd, x});
                if (budget) budget->tick();
            }
        }
    }
    return ball;
}

}  // namespace

std::pair<std::vector<int>, std::vector<int>> bounded_ball(const Graph& g, int v, Weight radius,
                                                           BallDir dir) {
    if (g.has_negative_edge())
        throw NegativeWeightPresent("bounded_ball requires nonnegative weights");
    if (v < 0 || v >= g.n()) throw InvalidInput("bounded_ball: vertex out of range");
    if (radius < 0) throw InvalidInput("bounded_ball: negative radius");

    BallScratch scratch(g.n());
    std::vector<int> ball = grow_ball(g, v, radius, dir, nullptr, scratch, nullptr);

    std::vector<char> member(static_cast<size_t>(g.n()), 0);
    for (int u : ball) member[u] = 1;
    std::vector<int> boundary;
    for (int u : ball) {
        auto edges = dir == BallDir::Out ? g.out_edges(u) : g.in_edges(u);
        for (int e : edges) {
            int x = dir == BallDir::Out ? g.dst(e) : g.src(e);
            if (!member[x]) boundary.push_back(e);
        }
    }
    std::sort(ball.begin(), ball.end());
    std::sort(boundary.begin(), boundary.end());
    return {std::move(ball), std::move(boundary)};
}

namespace {

struct LddWorker {
    const LddParams& params;
    Rng& rng;
    StepBudget* budget;
    std::vector<char>& removed;      // over top-level edge ids
    LddStats& stats;
    std::vector<int>& participation; // over top-level vertex ids
    int k_samples;

    void run(const Graph& g, const std::vector<int>& orig_edge,
             const std::vector<int>& orig_vertex, int depth) {
        const int n = g.n();
        if (n == 0) return;
        stats.recursive_calls++;
        stats.max_depth = std::max(stats.max_depth, depth);
        for (int v : orig_vertex) ++participation[v];

        const Weight d_quarter = params.diameter / 4;
        const Weight d_half = params.diameter / 2;
        BallScratch scratch(n);

        // Tight-graph certificate: if one vertex sees the whole graph within
        // D/8 both ways, every D/4 ball is V, so every vertex is heavy, no
        // ball is carved, and the clean-up check passes; the outcome is the
        // empty set with certainty and the sampling can be skipped.
        if (static_cast<int>(
                grow_ball(g, 0, params.diameter / 8, BallDir::Out, nullptr, scratch, budget)
                    .size()) == n &&
            static_cast<int>(
                grow_ball(g, 0, params.diameter / 8, BallDir::In, nullptr, scratch, budget)
                    .size()) == n)
            return;

        // Phase 1: mark every vertex in-light, out-light, or heavy by sampling
        // k vertices and inverting ball membership (duplicates counted).
        std::vector<int> cnt_in(static_cast<size_t>(n), 0);
        std::vector<int> cnt_out(static_cast<size_t>(n), 0);
        for (int i = 0; i < k_samples; ++i) {
            int s = static_cast<int>(rng.next_below(static_cast<uint64_t>(n)));
            // u in Ball_out(s, D/4) <=> s in Ball_in(u, D/4)
            for (int u : grow_ball(g, s, d_quarter, BallDir::Out, nullptr, scratch, budget))
                ++cnt_in[u];
            for (int u : grow_ball(g, s, d_quarter, BallDir::In, nullptr, scratch, budget))
                ++cnt_out[u];
        }
        enum : char { kHeavy = 0, kInLight = 1, kOutLight = 2 };
        std::vector<char> mark(static_cast<size_t>(n), kHeavy);
        for (int v = 0; v < n; ++v) {
            if (10LL * cnt_in[v] <= 6LL * k_samples)
                mark[v] = kInLight;
            else if (10LL * cnt_out[v] <= 6LL * k_samples)
                mark[v] = kOutLight;
        }

        // Phase 2: carve geometric-radius balls around light vertices in
        // ascending id order until none remain.
        Weight w_max = g.max_weight();
        Weight r_max = static_cast<Weight>(n) * (w_max > 0 ? w_max : 0) + 1;
        GeometricParam p = ball_radius_param(params.global_n, params.diameter, params.p_numerator);

        std::vector<char> alive(static_cast<size_t>(n), 1);
        int alive_count = n;
        std::vector<char> member(static_cast<size_t>(n), 0);
        std::vector<int> local(static_cast<size_t>(n), -1);

        auto shred_alive = [&]() {
            for (int e = 0; e < g.m(); ++e)
                if (alive[g.src(e)] && alive[g.dst(e)]) removed[orig_edge[e]] = 1;
            ++stats.premature_terminations;
        };

        for (int v = 0; v < n; ++v) {
            if (!alive[v] || mark[v] == kHeavy) continue;
            BallDir dir = mark[v] == kInLight ? BallDir::In : BallDir::Out;
            Weight radius = sample_geometric(rng, p, r_max);

            std::vector<int> ball = grow_ball(g, v, radius, dir, &alive, scratch, budget);
            if (4 * radius > params.diameter ||
                10LL * static_cast<long long>(ball.size()) > 7LL * alive_count) {
                shred_alive();
                return;
            }

            for (int u : ball) member[u] = 1;
            for (int u : ball) {
                auto edges = dir == BallDir::Out ? g.out_edges(u) : g.in_edges(u);
                for (int e : edges) {
                    int x = dir == BallDir::Out ? g.dst(e) : g.src(e);
                    if (alive[x] && !member[x]) {
                        removed[orig_edge[e]] = 1;
                        ++stats.boundary_edges;
                    }
                }
            }

            // Recurse on the carved ball, then delete it from this graph.
            // The induced subgraph is built from the members' own adjacency
            // so carving costs degree-sum, not m, per ball.
            assert(10LL * static_cast<long long>(ball.size()) <= 7LL * alive_count);
            std::vector<int> members = ball;
            std::sort(members.begin(), members.end());
            for (size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<int>(i);
            std::vector<int> sub_src, sub_dst, sub_orig_vertex, sub_orig_edge;
            std::vector<Weight> sub_w;
            sub_orig_vertex.reserve(members.size());
            for (int u : members) sub_orig_vertex.push_back(orig_vertex[u]);
            for (int u : members) {
                for (int e : g.out_edges(u)) {
                    int x = g.dst(e);
                    if (local[x] == -1) continue;
                    sub_src.push_back(local[u]);
                    sub_dst.push_back(local[x]);
                    sub_w.push_back(g.weight(e));
                    sub_orig_edge.push_back(orig_edge[e]);
                }
            }
            Graph sub(static_cast<int>(members.size()), std::move(sub_src), std::move(sub_dst),
                      std::move(sub_w));
            run(sub, sub_orig_edge, sub_orig_vertex, depth + 1);

            for (int u : ball) {
                member[u] = 0;
                local[u] = -1;
                alive[u] = 0;
            }
            alive_count -= static_cast<int>(ball.size());
        }

        // Clean up: survivors must sit within distance D/2 of one of them, in
        // both directions, measured in this call's initial graph.
        if (alive_count == 0) return;
        int v0 = 0;
        while (!alive[v0]) ++v0;
        std::vector<char> cover(static_cast<size_t>(n), 0);
        for (int u : grow_ball(g, v0, d_half, BallDir::Out, nullptr, scratch, budget)) cover[u] = 1;
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            if (alive[u] && !cover[u]) ok = false;
        if (ok) {
            std::fill(cover.begin(), cover.end(), 0);
            for (int u : grow_ball(g, v0, d_half, BallDir::In, nullptr, scratch, budget))
                cover[u] = 1;
            for (int u = 0; u < n && ok; ++u)
                if (alive[u] && !cover[u]) ok = false;
        }
        if (!ok) shred_alive();
    }
};

}  // namespace

LddResult low_diam_decomposition(const Graph& g, const LddParams& params, Rng& rng,
                                 StepBudget* budget) {
    if (params.diameter < 1) throw InvalidInput("low_diam_decomposition requires D >= 1");
    if (g.has_negative_edge())
        throw NegativeWeightPresent("low_diam_decomposition requires nonnegative weights");

    LddResult result;
    std::vector<char> removed(static_cast<size_t>(g.m()), 0);
    std::vector<int> participation(static_cast<size_t>(g.n()), 0);

    int k = static_cast<int>(
        std::ceil(params.c_sample * std::log(static_cast<double>(std::max(params.global_n, 2)))));
    if (k < 1) k = 1;

    LddWorker worker{params, rng, budget, removed, result.stats, participation, k};
    std::vector<int> ids_v(static_cast<size_t>(g.n()));
    std::vector<int> ids_e(static_cast<size_t>(g.m()));
    for (int v = 0; v < g.n(); ++v) ids_v[v] = v;
    for (int e = 0; e < g.m(); ++e) ids_e[e] = e;
    worker.run(g, ids_e, ids_v, 0);

    for (int e = 0; e < g.m(); ++e)
        if (removed[e]) result.removed.push_back(e);
    for (int v = 0; v < g.n(); ++v)
        result.stats.max_vertex_participation =
            std::max(result.stats.max_vertex_participation, participation[v]);
    return result;
}

}  // namespace nwsp
