#include "nwsp/solver.hpp"

#include <algorithm>
#include <queue>

namespace nwsp {

namespace {

using HeapEntry = std::pair<Weight, int>;
using MinHeap = std::priority_queue<HeapEntry, std::vector<HeapEntry>, std::greater<HeapEntry>>;

int ceil_log2(Weight x) {
    int k = 0;
    Weight p = 1;
    while (p < x) {
        p <<= 1;
        ++k;
    }
    return k;
}

Weight ceil_div(Weight a, Weight b) {
    return a >= 0 ? (a + b - 1) / b : a / b;
}

uint64_t saturating_mul(uint64_t a, uint64_t b) {
    if (b != 0 && a > UINT64_MAX / b) return UINT64_MAX;
    return a * b;
}

// Most negative magnitude of w_phi over a scaled graph, floored at 0.
Weight neg_magnitude(const Graph& g, const PriceFunction& phi) {
    Weight m = 0;
    for (int e = 0; e < g.m(); ++e) {
        Weight w = g.weight(e) + phi[g.src(e)] - phi[g.dst(e)];
        if (w < m) m = w;
    }
    return -m;
}

// Core of sp_main: on the 2n-scaled graph, repeatedly call scale_down with B
// halving until every reweighted edge is >= -1. Rounds whose guarantee is
// already met are skipped by driving B from the measured magnitude directly.
// Returns phi over the scaled weights.
PriceFunction scaling_loop(const Graph& gbar, ExecutionContext& ctx, const PriceFunction* warm) {
    const int n = gbar.n();
    PriceFunction phi(n);
    if (warm) {
        if (warm->size() != n) throw InvalidInput("warm-start potential has wrong length");
        phi = *warm;
    }

    Weight m0 = neg_magnitude(gbar, phi);
    int cap = ceil_log2(m0 + 2) + 8;
    for (int round = 0; round < cap; ++round) {
        Weight m = neg_magnitude(gbar, phi);
        if (m <= 1) return phi;
        Weight b = (m + 1) / 2;
        Graph cur = apply_price(gbar, phi);
        PriceFunction psi = scale_down({cur, /*delta=*/n, b}, ctx);
        phi = phi.plus(psi);
    }
    throw InternalError("scaling loop failed to converge");
}

// Dijkstra over `routing` weights while summing `shadow` weights along the
// tree; distances reported in shadow units. Routing weights must be >= 0.
ShortestPathTree dijkstra_with_shadow(const Graph& routing, std::span<const Weight> shadow, int s,
                                      StepBudget& budget) {
    const int n = routing.n();
    ShortestPathTree t(n, s);
    std::vector<Weight> d(static_cast<size_t>(n), kNoDist);
    std::vector<Weight> sum(static_cast<size_t>(n), 0);
    std::vector<char> done(static_cast<size_t>(n), 0);
    MinHeap q;
    d[s] = 0;
    q.push({0, s});
    budget.tick();
    while (!q.empty()) {
        budget.check();
        auto [dv, v] = q.top();
        q.pop();
        budget.tick();
        if (done[v] || dv != d[v]) continue;
        done[v] = 1;
        for (int e : routing.out_edges(v)) {
            budget.tick();
            int x = routing.dst(e);
            Weight nd = dv + routing.weight(e);
            if (nd < d[x]) {
                d[x] = nd;
                sum[x] = sum[v] + shadow[e];
                t.parent_edge[x] = e;
                q.push({nd, x});
                budget.tick();
            }
        }
    }
    for (int v = 0; v < n; ++v) {
        if (d[v] != kNoDist) {
            t.reached[v] = 1;
            t.dist[v] = sum[v];
        }
    }
    t.dist[s] = 0;
    t.parent_edge[s] = ShortestPathTree::kNoParent;
    return t;
}

// Rounded graph G*: scaled reweighted edges plus one. Must be nonnegative on
// every terminating run.
Graph make_gstar(const Graph& gbar, const PriceFunction& phi) {
    std::vector<Weight> w(static_cast<size_t>(gbar.m()));
    for (int e = 0; e < gbar.m(); ++e) {
        w[e] = gbar.weight(e) + phi[gbar.src(e)] - phi[gbar.dst(e)] + 1;
        if (w[e] < 0) throw InternalError("rounded graph has a negative edge");
    }
    return gbar.with_weights(std::move(w));
}

}  // namespace

std::optional<std::string> check_tree_certificate(const Graph& g, const ShortestPathTree& t) {
    const int n = g.n();
    if (t.source < 0 || t.source >= n || static_cast<int>(t.dist.size()) != n ||
        static_cast<int>(t.parent_edge.size()) != n || static_cast<int>(t.reached.size()) != n)
        return "malformed tree";
    if (!t.reachable(t.source) || t.dist[t.source] != 0) return "dist(source) != 0";
    if (t.parent_edge[t.source] != ShortestPathTree::kNoParent) return "source has a parent";

    // Parent edges exist, are tight, and chain to the source acyclically.
    std::vector<int> depth(static_cast<size_t>(n), -1);
    depth[t.source] = 0;
    for (int v = 0; v < n; ++v) {
        if (!t.reachable(v)) {
            if (t.parent_edge[v] != ShortestPathTree::kNoParent)
                return "unreachable vertex has a parent edge";
            continue;
        }
        if (v == t.source) continue;
        int e = t.parent_edge[v];
        if (e < 0 || e >= g.m() || g.dst(e) != v) return "bad parent edge at vertex";
        int u = g.src(e);
        if (!t.reachable(u)) return "parent vertex not reached";
        if (t.dist[u] + g.weight(e) != t.dist[v]) return "parent edge not tight";
    }
    // Walk parents with memoized depths; a cycle would never reach the source.
    for (int v = 0; v < n; ++v) {
        if (!t.reachable(v) || depth[v] != -1) continue;
        std::vector<int> path;
        int cur = v;
        while (depth[cur] == -1) {
            path.push_back(cur);
            if (static_cast<int>(path.size()) > n) return "parent pointers contain a cycle";
            cur = g.src(t.parent_edge[cur]);
        }
        int d = depth[cur];
        for (auto it = path.rbegin(); it != path.rend(); ++it) depth[*it] = ++d;
    }
    // Every edge out of a reached vertex is relaxed; unreached vertices have
    // no reached in-neighbor.
    for (int e = 0; e < g.m(); ++e) {
        int u = g.src(e), v = g.dst(e);
        if (!t.reachable(u)) continue;
        if (!t.reachable(v)) return "edge from reached to unreached vertex";
        if (t.dist[u] + g.weight(e) < t.dist[v]) return "triangle inequality violated";
    }
    return std::nullopt;
}

std::optional<std::string> check_negative_cycle(const Graph& g, const NegativeCycle& c) {
    if (c.vertices.empty() || c.vertices.size() != c.edges.size()) return "malformed cycle";
    Weight sum = 0;
    for (size_t i = 0; i < c.edges.size(); ++i) {
        int e = c.edges[i];
        if (e < 0 || e >= g.m()) return "edge id out of range";
        int from = c.vertices[i];
        int to = c.vertices[(i + 1) % c.vertices.size()];
        if (g.src(e) != from || g.dst(e) != to) return "cycle does not chain";
        sum += g.weight(e);
    }
    if (sum != c.weight) return "stored weight differs from recomputed sum";
    if (sum >= 0) return "cycle weight is not negative";
    return std::nullopt;
}

std::pair<ShortestPathTree, PriceFunction> sp_main(const Graph& g, int s, ExecutionContext& ctx) {
    const int n = g.n();
    if (s < 0 || s >= n) throw InvalidInput("sp_main: source out of range");
    for (int e = 0; e < g.m(); ++e)
        if (g.weight(e) < -1) throw InvalidInput("sp_main requires w(e) >= -1");

    Graph gbar = scale_weights(g, 2 * std::max(n, 1));
    PriceFunction phi = scaling_loop(gbar, ctx, nullptr);
    Graph gstar = make_gstar(gbar, phi);

    ShortestPathTree t = dijkstra_with_shadow(gstar, g.weights(), s, ctx.budget);
    if (auto bad = check_tree_certificate(g, t))
        throw InternalError("sp_main produced an uncertified tree: " + *bad);
    return {std::move(t), std::move(phi)};
}

PriceFunction make_nonneg_potentials(const Graph& g, ExecutionContext& ctx,
                                     const PriceFunction* warm_start) {
    const int n = g.n();
    if (n == 0) return PriceFunction(0);
    const Weight scale = 2 * static_cast<Weight>(n);

    Graph gbar = scale_weights(g, scale);
    PriceFunction warm_scaled;
    const PriceFunction* warm = nullptr;
    if (warm_start) {
        warm_scaled = PriceFunction(n);
        for (int v = 0; v < n; ++v) warm_scaled[v] = (*warm_start)[v] * scale;
        warm = &warm_scaled;
    }
    PriceFunction phibar = scaling_loop(gbar, ctx, warm);
    Graph gstar = make_gstar(gbar, phibar);

    // Dummy-source Dijkstra over G*: every vertex enters the queue with key
    // (K - phibar) >= 0, exactly an added source with nonnegative edges; the
    // tree path to v is re-summed under the scaled weights as it is built.
    Weight k_shift = 0;
    for (int v = 0; v < n; ++v) k_shift = std::max(k_shift, phibar[v]);

    std::vector<Weight> d(static_cast<size_t>(n));
    std::vector<Weight> sum(static_cast<size_t>(n), 0);
    std::vector<char> done(static_cast<size_t>(n), 0);
    MinHeap q;
    for (int v = 0; v < n; ++v) {
        d[v] = k_shift - phibar[v];
        q.push({d[v], v});
        ctx.budget.tick();
    }
    while (!q.empty()) {
        ctx.budget.check();
        auto [dv, v] = q.top();
        q.pop();
        ctx.budget.tick();
        if (done[v] || dv != d[v]) continue;
        done[v] = 1;
        for (int e : gstar.out_edges(v)) {
            ctx.budget.tick();
            int x = gstar.dst(e);
            Weight nd = dv + gstar.weight(e);
            if (nd < d[x]) {
                d[x] = nd;
                sum[x] = sum[v] + gbar.weight(e);
                q.push({nd, x});
                ctx.budget.tick();
            }
        }
    }

    PriceFunction phi(n);
    for (int v = 0; v < n; ++v) {
        if (sum[v] > 0) throw InternalError("dummy-source distance above zero");
        if (sum[v] % scale != 0) throw InternalError("dummy-source distance not a multiple of 2n");
        phi[v] = sum[v] / scale;
    }
    for (int e = 0; e < g.m(); ++e)
        if (g.weight(e) + phi[g.src(e)] - phi[g.dst(e)] < 0)
            throw InternalError("make_nonneg_potentials postcondition violated");
    return phi;
}

PriceFunction goldberg_solve(const Graph& g, ExecutionContext& ctx) {
    const int n = g.n();
    const Weight w_mag = max_neg_magnitude(g);
    const int t = ceil_log2(w_mag);

    PriceFunction phi(n);
    for (int i = 0; i <= t; ++i) {
        const Weight div = Weight(1) << (t - i);
        std::vector<Weight> w(static_cast<size_t>(g.m()));
        for (int e = 0; e < g.m(); ++e) {
            w[e] = ceil_div(g.weight(e), div) + 2 * phi[g.src(e)] - 2 * phi[g.dst(e)];
            if (w[e] < -1) throw InternalError("goldberg level weight below -1");
        }
        Graph level = g.with_weights(std::move(w));
        PriceFunction psi = make_nonneg_potentials(level, ctx);
        for (int v = 0; v < n; ++v) phi[v] = 2 * phi[v] + psi[v];
    }
    for (int e = 0; e < g.m(); ++e)
        if (g.weight(e) + phi[g.src(e)] - phi[g.dst(e)] < 0)
            throw InternalError("goldberg_solve postcondition violated");
    return phi;
}

namespace {

struct AttemptSchedule {
    int attempts;
    uint64_t full;
    uint64_t floor;

    uint64_t budget_for(int attempt) const {  // attempt in [1, attempts]
        int shift = 3 * (attempt - 1);
        if (shift >= 63 || floor > (full >> shift)) return full;
        return floor << shift;
    }
};

AttemptSchedule make_schedule(const Graph& g, const ExecutionContext& ctx) {
    uint64_t size = static_cast<uint64_t>(g.m()) + static_cast<uint64_t>(g.n()) + 1;
    uint64_t lg = static_cast<uint64_t>(ceil_log2(std::max(g.n(), 2)));
    uint64_t lg5 = saturating_mul(saturating_mul(lg * lg, lg * lg), lg);
    AttemptSchedule s;
    s.full = saturating_mul(ctx.constants.budget_factor, saturating_mul(size, lg5));
    s.floor = std::min(s.full, saturating_mul(64, saturating_mul(size, lg * lg)));
    s.attempts = std::max(1, ctx.constants.mc_attempts_factor * static_cast<int>(lg));
    return s;
}

// Shared attempt loop for the Monte-Carlo wrappers. Runs `body` under
// escalating budgets; rethrows certified cycles as an immediate error.
template <typename Body>
auto run_attempts(const Graph& g, ExecutionContext& ctx, Body&& body) {
    AttemptSchedule sched = make_schedule(g, ctx);
    for (int a = 1; a <= sched.attempts; ++a) {
        ctx.budget = StepBudget(sched.budget_for(a));
        ++ctx.diag.mc_attempts;
        try {
            auto out = body();
            ctx.diag.steps_total += ctx.budget.used;
            return out;
        } catch (const NegativeCycleCertified&) {
            ctx.diag.steps_total += ctx.budget.used;
            throw MonteCarloError("negative cycle certified during scaling");
        } catch (const BudgetExhausted&) {
            ctx.diag.steps_total += ctx.budget.used;
        }
    }
    throw MonteCarloError("all scaling attempts exhausted their budgets");
}

}  // namespace

PriceFunction mc_potentials(const Graph& g, ExecutionContext& ctx,
                            const PriceFunction* warm_start) {
    return run_attempts(g, ctx,
                        [&] { return make_nonneg_potentials(g, ctx, warm_start); });
}

ShortestPathTree sp_monte_carlo(const Graph& g, int s, ExecutionContext& ctx) {
    if (s < 0 || s >= g.n()) throw InvalidInput("sp_monte_carlo: source out of range");
    return run_attempts(g, ctx, [&] {
        PriceFunction phi = make_nonneg_potentials(g, ctx);
        ShortestPathTree t = dijkstra_with_shadow(apply_price(g, phi), g.weights(), s, ctx.budget);
        if (auto bad = check_tree_certificate(g, t))
            throw InternalError("sp_monte_carlo produced an uncertified tree: " + *bad);
        return t;
    });
}

namespace {

struct ThreshResult {
    Weight b = 0;
    std::optional<PriceFunction> phi_at_b;  // potentials for H^{+B}
};

// min_positive_b: a proven lower bound on any positive threshold (n^2 for
// n^3-scaled inputs); lets the search skip the range (0, min_positive_b) as
// soon as one probe errors.
ThreshResult find_thresh_ex(const Graph& h, ExecutionContext& ctx, Weight min_positive_b = 1) {
    Weight lo = 0;
    Weight hi = max_neg_magnitude(h);
    std::optional<PriceFunction> last_phi;
    Weight last_q = -1;
    std::optional<PriceFunction> warm;

    while (lo < hi) {
        Weight q = (lo + hi) / 2;
        try {
            PriceFunction phi =
                mc_potentials(shift_all_weights(h, q), ctx, warm ? &*warm : nullptr);
            warm = phi;
            last_phi = std::move(phi);
            last_q = q;
            hi = q;
        } catch (const MonteCarloError&) {
            lo = std::max(q + 1, std::min(min_positive_b, hi));
        }
    }

    ThreshResult out;
    out.b = lo;
    if (last_q == lo && last_phi)
        out.phi_at_b = std::move(last_phi);
    else if (lo == max_neg_magnitude(h))
        out.phi_at_b = PriceFunction(h.n());  // all weights already >= 0 there
    return out;
}

}  // namespace

Weight find_thresh(const Graph& h, int s, ExecutionContext& ctx) {
    if (s < 0 || s >= h.n()) throw InvalidInput("find_thresh: source out of range");
    return find_thresh_ex(h, ctx).b;
}

std::optional<NegativeCycle> find_any_cycle(const Graph& g) {
    const int n = g.n();
    enum : char { kWhite = 0, kGray = 1, kBlack = 2 };
    std::vector<char> color(static_cast<size_t>(n), kWhite);
    std::vector<int> enter_edge(static_cast<size_t>(n), -1);
    std::vector<std::pair<int, int>> frames;  // (vertex, out-edge position)

    for (int root = 0; root < n; ++root) {
        if (color[root] != kWhite) continue;
        color[root] = kGray;
        frames.push_back({root, 0});
        while (!frames.empty()) {
            auto& [v, i] = frames.back();
            auto out = g.out_edges(v);
            if (i == static_cast<int>(out.size())) {
                color[v] = kBlack;
                frames.pop_back();
                continue;
            }
            int e = out[i++];
            int x = g.dst(e);
            if (color[x] == kGray) {
                // Back edge closes a cycle along the gray path from x to v.
                NegativeCycle c;
                std::vector<int> vs, es;
                int cur = v;
                es.push_back(e);
                while (cur != x) {
                    vs.push_back(cur);
                    es.push_back(enter_edge[cur]);
                    cur = g.src(enter_edge[cur]);
                }
                vs.push_back(x);
                std::reverse(vs.begin(), vs.end());
                std::reverse(es.begin(), es.end());
                c.vertices = std::move(vs);
                c.edges = std::move(es);
                for (int ce : c.edges) c.weight += g.weight(ce);
                return c;
            }
            if (color[x] == kWhite) {
                color[x] = kGray;
                enter_edge[x] = e;
                frames.push_back({x, 0});
            }
        }
    }
    return std::nullopt;
}

namespace {

// Extraction step of the Las-Vegas route: once the threshold B > 0 is known,
// reweight (G*n^3)^{+B} to nonnegative, keep edges of weight <= n, and any
// cycle found there should be negative in G. Returns std::nullopt when a
// verification fails (caller restarts).
std::optional<NegativeCycle> try_extract_cycle(const Graph& g, const Graph& gprime, Weight b,
                                               ExecutionContext& ctx,
                                               const PriceFunction* phi_hint) {
    Graph shifted = shift_all_weights(gprime, b);
    PriceFunction phi;
    if (phi_hint) {
        phi = *phi_hint;
    } else {
        try {
            phi = mc_potentials(shifted, ctx);
        } catch (const MonteCarloError&) {
            return std::nullopt;
        }
    }
    Graph gnn = apply_price(shifted, phi);
    if (gnn.has_negative_edge()) return std::nullopt;

    const Weight n = g.n();
    std::vector<char> drop(static_cast<size_t>(gnn.m()), 0);
    for (int e = 0; e < gnn.m(); ++e)
        if (gnn.weight(e) > n) drop[e] = 1;
    EdgeSubgraph small = remove_edges(gnn, drop);

    std::optional<NegativeCycle> c = find_any_cycle(small.graph);
    if (!c) return std::nullopt;

    NegativeCycle out;
    out.vertices = c->vertices;
    out.edges.reserve(c->edges.size());
    for (int e : c->edges) out.edges.push_back(small.orig_edge[e]);
    for (int e : out.edges) out.weight += g.weight(e);
    if (out.weight >= 0) return std::nullopt;
    return out;
}

ShortestPathTree map_tree_through_gadget(const Graph& g_in, const GadgetMapping& gm,
                                         const Graph& gr, const ShortestPathTree& tr, int s_in) {
    ShortestPathTree t(g_in.n(), s_in);
    for (int v = 0; v < g_in.n(); ++v) {
        int rv = gm.rep[v];
        if (!tr.reachable(rv)) {
            t.reached[v] = 0;
            continue;
        }
        t.reached[v] = 1;
        t.dist[v] = tr.dist[rv];
        if (v == s_in) continue;
        // Walk gadget edges up the tree until the original entering edge.
        int cur = rv;
        int e = tr.parent_edge[cur];
        while (e != ShortestPathTree::kNoParent && gm.edge_map[e] == GadgetMapping::kGadgetEdge) {
            cur = gr.src(e);
            e = tr.parent_edge[cur];
        }
        if (e == ShortestPathTree::kNoParent)
            throw InternalError("gadget tree walk found no entering original edge");
        t.parent_edge[v] = gm.edge_map[e];
    }
    t.dist[s_in] = 0;
    t.parent_edge[s_in] = ShortestPathTree::kNoParent;
    if (auto bad = check_tree_certificate(g_in, t))
        throw InternalError("mapped tree failed its certificate: " + *bad);
    return t;
}

NegativeCycle map_cycle_through_gadget(const Graph& g_in, const GadgetMapping& gm,
                                       const NegativeCycle& c) {
    NegativeCycle out;
    for (int e : c.edges) {
        int orig = gm.edge_map[e];
        if (orig == GadgetMapping::kGadgetEdge) continue;
        out.edges.push_back(orig);
        out.vertices.push_back(g_in.src(orig));
        out.weight += g_in.weight(orig);
    }
    if (auto bad = check_negative_cycle(g_in, out))
        throw InternalError("mapped cycle failed verification: " + *bad);
    return out;
}

}  // namespace

SsspResult sp_las_vegas(const Graph& g, int s, ExecutionContext& ctx) {
    if (s < 0 || s >= g.n()) throw InvalidInput("sp_las_vegas: source out of range");
    for (int e = 0; e < g.m(); ++e)
        if (g.weight(e) < -1) throw InvalidInput("sp_las_vegas requires w(e) >= -1");

    const Weight n = std::max(g.n(), 1);
    Graph gprime = scale_weights(g, n * n * n);

    for (int round = 0; round <= ctx.constants.max_restarts; ++round) {
        if (round > 0) ++ctx.diag.restarts;
        ThreshResult th = find_thresh_ex(gprime, ctx, n * n);
        if (th.b == 0) {
            try {
                ShortestPathTree t = sp_monte_carlo(g, s, ctx);
                SsspResult res{std::move(t), ctx.diag};
                return res;
            } catch (const MonteCarloError&) {
                continue;  // restart
            }
        }
        // A correct positive threshold of an n^3-scaled graph is >= n^2;
        // anything smaller means a probe went bad, so start over.
        if (th.b < n * n) continue;
        std::optional<NegativeCycle> c =
            try_extract_cycle(g, gprime, th.b, ctx, th.phi_at_b ? &*th.phi_at_b : nullptr);
        if (!c) continue;  // restart
        if (auto bad = check_negative_cycle(g, *c))
            throw InternalError("las-vegas cycle failed verification: " + *bad);
        return SsspResult{std::move(*c), ctx.diag};
    }
    throw InternalError("sp_las_vegas exceeded the restart cap");
}

SsspResult solve(const Graph& g_in, int s, const SolveConfig& config) {
    if (s < 0 || s >= g_in.n()) throw InvalidInput("solve: source out of range");

    ExecutionContext ctx(config.seed);
    ctx.constants = config.constants;

    // Already nonnegative: plain Dijkstra is the whole job.
    if (!g_in.has_negative_edge()) {
        ShortestPathTree t = dijkstra(g_in, s);
        return SsspResult{std::move(t), ctx.diag};
    }

    auto [gr, gm] = reduce_out_degree(g_in);
    ctx.global_n = std::max(gr.n(), 2);
    const int rep_s = gm.rep[s];
    const Weight n = std::max(gr.n(), 1);
    Graph gprime = scale_weights(gr, n * n * n);

    for (int round = 0; round <= ctx.constants.max_restarts; ++round) {
        if (round > 0) ++ctx.diag.restarts;

        // Happy path: certify the absence of negative cycles by producing a
        // verified potential, then one Dijkstra gives the tree.
        PriceFunction phi;
        bool have_phi = false;
        try {
            phi = mc_potentials(gr, ctx);
            have_phi = true;
        } catch (const MonteCarloError&) {
        }

        if (!have_phi) {
            // Threshold gate: decides negative cycle vs unlucky scaling runs.
            ThreshResult th = find_thresh_ex(gprime, ctx, n * n);
            if (th.b > 0) {
                if (th.b < n * n) continue;  // a probe went bad; start over
                std::optional<NegativeCycle> c = try_extract_cycle(
                    gr, gprime, th.b, ctx, th.phi_at_b ? &*th.phi_at_b : nullptr);
                if (!c) continue;  // restart
                NegativeCycle mapped = map_cycle_through_gadget(g_in, gm, *c);
                return SsspResult{std::move(mapped), ctx.diag};
            }
            // B = 0: the q = 0 probe succeeded on the scaled graph, and its
            // potential routes a Dijkstra whose tree paths are shortest in
            // the unscaled graph as well.
            if (!th.phi_at_b) continue;  // restart
            ctx.budget = StepBudget();
            ShortestPathTree tr = dijkstra_with_shadow(apply_price(gprime, *th.phi_at_b),
                                                       gr.weights(), rep_s, ctx.budget);
            if (auto bad = check_tree_certificate(gr, tr))
                throw InternalError("threshold-gate tree failed its certificate: " + *bad);
            ShortestPathTree t = map_tree_through_gadget(g_in, gm, gr, tr, s);
            return SsspResult{std::move(t), ctx.diag};
        }

        ctx.budget = StepBudget();
        ShortestPathTree tr =
            dijkstra_with_shadow(apply_price(gr, phi), gr.weights(), rep_s, ctx.budget);
        if (auto bad = check_tree_certificate(gr, tr))
            throw InternalError("solve tree failed its certificate: " + *bad);
        ShortestPathTree t = map_tree_through_gadget(g_in, gm, gr, tr, s);
        return SsspResult{std::move(t), ctx.diag};
    }
    throw InternalError("solve exceeded the restart cap");
}

}  // namespace nwsp
