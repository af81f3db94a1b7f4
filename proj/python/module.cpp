#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nwsp/io.hpp"
#include "nwsp/ldd.hpp"
#include "nwsp/solver.hpp"

namespace py = pybind11;
using namespace nwsp;

namespace {

// 128-bit weights cross the boundary as python ints via their decimal form.
py::int_ to_py(Weight w) { return py::int_(py::str(weight_to_string(w))); }

Weight from_py(py::int_ v) { return weight_from_string(py::str(v).cast<std::string>()); }

Graph graph_from_edges(int n, const std::vector<std::tuple<int, int, py::int_>>& edges) {
    std::vector<Edge> es;
    es.reserve(edges.size());
    for (const auto& [u, v, w] : edges) es.push_back({u, v, from_py(w)});
    return build_graph(n, es);
}

py::dict tree_to_dict(const ShortestPathTree& t) {
    py::dict out;
    out["kind"] = "tree";
    out["source"] = t.source;
    py::list dist, parent;
    for (size_t v = 0; v < t.dist.size(); ++v) {
        if (t.reached[v])
            dist.append(to_py(t.dist[v]));
        else
            dist.append(py::none());
        parent.append(t.parent_edge[v] == ShortestPathTree::kNoParent
                          ? py::object(py::none())
                          : py::object(py::int_(t.parent_edge[v])));
    }
    out["dist"] = dist;
    out["parent_edge"] = parent;
    return out;
}

py::dict cycle_to_dict(const NegativeCycle& c) {
    py::dict out;
    out["kind"] = "cycle";
    out["vertices"] = c.vertices;
    out["edges"] = c.edges;
    out["weight"] = to_py(c.weight);
    return out;
}

py::dict result_to_dict(const SsspResult& res) {
    py::dict out = res.is_tree() ? tree_to_dict(res.tree()) : cycle_to_dict(res.cycle());
    out["steps"] = res.diag.steps_total;
    out["attempts"] = res.diag.mc_attempts;
    out["restarts"] = res.diag.restarts;
    return out;
}

}  // namespace

PYBIND11_MODULE(_nwsp, m) {
    m.doc() = "single-source shortest paths with negative integer edge weights";

    py::register_exception<Error>(m, "NwspError");

    m.def(
        "solve",
        [](int n, const std::vector<std::tuple<int, int, py::int_>>& edges, int source,
           uint64_t seed, uint64_t budget_factor, int attempts, int max_restarts,
           double c_sample) {
            SolveConfig config;
            config.seed = seed;
            config.constants.budget_factor = budget_factor;
            config.constants.mc_attempts_factor = attempts;
            config.constants.max_restarts = max_restarts;
            config.constants.c_sample = c_sample;
            return result_to_dict(solve(graph_from_edges(n, edges), source, config));
        },
        py::arg("n"), py::arg("edges"), py::arg("source") = 0, py::arg("seed") = 0,
        py::arg("budget_factor") = 64, py::arg("attempts") = 3, py::arg("max_restarts") = 100,
        py::arg("c_sample") = 4.0,
        "Shortest path tree from `source` or a negative cycle, as a dict.");

    m.def(
        "bellman_ford",
        [](int n, const std::vector<std::tuple<int, int, py::int_>>& edges, int source) {
            Graph g = graph_from_edges(n, edges);
            auto r = bellman_ford(g, source);
            if (std::holds_alternative<ShortestPathTree>(r))
                return tree_to_dict(std::get<ShortestPathTree>(r));
            return cycle_to_dict(std::get<NegativeCycle>(r));
        },
        py::arg("n"), py::arg("edges"), py::arg("source") = 0,
        "Reference O(mn) solver (the oracle).");

    m.def(
        "dijkstra",
        [](int n, const std::vector<std::tuple<int, int, py::int_>>& edges, int source) {
            return tree_to_dict(dijkstra(graph_from_edges(n, edges), source));
        },
        py::arg("n"), py::arg("edges"), py::arg("source") = 0);

    m.def(
        "low_diam_decomposition",
        [](int n, const std::vector<std::tuple<int, int, py::int_>>& edges, py::int_ diameter,
           uint64_t seed, double c_sample) {
            Graph g = graph_from_edges(n, edges);
            LddParams params;
            params.diameter = from_py(diameter);
            params.global_n = std::max(n, 2);
            params.c_sample = c_sample;
            Rng rng(seed);
            LddResult res = low_diam_decomposition(g, params, rng);
            py::dict out;
            out["removed"] = res.removed;
            out["boundary_edges"] = res.stats.boundary_edges;
            out["premature_terminations"] = res.stats.premature_terminations;
            return out;
        },
        py::arg("n"), py::arg("edges"), py::arg("diameter"), py::arg("seed") = 0,
        py::arg("c_sample") = 4.0);

    m.def(
        "generate",
        [](int n, int m, py::int_ wmin, py::int_ wmax, const std::string& mode, uint64_t seed) {
            GeneratorSpec spec;
            spec.n = n;
            spec.m = m;
            spec.wmin = from_py(wmin);
            spec.wmax = from_py(wmax);
            spec.seed = seed;
            if (mode == "random")
                spec.mode = GenMode::RawRandom;
            else if (mode == "potential")
                spec.mode = GenMode::HiddenPotential;
            else if (mode == "cycle")
                spec.mode = GenMode::PlantedCycle;
            else
                throw InvalidInput("unknown mode: " + mode);
            Graph g = generate(spec);
            std::vector<std::tuple<int, int, py::int_>> edges;
            edges.reserve(static_cast<size_t>(g.m()));
            for (int e = 0; e < g.m(); ++e)
                edges.emplace_back(g.src(e), g.dst(e), to_py(g.weight(e)));
            return edges;
        },
        py::arg("n"), py::arg("m"), py::arg("wmin"), py::arg("wmax"), py::arg("mode") = "random",
        py::arg("seed") = 0, "Deterministic instance generator; returns an edge list.");

    m.def(
        "verify_tree",
        [](int n, const std::vector<std::tuple<int, int, py::int_>>& edges, int source,
           const std::vector<py::object>& dist, const std::vector<py::object>& parent_edge) {
            Graph g = graph_from_edges(n, edges);
            ShortestPathTree t(n, source);
            for (int v = 0; v < n; ++v) {
                if (dist[v].is_none()) {
                    t.reached[v] = 0;
                    continue;
                }
                t.reached[v] = 1;
                t.dist[v] = from_py(py::int_(dist[v]));
                t.parent_edge[v] =
                    parent_edge[v].is_none() ? ShortestPathTree::kNoParent
                                             : parent_edge[v].cast<int>();
            }
            auto bad = check_tree_certificate(g, t);
            return bad ? py::object(py::str(*bad)) : py::object(py::none());
        },
        py::arg("n"), py::arg("edges"), py::arg("source"), py::arg("dist"),
        py::arg("parent_edge"),
        "None when the tree passes the relaxation certificate, else the violation.");

    m.def("parse_dimacs", [](const std::string& text) {
        ParsedInstance inst = parse_dimacs(text);
        std::vector<std::tuple<int, int, py::int_>> edges;
        for (int e = 0; e < inst.graph.m(); ++e)
            edges.emplace_back(inst.graph.src(e), inst.graph.dst(e), to_py(inst.graph.weight(e)));
        py::dict out;
        out["n"] = inst.graph.n();
        out["edges"] = edges;
        out["source"] = inst.source ? py::object(py::int_(*inst.source)) : py::object(py::none());
        return out;
    });

    m.def("write_dimacs",
          [](int n, const std::vector<std::tuple<int, int, py::int_>>& edges) {
              return write_dimacs(graph_from_edges(n, edges));
          });
}
