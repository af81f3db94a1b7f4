from ._nwsp import (
    NwspError,
    bellman_ford,
    dijkstra,
    generate,
    low_diam_decomposition,
    parse_dimacs,
    solve,
    verify_tree,
    write_dimacs,
)

__all__ = [
    "NwspError",
    "bellman_ford",
    "dijkstra",
    "generate",
    "low_diam_decomposition",
    "parse_dimacs",
    "solve",
    "verify_tree",
    "write_dimacs",
]
