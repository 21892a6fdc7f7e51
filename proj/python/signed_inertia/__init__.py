"""Exact Laplacian inertia of weighted signed graphs."""

from ._core import (
    BudgetExceeded,
    Graph,
    ParseError,
    PreconditionError,
    build_lattice_witness,
    dot,
    gamma_t,
    max_flexibility,
    mixed_triangle,
    negative_join,
    run_cli,
    scale_negative,
    vertex_count_capacity,
)

__all__ = [
    "BudgetExceeded",
    "Graph",
    "ParseError",
    "PreconditionError",
    "build_lattice_witness",
    "dot",
    "gamma_t",
    "max_flexibility",
    "mixed_triangle",
    "negative_join",
    "run_cli",
    "scale_negative",
    "vertex_count_capacity",
]
