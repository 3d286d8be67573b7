"""Polynomial kernel for 3-Leaf Power Deletion."""

from .driver import compress, kernel_size_bound, parse_instance, serialize_instance
from .graph import Graph
from .instance import Instance
from .oracle import GeneratorConfig, exact_solve, generate
from .recognition import (
    Obstruction,
    find_obstruction,
    is_three_leaf_power,
    tree_clique_decomposition,
)

__all__ = [
    "Graph",
    "Instance",
    "Obstruction",
    "GeneratorConfig",
    "compress",
    "exact_solve",
    "find_obstruction",
    "generate",
    "is_three_leaf_power",
    "kernel_size_bound",
    "parse_instance",
    "serialize_instance",
    "tree_clique_decomposition",
]
