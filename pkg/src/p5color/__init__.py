"""k-colorability and restricted list coloring of P5-free graphs."""

from .dominating import DominatingWitness, find_clique_exceeding, find_dominating_witness
from .engine import InputNotP5Free, Stats, color_graph, solve, verify_coloring
from .graph import Graph, dominates, induced_components, parse_dimacs, to_dimacs
from .instance import Instance, assign, restrict
from .p5detect import P5Certificate, find_induced_p5, verify_certificate

__all__ = [
    "DominatingWitness",
    "Graph",
    "InputNotP5Free",
    "Instance",
    "P5Certificate",
    "Stats",
    "assign",
    "color_graph",
    "dominates",
    "find_clique_exceeding",
    "find_dominating_witness",
    "find_induced_p5",
    "induced_components",
    "parse_dimacs",
    "restrict",
    "solve",
    "to_dimacs",
    "verify_certificate",
    "verify_coloring",
]
