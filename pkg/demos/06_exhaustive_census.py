"""
Census of small P5-free graphs
==============================

Enumerate every connected labelled P5-free graph on up to six vertices and
tabulate their chromatic numbers, solver against brute force.
"""

import numpy as np

from p5color import color_graph
from p5color.oracle import brute_force_chromatic, connected_p5_free_masks, graph_from_edge_mask


def chromatic_by_solver(g):
    k = 1
    while color_graph(g, k) is None:
        k += 1
    return k


for n in range(1, 7):
    masks = connected_p5_free_masks(n)
    chis = np.array([chromatic_by_solver(graph_from_edge_mask(n, int(m))) for m in masks])
    sample = masks[:: max(1, len(masks) // 200)]
    agree = all(chromatic_by_solver(graph_from_edge_mask(n, int(m))) == brute_force_chromatic(graph_from_edge_mask(n, int(m)))
                for m in sample)
    counts = np.bincount(chis, minlength=n + 1)[1:]
    print(f"n={n}: {len(masks):6d} graphs, chi histogram {counts.tolist()}, brute force agrees on sample: {agree}")
