"""
Perfect graphs with a known answer
==================================

Split graphs and cographs are P5-free and perfect, and the generators know
their chromatic numbers.  Solve at chi (SAT) and chi - 1 (UNSAT) and time it.
"""

import time

import numpy as np

from p5color import Stats, color_graph, verify_coloring
from p5color.oracle import GeneratorSpec, cograph_chromatic, cotree_graph, generate_cotree, generate_split

rows = []
for seed in range(10):
    g, clique = generate_split(GeneratorSpec("split", 100, 0.5, seed))
    tree = generate_cotree(GeneratorSpec("cograph", 40, 0.5, seed))
    for name, graph, chi in (("split", g, len(clique)), ("cograph", cotree_graph(tree, 40), cograph_chromatic(tree))):
        stats = Stats()
        t = time.perf_counter()
        sat = color_graph(graph, chi, stats=stats)
        unsat = color_graph(graph, chi - 1)
        rows.append((name, seed, chi, time.perf_counter() - t, stats.instances))
        assert verify_coloring(graph, None, sat) and unsat is None

times = np.array([r[3] for r in rows])
print(f"{'model':8} {'seed':>4} {'chi':>4} {'seconds':>8} {'instances':>9}")
for name, seed, chi, dt, inst in rows:
    print(f"{name:8} {seed:>4} {chi:>4} {dt:>8.4f} {inst:>9}")
print(f"median {np.median(times):.4f}s, max {times.max():.4f}s")
