"""
Dominating cliques and dominating P3s
=====================================

Every connected P5-free graph is dominated by a clique or by an induced
P3.  The solver colors that witness first.
"""

from p5color import Graph, find_dominating_witness
from p5color.oracle import GeneratorSpec, generate

star = Graph(5, [(0, i) for i in range(1, 5)])
c5 = Graph(5, [(i, (i + 1) % 5) for i in range(5)])

print("star:", find_dominating_witness(star, range(5), 3))
print("C5:  ", find_dominating_witness(c5, range(5), 3))

# a cograph: the witness is a largest clique, one vertex per joined part
g = generate(GeneratorSpec("cograph", 20, 0.6, seed=3))
w = find_dominating_witness(g, range(g.n), g.n)
print(f"cograph n=20: {w.kind} of size {len(w.vertices)}: {w.vertices}")
print("valid:", w.is_valid(g, range(g.n)))
