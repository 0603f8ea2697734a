"""
Coloring a small P5-free graph
==============================

Build a graph, ask for k-colorings, then restrict the colors per vertex.
"""

from p5color import Graph, Instance, color_graph, solve, verify_coloring

# the 5-cycle is P5-free (every 5 vertices induce the cycle itself)
c5 = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])

for k in (2, 3):
    coloring = color_graph(c5, k)
    print(f"k={k}:", "UNSAT" if coloring is None else coloring)

# list coloring: vertex 0 is pinned to color 3, vertex 2 may only use 1 or 3
lists = [[3], [1, 2, 3], [1, 3], [1, 2, 3], [1, 2]]
coloring = solve(Instance.from_lists(c5, lists))
print("with lists:", coloring)
print("respects lists and edges:", verify_coloring(c5, lists, coloring))

# an impossible list assignment
print("too tight:", solve(Instance.from_lists(c5, [[1, 2]] * 5)))
