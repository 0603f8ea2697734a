import itertools

import numpy as np
import pytest

from p5color.graph import Graph


def path_graph(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n):
    return Graph(n, itertools.combinations(range(n), 2))


def star_graph(leaves):
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def random_graph(n, p, rng):
    return Graph(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])


# Oracles below deliberately avoid the library's bitmask code paths.

def bfs_components(g, s):
    s = set(s)
    seen, out = set(), []
    for start in sorted(s):
        if start in seen:
            continue
        comp, todo = {start}, [start]
        while todo:
            v = todo.pop()
            for u in g.adj[v]:
                if u in s and u not in comp:
                    comp.add(u)
                    todo.append(u)
        seen |= comp
        out.append(frozenset(comp))
    return out


def is_induced_p5(g, five):
    a, b, c, d, e = five
    want = {frozenset(p) for p in ((a, b), (b, c), (c, d), (d, e))}
    have = {frozenset(p) for p in itertools.combinations(five, 2) if g.has_edge(*p)}
    return len(set(five)) == 5 and have == want


def has_p5_bruteforce(g):
    for five in itertools.permutations(range(g.n), 5):
        if five[0] < five[4] and is_induced_p5(g, five):
            return True
    return False


def max_clique_bruteforce(g):
    best = 0
    for r in range(1, g.n + 1):
        if any(all(g.has_edge(u, v) for u, v in itertools.combinations(c, 2))
               for c in itertools.combinations(range(g.n), r)):
            best = r
        else:
            break
    return best


def all_list_colorings(g, lists):
    """Every coloring respecting ``lists`` (sequences of colors), by itertools.product."""
    out = []
    for cols in itertools.product(*[sorted(l) for l in lists]):
        if all(cols[u] != cols[v] for u, v in g.edges()):
            out.append(cols)
    return out


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
