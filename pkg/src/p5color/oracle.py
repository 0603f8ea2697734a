"""Ground truth for testing: brute-force list coloring and P5-free graph supplies.

Random graphs come from numpy's PCG64 bit generator seeded with a
64-bit seed, so a (model, n, density, seed, clique_size) tuple always
yields the same graph.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

import numpy as np

from .graph import Graph, iter_bits, to_dimacs
from .instance import colorset
from .p5detect import find_induced_p5

PRNG_NAME = "numpy-PCG64"
MODELS = ("split", "cograph", "rejection")
BRUTE_FORCE_LIMIT = 25
ENUMERATION_LIMIT = 8
REJECTION_LIMIT = 12
REJECTION_ATTEMPTS = 20000


class GeneratorError(ValueError):
    pass


def _list_masks(g: Graph, lists) -> list[int]:
    out = []
    for v in range(g.n):
        raw = lists[v]
        out.append(raw if isinstance(raw, int) else colorset(raw))
    return out


def brute_force_list_color(g: Graph, lists: Sequence | Mapping) -> dict[int, int] | None:
    """Lexicographically first list coloring (vertex order, then color order), or None."""
    if g.n > BRUTE_FORCE_LIMIT:
        raise ValueError(f"brute force limited to n <= {BRUTE_FORCE_LIMIT}, got {g.n}")
    masks = _list_masks(g, lists)
    nbr = g.nbr
    n = g.n
    colors = [0] * n

    def rec(v: int) -> bool:
        if v == n:
            return True
        earlier = nbr[v] & ((1 << v) - 1)
        banned = 0
        for u in iter_bits(earlier):
            banned |= 1 << colors[u]
        for c in iter_bits(masks[v] & ~banned):
            colors[v] = c
            if rec(v + 1):
                return True
        return False

    return dict(enumerate(colors)) if rec(0) else None


def enumerate_solutions(g: Graph, lists: Sequence | Mapping, vertices: Sequence[int] | None = None) -> list[tuple[int, ...]]:
    """Every list coloring of ``G(vertices)``, as color tuples in ``vertices`` order.

    ``vertices`` defaults to all of ``g``; only those vertices' lists are read.
    """
    verts = list(range(g.n)) if vertices is None else sorted(vertices)
    if len(verts) > ENUMERATION_LIMIT:
        raise ValueError(f"enumeration limited to {ENUMERATION_LIMIT} vertices, got {len(verts)}")
    masks = {v: (lists[v] if isinstance(lists[v], int) else colorset(lists[v])) for v in verts}
    pos = {v: i for i, v in enumerate(verts)}
    earlier = [[pos[u] for u in g.adj[v] if u in pos and pos[u] < i] for i, v in enumerate(verts)]
    out: list[tuple[int, ...]] = []
    cur = [0] * len(verts)

    def rec(i: int) -> None:
        if i == len(verts):
            out.append(tuple(cur))
            return
        banned = 0
        for j in earlier[i]:
            banned |= 1 << cur[j]
        for c in iter_bits(masks[verts[i]] & ~banned):
            cur[i] = c
            rec(i + 1)

    rec(0)
    return out


def brute_force_chromatic(g: Graph) -> int:
    k = 0
    while True:
        if brute_force_list_color(g, [range(1, k + 1)] * g.n) is not None:
            return k
        k += 1


# -- cographs -----------------------------------------------------------------

@dataclass(frozen=True)
class Cotree:
    """``kind`` is "leaf" (with ``vertex``), "union" or "join" (with ``children``)."""

    kind: str
    children: tuple[Cotree, ...] = ()
    vertex: int = -1

    def leaves(self) -> list[int]:
        if self.kind == "leaf":
            return [self.vertex]
        return [v for ch in self.children for v in ch.leaves()]


def cotree_graph(tree: Cotree, n: int | None = None) -> Graph:
    edges = []

    def walk(t: Cotree) -> list[int]:
        if t.kind == "leaf":
            return [t.vertex]
        parts = [walk(ch) for ch in t.children]
        if t.kind == "join":
            for i, a in enumerate(parts):
                for b in parts[i + 1:]:
                    edges.extend((u, v) for u in a for v in b)
        return [v for part in parts for v in part]

    verts = walk(tree)
    return Graph(len(verts) if n is None else n, edges)


def cograph_chromatic(tree: Cotree) -> int:
    if tree.kind == "leaf":
        return 1
    values = [cograph_chromatic(ch) for ch in tree.children]
    if tree.kind == "union":
        return max(values)
    if tree.kind == "join":
        return sum(values)
    raise ValueError(f"unknown cotree node {tree.kind!r}")


# -- generators ---------------------------------------------------------------

@dataclass(frozen=True)
class GeneratorSpec:
    model: str
    n: int
    density: float = 0.5
    seed: int = 0
    clique_size: int | None = None

    def __post_init__(self) -> None:
        if self.model not in MODELS:
            raise GeneratorError(f"unknown model {self.model!r}; expected one of {MODELS}")
        if self.n < 1:
            raise GeneratorError("n must be at least 1")
        if not 0.0 <= self.density <= 1.0:
            raise GeneratorError("density must lie in [0, 1]")
        if not 0 <= self.seed < 2 ** 64:
            raise GeneratorError("seed must be a 64-bit unsigned integer")
        if self.clique_size is not None and not 1 <= self.clique_size <= self.n:
            raise GeneratorError("clique_size must lie in [1, n]")

    def header(self) -> list[str]:
        parts = [f"model={self.model}", f"n={self.n}", f"density={self.density}", f"seed={self.seed}"]
        if self.clique_size is not None:
            parts.append(f"clique_size={self.clique_size}")
        return ["generated by p5color", " ".join(parts), f"prng={PRNG_NAME}"]


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def generate_split(spec: GeneratorSpec) -> tuple[Graph, list[int]]:
    """Split graph and its clique side.

    Every independent vertex misses at least one clique vertex, so the clique
    number is exactly the clique side's size.
    """
    rng = _rng(spec.seed)
    n = spec.n
    if spec.clique_size is None:
        size = int(rng.integers(max(1, n // 5), max(1, n // 2) + 1))
    else:
        size = spec.clique_size
    perm = [int(v) for v in rng.permutation(n)]
    clique, rest = sorted(perm[:size]), perm[size:]
    edges = [(u, v) for i, u in enumerate(clique) for v in clique[i + 1:]]
    for v in rest:
        hits = [u for u, r in zip(clique, rng.random(size)) if r < spec.density]
        if len(hits) == size:
            hits.pop(int(rng.integers(size)))
        edges.extend((u, v) for u in hits)
    return Graph(n, edges), clique


def generate_cotree(spec: GeneratorSpec) -> Cotree:
    """Random cotree: repeatedly merge two random subtrees by join (prob. density) or union."""
    rng = _rng(spec.seed)
    labels = [int(v) for v in rng.permutation(spec.n)]
    forest = [Cotree("leaf", vertex=v) for v in labels]
    while len(forest) > 1:
        i, j = sorted(int(x) for x in rng.choice(len(forest), size=2, replace=False))
        kind = "join" if rng.random() < spec.density else "union"
        b = forest.pop(j)
        a = forest.pop(i)
        kids = []
        for t in (a, b):
            kids.extend(t.children if t.kind == kind else (t,))
        forest.append(Cotree(kind, tuple(kids)))
    return forest[0]


def generate_rejection(spec: GeneratorSpec) -> Graph:
    if spec.n > REJECTION_LIMIT:
        raise GeneratorError(f"rejection model limited to n <= {REJECTION_LIMIT}")
    rng = _rng(spec.seed)
    pairs = list(itertools.combinations(range(spec.n), 2))
    for _ in range(REJECTION_ATTEMPTS):
        draws = rng.random(len(pairs))
        g = Graph(spec.n, [p for p, r in zip(pairs, draws) if r < spec.density])
        if find_induced_p5(g) is None:
            return g
    raise GeneratorError(f"no P5-free sample in {REJECTION_ATTEMPTS} attempts")


def generate(spec: GeneratorSpec) -> Graph:
    if spec.model == "split":
        return generate_split(spec)[0]
    if spec.model == "cograph":
        return cotree_graph(generate_cotree(spec), spec.n)
    return generate_rejection(spec)


def generate_dimacs(spec: GeneratorSpec) -> str:
    return to_dimacs(generate(spec), spec.header())


def random_graph(n: int, density: float, rng: np.random.Generator) -> Graph:
    pairs = list(itertools.combinations(range(n), 2))
    draws = rng.random(len(pairs))
    return Graph(n, [p for p, r in zip(pairs, draws) if r < density])


# -- exhaustive small graphs ----------------------------------------------------

def edge_pairs(n: int) -> list[tuple[int, int]]:
    """Upper-triangle pairs in the bit order used by :func:`graph_from_edge_mask`."""
    return list(itertools.combinations(range(n), 2))


def graph_from_edge_mask(n: int, mask: int) -> Graph:
    return Graph(n, [p for i, p in enumerate(edge_pairs(n)) if mask >> i & 1])


def _p5_patterns() -> np.ndarray:
    sub = edge_pairs(5)
    table = np.zeros(1 << len(sub), dtype=bool)
    for perm in itertools.permutations(range(5)):
        bits = 0
        for a, b in zip(perm, perm[1:]):
            bits |= 1 << sub.index((min(a, b), max(a, b)))
        table[bits] = True
    return table


def connected_p5_free_masks(n: int) -> np.ndarray:
    """Edge masks of every labelled connected P5-free graph on ``n`` vertices.

    A full sweep over all ``2**(n(n-1)/2)`` upper-triangle masks, vectorised:
    connectivity by repeated frontier expansion, P5s by looking up the
    induced pattern on each 5-subset.
    """
    if not 1 <= n <= 7:
        raise ValueError("exhaustive enumeration supports 1 <= n <= 7")
    pairs = edge_pairs(n)
    index = {p: i for i, p in enumerate(pairs)}
    masks = np.arange(1 << len(pairs), dtype=np.uint32)
    adj = [np.zeros(len(masks), dtype=np.uint8) for _ in range(n)]
    for (i, j), b in index.items():
        bit = ((masks >> b) & 1).astype(np.uint8)
        adj[i] |= bit << j
        adj[j] |= bit << i
    reach = np.ones(len(masks), dtype=np.uint8)
    for _ in range(n):
        grown = reach.copy()
        for v in range(n):
            hit = ((reach >> v) & 1).astype(bool)
            grown[hit] |= adj[v][hit]
        reach = grown
    keep = reach == (1 << n) - 1
    if n >= 5:
        table = _p5_patterns()
        sub = edge_pairs(5)
        for five in itertools.combinations(range(n), 5):
            pattern = np.zeros(len(masks), dtype=np.uint32)
            for k, (a, b) in enumerate(sub):
                pattern |= ((masks >> index[(five[a], five[b])]) & 1) << k
            keep &= ~table[pattern]
    return masks[keep]


def connected_p5_free_graphs(max_n: int = 7) -> Iterator[Graph]:
    for n in range(1, max_n + 1):
        for mask in connected_p5_free_masks(n):
            yield graph_from_edge_mask(n, int(mask))


def generate_substitution(n: int, seed: int, max_piece: int = 6) -> Graph:
    """P5-free graph built by substituting small P5-free graphs into each other.

    P5 has no non-trivial module, so substitution never creates one; this
    reaches graphs (C5 blow-ups and the like) that are neither split graphs
    nor cographs.
    """
    rng = _rng(seed)

    def piece(size: int) -> Graph:
        while True:
            g = random_graph(size, float(rng.random()), rng)
            if find_induced_p5(g) is None:
                return g

    def build(size: int) -> Graph:
        if size <= max_piece and (size <= 2 or rng.random() < 0.5):
            return piece(size)
        h = int(rng.integers(2, min(max_piece, size) + 1))
        cuts = sorted(int(x) for x in rng.choice(np.arange(1, size), size=h - 1, replace=False))
        sizes = [b - a for a, b in zip([0] + cuts, cuts + [size])]
        base = piece(h)
        parts = [build(s) for s in sizes]
        offsets = [sum(sizes[:i]) for i in range(h)]
        edges = []
        for part, off in zip(parts, offsets):
            edges.extend((u + off, v + off) for u, v in part.edges())
        for i, j in base.edges():
            edges.extend((offsets[i] + a, offsets[j] + b) for a in range(sizes[i]) for b in range(sizes[j]))
        return Graph(size, edges)

    g = build(n)
    perm = [int(v) for v in rng.permutation(n)]
    return Graph(n, [(perm[u], perm[v]) for u, v in g.edges()])
