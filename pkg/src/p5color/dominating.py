"""Dominating cliques and dominating P3s of connected P5-free graphs.

Every connected P5-free graph has a dominating clique or a dominating
induced P3; the solver colors such a witness first, so that every other
vertex loses at least one color.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import Graph, from_mask, iter_bits, popcount, to_mask

CLIQUE = "clique"
PATH_P3 = "p3"


@dataclass(frozen=True)
class DominatingWitness:
    kind: str
    vertices: tuple[int, ...]

    @property
    def mask(self) -> int:
        return to_mask(self.vertices)

    def is_valid(self, g: Graph, target: Iterable[int]) -> bool:
        """Check the shape invariants and domination of ``target``."""
        vs = self.vertices
        if len(set(vs)) != len(vs) or not vs:
            return False
        if self.kind == CLIQUE:
            if any(not g.has_edge(u, v) for i, u in enumerate(vs) for v in vs[i + 1:]):
                return False
        elif self.kind == PATH_P3:
            if len(vs) != 3:
                return False
            a, b, c = vs
            if not (g.has_edge(a, b) and g.has_edge(b, c)) or g.has_edge(a, c):
                return False
        else:
            return False
        wmask = self.mask
        return all(g.nbr[v] & wmask for v in target if not wmask >> v & 1)


def _max_clique_search(nbr, cand: int, need: int) -> int:
    # branch and bound with greedy colour classes as the upper bound
    if need <= 0:
        return -1
    if popcount(cand) < need:
        return 0
    order = []
    uncolored = cand
    color = 0
    while uncolored:
        color += 1
        avail = uncolored
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            avail &= ~nbr[v] & ~low
            uncolored &= ~low
            order.append((v, color))
    if color < need:
        return 0
    for v, col in reversed(order):
        if col < need:
            return 0
        bit = 1 << v
        if need == 1:
            return bit
        found = _max_clique_search(nbr, cand & nbr[v], need - 1)
        if found:
            return found | bit
        cand &= ~bit
    return 0


def clique_of_size(g: Graph, mask: int, size: int) -> int:
    """Bitmask of some clique with ``size`` vertices inside ``mask``; 0 if none."""
    if size <= 0:
        return 0
    found = _max_clique_search(g.nbr, mask, size)
    return found if found > 0 else 0


def clique_number(g: Graph, mask: int | None = None) -> int:
    mask = g.all_vertices if mask is None else mask
    best = 0
    while clique_of_size(g, mask, best + 1):
        best += 1
    return best


def find_clique_exceeding(g: Graph, s: Iterable[int] | int, bound: int) -> frozenset[int] | None:
    """A clique of ``bound + 1`` vertices inside ``s``, or None when ``G(s)`` has none."""
    if bound < 1:
        raise ValueError("bound must be at least 1")
    mask = s if isinstance(s, int) else to_mask(s)
    found = clique_of_size(g, mask, bound + 1)
    return from_mask(found) if found else None


def _dominating_clique(g: Graph, target: int, bound: int) -> int:
    nbr = g.nbr
    closed = [nbr[v] | (1 << v) for v in range(g.n)]

    def search(clique: int, cand: int, undominated: int, size: int) -> int:
        if not undominated:
            return clique
        if size == bound:
            return 0
        # branch on the undominated vertex with the fewest ways to be dominated
        best_opts = -1
        best_count = 1 << 30
        for u in iter_bits(undominated):
            opts = closed[u] & cand
            cnt = popcount(opts)
            if cnt < best_count:
                best_opts, best_count = opts, cnt
                if cnt <= 1:
                    break
        if not best_opts:
            return 0
        ranked = sorted(iter_bits(best_opts), key=lambda w: (-popcount(closed[w] & undominated), w))
        for w in ranked:
            found = search(clique | (1 << w), cand & nbr[w], undominated & ~closed[w], size + 1)
            if found:
                return found
        return 0

    return search(0, target, target, 0)


def _extend_clique(g: Graph, clique: int, target: int, bound: int) -> int:
    # grow to a largest clique containing ``clique``: fewer colors stay free afterwards
    nbr = g.nbr
    cand = target & ~clique
    for v in iter_bits(clique):
        cand &= nbr[v]
    room = min(bound - popcount(clique), popcount(cand))
    best = 0
    lo = 1
    while lo <= room:
        found = _max_clique_search(nbr, cand, lo)
        if found <= 0:
            break
        best = found
        lo = popcount(found) + 1
    return clique | best


def _dominating_p3(g: Graph, target: int) -> tuple[int, int, int] | None:
    nbr = g.nbr
    for b in iter_bits(target):
        nb = nbr[b] & target
        cover_b = nb | (1 << b)
        for a in iter_bits(nb):
            cover_ab = cover_b | (nbr[a] & target)
            for c in iter_bits(nb & ~nbr[a] & ~((1 << (a + 1)) - 1)):
                if (cover_ab | nbr[c]) & target == target:
                    return (a, b, c)
    return None


def find_dominating_witness_mask(g: Graph, target: int, bound: int) -> DominatingWitness | None:
    if bound < 1:
        raise ValueError("bound must be at least 1")
    clique = _extend_clique(g, 0, target, bound)
    closed = clique
    for v in iter_bits(clique):
        closed |= g.nbr[v]
    if target & ~closed:
        clique = _dominating_clique(g, target, bound)
    if clique:
        clique = _extend_clique(g, clique, target, bound)
        return DominatingWitness(CLIQUE, tuple(iter_bits(clique)))
    path = _dominating_p3(g, target)
    if path is not None:
        return DominatingWitness(PATH_P3, path)
    return None


def find_dominating_witness(g: Graph, s: Iterable[int] | int, bound: int) -> DominatingWitness | None:
    """Dominating clique of at most ``bound`` vertices, else a dominating induced P3.

    A clique is preferred: a largest clique of at most ``bound`` vertices
    when it dominates, else a dominating clique grown to a largest clique
    containing it.  None means neither exists,
    which for a connected ``G(s)`` without a clique larger than ``bound``
    implies an induced P5.
    """
    mask = s if isinstance(s, int) else to_mask(s)
    return find_dominating_witness_mask(g, mask, bound)
