"""Induced P5 detection with checkable certificates."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, iter_bits


@dataclass(frozen=True)
class P5Certificate:
    """Five vertices ``path[0] - path[1] - ... - path[4]`` inducing a chordless path."""

    path: tuple[int, int, int, int, int]

    def one_based(self) -> tuple[int, ...]:
        return tuple(v + 1 for v in self.path)


def verify_certificate(g: Graph, c: P5Certificate) -> bool:
    path = tuple(c.path)
    if len(path) != 5 or len(set(path)) != 5:
        return False
    if any(not (0 <= v < g.n) for v in path):
        return False
    for i, j in combinations(range(5), 2):
        if g.has_edge(path[i], path[j]) != (j == i + 1):
            return False
    return True


def find_induced_p5(g: Graph, within: int | None = None) -> P5Certificate | None:
    """Return an induced P5 of ``g`` (restricted to the bitmask ``within``), or None.

    The middle vertex ``c`` and its two non-adjacent neighbors ``b < d`` are
    enumerated; the ends are ``a`` in N(b) and ``e`` in N(d), each missing
    the rest of the path.  The first hit in ascending id order is returned.
    """
    nbr = g.nbr
    scope = g.all_vertices if within is None else within
    for c in iter_bits(scope):
        cbit = 1 << c
        nc = nbr[c] & scope
        far = scope & ~nc & ~cbit
        for b in iter_bits(nc):
            nb = nbr[b]
            ends_b = nb & far
            if not ends_b:
                continue
            for d in iter_bits(nc & ~nb & ~((1 << (b + 1)) - 1)):
                nd = nbr[d]
                a_side = ends_b & ~nd
                if not a_side:
                    continue
                e_side = nd & far & ~nb
                if not e_side:
                    continue
                for a in iter_bits(a_side):
                    free = e_side & ~nbr[a]
                    if free:
                        e = (free & -free).bit_length() - 1
                        return P5Certificate((a, b, c, d, e))
    return None
