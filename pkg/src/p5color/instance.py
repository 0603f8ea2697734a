"""Restricted list-coloring subproblems.

An :class:`Instance` is an immutable snapshot: the shared graph, the set of
still-uncolored ("live") vertices, one color list per live vertex and the
colors already fixed.  Colors are positive integers; a color list is an
``int`` bitmask with bit ``c`` set iff color ``c`` is allowed.

Assignments propagate eagerly: the color leaves every live neighbor's
list, and any list that shrinks to one color is assigned in turn.  So a
live vertex always has at least two colors available.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .graph import Graph, iter_bits, popcount


def colorset(colors: Iterable[int]) -> int:
    mask = 0
    for c in colors:
        if c < 1:
            raise ValueError(f"colors are positive integers, got {c}")
        mask |= 1 << c
    return mask


def colors_of(mask: int) -> tuple[int, ...]:
    return tuple(iter_bits(mask))


def full_colorset(k: int) -> int:
    return ((1 << k) - 1) << 1


class Instance:
    __slots__ = ("graph", "live", "lists", "colors")

    def __init__(self, graph: Graph, live: int, lists: tuple[int, ...], colors: tuple[int, ...]) -> None:
        self.graph = graph
        self.live = live
        self.lists = lists
        self.colors = colors

    @classmethod
    def from_lists(cls, graph: Graph, lists: Sequence[Iterable[int] | int] | Mapping[int, Iterable[int] | int],
                   vertices: Iterable[int] | None = None) -> Instance | None:
        """Build an instance over ``vertices`` (default: all) from per-vertex lists.

        Lists may be iterables of colors or colorset bitmasks.  Returns None
        when the lists are already contradictory (an empty list, or unit
        propagation empties one).
        """
        verts = range(graph.n) if vertices is None else sorted(set(vertices))
        masks = [0] * graph.n
        live = 0
        for v in verts:
            raw = lists[v]
            masks[v] = raw if isinstance(raw, int) else colorset(raw)
            live |= 1 << v
        if any(not masks[v] for v in verts):
            return None
        forced = [v for v in verts if popcount(masks[v]) == 1]
        return _propagate(graph, live, masks, [0] * graph.n, [(v, masks[v].bit_length() - 1) for v in forced])

    @classmethod
    def uniform(cls, graph: Graph, k: int) -> Instance | None:
        """Plain k-coloring: every vertex gets ``{1..k}``."""
        if k < 1:
            return None if graph.n else cls(graph, 0, (0,) * graph.n, (0,) * graph.n)
        full = full_colorset(k)
        return cls.from_lists(graph, [full] * graph.n)

    @property
    def universe(self) -> int:
        out = 0
        for v in iter_bits(self.live):
            out |= self.lists[v]
        return out

    @property
    def assigned(self) -> dict[int, int]:
        return {v: c for v, c in enumerate(self.colors) if c}

    def is_live(self, v: int) -> bool:
        return bool(self.live >> v & 1)

    def list_of(self, v: int) -> frozenset[int]:
        return frozenset(iter_bits(self.lists[v]))

    def restricted_to(self, mask: int) -> Instance:
        """Fresh sub-instance on ``mask & live`` with the current lists and no assignments."""
        mask &= self.live
        lists = tuple(self.lists[v] if mask >> v & 1 else 0 for v in range(self.graph.n))
        return Instance(self.graph, mask, lists, (0,) * self.graph.n)

    def members(self, fixed: int, colors: int) -> int:
        """Live vertices of ``fixed`` whose current list is exactly ``colors``."""
        lists = self.lists
        out = 0
        for v in iter_bits(fixed & self.live):
            if lists[v] == colors:
                out |= 1 << v
        return out

    def potential(self) -> int:
        """Total list length over live vertices; strictly drops on every branch."""
        return sum(popcount(self.lists[v]) for v in iter_bits(self.live))

    def dump(self) -> str:
        """Text form, one ``v <id> : c1,c2,...`` line per live vertex (1-based ids)."""
        return "".join(f"v {v + 1} : {','.join(map(str, colors_of(self.lists[v])))}\n"
                       for v in iter_bits(self.live))

    def __repr__(self) -> str:
        return f"Instance(live={popcount(self.live)}, universe={colors_of(self.universe)})"


def parse_lists(text: str, n: int) -> dict[int, frozenset[int]]:
    """Inverse of :meth:`Instance.dump`: returns 0-based vertex -> colors."""
    out: dict[int, frozenset[int]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        head, sep, tail = line.partition(":")
        parts = head.split()
        if not sep or len(parts) != 2 or parts[0] != "v":
            raise ValueError(f"line {lineno}: expected 'v <id> : c1,c2,...', got {line!r}")
        v = int(parts[1]) - 1
        if not 0 <= v < n:
            raise ValueError(f"line {lineno}: vertex id {v + 1} out of range")
        colors = [int(c) for c in tail.replace(",", " ").split()]
        if any(c < 1 for c in colors):
            raise ValueError(f"line {lineno}: colors must be positive")
        out[v] = frozenset(colors)
    return out


def _propagate(graph: Graph, live: int, lists: list[int], colors: list[int],
               pending: list[tuple[int, int]]) -> Instance | None:
    nbr = graph.nbr
    while pending:
        v, c = pending.pop()
        if not live >> v & 1:
            if colors[v] != c:
                return None
            continue
        bit = 1 << c
        if not lists[v] & bit:
            return None
        live &= ~(1 << v)
        colors[v] = c
        lists[v] = 0
        touched = nbr[v] & live
        while touched:
            low = touched & -touched
            touched ^= low
            u = low.bit_length() - 1
            lu = lists[u]
            if lu & bit:
                lu ^= bit
                lists[u] = lu
                if not lu:
                    return None
                if not lu & (lu - 1):
                    pending.append((u, lu.bit_length() - 1))
    return Instance(graph, live, tuple(lists), tuple(colors))


def assign(inst: Instance, v: int, c: int) -> Instance | None:
    """Color ``v`` with ``c`` and propagate; None if some list empties."""
    if not inst.is_live(v):
        raise ValueError(f"vertex {v} is not live")
    if not inst.lists[v] >> c & 1:
        raise ValueError(f"color {c} not in the list of vertex {v}")
    return _propagate(inst.graph, inst.live, list(inst.lists), list(inst.colors), [(v, c)])


def assign_many(inst: Instance, pairs: Iterable[tuple[int, int]]) -> Instance | None:
    """Apply several assignments in order; None on any conflict.

    A vertex already colored by propagation is accepted only with the same color.
    """
    lists, colors = list(inst.lists), list(inst.colors)
    live = inst.live
    cur: Instance | None = inst
    for v, c in pairs:
        cur = _propagate(inst.graph, live, lists, colors, [(v, c)])
        if cur is None:
            return None
        live = cur.live
    return cur


def restrict(inst: Instance, v: int, s: int) -> Instance | None:
    """Shrink the list of ``v`` to the colorset ``s``; None when ``s`` is empty."""
    if not inst.is_live(v):
        raise ValueError(f"vertex {v} is not live")
    if s & ~inst.lists[v]:
        raise ValueError("restriction must be a subset of the current list")
    if not s:
        return None
    if not s & (s - 1):
        return assign(inst, v, s.bit_length() - 1)
    lists = list(inst.lists)
    lists[v] = s
    return Instance(inst.graph, inst.live, tuple(lists), inst.colors)


def canonical_key(inst: Instance) -> tuple[int, tuple[int, ...]]:
    """Key shared exactly by the instances equal up to renaming colors.

    Each color is replaced by the set of live vertices that may use it;
    the sorted multiset of those sets determines the lists up to a color
    permutation.
    """
    carriers: dict[int, int] = {}
    lists = inst.lists
    for v in iter_bits(inst.live):
        bit = 1 << v
        for c in iter_bits(lists[v]):
            carriers[c] = carriers.get(c, 0) | bit
    return inst.live, tuple(sorted(carriers.values()))


def partition_by_signature(inst: Instance, witness_vertices: Iterable[int]) -> dict[int, int]:
    """Group live vertices by their exact set of witness neighbors.

    Keys and values are bitmasks (signature -> member vertices).
    """
    wmask = 0
    for w in witness_vertices:
        wmask |= 1 << w
    nbr = inst.graph.nbr
    out: dict[int, int] = {}
    for v in iter_bits(inst.live):
        sig = nbr[v] & wmask
        if not sig:
            raise ValueError(f"live vertex {v} has no neighbor in the witness")
        out[sig] = out.get(sig, 0) | (1 << v)
    return out


def dynamic_partition(inst: Instance, fixed: int) -> dict[int, int]:
    """Group the live vertices of ``fixed`` by their current list (colorset -> vertices)."""
    out: dict[int, int] = {}
    lists = inst.lists
    for v in iter_bits(fixed & inst.live):
        key = lists[v]
        out[key] = out.get(key, 0) | (1 << v)
    return out


def dependent(inst: Instance, a: int, b: int) -> bool:
    """True iff some edge joins ``a`` and ``b`` and its endpoints share a color."""
    nbr, lists = inst.graph.nbr, inst.lists
    for u in iter_bits(a):
        lu = lists[u]
        for v in iter_bits(nbr[u] & b):
            if lu & lists[v]:
                return True
    return False


def check_invariants(inst: Instance) -> list[str]:
    """Return the violated invariants (empty when the instance is consistent)."""
    problems = []
    g = inst.graph
    for v in range(g.n):
        live = inst.is_live(v)
        if live and inst.colors[v]:
            problems.append(f"live vertex {v} also colored")
        if live and popcount(inst.lists[v]) < 2:
            problems.append(f"live vertex {v} has list {colors_of(inst.lists[v])}")
        if inst.colors[v]:
            for u in g.adj[v]:
                if inst.colors[u] == inst.colors[v]:
                    problems.append(f"adjacent {u},{v} share color {inst.colors[v]}")
                if inst.is_live(u) and inst.lists[u] >> inst.colors[v] & 1:
                    problems.append(f"color {inst.colors[v]} of {v} still in list of live {u}")
    return problems
