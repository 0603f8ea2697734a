"""Immutable simple graphs over dense integer ids, plus DIMACS ``.col`` I/O.

Vertex sets are handled in two forms: frozensets at the public surface and
plain ``int`` bitmasks (bit ``v`` set iff vertex ``v`` is a member) in the
hot paths.  ``to_mask`` / ``from_mask`` convert between them.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def from_mask(mask: int) -> frozenset[int]:
    return frozenset(iter_bits(mask))


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def popcount(mask: int) -> int:
    return bin(mask).count("1")


class DimacsError(ValueError):
    """Raised for malformed DIMACS input; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    The graph never changes after construction; subproblems refer to it
    through vertex sets instead of copying adjacency.
    """

    __slots__ = ("n", "m", "adj", "nbr")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()) -> None:
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        nbr = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            nbr[u] |= 1 << v
            nbr[v] |= 1 << u
        self.n = n
        self.nbr: tuple[int, ...] = tuple(nbr)
        self.adj: tuple[frozenset[int], ...] = tuple(from_mask(b) for b in nbr)
        self.m = sum(popcount(b) for b in nbr) // 2

    @classmethod
    def from_neighbor_masks(cls, masks: Sequence[int]) -> Graph:
        n = len(masks)
        return cls(n, ((u, v) for u in range(n) for v in iter_bits(masks[u]) if u < v))

    @property
    def all_vertices(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.nbr[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.nbr[u] >> (u + 1) << (u + 1))]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.nbr == other.nbr

    def __hash__(self) -> int:
        return hash(self.nbr)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def components_of_mask(g: Graph, mask: int) -> list[int]:
    """Connected components of ``G(mask)`` as bitmasks, ordered by minimum member."""
    nbr = g.nbr
    out = []
    rest = mask
    while rest:
        seed = rest & -rest
        comp = seed
        frontier = seed
        while frontier:
            grow = 0
            for v in iter_bits(frontier):
                grow |= nbr[v]
            frontier = grow & rest & ~comp
            comp |= frontier
        out.append(comp)
        rest &= ~comp
    return out


def is_connected_mask(g: Graph, mask: int) -> bool:
    if not mask:
        return True
    comps = components_of_mask(g, mask)
    return len(comps) == 1


def neighborhood_of_mask(g: Graph, mask: int) -> int:
    """Union of the open neighborhoods of the vertices in ``mask``."""
    out = 0
    for v in iter_bits(mask):
        out |= g.nbr[v]
    return out


def induced_components(g: Graph, s: Iterable[int]) -> list[frozenset[int]]:
    """Partition ``s`` into the vertex sets of the connected components of ``G(s)``.

    Components are listed by increasing minimum member id.
    """
    return [from_mask(c) for c in components_of_mask(g, to_mask(s))]


def dominates(g: Graph, a: Iterable[int], b: Iterable[int]) -> bool:
    """True iff every vertex of ``b`` has at least one neighbor in ``a``."""
    amask = to_mask(a)
    return all(g.nbr[v] & amask for v in b)


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    """Relabelled copy of ``G(vertices)``; vertex ``vertices[i]`` becomes ``i``."""
    index = {v: i for i, v in enumerate(vertices)}
    edges = [(index[u], index[v]) for u in vertices for v in g.adj[u] if v in index and u < v]
    return Graph(len(vertices), edges)


def parse_dimacs(text: str) -> Graph:
    """Parse DIMACS ``.col`` text (``p edge n m`` header, 1-based ``e u v`` lines).

    Duplicate and reversed edges collapse to one; the ``m`` in the header is
    not enforced because many published files count both directions.
    """
    n = None
    edges: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise DimacsError("duplicate problem line", lineno)
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise DimacsError(f"malformed problem line {line!r}", lineno)
            try:
                n = int(parts[2])
                int(parts[3])
            except ValueError:
                raise DimacsError(f"non-integer size in {line!r}", lineno) from None
            if n < 0:
                raise DimacsError("negative vertex count", lineno)
        elif parts[0] == "e":
            if n is None:
                raise DimacsError("edge before problem line", lineno)
            if len(parts) != 3:
                raise DimacsError(f"malformed edge line {line!r}", lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise DimacsError(f"non-integer vertex in {line!r}", lineno) from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise DimacsError(f"vertex id out of range in {line!r}", lineno)
            if u == v:
                raise DimacsError(f"self-loop at vertex {u}", lineno)
            edges.add((min(u, v) - 1, max(u, v) - 1))
        else:
            raise DimacsError(f"unrecognised line {line!r}", lineno)
    if n is None:
        raise DimacsError("missing problem line")
    return Graph(n, sorted(edges))


def to_dimacs(g: Graph, comments: Iterable[str] = ()) -> str:
    lines = [f"c {c}" for c in comments]
    lines.append(f"p edge {g.n} {g.m}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
