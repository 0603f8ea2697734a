"""Polynomial-time list coloring of P5-free graphs for a fixed number of colors.

Outline of one level of the search (a connected live set):

1. Find a dominating clique (at most ``|universe|`` vertices) or a dominating
   induced P3, and branch over its proper colorings.  Every other vertex now
   misses at least one color, and vertices are grouped into *fixed sets* by
   their exact neighborhood in the witness.
2. Inside a fixed set, vertices with the same current list form a *dynamic
   set*.  For every pair of fixed sets, dependencies (an edge whose ends
   share an available color) between their dynamic sets are removed by
   branching, visiting dynamic pairs from the largest lists down.
3. With no dependency left across fixed sets, each fixed set is solved on
   its own with a strictly smaller color universe.

Every branching step replaces an instance by children whose solution sets
cover it exactly, so the answer is correct on any input; the P5-free
hypothesis is what keeps the branching polynomial.  When a structural fact
that only holds in P5-free graphs fails, an induced P5 is extracted and
:class:`InputNotP5Free` is raised.
"""

from __future__ import annotations

from collections import Counter, deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Mapping, Sequence

from .dominating import CLIQUE, DominatingWitness, clique_of_size, find_dominating_witness_mask
from .graph import Graph, components_of_mask, iter_bits, lowest, neighborhood_of_mask, popcount
from .instance import (
    Instance,
    assign,
    assign_many,
    canonical_key,
    check_invariants,
    colors_of,
    colorset,
    partition_by_signature,
    restrict,
)
from .p5detect import P5Certificate, find_induced_p5, verify_certificate

Observer = Callable[[str, Instance, list], None]


class InputNotP5Free(Exception):
    """The input graph contains an induced P5; ``certificate`` exhibits one."""

    def __init__(self, certificate: P5Certificate, reason: str = "") -> None:
        self.certificate = certificate
        self.reason = reason
        msg = f"graph contains an induced P5 {certificate.path}"
        super().__init__(f"{msg} ({reason})" if reason else msg)

    def __reduce__(self):
        return InputNotP5Free, (self.certificate, self.reason)


class StructuralError(RuntimeError):
    """An internal guarantee failed without an induced P5 to blame."""


@dataclass
class Stats:
    instances: int = 0
    expansions: Counter = field(default_factory=Counter)
    clique_cuts: int = 0
    leaves: int = 0
    max_depth: int = 0
    pair_resolutions: int = 0
    max_pair_rounds: int = 0
    exceptional_checks: int = 0
    pivot_searches: int = 0
    memo_hits: int = 0
    violations: Counter = field(default_factory=Counter)

    def merge(self, other: Stats) -> None:
        self.instances += other.instances
        self.expansions.update(other.expansions)
        self.clique_cuts += other.clique_cuts
        self.leaves += other.leaves
        self.max_depth = max(self.max_depth, other.max_depth)
        self.pair_resolutions += other.pair_resolutions
        self.max_pair_rounds = max(self.max_pair_rounds, other.max_pair_rounds)
        self.exceptional_checks += other.exceptional_checks
        self.pivot_searches += other.pivot_searches
        self.memo_hits += other.memo_hits
        self.violations.update(other.violations)

    def as_lines(self) -> list[str]:
        lines = [
            f"instances={self.instances}",
            f"leaves={self.leaves}",
            f"max_depth={self.max_depth}",
            f"clique_cuts={self.clique_cuts}",
            f"pair_resolutions={self.pair_resolutions}",
            f"max_pair_rounds={self.max_pair_rounds}",
            f"exceptional_checks={self.exceptional_checks}",
            f"pivot_searches={self.pivot_searches}",
            f"memo_hits={self.memo_hits}",
        ]
        for rule in ("witness", "exceptional", "pivot", "leftover"):
            lines.append(f"expand_{rule}={self.expansions.get(rule, 0)}")
        lines.append(f"violations={sum(self.violations.values())}")
        return lines


@dataclass(frozen=True)
class HView:
    """The pair graph: active components of G(P) and G(Q) plus the pivot."""

    pivot: int
    p_active: int
    q_active: int
    comps_p: tuple[int, ...]
    comps_q: tuple[int, ...]

    @property
    def vertices(self) -> int:
        return self.p_active | self.q_active | (1 << self.pivot)


class Engine:
    """One solver run over a fixed graph.

    ``observer(rule, parent, children)`` is called after every branching
    step with the materialised children; ``validate`` re-checks instance
    invariants on every child.  Both exist for testing.

    Sub-instances proven uncolorable are remembered up to a renaming of the
    colors (see :func:`canonical_key`), so siblings that differ only by a
    color permutation are not searched twice.  ``memo_limit=0`` disables it.
    """

    def __init__(self, graph: Graph, *, observer: Observer | None = None, stats: Stats | None = None,
                 validate: bool = False, memo_limit: int = 1 << 18) -> None:
        self.graph = graph
        self.memo_limit = memo_limit
        self.observer = observer
        self.stats = stats if stats is not None else Stats()
        self.validate = validate
        self._unsat: set[tuple[int, tuple[int, ...]]] = set()

    def _known_unsat(self, inst: Instance) -> bool:
        if self.memo_limit and canonical_key(inst) in self._unsat:
            self.stats.memo_hits += 1
            return True
        return False

    def _record_unsat(self, inst: Instance) -> None:
        if not self.memo_limit:
            return
        if len(self._unsat) >= self.memo_limit:
            self._unsat.clear()
        self._unsat.add(canonical_key(inst))

    # -- top level ---------------------------------------------------------

    def solve(self, inst: Instance) -> dict[int, int] | None:
        sol = self._solve(inst.restricted_to(inst.live), 1)
        if sol is None:
            return None
        out = inst.assigned
        out.update(sol)
        return out

    def _solve(self, inst: Instance, depth: int) -> dict[int, int] | None:
        out: dict[int, int] = {}
        comps = components_of_mask(self.graph, inst.live)
        for comp in comps:
            sub = inst if len(comps) == 1 else inst.restricted_to(comp)
            sol = self._solve_connected(sub, depth)
            if sol is None:
                return None
            out.update(sol)
        return out

    def _solve_connected(self, inst: Instance, depth: int) -> dict[int, int] | None:
        if self._known_unsat(inst):
            return None
        prepared = self._prepare(inst, depth)
        if prepared is None:
            return None
        witness, bound = prepared
        for child in self._expand("witness", inst, self.witness_children(inst, witness)):
            sol = self.solve_witness_child(child, witness, bound, depth)
            if sol is not None:
                return sol
        self._record_unsat(inst)
        return None

    def _prepare(self, inst: Instance, depth: int):
        """Clique cut and witness for a connected live set: None (UNSAT) or (witness, bound)."""
        g = self.graph
        self.stats.max_depth = max(self.stats.max_depth, depth)
        bound = popcount(inst.universe)
        if clique_of_size(g, inst.live, bound + 1):
            self.stats.clique_cuts += 1
            return None
        witness = find_dominating_witness_mask(g, inst.live, bound)
        if witness is None:
            self.stats.violations["no_witness"] += 1
            raise InputNotP5Free(self._certificate(inst.live), "no dominating clique or P3")
        return witness, bound

    def solve_witness_child(self, child: Instance, witness: DominatingWitness, bound: int,
                            depth: int) -> dict[int, int] | None:
        """Resolve dependencies, then recurse into the fixed sets, for one witness coloring."""
        if self._known_unsat(child):
            return None
        fixed = fixed_sets(child, witness)
        for leaf in self.resolve_all(child, fixed):
            self.stats.leaves += 1
            sol = self._solve_fixed_sets(leaf, fixed, bound, depth)
            if sol is not None:
                return sol
        self._record_unsat(child)
        return None

    def _solve_fixed_sets(self, leaf: Instance, fixed, bound: int, depth: int) -> dict[int, int] | None:
        out = leaf.assigned
        for _, members in fixed:
            part = members & leaf.live
            if not part:
                continue
            sub = leaf.restricted_to(part)
            if popcount(sub.universe) >= bound:
                self.stats.violations["universe"] += 1
                raise StructuralError("fixed set universe did not shrink")
            sol = self._solve(sub, depth + 1)
            if sol is None:
                return None
            out.update(sol)
        return out

    # -- expansions --------------------------------------------------------

    def _expand(self, rule: str, parent: Instance, children: Iterable[Instance]) -> Iterator[Instance]:
        self.stats.expansions[rule] += 1
        if self.observer is not None or self.validate:
            children = list(children)
            if self.validate:
                for ch in children:
                    problems = check_invariants(ch)
                    if problems:
                        raise StructuralError(f"{rule} produced an invalid instance: {problems}")
            if self.observer is not None:
                self.observer(rule, parent, children)
        return self._count(children)

    def _count(self, children: Iterable[Instance]) -> Iterator[Instance]:
        for ch in children:
            self.stats.instances += 1
            yield ch

    def witness_children(self, inst: Instance, witness: DominatingWitness) -> Iterator[Instance]:
        """One child per proper coloring of the witness drawn from the current lists."""
        for pairs in witness_colorings(inst, witness):
            child = assign_many(inst, pairs)
            if child is not None:
                yield child

    # -- dependencies between fixed sets ----------------------------------

    def resolve_all(self, inst: Instance, fixed: Sequence[tuple[int, int]]) -> Iterator[Instance]:
        """Yield instances covering ``inst`` with no dependency across fixed sets."""
        stack: list[Iterator[Instance]] = [iter((inst,))]
        while stack:
            cur = next(stack[-1], None)
            if cur is None:
                stack.pop()
                continue
            pair = first_dependent_pair(cur, fixed)
            if pair is None:
                yield cur
                continue
            self.stats.pair_resolutions += 1
            stack.append(self.pair_children(cur, *pair))

    def pair_children(self, inst: Instance, p_sig: int, p_fixed: int, col_p: int,
                      q_sig: int, q_fixed: int, col_q: int) -> Iterator[Instance]:
        """Remove every dependency between the dynamic sets (p_fixed, col_p) and (q_fixed, col_q).

        The pivot is a witness vertex adjacent to all of one fixed set and
        none of the other; roles are swapped so that it sees the Q side.
        The P side is tracked as the set of its original members, which
        shrinks by at least one vertex per round.
        """
        only_q = q_sig & ~p_sig
        if only_q:
            pivot = lowest(only_q)
        else:
            pivot = lowest(p_sig & ~q_sig)
            p_fixed, col_p, q_fixed, col_q = q_fixed, col_q, p_fixed, col_p
        nbr = self.graph.nbr
        p_track = inst.members(p_fixed, col_p)
        limit = popcount(p_track) + 1
        stack: list[tuple[Iterator[Instance], int]] = [(iter((inst,)), 0)]
        while stack:
            it, rounds = stack[-1]
            cur = next(it, None)
            if cur is None:
                stack.pop()
                continue
            p = p_track & cur.members(p_fixed, col_p)
            q = cur.members(q_fixed, col_q)
            if not (neighborhood_of_mask(self.graph, p) & q):
                self.stats.max_pair_rounds = max(self.stats.max_pair_rounds, rounds)
                yield cur
                continue
            if rounds >= limit:
                self.stats.violations["progress"] += 1
                raise StructuralError("pair loop exceeded |P| + 1 rounds")
            if nbr[pivot] & p or q & ~nbr[pivot]:
                self.stats.violations["pivot"] += 1
                raise StructuralError("pivot does not separate the pair")
            h = self.build_h_view(p, q, pivot)
            comp = self.find_exceptional_component(h)
            if comp:
                children = self.remove_component(cur, comp, "exceptional")
            else:
                x, leftover = self.find_pivot_vertex(h)
                children = self.branch_on_pivot(cur, x, col_p, col_q, leftover=leftover,
                                                p_region=(p_track, p_fixed), q_fixed=q_fixed)
            stack.append((children, rounds + 1))

    def build_h_view(self, p: int, q: int, pivot: int) -> HView:
        g = self.graph
        comps_p = tuple(c for c in components_of_mask(g, p) if neighborhood_of_mask(g, c) & q)
        comps_q = tuple(c for c in components_of_mask(g, q) if neighborhood_of_mask(g, c) & p)
        p_active = 0
        for c in comps_p:
            p_active |= c
        q_active = 0
        for c in comps_q:
            q_active |= c
        h = HView(pivot, p_active, q_active, comps_p, comps_q)
        # G(P u Q) minus the pivot must already be connected
        halves = components_of_mask(g, p_active | q_active)
        if len(halves) > 1:
            self.stats.violations["h_disconnected"] += 1
            cands = []
            ends = [self._cross_edge(part & p_active, part & q_active) for part in halves[:2]]
            (a, b), (c, d) = ends
            cands.append((a, b, pivot, d, c))
            raise InputNotP5Free(self._certificate(h.vertices, cands), "pair graph disconnected")
        return h

    def _cross_edge(self, side_p: int, side_q: int) -> tuple[int, int]:
        nbr = self.graph.nbr
        for a in iter_bits(side_p):
            hit = nbr[a] & side_q
            if hit:
                return a, lowest(hit)
        raise StructuralError("component without a cross edge")

    def _q_profile(self, h: HView, x: int) -> int:
        bits = 0
        nx = self.graph.nbr[x]
        for j, comp in enumerate(h.comps_q):
            if nx & comp:
                bits |= 1 << j
        return bits

    def find_exceptional_component(self, h: HView) -> int:
        """The component of H(P) whose vertices see incomparable sets of Q-components (0 if none)."""
        self.stats.exceptional_checks += 1
        found = []
        for comp in h.comps_p:
            profiles = sorted(((popcount(s), s, a) for a in iter_bits(comp)
                               for s in (self._q_profile(h, a),)))
            for (_, s1, a), (_, s2, b) in zip(profiles, profiles[1:]):
                if s1 & ~s2:
                    found.append((comp, a, b, lowest(s1 & ~s2), lowest(s2 & ~s1)))
                    break
        if len(found) > 1:
            self.stats.violations["exceptional"] += 1
            cands = []
            nbr = self.graph.nbr
            for _, a, b, j1, j2 in found[:2]:
                y1 = lowest(nbr[a] & h.comps_q[j1])
                y2 = lowest(nbr[b] & h.comps_q[j2])
                cands.append((a, y1, h.pivot, y2, b))
            raise InputNotP5Free(self._certificate(h.vertices, cands), "two exceptional components")
        return found[0][0] if found else 0

    def find_pivot_vertex(self, h: HView) -> tuple[int, int]:
        """Pick x in P adjacent to every Q-component and dominating all but at most one.

        Returns ``(x, leftover)`` where ``leftover`` is the component x does not
        dominate (0 when it dominates them all).  Ties prefer more dominated
        components, then the smaller id.
        """
        self.stats.pivot_searches += 1
        nbr = self.graph.nbr
        every = (1 << len(h.comps_q)) - 1
        best = None
        for x in iter_bits(h.p_active):
            if self._q_profile(h, x) != every:
                continue
            undominated = [c for c in h.comps_q if c & ~nbr[x]]
            if len(undominated) > 1:
                continue
            key = (-len(undominated), -x)
            if best is None or key > best[0]:
                best = (key, x, undominated[0] if undominated else 0)
        if best is None:
            self.stats.violations["pivot_vertex"] += 1
            raise InputNotP5Free(self._certificate(h.vertices, self._pivot_paths(h)), "no pivot vertex")
        return best[1], best[2]

    def _pivot_paths(self, h: HView) -> list[tuple[int, ...]]:
        nbr = self.graph.nbr
        x = max(iter_bits(h.p_active), key=lambda v: (popcount(self._q_profile(h, v)), -v))
        sx = self._q_profile(h, x)
        paths = []
        for x2 in iter_bits(h.p_active):
            s2 = self._q_profile(h, x2)
            if s2 & ~sx and sx & ~s2:
                y1 = lowest(nbr[x] & h.comps_q[lowest(sx & ~s2)])
                y2 = lowest(nbr[x2] & h.comps_q[lowest(s2 & ~sx)])
                paths.append((x, y1, h.pivot, y2, x2))
        ends = []
        for comp in h.comps_q:
            inside, outside = comp & nbr[x], comp & ~nbr[x]
            if inside and outside:
                for y in iter_bits(inside):
                    hit = nbr[y] & outside
                    if hit:
                        ends.append((y, lowest(hit)))
                        break
        if len(ends) > 1:
            (y1, y1o), (y2, y2o) = ends[:2]
            paths.append((y1o, y1, x, y2, y2o))
        return paths

    def remove_component(self, inst: Instance, comp: int, rule: str = "exceptional") -> Iterator[Instance]:
        """Color a dominating witness of ``G(comp)`` in every possible way.

        Every vertex of ``comp`` then loses a color, so the component leaves
        its dynamic set.  No children when the witness cannot be colored.
        """
        g = self.graph
        col = inst.lists[lowest(comp)]
        if any(inst.lists[v] != col for v in iter_bits(comp)):
            raise StructuralError("component is not inside one dynamic set")
        bound = popcount(col)
        if clique_of_size(g, comp, bound + 1):
            self.stats.clique_cuts += 1
            return self._expand(rule, inst, ())
        witness = find_dominating_witness_mask(g, comp, bound)
        if witness is None:
            self.stats.violations["no_witness"] += 1
            raise InputNotP5Free(self._certificate(comp), "component without dominating clique or P3")
        return self._expand(rule, inst, self.witness_children(inst, witness))

    def branch_on_pivot(self, inst: Instance, x: int, col_p: int, col_q: int, *, leftover: int = 0,
                        p_region: tuple[int, int] | None = None, q_fixed: int = 0) -> Iterator[Instance]:
        """Branch x over each shared color, then over the colors Q cannot use.

        With ``leftover`` (the Q-component x does not dominate) the part of it
        still in Q and still touching P is cleared by component removal in
        every shared-color child.
        """
        return self._expand("pivot", inst,
                            self._pivot_children(inst, x, col_p, col_q, leftover, p_region, q_fixed))

    def _pivot_children(self, inst, x, col_p, col_q, leftover, p_region, q_fixed):
        for c in colors_of(col_p & col_q):
            child = assign(inst, x, c)
            if child is None:
                continue
            if leftover and p_region is not None:
                yield from self._clear_residue(child, leftover, col_q, q_fixed, col_p, p_region)
            else:
                yield child
        rest = col_p & ~col_q
        if rest:
            child = restrict(inst, x, rest)
            if child is not None:
                yield child

    def _clear_residue(self, inst, leftover, col_q, q_fixed, col_p, p_region):
        p_track, p_fixed = p_region
        g = self.graph
        residue = leftover & inst.members(q_fixed, col_q)
        reach = neighborhood_of_mask(g, p_track & inst.members(p_fixed, col_p))
        for comp in components_of_mask(g, residue):
            if comp & reach:
                for child in self.remove_component(inst, comp, "leftover"):
                    yield from self._clear_residue(child, leftover, col_q, q_fixed, col_p, p_region)
                return
        yield inst

    # -- certificates ------------------------------------------------------

    def _certificate(self, within: int, candidates: Iterable[tuple[int, ...]] = ()) -> P5Certificate:
        for path in candidates:
            cert = P5Certificate(tuple(path))
            if verify_certificate(self.graph, cert):
                return cert
        cert = find_induced_p5(self.graph, within)
        if cert is None:
            raise StructuralError("structural check failed but no induced P5 was found")
        return cert


def witness_colorings(inst: Instance, witness: DominatingWitness) -> Iterator[tuple[tuple[int, int], ...]]:
    """Proper colorings of the witness from the current lists, in lexicographic order.

    Clique members get distinct colors; the ends of a P3 may share one.
    """
    lists = inst.lists
    vs = witness.vertices
    if witness.kind == CLIQUE:
        def rec(i: int, used: int, acc: tuple) -> Iterator[tuple]:
            if i == len(vs):
                yield acc
                return
            v = vs[i]
            for c in colors_of(lists[v] & ~used):
                yield from rec(i + 1, used | (1 << c), acc + ((v, c),))
        yield from rec(0, 0, ())
    else:
        a, b, c = vs
        for ca in colors_of(lists[a]):
            for cb in colors_of(lists[b] & ~(1 << ca)):
                for cc in colors_of(lists[c] & ~(1 << cb)):
                    yield ((a, ca), (b, cb), (c, cc))


def fixed_sets(inst: Instance, witness: DominatingWitness) -> list[tuple[int, int]]:
    """(signature, members) pairs in canonical order: by the sorted signature vertices."""
    return sorted(partition_by_signature(inst, witness.vertices).items(),
                  key=lambda kv: tuple(iter_bits(kv[0])))


def first_dependent_pair(inst: Instance, fixed: Sequence[tuple[int, int]]):
    """First dependent (fixed pair, dynamic pair) in canonical order, or None.

    Fixed sets are taken in the given order; within a pair of fixed sets the
    dynamic sets are visited by decreasing list size of the first, then of
    the second.  Returns ``(p_sig, p_fixed, col_p, q_sig, q_fixed, col_q)``.
    """
    g = inst.graph
    nbr, lists, live = g.nbr, inst.lists, inst.live
    for i, (p_sig, p_all) in enumerate(fixed):
        fp = p_all & live
        if not fp:
            continue
        reach = neighborhood_of_mask(g, fp)
        dyn_p = None
        for q_sig, q_all in fixed[i + 1:]:
            fq = q_all & live & reach
            if not fq:
                continue
            if dyn_p is None:
                dyn_p = {}
                for v in iter_bits(fp):
                    dyn_p[lists[v]] = dyn_p.get(lists[v], 0) | (1 << v)
            best = None
            for v in iter_bits(fq):
                lv = lists[v]
                for col_p, members in dyn_p.items():
                    if col_p & lv and nbr[v] & members:
                        key = (-popcount(col_p), -popcount(lv), col_p, lv)
                        if best is None or key < best:
                            best = key
            if best is not None:
                return p_sig, p_all, best[2], q_sig, q_all, best[3]
    return None


def solve(inst: Instance | None, *, observer: Observer | None = None, stats: Stats | None = None,
          validate: bool = False, workers: int = 1) -> dict[int, int] | None:
    """Return a list coloring of ``inst`` (vertex -> color) or None when none exists.

    With ``workers > 1`` the colorings of each top-level witness are explored
    in worker processes; results are consumed in child order, so the answer
    and the returned coloring match the sequential run.
    """
    if inst is None:
        return None
    engine = Engine(inst.graph, observer=observer, stats=stats, validate=validate)
    if workers <= 1 or observer is not None or validate:
        return engine.solve(inst)
    return _solve_parallel(engine, inst, workers)


def _child_task(args):
    graph, child, witness, bound = args
    engine = Engine(graph)
    return engine.solve_witness_child(child, witness, bound, 1), engine.stats


def _solve_parallel(engine: Engine, inst: Instance, workers: int) -> dict[int, int] | None:
    base = inst.restricted_to(inst.live)
    out = inst.assigned
    with ProcessPoolExecutor(workers) as pool:
        for comp in components_of_mask(inst.graph, base.live):
            sub = base.restricted_to(comp)
            prepared = engine._prepare(sub, 1)
            if prepared is None:
                return None
            witness, bound = prepared
            children = engine._expand("witness", sub, engine.witness_children(sub, witness))
            pending: deque = deque()
            found = None
            while True:
                while len(pending) < 2 * workers:
                    child = next(children, None)
                    if child is None:
                        break
                    pending.append(pool.submit(_child_task, (inst.graph, child, witness, bound)))
                if not pending:
                    break
                sol, sub_stats = pending.popleft().result()
                engine.stats.merge(sub_stats)
                if sol is not None:
                    found = sol
                    break
            for fut in pending:
                fut.cancel()
            if found is None:
                return None
            out.update(found)
    return out


def color_graph(g: Graph, k: int, **kwargs) -> dict[int, int] | None:
    """k-coloring of a P5-free graph, or None when it is not k-colorable."""
    return solve(Instance.uniform(g, k), **kwargs)


def remove_pair_dependencies(inst: Instance, p: tuple[int, int, int], q: tuple[int, int, int],
                             **kwargs) -> list[Instance]:
    """Children of ``inst`` with the dynamic pair resolved.

    ``p`` and ``q`` are ``(signature, fixed_set, colorset)`` bitmask triples.
    """
    return list(Engine(inst.graph, **kwargs).pair_children(inst, *p, *q))


def verify_coloring(g: Graph, lists: Sequence | Mapping | None, coloring: Mapping[int, int] | Sequence[int]) -> bool:
    """True iff ``coloring`` is total, proper, and respects ``lists`` (None: any color)."""
    col = dict(coloring) if isinstance(coloring, Mapping) else dict(enumerate(coloring))
    for v in range(g.n):
        c = col.get(v)
        if not isinstance(c, int) or c < 1:
            return False
        if lists is not None:
            allowed = lists[v]
            allowed = allowed if isinstance(allowed, int) else colorset(allowed)
            if not allowed >> c & 1:
                return False
    return all(col[u] != col[v] for u, v in g.edges())
