"""Acceptance sweeps: exhaustive oracle agreement, structural checks, scale runs.

Each ``criterion_*`` function returns a :class:`CriterionResult`; the CLI
``accept`` command and ``tests/test_acceptance.py`` both drive them.
"""

from __future__ import annotations

import itertools
import time
from collections import Counter, defaultdict
from dataclasses import dataclass, field

import numpy as np

from .dominating import clique_number, find_dominating_witness_mask
from .engine import Engine, InputNotP5Free, Stats, StructuralError, fixed_sets, verify_coloring
from .graph import Graph, components_of_mask, iter_bits
from .instance import Instance, full_colorset
from .oracle import (
    GeneratorSpec,
    brute_force_list_color,
    cograph_chromatic,
    connected_p5_free_masks,
    cotree_graph,
    enumerate_solutions,
    generate_cotree,
    generate_split,
    generate_substitution,
    graph_from_edge_mask,
    random_graph,
)
from .p5detect import P5Certificate, find_induced_p5, verify_certificate

SMALL_KS = (2, 3, 4)
SCALE_TIME_LIMIT = 60.0
INSTANCE_CEILING = 10 ** 6


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str
    seconds: float
    table: list[str] = field(default_factory=list)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] criterion {self.number}: {self.title} -- {self.detail} ({self.seconds:.1f}s)"


@dataclass
class ExhaustiveReport:
    graphs: int = 0
    runs: int = 0
    disagreements: list = field(default_factory=list)
    invalid_colorings: list = field(default_factory=list)
    witness_failures: list = field(default_factory=list)
    rejections: list = field(default_factory=list)
    instances: dict = field(default_factory=lambda: defaultdict(int))
    stats: Stats = field(default_factory=Stats)
    seconds: float = 0.0


def _run_engine(g: Graph, k: int, stats: Stats, errors: list, tag) -> tuple[bool, dict | None]:
    """Solve, recording any structural failure; returns (answered, coloring)."""
    inst = Instance.from_lists(g, [full_colorset(k)] * g.n)
    if inst is None:
        return True, None
    try:
        return True, Engine(g, stats=stats).solve(inst)
    except (InputNotP5Free, StructuralError) as exc:
        errors.append((tag, repr(exc)))
        return False, None


def exhaustive_sweep(max_n: int = 7, ks=SMALL_KS) -> ExhaustiveReport:
    """Criteria 1 and 2 over every labelled connected P5-free graph with n <= max_n."""
    rep = ExhaustiveReport()
    start = time.perf_counter()
    for n in range(1, max_n + 1):
        for mask in connected_p5_free_masks(n):
            mask = int(mask)
            g = graph_from_edge_mask(n, mask)
            rep.graphs += 1
            omega = clique_number(g)
            witness = find_dominating_witness_mask(g, g.all_vertices, omega)
            if witness is None or not witness.is_valid(g, range(n)):
                rep.witness_failures.append((n, mask))
            for k in ks:
                before = rep.stats.instances
                answered, sol = _run_engine(g, k, rep.stats, rep.rejections, (n, mask, k))
                rep.instances[(n, k)] += rep.stats.instances - before
                rep.runs += 1
                if not answered:
                    continue
                truth = brute_force_list_color(g, [full_colorset(k)] * n)
                if (sol is None) != (truth is None):
                    rep.disagreements.append((n, mask, k))
                elif sol is not None and not verify_coloring(g, [full_colorset(k)] * n, sol):
                    rep.invalid_colorings.append((n, mask, k))
    rep.seconds = time.perf_counter() - start
    return rep


def instance_table(rep: ExhaustiveReport, ks=SMALL_KS) -> list[str]:
    ns = sorted({n for n, _ in rep.instances})
    lines = ["n    " + "".join(f"k={k:<12}" for k in ks)]
    for n in ns:
        lines.append(f"{n:<5}" + "".join(f"{rep.instances[(n, k)]:<14}" for k in ks))
    return lines


def criterion_1(rep: ExhaustiveReport) -> CriterionResult:
    bad = len(rep.disagreements) + len(rep.invalid_colorings) + len(rep.rejections)
    detail = (f"{rep.runs} solver runs on {rep.graphs} graphs; {len(rep.disagreements)} disagreements, "
              f"{len(rep.invalid_colorings)} invalid colorings, {len(rep.rejections)} rejections")
    return CriterionResult(1, "oracle equivalence (exhaustive)", bad == 0, detail, rep.seconds,
                           instance_table(rep))


def criterion_2(rep: ExhaustiveReport) -> CriterionResult:
    detail = f"{rep.graphs} graphs, {len(rep.witness_failures)} without a valid witness"
    return CriterionResult(2, "dominating witness coverage", not rep.witness_failures, detail, rep.seconds)


def criterion_3(*sources: tuple[Stats, list]) -> CriterionResult:
    """Structural assertions over the stats and rejection logs of other sweeps."""
    violations: Counter = Counter()
    rejected = 0
    t2 = c1 = 0
    for stats, errors in sources:
        violations.update(stats.violations)
        rejected += len(errors)
        t2 += stats.exceptional_checks
        c1 += stats.pivot_searches
    total = sum(violations.values()) + rejected
    detail = (f"{t2} exceptional-component checks, {c1} pivot-vertex searches, "
              f"{total} violations {dict(violations) or ''}").rstrip()
    return CriterionResult(3, "structural assertions", total == 0, detail, 0.0)


def _solutions_of(inst: Instance, scope: list[int]) -> Counter:
    """Solutions of ``inst`` restricted to ``scope`` (its live vertices plus fixed colors)."""
    live = [v for v in scope if inst.is_live(v)]
    fixed = {v: inst.colors[v] for v in scope if not inst.is_live(v)}
    out: Counter = Counter()
    for sol in enumerate_solutions(inst.graph, inst.lists, live):
        full = dict(fixed)
        full.update(zip(live, sol))
        out[tuple(full[v] for v in scope)] += 1
    return out


def check_expansion(parent: Instance, children: list[Instance]) -> bool:
    """True iff the children's solutions, pooled as a multiset, equal the parent's."""
    scope = list(iter_bits(parent.live))
    want = _solutions_of(parent, scope)
    got: Counter = Counter()
    for ch in children:
        got.update(_solutions_of(ch, scope))
    return want == got


def explore_dependencies(engine: Engine, inst: Instance) -> None:
    """Run dependency removal to exhaustion under every witness coloring of every component."""
    for comp in components_of_mask(engine.graph, inst.live):
        sub = inst.restricted_to(comp)
        prepared = engine._prepare(sub, 1)
        if prepared is None:
            continue
        witness, _ = prepared
        for child in engine._expand("witness", sub, engine.witness_children(sub, witness)):
            for _ in engine.resolve_all(child, fixed_sets(child, witness)):
                pass


def _criterion_4_case(trial: int, rng, max_n: int, corpus):
    """Rotate between solving and exhaustive dependency removal on three graph sources."""
    kind = trial % 3
    if kind == 0:
        # uniform lists on the n=7 corpus reach the rarer pair-removal rules
        g = graph_from_edge_mask(7, int(rng.choice(corpus)))
        return g, Instance.uniform(g, int(rng.integers(3, 5))), True
    n = int(rng.integers(3, max_n + 1))
    if trial % 2:
        g = generate_substitution(n, int(rng.integers(2 ** 63)), max_piece=min(n, 6))
    else:
        g = random_graph(n, float(rng.random()), rng)
        if find_induced_p5(g) is not None:
            return g, None, False
    k = int(rng.integers(2, 5))
    p = float(rng.uniform(0.5, 1.0))
    lists = [[c for c in range(1, k + 1) if rng.random() < p] or [int(rng.integers(1, k + 1))]
             for _ in range(n)]
    return g, Instance.from_lists(g, lists), kind == 2


def criterion_4(min_steps: int = 10_000, seed: int = 0, max_n: int = 8) -> CriterionResult:
    start = time.perf_counter()
    rng = np.random.default_rng(seed)
    steps = 0
    mismatches = []
    by_rule: Counter = Counter()

    def observe(rule, parent, children):
        nonlocal steps
        steps += 1
        by_rule[rule] += 1
        if not check_expansion(parent, children):
            mismatches.append((rule, parent.dump()))

    corpus = connected_p5_free_masks(7)
    trial = 0
    while steps < min_steps:
        trial += 1
        engine_graph, inst, explore = _criterion_4_case(trial, rng, max_n, corpus)
        if inst is None:
            continue
        engine = Engine(engine_graph, observer=observe)
        if explore:
            explore_dependencies(engine, inst)
        else:
            engine.solve(inst)
    detail = f"{steps} expansion steps over {trial} instances {dict(by_rule)}, {len(mismatches)} mismatches"
    return CriterionResult(4, "branch completeness", not mismatches and steps >= min_steps, detail,
                           time.perf_counter() - start)


@dataclass
class ScaleReport:
    rows: list = field(default_factory=list)
    failures: list = field(default_factory=list)
    rejections: list = field(default_factory=list)
    stats: Stats = field(default_factory=Stats)
    seconds: float = 0.0


def _timed_solve(g: Graph, k: int, stats: Stats, rejections: list, tag):
    t = time.perf_counter()
    answered, sol = _run_engine(g, k, stats, rejections, tag)
    return answered, sol, time.perf_counter() - t


def scale_sweep(split_count: int = 50, cograph_count: int = 50, split_n: int = 100,
                cograph_n: int = 40) -> ScaleReport:
    """Criterion 5: perfect graphs whose chromatic number is known by construction."""
    rep = ScaleReport()
    start = time.perf_counter()
    cases = []
    for seed in range(split_count):
        g, clique = generate_split(GeneratorSpec("split", split_n, 0.5, seed))
        cases.append(("split", seed, g, len(clique)))
    for seed in range(cograph_count):
        tree = generate_cotree(GeneratorSpec("cograph", cograph_n, 0.5, seed))
        cases.append(("cograph", seed, cotree_graph(tree, cograph_n), cograph_chromatic(tree)))
    for model, seed, g, chi in cases:
        for k, expect_sat in ((chi, True), (chi - 1, False)):
            if k < 1:
                continue
            answered, sol, dt = _timed_solve(g, k, rep.stats, rep.rejections, (model, seed, k))
            ok = answered and dt < SCALE_TIME_LIMIT and (sol is not None) == expect_sat
            if ok and sol is not None:
                ok = verify_coloring(g, [full_colorset(k)] * g.n, sol)
            rep.rows.append((model, seed, k, sol is not None, dt))
            if not ok:
                rep.failures.append((model, seed, k, dt))
    rep.seconds = time.perf_counter() - start
    return rep


def criterion_5(rep: ScaleReport) -> CriterionResult:
    slowest = max((r[4] for r in rep.rows), default=0.0)
    detail = f"{len(rep.rows)} runs, {len(rep.failures)} failures, slowest {slowest:.3f}s"
    return CriterionResult(5, "perfect-graph spot checks at scale", not rep.failures, detail, rep.seconds)


def _is_p5_subset(g: Graph, five) -> bool:
    edges = [(u, v) for u, v in itertools.combinations(five, 2) if g.has_edge(u, v)]
    if len(edges) != 4:
        return False
    deg = Counter(x for e in edges for x in e)
    if sorted(deg[v] for v in five) != [1, 1, 2, 2, 2]:
        return False
    # 4 edges, degrees 1,1,2,2,2 on 5 vertices: a path unless it is a triangle plus an edge
    seen = {five[0]}
    frontier = [five[0]]
    while frontier:
        v = frontier.pop()
        for a, b in edges:
            for x, y in ((a, b), (b, a)):
                if x == v and y not in seen:
                    seen.add(y)
                    frontier.append(y)
    return len(seen) == 5


def has_p5_exhaustive(g: Graph) -> bool:
    return any(_is_p5_subset(g, five) for five in itertools.combinations(range(g.n), 5))


def criterion_6(sample: int = 1000, seed: int = 0, rejected_target: int = 200) -> CriterionResult:
    start = time.perf_counter()
    rng = np.random.default_rng(seed)
    detector_mismatch = 0
    for _ in range(sample):
        n = int(rng.integers(1, 11))
        g = random_graph(n, float(rng.random()), rng)
        if (find_induced_p5(g) is not None) != has_p5_exhaustive(g):
            detector_mismatch += 1
    rejected = bad_certs = lazy = 0
    while rejected < rejected_target:
        n = int(rng.integers(5, 16))
        g = random_graph(n, float(rng.uniform(0.2, 0.8)), rng)
        cert = find_induced_p5(g)
        if cert is None:
            continue
        rejected += 1
        bad_certs += not verify_certificate(g, cert)
        inst = Instance.uniform(g, int(rng.integers(2, 5)))
        if inst is None:
            continue
        try:
            Engine(g).solve(inst)
        except InputNotP5Free as exc:
            lazy += 1
            bad_certs += not verify_certificate(g, exc.certificate)
    detail = (f"{sample} random graphs n<=10 with {detector_mismatch} detector mismatches; "
              f"{rejected} rejected inputs (+{lazy} lazy engine rejections), {bad_certs} bad certificates")
    return CriterionResult(6, "certificate soundness", detector_mismatch == 0 and bad_certs == 0, detail,
                           time.perf_counter() - start)


def criterion_7(sizes=(25, 50, 100, 200), seeds: int = 5, k: int = 3) -> CriterionResult:
    start = time.perf_counter()
    table = ["n     runs  max_instances  mean_instances  sat"]
    worst = 0
    failures = 0
    for n in sizes:
        counts = []
        sat = 0
        for seed in range(seeds):
            g, _ = generate_split(GeneratorSpec("split", n, 0.5, seed, clique_size=k))
            stats = Stats()
            errors: list = []
            answered, sol = _run_engine(g, k, stats, errors, (n, seed))
            failures += not answered or sol is None or not verify_coloring(g, None, sol)
            sat += sol is not None
            counts.append(stats.instances)
        worst = max(worst, max(counts))
        table.append(f"{n:<5} {seeds:<5} {max(counts):<14} {sum(counts) / len(counts):<15.1f} {sat}")
    detail = f"max {worst} instances (ceiling {INSTANCE_CEILING}), {failures} failed runs"
    return CriterionResult(7, "instance-count ceiling on split graphs", worst < INSTANCE_CEILING and not failures,
                           detail, time.perf_counter() - start, table)


def run_suite(suite: str = "all", max_n: int = 7, echo=print) -> list[CriterionResult]:
    """Run the named suite ("small", "generated" or "all") and echo one line per criterion."""
    results = []
    sources = []

    def emit(res: CriterionResult) -> None:
        results.append(res)
        echo(res.line())
        for row in res.table:
            echo("    " + row)

    if suite in ("small", "all"):
        rep = exhaustive_sweep(max_n)
        sources.append((rep.stats, rep.rejections))
        emit(criterion_1(rep))
        emit(criterion_2(rep))
        emit(criterion_4())
        emit(criterion_6())
    if suite in ("generated", "all"):
        scale = scale_sweep()
        sources.append((scale.stats, scale.rejections))
        emit(criterion_5(scale))
        emit(criterion_7())
    if sources:
        emit(criterion_3(*sources))
    return results
