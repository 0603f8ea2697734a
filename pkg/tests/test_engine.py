import pickle
from collections import Counter

import numpy as np
import pytest

from p5color.acceptance import check_expansion
from p5color.engine import (
    Engine,
    HView,
    InputNotP5Free,
    Stats,
    color_graph,
    remove_pair_dependencies,
    solve,
    verify_coloring,
)
from p5color.graph import Graph, to_mask
from p5color.instance import Instance, colorset, dependent
from p5color.oracle import GeneratorSpec, brute_force_list_color, generate_split, generate_substitution
from p5color.p5detect import P5Certificate, find_induced_p5, verify_certificate

from conftest import complete_graph, cycle_graph, path_graph, random_graph


def test_complete_graphs():
    assert color_graph(complete_graph(4), 3) is None
    col = color_graph(complete_graph(4), 4)
    assert sorted(col.values()) == [1, 2, 3, 4]


def test_c5():
    assert color_graph(cycle_graph(5), 2) is None
    assert verify_coloring(cycle_graph(5), None, color_graph(cycle_graph(5), 3))


def test_empty_and_zero_colors():
    assert color_graph(Graph(0, []), 0) == {}
    assert color_graph(Graph(1, []), 0) is None
    assert color_graph(Graph(3, []), 1) == {0: 1, 1: 1, 2: 1}


def test_verify_coloring_examples():
    assert verify_coloring(complete_graph(3), None, [1, 2, 3])
    assert not verify_coloring(Graph(2, [(0, 1)]), None, [1, 1])
    assert not verify_coloring(Graph(2, [(0, 1)]), [[1], [2, 3]], [1, 4])
    assert not verify_coloring(Graph(2, []), None, {0: 1})


def _random_lists(n, k, rng):
    return [[c for c in range(1, k + 1) if rng.random() < 0.7] or [int(rng.integers(1, k + 1))]
            for _ in range(n)]


def test_list_coloring_matches_oracle(rng):
    for seed in range(400):
        n = int(rng.integers(1, 14))
        g = generate_substitution(n, seed)
        k = int(rng.integers(2, 6))
        lists = _random_lists(n, k, rng)
        sol = solve(Instance.from_lists(g, lists), validate=seed % 4 == 0)
        truth = brute_force_list_color(g, lists)
        assert (sol is None) == (truth is None)
        if sol is not None:
            assert verify_coloring(g, lists, sol)


def test_memo_does_not_change_answers(rng):
    for seed in range(150):
        n = int(rng.integers(4, 13))
        g = generate_substitution(n, seed)
        lists = _random_lists(n, 4, rng)
        inst = Instance.from_lists(g, lists)
        if inst is None:
            continue
        a = Engine(g).solve(inst)
        b = Engine(g, memo_limit=0).solve(inst)
        assert (a is None) == (b is None)


def test_expansions_preserve_solutions(rng):
    steps = Counter()

    def observe(rule, parent, children):
        steps[rule] += 1
        assert check_expansion(parent, children), rule

    for seed in range(120):
        n = int(rng.integers(3, 9))
        g = generate_substitution(n, seed, max_piece=min(n, 5))
        inst = Instance.from_lists(g, _random_lists(n, 4, rng))
        if inst is not None:
            Engine(g, observer=observe).solve(inst)
    assert steps["witness"] > 0


def test_parallel_matches_sequential():
    for seed in range(3):
        g, clique = generate_split(GeneratorSpec("split", 60, 0.5, seed))
        k = len(clique)
        inst = Instance.uniform(g, k)
        assert solve(inst, workers=2) == solve(inst)
        assert solve(Instance.uniform(g, k - 1), workers=2) is None


def test_stats_lines():
    stats = Stats()
    color_graph(cycle_graph(5), 3, stats=stats)
    lines = dict(line.split("=") for line in stats.as_lines())
    assert int(lines["instances"]) > 0 and lines["violations"] == "0"
    other = Stats()
    other.merge(stats)
    assert other.as_lines() == stats.as_lines()


def test_non_p5_free_inputs_are_answered_or_rejected(rng):
    rejected = 0
    for _ in range(300):
        n = int(rng.integers(5, 10))
        g = random_graph(n, rng.random(), rng)
        if find_induced_p5(g) is None:
            continue
        k = int(rng.integers(2, 5))
        try:
            sol = color_graph(g, k)
        except InputNotP5Free as exc:
            rejected += 1
            assert verify_certificate(g, exc.certificate)
            continue
        truth = brute_force_list_color(g, [range(1, k + 1)] * n)
        assert (sol is None) == (truth is None)
    assert rejected > 0


def test_rejection_pickles():
    exc = InputNotP5Free(P5Certificate((0, 1, 2, 3, 4)), "why")
    back = pickle.loads(pickle.dumps(exc))
    assert back.certificate == exc.certificate


# -- dependency removal pieces ---------------------------------------------

def test_pair_without_edges_is_unchanged():
    # witness 2 sees only vertex 1; vertices 0 and 1 are not adjacent
    g = Graph(4, [(2, 1), (3, 0), (3, 2)])
    inst = Instance.from_lists(g, [[1, 2], [1, 2], [1], [2]], vertices=[0, 1])
    p = (to_mask([3]), to_mask([0]), colorset([1, 2]))
    q = (to_mask([2, 3]), to_mask([1]), colorset([1, 2]))
    out = remove_pair_dependencies(inst, p, q)
    assert len(out) == 1 and out[0].lists == inst.lists


def test_single_edge_pair():
    # u=0 in P (lists {1,2}), w=1 in Q (lists {1,3}); witness vertex 2 sees only w
    g = Graph(3, [(0, 1), (1, 2)])
    inst = Instance.from_lists(g, [[1, 2], [1, 3], [4]], vertices=[0, 1])
    p = (0, to_mask([0]), colorset([1, 2]))
    q = (to_mask([2]), to_mask([1]), colorset([1, 3]))
    out = remove_pair_dependencies(inst, p, q)
    assert check_expansion(inst, out)
    assert len(out) == 2
    for child in out:
        assert not dependent(child, child.members(to_mask([0]), colorset([1, 2])),
                             child.members(to_mask([1]), colorset([1, 3])))


def test_build_h_view_drops_isolated_components():
    # P = {0, 4}, Q = {1}; 4 has no edge to Q; pivot 2 sees Q only
    g = Graph(5, [(0, 1), (1, 2)])
    h = Engine(g).build_h_view(to_mask([0, 4]), to_mask([1]), 2)
    assert h.p_active == to_mask([0]) and h.q_active == to_mask([1])


def test_build_h_view_full():
    g = Graph(4, [(0, 1), (1, 2), (0, 3), (3, 2)])
    h = Engine(g).build_h_view(to_mask([0]), to_mask([1, 3]), 2)
    assert h.vertices == to_mask(range(4))


def test_disconnected_pair_graph_gives_certificate():
    g = path_graph(5)
    with pytest.raises(InputNotP5Free) as err:
        Engine(g).build_h_view(to_mask([0, 4]), to_mask([1, 3]), 2)
    assert err.value.certificate.path == (0, 1, 2, 3, 4)


def _view(g, p, q, pivot):
    return Engine(g).build_h_view(to_mask(p), to_mask(q), pivot)


def test_exceptional_component_found():
    # X = edge a-b, Y1 = {y1} seen only by a, Y2 = {y2} seen only by b, pivot v sees both
    a, b, y1, y2, v = range(5)
    g = Graph(5, [(a, b), (a, y1), (b, y2), (v, y1), (v, y2)])
    assert Engine(g).find_exceptional_component(_view(g, [a, b], [y1, y2], v)) == to_mask([a, b])


def test_no_exceptional_component_when_all_see_everything():
    g = Graph(5, [(0, 2), (0, 3), (1, 2), (1, 3), (4, 2), (4, 3)])
    assert Engine(g).find_exceptional_component(_view(g, [0, 1], [2, 3], 4)) == 0


def test_no_exceptional_component_for_chains(rng):
    for _ in range(50):
        # P vertices see nested prefixes of the Q singletons: profiles form a chain
        m = int(rng.integers(2, 5))
        ps = list(range(m))
        qs = list(range(m, 2 * m))
        pivot = 2 * m
        edges = [(ps[i], qs[j]) for i in range(m) for j in range(int(rng.integers(1, m + 1)))]
        edges += [(pivot, y) for y in qs] + [(ps[i], ps[i + 1]) for i in range(m - 1)]
        edges += [(ps[0], y) for y in qs]
        g = Graph(2 * m + 1, edges)
        assert Engine(g).find_exceptional_component(_view(g, ps, qs, pivot)) == 0


def test_pivot_vertex_single_component():
    g = Graph(4, [(0, 1), (1, 2), (0, 2), (3, 1), (3, 2)])
    assert Engine(g).find_pivot_vertex(_view(g, [0], [1, 2], 3)) == (0, 0)


def test_pivot_vertex_flags_undominated_component():
    # x touches Q-components {1}, {2}, {3,4}, missing 4; pivot 5 sees all of Q
    g = Graph(6, [(0, 1), (0, 2), (0, 3), (3, 4), (5, 1), (5, 2), (5, 3), (5, 4)])
    assert Engine(g).find_pivot_vertex(_view(g, [0], [1, 2, 3, 4], 5)) == (0, to_mask([3, 4]))


def test_pivot_vertex_tie_break():
    # both P vertices dominate everything: the smaller id wins
    g = Graph(4, [(0, 2), (1, 2), (0, 1), (3, 2)])
    assert Engine(g).find_pivot_vertex(_view(g, [0, 1], [2], 3)) == (0, 0)


def test_remove_component_examples():
    g = Graph(1, [])
    inst = Instance.from_lists(g, [[1, 2]])
    kids = list(Engine(g).remove_component(inst, 1))
    assert sorted(k.assigned[0] for k in kids) == [1, 2]
    tri = complete_graph(3)
    inst = Instance.from_lists(tri, [[1, 2]] * 3)
    assert inst is not None
    assert list(Engine(tri).remove_component(inst, 0b111)) == []
    p3 = path_graph(3)
    inst = Instance.from_lists(p3, [[1, 2]] * 3)
    kids = list(Engine(p3).remove_component(inst, 0b111))
    assert check_expansion(inst, kids)


def test_branch_on_pivot_children():
    g = Graph(2, [])
    inst = Instance.from_lists(g, [[1, 2, 3, 4, 5], [1, 2]])
    kids = list(Engine(g).branch_on_pivot(inst, 0, colorset([1, 2, 3, 4, 5]), colorset([1, 2, 3])))
    assert [k.assigned.get(0) for k in kids[:3]] == [1, 2, 3]
    assert kids[3].list_of(0) == {4, 5}
    assert check_expansion(inst, kids)
    inst = Instance.from_lists(g, [[1, 2], [1, 2]])
    kids = list(Engine(g).branch_on_pivot(inst, 0, colorset([1, 2]), colorset([1, 2])))
    assert [k.assigned.get(0) for k in kids] == [1, 2]


def test_hview_vertices():
    h = HView(4, 0b11, 0b1100, (0b11,), (0b1100,))
    assert h.vertices == 0b11111
