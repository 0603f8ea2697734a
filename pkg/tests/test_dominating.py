import itertools

import pytest

from p5color.dominating import (
    CLIQUE,
    PATH_P3,
    DominatingWitness,
    clique_number,
    find_clique_exceeding,
    find_dominating_witness,
)
from p5color.graph import Graph, induced_components, to_mask
from p5color.oracle import GeneratorSpec, generate_split, generate_substitution

from conftest import complete_graph, cycle_graph, max_clique_bruteforce, random_graph, star_graph


def test_clique_exceeding_k4():
    assert find_clique_exceeding(complete_graph(4), range(4), 3) == frozenset(range(4))
    assert find_clique_exceeding(complete_graph(4), range(4), 4) is None


def test_clique_exceeding_rejects_zero_bound():
    with pytest.raises(ValueError):
        find_clique_exceeding(complete_graph(2), range(2), 0)


def test_clique_exceeding_on_split_graphs():
    for seed in range(10):
        g, clique = generate_split(GeneratorSpec("split", 30, 0.5, seed))
        omega = len(clique)
        found = find_clique_exceeding(g, range(30), omega - 1)
        assert found is not None and len(found) == omega
        assert all(g.has_edge(u, v) for u, v in itertools.combinations(found, 2))
        assert find_clique_exceeding(g, range(30), omega) is None


def test_clique_number_matches_bruteforce(rng):
    for _ in range(100):
        g = random_graph(8, rng.random(), rng)
        assert clique_number(g) == max_clique_bruteforce(g)


def test_star_gives_maximal_clique_with_center():
    w = find_dominating_witness(star_graph(4), range(5), 3)
    assert w.kind == CLIQUE
    assert 0 in w.vertices and len(w.vertices) == 2


def test_c5_needs_a_p3():
    g = cycle_graph(5)
    w = find_dominating_witness(g, range(5), 3)
    assert w.kind == PATH_P3
    a, b, c = w.vertices
    assert {(a - b) % 5, (c - b) % 5} == {1, 4}
    assert w.is_valid(g, range(5))


def test_single_vertex():
    w = find_dominating_witness(Graph(1, []), [0], 1)
    assert w == DominatingWitness(CLIQUE, (0,))


def _maximal_under(g, vs, s, bound):
    if len(vs) == bound:
        return True
    return not any(all(g.has_edge(u, x) for u in vs) for x in s if x not in vs)


def test_witness_valid_and_maximal_on_p5_free_graphs(rng):
    for seed in range(300):
        n = int(rng.integers(1, 14))
        g = generate_substitution(n, seed)
        for comp in induced_components(g, range(n)):
            omega = clique_number(g, to_mask(comp))
            for bound in {omega, omega + 1}:
                w = find_dominating_witness(g, comp, bound)
                assert w is not None and w.is_valid(g, comp)
                if w.kind == CLIQUE:
                    assert len(w.vertices) <= bound
                    assert _maximal_under(g, w.vertices, comp, bound)


def test_witness_is_deterministic():
    g = generate_substitution(12, 5)
    assert find_dominating_witness(g, range(12), 4) == find_dominating_witness(g, range(12), 4)


def test_is_valid_rejects_bad_shapes():
    g = cycle_graph(5)
    assert not DominatingWitness(CLIQUE, (0, 2)).is_valid(g, range(5))
    assert not DominatingWitness(PATH_P3, (0, 1, 3)).is_valid(g, range(5))
    assert not DominatingWitness(PATH_P3, (0, 1)).is_valid(g, range(5))
    assert not DominatingWitness(CLIQUE, (0, 1)).is_valid(g, range(5))
