import itertools

import pytest

from p5color.graph import Graph
from p5color.oracle import (
    Cotree,
    GeneratorError,
    GeneratorSpec,
    brute_force_chromatic,
    brute_force_list_color,
    cograph_chromatic,
    connected_p5_free_masks,
    cotree_graph,
    enumerate_solutions,
    generate,
    generate_cotree,
    generate_dimacs,
    generate_split,
    generate_substitution,
    graph_from_edge_mask,
)
from p5color.p5detect import find_induced_p5

from conftest import all_list_colorings, bfs_components, complete_graph, cycle_graph, has_p5_bruteforce, path_graph


def test_brute_force_examples():
    assert brute_force_list_color(complete_graph(4), [[1, 2, 3]] * 4) is None
    col = brute_force_list_color(cycle_graph(5), [[1, 2, 3]] * 5)
    assert all(col[u] != col[v] for u, v in cycle_graph(5).edges())


def test_enumerate_examples():
    assert len(enumerate_solutions(Graph(1, []), [[1, 2]])) == 2
    assert enumerate_solutions(Graph(2, [(0, 1)]), [[1], [1]]) == []
    assert sorted(enumerate_solutions(path_graph(3), [[1, 2]] * 3)) == [(1, 2, 1), (2, 1, 2)]


def test_enumerate_matches_product(rng):
    for _ in range(100):
        n = int(rng.integers(1, 7))
        g = Graph(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < 0.5])
        lists = [[c for c in range(1, 4) if rng.random() < 0.7] or [1] for _ in range(n)]
        assert sorted(enumerate_solutions(g, lists)) == all_list_colorings(g, lists)


def test_cograph_chromatic_small():
    leaf = lambda v: Cotree("leaf", (), v)
    assert cograph_chromatic(leaf(0)) == 1
    assert cograph_chromatic(Cotree("join", (leaf(0), leaf(1)))) == 2
    for seed in range(60):
        tree = generate_cotree(GeneratorSpec("cograph", 6, 0.5, seed))
        assert cograph_chromatic(tree) == brute_force_chromatic(cotree_graph(tree, 6))


def test_generated_graphs_are_p5_free():
    for seed in range(5):
        assert find_induced_p5(generate(GeneratorSpec("split", 50, 0.5, seed))) is None
        assert find_induced_p5(generate(GeneratorSpec("cograph", 40, 0.5, seed))) is None
        assert find_induced_p5(generate(GeneratorSpec("rejection", 10, 0.5, seed))) is None
        assert find_induced_p5(generate_substitution(25, seed)) is None


def test_split_construction_gives_clique_number():
    from p5color.dominating import clique_number
    for seed in range(10):
        g, clique = generate_split(GeneratorSpec("split", 40, 0.5, seed))
        assert clique_number(g) == len(clique)


def test_generators_are_deterministic():
    spec = GeneratorSpec("split", 60, 0.4, 99)
    assert generate(spec) == generate(spec)
    assert generate_dimacs(spec) == generate_dimacs(spec)
    assert "seed=99" in generate_dimacs(spec)
    assert generate(spec) != generate(GeneratorSpec("split", 60, 0.4, 100))


@pytest.mark.parametrize("kwargs", [
    dict(model="tree", n=5),
    dict(model="split", n=0),
    dict(model="split", n=5, density=1.5),
    dict(model="split", n=5, seed=-1),
    dict(model="split", n=5, clique_size=6),
])
def test_generator_spec_validation(kwargs):
    with pytest.raises(GeneratorError):
        GeneratorSpec(**kwargs)


def test_rejection_guard():
    with pytest.raises(GeneratorError):
        generate(GeneratorSpec("rejection", 20))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_corpus_matches_direct_enumeration(n):
    pairs = list(itertools.combinations(range(n), 2))
    want = set()
    for mask in range(1 << len(pairs)):
        g = Graph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
        if len(bfs_components(g, range(n))) == 1 and (n < 5 or not has_p5_bruteforce(g)):
            want.add(g)
    got = {graph_from_edge_mask(n, int(m)) for m in connected_p5_free_masks(n)}
    assert got == want


def test_corpus_size_n7():
    # connected labelled graphs on 7 vertices number 1,866,256; most contain a P5
    assert len(connected_p5_free_masks(7)) == 843196
