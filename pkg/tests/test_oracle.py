import itertools

import pytest

from convexcuts.errors import GraphError, ResourceLimitError
from convexcuts.generators import complete, complete_bipartite, cycle, grid, hypercube, path, random_connected
from convexcuts.graph import Graph, all_pairs_distances
from convexcuts.oracle import (
    enumerate_convex_cuts_bruteforce,
    hamming_labeling,
    is_convex_cut,
    is_partial_cube,
    theta_classes,
)

from conftest import explicit_convex


def test_convex_cut_examples():
    k4 = complete(4).graph
    assert is_convex_cut(k4, None, ([0], [1, 2, 3]))
    c6 = cycle(6).graph
    assert is_convex_cut(c6, None, ([1, 2, 3], [0, 4, 5]))
    verdict = is_convex_cut(c6, None, ([1, 2], [0, 3, 4, 5]))
    assert not verdict
    u, w, v = verdict.witness
    # the witness pair is antipodal on the 4-vertex side, w on the other side
    assert {u, v} in ({0, 3},) and w in (1, 2)


def test_invalid_partition():
    g = cycle(4).graph
    with pytest.raises(ValueError):
        is_convex_cut(g, None, ([], [0, 1, 2, 3]))
    with pytest.raises(ValueError):
        is_convex_cut(g, None, ([0, 1], [1, 2, 3]))
    with pytest.raises(ValueError):
        is_convex_cut(g, None, ([0], [1, 2]))


@pytest.mark.parametrize("gen,count", [(cycle(5), 5), (complete(4), 7), (cycle(6), 3), (complete_bipartite(2, 3), 0)],
                         ids=lambda x: getattr(x, "name", str(x)))
def test_bruteforce_counts(gen, count):
    assert len(enumerate_convex_cuts_bruteforce(gen.graph)) == count


def test_bruteforce_cap():
    with pytest.raises(ResourceLimitError):
        enumerate_convex_cuts_bruteforce(cycle(17).graph)
    assert len(enumerate_convex_cuts_bruteforce(cycle(17).graph, max_vertices=17)) == 17


def _all_connected_cuts(g):
    for r in range(1, g.n):
        for side in itertools.combinations(range(g.n), r):
            if 0 not in side:
                continue
            rest = [v for v in range(g.n) if v not in side]
            if len(g.components(g.cut_edges(side))) == 2:
                yield (tuple(side), tuple(rest))


@pytest.mark.parametrize("gen", [cycle(7), grid(2, 4), complete(5), random_connected(8, 12, 1), random_connected(7, 9, 5)],
                         ids=lambda x: x.name)
def test_bruteforce_against_explicit_paths(gen):
    g = gen.graph
    expected = sorted(c for c in _all_connected_cuts(g) if explicit_convex(g, c[0]) and explicit_convex(g, c[1]))
    assert enumerate_convex_cuts_bruteforce(g) == expected


@pytest.mark.parametrize("seed", range(12))
def test_is_convex_cut_agrees_with_explicit_paths(seed):
    g = random_connected(8, 8 + seed % 6, seed).graph
    d = all_pairs_distances(g)
    for side0, side1 in _all_connected_cuts(g):
        want = explicit_convex(g, side0) and explicit_convex(g, side1)
        assert bool(is_convex_cut(g, d, (side0, side1))) == want


def test_bruteforce_sides_connected_and_distinct():
    g = random_connected(10, 16, 3).graph
    cuts = enumerate_convex_cuts_bruteforce(g)
    assert len(set(cuts)) == len(cuts)
    for a, b in cuts:
        assert 0 in a
        for side in (a, b):
            sub = Graph(g.n, g.edges)
            inner = [e for e, (u, v) in enumerate(g.edges) if u in side and v in side]
            outside = set(range(g.m)) - set(inner)
            comps = sub.components(outside)
            assert any(set(c) == set(side) for c in comps)


def test_partial_cube_examples():
    assert is_partial_cube(hypercube(3).graph)
    verdict = is_partial_cube(cycle(5).graph)
    assert not verdict and verdict.witness[0] == "odd_cycle"
    verdict = is_partial_cube(complete_bipartite(2, 3).graph)
    assert not verdict and verdict.witness[0] == "not_transitive"
    g = complete_bipartite(2, 3).graph
    e, f, h = verdict.witness[1]
    from convexcuts.relations import theta_matrix

    th = theta_matrix(g)
    assert th[e, f] and th[f, h] and not th[e, h]


def test_hamming_c4_and_path():
    lab = hamming_labeling(cycle(4).graph)
    assert ["".join(map(str, lab.labels[v])) for v in range(4)] == ["00", "10", "11", "01"]
    lab = hamming_labeling(path(4).graph)
    assert ["".join(map(str, lab.labels[v])) for v in range(4)] == ["000", "100", "110", "111"]


def test_hamming_q3_is_coordinates_up_to_permutation():
    g = hypercube(3).graph
    lab = hamming_labeling(g)
    assert len(set(lab.labels)) == 8
    for u in range(8):
        for v in range(8):
            assert lab.hamming(u, v) == bin(u ^ v).count("1")


def test_hamming_rejects_non_partial_cube():
    with pytest.raises(GraphError):
        hamming_labeling(complete(4).graph)


def test_theta_classes_partition_edges():
    g = grid(3, 4).graph
    classes = theta_classes(g)
    assert sorted(e for c in classes for e in c) == list(range(g.m))
