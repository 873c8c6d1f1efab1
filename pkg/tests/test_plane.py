import pytest

from convexcuts.embedding import trace_faces
from convexcuts.errors import ResourceLimitError
from convexcuts.generators import complete, complete_bipartite, cycle, diamond, grid, hypercube, random_plane, wheel
from convexcuts.graph import Graph, Subdivision, all_pairs_distances, canonical_cut
from convexcuts.oracle import enumerate_convex_cuts_bruteforce, is_convex_cut
from convexcuts.plane import CYCLIC, NON_CYCLIC, PlaneContext, build_search_graph, enumerate_convex_cuts_plane
from convexcuts.relations import build_compatibility_matrices

from conftest import plane_corpus


def _edge_lists(cuts):
    return [sorted(c.edges) for c in cuts]


# frozen from an independent networkx enumeration of connected convex bipartitions
REFERENCE = {
    "cycle5": [[0, 2], [0, 3], [1, 3], [1, 4], [2, 4]],
    "cycle6": [[0, 3], [1, 4], [2, 5]],
    "complete4": [[0, 1, 2], [0, 3, 4], [1, 3, 5], [2, 4, 5], [0, 1, 4, 5], [0, 2, 3, 5], [1, 2, 3, 4]],
    "grid2x3": [[0, 2], [1, 3], [4, 5, 6]],
    "grid3x3": [[0, 2, 4], [1, 3, 5], [6, 7, 8], [9, 10, 11]],
    "complete_bipartite2_3": [],
    "hypercube3": [[0, 5, 8, 11], [1, 3, 9, 10], [2, 4, 6, 7]],
}


@pytest.mark.parametrize("name", sorted(REFERENCE))
def test_reference_cut_sets(name):
    gens = {g.name: g for g in (cycle(5), cycle(6), complete(4), grid(2, 3), grid(3, 3), complete_bipartite(2, 3), hypercube(3))}
    assert _edge_lists(enumerate_convex_cuts_plane(gens[name].embedding)) == REFERENCE[name]


def test_k4_kinds():
    cuts = enumerate_convex_cuts_plane(complete(4).embedding)
    kinds = {tuple(sorted(c.edges)): c.kind for c in cuts}
    # the spokes around the center vertex form the only cyclic cut
    assert [k for k, v in kinds.items() if v == CYCLIC] == [(0, 1, 2)]
    assert sum(v == NON_CYCLIC for v in kinds.values()) == 6


def test_cyclic_faces_form_ring():
    emb = wheel(5).embedding
    for c in enumerate_convex_cuts_plane(emb):
        if c.kind == CYCLIC:
            assert len(c.faces) == len(c.edges)
            assert emb.outer_face not in c.faces
        else:
            assert len(c.faces) == len(c.edges) - 1


@pytest.mark.parametrize("gen", plane_corpus(60), ids=lambda x: x.name)
def test_matches_oracle(gen):
    emb = gen.embedding
    cuts = enumerate_convex_cuts_plane(emb)
    assert sorted(c.partition for c in cuts) == enumerate_convex_cuts_bruteforce(emb.graph)
    assert len({c.partition for c in cuts}) == len(cuts)


@pytest.mark.parametrize("gen", plane_corpus(15), ids=lambda x: x.name)
def test_reflection_gives_same_cuts(gen):
    emb = gen.embedding
    a = enumerate_convex_cuts_plane(emb)
    b = enumerate_convex_cuts_plane(emb.reflected())
    assert [c.partition for c in a] == [c.partition for c in b]


def _swapped_children(g):
    prime = []
    for e, (u, v) in enumerate(g.edges):
        lo, hi = sorted((u, v))
        prime += [(g.n + e, hi), (lo, g.n + e)]
    return Subdivision(base=g, prime_graph=Graph(g.n + g.m, prime, require_connected=False))


@pytest.mark.parametrize("gen", [cycle(7), complete(4), wheel(6), grid(3, 3), random_plane(9, 4), random_plane(10, 8)],
                         ids=lambda x: x.name)
def test_child_labelling_convention_is_irrelevant(gen):
    emb = gen.embedding
    g = emb.graph
    sub = _swapped_children(g)
    mats = build_compatibility_matrices(g, sub)
    s = build_search_graph(emb, mats, sub)
    swapped = enumerate_convex_cuts_plane(emb, s=s, mats=mats, sub=sub)
    assert [c.partition for c in swapped] == [c.partition for c in enumerate_convex_cuts_plane(emb)]


def test_every_emitted_cut_is_convex_without_builtin_verification():
    for seed in range(30):
        emb = random_plane(5 + seed % 6, 100 + seed).embedding
        g = emb.graph
        d = all_pairs_distances(g)
        for c in enumerate_convex_cuts_plane(emb, verify=False):
            assert is_convex_cut(g, d, c.partition)
            assert canonical_cut(g.components(c.edges)[0], g.n) == c.partition


def test_search_graph_edges_share_bounded_face():
    emb = grid(3, 3).embedding
    ctx = PlaneContext(emb)
    for e, f in ctx.search_graph.edges:
        for face in ctx.search_graph.witness[(e, f)]:
            assert not emb.faces[face].is_outer
            assert e in emb.faces[face].edge_ids and f in emb.faces[face].edge_ids
            assert ctx.mats.child_related[e, f]


def test_diamond():
    emb = diamond().embedding
    assert len(enumerate_convex_cuts_plane(emb)) == len(enumerate_convex_cuts_bruteforce(emb.graph))


def test_frontier_limit():
    with pytest.raises(ResourceLimitError, match="frontier"):
        enumerate_convex_cuts_plane(grid(4, 4).embedding, max_frontier=0)


def test_context_reuse():
    emb = grid(3, 4).embedding
    ctx = PlaneContext(emb)
    assert enumerate_convex_cuts_plane(emb, context=ctx) == enumerate_convex_cuts_plane(emb)


def test_parallel_pair_cut_together():
    g = Graph(3, [(0, 1), (0, 1), (1, 2), (2, 0)])
    emb = trace_faces(g, [(0, 1, 3), (2, 1, 0), (3, 2)], outer=[0, 2, 3])
    cuts = enumerate_convex_cuts_plane(emb)
    assert sorted(c.partition for c in cuts) == enumerate_convex_cuts_bruteforce(g)
    # separating vertices 0 and 1 needs both copies of the doubled edge
    assert sorted(sorted(c.edges) for c in cuts) == [[0, 1, 2], [0, 1, 3], [2, 3]]
