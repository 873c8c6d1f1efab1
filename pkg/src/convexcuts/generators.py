"""Deterministic test-family generators.

Every generator returns a :class:`Generated` record holding the graph and,
for families drawn in the plane here, a :class:`PlaneEmbedding` built from
straight-line coordinates.
"""

import itertools
import math
from dataclasses import dataclass

import networkx as nx
import numpy as np
from scipy.spatial import Delaunay

from .embedding import delete_edges, embedding_from_coordinates
from .errors import GraphError
from .graph import Graph


@dataclass(frozen=True)
class Generated:
    name: str
    graph: Graph
    embedding: object = None
    coords: tuple = None


def _planar(name, n, edges, coords):
    g = Graph(n, edges)
    coords = tuple((float(x), float(y)) for x, y in coords)
    return Generated(name, g, embedding_from_coordinates(g, coords), coords)


def _circle(k, radius=1.0, phase=math.pi / 2):
    return [(radius * math.cos(phase - 2 * math.pi * i / k), radius * math.sin(phase - 2 * math.pi * i / k)) for i in range(k)]


def cycle(n):
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    edges = [(i, (i + 1) % n) for i in range(n)]
    return _planar(f"cycle{n}", n, edges, _circle(n))


def path(n):
    if n < 2:
        raise GraphError("path needs n >= 2")
    return Generated(f"path{n}", Graph(n, [(i, i + 1) for i in range(n - 1)]))


def grid(a, b):
    """``a`` rows by ``b`` columns; vertex ``r * b + c`` sits at ``(c, -r)``."""
    if a < 1 or b < 1 or a * b < 2:
        raise GraphError("grid needs a, b >= 1 and at least two vertices")
    edges = [(r * b + c, r * b + c + 1) for r in range(a) for c in range(b - 1)]
    edges += [(r * b + c, (r + 1) * b + c) for r in range(a - 1) for c in range(b)]
    coords = [(c, -r) for r in range(a) for c in range(b)]
    if a < 2 or b < 2:
        return Generated(f"grid{a}x{b}", Graph(a * b, edges))
    return _planar(f"grid{a}x{b}", a * b, edges, coords)


def hypercube(d):
    if d < 1:
        raise GraphError("hypercube needs d >= 1")
    n = 1 << d
    edges = [(v, v | (1 << i)) for v in range(n) for i in range(d) if not v & (1 << i)]
    name = f"hypercube{d}"
    if d == 2:
        return _planar(name, n, edges, [(0, 0), (1, 0), (0, 1), (1, 1)])
    if d == 3:
        corner = {(0, 0): (-1, -1), (1, 0): (1, -1), (0, 1): (-1, 1), (1, 1): (1, 1)}
        coords = []
        for v in range(n):
            x, y = corner[(v & 1, (v >> 1) & 1)]
            s = 1 if v & 4 else 2
            coords.append((s * x, s * y))
        return _planar(name, n, edges, coords)
    return Generated(name, Graph(n, edges))


def complete(n):
    if n < 2:
        raise GraphError("complete graph needs n >= 2")
    edges = list(itertools.combinations(range(n), 2))
    if n == 3:
        return _planar("complete3", n, edges, _circle(3))
    if n == 4:
        # center vertex 0 inside the triangle 1, 2, 3
        return _planar("complete4", n, edges, [(0.0, 0.0)] + _circle(3))
    return Generated(f"complete{n}", Graph(n, edges))


def wheel(n):
    """Hub 0 and rim 1..n; spokes get edge ids 0..n-1, rim edges follow."""
    if n < 3:
        raise GraphError("wheel needs a rim of n >= 3 vertices")
    edges = [(0, i) for i in range(1, n + 1)]
    edges += [(i, i % n + 1) for i in range(1, n + 1)]
    return _planar(f"wheel{n}", n + 1, edges, [(0.0, 0.0)] + _circle(n))


def complete_bipartite(a, b):
    if a < 1 or b < 1:
        raise GraphError("complete bipartite graph needs a, b >= 1")
    edges = [(i, a + j) for i in range(a) for j in range(b)]
    name = f"complete_bipartite{a}_{b}"
    if a == 2 and b >= 2:
        coords = [(0.0, 1.0), (0.0, -1.0)] + [(j - (b - 1) / 2, 0.0) for j in range(b)]
        return _planar(name, a + b, edges, coords)
    return Generated(name, Graph(a + b, edges))


def diamond():
    """K4 minus the edge between the center and vertex 1."""
    base = complete(4)
    emb = delete_edges(base.embedding, [0])
    return Generated("diamond", emb.graph, emb, base.coords)


def _random_tree_edges(rng, vertices):
    order = list(rng.permutation(vertices))
    edges = []
    for i in range(1, len(order)):
        j = int(rng.integers(0, i))
        edges.append((int(order[j]), int(order[i])))
    return edges


def random_connected(n, m, seed):
    """Random simple connected graph with ``n`` vertices and ``m`` edges."""
    if n < 1 or not n - 1 <= m <= n * (n - 1) // 2:
        raise GraphError(f"random graph needs n - 1 <= m <= n(n-1)/2, got n={n}, m={m}")
    rng = np.random.default_rng(seed)
    edges = _random_tree_edges(rng, n)
    present = {frozenset(e) for e in edges}
    rest = [p for p in itertools.combinations(range(n), 2) if frozenset(p) not in present]
    pick = rng.choice(len(rest), size=m - len(edges), replace=False) if m > len(edges) else []
    edges += [rest[int(i)] for i in sorted(pick)]
    return Generated(f"random{n}_{m}_{seed}", Graph(n, edges))


def random_bipartite(a, b, m, seed):
    """Random connected bipartite graph with parts ``0..a-1`` and ``a..a+b-1``."""
    n = a + b
    if a < 1 or b < 1 or not n - 1 <= m <= a * b:
        raise GraphError(f"random bipartite graph needs a + b - 1 <= m <= a*b, got a={a}, b={b}, m={m}")
    rng = np.random.default_rng(seed)
    # spanning tree that alternates between parts
    left = [int(x) for x in rng.permutation(a)]
    right = [int(x) + a for x in rng.permutation(b)]
    edges = [(left[0], right[0])]
    done_l, done_r = [left[0]], [right[0]]
    pending = [("L", v) for v in left[1:]] + [("R", v) for v in right[1:]]
    pending = [pending[int(i)] for i in rng.permutation(len(pending))]
    for side, v in pending:
        if side == "L":
            edges.append((v, done_r[int(rng.integers(0, len(done_r)))]))
            done_l.append(v)
        else:
            edges.append((done_l[int(rng.integers(0, len(done_l)))], v))
            done_r.append(v)
    present = {frozenset(e) for e in edges}
    rest = [(i, j) for i in range(a) for j in range(a, n) if frozenset((i, j)) not in present]
    if m > len(edges):
        pick = rng.choice(len(rest), size=m - len(edges), replace=False)
        edges += [rest[int(i)] for i in sorted(pick)]
    return Generated(f"random_bipartite{a}_{b}_{m}_{seed}", Graph(n, edges))


def random_plane(n, seed, keep=None):
    """Two-connected subgraph of a Delaunay triangulation of ``n`` random points.

    Edges are removed in random order while the graph stays two-connected,
    until ``keep`` edges remain (default: a random target between the cycle
    size and the full triangulation).
    """
    if n < 3:
        raise GraphError("random plane graph needs n >= 3")
    rng = np.random.default_rng(seed)
    pts = rng.random((n, 2))
    tri = Delaunay(pts)
    edge_set = set()
    for simplex in tri.simplices:
        for i, j in itertools.combinations(sorted(int(x) for x in simplex), 2):
            edge_set.add((i, j))
    edges = sorted(edge_set)
    h = nx.Graph(edges)
    if keep is None:
        keep = int(rng.integers(n, len(edges) + 1))
    for idx in rng.permutation(len(edges)):
        if h.number_of_edges() <= keep:
            break
        u, v = edges[int(idx)]
        h.remove_edge(u, v)
        if not nx.is_biconnected(h):
            h.add_edge(u, v)
    kept = sorted(tuple(sorted(e)) for e in h.edges())
    return _planar(f"random_plane{n}_{seed}", n, kept, pts.tolist())


FAMILIES = {
    "cycle": (cycle, 1),
    "path": (path, 1),
    "grid": (grid, 2),
    "hypercube": (hypercube, 1),
    "complete": (complete, 1),
    "wheel": (wheel, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "random": (random_connected, 3),
    "random_bipartite": (random_bipartite, 4),
    "random_plane": (random_plane, 2),
    "diamond": (diamond, 0),
}


def generate(family, *params):
    """Build a member of ``family``; ``params`` are integers as listed in ``FAMILIES``."""
    try:
        fn, arity = FAMILIES[family]
    except KeyError:
        raise GraphError(f"unknown family {family!r}; choose from {', '.join(sorted(FAMILIES))}") from None
    if len(params) != arity:
        raise GraphError(f"family {family!r} takes {arity} integer parameter(s), got {len(params)}")
    return fn(*(int(p) for p in params))
