"""Undirected multigraphs with stable edge ids, hop metrics and subdivisions."""

from collections import deque
from dataclasses import dataclass
from functools import cached_property

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import shortest_path

from .errors import GraphError, NotBipartiteError


class Graph:
    """Connected, loop-free multigraph on vertices ``0..n-1``.

    Edge ``i`` is ``edges[i] == (u, v)`` as given at construction time; ids
    are never renumbered, so every derived structure (subdivision, matrices,
    embeddings) can address edges by the same integers.
    """

    def __init__(self, vertex_count, edges, *, require_connected=True):
        self.vertex_count = int(vertex_count)
        if self.vertex_count < 1:
            raise GraphError("graph needs at least one vertex")
        checked = []
        for eid, (u, v) in enumerate(edges):
            u, v = int(u), int(v)
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise GraphError(f"edge {eid} = ({u}, {v}) has an endpoint outside 0..{self.vertex_count - 1}")
            if u == v:
                raise GraphError(f"edge {eid} is a self-loop at vertex {u}")
            checked.append((u, v))
        self.edges = tuple(checked)
        adjacency = [[] for _ in range(self.vertex_count)]
        for eid, (u, v) in enumerate(self.edges):
            adjacency[u].append((eid, v))
            adjacency[v].append((eid, u))
        self.adjacency = tuple(tuple(a) for a in adjacency)
        if require_connected:
            comps = self.components()
            if len(comps) > 1:
                reps = ", ".join(str(c[0]) for c in comps)
                raise GraphError(f"graph is disconnected: {len(comps)} components containing vertices {reps}")

    @property
    def n(self):
        return self.vertex_count

    @property
    def m(self):
        return len(self.edges)

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    def __eq__(self, other):
        return isinstance(other, Graph) and self.vertex_count == other.vertex_count and self.edges == other.edges

    def __hash__(self):
        return hash((self.vertex_count, self.edges))

    @cached_property
    def endpoint_arrays(self):
        """Two int arrays ``(U, V)`` with ``edges[i] == (U[i], V[i])``."""
        if not self.edges:
            return np.zeros(0, dtype=np.intp), np.zeros(0, dtype=np.intp)
        arr = np.asarray(self.edges, dtype=np.intp)
        return arr[:, 0].copy(), arr[:, 1].copy()

    @cached_property
    def csr(self):
        u, v = self.endpoint_arrays
        rows = np.concatenate([u, v])
        cols = np.concatenate([v, u])
        data = np.ones(len(rows), dtype=np.int8)
        return coo_matrix((data, (rows, cols)), shape=(self.n, self.n)).tocsr()

    def other_end(self, eid, x):
        u, v = self.edges[eid]
        return v if x == u else u

    def degree(self, v):
        return len(self.adjacency[v])

    def components(self, removed_edges=()):
        """Connected components (sorted vertex lists) after deleting ``removed_edges``."""
        removed = set(removed_edges)
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp = [s]
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for eid, y in self.adjacency[x]:
                    if eid in removed or seen[y]:
                        continue
                    seen[y] = True
                    comp.append(y)
                    queue.append(y)
            comps.append(sorted(comp))
        return comps

    def is_biconnected(self):
        """Two-connectivity diagnostic; never enforced."""
        import networkx as nx

        if self.n < 2:
            return False
        h = nx.Graph()
        h.add_nodes_from(range(self.n))
        h.add_edges_from(self.edges)
        return nx.is_biconnected(h)

    def cut_edges(self, side):
        """Edge ids with exactly one endpoint in ``side``."""
        inside = np.zeros(self.n, dtype=bool)
        inside[list(side)] = True
        u, v = self.endpoint_arrays
        return [int(e) for e in np.flatnonzero(inside[u] != inside[v])]


def build_graph(vertex_count, edge_list):
    """Validate an edge list and return a connected :class:`Graph`.

    >>> build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).m
    4
    """
    return Graph(vertex_count, edge_list)


def bfs_distances(g, source):
    """Hop distances from ``source`` as an int array (``-1`` if unreachable)."""
    dist = np.full(g.n, -1, dtype=np.int64)
    dist[source] = 0
    queue = deque([source])
    adjacency = g.adjacency
    while queue:
        x = queue.popleft()
        dx = dist[x] + 1
        for _, y in adjacency[x]:
            if dist[y] < 0:
                dist[y] = dx
                queue.append(y)
    return dist


def all_pairs_distances(g):
    """Dense ``n x n`` hop-count matrix (one BFS per source)."""
    d = shortest_path(g.csr, method="D", unweighted=True, directed=False)
    if np.isinf(d).any():
        raise GraphError("distance table requested for a disconnected graph")
    return d.astype(np.int32)


def distance_rows(g, sources, dist=None):
    """Distance rows for a few sources, reusing ``dist`` when it is available."""
    if dist is not None:
        return np.asarray(dist)[list(sources)]
    d = shortest_path(g.csr, method="D", unweighted=True, directed=False, indices=list(sources))
    return d.astype(np.int64)


def is_bipartite(g):
    """Return ``(True, coloring)`` or ``(False, odd_cycle)``.

    The coloring is a list of 0/1 per vertex with vertex 0 colored 0. The odd
    cycle witness is a closed vertex sequence ``[x0, x1, ..., x0]``.
    """
    color = [-1] * g.n
    parent = [-1] * g.n
    depth = [0] * g.n
    for root in range(g.n):
        if color[root] >= 0:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for _, y in g.adjacency[x]:
                if color[y] < 0:
                    color[y] = 1 - color[x]
                    parent[y] = x
                    depth[y] = depth[x] + 1
                    queue.append(y)
                elif color[y] == color[x]:
                    return False, _odd_cycle(x, y, parent, depth)
    return True, color


def _odd_cycle(x, y, parent, depth):
    left, right = [x], [y]
    a, b = x, y
    while depth[a] > depth[b]:
        a = parent[a]
        left.append(a)
    while depth[b] > depth[a]:
        b = parent[b]
        right.append(b)
    while a != b:
        a, b = parent[a], parent[b]
        left.append(a)
        right.append(b)
    cycle = left + right[-2::-1]
    return cycle + [cycle[0]]


def require_bipartite(g):
    ok, info = is_bipartite(g)
    if not ok:
        raise NotBipartiteError(f"graph is not bipartite (odd cycle {info})", odd_cycle=info)
    return info


@dataclass(frozen=True)
class Subdivision:
    """The graph G' obtained by splitting every edge ``e`` at a midpoint.

    The midpoint of ``e`` is vertex ``n + e``; the two halves of ``e`` are
    the G' edges ``2e`` (incident to the smaller endpoint id, the *left*
    child) and ``2e + 1`` (the *right* child).
    """

    base: Graph
    prime_graph: Graph

    def midpoint_of(self, eid):
        return self.base.n + eid

    def children_of(self, eid):
        return 2 * eid, 2 * eid + 1

    @staticmethod
    def parent_of(child):
        return child // 2


def subdivide(g):
    """Build the subdivision G' (``n + m`` vertices, ``2m`` edges)."""
    prime_edges = []
    for eid, (u, v) in enumerate(g.edges):
        lo, hi = (u, v) if u < v else (v, u)
        mid = g.n + eid
        prime_edges.append((lo, mid))
        prime_edges.append((mid, hi))
    prime = Graph(g.n + g.m, prime_edges, require_connected=False)
    return Subdivision(base=g, prime_graph=prime)


def canonical_cut(side, n):
    """Normalize a bipartition: the side containing vertex 0 comes first."""
    s = set(side)
    rest = sorted(set(range(n)) - s)
    s = sorted(s)
    if 0 in s:
        return tuple(s), tuple(rest)
    return tuple(rest), tuple(s)


def partition_from_cut_set(g, cut_set):
    """Vertex bipartition left by deleting ``cut_set``; ``None`` unless exactly two parts remain."""
    comps = g.components(cut_set)
    if len(comps) != 2:
        return None
    # the removed edges must be exactly the edges between the two parts
    if sorted(g.cut_edges(comps[0])) != sorted(set(cut_set)):
        return None
    return canonical_cut(comps[0], g.n)
