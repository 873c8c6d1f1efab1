"""Distance-based edge relations (Djoković's theta, theta' on the subdivision, tau) and the matrices built from them."""

from dataclasses import dataclass

import numpy as np

from .graph import all_pairs_distances, distance_rows, require_bipartite


@dataclass(frozen=True)
class HalfSpace:
    """``W_xy``: vertices strictly closer to ``x`` than to ``y``."""

    edge: int
    x: int
    y: int
    members: frozenset

    def __contains__(self, w):
        return w in self.members


def halfspace(g, dist, e, reverse=False):
    x, y = g.edges[e]
    if reverse:
        x, y = y, x
    d = np.asarray(dist)
    members = frozenset(int(w) for w in np.flatnonzero(d[:, x] < d[:, y]))
    return HalfSpace(e, x, y, members)


def djokovic_related(g, dist, e, f):
    x, y = g.edges[e]
    u, v = g.edges[f]
    return bool(
        (dist[u][x] < dist[u][y] and dist[v][y] < dist[v][x])
        or (dist[v][x] < dist[v][y] and dist[u][y] < dist[u][x])
    )


def tau_related(g, dist, e, f):
    ue, ve = g.edges[e]
    uf, vf = g.edges[f]
    return bool(dist[ue][uf] == dist[ve][vf] == dist[ue][vf] == dist[ve][uf])


def _theta_row(dx, dy, U, V):
    """Edges ``(U[i], V[i])`` related to an edge with distance rows ``dx``, ``dy``."""
    return ((dx[U] < dy[U]) & (dy[V] < dx[V])) | ((dx[V] < dy[V]) & (dy[U] < dx[U]))


def edge_cut_set(g, e, dist=None, check=True):
    """Sorted edge ids ``C_e`` of all edges theta-related to ``e`` (bipartite ``g``)."""
    if check:
        require_bipartite(g)
    x, y = g.edges[e]
    dx, dy = distance_rows(g, (x, y), dist)
    U, V = g.endpoint_arrays
    return [int(i) for i in np.flatnonzero(_theta_row(dx, dy, U, V))]


def theta_matrix(g, dist=None):
    """Dense ``m x m`` boolean matrix of theta over the edges of ``g``."""
    if dist is None:
        dist = all_pairs_distances(g)
    U, V = g.endpoint_arrays
    DU = dist[:, U]  # DU[w, f] = d(w, U[f])
    DV = dist[:, V]
    # rows: e = (x, y); columns: f = (u, v)
    xu, yu = DU[U], DU[V]
    xv, yv = DV[U], DV[V]
    return ((xu < yu) & (yv < xv)) | ((xv < yv) & (yu < xu))


def tau_matrix(g, dist=None):
    if dist is None:
        dist = all_pairs_distances(g)
    U, V = g.endpoint_arrays
    a = dist[np.ix_(U, U)]
    b = dist[np.ix_(V, V)]
    c = dist[np.ix_(U, V)]
    d = dist[np.ix_(V, U)]
    return (a == b) & (b == c) & (c == d)


@dataclass(frozen=True)
class CompatibilityMatrices:
    """``a_tau`` over edges of G, ``a_theta_prime`` over child edges of G'.

    ``child_related[e, f]`` caches whether any child of ``e`` is
    theta'-related to any child of ``f``; ``compat`` is their union.
    """

    a_tau: np.ndarray
    a_theta_prime: np.ndarray
    child_related: np.ndarray
    compat: np.ndarray


def build_compatibility_matrices(g, sub, dist_prime=None):
    if dist_prime is None:
        dist_prime = all_pairs_distances(sub.prime_graph)
    n = g.n
    # restricting d' to original vertices halves it back to d
    dist = dist_prime[:n, :n] // 2
    a_tau = tau_matrix(g, dist)
    a_theta_prime = theta_matrix(sub.prime_graph, dist_prime)
    m = g.m
    child_related = a_theta_prime.reshape(m, 2, m, 2).any(axis=(1, 3))
    clash = a_tau & child_related
    if clash.any():
        e, f = (int(i) for i in np.argwhere(clash)[0])
        raise AssertionError(f"edges {e} and {f} are tau-related yet have theta'-related children")
    return CompatibilityMatrices(a_tau, a_theta_prime, child_related, a_tau | child_related)


def compatible(mats, sub, e, f):
    if e == f:
        raise ValueError("compatibility is defined for distinct edges only")
    if mats.a_tau[e, f]:
        return True
    ce, cf = sub.children_of(e), sub.children_of(f)
    return bool(mats.a_theta_prime[np.ix_(ce, cf)].any())
