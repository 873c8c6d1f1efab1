"""Ground truth: direct convexity checks, exhaustive cut enumeration, partial cubes."""

from typing import NamedTuple

import numpy as np

from .errors import GraphError, ResourceLimitError
from .graph import all_pairs_distances, canonical_cut, is_bipartite
from .relations import theta_matrix


class Verdict(NamedTuple):
    """Boolean result with supporting evidence; truthiness follows ``ok``."""

    ok: bool
    witness: object = None

    def __bool__(self):
        return bool(self.ok)


def _validate_partition(n, side_a, side_b):
    a, b = set(side_a), set(side_b)
    if not a or not b:
        raise ValueError("both sides of a cut must be nonempty")
    if a & b:
        raise ValueError(f"sides overlap in {sorted(a & b)}")
    if a | b != set(range(n)):
        raise ValueError(f"sides miss vertices {sorted(set(range(n)) - (a | b))}")
    return a, b


def is_convex_cut(g, dist, partition):
    """Check that both sides of ``partition`` are geodesically convex.

    On failure the witness ``(u, w, v)`` has ``u, v`` on one side and ``w``
    on the other, lying on a shortest ``u``-``v`` path.
    """
    if dist is None:
        dist = all_pairs_distances(g)
    dist = np.asarray(dist)
    a, b = _validate_partition(g.n, *partition)
    for side, other in ((a, b), (b, a)):
        s = np.array(sorted(side))
        d_ss = dist[np.ix_(s, s)]
        # a geodesic leaving the side must pass through a vertex of the
        # other side adjacent to it, so those are the only w worth checking
        boundary = sorted({w for w in other for _, x in g.adjacency[w] if x in side})
        for w in boundary:
            dw = dist[w, s]
            hit = np.argwhere(dw[:, None] + dw[None, :] == d_ss)
            if hit.size:
                i, j = hit[0]
                return Verdict(False, (int(s[i]), int(w), int(s[j])))
    return Verdict(True, None)


def _interval_masks(dist):
    """``masks[u][v]``: bitmask of vertices on some shortest ``u``-``v`` path."""
    n = dist.shape[0]
    weights = [1 << w for w in range(n)]
    masks = [[0] * n for _ in range(n)]
    for u in range(n):
        for v in range(u, n):
            on = np.flatnonzero(dist[u] + dist[v] == dist[u, v])
            mk = sum(weights[int(w)] for w in on)
            masks[u][v] = masks[v][u] = mk
    return masks


def _is_convex_mask(mask, members, masks):
    for i, u in enumerate(members):
        row = masks[u]
        for v in members[i + 1 :]:
            if row[v] & ~mask:
                return False
    return True


def _bits(mask):
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _connected(mask, nbr):
    if not mask:
        return False
    start = mask & -mask
    seen = start
    frontier = start
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= nbr[v]
        nxt &= mask & ~seen
        seen |= nxt
        frontier = nxt
    return seen == mask


def enumerate_convex_cuts_bruteforce(g, dist=None, max_vertices=16):
    """Every convex cut of ``g`` as ``(side with vertex 0, other side)``, sorted.

    Enumerates connected vertex sets containing vertex 0 by growing from the
    seed, so each set is produced exactly once.
    """
    if g.n > max_vertices:
        raise ResourceLimitError(f"brute-force enumeration capped at {max_vertices} vertices, graph has {g.n}")
    if dist is None:
        dist = all_pairs_distances(g)
    dist = np.asarray(dist)
    n = g.n
    full = (1 << n) - 1
    nbr = [0] * n
    for u, v in g.edges:
        nbr[u] |= 1 << v
        nbr[v] |= 1 << u
    masks = _interval_masks(dist)
    cuts = []
    # standard reverse-search style enumeration: (current set, candidate
    # frontier, excluded vertices)
    stack = [(1, nbr[0], 1)]
    while stack:
        cur, cand, excl = stack.pop()
        rest = full & ~cur
        if rest and _connected(rest, nbr):
            if _is_convex_mask(cur, _bits(cur), masks) and _is_convex_mask(rest, _bits(rest), masks):
                cuts.append(canonical_cut(_bits(cur), n))
        cand &= ~excl
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            new = cur | low
            new_excl = excl | low
            stack.append((new, (cand | nbr[v]) & ~new & ~new_excl, new_excl))
            excl |= low
    cuts.sort()
    return cuts


def is_partial_cube(g, dist=None):
    """Bipartite with transitive theta.

    Diagnosis on failure is ``("odd_cycle", cycle)`` or
    ``("not_transitive", (e, f, h))`` with ``e~f``, ``f~h`` but not ``e~h``.
    """
    ok, info = is_bipartite(g)
    if not ok:
        return Verdict(False, ("odd_cycle", info))
    theta = theta_matrix(g, dist)
    # transitivity: theta o theta must stay inside theta
    t = theta.astype(np.int32)
    two_step = (t @ t) > 0
    bad = two_step & ~theta
    if bad.any():
        e, h = (int(i) for i in np.argwhere(bad)[0])
        f = int(np.flatnonzero(theta[e] & theta[:, h])[0])
        return Verdict(False, ("not_transitive", (e, f, h)))
    return Verdict(True, None)


def theta_classes(g, dist=None):
    """Theta-classes of a partial cube, ordered by smallest edge id."""
    theta = theta_matrix(g, dist)
    seen = np.zeros(g.m, dtype=bool)
    classes = []
    for e in range(g.m):
        if not seen[e]:
            cls = np.flatnonzero(theta[e])
            seen[cls] = True
            classes.append(tuple(int(x) for x in cls))
    return classes


class HammingLabeling(NamedTuple):
    labels: tuple
    class_of_bit: tuple

    def hamming(self, u, v):
        return sum(a != b for a, b in zip(self.labels[u], self.labels[v]))


def hamming_labeling(g, dist=None):
    """Bit ``i`` of a vertex says which semicube of class ``i`` holds it (0 = vertex 0's side)."""
    if dist is None:
        dist = all_pairs_distances(g)
    verdict = is_partial_cube(g, dist)
    if not verdict:
        raise GraphError(f"not a partial cube: {verdict.witness[0]}")
    classes = theta_classes(g, dist)
    bits = []
    for cls in classes:
        x, y = g.edges[cls[0]]
        near_x = dist[:, x] < dist[:, y]
        bits.append(near_x if not near_x[0] else ~near_x)
    labels = tuple(tuple(int(b[v]) for b in bits) for v in range(g.n))
    return HammingLabeling(labels, tuple(classes))
