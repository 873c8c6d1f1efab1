"""All convex cuts of a bipartite graph by pairwise comparison of cut-sets.

For an edge ``e`` of a bipartite graph the theta-class ``C_e`` is always an
edge cut splitting the graph into the two halfspaces of ``e``; that cut is
convex exactly when every ``f`` in ``C_e`` has ``C_f == C_e``.
"""

from dataclasses import dataclass

import numpy as np

from .graph import distance_rows, require_bipartite
from .relations import _theta_row


@dataclass(frozen=True)
class BipartiteCutReport:
    convex_cut_sets: tuple
    per_edge_verdict: tuple

    def __len__(self):
        return len(self.convex_cut_sets)


def _cut_set(g, e, dist, U, V):
    x, y = g.edges[e]
    dx, dy = distance_rows(g, (x, y), dist)
    return np.flatnonzero(_theta_row(dx, dy, U, V))


def _edge_verdict(g, e, dist, U, V, mark):
    """Whether ``C_e`` is the cut-set of a convex cut; ``mark`` is a scratch bool array."""
    c_e = _cut_set(g, e, dist, U, V)
    mark[c_e] = True
    try:
        for f in c_e:
            if f == e:
                continue
            c_f = _cut_set(g, int(f), dist, U, V)
            # a cut-set has no proper subset that is a cut-set, so equal
            # size plus all-marked is equality
            if c_f.size != c_e.size or not mark[c_f].all():
                return False, c_e
        return True, c_e
    finally:
        mark[c_e] = False


def _verdict_chunk(args):
    g, edges, dist = args
    U, V = g.endpoint_arrays
    mark = np.zeros(g.m, dtype=bool)
    out = []
    for e in edges:
        ok, c_e = _edge_verdict(g, e, dist, U, V, mark)
        out.append((e, ok, tuple(int(x) for x in c_e) if ok else None))
    return out


def convex_cuts_bipartite(g, dist=None, n_jobs=1, check=True):
    """Enumerate the convex cut-sets of the connected bipartite graph ``g``.

    ``dist`` (optional) is a precomputed distance table; without it every
    cut-set is computed from two fresh breadth-first searches. ``n_jobs > 1``
    spreads the outer loop over worker processes; results are merged by edge
    index so the report does not depend on scheduling.
    """
    if check:
        require_bipartite(g)
    edges = list(range(g.m))
    if n_jobs is not None and n_jobs > 1 and g.m > 1:
        from concurrent.futures import ProcessPoolExecutor

        chunks = [edges[i::n_jobs] for i in range(n_jobs)]
        with ProcessPoolExecutor(max_workers=n_jobs) as pool:
            results = [r for part in pool.map(_verdict_chunk, [(g, c, dist) for c in chunks]) for r in part]
    else:
        results = _verdict_chunk((g, edges, dist))
    results.sort()
    verdict = tuple(ok for _, ok, _ in results)
    seen = set()
    cut_sets = []
    for _, ok, c_e in results:
        if ok and c_e not in seen:
            seen.add(c_e)
            cut_sets.append(c_e)
    return BipartiteCutReport(tuple(cut_sets), verdict)
