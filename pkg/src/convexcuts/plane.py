"""All convex cuts of a plane graph by search over compatible dual paths.

A convex cut of a plane graph is a bond, so its cut-set is crossed by a
simple closed curve through faces: either a chain of bounded faces that
starts and ends on the outer face (non-cyclic) or a ring of bounded faces
(cyclic). The search grows such chains edge by edge through the search
graph ``S`` and keeps only sequences whose edges are pairwise compatible.
"""

from collections import defaultdict
from dataclasses import dataclass

import numpy as np

from .errors import ResourceLimitError, VerificationError
from .graph import all_pairs_distances, canonical_cut, subdivide
from .oracle import is_convex_cut
from .relations import build_compatibility_matrices

NON_CYCLIC = "non-cyclic"
CYCLIC = "cyclic"


@dataclass(frozen=True)
class SearchGraph:
    """Pairs of edges on a common bounded face with theta'-related children.

    ``by_face[e][F]`` lists the neighbours of ``e`` in ``S`` witnessed by
    bounded face ``F``; ``witness[(e, f)]`` the faces witnessing ``{e, f}``.
    """

    m: int
    by_face: tuple
    witness: dict

    @property
    def edges(self):
        return sorted(p for p in self.witness if p[0] < p[1])

    def neighbours(self, e):
        return sorted({f for fs in self.by_face[e].values() for f in fs})


@dataclass(frozen=True)
class CutSet:
    kind: str
    edges: tuple
    faces: tuple
    partition: tuple

    @property
    def key(self):
        return (len(self.edges), tuple(sorted(self.edges)))


def build_search_graph(emb, mats, sub=None):
    m = emb.graph.m
    by_face = [defaultdict(list) for _ in range(m)]
    witness = defaultdict(list)
    rel = mats.child_related
    for face in emb.faces:
        if face.is_outer:
            continue
        ids = sorted(set(face.edge_ids))
        for i, e in enumerate(ids):
            for f in ids[i + 1 :]:
                if rel[e, f]:
                    by_face[e][face.index].append(f)
                    by_face[f][face.index].append(e)
                    witness[(e, f)].append(face.index)
                    witness[(f, e)].append(face.index)
    by_face = tuple({k: tuple(v) for k, v in d.items()} for d in by_face)
    return SearchGraph(m, by_face, {k: tuple(v) for k, v in witness.items()})


def _bitrows(matrix):
    """Row ``i`` of a boolean matrix as a Python int bitmask."""
    rows = []
    packed = np.packbits(matrix, axis=1, bitorder="little")
    for r in packed:
        rows.append(int.from_bytes(r.tobytes(), "little"))
    return rows


class PlaneContext:
    """Everything the search needs, computed once per embedding."""

    def __init__(self, emb, dist_prime=None):
        self.emb = emb
        self.graph = emb.graph
        self.sub = subdivide(emb.graph)
        if dist_prime is None:
            dist_prime = all_pairs_distances(self.sub.prime_graph)
        self.dist = dist_prime[: self.graph.n, : self.graph.n] // 2
        self.mats = build_compatibility_matrices(self.graph, self.sub, dist_prime)
        self.search_graph = build_search_graph(emb, self.mats, self.sub)


def enumerate_convex_cuts_plane(emb, s=None, mats=None, sub=None, *, verify=True, max_frontier=10**6, context=None):
    """Enumerate every convex cut of the plane graph ``emb`` exactly once.

    Returns :class:`CutSet` records sorted by cut-set size and edge list.
    With ``verify`` every emitted cut is re-checked directly and a
    :class:`VerificationError` is raised on disagreement.
    """
    g = emb.graph
    if context is None and (s is None or mats is None):
        context = PlaneContext(emb)
    if context is not None:
        s, mats, dist = context.search_graph, context.mats, context.dist
    else:
        dist = None
    compat_rows = _bitrows(mats.compat)
    outer = emb.outer_face
    edge_faces = emb.edge_faces
    m = g.m
    tabu = 0
    found = []

    def other(e, face):
        a, b = edge_faces[e]
        return b if a == face else a

    def run(e0, f0, closing_face):
        """Breadth-first growth of sequences starting at ``e0`` into ``f0``."""
        emitted = []
        # (edges, faces, current face, consumed faces mask, used edges mask, allowed mask)
        frontier = [((e0,), (f0,), f0, 1 << f0, 1 << e0, compat_rows[e0])]
        while frontier:
            nxt = []
            for seq, faces, cur, consumed, used, allowed in frontier:
                last = seq[-1]
                for f in s.by_face[last].get(cur, ()):
                    bit = 1 << f
                    if closing_face is not None and cur == closing_face:
                        if f == e0 and len(seq) > 1:
                            emitted.append((seq, faces))
                        continue
                    if f == e0 or bit & (tabu | used) or not bit & allowed:
                        continue
                    nf = other(f, cur)
                    if nf == outer:
                        if closing_face is None:
                            emitted.append((seq + (f,), faces))
                        continue
                    if consumed >> nf & 1:
                        continue
                    nxt.append((seq + (f,), faces + (nf,), nf, consumed | (1 << nf), used | bit, allowed & compat_rows[f]))
            if len(nxt) > max_frontier:
                raise ResourceLimitError(
                    f"search frontier from edge {e0} reached {len(nxt)} live sequences (limit {max_frontier})"
                )
            frontier = nxt
        return emitted

    for e0 in range(m):
        if not emb.on_outer_face(e0):
            continue
        _check_bound(e0, m, run(e0, other(e0, outer), None), NON_CYCLIC, found)
        tabu |= 1 << e0
    for e0 in range(m):
        if emb.on_outer_face(e0):
            continue
        f0, back = edge_faces[e0]
        _check_bound(e0, m, run(e0, f0, back), CYCLIC, found)
        tabu |= 1 << e0

    if verify and dist is None:
        dist = all_pairs_distances(g)
    cuts = []
    for kind, seq, faces in found:
        comps = g.components(seq)
        if len(comps) != 2:
            raise VerificationError(f"{kind} sequence {list(seq)} leaves {len(comps)} components", cut=seq)
        partition = canonical_cut(comps[0], g.n)
        if verify:
            verdict = is_convex_cut(g, dist, partition)
            if not verdict:
                raise VerificationError(
                    f"{kind} cut-set {list(seq)} is not convex (witness {verdict.witness})", cut=seq
                )
        cuts.append(CutSet(kind, tuple(seq), tuple(faces), partition))
    cuts.sort(key=lambda c: c.key)
    return cuts


def _check_bound(e0, m, results, kind, found):
    # never expected to bind; a violation means the search emitted junk
    if len(results) > m**4:
        raise AssertionError(f"{len(results)} cuts through edge {e0} exceed the |E|^4 bound")
    found.extend((kind, seq, faces) for seq, faces in results)


def convex_cuts_plane(emb, **kwargs):
    return enumerate_convex_cuts_plane(emb, **kwargs)
