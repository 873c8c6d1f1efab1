"""Combinatorial plane embeddings: rotation systems, faces, opposite edges.

Rotations list the incident edge ids of each vertex in clockwise order.
Faces are traced with the face on the right of every dart, which walks
bounded faces clockwise; the stored boundary order of a bounded face is
therefore its clockwise order.
"""

import warnings
from dataclasses import dataclass

from .errors import EmbeddingError
from .graph import Graph


@dataclass(frozen=True)
class Face:
    """One face; ``boundary`` is a cyclic list of darts ``(edge_id, direction)``.

    Direction 0 walks edge ``(u, v)`` from ``u`` to ``v``, direction 1 back.
    """

    index: int
    boundary: tuple
    is_outer: bool = False

    def __len__(self):
        return len(self.boundary)

    @property
    def edge_ids(self):
        return tuple(e for e, _ in self.boundary)


@dataclass(frozen=True)
class Opposites:
    """Result of :func:`opposite_edges`; ``unique`` is set for even faces only."""

    unique: int | None = None
    left: int | None = None
    right: int | None = None

    @property
    def is_unique(self):
        return self.unique is not None


class PlaneEmbedding:
    def __init__(self, graph, rotation, faces, outer_face):
        self.graph = graph
        self.rotation = rotation
        self.faces = tuple(
            Face(f.index, f.boundary, is_outer=(f.index == outer_face)) for f in faces
        )
        self.outer_face = outer_face
        dart_face = {}
        position = {}
        for f in self.faces:
            for pos, (e, d) in enumerate(f.boundary):
                dart_face[(e, d)] = f.index
                position[(f.index, e)] = (pos, d)
        self.dart_face = dart_face
        self._position = position
        self.edge_faces = tuple((dart_face[(e, 0)], dart_face[(e, 1)]) for e in range(graph.m))

    def __repr__(self):
        return f"PlaneEmbedding(n={self.graph.n}, m={self.graph.m}, faces={len(self.faces)}, outer={self.outer_face})"

    @property
    def bounded_faces(self):
        return [f for f in self.faces if not f.is_outer]

    def face_edges(self, face):
        return self.faces[face].edge_ids

    def position(self, face, e):
        """``(index in boundary, direction)`` of edge ``e`` on ``face``."""
        try:
            return self._position[(face, e)]
        except KeyError:
            raise ValueError(f"edge {e} does not bound face {face}") from None

    def other_face(self, e, face):
        a, b = self.edge_faces[e]
        return b if a == face else a

    def on_outer_face(self, e):
        return self.outer_face in self.edge_faces[e]

    def is_odd(self, face):
        return len(self.faces[face]) % 2 == 1

    def dart(self, face, e):
        """Tail and head of ``e`` as walked along ``face``."""
        _, d = self.position(face, e)
        u, v = self.graph.edges[e]
        return (u, v) if d == 0 else (v, u)

    def reflected(self):
        """Mirror image: every rotation reversed, outer face carried over."""
        rotation = [tuple(reversed(r)) for r in self.rotation]
        faces = _walk_faces(self.graph, rotation)
        e, d = self.faces[self.outer_face].boundary[0]
        # mirroring swaps the two sides of every dart
        outer = next(f.index for f in faces if (e, 1 - d) in f.boundary)
        return PlaneEmbedding(self.graph, tuple(rotation), faces, outer)


def _check_rotation(graph, rotation):
    if len(rotation) != graph.n:
        raise EmbeddingError(f"rotation system lists {len(rotation)} vertices, graph has {graph.n}")
    for v in range(graph.n):
        expected = sorted(e for e, _ in graph.adjacency[v])
        if sorted(rotation[v]) != expected:
            raise EmbeddingError(f"rotation at vertex {v} is {list(rotation[v])}, incident edges are {expected}")


def _walk_faces(graph, rotation):
    # successor of an edge around a vertex: previous entry in the clockwise list
    pred = []
    for v in range(graph.n):
        r = rotation[v]
        pred.append({e: r[i - 1] for i, e in enumerate(r)})
    seen = set()
    faces = []
    for e0 in range(graph.m):
        for d0 in (0, 1):
            if (e0, d0) in seen:
                continue
            boundary = []
            e, d = e0, d0
            while (e, d) not in seen:
                seen.add((e, d))
                boundary.append((e, d))
                u, v = graph.edges[e]
                head = v if d == 0 else u
                nxt = pred[head][e]
                nu, _ = graph.edges[nxt]
                if graph.edges[nxt][0] == graph.edges[nxt][1]:
                    raise EmbeddingError(f"self-loop {nxt}")
                d = 0 if nu == head else 1
                e = nxt
            if (e, d) != (e0, d0):
                raise EmbeddingError("face walk did not close; rotation system is inconsistent")
            faces.append(Face(len(faces), tuple(boundary)))
    return faces


def _match_outer(faces, outer):
    if isinstance(outer, int):
        if not 0 <= outer < len(faces):
            raise EmbeddingError(f"outer face index {outer} out of range")
        return outer
    wanted = [int(e) for e in outer]

    def rotations(seq):
        return {tuple(seq[i:] + seq[:i]) for i in range(len(seq))}

    for candidates in (rotations(wanted), rotations(wanted[::-1])):
        for f in faces:
            if tuple(f.edge_ids) in candidates:
                return f.index
    for f in faces:
        if sorted(f.edge_ids) == sorted(wanted):
            return f.index
    raise EmbeddingError(f"no face is bounded by edges {wanted}")


def trace_faces(graph, rotation, outer=None):
    """Trace all faces of the rotation system ``rotation`` over ``graph``.

    ``outer`` selects the unbounded face, either by face index or by its
    boundary edge ids. Without a hint the longest face is chosen (smallest
    index on ties) and a warning is emitted.
    """
    if not isinstance(graph, Graph):
        raise TypeError("graph must be a Graph")
    rotation = tuple(tuple(int(e) for e in r) for r in rotation)
    _check_rotation(graph, rotation)
    faces = _walk_faces(graph, rotation)
    if graph.n - graph.m + len(faces) != 2:
        raise EmbeddingError(
            f"Euler check failed: n - m + f = {graph.n} - {graph.m} + {len(faces)} != 2; rotation is not planar"
        )
    for f in faces:
        ids = f.edge_ids
        if len(set(ids)) != len(ids):
            bridge = next(e for e in ids if ids.count(e) > 1)
            raise EmbeddingError(f"edge {bridge} is a bridge (same face on both sides)")
    if outer is None:
        outer = max(faces, key=lambda f: (len(f), -f.index)).index
        warnings.warn(f"no outer face given; using face {outer} with the longest boundary", stacklevel=2)
    else:
        outer = _match_outer(faces, outer)
    return PlaneEmbedding(graph, rotation, faces, outer)


def opposite_edges(emb, face, e):
    """Opposite edge(s) of ``e`` in the bounded face ``face``.

    Even faces give a unique opposite. In odd faces the left opposite is
    the one reached first when running clockwise from ``e`` (the shorter
    side), the right opposite is reached after the longer side.
    """
    if face == emb.outer_face:
        raise ValueError("opposite edges are undefined on the outer face")
    pos, _ = emb.position(face, e)
    boundary = emb.faces[face].boundary
    k = len(boundary)
    if k % 2 == 0:
        return Opposites(unique=boundary[(pos + k // 2) % k][0])
    return Opposites(left=boundary[(pos + (k - 1) // 2) % k][0], right=boundary[(pos + (k + 1) // 2) % k][0])


def rotation_from_coordinates(graph, coords):
    """Clockwise rotation system of a straight-line drawing."""
    import math

    rotation = []
    for v in range(graph.n):
        x0, y0 = coords[v]
        inc = []
        for eid, w in graph.adjacency[v]:
            x1, y1 = coords[w]
            inc.append((-math.atan2(y1 - y0, x1 - x0), eid))
        inc.sort()
        rotation.append(tuple(eid for _, eid in inc))
    return tuple(rotation)


def embedding_from_coordinates(graph, coords):
    """Embed a straight-line drawing; the outer face is the one walked counterclockwise."""
    rotation = rotation_from_coordinates(graph, coords)
    faces = _walk_faces(graph, rotation)

    def area(f):
        s = 0.0
        for e, d in f.boundary:
            u, v = graph.edges[e]
            a, b = (u, v) if d == 0 else (v, u)
            s += coords[a][0] * coords[b][1] - coords[b][0] * coords[a][1]
        return s / 2

    outer = max(faces, key=area).index
    return trace_faces(graph, rotation, outer=outer)


def delete_edges(emb, removed):
    """Embedding of ``G - removed`` inherited from ``emb`` (edge ids renumbered densely)."""
    removed = set(removed)
    keep = [e for e in range(emb.graph.m) if e not in removed]
    new_id = {e: i for i, e in enumerate(keep)}
    g = Graph(emb.graph.n, [emb.graph.edges[e] for e in keep])
    rotation = [tuple(new_id[e] for e in r if e in new_id) for r in emb.rotation]
    outer_seq = [new_id[e] for e in emb.faces[emb.outer_face].edge_ids if e in new_id]
    faces = _walk_faces(g, rotation)
    # the outer face survives as the face containing a surviving outer dart
    outer = None
    for e, d in emb.faces[emb.outer_face].boundary:
        if e in new_id:
            outer = next(f.index for f in faces if (new_id[e], d) in f.boundary)
            break
    if outer is None:
        outer = outer_seq
    return trace_faces(g, rotation, outer=outer)
