"""Plain-text graph files and cut reports.

Graph file grammar (one record per line, ``#`` starts a comment)::

    graph <n> <m>
    edge <id> <u> <v>          m lines, ids 0..m-1 each exactly once
    rot <v> <e1> <e2> ...      optional, clockwise, one line per vertex
    outer <e1> <e2> ...        optional, boundary edge ids of the outer face
"""

import json

from .embedding import trace_faces
from .errors import ConvexCutError, FileFormatError
from .graph import Graph


def _ints(tokens, lineno):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise FileFormatError(f"expected integers, got {' '.join(tokens)!r}", line=lineno) from None


def parse_graph_text(text):
    """Return ``(graph, embedding_or_None)`` parsed from ``text``."""
    header = None
    edges = {}
    rotation = {}
    outer = None
    rot_line = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        kind, args = tokens[0], tokens[1:]
        if header is None and kind != "graph":
            raise FileFormatError(f"expected 'graph <n> <m>' header, got {kind!r}", line=lineno)
        if kind == "graph":
            if header is not None:
                raise FileFormatError("second 'graph' header", line=lineno)
            vals = _ints(args, lineno)
            if len(vals) != 2 or min(vals) < 0:
                raise FileFormatError("header must be 'graph <n> <m>' with nonnegative counts", line=lineno)
            header = tuple(vals)
        elif kind == "edge":
            vals = _ints(args, lineno)
            if len(vals) != 3:
                raise FileFormatError("edge line must be 'edge <id> <u> <v>'", line=lineno)
            eid, u, v = vals
            if eid in edges:
                raise FileFormatError(f"edge id {eid} repeated", line=lineno)
            if not 0 <= eid < header[1]:
                raise FileFormatError(f"edge id {eid} outside 0..{header[1] - 1}", line=lineno)
            edges[eid] = (u, v)
        elif kind == "rot":
            vals = _ints(args, lineno)
            if not vals:
                raise FileFormatError("rot line needs a vertex", line=lineno)
            if vals[0] in rotation:
                raise FileFormatError(f"rotation for vertex {vals[0]} repeated", line=lineno)
            if not 0 <= vals[0] < header[0]:
                raise FileFormatError(f"rotation vertex {vals[0]} outside 0..{header[0] - 1}", line=lineno)
            rotation[vals[0]] = tuple(vals[1:])
            rot_line = rot_line or lineno
        elif kind == "outer":
            if outer is not None:
                raise FileFormatError("second 'outer' line", line=lineno)
            outer = (_ints(args, lineno), lineno)
        else:
            raise FileFormatError(f"unknown record {kind!r}", line=lineno)
    if header is None:
        raise FileFormatError("empty file: missing 'graph <n> <m>' header")
    n, m = header
    if len(edges) != m:
        missing = sorted(set(range(m)) - set(edges))
        raise FileFormatError(f"header promises {m} edges; missing ids {missing}")
    try:
        g = Graph(n, [edges[i] for i in range(m)])
    except ConvexCutError as exc:
        raise FileFormatError(str(exc)) from None
    if not rotation:
        if outer is not None:
            raise FileFormatError("'outer' given without rotation lines", line=outer[1])
        return g, None
    if len(rotation) != n:
        missing = sorted(set(range(n)) - set(rotation))
        raise FileFormatError(f"rotation lines missing for vertices {missing}", line=rot_line)
    rot = [rotation[v] for v in range(n)]
    try:
        trace_faces(g, rot, outer=0)
    except ConvexCutError as exc:
        raise FileFormatError(str(exc), line=rot_line) from None
    try:
        emb = trace_faces(g, rot, outer=None if outer is None else outer[0])
    except ConvexCutError as exc:
        raise FileFormatError(str(exc), line=outer[1]) from None
    return g, emb


def parse_graph_file(path):
    with open(path, encoding="utf-8") as fh:
        return parse_graph_text(fh.read())


def serialize_graph(g, emb=None):
    lines = [f"graph {g.n} {g.m}"]
    lines += [f"edge {i} {u} {v}" for i, (u, v) in enumerate(g.edges)]
    if emb is not None:
        lines += [f"rot {v} " + " ".join(map(str, emb.rotation[v])) for v in range(g.n)]
        lines.append("outer " + " ".join(map(str, emb.faces[emb.outer_face].edge_ids)))
    return "\n".join(lines) + "\n"


def write_graph_file(path, g, emb=None):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_graph(g, emb))


# --- reports ---------------------------------------------------------------


def cut_record(kind, edges, partition, status):
    return {
        "kind": kind,
        "edges": [int(e) for e in edges],
        "side0": [int(v) for v in partition[0]],
        "side1": [int(v) for v in partition[1]],
        "status": status,
    }


def sort_records(records):
    return sorted(records, key=lambda r: (len(r["edges"]), sorted(r["edges"]), r["side0"]))


def _csv(xs):
    return ",".join(map(str, xs)) if xs else "-"


def format_text_report(command, g, records):
    records = sort_records(records)
    out = [f"# {command}: {g.n} vertices, {g.m} edges, {len(records)} cuts"]
    for r in records:
        out.append(
            f"cut {r['kind']} edges={_csv(r['edges'])} side0={_csv(r['side0'])} "
            f"side1={_csv(r['side1'])} status={r['status']}"
        )
    return "\n".join(out) + "\n"


def format_json_report(command, g, records, extra=None):
    doc = {"command": command, "n": g.n, "m": g.m, "cuts": sort_records(records)}
    if extra:
        doc.update(extra)
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def format_dot(g, records, name="cut"):
    """One undirected DOT graph per cut; cut edges are drawn bold and red."""
    blocks = []
    for i, r in enumerate(sort_records(records)):
        cut = set(r["edges"])
        lines = [f"graph {name}_{i} {{"]
        for v in range(g.n):
            lines.append(f"  {v};")
        for eid, (u, v) in enumerate(g.edges):
            style = ', style=bold, color=red' if eid in cut else ""
            lines.append(f'  {u} -- {v} [label="e{eid}"{style}];')
        lines.append("}")
        blocks.append("\n".join(lines))
    return "\n".join(blocks) + ("\n" if blocks else "")
