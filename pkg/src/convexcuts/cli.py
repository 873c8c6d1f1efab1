"""Command-line entry point ``convexcuts``.

Exit codes: 0 success, 1 usage or module error, 2 unreadable or malformed
input file, 3 a cut failed re-verification, 4 a resource cap was hit.
"""

import argparse
import random
import sys
import time

from .alternating import (
    alternating_path_graph,
    alternating_paths,
    assign_slots_and_count_crossings,
    eap_cut,
)
from .bipartite import convex_cuts_bipartite
from .errors import ConvexCutError, VerificationError
from .fileio import (
    cut_record,
    format_dot,
    format_json_report,
    format_text_report,
    parse_graph_file,
    serialize_graph,
)
from .generators import FAMILIES, generate, grid, random_bipartite
from .graph import all_pairs_distances, partition_from_cut_set
from .oracle import enumerate_convex_cuts_bruteforce, hamming_labeling, is_convex_cut, is_partial_cube
from .plane import enumerate_convex_cuts_plane


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


class _InputError(ConvexCutError):
    exit_code = 2


def _load(path):
    try:
        return parse_graph_file(path)
    except OSError as exc:
        raise _InputError(f"cannot read {path}: {exc.strerror or exc}") from None


def _emit(args, command, g, records, extra=None):
    if args.dot:
        return format_dot(g, records)
    if args.json:
        return format_json_report(command, g, records, extra)
    return format_text_report(command, g, records)


def _verify_records(g, records, dist):
    for r in records:
        verdict = is_convex_cut(g, dist, (r["side0"], r["side1"]))
        if not verdict:
            raise VerificationError(f"cut-set {r['edges']} is not convex (witness {verdict.witness})", cut=r["edges"])
        r["status"] = "verified"


def cmd_bipartite(args):
    g, _ = _load(args.file)
    dist = all_pairs_distances(g) if args.matrix or args.verify else None
    report = convex_cuts_bipartite(g, dist=dist if args.matrix else None, n_jobs=args.jobs)
    records = []
    for cs in report.convex_cut_sets:
        part = partition_from_cut_set(g, cs)
        if part is None:
            raise VerificationError(f"cut-set {list(cs)} does not split the graph in two", cut=cs)
        records.append(cut_record("bipartite", cs, part, "unverified"))
    if args.verify:
        _verify_records(g, records, dist)
    return _emit(args, "bipartite", g, records)


def cmd_plane(args):
    g, emb = _load(args.file)
    if emb is None:
        raise ConvexCutError("the plane command needs an embedding: add 'rot' lines to the graph file")
    cuts = enumerate_convex_cuts_plane(emb, verify=args.verify, max_frontier=args.max_frontier)
    status = "verified" if args.verify else "unverified"
    records = [cut_record(c.kind, c.edges, c.partition, status) for c in cuts]
    return _emit(args, "plane", g, records)


def cmd_oracle(args):
    g, _ = _load(args.file)
    records = []
    for part in enumerate_convex_cuts_bruteforce(g, max_vertices=args.max_vertices):
        records.append(cut_record("oracle", g.cut_edges(part[0]), part, "verified"))
    return _emit(args, "oracle", g, records)


def cmd_partial_cube(args):
    g, _ = _load(args.file)
    verdict = is_partial_cube(g)
    if verdict:
        return "partial-cube yes\n"
    kind, info = verdict.witness
    if kind == "odd_cycle":
        return f"partial-cube no odd_cycle {','.join(map(str, info))}\n"
    return "partial-cube no not_transitive edges={}\n".format(",".join(map(str, info)))


def cmd_label(args):
    g, _ = _load(args.file)
    lab = hamming_labeling(g)
    lines = [f"# {len(lab.class_of_bit)} theta-classes"]
    for i, cls in enumerate(lab.class_of_bit):
        lines.append(f"class {i} edges={','.join(map(str, cls))}")
    for v, bits in enumerate(lab.labels):
        lines.append(f"label {v} {''.join(map(str, bits)) or '-'}")
    return "\n".join(lines) + "\n"


def _paths(args):
    g, emb = _load(args.file)
    if emb is None:
        raise ConvexCutError(f"the {args.command} command needs an embedding: add 'rot' lines to the graph file")
    paths, coverage = alternating_paths(alternating_path_graph(emb), strict=False)
    return g, emb, paths, coverage


def cmd_alternating(args):
    g, emb, paths, coverage = _paths(args)
    lines = [f"# {len(paths)} alternating paths"]
    for i, p in enumerate(paths):
        if p.closed:
            cut = "closed"
        else:
            part = eap_cut(p, emb)
            cut = "none" if part is None else f"{','.join(map(str, part[0]))}|{','.join(map(str, part[1]))}"
        lines.append(
            f"path {i} edges={','.join(map(str, p.edge_sequence))} faces={','.join(map(str, p.face_sequence))} "
            f"turns={''.join(t[0] for t in p.turns)} multiplicity={p.multiplicity} "
            f"closed={'yes' if p.closed else 'no'} cut={cut}"
        )
    bad = [e for e, c in enumerate(coverage) if c != 2]
    lines.append("coverage ok" if not bad else f"coverage bad edges={','.join(map(str, bad))}")
    return "\n".join(lines) + "\n"


def cmd_well_arranged(args):
    g, emb, paths, coverage = _paths(args)
    instances = [(i, c) for i, p in enumerate(paths) for c in range(p.multiplicity)]
    if args.seed is not None:
        random.Random(args.seed).shuffle(instances)
    report = assign_slots_and_count_crossings(paths, emb, order=instances)
    selfs, pairs = report.offending()
    lines = [f"well-arranged {'yes' if report.well_arranged else 'no'}"]
    for inst in selfs:
        lines.append(f"self-crossing path={inst[0]} copy={inst[1]} count={report.self_crossings[inst]}")
    for a, b in pairs:
        lines.append(
            f"double-crossing paths={a[0]}.{a[1]},{b[0]}.{b[1]} count={report.pair_crossings[(a, b)]}"
        )
    if any(c != 2 for c in coverage):
        lines.append("coverage bad")
    return "\n".join(lines) + "\n"


def cmd_gen(args):
    gen = generate(args.family, *args.params)
    text = serialize_graph(gen.graph, gen.embedding)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        return ""
    return text


def cmd_bench(args):
    lines = []
    seed = 0 if args.seed is None else args.seed
    for m in args.sizes:
        # sparse-ish random bipartite graph: about 1.6 edges per vertex
        half = max(2, int(m / 1.6) // 2)
        g = random_bipartite(half, half, m, seed).graph
        t0 = time.perf_counter()
        report = convex_cuts_bipartite(g, n_jobs=args.jobs)
        dt = time.perf_counter() - t0
        lines.append(f"bipartite m={g.m} n={g.n} cuts={len(report)} seconds={dt:.3f}")
    if args.grid:
        emb = grid(args.grid, args.grid).embedding
        t0 = time.perf_counter()
        cuts = enumerate_convex_cuts_plane(emb, verify=args.verify, max_frontier=args.max_frontier)
        dt = time.perf_counter() - t0
        lines.append(f"plane grid={args.grid}x{args.grid} cuts={len(cuts)} seconds={dt:.3f}")
    return "\n".join(lines) + "\n"


def _sizes(text):
    try:
        return [int(x) for x in text.split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--verify", dest="verify", action="store_true", default=True, help="re-check every cut directly (default)")
    common.add_argument("--no-verify", dest="verify", action="store_false", help="skip the direct re-check")
    common.add_argument("--max-frontier", type=int, default=10**6, metavar="N", help="cap on live search sequences")
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--dot", action="store_true", help="emit one DOT graph per cut")
    common.add_argument("--seed", type=int, default=None, metavar="S")
    common.add_argument("--jobs", type=int, default=1, metavar="J", help="worker processes for the bipartite outer loop")

    parser = _Parser(prog="convexcuts", description="Enumerate convex cuts of bipartite and plane graphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, help_text, needs_file=True):
        p = sub.add_parser(name, parents=[common], help=help_text, description=help_text)
        if needs_file:
            p.add_argument("file", help="graph file")
        p.set_defaults(func=fn)
        return p

    p = add("bipartite", cmd_bipartite, "convex cuts of a bipartite graph")
    p.add_argument("--matrix", action="store_true", help="precompute all distances instead of per-edge searches")
    add("plane", cmd_plane, "convex cuts of a plane graph (needs rotation lines)")
    p = add("oracle", cmd_oracle, "brute-force convex cuts of a small graph")
    p.add_argument("--max-vertices", type=int, default=16)
    add("partial-cube", cmd_partial_cube, "decide whether the graph is a partial cube")
    add("label", cmd_label, "Hamming labeling of a partial cube")
    add("alternating", cmd_alternating, "alternating paths of a plane graph")
    add("well-arranged", cmd_well_arranged, "decide whether a plane graph is well-arranged")
    p = add("gen", cmd_gen, "write a generated graph file", needs_file=False)
    p.add_argument("family", choices=sorted(FAMILIES))
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("-o", "--output", help="write to this path instead of stdout")
    p = add("bench", cmd_bench, "time both enumeration algorithms", needs_file=False)
    p.add_argument("--sizes", type=_sizes, default=[250, 500, 1000, 2000], help="edge counts for the bipartite runs")
    p.add_argument("--grid", type=int, default=20, help="side of the square grid for the plane run (0 skips)")
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.json and args.dot:
            parser.error("--json and --dot are mutually exclusive")
    except SystemExit as exc:
        # usage errors exit 1 and --help exits 0; report either as a return value
        return exc.code
    try:
        out = args.func(args)
    except ConvexCutError as exc:
        print(f"convexcuts: error: {exc}", file=sys.stderr)
        return exc.exit_code
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
