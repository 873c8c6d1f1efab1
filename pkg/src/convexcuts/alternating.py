"""Alternating paths of a plane graph and their crossing pattern.

An alternating path walks from edge to opposite edge through successive
bounded faces, entering each face through the edge it arrived on. In odd
faces it must turn left or right, and turns alternate along the path.
Curves are never drawn: each passage through a face is a chord between two
slot positions on the face boundary, and chords cross iff their endpoints
interleave.
"""

from collections import Counter, defaultdict
from dataclasses import dataclass, field

from .embedding import opposite_edges
from .errors import AlternatingPathError
from .graph import canonical_cut

UNIQUE, LEFT, RIGHT = "unique", "left", "right"
_FLIP = {UNIQUE: UNIQUE, LEFT: RIGHT, RIGHT: LEFT}
# turn-state values: "0" before the first turn, then the side of the last turn
_STATE = {LEFT: "l", RIGHT: "r"}


@dataclass(frozen=True)
class Arc:
    """``f`` is the ``flavor`` opposite of ``e`` in bounded face ``face``."""

    e: int
    f: int
    face: int
    flavor: str


@dataclass(frozen=True)
class AlternatingPathGraph:
    emb: object
    arcs: tuple
    opposites: dict

    def pairs(self):
        return sorted({(min(a.e, a.f), max(a.e, a.f)) for a in self.arcs})


def alternating_path_graph(emb):
    """Opposite-edge arcs of every bounded face.

    Arcs are directed: each unordered opposite pair in an odd face shows up
    once as ``left`` from one side and once as ``right`` from the other.
    """
    arcs = []
    opposites = {}
    for face in emb.faces:
        if face.is_outer:
            continue
        for e in face.edge_ids:
            opp = opposite_edges(emb, face.index, e)
            opposites[(face.index, e)] = opp
            if opp.is_unique:
                arcs.append(Arc(e, opp.unique, face.index, UNIQUE))
            else:
                arcs.append(Arc(e, opp.left, face.index, LEFT))
                arcs.append(Arc(e, opp.right, face.index, RIGHT))
    return AlternatingPathGraph(emb, tuple(arcs), opposites)


@dataclass(frozen=True)
class AlternatingPath:
    """One member of the multiset of alternating paths.

    For an open path ``face_sequence[i]`` is the face between
    ``edge_sequence[i]`` and ``edge_sequence[i + 1]``; a closed path has one
    more face, leading from the last edge back to the first. ``turns[i]``
    is the kind of opposite taken in that face.
    """

    edge_sequence: tuple
    face_sequence: tuple
    turns: tuple
    multiplicity: int
    closed: bool

    @property
    def turn_state_log(self):
        state, log = "0", []
        for t in self.turns:
            if t != UNIQUE:
                state = _STATE[t]
            log.append(state)
        return tuple(log)

    @property
    def first_turn(self):
        return next((t for t in self.turns if t != UNIQUE), None)

    def __len__(self):
        return len(self.edge_sequence)


def _steps_to_path(steps, closed):
    edges = tuple(s[0] for s in steps) + (() if closed else (steps[-1][3],))
    faces = tuple(s[1] for s in steps)
    turns = tuple(s[2] for s in steps)
    mult = 2 if all(t == UNIQUE for t in turns) else 1
    return AlternatingPath(edges, faces, turns, mult, closed)


def _reverse_steps(steps):
    return [(f, face, _FLIP[t], e) for e, face, t, f in reversed(steps)]


def _order_key(steps):
    return tuple(s[0] for s in steps) + (steps[-1][3],), tuple(s[1] for s in steps)


def alternating_paths(apg, strict=True):
    """The multiset of alternating paths, one orientation per reversal pair.

    Returns ``(paths, coverage)`` where ``coverage[e]`` counts passages
    through edge ``e`` with multiplicity. With ``strict`` a coverage other
    than two raises :class:`AlternatingPathError`.
    """
    emb = apg.emb
    outer = emb.outer_face
    m = emb.graph.m
    guard = 4 * m + 8

    def options(e, face, state):
        opp = apg.opposites[(face, e)]
        if opp.is_unique:
            return [(opp.unique, UNIQUE, state)]
        if state == "0":
            return [(opp.left, LEFT, "l"), (opp.right, RIGHT, "r")]
        if state == "l":
            return [(opp.right, RIGHT, "r")]
        return [(opp.left, LEFT, "l")]

    open_paths = {}
    for e0 in range(m):
        if not emb.on_outer_face(e0):
            continue
        start_face = emb.other_face(e0, outer)
        stack = [(e0, start_face, "0", [])]
        while stack:
            e, face, state, steps = stack.pop()
            if len(steps) > guard:
                raise AlternatingPathError(f"walk from edge {e0} does not reach the outer face")
            for f, kind, nstate in options(e, face, state):
                nsteps = steps + [(e, face, kind, f)]
                nface = emb.other_face(f, face)
                if nface == outer:
                    rev = _reverse_steps(nsteps)
                    best = min(nsteps, rev, key=_order_key)
                    open_paths.setdefault(_order_key(best), best)
                else:
                    stack.append((f, nface, nstate, nsteps))

    closed_paths = {}
    for e0 in range(m):
        for start_face in emb.edge_faces[e0]:
            if start_face == outer:
                continue
            for s0 in ("l", "r", "0"):
                steps = _follow_cycle(e0, start_face, s0, options, emb, guard)
                if steps is None:
                    continue
                key, best = _canonical_cycle(steps)
                closed_paths.setdefault(key, best)

    paths = [_steps_to_path(st, False) for _, st in sorted(open_paths.items())]
    paths += [_steps_to_path(st, True) for _, st in sorted(closed_paths.items())]
    coverage = Counter()
    for p in paths:
        for e in p.edge_sequence:
            coverage[e] += p.multiplicity
    coverage = tuple(coverage.get(e, 0) for e in range(m))
    if strict:
        bad = [e for e in range(m) if coverage[e] != 2]
        if bad:
            raise AlternatingPathError(f"edges {bad} are covered {[coverage[e] for e in bad]} times, expected 2")
    return paths, coverage


def _follow_cycle(e0, face0, s0, options, emb, guard):
    """Steps of the closed walk through state ``(e0, face0, s0)``, or ``None``."""
    state = (e0, face0, s0)
    seen = {state}
    steps = []
    turned = False
    while len(steps) <= guard:
        e, face, s = state
        opts = options(e, face, s)
        if len(opts) != 1:
            # branching only happens before the first turn; such a walk
            # cannot come back to a turn-free start state
            return None
        f, kind, ns = opts[0]
        turned = turned or kind != UNIQUE
        steps.append((e, face, kind, f))
        nface = emb.other_face(f, face)
        if nface == emb.outer_face:
            return None
        state = (f, nface, ns)
        if state == (e0, face0, s0):
            if s0 == "0" and turned:
                return None
            return steps
        if state in seen:
            return None
        seen.add(state)
    return None


def _canonical_cycle(steps):
    candidates = []
    for seq in (steps, _reverse_steps(steps)):
        for i in range(len(seq)):
            rot = seq[i:] + seq[:i]
            candidates.append((tuple(s[0] for s in rot), tuple(s[1] for s in rot), rot))
    e, f, rot = min(candidates, key=lambda c: (c[0], c[1]))
    return (e, f), rot


# --- slots and crossings -------------------------------------------------

MID = 2


@dataclass
class CrossingReport:
    """Outcome of slot assignment and chord-crossing counts.

    Instances are ``(path_index, copy)`` pairs; ``pair_crossings`` maps an
    ordered pair of distinct instances to its crossing count.
    """

    instances: list
    slots: dict
    pair_crossings: dict = field(default_factory=dict)
    self_crossings: dict = field(default_factory=dict)

    @property
    def well_arranged(self):
        return not any(self.self_crossings.values()) and all(c <= 1 for c in self.pair_crossings.values())

    def offending(self):
        selfs = sorted(i for i, c in self.self_crossings.items() if c)
        pairs = sorted(p for p, c in self.pair_crossings.items() if c >= 2)
        return selfs, pairs


def single_slot_edges(emb):
    """Edges separating two bounded odd faces carry a single slot."""
    out = set()
    for e, (a, b) in enumerate(emb.edge_faces):
        if emb.outer_face not in (a, b) and emb.is_odd(a) and emb.is_odd(b):
            out.add(e)
    return out


def _left_phys(emb, e, look):
    """Physical slot (0 near the first endpoint, 1 near the second) on the
    walker's left when standing on ``e`` and facing ``look``."""
    _, d = emb.position(look, e)
    # the face lies right of its boundary darts, so facing it the dart head is on the left
    return 1 if d == 0 else 0


def _look_faces(emb, p):
    faces = list(p.face_sequence)
    if not p.closed:
        faces.append(emb.outer_face)
    return faces


def assign_slots_and_count_crossings(paths, emb, order=None):
    """Assign slots in ``order`` (default: path index order) and count crossings."""
    instances = [(i, c) for i, p in enumerate(paths) for c in range(p.multiplicity)]
    if order is not None:
        order = list(order)
        if sorted(order) != sorted(instances):
            raise ValueError("order must be a permutation of the path instances")
        instances = order
    single = single_slot_edges(emb)
    occupied = defaultdict(list)  # edge -> [(instance, phys)]
    slots = {}

    for inst in instances:
        p = paths[inst[0]]
        first = p.first_turn
        a = "0" if first is None else _STATE[first]
        looks = _look_faces(emb, p)
        chosen = []
        prev_side = None
        for i, e in enumerate(p.edge_sequence):
            taken = [ph for _, ph in occupied[e]]
            if e in single:
                if len(taken) >= 2:
                    raise AlternatingPathError(f"three passages claim the single slot of edge {e}")
                occupied[e].append((inst, MID))
                chosen.append(MID)
                if a != "0":
                    a = "r" if a == "l" else "l"
                prev_side = None
                continue
            left = _left_phys(emb, e, looks[i])
            phys = {"l": left, "r": 1 - left}
            if a == "0":
                want = prev_side or "l"
                side = want if phys[want] not in taken else ("r" if want == "l" else "l")
            else:
                side = a
                if phys[side] in taken:
                    side = "r" if side == "l" else "l"
                    a = side
            if phys[side] in taken:
                raise AlternatingPathError(f"both slots of edge {e} are already occupied")
            occupied[e].append((inst, phys[side]))
            chosen.append(phys[side])
            prev_side = side
        slots[inst] = tuple(chosen)

    report = CrossingReport(list(instances), slots)
    pair = Counter()
    selfc = Counter({inst: 0 for inst in instances})

    def bump(x, y):
        if x == y:
            selfc[x] += 1
        else:
            pair[(min(x, y), max(x, y))] += 1

    for e in single:
        occ = occupied[e]
        if len(occ) == 2:
            bump(occ[0][0], occ[1][0])

    chords = defaultdict(list)  # face -> [(lo, hi, instance)]
    for inst in instances:
        p = paths[inst[0]]
        seq = p.edge_sequence
        k = len(seq)
        for i, face in enumerate(p.face_sequence):
            j = (i + 1) % k
            a_key = _boundary_key(emb, face, seq[i], slots[inst][i])
            b_key = _boundary_key(emb, face, seq[j], slots[inst][j])
            lo, hi = min(a_key, b_key), max(a_key, b_key)
            chords[face].append((lo, hi, inst))
    for face, cs in chords.items():
        for x in range(len(cs)):
            a, b, ix = cs[x]
            for y in range(x + 1, len(cs)):
                c, d, iy = cs[y]
                if a < c < b < d or c < a < d < b:
                    bump(ix, iy)
    report.pair_crossings = dict(pair)
    report.self_crossings = dict(selfc)
    return report


def _boundary_key(emb, face, e, phys):
    pos, d = emb.position(face, e)
    if phys == MID:
        sub = 1
    else:
        # physical slot 0 sits near the first endpoint of the edge
        near_tail = (phys == 0) == (d == 0)
        sub = 0 if near_tail else 2
    return pos * 3 + sub


def is_well_arranged(emb, order=None, paths=None):
    """``(verdict, report)``: no self-crossing and no pair crossing twice."""
    if paths is None:
        paths, _ = alternating_paths(alternating_path_graph(emb))
    report = assign_slots_and_count_crossings(paths, emb, order=order)
    return report.well_arranged, report


def eap_cut(p, emb):
    """Bipartition cut out by the edges of open path ``p``, or ``None`` if
    removing them does not leave exactly two components."""
    if p.closed:
        raise ValueError("closed alternating paths do not end on the outer face")
    comps = emb.graph.components(set(p.edge_sequence))
    if len(comps) != 2:
        return None
    return canonical_cut(comps[0], emb.graph.n)
