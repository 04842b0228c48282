"""Reidemeister and singular moves as local rewrites of the combinatorial map.

Each move is found by matching a face with at most three sides or, for
introductions, an edge or a pair of edges on a common face.  Rewrites
allocate fresh edge ids and re-derive orientations from the untouched part
of the diagram; the result is relabeled deterministically.

Move kinds
----------
R1+ / R1-      add / remove a kink
R2 / R2inv     push one arc across another / remove such a bigon
R3             slide a strand across a crossing of the other two
SII / SIIinv   carry a crossing through a double point (bigon between a
               crossing and a double point).  For parallel strands SII moves
               it from the back of the double point to the front.  For
               antiparallel strands the two sides are mirror images and the
               label only records the corner (left: SII, right: SIIinv).
SIII           slide a strand over or under a double point
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable

from singknot.diagram import (
    DP,
    SingularDiagram,
    _bfs_labels,
    _reanchor,
    from_oriented_vertices,
    relabel,
)
from singknot.errors import SingknotError, StaleSite

__all__ = ["MoveInstance", "MOVE_KINDS", "find_moves", "apply_move", "variants_of",
           "fuzz_invariance", "FuzzReport", "FuzzStep", "random_walk"]

MOVE_KINDS = ("R1+", "R1-", "R2", "R2inv", "R3", "SII", "SIIinv", "SIII")
INTRODUCTIONS = ("R1+", "R2")


@dataclass(frozen=True, order=True)
class MoveInstance:
    kind: str
    site: tuple
    variant: str = field(default="", compare=True)


def variants_of(kind: str) -> tuple[str, ...]:
    """Every orientation/side variant a fuzz campaign should hit."""
    signs = ("+", "-")
    if kind in ("R1+", "R1-"):
        return tuple(f"{s}{side}" for s in signs for side in ("L", "R"))
    if kind in ("R2", "R2inv"):
        return ("parallel", "antiparallel")
    if kind == "R3":
        return ("cyclic", "acyclic")
    if kind in ("SII", "SIIinv"):
        return tuple(f"{o}{s}" for o in ("parallel", "antiparallel") for s in signs)
    if kind == "SIII":
        return tuple(f"{o}-{h}" for o in ("cyclic", "acyclic") for h in ("over", "under"))
    raise ValueError(kind)


# -- low level rebuilding -----------------------------------------------------


class _Builder:
    """Collects a rewritten vertex list and orients it from the surviving part."""

    def __init__(self, D: SingularDiagram):
        self.D = D
        self.next_id = max(D.edges) + 1
        self.long = D.long

    def fresh(self) -> int:
        e = self.next_id
        self.next_id += 1
        return e

    def build(self, kept: list[tuple[str, list[int], list[bool]]],
              new: list[tuple[str, list[int], tuple[int, ...] | None]],
              long=None, loops_if_empty: bool = True) -> SingularDiagram:
        """``kept``: oriented vertices (kind, edges, ins).  ``new``: vertices
        given as ('X'|'V', edges, over positions or None[, ins hints]) whose
        remaining in/out flags are inferred by following strands."""
        long = self.long if long is None else long
        if not kept and not new:
            if long is not None:
                return SingularDiagram.build([], (long[0], long[0]))
            return SingularDiagram.build([], None, 1)
        occ: dict[int, list[tuple[str, int, int]]] = {}
        for i, (_, edges, ins) in enumerate(kept):
            for p, e in enumerate(edges):
                occ.setdefault(e, []).append(("k", i, p))
        new_ins: list[list[bool | None]] = [
            list(spec[3]) if len(spec) > 3 else [None] * 4 for spec in new]
        new = [spec[:3] for spec in new]
        for i, (_, edges, _) in enumerate(new):
            for p, e in enumerate(edges):
                occ.setdefault(e, []).append(("n", i, p))
        start, end = long if long is not None else (None, None)
        for i, (_, edges, _) in enumerate(new):
            for p, e in enumerate(edges):
                if e == start:
                    new_ins[i][p] = True
                elif e == end:
                    new_ins[i][p] = False
        changed = True
        while changed:
            changed = False
            for i, (_, edges, _) in enumerate(new):
                for p in range(4):
                    if new_ins[i][p] is not None:
                        q = (p + 2) % 4
                        if new_ins[i][q] is None:
                            new_ins[i][q] = not new_ins[i][p]
                            changed = True
                        continue
                    e = edges[p]
                    others = [o for o in occ[e] if o != ("n", i, p)]
                    for tag, j, r in others:
                        val = kept[j][2][r] if tag == "k" else new_ins[j][r]
                        if val is not None:
                            new_ins[i][p] = not val
                            changed = True
                            break
        specs = [(kind, tuple(edges), tuple(ins)) for kind, edges, ins in kept]
        for (kind, edges, over), ins in zip(new, new_ins):
            if any(x is None for x in ins):
                raise SingknotError("could not orient rewritten vertex")
            if kind == "V":
                specs.append((DP, tuple(edges), tuple(ins)))
            else:
                under = tuple(p for p in range(4) if p not in over)
                specs.append(_reanchor("X", tuple(edges), tuple(ins), under))
        return from_oriented_vertices(specs, long)


def _kept(D: SingularDiagram, removed: set[int], subst: dict[tuple[int, int], int] | None = None):
    subst = subst or {}
    out = []
    for vi, v in enumerate(D.vertices):
        if vi in removed:
            continue
        edges = [subst.get((vi, p), e) for p, e in enumerate(v.edges)]
        out.append((v.kind, edges, list(v.ins)))
    return out


def _canonical_relabel(D: SingularDiagram) -> SingularDiagram:
    if not D.vertices:
        return D
    if D.long is not None:
        root = D.heads[D.long[0]]
    else:
        root = D.heads[min(D.heads)]
    return relabel(D, _bfs_labels(D, root))


def _is_over(v, p: int) -> bool:
    return v.is_crossing and p % 2 == 1


# -- joining and splitting edges ---------------------------------------------


class _EdgeSurgery:
    """Merge strand pieces through removed vertices, tracking where each
    surviving edge currently starts and ends."""

    def __init__(self, D: SingularDiagram):
        self.subst: dict[tuple[int, int], int] = {}
        self.long = D.long
        self.tail_of = dict(D.tails)
        self.head_of = dict(D.heads)

    def join(self, into: int, out_of: int) -> int:
        """Join edge ``into`` (ending at a removed vertex) with ``out_of``
        (leaving a removed vertex).  Returns the surviving id."""
        end = self.long[1] if self.long is not None else None
        # the end edge keeps its id so the long marker stays valid
        if out_of != end:
            keep = into
            dart = self.head_of.pop(out_of, None)
            self.tail_of.pop(out_of, None)
            if dart is None:
                self.head_of.pop(into, None)
            else:
                self.head_of[into] = dart
                self.subst[dart] = into
        else:
            keep = out_of
            dart = self.tail_of.pop(into, None)
            self.head_of.pop(into, None)
            if dart is None:
                self.tail_of.pop(out_of, None)
            else:
                self.tail_of[out_of] = dart
                self.subst[dart] = out_of
        if self.long is not None:
            s, e = self.long
            if s in (into, out_of):
                s = keep
            if e in (into, out_of):
                e = keep
            self.long = (s, e)
        return keep


# -- matching -----------------------------------------------------------------


def _face_vertex_kinds(D, face):
    return [D.vertices[v].kind for v, _ in face.corners]


def find_moves(D: SingularDiagram) -> list[MoveInstance]:
    """Every applicable move instance, in a deterministic order."""
    out: list[MoveInstance] = []
    out += _find_r1_add(D)
    for fi, face in enumerate(D.faces):
        k = len(face.corners)
        if k == 1:
            out += _find_r1_remove(D, face)
        elif k == 2:
            out += [m for m in _find_bigon_moves(D, face)
                    if m.kind == "R2inv" or not _touches_infinity(D, face)]
        elif k == 3 and not _touches_infinity(D, face):
            out += _find_trigon_moves(D, face)
    out += _find_r2_add(D)
    return sorted(set(out))


def _touches_infinity(D, face) -> bool:
    # rewrites that replace face edges must not move the cut point
    if D.long is None:
        return False
    return any(e in D.long for e, _ in face.boundary)


def _find_r1_add(D):
    out = []
    for e in sorted(D.edges):
        for side in ("L", "R"):
            for pass_ in ("u", "o"):
                sign = _kink_sign(side, pass_)
                out.append(MoveInstance("R1+", (e, side, pass_), f"{sign}{side}"))
    return out


def _kink_sign(side: str, first_pass: str) -> str:
    # left loop, ccw [in, out, loop-out, loop-in]; see _apply_r1_add
    ins = (True, False, False, True) if side == "L" else (True, True, False, False)
    under = (0, 2) if first_pass == "u" else (1, 3)
    kind, _, _ = _reanchor("X", (1, 2, 3, 4), ins, under)
    return "+" if kind == "X+" else "-"


def _find_r1_remove(D, face):
    (vi, k), = face.corners
    v = D.vertices[vi]
    if not v.is_crossing or v.edges[k] != v.edges[(k + 1) % 4]:
        return []
    # the loop leaves at one of the positions and returns at the other
    side = "L" if not v.ins[k] else "R"
    sign = "+" if v.sign > 0 else "-"
    return [MoveInstance("R1-", (vi, k), f"{sign}{side}")]


def _find_bigon_moves(D, face):
    (v1, k1), (v2, k2) = face.corners
    if v1 == v2:
        return []
    a, b = D.vertices[v1], D.vertices[v2]
    if a.is_crossing and b.is_crossing:
        # same strand over at both ends: one bigon edge is over at both ends
        e_left = a.edges[(k1 + 1) % 4]
        e_right = a.edges[k1]
        pa = {e_left: (k1 + 1) % 4, e_right: k1}
        pb = {b.edges[k2]: k2, b.edges[(k2 + 1) % 4]: (k2 + 1) % 4}
        if set(pa) != set(pb) or len(pa) != 2:
            return []
        ok = all(_is_over(a, pa[e]) == _is_over(b, pb[e]) for e in pa)
        if not ok:
            return []
        parallel = a.ins[k1] == a.ins[(k1 + 1) % 4]
        variant = "parallel" if parallel else "antiparallel"
        m = MoveInstance("R2inv", ((v1, k1), (v2, k2)), variant)
        try:
            _apply_r2_remove(D, m)
        except SingknotError:
            return []
        return [m]
    if a.is_crossing == b.is_crossing:
        return []  # two double points
    if a.is_crossing:
        (c, kc), (p, kp) = (v1, k1), (v2, k2)
    else:
        (c, kc), (p, kp) = (v2, k2), (v1, k1)
    cv, pv = D.vertices[c], D.vertices[p]
    corner = pv.corner_type(kp)
    parallel = corner in ("front", "back")
    sign = "+" if cv.sign > 0 else "-"
    if parallel:
        kind = "SII" if corner == "back" else "SIIinv"
    else:
        kind = "SII" if corner == "left" else "SIIinv"
    variant = f"{'parallel' if parallel else 'antiparallel'}{sign}"
    return [MoveInstance(kind, ((c, kc), (p, kp)), variant)]


def _find_trigon_moves(D, face):
    corners = face.corners
    vs = [D.vertices[v] for v, _ in corners]
    if len({v for v, _ in corners}) != 3:
        return []
    n_dp = sum(not v.is_crossing for v in vs)
    if n_dp > 1:
        return []
    # trigon edge between consecutive corners i -> i+1 leaves corner i at position k+1
    # and arrives at corner i+1 at its position k.
    strand_over = []
    for i in range(3):
        (u, ku), (w, kw) = corners[i], corners[(i + 1) % 3]
        pu = (ku + 1) % 4
        pw = kw
        strand_over.append((_is_over(D.vertices[u], pu) if D.vertices[u].is_crossing else None,
                            _is_over(D.vertices[w], pw) if D.vertices[w].is_crossing else None))
    # orientation: cyclic if every trigon edge runs the same way round the face
    runs = []
    for i in range(3):
        u, ku = corners[i]
        runs.append(not D.vertices[u].ins[(ku + 1) % 4])
    orient = "cyclic" if len(set(runs)) == 1 else "acyclic"
    if n_dp == 0:
        if any(x and y for x, y in strand_over):
            return [MoveInstance("R3", tuple(corners), orient)]
        return []
    # the strand avoiding the double point is the trigon edge between the two crossings
    for i, (x, y) in enumerate(strand_over):
        if x is not None and y is not None:
            if x == y:
                return [MoveInstance("SIII", tuple(corners), f"{orient}-{'over' if x else 'under'}")]
            return []
    return []


def _find_r2_add(D):
    out = []
    if not D.vertices:
        return out
    for fi, face in enumerate(D.faces):
        occ = list(face.boundary)
        for i in range(len(occ)):
            for j in range(len(occ)):
                if i == j or occ[i][0] == occ[j][0]:
                    continue
                (e, se), (f, sf) = occ[i], occ[j]
                # along-face directions decide parallel vs antiparallel bigon strands
                parallel = (se == sf)
                variant = "antiparallel" if parallel else "parallel"
                for over in ("first", "second"):
                    out.append(MoveInstance("R2", (fi, occ[i], occ[j], over), variant))
    return out


# -- application ----------------------------------------------------------------


def apply_move(D: SingularDiagram, m: MoveInstance) -> SingularDiagram:
    """Apply ``m`` to ``D``; raises :class:`StaleSite` if it does not match."""
    if m not in _moves_cache(D):
        raise StaleSite(f"{m.kind} at {m.site} does not match this diagram")
    fn: Callable = _APPLY[m.kind]
    return _canonical_relabel(fn(D, m))


def _moves_cache(D: SingularDiagram) -> frozenset[MoveInstance]:
    cached = D.__dict__.get("_moves")
    if cached is None:
        cached = frozenset(find_moves(D))
        D.__dict__["_moves"] = cached
    return cached


def _apply_r1_add(D, m):
    e, side, first = m.site
    B = _Builder(D)
    loop = B.fresh()
    over = (1, 3) if first == "u" else (0, 2)
    if not D.vertices and D.long is None:
        edges = (e, e, loop, loop) if side == "L" else (e, loop, loop, e)
        ins = (True, False, False, True) if side == "L" else (True, True, False, False)
        under = tuple(p for p in range(4) if p not in over)
        return from_oriented_vertices([_reanchor("X", edges, ins, under)], None)
    long = D.long
    subst = {}
    if not D.vertices:
        ea, eb = e, B.fresh()
        long = (e, eb)
    elif long is not None and e == long[1]:
        ea, eb = B.fresh(), e
    else:
        ea, eb = e, B.fresh()
    if D.vertices:
        if ea != e:
            subst[D.tails[e]] = ea
        if eb != e:
            subst[D.heads[e]] = eb
    # left loop: ccw [in, out, loop-out, loop-in]; right loop: [in, loop-in, loop-out, out]
    edges = [ea, eb, loop, loop] if side == "L" else [ea, loop, loop, eb]
    return B.build(_kept(D, set(), subst), [("X", edges, over)], long)


def _apply_r1_remove(D, m):
    vi, k = m.site
    v = D.vertices[vi]
    others = [(k + 2) % 4, (k + 3) % 4]
    e_in = next(v.edges[p] for p in others if v.ins[p])
    e_out = next(v.edges[p] for p in others if not v.ins[p])
    if e_in == e_out:
        # figure-eight curve: nothing is left
        return SingularDiagram.build([], None, 1)
    S = _EdgeSurgery(D)
    S.join(e_in, e_out)
    kept = _kept(D, {vi}, S.subst)
    if not kept:
        start = S.long[0]
        return SingularDiagram.build([], (start, start))
    return from_oriented_vertices([(kd, tuple(es), tuple(ins)) for kd, es, ins in kept], S.long)


def _bigon_frame(D, c, kc, p, kp):
    """Compass view of a bigon: vertex ``c`` below, ``p`` above."""
    cv, pv = D.vertices[c], D.vertices[p]
    return {
        "xSW": cv.edges[(kc + 2) % 4], "xSE": cv.edges[(kc + 3) % 4],
        "yNE": pv.edges[(kp + 2) % 4], "yNW": pv.edges[(kp + 3) % 4],
        "c_over_swne": _is_over(cv, (kc + 2) % 4) if cv.is_crossing else None,
        "p_over_swne": _is_over(pv, (kp + 2) % 4) if pv.is_crossing else None,
    }


def _apply_flip(D, m):
    (c, kc), (p, kp) = m.site
    F = _bigon_frame(D, c, kc, p, kp)
    B = _Builder(D)
    fl, fr = B.fresh(), B.fresh()
    cv, pv = D.vertices[c], D.vertices[p]
    pnew = ("V", [fr, fl, F["xSW"], F["xSE"]], None,
            [None, None, cv.ins[(kc + 2) % 4], cv.ins[(kc + 3) % 4]])
    over = (0, 2) if F["c_over_swne"] else (1, 3)
    cnew = ("X", [fl, fr, F["yNE"], F["yNW"]], over,
            [None, None, pv.ins[(kp + 2) % 4], pv.ins[(kp + 3) % 4]])
    return B.build(_kept(D, {c, p}), [pnew, cnew])


def _apply_r2_remove(D, m):
    (a, ka), (b, kb) = m.site
    av, bv = D.vertices[a], D.vertices[b]
    S = _EdgeSurgery(D)
    # strand through bigon edge at a position ka+1 continues at a's ka+3, and at b's kb+2
    pairs = []
    for pa, pb in (((ka + 1) % 4, kb), (ka, (kb + 1) % 4)):
        outer_a = av.edges[(pa + 2) % 4]
        outer_b = bv.edges[(pb + 2) % 4]
        ins_a = av.ins[(pa + 2) % 4]
        pairs.append((outer_a, outer_b) if ins_a else (outer_b, outer_a))
    for into, out_of in pairs:
        if into == out_of:
            raise StaleSite("R2 removal would leave a free loop")
        S.join(into, out_of)
    kept = _kept(D, {a, b}, S.subst)
    if not kept:
        if S.long is None:
            return SingularDiagram.build([], None, 1)
        return SingularDiagram.build([], (S.long[0], S.long[0]))
    return from_oriented_vertices([(kd, tuple(es), tuple(ins)) for kd, es, ins in kept], S.long)


def _apply_trigon(D, m):
    (x, kx), (z, kz), (y, ky) = m.site
    X, Y, Z = D.vertices[x], D.vertices[y], D.vertices[z]
    La, Lb = X.edges[(kx + 2) % 4], X.edges[(kx + 3) % 4]
    Lc, Ra = Y.edges[(ky + 2) % 4], Y.edges[(ky + 3) % 4]
    Ub, Uc = Z.edges[(kz + 2) % 4], Z.edges[(kz + 3) % 4]
    B = _Builder(D)
    yx, zx, yz = B.fresh(), B.fresh(), B.fresh()

    def over_of(vert, k, line_a_offset):
        # which of the vertex's two lines is over: returns True if the line
        # through position k + line_a_offset is the over strand
        return _is_over(vert, (k + line_a_offset) % 4)

    # outer edges keep their direction along their strands
    hy = [None, Z.ins[(kz + 3) % 4], X.ins[(kx + 2) % 4], None]
    hx = [Y.ins[(ky + 3) % 4], Z.ins[(kz + 2) % 4], None, None]
    hz = [None, None, X.ins[(kx + 3) % 4], Y.ins[(ky + 2) % 4]]
    new = []
    # Y' = a x c: [Y'X', Uc, La, Y'Z]; a-line at 0/2
    if Y.is_crossing:
        a_over = over_of(Y, ky, 1)  # a passes Y at positions ky+1 / ky+3
        new.append(("X", [yx, Uc, La, yz], (0, 2) if a_over else (1, 3), hy))
    else:
        new.append(("V", [yx, Uc, La, yz], None, hy))
    # X' = a x b: [Ra, Ub, Y'X', ZX']; a-line at 0/2
    if X.is_crossing:
        a_over = over_of(X, kx, 0)  # a passes X at kx / kx+2
        new.append(("X", [Ra, Ub, yx, zx], (0, 2) if a_over else (1, 3), hx))
    else:
        new.append(("V", [Ra, Ub, yx, zx], None, hx))
    # Z' = b x c: [ZX', Y'Z, Lb, Lc]; b-line at 0/2
    if Z.is_crossing:
        b_over = over_of(Z, kz, 0)  # b passes Z at kz / kz+2
        new.append(("X", [zx, yz, Lb, Lc], (0, 2) if b_over else (1, 3), hz))
    else:
        new.append(("V", [zx, yz, Lb, Lc], None, hz))
    return B.build(_kept(D, {x, y, z}), new)


def _apply_r2_add(D, m):
    fi, (e, se), (f, sf), over = m.site
    B = _Builder(D)
    start, end = D.long if D.long is not None else (None, None)
    subst: dict = {}

    def split(edge, side):
        """Pieces (first, middle, last) in face-traversal order."""
        along = side == "R"
        mid = B.fresh()
        if edge == end:
            tail_part, head_part = B.fresh(), edge
        else:
            tail_part, head_part = edge, B.fresh()
        if edge in D.tails and tail_part != edge:
            subst[D.tails[edge]] = tail_part
        if edge in D.heads and head_part != edge:
            subst[D.heads[edge]] = head_part
        return (tail_part, mid, head_part) if along else (head_part, mid, tail_part)

    a1, am, a2 = split(e, se)
    b1, bm, b2 = split(f, sf)
    # alpha over beta:  P = [b2, am, bm, a1], Q = [bm, am, b1, a2]; alpha on positions 1/3
    a_over = over == "first"
    ov = (1, 3) if a_over else (0, 2)
    P = ("X", [b2, am, bm, a1], ov)
    Q = ("X", [bm, am, b1, a2], ov)
    return B.build(_kept(D, set(), subst), [P, Q])


_APPLY = {
    "R1+": _apply_r1_add,
    "R1-": _apply_r1_remove,
    "R2": _apply_r2_add,
    "R2inv": _apply_r2_remove,
    "R3": _apply_trigon,
    "SIII": _apply_trigon,
    "SII": _apply_flip,
    "SIIinv": _apply_flip,
}


# -- random walks and invariance fuzzing ------------------------------------------


def random_walk(D: SingularDiagram, steps: int, rng: random.Random,
                intro_bias: float = 0.5, max_size: int = 12):
    """Yield ``(move, diagram)`` pairs along a random sequence of moves.

    With probability ``intro_bias`` an introduction (R1+/R2) is drawn, else a
    move of another kind; introductions are suppressed beyond ``max_size``
    vertices.
    """
    for _ in range(steps):
        moves = find_moves(D)
        intro = [m for m in moves if m.kind in INTRODUCTIONS]
        other = [m for m in moves if m.kind not in INTRODUCTIONS]
        if D.size >= max_size:
            intro = [m for m in intro if m.kind != "R2"] if other else intro
        pool = intro if (not other or (intro and rng.random() < intro_bias)) else other
        # pick kind, then variant, so rare variants are not drowned by R2 sites
        kind = rng.choice(sorted({m.kind for m in pool}))
        pool = [x for x in pool if x.kind == kind]
        variant = rng.choice(sorted({m.variant for m in pool}))
        m = rng.choice([x for x in pool if x.variant == variant])
        D = apply_move(D, m)
        yield m, D


@dataclass
class FuzzStep:
    seed: int
    step: int
    kind: str
    variant: str
    before: dict[str, str]
    after: dict[str, str]


@dataclass
class FuzzReport:
    seed: int
    steps: int
    ok: bool = True
    first_failure: FuzzStep | None = None
    records: list[FuzzStep] = field(default_factory=list)
    coverage: Counter = field(default_factory=Counter)

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "steps": self.steps,
            "ok": self.ok,
            "first_failure": None if self.first_failure is None else vars(self.first_failure),
            "records": [vars(r) for r in self.records],
        }


def _digest(polys: dict) -> dict[str, str]:
    return {k: v.to_text() for k, v in polys.items()}


def fuzz_invariance(D: SingularDiagram, steps: int, seed: int,
                    invariants: Callable[[SingularDiagram], dict] | None = None,
                    intro_bias: float = 0.5, max_size: int = 10) -> FuzzReport:
    """Random move sequence checking that every invariant stays unchanged.

    ``invariants`` maps a diagram to named polynomials; by default V^s in
    both modes (where defined) and, for long diagrams, Delta^s.
    """
    if invariants is None:
        invariants = default_invariants
    rng = random.Random(seed)
    report = FuzzReport(seed, steps)
    base = invariants(D)
    for i, (m, D2) in enumerate(random_walk(D, steps, rng, intro_bias, max_size), 1):
        now = invariants(D2)
        rec = FuzzStep(seed, i, m.kind, m.variant, _digest(base), _digest(now))
        report.records.append(rec)
        report.coverage[(m.kind, m.variant)] += 1
        if now != base:
            report.ok = False
            report.first_failure = rec
            break
        D = D2
    return report


def default_invariants(D: SingularDiagram) -> dict:
    from singknot.alexander import alexander_s
    from singknot.bracket import INDEXED, SINGLE, jones_vs

    out = {"jones_single": jones_vs(D, SINGLE)}
    if D.long is not None:
        out["alexander_single"] = alexander_s(D, SINGLE)
        if D.component_count == 1:
            out["jones_indexed"] = jones_vs(D, INDEXED)
            out["alexander_indexed"] = alexander_s(D, INDEXED)
    return out
