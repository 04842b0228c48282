"""Oriented singular link diagrams as combinatorial maps.

A diagram is a list of 4-valent vertices.  Each vertex lists the ids of its
four incident edges in counterclockwise order.  Edges are oriented; every
edge has one tail (outgoing incidence) and one head (incoming incidence),
except the two ends of a long knot.

Anchor conventions
------------------
``X+ a b c d`` / ``X- a b c d``
    ``a`` is the incoming under-edge, ``c`` the outgoing under-edge.  For a
    positive crossing the incoming over-edge is ``d``; for a negative one it
    is ``b``.
``V a b c d``
    a double point; ``a`` is an incoming edge and ``c`` its outgoing
    continuation.  The direction of ``b``/``d`` is inferred.
``LONG s e``
    long knot entering along ``s`` and leaving along ``e``.
``O e``
    a vertex-free closed loop (the 0-crossing unknot).

Positions are 0-based internally.  The corner (quadrant) ``k`` of a vertex
is the sector between positions ``k`` and ``k + 1``.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from singknot.errors import (
    EdgeMultiplicity,
    MalformedLine,
    NonPlanar,
    NotLong,
    OrientationConflict,
    SplitDiagram,
)

__all__ = [
    "Vertex", "Face", "SingularDiagram", "parse_diagram", "serialize",
    "faces", "writhe", "double_point_order", "inverse_long_knot", "mirror",
    "POS", "NEG", "DP", "from_gauss", "from_oriented_vertices", "canonical_form",
    "isomorphic", "relabel",
]

POS, NEG, DP = "X+", "X-", "V"
KINDS = (POS, NEG, DP)
_KIND_RANK = {POS: 0, NEG: 1, DP: 2}

# in/out pattern by position for crossings under the anchor convention
_CROSSING_INS = {
    POS: (True, False, False, True),
    NEG: (True, True, False, False),
}

Dart = tuple[int, int]  # (vertex index, position)


@dataclass(frozen=True)
class Vertex:
    kind: str
    edges: tuple[int, int, int, int]
    ins: tuple[bool, bool, bool, bool]

    @property
    def is_crossing(self) -> bool:
        return self.kind != DP

    @property
    def sign(self) -> int:
        return {POS: 1, NEG: -1, DP: 0}[self.kind]

    def corner_type(self, k: int) -> str:
        """Classify corner ``k`` as 'front' (between the two outgoing edges),
        'back' (between the two incoming), 'left' or 'right'.

        Left/right are taken relative to a strand leaving the vertex: the
        left corner lies counterclockwise after an outgoing edge whose
        ccw-successor is incoming.
        """
        a, b = self.ins[k], self.ins[(k + 1) % 4]
        if not a and not b:
            return "front"
        if a and b:
            return "back"
        # out then (ccw) in: the corner sits on the left of the outgoing strand
        return "left" if not a else "right"


@dataclass(frozen=True)
class Face:
    corners: tuple[Dart, ...]
    boundary: tuple[tuple[int, str], ...]
    is_star: bool = False


def _rotate(seq, k):
    return tuple(seq[k:]) + tuple(seq[:k])


def _canonical_vertex(kind: str, edges, ins) -> Vertex:
    edges = tuple(edges)
    ins = tuple(ins)
    if kind == DP:
        # anchor on the incoming edge with the smaller id
        starts = [k for k in range(4) if ins[k]]
        k = min(starts, key=lambda j: (edges[j], j))
        edges, ins = _rotate(edges, k), _rotate(ins, k)
    return Vertex(kind, edges, ins)


@dataclass(frozen=True)
class SingularDiagram:
    """Immutable validated diagram.  Build with :func:`parse_diagram` or
    :meth:`SingularDiagram.build`."""

    vertices: tuple[Vertex, ...]
    long: tuple[int, int] | None = None
    loops: int = 0

    # -- construction -------------------------------------------------------

    @classmethod
    def build(cls, specs: Iterable[tuple[str, Sequence[int]]], long=None, loops: int = 0,
              lines: Sequence[int] | None = None) -> SingularDiagram:
        """Validate vertex specs ``(kind, (a, b, c, d))`` and return a diagram."""
        specs = [(k, tuple(int(x) for x in e)) for k, e in specs]
        if lines is None:
            lines = [None] * len(specs)
        for (kind, edges), ln in zip(specs, lines):
            if kind not in KINDS:
                raise MalformedLine(f"unknown vertex kind {kind!r}", ln)
            if len(edges) != 4:
                raise MalformedLine("a vertex needs exactly 4 edges", ln)
            if any(e <= 0 for e in edges):
                raise MalformedLine("edge ids must be positive", ln)
        long = tuple(long) if long is not None else None

        if not specs:
            if long is not None:
                if long[0] != long[1] or loops:
                    raise SplitDiagram("a vertex-free long diagram is the single edge 'LONG s s'")
            elif loops > 1:
                raise SplitDiagram("split diagrams are not supported")
            elif loops == 0:
                raise MalformedLine("empty diagram")
            return cls((), long, loops if long is None else 0)
        if loops:
            raise SplitDiagram("a free loop next to vertices makes a split diagram")

        ins = _resolve_orientation(specs, long, lines)
        vertices = tuple(sorted(
            (_canonical_vertex(kind, edges, vin) for (kind, edges), vin in zip(specs, ins)),
            key=lambda v: (_KIND_RANK[v.kind], v.edges),
        ))
        diagram = cls(vertices, long, 0)
        diagram._check_connected()
        nf = len(diagram.faces)
        if nf != len(vertices) + 2:
            raise NonPlanar(f"{nf} faces for {len(vertices)} vertices; expected {len(vertices) + 2}")
        return diagram

    # -- incidence structure ------------------------------------------------

    @cached_property
    def tails(self) -> dict[int, Dart]:
        """edge id -> outgoing dart"""
        out = {}
        for vi, v in enumerate(self.vertices):
            for p in range(4):
                if not v.ins[p]:
                    out[v.edges[p]] = (vi, p)
        return out

    @cached_property
    def heads(self) -> dict[int, Dart]:
        """edge id -> incoming dart"""
        out = {}
        for vi, v in enumerate(self.vertices):
            for p in range(4):
                if v.ins[p]:
                    out[v.edges[p]] = (vi, p)
        return out

    @property
    def edges(self) -> frozenset[int]:
        if not self.vertices:
            if self.long is not None:
                return frozenset({self.long[0]})
            return frozenset({1})
        return frozenset(self.tails) | frozenset(self.heads)

    @property
    def is_long(self) -> bool:
        return self.long is not None

    @property
    def n_crossings(self) -> int:
        return sum(v.is_crossing for v in self.vertices)

    @property
    def n_double_points(self) -> int:
        return sum(not v.is_crossing for v in self.vertices)

    @property
    def size(self) -> int:
        return len(self.vertices)

    def partner(self, dart: Dart) -> Dart:
        """Other end of the edge at ``dart``; long diagrams are closed through infinity."""
        vi, p = dart
        v = self.vertices[vi]
        e = v.edges[p]
        if v.ins[p]:
            if self.long is not None and e == self.long[0]:
                return self.tails[self.long[1]]
            return self.tails[e]
        if self.long is not None and e == self.long[1]:
            return self.heads[self.long[0]]
        return self.heads[e]

    def next_along(self, dart: Dart) -> Dart | None:
        """From an incoming dart, go straight through the vertex and along the
        outgoing edge to the next incoming dart (None at the long end)."""
        vi, p = dart
        out_pos = (p + 2) % 4
        e = self.vertices[vi].edges[out_pos]
        if self.long is not None and e == self.long[1]:
            return None
        return self.heads[e]

    def _check_connected(self) -> None:
        n = len(self.vertices)
        seen = {0}
        stack = [0]
        while stack:
            vi = stack.pop()
            for p in range(4):
                u, _ = self.partner((vi, p))
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        if len(seen) != n:
            raise SplitDiagram("diagram is not connected")

    # -- derived data -------------------------------------------------------

    @cached_property
    def faces(self) -> tuple[Face, ...]:
        return tuple(_compute_faces(self))

    @cached_property
    def corner_face(self) -> dict[Dart, int]:
        """(vertex, corner) -> index into :attr:`faces`"""
        out = {}
        for fi, f in enumerate(self.faces):
            for c in f.corners:
                out[c] = fi
        return out

    @cached_property
    def components(self) -> tuple[tuple[int, ...], ...]:
        """Edge ids of each component in traversal order; a long component comes first."""
        if not self.vertices:
            return ((next(iter(self.edges)),),)
        comps = []
        used: set[int] = set()
        if self.long is not None:
            comp = [self.long[0]]
            dart = self.heads[self.long[0]]
            while dart is not None:
                vi, p = dart
                e = self.vertices[vi].edges[(p + 2) % 4]
                comp.append(e)
                dart = self.next_along(dart)
            comps.append(tuple(comp))
            used.update(comp)
        for e0 in sorted(self.heads):
            if e0 in used:
                continue
            comp = [e0]
            used.add(e0)
            dart = self.heads[e0]
            while True:
                vi, p = dart
                e = self.vertices[vi].edges[(p + 2) % 4]
                if e == e0:
                    break
                comp.append(e)
                used.add(e)
                dart = self.heads[e]
            comps.append(tuple(comp))
        return tuple(comps)

    @property
    def component_count(self) -> int:
        return len(self.components)

    @cached_property
    def dp_labels(self) -> dict[int, int]:
        """vertex index of each double point -> 1-based first-passage label"""
        order = _first_passage(self)
        return {vi: i for i, vi in enumerate(order, 1)}

    def __str__(self) -> str:
        return serialize(self)


def _resolve_orientation(specs, long, lines) -> list[tuple[bool, ...]]:
    """Fill in in/out flags for every incidence, inferring double-point side edges."""
    ins: list[list[bool | None]] = []
    occurrences: dict[int, list[tuple[int, int]]] = defaultdict(list)
    for vi, (kind, edges) in enumerate(specs):
        if kind == DP:
            ins.append([True, None, False, None])
        else:
            ins.append(list(_CROSSING_INS[kind]))
        for p, e in enumerate(edges):
            occurrences[e].append((vi, p))

    start, end = (long if long is not None else (None, None))
    if long is not None and start == end:
        raise EdgeMultiplicity("long start and end edges must differ when vertices exist")
    for e, occ in occurrences.items():
        expected = 1 if e in (start, end) else 2
        if len(occ) != expected:
            ln = lines[occ[0][0]] if occ else None
            raise EdgeMultiplicity(f"edge {e} used {len(occ)} times, expected {expected}", ln)
    for e in (start, end):
        if e is not None and e not in occurrences:
            raise EdgeMultiplicity(f"long endpoint edge {e} does not occur")

    def forced(e, vi, p):
        if e == start:
            return True
        if e == end:
            return False
        (u, q), = [o for o in occurrences[e] if o != (vi, p)] or [(vi, p)]
        if (u, q) == (vi, p):
            return None
        other = ins[u][q]
        return None if other is None else not other

    changed = True
    while changed:
        changed = False
        for vi, (kind, edges) in enumerate(specs):
            for p in range(4):
                want = forced(edges[p], vi, p)
                have = ins[vi][p]
                if want is None:
                    continue
                if have is None:
                    ins[vi][p] = want
                    opp = (p + 2) % 4
                    if ins[vi][opp] is None:
                        ins[vi][opp] = not want
                    elif ins[vi][opp] == want:
                        raise OrientationConflict(
                            f"double point strand through edges {edges[p]},{edges[opp]} "
                            "cannot be oriented", lines[vi])
                    changed = True
                elif have != want:
                    raise OrientationConflict(
                        f"edge {edges[p]} is paired {'in/in' if have else 'out/out'}", lines[vi])
    for vi, row in enumerate(ins):
        if any(x is None for x in row):
            raise OrientationConflict("orientation of a double-point strand is undetermined",
                                      lines[vi])
    return [tuple(r) for r in ins]


def _compute_faces(D: SingularDiagram) -> list[Face]:
    if not D.vertices:
        if D.long is not None:
            e = D.long[0]
            return [Face((), ((e, "R"),), True), Face((), ((e, "L"),), True)]
        return [Face((), ((1, "R"),)), Face((), ((1, "L"),))]
    star_edges = set(D.long) if D.long is not None else set()
    seen: set[Dart] = set()
    out = []
    for vi in range(len(D.vertices)):
        for p in range(4):
            if (vi, p) in seen:
                continue
            corners = []
            boundary = []
            star = False
            dart = (vi, p)
            while dart not in seen:
                seen.add(dart)
                corners.append(dart)
                u, q = dart
                leave = (u, (q + 1) % 4)
                v = D.vertices[u]
                e = v.edges[leave[1]]
                # leaving along the tail keeps the face on the edge's right
                side = "L" if v.ins[leave[1]] else "R"
                boundary.append((e, side))
                if e in star_edges:
                    star = True
                dart = D.partner(leave)
            out.append(Face(tuple(corners), tuple(boundary), star))
    return out


def _first_passage(D: SingularDiagram) -> list[int]:
    order: list[int] = []
    seen: set[int] = set()
    for comp in D.components:
        for e in comp:
            if e not in D.heads:
                continue
            vi, _ = D.heads[e]
            if D.vertices[vi].kind == DP and vi not in seen:
                seen.add(vi)
                order.append(vi)
    return order


# -- public operations -------------------------------------------------------


def parse_diagram(text: str) -> SingularDiagram:
    """Parse the line-oriented diagram format described in the module docstring."""
    specs = []
    lines = []
    long = None
    loops = 0
    for ln, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        head, args = tok[0], tok[1:]
        try:
            nums = [int(x) for x in args]
        except ValueError:
            raise MalformedLine(f"non-integer edge id in {line!r}", ln) from None
        if head in KINDS:
            if len(nums) != 4:
                raise MalformedLine(f"{head} needs 4 edge ids", ln)
            if any(x <= 0 for x in nums):
                raise MalformedLine("edge ids must be positive", ln)
            specs.append((head, nums))
            lines.append(ln)
        elif head == "LONG":
            if len(nums) != 2 or long is not None:
                raise MalformedLine("LONG takes two edge ids and may appear once", ln)
            long = (nums[0], nums[1])
        elif head == "O":
            if len(nums) != 1:
                raise MalformedLine("O takes one edge id", ln)
            loops += 1
        else:
            raise MalformedLine(f"unknown statement {head!r}", ln)
    return SingularDiagram.build(specs, long, loops, lines)


def serialize(D: SingularDiagram) -> str:
    """Canonical text; ``parse_diagram(serialize(D)) == D``."""
    out = []
    if D.long is not None:
        out.append(f"LONG {D.long[0]} {D.long[1]}")
    if not D.vertices and D.long is None:
        out.append("O 1")
    for v in D.vertices:
        out.append(f"{v.kind} " + " ".join(map(str, v.edges)))
    return "\n".join(out) + "\n"


def faces(D: SingularDiagram) -> tuple[Face, ...]:
    return D.faces


def writhe(D: SingularDiagram) -> int:
    """Sum of crossing signs; double points count 0."""
    return sum(v.sign for v in D.vertices)


def double_point_order(D: SingularDiagram) -> list[int]:
    """Vertex indices of the double points in first-passage order from the long start."""
    if D.long is None:
        raise NotLong("first-passage order needs a long diagram")
    return _first_passage(D)


def _reanchor(kind: str, edges, ins, under_positions) -> tuple[str, tuple, tuple]:
    """Rotate a crossing so that position 0 is the incoming under-edge and
    derive its sign from where the incoming over-edge lands."""
    k = next(p for p in under_positions if ins[p])
    edges, ins = _rotate(edges, k), _rotate(ins, k)
    if ins == _CROSSING_INS[POS]:
        return POS, edges, ins
    if ins == _CROSSING_INS[NEG]:
        return NEG, edges, ins
    raise OrientationConflict("crossing incidences are not antipodal")  # pragma: no cover


def inverse_long_knot(D: SingularDiagram) -> SingularDiagram:
    """Rotate the long diagram by a half turn about a vertical axis in the
    plane (planar reflection plus over/under exchange), then reverse the
    orientation.  Crossing signs are unchanged; endpoints swap roles."""
    if D.long is None:
        raise NotLong("the inverse is defined for long diagrams")
    if not D.vertices:
        return D
    specs = []
    for v in D.vertices:
        order = (0, 3, 2, 1)
        edges = tuple(v.edges[i] for i in order)
        ins = tuple(not v.ins[i] for i in order)
        if v.kind == DP:
            specs.append((DP, edges, ins))
        else:
            # after reflection the old over-strand sits at positions 1 and 3 and becomes the under-strand
            kind, e2, i2 = _reanchor(v.kind, edges, ins, (1, 3))
            assert kind == v.kind
            specs.append((kind, e2, i2))
    return _from_resolved(specs, (D.long[1], D.long[0]))


def mirror(D: SingularDiagram) -> SingularDiagram:
    """Exchange over and under at every crossing (double points unchanged)."""
    specs = []
    for v in D.vertices:
        if v.kind == DP:
            specs.append((DP, v.edges, v.ins))
        else:
            specs.append(_reanchor(v.kind, v.edges, v.ins, (1, 3)))
    if not D.vertices:
        return D
    return _from_resolved(specs, D.long)


def _from_resolved(specs, long) -> SingularDiagram:
    """Rebuild from fully oriented vertices (double-point orientation is
    re-inferred from the crossing data and the ``a`` anchor)."""
    plain = []
    for kind, edges, ins in specs:
        if kind == DP:
            k = next(p for p in range(4) if ins[p])
            edges = _rotate(edges, k)
            ins = _rotate(ins, k)
        plain.append((kind, edges, ins))
    return from_oriented_vertices(plain, long)


def from_oriented_vertices(specs, long=None) -> SingularDiagram:
    """Build a diagram from ``(kind, edges, ins)`` triples with every
    incidence direction known."""
    if not specs:
        if long is None:
            return SingularDiagram.build([], None, 1)
        return SingularDiagram.build([], long)
    vertices = []
    for kind, edges, ins in specs:
        if kind != DP and tuple(ins) != _CROSSING_INS[kind]:
            raise OrientationConflict(f"{kind} {edges} violates the anchor convention")
        vertices.append(_canonical_vertex(kind, edges, ins))
    vertices.sort(key=lambda v: (_KIND_RANK[v.kind], v.edges))
    D = SingularDiagram(tuple(vertices), tuple(long) if long is not None else None, 0)
    _validate_built(D)
    return D


def _validate_built(D: SingularDiagram) -> None:
    tails: dict[int, int] = defaultdict(int)
    heads: dict[int, int] = defaultdict(int)
    for v in D.vertices:
        for e, i in zip(v.edges, v.ins):
            (heads if i else tails)[e] += 1
    start, end = D.long if D.long is not None else (None, None)
    for e in set(tails) | set(heads):
        t = tails.get(e, 0)
        h = heads.get(e, 0)
        want_t = 0 if e == start else 1
        want_h = 0 if e == end else 1
        if (t, h) != (want_t, want_h):
            raise EdgeMultiplicity(f"edge {e} has {t} tails and {h} heads")
    D._check_connected()
    if len(D.faces) != len(D.vertices) + 2:
        raise NonPlanar(f"{len(D.faces)} faces for {len(D.vertices)} vertices")


def relabel(D: SingularDiagram, mapping: dict[int, int]) -> SingularDiagram:
    specs = [(v.kind, tuple(mapping[e] for e in v.edges), v.ins) for v in D.vertices]
    long = (mapping[D.long[0]], mapping[D.long[1]]) if D.long is not None else None
    if not specs:
        return D
    return from_oriented_vertices(specs, long)


def canonical_form(D: SingularDiagram) -> str:
    """Serialization of a canonical relabeling; equal iff the diagrams are
    isomorphic as oriented combinatorial maps (preserving kinds and, for long
    diagrams, the endpoints)."""
    if not D.vertices:
        return serialize(D)
    if D.long is not None:
        roots = [D.heads[D.long[0]]]
    else:
        roots = [D.heads[e] for e in sorted(D.heads)]
    best = None
    for root in roots:
        mapping = _bfs_labels(D, root)
        s = serialize(relabel(D, mapping))
        if best is None or s < best:
            best = s
    return best


def _bfs_labels(D: SingularDiagram, root: Dart) -> dict[int, int]:
    mapping: dict[int, int] = {}
    nxt = 1
    if D.long is not None:
        mapping[D.long[0]] = nxt
        nxt += 1
    queue = [root]
    seen_v = {root[0]}
    i = 0
    while i < len(queue):
        vi, p0 = queue[i]
        i += 1
        v = D.vertices[vi]
        for k in range(4):
            p = (p0 + k) % 4
            e = v.edges[p]
            if e not in mapping:
                mapping[e] = nxt
                nxt += 1
            if D.long is not None and e in D.long:
                continue
            u, q = D.partner((vi, p))
            if u not in seen_v:
                seen_v.add(u)
                queue.append((u, q))
    return mapping


def isomorphic(D1: SingularDiagram, D2: SingularDiagram) -> bool:
    return canonical_form(D1) == canonical_form(D2)


def from_gauss(sequence: Sequence[int], flips: dict[int, int], kinds: dict[int, str],
               cut: int | None = None) -> SingularDiagram:
    """Build a knot diagram from a traversal sequence.

    ``sequence`` lists vertex labels in traversal order, each twice.  Edge
    ``i + 1`` runs from visit ``i`` to visit ``i + 1``.  ``flips[v]`` picks
    the rotation at ``v``: 0 gives ccw order (in1, in2, out1, out2), 1 gives
    (in1, out2, out1, in2), where 1/2 index the first/second visit.
    ``kinds[v]`` is ``'V'``, ``'u'`` (first visit passes under) or ``'o'``.
    ``cut`` (an edge id) opens the knot there into a long knot.
    """
    m = len(sequence)
    visits: dict[int, list[int]] = defaultdict(list)
    for i, v in enumerate(sequence):
        visits[v].append(i)
    start = m + 1
    specs = []
    for v, (i, j) in visits.items():
        in1, out1 = (i - 1) % m + 1, i + 1
        in2, out2 = (j - 1) % m + 1, j + 1
        if cut is not None:
            # the head of the cut edge becomes the start edge
            if in1 == cut:
                in1 = start
            if in2 == cut:
                in2 = start
        if flips[v] == 0:
            edges, ins = (in1, in2, out1, out2), (True, True, False, False)
        else:
            edges, ins = (in1, out2, out1, in2), (True, False, False, True)
        kind = kinds[v]
        if kind == DP:
            specs.append((DP, edges, ins))
            continue
        under = (0, 2) if kind == "u" else (1, 3)
        specs.append(_reanchor(kind, edges, ins, under))
    long = (start, cut) if cut is not None else None
    return from_oriented_vertices(specs, long)
