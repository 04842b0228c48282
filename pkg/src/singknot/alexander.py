"""Singular Alexander polynomial from Kauffman's state model.

A state places one dot per vertex in one of its four corners so that every
face except the two starred ones gets exactly one dot.  Each dot carries a
monomial determined by the vertex kind and the corner type (front, back,
left, right); the polynomial is the sum over states of the products.

The starred faces are the two faces on either side of the arc that closes
a long diagram through infinity.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from singknot.bracket import INDEXED, SINGLE, Certificate, compare_for_inverse
from singknot.diagram import DP, Face, SingularDiagram, inverse_long_knot
from singknot.errors import NotLong, PreconditionError
from singknot.poly import LaurentPoly

__all__ = [
    "QuadrantWeightTable", "QUADRANT_WEIGHTS", "AlexanderState", "star_regions",
    "enumerate_states", "count_states", "alexander_s", "invertibility_certificate_alex",
]

CORNER_TYPES = ("front", "back", "left", "right")
Monomial = tuple[int, int, int]  # coeff, A-exponent, B-exponent
Weight = tuple[Monomial, ...]  # a sum of monomials


@dataclass(frozen=True)
class QuadrantWeightTable:
    """Dot weights by vertex kind and corner type.

    Each entry is a sum of terms ``coeff * A^a * B^b``.  Crossing entries
    are single monomials; two of the double-point entries need two terms
    (one B-free, one linear in B).
    """

    positive: dict[str, Weight]
    negative: dict[str, Weight]
    double_point: dict[str, Weight]

    def weight(self, kind: str, corner: str) -> Weight:
        if kind == "X+":
            return self.positive[corner]
        if kind == "X-":
            return self.negative[corner]
        return self.double_point[corner]


# At B = 0 the double point weighs A^-1 times a negative crossing; the B
# terms sit on front and back only, like the oriented smoothing.
QUADRANT_WEIGHTS = QuadrantWeightTable(
    positive={"front": ((1, 1, 0),), "back": ((-1, -1, 0),),
              "left": ((1, 0, 0),), "right": ((1, 0, 0),)},
    negative={"front": ((1, -1, 0),), "back": ((-1, 1, 0),),
              "left": ((1, 0, 0),), "right": ((1, 0, 0),)},
    double_point={"front": ((1, -2, 0), (1, 1, 1)), "back": ((-1, 0, 0), (1, 1, 1)),
                  "left": ((1, -1, 0),), "right": ((1, -1, 0),)},
)


@dataclass(frozen=True)
class AlexanderState:
    """``corners[i]`` is the corner of vertex ``i`` holding its dot."""

    corners: tuple[int, ...]

    def faces(self, D: SingularDiagram) -> tuple[int, ...]:
        return tuple(D.corner_face[(vi, k)] for vi, k in enumerate(self.corners))


def _require_long(D: SingularDiagram) -> None:
    if D.long is None:
        raise NotLong("the Alexander state model needs a long diagram")


def star_regions(D: SingularDiagram) -> tuple[Face, Face]:
    """The two faces bordering the closure arc."""
    _require_long(D)
    stars = [f for f in D.faces if f.is_star]
    if len(stars) != 2:
        raise PreconditionError("closure arc does not border two distinct faces")
    return stars[0], stars[1]


def _options(D: SingularDiagram) -> list[list[tuple[int, int]]]:
    """For each vertex, its (corner, face) pairs with unstarred faces."""
    star = {fi for fi, f in enumerate(D.faces) if f.is_star}
    opts = []
    for vi in range(len(D.vertices)):
        opts.append([(k, D.corner_face[(vi, k)]) for k in range(4)
                     if D.corner_face[(vi, k)] not in star])
    return opts


def enumerate_states(D: SingularDiagram) -> Iterator[AlexanderState]:
    """All perfect dot assignments, by backtracking over faces.

    The most constrained face (fewest free candidate corners) is filled
    first, so faces with a single candidate act as forced moves.
    """
    _require_long(D)
    star_regions(D)
    opts = _options(D)
    n = len(D.vertices)
    by_face: dict[int, list[tuple[int, int]]] = {}
    for vi, lst in enumerate(opts):
        for k, fi in lst:
            by_face.setdefault(fi, []).append((vi, k))
    free_faces = [fi for fi, f in enumerate(D.faces) if not f.is_star]
    if len(free_faces) != n:
        return
    corners = [-1] * n
    used_face: set[int] = set()

    def rec(remaining: int) -> Iterator[AlexanderState]:
        if remaining == 0:
            yield AlexanderState(tuple(corners))
            return
        best, best_cands = None, None
        for fi in free_faces:
            if fi in used_face:
                continue
            cands = [(vi, k) for vi, k in by_face.get(fi, ()) if corners[vi] < 0]
            if best_cands is None or len(cands) < len(best_cands):
                best, best_cands = fi, cands
                if len(cands) <= 1:
                    break
        if not best_cands:
            return
        used_face.add(best)
        for vi, k in best_cands:
            corners[vi] = k
            yield from rec(remaining - 1)
            corners[vi] = -1
        used_face.discard(best)

    yield from rec(n)


def count_states(D: SingularDiagram) -> int:
    return sum(1 for _ in enumerate_states(D))


def alexander_s(D: SingularDiagram, mode: str = SINGLE,
                weights: QuadrantWeightTable | None = None) -> LaurentPoly:
    """Sum over states of the product of dot weights.

    Arity is 1 in ``singleB`` mode and ``d`` in ``indexedB`` mode, where the
    double point with first-passage label ``i`` contributes powers of B_i.
    """
    _require_long(D)
    if mode not in (SINGLE, INDEXED):
        raise ValueError(f"unknown mode {mode!r}")
    if mode == INDEXED and D.component_count != 1:
        raise PreconditionError("indexed B variables need a long knot (one component)")
    weights = weights or QUADRANT_WEIGHTS
    d = D.n_double_points
    arity = d if mode == INDEXED else 1
    labels = D.dp_labels
    table = []
    for vi, v in enumerate(D.vertices):
        row = []
        for k in range(4):
            terms = []
            for c, a, b in weights.weight(v.kind, v.corner_type(k)):
                bs = [0] * arity
                if v.kind == DP:
                    bs[labels[vi] - 1 if mode == INDEXED else 0] = b
                terms.append(((a, tuple(bs)), c))
            row.append(terms)
        table.append(row)
    zero = (0, (0,) * arity)
    acc: dict = {}
    for st in enumerate_states(D):
        prod = {zero: 1}
        for vi, k in enumerate(st.corners):
            terms = table[vi][k]
            if len(terms) == 1:
                (da, db), c = terms[0]
                prod = {(a + da, tuple(x + y for x, y in zip(bs, db))): v * c
                        for (a, bs), v in prod.items()}
                continue
            nxt: dict = {}
            for (a, bs), v in prod.items():
                for (da, db), c in terms:
                    key = (a + da, tuple(x + y for x, y in zip(bs, db)))
                    nxt[key] = nxt.get(key, 0) + v * c
            prod = nxt
        for key, v in prod.items():
            acc[key] = acc.get(key, 0) + v
    return LaurentPoly(acc, arity)


def invertibility_certificate_alex(D: SingularDiagram) -> Certificate:
    """Compare Delta^s of a long knot with that of its inverse."""
    _require_long(D)
    p = alexander_s(D, INDEXED)
    q = alexander_s(inverse_long_knot(D), INDEXED)
    return compare_for_inverse("alexander", p, q)
