"""Singular Kauffman bracket and the normalized invariants V^s.

Every crossing is smoothed in the two usual ways and every double point in
its two ways (oriented / unoriented).  The bracket is the sum over all
``2^(n+d)`` states of ``A^(#A - #B) * (double point weights) * delta^(loops-1)``
with ``delta = -A^2 - A^-2``.  Enumeration is exhaustive; the inner loop is
compiled with numba and can be split over worker processes.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np
from numba import njit

from singknot.diagram import DP, SingularDiagram, inverse_long_knot, writhe
from singknot.errors import NotLong, PreconditionError
from singknot.poly import LaurentPoly, decompose_by_b_pattern

__all__ = [
    "SINGLE", "INDEXED", "DoublePointWeights", "DOUBLE_POINT_WEIGHTS",
    "bracket_state_counts", "singular_bracket", "jones_vs",
    "invertibility_certificate_v", "Certificate", "vertex_order",
]

SINGLE, INDEXED = "singleB", "indexedB"
ORIENTED, UNORIENTED = 0, 1


@dataclass(frozen=True)
class DoublePointWeights:
    """Monomial ``coeff * A^a * B^b`` attached to each double-point smoothing.

    Index 0 is the oriented smoothing (each arc joins an incoming edge to
    an outgoing one), index 1 the unoriented one.
    """

    oriented: tuple[int, int, int]
    unoriented: tuple[int, int, int]

    def __getitem__(self, choice: int) -> tuple[int, int, int]:
        return self.unoriented if choice else self.oriented


# Oriented smoothing A^3 B, unoriented A^3 B^-1.
DOUBLE_POINT_WEIGHTS = DoublePointWeights(oriented=(1, 3, 1), unoriented=(1, 3, -1))


def delta(arity: int = 0) -> LaurentPoly:
    return LaurentPoly({(2, (0,) * arity): -1, (-2, (0,) * arity): -1}, arity)


def vertex_order(D: SingularDiagram) -> list[int]:
    """Vertex indices in enumeration order: crossings, then double points by label."""
    crossings = [i for i, v in enumerate(D.vertices) if v.is_crossing]
    dps = sorted((i for i, v in enumerate(D.vertices) if not v.is_crossing),
                 key=lambda i: D.dp_labels[i])
    return crossings + dps


def _smoothing_pairs(v) -> tuple[tuple[int, int, int, int], tuple[int, int, int, int]]:
    """Position pairings for choice 0 and choice 1 at a vertex.

    Crossing: choice 0 is the A-smoothing, which joins the corners swept by
    turning the over-strand counterclockwise (corners 1 and 3), so the arcs
    pair positions (0,1) and (2,3).  Double point: choice 0 is the oriented
    smoothing.
    """
    p01 = (0, 1, 2, 3)
    p12 = (1, 2, 3, 0)
    if v.is_crossing:
        return p01, p12
    if v.ins[0] != v.ins[1]:
        return p01, p12
    return p12, p01


def _pair_table(D: SingularDiagram, order: list[int]) -> tuple[np.ndarray, int]:
    index: dict[int, int] = {}
    for e in sorted(D.edges):
        index[e] = len(index)
    if D.long is not None:
        # the two ends are joined through infinity
        index[D.long[1]] = index[D.long[0]]
    table = np.empty((len(order), 2, 4), dtype=np.int64)
    for row, vi in enumerate(order):
        v = D.vertices[vi]
        for c, pairing in enumerate(_smoothing_pairs(v)):
            table[row, c] = [index[v.edges[p]] for p in pairing]
    n_nodes = len(set(index.values()))
    # remap to a dense range
    dense = {x: i for i, x in enumerate(sorted(set(index.values())))}
    table = np.vectorize(dense.__getitem__)(table) if table.size else table
    return table.astype(np.int64), n_nodes


@njit(cache=True)
def _find(parent, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


@njit(cache=True)
def _count_states(table, n_cross, n_nodes, start, stop, pattern_mode, hist):
    """Accumulate hist[#A-smoothings, double-point key, loops].

    pattern_mode 1 keys double points by their bit pattern, 0 by the number
    of unoriented smoothings.
    """
    nv = table.shape[0]
    parent = np.empty(n_nodes, dtype=np.int64)
    for s in range(start, stop):
        for i in range(n_nodes):
            parent[i] = i
        comps = n_nodes
        n_a = 0
        key = 0
        for v in range(nv):
            c = (s >> v) & 1
            if v < n_cross:
                if c == 0:
                    n_a += 1
            elif pattern_mode == 1:
                key |= c << (v - n_cross)
            else:
                key += c
            for j in range(0, 4, 2):
                x = _find(parent, table[v, c, j])
                y = _find(parent, table[v, c, j + 1])
                if x != y:
                    parent[x] = y
                    comps -= 1
        hist[n_a, key, comps] += 1


def _hist_shape(n_cross: int, n_dp: int, n_nodes: int, indexed: bool) -> tuple[int, int, int]:
    return n_cross + 1, (1 << n_dp) if indexed else n_dp + 1, n_nodes + 1


def _worker(args):
    table, n_cross, n_nodes, start, stop, indexed, shape = args
    hist = np.zeros(shape, dtype=np.int64)
    _count_states(table, n_cross, n_nodes, start, stop, 1 if indexed else 0, hist)
    return hist


def bracket_state_counts(D: SingularDiagram, indexed: bool = False, jobs: int = 1) -> np.ndarray:
    """Histogram of states by (#A-smoothings, double-point key, loops).

    The double-point key is a bit pattern over first-passage labels
    (``indexed``) or the number of unoriented smoothings.  Its total equals
    ``2^(n+d)``.
    """
    order = vertex_order(D)
    n_cross = D.n_crossings
    n_dp = D.n_double_points
    if not D.vertices:
        shape = _hist_shape(0, 0, 1, indexed)
        hist = np.zeros(shape, dtype=np.int64)
        hist[0, 0, 1] = 1
        return hist
    table, n_nodes = _pair_table(D, order)
    shape = _hist_shape(n_cross, n_dp, n_nodes, indexed)
    total = 1 << len(order)
    jobs = max(1, min(jobs, total))
    bounds = [total * k // jobs for k in range(jobs + 1)]
    tasks = [(table, n_cross, n_nodes, bounds[k], bounds[k + 1], indexed, shape)
             for k in range(jobs)]
    if jobs == 1:
        return _worker(tasks[0])
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        parts = list(pool.map(_worker, tasks))
    return sum(parts[1:], parts[0])


def _check_mode(D: SingularDiagram, mode: str) -> None:
    if mode not in (SINGLE, INDEXED):
        raise ValueError(f"unknown mode {mode!r}")
    if mode == INDEXED:
        if D.long is None:
            raise NotLong("indexed B variables need a long diagram")
        if D.component_count != 1:
            raise PreconditionError("indexed B variables need a long knot (one component)")


def singular_bracket(D: SingularDiagram, mode: str = SINGLE, jobs: int = 1,
                     weights: DoublePointWeights | None = None) -> LaurentPoly:
    """Unnormalized singular bracket.  Arity is 1 in ``singleB`` mode and
    ``d`` in ``indexedB`` mode."""
    _check_mode(D, mode)
    weights = weights or DOUBLE_POINT_WEIGHTS
    indexed = mode == INDEXED
    n = D.n_crossings
    d = D.n_double_points
    arity = d if indexed else 1
    hist = bracket_state_counts(D, indexed, jobs)
    dpow = [LaurentPoly.one(arity)]
    for _ in range(hist.shape[2]):
        dpow.append(dpow[-1] * delta(arity))

    result: dict = {}
    for n_a, key, loops in zip(*np.nonzero(hist)):
        count = int(hist[n_a, key, loops])
        if indexed:
            choices = [(key >> i) & 1 for i in range(d)]
        else:
            choices = [1] * int(key) + [0] * (d - int(key))
        coeff, a_exp = count, int(n_a) - (n - int(n_a))
        bexp = [0] * arity
        for i, c in enumerate(choices):
            wc, wa, wb = weights[c]
            coeff *= wc
            a_exp += wa
            bexp[i if indexed else 0] += wb
        term = dpow[int(loops) - 1]
        for (a, _), c in term.items():
            k = (a + a_exp, tuple(bexp))
            result[k] = result.get(k, 0) + coeff * c
    if not result:
        return LaurentPoly.zero(arity)
    return LaurentPoly(result, arity)


def jones_vs(D: SingularDiagram, mode: str = SINGLE, jobs: int = 1,
             weights: DoublePointWeights | None = None) -> LaurentPoly:
    """``(-A)^(-3w) <D>_s``."""
    br = singular_bracket(D, mode, jobs, weights)
    w = writhe(D)
    sign = -1 if (3 * w) % 2 else 1
    return (br * sign).shift_a(-3 * w)


@dataclass(frozen=True)
class Certificate:
    """Outcome of an invertibility check.

    ``witness`` holds the B-exponent patterns on which the two polynomials
    differ, and ``swap`` the variable permutation relating them if one exists.
    """

    not_invertible: bool
    invariant: str
    forward: LaurentPoly
    backward: LaurentPoly
    witness: tuple[tuple[int, ...], ...] = ()
    swap: tuple[int, ...] | None = None

    @property
    def verdict(self) -> str:
        return "NotInvertible" if self.not_invertible else "Inconclusive"


def compare_for_inverse(name: str, p: LaurentPoly, q: LaurentPoly) -> Certificate:
    if p == q:
        return Certificate(False, name, p, q)
    from itertools import permutations

    from singknot.poly import swap_b_variables

    pa = decompose_by_b_pattern(p, check=False)
    qa = decompose_by_b_pattern(q, check=False)
    witness = tuple(k for k in sorted(set(pa) | set(qa)) if pa.get(k) != qa.get(k))
    swap = None
    if p.arity <= 6:
        for perm in permutations(range(1, p.arity + 1)):
            if swap_b_variables(p, perm) == q:
                swap = perm
                break
    return Certificate(True, name, p, q, witness, swap)


def invertibility_certificate_v(D: SingularDiagram, jobs: int = 1) -> Certificate:
    """Compare V^s_K with V^s of the inverse long knot; a difference proves
    the long knot is not invertible."""
    if D.long is None:
        raise NotLong("invertibility is tested on long knots")
    p = jones_vs(D, INDEXED, jobs)
    q = jones_vs(inverse_long_knot(D), INDEXED, jobs)
    return compare_for_inverse("jones", p, q)
