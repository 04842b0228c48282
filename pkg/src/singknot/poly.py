"""Exact Laurent polynomials in A and B_1..B_d over the integers.

A polynomial of arity ``d`` stores its terms as a mapping from exponent
vectors ``(a, (b_1, ..., b_d))`` to nonzero Python integers.  Values are
immutable and hashable; equality is structural on the canonical form.
"""

from __future__ import annotations

import re
from collections import defaultdict
from typing import Iterable, Mapping

from singknot.errors import (
    ArityMismatch,
    NegativeExponentAtZero,
    PatternOverflow,
    PolyParseError,
    PreconditionError,
)

__all__ = ["LaurentPoly", "Exponent", "identify_b_variables", "decompose_by_b_pattern",
           "recombine", "substitute_b", "b_degree_range", "swap_b_variables"]

Exponent = tuple[int, tuple[int, ...]]


class LaurentPoly:
    """Integer Laurent polynomial in ``A`` and ``B_1..B_arity``."""

    __slots__ = ("_terms", "_arity", "_hash")

    def __init__(self, terms: Mapping[Exponent, int] | None = None, arity: int = 0):
        clean: dict[Exponent, int] = {}
        if terms:
            for (a, bs), c in terms.items():
                bs = tuple(bs)
                if len(bs) != arity:
                    raise ArityMismatch(f"exponent {bs} does not have arity {arity}")
                if c:
                    clean[(int(a), bs)] = int(c)
        self._terms = dict(sorted(clean.items()))
        self._arity = arity
        self._hash = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, arity: int = 0) -> LaurentPoly:
        return cls({}, arity)

    @classmethod
    def one(cls, arity: int = 0) -> LaurentPoly:
        return cls({(0, (0,) * arity): 1}, arity)

    @classmethod
    def monomial(cls, coeff: int = 1, a: int = 0, b: Iterable[int] = (), arity: int | None = None) -> LaurentPoly:
        b = tuple(b)
        if arity is None:
            arity = len(b)
        elif not b:
            b = (0,) * arity
        return cls({(a, b): coeff}, arity)

    @classmethod
    def A(cls, k: int = 1, arity: int = 0) -> LaurentPoly:
        return cls.monomial(1, k, arity=arity)

    @classmethod
    def B(cls, i: int, k: int = 1, arity: int = 1) -> LaurentPoly:
        """``B_i^k`` with 1-based index ``i``."""
        if not 1 <= i <= arity:
            raise ArityMismatch(f"B_{i} outside arity {arity}")
        b = [0] * arity
        b[i - 1] = k
        return cls.monomial(1, 0, b, arity)

    @classmethod
    def from_a_coefficients(cls, coeffs: Mapping[int, int], arity: int = 0) -> LaurentPoly:
        zeros = (0,) * arity
        return cls({(a, zeros): c for a, c in coeffs.items()}, arity)

    # -- basic accessors ----------------------------------------------------

    @property
    def arity(self) -> int:
        return self._arity

    @property
    def terms(self) -> dict[Exponent, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __iter__(self):
        return iter(self._terms.items())

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            if other._arity != self._arity:
                raise ArityMismatch(f"arity {self._arity} vs {other._arity}")
            return other
        if isinstance(other, int):
            return LaurentPoly({(0, (0,) * self._arity): other}, self._arity)
        return NotImplemented

    def __add__(self, other) -> LaurentPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return LaurentPoly(out, self._arity)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({k: -c for k, c in self._terms.items()}, self._arity)

    def __sub__(self, other) -> LaurentPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> LaurentPoly:
        return (-self) + other

    def __mul__(self, other) -> LaurentPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Exponent, int] = defaultdict(int)
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                key = (a1 + a2, tuple(x + y for x, y in zip(b1, b2)))
                out[key] += c1 * c2
        return LaurentPoly(out, self._arity)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials can be inverted")
            ((a, bs), c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError("monomial with non-unit coefficient cannot be inverted")
            return LaurentPoly({(-a * -n, tuple(-b * -n for b in bs)): c ** (-n)}, self._arity)
        result = LaurentPoly.one(self._arity)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift_a(self, k: int) -> LaurentPoly:
        """Multiply by ``A^k``."""
        return LaurentPoly({(a + k, bs): c for (a, bs), c in self._terms.items()}, self._arity)

    def with_arity(self, arity: int) -> LaurentPoly:
        """Pad (or drop all-zero trailing) B exponents to reach ``arity``."""
        out = {}
        for (a, bs), c in self._terms.items():
            if len(bs) > arity and any(bs[arity:]):
                raise ArityMismatch("cannot drop B variables that occur")
            out[(a, (bs + (0,) * arity)[:arity])] = c
        return LaurentPoly(out, arity)

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly({(0, (0,) * self._arity): other}, self._arity)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._arity == other._arity and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._arity, tuple(self._terms.items())))
        return self._hash

    # -- serialization ------------------------------------------------------

    def to_text(self) -> str:
        """Canonical text, e.g. ``-1*A^4*B1^1*B2^-1 + 1*A^-6``."""
        if not self._terms:
            return "0"
        parts = []
        for (a, bs), c in self._terms.items():
            factors = [str(c), f"A^{a}"]
            factors += [f"B{i}^{b}" for i, b in enumerate(bs, 1) if b]
            parts.append("*".join(factors))
        return " + ".join(parts)

    def to_records(self) -> list[tuple[int, int, tuple[int, ...]]]:
        return [(c, a, bs) for (a, bs), c in self._terms.items()]

    @classmethod
    def from_records(cls, records, arity: int) -> LaurentPoly:
        out: dict[Exponent, int] = defaultdict(int)
        for c, a, bs in records:
            out[(a, tuple(bs))] += c
        return cls(out, arity)

    @classmethod
    def parse(cls, text: str, arity: int) -> LaurentPoly:
        """Inverse of :meth:`to_text`."""
        text = text.strip()
        if text == "0":
            return cls.zero(arity)
        out: dict[Exponent, int] = defaultdict(int)
        for part in text.split(" + "):
            factors = part.strip().split("*")
            try:
                coeff = int(factors[0])
            except ValueError:
                raise PolyParseError(f"bad coefficient in {part!r}") from None
            a = 0
            bs = [0] * arity
            for f in factors[1:]:
                m = re.fullmatch(r"A\^(-?\d+)|B(\d+)\^(-?\d+)", f)
                if not m:
                    raise PolyParseError(f"bad factor {f!r}")
                if m.group(1) is not None:
                    a += int(m.group(1))
                else:
                    i = int(m.group(2))
                    if not 1 <= i <= arity:
                        raise PolyParseError(f"B{i} outside arity {arity}")
                    bs[i - 1] += int(m.group(3))
            out[(a, tuple(bs))] += coeff
        return cls(out, arity)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"LaurentPoly({self.to_text()!r}, arity={self._arity})"

    def pretty(self) -> str:
        """Human oriented rendering grouped by B-pattern."""
        if not self._terms:
            return "0"
        chunks = []
        for pattern, part in decompose_by_b_pattern(self, check=False).items():
            body = _pretty_a(part)
            name = (lambda i: "B") if self._arity == 1 else (lambda i: f"B{i}")
            bmon = "*".join(name(i) + (f"^{e}" if e != 1 else "")
                            for i, e in enumerate(pattern, 1) if e)
            if not bmon:
                chunks.append(body)
            elif len(part) == 1 and body in ("1", "-1"):
                chunks.append(("-" if body == "-1" else "") + bmon)
            else:
                chunks.append(f"({body})*{bmon}" if len(part) > 1 else f"{body}*{bmon}")
        return " + ".join(chunks)


def _pretty_a(p: LaurentPoly) -> str:
    parts = []
    for (a, _), c in sorted(p.items(), key=lambda t: -t[0][0]):
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if a == 0:
            body = str(mag)
        else:
            body = ("" if mag == 1 else f"{mag}*") + ("A" if a == 1 else f"A^{a}")
        parts.append((sign, body))
    s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        s += f" {sign} {body}"
    return s


def identify_b_variables(p: LaurentPoly) -> LaurentPoly:
    """Substitute ``B_i -> B`` for every i; result has arity 1."""
    out: dict[Exponent, int] = defaultdict(int)
    for (a, bs), c in p.items():
        out[(a, (sum(bs),))] += c
    return LaurentPoly(out, 1)


def swap_b_variables(p: LaurentPoly, perm: Iterable[int]) -> LaurentPoly:
    """Rename variables: ``B_i`` becomes ``B_{perm[i-1]}`` (1-based permutation)."""
    perm = list(perm)
    if sorted(perm) != list(range(1, p.arity + 1)):
        raise ValueError(f"{perm} is not a permutation of 1..{p.arity}")
    out = {}
    for (a, bs), c in p.items():
        new = [0] * p.arity
        for i, e in enumerate(bs):
            new[perm[i] - 1] = e
        out[(a, tuple(new))] = c
    return LaurentPoly(out, p.arity)


def decompose_by_b_pattern(p: LaurentPoly, check: bool = True) -> dict[tuple[int, ...], LaurentPoly]:
    """Split ``p`` into A-only parts keyed by their B-exponent vector.

    With ``check`` on, raises :class:`PatternOverflow` if some ``B_i`` takes
    three or more distinct exponents (a state sum should never produce that).
    """
    if check:
        for i in range(p.arity):
            seen = {bs[i] for (_, bs) in p.terms}
            if len(seen) > 2:
                raise PatternOverflow(f"B{i + 1} takes exponents {sorted(seen)}")
    groups: dict[tuple[int, ...], dict[int, int]] = defaultdict(dict)
    for (a, bs), c in p.items():
        groups[bs][a] = c
    if not groups and p.arity == 0:
        return {}
    return {bs: LaurentPoly.from_a_coefficients(groups[bs]) for bs in sorted(groups)}


def recombine(parts: Mapping[tuple[int, ...], LaurentPoly], arity: int) -> LaurentPoly:
    out: dict[Exponent, int] = {}
    for bs, part in parts.items():
        for (a, _), c in part.items():
            out[(a, tuple(bs))] = c
    return LaurentPoly(out, arity)


def substitute_b(p: LaurentPoly, i: int, value: int) -> LaurentPoly:
    """Evaluate ``B_i`` (1-based) at an integer; the variable keeps its slot with exponent 0."""
    if not 1 <= i <= p.arity:
        raise ArityMismatch(f"B{i} outside arity {p.arity}")
    out: dict[Exponent, int] = defaultdict(int)
    for (a, bs), c in p.items():
        e = bs[i - 1]
        if e < 0 and value == 0:
            raise NegativeExponentAtZero(f"B{i}^{e} cannot be evaluated at 0")
        if e >= 0:
            factor = value ** e
        elif value in (1, -1):
            factor = value ** (-e)
        else:
            raise PreconditionError(f"B{i}^{e} at {value} leaves the integers")
        rest = bs[: i - 1] + (0,) + bs[i:]
        out[(a, rest)] += c * factor
    return LaurentPoly(out, p.arity)


def b_degree_range(p: LaurentPoly, i: int) -> tuple[int, int] | None:
    """(min, max) exponent of ``B_i`` over the terms of ``p``; ``None`` for the zero polynomial."""
    if not 1 <= i <= p.arity:
        raise ArityMismatch(f"B{i} outside arity {p.arity}")
    exps = [bs[i - 1] for (_, bs) in p.terms]
    if not exps:
        return None
    return min(exps), max(exps)
