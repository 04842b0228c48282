import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from singknot.errors import (
    ArityMismatch,
    NegativeExponentAtZero,
    PatternOverflow,
    PolyParseError,
    PreconditionError,
)
from singknot.poly import (
    LaurentPoly,
    b_degree_range,
    decompose_by_b_pattern,
    identify_b_variables,
    recombine,
    substitute_b,
    swap_b_variables,
)

ARITY = 2


def polys(arity=ARITY):
    exps = st.tuples(st.integers(-6, 6), st.tuples(*[st.integers(-2, 2)] * arity))
    return st.dictionaries(exps, st.integers(-5, 5), max_size=6).map(
        lambda d: LaurentPoly(d, arity))


@given(polys(), polys(), polys())
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == LaurentPoly.zero(ARITY)
    assert p * LaurentPoly.one(ARITY) == p


@given(polys())
def test_text_round_trip(p):
    assert LaurentPoly.parse(p.to_text(), ARITY) == p


@given(polys())
def test_records_round_trip(p):
    assert LaurentPoly.from_records(p.to_records(), ARITY) == p


@given(polys())
def test_identify_is_ring_map_on_sums(p):
    q = identify_b_variables(p)
    assert q.arity == 1
    assert identify_b_variables(p + p) == q + q


@given(polys(), polys())
def test_identify_respects_products(p, q):
    assert identify_b_variables(p * q) == identify_b_variables(p) * identify_b_variables(q)


@given(polys())
def test_swap_twice_is_identity(p):
    assert swap_b_variables(swap_b_variables(p, (2, 1)), (2, 1)) == p


def test_zero_text():
    assert LaurentPoly.zero(2).to_text() == "0"
    assert LaurentPoly.parse("0", 2).is_zero()


def test_canonical_text_example():
    p = LaurentPoly.monomial(1, -6, (-1, -1))
    assert p.to_text() == "1*A^-6*B1^-1*B2^-1"


def test_parse_errors():
    with pytest.raises(PolyParseError):
        LaurentPoly.parse("x*A^2", 1)
    with pytest.raises(PolyParseError):
        LaurentPoly.parse("1*B3^1", 2)


def test_arity_mismatch():
    with pytest.raises(ArityMismatch):
        LaurentPoly.one(1) + LaurentPoly.one(2)


def test_negative_power_of_monomial():
    b = LaurentPoly.B(1, 1, 1)
    assert b ** -1 == LaurentPoly.B(1, -1, 1)
    with pytest.raises(ValueError):
        (b + 1) ** -1


def test_substitute_b():
    p = LaurentPoly.parse("1*A^-2 + 1*A^1*B1^1 + -1*A^-1*B1^1", 2)
    assert substitute_b(p, 1, 0) == LaurentPoly.parse("1*A^-2", 2)
    assert substitute_b(p, 1, 1) == LaurentPoly.parse("1*A^-2 + 1*A^1 + -1*A^-1", 2)
    with pytest.raises(ArityMismatch):
        substitute_b(p, 3, 1)


def test_substitute_negative_exponent():
    p = LaurentPoly.B(1, -1, 1)
    with pytest.raises(NegativeExponentAtZero):
        substitute_b(p, 1, 0)
    assert substitute_b(p, 1, -1) == LaurentPoly.one(1) * -1
    with pytest.raises(PreconditionError):
        substitute_b(p, 1, 2)


def test_decompose_and_recombine():
    p = LaurentPoly.parse("1*A^-6*B1^-1*B2^-1 + -1*A^4*B1^1*B2^-1 + -1*A^-4*B1^1*B2^-1", 2)
    parts = decompose_by_b_pattern(p)
    assert set(parts) == {(-1, -1), (1, -1)}
    assert parts[(1, -1)].to_text() == "-1*A^-4 + -1*A^4"
    assert recombine(parts, 2) == p


def test_decompose_overflow():
    with pytest.raises(PatternOverflow):
        decompose_by_b_pattern(LaurentPoly.parse("1*B1^-1 + 1 + 1*B1^1", 1))


def test_degree_range():
    p = LaurentPoly.parse("1*A^1*B1^-1 + 1*B1^1*B2^1", 2)
    assert b_degree_range(p, 1) == (-1, 1)
    assert b_degree_range(p, 2) == (0, 1)
    assert b_degree_range(LaurentPoly.zero(2), 1) is None


@settings(max_examples=50)
@given(polys(1), st.integers(-3, 3))
def test_shift_a_composes(p, k):
    assert p.shift_a(k).shift_a(-k) == p
