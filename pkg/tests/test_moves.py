import random
from dataclasses import replace

import pytest

from conftest import load
from singknot.alexander import QUADRANT_WEIGHTS, alexander_s
from singknot.bracket import INDEXED, jones_vs
from singknot.diagram import isomorphic, parse_diagram, serialize
from singknot.errors import StaleSite
from singknot.moves import (
    MOVE_KINDS,
    MoveInstance,
    apply_move,
    find_moves,
    fuzz_invariance,
    random_walk,
    variants_of,
)
from singknot.poly import LaurentPoly

# an R2 on the singular trefoil leaves a trigon with two crossings and a double point
SIII_SITE = """LONG 1 5
X+ 1 2 3 4
X+ 2 5 6 7
X+ 9 11 4 10
X- 6 11 8 7
V 3 8 9 10
"""
# likewise a trigon of three crossings with one strand over both others
R3_SITE = """LONG 1 11
X+ 1 2 3 4
X+ 5 11 4 10
X+ 9 8 7 6
X- 3 8 9 10
V 2 5 6 7
"""

# antiparallel flips have no preferred direction, so either label may undo them
INVERSE = {"R1+": {"R1-"}, "R1-": {"R1+"}, "R2": {"R2inv"}, "R2inv": {"R2"}, "R3": {"R3"},
           "SII": {"SII", "SIIinv"}, "SIIinv": {"SII", "SIIinv"}, "SIII": {"SIII"}}
GROWTH = {"R1+": 1, "R1-": -1, "R2": 2, "R2inv": -2, "R3": 0, "SII": 0, "SIIinv": 0, "SIII": 0}


def kinds(D):
    return {m.kind for m in find_moves(D)}


def test_unknot_only_introductions():
    assert kinds(load("long_unknot")) == {"R1+"}
    assert kinds(load("unknot")) == {"R1+"}


def test_bigon_crossing_double_point_gives_sii():
    assert {"SII", "SIIinv"} <= kinds(load("singular_trefoil_1"))


def test_trigon_with_double_point_gives_siii():
    assert "SIII" in kinds(parse_diagram(SIII_SITE))


def test_trigon_of_crossings_gives_r3():
    assert "R3" in kinds(parse_diagram(R3_SITE))


def test_find_moves_deterministic(T):
    assert find_moves(T) == find_moves(parse_diagram(serialize(T)))


@pytest.mark.parametrize("source", ["singular_trefoil_1", "singular_hopf", "SIII", "R3"])
def test_every_move_is_valid_and_invertible(source):
    D = parse_diagram({"SIII": SIII_SITE, "R3": R3_SITE}[source]) if source in ("SIII", "R3") \
        else load(source)
    base = jones_vs(D)
    for m in find_moves(D):
        E = apply_move(D, m)
        assert len(E.faces) == len(E.vertices) + 2
        assert E.n_double_points == D.n_double_points
        assert E.size - D.size == GROWTH[m.kind], m
        assert jones_vs(E) == base, m
        back = [m2 for m2 in find_moves(E) if m2.kind in INVERSE[m.kind]]
        assert any(isomorphic(apply_move(E, m2), D) for m2 in back), m


def test_r1_round_trip():
    D = load("long_trefoil")
    m = next(m for m in find_moves(D) if m.kind == "R1+")
    E = apply_move(D, m)
    undo = [m2 for m2 in find_moves(E) if m2.kind == "R1-"]
    assert any(isomorphic(apply_move(E, u), D) for u in undo)


def test_sii_on_T_keeps_order(T):
    m = next(m for m in find_moves(T) if m.kind.startswith("SII"))
    E = apply_move(T, m)
    assert E.n_double_points == 2
    # B1 and B2 enter asymmetrically, so a relabeling would show up here
    assert jones_vs(E, INDEXED) == jones_vs(T, INDEXED)
    assert alexander_s(E, INDEXED) == alexander_s(T, INDEXED)


def test_stale_site(T):
    other = load("long_trefoil")
    m = next(m for m in find_moves(other) if m.kind == "R2" and m not in find_moves(T))
    with pytest.raises(StaleSite):
        apply_move(T, m)
    with pytest.raises(StaleSite):
        apply_move(T, MoveInstance("R3", ((0, 0), (1, 0), (2, 0)), "cyclic"))


def test_variants_cover_kinds():
    for k in MOVE_KINDS:
        assert variants_of(k)
    with pytest.raises(ValueError):
        variants_of("R4")


def test_walk_is_deterministic(T):
    a = [m for m, _ in random_walk(T, 10, random.Random(5))]
    b = [m for m, _ in random_walk(T, 10, random.Random(5))]
    assert a == b


def test_fuzz_long_unknot():
    report = fuzz_invariance(load("long_unknot"), 50, seed=3)
    assert report.ok and len(report.records) == 50
    one = LaurentPoly.one(1).to_text()
    assert all(v == one for v in report.records[-1].after.values())


@pytest.mark.parametrize("seed", range(5))
def test_fuzz_T_keeps_example_values(T, seed):
    report = fuzz_invariance(T, 8, seed)
    assert report.ok
    expected = alexander_s(T, INDEXED).to_text()
    assert all(r.after["alexander_indexed"] == expected for r in report.records)


def test_fuzz_zero_steps(T):
    report = fuzz_invariance(T, 0, seed=0)
    assert report.ok and report.records == []


def test_fuzz_report_is_deterministic(T):
    assert fuzz_invariance(T, 6, 11).to_dict() == fuzz_invariance(T, 6, 11).to_dict()


def test_negative_control_corrupted_double_point_weights():
    bad = replace(QUADRANT_WEIGHTS, double_point=dict(QUADRANT_WEIGHTS.double_point,
                                                      left=((1, 0, 1),)))
    D = load("singular_trefoil_1")
    failures = []
    for seed in range(5):
        r = fuzz_invariance(D, 8, seed, invariants=lambda E: {"a": alexander_s(E, weights=bad)})
        assert not r.ok
        failures.append(r.first_failure.kind)
    assert set(failures) <= {"SII", "SIIinv", "SIII"}


def test_parallel_sii_inverse_is_siiinv():
    D = load("singular_trefoil_1")
    m = next(m for m in find_moves(D) if m.kind == "SII" and m.variant.startswith("parallel"))
    E = apply_move(D, m)
    back = [m2 for m2 in find_moves(E) if isomorphic(apply_move(E, m2), D)]
    assert {b.kind for b in back} == {"SIIinv"}
