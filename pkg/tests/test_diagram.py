import pytest

from conftest import corpus_files, load
from singknot.diagram import (
    canonical_form,
    double_point_order,
    from_gauss,
    inverse_long_knot,
    isomorphic,
    mirror,
    parse_diagram,
    relabel,
    serialize,
    writhe,
)
from singknot.errors import (
    EdgeMultiplicity,
    MalformedLine,
    NonPlanar,
    NotLong,
    OrientationConflict,
    SplitDiagram,
)


@pytest.mark.parametrize("text, exc, line", [
    ("X+ 1 2 3", MalformedLine, 1),
    ("LONG 1 1\nY 1 2 3 4", MalformedLine, 2),
    ("X+ 1 2 1 2\nX+ 1 3 4 3", EdgeMultiplicity, 1),
    ("X+ 1 2 3 4\nX+ 1 4 3 2", OrientationConflict, 1),
])
def test_parse_errors_carry_line(text, exc, line):
    with pytest.raises(exc) as info:
        parse_diagram(text)
    assert info.value.line == line


def test_non_planar_rotation():
    # a long trefoil with one vertex reflected
    with pytest.raises(NonPlanar):
        parse_diagram("LONG 7 1\nX- 3 6 4 1\nX+ 5 3 6 2\nX+ 7 5 2 4")


def test_split_rejected():
    with pytest.raises(SplitDiagram):
        parse_diagram("LONG 3 1\nV 2 3 1 2\nO 9")


def test_comments_and_blank_lines():
    D = parse_diagram("# long unknot\n\nLONG 1 1  # trailing\n")
    assert D.long == (1, 1) and not D.vertices


@pytest.mark.parametrize("path", corpus_files(), ids=lambda p: p.stem)
def test_euler_count(path):
    D = parse_diagram(path.read_text())
    assert len(D.faces) == len(D.vertices) + 2


@pytest.mark.parametrize("path", corpus_files(), ids=lambda p: p.stem)
def test_serialize_round_trip(path):
    D = parse_diagram(path.read_text())
    assert serialize(parse_diagram(serialize(D))) == serialize(D)


def test_long_unknot_faces():
    D = load("long_unknot")
    assert len(D.faces) == 2
    assert all(f.is_star for f in D.faces)


def test_long_trefoil_stars():
    D = load("long_trefoil")
    assert len(D.faces) == 5
    assert sum(f.is_star for f in D.faces) == 2


def test_closed_has_no_stars():
    assert not any(f.is_star for f in load("trefoil").faces)


def test_writhe():
    assert writhe(load("long_trefoil")) == 3
    assert writhe(load("long_trefoil_left")) == -3
    assert writhe(load("long_figure_eight")) == 0
    assert writhe(load("singular_trefoil_T")) == 2


def test_double_point_order(T):
    order = double_point_order(T)
    assert len(order) == 2
    assert [T.dp_labels[v] for v in order] == [1, 2]


def test_double_point_order_needs_long():
    with pytest.raises(NotLong):
        double_point_order(load("singular_trefoil_closed"))


def test_inverse_is_involution(T):
    assert isomorphic(inverse_long_knot(inverse_long_knot(T)), T)


def test_inverse_swaps_ends_and_keeps_signs(T):
    inv = inverse_long_knot(T)
    assert writhe(inv) == writhe(T)
    assert inv.n_double_points == T.n_double_points
    assert not isomorphic(inv, T)


def test_inverse_matches_corpus(T):
    assert isomorphic(inverse_long_knot(T), load("singular_trefoil_T_inverse"))


def test_mirror_flips_writhe():
    D = load("long_5_2")
    assert writhe(mirror(D)) == -writhe(D)
    assert isomorphic(mirror(mirror(D)), D)


def test_relabel_is_isomorphic(T):
    R = relabel(T, {e: 100 + e for e in T.edges})
    assert isomorphic(R, T)
    assert canonical_form(R) == canonical_form(T)


def test_from_gauss_trefoil():
    D = from_gauss((1, 2, 3, 1, 2, 3), {1: 0, 2: 1, 3: 0}, {1: "o", 2: "u", 3: "o"}, cut=1)
    assert isomorphic(D, load("long_trefoil"))


def test_from_gauss_rejects_non_planar_flips():
    with pytest.raises(NonPlanar):
        from_gauss((1, 2, 3, 1, 2, 3), {1: 0, 2: 0, 3: 0}, {1: "o", 2: "u", 3: "o"})


def test_component_count():
    assert load("trefoil").component_count == 1
    two = parse_diagram("X+ 2 3 1 4\nX+ 3 2 4 1")  # Hopf link
    assert two.component_count == 2
