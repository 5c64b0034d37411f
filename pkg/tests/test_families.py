import pytest

from linkcomplexity.diagram import braid_closure, component_count, is_alternating, is_reduced
from linkcomplexity.families import (
    FamilyError,
    FamilySpec,
    family_diagram,
    fib_torus,
    parse_family,
    torus_braid,
    turks_head,
    twist_knot,
    twist_knot_usual,
    xn_pair,
)
from linkcomplexity.invariants import determinant, torus_crossing_number


@pytest.mark.parametrize("text,spec", [
    ("torus(3,2)", FamilySpec("torus", (3, 2))),
    (" fib( 6 ) ", FamilySpec("fib", (6,))),
    ("th(4)", FamilySpec("th", (4,))),
    ("xn(7)", FamilySpec("xn", (7,))),
])
def test_parse_family(text, spec):
    assert parse_family(text) == spec
    assert parse_family(str(spec)) == spec


@pytest.mark.parametrize("text", ["torus(3)", "knot(3)", "th(1,2)", "th", "fib(x)"])
def test_parse_family_rejects(text):
    with pytest.raises(FamilyError):
        parse_family(text)


def test_fib_validity():
    valid = [n for n in range(2, 21) if fib_torus(n)[2]]
    assert valid == [5, 6, 8, 9, 11, 12, 14, 15, 17, 18, 20]
    assert fib_torus(5)[:2] == (8, 5)
    for n in valid:
        m, q, _ = fib_torus(n)
        assert (m % 2) != (q % 2)


def test_torus_braid_closure():
    d = braid_closure(torus_braid(3, 4))
    assert d.n_crossings == 8 == torus_crossing_number(3, 4)
    assert component_count(d) == 1
    with pytest.raises(FamilyError):
        torus_braid(1, 3)


@pytest.mark.parametrize("n", range(2, 11))
def test_turks_head(n):
    d = braid_closure(turks_head(n))
    assert d.n_crossings == 2 * n
    assert is_alternating(d) and is_reduced(d)
    assert component_count(d) == (3 if n % 3 == 0 else 1)


@pytest.mark.parametrize("n", range(1, 6))
def test_twist_knot_two_drawings_agree(n):
    a, b = twist_knot(n), twist_knot_usual(n)
    assert (a.n_crossings, b.n_crossings) == (2 * n + 2, 2 * n + 3)
    assert determinant(a) == determinant(b) == 4 * n + 1
    assert component_count(a) == component_count(b) == 1


def test_family_diagram():
    assert family_diagram(parse_family("torus(3,2)")).n_crossings == 3
    assert family_diagram(parse_family("torus(300,200)")) is None
    assert family_diagram(parse_family("xn(3)")) is None
    assert family_diagram(parse_family("twist(2)")).n_crossings == 6


def test_xn_pair():
    assert xn_pair(4).atoms[0].n == 4
