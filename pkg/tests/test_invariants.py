import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from linkcomplexity.diagram import DiagramError, braid_closure, parse_pd
from linkcomplexity.families import torus_braid, turks_head, twist_knot
from linkcomplexity.invariants import (
    IntegerMatrix,
    alexander_minus_one_oracle,
    continued_fraction,
    determinant,
    fibonacci,
    goeritz_matrix,
    smith_normal_form,
    torsion_order,
    torus_crossing_number,
    torus_det_minus_one,
)

from conftest import t2

square = st.integers(1, 6).flatmap(
    lambda n: st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=n, max_size=n)
)
rect = st.tuples(st.integers(1, 5), st.integers(1, 5)).flatmap(
    lambda rc: st.lists(st.lists(st.integers(-6, 6), min_size=rc[1], max_size=rc[1]),
                        min_size=rc[0], max_size=rc[0])
)


# -- matrices --------------------------------------------------------------

@given(square)
@settings(max_examples=300, deadline=None)
def test_det_matches_sympy(rows):
    assert IntegerMatrix(rows).det() == sympy.Matrix(rows).det()


@given(rect)
@settings(max_examples=300, deadline=None)
def test_smith_form_matches_sympy(rows):
    ours = smith_normal_form(IntegerMatrix(rows))
    s = sympy_snf(sympy.Matrix(rows), domain=sympy.ZZ)
    theirs = sorted(abs(int(s[i, i])) for i in range(min(s.shape)))
    assert sorted(ours) == theirs
    nz = [d for d in ours if d]
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))
    assert ours[: len(nz)] == nz


def test_torsion_order():
    assert torsion_order(IntegerMatrix(((2, 0), (0, 3)))) == 6
    assert torsion_order(IntegerMatrix(((2, 4), (4, 8)))) == 2
    assert torsion_order(IntegerMatrix(((0,),))) == 1


def test_matrix_text_roundtrip():
    m = IntegerMatrix(((1, -2, 3), (0, 4, -5)))
    assert IntegerMatrix.from_text(m.to_text()) == m
    assert m.minor(0, 1) == IntegerMatrix(((0, -5),))


def test_ragged_rejected():
    with pytest.raises(ValueError):
        IntegerMatrix(((1, 2), (3,)))


# -- determinant -----------------------------------------------------------

def test_goeritz_against_sympy(corpus):
    for e in corpus:
        d = e.diagram
        if d.n_crossings and d.pieces == 1 and not d.unknots:
            g = goeritz_matrix(d)
            assert abs(sympy.Matrix(g.entries).det()) == determinant(d), e.name


def test_tabulated_determinants(corpus):
    # frozen against standard knot tables
    known = {e.name: int(e.meta["determinant"]) for e in corpus if "determinant" in e.meta}
    assert len(known) >= 30
    for e in corpus:
        if e.name in known:
            assert determinant(e.diagram) == known[e.name], e.name


@pytest.mark.parametrize("q", [2, 3, 4, 5, 6, 7, 8, 9])
def test_t2q_determinant(q):
    assert determinant(t2(q)) == q


def test_turks_head_determinants():
    # Lucas numbers L_{2n} - 2
    assert [determinant(braid_closure(turks_head(n))) for n in range(2, 7)] == [5, 16, 45, 121, 320]


def test_twist_knot_determinants():
    assert [determinant(twist_knot(n)) for n in range(1, 8)] == [4 * n + 1 for n in range(1, 8)]


def test_split_and_unknot():
    assert determinant(parse_pd("")) == 1
    assert determinant(parse_pd("unknots=2")) == 0
    assert determinant(parse_pd("X[1,1,2,2]")) == 1
    with pytest.raises(DiagramError):
        alexander_minus_one_oracle(parse_pd("unknots=2"))


def test_white_and_black_agree():
    for d in (t2(5), twist_knot(3), braid_closure(turks_head(5))):
        assert abs(goeritz_matrix(d, "white").det()) == abs(goeritz_matrix(d, "black").det())


@pytest.mark.parametrize("m,q", [(3, 2), (5, 2), (3, 4), (5, 4), (7, 2), (3, 8), (5, 6)])
def test_torus_det_closed_form_vs_diagram(m, q):
    assert torus_det_minus_one(m, q) == determinant(braid_closure(torus_braid(min(m, q), max(m, q))))


def test_torus_closed_form_domain():
    with pytest.raises(ValueError):
        torus_det_minus_one(3, 5)
    with pytest.raises(ValueError):
        torus_det_minus_one(4, 6)
    with pytest.raises(ValueError):
        torus_crossing_number(1, 5)


def test_torus_crossing_number():
    assert torus_crossing_number(3, 2) == 3 == torus_crossing_number(2, 3)
    assert torus_crossing_number(5, 3) == 10


# -- continued fractions ---------------------------------------------------

def test_cf_examples():
    assert continued_fraction(8, 5).quotients == (1, 1, 1, 2)
    assert continued_fraction(8, 5).quotient_sum == 5
    assert continued_fraction(3, 1).quotients == (3,)


@given(st.integers(2, 10**6), st.integers(1, 10**6))
def test_cf_reconstructs(a, b):
    from math import gcd

    num, den = max(a, b), min(a, b)
    if num == den or gcd(num, den) != 1:
        return
    cf = continued_fraction(num, den)
    x = sympy.Rational(cf.quotients[-1])
    for a in reversed(cf.quotients[:-1]):
        x = a + 1 / x
    assert x == sympy.Rational(num, den)


@pytest.mark.parametrize("num,den", [(4, 2), (2, 3), (5, 0), (3, 3)])
def test_cf_rejects(num, den):
    with pytest.raises(ValueError):
        continued_fraction(num, den)


def test_fibonacci():
    assert [fibonacci(n) for n in range(8)] == [1, 1, 2, 3, 5, 8, 13, 21]
    for n in range(2, 40):
        assert continued_fraction(fibonacci(n), fibonacci(n - 1)).quotient_sum == n
