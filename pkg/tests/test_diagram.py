import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from linkcomplexity.diagram import (
    BraidWord,
    DiagramError,
    braid_closure,
    braid_components,
    component_count,
    connected_sum_diagram,
    format_braid,
    format_pd,
    is_alternating,
    is_reduced,
    mirror,
    parse_braid,
    parse_pd,
    torus_components,
    twist_number,
)
from linkcomplexity.families import torus_braid, turks_head, twist_knot, twist_knot_usual
from linkcomplexity.invariants import determinant

from conftest import HOPF, TREFOIL, t2


def trace_components(d):
    """Oracle: edges a~c and b~d at every crossing, count the classes."""
    parent = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b, c, e in d.crossings:
        parent[find(a)] = find(c)
        parent[find(b)] = find(e)
    return len({find(x) for x in parent}) + d.unknots


braid_words = st.integers(2, 5).flatmap(
    lambda n: st.lists(st.integers(1, n - 1).flatmap(lambda i: st.sampled_from([i, -i])), max_size=12)
    .map(lambda w: BraidWord(n, tuple(w)))
)


# -- parsing ---------------------------------------------------------------

def test_parse_format_roundtrip(trefoil):
    assert parse_pd(format_pd(trefoil)).crossings == trefoil.crossings


def test_empty_is_unknot():
    d = parse_pd("")
    assert d.unknots == 1 and component_count(d) == 1


def test_unknots_header():
    assert component_count(parse_pd("unknots=3")) == 3


@pytest.mark.parametrize("text", [
    "X[1,2,3,4] X[2,5,6,3] X[5,1,4,7]",   # edge used once
    "X[1,1,1,1]",                          # edge used four times
    "X[1,2,3",                             # malformed
    "X[1,2,2,1] X[3,4,4,3] X[1,3,5,5]",    # edge 1 thrice
    "Y[1,2,3,4]",
])
def test_parse_rejects(text):
    with pytest.raises(DiagramError):
        parse_pd(text)


def test_braid_text_roundtrip():
    b = parse_braid("strands=3 : 1 -2 1 -2")
    assert b == BraidWord(3, (1, -2, 1, -2))
    assert parse_braid(format_braid(b)) == b


@pytest.mark.parametrize("text", ["strands=2 : 2", "strands=3 : 0", "1 2 3", "strands=0 :"])
def test_braid_rejects(text):
    with pytest.raises(DiagramError):
        parse_braid(text)


# -- components ------------------------------------------------------------

def test_hopf_has_two_components(hopf):
    assert component_count(hopf) == 2 == trace_components(hopf)


def test_trefoil_closure_is_a_knot():
    assert component_count(t2(3)) == 1
    assert braid_components(BraidWord(2, (1, 1, 1))) == 1


@pytest.mark.parametrize("m,q", [(2, 4), (3, 3), (3, 6), (4, 6), (5, 3)])
def test_torus_components_gcd(m, q):
    d = braid_closure(torus_braid(m, q))
    assert component_count(d) == torus_components(m, q) == trace_components(d)


@given(braid_words)
@settings(max_examples=200, deadline=None)
def test_closure_components_match_permutation(b):
    d = braid_closure(b)
    assert component_count(d) == braid_components(b) == trace_components(d)


@given(braid_words)
@settings(max_examples=200, deadline=None)
def test_closure_faces(b):
    d = braid_closure(b)
    v = d.n_crossings
    assert sum(f.size for f in d.faces) == 4 * v
    assert v - 2 * v + len(d.faces) == 2 * d.pieces
    corners = [c for f in d.faces for c in f.boundary]
    assert len(corners) == len(set(corners)) == 4 * v


# -- alternating / reduced / twist -----------------------------------------

def test_alternating_and_reduced(trefoil):
    assert is_alternating(trefoil) and is_reduced(trefoil)
    kink = parse_pd("X[1,1,2,2]")
    assert not is_reduced(kink)


def test_usual_twist_diagram_is_not_alternating():
    for n in range(1, 5):
        assert not is_alternating(twist_knot_usual(n))
        assert is_alternating(twist_knot(n)) and is_reduced(twist_knot(n))


def test_twist_numbers():
    assert twist_number(t2(7)) == 1
    assert twist_number(braid_closure(turks_head(4))) == 8
    assert [twist_number(twist_knot(n)) for n in range(1, 6)] == [2] * 5


def test_twist_number_needs_reduced():
    with pytest.raises(DiagramError):
        twist_number(parse_pd("X[1,1,2,2]"))


# -- orientation, mirror, connected sum ------------------------------------

def test_writhe_and_mirror(trefoil):
    assert abs(trefoil.writhe) == 3
    assert mirror(trefoil).writhe == -trefoil.writhe
    assert mirror(mirror(trefoil)).crossings == trefoil.crossings


@given(braid_words)
@settings(max_examples=100, deadline=None)
def test_mirror_invariance(b):
    d = braid_closure(b)
    m = mirror(d)
    assert determinant(m) == determinant(d)
    assert component_count(m) == component_count(d)
    assert is_alternating(m) == is_alternating(d)
    assert is_reduced(m) == is_reduced(d)
    assert m.writhe == -d.writhe


@pytest.mark.parametrize("a,b", [(t2(3), t2(3)), (t2(3), twist_knot(1)), (t2(2), t2(5))])
def test_connected_sum(a, b):
    s = connected_sum_diagram(a, min(a.edges), b, min(b.edges))
    assert s.n_crossings == a.n_crossings + b.n_crossings
    assert component_count(s) == component_count(a) + component_count(b) - 1
    assert determinant(s) == determinant(a) * determinant(b)
    assert is_alternating(s) and is_reduced(s)


def test_hopf_text_matches_braid_closure(hopf):
    assert determinant(hopf) == determinant(t2(2)) == 2
    assert parse_pd(HOPF).n_crossings == 2 and parse_pd(TREFOIL).n_crossings == 3
