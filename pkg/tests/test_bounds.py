import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from linkcomplexity.bounds import (
    ASYMPTOTIC,
    CERTIFIED,
    CONDITIONAL,
    Bound,
    BoundContradiction,
    BoundInterval,
    CrnStatus,
    alternating_crn_lower_bound,
    combine,
    crn_certificate,
    det_lower_bound,
    diagram_upper_bound,
    strict_log5_lower,
    strict_log_lower,
    sum_bounds_0,
    sum_bounds_2,
    torus_bounds,
    torus_interval,
    torus_upper_bound,
    turks_head_lower_bound,
    volume_lower_bound,
)
from linkcomplexity.diagram import braid_closure, parse_pd
from linkcomplexity.families import turks_head, twist_knot_usual

from conftest import t2


# -- strict logarithm ------------------------------------------------------

@pytest.mark.parametrize("k", range(0, 11))
def test_powers_of_five(k):
    assert strict_log5_lower(5**k) == k
    if k:
        assert strict_log5_lower(5**k - 1) == k - 1


@given(st.integers(1, 10**6))
@settings(max_examples=2000)
def test_strict_log5_contract(x):
    k = strict_log5_lower(x)
    assert 5**k <= x < 5 ** (k + 1)


def test_strict_log_edges():
    assert strict_log5_lower(0) == 0
    assert strict_log_lower(8, 2) == 3
    with pytest.raises(ValueError):
        strict_log5_lower(-1)


# -- individual bounds -----------------------------------------------------

def test_upper_bound_formula():
    crn = crn_certificate(t2(3))
    assert crn.status is CrnStatus.EXACT_REDUCED_ALTERNATING
    assert diagram_upper_bound(crn, 1) == 13
    assert diagram_upper_bound(crn_certificate(parse_pd("")), 1) == 1


def test_non_alternating_diagram_is_upper_only():
    assert crn_certificate(twist_knot_usual(2)).status is CrnStatus.UPPER_ONLY
    assert crn_certificate(parse_pd("X[1,1,2,2]")).status is CrnStatus.UPPER_ONLY


def test_torus_upper_bound():
    assert torus_upper_bound(3, 2) == 3
    assert torus_upper_bound(8, 5) == 7
    assert torus_upper_bound(5, 8) == 7
    with pytest.raises(ValueError):
        torus_upper_bound(4, 2)


def test_det_lower_bound_statuses():
    b = det_lower_bound(t2(5))
    assert (b.value, b.status) == (1, CONDITIONAL)
    assert det_lower_bound(t2(5), prime_nonsplit=True).status == CERTIFIED
    link = det_lower_bound(t2(6), True)
    assert link.tag == "torsion-lower" and link.value == 1
    split = det_lower_bound(parse_pd("unknots=2"), True)
    assert split.value == 0 and "vacuous" in split.flags


def test_alternating_crn_bound():
    crn = crn_certificate(braid_closure(turks_head(13)))
    assert alternating_crn_lower_bound(crn, True).value == 2
    with pytest.raises(ValueError):
        alternating_crn_lower_bound(crn_certificate(twist_knot_usual(1)))


@pytest.mark.parametrize("vol,expected,boundary", [
    ("2.02988", 3, True),
    ("2.029883212819307", 3, True),
    ("0.5", 1, False),
    ("7.327724753417752", 8, False),
    ("3.163963228883144", 4, False),
])
def test_volume_bound(vol, expected, boundary):
    b = volume_lower_bound(vol, "1e-4")
    assert b.value == expected
    assert ("boundary" in b.flags) == boundary
    assert volume_lower_bound(float(vol), 1e-4) == b


def test_volume_bound_rejects():
    with pytest.raises(ValueError):
        volume_lower_bound(0)
    with pytest.raises(ValueError):
        volume_lower_bound(1.0, 0)


def test_turks_head_bound_is_asymptotic():
    assert turks_head_lower_bound(5) == (5, ASYMPTOTIC)


# -- combination -----------------------------------------------------------

statuses = st.sampled_from([CERTIFIED, ASYMPTOTIC, CONDITIONAL])
consistent_bounds = st.integers(0, 30).flatmap(
    lambda cut: st.lists(
        st.one_of(
            st.builds(lambda v, s: Bound("lo", v, "lower", s), st.integers(0, cut), statuses),
            st.builds(lambda v, s: Bound("up", v, "upper", s), st.integers(cut, 60), statuses),
        ),
        max_size=8,
    )
)


@given(consistent_bounds, st.booleans(), st.booleans())
def test_combine_idempotent_and_order_free(bounds, asym, cond):
    iv = combine(bounds, asym, cond)
    assert combine(bounds + bounds, asym, cond) == iv
    assert combine(list(reversed(bounds)), asym, cond) == iv
    assert combine(list(iv.provenance), asym, cond) == iv


@given(consistent_bounds)
def test_opt_in_only_tightens(bounds):
    base = combine(bounds)
    both = combine(bounds, True, True)
    assert both.lower >= base.lower
    if base.upper is not None:
        assert both.upper <= base.upper


def test_combine_ignores_uncertified_by_default():
    bs = [Bound("a", 5, "lower", ASYMPTOTIC), Bound("b", 1, "lower", CERTIFIED), Bound("c", 9, "upper")]
    assert (combine(bs).lower, combine(bs, include_asymptotic=True).lower) == (1, 5)


def test_contradiction_raises():
    with pytest.raises(BoundContradiction):
        combine([Bound("lo", 5, "lower"), Bound("up", 4, "upper")])
    with pytest.raises(BoundContradiction):
        BoundInterval(3, 2)


intervals = st.integers(0, 20).flatmap(
    lambda lo: st.builds(BoundInterval, st.just(lo), st.one_of(st.none(), st.integers(lo, 40)))
)


@given(intervals, intervals, intervals)
def test_sum0_associative_and_additive(a, b, c):
    assert sum_bounds_0(sum_bounds_0(a, b), c) == sum_bounds_0(a, sum_bounds_0(b, c))
    s = sum_bounds_0(a, b)
    assert s.lower == a.lower + b.lower


@given(intervals, intervals, st.booleans(), st.booleans())
def test_sum2(a, b, free1, free2):
    s = sum_bounds_2(a, free1, b, free2)
    if free1 and free2:
        assert s == a + b
    else:
        assert s.lower == 0
    if a.upper is not None and b.upper is not None:
        assert s.upper == a.upper + b.upper


# -- torus closed forms ----------------------------------------------------

def test_torus_interval():
    assert torus_interval(3, 2) == BoundInterval(0, 3)
    assert torus_interval(5, 2) == BoundInterval(1, 5)
    assert torus_interval(7, 1) == BoundInterval(0, 0)
    assert torus_interval(4, 2).lower == 0


def test_torus_bounds_are_consistent():
    for m, q in itertools.product(range(2, 12), repeat=2):
        iv = combine(torus_bounds(m, q))
        assert iv.upper is not None and iv.lower <= iv.upper
