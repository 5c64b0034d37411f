import json

import pytest

from linkcomplexity.bounds import BoundContradiction, BoundInterval
from linkcomplexity.diagram import parse_pd
from linkcomplexity.families import parse_family
from linkcomplexity.report import Options, Report, diagram_report, family_report

from conftest import HOPF, t2


def interval(text, **kw):
    rep = family_report(parse_family(text), Options(**kw))
    return rep.interval.lower, rep.interval.upper


def test_documented_intervals():
    assert interval("th(2)") == (1, 17)
    assert interval("torus(3,2)") == (0, 3)
    assert interval("fib(5)") == (1, 7)
    assert interval("twist(3)") == (1, 33)
    assert interval("xn(5)") == (1, 5)


def test_unknot():
    rep = diagram_report(parse_pd(""))
    assert (rep.interval.lower, rep.interval.upper) == (0, 1)
    assert rep.determinant == 1


def test_asymptotic_opt_in():
    assert interval("th(6)")[0] == 3
    assert interval("th(6)", include_asymptotic=True)[0] == 6
    rep = family_report(parse_family("th(6)"))
    assert any("asymptotic" in w for w in rep.warnings)


def test_conditional_opt_in():
    rep = diagram_report(t2(7))
    assert rep.interval.lower == 0 and any("conditional" in w for w in rep.warnings)
    assert diagram_report(t2(7), opts=Options(assume_prime=True)).interval.lower == 1


def test_volume_boundary_warning():
    rep = diagram_report(parse_pd(HOPF), opts=Options(volume=2.02988, volume_source="table"))
    assert rep.interval.lower == 3
    assert any("within tolerance" in w for w in rep.warnings)


def test_volume_contradiction():
    with pytest.raises(BoundContradiction):
        diagram_report(t2(3), opts=Options(volume=100.0, volume_source="made up"))


def test_fib_chain_extra():
    rep = family_report(parse_family("fib(9)"))
    assert rep.extra["chain_ok"] and rep.extra["half_log_chain"]
    assert rep.extra["crn_formula"] == rep.crn.value == 55 * 33
    skipped = family_report(parse_family("fib(7)"))
    assert skipped.skipped and "skipped" in skipped.to_dict()


def test_xn_one_is_degenerate():
    rep = family_report(parse_family("xn(1)"))
    assert rep.interval == BoundInterval(0, 0)
    assert rep.warnings


@pytest.mark.parametrize("spec", ["th(3)", "torus(5,3)", "fib(8)", "fib(4)", "xn(6)", "twist(2)"])
def test_json_roundtrip(spec):
    rep = family_report(parse_family(spec), Options(include_asymptotic=True))
    data = json.loads(rep.to_json())
    assert set(data) >= {"input", "crn", "determinant", "components", "bounds", "interval", "warnings"}
    back = Report.from_dict(data)
    assert back.to_dict() == rep.to_dict()
    assert json.loads(back.to_json()) == data


def test_torus_parameters_validated():
    with pytest.raises(ValueError):
        family_report(parse_family("torus(5,1)"))
