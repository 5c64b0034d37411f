"""Bound reports: everything known about c for one input, JSON-serialisable.

Schema (stable field names)::

    {"input": str,
     "crn": {"value": int, "status": str} | null,
     "determinant": int | null,
     "components": int | null,
     "bounds": [{"tag", "value", "kind": "lower"|"upper",
                 "status": "certified"|"asymptotic"|"conditional", ...}],
     "interval": {"lower": int, "upper": int | null},
     "warnings": [str],
     "extra": {...}}
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import gcd

from .bounds import (
    ASYMPTOTIC,
    CERTIFIED,
    CONDITIONAL,
    Bound,
    BoundInterval,
    CrnStatus,
    CrossingCertificate,
    alternating_crn_lower_bound,
    combine,
    crn_certificate,
    det_lower_bound,
    diagram_upper_bound,
    strict_log5_lower,
    torus_bounds,
    torus_crn_certificate,
    turks_head_lower_bound,
    volume_lower_bound,
)
from .diagram import LinkDiagram, component_count, format_pd, twist_number
from .families import FamilySpec, family_diagram, fib_torus, xn_pair
from .invariants import continued_fraction, determinant, torus_det_minus_one
from .roots import normalize, xn_facts


@dataclass
class Options:
    assume_prime: bool = False
    include_asymptotic: bool = False
    volume: float | None = None
    volume_source: str = ""
    volume_tolerance: float = 1e-4


@dataclass
class Report:
    input: str
    crn: CrossingCertificate | None = None
    determinant: int | None = None
    components: int | None = None
    bounds: list[Bound] = field(default_factory=list)
    interval: BoundInterval = field(default_factory=BoundInterval)
    warnings: list[str] = field(default_factory=list)
    extra: dict = field(default_factory=dict)
    skipped: str | None = None

    def to_dict(self) -> dict:
        out = {
            "input": self.input,
            "crn": self.crn.to_dict() if self.crn else None,
            "determinant": self.determinant,
            "components": self.components,
            "bounds": [b.to_dict() for b in self.bounds],
            "interval": self.interval.to_dict(),
            "warnings": list(self.warnings),
            "extra": dict(self.extra),
        }
        if self.skipped is not None:
            out["skipped"] = self.skipped
        return out

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_dict(cls, data: dict) -> "Report":
        crn = data.get("crn")
        bounds = [Bound.from_dict(b) for b in data.get("bounds", [])]
        iv = data["interval"]
        return cls(
            input=data["input"],
            crn=CrossingCertificate(crn["value"], CrnStatus(crn["status"])) if crn else None,
            determinant=data.get("determinant"),
            components=data.get("components"),
            bounds=bounds,
            interval=BoundInterval(iv["lower"], iv["upper"], tuple(bounds)),
            warnings=list(data.get("warnings", [])),
            extra=dict(data.get("extra", {})),
            skipped=data.get("skipped"),
        )


def _finish(rep: Report, opts: Options) -> Report:
    if opts.volume is not None:
        if rep.components == 0:
            raise ValueError("volume bound needs a nonempty link")
        rep.bounds.append(volume_lower_bound(opts.volume, opts.volume_tolerance, opts.volume_source))
    rep.interval = combine(rep.bounds, include_asymptotic=opts.include_asymptotic)
    for b in rep.bounds:
        if b.status == CONDITIONAL:
            rep.warnings.append(f"{b.tag} lower {b.value} is conditional on primality/non-splitness (--assume-prime)")
        elif b.status == ASYMPTOTIC and not opts.include_asymptotic:
            rep.warnings.append(f"{b.tag} lower {b.value} holds only asymptotically (--include-asymptotic)")
        if "boundary" in b.flags:
            rep.warnings.append(f"{b.tag}: vol/v3 is within tolerance of an integer, read as exact")
    return rep


def diagram_report(d: LinkDiagram, label: str = "", opts: Options | None = None,
                   prime_nonsplit: bool = False) -> Report:
    """Report for an arbitrary diagram; ``prime_nonsplit`` marks a known family fact."""
    opts = opts or Options()
    return _finish(_diagram_base(d, label, prime_nonsplit or opts.assume_prime), opts)


def _diagram_base(d: LinkDiagram, label: str, prime: bool) -> Report:
    crn = crn_certificate(d)
    comps = component_count(d)
    rep = Report(label or d.name or format_pd(d), crn, determinant(d), comps)
    rep.bounds.append(Bound("diagram-upper", diagram_upper_bound(crn, comps), "upper", CERTIFIED,
                            f"4*{crn.value} + 2*{comps} - 1"))
    if not crn.exact:
        rep.warnings.append("diagram is not reduced alternating: crossing count is only an upper estimate")
    if d.crossings:
        rep.bounds.append(det_lower_bound(d, prime))
        if crn.status is CrnStatus.EXACT_REDUCED_ALTERNATING and comps == 1:
            rep.bounds.append(alternating_crn_lower_bound(crn, prime))
    return rep


def torus_report(m: int, q: int, opts: Options | None = None) -> Report:
    opts = opts or Options()
    m, q = max(m, q), min(m, q)
    rep = Report(f"torus({m},{q})", torus_crn_certificate(m, q), None, gcd(m, q))
    rep.bounds.extend(torus_bounds(m, q))
    if gcd(m, q) == 1 and (m + q) % 2:
        rep.determinant = torus_det_minus_one(m, q)
    elif q == 2:
        rep.determinant = m
    d = family_diagram(FamilySpec("torus", (m, q)))
    if d is not None:
        det = determinant(d)
        if rep.determinant is not None and det != rep.determinant:
            raise ArithmeticError(f"closed-form determinant {rep.determinant} != diagram value {det}")
        rep.determinant = det
    if gcd(m, q) == 1:
        rep.extra["cf"] = list(continued_fraction(m, q).quotients)
    return _finish(rep, opts)


def fib_report(n: int, opts: Options | None = None) -> Report:
    opts = opts or Options()
    m, q, valid = fib_torus(n)
    if not valid:
        rep = Report(f"fib({n})", extra={"n": n, "m": m, "q": q})
        rep.skipped = "needs n >= 4 and n = 0, 2 (mod 3): exactly one of f_n, f_(n-1) even"
        return rep
    rep = torus_report(m, q, opts)
    rep.input = f"fib({n})"
    crn = rep.crn.value
    cf = continued_fraction(m, q)
    lower = strict_log5_lower(torus_det_minus_one(m, q))
    rep.extra.update({
        "n": n,
        "m": m,
        "q": q,
        "cf_sum": cf.quotient_sum,
        "crn_formula": m * (q - 1),
        "upper_2n_minus_3": 2 * n - 3,
        "lower_log5_f_n_minus_1": strict_log5_lower(q),
        # 1/2 log5(crn) - 2 < 2n - 3  <=>  crn < 25^(2n-1)
        "half_log_chain": crn < 25 ** (2 * n - 1),
        "chain_ok": crn == m * (q - 1) and cf.quotient_sum == n and 2 * n - 3 >= lower >= strict_log5_lower(q),
    })
    return rep


def th_report(n: int, opts: Options | None = None) -> Report:
    opts = opts or Options()
    d = family_diagram(FamilySpec("th", (n,)))
    rep = _diagram_base(d, f"th({n})", prime=True)
    value, status = turks_head_lower_bound(n)
    rep.bounds.append(Bound("turks-head", value, "lower", status, "crn(Th_n)/2 for sufficiently large n"))
    return _finish(rep, opts)


def twist_report(n: int, opts: Options | None = None) -> Report:
    opts = opts or Options()
    d = family_diagram(FamilySpec("twist", (n,)))
    rep = _diagram_base(d, f"twist({n})", prime=True)
    rep.extra["twist_number"] = twist_number(d)
    return _finish(rep, opts)


def xn_report(n: int, opts: Options | None = None) -> Report:
    opts = opts or Options()
    facts = xn_facts(n)
    root = facts["root"]
    rep = Report(f"xn({n})", components=1)
    rep.extra.update({
        "root": str(root),
        "root_components": facts["root_components"],
        "zero_one_irreducible": facts["zero_one_irreducible"],
        "has_essential_separating_2sphere": facts["has_essential_separating_2sphere"],
        "normal_form": str(normalize(xn_pair(n))),
    })
    if n >= 2:
        inner = torus_report(n, 2, Options())
        rep.crn, rep.determinant = inner.crn, inner.determinant
        rep.bounds = [Bound(b.tag, b.value, b.kind, b.status, f"root T(2,{n}): {b.expression}")
                      for b in inner.bounds]
    else:
        rep.warnings.append("X_1 has trivial root (S3, unknot): degenerate")
        rep.bounds = [Bound("root-sum", 0, "upper", CERTIFIED, "root is the trivial 2-pair")]
    rep.interval = combine(rep.bounds, include_asymptotic=opts.include_asymptotic)
    return rep


def family_report(spec: FamilySpec, opts: Options | None = None) -> Report:
    p = spec.params
    if spec.name == "torus":
        if min(p) < 2:
            raise ValueError(f"torus parameters must be >= 2, got {p}")
        return torus_report(p[0], p[1], opts)
    return {"fib": fib_report, "th": th_report, "twist": twist_report, "xn": xn_report}[spec.name](p[0], opts)
