"""Certified integer bounds on the complexity c of a link-pair.

Every strict inequality ``c > x`` is turned into ``c >= floor(x) + 1`` with
integer power comparisons, so exact powers of 5 never depend on rounding.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import gcd
from typing import Iterable, Literal

from .diagram import LinkDiagram, component_count, is_alternating, is_reduced
from .invariants import (
    continued_fraction,
    determinant,
    goeritz_matrix,
    torsion_order,
    torus_crossing_number,
    torus_det_minus_one,
)

# volume of the regular ideal tetrahedron
V3 = Fraction("1.0149416064096536")


class BoundContradiction(ArithmeticError):
    """A certified lower bound exceeds a certified upper bound."""


class CrnStatus(str, Enum):
    EXACT_REDUCED_ALTERNATING = "ExactReducedAlternating"
    EXACT_CLOSED_FORM = "ExactClosedForm"
    UPPER_ONLY = "UpperOnly"


CERTIFIED, ASYMPTOTIC, CONDITIONAL = "certified", "asymptotic", "conditional"


@dataclass(frozen=True)
class CrossingCertificate:
    value: int
    status: CrnStatus

    @property
    def exact(self) -> bool:
        return self.status is not CrnStatus.UPPER_ONLY

    def to_dict(self) -> dict:
        return {"value": self.value, "status": self.status.value}


@dataclass(frozen=True)
class Bound:
    tag: str
    value: int
    kind: Literal["lower", "upper"]
    status: str = CERTIFIED
    expression: str = ""
    flags: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        out = {"tag": self.tag, "value": self.value, "kind": self.kind, "status": self.status}
        if self.expression:
            out["expression"] = self.expression
        if self.flags:
            out["flags"] = list(self.flags)
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "Bound":
        return cls(data["tag"], data["value"], data["kind"], data["status"],
                   data.get("expression", ""), tuple(data.get("flags", ())))


@dataclass(frozen=True)
class BoundInterval:
    lower: int = 0
    upper: int | None = None
    provenance: tuple[Bound, ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        if self.lower < 0:
            raise ValueError("lower bound must be nonnegative")
        if self.upper is not None and self.lower > self.upper:
            raise BoundContradiction(f"lower bound {self.lower} exceeds upper bound {self.upper}")

    @property
    def exact(self) -> bool:
        return self.upper == self.lower

    def __add__(self, other: "BoundInterval") -> "BoundInterval":
        upper = None if self.upper is None or other.upper is None else self.upper + other.upper
        return BoundInterval(self.lower + other.lower, upper, self.provenance + other.provenance)

    def to_dict(self) -> dict:
        return {"lower": self.lower, "upper": self.upper}

    def __str__(self) -> str:
        if self.exact:
            return str(self.lower)
        return f"[{self.lower}, {'?' if self.upper is None else self.upper}]"


# -- crossing number -------------------------------------------------------

def crn_certificate(d: LinkDiagram) -> CrossingCertificate:
    """Tait: a reduced alternating diagram realises the crossing number."""
    if is_reduced(d) and is_alternating(d):
        return CrossingCertificate(d.n_crossings, CrnStatus.EXACT_REDUCED_ALTERNATING)
    return CrossingCertificate(d.n_crossings, CrnStatus.UPPER_ONLY)


def torus_crn_certificate(m: int, q: int) -> CrossingCertificate:
    return CrossingCertificate(torus_crossing_number(m, q), CrnStatus.EXACT_CLOSED_FORM)


# -- upper bounds ----------------------------------------------------------

def diagram_upper_bound(crn: CrossingCertificate, components: int) -> int:
    """c < 4 crn + 2 #L, i.e. c <= 4 crn + 2 #L - 1.

    The spine construction works on any diagram, so an ``UpperOnly``
    certificate still yields a valid (weaker) bound.
    """
    if components < 1:
        raise ValueError("a link has at least one component")
    return 4 * crn.value + 2 * components - 1


def torus_upper_bound(m: int, q: int) -> int:
    """Twice the partial-quotient sum of m/q, minus 3."""
    if m < q:
        m, q = q, m
    if q < 2 or gcd(m, q) != 1:
        raise ValueError(f"torus upper bound needs coprime m > q >= 2, got ({m}, {q})")
    return 2 * continued_fraction(m, q).quotient_sum - 3


# -- lower bounds ----------------------------------------------------------

def strict_log_lower(x: int, base: int = 5) -> int:
    """Least k >= 0 with base**(k+1) > x: the integer form of c > log_base(x) - 1."""
    if x < 0:
        raise ValueError("x must be nonnegative")
    k, power = 0, base
    while power <= x:
        k += 1
        power *= base
    return k


def strict_log5_lower(x: int) -> int:
    return strict_log_lower(x, 5)


def det_lower_bound(d: LinkDiagram, prime_nonsplit: bool = False) -> Bound:
    """c > log_5 |Tor H_1(V)| - 1, V the double branched cover.

    For knots H_1(V) is finite of order |Delta(-1)|; for links the torsion is
    read from the Smith form of the Goeritz matrix.  Primality and
    non-splitness are the caller's assertion.
    """
    status = CERTIFIED if prime_nonsplit else CONDITIONAL
    if component_count(d) == 1:
        x = determinant(d)
        tag, expr = "det-lower", f"log5|Delta(-1)| - 1 with |Delta(-1)| = {x}"
    elif d.crossings and d.pieces == 1 and not d.unknots:
        x = torsion_order(goeritz_matrix(d))
        tag, expr = "torsion-lower", f"log5|Tor H1(V)| - 1 with |Tor| = {x}"
    else:
        x = 0
        tag, expr = "torsion-lower", "split diagram"
    flags = ("vacuous",) if x == 0 else ()
    return Bound(tag, strict_log5_lower(x) if x else 0, "lower", status, expr, flags)


def alternating_crn_lower_bound(crn: CrossingCertificate, prime: bool = False) -> Bound:
    """c > log_5 crn - 1 for prime alternating knots."""
    if crn.status is not CrnStatus.EXACT_REDUCED_ALTERNATING:
        raise ValueError("needs a crossing number certified by a reduced alternating diagram")
    return Bound("alt-crn-lower", strict_log5_lower(crn.value), "lower",
                 CERTIFIED if prime else CONDITIONAL, f"log5(crn) - 1 with crn = {crn.value}")


def volume_lower_bound(vol: float | str, tolerance: float | str = "1e-4", source: str = "") -> Bound:
    """c > vol / v3 for hyperbolic exteriors.

    The ratio is computed exactly from the decimal input.  When it lies within
    ``tolerance`` of an integer k the input is read as exactly k*v3 and the
    strict inequality gives k + 1; the bound carries a ``boundary`` flag.
    """
    v = Fraction(str(vol))
    tol = Fraction(str(tolerance))
    if v <= 0:
        raise ValueError("volume must be positive")
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    ratio = v / V3
    k = round(ratio)
    flags: tuple[str, ...] = ()
    if abs(ratio - k) <= tol:
        value, flags = k + 1, ("boundary",)
    else:
        value = int(ratio) + 1
    expr = f"vol/v3 = {float(ratio):.6f}" + (f" (volume source: {source})" if source else "")
    return Bound("volume-lower", value, "lower", CERTIFIED, expr, flags)


def turks_head_lower_bound(n: int) -> tuple[int, str]:
    """crn(Th_n)/2 = n, valid only for sufficiently large n."""
    if n < 2:
        raise ValueError("Turk's head links need n >= 2")
    return n, ASYMPTOTIC


# -- combination -----------------------------------------------------------

def combine(bounds: Iterable[Bound], include_asymptotic: bool = False,
            include_conditional: bool = False) -> BoundInterval:
    """Best certified interval; other bounds ride along in the provenance only."""
    bounds = tuple(bounds)
    admitted = {CERTIFIED}
    if include_asymptotic:
        admitted.add(ASYMPTOTIC)
    if include_conditional:
        admitted.add(CONDITIONAL)
    lowers = [b.value for b in bounds if b.kind == "lower" and b.status in admitted]
    uppers = [b.value for b in bounds if b.kind == "upper" and b.status in admitted]
    lower = max(lowers, default=0)
    upper = min(uppers, default=None)
    if upper is not None and lower > upper:
        raise BoundContradiction(
            f"certified lower {lower} exceeds certified upper {upper}: "
            + ", ".join(f"{b.tag}={b.value}" for b in bounds)
        )
    return BoundInterval(max(lower, 0), upper, bounds)


def sum_bounds_0(b1: BoundInterval, b2: BoundInterval) -> BoundInterval:
    """Complexity is additive under connected sum away from the link."""
    return b1 + b2


def sum_bounds_2(b1: BoundInterval, one_sphere_free1: bool,
                 b2: BoundInterval, one_sphere_free2: bool) -> BoundInterval:
    """Connected sum along the link.

    Additive when neither summand contains a 1-sphere.  Otherwise only the
    sub-additive upper bound survives: knot #2 D = D shows that no lower bound
    exists in general.
    """
    if one_sphere_free1 and one_sphere_free2:
        return b1 + b2
    upper = None if b1.upper is None or b2.upper is None else b1.upper + b2.upper
    note = Bound("no-lower-past-1-sphere", 0, "lower", CERTIFIED, "no lower bound survives a 1-sphere")
    up = () if upper is None else (Bound("sum-upper", upper, "upper", CERTIFIED, "c(X) <= c(X_1) + c(X_2)"),)
    return BoundInterval(0, upper, b1.provenance + b2.provenance + (note,) + up)


# -- closed-form torus intervals -------------------------------------------

def torus_bounds(m: int, q: int) -> list[Bound]:
    """Bounds for T(m, q) from closed forms only (no diagram needed)."""
    crn = torus_crn_certificate(m, q)
    comps = gcd(m, q)
    out = [Bound("diagram-upper", diagram_upper_bound(crn, comps), "upper", CERTIFIED,
                 f"4*{crn.value} + 2*{comps} - 1")]
    if comps == 1:
        out.append(Bound("torus-cf-upper", torus_upper_bound(m, q), "upper", CERTIFIED,
                         "2*(partial quotient sum) - 3"))
        if (m + q) % 2 == 1:
            x = torus_det_minus_one(m, q)
            out.append(Bound("det-lower", strict_log5_lower(x), "lower", CERTIFIED,
                             f"log5|Delta(-1)| - 1 with |Delta(-1)| = {x}"))
    elif min(m, q) == 2:
        # T(2, 2k): H_1 of the double branched cover is Z/2k
        x = max(m, q)
        out.append(Bound("torsion-lower", strict_log5_lower(x), "lower", CERTIFIED,
                         f"log5|Tor H1(V)| - 1 with |Tor| = {x}"))
    return out


def torus_interval(m: int, q: int) -> BoundInterval:
    if min(m, q) == 1:
        # T(m, 1) is the unknot: the trivial 2-pair
        return BoundInterval(0, 0, (Bound("trivial-pair", 0, "upper", CERTIFIED, "unknot"),))
    return combine(torus_bounds(m, q))
