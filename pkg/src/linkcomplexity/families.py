"""Generators for the link families whose complexity bounds are studied:
torus knots and links, Fibonacci torus knots, Turk's head links, twist knots
and the pairs X_n.

Family spec grammar: ``torus(3,2)``, ``fib(6)``, ``th(4)``, ``twist(5)``,
``xn(7)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .diagram import BraidWord, LinkDiagram, braid_closure, plat_closure
from .invariants import fibonacci
from .roots import PairExpression, xn

FAMILIES = ("torus", "fib", "th", "twist", "xn")


class FamilyError(ValueError):
    pass


@dataclass(frozen=True)
class FamilySpec:
    name: str
    params: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.name not in FAMILIES:
            raise FamilyError(f"unknown family {self.name!r}")
        want = 2 if self.name == "torus" else 1
        if len(self.params) != want:
            raise FamilyError(f"{self.name} takes {want} parameter(s)")

    def __str__(self) -> str:
        return f"{self.name}({','.join(map(str, self.params))})"


def parse_family(text: str) -> FamilySpec:
    m = re.fullmatch(r"\s*([a-z]+)\s*\(\s*(-?\d+(?:\s*,\s*-?\d+)*)\s*\)\s*", text)
    if not m:
        raise FamilyError(f"malformed family spec {text!r}")
    return FamilySpec(m.group(1), tuple(int(v) for v in m.group(2).split(",")))


def torus_braid(m: int, q: int) -> BraidWord:
    """(s1 s2 ... s_{m-1})^q on m strands; its closure is T(m, q)."""
    if m < 2 or q < 1:
        raise FamilyError(f"torus braid needs m >= 2, q >= 1, got ({m}, {q})")
    return BraidWord(m, tuple(range(1, m)) * q)


def fib_torus(n: int) -> tuple[int, int, bool]:
    """(f_n, f_{n-1}) and whether n >= 4 with n = 0, 2 (mod 3)."""
    if n < 2:
        raise FamilyError("fib family needs n >= 2")
    return fibonacci(n), fibonacci(n - 1), n >= 4 and n % 3 in (0, 2)


def turks_head(n: int) -> BraidWord:
    """(s1 s2^-1)^n on 3 strands."""
    if n < 2:
        raise FamilyError("Turk's head needs n >= 2")
    return BraidWord(3, (1, -2) * n)


def twist_knot(n: int) -> LinkDiagram:
    """Reduced alternating diagram: a 2-crossing clasp and 2n half-twists.

    Plat closure of ``s2^(2n) s1^-2`` on four strands, caps (1,4) and (2,3).
    It has 2n + 2 crossings and determinant 4n + 1; n = 1 is the figure-eight
    knot, n = 2 is 6_1.
    """
    if n < 1:
        raise FamilyError("twist knots need n >= 1")
    return plat_closure(BraidWord(4, (2,) * (2 * n) + (-1, -1)), ((1, 4), (2, 3)), name=f"twist({n})")


def twist_knot_usual(n: int) -> LinkDiagram:
    """The same knot drawn with 2n + 1 half-twists and the clasp reversed:
    2n + 3 crossings, not alternating."""
    if n < 1:
        raise FamilyError("twist knots need n >= 1")
    return plat_closure(BraidWord(4, (2,) * (2 * n + 1) + (1, 1)), ((1, 4), (2, 3)),
                        name=f"twist_usual({n})")


def xn_pair(n: int) -> PairExpression:
    return PairExpression.of(xn(n))


def family_diagram(spec: FamilySpec) -> LinkDiagram | None:
    """A diagram for the family member when one is small enough to build."""
    name, p = spec.name, spec.params
    if name == "torus":
        m, q = p
        if min(m, q) < 2 or (min(m, q) - 1) * max(m, q) > 400:
            return None
        return braid_closure(torus_braid(min(m, q), max(m, q)), name=str(spec))
    if name == "th":
        return braid_closure(turks_head(p[0]), name=str(spec))
    if name == "twist":
        return twist_knot(p[0])
    return None
