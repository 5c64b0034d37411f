"""Exact integer invariants: Goeritz and coloring-matrix determinants, Smith
normal form, torus-knot closed forms, continued fractions, Fibonacci numbers.

All matrix arithmetic is over Python integers; nothing here touches floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, prod
from typing import Literal, Sequence

from .diagram import DiagramError, LinkDiagram, _UnionFind

__all__ = [
    "IntegerMatrix",
    "ContinuedFraction",
    "checkerboard",
    "goeritz_matrix",
    "determinant",
    "alexander_minus_one_oracle",
    "smith_normal_form",
    "torsion_order",
    "torus_crossing_number",
    "torus_det_minus_one",
    "continued_fraction",
    "fibonacci",
]


@dataclass(frozen=True)
class IntegerMatrix:
    entries: tuple[tuple[int, ...], ...]
    cols: int = -1

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(v) for v in r) for r in self.entries)
        object.__setattr__(self, "entries", rows)
        if self.cols < 0:
            object.__setattr__(self, "cols", len(rows[0]) if rows else 0)
        if any(len(r) != self.cols for r in rows):
            raise ValueError("ragged matrix")

    @property
    def rows(self) -> int:
        return len(self.entries)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntegerMatrix":
        return cls(tuple((0,) * cols for _ in range(rows)), cols)

    def minor(self, row: int, col: int) -> "IntegerMatrix":
        """Drop one row and one column."""
        return IntegerMatrix(
            tuple(r[:col] + r[col + 1:] for i, r in enumerate(self.entries) if i != row),
            self.cols - 1,
        )

    def det(self) -> int:
        """Bareiss fraction-free elimination."""
        n = self.rows
        if n != self.cols:
            raise ValueError("determinant of a non-square matrix")
        if n == 0:
            return 1
        a = [list(r) for r in self.entries]
        sign, prev = 1, 1
        for k in range(n - 1):
            if a[k][k] == 0:
                swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
                if swap is None:
                    return 0
                a[k], a[swap] = a[swap], a[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1]

    def to_text(self) -> str:
        lines = [f"{self.rows} {self.cols}"]
        lines += [" ".join(str(v) for v in r) for r in self.entries]
        return "\n".join(lines)

    @classmethod
    def from_text(cls, text: str) -> "IntegerMatrix":
        lines = [ln for ln in text.strip().splitlines() if ln.strip()]
        r, c = (int(v) for v in lines[0].split())
        rows = tuple(tuple(int(v) for v in ln.split()) for ln in lines[1:])
        if len(rows) != r:
            raise ValueError("row count mismatch")
        return cls(rows, c)


# -- Goeritz ---------------------------------------------------------------

def checkerboard(d: LinkDiagram) -> list[int]:
    """Two-colour the faces so that faces sharing an edge differ."""
    if d.pieces != 1:
        raise DiagramError("checkerboard colouring needs a connected projection")
    colour: dict[int, int] = {0: 0}
    stack = [0]
    # faces on the two sides of position k+1 are the corners k and k+1
    adj: dict[int, set[int]] = {}
    for ci in range(d.n_crossings):
        for k in range(4):
            f1, f2 = d.corner_face[(ci, k)], d.corner_face[(ci, (k + 1) % 4)]
            adj.setdefault(f1, set()).add(f2)
            adj.setdefault(f2, set()).add(f1)
    while stack:
        f = stack.pop()
        for g in adj.get(f, ()):
            if g not in colour:
                colour[g] = 1 - colour[f]
                stack.append(g)
            elif colour[g] == colour[f]:
                raise DiagramError("faces are not checkerboard colourable (face tracing bug)")
    return [colour[i] for i in range(len(d.faces))]


def goeritz_matrix(d: LinkDiagram, color: Literal["white", "black"] = "white", drop: int = -1) -> IntegerMatrix:
    """Goeritz matrix on the regions of one colour, with one region deleted.

    Crossing type: +1 when the chosen-colour corners are the ones swept by the
    over-strand turning counterclockwise (corners 1 and 3), else -1.
    """
    if d.n_crossings == 0:
        raise DiagramError("Goeritz matrix needs at least one crossing")
    col = checkerboard(d)
    want = 0 if color == "white" else 1
    regions = [i for i, c in enumerate(col) if c == want]
    index = {f: i for i, f in enumerate(regions)}
    n = len(regions)
    g = [[0] * n for _ in range(n)]
    for ci in range(d.n_crossings):
        ks = [k for k in range(4) if col[d.corner_face[(ci, k)]] == want]
        eta = 1 if ks[0] % 2 == 1 else -1
        i, j = (index[d.corner_face[(ci, k)]] for k in ks)
        if i == j:
            continue
        g[i][j] -= eta
        g[j][i] -= eta
        g[i][i] += eta
        g[j][j] += eta
    drop = drop % n
    return IntegerMatrix(tuple(tuple(r) for r in g), n).minor(drop, drop)


def _split(d: LinkDiagram) -> bool:
    if not d.crossings:
        return d.unknots > 1
    return d.unknots > 0 or d.pieces > 1


def determinant(d: LinkDiagram) -> int:
    """|det| of the Goeritz matrix; 0 for visibly split diagrams."""
    if _split(d):
        return 0
    if not d.crossings:
        return 1
    white = abs(goeritz_matrix(d, "white").det())
    black = abs(goeritz_matrix(d, "black").det())
    if white != black:
        raise ArithmeticError(f"Goeritz determinants disagree: {white} != {black}")
    return white


def alexander_minus_one_oracle(d: LinkDiagram) -> int:
    """Independent route: the crossing/arc relation matrix at t = -1.

    Each crossing contributes ``2*over - under_in - under_out``; after deleting
    one row and one column the absolute determinant is |Delta(-1)|.
    """
    if not d.crossings:
        if d.unknots == 1:
            return 1
        raise DiagramError("oracle needs a connected diagram")
    if d.unknots or d.pieces > 1:
        raise DiagramError("oracle needs a connected diagram")
    uf = _UnionFind()
    for x in d.crossings:
        uf.union(x[1], x[3])
    for e in d.edges:
        uf.find(e)
    arcs = sorted({uf.find(e) for e in d.edges})
    if len(arcs) != d.n_crossings:
        # some component never passes under: it lifts off, the link is split
        return 0
    col = {a: i for i, a in enumerate(arcs)}
    n = d.n_crossings
    rows = []
    for x in d.crossings:
        r = [0] * n
        r[col[uf.find(x[1])]] += 2
        r[col[uf.find(x[0])]] -= 1
        r[col[uf.find(x[2])]] -= 1
        rows.append(tuple(r))
    return abs(IntegerMatrix(tuple(rows), n).minor(n - 1, n - 1).det())


# -- Smith normal form -----------------------------------------------------

def smith_normal_form(m: IntegerMatrix) -> list[int]:
    """Elementary divisors d1 | d2 | ... (zeros included, length min(rows, cols))."""
    a = [list(r) for r in m.entries]
    rows, cols = m.rows, m.cols
    diag = []
    t = 0
    while t < min(rows, cols):
        nz = [(abs(a[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if a[i][j]]
        if not nz:
            break
        _, pi, pj = min(nz)
        a[t], a[pi] = a[pi], a[t]
        for r in a:
            r[t], r[pj] = r[pj], r[t]
        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, rows):
                q = a[i][t] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                if a[i][t]:
                    dirty = True
            for j in range(t + 1, cols):
                q = a[t][j] // p
                if q:
                    for r in a:
                        r[j] -= q * r[t]
                if a[t][j]:
                    dirty = True
            if not dirty:
                bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % p), None)
                if bad is None:
                    break
                a[t] = [x + y for x, y in zip(a[t], a[bad[0]])]
                dirty = True
            # move the smallest nonzero of row/column t into the pivot
            cand = [(abs(a[i][t]), i, t) for i in range(t, rows) if a[i][t]]
            cand += [(abs(a[t][j]), t, j) for j in range(t, cols) if a[t][j]]
            _, pi, pj = min(cand)
            a[t], a[pi] = a[pi], a[t]
            for r in a:
                r[t], r[pj] = r[pj], r[t]
        diag.append(abs(a[t][t]))
        t += 1
    diag += [0] * (min(rows, cols) - len(diag))
    return diag


def torsion_order(m: IntegerMatrix) -> int:
    """Order of the torsion subgroup of the group presented by ``m``."""
    return prod(v for v in smith_normal_form(m) if v)


# -- torus knots, continued fractions, Fibonacci ---------------------------

def _torus_params(m: int, q: int) -> None:
    if m < 2 or q < 2:
        raise ValueError(f"torus parameters must be >= 2, got ({m}, {q})")


def torus_crossing_number(m: int, q: int) -> int:
    """min{m(q-1), q(m-1)}; non-coprime pairs are torus links."""
    _torus_params(m, q)
    return min(m * (q - 1), q * (m - 1))


def torus_det_minus_one(m: int, q: int) -> int:
    """|Delta_{T(m,q)}(-1)| when exactly one parameter is even: the odd one."""
    _torus_params(m, q)
    if gcd(m, q) != 1:
        raise ValueError(f"T({m},{q}) is not a knot")
    if m % 2 == q % 2:
        raise ValueError(f"closed form needs exactly one even parameter, got ({m}, {q})")
    return q if m % 2 == 0 else m


@dataclass(frozen=True)
class ContinuedFraction:
    quotients: tuple[int, ...]
    numerator: int
    denominator: int

    def __post_init__(self) -> None:
        if any(a < 1 for a in self.quotients):
            raise ValueError("partial quotients must be positive")
        if self.value() != Fraction(self.numerator, self.denominator):
            raise ValueError("expansion does not reconstruct the fraction")

    def value(self) -> Fraction:
        v = Fraction(self.quotients[-1])
        for a in reversed(self.quotients[:-1]):
            v = a + 1 / v
        return v

    @property
    def quotient_sum(self) -> int:
        return sum(self.quotients)


def continued_fraction(num: int, den: int) -> ContinuedFraction:
    if den < 1 or num <= den and not (num == den == 1):
        raise ValueError(f"need num > den >= 1, got {num}/{den}")
    if gcd(num, den) != 1:
        raise ValueError(f"{num}/{den} is not in lowest terms")
    qs = []
    a, b = num, den
    while b:
        qs.append(a // b)
        a, b = b, a % b
    return ContinuedFraction(tuple(qs), num, den)


def fibonacci(n: int) -> int:
    """f_0 = f_1 = 1."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    a, b = 1, 1
    for _ in range(n):
        a, b = b, a + b
    return a
