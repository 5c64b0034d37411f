"""Connected-sum calculus of link-pairs as an exact rewrite system.

An expression is a multiset of atoms glued by #0 (connected sum away from the
link).  Its complexity is the sum of the atom complexities once every atom is
replaced by its (0,2)-root, and every rewrite below preserves that sum.

Atom kinds
----------
``Prime``        (0,1,2)-irreducible pair, complexity exact or an interval
``Trivial0``     (S^3, empty), complexity 0, dropped by ``normalize``
``Trivial2``     (S^3, unknot), complexity 0, dropped by ``normalize``
``D``            (S^2 x S^1, {*} x S^1), complexity 0, contains a 1-sphere
``Handle``       (S^2 x S^1, empty), root is trivial
``Exceptional``  one of the six complexity-0 irreducible pairs
``Xn``           the pair X_n in S^2 x S^1 whose root is (S^3, T(2,n))
``Torus``        (S^3, T(m,q))
``Opaque``       a pair with known complexity bounds but unknown structure
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field, replace
from math import gcd
from typing import Iterable, Sequence

from .bounds import Bound, BoundInterval, torus_interval

__all__ = [
    "Atom",
    "PairExpression",
    "ExpressionError",
    "EXCEPTIONAL_NAMES",
    "prime",
    "sum0",
    "sum2",
    "rewrite_atom",
    "normalize",
    "extract_d_factors",
    "complexity",
    "xn_facts",
    "parse_expression",
    "format_expression",
]

EXCEPTIONAL_NAMES = ("S3-empty", "S3-core", "P3-empty", "P3-core", "L31-empty", "L31-core")
_ZERO_KINDS = {"Trivial0", "Trivial2", "D", "Handle", "Exceptional"}


class ExpressionError(ValueError):
    pass


@dataclass(frozen=True)
class Atom:
    kind: str
    label: str = ""
    lower: int = 0
    upper: int | None = 0
    components: int = 0
    n: int = 0
    m: int = 0
    q: int = 0
    ambient: str = "S3"
    one_sphere: bool = False
    degenerate: bool = False

    @property
    def has_link(self) -> bool:
        return self.components > 0

    @property
    def is_s3_knot(self) -> bool:
        if self.kind == "Exceptional":
            return self.label == "S3-core"
        return self.kind in ("Prime", "Torus") and self.ambient == "S3" and self.components == 1

    def interval(self) -> BoundInterval:
        if self.kind == "Xn":
            return torus_interval(2, self.n)
        if self.kind == "Torus":
            return torus_interval(self.m, self.q)
        if self.kind in _ZERO_KINDS:
            return BoundInterval(0, 0)
        return BoundInterval(self.lower, self.upper)

    def __str__(self) -> str:
        return _format_atom(self)


def _atom_key(a: Atom) -> tuple:
    # None (unknown upper bound) sorts after every integer
    return (a.kind, a.label, a.lower, a.upper is None, a.upper or 0, a.components, a.n, a.m, a.q,
            a.ambient, a.one_sphere, a.degenerate)


def prime(label: str, c: int | BoundInterval | tuple[int, int | None] | None = None,
          components: int = 1, ambient: str = "S3") -> Atom:
    if c is None:
        lo, hi = 0, None
    elif isinstance(c, int):
        lo, hi = c, c
    elif isinstance(c, BoundInterval):
        lo, hi = c.lower, c.upper
    else:
        lo, hi = c
    return Atom("Prime", label, lo, hi, components, ambient=ambient)


D = Atom("D", components=1, ambient="S2xS1", one_sphere=True)
HANDLE = Atom("Handle", ambient="S2xS1")
TRIVIAL0 = Atom("Trivial0")
TRIVIAL2 = Atom("Trivial2", components=1)


def exceptional(name: str) -> Atom:
    if name not in EXCEPTIONAL_NAMES:
        raise ExpressionError(f"unknown exceptional pair {name!r}")
    ambient = name.split("-")[0]
    return Atom("Exceptional", name, components=1 if name.endswith("core") else 0, ambient=ambient)


def xn(n: int) -> Atom:
    if n < 1:
        raise ExpressionError("X_n needs n >= 1")
    return Atom("Xn", n=n, components=1, ambient="S2xS1")


def torus(m: int, q: int) -> Atom:
    if m < 1 or q < 1:
        raise ExpressionError("torus parameters must be positive")
    m, q = max(m, q), min(m, q)
    return Atom("Torus", m=m, q=q, components=gcd(m, q))


def opaque(label: str, lower: int, upper: int | None, components: int, one_sphere: bool,
           ambient: str = "?") -> Atom:
    return Atom("Opaque", label, lower, upper, components, ambient=ambient, one_sphere=one_sphere)


@dataclass(frozen=True)
class PairExpression:
    atoms: tuple[Atom, ...] = ()
    log: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "atoms", tuple(sorted(self.atoms, key=_atom_key)))

    @classmethod
    def of(cls, *atoms: Atom) -> "PairExpression":
        return cls(tuple(atoms))

    def count(self, kind: str) -> int:
        return sum(1 for a in self.atoms if a.kind == kind)

    def __len__(self) -> int:
        return len(self.atoms)

    def __str__(self) -> str:
        return format_expression(self)


# -- operations ------------------------------------------------------------

def sum0(e1: PairExpression, e2: PairExpression) -> PairExpression:
    return PairExpression(e1.atoms + e2.atoms, e1.log + e2.log + ("#0",))


def _without(e: PairExpression, i: int) -> tuple[Atom, ...]:
    return e.atoms[:i] + e.atoms[i + 1:]


def _fused_label(a: Atom) -> str:
    return a.label or _format_atom(a)


def sum2(e1: PairExpression, target1: int, e2: PairExpression, target2: int) -> PairExpression:
    """Connected sum along the link components carried by two atoms."""
    try:
        a, b = e1.atoms[target1], e2.atoms[target2]
    except IndexError as exc:
        raise ExpressionError("#2 target index out of range") from exc
    if not a.has_link or not b.has_link:
        raise ExpressionError(f"#2 needs link components on both targets: {a}, {b}")
    rest = _without(e1, target1) + _without(e2, target2)
    tag = f"#2[{target1},{target2}]"
    log = e1.log + e2.log
    if a.kind == "Trivial2" or b.kind == "Trivial2":
        keep = b if a.kind == "Trivial2" else a
        return PairExpression(rest + (keep,), log + (f"{tag}: trivial 2-pair is a unit",))
    if not a.one_sphere and not b.one_sphere:
        # neither summand carries a 1-sphere: complexity is additive
        c = a.interval() + b.interval()
        ambient = "S3" if a.ambient == b.ambient == "S3" else f"{a.ambient}#{b.ambient}"
        fused = Atom("Prime", f"{_fused_label(a)}#2{_fused_label(b)}", c.lower, c.upper,
                     a.components + b.components - 1, ambient=ambient)
        return PairExpression(rest + (fused,), log + (f"{tag}: additive",))
    if a.kind == "D" and b.kind == "D":
        return PairExpression(rest + (opaque("D#2D", 0, 0, 1, True, "S2xS1#S2xS1"),),
                              log + (f"{tag}: c(D #2 D) = 0",))
    if (a.kind == "D" and b.is_s3_knot) or (b.kind == "D" and a.is_s3_knot):
        return PairExpression(rest + (D,), log + (f"{tag}: (S3,K) #2 D = D",))
    c = a.interval() + b.interval()
    mixed = opaque(f"{_fused_label(a)}#2{_fused_label(b)}", 0, c.upper,
                   a.components + b.components - 1, True)
    return PairExpression(rest + (mixed,), log + (f"{tag}: only c <= sum survives",))


def rewrite_atom(a: Atom) -> tuple[Atom, ...] | None:
    """One root rewrite for a single atom, or ``None`` if it is already a root."""
    if a.kind in ("Trivial0", "Trivial2", "Handle"):
        return ()
    if a.kind == "Xn":
        return (TRIVIAL2,) if a.n == 1 else (_torus_prime(2, a.n),)
    if a.kind == "Torus":
        if a.q == 1:
            return (TRIVIAL2,)
        return (_torus_prime(a.m, a.q),)
    return None


def _torus_prime(m: int, q: int) -> Atom:
    m, q = max(m, q), min(m, q)
    c = torus_interval(m, q)
    atom = Atom("Prime", f"T({q},{m})" if q == 2 else f"T({m},{q})", c.lower, c.upper, gcd(m, q))
    return replace(atom, degenerate=True) if q == 1 else atom


def rewrite_step(e: PairExpression, index: int) -> PairExpression:
    """Apply the rewrite to the atom at ``index`` (no-op if none applies)."""
    out = rewrite_atom(e.atoms[index])
    if out is None:
        return e
    return PairExpression(_without(e, index) + out,
                          e.log + (f"{e.atoms[index]} -> {' + '.join(map(str, out)) or '()'}",))


def normalize(e: PairExpression) -> PairExpression:
    atoms: list[Atom] = []
    log = list(e.log)
    pending = list(e.atoms)
    while pending:
        a = pending.pop()
        out = rewrite_atom(a)
        if out is None:
            atoms.append(a)
        else:
            log.append(f"{a} -> {' + '.join(map(str, out)) or '()'}")
            pending.extend(out)
    return PairExpression(tuple(atoms), tuple(log))


def extract_d_factors(e: PairExpression) -> tuple[PairExpression, int]:
    rest = tuple(a for a in e.atoms if a.kind != "D")
    return PairExpression(rest, e.log), len(e.atoms) - len(rest)


def complexity(e: PairExpression) -> BoundInterval:
    total = BoundInterval(0, 0)
    for a in e.atoms:
        total = total + a.interval()
    return BoundInterval(total.lower, total.upper,
                         (Bound("root-sum", total.lower, "lower", "certified", "sum over root atoms"),))


def xn_facts(n: int) -> dict:
    if n < 1:
        raise ExpressionError("X_n needs n >= 1")
    root = _torus_prime(2, n)
    return {
        "n": n,
        "root": root,
        "root_components": 2 if n % 2 == 0 else 1,
        "distinct_from_all_other_Xm": True,
        "zero_one_irreducible": n % 2 == 0,
        "two_irreducible": False,
        "separating_2spheres_trivial": n % 2 == 0,
        "has_essential_separating_2sphere": n % 2 == 1 and n >= 3,
        "link_is_knot": True,
        "contains_1sphere": False,
    }


def xn_distinct(n: int, m: int) -> bool:
    """X_n and X_m are different pairs whenever n != m (their roots differ)."""
    return n != m


# -- text format -----------------------------------------------------------

def _fmt_c(lo: int, hi: int | None) -> str:
    if hi == lo:
        return str(lo)
    return f"{lo}..{'?' if hi is None else hi}"


def _format_atom(a: Atom) -> str:
    if a.kind in ("D", "Handle", "Trivial0", "Trivial2"):
        return a.kind
    if a.kind == "Xn":
        return f"Xn({a.n})"
    if a.kind == "Torus":
        return f"Torus({a.m},{a.q})"
    if a.kind == "Exceptional":
        return f'Exceptional("{a.label}")'
    args = [f'"{a.label}"', f"c={_fmt_c(a.lower, a.upper)}"]
    if a.components != 1:
        args.append(f"comps={a.components}")
    if a.ambient != "S3":
        args.append(f"ambient={a.ambient}")
    if a.one_sphere:
        args.append("one_sphere")
    if a.degenerate:
        args.append("degenerate")
    return f"{a.kind}({', '.join(args)})"


def format_expression(e: PairExpression) -> str:
    if not e.atoms:
        return "()"
    counts = Counter(e.atoms)
    parts = []
    for a in sorted(counts, key=_atom_key):
        k = counts[a]
        parts.append(f"{k}*{a}" if k > 1 else str(a))
    return " + ".join(parts)


_TOKEN = re.compile(r"""\s*(?:(?P<num>\d+)|(?P<str>"[^"]*")|(?P<op>\#2|\.\.|[+*(),=\[\]?])|(?P<name>[A-Za-z_][\w\-:#']*))""")


class _Parser:
    def __init__(self, text: str):
        self.toks: list[tuple[str, str]] = []
        pos = 0
        text = text.strip()
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise ExpressionError(f"cannot parse expression at {text[pos:]!r}")
            kind = m.lastgroup
            self.toks.append((kind, m.group(kind)))
            pos = m.end()
            while pos < len(text) and text[pos].isspace():
                pos += 1
        self.i = 0

    def peek(self, k: int = 0) -> tuple[str, str] | None:
        return self.toks[self.i + k] if self.i + k < len(self.toks) else None

    def take(self, value: str | None = None) -> tuple[str, str]:
        tok = self.peek()
        if tok is None or (value is not None and tok[1] != value):
            raise ExpressionError(f"expected {value or 'token'}, got {tok[1] if tok else 'end of input'}")
        self.i += 1
        return tok

    def expr(self) -> PairExpression:
        e = self.sum2_chain()
        while self.peek() and self.peek()[1] == "+":
            self.take("+")
            e = sum0(e, self.sum2_chain())
        return e

    def sum2_chain(self) -> PairExpression:
        left = self.term()
        while self.peek() and self.peek()[1] == "#2":
            self.take("#2")
            i = j = None
            if self.peek() and self.peek()[1] == "[":
                self.take("[")
                i = int(self.take()[1])
                self.take(",")
                j = int(self.take()[1])
                self.take("]")
            right = self.term()
            left = sum2(left, _target(left, i), right, _target(right, j))
        return left

    def term(self) -> PairExpression:
        tok = self.peek()
        if tok and tok[0] == "num" and self.peek(1) and self.peek(1)[1] == "*":
            k = int(self.take()[1])
            self.take("*")
            a = self.primary()
            e = PairExpression()
            for _ in range(k):
                e = PairExpression(e.atoms + a.atoms, e.log)
            return e
        return self.primary()

    def primary(self) -> PairExpression:
        tok = self.take()
        if tok[1] == "(":
            if self.peek() and self.peek()[1] == ")":
                self.take(")")
                return PairExpression()
            e = self.expr()
            self.take(")")
            return e
        if tok[0] != "name":
            raise ExpressionError(f"unexpected {tok[1]!r}")
        name = tok[1]
        simple = {"D": D, "Handle": HANDLE, "Trivial0": TRIVIAL0, "Trivial2": TRIVIAL2}
        if name in simple:
            return PairExpression.of(simple[name])
        args, kwargs = self.arguments()
        if name == "Xn":
            return PairExpression.of(xn(int(args[0])))
        if name in ("Torus", "TorusPair", "T"):
            return PairExpression.of(torus(int(args[0]), int(args[1])))
        if name == "Exceptional":
            return PairExpression.of(exceptional(args[0]))
        if name in ("Prime", "Opaque"):
            if not args:
                raise ExpressionError(f"{name} needs a label")
            label = args[0]
            c = kwargs.get("c", args[1] if len(args) > 1 else None)
            lo, hi = _parse_c(c)
            comps = int(kwargs.get("comps", 1))
            ambient = kwargs.get("ambient", "S3" if name == "Prime" else "?")
            one_sphere = "one_sphere" in args[1:]
            atom = Atom(name, label, lo, hi, comps, ambient=ambient, one_sphere=one_sphere,
                        degenerate="degenerate" in args[1:])
            return PairExpression.of(atom)
        raise ExpressionError(f"unknown atom {name!r}")

    def arguments(self) -> tuple[list[str], dict[str, str]]:
        self.take("(")
        args: list[str] = []
        kwargs: dict[str, str] = {}
        while self.peek() and self.peek()[1] != ")":
            parts = []
            key = None
            if self.peek(1) and self.peek(1)[1] == "=":
                key = self.take()[1]
                self.take("=")
            depth = 0
            while self.peek() and not (depth == 0 and self.peek()[1] in (",", ")")):
                t = self.take()[1]
                depth += {"(": 1, ")": -1}.get(t, 0)
                parts.append(t)
            value = "".join(parts).strip('"') if len(parts) == 1 else "".join(parts)
            if key:
                kwargs[key] = value
            else:
                args.append(value)
            if self.peek() and self.peek()[1] == ",":
                self.take(",")
        self.take(")")
        return args, kwargs


def _parse_c(c: str | None) -> tuple[int, int | None]:
    if c is None or c == "?":
        return 0, None
    if ".." in c:
        lo, hi = c.split("..")
        return int(lo), None if hi == "?" else int(hi)
    return int(c), int(c)


def _target(e: PairExpression, i: int | None) -> int:
    if i is not None:
        return i
    linked = [k for k, a in enumerate(e.atoms) if a.has_link]
    if len(linked) != 1:
        raise ExpressionError(f"ambiguous #2 target in {format_expression(e)}; use #2[i,j]")
    return linked[0]


def parse_expression(text: str) -> PairExpression:
    if not text.strip():
        return PairExpression()
    p = _Parser(text)
    e = p.expr()
    if p.peek() is not None:
        raise ExpressionError(f"trailing input at {p.peek()[1]!r}")
    return e
