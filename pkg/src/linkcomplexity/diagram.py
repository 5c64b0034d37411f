"""Planar link diagrams in PD-code form.

Crossing convention: ``X[a, b, c, d]`` lists the four edge ids meeting at a
crossing counterclockwise, starting with the *incoming under-strand* ``a``.
The under-strand therefore runs ``a -> c`` and the over-strand joins ``b`` and
``d``.  Worked example, the right-handed trefoil as the closure of the
2-braid ``s1 s1 s1``::

    X[1,2,3,4] X[2,5,6,3] X[5,1,4,6]

Positions 0 and 2 of a crossing are under-strand ends, positions 1 and 3 are
over-strand ends.  Corner ``k`` of a crossing is the angular sector between
positions ``k`` and ``k + 1``.

Components made of round circles with no crossings cannot be written in PD
form, so they are carried separately as ``unknots``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from math import gcd
from typing import Iterable, Sequence

__all__ = [
    "DiagramError",
    "LinkDiagram",
    "BraidWord",
    "Face",
    "parse_pd",
    "format_pd",
    "parse_braid",
    "format_braid",
    "braid_closure",
    "plat_closure",
    "component_count",
    "is_alternating",
    "is_reduced",
    "faces",
    "twist_number",
    "connected_sum_diagram",
    "mirror",
]


class DiagramError(ValueError):
    """Malformed, inconsistent or non-planar diagram data."""


Crossing = tuple[int, int, int, int]
Dart = tuple[int, int]  # (crossing index, position)


def _rotate(x: Sequence[int], k: int) -> Crossing:
    return tuple(x[(i + k) % 4] for i in range(4))  # type: ignore[return-value]


@dataclass(frozen=True)
class Face:
    """A complementary region of the diagram, as its cycle of corners."""

    boundary: tuple[Dart, ...]

    @property
    def size(self) -> int:
        return len(self.boundary)

    @property
    def crossings(self) -> tuple[int, ...]:
        return tuple(c for c, _ in self.boundary)


@dataclass(frozen=True)
class LinkDiagram:
    crossings: tuple[Crossing, ...] = ()
    unknots: int = 0
    name: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "crossings", tuple(tuple(int(e) for e in x) for x in self.crossings))
        if self.unknots < 0:
            raise DiagramError("unknot count must be nonnegative")
        if not self.crossings and self.unknots == 0:
            raise DiagramError("empty diagram must declare at least one unknot")
        self._validate()

    # -- combinatorial substrate -------------------------------------------

    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    @cached_property
    def edges(self) -> dict[int, tuple[Dart, Dart]]:
        seen: dict[int, list[Dart]] = {}
        for ci, x in enumerate(self.crossings):
            if len(x) != 4:
                raise DiagramError(f"crossing {ci} does not have 4 entries")
            for p, e in enumerate(x):
                if e <= 0:
                    raise DiagramError(f"edge id {e} is not a positive integer")
                seen.setdefault(e, []).append((ci, p))
        for e, darts in seen.items():
            if len(darts) != 2:
                raise DiagramError(f"edge {e} appears {len(darts)} times (expected exactly 2)")
        return {e: (d[0], d[1]) for e, d in seen.items()}

    def other_end(self, dart: Dart) -> Dart:
        e = self.crossings[dart[0]][dart[1]]
        a, b = self.edges[e]
        return b if a == dart else a

    @cached_property
    def pieces(self) -> int:
        """Connected components of the projection graph (crossings only)."""
        parent = list(range(self.n_crossings))

        def find(i: int) -> int:
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for (c1, _), (c2, _) in self.edges.values():
            parent[find(c1)] = find(c2)
        return len({find(i) for i in range(self.n_crossings)})

    @cached_property
    def faces(self) -> tuple[Face, ...]:
        """Faces traced from the rotation system.

        The dart leaving position ``p`` of crossing ``c`` is followed along its
        edge to ``(c', p')`` and the walk continues from ``(c', p' + 1)``;
        the corner ``(c', p')`` is recorded on the way.
        """
        visited: set[Dart] = set()
        out = []
        for ci in range(self.n_crossings):
            for p in range(4):
                if (ci, p) in visited:
                    continue
                corners = []
                d = (ci, p)
                while d not in visited:
                    visited.add(d)
                    c2, p2 = self.other_end(d)
                    corners.append((c2, p2))
                    d = (c2, (p2 + 1) % 4)
                out.append(Face(tuple(corners)))
        return tuple(out)

    @cached_property
    def corner_face(self) -> dict[Dart, int]:
        return {corner: fi for fi, f in enumerate(self.faces) for corner in f.boundary}

    @cached_property
    def strands(self) -> tuple[tuple[Dart, ...], ...]:
        """Each component as the cyclic list of darts where it *enters* a crossing.

        The direction is the one fixed by the under-strand convention; a
        component that never passes under is traversed from its first over
        position in increasing crossing order.
        """
        done: set[int] = set()
        comps = []
        for ci in range(self.n_crossings):
            for start in ((ci, 0), (ci, 1)):
                if self.crossings[ci][start[1]] in done:
                    continue
                walk = []
                d = start
                while True:
                    walk.append(d)
                    exit_dart = (d[0], (d[1] + 2) % 4)
                    done.add(self.crossings[d[0]][d[1]])
                    done.add(self.crossings[exit_dart[0]][exit_dart[1]])
                    d = self.other_end(exit_dart)
                    if d == start:
                        break
                if any(p == 2 for _, p in walk) and not any(p == 0 for _, p in walk):
                    walk = [(c, (p + 2) % 4) for c, p in reversed(walk)]
                comps.append(tuple(walk))
        return tuple(comps)

    def _validate(self) -> None:
        self.edges  # multiplicity check
        if not self.crossings:
            return
        v = self.n_crossings
        if v - 2 * v + len(self.faces) != 2 * self.pieces:
            raise DiagramError(
                f"diagram is not planar: V - E + F = {v - 2 * v + len(self.faces)}, "
                f"expected {2 * self.pieces}"
            )
        for comp in self.strands:
            entries = {p for _, p in comp}
            if 0 in entries and 2 in entries:
                raise DiagramError("inconsistent orientation: an under-strand is entered from both ends")

    # -- derived data ------------------------------------------------------

    @cached_property
    def over_incoming(self) -> tuple[int, ...]:
        """Position (1 or 3) at which the over-strand enters each crossing."""
        pos = [3] * self.n_crossings
        for comp in self.strands:
            for c, p in comp:
                if p in (1, 3):
                    pos[c] = p
        return tuple(pos)

    @cached_property
    def signs(self) -> tuple[int, ...]:
        """Crossing signs: +1 when the over-strand runs from ``d`` to ``b``."""
        return tuple(1 if p == 3 else -1 for p in self.over_incoming)

    @property
    def writhe(self) -> int:
        return sum(self.signs)

    def __str__(self) -> str:
        return format_pd(self)


@dataclass(frozen=True)
class BraidWord:
    strand_count: int
    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        if self.strand_count < 1:
            raise DiagramError("strand count must be positive")
        for x in self.letters:
            if x == 0 or abs(x) >= self.strand_count:
                raise DiagramError(f"generator {x} invalid on {self.strand_count} strands")

    def permutation(self) -> list[int]:
        """Where the strand starting at position ``i`` ends up (0-based)."""
        perm = list(range(self.strand_count))  # perm[current position] = start
        for x in self.letters:
            i = abs(x) - 1
            perm[i], perm[i + 1] = perm[i + 1], perm[i]
        result = [0] * self.strand_count
        for pos, start in enumerate(perm):
            result[start] = pos
        return result

    def __str__(self) -> str:
        return format_braid(self)


# -- text formats ----------------------------------------------------------

_X_TOKEN = re.compile(r"^X\[\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*\]$")
_HEADER = re.compile(r"^unknots\s*=\s*(\d+)$")


def parse_pd(text: str, unknots: int | None = None, name: str = "") -> LinkDiagram:
    """Parse ``X[a,b,c,d]`` tokens, optionally preceded by ``unknots=k``.

    With no crossings and no declared count the diagram is the unknot.
    """
    body = text.strip()
    header = None
    m = re.match(r"^unknots\s*=\s*(\d+)", body)
    if m:
        header = int(m.group(1))
        body = body[m.end():]
    body = body.replace("PD[", "").rstrip("]") if body.startswith("PD[") else body
    tokens = re.findall(r"X\[[^\]]*\]|\S+", body)
    crossings = []
    for tok in tokens:
        tok = tok.strip(",")
        if not tok:
            continue
        mm = _X_TOKEN.match(tok)
        if not mm:
            raise DiagramError(f"malformed token {tok!r}")
        crossings.append(tuple(int(g) for g in mm.groups()))
    k = header if header is not None else unknots
    if k is None:
        k = 0 if crossings else 1
    return LinkDiagram(tuple(crossings), k, name=name)


def format_pd(d: LinkDiagram) -> str:
    parts = []
    if d.unknots or not d.crossings:
        parts.append(f"unknots={d.unknots}")
    parts.extend("X[{},{},{},{}]".format(*x) for x in d.crossings)
    return " ".join(parts)


def parse_braid(text: str) -> BraidWord:
    """Parse ``strands=n : w1 w2 ...`` with signed generator indices."""
    m = re.match(r"^\s*strands\s*=\s*(\d+)\s*:(.*)$", text, re.S)
    if not m:
        raise DiagramError(f"malformed braid {text!r}")
    try:
        letters = [int(t) for t in m.group(2).replace(",", " ").split()]
    except ValueError as exc:
        raise DiagramError(f"malformed braid letters in {text!r}") from exc
    return BraidWord(int(m.group(1)), tuple(letters))


def format_braid(b: BraidWord) -> str:
    return f"strands={b.strand_count} : " + " ".join(str(x) for x in b.letters)


# -- builders --------------------------------------------------------------

def _orient(crossings: list[list[int]]) -> list[Crossing]:
    """Rotate crossings by two positions where needed so that every
    component is traversed coherently with the under-strand convention."""
    edges: dict[int, list[Dart]] = {}
    for ci, x in enumerate(crossings):
        for p, e in enumerate(x):
            edges.setdefault(e, []).append((ci, p))

    def other(d: Dart) -> Dart:
        a, b = edges[crossings[d[0]][d[1]]]
        return b if a == d else a

    flip = [False] * len(crossings)
    seen: set[Dart] = set()
    for ci in range(len(crossings)):
        for start in ((ci, 0), (ci, 1)):
            if start in seen or (start[0], (start[1] + 2) % 4) in seen:
                continue
            d = start
            while True:
                seen.add(d)
                if d[1] == 2:
                    flip[d[0]] = True
                d = other((d[0], (d[1] + 2) % 4))
                if d == start:
                    break
    return [_rotate(x, 2) if f else tuple(x) for x, f in zip(crossings, flip)]  # type: ignore[misc]


def _relabel(crossings: Iterable[Sequence[int]]) -> list[list[int]]:
    ids: dict[int, int] = {}
    out = []
    for x in crossings:
        row = []
        for e in x:
            if e not in ids:
                ids[e] = len(ids) + 1
            row.append(ids[e])
        out.append(row)
    return out


class _UnionFind(dict):
    def find(self, x: int) -> int:
        self.setdefault(x, x)
        while self[x] != x:
            self[x] = self[self[x]]
            x = self[x]
        return x

    def union(self, a: int, b: int) -> None:
        self[self.find(a)] = self.find(b)


def _braid_crossings(b: BraidWord, bottom: list[int], counter: list[int]) -> tuple[list[list[int]], list[int]]:
    """Lay the braid out bottom to top, strands oriented upward."""
    current = list(bottom)
    out = []
    for x in b.letters:
        i = abs(x) - 1
        bl, br = current[i], current[i + 1]
        tl, tr = counter[0], counter[0] + 1
        counter[0] += 2
        if x > 0:
            # left strand passes over, under-strand runs BR -> TL
            out.append([br, tr, tl, bl])
        else:
            out.append([bl, br, tr, tl])
        current[i], current[i + 1] = tl, tr
    return out, current


def braid_closure(b: BraidWord, name: str = "") -> LinkDiagram:
    """Standard closure: top of position ``k`` joined to bottom of position ``k``."""
    s = b.strand_count
    counter = [s + 1]
    crossings, top = _braid_crossings(b, list(range(1, s + 1)), counter)
    uf = _UnionFind()
    for k in range(s):
        uf.union(top[k], k + 1)
    return _close(crossings, uf, list(range(1, s + 1)) + top, name)


def _close(crossings: list[list[int]], uf: _UnionFind, labels: list[int], name: str) -> LinkDiagram:
    crossings = [[uf.find(e) for e in x] for x in crossings]
    used = {e for x in crossings for e in x}
    free = len({uf.find(e) for e in labels} - used)
    return LinkDiagram(tuple(_orient(_relabel(crossings))), free, name=name)


def plat_closure(b: BraidWord, top_caps: Sequence[tuple[int, int]], name: str = "") -> LinkDiagram:
    """Plat-style closure of an even-strand braid.

    Bottom positions ``(1,2), (3,4), ...`` are joined by cups; top positions
    are joined in pairs as listed in ``top_caps`` (1-based, non-crossing).
    """
    s = b.strand_count
    if s % 2:
        raise DiagramError("plat closure needs an even number of strands")
    counter = [s + 1]
    crossings, top = _braid_crossings(b, list(range(1, s + 1)), counter)
    uf = _UnionFind()
    for k in range(0, s, 2):
        uf.union(k + 1, k + 2)
    for i, j in top_caps:
        uf.union(top[i - 1], top[j - 1])
    return _close(crossings, uf, list(range(1, s + 1)) + top, name)


# -- analysis --------------------------------------------------------------

def component_count(d: LinkDiagram) -> int:
    uf = _UnionFind()
    for x in d.crossings:
        uf.union(x[0], x[2])
        uf.union(x[1], x[3])
    return len({uf.find(e) for e in d.edges}) + d.unknots


def is_alternating(d: LinkDiagram) -> bool:
    """Every edge runs from an under position to an over position."""
    return all((p1 + p2) % 2 == 1 for (_, p1), (_, p2) in d.edges.values())


def is_reduced(d: LinkDiagram) -> bool:
    """No face meets a crossing in two of its corners."""
    for ci in range(d.n_crossings):
        if len({d.corner_face[(ci, k)] for k in range(4)}) < 4:
            return False
    return True


def faces(d: LinkDiagram) -> list[Face]:
    return list(d.faces)


def twist_number(d: LinkDiagram) -> int:
    """Number of twists: classes of crossings linked through bigon faces."""
    if not is_reduced(d):
        raise DiagramError("twist number is only defined here for reduced diagrams")
    uf = _UnionFind()
    for ci in range(d.n_crossings):
        uf.find(ci)
    for f in d.faces:
        if f.size == 2:
            (c1, _), (c2, _) = f.boundary
            uf.union(c1, c2)
    return len({uf.find(ci) for ci in range(d.n_crossings)})


def _shift(d: LinkDiagram, offset: int) -> list[list[int]]:
    return [[e + offset for e in x] for x in d.crossings]


def connected_sum_diagram(d1: LinkDiagram, arc1: int, d2: LinkDiagram, arc2: int) -> LinkDiagram:
    """Splice edge ``arc1`` of ``d1`` with edge ``arc2`` of ``d2``.

    Both edges are cut and reconnected across; of the two ways to do so the
    first one that keeps the diagram planar is taken.
    """
    if not d2.crossings:
        if d2.unknots < 1:
            raise DiagramError("connected sum with an empty link")
        if d1.crossings and arc1 not in d1.edges:
            raise DiagramError(f"edge {arc1} not in first diagram")
        return LinkDiagram(d1.crossings, d1.unknots + d2.unknots - 1)
    if not d1.crossings:
        return connected_sum_diagram(d2, arc2, d1, arc1)
    if arc1 not in d1.edges:
        raise DiagramError(f"edge {arc1} not in first diagram")
    if arc2 not in d2.edges:
        raise DiagramError(f"edge {arc2} not in second diagram")
    offset = max(d1.edges)
    c1 = [list(x) for x in d1.crossings]
    c2 = _shift(d2, offset)
    n1 = len(c1)
    (p, q), (r, s) = d1.edges[arc1], d2.edges[arc2]
    new_a, new_b = offset + max(d2.edges) + 1, offset + max(d2.edges) + 2
    last_err: DiagramError | None = None
    # prefer the pairing that joins an under end to an over end
    pairings = sorted(((r, s), (s, r)), key=lambda t: (p[1] + t[0][1]) % 2 == 0)
    for rr, ss in pairings:
        cs = [list(x) for x in c1] + [list(x) for x in c2]
        cs[p[0]][p[1]] = new_a
        cs[n1 + rr[0]][rr[1]] = new_a
        cs[q[0]][q[1]] = new_b
        cs[n1 + ss[0]][ss[1]] = new_b
        try:
            return LinkDiagram(tuple(_orient(_relabel(cs))), d1.unknots + d2.unknots)
        except DiagramError as exc:
            last_err = exc
    raise DiagramError(f"no planar splice found: {last_err}")


def mirror(d: LinkDiagram) -> LinkDiagram:
    """Switch every crossing; the incoming over-strand becomes entry 0."""
    out = []
    for x, p in zip(d.crossings, d.over_incoming):
        out.append(_rotate(x, p))
    return LinkDiagram(tuple(out), d.unknots, name=d.name and f"mirror({d.name})")


def braid_components(b: BraidWord) -> int:
    """Cycle count of the braid permutation."""
    perm = b.permutation()
    seen = [False] * len(perm)
    cycles = 0
    for i in range(len(perm)):
        if not seen[i]:
            cycles += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = perm[j]
    return cycles


def torus_components(m: int, q: int) -> int:
    return gcd(m, q)
