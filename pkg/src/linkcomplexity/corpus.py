"""The bundled diagram corpus and the oracle/invariant checks run over it.

Each ``*.pd`` file holds ``# key: value`` metadata lines followed by PD text.
Recognised keys: ``name``, ``prime_nonsplit``, ``volume``, ``volume_source``,
``determinant`` (an expected value, checked when present).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Callable, Iterator

from .bounds import BoundContradiction
from .diagram import (
    DiagramError,
    LinkDiagram,
    component_count,
    is_alternating,
    is_reduced,
    mirror,
    parse_pd,
)
from .invariants import alexander_minus_one_oracle, determinant, goeritz_matrix, torsion_order
from .report import Options, diagram_report


@dataclass
class CorpusEntry:
    path: Path
    diagram: LinkDiagram
    meta: dict = field(default_factory=dict)

    @property
    def name(self) -> str:
        return self.meta.get("name", self.path.stem)

    @property
    def prime_nonsplit(self) -> bool:
        return self.meta.get("prime_nonsplit", "false").lower() == "true"

    @property
    def volume(self) -> float | None:
        v = self.meta.get("volume")
        return float(v) if v else None


def default_corpus_dir() -> Path:
    return Path(str(resources.files("linkcomplexity") / "corpus"))


def read_entry(path: Path) -> CorpusEntry:
    meta = {}
    body = []
    for line in path.read_text().splitlines():
        s = line.strip()
        if s.startswith("#"):
            key, _, value = s[1:].partition(":")
            meta[key.strip()] = value.strip()
        elif s:
            body.append(s)
    return CorpusEntry(path, parse_pd(" ".join(body), name=meta.get("name", path.stem)), meta)


def load_corpus(directory: Path | None = None, max_crossings: int | None = None) -> list[CorpusEntry]:
    directory = Path(directory) if directory else default_corpus_dir()
    out = []
    for p in sorted(directory.glob("*.pd")):
        e = read_entry(p)
        if max_crossings is None or e.diagram.n_crossings <= max_crossings:
            out.append(e)
    return out


# -- checks ----------------------------------------------------------------

def check_entry(e: CorpusEntry) -> Iterator[tuple[str, bool, str]]:
    d = e.diagram
    v = d.n_crossings
    if v:
        sizes = sum(f.size for f in d.faces)
        yield "face sizes sum to 4V", sizes == 4 * v, f"{sizes} vs {4 * v}"
        yield "Euler V - E + F = 2", v - 2 * v + len(d.faces) == 2 * d.pieces, f"F = {len(d.faces)}"
    det = determinant(d)
    connected = (not d.crossings and d.unknots == 1) or (d.crossings and d.unknots == 0 and d.pieces == 1)
    if connected:
        alex = alexander_minus_one_oracle(d)
        yield "Goeritz det = Alexander(-1) oracle", det == alex, f"{det} vs {alex}"
    if d.crossings and connected:
        w = abs(goeritz_matrix(d, "white").det())
        b = abs(goeritz_matrix(d, "black").det())
        yield "white/black Goeritz agree", w == b, f"{w} vs {b}"
        dropped = {abs(goeritz_matrix(d, "white", drop=k).det()) for k in range(min(3, v))}
        yield "det independent of deleted region", dropped == {det}, str(dropped)
        if component_count(d) == 1:
            t = torsion_order(goeritz_matrix(d))
            yield "torsion order = det (knot)", t == det, f"{t} vs {det}"
    m = mirror(d)
    yield "mirror preserves det", determinant(m) == det, ""
    yield "mirror preserves reduced/alternating", (is_reduced(m), is_alternating(m)) == (is_reduced(d), is_alternating(d)), ""
    if "determinant" in e.meta:
        yield "tabulated determinant", det == int(e.meta["determinant"]), f"{det} vs {e.meta['determinant']}"
    try:
        opts = Options(volume=e.volume, volume_source=e.meta.get("volume_source", ""))
        rep = diagram_report(d, e.name, opts, prime_nonsplit=e.prime_nonsplit)
        ok = rep.interval.upper is None or rep.interval.lower <= rep.interval.upper
        yield "certified lower <= certified upper", ok, str(rep.interval)
    except BoundContradiction as exc:
        yield "certified lower <= certified upper", False, str(exc)


def run_selftest(directory: Path | None = None, quick: bool = False,
                 echo: Callable[[str], None] = print) -> bool:
    directory = Path(directory) if directory else default_corpus_dir()
    all_ok = True
    paths = sorted(directory.glob("*.pd"))
    if not paths:
        echo(f"FAIL no corpus files in {directory}")
        return False
    for p in paths:
        try:
            e = read_entry(p)
        except (DiagramError, ValueError) as exc:
            echo(f"FAIL {p.name}: unreadable ({exc})")
            all_ok = False
            continue
        if quick and e.diagram.n_crossings > 8:
            continue
        failures = [(label, detail) for label, ok, detail in check_entry(e) if not ok]
        for label, detail in failures:
            echo(f"FAIL {p.name}: {label} ({detail})")
        all_ok &= not failures
        if not failures:
            echo(f"ok   {p.name}")
    for label, ok in _family_checks(quick):
        all_ok &= ok
        echo(f"{'ok  ' if ok else 'FAIL'} {label}")
    echo("selftest " + ("passed" if all_ok else "FAILED"))
    return all_ok


def _family_checks(quick: bool) -> Iterator[tuple[str, bool]]:
    from math import gcd

    from .bounds import crn_certificate, CrnStatus
    from .diagram import braid_closure, braid_components, twist_number
    from .families import fib_torus, torus_braid, turks_head, twist_knot
    from .invariants import continued_fraction

    top = 6 if quick else 12
    certs = [crn_certificate(braid_closure(turks_head(n))) for n in range(2, top + 1)]
    ok = all(c.value == 2 * n and c.status is CrnStatus.EXACT_REDUCED_ALTERNATING
             for n, c in zip(range(2, top + 1), certs))
    yield f"Turk's head crn = 2n for n <= {top}", ok
    ok = all(
        component_count(braid_closure(torus_braid(m, q))) == gcd(m, q) == braid_components(torus_braid(m, q))
        for m in range(2, 7) for q in range(1, 10) if not quick or m * q <= 20
    )
    yield "torus closure components = gcd(m, q)", ok
    ok = all(continued_fraction(*fib_torus(n)[:2]).quotient_sum == n for n in range(2, 31))
    yield "Fibonacci quotient sum = n", ok
    tw = [twist_knot(n) for n in range(1, (5 if quick else 20) + 1)]
    dets = [determinant(d) for d in tw]
    ok = len({twist_number(d) for d in tw}) == 1 and all(a < b for a, b in zip(dets, dets[1:]))
    yield "twist knots: constant twist number, increasing det", ok
