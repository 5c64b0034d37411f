"""Regenerate the bundled PD corpus under src/linkcomplexity/corpus/."""

from __future__ import annotations

import argparse
from pathlib import Path

from linkcomplexity.diagram import (
    BraidWord,
    LinkDiagram,
    braid_closure,
    connected_sum_diagram,
    format_pd,
    mirror,
    parse_pd,
)
from linkcomplexity.families import torus_braid, turks_head, twist_knot, twist_knot_usual

FIG8_VOL = "2.029883212819307"
SOURCES = "tabulated hyperbolic volume (SnapPy / KnotInfo)"


def t2(q: int) -> LinkDiagram:
    return braid_closure(BraidWord(2, (1,) * q))


def th(n: int) -> LinkDiagram:
    return braid_closure(turks_head(n))


def entries():
    yield "unknot", parse_pd(""), {"prime_nonsplit": "false", "determinant": "1"}
    yield "unknot_kink", parse_pd("X[1,1,2,2]"), {"prime_nonsplit": "false", "determinant": "1"}
    yield "unlink2", parse_pd("unknots=2"), {"prime_nonsplit": "false", "determinant": "0"}
    for q in range(2, 10):
        yield f"t2_{q}", t2(q), {"prime_nonsplit": "true", "determinant": str(q)}
    for m, q in ((3, 3), (3, 4), (3, 5)):
        yield f"t{m}_{q}", braid_closure(torus_braid(m, q)), {"prime_nonsplit": "true"}
    th_meta = {
        2: {"volume": FIG8_VOL, "determinant": "5"},
        3: {"volume": "7.327724753417752", "determinant": "16"},
        4: {"determinant": "45"},
        5: {"determinant": "121"},
        6: {},
    }
    for n, extra in th_meta.items():
        meta = {"prime_nonsplit": "true", **extra}
        if "volume" in meta:
            meta["volume_source"] = SOURCES
        yield f"th_{n}", th(n), meta
    for n in range(1, 6):
        meta = {"prime_nonsplit": "true", "determinant": str(4 * n + 1)}
        if n == 1:
            meta.update(volume=FIG8_VOL, volume_source=SOURCES)
        if n == 2:
            meta.update(volume="3.163963228883144", volume_source=SOURCES)
        yield f"twist_{n}", twist_knot(n), meta
    for n in range(1, 5):
        yield f"twist_usual_{n}", twist_knot_usual(n), {"prime_nonsplit": "true", "determinant": str(4 * n + 1)}
    sums = [
        ("sum_t23_t23", t2(3), t2(3)),
        ("sum_t23_mirror_t23", t2(3), mirror(t2(3))),
        ("sum_t23_th2", t2(3), th(2)),
        ("sum_th2_th2", th(2), th(2)),
        ("sum_t23_t25", t2(3), t2(5)),
        ("sum_t25_th2", t2(5), th(2)),
        ("sum_hopf_t23", t2(2), t2(3)),
        ("sum_twist1_twist2", twist_knot(1), twist_knot(2)),
        ("sum_t23_twist3", t2(3), twist_knot(3)),
        ("sum_t23_t23_t23", connected_sum_diagram(t2(3), 1, t2(3), 1), t2(3)),
    ]
    for name, a, b in sums:
        d = connected_sum_diagram(a, min(a.edges), b, min(b.edges))
        from linkcomplexity.invariants import determinant

        yield name, d, {"prime_nonsplit": "false", "determinant": str(determinant(a) * determinant(b))}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, default=Path(__file__).resolve().parents[1] / "src/linkcomplexity/corpus")
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    for name, d, meta in entries():
        lines = [f"# name: {name}"] + [f"# {k}: {v}" for k, v in meta.items()] + [format_pd(d)]
        (args.out / f"{name}.pd").write_text("\n".join(lines) + "\n")
        print(f"{name:24s} {d.n_crossings:3d} crossings")


if __name__ == "__main__":
    main()
