"""Certified bounds on the spine complexity of links in the 3-sphere."""

from .bounds import BoundContradiction, BoundInterval, combine, strict_log5_lower
from .diagram import DiagramError, LinkDiagram, braid_closure, parse_braid, parse_pd
from .invariants import determinant
from .report import Options, Report, diagram_report, family_report

__all__ = [
    "BoundContradiction",
    "BoundInterval",
    "DiagramError",
    "LinkDiagram",
    "Options",
    "Report",
    "braid_closure",
    "combine",
    "determinant",
    "diagram_report",
    "family_report",
    "parse_braid",
    "parse_pd",
    "strict_log5_lower",
]
