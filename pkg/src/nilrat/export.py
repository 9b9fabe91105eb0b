"""Graphviz export of closure Hasse diagrams."""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Optional

from .orbits import Algebra, OrbitLabel, closure_poset
from .ratsmooth import StalkReport


def hasse_dot(alg: Algebra, nodes: Iterable[OrbitLabel], marked: Iterable[OrbitLabel] = (),
              title: Optional[str] = None) -> str:
    """DOT digraph with an edge from each orbit to the orbits it covers.
    Node order follows the canonical orbit order, so output is deterministic."""
    poset = closure_poset(alg)
    keep = set(nodes)
    marked = set(marked)
    ordered = [o for o in poset.nodes if o in keep]
    name = title or alg.name
    lines = [f'digraph "{name}" {{', "  rankdir=TB;", '  node [shape=box, fontname="Helvetica"];']
    for o in ordered:
        style = ', style=filled, fillcolor="#f4a582"' if o in marked else ""
        lines.append(f'  "{o}" [label="{o}\\ndim {poset.dims[o]}"{style}];')
    for lo, hi in poset.covers:
        if lo in keep and hi in keep:
            lines.append(f'  "{hi}" -> "{lo}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def report_dot(report: StalkReport) -> str:
    """Hasse diagram below lambda with the rational singular locus filled."""
    return hasse_dot(report.algebra, [e.mu for e in report.entries], report.locus,
                     title=f"{report.algebra.name} {report.lam}")


def export_dot(report: StalkReport, path) -> Path:
    path = Path(path)
    path.write_text(report_dot(report))
    return path
