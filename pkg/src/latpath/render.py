"""Path diagrams: one panel per path, polygon outline, lattice dots and a caption."""

from __future__ import annotations

import xml.etree.ElementTree as ET
from dataclasses import dataclass
from typing import Sequence, Union

from .count import CountReport, PathEntry
from .geometry import LatticePolygon

PANELS_PER_ROW = 4


@dataclass(frozen=True)
class RenderSpec:
    select: Union[str, tuple[int, ...]] = "nonzero"  # "all", "nonzero" or explicit indices
    fmt: str = "svg"
    cell: int = 24
    annotate: bool = True

    def __post_init__(self):
        if self.cell <= 0:
            raise ValueError("cell size must be positive")
        if self.fmt not in ("svg", "ascii"):
            raise ValueError(f"unknown render format {self.fmt!r}")
        if isinstance(self.select, str) and self.select not in ("all", "nonzero"):
            raise ValueError(f"unknown selection {self.select!r}")


def select_entries(report: CountReport, select) -> list[PathEntry]:
    if select == "all":
        return list(report.entries)
    if select == "nonzero":
        return [e for e in report.entries if e.contribution != 0]
    return [report.entries[i] for i in select]


def caption(entry: PathEntry, kind: str) -> str:
    c = entry.complex
    if kind == "complex":
        return f"μ = {c.mu_plus}·{c.mu_minus} = {c.mu}"
    r = entry.real
    if kind == "real":
        return f"μ = {c.mu}, μR = {r.mu_r_plus}·{r.mu_r_minus} = {r.mu_r}"
    return f"ν = {r.nu_plus}·{r.nu_minus} = {r.nu}"


def render(report: CountReport, spec: RenderSpec = RenderSpec()) -> str:
    entries = select_entries(report, spec.select)
    if spec.fmt == "svg":
        return render_svg(report.polygon, entries, report.kind, spec)
    return render_ascii(report.polygon, entries, report.kind, spec)


def render_svg(poly: LatticePolygon, entries: Sequence[PathEntry], kind: str, spec: RenderSpec) -> str:
    cell = spec.cell
    xs = [v.x for v in poly.vertices]
    ys = [v.y for v in poly.vertices]
    x0, y1 = min(xs), max(ys)
    pad = cell
    cap_h = cell if spec.annotate else 0
    pw = (max(xs) - x0) * cell + 2 * pad
    ph = (y1 - min(ys)) * cell + 2 * pad + cap_h
    panels: list = list(entries) or [None]
    cols = min(len(panels), PANELS_PER_ROW)
    rows = -(-len(panels) // PANELS_PER_ROW)

    svg = ET.Element(
        "svg",
        xmlns="http://www.w3.org/2000/svg",
        version="1.1",
        width=str(cols * pw),
        height=str(rows * ph),
    )
    for i, entry in enumerate(panels):
        ox, oy = (i % PANELS_PER_ROW) * pw + pad, (i // PANELS_PER_ROW) * ph + pad

        def at(p):
            # lattice (x, y) sits at (cell·x, -cell·y), shifted into the panel
            return ox + cell * (p[0] - x0), oy + cell * (y1 - p[1])

        g = ET.SubElement(svg, "g", {"class": "panel"})
        outline = " ".join("%d,%d" % at(v) for v in poly.vertices)
        ET.SubElement(g, "polygon", points=outline, fill="none", stroke="black")
        for p in poly.all_points:
            cx, cy = at(p)
            ET.SubElement(g, "circle", {"class": "dot", "cx": str(cx), "cy": str(cy), "r": "2", "fill": "#999"})
        if entry is None:
            continue
        line = " ".join("%d,%d" % at(p) for p in entry.path)
        ET.SubElement(
            g, "polyline", {"points": line, "fill": "none", "stroke": "crimson", "stroke-width": "2"}
        )
        for p in entry.path:
            cx, cy = at(p)
            ET.SubElement(g, "circle", {"class": "marker", "cx": str(cx), "cy": str(cy), "r": "4", "fill": "crimson"})
        if spec.annotate:
            tx, ty = ox, oy + (y1 - min(ys)) * cell + pad
            text = ET.SubElement(g, "text", {"x": str(tx), "y": str(ty), "font-size": str(max(cell // 2, 8))})
            text.text = caption(entry, kind)
    return '<?xml version="1.0" encoding="UTF-8"?>\n' + ET.tostring(svg, encoding="unicode") + "\n"


def render_ascii(poly: LatticePolygon, entries: Sequence[PathEntry], kind: str, spec: RenderSpec) -> str:
    """Fixed-grid text panels: ``.`` lattice point, ``*`` path vertex."""
    xs = [v.x for v in poly.vertices]
    ys = [v.y for v in poly.vertices]
    inside = set(poly.all_points)
    blocks = []
    for entry in list(entries) or [None]:
        on_path = set(entry.path) if entry is not None else set()
        lines = []
        for y in range(max(ys), min(ys) - 1, -1):
            row = []
            for x in range(min(xs), max(xs) + 1):
                p = (x, y)
                row.append("*" if p in on_path else "." if p in inside else " ")
            lines.append(" ".join(row).rstrip())
        if entry is not None:
            lines.append("path: " + " ".join(f"({p.x},{p.y})" for p in entry.path))
            if spec.annotate:
                lines.append(caption(entry, kind))
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n"
