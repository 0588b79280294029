"""ASCII and SVG pictures of a placement."""

from __future__ import annotations

import xml.etree.ElementTree as ET
from dataclasses import dataclass, field

from .analysis import lower_bound_certificate, rings_of, selection_of
from .board import Placement, Square, covered_squares, squares_on
from .errors import DomainError

SHOW_FLAGS = ("queens", "covered", "rings", "certificate-lines")
FORMATS = ("ascii", "svg")

GLYPH_QUEEN = "Q"
GLYPH_COVERED = "#"
GLYPH_CERT = "+"
GLYPH_EMPTY = "."

_FILL = {
    "queen": "#1f3a93",
    "covered": "#f4b6a6",
    "cert": "#e8d27a",
    "light": "#f5f0e6",
    "dark": "#d9cbb0",
}


@dataclass
class RenderSpec:
    format: str = "ascii"
    show: frozenset[str] = field(default_factory=lambda: frozenset({"queens", "covered"}))
    cell_size: int = 24

    def __post_init__(self) -> None:
        if self.format not in FORMATS:
            raise DomainError(f"unknown format {self.format!r}")
        unknown = set(self.show) - set(SHOW_FLAGS)
        if unknown:
            raise DomainError(f"unknown show flags: {', '.join(sorted(unknown))}")
        if self.cell_size < 1:
            raise DomainError("cell size must be positive")
        self.show = frozenset(self.show)


def _layers(p: Placement, show: frozenset[str]) -> dict[Square, str]:
    """Glyph for every marked square; later layers win."""
    marks: dict[Square, str] = {}
    if "covered" in show:
        for sq in covered_squares(p):
            marks[sq] = GLYPH_COVERED
    if "certificate-lines" in show and p.queens:
        for line in lower_bound_certificate(p).lines:
            for sq in squares_on(line, p.n):
                marks[sq] = GLYPH_CERT
    if "rings" in show and p.queens:
        for ring in rings_of(selection_of(p)):
            for sq in ring.points:
                marks[sq] = str(ring.level % 10)
    if "queens" in show:
        for q in p.queens:
            marks[q] = GLYPH_QUEEN
    return marks


def render_ascii(p: Placement, show=frozenset({"queens", "covered"})) -> str:
    """``n`` lines of ``n`` glyphs, top row (y = n) first."""
    marks = _layers(p, frozenset(show))
    rows = []
    for y in range(p.n, 0, -1):
        rows.append("".join(marks.get(Square(x, y), GLYPH_EMPTY) for x in range(1, p.n + 1)))
    return "\n".join(rows) + "\n"


def render_svg(p: Placement, show=frozenset({"queens", "covered"}), cell_size: int = 24) -> str:
    marks = _layers(p, frozenset(show))
    n, s = p.n, cell_size
    svg = ET.Element(
        "svg",
        xmlns="http://www.w3.org/2000/svg",
        width=str(n * s),
        height=str(n * s),
        viewBox=f"0 0 {n * s} {n * s}",
    )
    for x in range(1, n + 1):
        for y in range(1, n + 1):
            glyph = marks.get(Square(x, y))
            if glyph == GLYPH_COVERED:
                fill = _FILL["covered"]
            elif glyph == GLYPH_CERT:
                fill = _FILL["cert"]
            else:
                fill = _FILL["dark" if (x + y) % 2 == 0 else "light"]
            left, top = (x - 1) * s, (n - y) * s
            ET.SubElement(svg, "rect", x=str(left), y=str(top), width=str(s), height=str(s), fill=fill)
            if glyph == GLYPH_QUEEN:
                ET.SubElement(
                    svg, "circle", cx=str(left + s / 2), cy=str(top + s / 2), r=str(s * 0.35), fill=_FILL["queen"]
                )
            elif glyph is not None and glyph.isdigit():
                text = ET.SubElement(
                    svg,
                    "text",
                    x=str(left + s / 2),
                    y=str(top + s * 0.7),
                    attrib={"text-anchor": "middle", "font-size": str(s * 0.6)},
                )
                text.text = glyph
    return ET.tostring(svg, encoding="unicode")


def render(p: Placement, spec: RenderSpec) -> str:
    if spec.format == "ascii":
        return render_ascii(p, spec.show)
    return render_svg(p, spec.show, spec.cell_size)
