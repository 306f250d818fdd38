"""Shadow diagrams: northeast (Viennot's geometric RSK) and southwest
(geometric Patience Sorting), crossing classification, SVG output.

Coordinates are first-quadrant lattice points; the diagram of a permutation
p is {(i, p_i)}.  Rows of pile configurations are indexed from the bottom
here (French convention), so row 0 holds the pile bottoms.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, NamedTuple, Optional, Sequence, Tuple
from xml.etree import ElementTree as ET

from .patience import PileConfiguration, RecordingPiles, StablePair
from .tableaux import StandardYoungTableau

NE = "NE"
SW = "SW"


class LatticePoint(NamedTuple):
    x: int
    y: int


Segment = Tuple[LatticePoint, LatticePoint]


@dataclass(frozen=True)
class Shadowline:
    """generators are sorted by x, so their y values decrease.  pile is the
    0-based column index a SW line descends from (None for NE lines)."""

    orientation: str
    generators: Tuple[LatticePoint, ...]
    pile: Optional[int] = None

    def vertices(self, bound: int = 0) -> List[LatticePoint]:
        """Staircase polyline.  SW lines run from the y axis to the x axis;
        NE lines run from height `bound` down and out to abscissa `bound`."""
        g = self.generators
        if not g:
            return []
        if self.orientation == SW:
            vs = [LatticePoint(0, g[0].y), g[0]]
            for a, b in zip(g, g[1:]):
                vs.append(LatticePoint(a.x, b.y))
                vs.append(b)
            vs.append(LatticePoint(g[-1].x, 0))
        else:
            vs = [LatticePoint(g[0].x, bound), g[0]]
            for a, b in zip(g, g[1:]):
                vs.append(LatticePoint(b.x, a.y))
                vs.append(b)
            vs.append(LatticePoint(bound, g[-1].y))
        return vs

    def segments(self, bound: int = 0) -> List[Segment]:
        vs = self.vertices(bound)
        return [(a, b) for a, b in zip(vs, vs[1:]) if a != b]

    def salient_points(self) -> List[LatticePoint]:
        """Inner corners: SW corners of a NE line, NE corners of a SW line."""
        g = self.generators
        if self.orientation == NE:
            return [LatticePoint(b.x, a.y) for a, b in zip(g, g[1:])]
        return [LatticePoint(a.x, b.y) for a, b in zip(g, g[1:])]

    @property
    def max_y(self) -> int:
        return self.generators[0].y

    @property
    def min_y(self) -> int:
        return self.generators[-1].y

    @property
    def max_x(self) -> int:
        return self.generators[-1].x

    @property
    def min_x(self) -> int:
        return self.generators[0].x


@dataclass(frozen=True)
class ShadowDiagram:
    orientation: str
    iterate: int
    lines: Tuple[Shadowline, ...]

    def points(self) -> List[LatticePoint]:
        return [q for line in self.lines for q in line.generators]

    def salient_points(self) -> List[LatticePoint]:
        return [q for line in self.lines for q in line.salient_points()]

    def to_json(self) -> dict:
        return {
            "orientation": self.orientation,
            "iterate": self.iterate,
            "lines": [
                {"generators": [list(q) for q in line.generators],
                 "salient": [list(q) for q in line.salient_points()],
                 **({"pile": line.pile + 1} if line.pile is not None else {})}
                for line in self.lines
            ],
        }


def permutation_points(p: Sequence[int]) -> List[LatticePoint]:
    return [LatticePoint(i, v) for i, v in enumerate(p, start=1)]


def _peel(points: Sequence[LatticePoint]) -> List[List[LatticePoint]]:
    """Split points (distinct x, distinct y) into successive left-to-right
    minima chains.  A point has no other point in its SW quadrant exactly
    when it is a left-to-right minimum, and the NE shadowline of a set is
    traced by the same points, so both orientations peel the same way."""
    rest = sorted(points)
    chains = []
    while rest:
        chain, left = [], []
        for q in rest:
            if not chain or q.y < chain[-1].y:
                chain.append(q)
            else:
                left.append(q)
        chains.append(chain)
        rest = left
    return chains


def ne_shadow_diagram(p: Sequence[int]) -> ShadowDiagram:
    lines = tuple(Shadowline(NE, tuple(c)) for c in _peel(permutation_points(p)))
    return ShadowDiagram(NE, 0, lines)


def ne_iterates(p: Sequence[int]) -> List[ShadowDiagram]:
    """Viennot's iteration: the next diagram uses all salient points at once."""
    out = [ne_shadow_diagram(p)]
    while True:
        pts = out[-1].salient_points()
        if not pts:
            return out
        lines = tuple(Shadowline(NE, tuple(c)) for c in _peel(pts))
        out.append(ShadowDiagram(NE, len(out), lines))


def geometric_rsk(p: Sequence[int]) -> Tuple[StandardYoungTableau, StandardYoungTableau]:
    """Row k of P (of Q) lists the smallest ordinates (abscissae) of the lines
    of iterate k."""
    P, Q = [], []
    for d in ne_iterates(p):
        if not d.lines:
            break
        P.append(tuple(line.min_y for line in d.lines))
        Q.append(tuple(line.min_x for line in d.lines))
    return StandardYoungTableau(tuple(P)), StandardYoungTableau(tuple(Q))


def sw_shadow_diagram(p: Sequence[int]) -> ShadowDiagram:
    lines = tuple(Shadowline(SW, tuple(c), pile=i) for i, c in enumerate(_peel(permutation_points(p))))
    return ShadowDiagram(SW, 0, lines)


def sw_iterates(p: Sequence[int]) -> List[ShadowDiagram]:
    """Iterate on NE-corner salient points, but only ever joining points that
    came from the same shadowline; new lines are emitted in the order of the
    lines they came from."""
    out = [sw_shadow_diagram(p)]
    while True:
        lines = []
        for line in out[-1].lines:
            pts = line.salient_points()
            for c in _peel(pts):
                lines.append(Shadowline(SW, tuple(c), pile=line.pile))
        if not lines:
            return out
        out.append(ShadowDiagram(SW, len(out), tuple(lines)))


def geometric_ps(p: Sequence[int]) -> StablePair:
    """Row m of R (of S) holds the largest ordinates (abscissae) of the lines
    of iterate m, each placed in the column its line descends from."""
    its = sw_iterates(p)
    ncols = len(its[0].lines)
    R: List[List[int]] = [[] for _ in range(ncols)]
    S: List[List[int]] = [[] for _ in range(ncols)]
    for d in its:
        for line in d.lines:
            R[line.pile].append(line.max_y)
            S[line.pile].append(line.max_x)
    return StablePair(PileConfiguration(tuple(map(tuple, R))), RecordingPiles(tuple(map(tuple, S))))


# -- crossings -------------------------------------------------------------

HORIZONTAL = "horizontal"
VERTICAL = "vertical"
POLYGONAL = "polygonal"


@dataclass(frozen=True)
class Crossing:
    iterate: int
    lower: int  # 1-based line (column) index
    upper: int
    kind: str


@dataclass
class CrossingReport:
    records: List[Crossing] = field(default_factory=list)

    def __bool__(self) -> bool:
        return bool(self.records)

    def at(self, iterate: int) -> List[Crossing]:
        return [r for r in self.records if r.iterate == iterate]

    def iterates(self) -> List[int]:
        return sorted({r.iterate for r in self.records})

    def to_json(self) -> List[dict]:
        return [r.__dict__.copy() for r in self.records]


def _is_horizontal(s: Segment) -> bool:
    return s[0].y == s[1].y


def _meet(a: Segment, b: Segment) -> bool:
    """Proper crossing of a horizontal and a vertical segment, or a collinear
    overlap of positive length.  Touching at an endpoint does not count."""
    ha, hb = _is_horizontal(a), _is_horizontal(b)
    if ha != hb:
        h, v = (a, b) if ha else (b, a)
        x0, x1 = sorted((h[0].x, h[1].x))
        y0, y1 = sorted((v[0].y, v[1].y))
        return x0 < v[0].x < x1 and y0 < h[0].y < y1
    if ha and a[0].y == b[0].y:
        lo = max(min(a[0].x, a[1].x), min(b[0].x, b[1].x))
        hi = min(max(a[0].x, a[1].x), max(b[0].x, b[1].x))
        return lo < hi
    if not ha and a[0].x == b[0].x:
        lo = max(min(a[0].y, a[1].y), min(b[0].y, b[1].y))
        hi = min(max(a[0].y, a[1].y), max(b[0].y, b[1].y))
        return lo < hi
    return False


def line_crossing_kinds(lower: Shadowline, upper: Shadowline, bound: int = 0) -> set:
    """Kinds of contact, named after the segment of the upper line involved."""
    kinds = set()
    lower_segs = lower.segments(bound)
    for su in upper.segments(bound):
        for sl in lower_segs:
            if _meet(su, sl):
                kinds.add(HORIZONTAL if _is_horizontal(su) else VERTICAL)
    return kinds


def _label(line: Shadowline, index: int) -> int:
    return (line.pile if line.pile is not None else index) + 1


def diagram_crossings(d: ShadowDiagram, bound: int = 0) -> List[Crossing]:
    out = []
    lines = d.lines
    for i in range(len(lines)):
        for j in range(i + 1, len(lines)):
            kinds = line_crossing_kinds(lines[i], lines[j], bound)
            if kinds:
                kind = POLYGONAL if len(kinds) == 2 else next(iter(kinds))
                out.append(Crossing(d.iterate, _label(lines[i], i), _label(lines[j], j), kind))
    return out


def classify_crossings(p: Sequence[int]) -> CrossingReport:
    report = CrossingReport()
    for d in sw_iterates(p):
        report.records.extend(diagram_crossings(d))
    return report


def undominated_pairs(d: ShadowDiagram) -> List[Tuple[int, int]]:
    """Line pairs (i < j, 1-based) where some generator of the lower line
    L_i lies outside the SW shadow of every generator of the upper line L_j.
    This is the contact test used in the proof of the crossing theorem; it
    also flags an upper line tucked wholly inside the lower one, which the
    segment test does not count as a crossing."""
    out = []
    lines = d.lines
    for i in range(len(lines)):
        for j in range(i + 1, len(lines)):
            up = lines[j].generators
            if any(not any(u.x >= v.x and u.y >= v.y for u in up) for v in lines[i].generators):
                out.append((_label(lines[i], i), _label(lines[j], j)))
    return out


def rows_increasing(piles: PileConfiguration, from_row: int = 0) -> bool:
    return all(all(r[i] < r[i + 1] for i in range(len(r) - 1)) for r in piles.rows()[from_row:])


# -- SVG -------------------------------------------------------------------

UNIT = 24
MARGIN = 24


def render_svg(diagrams: Sequence[ShadowDiagram], points: Sequence[LatticePoint] = ()) -> str:
    """Standalone SVG: first quadrant, y up, 24 px grid, generators filled,
    salient points open."""
    coords = [q for d in diagrams for q in d.points()] + list(points)
    extent = max([max(q.x, q.y) for q in coords] + [1]) + 1
    size = extent * UNIT + 2 * MARGIN

    def X(x: float) -> str:
        return str(MARGIN + x * UNIT)

    def Y(y: float) -> str:
        return str(size - MARGIN - y * UNIT)

    svg = ET.Element("svg", xmlns="http://www.w3.org/2000/svg", width=str(size), height=str(size),
                     viewBox=f"0 0 {size} {size}")
    grid = ET.SubElement(svg, "g", stroke="#dddddd", attrib={"stroke-width": "1"})
    for k in range(1, extent + 1):
        ET.SubElement(grid, "line", x1=X(k), y1=Y(0), x2=X(k), y2=Y(extent))
        ET.SubElement(grid, "line", x1=X(0), y1=Y(k), x2=X(extent), y2=Y(k))
    axes = ET.SubElement(svg, "g", stroke="black", attrib={"stroke-width": "1.5"})
    ET.SubElement(axes, "line", x1=X(0), y1=Y(0), x2=X(extent), y2=Y(0))
    ET.SubElement(axes, "line", x1=X(0), y1=Y(0), x2=X(0), y2=Y(extent))
    shades = ["#333333", "#888888", "#bbbbbb"]
    for k, d in enumerate(diagrams):
        colour = shades[min(k, len(shades) - 1)]
        g = ET.SubElement(svg, "g", attrib={"class": f"iterate-{d.iterate}"})
        for line in d.lines:
            pts = " ".join(f"{X(v.x)},{Y(v.y)}" for v in line.vertices(bound=extent))
            ET.SubElement(g, "polyline", points=pts, fill="none", stroke=colour,
                          attrib={"stroke-width": "2"})
        for q in d.points():
            ET.SubElement(g, "circle", cx=X(q.x), cy=Y(q.y), r="4", fill=colour)
        for q in d.salient_points():
            ET.SubElement(g, "circle", cx=X(q.x), cy=Y(q.y), r="4", fill="white", stroke=colour,
                          attrib={"stroke-width": "1.5"})
    for q in points:
        ET.SubElement(svg, "circle", cx=X(q.x), cy=Y(q.y), r="4", fill="black")
    return ET.tostring(svg, encoding="unicode")
