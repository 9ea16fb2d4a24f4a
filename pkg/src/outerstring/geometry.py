"""Outer-string representations as anchored polylines in the unit disk,
with an exact certifying verifier."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from . import exactgeom as xg
from .errors import ArgumentError, DegeneracyError, FormatError
from .model import Graph

Pt = xg.Pt


@dataclass(frozen=True)
class Curve:
    """Simple polyline for one vertex: anchor on the unit circle, the rest
    strictly inside, tip interior."""

    vertex: int
    points: tuple[Pt, ...]

    @staticmethod
    def of(vertex: int, points) -> "Curve":
        pts = tuple((Fraction(x), Fraction(y)) for x, y in points)
        if len(pts) < 2:
            raise ArgumentError(f"curve {vertex}: needs at least 2 points")
        if not xg.on_unit_circle(pts[0]):
            raise ArgumentError(f"curve {vertex}: anchor not on the unit circle")
        for p in pts[1:]:
            if not xg.inside_unit_circle(p):
                raise ArgumentError(f"curve {vertex}: interior point not strictly inside the disk")
        if not xg.polyline_is_simple(list(pts)):
            raise ArgumentError(f"curve {vertex}: polyline is not simple")
        return Curve(vertex, pts)

    @property
    def anchor(self) -> Pt:
        return self.points[0]

    @property
    def tip(self) -> Pt:
        return self.points[-1]

    def segments(self):
        return xg.polyline_segments(list(self.points))


@dataclass(frozen=True)
class Representation:
    """One curve per vertex id 0..n-1, anchors pairwise distinct."""

    curves: tuple[Curve, ...]

    @staticmethod
    def of(curves) -> "Representation":
        curves = tuple(sorted(curves, key=lambda c: c.vertex))
        ids = [c.vertex for c in curves]
        if ids != list(range(len(curves))):
            raise ArgumentError("curves must cover vertex ids 0..n-1 exactly once")
        anchors = [c.anchor for c in curves]
        if len(set(anchors)) != len(anchors):
            raise ArgumentError("anchors must be pairwise distinct")
        return Representation(curves)

    @property
    def n(self) -> int:
        return len(self.curves)


@dataclass
class CrossingReport:
    """Per-pair transversal crossing counts plus verification flags."""

    counts: dict[tuple[int, int], int]
    degeneracies: list[str] = field(default_factory=list)
    adjacency_ok: bool | None = None
    k_ok: bool | None = None
    order_ok: bool | None = None
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return (not self.degeneracies
                and self.adjacency_ok is not False
                and self.k_ok is not False
                and self.order_ok is not False)

    def count(self, u: int, v: int) -> int:
        key = (u, v) if u < v else (v, u)
        return self.counts.get(key, 0)

    def to_json(self):
        return {
            "verdict": "pass" if self.passed else "fail",
            "counts": {f"{u},{v}": c for (u, v), c in sorted(self.counts.items()) if c},
            "degeneracies": list(self.degeneracies),
            "adjacency_ok": self.adjacency_ok,
            "k_ok": self.k_ok,
            "order_ok": self.order_ok,
            "failures": list(self.failures),
        }


# ---------------------------------------------------------------------------
# Crossing computation.  Segments are indexed once, candidate pairs come from
# an x-interval sweep, verdicts from exact predicates.

def _indexed_segments(curves):
    segs = []
    for ci, c in enumerate(curves):
        pts = c.points
        for si in range(len(pts) - 1):
            a, b = pts[si], pts[si + 1]
            xmin, xmax = (a[0], b[0]) if a[0] <= b[0] else (b[0], a[0])
            segs.append((xmin, xmax, ci, si, a, b))
    return segs


def _candidate_pairs(segs):
    """Sweep segments by x-interval; yield index pairs with overlapping bboxes."""
    order = sorted(range(len(segs)), key=lambda i: segs[i][0])
    active: list[int] = []
    for i in order:
        xmin_i = segs[i][0]
        active = [j for j in active if segs[j][1] >= xmin_i]
        for j in active:
            yield (j, i)
        active.append(i)


def scan_intersections(curves):
    """All inter-curve contacts: returns (crossings, degeneracies).

    crossings: list of (curve_i, curve_j, point, seg_i, seg_j) for proper
    transversal interior crossings; degeneracies: list of strings describing
    any other contact (incl. same-curve issues are assumed pre-validated).
    """
    segs = _indexed_segments(curves)
    crossings = []
    degens = []
    for (i, j) in _candidate_pairs(segs):
        si = segs[i]
        sj = segs[j]
        if si[2] == sj[2]:
            continue  # same curve; simplicity is a Curve invariant
        if xg.seg_bbox_disjoint(si[4], si[5], sj[4], sj[5]):
            continue
        cls = xg.classify_segments(si[4], si[5], sj[4], sj[5])
        if cls == xg.DISJOINT:
            continue
        ci, cj = si[2], sj[2]
        if cls == xg.PROPER_CROSS:
            pt = xg.crossing_point(si[4], si[5], sj[4], sj[5])
            crossings.append((min(ci, cj), max(ci, cj), pt, si, sj))
        else:
            degens.append(_describe_contact(curves, si, sj))
    # triple points: one location on curves of more than one pair
    by_point = {}
    for (a, b, pt, _, _) in crossings:
        by_point.setdefault(pt, set()).add((a, b))
    for pt, pairs in sorted(by_point.items()):
        if len(pairs) > 1:
            involved = sorted({v for pr in pairs for v in pr})
            degens.append(f"triple point at {fmt_point(pt)} on curves {involved}")
    return crossings, degens


def _describe_contact(curves, si, sj):
    ci, cj = si[2], sj[2]
    a, b = si[4], si[5]
    c, d = sj[4], sj[5]
    cu = curves[ci]
    cv = curves[cj]
    for p, who in ((cu.tip, ci), (cv.tip, cj)):
        if xg.point_on_polyline(p, list(cv.points if who == ci else cu.points)):
            return f"touching at tip of curve {who} at {fmt_point(p)}"
    for p, who in ((cu.anchor, ci), (cv.anchor, cj)):
        if xg.point_on_polyline(p, list(cv.points if who == ci else cu.points)):
            return f"touching at anchor of curve {who} at {fmt_point(p)}"
    if xg.orient(a, b, c) == 0 and xg.orient(a, b, d) == 0:
        return f"collinear overlap between curves {ci} and {cj}"
    return f"tangential contact between curves {ci} and {cj}"


def assert_general_position(rep: Representation):
    """Return [] if every inter-curve contact is a transversal interior
    crossing and no point lies on three curves; else the degeneracy list."""
    _, degens = scan_intersections(rep.curves)
    return degens


def pairwise_crossings(rep: Representation) -> CrossingReport:
    """Exact per-pair crossing counts; raises on degenerate input."""
    crossings, degens = scan_intersections(rep.curves)
    if degens:
        raise DegeneracyError(degens)
    counts = {}
    for (a, b, _, _, _) in crossings:
        counts[(a, b)] = counts.get((a, b), 0) + 1
    return CrossingReport(counts=counts)


def anchor_cyclic_order(rep: Representation) -> tuple[int, ...]:
    """Vertex ids sorted by anchor angle counter-clockwise, rotation-canonical."""
    anchors = [(c.anchor, c.vertex) for c in rep.curves]
    if len({a for a, _ in anchors}) != len(anchors):
        raise ArgumentError("duplicate anchors")
    anchors.sort(key=lambda av: xg.angle_key(av[0]))
    seq = tuple(v for _, v in anchors)
    if not seq:
        return seq
    i = seq.index(min(seq))
    return seq[i:] + seq[:i]


def _cyclic_equal(a: tuple, b: tuple, mirror: bool) -> bool:
    if len(a) != len(b):
        return False
    if not a:
        return True
    def rots(t):
        return [t[i:] + t[:i] for i in range(len(t))]
    if b in rots(a):
        return True
    if mirror and b in rots(a[::-1]):
        return True
    return False


def verify_representation(g: Graph, rep: Representation, max_crossings=None,
                          order=None, allow_mirror: bool = True) -> CrossingReport:
    """Certify rep against g: adjacency iff >= 1 crossing, optional outer-k
    bound, optional anchor-order check (mirror images accepted by default)."""
    if rep.n != g.n:
        raise ArgumentError(f"representation covers {rep.n} vertices, graph has {g.n}")
    crossings, degens = scan_intersections(rep.curves)
    if degens:
        raise DegeneracyError(degens)
    counts = {}
    for (a, b, _, _, _) in crossings:
        counts[(a, b)] = counts.get((a, b), 0) + 1
    report = CrossingReport(counts=counts)
    report.adjacency_ok = True
    for u in range(g.n):
        for v in range(u + 1, g.n):
            c = counts.get((u, v), 0)
            if (c >= 1) != g.has_edge(u, v):
                report.adjacency_ok = False
                want = "edge" if g.has_edge(u, v) else "non-edge"
                report.failures.append(f"pair ({u},{v}): {c} crossings but {want} in graph")
    if max_crossings is not None:
        report.k_ok = True
        for (u, v), c in sorted(counts.items()):
            if c > max_crossings:
                report.k_ok = False
                report.failures.append(f"pair ({u},{v}): {c} crossings exceed k={max_crossings}")
    if order is not None:
        got = anchor_cyclic_order(rep)
        report.order_ok = _cyclic_equal(got, tuple(order), allow_mirror)
        if not report.order_ok:
            report.failures.append(f"anchor order {got} does not match required order {tuple(order)}")
    return report


# ---------------------------------------------------------------------------
# Half-plane representations and the mapping into the disk.

def halfplane_to_disk(curves) -> Representation:
    """Map curves grounded on the x-axis (first point on the axis, the rest
    strictly above) into the unit disk.

    Order-preserving: anchors at increasing x map to circle points of
    increasing angle on the lower semicircle (counter-clockwise); crossing
    counts are preserved (affine squeeze plus disjoint anchor drops).
    """
    items = []
    for vertex, pts in curves:
        pts = [(Fraction(x), Fraction(y)) for x, y in pts]
        if len(pts) < 2:
            raise ArgumentError(f"curve {vertex}: needs at least 2 points")
        if pts[0][1] != 0:
            raise ArgumentError(f"curve {vertex}: anchor must lie on the x-axis")
        if any(p[1] <= 0 for p in pts[1:]):
            raise ArgumentError(f"curve {vertex}: interior points must be strictly above the axis")
        items.append((vertex, pts))
    if not items:
        return Representation.of([])
    anchors_x = [pts[0][0] for _, pts in items]
    if len(set(anchors_x)) != len(anchors_x):
        raise ArgumentError("anchors must have pairwise distinct x coordinates")
    xs = [p[0] for _, pts in items for p in pts]
    ys = [p[1] for _, pts in items for p in pts]
    xmin, xmax = min(xs) - 1, max(xs) + 1
    ymax = max(ys)
    # squeeze into the box [-1/2, 1/2] x [0, 1/2]
    sx = Fraction(1) / (xmax - xmin)
    sy = Fraction(1, 2) / ymax

    def squeeze(p):
        return ((p[0] - xmin) * sx - Fraction(1, 2), p[1] * sy)

    out = []
    for vertex, pts in items:
        ax = pts[0][0]
        t = (ax - xmin) / (xmax - xmin)          # in (0, 1), monotone in x
        u = t / (1 - t)                          # in (0, inf)
        d = u * u + 1
        circle_pt = ((u * u - 1) / d, Fraction(-2) * u / d)  # lower semicircle
        mapped = [squeeze(p) for p in pts]
        out.append(Curve.of(vertex, [circle_pt] + mapped))
    return Representation.of(out)


# ---------------------------------------------------------------------------
# Serialization + SVG.

def fmt_num(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def fmt_point(p: Pt) -> str:
    return f"({fmt_num(p[0])}, {fmt_num(p[1])})"


def parse_num(s) -> Fraction:
    if isinstance(s, (int, float)):
        return Fraction(s)
    s = s.strip()
    try:
        if "/" in s:
            num, den = s.split("/")
            return Fraction(int(num), int(den))
        return Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise FormatError(f"invalid number {s!r}") from None


def write_representation(rep: Representation) -> str:
    obj = {
        "curves": [
            {"vertex": c.vertex,
             "points": [[fmt_num(p[0]), fmt_num(p[1])] for p in c.points]}
            for c in rep.curves
        ]
    }
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def parse_representation(text: str) -> Representation:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(f"invalid JSON at line {e.lineno} column {e.colno}: {e.msg}") from None
    if not isinstance(obj, dict) or "curves" not in obj:
        raise FormatError("representation JSON must be an object with a 'curves' field")
    curves = []
    for entry in obj["curves"]:
        if "vertex" not in entry or "points" not in entry:
            raise FormatError("each curve needs 'vertex' and 'points'")
        pts = [(parse_num(x), parse_num(y)) for x, y in entry["points"]]
        try:
            curves.append(Curve.of(entry["vertex"], pts))
        except ArgumentError as e:
            raise FormatError(str(e)) from None
    try:
        return Representation.of(curves)
    except ArgumentError as e:
        raise FormatError(str(e)) from None


def _svg_coord(x: Fraction) -> str:
    return f"{float(x):.9f}"


def render_svg(rep: Representation, labels: dict[int, str] | None = None) -> bytes:
    """Deterministic SVG: unit circle, one polyline per curve, anchor dots."""
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        'viewBox="-1.1 -1.1 2.2 2.2" width="660" height="660">',
        '<circle id="boundary" cx="0" cy="0" r="1" fill="none" '
        'stroke="black" stroke-width="0.008"/>',
    ]
    palette = ["#c0392b", "#2980b9", "#27ae60", "#8e44ad", "#d35400",
               "#16a085", "#7f8c8d", "#2c3e50", "#f39c12", "#9b59b6"]
    for c in rep.curves:
        color = palette[c.vertex % len(palette)]
        pts = " ".join(f"{_svg_coord(p[0])},{_svg_coord(-p[1])}" for p in c.points)
        lines.append(f'<polyline id="curve-{c.vertex}" points="{pts}" fill="none" '
                     f'stroke="{color}" stroke-width="0.006"/>')
        ax, ay = c.anchor
        lines.append(f'<circle id="anchor-{c.vertex}" cx="{_svg_coord(ax)}" '
                     f'cy="{_svg_coord(-ay)}" r="0.015" fill="{color}"/>')
        if labels and c.vertex in labels:
            lines.append(f'<text id="label-{c.vertex}" x="{_svg_coord(ax * Fraction(21, 20))}" '
                         f'y="{_svg_coord(-ay * Fraction(21, 20))}" font-size="0.05" '
                         f'fill="{color}">{labels[c.vertex]}</text>')
    lines.append("</svg>")
    return ("\n".join(lines) + "\n").encode("utf-8")
