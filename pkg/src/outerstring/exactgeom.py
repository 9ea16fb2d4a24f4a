"""Exact rational plane geometry primitives.

Every predicate in this module is decided in exact arithmetic over
``fractions.Fraction``.  Floating point is allowed only to *propose*
coordinates (offsets, spacing); verdicts never depend on floats.

Points are plain ``(Fraction, Fraction)`` tuples.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cmp_to_key

Pt = tuple[Fraction, Fraction]

ZERO = Fraction(0)
ONE = Fraction(1)


def pt(x, y) -> Pt:
    return (Fraction(x), Fraction(y))


def sub(a: Pt, b: Pt) -> Pt:
    return (a[0] - b[0], a[1] - b[1])


def add(a: Pt, b: Pt) -> Pt:
    return (a[0] + b[0], a[1] + b[1])


def scale(a: Pt, s) -> Pt:
    s = Fraction(s)
    return (a[0] * s, a[1] * s)


def cross(a: Pt, b: Pt) -> Fraction:
    return a[0] * b[1] - a[1] * b[0]


def dot(a: Pt, b: Pt) -> Fraction:
    return a[0] * b[0] + a[1] * b[1]


def norm2(a: Pt) -> Fraction:
    return a[0] * a[0] + a[1] * a[1]


def dist2(a: Pt, b: Pt) -> Fraction:
    return norm2(sub(a, b))


def orient(a: Pt, b: Pt, c: Pt) -> int:
    """Sign of the signed area of triangle abc (+1 ccw, -1 cw, 0 collinear)."""
    v = cross(sub(b, a), sub(c, a))
    return (v > 0) - (v < 0)


def collinear_on_segment(a: Pt, b: Pt, p: Pt) -> bool:
    """Whether p lies on segment [a,b], p assumed collinear with a,b."""
    return (min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))


# Segment/segment classification.
DISJOINT = 0
PROPER_CROSS = 1       # interiors cross transversally
DEGENERATE = 2         # any other contact (endpoint touch, overlap, ...)


def classify_segments(p1: Pt, p2: Pt, q1: Pt, q2: Pt) -> int:
    """Classify the intersection of segments [p1,p2] and [q1,q2]."""
    d1 = orient(q1, q2, p1)
    d2 = orient(q1, q2, p2)
    d3 = orient(p1, p2, q1)
    d4 = orient(p1, p2, q2)
    if d1 != d2 and d3 != d4 and 0 not in (d1, d2, d3, d4):
        return PROPER_CROSS
    # Any collinear/endpoint contact is degenerate in our model.
    if d1 == 0 and collinear_on_segment(q1, q2, p1):
        return DEGENERATE
    if d2 == 0 and collinear_on_segment(q1, q2, p2):
        return DEGENERATE
    if d3 == 0 and collinear_on_segment(p1, p2, q1):
        return DEGENERATE
    if d4 == 0 and collinear_on_segment(p1, p2, q2):
        return DEGENERATE
    return DISJOINT


def segments_touch(p1: Pt, p2: Pt, q1: Pt, q2: Pt) -> bool:
    """Whether the closed segments intersect at all (any contact counts)."""
    return classify_segments(p1, p2, q1, q2) != DISJOINT


def crossing_point(p1: Pt, p2: Pt, q1: Pt, q2: Pt) -> Pt:
    """Intersection point of two properly crossing segments."""
    r = sub(p2, p1)
    s = sub(q2, q1)
    denom = cross(r, s)
    t = cross(sub(q1, p1), s) / denom
    return add(p1, scale(r, t))


def line_intersection(p1: Pt, p2: Pt, q1: Pt, q2: Pt) -> Pt | None:
    """Intersection of the two supporting lines, None if parallel."""
    r = sub(p2, p1)
    s = sub(q2, q1)
    denom = cross(r, s)
    if denom == 0:
        return None
    t = cross(sub(q1, p1), s) / denom
    return add(p1, scale(r, t))


def seg_param(p1: Pt, p2: Pt, q: Pt) -> Fraction:
    """Parameter t with q = p1 + t*(p2-p1); q assumed on the segment line."""
    r = sub(p2, p1)
    if r[0] != 0:
        return (q[0] - p1[0]) / r[0]
    return (q[1] - p1[1]) / r[1]


# ---------------------------------------------------------------------------
# Exact angular order around the origin / around a vertex.

def _half(v: Pt) -> int:
    # 0 for angle in [0, pi), 1 for [pi, 2pi)
    if v[1] > 0 or (v[1] == 0 and v[0] > 0):
        return 0
    return 1


def angle_cmp(u: Pt, v: Pt) -> int:
    """Compare direction vectors by angle in [0, 2*pi). Exact."""
    hu, hv = _half(u), _half(v)
    if hu != hv:
        return -1 if hu < hv else 1
    c = cross(u, v)
    if c > 0:
        return -1
    if c < 0:
        return 1
    return 0


angle_key = cmp_to_key(angle_cmp)


def ccw_in_arc(a: Pt, b: Pt, w: Pt) -> bool:
    """Whether circle point w lies strictly inside the ccw arc from a to b.

    All three points must lie on a common circle centred at the origin.
    w in ccw-arc(a->b)  <=>  (a, w, b) is a ccw-ordered triple on the circle.
    """
    if a == b:
        return w != a
    if w == a or w == b:
        return False
    return orient(a, w, b) > 0


# ---------------------------------------------------------------------------
# Rational points on the unit circle.

def circle_point(t) -> Pt:
    """Rational unit-circle point with tan(theta/2) = t (t rational).

    Monotone: theta increases strictly with t over (-inf, inf) -> (-pi, pi).
    """
    t = Fraction(t)
    d = 1 + t * t
    return ((1 - t * t) / d, 2 * t / d)


def circle_param(p: Pt) -> Fraction:
    """Inverse of circle_point for p != (-1, 0)."""
    if p[0] == -1:
        raise ValueError("parameter pole (-1, 0)")
    return p[1] / (1 + p[0])


def on_unit_circle(p: Pt) -> bool:
    return norm2(p) == 1


def inside_unit_circle(p: Pt) -> bool:
    return norm2(p) < 1


def sign_plus_root(a: Fraction, b: Fraction, d: Fraction) -> int:
    """Sign of a + b*sqrt(d), d >= 0, all rational. Exact."""
    if d < 0:
        raise ValueError("negative radicand")
    if b == 0 or d == 0:
        return (a > 0) - (a < 0)
    if a == 0:
        return (b > 0) - (b < 0)
    if a > 0 and b > 0:
        return 1
    if a < 0 and b < 0:
        return -1
    # opposite signs: compare a^2 with b^2 d
    lhs = a * a
    rhs = b * b * d
    if lhs == rhs:
        return 0
    if a > 0:  # b < 0
        return 1 if lhs > rhs else -1
    return -1 if lhs > rhs else 1


def ray_circle_exit_cmp_arc(q: Pt, d: Pt, a: Pt, b: Pt) -> bool:
    """Whether the exit point of ray q + s*d (s>0) from the unit disk lies
    strictly inside the ccw arc from a to b.

    q strictly inside the disk; a, b rational circle points.  The exit point
    z is a quadratic irrational; membership is decided exactly by the sign of
    orient(a, z, b), linear in z.
    """
    alpha = norm2(d)
    beta = 2 * dot(q, d)
    gamma = norm2(q) - 1
    disc = beta * beta - 4 * alpha * gamma
    # z = q + s*d with s = (-beta + sqrt(disc)) / (2*alpha)
    # orient(a,z,b) has sign of cross(z-a, b-a) = A0 + B0*s
    ab = sub(b, a)
    A0 = cross(sub(q, a), ab)
    B0 = cross(d, ab)
    # sign of A0 + B0 * (-beta + sqrt(disc)) / (2 alpha), alpha > 0
    a_term = 2 * alpha * A0 - B0 * beta
    b_term = B0
    s = sign_plus_root(a_term, b_term, disc)
    return s > 0


# ---------------------------------------------------------------------------
# Polylines.

def polyline_segments(points: list[Pt]):
    return [(points[i], points[i + 1]) for i in range(len(points) - 1)]


def polyline_is_simple(points: list[Pt]) -> bool:
    """No repeated vertices, no degenerate turns, no self-intersections."""
    n = len(points)
    if n < 2:
        return False
    if len(set(points)) != n:
        return False
    segs = polyline_segments(points)
    for i in range(len(segs)):
        for j in range(i + 1, len(segs)):
            cls = classify_segments(*segs[i], *segs[j])
            if j == i + 1:
                # adjacent segments share exactly the joint; forbid fold-backs
                if cls == PROPER_CROSS:
                    return False
                a, b = segs[i]
                b2, c = segs[j]
                if orient(a, b, c) == 0 and dot(sub(a, b), sub(c, b)) >= 0:
                    return False
                # joint contact is expected; any other contact is caught by
                # the shared-endpoint check below via classify on sub-parts
                if cls == DEGENERATE:
                    # ensure the only contact is the shared joint
                    if collinear_on_segment(a, b, c) or collinear_on_segment(b2, c, a):
                        return False
            elif cls != DISJOINT:
                return False
    return True


def bbox(points: list[Pt]):
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    return (min(xs), min(ys), max(xs), max(ys))


def seg_bbox_disjoint(p1: Pt, p2: Pt, q1: Pt, q2: Pt) -> bool:
    if max(p1[0], p2[0]) < min(q1[0], q2[0]) or max(q1[0], q2[0]) < min(p1[0], p2[0]):
        return True
    if max(p1[1], p2[1]) < min(q1[1], q2[1]) or max(q1[1], q2[1]) < min(p1[1], p2[1]):
        return True
    return False


def point_seg_dist2(p: Pt, a: Pt, b: Pt) -> Fraction:
    ab = sub(b, a)
    ap = sub(p, a)
    denom = norm2(ab)
    if denom == 0:
        return norm2(ap)
    t = dot(ap, ab) / denom
    if t <= 0:
        return norm2(ap)
    if t >= 1:
        return dist2(p, b)
    proj = add(a, scale(ab, t))
    return dist2(p, proj)


def point_on_polyline(p: Pt, points: list[Pt]) -> bool:
    for a, b in polyline_segments(points):
        if orient(a, b, p) == 0 and collinear_on_segment(a, b, p):
            return True
    return False


def frac_from_float(x: float, max_den: int = 1 << 40) -> Fraction:
    """Rational proposal near x with a bounded denominator."""
    return Fraction(x).limit_denominator(max_den)
