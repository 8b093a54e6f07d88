"""Exact plane geometry over rational coordinates.

Points are ``(Fraction, Fraction)`` pairs.  Every predicate is decided by
exact sign computations; nothing here ever rounds, so crossing parities and
angular orders are deterministic.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from functools import cmp_to_key

Point = tuple[Fraction, Fraction]


def orient(a: Point, b: Point, c: Point) -> int:
    """Sign of the signed area of triangle abc: +1 ccw, -1 cw, 0 collinear."""
    val = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    return (val > 0) - (val < 0)


def on_segment(a: Point, b: Point, p: Point) -> bool:
    """True iff p lies on the closed segment [a, b]."""
    if orient(a, b, p) != 0:
        return False
    return (
        min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
        and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])
    )


def strictly_inside_segment(a: Point, b: Point, p: Point) -> bool:
    return on_segment(a, b, p) and p != a and p != b


class SegmentRelation(Enum):
    DISJOINT = "disjoint"
    PROPER = "proper"          # interiors cross transversally
    DEGENERATE = "degenerate"  # endpoint touch, vertex hit, or collinear overlap


def classify_segments(p1: Point, p2: Point, q1: Point, q2: Point) -> SegmentRelation:
    """Classify how segments [p1,p2] and [q1,q2] meet."""
    o1 = orient(p1, p2, q1)
    o2 = orient(p1, p2, q2)
    o3 = orient(q1, q2, p1)
    o4 = orient(q1, q2, p2)

    if o1 != 0 and o2 != 0 and o3 != 0 and o4 != 0:
        if o1 != o2 and o3 != o4:
            return SegmentRelation.PROPER
        return SegmentRelation.DISJOINT

    # Some orientation vanished: any incidence is a touch, not a crossing.
    if (o1 == 0 and on_segment(p1, p2, q1)) or (o2 == 0 and on_segment(p1, p2, q2)):
        return SegmentRelation.DEGENERATE
    if (o3 == 0 and on_segment(q1, q2, p1)) or (o4 == 0 and on_segment(q1, q2, p2)):
        return SegmentRelation.DEGENERATE
    return SegmentRelation.DISJOINT


def crossing_params(p1: Point, p2: Point, q1: Point, q2: Point) -> tuple[Fraction, Fraction]:
    """Parameters (t, s) of the proper crossing: point = p1 + t(p2-p1) = q1 + s(q2-q1).

    Only valid when ``classify_segments`` returned PROPER.
    """
    rx, ry = p2[0] - p1[0], p2[1] - p1[1]
    sx, sy = q2[0] - q1[0], q2[1] - q1[1]
    denom = rx * sy - ry * sx
    qx, qy = q1[0] - p1[0], q1[1] - p1[1]
    t = (qx * sy - qy * sx) / denom
    s = (qx * ry - qy * rx) / denom
    return t, s


def crossing_point(p1: Point, p2: Point, q1: Point, q2: Point) -> Point:
    t, _ = crossing_params(p1, p2, q1, q2)
    return (p1[0] + t * (p2[0] - p1[0]), p1[1] + t * (p2[1] - p1[1]))


def _half(d: Point) -> int:
    # 0 for angles in [0, pi) measured from the +x axis, 1 for [pi, 2pi)
    if d[1] > 0 or (d[1] == 0 and d[0] > 0):
        return 0
    return 1


def ccw_direction_key(directions_are_nonzero=True):
    """Comparator key ordering direction vectors counterclockwise from +x."""

    def cmp(d1: Point, d2: Point) -> int:
        h1, h2 = _half(d1), _half(d2)
        if h1 != h2:
            return -1 if h1 < h2 else 1
        cross = d1[0] * d2[1] - d1[1] * d2[0]
        return (cross < 0) - (cross > 0)

    return cmp_to_key(cmp)


def winding_number(loop: list[Point], p: Point) -> int:
    """Winding number of a closed polyline around p (p must avoid the curve).

    Standard crossing rule on the upward/downward edges of the polygon; exact.
    """
    wn = 0
    n = len(loop)
    for i in range(n):
        a = loop[i]
        b = loop[(i + 1) % n]
        if a[1] <= p[1]:
            if b[1] > p[1] and orient(a, b, p) > 0:
                wn += 1
        else:
            if b[1] <= p[1] and orient(a, b, p) < 0:
                wn -= 1
    return wn


def polygon_signed_area2(points: list[Point]) -> Fraction:
    """Twice the signed area of the closed polygon through ``points``."""
    total = Fraction(0)
    n = len(points)
    for i in range(n):
        a = points[i]
        b = points[(i + 1) % n]
        total += a[0] * b[1] - a[1] * b[0]
    return total
