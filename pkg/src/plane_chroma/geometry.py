"""Planar predicates on extended-precision points.

Every distance comparison works on squared distances, so no square roots
are taken when deciding whether two points are at a given distance.
"""
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

from .errors import CoincidentCircles, DegenerateSegment
from .precision import eps2_default, mp, to_scalar


class Point(NamedTuple):
    x: object
    y: object

    @classmethod
    def of(cls, x, y):
        return cls(to_scalar(x), to_scalar(y))

    def __add__(self, other):
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other):
        return Point(self.x - other.x, self.y - other.y)

    def scale(self, k):
        return Point(self.x * k, self.y * k)


class Cmp(Enum):
    BELOW = -1
    EQUAL = 0
    ABOVE = 1


class Orientation(Enum):
    CCW = 1
    CW = -1


@dataclass(frozen=True)
class Tolerance:
    eps2: object = None

    def value(self):
        return eps2_default() if self.eps2 is None else to_scalar(self.eps2)


DEFAULT_TOL = Tolerance()


def dist2(p, q):
    dx = p.x - q.x
    dy = p.y - q.y
    return dx * dx + dy * dy


def cmp_dist2(p, q, r2, tol=DEFAULT_TOL):
    """Compare |pq|^2 against r2; values within eps2 count as EQUAL."""
    diff = dist2(p, q) - to_scalar(r2)
    eps = tol.value()
    if abs(diff) <= eps:
        return Cmp.EQUAL
    return Cmp.BELOW if diff < 0 else Cmp.ABOVE


def rotate(p, center, angle):
    c = mp.cos(angle)
    s = mp.sin(angle)
    dx = p.x - center.x
    dy = p.y - center.y
    return Point(center.x + c * dx - s * dy, center.y + s * dx + c * dy)


def third_vertex(a, b, orientation=Orientation.CCW, tol=DEFAULT_TOL):
    """Apex of the equilateral triangle on segment ab."""
    if dist2(a, b) <= tol.value():
        raise DegenerateSegment("segment endpoints coincide")
    half = mp.mpf(1) / 2
    h = mp.sqrt(3) / 2 * orientation.value
    dx = b.x - a.x
    dy = b.y - a.y
    return Point(a.x + half * dx - h * dy, a.y + half * dy + h * dx)


def circle_intersect(c1, r1, c2, r2, tol=DEFAULT_TOL):
    """Intersection points of two circles, sorted lexicographically.

    Returns 0, 1 or 2 points. Tangency is decided with the squared
    tolerance; a tangent pair yields a single point.
    """
    r1 = to_scalar(r1)
    r2 = to_scalar(r2)
    eps = tol.value()
    d2 = dist2(c1, c2)
    if d2 <= eps:
        if abs(r1 * r1 - r2 * r2) <= eps:
            raise CoincidentCircles("circles coincide")
        return []
    # a = signed distance from c1 to the radical line, h^2 = r1^2 - a^2
    a_num = d2 + r1 * r1 - r2 * r2
    h2_scaled = 4 * d2 * r1 * r1 - a_num * a_num  # = 4 d2 h^2
    outer = (r1 + r2) ** 2
    inner = (r1 - r2) ** 2
    if abs(d2 - outer) <= eps or abs(d2 - inner) <= eps:
        h2_scaled = mp.mpf(0)
    elif h2_scaled < 0:
        return []
    dx = c2.x - c1.x
    dy = c2.y - c1.y
    t = a_num / (2 * d2)
    base = Point(c1.x + t * dx, c1.y + t * dy)
    if h2_scaled == 0:
        return [base]
    k = mp.sqrt(h2_scaled) / (2 * d2)
    p1 = Point(base.x - k * dy, base.y + k * dx)
    p2 = Point(base.x + k * dy, base.y - k * dx)
    return sorted([p1, p2])


def midpoint(p, q):
    return Point((p.x + q.x) / 2, (p.y + q.y) / 2)


def cross(o, a, b):
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)
