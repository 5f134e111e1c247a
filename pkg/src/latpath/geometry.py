"""Exact lattice geometry: polygons, lattice points, linear orders and boundary chains.

Everything here works on Python integers; no floating point is involved.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from math import gcd
from typing import Iterable, NamedTuple, Sequence

from .errors import DegeneratePolygon, InvalidOrder, NonConvexInput


class Point(NamedTuple):
    x: int
    y: int

    def __sub__(self, other):
        return Point(self.x - other[0], self.y - other[1])


def as_point(p: Sequence[int]) -> Point:
    x, y = p
    if int(x) != x or int(y) != y:
        raise DegeneratePolygon(f"non-integer coordinate in {p!r}")
    return Point(int(x), int(y))


def cross(u: Sequence[int], v: Sequence[int]) -> int:
    return u[0] * v[1] - u[1] * v[0]


def turn(a: Point, b: Point, c: Point) -> int:
    """Cross product of (b - a) and (c - b); positive for a left turn at b."""
    return (b.x - a.x) * (c.y - b.y) - (b.y - a.y) * (c.x - b.x)


def triangle_double_area(a: Sequence[int], b: Sequence[int], c: Sequence[int]) -> int:
    return abs((b[0] - a[0]) * (c[1] - b[1]) - (b[1] - a[1]) * (c[0] - b[0]))


def lattice_length(v: Sequence[int]) -> int:
    return gcd(v[0], v[1])


def _convex_hull(points: Iterable[Point]) -> list[Point]:
    # Andrew's monotone chain, collinear points dropped, counterclockwise output.
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    def half(seq):
        out: list[Point] = []
        for p in seq:
            while len(out) >= 2 and turn(out[-2], out[-1], p) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = half(pts)
    upper = half(reversed(pts))
    return lower[:-1] + upper[:-1]


def _is_rotation(a: Sequence[Point], b: Sequence[Point]) -> bool:
    if len(a) != len(b):
        return False
    if not a:
        return True
    try:
        i = list(b).index(a[0])
    except ValueError:
        return False
    return list(a) == list(b[i:]) + list(b[:i])


@dataclass(frozen=True)
class LatticePolygon:
    """A convex lattice polygon with vertices stored counterclockwise.

    Build instances with :func:`make_polygon`; the constructor assumes its
    input is already normalized.
    """

    vertices: tuple[Point, ...]

    def edges(self) -> list[tuple[Point, Point]]:
        vs = self.vertices
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def contains(self, p: Sequence[int]) -> bool:
        return all(cross(b - a, (p[0] - a.x, p[1] - a.y)) >= 0 for a, b in self.edges())

    def strictly_contains(self, p: Sequence[int]) -> bool:
        return all(cross(b - a, (p[0] - a.x, p[1] - a.y)) > 0 for a, b in self.edges())

    @cached_property
    def double_area(self) -> int:
        vs = self.vertices
        return sum(cross(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs)))

    @cached_property
    def all_points(self) -> tuple[Point, ...]:
        xs = [v.x for v in self.vertices]
        ys = [v.y for v in self.vertices]
        return tuple(
            Point(x, y)
            for x in range(min(xs), max(xs) + 1)
            for y in range(min(ys), max(ys) + 1)
            if self.contains((x, y))
        )

    @cached_property
    def interior_points(self) -> tuple[Point, ...]:
        return tuple(p for p in self.all_points if self.strictly_contains(p))

    @cached_property
    def boundary_points(self) -> tuple[Point, ...]:
        """Boundary lattice points in counterclockwise order, starting at the first vertex."""
        out: list[Point] = []
        for a, b in self.edges():
            d = b - a
            g = lattice_length(d)
            step = Point(d.x // g, d.y // g)
            out.extend(Point(a.x + i * step.x, a.y + i * step.y) for i in range(g))
        return tuple(out)

    @property
    def boundary_count(self) -> int:
        return len(self.boundary_points)

    @property
    def m(self) -> int:
        return len(self.all_points) - 1

    @property
    def l(self) -> int:  # noqa: E743
        return len(self.interior_points)

    def transformed(self, f: "UnimodularMap") -> "LatticePolygon":
        return make_polygon([f(v) for v in self.vertices])

    def to_json(self) -> dict:
        return {"vertices": [[v.x, v.y] for v in self.vertices]}


def make_polygon(vertices: Iterable[Sequence[int]]) -> LatticePolygon:
    """Validate and normalize a vertex list into a counterclockwise convex polygon.

    Points lying on an edge between two extreme vertices are absorbed. The
    remaining extreme points must appear in convex cyclic order (either
    orientation), otherwise :class:`NonConvexInput` is raised.
    """
    pts = [as_point(v) for v in vertices]
    if not pts:
        raise DegeneratePolygon("empty vertex list")
    hull = _convex_hull(pts)
    if len(hull) < 3:
        raise DegeneratePolygon(f"polygon has zero area: {pts}")
    poly = LatticePolygon(tuple(hull))
    hull_set = set(hull)
    for p in pts:
        if p not in hull_set and poly.strictly_contains(p):
            raise NonConvexInput(f"point {tuple(p)} is interior to the hull of the input")

    seen: set[Point] = set()
    cyclic: list[Point] = []
    for p in pts:
        if p in hull_set and p not in seen:
            seen.add(p)
            cyclic.append(p)
    if not (_is_rotation(cyclic, hull) or _is_rotation(cyclic[::-1], hull)):
        raise NonConvexInput("vertices are not listed in convex cyclic order")
    return poly


def standard_triangle(d: int) -> LatticePolygon:
    return make_polygon([(0, 0), (d, 0), (0, d)])


def rectangle(r: int, s: int) -> LatticePolygon:
    return make_polygon([(0, 0), (r, 0), (r, s), (0, s)])


def lattice_points(poly: LatticePolygon, order: "DirectionOrder | None" = None) -> tuple[Point, ...]:
    """All of Δ∩Z², sorted by ``order`` if given, else by (x, y)."""
    if order is None:
        return poly.all_points
    return tuple(sorted(poly.all_points, key=order.key))


def interior_lattice_points(poly: LatticePolygon) -> tuple[Point, ...]:
    return poly.interior_points


@dataclass(frozen=True)
class DirectionOrder:
    """An injective linear order on Z², compared as the pair ``(a·p, t·p)``.

    This stands in for an irrational linear functional: ``a`` is the dominant
    direction and ``t`` breaks ties. ``DirectionOrder((1, 0), (0, -1))`` is the
    order of x - εy for tiny ε > 0.
    """

    primary: tuple[int, int]
    tiebreak: tuple[int, int]

    def __post_init__(self):
        object.__setattr__(self, "primary", tuple(int(c) for c in self.primary))
        object.__setattr__(self, "tiebreak", tuple(int(c) for c in self.tiebreak))
        if len(self.primary) != 2 or len(self.tiebreak) != 2:
            raise InvalidOrder("order vectors must have two components")
        if cross(self.primary, self.tiebreak) == 0:
            raise InvalidOrder(f"order vectors {self.primary} and {self.tiebreak} are parallel")

    def key(self, p: Sequence[int]) -> tuple[int, int]:
        a, t = self.primary, self.tiebreak
        return (a[0] * p[0] + a[1] * p[1], t[0] * p[0] + t[1] * p[1])

    def compare(self, u: Sequence[int], v: Sequence[int]) -> int:
        ku, kv = self.key(u), self.key(v)
        return (ku > kv) - (ku < kv)

    def reversed(self) -> "DirectionOrder":
        a, t = self.primary, self.tiebreak
        return DirectionOrder((-a[0], -a[1]), (-t[0], -t[1]))

    @classmethod
    def parse(cls, text: str) -> "DirectionOrder":
        """Parse ``"a1,a2;t1,t2"``."""
        try:
            a, t = text.split(";")
            a1, a2 = (int(s) for s in a.split(","))
            t1, t2 = (int(s) for s in t.split(","))
        except ValueError:
            raise InvalidOrder(f"cannot parse order {text!r}; expected 'a1,a2;t1,t2'") from None
        return cls((a1, a2), (t1, t2))

    def __str__(self) -> str:
        return f"{self.primary[0]},{self.primary[1]};{self.tiebreak[0]},{self.tiebreak[1]}"


X_MINUS_EPS_Y = DirectionOrder((1, 0), (0, -1))
Y_MINUS_EPS_X = DirectionOrder((0, 1), (-1, 0))


def standard_orders() -> list[DirectionOrder]:
    """The eight orders ±x±εy and ±y±εx."""
    out = []
    for sa in (1, -1):
        for st in (1, -1):
            out.append(DirectionOrder((sa, 0), (0, st)))
            out.append(DirectionOrder((0, sa), (st, 0)))
    return out


def lambda_compare(order: DirectionOrder, u: Sequence[int], v: Sequence[int]) -> int:
    """Return -1, 0 or 1 as ``u`` is below, equal to or above ``v`` under ``order``."""
    return order.compare(u, v)


def extreme_vertices(poly: LatticePolygon, order: DirectionOrder) -> tuple[Point, Point]:
    return min(poly.vertices, key=order.key), max(poly.vertices, key=order.key)


@dataclass(frozen=True)
class BoundaryChains:
    alpha_plus: tuple[Point, ...]
    alpha_minus: tuple[Point, ...]

    @property
    def p(self) -> Point:
        return self.alpha_plus[0]

    @property
    def q(self) -> Point:
        return self.alpha_plus[-1]

    @property
    def n_plus(self) -> int:
        return len(self.alpha_plus) - 1

    @property
    def n_minus(self) -> int:
        return len(self.alpha_minus) - 1


def boundary_chains(poly: LatticePolygon, order: DirectionOrder) -> BoundaryChains:
    """Split the boundary at p and q into the clockwise and counterclockwise walks p → q."""
    p, q = extreme_vertices(poly, order)
    ring = poly.boundary_points
    n = len(ring)
    ip, iq = ring.index(p), ring.index(q)
    ccw = [ring[(ip + i) % n] for i in range((iq - ip) % n + 1)]
    cw = [ring[(ip - i) % n] for i in range((ip - iq) % n + 1)]
    return BoundaryChains(tuple(cw), tuple(ccw))


@dataclass(frozen=True)
class UnimodularMap:
    """Affine map ``x -> M x + c`` with integer ``M`` of determinant ±1."""

    matrix: tuple[tuple[int, int], tuple[int, int]]
    offset: tuple[int, int] = (0, 0)

    def __post_init__(self):
        (a, b), (c, d) = self.matrix
        if a * d - b * c not in (1, -1):
            raise ValueError(f"matrix {self.matrix} is not unimodular")

    @property
    def det(self) -> int:
        (a, b), (c, d) = self.matrix
        return a * d - b * c

    def __call__(self, p: Sequence[int]) -> Point:
        (a, b), (c, d) = self.matrix
        return Point(a * p[0] + b * p[1] + self.offset[0], c * p[0] + d * p[1] + self.offset[1])

    def push_order(self, order: DirectionOrder) -> DirectionOrder:
        """The order ``λ ∘ U⁻¹`` on the image lattice."""
        (a, b), (c, d) = self.matrix
        det = self.det
        # rows of M^{-T}
        inv_t = ((d * det, -c * det), (-b * det, a * det))

        def push(v):
            return (inv_t[0][0] * v[0] + inv_t[0][1] * v[1], inv_t[1][0] * v[0] + inv_t[1][1] * v[1])

        return DirectionOrder(push(order.primary), push(order.tiebreak))

    @classmethod
    def random(cls, rng: random.Random, steps: int = 4, spread: int = 5) -> "UnimodularMap":
        m = [[1, 0], [0, 1]]
        for _ in range(steps):
            k = rng.randint(-2, 2)
            if rng.random() < 0.5:
                m = [[m[0][0] + k * m[1][0], m[0][1] + k * m[1][1]], m[1]]
            else:
                m = [m[0], [m[1][0] + k * m[0][0], m[1][1] + k * m[0][1]]]
        if rng.random() < 0.5:
            m = [m[1], m[0]]
        offset = (rng.randint(-spread, spread), rng.randint(-spread, spread))
        return cls((tuple(m[0]), tuple(m[1])), offset)


__all__ = [
    "Point",
    "LatticePolygon",
    "DirectionOrder",
    "BoundaryChains",
    "UnimodularMap",
    "make_polygon",
    "standard_triangle",
    "rectangle",
    "lattice_points",
    "interior_lattice_points",
    "lambda_compare",
    "extreme_vertices",
    "boundary_chains",
    "standard_orders",
    "triangle_double_area",
    "cross",
    "turn",
    "X_MINUS_EPS_Y",
    "Y_MINUS_EPS_X",
]
