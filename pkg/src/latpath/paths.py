"""λ-increasing lattice paths, their enumeration, and the pivot surgeries.

A path is a plain tuple of :class:`~latpath.geometry.Point`; its length is
the number of edges, ``len(path) - 1``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, islice
from math import comb
from typing import Iterator, Optional, Sequence

from .errors import ContextMismatch, InvalidLength
from .geometry import (
    BoundaryChains,
    DirectionOrder,
    LatticePolygon,
    Point,
    boundary_chains,
    lattice_points,
    triangle_double_area,
    turn,
)

LatticePath = tuple  # tuple[Point, ...]


class Side(enum.Enum):
    PLUS = 1
    MINUS = -1

    def __str__(self) -> str:
        return self.name.lower()


def path_length(path: Sequence[Point]) -> int:
    return len(path) - 1


def is_lambda_increasing(path: Sequence[Point], order: DirectionOrder) -> bool:
    keys = [order.key(p) for p in path]
    return all(a < b for a, b in zip(keys, keys[1:]))


@dataclass(frozen=True)
class PivotData:
    k: int
    triangle: tuple[Point, Point, Point]
    double_area: int
    gamma_prime: tuple
    # Candidate for γ″; it may leave the polygon, see ``surgery``.
    gamma_double_prime: tuple

    @property
    def incoming(self) -> Point:
        a, b, _ = self.triangle
        return b - a

    @property
    def outgoing(self) -> Point:
        _, b, c = self.triangle
        return c - b

    @property
    def diagonal(self) -> Point:
        a, _, c = self.triangle
        return c - a


def find_pivot(path: Sequence[Point], side: Side) -> Optional[PivotData]:
    """Smallest interior index where the path turns towards ``side``.

    A left turn is a locally convex corner of the region between the path and
    the clockwise chain (``Side.PLUS``); a right turn is one for the
    counterclockwise chain (``Side.MINUS``).
    """
    sign = side.value
    for k in range(1, len(path) - 1):
        a, b, c = path[k - 1], path[k], path[k + 1]
        t = turn(a, b, c)
        if t * sign > 0:
            reflected = Point(a.x + c.x - b.x, a.y + c.y - b.y)
            return PivotData(
                k=k,
                triangle=(a, b, c),
                double_area=abs(t),
                gamma_prime=tuple(path[:k]) + tuple(path[k + 1 :]),
                gamma_double_prime=tuple(path[:k]) + (reflected,) + tuple(path[k + 1 :]),
            )
    return None


def surgery(
    path: Sequence[Point], pivot: PivotData, poly: LatticePolygon
) -> tuple[tuple, Optional[tuple], bool]:
    """Return ``(γ′, γ″ or None, inside)``; γ″ is None when its new vertex leaves ``poly``."""
    inside = poly.contains(pivot.gamma_double_prime[pivot.k])
    return pivot.gamma_prime, (pivot.gamma_double_prime if inside else None), inside


def enclosed_double_area(path: Sequence[Point], chains: BoundaryChains, side: Side) -> int:
    """Twice the area between ``path`` and the boundary chain of ``side``.

    This strictly decreases along every surgery and so bounds the recursion.
    """
    chain = chains.alpha_plus if side is Side.PLUS else chains.alpha_minus
    loop = list(path) + list(reversed(chain[1:-1]))
    s = 0
    for i in range(len(loop)):
        a, b = loop[i], loop[(i + 1) % len(loop)]
        s += a.x * b.y - a.y * b.x
    return s * side.value


class PathContext:
    """Polygon, order, extremal vertices and boundary chains bundled together."""

    def __init__(self, poly: LatticePolygon, order: DirectionOrder):
        self.polygon = poly
        self.order = order
        self.chains = boundary_chains(poly, order)
        self.p = self.chains.p
        self.q = self.chains.q

    def chain(self, side: Side) -> tuple:
        return self.chains.alpha_plus if side is Side.PLUS else self.chains.alpha_minus

    @cached_property
    def sorted_points(self) -> tuple[Point, ...]:
        return lattice_points(self.polygon, self.order)

    def check_path(self, path: Sequence[Point]) -> None:
        if len(path) < 2 or path[0] != self.p or path[-1] != self.q:
            raise ContextMismatch(
                f"path must run from p={tuple(self.p)} to q={tuple(self.q)}, got "
                f"{[tuple(x) for x in path[:1]]}...{[tuple(x) for x in path[-1:]]}"
            )


def count_paths(poly: LatticePolygon, n: int) -> int:
    m = poly.m
    if not 1 <= n <= m:
        raise InvalidLength(f"path length {n} outside [1, {m}]")
    return comb(m - 1, n - 1)


def enumerate_paths(
    poly: LatticePolygon,
    order: DirectionOrder,
    n: int,
    start: int = 0,
    stop: Optional[int] = None,
) -> Iterator[tuple]:
    """Yield every λ-increasing path of ``n`` edges from p to q inside ``poly``.

    Since Δ is convex and λ is injective, such a path is the same thing as a
    choice of ``n - 1`` lattice points strictly between p and q in λ-order.
    Paths come out in lexicographic order of their λ-rank sequence;
    ``start``/``stop`` select a contiguous range of that order.
    """
    count_paths(poly, n)
    pts = lattice_points(poly, order)
    p, q, middle = pts[0], pts[-1], pts[1:-1]
    for inner in islice(combinations(middle, n - 1), start, stop):
        yield (p,) + inner + (q,)
