"""Complex path multiplicities μ+, μ- and their product."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ._recursion import evaluate
from .geometry import DirectionOrder, LatticePolygon, Point
from .paths import PathContext, Side, enclosed_double_area, find_pivot, surgery


@dataclass(frozen=True)
class MultiplicityRecord:
    mu_plus: int
    mu_minus: int

    @property
    def mu(self) -> int:
        return self.mu_plus * self.mu_minus

    def to_json(self) -> dict:
        return {"mu_plus": self.mu_plus, "mu_minus": self.mu_minus, "mu": self.mu}


class ComplexMultiplicity:
    """Memoized evaluator of μ± for paths in one (polygon, order) context.

    With ``check_termination=True`` every recursive step asserts that the
    enclosed area between the path and the boundary chain shrinks by exactly
    the expected amount.
    """

    def __init__(self, poly: LatticePolygon, order: DirectionOrder, check_termination: bool = False):
        self.context = PathContext(poly, order)
        self.check_termination = check_termination
        self._memo: dict[Side, dict] = {Side.PLUS: {}, Side.MINUS: {}}

    def _expander(self, side: Side):
        ctx = self.context
        base = ctx.chain(side)

        def expand(path):
            if path == base:
                return 1
            pivot = find_pivot(path, side)
            if pivot is None:
                return 0
            g1, g2, _ = surgery(path, pivot, ctx.polygon)
            if self.check_termination:
                area = enclosed_double_area(path, ctx.chains, side)
                assert enclosed_double_area(g1, ctx.chains, side) == area - pivot.double_area
                if g2 is not None:
                    assert enclosed_double_area(g2, ctx.chains, side) == area - 2 * pivot.double_area
            terms = [(pivot.double_area, g1)]
            if g2 is not None:
                terms.append((1, g2))
            return terms

        return expand

    def mu_side(self, path: Sequence[Point], side: Side) -> int:
        path = tuple(path)
        self.context.check_path(path)
        return evaluate(path, self._expander(side), self._memo[side])

    def mu(self, path: Sequence[Point]) -> MultiplicityRecord:
        return MultiplicityRecord(self.mu_side(path, Side.PLUS), self.mu_side(path, Side.MINUS))


def mu_side(path: Sequence[Point], side: Side, poly: LatticePolygon, order: DirectionOrder) -> int:
    return ComplexMultiplicity(poly, order).mu_side(path, side)


def mu(path: Sequence[Point], poly: LatticePolygon, order: DirectionOrder) -> MultiplicityRecord:
    return ComplexMultiplicity(poly, order).mu(path)
