"""Known-values registry: JSON cases with expected totals and their provenance."""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Optional, Sequence, Union

from .count import KINDS, count_complex, count_real, count_welschinger
from .errors import LatpathError, RegistryParseError
from .geometry import DirectionOrder, LatticePolygon, make_polygon
from .real import SignPair, parse_signs


@dataclass(frozen=True)
class RegistryCase:
    polygon: LatticePolygon
    delta: int
    order: DirectionOrder
    kind: str
    expected: int
    signs: Optional[str] = None
    provenance: str = ""

    def resolved_signs(self) -> tuple[SignPair, ...]:
        """The sign sequence; a single pair is repeated over all ``m - δ`` edges."""
        signs = parse_signs(self.signs or "++")
        n = self.polygon.m - self.delta
        if len(signs) == 1:
            signs = signs * n
        return signs

    def evaluate(self) -> int:
        if self.kind == "complex":
            return count_complex(self.polygon, self.order, self.delta).total
        if self.kind == "real":
            return count_real(self.polygon, self.order, self.delta, self.resolved_signs()).total
        return count_welschinger(self.polygon, self.order, self.delta).total

    def describe(self) -> str:
        verts = " ".join(f"({v.x},{v.y})" for v in self.polygon.vertices)
        extra = f" signs={self.signs}" if self.kind == "real" else ""
        return f"{self.kind} [{verts}] delta={self.delta} lambda={self.order}{extra}"


@dataclass(frozen=True)
class CaseResult:
    case: RegistryCase
    actual: Optional[int]
    error: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.error is None and self.actual == self.case.expected


def parse_registry(data) -> list[RegistryCase]:
    if not isinstance(data, list):
        raise RegistryParseError("registry must be a JSON array of cases")
    cases = []
    for i, item in enumerate(data):
        try:
            kind = item.get("kind", "complex")
            if kind not in KINDS:
                raise RegistryParseError(f"case {i}: unknown kind {kind!r}")
            expected = item["expected"]
            delta = item["delta"]
            if not isinstance(expected, int) or not isinstance(delta, int):
                raise RegistryParseError(f"case {i}: 'expected' and 'delta' must be integers")
            cases.append(
                RegistryCase(
                    polygon=make_polygon(item["polygon"]),
                    delta=delta,
                    order=DirectionOrder.parse(item.get("lambda", "1,0;0,-1")),
                    kind=kind,
                    expected=expected,
                    signs=item.get("signs"),
                    provenance=item.get("provenance", ""),
                )
            )
        except RegistryParseError:
            raise
        except (KeyError, TypeError, AttributeError, LatpathError) as exc:
            raise RegistryParseError(f"case {i}: {exc}") from exc
    return cases


def load_registry(source: Union[str, Path, None] = None) -> list[RegistryCase]:
    """Load a registry file; ``None`` loads the registry shipped with the package."""
    try:
        if source is None:
            text = resources.files("latpath").joinpath("data/registry.json").read_text("utf-8")
        else:
            text = Path(source).read_text("utf-8")
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise RegistryParseError(f"invalid JSON: {exc}") from exc
    return parse_registry(data)


def verify_registry(cases: Sequence[RegistryCase]) -> list[CaseResult]:
    results = []
    for case in cases:
        try:
            results.append(CaseResult(case, case.evaluate()))
        except LatpathError as exc:
            results.append(CaseResult(case, None, str(exc)))
    return results
