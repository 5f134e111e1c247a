"""Top-level counts: N^{Δ,δ}, real counts for a sign sequence, and signed counts.

Each count sums a per-path multiplicity over every λ-increasing path of
``m - δ`` edges from p to q. Paths are independent, so the enumeration can be
split into contiguous rank ranges and handed to worker processes; the result
does not depend on the number of workers.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .errors import InvalidDelta, LatpathError, SignLengthMismatch
from .geometry import DirectionOrder, LatticePolygon, Point, make_polygon
from .multiplicity import ComplexMultiplicity, MultiplicityRecord
from .paths import count_paths, enumerate_paths
from .real import RealMultiplicity, RealMultiplicityRecord, SignPair, format_signs, parse_signs

KINDS = ("complex", "real", "welschinger")


def default_workers() -> int:
    raw = os.environ.get("LATPATH_THREADS")
    if not raw:
        return 1
    try:
        n = int(raw)
    except ValueError:
        raise LatpathError(f"LATPATH_THREADS must be a positive integer, got {raw!r}") from None
    if n < 1:
        raise LatpathError(f"LATPATH_THREADS must be a positive integer, got {raw!r}")
    return n


@dataclass(frozen=True)
class PathEntry:
    path: tuple
    contribution: int
    complex: MultiplicityRecord
    real: Optional[RealMultiplicityRecord] = None

    def to_json(self) -> dict:
        out = {
            "path": [[p.x, p.y] for p in self.path],
            "contribution": self.contribution,
            "complex": self.complex.to_json(),
        }
        if self.real is not None:
            out["real"] = self.real.to_json()
        return out

    @classmethod
    def from_json(cls, d: dict) -> "PathEntry":
        c = d["complex"]
        r = d.get("real")
        return cls(
            path=tuple(Point(*p) for p in d["path"]),
            contribution=d["contribution"],
            complex=MultiplicityRecord(c["mu_plus"], c["mu_minus"]),
            real=None
            if r is None
            else RealMultiplicityRecord(r["mu_r_plus"], r["mu_r_minus"], r["nu_plus"], r["nu_minus"]),
        )


@dataclass
class CountReport:
    polygon: LatticePolygon
    order: DirectionOrder
    delta: int
    kind: str
    total: int
    entries: list[PathEntry] = field(default_factory=list)
    enumerated: int = 0
    signs: Optional[tuple[SignPair, ...]] = None
    elapsed: float = 0.0

    @property
    def n(self) -> int:
        return self.polygon.m - self.delta

    @property
    def nonzero(self) -> int:
        return sum(1 for e in self.entries if e.contribution != 0)

    def to_json(self) -> dict:
        return {
            "polygon": self.polygon.to_json()["vertices"],
            "lambda": str(self.order),
            "delta": self.delta,
            "n": self.n,
            "kind": self.kind,
            "signs": None if self.signs is None else format_signs(self.signs),
            "total": self.total,
            "enumerated": self.enumerated,
            "nonzero": self.nonzero,
            "elapsed": self.elapsed,
            "paths": [e.to_json() for e in self.entries],
        }

    @classmethod
    def from_json(cls, d: dict) -> "CountReport":
        return cls(
            polygon=make_polygon(d["polygon"]),
            order=DirectionOrder.parse(d["lambda"]),
            delta=d["delta"],
            kind=d["kind"],
            total=d["total"],
            entries=[PathEntry.from_json(e) for e in d["paths"]],
            enumerated=d["enumerated"],
            signs=None if d.get("signs") is None else parse_signs(d["signs"]),
            elapsed=d["elapsed"],
        )


def _check_delta(poly: LatticePolygon, delta: int) -> int:
    if not isinstance(delta, int) or isinstance(delta, bool):
        raise InvalidDelta(f"delta must be an integer, got {delta!r}")
    if not 0 <= delta <= poly.m - 1:
        raise InvalidDelta(f"delta={delta} outside [0, {poly.m - 1}] for a polygon with m={poly.m}")
    return poly.m - delta


def _evaluate_range(
    vertices: tuple,
    order: DirectionOrder,
    n: int,
    kind: str,
    signs: Optional[tuple],
    start: int,
    stop: Optional[int],
    options: dict,
) -> list[PathEntry]:
    poly = make_polygon(vertices)
    cm = ComplexMultiplicity(poly, order)
    rm = RealMultiplicity(poly, order, **options) if kind != "complex" else None
    out = []
    for path in enumerate_paths(poly, order, n, start, stop):
        rec = cm.mu(path)
        if kind == "complex":
            out.append(PathEntry(path, rec.mu, rec))
            continue
        real = rm.record(path, signs if kind == "real" else None)
        value = real.mu_r if kind == "real" else real.nu
        out.append(PathEntry(path, value, rec, real))
    return out


def _run(
    poly: LatticePolygon,
    order: DirectionOrder,
    delta: int,
    kind: str,
    signs: Optional[tuple],
    workers: Optional[int],
    options: dict,
) -> CountReport:
    n = _check_delta(poly, delta)
    if workers is None:
        workers = default_workers()
    t0 = time.perf_counter()
    total_paths = count_paths(poly, n)
    args = (poly.vertices, order, n, kind, signs)
    if workers <= 1 or total_paths < 2:
        entries = _evaluate_range(*args, 0, None, options)
    else:
        chunk = -(-total_paths // workers)
        bounds = [(i, min(i + chunk, total_paths)) for i in range(0, total_paths, chunk)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_evaluate_range, *args, a, b, options) for a, b in bounds]
            entries = [e for f in futures for e in f.result()]
    return CountReport(
        polygon=poly,
        order=order,
        delta=delta,
        kind=kind,
        total=sum(e.contribution for e in entries),
        entries=entries,
        enumerated=total_paths,
        signs=signs,
        elapsed=time.perf_counter() - t0,
    )


def count_complex(
    poly: LatticePolygon, order: DirectionOrder, delta: int, workers: Optional[int] = None
) -> CountReport:
    """N^{Δ,δ}: the number of genus ``l - δ`` curves through ``m - δ`` generic points."""
    return _run(poly, order, delta, "complex", None, workers, {})


def count_real(
    poly: LatticePolygon,
    order: DirectionOrder,
    delta: int,
    signs: Sequence[Sequence[int]],
    workers: Optional[int] = None,
    literal_even_rule: bool = False,
    literal_odd_rule: bool = False,
) -> CountReport:
    """Number of real curves for points placed in the quadrants ``signs``."""
    n = _check_delta(poly, delta)
    signs = tuple(SignPair(*s) for s in signs)
    if len(signs) != n:
        raise SignLengthMismatch(f"expected {n} sign pairs (m - delta), got {len(signs)}")
    options = {"literal_even_rule": literal_even_rule, "literal_odd_rule": literal_odd_rule}
    return _run(poly, order, delta, "real", signs, workers, options)


def count_welschinger(
    poly: LatticePolygon, order: DirectionOrder, delta: int, workers: Optional[int] = None
) -> CountReport:
    """Real curves counted with sign (-1)^(number of elliptic nodes)."""
    return _run(poly, order, delta, "welschinger", None, workers, {})


@dataclass(frozen=True)
class SweepResult:
    delta: int
    totals: dict[str, int]

    @property
    def passed(self) -> bool:
        return len(set(self.totals.values())) <= 1


def invariance_sweep(
    poly: LatticePolygon, delta: int, orders: Iterable[DirectionOrder], workers: Optional[int] = None
) -> SweepResult:
    orders = list(orders)
    if len(orders) < 2:
        raise LatpathError("an invariance sweep needs at least two orders")
    totals = {str(o): count_complex(poly, o, delta, workers).total for o in orders}
    return SweepResult(delta, totals)


def discriminant_degree(d: int) -> int:
    if d < 1:
        raise ValueError("degree must be positive")
    return 3 * (d - 1) ** 2


def multicomponent_genus(genera: Sequence[int]) -> int:
    """Genus of a curve with components of the given genera: Σ g_j + 1 - (number of components)."""
    if not genera:
        raise ValueError("need at least one component")
    return sum(genera) + 1 - len(genera)
