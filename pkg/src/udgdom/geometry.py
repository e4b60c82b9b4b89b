"""Point sets, unit disk graphs and the square-cell bucketing behind them.

Cells have side equal to the radius, so every neighbour of a point lies in
the 3x3 block of cells around the point's own cell. Both the distance test
and the cell index are exact with respect to the input floats: pairs at the
radius up to rounding are settled with rationals rather than by luck.
"""

from __future__ import annotations

import json
import math
from bisect import bisect_left
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import UDGDomError

Cell = tuple[int, int]


@dataclass(frozen=True)
class Point2D:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise UDGDomError(f"non-finite coordinate ({self.x}, {self.y})")


@dataclass(frozen=True)
class PointSet:
    """Disk centres in input order; vertex ``i`` is ``points[i]``."""

    points: tuple[Point2D, ...]
    radius: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))
        if not (math.isfinite(self.radius) and self.radius > 0):
            raise UDGDomError(f"radius must be positive and finite, got {self.radius}")

    @classmethod
    def from_coords(cls, coords: Iterable[Sequence[float]], radius: float = 1.0) -> "PointSet":
        return cls(tuple(Point2D(float(x), float(y)) for x, y in coords), float(radius))

    def __len__(self) -> int:
        return len(self.points)

    def as_array(self) -> np.ndarray:
        return np.array([(p.x, p.y) for p in self.points], dtype=float).reshape(-1, 2)


# float results closer than this (relative) to a decision boundary are
# re-decided in exact rational arithmetic on the input floats
_NEAR = 1e-9


def _floor_div(x: float, r: float) -> int:
    q = x / r
    k = math.floor(q)
    if abs(q - round(q)) <= _NEAR * max(1.0, abs(q)):
        k = math.floor(Fraction(x) / Fraction(r))
    return k


def cell_of(p: Point2D, radius: float) -> Cell:
    return (_floor_div(p.x, radius), _floor_div(p.y, radius))


def block_around(cell: Cell) -> Iterator[Cell]:
    cx, cy = cell
    for dx in (-1, 0, 1):
        for dy in (-1, 0, 1):
            yield (cx + dx, cy + dy)


def within(p: Point2D, q: Point2D, radius: float) -> bool:
    """Closed test ``d(p, q) <= radius``, exact for the given float coordinates."""
    dx = p.x - q.x
    dy = p.y - q.y
    d2 = dx * dx + dy * dy
    r2 = radius * radius
    if abs(d2 - r2) > _NEAR * r2:
        return d2 < r2
    ex = Fraction(p.x) - Fraction(q.x)
    ey = Fraction(p.y) - Fraction(q.y)
    return ex * ex + ey * ey <= Fraction(radius) ** 2


@dataclass(frozen=True)
class DegenerateVertexReport:
    isolated: tuple[int, ...] = ()

    def __bool__(self) -> bool:
        return bool(self.isolated)


@dataclass(frozen=True, eq=False)
class UnitDiskGraph:
    pointset: PointSet
    adjacency: tuple[tuple[int, ...], ...]
    buckets: dict[Cell, tuple[int, ...]] = field(repr=False)
    cells: tuple[Cell, ...] = field(repr=False)

    @property
    def n(self) -> int:
        return len(self.adjacency)

    @property
    def radius(self) -> float:
        return self.pointset.radius

    @property
    def n_edges(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i, nb in enumerate(self.adjacency) for j in nb if i < j]

    def point(self, v: int) -> Point2D:
        return self.pointset.points[v]

    def neighbor_masks(self) -> list[int]:
        """Open neighbourhoods as integer bitmasks (bit ``j`` set iff ``j`` adjacent)."""
        masks = []
        for nb in self.adjacency:
            m = 0
            for j in nb:
                m |= 1 << j
            masks.append(m)
        return masks

    def has_edge(self, i: int, j: int) -> bool:
        nb = self.adjacency[i]
        k = bisect_left(nb, j)
        return k < len(nb) and nb[k] == j


def build_udg(pointset: PointSet) -> UnitDiskGraph:
    """Build the unit disk graph of ``pointset`` using 3x3 cell probing."""
    if len(pointset) == 0:
        raise UDGDomError("point set is empty")
    r = pointset.radius
    pts = pointset.points
    cells = tuple(cell_of(p, r) for p in pts)
    buckets: dict[Cell, list[int]] = {}
    for i, c in enumerate(cells):
        buckets.setdefault(c, []).append(i)

    adjacency = []
    for i, p in enumerate(pts):
        nb = []
        for c in block_around(cells[i]):
            for j in buckets.get(c, ()):
                if j != i and within(p, pts[j], r):
                    nb.append(j)
        nb.sort()
        adjacency.append(tuple(nb))

    return UnitDiskGraph(
        pointset=pointset,
        adjacency=tuple(adjacency),
        buckets={c: tuple(vs) for c, vs in buckets.items()},
        cells=cells,
    )


def neighbors(g: UnitDiskGraph, v: int) -> list[int]:
    if not 0 <= v < g.n:
        raise IndexError(f"vertex {v} out of range for graph with {g.n} vertices")
    return list(g.adjacency[v])


def isolated_vertices(g: UnitDiskGraph) -> DegenerateVertexReport:
    return DegenerateVertexReport(tuple(i for i, nb in enumerate(g.adjacency) if not nb))


# -- instance files ---------------------------------------------------------


def _fmt(x: float) -> str:
    return "%.17g" % x


def dumps_instance(pointset: PointSet) -> str:
    rows = ",\n    ".join(f"[{_fmt(p.x)}, {_fmt(p.y)}]" for p in pointset.points)
    return f'{{\n  "radius": {_fmt(pointset.radius)},\n  "points": [\n    {rows}\n  ]\n}}\n'


def loads_instance(text: str) -> PointSet:
    try:
        data = json.loads(text)
        coords = data["points"]
        radius = float(data.get("radius", 1.0))
        if any(len(c) != 2 for c in coords):
            raise UDGDomError("every point must have exactly two coordinates")
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise UDGDomError(f"malformed instance file: {exc}") from exc
    return PointSet.from_coords(coords, radius)


def write_instance(path, pointset: PointSet) -> None:
    Path(path).write_text(dumps_instance(pointset))


def read_instance(path) -> PointSet:
    return loads_instance(Path(path).read_text())
