"""Grid-graph dominating set to UDG total Roman domination gadget.

Every grid vertex keeps its position; every grid edge gets a vertex at its
midpoint plus a pendant 0.1 to the side, and the edge threshold drops to
0.5. A dominating set of size k in the grid then corresponds to a total
Roman dominating function of weight k + 2m in the gadget.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from .approx import RomanAssignment, is_dominating, verify_trdf
from .errors import (
    InvalidAssignmentError,
    IsolatedVertexError,
    NotDominatingError,
    UDGDomError,
)
from .exact import TRDF_LIMIT, exact_min_ds, exact_min_trdf
from .geometry import PointSet, UnitDiskGraph, build_udg

PENDANT_OFFSET = 0.1
GADGET_RADIUS = 0.5

Lattice = tuple[int, int]
Edge = tuple[int, int]


@dataclass(frozen=True, eq=False)
class GridGraph:
    vertices: tuple[Lattice, ...]
    edges: tuple[Edge, ...] = field(init=False)

    def __post_init__(self):
        seen: dict[Lattice, int] = {}
        for ix, iy in self.vertices:
            key = (int(ix), int(iy))
            if (ix, iy) != key:
                raise UDGDomError(f"grid coordinates must be integers: {(ix, iy)}")
            seen.setdefault(key, len(seen))
        verts = tuple(seen)
        object.__setattr__(self, "vertices", verts)
        edges = []
        for i, (x, y) in enumerate(verts):
            for q in ((x + 1, y), (x, y + 1), (x - 1, y), (x, y - 1)):
                j = seen.get(q)
                if j is not None and i < j:
                    edges.append((i, j))
        object.__setattr__(self, "edges", tuple(sorted(edges)))

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    def isolated(self) -> list[int]:
        touched = {v for e in self.edges for v in e}
        return [v for v in range(self.n) if v not in touched]

    def as_udg(self) -> UnitDiskGraph:
        """The grid graph itself; lattice neighbours are the only pairs within distance 1."""
        return build_udg(PointSet.from_coords(self.vertices, 1.0))


@dataclass(frozen=True)
class Role:
    kind: str  # "original", "mid" or "pendant"
    src: int | None = None
    edge: Edge | None = None

    def as_dict(self) -> dict:
        if self.kind == "original":
            return {"kind": "original", "src": self.src}
        return {"kind": self.kind, "edge": list(self.edge)}


@dataclass(frozen=True, eq=False)
class GadgetUdg:
    udg: UnitDiskGraph
    roles: tuple[Role, ...]
    grid: GridGraph

    def original(self, i: int) -> int:
        return i

    def mid(self, k: int) -> int:
        """Gadget vertex of the midpoint of grid edge number ``k``."""
        return self.grid.n + 2 * k

    def pendant(self, k: int) -> int:
        return self.grid.n + 2 * k + 1


def grid_to_gadget(g: GridGraph, scale2: bool = False) -> GadgetUdg:
    lonely = g.isolated()
    if lonely or g.n == 0:
        raise IsolatedVertexError(lonely, f"grid graph has isolated vertices {lonely}")
    s = 2.0 if scale2 else 1.0
    coords = [(s * x, s * y) for x, y in g.vertices]
    roles = [Role("original", src=i) for i in range(g.n)]
    for i, j in g.edges:
        (xi, yi), (xj, yj) = g.vertices[i], g.vertices[j]
        mx, my = (xi + xj) / 2, (yi + yj) / 2
        if yi == yj:
            px, py = mx, my + PENDANT_OFFSET
        else:
            px, py = mx + PENDANT_OFFSET, my
        coords.append((s * mx, s * my))
        coords.append((s * px, s * py))
        roles.append(Role("mid", edge=(i, j)))
        roles.append(Role("pendant", edge=(i, j)))
    udg = build_udg(PointSet.from_coords(coords, s * GADGET_RADIUS))
    return GadgetUdg(udg, tuple(roles), g)


def ds_to_trdf(g: GridGraph, d: Iterable[int], gadget: GadgetUdg) -> RomanAssignment:
    """Label the gadget from a dominating set of the grid graph."""
    d = set(d)
    if not is_dominating(g.as_udg(), sorted(d)):
        raise NotDominatingError(f"{sorted(d)} does not dominate the grid graph")
    vals = [0] * gadget.udg.n
    for i in d:
        vals[gadget.original(i)] = 1
    for k, (i, j) in enumerate(g.edges):
        if i in d or j in d:
            vals[gadget.mid(k)] = 2
        else:
            vals[gadget.mid(k)] = 1
            vals[gadget.pendant(k)] = 1
    return RomanAssignment(tuple(vals))


def _require_trdf(gadget, f):
    if len(f) != gadget.udg.n or not verify_trdf(gadget.udg, f):
        raise InvalidAssignmentError("labelling is not a total Roman dominating function of the gadget")


def canonicalize_trdf(gadget: GadgetUdg, f: RomanAssignment) -> RomanAssignment:
    """Weight-preserving rewrite that pushes every edge pair toward (2, 0).

    An edge pair labelled (1, 1) or (1, 2) beside a positive endpoint is
    relabelled (2, 0) or (2, 1). Afterwards every 1-labelled original vertex
    sees only 2-labelled midpoints.
    """
    _require_trdf(gadget, f)
    vals = list(f.values)
    for k, (i, j) in enumerate(gadget.grid.edges):
        x, y = gadget.mid(k), gadget.pendant(k)
        if vals[x] != 1 or not (vals[i] or vals[j]):
            continue
        if vals[y] == 1:
            vals[x], vals[y] = 2, 0
        elif vals[y] == 2:
            vals[x], vals[y] = 2, 1
    out = RomanAssignment(tuple(vals))
    assert out.weight == f.weight and verify_trdf(gadget.udg, out)
    return out


def trdf_to_ds(g: GridGraph, gadget: GadgetUdg, f: RomanAssignment) -> tuple[int, ...]:
    """Read a dominating set of the grid off a gadget labelling.

    Positive original vertices go in directly; an edge whose pair carries
    extra weight (midpoint 2, pendant positive) contributes its second
    endpoint.
    """
    _require_trdf(gadget, f)
    d = {i for i in range(g.n) if f[gadget.original(i)] >= 1}
    for k, (i, j) in enumerate(g.edges):
        if f[gadget.mid(k)] == 2 and f[gadget.pendant(k)] >= 1:
            d.add(j)
    d = tuple(sorted(d))
    if not is_dominating(g.as_udg(), d):
        raise NotDominatingError(f"recovered set {list(d)} does not dominate the grid graph")
    return d


@dataclass(frozen=True)
class ClaimReport:
    grid: GridGraph
    gamma: int
    gamma_tr: int
    # k -> whether the two decision answers agree
    agree: dict[int, bool]

    @property
    def ok(self) -> bool:
        return all(self.agree.values())


def claim_report(g: GridGraph, limit: int = TRDF_LIMIT) -> ClaimReport:
    gadget = grid_to_gadget(g)
    gamma_tr = exact_min_trdf(gadget.udg, limit=limit).objective
    gamma = exact_min_ds(g.as_udg()).objective
    agree = {k: (gamma <= k) == (gamma_tr <= k + 2 * g.m) for k in range(1, g.n + 1)}
    return ClaimReport(g, gamma, gamma_tr, agree)


def verify_claim(g: GridGraph, k: int, limit: int = TRDF_LIMIT) -> bool:
    gadget = grid_to_gadget(g)
    gamma_tr = exact_min_trdf(gadget.udg, limit=limit).objective
    gamma = exact_min_ds(g.as_udg()).objective
    return (gamma <= k) == (gamma_tr <= k + 2 * g.m)


def lattice_animals(size: int) -> list[tuple[Lattice, ...]]:
    """Fixed lattice animals with ``size`` cells, translated to touch both axes."""
    if size < 1:
        return []
    level = {((0, 0),)}
    for _ in range(size - 1):
        grown = set()
        for shape in level:
            cells = set(shape)
            for x, y in shape:
                for q in ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)):
                    if q not in cells:
                        grown.add(_normalize(cells | {q}))
        level = grown
    return sorted(level)


def _normalize(cells) -> tuple[Lattice, ...]:
    mx = min(x for x, _ in cells)
    my = min(y for _, y in cells)
    return tuple(sorted((x - mx, y - my) for x, y in cells))


def connected_grid_graphs(max_n: int) -> list[GridGraph]:
    """All connected grid graphs with 2..max_n vertices, up to translation."""
    return [GridGraph(shape) for n in range(2, max_n + 1) for shape in lattice_animals(n)]


# -- files ------------------------------------------------------------------


def read_grid(path) -> GridGraph:
    try:
        data = json.loads(Path(path).read_text())
        verts = [tuple(v) for v in data["vertices"]]
        if any(len(v) != 2 for v in verts):
            raise UDGDomError("grid vertices must be pairs")
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise UDGDomError(f"malformed grid file: {exc}") from exc
    return GridGraph(tuple(verts))


def write_grid(path, g: GridGraph) -> None:
    Path(path).write_text(json.dumps({"vertices": [list(v) for v in g.vertices]}) + "\n")


def roles_dict(gadget: GadgetUdg) -> dict:
    return {"roles": [r.as_dict() for r in gadget.roles]}
