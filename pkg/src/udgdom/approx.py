"""Set-cover based approximations for total and total Roman domination.

Both algorithms share one shape: a greedy maximal independent set gives
domination, then a greedy set cover over the outside vertices picks one
neighbour for every independent vertex so nothing is left isolated.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from .errors import IsolatedVertexError, UDGDomError
from .geometry import UnitDiskGraph, isolated_vertices
from .mis import IndependentSet, maximal_independent_set
from .setcover import build_cover_instance, greedy_set_cover

# 44/9 + H(5), and (44/9) + (137/120)
TDS_FACTOR = Fraction(1291, 180)
TRDS_FACTOR = Fraction(2171, 360)


@dataclass(frozen=True)
class TotalDominatingSet:
    members: tuple[int, ...]
    independent: tuple[int, ...] = field(default=(), compare=False)
    connectors: tuple[int, ...] = field(default=(), compare=False)

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(sorted(set(self.members))))

    def __len__(self):
        return len(self.members)

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class RomanAssignment:
    values: tuple[int, ...]

    def __post_init__(self):
        vals = tuple(int(v) for v in self.values)
        if any(v not in (0, 1, 2) for v in vals):
            raise UDGDomError(f"Roman labels must be 0, 1 or 2: {vals}")
        object.__setattr__(self, "values", vals)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, v):
        return self.values[v]

    def level(self, k: int) -> tuple[int, ...]:
        return tuple(i for i, x in enumerate(self.values) if x == k)

    @property
    def weight(self) -> int:
        return sum(self.values)

    @property
    def v1_count(self) -> int:
        return self.values.count(1)


def require_no_isolated(g: UnitDiskGraph) -> None:
    report = isolated_vertices(g)
    if report.isolated:
        raise IsolatedVertexError(report.isolated)


def _independent_and_connectors(g: UnitDiskGraph) -> tuple[IndependentSet, tuple[int, ...]]:
    require_no_isolated(g)
    d = maximal_independent_set(g)
    cover = greedy_set_cover(build_cover_instance(g, d))
    return d, tuple(sorted(cover.owners))


def tds_udg_sc(g: UnitDiskGraph) -> TotalDominatingSet:
    d, t = _independent_and_connectors(g)
    return TotalDominatingSet(d.members + t, independent=d.members, connectors=t)


def trdf_udg_sc(g: UnitDiskGraph) -> RomanAssignment:
    v2, v1 = _independent_and_connectors(g)
    values = [0] * g.n
    for v in v2.members:
        values[v] = 2
    for v in v1:
        values[v] = 1
    return RomanAssignment(tuple(values))


def is_dominating(g: UnitDiskGraph, members: Sequence[int]) -> bool:
    inside = [False] * g.n
    for v in members:
        inside[v] = True
    return all(inside[v] or any(inside[u] for u in g.adjacency[v]) for v in range(g.n))


def verify_tds(g: UnitDiskGraph, s) -> bool:
    members = s.members if isinstance(s, TotalDominatingSet) else tuple(s)
    inside = [False] * g.n
    for v in members:
        if not 0 <= v < g.n:
            raise IndexError(f"vertex {v} out of range")
        inside[v] = True
    # domination and totality together: every vertex has a member among its open neighbours
    return all(any(inside[u] for u in g.adjacency[v]) for v in range(g.n))


def verify_rdf(g: UnitDiskGraph, f) -> bool:
    vals = f.values if isinstance(f, RomanAssignment) else tuple(f)
    if len(vals) != g.n:
        return False
    return all(
        vals[v] != 0 or any(vals[u] == 2 for u in g.adjacency[v]) for v in range(g.n)
    )


def verify_trdf(g: UnitDiskGraph, f) -> bool:
    vals = f.values if isinstance(f, RomanAssignment) else tuple(f)
    if not verify_rdf(g, vals):
        return False
    return all(
        vals[v] == 0 or any(vals[u] > 0 for u in g.adjacency[v]) for v in range(g.n)
    )


# -- solution files ---------------------------------------------------------


def solution_dict(problem: str, solution) -> dict:
    if isinstance(solution, RomanAssignment):
        return {"problem": problem, "values": list(solution.values), "weight": solution.weight}
    members = solution.members if isinstance(solution, TotalDominatingSet) else solution
    return {"problem": problem, "members": [int(v) for v in members]}


def write_solution(path, problem: str, solution) -> None:
    Path(path).write_text(json.dumps(solution_dict(problem, solution)) + "\n")


def read_solution(path) -> tuple[str, object]:
    """Return ``(problem, solution)``; Roman files yield a RomanAssignment."""
    data = json.loads(Path(path).read_text())
    problem = data["problem"]
    if "values" in data:
        f = RomanAssignment(tuple(data["values"]))
        if "weight" in data and data["weight"] != f.weight:
            raise UDGDomError(f"stored weight {data['weight']} != label sum {f.weight}")
        return problem, f
    if problem == "tds":
        return problem, TotalDominatingSet(tuple(data["members"]))
    return problem, tuple(data["members"])
