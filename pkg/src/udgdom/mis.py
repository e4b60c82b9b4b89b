"""Greedy maximal independent set with per-cell member stores."""

from __future__ import annotations

from dataclasses import dataclass, field

from .geometry import Cell, UnitDiskGraph, block_around, within


@dataclass(frozen=True, eq=False)
class IndependentSet:
    members: tuple[int, ...]
    graph: UnitDiskGraph = field(repr=False)
    # cell -> selected members lying in that cell, in selection order
    cells: dict[Cell, tuple[int, ...]] = field(repr=False, default_factory=dict)

    def __len__(self):
        return len(self.members)

    def __contains__(self, v):
        return v in self._memberset

    def __iter__(self):
        return iter(self.members)

    @property
    def _memberset(self) -> frozenset:
        s = self.__dict__.get("_ms")
        if s is None:
            s = frozenset(self.members)
            object.__setattr__(self, "_ms", s)
        return s

    def members_near(self, v: int) -> list[int]:
        """Selected members adjacent to ``v``, found by probing the 3x3 block."""
        g = self.graph
        p = g.point(v)
        out = []
        for c in block_around(g.cells[v]):
            for d in self.cells.get(c, ()):
                if d != v and within(p, g.point(d), g.radius):
                    out.append(d)
        out.sort()
        return out


def maximal_independent_set(g: UnitDiskGraph) -> IndependentSet:
    """Scan vertices by ascending index and keep each one not yet dominated.

    A candidate is tested only against members stored in the nine cells
    around it; anything farther away is at distance greater than the radius.
    """
    store: dict[Cell, list[int]] = {}
    members = []
    for v in range(g.n):
        p = g.point(v)
        blocked = False
        for c in block_around(g.cells[v]):
            for d in store.get(c, ()):
                if within(p, g.point(d), g.radius):
                    blocked = True
                    break
            if blocked:
                break
        if not blocked:
            members.append(v)
            store.setdefault(g.cells[v], []).append(v)
    return IndependentSet(
        members=tuple(members),
        graph=g,
        cells={c: tuple(vs) for c, vs in sorted(store.items())},
    )


def check_independent_maximal(g: UnitDiskGraph, s) -> bool:
    members = sorted(set(s))
    if any(not 0 <= v < g.n for v in members):
        raise IndexError("member index out of range")
    inside = [False] * g.n
    for v in members:
        inside[v] = True
    for v in members:
        if any(inside[u] for u in g.adjacency[v]):
            return False
    for v in range(g.n):
        if not inside[v] and not any(inside[u] for u in g.adjacency[v]):
            return False
    return True


def mis_invariant_violations(g: UnitDiskGraph, s: IndependentSet) -> list[str]:
    """Packing bounds every independent set of a unit disk graph obeys.

    Each outside vertex sees at most five members, and each radius-sized
    cell holds at most three members. Returns human-readable violations.
    """
    problems = []
    for u in range(g.n):
        if u in s:
            continue
        k = sum(1 for w in g.adjacency[u] if w in s)
        if k > 5:
            problems.append(f"vertex {u} has {k} independent neighbours")
    per_cell: dict[Cell, int] = {}
    for v in s.members:
        per_cell[g.cells[v]] = per_cell.get(g.cells[v], 0) + 1
    for c, k in per_cell.items():
        if k > 3:
            problems.append(f"cell {c} holds {k} independent members")
    return problems
