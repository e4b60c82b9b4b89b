"""Exponential-time exact solvers for small graphs.

All four searches walk vertices in index order and try the smallest
choice first (include before exclude for sets, labels 0, 1, 2 for Roman
functions). Pruning only discards branches that cannot beat the incumbent
strictly, so the first optimum reached is the tie-break winner: the
lexicographically smallest member list or label vector.
"""

from __future__ import annotations

from dataclasses import dataclass

from .approx import (
    RomanAssignment,
    TotalDominatingSet,
    require_no_isolated,
    tds_udg_sc,
    trdf_udg_sc,
)
from .errors import SizeLimitError
from .geometry import UnitDiskGraph
from .mis import maximal_independent_set

DS_LIMIT = 20
TDS_LIMIT = 20
RDF_LIMIT = 14
TRDF_LIMIT = 14


@dataclass(frozen=True)
class ExactResult:
    objective: int
    witness: object
    explored: int


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _check_size(g, limit):
    if g.n > limit:
        raise SizeLimitError(g.n, limit, "graph")


class _Masks:
    """Per-graph bitmask tables shared by the searches."""

    def __init__(self, g: UnitDiskGraph, closed: bool):
        n = g.n
        self.n = n
        self.full = (1 << n) - 1
        self.open = g.neighbor_masks()
        self.cover = [m | (1 << v) for v, m in enumerate(self.open)] if closed else self.open
        # fin[i]: vertices whose whole (closed) neighbourhood has index < i
        last = [max(m.bit_length() - 1, v) for v, m in enumerate(self.open)]
        self.fin = [0] * (n + 1)
        for u, li in enumerate(last):
            for i in range(li + 1, n + 1):
                self.fin[i] |= 1 << u
        self.maxcover = [1] * (n + 1)
        for i in range(n - 1, -1, -1):
            self.maxcover[i] = max(self.maxcover[i + 1], _popcount(self.cover[i]))


def _min_cover_set(g: UnitDiskGraph, closed: bool, upper: int) -> tuple[tuple[int, ...], int]:
    t = _Masks(g, closed)
    n, full, cover, fin, maxcover = t.n, t.full, t.cover, t.fin, t.maxcover
    best = [upper + 1, None]
    explored = [0]
    chosen: list[int] = []

    def search(i, dominated):
        explored[0] += 1
        if dominated == full:
            if len(chosen) < best[0]:
                best[0] = len(chosen)
                best[1] = tuple(chosen)
            return
        if i == n:
            return
        rest = full & ~dominated
        if rest & fin[i]:
            return
        if len(chosen) + -(-_popcount(rest) // maxcover[i]) >= best[0]:
            return
        if cover[i] & rest:
            chosen.append(i)
            search(i + 1, dominated | cover[i])
            chosen.pop()
        search(i + 1, dominated)

    search(0, 0)
    return best[1], explored[0]


def exact_min_ds(g: UnitDiskGraph, limit: int = DS_LIMIT) -> ExactResult:
    _check_size(g, limit)
    upper = len(maximal_independent_set(g))
    witness, explored = _min_cover_set(g, closed=True, upper=upper)
    return ExactResult(len(witness), witness, explored)


def exact_min_tds(g: UnitDiskGraph, limit: int = TDS_LIMIT) -> ExactResult:
    require_no_isolated(g)
    _check_size(g, limit)
    upper = len(tds_udg_sc(g))
    witness, explored = _min_cover_set(g, closed=False, upper=upper)
    return ExactResult(len(witness), TotalDominatingSet(witness), explored)


def _min_roman(g: UnitDiskGraph, total: bool, seed: RomanAssignment, tie_break_min_v1: bool):
    t = _Masks(g, closed=True)
    n, full, nb, fin, maxcover = t.n, t.full, t.open, t.fin, t.maxcover
    # incumbent key is (weight, |V1|) when tie-breaking on V1, else (weight, 0)
    if tie_break_min_v1:
        best_key = [(seed.weight, seed.v1_count + 1)]
    else:
        best_key = [(seed.weight + 1, 0)]
    best = [None]
    explored = [0]
    labels = [0] * n

    def bound_ok(w, v1):
        bw, bv = best_key[0]
        return w < bw or (tie_break_min_v1 and w == bw and v1 < bv)

    def search(i, pos, dom, tot, w, v1):
        explored[0] += 1
        done = fin[i]
        if done & ~dom:
            return
        if total and done & pos & ~tot:
            return
        if dom == full and (not total or not pos & ~tot):
            if bound_ok(w, v1):
                best_key[0] = (w, v1 if tie_break_min_v1 else 0)
                best[0] = tuple(labels[:i]) + (0,) * (n - i)
            return
        if i == n:
            return
        needy = _popcount(full & ~dom)
        lb = -(-2 * needy // maxcover[i]) if maxcover[i] >= 2 else needy
        if total and pos & ~tot:
            lb = max(lb, 1)
        if not bound_ok(w + lb, v1):
            return
        bit = 1 << i
        labels[i] = 0
        search(i + 1, pos, dom, tot, w, v1)
        labels[i] = 1
        search(i + 1, pos | bit, dom | bit, tot | nb[i], w + 1, v1 + 1)
        labels[i] = 2
        search(i + 1, pos | bit, dom | bit | nb[i], tot | nb[i], w + 2, v1)
        labels[i] = 0

    search(0, 0, 0, 0, 0, 0)
    f = RomanAssignment(best[0])
    return ExactResult(f.weight, f, explored[0])


def exact_min_trdf(
    g: UnitDiskGraph, tie_break_min_v1: bool = False, limit: int = TRDF_LIMIT
) -> ExactResult:
    """Minimum-weight total Roman dominating function.

    With ``tie_break_min_v1`` the optimum also minimises the number of
    1-labelled vertices before falling back to the label-vector order.
    """
    require_no_isolated(g)
    _check_size(g, limit)
    return _min_roman(g, True, trdf_udg_sc(g), tie_break_min_v1)


def exact_min_rdf(g: UnitDiskGraph, limit: int = RDF_LIMIT) -> ExactResult:
    _check_size(g, limit)
    mis = maximal_independent_set(g)
    if 2 * len(mis) < g.n:
        seed = [0] * g.n
        for v in mis:
            seed[v] = 2
    else:
        seed = [1] * g.n
    return _min_roman(g, False, RomanAssignment(tuple(seed)), False)
