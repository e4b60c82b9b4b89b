"""Set cover built from an independent set, plus greedy and exact solvers."""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import IsolatedMemberError, SizeLimitError, UncoverableError
from .geometry import UnitDiskGraph
from .mis import IndependentSet


@dataclass(frozen=True)
class Subset:
    owner: int
    members: tuple[int, ...]


@dataclass(frozen=True)
class SetCoverInstance:
    universe: tuple[int, ...]
    subsets: tuple[Subset, ...]

    def __post_init__(self):
        u = set(self.universe)
        for s in self.subsets:
            if not u.issuperset(s.members):
                raise UncoverableError(f"subset of owner {s.owner} leaves the universe")

    @classmethod
    def from_sets(cls, universe: Sequence, subsets: Sequence[Sequence]) -> "SetCoverInstance":
        """Plain instance; owners default to subset positions."""
        return cls(
            tuple(universe),
            tuple(Subset(i, tuple(sorted(s))) for i, s in enumerate(subsets)),
        )

    def max_subset_size(self) -> int:
        return max((len(s.members) for s in self.subsets), default=0)

    def _uncovered_by_family(self):
        covered = set()
        for s in self.subsets:
            covered.update(s.members)
        return [e for e in self.universe if e not in covered]


@dataclass(frozen=True)
class CoverSelection:
    chosen: tuple[int, ...]
    owners: tuple[int, ...]

    def __len__(self):
        return len(self.chosen)


def harmonic(m: int) -> Fraction:
    return sum((Fraction(1, k) for k in range(1, m + 1)), Fraction(0))


def build_cover_instance(g: UnitDiskGraph, d: IndependentSet) -> SetCoverInstance:
    """One subset per vertex outside ``d``: its neighbours inside ``d``."""
    lonely = [v for v in d.members if not g.adjacency[v]]
    if lonely:
        raise IsolatedMemberError(lonely)
    subsets = []
    for u in range(g.n):
        if u in d:
            continue
        subsets.append(Subset(u, tuple(d.members_near(u))))
    inst = SetCoverInstance(tuple(d.members), tuple(subsets))
    missing = inst._uncovered_by_family()
    if missing:
        raise UncoverableError(f"members {missing} have no neighbour outside the set")
    return inst


def _selection(inst, chosen):
    chosen = tuple(chosen)
    return CoverSelection(chosen, tuple(inst.subsets[i].owner for i in chosen))


def greedy_set_cover(inst: SetCoverInstance) -> CoverSelection:
    """Pick the subset covering most uncovered elements until done.

    Ties go to the lowest subset position. Gains are kept in a lazy heap;
    a popped entry is accepted only once its stored gain is current.
    """
    missing = inst._uncovered_by_family()
    if missing:
        raise UncoverableError(f"elements {missing} are in no subset")
    uncovered = set(inst.universe)
    heap = [(-len(s.members), i) for i, s in enumerate(inst.subsets) if s.members]
    heapq.heapify(heap)
    chosen = []
    while uncovered:
        neg, i = heapq.heappop(heap)
        gain = sum(1 for e in inst.subsets[i].members if e in uncovered)
        if gain == -neg:
            chosen.append(i)
            uncovered.difference_update(inst.subsets[i].members)
        elif gain:
            heapq.heappush(heap, (-gain, i))
    return _selection(inst, chosen)


def exact_set_cover(inst: SetCoverInstance, limit: int = 20) -> CoverSelection:
    """Minimum-cardinality cover by include-first depth-first search.

    Subsets are explored in position order, so among optimal covers the one
    with the lexicographically smallest position list is found first.
    """
    m = len(inst.subsets)
    if m > limit:
        raise SizeLimitError(m, limit, "subset family")
    missing = inst._uncovered_by_family()
    if missing:
        raise UncoverableError(f"elements {missing} are in no subset")
    index = {e: k for k, e in enumerate(inst.universe)}
    full = (1 << len(inst.universe)) - 1
    masks = []
    for s in inst.subsets:
        mk = 0
        for e in s.members:
            mk |= 1 << index[e]
        masks.append(mk)
    # what positions i.. can still cover
    reach = [0] * (m + 1)
    for i in range(m - 1, -1, -1):
        reach[i] = reach[i + 1] | masks[i]
    biggest = [0] * (m + 1)
    for i in range(m - 1, -1, -1):
        biggest[i] = max(biggest[i + 1], bin(masks[i]).count("1"))

    best: list = [None]
    best_size = [m + 1]
    path: list[int] = []

    def search(i, covered):
        if covered == full:
            if len(path) < best_size[0]:
                best_size[0] = len(path)
                best[0] = tuple(path)
            return
        if i == m:
            return
        rest = full & ~covered
        if rest & ~reach[i]:
            return
        need = -(-bin(rest).count("1") // biggest[i]) if biggest[i] else m + 1
        if len(path) + need >= best_size[0]:
            return
        if masks[i] & rest:
            path.append(i)
            search(i + 1, covered | masks[i])
            path.pop()
        search(i + 1, covered)

    if full == 0:
        return CoverSelection((), ())
    search(0, 0)
    return _selection(inst, best[0])
