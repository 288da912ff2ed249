"""Crisp (ordinary) finite topologies and ideals.

These are deliberately plain: points are arbitrary hashables and sets are
``frozenset`` objects.  They serve as slices of soft structures and as the
cell-grid side of the graph correspondence, and the ideal-topology oracle in
:mod:`softcluster.harness.oracle` is written against them only.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Hashable, Iterable


def _fs(x: Iterable) -> frozenset:
    return x if isinstance(x, frozenset) else frozenset(x)


@dataclass(frozen=True)
class CrispTopology:
    ground: frozenset
    opens: frozenset  # frozenset of frozensets

    @classmethod
    def of(cls, ground: Iterable[Hashable], opens: Iterable[Iterable[Hashable]]) -> "CrispTopology":
        return cls(_fs(ground), frozenset(_fs(o) for o in opens))

    def violation(self) -> str | None:
        """Name of the first violated axiom, or ``None`` when valid."""
        if frozenset() not in self.opens:
            return "missing empty set"
        if self.ground not in self.opens:
            return "missing ground set"
        for u in self.opens:
            if not u <= self.ground:
                return "open set outside ground"
        for u, v in combinations(self.opens, 2):
            if u & v not in self.opens:
                return "not closed under intersection"
            if u | v not in self.opens:
                return "not closed under union"
        return None

    def is_valid(self) -> bool:
        return self.violation() is None

    def closed_sets(self) -> frozenset:
        return frozenset(self.ground - u for u in self.opens)

    def closure(self, a: Iterable) -> frozenset:
        a = _fs(a)
        result = self.ground
        for f in self.closed_sets():
            if a <= f:
                result = result & f
        return result

    def sorted_opens(self) -> list[tuple]:
        return sorted((tuple(sorted(o, key=repr)) for o in self.opens), key=lambda t: (len(t), t))


@dataclass(frozen=True)
class CrispIdeal:
    """A principal ideal on a finite ground set: everything below ``top``."""

    ground: frozenset
    top: frozenset

    @classmethod
    def of(cls, ground: Iterable[Hashable], top: Iterable[Hashable]) -> "CrispIdeal":
        return cls(_fs(ground), _fs(top))

    def __contains__(self, a) -> bool:
        return _fs(a) <= self.top

    def members(self) -> frozenset:
        items = sorted(self.top, key=repr)
        return frozenset(
            frozenset(c) for r in range(len(items) + 1) for c in combinations(items, r)
        )
