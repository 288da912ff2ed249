"""Soft topologies on a finite carrier.

A finite soft topology is stored as its canonically ordered tuple of open
soft sets.  Because the family is finite, every soft point has a smallest
open neighborhood (the intersection of all opens containing it), and the
point-wise quantifiers "for every open set containing x_alpha" collapse to a
single test against that neighborhood.  Operators that exploit this take a
``mode`` argument; ``"definitional"`` quantifies over every open set instead
and is kept for cross-checking.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .core import (
    Carrier,
    SoftPoint,
    SoftSet,
    _check_same,
    all_soft_sets,
    canonical_key,
    iter_bits,
)
from .crisp import CrispTopology
from .errors import CarrierMismatch, InputError, PreconditionError, ResourceError

MAX_GENERATED = 1 << 16

FAST = "fast"
DEFINITIONAL = "definitional"


def _common_carrier(family: Sequence[SoftSet], carrier: Carrier | None = None) -> Carrier:
    if carrier is None:
        if not family:
            raise InputError("cannot infer a carrier from an empty family")
        carrier = family[0].carrier
    for s in family:
        if s.carrier is not carrier and s.carrier != carrier:
            raise CarrierMismatch(f"family member {s} is not over {carrier.describe()}")
    return carrier


@dataclass(frozen=True)
class TopologyVerdict:
    valid: bool
    axiom: str | None = None
    witness: tuple[SoftSet, ...] = ()
    # For a failed pairwise axiom, the offending intersection/union.
    result: SoftSet | None = None

    def describe(self) -> str:
        if self.valid:
            return "valid soft topology"
        parts = [f"violates {self.axiom}"]
        if self.witness:
            parts.append("witness " + ", ".join(str(w) for w in self.witness))
        if self.result is not None:
            parts.append(f"result {self.result} not in family")
        return "; ".join(parts)


def validate_topology(family: Sequence[SoftSet], carrier: Carrier | None = None) -> TopologyVerdict:
    """Check the soft topology axioms; the witness is the first offending pair."""
    carrier = _common_carrier(list(family), carrier)
    present = {s.mask for s in family}
    if 0 not in present:
        return TopologyVerdict(False, "contains null set")
    if carrier.full_mask not in present:
        return TopologyVerdict(False, "contains absolute set")
    ordered = sorted(present, key=canonical_key)
    for op_name, op in (("closed under intersection", int.__and__),
                        ("closed under union", int.__or__)):
        for a, b in combinations(ordered, 2):
            r = op(a, b)
            if r not in present:
                return TopologyVerdict(
                    False, op_name,
                    (SoftSet(carrier, a), SoftSet(carrier, b)),
                    SoftSet(carrier, r),
                )
    return TopologyVerdict(True)


@dataclass(frozen=True, eq=False)
class SoftTopology:
    """A validated soft topology.  Build with :meth:`from_opens` or the helpers below."""

    carrier: Carrier
    open_masks: tuple[int, ...]
    _open_set: frozenset = field(repr=False)

    @classmethod
    def _trusted(cls, carrier: Carrier, masks: Iterable[int]) -> "SoftTopology":
        uniq = frozenset(masks)
        return cls(carrier, tuple(sorted(uniq, key=canonical_key)), uniq)

    @classmethod
    def from_opens(cls, carrier: Carrier, opens: Iterable[SoftSet]) -> "SoftTopology":
        opens = list(opens)
        verdict = validate_topology(opens, carrier)
        if not verdict.valid:
            raise PreconditionError(f"not a soft topology: {verdict.describe()}")
        return cls._trusted(carrier, (s.mask for s in opens))

    def __eq__(self, other):
        if not isinstance(other, SoftTopology):
            return NotImplemented
        return self.carrier == other.carrier and self._open_set == other._open_set

    def __hash__(self):
        return hash((self.carrier, self._open_set))

    def __len__(self) -> int:
        return len(self.open_masks)

    def __contains__(self, s: SoftSet) -> bool:
        _check_same(s, self.carrier.null())
        return s.mask in self._open_set

    @property
    def opens(self) -> list[SoftSet]:
        return [SoftSet(self.carrier, m) for m in self.open_masks]

    @cached_property
    def closed_masks(self) -> frozenset:
        full = self.carrier.full_mask
        return frozenset(full & ~m for m in self.open_masks)

    def closed_sets(self) -> list[SoftSet]:
        return [SoftSet(self.carrier, m) for m in sorted(self.closed_masks, key=canonical_key)]

    def is_closed(self, s: SoftSet) -> bool:
        _check_same(s, self.carrier.null())
        return s.mask in self.closed_masks

    def is_open(self, s: SoftSet) -> bool:
        return s in self

    @cached_property
    def nbhd_masks(self) -> tuple[int, ...]:
        """Minimal open neighborhood of each cell, indexed by bit."""
        full = self.carrier.full_mask
        out = []
        for bit in range(self.carrier.cell_count):
            m = full
            for o in self.open_masks:
                if o >> bit & 1:
                    m &= o
            out.append(m)
        return tuple(out)

    def is_discrete(self) -> bool:
        return len(self.open_masks) == 1 << self.carrier.cell_count

    def is_indiscrete(self) -> bool:
        return len(self.open_masks) <= 2

    def describe(self) -> str:
        return "[" + ", ".join(str(s) for s in self.opens) + "]"


# Named topologies.

def discrete(carrier: Carrier) -> SoftTopology:
    return SoftTopology._trusted(carrier, range(1 << carrier.cell_count))


def indiscrete(carrier: Carrier) -> SoftTopology:
    return SoftTopology._trusted(carrier, (0, carrier.full_mask))


def included_point(carrier: Carrier, point: SoftPoint) -> SoftTopology:
    """Null set plus every soft set containing ``point``."""
    bit = 1 << point.bit(carrier)
    return SoftTopology._trusted(
        carrier, [0] + [m for m in range(1 << carrier.cell_count) if m & bit]
    )


def generate_from_subbase(
    carrier: Carrier, family: Iterable[SoftSet], cap: int = MAX_GENERATED
) -> SoftTopology:
    """Smallest soft topology containing ``family``.

    Finite intersections of the subbase (including the empty intersection,
    the absolute set) give a base; all unions of base members give the opens.
    """
    family = list(family)
    _common_carrier(family, carrier)
    base = {carrier.full_mask}
    for s in family:
        base |= {b & s.mask for b in base}
        if len(base) > cap:
            raise ResourceError(f"base exceeds cap of {cap} sets")
    opens = {0}
    for b in base:
        opens |= {o | b for o in opens}
        if len(opens) > cap:
            raise ResourceError(f"generated topology exceeds cap of {cap} sets")
    return SoftTopology._trusted(carrier, opens)


def _point_bit(t: SoftTopology, p: SoftPoint) -> int:
    c = t.carrier
    if not (0 <= p.param < len(c.parameters) and 0 <= p.element < len(c.universe)):
        raise InputError(f"soft point {p} out of range for {c.describe()}")
    return p.bit(c)


def minimal_nbhd(t: SoftTopology, p: SoftPoint) -> SoftSet:
    return SoftSet(t.carrier, t.nbhd_masks[_point_bit(t, p)])


def open_nbhds(t: SoftTopology, p: SoftPoint) -> list[SoftSet]:
    """Every open set containing ``p``."""
    bit = _point_bit(t, p)
    return [SoftSet(t.carrier, o) for o in t.open_masks if o >> bit & 1]


def closure(t: SoftTopology, a: SoftSet, mode: str = FAST) -> SoftSet:
    _check_same(a, t.carrier.null())
    if mode == DEFINITIONAL:
        m = t.carrier.full_mask
        for f in t.closed_masks:
            if a.mask & ~f == 0:
                m &= f
        return SoftSet(t.carrier, m)
    _check_mode(mode)
    m = 0
    for bit, nb in enumerate(t.nbhd_masks):
        if nb & a.mask:
            m |= 1 << bit
    return SoftSet(t.carrier, m)


def interior(t: SoftTopology, a: SoftSet, mode: str = FAST) -> SoftSet:
    _check_same(a, t.carrier.null())
    if mode == DEFINITIONAL:
        m = 0
        for o in t.open_masks:
            if o & ~a.mask == 0:
                m |= o
        return SoftSet(t.carrier, m)
    _check_mode(mode)
    m = 0
    for bit, nb in enumerate(t.nbhd_masks):
        if nb & ~a.mask == 0:
            m |= 1 << bit
    return SoftSet(t.carrier, m)


def derived_set(t: SoftTopology, a: SoftSet, mode: str = FAST) -> SoftSet:
    """Limit soft points of ``a``: every open nbhd of x_alpha meets ``a`` outside x_alpha."""
    _check_same(a, t.carrier.null())
    _check_mode(mode)
    m = 0
    for bit in range(t.carrier.cell_count):
        rest = a.mask & ~(1 << bit)
        if mode == FAST:
            hit = t.nbhd_masks[bit] & rest != 0
        else:
            hit = all(o & rest for o in t.open_masks if o >> bit & 1)
        if hit:
            m |= 1 << bit
    return SoftSet(t.carrier, m)


def _check_mode(mode: str) -> None:
    if mode not in (FAST, DEFINITIONAL):
        raise InputError(f"unknown mode {mode!r}; expected 'fast' or 'definitional'")


def is_base(t: SoftTopology, base: Iterable[SoftSet]) -> bool:
    """True iff every open set is a union of members of ``base``.

    The empty union is the null set, so a base need not contain it.
    """
    masks = []
    for b in base:
        if b not in t:
            raise PreconditionError(f"base member {b} is not open")
        masks.append(b.mask)
    for o in t.open_masks:
        cover = 0
        for b in masks:
            if b & ~o == 0:
                cover |= b
        if cover != o:
            return False
    return True


def slice_topology(family, param: str) -> CrispTopology:
    """The crisp family ``{F(param) : F in family}`` on the universe.

    ``family`` may be a :class:`SoftTopology` or any list of soft sets.
    """
    if isinstance(family, SoftTopology):
        carrier, sets = family.carrier, family.opens
    else:
        sets = list(family)
        carrier = _common_carrier(sets)
    i = carrier.param_index(param)
    opens = {frozenset(carrier.universe[j] for j in s.fiber_indices(i)) for s in sets}
    return CrispTopology(frozenset(carrier.universe), frozenset(opens))


def graph_topology(t: SoftTopology) -> CrispTopology:
    """Crisp topology on the cell grid made of the graphs of the opens."""
    c = t.carrier
    ground = frozenset((p, x) for p in c.parameters for x in c.universe)
    opens = frozenset(
        frozenset(c.cell_labels(b) for b in iter_bits(o)) for o in t.open_masks
    )
    return CrispTopology(ground, opens)


def all_topologies_brute(carrier: Carrier) -> list[SoftTopology]:
    """Every soft topology by filtering all families of soft sets.

    Only feasible for ``cell_count <= 2`` (``2**(2**cells)`` families); used to
    cross-check the preorder enumeration in the harness.
    """
    n = carrier.cell_count
    if n > 2:
        raise ResourceError("brute-force topology enumeration is capped at 2 cells")
    sets = list(all_soft_sets(carrier))
    found = []
    for choice in range(1 << len(sets)):
        fam = [s for k, s in enumerate(sets) if choice >> k & 1]
        if fam and validate_topology(fam, carrier).valid:
            found.append(SoftTopology._trusted(carrier, (s.mask for s in fam)))
    return found
