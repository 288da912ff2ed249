"""Soft ideals on a finite carrier.

A soft ideal is a nonempty family closed under soft unions and soft subsets.
Over a finite carrier the union of all members is itself a member and
dominates every member, so each ideal is the down-set of one soft set.  We
store only that top element; membership is a subset test.

Countable-union closure (sigma-ideals) adds nothing here: a finite family of
soft sets has only finitely many distinct unions.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .core import Carrier, SoftSet, _check_same, canonical_key, iter_bits
from .crisp import CrispIdeal
from .errors import CarrierMismatch, InputError


@dataclass(frozen=True)
class SoftIdeal:
    carrier: Carrier
    top: SoftSet

    def __post_init__(self):
        _check_same(self.top, self.carrier.null())

    def __contains__(self, a: SoftSet) -> bool:
        return ideal_contains(self, a)

    @property
    def top_mask(self) -> int:
        return self.top.mask

    def members(self) -> list[SoftSet]:
        """Every member, in canonical order; ``2**|top|`` sets."""
        bits = list(iter_bits(self.top.mask))
        out = []
        for r in range(len(bits) + 1):
            for combo in combinations(bits, r):
                m = 0
                for b in combo:
                    m |= 1 << b
                out.append(m)
        return [SoftSet(self.carrier, m) for m in sorted(out, key=canonical_key)]

    def is_trivial(self) -> bool:
        return self.top.mask == 0

    def is_full(self) -> bool:
        return self.top.mask == self.carrier.full_mask

    def is_sigma(self) -> bool:
        """Always true: on a finite carrier every soft ideal is a soft sigma-ideal."""
        return True


@dataclass(frozen=True)
class IdealVerdict:
    valid: bool
    reason: str | None = None
    witness: tuple[SoftSet, ...] = ()
    top: SoftSet | None = None

    def describe(self) -> str:
        if self.valid:
            return f"valid soft ideal, top {self.top}"
        text = f"not a soft ideal: {self.reason}"
        if self.witness:
            text += "; witness " + ", ".join(str(w) for w in self.witness)
        return text


def trivial_ideal(carrier: Carrier) -> SoftIdeal:
    return SoftIdeal(carrier, carrier.null())


def full_ideal(carrier: Carrier) -> SoftIdeal:
    return SoftIdeal(carrier, carrier.absolute())


def principal(top: SoftSet) -> SoftIdeal:
    return SoftIdeal(top.carrier, top)


def ideal_from_generators(carrier: Carrier, gens: Iterable[SoftSet]) -> SoftIdeal:
    """Smallest soft ideal containing ``gens``; its top is their union."""
    m = 0
    for g in gens:
        if g.carrier is not carrier and g.carrier != carrier:
            raise CarrierMismatch(f"generator {g} is not over {carrier.describe()}")
        m |= g.mask
    return SoftIdeal(carrier, SoftSet(carrier, m))


def validate_ideal_family(family: Sequence[SoftSet], carrier: Carrier | None = None) -> IdealVerdict:
    """Check union- and subset-closure of an explicit family.

    On success the verdict carries the top element (the union of all members).
    Down-closure failures report ``(member, missing subset)``; union failures
    report the offending pair.
    """
    family = list(family)
    if carrier is None:
        if not family:
            return IdealVerdict(False, "family is empty")
        carrier = family[0].carrier
    for s in family:
        if s.carrier is not carrier and s.carrier != carrier:
            raise CarrierMismatch(f"family member {s} is not over {carrier.describe()}")
    if not family:
        return IdealVerdict(False, "family is empty")
    present = {s.mask for s in family}
    ordered = sorted(present, key=canonical_key)
    if 0 not in present:
        return IdealVerdict(False, "null set missing (not closed under soft subsets)",
                            (carrier.null(),))
    for a, b in combinations(ordered, 2):
        if a | b not in present:
            return IdealVerdict(False, "not closed under soft unions",
                                (SoftSet(carrier, a), SoftSet(carrier, b)))
    for a in ordered:
        # Removing one cell at a time suffices: the family is then closed
        # under all subsets by induction on size.
        for bit in iter_bits(a):
            sub = a & ~(1 << bit)
            if sub not in present:
                return IdealVerdict(False, "not closed under soft subsets",
                                    (SoftSet(carrier, a), SoftSet(carrier, sub)))
    top = 0
    for m in present:
        top |= m
    return IdealVerdict(True, top=SoftSet(carrier, top))


def ideal_from_family(family: Sequence[SoftSet], carrier: Carrier | None = None) -> SoftIdeal:
    verdict = validate_ideal_family(family, carrier)
    if not verdict.valid:
        raise InputError(verdict.describe())
    return principal(verdict.top)


def ideal_contains(ideal: SoftIdeal, a: SoftSet) -> bool:
    _check_same(a, ideal.top)
    return a.mask & ~ideal.top.mask == 0


def ideal_join(i: SoftIdeal, j: SoftIdeal) -> SoftIdeal:
    """``{A u B : A in I, B in J}``."""
    return principal(i.top | j.top)


def ideal_meet(i: SoftIdeal, j: SoftIdeal) -> SoftIdeal:
    return principal(i.top & j.top)


def slice_ideal(ideal: SoftIdeal, param: str) -> CrispIdeal:
    c = ideal.carrier
    k = c.param_index(param)
    top = frozenset(c.universe[x] for x in ideal.top.fiber_indices(k))
    return CrispIdeal(frozenset(c.universe), top)
