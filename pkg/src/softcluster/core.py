"""Finite soft sets over a fixed carrier.

A soft set over ``(X, Omega)`` assigns a subset of the universe to every
parameter.  Over a finite carrier this is the same thing as a subset of the
cell grid ``Omega x X``, so a :class:`SoftSet` is stored as an integer bitmask.
Cell ``(i, j)`` (parameter ``i``, element ``j``) lives at bit ``i * |X| + j``,
which makes the canonical cell order parameter-major.

Soft sets are ordered canonically by comparing their sorted cell-index lists
lexicographically (``canonical_key``); ``all_soft_sets`` enumerates them in that
order, so "first found" always means first in this order.
"""

from __future__ import annotations

import re
from functools import lru_cache
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import CarrierMismatch, InputError, ResourceError

MAX_CELLS = 64
MAX_EXHAUSTIVE_CELLS = 16


@dataclass(frozen=True)
class Carrier:
    """The universe ``X`` and parameter list ``Omega``."""

    universe: tuple[str, ...]
    parameters: tuple[str, ...]
    max_cells: int = field(default=MAX_CELLS, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "universe", tuple(str(u) for u in self.universe))
        object.__setattr__(self, "parameters", tuple(str(p) for p in self.parameters))
        if not self.universe:
            raise InputError("universe must contain at least one element")
        if not self.parameters:
            raise InputError("parameter list must contain at least one parameter")
        for kind, labels in (("element", self.universe), ("parameter", self.parameters)):
            seen = set()
            for label in labels:
                if label in seen:
                    raise InputError(f"duplicate {kind} label {label!r}")
                seen.add(label)
        if self.max_cells > MAX_CELLS:
            raise ResourceError(f"cell cap {self.max_cells} exceeds hard limit {MAX_CELLS}")
        if self.cell_count > self.max_cells:
            raise ResourceError(
                f"carrier has {self.cell_count} cells, cap is {self.max_cells}"
            )

    @classmethod
    def of_size(cls, n_parameters: int, n_elements: int) -> "Carrier":
        """Carrier with generated labels ``a0..`` for parameters, ``x0..`` for elements."""
        return cls(
            tuple(f"x{j}" for j in range(n_elements)),
            tuple(f"a{i}" for i in range(n_parameters)),
        )

    @property
    def cell_count(self) -> int:
        return len(self.universe) * len(self.parameters)

    @property
    def full_mask(self) -> int:
        return (1 << self.cell_count) - 1

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.parameters), len(self.universe)

    def param_index(self, label) -> int:
        try:
            return self.parameters.index(str(label))
        except ValueError:
            raise InputError(f"unknown parameter label {label!r}") from None

    def element_index(self, label) -> int:
        try:
            return self.universe.index(str(label))
        except ValueError:
            raise InputError(f"unknown element label {label!r}") from None

    def cell(self, param: int, element: int) -> int:
        return param * len(self.universe) + element

    def cell_coords(self, bit: int) -> tuple[int, int]:
        return divmod(bit, len(self.universe))

    def cell_labels(self, bit: int) -> tuple[str, str]:
        i, j = self.cell_coords(bit)
        return self.parameters[i], self.universe[j]

    def fiber_mask(self, param: int) -> int:
        """Mask of the row of cells belonging to parameter ``param``."""
        n = len(self.universe)
        return ((1 << n) - 1) << (param * n)

    def null(self) -> "SoftSet":
        return SoftSet(self, 0)

    def absolute(self) -> "SoftSet":
        return SoftSet(self, self.full_mask)

    def points(self) -> list["SoftPoint"]:
        return [
            SoftPoint(i, j)
            for i in range(len(self.parameters))
            for j in range(len(self.universe))
        ]

    def point(self, param, element) -> "SoftPoint":
        return SoftPoint(self.param_index(param), self.element_index(element))

    def describe(self) -> str:
        return f"X={{{', '.join(self.universe)}}}, Omega={{{', '.join(self.parameters)}}}"


@dataclass(frozen=True, order=True)
class SoftPoint:
    """The soft point ``x_alpha``: a single cell of the grid, by index."""

    param: int
    element: int

    def bit(self, carrier: Carrier) -> int:
        return carrier.cell(self.param, self.element)

    def as_set(self, carrier: Carrier) -> "SoftSet":
        if not (0 <= self.param < len(carrier.parameters)
                and 0 <= self.element < len(carrier.universe)):
            raise InputError(f"soft point {self} out of range for {carrier.describe()}")
        return SoftSet(carrier, 1 << self.bit(carrier))

    def label(self, carrier: Carrier) -> str:
        return f"{carrier.universe[self.element]}_{carrier.parameters[self.param]}"


def _check_same(a: "SoftSet", b: "SoftSet") -> None:
    if a.carrier is not b.carrier and a.carrier != b.carrier:
        raise CarrierMismatch(
            f"soft sets over different carriers: {a.carrier.describe()} vs {b.carrier.describe()}"
        )


@dataclass(frozen=True)
class SoftSet:
    carrier: Carrier
    mask: int

    def __post_init__(self):
        if self.mask < 0 or self.mask & ~self.carrier.full_mask:
            raise InputError(f"mask {self.mask:#x} has cells outside the grid")

    # Boolean algebra, fiber-wise.
    def __or__(self, other: "SoftSet") -> "SoftSet":
        _check_same(self, other)
        return SoftSet(self.carrier, self.mask | other.mask)

    def __and__(self, other: "SoftSet") -> "SoftSet":
        _check_same(self, other)
        return SoftSet(self.carrier, self.mask & other.mask)

    def __sub__(self, other: "SoftSet") -> "SoftSet":
        _check_same(self, other)
        return SoftSet(self.carrier, self.mask & ~other.mask)

    def __invert__(self) -> "SoftSet":
        return SoftSet(self.carrier, self.carrier.full_mask & ~self.mask)

    def __le__(self, other: "SoftSet") -> bool:
        _check_same(self, other)
        return self.mask & ~other.mask == 0

    def __ge__(self, other: "SoftSet") -> bool:
        return other <= self

    def __lt__(self, other: "SoftSet") -> bool:
        return self <= other and self.mask != other.mask

    def __gt__(self, other: "SoftSet") -> bool:
        return other < self

    def __contains__(self, point: SoftPoint) -> bool:
        return bool(self.mask >> point.bit(self.carrier) & 1)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __bool__(self) -> bool:
        return self.mask != 0

    def is_null(self) -> bool:
        return self.mask == 0

    def is_absolute(self) -> bool:
        return self.mask == self.carrier.full_mask

    def points(self) -> list[SoftPoint]:
        n = len(self.carrier.universe)
        return [SoftPoint(*divmod(b, n)) for b in iter_bits(self.mask)]

    def fiber_indices(self, param: int) -> list[int]:
        n = len(self.carrier.universe)
        row = (self.mask >> (param * n)) & ((1 << n) - 1)
        return list(iter_bits(row))

    def fibers(self) -> dict[str, frozenset[str]]:
        c = self.carrier
        return {
            p: frozenset(c.universe[j] for j in self.fiber_indices(i))
            for i, p in enumerate(c.parameters)
        }

    def to_fiber_map(self) -> dict[str, list[str]]:
        """Fiber map in carrier order; the inverse of :func:`make_soft_set`."""
        c = self.carrier
        return {
            p: [c.universe[j] for j in self.fiber_indices(i)]
            for i, p in enumerate(c.parameters)
        }

    def __str__(self) -> str:
        parts = []
        for p, elems in self.to_fiber_map().items():
            parts.append(f"{p}: {{{', '.join(elems)}}}")
        return "{" + ", ".join(parts) + "}"


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def make_soft_set(carrier: Carrier, fiber_map: Mapping[str, Iterable[str]]) -> SoftSet:
    """Build a soft set from ``{parameter: [elements]}``; absent parameters get empty fibers."""
    mask = 0
    for param, elems in fiber_map.items():
        i = carrier.param_index(param)
        if isinstance(elems, str):
            raise InputError(f"fiber of {param!r} must be a list of labels, got a string")
        for e in elems:
            mask |= 1 << carrier.cell(i, carrier.element_index(e))
    return SoftSet(carrier, mask)


def union(a: SoftSet, b: SoftSet) -> SoftSet:
    return a | b


def intersect(a: SoftSet, b: SoftSet) -> SoftSet:
    return a & b


def difference(a: SoftSet, b: SoftSet) -> SoftSet:
    return a - b


def complement(a: SoftSet) -> SoftSet:
    return ~a


def is_subset(a: SoftSet, b: SoftSet) -> bool:
    return a <= b


def fiber(a: SoftSet, param: str) -> frozenset[str]:
    i = a.carrier.param_index(param)
    return frozenset(a.carrier.universe[j] for j in a.fiber_indices(i))


def union_all(carrier: Carrier, sets: Iterable[SoftSet]) -> SoftSet:
    mask = 0
    for s in sets:
        _check_same(s, carrier.null())
        mask |= s.mask
    return SoftSet(carrier, mask)


def intersect_all(carrier: Carrier, sets: Iterable[SoftSet]) -> SoftSet:
    """Intersection of a family; the empty family gives the absolute set."""
    mask = carrier.full_mask
    for s in sets:
        _check_same(s, carrier.null())
        mask &= s.mask
    return SoftSet(carrier, mask)


# Graph encoding: a soft set is the graph of its set-valued map Omega -> P(X).

CellGraph = frozenset  # frozenset of (parameter label, element label) pairs


def graph_encode(a: SoftSet) -> CellGraph:
    return frozenset(a.carrier.cell_labels(b) for b in iter_bits(a.mask))


def graph_decode(graph: Iterable[tuple[str, str]], carrier: Carrier) -> SoftSet:
    mask = 0
    for param, elem in graph:
        try:
            i = carrier.param_index(param)
            j = carrier.element_index(elem)
        except InputError as exc:
            raise InputError(f"cell ({param}, {elem}) lies outside the grid: {exc}") from None
        mask |= 1 << carrier.cell(i, j)
    return SoftSet(carrier, mask)


def all_soft_sets(carrier: Carrier, cap: int = MAX_EXHAUSTIVE_CELLS) -> Iterator[SoftSet]:
    """Every soft set over ``carrier`` in canonical order."""
    if carrier.cell_count > cap:
        raise ResourceError(
            f"exhaustive enumeration needs cell_count <= {cap}, carrier has {carrier.cell_count}"
        )
    for m in canonical_masks(carrier.cell_count):
        yield SoftSet(carrier, m)


def canonical_key(mask: int) -> tuple[int, ...]:
    return tuple(iter_bits(mask))


@lru_cache(maxsize=None)
def canonical_masks(n_cells: int) -> tuple[int, ...]:
    """All ``2**n_cells`` masks in canonical order."""
    return tuple(sorted(range(1 << n_cells), key=canonical_key))


_LITERAL_RE = re.compile(r"\s*([^:{},\s]+)\s*:\s*\{([^{}]*)\}\s*")


def parse_soft_set(carrier: Carrier, text: str) -> SoftSet:
    """Parse the textual form ``{a: {x, y}, b: {}}`` produced by ``str(SoftSet)``."""
    body = text.strip()
    if not (body.startswith("{") and body.endswith("}")):
        raise InputError(f"soft set literal must be enclosed in braces: {text!r}")
    body = body[1:-1]
    fibers: dict[str, list[str]] = {}
    pos = 0
    while pos < len(body):
        if not body[pos:].strip():
            break
        m = _LITERAL_RE.match(body, pos)
        if not m:
            raise InputError(f"malformed soft set literal at position {pos + 1}: {text!r}")
        elems = [e.strip() for e in m.group(2).split(",") if e.strip()]
        fibers.setdefault(m.group(1), []).extend(elems)
        pos = m.end()
        if pos < len(body):
            if body[pos] != ",":
                raise InputError(f"expected ',' at position {pos + 1}: {text!r}")
            pos += 1
    return make_soft_set(carrier, fibers)


def sort_sets(sets: Iterable[SoftSet]) -> list[SoftSet]:
    return sorted(sets, key=lambda s: canonical_key(s.mask))


def masks(sets: Sequence[SoftSet]) -> list[int]:
    return [s.mask for s in sets]
