"""Enumeration and seeded generation of (topology, ideal) samples.

Finite topologies on ``n`` points correspond one-to-one with preorders on the
points (open sets are the up-sets of the specialization order), which is how
:func:`enumerate_topologies` lists them.  :func:`topologies_by_subbase` is an
independent second route used to cross-check the counts.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator

from ..core import Carrier, SoftSet, canonical_key
from ..errors import ResourceError
from ..ideal import SoftIdeal
from ..topology import SoftTopology, generate_from_subbase, validate_topology

MAX_ENUM_CELLS = 4
MAX_RANDOM_CELLS = 16


@dataclass(frozen=True)
class SpaceSample:
    carrier: Carrier
    topology: SoftTopology
    ideal: SoftIdeal
    provenance: str

    def __post_init__(self):
        if not validate_topology(self.topology.opens, self.carrier).valid:
            raise ValueError("sample topology failed validation")
        if self.ideal.carrier != self.carrier:
            raise ValueError("sample ideal is over a different carrier")


def topology_sort_key(t: SoftTopology):
    return (len(t.open_masks), tuple(canonical_key(m) for m in t.open_masks))


@lru_cache(maxsize=None)
def _preorder_topology_masks(n: int) -> tuple[tuple[int, ...], ...]:
    """Open-set families (as mask tuples) of every topology on ``n`` points."""
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    found = set()
    for choice in range(1 << len(pairs)):
        up = [1 << i for i in range(n)]
        for k, (i, j) in enumerate(pairs):
            if choice >> k & 1:
                up[i] |= 1 << j
        # transitivity: up-set of i must contain the up-sets of its members
        ok = True
        for i in range(n):
            for j in range(n):
                if up[i] >> j & 1 and up[j] & ~up[i]:
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            continue
        opens = tuple(sorted(
            (m for m in range(1 << n)
             if all(up[i] & ~m == 0 for i in range(n) if m >> i & 1)),
            key=canonical_key,
        ))
        found.add(opens)
    return tuple(sorted(found, key=lambda o: (len(o), tuple(canonical_key(m) for m in o))))


def enumerate_topologies(carrier: Carrier) -> list[SoftTopology]:
    """Every soft topology on ``carrier`` in canonical order (fewest opens first)."""
    n = carrier.cell_count
    if n > MAX_ENUM_CELLS:
        raise ResourceError(f"topology enumeration is capped at {MAX_ENUM_CELLS} cells")
    return [SoftTopology._trusted(carrier, opens) for opens in _preorder_topology_masks(n)]


def topologies_by_subbase(carrier: Carrier) -> set[SoftTopology]:
    """Every topology generated from some subfamily of soft sets (capped at 3 cells)."""
    n = carrier.cell_count
    if n > 3:
        raise ResourceError("subbase enumeration is capped at 3 cells")
    sets = [SoftSet(carrier, m) for m in range(1 << n)]
    out = set()
    for choice in range(1 << len(sets)):
        fam = [s for k, s in enumerate(sets) if choice >> k & 1]
        out.add(generate_from_subbase(carrier, fam))
    return out


def carrier_shapes(max_cells: int, min_cells: int = 1) -> list[tuple[int, int]]:
    """``(|Omega|, |X|)`` shapes ordered by cell count, then parameter count."""
    return [
        (p, n // p)
        for n in range(min_cells, max_cells + 1)
        for p in range(1, n + 1)
        if n % p == 0
    ]


def enumerate_spaces(max_cells: int, min_cells: int = 1) -> Iterator[SpaceSample]:
    """All (topology, principal ideal) pairs on every carrier shape up to ``max_cells``.

    Order: shape, then topology (canonical), then ideal top (canonical).
    """
    if max_cells > MAX_ENUM_CELLS:
        raise ResourceError(f"space enumeration is capped at {MAX_ENUM_CELLS} cells")
    for p, x in carrier_shapes(max_cells, min_cells):
        carrier = Carrier.of_size(p, x)
        tops = sorted(range(1 << carrier.cell_count), key=canonical_key)
        for ti, t in enumerate(enumerate_topologies(carrier)):
            for top in tops:
                yield SpaceSample(
                    carrier, t, SoftIdeal(carrier, SoftSet(carrier, top)),
                    f"enumerated shape={p}x{x} topology={ti} top={top}",
                )


def count_spaces(max_cells: int, min_cells: int = 1) -> int:
    total = 0
    for p, x in carrier_shapes(max_cells, min_cells):
        n = p * x
        total += len(_preorder_topology_masks(n)) << n
    return total


def _random_mask(rng: random.Random, n: int) -> int:
    density = rng.random()
    m = 0
    for bit in range(n):
        if rng.random() < density:
            m |= 1 << bit
    return m


def random_space(carrier: Carrier, seed) -> SpaceSample:
    """Topology generated from ``k`` random soft sets (``k`` in ``0..cells``), random ideal top."""
    n = carrier.cell_count
    if n > MAX_RANDOM_CELLS:
        raise ResourceError(f"random spaces are capped at {MAX_RANDOM_CELLS} cells")
    rng = random.Random(f"space:{seed}")
    k = rng.randint(0, n)
    subbase = [SoftSet(carrier, _random_mask(rng, n)) for _ in range(k)]
    topology = generate_from_subbase(carrier, subbase)
    ideal = SoftIdeal(carrier, SoftSet(carrier, _random_mask(rng, n)))
    return SpaceSample(carrier, topology, ideal, f"random seed={seed}")


def random_carrier(rng: random.Random, min_cells: int, max_cells: int) -> Carrier:
    shapes = carrier_shapes(max_cells, min_cells)
    p, x = shapes[rng.randrange(len(shapes))]
    return Carrier.of_size(p, x)


def random_spaces(min_cells: int, max_cells: int, trials: int, seed) -> Iterator[SpaceSample]:
    """``trials`` samples; trial ``i`` depends only on ``(seed, i)``."""
    for i in range(trials):
        rng = random.Random(f"carrier:{seed}:{i}")
        carrier = random_carrier(rng, min_cells, max_cells)
        yield random_space(carrier, f"{seed}:{i}")


def all_families(masks, max_size: int):
    for r in range(1, max_size + 1):
        yield from combinations(masks, r)
