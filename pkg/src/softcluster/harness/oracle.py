"""Crisp ideal-topology oracle.

Everything here works on ``frozenset`` points and quantifies over every open
set explicitly; no soft-set operator is reused.  Soft structures enter only
through the graph correspondence (:func:`graph_context`, :func:`graph_of`).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from ..crisp import CrispIdeal, CrispTopology
from ..errors import InputError, ResourceError

MAX_GROUND = 16


@dataclass(frozen=True)
class CrispContext:
    topology: CrispTopology
    ideal: CrispIdeal

    def __post_init__(self):
        if self.topology.ground != self.ideal.ground:
            raise InputError("crisp topology and ideal have different ground sets")


def crisp_local_function(cctx: CrispContext, a) -> frozenset:
    """Points p such that ``a n U`` is not in the ideal for every open ``U`` containing p."""
    a = frozenset(a)
    t, ideal = cctx.topology, cctx.ideal
    if not a <= t.ground:
        raise InputError("subset is not within the ground set")
    result = set()
    for p in t.ground:
        if all((a & u) not in ideal for u in t.opens if p in u):
            result.add(p)
    return frozenset(result)


def _powerset(ground):
    items = sorted(ground, key=repr)
    for r in range(len(items) + 1):
        for combo in combinations(items, r):
            yield frozenset(combo)


def crisp_ideal_topology(cctx: CrispContext) -> CrispTopology:
    """Topology whose closed sets are the ``F`` with ``F* <= F``."""
    ground = cctx.topology.ground
    if len(ground) > MAX_GROUND:
        raise ResourceError(f"crisp ideal topology limited to {MAX_GROUND} points")
    opens = [ground - f for f in _powerset(ground) if crisp_local_function(cctx, f) <= f]
    return CrispTopology(ground, frozenset(opens))


def crisp_ideal_topology_from_base(cctx: CrispContext) -> CrispTopology:
    """Union-closure of ``{G - A : G open, A in ideal}``."""
    base = {g - a for g in cctx.topology.opens for a in cctx.ideal.members()}
    opens = {frozenset()}
    for b in base:
        opens |= {o | b for o in opens}
    return CrispTopology(cctx.topology.ground, frozenset(opens))


def graph_of(soft_set) -> frozenset:
    """Graph of a soft set as ``(parameter, element)`` label pairs."""
    return frozenset((p, x) for p, xs in soft_set.to_fiber_map().items() for x in xs)


def graph_context(ctx) -> CrispContext:
    """Transport a soft ``(T, I)`` pair to a crisp context on the cell grid."""
    c = ctx.carrier
    ground = frozenset((p, x) for p in c.parameters for x in c.universe)
    opens = frozenset(graph_of(o) for o in ctx.topology.opens)
    return CrispContext(CrispTopology(ground, opens), CrispIdeal(ground, graph_of(ctx.ideal.top)))
