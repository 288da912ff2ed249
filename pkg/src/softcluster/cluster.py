"""Cluster soft sets and the cluster soft topology.

Given a soft topology ``T`` and a soft ideal ``I``, a soft point ``x_alpha``
is a cluster point of ``R`` when ``R n U`` is outside ``I`` for every open
``U`` containing ``x_alpha``.  Since ``I`` is down-closed and the minimal
open neighborhood ``N`` of ``x_alpha`` sits inside every such ``U``, it is
enough to test ``R n N``; that is the default ``fast`` mode.

Soft sets with ``c(R) <= R`` are c-closed; their complements form the
cluster soft topology ``T_c``, which refines ``T``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .core import (
    MAX_EXHAUSTIVE_CELLS,
    Carrier,
    SoftSet,
    _check_same,
    all_soft_sets,
    canonical_key,
)
from .errors import CarrierMismatch, InputError, PreconditionError, ResourceError
from .ideal import SoftIdeal, full_ideal, ideal_join
from .reports import Check, Report
from .topology import (
    FAST,
    MAX_GENERATED,
    SoftTopology,
    _check_mode,
    slice_topology,
)


@dataclass(frozen=True, eq=False)
class ClusterContext:
    topology: SoftTopology
    ideal: SoftIdeal

    def __post_init__(self):
        if self.topology.carrier != self.ideal.carrier:
            raise CarrierMismatch("topology and ideal live on different carriers")

    @property
    def carrier(self) -> Carrier:
        return self.topology.carrier

    def cluster_mask(self, r: int) -> int:
        """Fast-mode cluster set on raw masks."""
        outside = ~self.ideal.top.mask
        m = 0
        for bit, nb in enumerate(self.topology.nbhd_masks):
            if r & nb & outside:
                m |= 1 << bit
        return m

    @cached_property
    def cluster_table(self) -> tuple[int, ...]:
        """``c`` of every mask, indexed by mask; only for exhaustive-size carriers."""
        n = self.carrier.cell_count
        if n > MAX_EXHAUSTIVE_CELLS:
            raise ResourceError(f"cluster table needs <= {MAX_EXHAUSTIVE_CELLS} cells, have {n}")
        return tuple(self.cluster_mask(r) for r in range(1 << n))

    @cached_property
    def adherence(self) -> "Adherence":
        return is_adherent(self)


@dataclass(frozen=True)
class ClusterClassification:
    c_closed: bool
    c_open: bool
    c_crowded: bool
    c_regular: bool


@dataclass(frozen=True)
class Decomposition:
    kind: str  # "closed-plus-ideal" | "crowded-plus-ideal" | "regular-plus-ideal"
    part1: SoftSet
    part2: SoftSet


@dataclass(frozen=True)
class Adherence:
    holds: bool
    witness: SoftSet | None = None


def cluster_set(ctx: ClusterContext, r: SoftSet, mode: str = FAST) -> SoftSet:
    _check_same(r, ctx.ideal.top)
    _check_mode(mode)
    if mode == FAST:
        return SoftSet(ctx.carrier, ctx.cluster_mask(r.mask))
    outside = ~ctx.ideal.top.mask
    m = 0
    for bit in range(ctx.carrier.cell_count):
        if all(r.mask & u & outside for u in ctx.topology.open_masks if u >> bit & 1):
            m |= 1 << bit
    return SoftSet(ctx.carrier, m)


def is_c_closed(ctx: ClusterContext, r: SoftSet) -> bool:
    return cluster_set(ctx, r) <= r


def classify(ctx: ClusterContext, r: SoftSet) -> ClusterClassification:
    c = cluster_set(ctx, r)
    cc = cluster_set(ctx, ~r)
    return ClusterClassification(
        c_closed=c <= r,
        c_open=cc <= ~r,
        # Read as R <= c(R); see the module notes in the README.
        c_crowded=r <= c,
        c_regular=c == r,
    )


def _subsets(mask: int):
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def base_masks(ctx: ClusterContext, cap: int = MAX_GENERATED) -> set[int]:
    """``{G - A : G open, A in I}`` as raw masks."""
    top = ctx.ideal.top.mask
    out: set[int] = set()
    for g in ctx.topology.open_masks:
        overlap = g & top
        if 1 << bin(overlap).count("1") > cap:
            raise ResourceError(f"open set overlaps the ideal top in more than log2({cap}) cells")
        for a in _subsets(overlap):
            out.add(g & ~a)
    return out


def base_family(ctx: ClusterContext) -> list[SoftSet]:
    return [SoftSet(ctx.carrier, m) for m in sorted(base_masks(ctx), key=canonical_key)]


def cluster_topology(ctx: ClusterContext, route: str = "auto",
                     cap: int = MAX_GENERATED) -> SoftTopology:
    """The cluster soft topology ``T_c``.

    ``route="enumerate"`` keeps the complement of every c-closed soft set;
    ``route="base"`` collects ``G - A`` over opens ``G`` and ideal members ``A``,
    which on a finite carrier is already the whole topology.  ``"auto"`` tries
    enumeration first and falls back to the base route.
    """
    n = ctx.carrier.cell_count
    full = ctx.carrier.full_mask
    if route not in ("auto", "enumerate", "base"):
        raise InputError(f"unknown route {route!r}")
    if route == "enumerate" or (route == "auto" and 1 << n <= cap):
        if 1 << n > cap:
            raise ResourceError(f"enumeration route needs 2**{n} <= {cap}")
        opens = [full & ~r for r in range(1 << n) if ctx.cluster_mask(r) & ~r == 0]
        return SoftTopology._trusted(ctx.carrier, opens)
    return SoftTopology._trusted(ctx.carrier, base_masks(ctx, cap))


def is_adherent(ctx: ClusterContext, cap: int = MAX_EXHAUSTIVE_CELLS) -> Adherence:
    """Check ``R - c(R) in I`` for every soft set ``R``; witness is the first failure."""
    top = ctx.ideal.top.mask
    for r in all_soft_sets(ctx.carrier, cap):
        rest = r.mask & ~ctx.cluster_mask(r.mask)
        if rest & ~top:
            return Adherence(False, r)
    return Adherence(True)


def _require_adherent(ctx: ClusterContext) -> None:
    if ctx.carrier.cell_count > MAX_EXHAUSTIVE_CELLS:
        # Finite carriers are always adherent; the exhaustive proof is only
        # skipped for size, not assumed away silently.
        return
    if not ctx.adherence.holds:
        raise PreconditionError(f"ideal is not adherent: witness {ctx.adherence.witness}")


def decompose_crowded(ctx: ClusterContext, r: SoftSet) -> Decomposition:
    """``R = (R n c(R)) u (R - c(R))``: a c-crowded part plus an ideal member."""
    _require_adherent(ctx)
    c = cluster_set(ctx, r)
    return Decomposition("crowded-plus-ideal", r & c, r - c)


def decompose_regular(ctx: ClusterContext, r: SoftSet) -> Decomposition:
    _require_adherent(ctx)
    c = cluster_set(ctx, r)
    if not c <= r:
        raise PreconditionError(f"{r} is not c-closed")
    return Decomposition("regular-plus-ideal", c, r - c)


def decompose_closed_plus_ideal(ctx: ClusterContext, r: SoftSet) -> Decomposition:
    _require_adherent(ctx)
    c = cluster_set(ctx, r)
    if not c <= r:
        raise PreconditionError(f"{r} is not c-closed")
    return Decomposition("closed-plus-ideal", c, r - c)


def decompose(ctx: ClusterContext, r: SoftSet, kind: str) -> Decomposition:
    funcs = {
        "crowded": decompose_crowded,
        "regular": decompose_regular,
        "closed": decompose_closed_plus_ideal,
    }
    if kind not in funcs:
        raise InputError(f"unknown decomposition kind {kind!r}")
    return funcs[kind](ctx, r)


def check_ideal_join_identity(t: SoftTopology, i: SoftIdeal, j: SoftIdeal, r: SoftSet) -> Report:
    """Evaluate both readings of the cluster-set identity for a join of ideals.

    stated:  c_(T, I v J)(R) = c_(T, I)(R) n c_(T, J)(R)
    refined: c_(T, I v J)(R) = c_(T_c(J), I)(R) n c_(T_c(I), J)(R)
    """
    ij = ideal_join(i, j)
    lhs = cluster_set(ClusterContext(t, ij), r)
    ci = cluster_set(ClusterContext(t, i), r)
    cj = cluster_set(ClusterContext(t, j), r)
    t_ci = cluster_topology(ClusterContext(t, i))
    t_cj = cluster_topology(ClusterContext(t, j))
    ref_i = cluster_set(ClusterContext(t_cj, i), r)
    ref_j = cluster_set(ClusterContext(t_ci, j), r)
    report = Report("cluster set of a join of ideals")
    report.checks.append(Check("stated", lhs == ci & cj))
    report.checks.append(Check("refined", lhs == ref_i & ref_j))
    report.values.update({
        "c(T, I v J)(R)": str(lhs),
        "c(T, I)(R)": str(ci),
        "c(T, J)(R)": str(cj),
        "c(T, I)(R) n c(T, J)(R)": str(ci & cj),
        "c(T_c(J), I)(R)": str(ref_i),
        "c(T_c(I), J)(R)": str(ref_j),
        "c(T_c(J), I)(R) n c(T_c(I), J)(R)": str(ref_i & ref_j),
    })
    return report


FINITE_IDEAL_NOTE = (
    "on a finite carrier every soft set is finite, so the ideal of finite soft sets "
    "is the full ideal; both sides reduce to 'T is discrete'"
)


def check_finite_ideal_characterisation(t: SoftTopology) -> Report:
    """Finite-sets-ideal characterisations, evaluated with the full ideal.

    (a) every c-closed set is soft closed  <=>  every finite soft set is soft closed
    (b) T = T_c  <=>  the complement of every finite soft set is open
    """
    carrier = t.carrier
    ctx = ClusterContext(t, full_ideal(carrier))
    sets = list(all_soft_sets(carrier))
    c_closed_are_closed = all(
        t.is_closed(s) for s in sets if is_c_closed(ctx, s)
    )
    finite_are_closed = all(t.is_closed(s) for s in sets)
    t_c = cluster_topology(ctx)
    cofinite_open = all(t.is_open(~s) for s in sets)
    report = Report("finite-sets ideal characterisation")
    report.checks.append(Check(
        "c-closed => closed iff finite => closed",
        c_closed_are_closed == finite_are_closed,
        detail=f"left {c_closed_are_closed}, right {finite_are_closed}",
    ))
    report.checks.append(Check(
        "T = T_c iff complements of finite sets open",
        (t == t_c) == cofinite_open,
        detail=f"left {t == t_c}, right {cofinite_open}",
    ))
    report.values["discrete"] = str(t.is_discrete())
    report.notes.append(FINITE_IDEAL_NOTE)
    return report


def slice_commutation(ctx: ClusterContext, param: str) -> Report:
    """Compare the ``param`` slice of ``T_c`` with the crisp ideal topology of the slices."""
    from .harness.oracle import CrispContext, crisp_ideal_topology
    from .ideal import slice_ideal

    ctx.carrier.param_index(param)
    left = slice_topology(cluster_topology(ctx), param)
    crisp = CrispContext(slice_topology(ctx.topology, param), slice_ideal(ctx.ideal, param))
    right = crisp_ideal_topology(crisp)
    report = Report(f"slice commutation at {param}")
    report.checks.append(Check("T_c(alpha) = T(alpha)_c", left == right))
    report.values["T_c(alpha)"] = _crisp_str(left)
    report.values["T(alpha) ideal topology"] = _crisp_str(right)
    return report


def _crisp_str(t) -> str:
    return "[" + ", ".join("{" + ", ".join(map(str, o)) + "}" for o in t.sorted_opens()) + "]"
