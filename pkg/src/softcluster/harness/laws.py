"""Law registry, suite runner and falsifier.

Each law is evaluated on one :class:`SpaceView` at a time against a
:class:`Subjects` bundle (the soft sets, pairs and finite families to
quantify over).  Exhaustive scopes quantify over everything; random scopes
draw a seeded sample per space.  Laws work on raw masks through the same
``ClusterContext.cluster_mask`` used by the public API.
"""

from __future__ import annotations

import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import combinations, product
from typing import Callable, Iterable

from ..cluster import ClusterContext, base_masks, cluster_set, cluster_topology
from ..core import SoftSet, canonical_key, canonical_masks
from ..errors import InputError
from ..ideal import SoftIdeal, slice_ideal
from ..topology import (
    DEFINITIONAL,
    SoftTopology,
    closure,
    derived_set,
    generate_from_subbase,
    graph_topology,
    interior,
    slice_topology,
)
from .oracle import (
    CrispContext,
    crisp_ideal_topology,
    crisp_local_function,
    graph_context,
    graph_of,
)
from .spaces import SpaceSample, enumerate_spaces, random_spaces

MAX_WITNESSES = 3


def _subsets(mask: int):
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


class SpaceView:
    """A sample plus cached mask-level tables."""

    def __init__(self, sample: SpaceSample):
        self.sample = sample
        self.carrier = sample.carrier
        self.n = self.carrier.cell_count
        self.full = self.carrier.full_mask
        self.top = sample.ideal.top.mask
        self.topology = sample.topology
        self.ctx = ClusterContext(sample.topology, sample.ideal)
        self.open_set = sample.topology._open_set
        self.closed_set = sample.topology.closed_masks
        self.nbhd = sample.topology.nbhd_masks
        self.ct = self.ctx.cluster_table

    def c(self, m: int) -> int:
        return self.ct[m]

    def cl(self, m: int) -> int:
        out = 0
        for bit, nb in enumerate(self.nbhd):
            if nb & m:
                out |= 1 << bit
        return out

    def in_ideal(self, m: int) -> bool:
        return m & ~self.top == 0

    def c_closed(self, m: int) -> bool:
        return self.c(m) & ~m == 0

    def c_regular(self, m: int) -> bool:
        return self.c(m) == m

    @cached_property
    def tc(self) -> SoftTopology:
        return cluster_topology(self.ctx, route="enumerate")

    def s(self, m: int) -> str:
        return str(SoftSet(self.carrier, m))

    def witness(self, **sets) -> dict:
        from ..spacefile import sample_to_dict
        return {
            "space": sample_to_dict(self.sample),
            "provenance": self.sample.provenance,
            "values": {k: (self.s(v) if isinstance(v, int) else v) for k, v in sets.items()},
        }


@dataclass
class Subjects:
    sets: list[int]
    pairs: list[tuple[int, int]]
    families: list[tuple[int, ...]]
    small_families: list[tuple[int, ...]]
    exhaustive: bool
    # the scope pairs each topology with every ideal, so topology-only laws run once
    topology_repeats: bool = False

    @cached_property
    def family_unions(self) -> list[list[int]]:
        return [_subfamily_unions(f) for f in self.families]

    @cached_property
    def small_family_unions(self) -> list[list[int]]:
        return [_subfamily_unions(f) for f in self.small_families]


@lru_cache(maxsize=None)
def exhaustive_subjects(n: int, topology_repeats: bool = False) -> Subjects:
    """Every soft set, ordered pair, and 2- or 3-member family (shared, do not mutate)."""
    masks = list(canonical_masks(n))
    fams = [f for r in (2, 3) for f in combinations(masks, r)]
    small = list(combinations(masks, 2))
    return Subjects(masks, list(product(masks, masks)), fams, small, True, topology_repeats)


def random_subjects(n: int, rng: random.Random, count: int = 16) -> Subjects:
    full = (1 << n) - 1

    def draw():
        density = rng.random()
        return sum(1 << b for b in range(n) if rng.random() < density)

    sets = [0, full] + [draw() for _ in range(count - 2)]
    pairs = [(draw(), draw()) for _ in range(count)]
    fams = [tuple(draw() for _ in range(rng.randint(2, 4))) for _ in range(count // 2)]
    small = [(draw(), draw()) for _ in range(count // 2)]
    return Subjects(sets, pairs, fams, small, False)


class _Acc:
    """Per-law tally; law bodies call ``check`` once per trial."""

    def __init__(self, limit: int):
        self.trials = 0
        self.failures: list = []
        self.failed = 0
        self.limit = limit

    def check(self, ok: bool, witness: Callable[[], dict]):
        self.trials += 1
        if not ok:
            self.fail(witness)

    def fail(self, witness: Callable[[], dict]):
        """Record a failure of a trial already counted in ``trials``."""
        self.failed += 1
        if len(self.failures) < self.limit:
            self.failures.append(witness())


def _union(ms) -> int:
    out = 0
    for m in ms:
        out |= m
    return out


def _inter(ms, full: int) -> int:
    out = full
    for m in ms:
        out &= m
    return out


def law_ideal_members_vanish(v: SpaceView, s: Subjects, a: _Acc):
    c = v.ct
    for r in s.sets:
        if v.in_ideal(r):
            a.check(c[r] == 0, lambda: v.witness(R=r, cR=c[r]))


def law_monotone(v, s, a):
    c = v.ct
    for r, t in s.pairs:
        sup = t if s.exhaustive else r | t
        if r & ~sup == 0:
            a.trials += 1
            if c[r] & ~c[sup]:
                a.fail(lambda: v.witness(R=r, S=sup, cR=c[r], cS=c[sup]))


def law_meet_below(v, s, a):
    c = v.ct
    for r, t in s.pairs:
        lhs, rhs = c[r & t], c[r] & c[t]
        a.trials += 1
        if lhs & ~rhs:
            a.fail(lambda: v.witness(R=r, S=t, lhs=lhs, rhs=rhs))


def law_union_additive(v, s, a):
    c = v.ct
    for r, t in s.pairs:
        lhs, rhs = c[r | t], c[r] | c[t]
        a.trials += 1
        if lhs != rhs:
            a.fail(lambda: v.witness(R=r, S=t, lhs=lhs, rhs=rhs))


def law_difference_below(v, s, a):
    c = v.ct
    for r, t in s.pairs:
        lhs, rhs = c[r] & ~c[t], c[r & ~t]
        a.trials += 1
        if lhs & ~rhs:
            a.fail(lambda: v.witness(R=r, S=t, lhs=lhs, rhs=rhs))


def _fam_witness(v, fam, **kw):
    return v.witness(family=[v.s(m) for m in fam], **kw)


def law_finite_union(v, s, a):
    c = v.ct
    for fam in s.families:
        lhs, rhs = c[_union(fam)], _union(c[m] for m in fam)
        a.trials += 1
        if lhs != rhs:
            a.fail(lambda: _fam_witness(v, fam, lhs=lhs, rhs=rhs))


def law_union_of_clusters_below(v, s, a):
    c = v.ct
    for fam in s.families:
        lhs, rhs = _union(c[m] for m in fam), c[_union(fam)]
        a.trials += 1
        if lhs & ~rhs:
            a.fail(lambda: _fam_witness(v, fam, lhs=lhs, rhs=rhs))


def law_finite_intersection_below(v, s, a):
    c = v.ct
    for fam in s.families:
        lhs, rhs = c[_inter(fam, v.full)], _inter((c[m] for m in fam), v.full)
        a.trials += 1
        if lhs & ~rhs:
            a.fail(lambda: _fam_witness(v, fam, lhs=lhs, rhs=rhs))


def _subfamily_unions(fam) -> list[int]:
    """``out[S]`` = union of ``fam[j]`` for the indices ``j`` in bitmask ``S``."""
    out = [0] * (1 << len(fam))
    for sub in range(1, len(out)):
        low = sub & -sub
        out[sub] = out[sub ^ low] | fam[low.bit_length() - 1]
    return out


def _index_list(bits: int) -> list[int]:
    return [j for j in range(bits.bit_length()) if bits >> j & 1]


def law_union_identity_all(v, s, a):
    """``c(U R_j) = U c(R_j) u n_{N} c(U_{j not in N} R_j)``, ``N`` over every index subset."""
    c = v.ct
    for fam, unions in zip(s.families, s.family_unions):
        lhs = c[unions[-1]]
        tail = v.full
        for u in unions:
            tail &= c[u]
        rhs = _union(c[m] for m in fam) | tail
        a.trials += 1
        if lhs != rhs:
            a.fail(lambda: _fam_witness(v, fam, lhs=lhs, rhs=rhs))


def law_union_identity_any(v, s, a):
    """The same identity with ``N`` ranging over any nonempty family of index subsets."""
    c = v.ct
    for fam, unions in zip(s.small_families, s.small_family_unions):
        everything = len(unions) - 1
        lhs = c[unions[-1]]
        head = _union(c[m] for m in fam)
        # factor[N] = c(union of the members outside N)
        factor = [c[unions[everything ^ big_n]] for big_n in range(len(unions))]
        meets = [v.full] * (1 << len(unions))
        for choice in range(1, len(meets)):
            low = choice & -choice
            meets[choice] = meets[choice ^ low] & factor[low.bit_length() - 1]
            rhs = head | meets[choice]
            a.trials += 1
            if lhs != rhs:
                a.fail(lambda: _fam_witness(
                    v, fam, index_family=[_index_list(x) for x in _index_list(choice)],
                    lhs=lhs, rhs=rhs))


def law_below_closure(v, s, a):
    for r in s.sets:
        a.check(v.c(r) & ~v.cl(r) == 0, lambda: v.witness(R=r, cR=v.c(r), clR=v.cl(r)))


def law_cluster_is_closed(v, s, a):
    for r in s.sets:
        a.check(v.c(r) in v.closed_set, lambda: v.witness(R=r, cR=v.c(r)))


def law_cluster_shrinks_on_repeat(v, s, a):
    for r in s.sets:
        cc = v.c(v.c(r))
        a.check(cc & ~v.c(r) == 0, lambda: v.witness(R=r, cR=v.c(r), ccR=cc))


def law_trivial_sets_c_closed(v, s, a):
    for m in (0, v.full):
        a.check(v.c_closed(m), lambda: v.witness(R=m, cR=v.c(m)))


def law_ideal_members_c_closed(v, s, a):
    for r in s.sets:
        m = r & v.top
        a.check(v.c_closed(m), lambda: v.witness(R=m, cR=v.c(m)))


def law_closed_sets_c_closed(v, s, a):
    for m in sorted(v.closed_set, key=canonical_key):
        a.check(v.c_closed(m), lambda: v.witness(R=m, cR=v.c(m)))


def _c_closure(v, m: int) -> int:
    # R u c(R) is always c-closed; used to manufacture c-closed sets.
    return m | v.c(m)


def _c_closed_family(v, fam, exhaustive):
    if exhaustive:
        return fam if all(v.c_closed(m) for m in fam) else None
    return tuple(_c_closure(v, m) for m in fam)


def law_c_closed_intersections(v, s, a):
    for fam in s.families:
        cf = _c_closed_family(v, fam, s.exhaustive)
        if cf is None:
            continue
        m = _inter(cf, v.full)
        a.check(v.c_closed(m), lambda: _fam_witness(v, cf, meet=m, c_meet=v.c(m)))


def law_c_closed_unions(v, s, a):
    for fam in s.families:
        cf = _c_closed_family(v, fam, s.exhaustive)
        if cf is None:
            continue
        m = _union(cf)
        a.check(v.c_closed(m), lambda: _fam_witness(v, cf, join=m, c_join=v.c(m)))


def law_cluster_topology_finer(v, s, a):
    tc = v.tc._open_set
    missing = [o for o in v.topology.open_masks if o not in tc]
    a.check(not missing, lambda: v.witness(open_not_c_open=missing[0]))


def law_base_of_cluster_topology(v, s, a):
    base = base_masks(v.ctx)
    a.check(_union(base) == v.full, lambda: v.witness(base_union=_union(base)))
    members = sorted(base, key=canonical_key)
    if len(members) > 128:
        members = random.Random(len(members)).sample(members, 128)
    bad = next((x & y for x, y in combinations(members, 2) if x & y not in base), None)
    a.check(bad is None, lambda: v.witness(intersection_not_in_base=bad))
    gen = {0}
    for b in base:
        gen |= {o | b for o in gen}
    a.check(gen == set(v.tc._open_set), lambda: v.witness(
        base_unions=len(gen), cluster_opens=len(v.tc)))


def law_base_is_whole_topology(v, s, a):
    base = base_masks(v.ctx)
    tc = set(v.tc._open_set)
    diff = sorted(base ^ tc, key=canonical_key)
    a.check(not diff, lambda: v.witness(
        symmetric_difference_first=diff[0], base_size=len(base), cluster_size=len(tc)))


def law_cluster_topology_idempotent(v, s, a):
    tcc = cluster_topology(ClusterContext(v.tc, v.sample.ideal), route="enumerate")
    a.check(tcc == v.tc, lambda: v.witness(Tc=v.tc.describe(), Tcc=tcc.describe()))


def law_slice_commutation(v, s, a):
    tc = v.tc
    for p in v.carrier.parameters:
        left = slice_topology(tc, p)
        right = crisp_ideal_topology(CrispContext(
            slice_topology(v.topology, p), slice_ideal(v.sample.ideal, p)))
        a.check(left == right, lambda: v.witness(
            parameter=p, left=str(left.sorted_opens()), right=str(right.sorted_opens())))


def _join_pairs(v, s):
    if s.exhaustive:
        return [(j, r) for j in canonical_masks(v.n) for r in s.sets]
    return list(s.pairs)


@lru_cache(maxsize=4096)
def _cluster_topology_for(topology, j: int):
    carrier = topology.carrier
    ctx = ClusterContext(topology, SoftIdeal(carrier, SoftSet(carrier, j)))
    return cluster_topology(ctx, route="enumerate")


def _ideal_join(v: SpaceView, s: Subjects, a: _Acc, refined: bool):
    i_ideal = v.sample.ideal
    carrier = v.carrier
    per_j = {}
    for j, r in _join_pairs(v, s):
        if j not in per_j:
            j_ideal = SoftIdeal(carrier, SoftSet(carrier, j))
            joint = ClusterContext(v.topology, SoftIdeal(carrier, SoftSet(carrier, v.top | j)))
            if refined:
                t_cj = _cluster_topology_for(v.topology, j)
                per_j[j] = (joint, ClusterContext(t_cj, i_ideal), ClusterContext(v.tc, j_ideal))
            else:
                per_j[j] = (joint, None, ClusterContext(v.topology, j_ideal))
        joint, left_ctx, right_ctx = per_j[j]
        lhs = joint.cluster_mask(r)
        left = left_ctx.cluster_mask(r) if refined else v.ct[r]
        rhs = left & right_ctx.cluster_mask(r)
        a.trials += 1
        if lhs != rhs:
            a.fail(lambda: v.witness(R=r, J_top=j, I_top=v.top, lhs=lhs, rhs=rhs))


def law_join_stated(v, s, a):
    _ideal_join(v, s, a, refined=False)


def law_join_refined(v, s, a):
    _ideal_join(v, s, a, refined=True)


def _once_per_topology(v: SpaceView, s: Subjects) -> bool:
    return not s.topology_repeats or v.top == 0


def law_finite_ideal_characterisation(v, s, a):
    if not _once_per_topology(v, s):
        return
    from ..cluster import check_finite_ideal_characterisation
    rep = check_finite_ideal_characterisation(v.topology)
    for chk in rep.checks:
        a.check(chk.holds, lambda: v.witness(check=chk.name, detail=chk.detail,
                                             note=rep.notes[0]))


def law_adherent(v, s, a):
    for r in s.sets:
        rest = r & ~v.c(r)
        a.check(v.in_ideal(rest), lambda: v.witness(R=r, cR=v.c(r), rest=rest))


def law_c_closed_decomposition(v, s, a):
    for r in s.sets:
        if not v.c_closed(r):
            continue
        q, rest = v.c(r), r & ~v.c(r)
        ok = q in v.closed_set and v.in_ideal(rest) and q & rest == 0 and q | rest == r
        a.check(ok, lambda: v.witness(R=r, closed_part=q, ideal_part=rest))
    for x, y in s.pairs:
        q = v.cl(x)
        m = (y & v.top & ~q) | q
        a.check(v.c_closed(m), lambda: v.witness(closed_part=q, ideal_part=m & ~q, union=m))


def law_c_open_decomposition(v, s, a):
    for w in s.sets:
        comp = v.full & ~w
        if v.c_closed(comp):
            u = v.full & ~v.c(comp)
            gone = comp & ~v.c(comp)
            ok = u in v.open_set and v.in_ideal(gone) and (u & ~gone) == w
            a.check(ok, lambda: v.witness(W=w, U=u, A=gone))
    for x, y in s.pairs:
        u = v.full & ~v.cl(v.full & ~x)  # interior of x
        w = u & ~(y & v.top)
        a.check(v.c_closed(v.full & ~w), lambda: v.witness(U=u, A=y & v.top, W=w))


def law_crowded_decomposition(v, s, a):
    for r in s.sets:
        c = v.c(r)
        p1, p2 = r & c, r & ~c
        ok = (p1 & p2 == 0 and p1 | p2 == r and v.in_ideal(p2)
              and p1 & ~v.c(p1) == 0)
        a.check(ok, lambda: v.witness(R=r, crowded_part=p1, ideal_part=p2, c_part1=v.c(p1)))


def law_regular_minus_closed(v, s, a):
    cases = []
    if s.exhaustive:
        cases = [(r, t) for r, t in s.pairs
                 if v.c_regular(r) and v.c_closed(t) and t & ~r == 0]
    for x, y in s.pairs:
        r = v.c(x)
        cases.append((r, r & _c_closure(v, y)))
    for r, t in cases:
        if not (v.c_regular(r) and v.c_closed(t) and t & ~r == 0):
            a.check(False, lambda: v.witness(note="constructed case violates hypotheses",
                                             R=r, S=t))
            continue
        q = r & ~t
        a.check(q & ~v.c(q) == 0, lambda: v.witness(R=r, S=t, difference=q, c_difference=v.c(q)))


def _regular_splits(v: SpaceView, r: int) -> list[tuple[int, int]]:
    """Brute force: all (L, A) with L c-regular, A in I, disjoint, L u A = R."""
    out = []
    for lpart in _subsets(r):
        rest = r & ~lpart
        if v.in_ideal(rest) and v.c_regular(lpart):
            out.append((lpart, rest))
    return out


def _closed_subjects(v, s):
    if s.exhaustive:
        return [r for r in s.sets if v.c_closed(r)]
    return [_c_closure(v, r) for r in s.sets]


def law_regular_decomposition_unique(v, s, a):
    for r in _closed_subjects(v, s):
        splits = _regular_splits(v, r)
        expected = (v.c(r), r & ~v.c(r))
        a.check(splits == [expected], lambda: v.witness(
            R=r, splits=[[v.s(x), v.s(y)] for x, y in splits], expected=[v.s(e) for e in expected]))


def law_c_closed_iff_regular_plus_ideal(v, s, a):
    subjects = list(s.sets)
    if not s.exhaustive:
        subjects += [_c_closure(v, r) for r in s.sets]
    for r in subjects:
        has = bool(_regular_splits(v, r))
        a.check(has == v.c_closed(r), lambda: v.witness(R=r, c_closed=v.c_closed(r), has_split=has))


def law_oracle(v, s, a):
    cctx = graph_context(v.ctx)
    for r in s.sets:
        crisp = crisp_local_function(cctx, graph_of(SoftSet(v.carrier, r)))
        soft = graph_of(SoftSet(v.carrier, v.c(r)))
        a.check(crisp == soft, lambda: v.witness(R=r, cluster=v.c(r), crisp=sorted(crisp)))


def law_fast_definitional(v, s, a):
    for r in s.sets:
        rs = SoftSet(v.carrier, r)
        d = cluster_set(v.ctx, rs, mode=DEFINITIONAL).mask
        a.check(d == v.c(r), lambda: v.witness(R=r, fast=v.c(r), definitional=d))


def law_kuratowski(v, s, a):
    if not _once_per_topology(v, s):
        return
    a.check(v.cl(0) == 0, lambda: v.witness(cl_null=v.cl(0)))
    for r in s.sets:
        c = v.cl(r)
        a.check(r & ~c == 0 and v.cl(c) == c and c in v.closed_set,
                lambda: v.witness(R=r, clR=c, clclR=v.cl(c)))
    for r, t in s.pairs:
        a.check(v.cl(r | t) == v.cl(r) | v.cl(t), lambda: v.witness(R=r, S=t))
        if r & ~t == 0:
            a.check(v.cl(r) & ~v.cl(t) == 0, lambda: v.witness(R=r, S=t))


def law_topology_operators(v, s, a):
    """Closure = A u D(A), interior duality, fast == definitional for cl/int/D."""
    if not _once_per_topology(v, s):
        return
    t = v.topology
    for r in s.sets:
        rs = SoftSet(v.carrier, r)
        cl_f, cl_d = closure(t, rs), closure(t, rs, DEFINITIONAL)
        d_f, d_d = derived_set(t, rs), derived_set(t, rs, DEFINITIONAL)
        int_f, int_d = interior(t, rs), interior(t, rs, DEFINITIONAL)
        ok = (cl_f == cl_d and d_f == d_d and int_f == int_d
              and cl_f == rs | d_f and int_f == ~closure(t, ~rs))
        a.check(ok, lambda: v.witness(R=r, closure=str(cl_f), derived=str(d_f), interior=str(int_f)))


def law_slices_and_graph(v, s, a):
    if not _once_per_topology(v, s):
        return
    for p in v.carrier.parameters:
        st = slice_topology(v.topology, p)
        a.check(st.is_valid(), lambda: v.witness(parameter=p, violation=st.violation()))
    gt = graph_topology(v.topology)
    a.check(gt.is_valid() and len(gt.opens) == len(v.topology),
            lambda: v.witness(violation=gt.violation()))
    regen = generate_from_subbase(v.carrier, v.topology.opens)
    a.check(regen == v.topology, lambda: v.witness(regenerated=regen.describe()))


@dataclass(frozen=True)
class Law:
    name: str
    anchor: str
    body: Callable
    expected: bool = True  # False for statements known to admit counterexamples


LAWS: dict[str, Law] = {law.name: law for law in [
    Law("prop3.3-1", "ideal members have empty cluster set", law_ideal_members_vanish),
    Law("prop3.3-2", "cluster set is monotone", law_monotone),
    Law("prop3.3-3", "c(R n S) <= c(R) n c(S)", law_meet_below),
    Law("prop3.3-4", "c(R u S) = c(R) u c(S)", law_union_additive),
    Law("prop3.3-5", "c(R) - c(S) <= c(R - S)", law_difference_below),
    Law("prop3.4-1", "c of a finite union is the union of c", law_finite_union),
    Law("prop3.4-2", "union of c <= c of union", law_union_of_clusters_below),
    Law("prop3.4-3", "c of intersection <= intersection of c", law_finite_intersection_below),
    Law("prop3.4-4-all", "union identity, index family = all subsets", law_union_identity_all),
    Law("prop3.4-4-any", "union identity, any nonempty index family", law_union_identity_any),
    Law("lemma3.5-1", "c(R) <= cl(R)", law_below_closure),
    Law("lemma3.5-2", "c(R) is soft closed", law_cluster_is_closed),
    Law("lemma3.5-3", "c(c(R)) <= c(R)", law_cluster_shrinks_on_repeat),
    Law("lemma4.2-1", "null and absolute sets are c-closed", law_trivial_sets_c_closed),
    Law("lemma4.2-2", "ideal members are c-closed", law_ideal_members_c_closed),
    Law("lemma4.2-3", "soft closed sets are c-closed", law_closed_sets_c_closed),
    Law("lemma4.2-4", "intersections of c-closed sets are c-closed", law_c_closed_intersections),
    Law("lemma4.2-5", "finite unions of c-closed sets are c-closed", law_c_closed_unions),
    Law("remark4.4", "cluster topology is finer than T", law_cluster_topology_finer),
    Law("thm4.5", "{G - A} is a base of the cluster topology", law_base_of_cluster_topology),
    Law("thm5.8", "{G - A} equals the cluster topology", law_base_is_whole_topology),
    Law("thm4.10", "cluster topology is idempotent", law_cluster_topology_idempotent),
    Law("lemma4.6", "slices commute with the cluster topology", law_slice_commutation),
    Law("prop4.9-stated", "c_(T,IvJ) = c_(T,I) n c_(T,J)", law_join_stated, expected=False),
    Law("prop4.9-refined", "c_(T,IvJ) = c_(Tc(J),I) n c_(Tc(I),J)", law_join_refined),
    Law("thm5.1", "finite-sets ideal characterisations (degenerate)", law_finite_ideal_characterisation),
    Law("thm5.5", "every ideal is adherent", law_adherent),
    Law("thm5.6", "c-closed = closed + ideal member, disjoint", law_c_closed_decomposition),
    Law("cor5.7", "c-open = open - ideal member", law_c_open_decomposition),
    Law("thm5.10", "crowded + ideal member decomposition", law_crowded_decomposition),
    Law("lemma5.11", "regular minus c-closed subset is c-crowded", law_regular_minus_closed),
    Law("thm5.12", "regular + ideal decomposition is unique", law_regular_decomposition_unique),
    Law("thm5.13", "c-closed iff regular + ideal member", law_c_closed_iff_regular_plus_ideal),
    Law("oracle", "graph-transported crisp local function = cluster set", law_oracle),
    Law("fast-definitional", "minimal-nbhd cluster set = all-opens cluster set",
        law_fast_definitional),
    Law("kuratowski", "closure operator axioms", law_kuratowski),
    Law("topology-operators", "cl = A u D(A), interior duality, mode agreement",
        law_topology_operators),
    Law("slices-graph", "slices and graph are crisp topologies; generation idempotent",
        law_slices_and_graph),
]}

DEFAULT_LAWS = [name for name, law in LAWS.items() if law.expected]


@dataclass
class Exhaustive:
    max_cells: int
    min_cells: int = 1

    def describe(self) -> str:
        return f"exhaustive: all topologies x all principal ideals, {self.min_cells}..{self.max_cells} cells"

    def samples(self):
        return enumerate_spaces(self.max_cells, self.min_cells)


@dataclass
class Random:
    min_cells: int
    max_cells: int
    trials: int
    seed: int = 0
    sets_per_space: int = 16

    def describe(self) -> str:
        return (f"random: {self.trials} spaces, {self.min_cells}..{self.max_cells} cells, "
                f"seed {self.seed}, {self.sets_per_space} sets per space")

    def samples(self):
        return random_spaces(self.min_cells, self.max_cells, self.trials, self.seed)


SINGLE_EXHAUSTIVE_CELLS = 6


@dataclass
class Single:
    """One given space; subjects are exhaustive up to ``SINGLE_EXHAUSTIVE_CELLS`` cells."""
    sample: object
    seed: int = 0
    sets_per_space: int = 64

    @property
    def exhaustive(self) -> bool:
        return self.sample.carrier.cell_count <= SINGLE_EXHAUSTIVE_CELLS

    def describe(self) -> str:
        how = "all soft sets" if self.exhaustive else f"{self.sets_per_space} seeded soft sets"
        return f"single space ({self.sample.provenance}), {how}"

    def samples(self):
        return iter([self.sample])


@dataclass
class LawReport:
    law: str
    anchor: str
    universe: str
    trials: int = 0
    failed: int = 0
    witnesses: list = field(default_factory=list)
    expected: bool = True

    @property
    def holds(self) -> bool:
        return self.failed == 0

    def line(self) -> str:
        status = "PASS" if self.holds else "FAIL"
        if not self.expected:
            status += " (statement known to admit counterexamples)"
        return f"{status} {self.law}: trials={self.trials} failures={self.failed}  [{self.anchor}]"

    def to_dict(self) -> dict:
        return {
            "name": self.law,
            "holds": self.holds,
            "trials": self.trials,
            "failures": self.failed,
            "universe": self.universe,
            "witness": self.witnesses[0] if self.witnesses else None,
            "witnesses": self.witnesses,
        }


def _subjects_for(scope, v: SpaceView, index: int) -> Subjects:
    if isinstance(scope, Exhaustive):
        return exhaustive_subjects(v.n, topology_repeats=True)
    if isinstance(scope, Single) and scope.exhaustive:
        return exhaustive_subjects(v.n)
    rng = random.Random(f"subjects:{scope.seed}:{index}")
    return random_subjects(v.n, rng, scope.sets_per_space)


def _resolve(laws: Iterable[str] | None) -> list[Law]:
    names = DEFAULT_LAWS if laws is None else list(laws)
    out = []
    for name in names:
        if name not in LAWS:
            raise InputError(f"unknown law {name!r}; known: {', '.join(LAWS)}")
        out.append(LAWS[name])
    return out


def _run_chunk(args) -> list[tuple[int, list, int]]:
    scope, law_names, indexed, limit, stop_at_first = args
    laws = _resolve(law_names)
    totals = [[0, [], 0] for _ in laws]
    for index, sample in indexed:
        v = SpaceView(sample)
        subj = _subjects_for(scope, v, index)
        for k, law in enumerate(laws):
            acc = _Acc(limit)
            law.body(v, subj, acc)
            totals[k][0] += acc.trials
            totals[k][2] += acc.failed
            room = limit - len(totals[k][1])
            if room > 0:
                totals[k][1].extend(acc.failures[:room])
        if stop_at_first and any(t[2] for t in totals):
            break
    return [tuple(t) for t in totals]


def _chunks(scope, size: int):
    batch = []
    for index, sample in enumerate(scope.samples()):
        batch.append((index, sample))
        if len(batch) == size:
            yield batch
            batch = []
    if batch:
        yield batch


def run_law_suite(scope, laws: Iterable[str] | None = None, *, workers: int = 1,
                  max_witnesses: int = MAX_WITNESSES, chunk_size: int = 256,
                  stop_at_first: bool = False) -> list[LawReport]:
    """Evaluate ``laws`` over every sample of ``scope``.

    Chunks of samples are evaluated independently (optionally in ``workers``
    processes) and merged in sample order, so the report does not depend on
    scheduling.
    """
    selected = _resolve(laws)
    if not selected:
        return []
    names = [law.name for law in selected]
    reports = [LawReport(law.name, law.anchor, scope.describe(), expected=law.expected)
               for law in selected]
    jobs = ((scope, names, batch, max_witnesses, stop_at_first)
            for batch in _chunks(scope, chunk_size))

    def merge(results):
        for rep, (trials, wits, failed) in zip(reports, results):
            rep.trials += trials
            rep.failed += failed
            room = max_witnesses - len(rep.witnesses)
            if room > 0:
                rep.witnesses.extend(wits[:room])

    if workers <= 1:
        for job in jobs:
            merge(_run_chunk(job))
            if stop_at_first and any(r.failed for r in reports):
                break
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for results in pool.map(_run_chunk, jobs):
                merge(results)
    return reports


@dataclass
class FalsifyResult:
    law: str
    found: bool
    searched: str
    trials: int
    witness: dict | None = None

    def to_text(self) -> str:
        if not self.found:
            return f"{self.law}: no counterexample ({self.trials} trials; {self.searched})"
        return (f"{self.law}: COUNTEREXAMPLE after searching {self.searched}\n"
                + json.dumps(self.witness, indent=2, sort_keys=True, ensure_ascii=False))

    def to_dict(self) -> dict:
        return {"law": self.law, "found": self.found, "searched": self.searched,
                "trials": self.trials, "witness": self.witness}


def falsify(law: str, scope) -> FalsifyResult:
    """First counterexample to ``law`` in canonical / seeded order, if any."""
    if law not in LAWS:
        raise InputError(f"unknown law {law!r}; known: {', '.join(LAWS)}")
    (rep,) = run_law_suite(scope, [law], max_witnesses=1, chunk_size=1, stop_at_first=True)
    return FalsifyResult(law, not rep.holds, scope.describe(), rep.trials,
                         rep.witnesses[0] if rep.witnesses else None)


def render_text(reports: list[LawReport]) -> str:
    lines = [r.line() for r in reports]
    for r in reports:
        for w in r.witnesses[:1]:
            lines.append(f"  witness for {r.law}: " + json.dumps(w, sort_keys=True, ensure_ascii=False))
    return "\n".join(lines)


def render_json(reports: list[LawReport]) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=2, sort_keys=True, ensure_ascii=False)
