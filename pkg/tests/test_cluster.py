import pytest
from hypothesis import given, settings, strategies as st

from softcluster.cluster import (
    ClusterContext, base_family, check_finite_ideal_characterisation,
    check_ideal_join_identity, classify, cluster_set, cluster_topology, decompose,
    is_adherent, is_c_closed, slice_commutation, FINITE_IDEAL_NOTE,
)
from softcluster.core import Carrier, SoftSet, all_soft_sets, make_soft_set
from softcluster.errors import InputError, PreconditionError
from softcluster.harness.spaces import random_space
from softcluster.ideal import full_ideal, principal, trivial_ideal
from softcluster.topology import (
    DEFINITIONAL, closure, discrete, generate_from_subbase, included_point, indiscrete,
)
from tests.conftest import load_fixture


def worked_space():
    b = load_fixture("example_4_7_subbase")
    return ClusterContext(b.topology, b.ideal), b


def test_ideal_members_have_empty_cluster_set():
    ctx, _ = worked_space()
    for m in ctx.ideal.members():
        assert cluster_set(ctx, m).is_null()


def test_indiscrete_dichotomy():
    c = Carrier(("x", "y"), ("alpha",))
    ctx = ClusterContext(indiscrete(c), principal(make_soft_set(c, {"alpha": ["y"]})))
    assert cluster_set(ctx, make_soft_set(c, {"alpha": ["x"]})) == c.absolute()
    assert cluster_set(ctx, make_soft_set(c, {"alpha": ["y"]})) == c.null()


def test_trivial_ideal_gives_closure():
    ctx, b = worked_space()
    plain = ClusterContext(b.topology, trivial_ideal(b.carrier))
    for a in all_soft_sets(b.carrier):
        assert cluster_set(plain, a) == closure(b.topology, a)


def test_fast_matches_definitional():
    ctx, b = worked_space()
    for a in all_soft_sets(b.carrier):
        assert cluster_set(ctx, a) == cluster_set(ctx, a, mode=DEFINITIONAL)


def test_c_closed_members(xyz):
    ctx, b = worked_space()
    for m in ctx.ideal.members():
        assert is_c_closed(ctx, m)
    for f in b.topology.closed_sets():
        assert is_c_closed(ctx, f)
    ind = ClusterContext(indiscrete(xyz), full_ideal(xyz))
    for a in all_soft_sets(xyz):
        if a != xyz.absolute():
            assert is_c_closed(ind, a)
            assert a.is_null() or not ind.topology.is_closed(a)


def test_named_cluster_topologies(xyz):
    ctx, b = worked_space()
    t = b.topology
    assert cluster_topology(ClusterContext(t, trivial_ideal(xyz))) == t
    assert cluster_topology(ClusterContext(t, full_ideal(xyz))) == discrete(xyz)
    p = xyz.point("alpha", "x")
    excluding = principal(xyz.absolute() - p.as_set(xyz))
    assert cluster_topology(ClusterContext(indiscrete(xyz), excluding)) == included_point(xyz, p)


def test_routes_agree():
    ctx, _ = worked_space()
    assert cluster_topology(ctx, route="enumerate") == cluster_topology(ctx, route="base")
    with pytest.raises(InputError):
        cluster_topology(ctx, route="sideways")


def test_base_family_covers_and_includes_opens():
    ctx, b = worked_space()
    base = base_family(ctx)
    for g in b.topology.opens:
        assert g in base


def test_classification_of_worked_sets():
    ctx, b = worked_space()
    r2 = classify(ctx, b.sets["R2"])
    assert r2.c_crowded and not r2.c_closed
    r1 = classify(ctx, b.sets["R1"])
    assert not r1.c_closed
    top = classify(ctx, b.ideal.top)
    assert top.c_closed


def test_every_small_space_is_adherent(xyz):
    ctx, _ = worked_space()
    assert is_adherent(ctx).holds
    assert is_adherent(ClusterContext(indiscrete(xyz), full_ideal(xyz))).holds
    assert is_adherent(ClusterContext(indiscrete(xyz), trivial_ideal(xyz))).holds


def test_decompositions():
    ctx, b = worked_space()
    for a in all_soft_sets(b.carrier):
        c = cluster_set(ctx, a)
        d = decompose(ctx, a, "crowded")
        assert d.part1 | d.part2 == a and (d.part1 & d.part2).is_null()
        assert d.part2 in ctx.ideal and d.part1 <= cluster_set(ctx, d.part1)
        if c <= a:
            for kind in ("regular", "closed"):
                d = decompose(ctx, a, kind)
                assert d.part1 == c and d.part2 == a - c
                assert cluster_set(ctx, d.part1) == d.part1
        else:
            with pytest.raises(PreconditionError):
                decompose(ctx, a, "regular")
    m = b.ideal.top
    assert decompose(ctx, m, "crowded") == decompose(ctx, m, "crowded").__class__("crowded-plus-ideal", b.carrier.null(), m)
    with pytest.raises(InputError):
        decompose(ctx, m, "sideways")


def test_join_identity_on_opposing_singletons():
    c = Carrier(("a", "b"), ("w",))
    i = principal(make_soft_set(c, {"w": ["a"]}))
    j = principal(make_soft_set(c, {"w": ["b"]}))
    rep = check_ideal_join_identity(indiscrete(c), i, j, c.absolute())
    assert not rep["stated"].holds
    assert rep["refined"].holds
    assert rep.values["c(T, I v J)(R)"] == "{w: {}}"
    assert rep.values["c(T, I)(R) n c(T, J)(R)"] == "{w: {a, b}}"


def test_join_identity_trivial_cases(xyz):
    ctx, b = worked_space()
    for r in (b.sets["R1"], b.sets["R3"], xyz.absolute()):
        assert check_ideal_join_identity(b.topology, b.ideal, trivial_ideal(xyz), r).holds
        assert check_ideal_join_identity(b.topology, b.ideal, b.ideal, r).holds


def test_finite_ideal_report(xyz):
    rep = check_finite_ideal_characterisation(discrete(xyz))
    assert rep.holds and rep.values["discrete"] == "True"
    rep = check_finite_ideal_characterisation(indiscrete(xyz))
    assert rep.holds
    assert all("left False, right False" == ch.detail for ch in rep.checks)
    assert rep.notes == [FINITE_IDEAL_NOTE]


def test_slice_commutation_on_worked_space():
    ctx, b = worked_space()
    for p in b.carrier.parameters:
        assert slice_commutation(ctx, p).holds


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.integers(0, 255), st.integers(0, 255))
def test_cluster_set_algebra_on_random_spaces(seed, a, b):
    carrier = Carrier.of_size(2, 4)
    sample = random_space(carrier, seed)
    ctx = ClusterContext(sample.topology, sample.ideal)
    r, s = SoftSet(carrier, a), SoftSet(carrier, b)
    cr, cs = cluster_set(ctx, r), cluster_set(ctx, s)
    assert cluster_set(ctx, r | s) == cr | cs
    assert cluster_set(ctx, r & s) <= cr & cs
    assert cr <= closure(sample.topology, r)
    assert cluster_set(ctx, cr) <= cr
    assert sample.topology.is_closed(cr)
    assert (r - cr) in ctx.ideal
    assert is_c_closed(ctx, r | cr)
