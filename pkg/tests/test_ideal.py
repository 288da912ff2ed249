from softcluster.core import Carrier, SoftSet, all_soft_sets, make_soft_set
from softcluster.ideal import (
    full_ideal, ideal_from_generators, ideal_join, ideal_meet, slice_ideal, trivial_ideal,
    validate_ideal_family,
)
from tests.conftest import load_fixture


def worked_family():
    b = load_fixture("example_4_7")
    return b.carrier, [b.carrier.null()] + [b.sets[f"A{i}"] for i in range(1, 16)]


def test_worked_family_is_an_ideal_with_expected_top(sets47):
    carrier, fam = worked_family()
    v = validate_ideal_family(fam, carrier)
    assert v.valid
    assert v.top == sets47["A15"]
    assert str(v.top) == "{alpha: {y, z}, beta: {x, z}}"
    assert ideal_from_generators(carrier, fam).top == sets47["A15"]


def test_generators(xyz):
    assert ideal_from_generators(xyz, []).top == xyz.null()
    assert ideal_from_generators(xyz, [xyz.absolute()]).is_full()
    assert len(full_ideal(xyz).members()) == 64


def test_two_member_families_valid_only_for_at_most_one_cell(xyz):
    for a in all_soft_sets(xyz):
        v = validate_ideal_family([xyz.null(), a], xyz)
        assert v.valid == (len(a) <= 1), str(a)


def test_family_without_null_is_rejected(xyz, sets47):
    v = validate_ideal_family([sets47["R1"]], xyz)
    assert not v.valid


def test_membership(xyz, sets47):
    _, fam = worked_family()
    ideal = ideal_from_generators(xyz, fam)
    assert xyz.null() in ideal
    assert sets47["mk"]("y", "x") in ideal
    assert sets47["R1"] not in ideal
    members = {s.mask for s in ideal.members()}
    assert members == {s.mask for s in fam}


def test_join_and_meet():
    c = Carrier(("a", "b"), ("w",))
    i = ideal_from_generators(c, [make_soft_set(c, {"w": ["a"]})])
    j = ideal_from_generators(c, [make_soft_set(c, {"w": ["b"]})])
    assert ideal_join(i, j).is_full()
    assert ideal_meet(i, j).is_trivial()
    assert ideal_join(i, trivial_ideal(c)) == i
    assert ideal_join(i, full_ideal(c)).is_full()
    assert ideal_meet(i, full_ideal(c)) == i
    assert ideal_meet(i, trivial_ideal(c)).is_trivial()


def test_slices_of_worked_ideal(xyz):
    _, fam = worked_family()
    ideal = ideal_from_generators(xyz, fam)
    down = lambda s: {frozenset(m) for m in slice_ideal(ideal, s).members()}
    assert down("alpha") == {frozenset(), frozenset("y"), frozenset("z"), frozenset("yz")}
    assert down("beta") == {frozenset(), frozenset("x"), frozenset("z"), frozenset("xz")}
    assert {frozenset(m) for m in slice_ideal(trivial_ideal(xyz), "alpha").members()} == {frozenset()}
