import pytest
from hypothesis import given, strategies as st

from softcluster.core import (
    Carrier, SoftSet, all_soft_sets, canonical_key, complement, difference, fiber,
    graph_decode, graph_encode, intersect, is_subset, make_soft_set, parse_soft_set, union,
)
from softcluster.errors import CarrierMismatch, InputError, ResourceError


def test_fiber_map_builds_expected_cells(xyz, sets47):
    r1 = make_soft_set(xyz, {"alpha": ["x"], "beta": ["y"]})
    assert r1 == sets47["R1"]
    assert str(r1) == "{alpha: {x}, beta: {y}}"
    assert make_soft_set(xyz, {}).is_null()
    assert make_soft_set(xyz, {"alpha": ["x", "x"]}) == make_soft_set(xyz, {"alpha": ["x"]})


def test_unknown_labels_rejected(xyz):
    with pytest.raises(InputError):
        make_soft_set(xyz, {"gamma": ["x"]})
    with pytest.raises(InputError):
        make_soft_set(xyz, {"alpha": ["w"]})


def test_carrier_validation():
    with pytest.raises(InputError):
        Carrier((), ("a",))
    with pytest.raises(InputError):
        Carrier(("x", "x"), ("a",))
    with pytest.raises(ResourceError):
        Carrier.of_size(5, 13)


def test_fiberwise_operations_on_worked_sets(sets47):
    s = sets47["mk"]
    r1, r2, r3 = sets47["R1"], sets47["R2"], sets47["R3"]
    assert union(r1, r2) == r2
    assert intersect(r2, r3) == s("xy", "y")
    assert difference(r3, r1) == s("y", "z")
    assert union(r2, r3) == s("xy", "xyz")
    assert is_subset(r1, r3)
    assert not is_subset(r3, r1)
    assert fiber(r1, "alpha") == {"x"}
    assert fiber(r1.carrier.null(), "beta") == frozenset()
    assert fiber(r1.carrier.absolute(), "alpha") == {"x", "y", "z"}


def test_complement_of_extremes(xyz):
    assert complement(xyz.absolute()) == xyz.null()
    assert complement(xyz.null()) == xyz.absolute()


def test_graph_round_trip(xyz, sets47):
    assert graph_encode(sets47["R1"]) == {("alpha", "x"), ("beta", "y")}
    assert graph_encode(xyz.null()) == frozenset()
    for a in all_soft_sets(xyz):
        assert graph_decode(graph_encode(a), xyz) == a


def test_mixed_carriers_rejected(xyz):
    other = Carrier.of_size(2, 3)
    with pytest.raises(CarrierMismatch):
        union(xyz.null(), other.null())


def test_literal_parsing(xyz, sets47):
    assert parse_soft_set(xyz, "{alpha: {x}, beta: {y}}") == sets47["R1"]
    assert parse_soft_set(xyz, "{}") == xyz.null()
    with pytest.raises(InputError):
        parse_soft_set(xyz, "{alpha: {x}")
    for a in all_soft_sets(xyz):
        assert parse_soft_set(xyz, str(a)) == a


def test_canonical_order_is_lexicographic_on_cells():
    c = Carrier.of_size(1, 3)
    order = [s.mask for s in all_soft_sets(c)]
    assert order == sorted(range(8), key=canonical_key)
    assert order[:4] == [0, 0b001, 0b011, 0b111]


masks6 = st.integers(min_value=0, max_value=63)


@given(masks6, masks6, masks6)
def test_boolean_algebra_laws(a, b, c):
    car = Carrier(("x", "y", "z"), ("alpha", "beta"))
    A, B, C = (SoftSet(car, m) for m in (a, b, c))
    assert ~(A | B) == ~A & ~B
    assert ~(A & B) == ~A | ~B
    assert A & (B | C) == (A & B) | (A & C)
    assert A - B == A & ~B
    assert car.absolute() - A == ~A
    assert (A & ~A).is_null()
    assert (A <= B) == (A | B == B)
    assert A | car.null() == A and A | car.absolute() == car.absolute()
