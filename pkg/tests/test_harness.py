import pytest

from softcluster.core import Carrier
from softcluster.errors import InputError, ResourceError
from softcluster.harness.laws import (
    DEFAULT_LAWS, LAWS, Exhaustive, Random, Single, falsify, render_json, render_text,
    run_law_suite,
)
from softcluster.harness.spaces import (
    SpaceSample, count_spaces, enumerate_spaces, enumerate_topologies, random_space,
    random_spaces,
)
from softcluster.spacefile import sample_from_dict, sample_to_dict
from tests.conftest import load_fixture


def test_one_cell_carrier_has_one_topology_and_two_ideals():
    samples = list(enumerate_spaces(1))
    assert len(samples) == 2
    assert {s.ideal.top.mask for s in samples} == {0, 1}
    assert samples[0].topology.is_discrete() and samples[0].topology.is_indiscrete()


def test_space_counts():
    assert count_spaces(2) == 2 + 16 + 16
    assert count_spaces(4) == sum(1 for _ in enumerate_spaces(4)) == 17538
    with pytest.raises(ResourceError):
        next(enumerate_spaces(5))
    with pytest.raises(ResourceError):
        enumerate_topologies(Carrier.of_size(1, 5))


def test_random_spaces_are_reproducible():
    a = [sample_to_dict(s) for s in random_spaces(6, 9, 20, seed=7)]
    b = [sample_to_dict(s) for s in random_spaces(6, 9, 20, seed=7)]
    c = [sample_to_dict(s) for s in random_spaces(6, 9, 20, seed=8)]
    assert a == b and a != c
    carrier = Carrier.of_size(2, 4)
    assert sample_to_dict(random_space(carrier, 3)) == sample_to_dict(random_space(carrier, 3))


def test_sample_serialisation_round_trip():
    for s in random_spaces(3, 6, 10, seed=1):
        back = sample_from_dict(sample_to_dict(s))
        assert back.topology == s.topology and back.ideal.top == s.ideal.top


def test_small_exhaustive_suite_passes():
    reports = run_law_suite(Exhaustive(3))
    assert [r.law for r in reports] == DEFAULT_LAWS
    assert all(r.holds and r.trials > 0 for r in reports), render_text(reports)


def test_empty_selection_gives_empty_report():
    assert run_law_suite(Exhaustive(2), []) == []


def test_unknown_law_is_an_error():
    with pytest.raises(InputError):
        run_law_suite(Exhaustive(1), ["no-such-law"])
    with pytest.raises(InputError):
        falsify("no-such-law", Exhaustive(1))


def test_stated_join_identity_is_falsified_on_two_cells():
    result = falsify("prop4.9-stated", Exhaustive(2))
    assert result.found
    w = result.witness
    assert w["provenance"] == "enumerated shape=1x2 topology=0 top=1"
    assert w["space"]["topology"]["opens"] == ["{a0: {}}", "{a0: {x0, x1}}"]
    assert w["values"] == {
        "I_top": "{a0: {x0}}", "J_top": "{a0: {x1}}", "R": "{a0: {x0, x1}}",
        "lhs": "{a0: {}}", "rhs": "{a0: {x0, x1}}",
    }


def test_additivity_has_no_counterexample_on_four_cells():
    result = falsify("prop3.3-4", Exhaustive(4))
    assert not result.found and result.witness is None
    assert result.trials > 0


def test_workers_do_not_change_reports():
    scope = Random(4, 6, 40, seed=3)
    one = render_json(run_law_suite(scope, ["oracle", "prop4.9-stated", "thm5.6"]))
    two = render_json(run_law_suite(scope, ["oracle", "prop4.9-stated", "thm5.6"], workers=2))
    assert one == two


def test_single_space_scope_covers_topology_only_laws():
    b = load_fixture("example_4_7_subbase")
    sample = SpaceSample(b.carrier, b.topology, b.ideal, "fixture")
    reports = run_law_suite(Single(sample), ["kuratowski", "thm5.1", "slices-graph"])
    assert all(r.holds and r.trials > 0 for r in reports)


def test_every_law_has_description_and_body():
    for name, law in LAWS.items():
        assert law.name == name and law.anchor and callable(law.body)
    assert "prop4.9-stated" not in DEFAULT_LAWS
