import json

import pytest

from softcluster.errors import InputError, PreconditionError
from softcluster.expr import eval_expression
from softcluster.spacefile import (
    bundle_from_dict, bundle_to_dict, dumps, fixture_names, fixture_path, loads,
    parse_space_file,
)
from tests.conftest import load_fixture


def test_shipped_fixtures_are_listed():
    assert fixture_names() == [
        "example_4_11", "example_4_12", "example_4_13", "example_4_14", "example_4_3",
        "example_4_7", "example_4_7_subbase", "prop4_9_counterexample",
    ]
    with pytest.raises(InputError):
        fixture_path("missing")


def test_worked_fixture_reports_invalid_topology_with_witness():
    b = load_fixture("example_4_7")
    assert not b.valid
    assert b.topology is None
    v = b.topology_verdict
    assert [str(w) for w in v.witness] == [
        "{alpha: {x, y}, beta: {x, y}}", "{alpha: {x, y}, beta: {y, z}}"]
    assert str(v.result) == "{alpha: {x, y}, beta: {y}}"
    assert str(b.ideal_verdict.top) == "{alpha: {y, z}, beta: {x, z}}"


def test_subbase_variant_is_valid():
    b = load_fixture("example_4_7_subbase")
    assert b.valid and len(b.topology) == 10


@pytest.mark.parametrize("name", ["example_4_3", "example_4_7", "example_4_7_subbase",
                                  "example_4_11", "example_4_14", "prop4_9_counterexample"])
def test_round_trip(name):
    b = load_fixture(name)
    again = loads(dumps(b))
    assert bundle_to_dict(again) == bundle_to_dict(b)
    assert again.sets == b.sets
    assert again.topology == b.topology
    assert (again.ideal is None) == (b.ideal is None)
    if b.ideal is not None:
        assert again.ideal.top == b.ideal.top


def test_semantic_errors():
    base = {"universe": ["x", "y"], "parameters": ["a"]}
    with pytest.raises(InputError, match="'w'"):
        bundle_from_dict({**base, "sets": {"A": {"a": ["w"]}}})
    with pytest.raises(InputError, match="unresolved set name 'B'"):
        bundle_from_dict({**base, "topology": {"opens": ["B"]}})
    with pytest.raises(InputError, match="reserved"):
        bundle_from_dict({**base, "sets": {"X": {}}})
    with pytest.raises(InputError, match="unknown top-level"):
        bundle_from_dict({**base, "extra": 1})


def test_parse_error_reports_position(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{\n  "universe": ["x"],\n  "parameters": ["a"]\n  "sets": {}\n}')
    with pytest.raises(InputError, match="line 4, column 3"):
        parse_space_file(p)
    with pytest.raises(InputError, match="cannot read"):
        parse_space_file(tmp_path / "absent.json")


def test_expressions():
    b = load_fixture("example_4_7_subbase")
    assert str(eval_expression(b, "cl(Phi)")) == "{alpha: {}, beta: {}}"
    assert eval_expression(b, "~(R1 u R3)") == eval_expression(b, "~R1 n ~R3")
    assert eval_expression(b, "R2 n R3") == eval_expression(b, "{alpha: {x, y}, beta: {y}}")
    assert eval_expression(b, "R3 - R1 u R1") == eval_expression(b, "(R3 - R1) u R1")
    assert eval_expression(b, "X - R1 n R2") == eval_expression(b, "X - (R1 n R2)")
    assert eval_expression(b, "int(X)") == b.carrier.absolute()
    assert eval_expression(b, "cl(R1)") == eval_expression(b, "R1 u D(R1)")
    assert eval_expression(b, "c(R1) - cl(R1)") == b.carrier.null()
    for bad in ("R1 u", "(R1", "R1 R2", "Q", "cl R1", "R1 $ R2"):
        with pytest.raises(InputError):
            eval_expression(b, bad)


def test_expression_dichotomy_on_excluding_ideal():
    b = load_fixture("example_4_14")
    assert eval_expression(b, "c(R1)") == b.carrier.absolute()
    assert eval_expression(b, "c(R2)") == b.carrier.null()


def test_operators_need_structure():
    data = json.loads(fixture_path("example_4_14").read_text())
    del data["ideal"]
    b = bundle_from_dict(data)
    assert eval_expression(b, "cl(R1)") == b.carrier.absolute()
    with pytest.raises(PreconditionError):
        eval_expression(b, "c(R1)")
    del data["topology"]
    with pytest.raises(PreconditionError):
        eval_expression(bundle_from_dict(data), "int(R1)")
