import json

import pytest

from softcluster.cli import main
from softcluster.spacefile import fixture_path


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_validate_reports_invalid_family(capsys):
    code, out, _ = run(capsys, "validate", str(fixture_path("example_4_7")))
    assert code == 1
    assert "INVALID" in out and "{alpha: {x, y}, beta: {y}}" in out
    code, out, _ = run(capsys, "validate", "example_4_7_subbase", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["valid"] and data["ideal"]["top"] == "{alpha: {y, z}, beta: {x, z}}"


def test_eval(capsys):
    code, out, _ = run(capsys, "eval", "example_4_14", "--expr", "c(R1)")
    assert code == 0 and out.strip() == "{alpha: {x, y, z}, beta: {x, y, z}}"
    code, _, err = run(capsys, "eval", "example_4_14", "--expr", "c(R1")
    assert code == 2 and "syntax error" in err
    code, _, err = run(capsys, "eval", "example_4_7", "--expr", "cl(R1)")
    assert code == 2 and "topology" in err


def test_cluster_topology(capsys):
    assert run(capsys, "cluster-topology", "example_4_14", "--count")[1].strip() == "33"
    assert run(capsys, "cluster-topology", "example_4_12", "--count")[1].strip() == "64"
    code, out, _ = run(capsys, "cluster-topology", "example_4_3", "--list", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["count"] == 64 and data["opens"][0] == "{alpha: {}, beta: {}}"


def test_decompose(capsys):
    code, out, _ = run(capsys, "decompose", "example_4_7_subbase", "--set", "R2", "--kind", "crowded")
    assert code == 0 and "part2 = {alpha: {}, beta: {}}" in out
    code, out, _ = run(capsys, "decompose", "example_4_7_subbase", "--set", "R1", "--kind", "regular")
    assert code == 1 and "not c-closed" in out
    code, _, err = run(capsys, "decompose", "example_4_7_subbase", "--set", "Q", "--kind", "closed")
    assert code == 2 and "unresolved" in err


def test_check_file_and_random(capsys):
    code, out, _ = run(capsys, "check", "example_4_11", "--laws", "oracle,thm5.6")
    assert code == 0 and out.count("PASS") == 2
    code, out, _ = run(capsys, "check", "--random", "--cells", "6", "--trials", "10",
                       "--laws", "oracle", "--format", "json")
    assert code == 0 and json.loads(out)[0]["trials"] == 160
    code, out, _ = run(capsys, "check", "prop4_9_counterexample", "--laws", "prop4.9-stated")
    assert code == 0 and "FAIL (statement known to admit counterexamples)" in out


def test_falsify(capsys):
    code, out, _ = run(capsys, "falsify", "--law", "prop4.9-stated", "--exhaustive", "2")
    assert code == 1 and "COUNTEREXAMPLE" in out
    code, out, _ = run(capsys, "falsify", "--law", "prop4.9-refined", "--exhaustive", "2",
                       "--format", "json")
    assert code == 0 and json.loads(out)["found"] is False
    code, _, _ = run(capsys, "falsify", "--law", "oracle", "--seed", "1", "--trials", "5")
    assert code == 0
    assert run(capsys, "falsify", "--law", "nothing")[0] == 2
    assert run(capsys, "falsify", "--law", "oracle", "--exhaustive", "2", "--seed", "1")[0] == 2


def test_enumerate_and_limits(capsys):
    code, out, _ = run(capsys, "enumerate", "--cells", "3")
    assert code == 0 and out.strip().endswith("total: 498")
    assert run(capsys, "enumerate", "--cells", "5")[0] == 3
    assert run(capsys, "falsify", "--law", "oracle", "--exhaustive", "5")[0] == 3


def test_usage_errors_exit_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
    assert run(capsys, "validate", "/nonexistent/file.json")[0] == 2
    assert run(capsys, "check")[0] == 2
