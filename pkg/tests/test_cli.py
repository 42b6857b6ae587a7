import json

import pytest

from cosmetic import cli
from cosmetic.catalog import bundled_catalog, dump_catalog


def out(argv, capsys):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_thm2_golden(capsys):
    code, stdout, _ = out(["thm2-solve", "--alpha-max", "10", "--m-max", "10", "--json"], capsys)
    assert code == 0
    assert stdout == '{"solutions":[[3,0,9],[-3,-1,9]]}\n'


def test_dedekind_golden(capsys):
    code, stdout, _ = out(["dedekind", "--q", "1", "--p", "9"], capsys)
    assert code == 0 and stdout.strip() == "14/27"
    assert cli.run(["dedekind", "--q", "1", "--p", "9", "--method", "sawtooth"]).payload


def test_thm3_enum_seven_pairs():
    res = cli.run(["thm3-enum", "--json"])
    assert res.status == "ok"
    pairs = res.payload["pairs"]
    assert sorted(map(tuple, pairs)) == sorted([
        ("1/4", "-1/4"), ("1/3", "-1/3"), ("1/2", "-1/2"), ("1", "-1"),
        ("2", "-2"), ("3", "-3"), ("4", "-4")])


def test_unknown_subcommand(capsys):
    code, _, err = out(["bogus"], capsys)
    assert code != 0
    assert "usage" in err.lower()


def test_domain_error_propagates(capsys):
    code, _, err = out(["dedekind", "--q", "2", "--p", "4"], capsys)
    assert code == 1 and "coprime" in err


@pytest.mark.parametrize("argv, key, expected", [
    (["a2", "--poly", "[[-1,1],[0,-1],[1,1]]"], "a2", 1),
    (["a2", "--p", "9"], "a2_required", "1"),
    (["gaps", "--n", "1,2,3"], "a2", 6),
    (["thm1-candidates", "--genus", "1"], "candidates", [[9, 1]]),
    (["thm1-check", "--genus", "1", "--a2", "1", "--p", "11"], "overall", "obstructed"),
    (["remark-slopes", "--m", "0"], "pair", ["9", "9/2"]),
    (["cor6", "--pair", "4,-4"], "toroidal_possible", True),
    (["sfs-compare", "--a", '{"base":"sphere","fibers":[[3,1],[4,1],[7,-4]]}',
      "--b", '{"base":"sphere","fibers":[[2,1],[3,1],[19,-16]]}'], "result", "distinct"),
])
def test_json_payloads(argv, key, expected):
    res = cli.run(argv + ["--json"])
    assert res.status == "ok", res.text
    assert res.payload[key] == expected
    json.loads(res.render())


def test_h1_remark():
    res = cli.run(["h1", "--seifert", '{"base":"disk","fibers":[[3,-1],[5,1],[5,-1],[2,1]]}',
                   "--json"])
    assert res.payload["group"] == {"free_rank": 1, "torsion": [5]}
    res = cli.run(["h1", "--seifert", '{"base":"disk","fibers":[[3,-1],[5,1],[5,-1],[2,1]]}',
                   "--kill", "1,0", "--lambda", "6,1", "--json"])
    assert res.payload["group"] == {"free_rank": 0, "torsion": [25]}


def test_snf_cli():
    res = cli.run(["snf", "--matrix", "[[2,0],[0,3]]", "--json"])
    assert res.payload["diagonal"] == [1, 6]


def test_p7_cli():
    res = cli.run(["p7-families", "--s-range", "1", "--json"])
    assert res.payload["distances"] == [[-1, 77], [0, 21], [1, 119]]


def test_pipeline_cli(tmp_path, capsys):
    path = tmp_path / "cat.json"
    path.write_text(dump_catalog(bundled_catalog()))
    code, stdout, _ = out(["pipeline", "--catalog", str(path), "--json"], capsys)
    assert code == 0
    data = json.loads(stdout)
    assert [s["name"] for s in data["survivors"]] == ["figure-eight"]
    code, stdout2, _ = out(["pipeline", "--json"], capsys)
    assert json.loads(stdout2)["survivors"] == data["survivors"]


def test_json_is_byte_stable():
    a = cli.run(["thm3-enum", "--json"]).render()
    b = cli.run(["thm3-enum", "--json"]).render()
    assert a == b


def test_human_output_lists_assumptions():
    res = cli.run(["thm3-enum"])
    assert "assumes:" in res.render()
