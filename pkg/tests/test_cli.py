import json
import subprocess
import sys
import xml.etree.ElementTree as ET

import pytest

from patiencesort.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def js(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


def test_xps(capsys):
    assert js(capsys, "xps", "64518723") == {"R": [[6, 4, 1], [5, 2], [8, 7, 3]], "S": [[4, 2, 1], [7, 3], [8, 6, 5]]}


def test_xps_inverse(capsys):
    pair = json.dumps({"R": [[6, 4, 1], [5, 2], [8, 7, 3]], "S": [[4, 2, 1], [7, 3], [8, 6, 5]]})
    assert js(capsys, "xps", "--inverse", pair) == {"perm": "64518723"}


def test_xps_inverse_unstable(capsys):
    code, _, err = run(capsys, "xps", "--inverse", '{"R": [[3, 1], [2]], "S": [[3, 1], [2]]}')
    assert code == 1 and "31-2" in err


def test_enumerate_f(capsys):
    out = js(capsys, "enumerate", "--table", "f", "--n", "14")
    assert out["rows"] == [1, 1, 2, 4, 9, 23, 66, 209, 718, 2645, 10373, 43090, 188803, 869191, 4189511]


@pytest.mark.parametrize("table", ["bell", "fib", "matrix", "inverse", "ftable"])
def test_enumerate_tables(capsys, table):
    out = js(capsys, "enumerate", "--table", table, "--n", "6")
    assert len(out["rows"]) == 7


def test_lis_and_sort(capsys):
    out = js(capsys, "lis", "364827159")
    assert out["length"] == 4 and out["table"] == [1, 2, 2, 3, 1, 3, 1, 3, 4]
    out = js(capsys, "sort", "64518723")
    assert out["piles"] == [[6, 4, 1], [5, 2], [8, 7, 3]] and out["shape"] == [3, 2, 3]
    code, text, _ = run(capsys, "sort", "64518723", "--pretty")
    assert code == 0 and text.splitlines() == ["1   3", "4 2 7", "6 5 8"]


def test_rsk_round_trip(capsys):
    out = js(capsys, "rsk", "364827159")
    assert out["P"] == [[1, 4, 5, 9], [2, 7], [3, 8], [6]]
    back = js(capsys, "rsk", "--inverse", json.dumps({"P": out["P"], "Q": out["Q"]}))
    assert back == {"perm": "364827159"}


def test_avoid(capsys):
    out = js(capsys, "avoid", "--n", "8", "--patterns", "3-~1-42,3-~1-24", "--count")
    assert out["count"] == 718 and "perms" not in out
    out = js(capsys, "avoid", "--n", "3", "--patterns", "3-~1-42")
    assert out["perms"] == ["123", "132", "213", "312", "321"]
    assert js(capsys, "avoid", "--perm", "3142", "--patterns", "3-~1-42")["avoids"] is True


def test_avoid_cap(capsys):
    code, _, err = run(capsys, "avoid", "--n", "13", "--patterns", "21", "--count")
    assert code == 1 and "12" in err


def test_geometry(capsys, tmp_path):
    path = tmp_path / "out.svg"
    out = js(capsys, "geometry", "--perm", "64518723", "--iterates", "all", "--svg", str(path), "--report", "crossings")
    assert out["R"] == [[6, 4, 1], [5, 2], [8, 7, 3]]
    ET.parse(path)
    out = js(capsys, "geometry", "--perm", "45312", "--report", "crossings")
    assert [(c["iterate"], c["kind"]) for c in out["crossings"]] == [(0, "polygonal"), (1, "polygonal")]
    out = js(capsys, "geometry", "--perm", "64518723", "--kind", "ne", "--report", "salient", "--iterates", "0")
    assert out["salient"] == [{"iterate": 0, "points": [[2, 6], [4, 4], [7, 5], [6, 8], [8, 7]]}]
    out = js(capsys, "geometry", "--perm", "64518723", "--kind", "ne")
    assert out["P"] == [[1, 2, 3], [4, 5, 7], [6, 8]]


def test_geometry_svg_stdout(capsys):
    code, text, _ = run(capsys, "geometry", "--perm", "312", "--svg", "-")
    assert code == 0 and text.startswith("<svg")


def test_geometry_bad_iterate(capsys):
    assert run(capsys, "geometry", "--perm", "312", "--iterates", "9")[0] == 1


def test_game(capsys):
    out = js(capsys, "game", "--strategy", "lookahead", "--deck", "64518723")
    assert out["piles"] == [[6, 4, 1], [5, 2], [8, 7, 3]] and out["count"] == out["lis"] == 3
    out = js(capsys, "game", "--strategy", "tcps-greedy", "--deck", "~3 ~2 3 ~1 1 2")
    assert out["count"] == 3 and out["piles"][0] == ["~3", "2"]
    out = js(capsys, "game", "--strategy", "tcps-naive", "--deck", "~3 ~2 3 ~1 1 2")
    assert out["count"] == 4


def test_game_random_is_seeded(capsys):
    a = run(capsys, "game", "--strategy", "greedy", "--random", "200", "--trials", "5", "--seed", "3")[1]
    b = run(capsys, "game", "--strategy", "greedy", "--random", "200", "--trials", "5", "--seed", "3")[1]
    assert a == b and json.loads(a)["equals_lis"] == 5


def test_deterministic_output(capsys):
    a = run(capsys, "geometry", "--perm", "4231")[1]
    b = run(capsys, "geometry", "--perm", "4231")[1]
    assert a == b


def test_validation_errors_exit_1(capsys):
    assert run(capsys, "lis", "112")[0] == 1
    assert run(capsys, "rsk", "--inverse", "{not json")[0] == 1
    assert run(capsys, "rsk", "--inverse", '{"P": [[1, 2]], "Q": [[1], [2]]}')[0] == 1
    assert run(capsys, "game", "--deck", "1 1")[0] == 1


def test_usage_errors_exit_2(capsys):
    for argv in (["bogus"], ["enumerate", "--table", "nope", "--n", "3"], ["lis"], ["sort", "12", "--frobnicate"]):
        with pytest.raises(SystemExit) as e:
            main(argv)
        assert e.value.code == 2
    assert "usage" in capsys.readouterr().err


def test_verify_small(capsys):
    code, out, _ = run(capsys, "verify", "--max-n", "5")
    report = json.loads(out)
    assert [c["name"] for c in report["checks"]][:3] == ["f-sequence", "bell-counts", "matrix-identity"]
    assert len(report["checks"]) == 10
    # the ~2-41-3 chain is the one check that already fails at this size
    failing = [c["name"] for c in report["checks"] if c["status"] != "pass"]
    assert failing == ["pattern-identities"] and code == 1


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "patiencesort", "lis", "4321"], capture_output=True, text=True)
    assert r.returncode == 0 and json.loads(r.stdout)["length"] == 1
