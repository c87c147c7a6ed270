import json
import subprocess
import sys

import pytest
from hypothesis import given

from hypercut import errors
from hypercut.cli import main
from hypercut.hgr import format_hgr, parse_hgr
from helpers import complete, cycle, hypergraphs


def test_parse_simple():
    G = parse_hgr("2 3\n1 2\n2 3\n")
    assert G.n == 3 and [e.vertices for e in G.edges] == [(0, 1), (1, 2)]


def test_parse_spanning():
    G = parse_hgr("1 4\n1 2 3 4\n")
    assert G.m == 1 and G.edges[0].vertices == (0, 1, 2, 3)


def test_parse_weights_and_comments():
    G = parse_hgr("% header next\n2 3 1\n% edge lines\n5 1 2\n\n1 2 3\n")
    assert G.weights == (5, 1)


@pytest.mark.parametrize("text, line", [
    ("1 2\n1 3\n", 2),
    ("2 3\n1 2\n", None),
    ("1 3\n1 x\n", 2),
    ("1 3 1\n0 1 2\n", 2),
    ("1 3 1\n4\n", 2),
    ("1\n", 1),
    ("1 3 10\n1 2\n", 1),
    ("", None),
    ("1 3\n1 2\n2 3\n", 3),
])
def test_parse_errors(text, line):
    with pytest.raises(errors.ParseError) as info:
        parse_hgr(text)
    assert info.value.line == line


@given(hypergraphs(n_lo=1, max_weight=3))
def test_round_trip(G):
    assert parse_hgr(format_hgr(G)) == G


@pytest.fixture
def files(tmp_path):
    out = {}
    for name, G in {"c4": cycle(4), "k6": complete(6)}.items():
        p = tmp_path / f"{name}.hgr"
        p.write_text(format_hgr(G))
        out[name] = str(p)
    p = tmp_path / "two.hgr"
    p.write_text("1 2\n1 2\n")
    out["two"] = str(p)
    p = tmp_path / "bad.hgr"
    p.write_text("1 2\n1 3\n")
    out["bad"] = str(p)
    return out


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def test_kcut_flat(capsys, files):
    code, out = run(capsys, "kcut", "--k", "2", "--algo", "flat", files["c4"])
    doc = json.loads(out.out)
    assert code == 0 and doc["opt_value"] == 2 and len(doc["cut_sets"]) == 6
    assert doc["cut_sets"] == sorted(doc["cut_sets"])
    assert doc["instance"] == {"n": 4, "m": 4, "p": 8}


def test_minmax_k6(capsys, files):
    code, out = run(capsys, "minmax", "--k", "3", files["k6"])
    assert code == 0 and json.loads(out.out)["lambda"] == 8


def test_k_too_large(capsys, files):
    code, out = run(capsys, "kcut", "--k", "5", files["two"])
    assert code == 2 and "KOutOfRange" in out.err


def test_parse_error_exit(capsys, files):
    code, out = run(capsys, "kcut", "--k", "2", files["bad"])
    assert code == 3 and "line 2" in out.err


def test_missing_file_exit(capsys, tmp_path):
    code, _ = run(capsys, "kcut", "--k", "2", str(tmp_path / "nope.hgr"))
    assert code == 3


def test_oracle_cap_exit(capsys, files):
    code, out = run(capsys, "oracle", "--k", "2", "--max-oracle-n", "3", files["c4"])
    assert code == 4 and "TooLarge" in out.err


def test_usage_error_exit(files):
    with pytest.raises(SystemExit) as info:
        main(["kcut", files["c4"]])
    assert info.value.code == 2


def test_stcut(capsys, files):
    code, out = run(capsys, "stcut", "--source", "1", "--sink", "3", files["c4"])
    doc = json.loads(out.out)
    assert code == 0 and doc["source_side"] == [0] and doc["opt_value"] == 2
    code, out = run(capsys, "stcut", "--source", "1", "--sink", "1", files["c4"])
    assert code == 2


def test_oracle_and_verify(capsys, files):
    code, out = run(capsys, "oracle", "--k", "2", files["c4"])
    doc = json.loads(out.out)
    assert code == 0 and doc["partition_count"] == 7 and doc["opt_minmax"] == 2
    code, out = run(capsys, "verify", "--theorem", "recovery", "--k", "2", files["c4"])
    doc = json.loads(out.out)
    assert code == 0 and doc["checked"] == 12 and doc["failed"] == []
    code, out = run(capsys, "verify", "--theorem", "1", "--k", "3", files["c4"])
    doc = json.loads(out.out)
    assert code == 0 and doc["checked"] > 0 and doc["failed"] == []


def test_summary_output(capsys, files):
    code, out = run(capsys, "kcut", "--k", "2", "--summary", files["c4"])
    assert code == 0 and "opt_value: 2" in out.out and "cut_sets: 6" in out.out


def test_timing_is_opt_in(capsys, files):
    _, out = run(capsys, "kcut", "--k", "2", files["c4"])
    assert "wall_time_ms" not in json.loads(out.out)
    _, out = run(capsys, "kcut", "--k", "2", "--timing", files["c4"])
    assert "wall_time_ms" in json.loads(out.out)


@pytest.mark.parametrize("argv", [
    ["kcut", "--k", "3", "--algo", "dc"],
    ["kcut", "--k", "3", "--algo", "flat"],
    ["minmax", "--k", "3"],
])
def test_output_identical_across_threads(files, argv):
    outs = [
        subprocess.run(
            [sys.executable, "-m", "hypercut", *argv, "--threads", t, files["k6"]],
            capture_output=True, check=True,
        ).stdout
        for t in ("1", "4", "1")
    ]
    assert outs[0] == outs[1] == outs[2]
