import io
import json
import subprocess
import sys

import pytest

from pytri.cli import main


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def run_json(*argv):
    code, out, err = run(*argv)
    assert code == 0, err
    return json.loads(out)


def test_triple_info():
    d = run_json("triple", "info", "3", "4", "5")
    assert d["radii"] == [1, 2, 3, 6]
    assert d["pseq"] == [1, 1, 2, 3]
    assert d["quadruple"] == [6, 3, 2, -1]
    assert d["tangents"] == ["1/2", "1/3"]
    assert d["area"] == 6


def test_tree_commands():
    assert run_json("tree", "ls", "--max-c", "30")["count"] == 5
    assert run_json("tree", "ls", "--max-c", "1000", "--method", "price")["count"] == 158
    kids = run_json("tree", "children", "3", "4", "5")["children"]
    assert kids == {"L": [15, 8, 17], "M": [21, 20, 29], "R": [5, 12, 13]}
    assert run_json("tree", "parent", "33", "56", "65")["parent"] == [15, 8, 17]
    assert run_json("tree", "parent", "3", "4", "5")["parent"] is None
    assert run_json("tree", "path", "33", "56", "65")["path"] == "LR"
    assert run_json("tree", "path", "--at", "LR")["triple"] == [33, 56, 65]


@pytest.mark.parametrize("argv", [["dce", "root", "-3", "4", "21", "28"], ["dce", "root", "--", "-3", "4", "21", "28"]])
def test_dce_root_negative_numbers(argv):
    d = run_json(*argv)
    assert d["root"] == {"quadruple": [-3, 4, 12, 13], "tag": "=="}
    assert d["chain"][0] == [-3, 4, 21, 28]


def test_dce_other():
    assert run_json("dce", "verify", "-1", "2", "2", "3")["dce"] is True
    assert run_json("dce", "verify", "1", "2", "3", "4")["dce"] is False
    assert run_json("dce", "reflect", "6", "3", "2", "-1")["reflected"] == [2, 11, 14, 23]
    assert run_json("dce", "reflect", "6", "3", "2", "-1", "--index", "4")["result"] == [6, 3, 2, 23]
    fam = run_json("dce", "families", "--k", "3")["families"]
    assert len(fam) == 3 and fam[0]["pattern_8_4"] == [-2, 10, 3, 7]
    assert run_json("dce", "solve", "1", "1", "1")["roots"] == ["3 - 2*sqrt(3)", "3 + 2*sqrt(3)"]
    assert run_json("dce", "solve", "2", "2", "3")["roots"] == [-1, 15]


def test_fractions_are_strings():
    d = run_json("triple", "triangle", "1/2", "1", "1")
    assert d["radii"] == ["1/4", "1/4", "3/4", "5/4"]


def test_geom_verify():
    d = run_json("geom", "verify", "3", "4", "5")
    assert d["failures"] == [] and d["orthogonal_triples"] is True
    assert d["nine_point"]["parent"] == [0, 1, 1]


def test_table_roots():
    d = run_json("table", "roots", "--max-c", "30")
    assert d["roots"][0]["root"] == [-1, 2, 2, 3]
    assert d["roots"][1] == {"root": [-2, 3, 6, 7], "tag": "==", "eq24": [1, 2], "from": [[3, 4, 5], [5, 12, 13]]}


def test_pack_gen(tmp_path):
    svg = tmp_path / "p.svg"
    jl = tmp_path / "p.jsonl"
    d = run_json("pack", "gen", "--triple", "3,4,5", "--bound", "6", "--svg", str(svg), "--jsonl", str(jl))
    assert d["curvatures"] == [-1, 2, 2, 3, 3, 6, 6, 6, 6]
    first = svg.read_bytes()
    run_json("pack", "gen", "--triple", "3,4,5", "--bound", "6", "--svg", str(svg))
    assert svg.read_bytes() == first
    assert len(jl.read_text().splitlines()) == 9
    d = run_json("pack", "gen", "--quad=-2,3,6,7", "--bound", "15")
    assert d["rectangles"][0] == {"quadruple": [-2, 3, 10, 15], "triple": [5, 12, 13]}


def test_svg_to_stdout():
    code, out, _ = run("--format", "svg", "pack", "gen", "--triple", "3,4,5", "--bound", "6")
    assert code == 0 and out.startswith("<?xml")
    code, _, err = run("--format", "svg", "tree", "ls", "--max-c", "5")
    assert code == 1 and "pack gen" in err


def test_text_format():
    code, out, _ = run("--format", "text", "triple", "info", "3", "4", "5")
    assert code == 0 and "radii: [1, 2, 3, 6]" in out


def test_output_is_byte_stable():
    argv = ["table", "roots", "--max-c", "200"]
    assert run(*argv)[1] == run(*argv)[1]


@pytest.mark.parametrize(
    "argv",
    [
        ["triple", "info", "3", "4", "6"],
        ["triple", "info", "3", "4"],
        ["dce", "root", "1", "2", "3", "4"],
        ["dce", "reflect", "1", "2", "3", "4"],
        ["dce", "reflect", "-1", "2", "2", "3", "--index", "9"],
        ["pack", "gen", "--triple", "3,4,x", "--bound", "5"],
        ["pack", "gen", "--bound", "5"],
        ["tree", "path", "--at", "LQ"],
        ["frobnicate"],
        [],
    ],
)
def test_invalid_input_exit_1(argv):
    code, out, err = run(*argv)
    assert code == 1
    assert out == "" and err


def test_max_bound_env(monkeypatch):
    monkeypatch.setenv("PYTRI_MAX_BOUND", "10")
    code, _, err = run("pack", "gen", "--triple", "3,4,5", "--bound", "11")
    assert code == 1 and "PYTRI_MAX_BOUND" in err
    assert run("pack", "gen", "--triple", "3,4,5", "--bound", "10")[0] == 0


def test_invariant_violation_exit_2(monkeypatch):
    from pytri import cli
    from pytri.errors import InvariantViolation

    def boom(ns):
        raise InvariantViolation("broken")

    monkeypatch.setattr(cli, "cmd_tree_ls", boom)
    code, _, err = run("tree", "ls", "--max-c", "10")
    assert code == 2 and "broken" in err


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "pytri", "triple", "info", "5", "12", "13"], capture_output=True, text=True
    )
    assert res.returncode == 0
    assert json.loads(res.stdout)["quadruple"] == [15, 10, 3, -2]
    res = subprocess.run([sys.executable, "-m", "pytri", "nope"], capture_output=True, text=True)
    assert res.returncode == 1 and "usage" in res.stderr
