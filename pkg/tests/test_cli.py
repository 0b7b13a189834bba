import json
from pathlib import Path

import pytest

from aztecdiamond.aztec import Tiling, enumerate_tilings
from aztecdiamond.cli import main
from aztecdiamond.render import SCALE, tiling_svg

FIXTURES = Path(__file__).parent / "fixtures"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize(
    "argv,expected",
    [
        (["count", "aztec", "4"], "1024"),
        (["count", "schroeder-large", "5"], "394"),
        (["count", "schroeder-small", "5"], "197"),
        (["count", "det", "--kind", "g0", "--n", "3"], "8"),
        (["count", "det", "--kind", "h1", "--n", "3"], "64"),
        (["count", "aztec", "3", "--method", "enumeration"], "64"),
        (["count", "aztec", "3", "--method", "determinant"], "64"),
    ],
)
def test_count(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out.strip() == expected


def test_count_json_is_exact_decimal(capsys):
    code, out, _ = run(capsys, "count", "aztec", "30", "--json")
    rec = json.loads(out)
    assert code == 0
    assert rec == {"target": "aztec", "n": 30, "method": "formula", "value": str(2 ** 465)}
    assert "e" not in rec["value"].lower()


@pytest.mark.parametrize(
    "argv",
    [["count", "det", "--n", "3"], ["count", "aztec"], ["count", "pyramid", "3"], ["verify", "--suite", "nope"],
     ["render"], ["count", "aztec", "0"]],
)
def test_usage_errors_exit_2(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_enumeration_cutoff_is_runtime_error(capsys):
    code, _, err = run(capsys, "count", "aztec", "6", "--method", "enumeration")
    assert code == 1 and "--max-enum-n" in err
    code, _, err = run(capsys, "enumerate", "tilings", "3", "--max-enum-n", "2")
    assert code == 1


@pytest.mark.parametrize(
    "argv,records",
    [(["enumerate", "tilings", "2"], 8), (["enumerate", "tilings", "1"], 2),
     (["enumerate", "families", "2", "--scheme", "omega"], 2), (["enumerate", "families", "3"], 64)],
)
def test_enumerate(capsys, argv, records):
    code, out, _ = run(capsys, *argv)
    lines = [json.loads(l) for l in out.splitlines()]
    assert code == 0
    assert len(lines) == records + 1
    assert lines[-1]["summary"]["count"] == records


def test_enumerate_tilings_are_loadable(capsys):
    _, out, _ = run(capsys, "enumerate", "tilings", "2")
    recs = [json.loads(l) for l in out.splitlines()[:-1]]
    assert [Tiling.from_json(r) for r in recs] == enumerate_tilings(2)


def test_enumerate_families_canonical_order(capsys):
    _, out, _ = run(capsys, "enumerate", "families", "2")
    recs = [json.loads(l) for l in out.splitlines()[:-1]]
    rank = {"U": 0, "L": 1, "D": 2}
    keys = [[[rank[c] for c in p["steps"]] for p in r["paths"]] for r in recs]
    assert keys == sorted(keys)
    assert recs[0]["scheme"] == "pi"


def test_enumerate_text(capsys):
    code, out, _ = run(capsys, "enumerate", "tilings", "1", "--format", "text")
    assert out.splitlines() == ["H(-1,-1) H(-1,0)", "V(-1,-1) V(0,-1)", "count 2"]


def test_verify_pass_and_totals(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "tilings", "--max-n", "3", "--json")
    rep = json.loads(out)
    assert code == 0 and rep["pass"]
    enum = [c for c in rep["checks"] if c["name"] == "tilings by enumeration"]
    assert [c["actual"] for c in enum] == ["2", "8", "64"]
    assert rep["executed"] == rep["passed"] == len([c for c in rep["checks"] if c["skipped"] is None])


@pytest.mark.parametrize("suite,max_n", [("hankel", 12), ("involution", 3), ("bijections", 3)])
def test_verify_suites(capsys, suite, max_n):
    code, out, _ = run(capsys, "verify", "--suite", suite, "--max-n", str(max_n))
    assert code == 0
    assert "FAIL" not in out
    assert "0 failed" in out.splitlines()[-1]


def test_verify_skips_beyond_cutoff(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "tilings", "--max-n", "3", "--max-enum-n", "2", "--json")
    rep = json.loads(out)
    assert code == 0
    skipped = [c for c in rep["checks"] if c["skipped"]]
    assert len(skipped) == 1 and skipped[0]["params"] == {"n": 3}


def test_verify_failure_exit_code(capsys, monkeypatch):
    from aztecdiamond import verify
    monkeypatch.setattr(verify.hankel, "closed_form", lambda kind, n: -1)
    code, out, _ = run(capsys, "verify", "--suite", "hankel", "--max-n", "1")
    assert code == 1 and "FAIL" in out


def test_render_golden(tmp_path):
    out = tmp_path / "a.svg"
    assert main(["render", "--generate", "1", "--index", "1", "--overlay-paths", "-o", str(out)]) == 0
    golden = FIXTURES / "az1_vertical_overlay.svg"
    assert out.read_bytes() == golden.read_bytes()


def test_render_generate_index0(capsys):
    code, out, _ = run(capsys, "render", "--generate", "1", "--index", "0")
    assert code == 0
    assert out.count('class="domino-H"') == 2 and "polyline" not in out


def test_render_file_deterministic(capsys, tmp_path):
    src = FIXTURES / "az3_all_horizontal.json"
    a, b = tmp_path / "a.svg", tmp_path / "b.svg"
    for dest in (a, b):
        assert main(["render", str(src), "--overlay-paths", "-o", str(dest)]) == 0
    assert a.read_bytes() == b.read_bytes()
    text = a.read_text()
    assert text.count("<rect class=") == 12 and text.count("<polyline") == 3


def test_render_invalid_file(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"order": 1, "dominoes": [{"x": -1, "y": -1, "o": "H"}, {"x": -1, "y": -1, "o": "V"}]}))
    code, _, err = run(capsys, "render", str(bad))
    assert code == 1
    assert "domino" in err and "already covered" in err


def test_render_index_out_of_range():
    with pytest.raises(SystemExit) as exc:
        main(["render", "--generate", "1", "--index", "2"])
    assert exc.value.code == 2


def test_svg_geometry():
    t = enumerate_tilings(2)[0]
    svg = tiling_svg(t)
    side = 2 * 3 * SCALE + 20
    assert f'width="{side}"' in svg
