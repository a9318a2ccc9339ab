import json

import pytest

from tracech.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def zero_file(tmp_path):
    def make(n):
        path = tmp_path / f"zero{n}.json"
        path.write_text(json.dumps({"n": n, "entries": [["0"] * n for _ in range(n)]}))
        return str(path)
    return make


def test_verify_generic(capsys):
    code, out, _ = run(capsys, "verify", "--generic", "2", "--r-max", "3")
    assert code == 0
    lines = [ln for ln in out.splitlines() if ln.startswith("r=")]
    assert len(lines) == 3 and all(ln.endswith("= 0  holds") for ln in lines)


def test_verify_zero_matrix(capsys, zero_file):
    code, _, _ = run(capsys, "verify", "--matrix", zero_file(3), "--r-max", "4")
    assert code == 0


def test_verify_random(capsys):
    code, out, _ = run(capsys, "verify", "--random", "--n", "4", "--count", "25", "--r-max", "6", "--seed", "7")
    assert code == 0 and out.count("# matrix") == 25


def test_verify_json_is_deterministic(capsys):
    args = ["verify", "--random", "--count", "3", "--seed", "5", "--format", "json"]
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second
    data = json.loads(first)
    assert len(data) == 3 and all(item["all_hold"] for item in data)
    rep = data[0]["reports"][0]
    assert set(rep) == {"n", "r", "branch", "form", "terms", "lhs", "holds"}


def test_verify_failed_identity_exits_1(capsys, monkeypatch):
    import tracech.cli as cli
    from tracech.identities import SuiteResult

    monkeypatch.setattr(cli, "verify_suite", lambda g, r, m: SuiteResult(g.n, [], ["forced"]))
    code, out, _ = run(capsys, "verify", "--generic", "1")
    assert code == 1 and "FAIL" in out


def test_bad_input_exits_2(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"n": 2, "entries": [["a +"], ["1", "2"]]}')
    assert run(capsys, "verify", "--matrix", str(bad))[0] == 2
    assert run(capsys, "verify", "--matrix", str(tmp_path / "missing.json"))[0] == 2
    with pytest.raises(SystemExit) as info:
        main(["verify"])
    assert info.value.code == 2


def test_caps(capsys):
    code, _, err = run(capsys, "verify", "--generic", "7")
    assert code == 2 and "--force" in err
    assert run(capsys, "enumerate", "walks", "--generic", "2", "--k", "11")[0] == 2
    assert run(capsys, "involution", "--generic", "5", "--r", "2")[0] == 2
    assert run(capsys, "involution", "--generic", "2", "--r", "9")[0] == 2


def test_pair_cap_env(capsys, monkeypatch):
    monkeypatch.setenv("TRACE_CH_MAX_PAIRS", "10")
    code, _, err = run(capsys, "involution", "--generic", "2", "--r", "3")
    assert code == 2 and "TRACE_CH_MAX_PAIRS" in err
    monkeypatch.setenv("TRACE_CH_MAX_PAIRS", "20")
    assert run(capsys, "involution", "--generic", "2", "--r", "3")[0] == 0


def test_enumerate_lsd(capsys):
    code, out, _ = run(capsys, "enumerate", "lsd", "--generic", "2", "--r", "2")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 3
    assert lines[0] == "(v1)(v2) sign=+1 weight=ad"
    assert lines[1] == "(v1 v2) sign=-1 weight=bc"
    assert lines[2] == "ℓ_2 = ad - bc"


def test_enumerate_lsd_empty(capsys):
    code, out, _ = run(capsys, "enumerate", "lsd", "--generic", "2", "--r", "0")
    assert code == 0 and out.splitlines() == ["() sign=+1 weight=1", "ℓ_0 = 1"]


def test_enumerate_walks(capsys):
    code, out, _ = run(capsys, "enumerate", "walks", "--generic", "2", "--k", "3")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 9
    assert lines[0] == "v1→v1→v1→v1 weight=a^3"
    assert lines[-1] == "c_3 = a^3 + 3abc + 3bcd + d^3"


def test_enumerate_json_and_names(capsys):
    code, out, _ = run(capsys, "enumerate", "walks", "--generic", "2", "--k", "1", "--format", "json",
                       "--no-aliases")
    data = json.loads(out)
    assert code == 0 and data["count"] == 2
    assert data["items"][0] == {"walk": [1, 1], "weight": "a_1_1"}


def test_enumerate_needs_length(capsys):
    assert run(capsys, "enumerate", "lsd", "--generic", "2")[0] == 2
    assert run(capsys, "enumerate", "lsd", "--generic", "2", "--r", "3")[0] == 2


def test_involution_above_n(capsys):
    code, out, _ = run(capsys, "involution", "--generic", "2", "--r", "3")
    assert code == 0
    assert out.splitlines()[-1] == "BAD pairs: all cancel; GOOD pairs: 0"


def test_involution_show_pairs(capsys):
    code, out, _ = run(capsys, "involution", "--generic", "2", "--r", "2", "--show-pairs")
    assert code == 0
    assert out.count("GOOD group of") == 2
    assert "GOOD group of (v1)(v2):\n  (v1→v1, (v2)) W=-ad\n  (v2→v2, (v1)) W=-ad" in out
    assert "BadScenario2(open=0, close=1)" in out


def test_involution_zero_matrix(capsys, zero_file):
    code, out, _ = run(capsys, "involution", "--matrix", zero_file(2), "--r", "2")
    assert code == 0 and "pairs=0" in out


def test_involution_dot(capsys):
    code, out, _ = run(capsys, "involution", "--generic", "2", "--r", "2", "--dot")
    assert code == 0
    assert out.count("digraph bad") == 8  # 4 BAD pairs, before and after
    assert "color=red, style=dashed" in out


def test_involution_json(capsys):
    code, out, _ = run(capsys, "involution", "--generic", "3", "--r", "4", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["passed"] and data["good"] == 0 and data["bad_sum"] == "0"


def test_export_dot(capsys, tmp_path):
    code, out, _ = run(capsys, "export-dot", "--generic", "2", "--out-dir", str(tmp_path))
    assert code == 0
    text = (tmp_path / "digraph.dot").read_text()
    assert text.count("->") == 4 and 'label="b"' in text


def test_export_dot_subdigraphs_and_pairs(capsys, tmp_path):
    code, out, _ = run(capsys, "export-dot", "--generic", "2", "--r", "2", "--out-dir", str(tmp_path))
    assert code == 0
    assert sorted(p.name for p in tmp_path.glob("lsd_*.dot")) == ["lsd_r2_1.dot", "lsd_r2_2.dot"]
    run(capsys, "export-dot", "--generic", "2", "--r", "2", "--involution", "--out-dir", str(tmp_path))
    assert len(list(tmp_path.glob("pair_*_before.dot"))) == 4


def test_export_dot_zero(capsys, tmp_path, zero_file):
    run(capsys, "export-dot", "--matrix", zero_file(2), "--out-dir", str(tmp_path))
    assert "->" not in (tmp_path / "digraph.dot").read_text()


def test_charpoly(capsys):
    code, out, _ = run(capsys, "charpoly", "--generic", "2")
    lines = out.splitlines()
    assert code == 0
    assert lines[1] == "1, -a - d, a + d, -a - d, a + d"
    assert lines[2] == "2, ad - bc, ad - bc, ad - bc, a^2 + 2bc + d^2"


def test_module_entry_point():
    import subprocess
    import sys

    res = subprocess.run([sys.executable, "-m", "tracech", "verify", "--generic", "1"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and "all identities hold" in res.stdout
