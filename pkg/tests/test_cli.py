import json
import subprocess
import sys
from pathlib import Path

import pytest

from quandle_euler.cli import main

SPECS = Path(__file__).resolve().parent.parent / "demos" / "specs"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def write(tmp_path, obj, name="spec.json"):
    p = tmp_path / name
    p.write_text(json.dumps(obj))
    return str(p)


def test_euler_sphere2(capsys):
    code, out, _ = run(capsys, "--json", "euler", str(SPECS / "sphere2.json"))
    assert code == 0
    report = json.loads(out)
    assert report["chi"] == 2 and report["exact"] is True
    assert list(report) == ["chi", "exact", "witness", "dis_order", "upper_bound", "explored"]
    assert out == '{"chi":2,"exact":true,"witness":[0,1,3,2,5,4],"dis_order":4,"upper_bound":2,"explored":4}\n'


def test_validate(capsys):
    code, out, _ = run(capsys, "validate", str(SPECS / "table_r3.json"))
    assert code == 0 and json.loads(out) == {"valid": True, "size": 3}
    code, out, err = run(capsys, "validate", str(SPECS / "broken_q1.json"))
    assert code == 1
    assert "element 0" in err
    assert json.loads(out)["valid"] is False


def test_validate_bad_json(capsys, tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{"type": ')
    code, _, err = run(capsys, "validate", str(p))
    assert code == 1 and "line 1" in err
    code, _, err = run(capsys, "validate", str(tmp_path / "missing.json"))
    assert code == 1


def test_check_product(capsys, tmp_path):
    a = write(tmp_path, {"type": "dihedral", "n": 3}, "a.json")
    b = write(tmp_path, {"type": "trivial", "n": 2}, "b.json")
    code, out, _ = run(capsys, "check", a, b, "--law", "product")
    assert code == 0
    res = json.loads(out)
    assert res["holds"] is True and res["chi_combined"] == 0 and res["chi_second"] == 2


def test_check_union_strict(capsys):
    c3 = str(SPECS / "cycle3.json")
    code, out, _ = run(capsys, "--json", "check", c3, c3, "--law", "union")
    res = json.loads(out)
    assert code == 0 and res["holds"] is True
    assert (res["chi_first"], res["chi_second"], res["chi_combined"]) == (2, 2, 0)


def test_check_capped(capsys):
    s = str(SPECS / "sphere2.json")
    code, out, _ = run(capsys, "check", s, s, "--law", "product", "--cap", "2")
    assert code == 3 and json.loads(out)["holds"] is None


def test_info(capsys):
    code, out, _ = run(capsys, "info", str(SPECS / "cycle3.json"))
    info = json.loads(out)
    assert code == 0
    assert info == {"size": 6, "trivial": False, "connected": False, "homogeneous": True,
                    "inner_order": 8, "dis_order": 4, "inner_truncated": False, "dis_truncated": False}
    code, out, _ = run(capsys, "info", str(SPECS / "dihedral5.json"), "--cap", "3")
    info = json.loads(out)
    assert info["inner_order"] is None and info["inner_truncated"] is True


def test_info_budget(capsys, tmp_path):
    p = write(tmp_path, {"type": "free_union", "parts": [{"type": "dihedral", "n": 3}, {"type": "sphere", "dim": 1}]})
    code, out, err = run(capsys, "info", p, "--budget", "1")
    assert code == 0 and json.loads(out)["homogeneous"] is None
    assert "budget" in err or "exceeded" in err


def test_table(capsys):
    code, out, _ = run(capsys, "--json", "table", str(SPECS / "dihedral5.json"))
    assert code == 0
    obj = json.loads(out)
    assert obj["type"] == "table" and obj["n"] == 5 and obj["s"][0] == [0, 4, 3, 2, 1]


def test_fast_graph(capsys):
    code, out, _ = run(capsys, "euler", "--fast-graph", str(SPECS / "path4.json"))
    assert code == 0 and json.loads(out)["chi"] == 4
    code, _, err = run(capsys, "euler", "--fast-graph", str(SPECS / "dihedral5.json"))
    assert code == 2 and "--fast-graph" in err


def test_cap_exceeded_exit_3(capsys):
    code, out, _ = run(capsys, "euler", str(SPECS / "sphere2.json"), "--cap", "2")
    assert code == 3
    assert json.loads(out)["chi"] is None


def test_search_trials_rescue(capsys, tmp_path):
    p = write(tmp_path, {"type": "torus", "m": [7, 9]})
    code, out, _ = run(capsys, "euler", p, "--cap", "1", "--search-trials", "500", "--seed", "3")
    assert code == 0 and json.loads(out)["chi"] == 0


def test_cycle_notation_sigma(capsys, tmp_path):
    p = write(tmp_path, {"type": "galex", "group": {"type": "cyclic", "n": 5}, "sigma": "(1 2 4 3)"})
    code, out, _ = run(capsys, "euler", p)
    assert code == 0 and json.loads(out)["chi"] == 0


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as err:
        main(["euler"])
    assert err.value.code == 2
    with pytest.raises(SystemExit) as err:
        main(["euler", "x.json", "--cap", "0"])
    assert err.value.code == 2
    capsys.readouterr()


def test_stdin_and_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "quandle_euler", "--json", "euler", "-"],
        input='{"type":"sphere","dim":3}', capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["chi"] == 0


def test_output_is_deterministic(capsys):
    outs = {run(capsys, "--json", "euler", str(SPECS / "core_s3.json"))[1] for _ in range(3)}
    assert len(outs) == 1
