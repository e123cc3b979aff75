import json
import subprocess
import sys

import pytest

from lattice_count.cli import main, stable_pairs


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err


@pytest.mark.parametrize("argv, expected", [
    (["eval", "--g", "2", "--b", "8"], "21/8"),
    (["eval", "--g", "0", "--b", "1,1,2"], "1"),
    (["eval", "--g", "1", "--b", "3"], "0"),
    (["oracle", "--b", "4", "--genus", "1"], "1/4"),
    (["oracle", "--b", "3", "--genus", "0"], "0"),
    (["euler", "--g", "2", "--n", "1"], "1/120"),
    (["tau", "--g", "1", "--m", "1", "--signs", "+"], "1/24"),
])
def test_scalar_commands(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and out == expected


def test_json_mode(capsys):
    code, out, _ = run(capsys, "euler", "--g", "2", "--n", "1", "--json")
    assert json.loads(out) == {"value": "1/120"}


def test_poly(capsys):
    code, out, _ = run(capsys, "poly", "--g", "1", "--n", "1")
    doc = json.loads(out)
    assert code == 0 and len(doc["entries"]) == 1
    terms = {tuple(t["exponents"]): t["coefficient"] for t in doc["entries"][0]["terms"]}
    assert terms == {(1,): "1/48", (0,): "-1/12"}
    code, out, _ = run(capsys, "poly", "--g", "0", "--n", "3", "--k", "2")
    assert json.loads(out)["entries"][0]["terms"] == [{"coefficient": "1", "exponents": [0, 0, 0]}]


@pytest.mark.parametrize("argv", [
    ["poly", "--g", "0", "--n", "2"],
    ["poly", "--g", "0", "--n", "4", "--k", "1"],
    ["oracle", "--b", "5,5", "--genus", "0"],
    ["oracle"],
    ["eval", "--g", "1", "--b", "-2"],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["eval", "--g", "1", "--b", "x,y"])
    assert exc.value.code == 2


def test_internal_error_exit_3(capsys, monkeypatch):
    import lattice_count.identities as identities
    monkeypatch.setattr(identities, "euler_closed_form", lambda g, n: 0)
    code, _, err = run(capsys, "euler", "--g", "1", "--n", "1")
    assert code == 3 and "internal" in err


@pytest.mark.parametrize("suite, c", [("dilaton", 4), ("string", 3), ("all", 1), ("all", 2)])
def test_verify(capsys, suite, c):
    code, out, _ = run(capsys, "verify", suite, "--max-complexity", str(c))
    reports = json.loads(out)
    assert code == 0 and reports and all(r["ok"] for r in reports)


def test_verify_counterexample_exit_1(capsys, monkeypatch):
    import lattice_count.identities as identities
    monkeypatch.setattr(identities, "product_formula", lambda n, b: 99)
    code, out, _ = run(capsys, "verify", "product", "--max-complexity", "2")
    assert code == 1 and not json.loads(out)[0]["ok"]


def test_oracle_compare(capsys):
    code, out, _ = run(capsys, "oracle", "compare", "--max-total", "6")
    assert code == 0 and json.loads(out)["counterexamples"] == []


def test_series(capsys):
    code, out, _ = run(capsys, "series", "--fixture", "2,1", "--order", "9")
    assert code == 0 and json.loads(out)["ok"]


def test_cache_warm_equals_cold(capsys, tmp_path):
    cache = str(tmp_path / "c.json")
    outputs = [run(capsys, "poly", "--g", "1", "--n", "2", "--cache", cache)[1] for _ in range(2)]
    outputs.append(run(capsys, "poly", "--g", "1", "--n", "2")[1])
    assert outputs[0] == outputs[1] == outputs[2]
    assert (tmp_path / "c.json").exists()


def test_deterministic_output(capsys):
    a = run(capsys, "verify", "all", "--max-complexity", "2")[1]
    b = run(capsys, "verify", "all", "--max-complexity", "2")[1]
    assert a == b


def test_stable_pairs():
    assert stable_pairs(2) == [(0, 3), (1, 1), (0, 4), (1, 2)]


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "lattice_count.cli", "eval", "--g", "1", "--b", "4"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout.strip() == "1/4"
