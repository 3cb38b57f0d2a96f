import json

import numpy as np
import pytest

from gridwalk import build_chain, make_absorbing
from gridwalk import io
from gridwalk.cli import main

from conftest import make
from test_chain import TABLE3


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_table_round_trip():
    cols = {"step": np.arange(4), "value": np.array([1 / 3, np.pi, 1e-300, 0.1 + 0.2])}
    back, summary = io.csv_to_table(io.table_to_csv(cols, {"gap": 1 / 7, "note": "x"}))
    assert back["step"].tolist() == [0, 1, 2, 3]
    assert np.array_equal(back["value"], cols["value"])
    assert summary == {"gap": 1 / 7, "note": "x"}
    back, meta = io.json_to_table(io.table_to_json(cols, {"seed": 3}))
    assert np.array_equal(back["value"], cols["value"]) and meta == {"seed": 3}


def test_matrix_round_trip(center3):
    P = make_absorbing(make(4, 3, 2), 7)
    assert np.array_equal(io.csv_to_matrix(io.matrix_to_csv(P)), P.toarray())
    assert np.array_equal(io.json_to_matrix(io.matrix_to_json(P)).toarray(), P.toarray())
    d = json.loads(io.matrix_to_json(build_chain(center3.spec)))
    assert d["n"] == 9 and d["rows"][:2] == [1, 1] and d["cols"][:2] == [2, 4]


def test_cli_matrix_table3(capsys):
    code, out, _ = run(capsys, "matrix", "--width", "3", "--depth", "3", "--borders")
    assert code == 0
    np.testing.assert_allclose(io.csv_to_matrix(out), TABLE3, atol=1e-15)


def test_cli_matrix_table4(capsys):
    code, out, _ = run(capsys, "matrix", "--width", "3", "--depth", "3", "--borders", "--absorb", "5")
    expected = TABLE3.copy()
    expected[4] = [0, 0, 0, 0, 1, 0, 0, 0, 0]
    assert code == 0
    np.testing.assert_allclose(io.csv_to_matrix(out), expected, atol=1e-15)


def test_cli_default_is_bordered(capsys):
    _, out, _ = run(capsys, "matrix", "--width", "3", "--depth", "3")
    _, wrapped, _ = run(capsys, "matrix", "--width", "3", "--depth", "3", "--boundless")
    assert io.csv_to_matrix(out)[0, 1] == 0.5
    assert io.csv_to_matrix(wrapped)[0, 1] == 0.25


def test_cli_coverage(capsys):
    code, out, _ = run(capsys, "coverage", "--width", "3", "--depth", "3", "--start-cell", "2,2", "--steps", "2", "--naive")
    cols, _ = io.csv_to_table(out)
    assert code == 0 and list(cols) == ["step", "exact", "naive"]
    assert cols["exact"][1] == pytest.approx(2 / 9, abs=1e-15)
    code, out, _ = run(capsys, "coverage", "--width", "3", "--depth", "3", "--start-cell", "2,2", "--steps", "1", "--uavs", "2", "--format", "json")
    payload = json.loads(out)
    assert payload["uavs"] == 2 and payload["columns"]["value"][1] == pytest.approx(11 / 36, abs=1e-15)


def test_cli_simulate(capsys, tmp_path):
    path = tmp_path / "sim.csv"
    code, out, _ = run(capsys, "simulate", "--width", "3", "--depth", "3", "--steps", "5", "--replications", "500", "--seed", "4", "-o", str(path))
    assert code == 0 and out == ""
    cols, _ = io.csv_to_table(path.read_text())
    assert list(cols) == ["step", "mc_mean", "mc_stderr"] and len(cols["step"]) == 6


def test_cli_compare_summary(capsys):
    code, out, _ = run(capsys, "compare", "--width", "3", "--depth", "3", "--borders", "--start-cell", "2,2", "--steps", "30", "--replications", "100000", "--seed", "42")
    cols, summary = io.csv_to_table(out)
    assert code == 0
    assert list(cols) == ["step", "exact", "naive", "mc_mean", "mc_stderr"]
    assert summary["max_exact_mc_z"] <= 3
    assert summary["max_abs_exact_naive"] > 0.01


def test_cli_dependence(capsys):
    code, out, _ = run(capsys, "dependence", "--width", "3", "--depth", "3", "--start-cell", "2,2", "--cell", "1,1", "--time", "2", "--format", "json")
    d = json.loads(out)
    assert code == 0 and d["verdict"] == "dependent" and d["p_m"] == pytest.approx(1 / 6)
    code, out, _ = run(capsys, "dependence", "--width", "5", "--depth", "5", "--boundless", "--cell", "1,1", "--time", "0", "--test", "successive")
    cols, _ = io.csv_to_table(out)
    assert cols["verdict"][0] == "dependent"


@pytest.mark.parametrize(
    "argv, flag",
    [
        (["coverage", "--width", "3", "--depth", "3", "--steps", "-1"], "--steps"),
        (["simulate", "--width", "3", "--depth", "3", "--steps", "2", "--replications", "0"], "--replications"),
        (["coverage", "--width", "1", "--depth", "3", "--steps", "2"], "--width"),
        (["coverage", "--width", "3", "--depth", "3", "--steps", "2", "--start-cell", "4,1"], "--start-cell"),
        (["matrix", "--width", "3", "--depth", "3", "--absorb", "10"], "--absorb"),
        (["coverage", "--width", "3", "--depth", "3", "--steps", "2", "--uavs", "0"], "--uavs"),
    ],
)
def test_cli_validation_exit_2(capsys, argv, flag):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2
    assert flag in capsys.readouterr().err


def test_cli_io_error_exit_4(capsys, tmp_path):
    code, _, err = run(capsys, "matrix", "--width", "2", "--depth", "2", "-o", str(tmp_path / "missing" / "m.csv"))
    assert code == 4 and "cannot write" in err


def test_cli_threads_env(monkeypatch, capsys):
    monkeypatch.setenv("GRIDWALK_THREADS", "1")
    a = run(capsys, "compare", "--width", "4", "--depth", "4", "--steps", "10", "--replications", "3000", "--seed", "1")[1]
    monkeypatch.setenv("GRIDWALK_THREADS", "3")
    b = run(capsys, "compare", "--width", "4", "--depth", "4", "--steps", "10", "--replications", "3000", "--seed", "1")[1]
    assert a == b


def test_cli_brute_force_column_and_guard(capsys):
    code, out, _ = run(capsys, "coverage", "--width", "2", "--depth", "3", "--steps", "5", "--brute-force")
    cols, _ = io.csv_to_table(out)
    assert code == 0
    np.testing.assert_allclose(cols["exact"], cols["brute_force"], atol=1e-12)
    code, _, err = run(capsys, "coverage", "--width", "5", "--depth", "5", "--steps", "40", "--brute-force")
    assert code == 3 and "limit" in err
