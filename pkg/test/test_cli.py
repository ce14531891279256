#!/usr/bin/env python

from circulant_transfer_toolbox import cli
from circulant_transfer_toolbox import spectral_factor as sf
import json
import os
import pytest


def _get_absolute_path(fname):
    dirname = os.path.dirname(os.path.realpath(__file__))
    return dirname + "/" + fname


def _run(capsys, argv, expected=cli.EXIT_OK):
    assert cli.main(argv) == expected
    out = capsys.readouterr().out
    if expected != cli.EXIT_OK:
        assert out == ""
        return None
    if "--format" in argv:
        return out
    doc = json.loads(out)
    assert doc["schema_version"] == cli.SCHEMA_VERSION
    assert doc["command"] == argv[0]
    return doc["result"]


def test_states(capsys):
    r = _run(capsys, ["states"])
    assert r["count"] == 29
    assert r["weight_histogram"] == [1, 7, 14, 7]
    assert [0, 2, 4] in r["states"]


def test_states_text(capsys):
    out = _run(capsys, ["states", "--n", "5", "--format", "text"])
    assert "count: 11" in out.splitlines()


def test_orbits(capsys):
    r = _run(capsys, ["orbits"])
    assert r["orbit_count"] == 5
    assert r["burnside"] == 5
    assert [o["size"] for o in r["orbits"]] == [1, 7, 7, 7, 7]
    assert r["multiplicities"]["chi0"] == 5
    assert r["multiplicities"]["rho"] == {"1": 4, "2": 4, "3": 4}


def test_orbits_composite(capsys):
    r = _run(capsys, ["orbits", "--n", "9"])
    assert "multiplicities" not in r


def test_transfer(capsys):
    r = _run(capsys, ["transfer", "--n", "5"])
    assert r["dimension"] == 11
    assert r["orbit_matrix"] == [[1, 5, 5], [1, 2, 0], [1, 0, 0]]
    assert r["equivariant"]


def test_indpoly(capsys):
    r = _run(capsys, ["indpoly", "--d", "2"])
    assert r["polynomial"]["ascending"] == ["1", "14", "56", "56"]
    assert r["value_at_one"] == "127"
    assert r["alpha"] == 3

    r = _run(capsys, ["indpoly", "--d", "3", "--level", "oracle"])
    assert r["value_at_one"] == "1387"
    assert r["leading_coefficient"] == "49"
    assert r["oracle"]["equal"]

    r = _run(capsys, ["indpoly", "--d", "3", "--boundary", "torus", "--level", "oracle"])
    assert r["boundary"] == "torus"
    assert r["oracle"]["equal"]


def test_indpoly_cap_exceeded(capsys):
    _run(capsys, ["indpoly", "--d", "3", "--level", "oracle", "--oracle-cap", "10"], cli.EXIT_CAP_EXCEEDED)


def test_charpoly(capsys):
    r = _run(capsys, ["charpoly"])
    assert r["kernel"] == 13
    assert r["orbit_charpoly"]["ascending"] == ["0", "42", "47", "-29", "-5", "1"]


def test_factor(capsys):
    r = _run(capsys, ["factor", "--n", "5"])
    assert r["nu"] == 4
    assert r["k_pattern"] == [1, 1]
    assert r["f_cyc"]["ascending"] == ["-1", "1", "1"]
    assert all(r["flags"].values())


def test_galois(capsys):
    r = _run(capsys, ["galois"])
    assert r["verdict"] == "irreducible"
    assert r["group"] == "S4"
    assert r["disjointness_deduction"]
    assert r["modp_patterns"]["7"] == [1, 1, 1, 1]

    r = _run(capsys, ["galois", "--n", "5"])
    assert r["verdict"] == "factored"
    assert r["group"] == "n/a"


def test_spectral(capsys):
    r = _run(capsys, ["spectral", "--horizon", "4"])
    assert r["strip_values"][:3] == ["29", "127", "1387"]
    assert len(r["strip_values"]) == 4
    assert abs(r["rho_T"] - r["rho_orbit"]) < 1e-8
    assert r["perron_vector_min"] > 0


def test_summary_tsv(capsys):
    out = _run(capsys, ["summary", "--format", "tsv"])
    lines = out.splitlines()
    assert lines[0].startswith("d\tobject")
    assert lines[2].split("\t")[3] == "127"
    assert any("2544256835855451311632423" in line for line in lines)


def test_table_tsv(capsys):
    out = _run(capsys, ["table", "--n-list", "5,7", "--format", "tsv"])
    assert out.splitlines() == ["n\tkernel\tf_anom\tdeg f_cyc\tK-pattern",
                                "5\t4\t(x - 1) * (x^2 - 2*x - 10)\t2\t[1,1]",
                                "7\t13\tquartic\t6\t[2,2,2]"]


def test_verify(capsys):
    r = _run(capsys, ["verify", "--d", "3", "--level", "full"])
    assert r["level"] == "full"
    assert r["checks"]["oracle_torus_3"]
    assert r["checks"]["factor_reconstruction"]
    assert r["checks"]["sector_traces_3"]
    assert r["passed"] == len(r["checks"])


def test_verify_documented_values(capsys):
    r = _run(capsys, ["verify", "--level", "full"])
    for name in ("documented_row_7", "documented_f_anom_7", "documented_galois_group_7", "documented_c7",
                 "documented_strip_2", "documented_torus_2", "documented_strip_3",
                 "documented_torus_2_polynomial", "documented_torus_3_consistent"):
        assert r["checks"][name]

    r = _run(capsys, ["verify", "--n", "5", "--level", "full"])
    assert r["checks"]["documented_row_5"]
    assert r["checks"]["documented_f_anom_5"]
    assert "documented_c7" not in r["checks"]


def test_verify_documented_mismatch(capsys, monkeypatch):
    monkeypatch.setitem(sf.DOCUMENTED_FACTOR_TABLE, 5, sf.DocumentedRow(5, 3, 2, (1, 1)))
    _run(capsys, ["verify", "--n", "5", "--level", "full"], cli.EXIT_MISMATCH)
    _run(capsys, ["verify", "--n", "5", "--level", "oracle"])


@pytest.mark.parametrize("argv", [
    ["indpoly", "--d", "4", "--level", "oracle"],
    ["indpoly", "--d", "3", "--boundary", "torus", "--level", "oracle", "--format", "text"],
    ["verify", "--n", "5", "--level", "full"],
    ["summary", "--format", "tsv"],
])
def test_output_is_deterministic(capsys, argv):
    outputs = []
    for _ in range(2):
        assert cli.main(argv) == cli.EXIT_OK
        outputs.append(capsys.readouterr().out.encode("utf-8"))
    assert outputs[0] == outputs[1]
    assert "elapsed" not in outputs[0].decode("utf-8")


@pytest.mark.parametrize("argv,expected", [
    (["states", "--n", "5"], cli.EXIT_OK),
    (["states", "--n", "2"], cli.EXIT_INVALID_CONFIG),
    (["states", "--n", "25"], cli.EXIT_CAP_EXCEEDED),
    (["indpoly", "--d", "3", "--level", "oracle", "--oracle-cap", "20"], cli.EXIT_CAP_EXCEEDED),
])
def test_exit_codes(capsys, argv, expected):
    assert cli.main(argv) == expected
    out = capsys.readouterr().out
    assert (out != "") == (expected == cli.EXIT_OK)


def test_verify_config_file(capsys):
    r = _run(capsys, ["verify", "--config", _get_absolute_path("c7_run_config.yml")])
    assert r["level"] == "oracle"
    assert r["checks"]["layered_torus_3"]


def test_report(capsys):
    r = _run(capsys, ["report", "--n", "5"])
    assert r["factorization"]["nu"] == 4
    assert r["sectors"]["d"] == 5
    assert r["galois"]["verdict"] == "factored"
    assert r["orbit_matrix"] == [[1, 5, 5], [1, 2, 0], [1, 0, 0]]


@pytest.mark.parametrize("argv", [
    ["states", "--n", "2"],
    ["indpoly", "--boundary", "torus", "--d", "1"],
    ["states", "--connection", "7"],
    ["table", "--n-list", "9"],
    ["states", "--primes", "1"],
    ["states", "--primes", "2,9"],
])
def test_invalid_config(capsys, argv):
    _run(capsys, argv, cli.EXIT_INVALID_CONFIG)


def test_unknown_command():
    with pytest.raises(SystemExit):
        cli.main(["frobnicate"])


@pytest.mark.slow
def test_galois_strict_unresolved(capsys):
    r = _run(capsys, ["galois", "--n", "11", "--primes", ""])
    assert r["verdict"] == "unresolved"
    _run(capsys, ["galois", "--n", "11", "--primes", "", "--strict"], cli.EXIT_UNRESOLVED)
