#!/usr/bin/env python

import circulant_transfer_toolbox as ctt
from circulant_transfer_toolbox import run_config
from circulant_transfer_toolbox.oracle import ORACLE_CAP_ENV
import os
import pytest


def _get_absolute_path(fname):
    dirname = os.path.dirname(os.path.realpath(__file__))
    return dirname + "/" + fname


def test_load_run_config_yaml():
    with open(_get_absolute_path("c7_run_config.yml"), "r") as f:
        cfg = run_config.load_run_config_yaml(f)
    assert cfg.n == 7
    assert cfg.connection == (1,)
    assert cfg.layers == 3
    assert cfg.boundary == "torus"
    assert cfg.verification_level == "oracle"
    assert cfg.primes == (2, 3, 5, 7, 11, 13)
    assert cfg.power_tolerance == 1e-10
    assert cfg.growth_horizon == 12
    assert cfg.power_max_iter == run_config.RunConfig().power_max_iter
    assert not cfg.strict
    assert run_config.spec_from_config(cfg) == ctt.cycle_spec(7)


def test_load_run_config_dict():
    cfg = run_config.load_run_config_yaml({"run": {"n": 10, "connection": 3, "primes": 5}})
    assert cfg.connection == (3,)
    assert cfg.primes == (5,)
    assert run_config.spec_from_config(cfg) == ctt.CirculantSpec.from_generators(10, [3])
    d = cfg.to_dict()
    assert d["connection"] == [3]
    assert d["n"] == 10


def test_load_run_config_base():
    base = run_config.RunConfig(n=11, output_format="tsv")
    cfg = run_config.load_run_config_yaml({"run": {"layers": 4}}, base)
    assert (cfg.n, cfg.layers, cfg.output_format) == (11, 4, "tsv")


@pytest.mark.parametrize("run", [
    {"n": 2},
    {"n": 7, "connection": [7]},
    {"n": 7, "connection": []},
    {"layers": 0},
    {"boundary": "mobius"},
    {"boundary": "torus", "layers": 1},
    {"output_format": "xml"},
    {"verification_level": "some"},
    {"primes": [1]},
    {"primes": [2, 9, 11]},
    {"primes": [15]},
    {"power_tolerance": 0},
    {"oracle_cap": 0},
    {"fugacity": 2},
])
def test_invalid_run_config(run):
    with pytest.raises(ValueError):
        run_config.load_run_config_yaml({"run": run})


def test_invalid_run_config_structure():
    with pytest.raises(ValueError):
        run_config.load_run_config_yaml({"n": 7})
    with pytest.raises(ValueError):
        run_config.load_run_config_yaml({"run": [7]})
    with pytest.raises(ValueError):
        run_config.load_run_config_yaml("- 7\n")


def test_module_docstring():
    assert run_config.__doc__.startswith("Run configuration")


def test_default_run_config(monkeypatch):
    monkeypatch.delenv(ORACLE_CAP_ENV, raising=False)
    cfg = run_config.default_run_config()
    assert cfg.n == 7
    assert cfg.boundary == "strip"
    assert cfg.oracle_cap == 50
    assert run_config.validate_run_config(cfg) is cfg
    monkeypatch.setenv(ORACLE_CAP_ENV, "20")
    assert run_config.default_run_config().oracle_cap == 20
