# Copyright (c) 2026, Circulant Transfer Toolbox Developers
# All rights reserved.
#
# Redistribution and use in source and binary forms, with or without
# modification, are permitted provided that the following conditions are met:
#
#     * Redistributions of source code must retain the above copyright
#       notice, this list of conditions and the following disclaimer.
#     * Redistributions in binary form must reproduce the above copyright
#       notice, this list of conditions and the following disclaimer in the
#       documentation and/or other materials provided with the distribution.
#     * Neither the name of the copyright holders nor the names of its
#       contributors may be used to endorse or promote products derived from
#       this software without specific prior written permission.
#
# THIS SOFTWARE IS PROVIDED BY THE COPYRIGHT HOLDERS AND CONTRIBUTORS "AS IS"
# AND ANY EXPRESS OR IMPLIED WARRANTIES, INCLUDING, BUT NOT LIMITED TO, THE
# IMPLIED WARRANTIES OF MERCHANTABILITY AND FITNESS FOR A PARTICULAR PURPOSE
# ARE DISCLAIMED. IN NO EVENT SHALL THE COPYRIGHT OWNER OR CONTRIBUTORS BE
# LIABLE FOR ANY DIRECT, INDIRECT, INCIDENTAL, SPECIAL, EXEMPLARY, OR
# CONSEQUENTIAL DAMAGES (INCLUDING, BUT NOT LIMITED TO, PROCUREMENT OF
# SUBSTITUTE GOODS OR SERVICES; LOSS OF USE, DATA, OR PROFITS; OR BUSINESS
# INTERRUPTION) HOWEVER CAUSED AND ON ANY THEORY OF LIABILITY, WHETHER IN
# CONTRACT, STRICT LIABILITY, OR TORT (INCLUDING NEGLIGENCE OR OTHERWISE)
# ARISING IN ANY WAY OUT OF THE USE OF THIS SOFTWARE, EVEN IF ADVISED OF THE
# POSSIBILITY OF SUCH DAMAGE.

"""Run configuration shared by the command line and YAML configuration files"""

from __future__ import absolute_import

from typing import NamedTuple, Tuple

import yaml
from sympy import isprime

from . import circulant_transfer_toolbox as ctt
from .spectral_factor import DEFAULT_SIEVE_PRIMES
from .oracle import oracle_cap

BOUNDARIES = ("strip", "torus")
OUTPUT_FORMATS = ("json", "tsv", "text")
VERIFICATION_LEVELS = ("none", "oracle", "full")


class RunConfig(NamedTuple):
    n: int = 7
    connection: Tuple[int, ...] = (1,)
    layers: int = 2
    boundary: str = "strip"
    output_format: str = "json"
    verification_level: str = "none"
    primes: Tuple[int, ...] = DEFAULT_SIEVE_PRIMES
    power_tolerance: float = 1e-12
    power_max_iter: int = 100000
    growth_horizon: int = 20
    oracle_cap: int = 50
    strict: bool = False

    def to_dict(self):
        d = self._asdict()
        d["connection"] = list(self.connection)
        d["primes"] = list(self.primes)
        return d


def default_run_config():
    """Defaults, with the oracle cap taken from the environment when set"""
    return RunConfig(oracle_cap=oracle_cap())


def _check_list(l, error_msg, expected_count=-1):
    if l is None:
        raise ValueError(error_msg)

    if expected_count >= 0:
        if len(l) != expected_count:
            raise ValueError(error_msg)


def _choice(value, choices, name):
    if value not in choices:
        raise ValueError("invalid " + name + " " + repr(value) + ", expected one of " + ", ".join(choices))


def validate_run_config(cfg):
    """
    Checks a RunConfig before dispatch

    :type    cfg: RunConfig
    :rtype:  RunConfig
    :return: the same configuration
    """
    if not isinstance(cfg.n, int) or cfg.n < 3:
        raise ValueError("n must be an integer >= 3, got " + repr(cfg.n))
    _check_list(cfg.connection, "connection must be a nonempty list of residues")
    if len(cfg.connection) == 0:
        raise ValueError("connection must be a nonempty list of residues")
    for c in cfg.connection:
        if not isinstance(c, int) or c % cfg.n == 0:
            raise ValueError("connection residue " + repr(c) + " is not a nonzero residue mod " + str(cfg.n))
    if not isinstance(cfg.layers, int) or cfg.layers < 1:
        raise ValueError("layers must be a positive integer, got " + repr(cfg.layers))
    _choice(cfg.boundary, BOUNDARIES, "boundary")
    if cfg.boundary == "torus" and cfg.layers < 2:
        raise ValueError("the torus needs at least two layers")
    _choice(cfg.output_format, OUTPUT_FORMATS, "output format")
    _choice(cfg.verification_level, VERIFICATION_LEVELS, "verification level")
    _check_list(cfg.primes, "primes must be a list")
    for p in cfg.primes:
        if not isinstance(p, int) or not isprime(p):
            raise ValueError("invalid prime " + repr(p))
    if not cfg.power_tolerance > 0:
        raise ValueError("power tolerance must be positive")
    if cfg.power_max_iter < 1 or cfg.growth_horizon < 1 or cfg.oracle_cap < 1:
        raise ValueError("iteration limit, growth horizon and oracle cap must be positive")
    spec_from_config(cfg)
    return cfg


def spec_from_config(cfg):
    """The CirculantSpec for a configuration, closing the connection under negation"""
    return ctt.CirculantSpec.from_generators(cfg.n, cfg.connection)


def load_run_config_yaml(run_config_file, base=None):
    """
    Parse a YAML run configuration with a top level ``run`` mapping. Missing keys
    take their defaults.

    :param run_config_file: The configuration file to parse
    :type run_config_file: TextIO | dict
    :param base: configuration supplying the defaults. Optional
    :type base: RunConfig
    :return: The validated configuration
    :rtype: RunConfig
    """
    if isinstance(run_config_file, dict):
        cfg_yml = run_config_file
    else:
        cfg_yml = yaml.safe_load(run_config_file)
    if not isinstance(cfg_yml, dict) or "run" not in cfg_yml:
        raise ValueError("configuration must contain a top level run mapping")
    run = cfg_yml["run"]
    if not isinstance(run, dict):
        raise ValueError("run must be a mapping")
    unknown = sorted(set(run.keys()) - set(RunConfig._fields))
    if len(unknown) > 0:
        raise ValueError("unknown configuration keys: " + ", ".join(str(k) for k in unknown))

    if base is None:
        base = default_run_config()
    values = dict(run)
    for key in ("connection", "primes"):
        if key in values:
            v = values[key]
            if isinstance(v, int):
                v = [v]
            _check_list(v, "invalid " + key)
            values[key] = tuple(int(a) for a in v)
    if "power_tolerance" in values:
        values["power_tolerance"] = float(values["power_tolerance"])
    return validate_run_config(base._replace(**values))
