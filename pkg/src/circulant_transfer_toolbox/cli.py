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

"""Command line interface: ``circulant-transfer <command> [options]``"""

from __future__ import absolute_import

import sys
import json
import logging
import argparse

import numpy as np
from sympy import isprime

from . import circulant_transfer_toolbox as ctt
from .circulant_transfer_toolbox import StructuralError, ResourceCapExceeded, VerificationMismatch
from . import transfer
from . import symmetry
from . import spectral_factor as sf
from . import oracle
from .exact_arith import charpoly_exact
from .run_config import RunConfig, default_run_config, load_run_config_yaml, validate_run_config, \
    spec_from_config

_logger = logging.getLogger(__name__)

SCHEMA_VERSION = "circulant-transfer/1"

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INVALID_CONFIG = 2
EXIT_CAP_EXCEEDED = 3
EXIT_UNRESOLVED = 4


class UnresolvedVerdict(Exception):
    """An irreducibility verdict stayed unresolved under ``--strict``"""


def _poly(p):
    return {"ascending": p.to_strings(), "text": str(p)}


def _int_matrix(m):
    return [[int(v) for v in row] for row in np.asarray(m).tolist()]


class _Context(object):
    """Objects shared by the commands, built on first use"""

    def __init__(self, cfg):
        self.cfg = cfg
        self.spec = spec_from_config(cfg)
        self.states = ctt.enumerate_states(self.spec)
        self.kernel = ctt.closed_kernel(self.spec)
        self.t = transfer.build_transfer(self.states, self.kernel)
        self.wt = transfer.build_weighted_transfer(self.t)
        self._dec = None
        self._t_orb = None

    @property
    def prime(self):
        return self.spec.n % 2 == 1 and isprime(self.spec.n)

    @property
    def dec(self):
        if self._dec is None:
            self._dec = symmetry.orbit_decompose(self.states, self.spec.n)
        return self._dec

    @property
    def t_orb(self):
        if self._t_orb is None:
            self._t_orb = symmetry.orbit_transfer(self.dec, self.kernel)
        return self._t_orb

    def polynomial(self, d=None, boundary=None):
        d = self.cfg.layers if d is None else d
        boundary = self.cfg.boundary if boundary is None else boundary
        if boundary == "torus":
            return transfer.torus_polynomial(self.wt, d)
        return transfer.strip_polynomial(self.wt, d, self.t_orb)


def cmd_states(ctx):
    states = ctx.states
    return {"count": len(states),
            "weight_histogram": states.weight_histogram(),
            "states": [ctt.mask_to_residues(s) for s in states]}


def cmd_orbits(ctx):
    dec = ctx.dec
    result = {"orbit_count": len(dec.orbits),
              "rotation_orbit_count": len(dec.rotation_orbits),
              "burnside": symmetry.burnside_count(ctx.states, ctx.spec.n),
              "orbits": [{"representative": ctt.mask_to_residues(o.representative), "size": o.size,
                          "weight": o.weight, "reflection_closed": o.reflection_closed}
                         for o in dec.orbits]}
    if ctx.prime:
        m = symmetry.multiplicity_accounting(dec)
        result["multiplicities"] = {"chi0": m.m_chi0, "chi1": m.m_chi1,
                                    "rho": dict((str(k), v) for k, v in m.m_rho.items()),
                                    "chiral_rotation_orbits": m.chiral_rotation_orbits}
    return result


def cmd_transfer(ctx):
    return {"dimension": ctx.t.dimension,
            "matrix": _int_matrix(ctx.t.matrix),
            "row_sums": [int(v) for v in ctx.t.matrix.sum(axis=1)],
            "orbit_matrix": _int_matrix(ctx.t_orb.matrix),
            "orbit_sizes": ctx.t_orb.sizes,
            "orbit_row_sums": ctx.t_orb.row_sums(),
            "equivariant": symmetry.check_equivariance(ctx.t)}


def _oracle_compare(ctx, p, d, boundary):
    g = ctt.build_strong_stack(ctx.spec, d, boundary)
    brute = oracle.brute_independence_polynomial(g, ctx.cfg.oracle_cap)
    if brute.polynomial != p.polynomial:
        raise VerificationMismatch("transfer and oracle polynomials differ for d = " + str(d) + " " + boundary,
                                   ["oracle_" + boundary + "_" + str(d)])
    _logger.info("oracle check for d = %d %s took %.3f s", d, boundary, brute.elapsed)
    return {"equal": True, "vertex_count": g.vertex_count}


def cmd_indpoly(ctx):
    p = ctx.polynomial()
    result = {"d": p.d, "boundary": p.boundary, "polynomial": _poly(p.polynomial),
              "value_at_one": str(p.value_at_one()), "alpha": p.alpha,
              "leading_coefficient": str(p.leading_coefficient), "vertex_count": p.vertex_count}
    if ctx.cfg.verification_level != "none":
        result["oracle"] = _oracle_compare(ctx, p, p.d, p.boundary)
    return result


def cmd_charpoly(ctx):
    chi = charpoly_exact(ctx.t.matrix)
    nu, rest = chi.nonzero_part()
    result = {"chi_T": _poly(chi), "kernel": nu, "orbit_charpoly": _poly(charpoly_exact(ctx.t_orb.matrix))}
    if ctx.prime and ctx.dec.rotation_orbits_free():
        result["b0_charpoly"] = _poly(charpoly_exact(symmetry.rotation_orbit_matrix(ctx.dec, ctx.kernel)))
    return result


def _factor_dict(report):
    return {"n": report.n, "nu": report.nu, "state_count": report.state_count,
            "f_anom": _poly(report.f_anom), "f_cyc": _poly(report.f_cyc),
            "k_pattern": report.k_factor_degrees(),
            "orbit_kernel": report.orbit_kernel,
            "mode_kernels": dict((str(k), v) for k, v in report.mode_kernels.items()),
            "per_mode_factors": dict((str(k), [str(c) for c in g.coefficients])
                                     for k, g in report.per_mode_factors),
            "f_chi0": _poly(report.f_chi0) if report.f_chi0 is not None else None,
            "f_chi1": _poly(report.f_chi1) if report.f_chi1 is not None else None,
            "flags": dict(report.flags)}


def cmd_factor(ctx):
    return _factor_dict(sf.factorization_for_spec(ctx.spec))


def _galois_dict(ctx, f, candidates=()):
    verdict = sf.irreducibility_sieve(f, ctx.cfg.primes, candidates)
    if verdict.kind == "unresolved" and ctx.cfg.strict:
        raise UnresolvedVerdict("irreducibility of " + str(f) + " is unresolved")
    result = {"polynomial": _poly(f), "verdict": verdict.kind, "description": sf.describe_verdict(verdict),
              "parts": [{"polynomial": _poly(p), "verdict": k} for p, k in verdict.parts],
              "primes": list(verdict.primes), "detail": verdict.detail, "group": "n/a"}
    if f.degree == 4 and verdict.kind == "irreducible":
        g = sf.quartic_galois(f, ctx.cfg.primes, verdict)
        result.update({"group": g.group, "discriminant": str(g.discriminant),
                       "discriminant_is_square": g.discriminant_is_square,
                       "resolvent_cubic": _poly(g.resolvent_cubic),
                       "resolvent_rational_roots": g.resolvent_rational_roots,
                       "splitting_field_degree": g.splitting_field_degree,
                       "modp_patterns": dict((str(p), v) for p, v in g.modp_patterns.items()),
                       "disjointness_deduction": g.disjointness_deduction,
                       "justification": g.justification})
    return result


def cmd_galois(ctx):
    report = sf.factorization_for_spec(ctx.spec)
    candidates = [p for p in (report.f_chi0, report.f_chi1) if p is not None and p.degree > 0]
    return _galois_dict(ctx, report.f_anom, candidates)


def _spectral_dict(ctx):
    cfg = ctx.cfg
    r = transfer.spectral_report(ctx.t, ctx.t_orb, ctx.wt, cfg.growth_horizon, cfg.power_tolerance,
                                 cfg.power_max_iter)
    return {"rho_T": r.rho_T, "rho_orbit": r.rho_orbit, "perron_vector_min": r.perron_vector_min,
            "capacity_stat": r.capacity_stat, "capacity_caveat": r.capacity_caveat,
            "growth_samples": r.growth_samples, "ratio_samples": r.ratio_samples,
            "strip_values": [str(v) for v in r.strip_values],
            "orbit_eigenvalues": [v if isinstance(v, float) else [v.real, v.imag] for v in r.orbit_eigenvalues],
            "iterations": r.iterations}


def cmd_spectral(ctx):
    return _spectral_dict(ctx)


def cmd_summary(ctx):
    rows = transfer.summary_table(ctx.wt, ctx.t_orb)
    return {"rows": [dict(r._asdict(), value_at_one=str(r.value_at_one),
                          leading_coefficient=str(r.leading_coefficient)) for r in rows]}


def _summary_tsv(result):
    lines = ["d\tobject\tformula\tI(1)\talpha\tleading\tsize"]
    for r in result["rows"]:
        lines.append("\t".join(str(r[k]) for k in ("d", "object", "formula", "value_at_one", "alpha",
                                                   "leading_coefficient", "size")))
    return lines


def cmd_table(ctx, n_list):
    rows = []
    for n in n_list:
        report = sf.factorization_for_spec(ctt.cycle_spec(n))
        row = sf.table_row(report, ctx.cfg.primes)
        if row.verdict == "unresolved" and ctx.cfg.strict:
            raise UnresolvedVerdict("f_anom for n = " + str(n) + " is unresolved")
        rows.append(row)
    return {"rows": [r._asdict() for r in rows], "tsv": [sf.TABLE_TSV_HEADER] + [r.to_tsv() for r in rows]}


def _sector_dict(ctx, d):
    torus = transfer.torus_polynomial(ctx.wt, d).polynomial
    st = symmetry.sector_traces(ctx.dec, ctx.kernel, d, torus)
    return {"d": d, "I_anom": _poly(st.I_anom), "I_cyc": _poly(st.I_cyc), "torus": _poly(torus)}


def cmd_verify(ctx):
    """
    Runs the checks for the configured level and raises VerificationMismatch
    listing every failed check
    """
    cfg = ctx.cfg
    checks = dict()
    hist = ctx.states.weight_histogram()
    p1 = transfer.strip_polynomial(ctx.wt, 1, ctx.t_orb)
    checks["orbit_sum_matches_histogram"] = list(p1.polynomial.coefficients) == list(hist)
    checks["equivariance"] = symmetry.check_equivariance(ctx.t)
    for d in range(1, cfg.layers + 1):
        full = transfer.strip_polynomial(ctx.wt, d)
        checks["strip_orbit_compression_" + str(d)] = full == transfer.strip_polynomial(ctx.wt, d, ctx.t_orb)

    if cfg.verification_level in ("oracle", "full"):
        for d in range(1, cfg.layers + 1):
            if ctx.spec.n * d > cfg.oracle_cap:
                break
            for boundary in ("strip", "torus"):
                if boundary == "torus" and d < 2:
                    continue
                eq = oracle.layered_equivalence_check(ctx.spec, d, boundary, cfg.oracle_cap)
                checks["layered_" + boundary + "_" + str(d)] = eq.equal
                checks["oracle_" + boundary + "_" + str(d)] = eq.oracle == ctx.polynomial(d, boundary).polynomial

    if cfg.verification_level == "full" and ctx.prime and ctx.dec.rotation_orbits_free():
        report = sf.factorization_for_spec(ctx.spec)
        for name, ok in report.flags.items():
            checks["factor_" + name] = ok
        for d in range(2, max(cfg.layers, 3) + 1):
            try:
                _sector_dict(ctx, d)
                checks["sector_traces_" + str(d)] = True
            except StructuralError:
                checks["sector_traces_" + str(d)] = False
        m = symmetry.multiplicity_accounting(ctx.dec)
        checks["multiplicity_accounting"] = m.m_chi0 + m.m_chi1 == len(ctx.dec.rotation_orbits)
        if ctx.spec == ctt.cycle_spec(ctx.spec.n):
            checks.update(sf.check_documented_factorization(report))
        if ctx.spec == ctt.cycle_spec(7):
            verdict = sf.irreducibility_sieve(report.f_anom, cfg.primes)
            checks["documented_galois_group_7"] = verdict.kind == "irreducible" and report.f_anom.degree == 4 and \
                sf.quartic_galois(report.f_anom, cfg.primes, verdict).group == "S4"

    if cfg.verification_level == "full" and ctx.spec == ctt.cycle_spec(7):
        checks.update(transfer.check_documented_c7(ctx.wt, ctx.t_orb))

    failed = sorted(k for k, ok in checks.items() if not ok)
    if failed:
        raise VerificationMismatch("verification failed: " + ", ".join(failed), failed)
    return {"level": cfg.verification_level, "checks": checks, "passed": len(checks)}


def cmd_report(ctx):
    """Orbit table, orbit matrix, factorization, sector traces, spectral data and Galois data in one document"""
    result = {"orbits": cmd_orbits(ctx),
              "orbit_matrix": _int_matrix(ctx.t_orb.matrix),
              "spectral": _spectral_dict(ctx),
              "summary": cmd_summary(ctx)["rows"]}
    if ctx.prime and ctx.dec.rotation_orbits_free():
        report = sf.factorization_for_spec(ctx.spec)
        result["factorization"] = _factor_dict(report)
        d = ctx.cfg.layers if ctx.cfg.boundary == "torus" else ctx.spec.n
        result["sectors"] = _sector_dict(ctx, d)
        candidates = [p for p in (report.f_chi0, report.f_chi1) if p is not None and p.degree > 0]
        result["galois"] = _galois_dict(ctx, report.f_anom, candidates)
    return result


_COMMANDS = {
    "states": (cmd_states, "independent sets of the base circulant"),
    "orbits": (cmd_orbits, "dihedral orbits and representation multiplicities"),
    "transfer": (cmd_transfer, "transfer matrix and its orbit compression"),
    "indpoly": (cmd_indpoly, "independence polynomial of the strong cylinder or torus"),
    "charpoly": (cmd_charpoly, "exact characteristic polynomials"),
    "factor": (cmd_factor, "kernel, trivial-mode and cyclotomic factors of chi_T"),
    "galois": (cmd_galois, "irreducibility and Galois data of the trivial-mode factor"),
    "spectral": (cmd_spectral, "spectral radius, Perron vector and growth samples"),
    "verify": (cmd_verify, "run the consistency checks"),
    "report": (cmd_report, "complete machine-readable report"),
    "summary": (cmd_summary, "summary table of independence data"),
    "table": (None, "factorization table for several primes"),
}


def _int_list(s):
    return tuple(int(v) for v in s.split(",") if v.strip() != "")


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=argparse.FileType("r"), default=None, help="YAML run configuration")
    common.add_argument("--n", type=int, default=None, help="number of base vertices (default: 7)")
    common.add_argument("--connection", type=_int_list, default=None,
                        help="comma separated generators, closed under negation (default: 1)")
    common.add_argument("--d", "--layers", dest="layers", type=int, default=None, help="layer count (default: 2)")
    common.add_argument("--boundary", choices=["strip", "torus"], default=None)
    common.add_argument("--format", dest="output_format", choices=["json", "tsv", "text"], default=None)
    common.add_argument("--level", dest="verification_level", choices=["none", "oracle", "full"], default=None)
    common.add_argument("--primes", type=_int_list, default=None, help="comma separated primes for diagnostics")
    common.add_argument("--tolerance", dest="power_tolerance", type=float, default=None)
    common.add_argument("--max-iter", dest="power_max_iter", type=int, default=None)
    common.add_argument("--horizon", dest="growth_horizon", type=int, default=None)
    common.add_argument("--oracle-cap", dest="oracle_cap", type=int, default=None)
    common.add_argument("--strict", action="store_true", default=None,
                        help="exit with status 4 on unresolved irreducibility verdicts")
    common.add_argument("-v", "--verbose", action="count", default=0)

    parser = argparse.ArgumentParser(prog="circulant-transfer",
                                     description="Transfer operators for independent sets in strong powers of "
                                                 "circulant graphs")
    sub = parser.add_subparsers(dest="command")
    sub.required = True
    for name, (_, helptext) in _COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=helptext)
        if name == "table":
            p.add_argument("--n-list", type=_int_list, default=(5, 7, 11), help="odd primes (default: 5,7,11)")
    return parser


def config_from_args(args):
    """Defaults, then the YAML file, then the command line flags"""
    if args.config is not None:
        cfg = load_run_config_yaml(args.config)
    else:
        cfg = default_run_config()
    overrides = dict((k, getattr(args, k)) for k in RunConfig._fields
                     if getattr(args, k, None) is not None)
    return validate_run_config(cfg._replace(**overrides))


def _render(cfg, command, result):
    if cfg.output_format == "json":
        doc = {"schema_version": SCHEMA_VERSION, "command": command, "config": cfg.to_dict(), "result": result}
        return [json.dumps(doc, sort_keys=True, indent=2)]
    if cfg.output_format == "tsv":
        if command == "table":
            return result["tsv"]
        if command == "summary":
            return _summary_tsv(result)
        return [k + "\t" + json.dumps(result[k], sort_keys=True) for k in sorted(result)]
    return [k + ": " + (result[k] if isinstance(result[k], str) else json.dumps(result[k], sort_keys=True))
            for k in sorted(result)]


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    level = logging.WARNING if args.verbose == 0 else (logging.INFO if args.verbose == 1 else logging.DEBUG)
    logging.basicConfig(stream=sys.stderr, level=level, format="%(levelname)s %(name)s: %(message)s")
    logging.captureWarnings(True)

    try:
        cfg = config_from_args(args)
        ctx = _Context(cfg)
        if args.command == "table":
            for n in args.n_list:
                if n % 2 == 0 or not isprime(n):
                    raise ValueError("table rows need odd primes, got " + str(n))
            result = cmd_table(ctx, args.n_list)
        else:
            result = _COMMANDS[args.command][0](ctx)
    except VerificationMismatch as e:
        _logger.error("%s", e)
        return EXIT_MISMATCH
    except (StructuralError, ArithmeticError) as e:
        _logger.error("%s", e)
        return EXIT_MISMATCH
    except ResourceCapExceeded as e:
        _logger.error("%s", e)
        return EXIT_CAP_EXCEEDED
    except UnresolvedVerdict as e:
        _logger.error("%s", e)
        return EXIT_UNRESOLVED
    except ValueError as e:
        _logger.error("invalid configuration: %s", e)
        return EXIT_INVALID_CONFIG

    for line in _render(cfg, args.command, result):
        sys.stdout.write(line + "\n")
    return EXIT_OK
