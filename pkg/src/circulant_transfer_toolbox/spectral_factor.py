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

"""
Factorization of the transfer characteristic polynomial into a kernel power,
the trivial-mode factor f_anom and the square of the cyclotomic factor f_cyc,
together with irreducibility and Galois diagnostics for f_anom.
"""

from __future__ import absolute_import

import logging
import warnings
from fractions import Fraction
from typing import NamedTuple, List, Tuple, Dict, Optional

from sympy import Poly, divisors, isprime, primerange, symbols
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_sqf_p

from . import circulant_transfer_toolbox as ctt
from .circulant_transfer_toolbox import StructuralError
from .exact_arith import IntPolynomial, PrimeFieldPoly, charpoly_exact, poly_square_root, \
    integer_sqrt_exact, factor_mod_p, degree_pattern
from .cyclotomic import CyclotomicPolynomial
from . import symmetry
from . import transfer

_logger = logging.getLogger(__name__)

DEFAULT_SIEVE_PRIMES = tuple(int(p) for p in primerange(2, 100))

# Factors stated for the trivial mode of the cycle powers
KNOWN_FACTOR_CANDIDATES = (IntPolynomial([-1, -1, 2, 1]),)

RATIONAL_ROOT_MAX_BITS = 64

S4_DISJOINTNESS_JUSTIFICATION = \
    "S4 has no normal subgroup of index 3, so the degree-24 splitting field contains no " \
    "Galois cubic subfield and shares no nontrivial subfield with the abelian cubic field K"

_SPLITTING_FIELD_DEGREE = {"S4": 24, "A4": 12, "D4": 8, "C4": 4, "V4": 4}


class FactorizationReport(NamedTuple):
    """
    chi_T = lambda^nu * f_anom * f_cyc^2 with its consistency flags

    per_mode_factors holds (k, nonzero part of the characteristic polynomial of B_k)
    for k = 1..n-1. orbit_kernel and mode_kernels are the multiplicities of the
    eigenvalue zero in B_0 and in each B_k. f_chi0 and f_chi1 are the nonzero parts
    of the dihedral orbit matrix and of the sign-sector matrix, when computed.
    """
    n: int
    state_count: int
    nu: int
    chi: IntPolynomial
    f_anom: IntPolynomial
    f_cyc: IntPolynomial
    per_mode_factors: List[Tuple[int, CyclotomicPolynomial]]
    orbit_kernel: int
    mode_kernels: Dict[int, int]
    f_chi0: Optional[IntPolynomial]
    f_chi1: Optional[IntPolynomial]
    flags: Dict[str, bool]

    def k_factor_degrees(self):
        """Degrees of the per-mode factors for k = 1..(n-1)/2"""
        half = (self.n - 1) // 2
        return [g.degree for k, g in self.per_mode_factors if 1 <= k <= half]

    def reconstruct(self):
        return self.f_anom * self.f_cyc * self.f_cyc * IntPolynomial.monomial(self.nu)


def assemble_factorization(chi, orbit_charpoly, mode_factors, orbit_split=None):
    """
    Assembles chi_T = lambda^nu * f_anom * f_cyc^2.

    f_cyc is recovered twice: as the square root of chi_T / (lambda^nu * f_anom), and
    as the product of the nonzero parts of the characteristic polynomials of B_k for
    k = 1..(n-1)/2, which must have rational coefficients. Both must agree.

    :type    chi: IntPolynomial
    :param   chi: characteristic polynomial of the full transfer matrix
    :type    orbit_charpoly: IntPolynomial
    :param   orbit_charpoly: characteristic polynomial of B_0
    :type    mode_factors: list
    :param   mode_factors: (k, CyclotomicPolynomial) for every k = 1..n-1, full
                           characteristic polynomials of B_k
    :type    orbit_split: tuple
    :param   orbit_split: characteristic polynomials of the dihedral orbit matrix and
                          the sign-sector matrix. Optional
    :rtype:  FactorizationReport
    """
    mode_factors = sorted(mode_factors, key=lambda kg: kg[0])
    if len(mode_factors) == 0:
        raise ValueError("at least one Fourier mode is required")
    n = mode_factors[0][1].n
    if [k for k, _ in mode_factors] != list(range(1, n)):
        raise ValueError("mode factors must cover k = 1.." + str(n - 1))
    half = (n - 1) // 2

    nu = max(chi.valuation(), 0)
    v0, f_anom = orbit_charpoly.nonzero_part()
    if not f_anom.is_integral():
        raise StructuralError("trivial-mode factor has non-integer coefficients", {"f_anom": f_anom})

    flags = dict()
    mode_kernels = dict()
    per_mode = []
    for k, g in mode_factors:
        z, gk = g.nonzero_part()
        mode_kernels[k] = z
        per_mode.append((k, gk))
    flags["modes_real"] = all(gk.is_real() for _, gk in per_mode)
    by_k = dict(per_mode)
    flags["galois_pairing"] = all(by_k[n - k] == by_k[k].conjugate() for k in range(1, half + 1))

    full_product = CyclotomicPolynomial.from_int_polynomial(n, orbit_charpoly)
    for _, g in mode_factors:
        full_product = full_product * g
    flags["block_product"] = full_product.is_rational() and full_product.to_int_polynomial() == chi

    # route (a): square root of the cofactor
    rest = chi.nonzero_part()[1]
    q, r = rest.divrem(f_anom)
    root_a = poly_square_root(q) if r.is_zero() and q.is_monic() else None

    # route (b): product over one representative per conjugate pair of modes
    prod = CyclotomicPolynomial(n, [1])
    for k in range(1, half + 1):
        prod = prod * by_k[k]
    root_b = prod.to_int_polynomial() if prod.is_rational() else None

    flags["square_root_route"] = root_a is not None
    flags["fourier_route"] = root_b is not None
    flags["routes_agree"] = root_a is not None and root_a == root_b
    if not flags["routes_agree"]:
        raise StructuralError("the two constructions of the cyclotomic factor disagree",
                              {"square_root": root_a, "fourier": root_b})
    f_cyc = root_a

    state_count = chi.degree
    flags["degree_accounting"] = nu == state_count - f_anom.degree - 2 * f_cyc.degree
    flags["kernel_accounting"] = nu == v0 + sum(mode_kernels.values())
    flags["reconstruction"] = f_anom * f_cyc * f_cyc * IntPolynomial.monomial(nu) == chi

    f_chi0 = None
    f_chi1 = None
    if orbit_split is not None:
        f_chi0 = orbit_split[0].nonzero_part()[1]
        f_chi1 = orbit_split[1].nonzero_part()[1]
        flags["orbit_split"] = f_chi0 * f_chi1 == f_anom

    for name, ok in flags.items():
        if not ok:
            _logger.warning("n=%d: factorization check %s failed", n, name)
    if not flags["reconstruction"]:
        raise StructuralError("lambda^nu * f_anom * f_cyc^2 does not reproduce chi_T",
                              {"chi": chi, "f_anom": f_anom, "f_cyc": f_cyc})

    return FactorizationReport(n, state_count, nu, chi, f_anom, f_cyc, per_mode, v0, mode_kernels,
                               f_chi0, f_chi1, flags)


def factorization_for_spec(spec, workers=None, direct_modes=False):
    """
    Runs the whole pipeline for an odd prime n: state enumeration, the transfer
    matrix and its characteristic polynomial, B_0, B_1 and the Galois images of B_1
    for the other modes.

    :type    spec: CirculantSpec
    :type    workers: int
    :param   workers: thread count for the modular characteristic polynomials. Optional
    :type    direct_modes: bool
    :param   direct_modes: compute every B_k directly instead of by Galois action
    :rtype:  FactorizationReport
    """
    states = ctt.enumerate_states(spec)
    kernel = ctt.closed_kernel(spec)
    t = transfer.build_transfer(states, kernel)
    dec = symmetry.orbit_decompose(states, spec.n)

    chi = charpoly_exact(t.matrix, workers)
    orbit_charpoly = charpoly_exact(symmetry.rotation_orbit_matrix(dec, kernel), workers)

    n = spec.n
    if direct_modes:
        modes = [(k, symmetry.fourier_block(dec, kernel, k).charpoly(workers=workers)) for k in range(1, n)]
    else:
        g1 = symmetry.fourier_block(dec, kernel, 1).charpoly(workers=workers)
        modes = [(k, g1.galois(k)) for k in range(1, n)]

    t_orb = symmetry.orbit_transfer(dec, kernel)
    split = (charpoly_exact(t_orb.matrix, workers),
             charpoly_exact(symmetry.sign_sector_matrix(dec, kernel), workers))
    _logger.info("n=%d: %d states, charpoly assembled", n, len(states))
    return assemble_factorization(chi, orbit_charpoly, modes, split)


class IrreducibilityVerdict(NamedTuple):
    """
    kind is ``irreducible``, ``factored`` or ``unresolved``. parts lists
    (primitive factor, kind of that factor) with each factor itself either
    irreducible or unresolved. primes are the primes whose patterns were used.
    """
    kind: str
    parts: Tuple[Tuple[IntPolynomial, str], ...]
    primes: Tuple[int, ...]
    detail: str


def _rational_root(f):
    a0 = f[0]
    if a0 == 0:
        return Fraction(0), True
    lc = f.leading_coefficient
    if abs(a0).bit_length() > RATIONAL_ROOT_MAX_BITS or abs(lc).bit_length() > RATIONAL_ROOT_MAX_BITS:
        return None, False
    for q in divisors(abs(lc)):
        for p in divisors(abs(a0)):
            for s in (1, -1):
                r = Fraction(s * int(p), int(q))
                if r.denominator == q and f(r) == 0:
                    return r, True
    return None, True


def _quadratic_pair(f):
    # monic quartic as (x^2 + a x + b)(x^2 + c x + e)
    f0, f1, f2, f3 = f[0], f[1], f[2], f[3]
    for m in divisors(abs(f0)):
        for b in (int(m), -int(m)):
            e = f0 // b
            disc = f3 * f3 - 4 * (f2 - b - e)
            if disc < 0:
                continue
            s = integer_sqrt_exact(disc)
            if s is None or (f3 + s) % 2 != 0:
                continue
            for a, c in (((f3 + s) // 2, (f3 - s) // 2), ((f3 - s) // 2, (f3 + s) // 2)):
                if a * e + b * c == f1:
                    return IntPolynomial([b, a, 1]), IntPolynomial([e, c, 1])
    return None


def _subset_sums(pattern):
    sums = {0}
    for d in pattern:
        sums = sums | set(s + d for s in sums)
    return sums


def _degree_sieve(f, primes):
    deg = f.degree
    allowed = None
    used = []
    for p in primes:
        if f.leading_coefficient % p == 0:
            continue
        fp = PrimeFieldPoly.from_int_polynomial(f, p)
        if not gf_sqf_p(fp.to_descending(), p, ZZ):
            continue
        pattern = degree_pattern(factor_mod_p(fp))
        sums = _subset_sums(pattern)
        allowed = sums if allowed is None else allowed & sums
        used.append(p)
        _logger.debug("degree %d: pattern mod %d is %s", deg, p, pattern)
        if allowed <= {0, deg}:
            return True, tuple(used)
    return False, tuple(used)


def _combine(parts_verdicts, detail):
    parts = []
    primes = []
    for v in parts_verdicts:
        parts.extend(v.parts)
        primes.extend(p for p in v.primes if p not in primes)
    return IrreducibilityVerdict("factored", tuple(parts), tuple(primes), detail)


def irreducibility_sieve(f, primes=None, candidates=()):
    """
    Decides irreducibility over Q where the evidence allows it.

    Runs the rational root test, trial division by the candidate factors, then
    intersects the achievable factor-degree sums of f modulo each prime of good
    reduction. Irreducible once only the trivial sums 0 and deg f survive. Monic
    quartics reducible modulo every prime are settled by a search for a pair of
    integer quadratic factors.

    :type    f: IntPolynomial
    :param   f: nonzero polynomial of positive degree
    :type    primes: list
    :param   primes: primes to try, defaults to the primes below 100. Optional
    :type    candidates: list
    :param   candidates: extra IntPolynomial factors to try by division. Optional
    :rtype:  IrreducibilityVerdict
    """
    if f.is_zero() or f.degree < 1:
        raise ValueError("irreducibility needs a polynomial of positive degree")
    f = f.primitive_part()
    deg = f.degree
    if primes is None:
        primes = DEFAULT_SIEVE_PRIMES
    if deg == 1:
        return IrreducibilityVerdict("irreducible", ((f, "irreducible"),), (), "linear")

    root, roots_checked = _rational_root(f)
    if root is not None:
        linear = IntPolynomial([-root.numerator, root.denominator])
        quotient = f.exact_quotient(linear).primitive_part()
        return _combine([irreducibility_sieve(linear, primes),
                         irreducibility_sieve(quotient, primes, candidates)],
                        "rational root " + str(root))

    for c in list(candidates) + list(KNOWN_FACTOR_CANDIDATES):
        c = c.primitive_part()
        if not 0 < c.degree < deg:
            continue
        q, r = f.divrem(c)
        if r.is_zero():
            return _combine([irreducibility_sieve(c, primes, candidates),
                             irreducibility_sieve(q.primitive_part(), primes, candidates)],
                            "divisible by " + str(c))

    if deg <= 3 and roots_checked:
        return IrreducibilityVerdict("irreducible", ((f, "irreducible"),), (), "no rational root")

    certified, used = _degree_sieve(f, primes)
    if certified:
        return IrreducibilityVerdict("irreducible", ((f, "irreducible"),), used,
                                     "degree patterns modulo " + ", ".join(str(p) for p in used))

    if deg == 4 and f.is_monic() and roots_checked:
        pair = _quadratic_pair(f)
        if pair is None:
            return IrreducibilityVerdict("irreducible", ((f, "irreducible"),), used,
                                         "no rational root and no integer quadratic factorization")
        return _combine([irreducibility_sieve(pair[0], primes), irreducibility_sieve(pair[1], primes)],
                        "product of quadratics")

    warnings.warn("irreducibility of a degree " + str(deg) + " polynomial left unresolved after " +
                  str(len(used)) + " primes")
    return IrreducibilityVerdict("unresolved", ((f, "unresolved"),), used,
                                 "consistent with irreducibility; not certified")


_DEGREE_NAMES = {1: "linear", 2: "quadratic", 3: "cubic", 4: "quartic"}


def describe_verdict(verdict):
    """Short table description: ``quartic``, ``irred. deg. 12``, or the factors in parentheses"""

    def one(poly, kind):
        if kind == "unresolved":
            return "unresolved deg. " + str(poly.degree)
        return _DEGREE_NAMES.get(poly.degree, "irred. deg. " + str(poly.degree))

    if verdict.kind != "factored":
        return one(*verdict.parts[0])
    out = []
    for poly, kind in verdict.parts:
        out.append("(" + (poly.format() if poly.degree <= 3 and kind == "irreducible" else one(poly, kind)) + ")")
    return " * ".join(out)


class ModpPattern(NamedTuple):
    p: int
    factors: List[Tuple[PrimeFieldPoly, int]]
    roots: List[int]
    pattern: List[int]


def modp_diagnostics(f, p):
    """
    Factorization of f modulo a prime of good leading coefficient

    :type    f: IntPolynomial
    :type    p: int
    :rtype:  ModpPattern
    """
    p = int(p)
    if not isprime(p):
        raise ValueError("bad prime " + str(p))
    if f.leading_coefficient % p == 0:
        raise ValueError("prime " + str(p) + " divides the leading coefficient")
    fp = PrimeFieldPoly.from_int_polynomial(f, p)
    factors = factor_mod_p(fp)
    roots = sorted((-g.coefficients[0]) % p for g, _ in factors if g.degree == 1)
    return ModpPattern(p, factors, roots, degree_pattern(factors))


class GaloisReport(NamedTuple):
    polynomial: IntPolynomial
    verdict: IrreducibilityVerdict
    discriminant: int
    discriminant_is_square: bool
    resolvent_cubic: IntPolynomial
    resolvent_rational_roots: List[int]
    group: str
    splitting_field_degree: int
    modp_patterns: Dict[int, List[int]]
    disjointness_deduction: bool
    justification: str


def _integer_roots(p):
    # integer roots of a monic integer polynomial
    if p.degree < 1:
        return set()
    if p[0] == 0:
        return {0} | _integer_roots(IntPolynomial(p.coefficients[1:]))
    return set(s * int(r) for r in divisors(abs(p[0])) for s in (1, -1) if p(s * int(r)) == 0)


def _is_square(a):
    return a >= 0 and integer_sqrt_exact(a) is not None


def _splits_over(disc, delta):
    # x^2 with discriminant disc splits over Q(sqrt(delta))
    return disc == 0 or _is_square(disc) or _is_square(disc * delta)


def discriminant(f):
    x = symbols("x")
    return int(Poly(list(reversed([int(a) for a in f.coefficients])), x).discriminant())


def quartic_galois(f, primes=None, verdict=None):
    """
    Galois group of an irreducible quartic by the resolvent cubic case table,
    with the Kappe-Warren test separating C4 from D4.

    For f = x^4 + a x^3 + b x^2 + c x + d the resolvent cubic is
    y^3 - b y^2 + (a c - 4 d) y - (a^2 d - 4 b d + c^2). A non-monic f is first
    rescaled to a monic quartic with the same splitting field.

    :type    f: IntPolynomial
    :param   f: integer quartic
    :type    primes: list
    :param   primes: primes for the mod p patterns, defaults to the primes below 30. Optional
    :type    verdict: IrreducibilityVerdict
    :param   verdict: a previously computed verdict. Optional
    :rtype:  GaloisReport
    """
    if f.degree != 4 or not f.is_integral():
        raise ValueError("quartic_galois needs an integer polynomial of degree 4")
    f = f.primitive_part()
    if verdict is None:
        verdict = irreducibility_sieve(f)
    if verdict.kind != "irreducible":
        raise ValueError("quartic is not known to be irreducible: " + verdict.kind)
    lead = f.leading_coefficient
    a, b, c, d = [f[i] * lead ** (3 - i) for i in (3, 2, 1, 0)]
    resolvent = IntPolynomial([-(a * a * d - 4 * b * d + c * c), a * c - 4 * d, -b, 1])
    delta = discriminant(f)
    delta_square = _is_square(delta)
    roots = sorted(_integer_roots(resolvent))

    if len(roots) == 0:
        group = "A4" if delta_square else "S4"
    elif len(roots) == 3:
        group = "V4"
    else:
        r = roots[0]
        if _splits_over(r * r - 4 * d, delta) and _splits_over(a * a - 4 * (b - r), delta):
            group = "C4"
        else:
            group = "D4"

    if primes is None:
        primes = list(primerange(2, 30))
    patterns = dict()
    for p in primes:
        if lead % p != 0:
            patterns[int(p)] = modp_diagnostics(f, p).pattern

    disjoint = group == "S4"
    return GaloisReport(f, verdict, delta, delta_square, resolvent, roots, group,
                        _SPLITTING_FIELD_DEGREE[group], patterns, disjoint,
                        S4_DISJOINTNESS_JUSTIFICATION if disjoint else "")


class TableRow(NamedTuple):
    n: int
    nu: int
    f_anom: str
    f_anom_degree: int
    f_cyc_degree: int
    k_pattern: List[int]
    verdict: str

    def to_tsv(self):
        return "\t".join([str(self.n), str(self.nu), self.f_anom, str(self.f_cyc_degree),
                          "[" + ",".join(str(k) for k in self.k_pattern) + "]"])


TABLE_TSV_HEADER = "n\tkernel\tf_anom\tdeg f_cyc\tK-pattern"


def table_row(report, primes=None):
    """One small-primes table row from a factorization report"""
    verdict = irreducibility_sieve(report.f_anom, primes)
    return TableRow(report.n, report.nu, describe_verdict(verdict), report.f_anom.degree,
                    report.f_cyc.degree, report.k_factor_degrees(), verdict.kind)


class DocumentedRow(NamedTuple):
    nu: int
    f_anom_degree: int
    f_cyc_degree: int
    k_pattern: Tuple[int, ...]


#Published small-primes factorization data
DOCUMENTED_FACTOR_TABLE = {
    5: DocumentedRow(4, 3, 2, (1, 1)),
    7: DocumentedRow(13, 4, 6, (2, 2, 2)),
    11: DocumentedRow(87, 12, 50, (10,) * 5),
    13: DocumentedRow(246, 23, 126, (21,) * 6),
}

DOCUMENTED_F_ANOM = {
    5: IntPolynomial([10, -8, -3, 1]),
    7: IntPolynomial([42, 47, -29, -5, 1]),
}


def check_documented_factorization(report):
    """
    Compares a factorization report with the published table row for its n

    :type    report: FactorizationReport
    :rtype:  dict
    :return: check name to pass or fail, empty when n has no published row
    """
    checks = dict()
    doc = DOCUMENTED_FACTOR_TABLE.get(report.n)
    if doc is None:
        return checks
    n = str(report.n)
    checks["documented_row_" + n] = \
        DocumentedRow(report.nu, report.f_anom.degree, report.f_cyc.degree, tuple(report.k_factor_degrees())) == doc
    if report.n in DOCUMENTED_F_ANOM:
        checks["documented_f_anom_" + n] = report.f_anom == DOCUMENTED_F_ANOM[report.n]
    if report.n == 13:
        _, r = report.f_anom.divrem(KNOWN_FACTOR_CANDIDATES[0])
        checks["documented_cubic_factor_" + n] = r.is_zero()
    return checks


def small_primes_table(n_list, primes=None, workers=None):
    """
    Factorization data for the cycle powers C_n for each odd prime n

    :type    n_list: list
    :param   n_list: odd primes
    :rtype:  list of TableRow
    """
    rows = []
    for n in n_list:
        report = factorization_for_spec(ctt.cycle_spec(n), workers)
        rows.append(table_row(report, primes))
    return rows
