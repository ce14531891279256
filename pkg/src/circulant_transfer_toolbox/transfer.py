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

"""Transfer matrices over independent-set states, strip and torus independence
   polynomials, and floating point spectral reports."""

from __future__ import absolute_import

import math
import logging
import warnings
from typing import NamedTuple, List

import numpy as np

from . import circulant_transfer_toolbox as ctt
from .exact_arith import IntPolynomial, PolyMatrix, charpoly_exact

_logger = logging.getLogger(__name__)

#Relative tolerance used when comparing the spectral radius of T and of its orbit compression
RHO_REPORT_TOLERANCE = 1e-9

CAPACITY_CAVEAT = "rho(T)^(1/n) is reported as a statistic only; no identity with the Shannon capacity is asserted"


class ConvergenceError(ArithmeticError):
    """Raised when power iteration reaches its iteration cap"""
    pass


class TransferMatrix(object):
    """
    0/1 compatibility matrix over the independent-set states of a circulant graph

    :attribute states: the StateSet indexing rows and columns
    :attribute kernel: the ClosedKernel defining compatibility
    :attribute matrix: dimension x dimension int64 numpy array
    """

    def __init__(self, states, kernel, matrix):
        self.states = states
        self.kernel = kernel
        self.matrix = np.asarray(matrix, dtype=np.int64)
        assert self.matrix.shape == (len(states), len(states))

    @property
    def dimension(self):
        return self.matrix.shape[0]


def build_transfer(states, kernel):
    """
    T[I, J] = 1 iff the states I and J are compatible.

    :type    states: StateSet
    :param   states: the states of the base graph
    :type    kernel: ClosedKernel
    :param   kernel: closed connection set of the same graph
    :rtype:  TransferMatrix
    """
    if states.n != kernel.n or ctt.closed_kernel(states.spec) != kernel:
        raise ValueError("states and kernel belong to different circulant graphs")
    s = states.as_array()
    blocked = np.array([kernel.blocked(int(m)) for m in s], dtype=np.int64)
    t = ((blocked[:, None] & s[None, :]) == 0).astype(np.int64)
    assert np.array_equal(t, t.T), "transfer matrix must be symmetric"
    return TransferMatrix(states, kernel, t)


class WeightedTransfer(object):
    """
    The fugacity-weighted transfer matrix M(x) = T * D_x, with D_x = diag(x^|J|)

    :attribute transfer: the underlying TransferMatrix
    :attribute matrix: PolyMatrix M(x)
    :attribute weights: boundary weight exponents |J|, the vector w(J) = x^|J|
    """

    def __init__(self, transfer):
        self.transfer = transfer
        self.weights = list(transfer.states.weights)
        self.matrix = PolyMatrix.column_weighted(transfer.matrix, self.weights)

    @property
    def spec(self):
        return self.transfer.states.spec

    def boundary_vector(self):
        """w as an object array of shape (max weight + 1, dimension)"""
        return _monomial_vector(self.weights)

    def at_one(self):
        return np.array(self.matrix.evaluate(1), dtype=np.int64)


def build_weighted_transfer(t):
    return WeightedTransfer(t)


def _monomial_vector(weights, scale=None):
    v = np.zeros((max(weights) + 1, len(weights)), dtype=object)
    for j, w in enumerate(weights):
        v[w, j] = 1 if scale is None else int(scale[j])
    return v


def _poly_vector_sum(v):
    return IntPolynomial([sum(row.tolist(), 0) for row in v])


class IndependencePolynomial(object):
    """
    Independence polynomial of a strong cylinder or strong torus over a circulant

    :attribute polynomial: the IntPolynomial
    :attribute n: base cycle length
    :attribute connection: connection set of the base graph
    :attribute d: layer count
    :attribute boundary: ``strip`` or ``torus``
    """

    def __init__(self, polynomial, n, connection, d, boundary):
        self.polynomial = polynomial
        self.n = n
        self.connection = tuple(connection)
        self.d = d
        self.boundary = boundary
        assert polynomial[0] == 1, "constant coefficient of an independence polynomial is 1"
        assert all(a >= 0 for a in polynomial.coefficients), "independence polynomial coefficients are nonnegative"
        assert polynomial[1] == self.vertex_count, "linear coefficient must equal the vertex count"

    @property
    def vertex_count(self):
        return self.n * self.d

    @property
    def alpha(self):
        return self.polynomial.degree

    @property
    def leading_coefficient(self):
        return self.polynomial.leading_coefficient

    def value_at_one(self):
        return self.polynomial(1)

    def __eq__(self, other):
        if isinstance(other, IndependencePolynomial):
            return self.polynomial == other.polynomial
        if isinstance(other, IntPolynomial):
            return self.polynomial == other
        return NotImplemented

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __repr__(self):
        return "IndependencePolynomial(" + str(self.polynomial) + ", n=" + str(self.n) + ", d=" + \
            str(self.d) + ", " + self.boundary + ")"


def strip_polynomial(wt, d, orbit_matrix=None):
    """
    Independence polynomial of the strong cylinder G x P_d, w^T M(x)^(d-1) 1.

    When an orbit matrix is given, the computation runs on the orbit-compressed
    weighted matrix eta^T M_orb(x)^(d-1) 1 with eta_i = |O_i| x^(w_i), which is
    exact because both boundary vectors are invariant under the dihedral action.

    :type    wt: WeightedTransfer
    :param   wt: the weighted transfer matrix
    :type    d: int
    :param   d: layer count, at least 1
    :type    orbit_matrix: symmetry.OrbitMatrix
    :param   orbit_matrix: orbit compression of the same transfer matrix. Optional
    :rtype:  IndependencePolynomial
    """
    d = int(d)
    if d < 1:
        raise ValueError("strip needs d >= 1, got " + str(d))
    if orbit_matrix is not None:
        m = PolyMatrix.column_weighted(orbit_matrix.matrix, orbit_matrix.weights)
        eta = _monomial_vector(orbit_matrix.weights, orbit_matrix.sizes)
    else:
        m = wt.matrix
        eta = wt.boundary_vector()
    u = np.ones((1, m.dimension), dtype=object)
    for _ in range(d - 1):
        u = m.apply(u)
    p = IntPolynomial([0])
    for i in range(eta.shape[0]):
        for k in range(u.shape[0]):
            p = p + IntPolynomial.monomial(i + k, int(np.dot(eta[i], u[k])))
    spec = wt.spec
    return IndependencePolynomial(p, spec.n, spec.connection, d, "strip")


def torus_polynomial(wt, d):
    """
    Independence polynomial of the strong torus G x C_d, tr(M(x)^d).

    :type    wt: WeightedTransfer
    :param   wt: the weighted transfer matrix
    :type    d: int
    :param   d: layer count, at least 2; d = 2 counts G x K_2
    :rtype:  IndependencePolynomial
    """
    d = int(d)
    if d == 1:
        raise ValueError("the one-layer torus is degenerate, use strip_polynomial with d = 1")
    if d < 1:
        raise ValueError("torus needs d >= 2, got " + str(d))
    p = (wt.matrix ** d).trace()
    spec = wt.spec
    return IndependencePolynomial(p, spec.n, spec.connection, d, "torus")


def integer_power_trace(m, d):
    """tr(m^d) in exact integer arithmetic"""
    a = np.array(m, dtype=object)
    r = a
    for _ in range(d - 1):
        r = np.dot(r, a)
    return int(sum(np.diagonal(r).tolist(), 0))


def power_iteration(a, tol=1e-12, max_iter=100000):
    """
    Power iteration from the all-ones vector

    :type    a: numpy.array
    :param   a: square nonnegative matrix
    :type    tol: float
    :param   tol: relative tolerance on successive eigenvalue estimates
    :type    max_iter: int
    :param   max_iter: iteration cap
    :rtype:  tuple
    :return: (spectral radius, unit Perron vector, iterations used)
    """
    a = np.asarray(a, dtype=np.float64)
    n = a.shape[0]
    v = np.ones(n) / math.sqrt(n)
    lam_prev = 0.0
    for it in range(1, max_iter + 1):
        w = a @ v
        lam = np.linalg.norm(w)
        if lam == 0:
            raise ConvergenceError("matrix annihilates the start vector")
        w = w / lam
        if abs(lam - lam_prev) <= tol * lam and np.max(np.abs(w - v)) <= math.sqrt(tol):
            return lam, w, it
        v = w
        lam_prev = lam
    raise ConvergenceError("power iteration did not converge in " + str(max_iter) + " iterations")


class SpectralReport(NamedTuple):
    """
    Floating point spectral data. ``perron_vector_min`` is the smallest entry of the
    Perron vector scaled so that its largest entry is 1, that is min(v) / max(v).
    """
    rho_T: float
    rho_orbit: float
    perron_vector_min: float
    capacity_stat: float
    capacity_caveat: str
    growth_samples: List[float]
    ratio_samples: List[float]
    strip_values: List[int]
    orbit_eigenvalues: List[float]
    iterations: int


def strip_values_at_one(matrix, sizes, horizon):
    """
    I(strip d, 1) for d = 1..horizon from a (possibly orbit-compressed) transfer matrix

    :type    matrix: numpy.array
    :param   matrix: transfer matrix evaluated at x = 1
    :type    sizes: list of int
    :param   sizes: orbit sizes, all ones for the full matrix
    """
    a = np.array(matrix, dtype=object)
    s = np.array([int(v) for v in sizes], dtype=object)
    u = np.ones(a.shape[0], dtype=object)
    values = []
    for _ in range(horizon):
        values.append(int(np.dot(s, u)))
        u = np.dot(a, u)
    return values


def _nonzero_roots(m):
    _, f = charpoly_exact(m).nonzero_part()
    r = np.roots([float(a) for a in reversed(f.coefficients)])
    r = sorted(r, key=lambda z: -z.real)
    if all(abs(z.imag) < 1e-9 for z in r):
        return [float(z.real) for z in r]
    return [complex(z) for z in r]


def spectral_report(t, t_orb, wt=None, horizon=20, tol=1e-12, max_iter=100000):
    """
    Floating point spectral data of the transfer matrix and its orbit compression

    :type    t: TransferMatrix
    :param   t: the transfer matrix
    :type    t_orb: symmetry.OrbitMatrix
    :param   t_orb: orbit-compressed matrix of the same spec, or None
    :type    wt: WeightedTransfer
    :param   wt: weighted transfer matrix, used for growth samples when t_orb is None. Optional
    :type    horizon: int
    :param   horizon: largest strip height sampled
    :rtype:  SpectralReport
    """
    rho_t, v, it_t = power_iteration(t.matrix, tol, max_iter)
    perron_min = float(np.min(v) / np.max(v))
    if t_orb is not None:
        rho_o, _, it_o = power_iteration(t_orb.matrix, tol, max_iter)
        values = strip_values_at_one(t_orb.matrix, t_orb.sizes, horizon)
        eigs = _nonzero_roots(t_orb.matrix)
    else:
        rho_o, it_o = rho_t, 0
        m = wt.at_one() if wt is not None else t.matrix
        values = strip_values_at_one(m, [1] * m.shape[0], horizon)
        eigs = []
    _logger.info("power iteration: %d iterations on T, %d on the orbit matrix", it_t, it_o)
    if abs(rho_t - rho_o) > RHO_REPORT_TOLERANCE * max(1.0, rho_t):
        warnings.warn("spectral radius of T and of the orbit matrix differ: " + str(rho_t) + " vs " + str(rho_o))
    growth = [math.exp(math.log(x) / (d + 1)) for d, x in enumerate(values)]
    ratios = [values[i + 1] / values[i] for i in range(len(values) - 1)]
    n = t.states.n
    return SpectralReport(float(rho_t), float(rho_o), perron_min, float(rho_t ** (1.0 / n)), CAPACITY_CAVEAT,
                          growth, ratios, values, eigs, it_t)


class DocumentedValue(NamedTuple):
    value_at_one: int
    alpha: int
    leading_coefficient: int


#Independence data of C_7 x C_7 x C_7, cited but never recomputed
DOCUMENTED_C7_TORUS_D3 = DocumentedValue(2544256835855451311632423, 33, 16672544)

#Published C_7 summary rows, keyed by check name: (d, summary object, value)
DOCUMENTED_C7_SUMMARY = {
    "c7": (1, "C_7", DocumentedValue(29, 3, 7)),
    "strip_2": (2, "strip", DocumentedValue(127, 3, 56)),
    "torus_2": (2, "torus C_7^2", DocumentedValue(1796859, 10, 980)),
    "strip_3": (3, "strip", DocumentedValue(1387, 6, 49)),
}

DOCUMENTED_C7_TORUS_D2_POLYNOMIAL = IntPolynomial([1, 49, 980, 10388, 63553, 229908, 486668, 576856, 346381,
                                                   81095, 980])


def check_documented_c7(wt, orbit_matrix=None):
    """
    Compares the computed C_7 summary rows and the C_7 x C_7 polynomial with the
    published values. The three-fold torus is only checked for consistency:
    alpha(C_7) alpha(C_7^2) <= alpha(C_7^3) <= floor(7 alpha(C_7^2) / 2).

    :type    wt: WeightedTransfer
    :param   wt: weighted transfer matrix of C_7
    :type    orbit_matrix: symmetry.OrbitMatrix
    :param   orbit_matrix: orbit compression of the same transfer matrix. Optional
    :rtype:  dict
    :return: check name to pass or fail
    """
    if wt.spec != ctt.cycle_spec(7):
        raise ValueError("documented values exist only for C_7")
    rows = dict(((r.d, r.object), r) for r in summary_table(wt, orbit_matrix) if not r.documented)
    checks = dict()
    for name, (d, obj, doc) in DOCUMENTED_C7_SUMMARY.items():
        r = rows.get((d, obj))
        checks["documented_" + name] = r is not None and \
            DocumentedValue(r.value_at_one, r.alpha, r.leading_coefficient) == doc
    torus = torus_polynomial(wt, 7)
    checks["documented_torus_2_polynomial"] = torus.polynomial == DOCUMENTED_C7_TORUS_D2_POLYNOMIAL
    a1 = strip_polynomial(wt, 1, orbit_matrix).alpha
    doc3 = DOCUMENTED_C7_TORUS_D3
    checks["documented_torus_3_consistent"] = a1 * torus.alpha <= doc3.alpha <= (7 * torus.alpha) // 2 \
        and doc3.leading_coefficient < doc3.value_at_one
    return checks


class SummaryRow(NamedTuple):
    d: int
    object: str
    formula: str
    value_at_one: int
    alpha: int
    leading_coefficient: int
    size: str
    documented: bool


def summary_table(wt, orbit_matrix=None):
    """
    Rows (d, object, formula, I(1), alpha, leading coefficient, size) for the
    base graph, the two- and three-layer strips, the torus G x C_n and, for C_7,
    the documented three-fold torus.

    :type    wt: WeightedTransfer
    :type    orbit_matrix: symmetry.OrbitMatrix
    :rtype:  list of SummaryRow
    """
    spec = wt.spec
    n = spec.n
    dim = str(wt.transfer.dimension)
    osize = str(len(orbit_matrix.sizes)) if orbit_matrix is not None else dim
    rows = []
    p1 = strip_polynomial(wt, 1, orbit_matrix)
    rows.append(SummaryRow(1, "C_" + str(n), "orbit sum", p1.value_at_one(), p1.alpha, p1.leading_coefficient,
                           osize, False))
    p2 = strip_polynomial(wt, 2, orbit_matrix)
    rows.append(SummaryRow(2, "strip", "eta^T M_orb 1", p2.value_at_one(), p2.alpha, p2.leading_coefficient,
                           osize + " x " + osize, False))
    pt = torus_polynomial(wt, n)
    rows.append(SummaryRow(2, "torus C_" + str(n) + "^2", "tr(M^" + str(n) + ")", pt.value_at_one(), pt.alpha,
                           pt.leading_coefficient, dim + " x " + dim, False))
    p3 = strip_polynomial(wt, 3, orbit_matrix)
    rows.append(SummaryRow(3, "strip", "eta^T M_orb^2 1", p3.value_at_one(), p3.alpha, p3.leading_coefficient,
                           osize + " x " + osize, False))
    if spec == ctt.cycle_spec(7):
        doc = DOCUMENTED_C7_TORUS_D3
        rows.append(SummaryRow(3, "torus C_7^3", "documented", doc.value_at_one, doc.alpha, doc.leading_coefficient,
                               "large", True))
    return rows
