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

"""Dihedral symmetry of the transfer operator: orbits, orbit-compressed matrices,
   cyclic Fourier blocks over Q(w), sector traces and multiplicity accounting."""

from __future__ import absolute_import

import logging
import warnings
from fractions import Fraction
from typing import NamedTuple, Tuple, Dict

import numpy as np
from sympy import isprime

from . import circulant_transfer_toolbox as ctt
from .circulant_transfer_toolbox import StructuralError, UnsupportedSpecError, rotate_mask, reflect_mask
from .cyclotomic import CyclotomicElement, charpoly_cyclotomic, omega
from .exact_arith import IntPolynomial, PolyMatrix

_logger = logging.getLogger(__name__)


class DihedralElement(object):
    """
    Element of Dih(n) acting on Z_n by j -> -j + rotation when reflected,
    j -> j + rotation otherwise

    :attribute n: modulus
    :attribute rotation: residue mod n
    :attribute reflected: bool
    """

    def __init__(self, n, rotation=0, reflected=False):
        self.n = int(n)
        self.rotation = int(rotation) % self.n
        self.reflected = bool(reflected)

    def apply(self, j):
        return ((-j if self.reflected else j) + self.rotation) % self.n

    def apply_mask(self, mask):
        if self.reflected:
            mask = reflect_mask(mask, self.n)
        return rotate_mask(mask, self.rotation, self.n)

    def __mul__(self, other):
        """Composition, (self * other)(j) = self(other(j))"""
        assert self.n == other.n
        s = -1 if self.reflected else 1
        return DihedralElement(self.n, s * other.rotation + self.rotation, self.reflected != other.reflected)

    def inverse(self):
        if self.reflected:
            return self
        return DihedralElement(self.n, -self.rotation, False)

    def __eq__(self, other):
        if not isinstance(other, DihedralElement):
            return NotImplemented
        return (self.n, self.rotation, self.reflected) == (other.n, other.rotation, other.reflected)

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        return hash((self.n, self.rotation, self.reflected))

    def __repr__(self):
        return "DihedralElement(" + str(self.n) + ", " + str(self.rotation) + ", " + str(self.reflected) + ")"


def dihedral_group(n):
    """The 2n elements of Dih(n), rotations first"""
    return [DihedralElement(n, r, False) for r in range(n)] + [DihedralElement(n, r, True) for r in range(n)]


class Orbit(NamedTuple):
    representative: int
    members: Tuple[int, ...]
    size: int
    rotation_orbit_size: int
    reflection_closed: bool
    weight: int


class RotationOrbit(NamedTuple):
    representative: int
    members: Tuple[int, ...]
    weight: int
    dihedral_index: int


class OrbitDecomposition(object):
    """
    Partition of the states into Dih(n) orbits and into rotation orbits

    :attribute n: modulus
    :attribute states: the StateSet
    :attribute orbits: list of Orbit, ordered by (weight, representative)
    :attribute orbit_of: per-state dihedral orbit index
    :attribute rotation_orbits: list of RotationOrbit, ordered by (weight, representative);
                                members are listed as rotations 0, 1, ..., n - 1 of the representative
                                up to the orbit length
    :attribute rotation_orbit_of: per-state rotation orbit index
    """

    def __init__(self, n, states, orbits, orbit_of, rotation_orbits, rotation_orbit_of):
        self.n = n
        self.states = states
        self.orbits = orbits
        self.orbit_of = orbit_of
        self.rotation_orbits = rotation_orbits
        self.rotation_orbit_of = rotation_orbit_of

    @property
    def sizes(self):
        return [o.size for o in self.orbits]

    @property
    def weights(self):
        return [o.weight for o in self.orbits]

    @property
    def representatives(self):
        return [o.representative for o in self.orbits]

    def rotation_orbits_free(self):
        return all(len(o.members) == self.n for o in self.rotation_orbits if o.representative != 0)

    def chiral_orbits(self):
        """Indices of dihedral orbits that split into two rotation orbits"""
        return [i for i, o in enumerate(self.orbits) if not o.reflection_closed]


def burnside_count(states, n):
    """(1/2n) * sum over Dih(n) of the number of fixed states"""
    total = 0
    for g in dihedral_group(n):
        total += sum(1 for s in states if g.apply_mask(s) == s)
    assert total % (2 * n) == 0
    return total // (2 * n)


def orbit_decompose(states, n):
    """
    Orbits of the states under Dih(n), with representatives the smallest bitmask
    of each orbit. The rotation-orbit structure is recorded separately.

    :type    states: StateSet
    :param   states: states of a circulant graph on Z_n
    :type    n: int
    :param   n: modulus
    :rtype:  OrbitDecomposition
    """
    if states.n != n:
        raise ValueError("states were enumerated for n = " + str(states.n))
    rotations = [DihedralElement(n, r) for r in range(n)]
    group = dihedral_group(n)

    rot_orbits = []
    rot_of = [None] * len(states)
    for s in states:
        i = states.index(s)
        if rot_of[i] is not None:
            continue
        members = []
        for g in rotations:
            m = g.apply_mask(s)
            if m in members:
                break
            members.append(m)
        for m in members:
            rot_of[states.index(m)] = len(rot_orbits)
        rot_orbits.append([s, tuple(members), ctt.popcount(s)])

    orbits = []
    orbit_of = [None] * len(states)
    for s in states:
        i = states.index(s)
        if orbit_of[i] is not None:
            continue
        members = sorted(set(g.apply_mask(s) for g in group), key=lambda m: (ctt.popcount(m), m))
        assert members[0] == s
        for m in members:
            orbit_of[states.index(m)] = len(orbits)
        rot_size = len(rot_orbits[rot_of[i]][1])
        orbits.append(Orbit(s, tuple(members), len(members), rot_size, rot_size == len(members), ctt.popcount(s)))

    rotation_orbits = [RotationOrbit(r[0], r[1], r[2], orbit_of[states.index(r[0])]) for r in rot_orbits]
    dec = OrbitDecomposition(n, states, orbits, orbit_of, rotation_orbits, rot_of)

    b = burnside_count(states, n)
    if b != len(orbits):
        raise StructuralError("Burnside count disagrees with the orbit enumeration",
                              {"burnside": b, "orbits": len(orbits)})
    _logger.debug("n=%d: %d dihedral orbits, %d rotation orbits", n, len(orbits), len(rotation_orbits))
    return dec


class OrbitMatrix(object):
    """
    Orbit-compressed transfer matrix, entry [i, j] the number of states of orbit j
    compatible with the representative of orbit i

    :attribute matrix: int64 numpy array over orbit indices
    :attribute sizes: orbit sizes
    :attribute weights: orbit weights
    :attribute polymatrix: PolyMatrix with column j scaled by x^weights[j], when weighted
    """

    def __init__(self, matrix, sizes, weights, weighted=False):
        self.matrix = np.asarray(matrix, dtype=np.int64)
        self.sizes = list(sizes)
        self.weights = list(weights)
        self.polymatrix = PolyMatrix.column_weighted(self.matrix, self.weights) if weighted else None

    def row_sums(self):
        return [int(v) for v in self.matrix.sum(axis=1)]


def _compatible_count(rep, members, kernel):
    b = kernel.blocked(rep)
    return sum(1 for m in members if m & b == 0)


def orbit_transfer(dec, kernel, weighted=False):
    """
    The orbit-compressed transfer matrix T_orb

    :type    dec: OrbitDecomposition
    :type    kernel: ClosedKernel
    :type    weighted: bool
    :param   weighted: also build the fugacity-weighted variant
    :rtype:  OrbitMatrix
    """
    if kernel.n != dec.n:
        raise ValueError("kernel and orbit decomposition belong to different moduli")
    k = len(dec.orbits)
    m = np.zeros((k, k), dtype=np.int64)
    for i, oi in enumerate(dec.orbits):
        for j, oj in enumerate(dec.orbits):
            m[i, j] = _compatible_count(oi.representative, oj.members, kernel)
    return OrbitMatrix(m, dec.sizes, dec.weights, weighted)


def sign_sector_matrix(dec, kernel):
    """
    Action of T on the sign-character sector. For each chiral dihedral orbit P,
    P+ is the rotation orbit holding the representative and P- its mirror image;
    entry [P, Q] counts states of Q+ minus states of Q- compatible with the
    representative of P.

    :rtype:  numpy.array
    """
    chiral = dec.chiral_orbits()
    halves = []
    for idx in chiral:
        o = dec.orbits[idx]
        plus = dec.rotation_orbit_of[dec.states.index(o.representative)]
        minus = [r for r in range(len(dec.rotation_orbits))
                 if dec.rotation_orbits[r].dihedral_index == idx and r != plus]
        assert len(minus) == 1
        halves.append((o.representative, dec.rotation_orbits[plus].members, dec.rotation_orbits[minus[0]].members))
    m = np.zeros((len(chiral), len(chiral)), dtype=np.int64)
    for i, (rep, _, _) in enumerate(halves):
        for j, (_, qp, qm) in enumerate(halves):
            m[i, j] = _compatible_count(rep, qp, kernel) - _compatible_count(rep, qm, kernel)
    return m


def _require_free_prime(dec):
    n = dec.n
    if n % 2 == 0 or not isprime(n):
        raise UnsupportedSpecError("exact Fourier blocks need an odd prime n, got " + str(n))
    if not dec.rotation_orbits_free():
        raise UnsupportedSpecError("a nonempty rotation orbit has a nontrivial rotation stabilizer")


def _rotation_counts(dec, kernel):
    # counts[i, j, l] = 1 iff representative i is compatible with rotation l of representative j
    orbs = [o for o in dec.rotation_orbits if o.representative != 0]
    n = dec.n
    counts = np.zeros((len(orbs), len(orbs), n), dtype=np.int64)
    for i, oi in enumerate(orbs):
        b = kernel.blocked(oi.representative)
        for j, oj in enumerate(orbs):
            for l in range(n):
                if rotate_mask(oj.representative, l, n) & b == 0:
                    counts[i, j, l] = 1
    return orbs, counts


class FourierBlock(object):
    """
    Block of the transfer operator on the k-th cyclic Fourier mode of rotation-orbit space

    :attribute n: modulus, an odd prime
    :attribute k: mode 0..n-1
    :attribute matrix: object array of CyclotomicElement
    :attribute labels: rotation orbit indices of the rows; the empty state only at k = 0
    :attribute weights: state weight per row
    :attribute polymatrix: weighted variant with column j scaled by x^weights[j], when weighted
    """

    def __init__(self, n, k, matrix, labels, weights, weighted=False):
        self.n = n
        self.k = k
        self.matrix = matrix
        self.labels = list(labels)
        self.weights = list(weights)
        self.polymatrix = PolyMatrix.column_weighted(matrix, weights) if weighted else None

    @property
    def dimension(self):
        return self.matrix.shape[0]

    def charpoly(self, method="auto", workers=None):
        return charpoly_cyclotomic(self.matrix, method=method, n=self.n, workers=workers)

    def trace(self):
        return sum(np.diagonal(self.matrix).tolist(), CyclotomicElement.scalar(self.n, 0))

    def is_rational(self):
        return all(v.is_rational() for v in self.matrix.flat)

    def integer_matrix(self):
        return np.array([[int(v.to_rational()) for v in row] for row in self.matrix], dtype=object)

    def galois(self, j):
        """The block of mode j*k, obtained by applying w -> w^j entrywise"""
        m = np.empty(self.matrix.shape, dtype=object)
        for idx, v in np.ndenumerate(self.matrix):
            m[idx] = v.galois(j)
        return FourierBlock(self.n, (self.k * j) % self.n, m, self.labels, self.weights, self.polymatrix is not None)


def fourier_block(dec, kernel, k, weighted=False):
    """
    B_k[i, j] = sum_l a_l w^(l*k), where a_l = 1 iff the representative of rotation
    orbit i is compatible with the l-fold rotation of the representative of j.

    At k = 0 the empty state joins as an extra row and column, with B_0[empty, j]
    equal to the orbit length and B_0[i, empty] = 1.

    :type    dec: OrbitDecomposition
    :type    kernel: ClosedKernel
    :type    k: int
    :param   k: Fourier mode
    :type    weighted: bool
    :param   weighted: also build the fugacity-weighted variant
    :rtype:  FourierBlock
    """
    _require_free_prime(dec)
    n = dec.n
    k %= n
    orbs, counts = _rotation_counts(dec, kernel)
    labels = [dec.rotation_orbits.index(o) for o in orbs]
    weights = [o.weight for o in orbs]
    dim = len(orbs)
    offset = 1 if k == 0 else 0
    m = np.empty((dim + offset, dim + offset), dtype=object)
    for i in range(dim):
        for j in range(dim):
            full = [0] * n
            for l in range(n):
                if counts[i, j, l]:
                    full[(l * k) % n] += 1
            m[i + offset, j + offset] = CyclotomicElement.from_full(n, full)
    if offset:
        m[0, 0] = CyclotomicElement.scalar(n, 1)
        for j in range(dim):
            m[0, j + 1] = CyclotomicElement.scalar(n, n)
            m[j + 1, 0] = CyclotomicElement.scalar(n, 1)
        labels = [dec.rotation_orbit_of[dec.states.index(0)]] + labels
        weights = [0] + weights
    return FourierBlock(n, k, m, labels, weights, weighted)


def rotation_orbit_matrix(dec, kernel):
    """B_0 as an integer matrix over the rotation orbits, empty state first"""
    return fourier_block(dec, kernel, 0).integer_matrix()


class SectorTraces(object):
    """
    Split of the torus polynomial into the trivial-mode and cyclotomic contributions

    :attribute I_anom: IntPolynomial from the k = 0 block
    :attribute I_cyc: IntPolynomial from the modes k != 0, coefficients may be negative
    :attribute d: layer count
    :attribute boundary: always ``torus``
    """

    def __init__(self, I_anom, I_cyc, d, boundary="torus"):
        self.I_anom = I_anom
        self.I_cyc = I_cyc
        self.d = d
        self.boundary = boundary

    def total(self):
        return self.I_anom + self.I_cyc


def _rational_integral(c, what):
    if isinstance(c, CyclotomicElement):
        if not c.is_rational():
            raise StructuralError(what + " is not rational", {"value": str(c)})
        c = c.to_rational()
    c = Fraction(c)
    if c.denominator != 1:
        raise StructuralError(what + " is not integral", {"value": str(c)})
    return c.numerator


def sector_traces(dec, kernel, d, torus=None, per_mode=False):
    """
    I_anom = tr(B_0(x)^d) and I_cyc = sum over k != 0 of tr(B_k(x)^d).

    The mode k blocks are the images of B_1 under w -> w^k, so by default the
    d-th power is taken once and its trace pushed through the Galois group;
    ``per_mode`` powers every block separately.

    :type    d: int
    :param   d: layer count, at least 2
    :type    torus: IntPolynomial
    :param   torus: the full torus polynomial to check the split against. Optional
    :rtype:  SectorTraces
    """
    d = int(d)
    if d < 2:
        raise ValueError("sector traces need d >= 2, got " + str(d))
    n = dec.n
    b0 = fourier_block(dec, kernel, 0, weighted=True)
    anom = (b0.polymatrix.map_coefficients(lambda v: _rational_integral(v, "B_0 entry")) ** d).trace()

    if per_mode:
        acc = None
        for k in range(1, n):
            tc = (fourier_block(dec, kernel, k, weighted=True).polymatrix ** d).trace_coefficients()
            acc = tc if acc is None else [a + b for a, b in _zip_pad(acc, tc)]
    else:
        tc = (fourier_block(dec, kernel, 1, weighted=True).polymatrix ** d).trace_coefficients()
        acc = []
        for c in tc:
            if isinstance(c, CyclotomicElement):
                s = c.galois(1)
                for k in range(2, n):
                    s = s + c.galois(k)
                acc.append(s)
            else:
                acc.append((n - 1) * c)
    cyc = IntPolynomial([_rational_integral(c, "cyclotomic trace coefficient") for c in acc])
    st = SectorTraces(anom, cyc, d)
    if torus is not None and st.total() != torus:
        raise StructuralError("sector traces do not add up to the torus polynomial",
                              {"I_anom": anom.to_strings(), "I_cyc": cyc.to_strings(),
                               "torus": torus.to_strings()})
    return st


def _zip_pad(a, b):
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0, b[i] if i < len(b) else 0) for i in range(n)]


class MultiplicityReport(NamedTuple):
    m_chi0: int
    m_chi1: int
    m_rho: Dict[int, int]
    state_count: int
    chiral_rotation_orbits: int


def _stabilizer(rep, n):
    return [g for g in dihedral_group(n) if g.apply_mask(rep) == rep]


def multiplicity_accounting(dec):
    """
    Multiplicities of the irreducible representations of Dih(n) in the permutation
    representation on the states: the trivial chi0, the sign chi1 and the
    two-dimensional rho_k for k = 1..(n-1)/2.

    Each orbit contributes <Res rho, 1_H> for its stabilizer H.

    :type    dec: OrbitDecomposition
    :rtype:  MultiplicityReport
    """
    n = dec.n
    if n % 2 == 0 or not isprime(n):
        raise UnsupportedSpecError("multiplicity accounting needs an odd prime n, got " + str(n))
    half = (n - 1) // 2
    m0 = 0
    m1 = 0
    mr = dict((k, 0) for k in range(1, half + 1))
    for o in dec.orbits:
        h = _stabilizer(o.representative, n)
        order = len(h)
        assert order * o.size == 2 * n
        m0 += 1
        m1 += Fraction(sum(-1 if g.reflected else 1 for g in h), order)
        for k in range(1, half + 1):
            s = CyclotomicElement.scalar(n, 0)
            for g in h:
                if not g.reflected:
                    s = s + omega(n, k * g.rotation) + omega(n, -k * g.rotation)
            mr[k] += s.to_rational() / Fraction(order)
    m1 = int(m1)
    mr = dict((k, int(v)) for k, v in mr.items())
    total = m0 + m1 + 2 * sum(mr.values())
    if total != len(dec.states):
        raise StructuralError("representation multiplicities do not account for every state",
                              {"states": len(dec.states), "accounted": total})
    chiral = sum(1 for o in dec.rotation_orbits if o.representative != 0 and
                 not dec.orbits[o.dihedral_index].reflection_closed)
    if m1 != 0:
        warnings.warn("sign character occurs with multiplicity " + str(m1) + " for n = " + str(n))
    return MultiplicityReport(m0, m1, mr, len(dec.states), chiral)


def check_equivariance(t, group=None):
    """
    True iff T[gI, gJ] = T[I, J] for every group element g and every state pair

    :type    t: transfer.TransferMatrix
    :type    group: list of DihedralElement
    :param   group: defaults to all of Dih(n). Optional
    """
    states = t.states
    if group is None:
        group = dihedral_group(states.n)
    for g in group:
        perm = np.array([states.index(g.apply_mask(s)) for s in states], dtype=np.int64)
        if not np.array_equal(t.matrix[np.ix_(perm, perm)], t.matrix):
            return False
    return True
