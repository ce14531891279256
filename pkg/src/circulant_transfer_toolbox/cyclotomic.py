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

"""Arithmetic in the cyclotomic field Q(w), w = exp(2*pi*i/n), for an odd prime n."""

from __future__ import absolute_import

import math
import logging
from fractions import Fraction
from functools import lru_cache, reduce

import numpy as np
from sympy import isprime, ilcm, primitive_root

from .exact_arith import IntPolynomial, faddeev_leverrier, charpoly_mod_p, crt_symmetric, \
    select_crt_primes, modular_prime_bits, _normalize_scalar, _log2_binomial, _map_primes

_logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def _check_prime(n):
    if n < 3 or not isprime(n):
        raise ValueError("cyclotomic arithmetic requires an odd prime, got " + str(n))
    return n


class CyclotomicElement(object):
    """
    Element of Q(w) written in the power basis 1, w, ..., w^(n-2) of Q[x]/(Phi_n),
    where Phi_n = 1 + x + ... + x^(n-1).

    :attribute n: the odd prime order of w
    :attribute coords: tuple of n - 1 exact rational coordinates
    """

    def __init__(self, n, coords):
        self.n = _check_prime(int(n))
        c = tuple(_normalize_scalar(v) for v in coords)
        if len(c) != self.n - 1:
            raise ValueError("expected " + str(self.n - 1) + " coordinates")
        self.coords = c

    @classmethod
    def from_full(cls, n, full):
        """Reduces a length-n coefficient vector on 1, w, ..., w^(n-1) using w^(n-1) = -(1 + ... + w^(n-2))"""
        top = full[n - 1]
        return cls(n, [full[i] - top for i in range(n - 1)])

    @classmethod
    def from_exponents(cls, n, terms):
        """
        Builds sum c * w^e from a mapping of exponents to coefficients

        :type    terms: dict
        :param   terms: exponent (any integer, taken mod n) to rational coefficient
        """
        full = [0] * n
        for e, c in terms.items():
            full[e % n] += c
        return cls.from_full(n, full)

    @classmethod
    def scalar(cls, n, a):
        return cls(n, [a] + [0] * (n - 2))

    def full(self):
        return list(self.coords) + [0]

    def _coerce(self, other):
        if isinstance(other, CyclotomicElement):
            if other.n != self.n:
                raise ValueError("mismatched cyclotomic orders " + str(self.n) + " and " + str(other.n))
            return other
        if isinstance(other, (int, np.integer, Fraction)):
            return CyclotomicElement.scalar(self.n, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CyclotomicElement(self.n, [a + b for a, b in zip(self.coords, o.coords)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicElement(self.n, [-a for a in self.coords])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CyclotomicElement(self.n, [a - b for a, b in zip(self.coords, o.coords)])

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, np.integer, Fraction)):
            s = _normalize_scalar(other)
            return CyclotomicElement(self.n, [a * s for a in self.coords])
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = self.n
        r = [0] * n
        for i, a in enumerate(self.coords):
            if a == 0:
                continue
            for j, b in enumerate(o.coords):
                if b != 0:
                    r[(i + j) % n] += a * b
        return CyclotomicElement.from_full(n, r)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, np.integer, Fraction)):
            s = Fraction(other)
            if s == 0:
                raise ZeroDivisionError("division by zero")
            return CyclotomicElement(self.n, [Fraction(a) / s for a in self.coords])
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        r = CyclotomicElement.scalar(self.n, 1)
        b = self
        while k > 0:
            if k & 1:
                r = r * b
            b = b * b
            k >>= 1
        return r

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coords == o.coords

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        return hash((self.n, self.coords))

    def galois(self, j):
        """
        Applies the automorphism w -> w^j

        :type    j: int
        :param   j: exponent coprime to n
        :rtype:  CyclotomicElement
        """
        n = self.n
        if j % n == 0:
            raise ValueError("exponent must be coprime to " + str(n))
        r = [0] * n
        for i, a in enumerate(self.coords):
            r[(i * j) % n] += a
        return CyclotomicElement.from_full(n, r)

    def conjugate(self):
        return self.galois(self.n - 1)

    def is_real(self):
        return self == self.conjugate()

    def is_rational(self):
        return all(a == 0 for a in self.coords[1:])

    def is_zero(self):
        return all(a == 0 for a in self.coords)

    def to_rational(self):
        if not self.is_rational():
            raise ValueError("cyclotomic element is not rational")
        return self.coords[0]

    def trace(self):
        """Trace from Q(w) down to Q: Tr(1) = n - 1 and Tr(w^i) = -1"""
        return _normalize_scalar(Fraction((self.n - 1) * self.coords[0] - sum(self.coords[1:], 0)))

    def norm(self):
        r = self
        for j in range(2, self.n):
            r = r * self.galois(j)
        return r.to_rational()

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        r = CyclotomicElement.scalar(self.n, 1)
        for j in range(2, self.n):
            r = r * self.galois(j)
        return r / self.norm()

    def to_complex(self):
        w = np.exp(2j * np.pi * np.arange(self.n - 1) / self.n)
        return complex(np.dot(np.array([float(a) for a in self.coords]), w))

    def __str__(self):
        terms = []
        for i, a in enumerate(self.coords):
            if a == 0:
                continue
            terms.append(str(a) if i == 0 else str(a) + "*w^" + str(i))
        return " + ".join(terms) if terms else "0"

    def __repr__(self):
        return "CyclotomicElement(" + str(self.n) + ", " + repr(list(self.coords)) + ")"


def omega(n, power=1):
    """The root of unity w^power in Q(w)"""
    return CyclotomicElement.from_exponents(n, {power: 1})


def mu(n, k):
    """mu_k = 1 + w^k + w^-k = 1 + 2*cos(2*pi*k/n), an element of the real subfield"""
    return CyclotomicElement.from_exponents(n, {0: 1, k: 1, -k: 1})


def real_trace(a):
    """
    Trace from the maximal real subfield Q(cos(2*pi/n)) down to Q

    :type    a: CyclotomicElement
    :param   a: element fixed by conjugation
    :rtype:  int or fractions.Fraction
    """
    if not a.is_real():
        raise ValueError("element is not in the real subfield")
    return _normalize_scalar(Fraction(a.trace(), 2))


def cyclotomic_arith(a, b, op):
    """
    Field operations on cyclotomic elements

    :type    op: str
    :param   op: one of ``add``, ``sub``, ``mul`` or ``div``
    :rtype:  CyclotomicElement
    """
    if isinstance(a, CyclotomicElement) and isinstance(b, CyclotomicElement) and a.n != b.n:
        raise ValueError("mismatched cyclotomic orders " + str(a.n) + " and " + str(b.n))
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError("unknown cyclotomic operation " + str(op))


class CyclotomicPolynomial(object):
    """
    Polynomial in lambda with coefficients in Q(w), ascending degree order

    :attribute n: odd prime order of w
    :attribute coefficients: tuple of CyclotomicElement
    """

    def __init__(self, n, coefficients):
        self.n = _check_prime(int(n))
        c = []
        for a in coefficients:
            if not isinstance(a, CyclotomicElement):
                a = CyclotomicElement.scalar(self.n, a)
            elif a.n != self.n:
                raise ValueError("mismatched cyclotomic orders")
            c.append(a)
        while len(c) > 0 and c[-1].is_zero():
            c.pop()
        self.coefficients = tuple(c)

    @classmethod
    def from_int_polynomial(cls, n, f):
        return cls(n, list(f.coefficients))

    @property
    def degree(self):
        return len(self.coefficients) - 1

    def valuation(self):
        for i, a in enumerate(self.coefficients):
            if not a.is_zero():
                return i
        return -1

    def nonzero_part(self):
        """Returns (k, g) with self = lambda^k * g and g(0) != 0"""
        k = max(self.valuation(), 0)
        return k, CyclotomicPolynomial(self.n, self.coefficients[k:])

    def galois(self, j):
        return CyclotomicPolynomial(self.n, [a.galois(j) for a in self.coefficients])

    def conjugate(self):
        return self.galois(self.n - 1)

    def is_real(self):
        return all(a.is_real() for a in self.coefficients)

    def is_rational(self):
        return all(a.is_rational() for a in self.coefficients)

    def to_int_polynomial(self):
        return IntPolynomial([a.to_rational() for a in self.coefficients])

    def __mul__(self, other):
        a, b = self.coefficients, other.coefficients
        if len(a) == 0 or len(b) == 0:
            return CyclotomicPolynomial(self.n, [])
        r = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            for j, bj in enumerate(b):
                r[i + j] = ai * bj + r[i + j]
        return CyclotomicPolynomial(self.n, r)

    def __eq__(self, other):
        if not isinstance(other, CyclotomicPolynomial):
            return NotImplemented
        return self.n == other.n and self.coefficients == other.coefficients

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        return hash((self.n, self.coefficients))

    def complex_coefficients(self):
        return [a.to_complex() for a in self.coefficients]

    def __repr__(self):
        return "CyclotomicPolynomial(" + str(self.n) + ", " + repr(list(self.coefficients)) + ")"


def _cyclotomic_matrix(m):
    a = np.array(m, dtype=object)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("characteristic polynomial requires a square matrix")
    n = None
    for v in a.flat:
        if isinstance(v, CyclotomicElement):
            if n is not None and v.n != n:
                raise ValueError("matrix entries belong to different cyclotomic fields")
            n = v.n
    return a, n


def charpoly_cyclotomic(m, method="auto", leverrier_max_dimension=12, n=None, workers=None):
    """
    Exact characteristic polynomial of a matrix over Q(w).

    Small matrices use Faddeev-LeVerrier directly in the field. Larger ones are
    reduced modulo primes p = 1 (mod n), where w maps to each of the n - 1
    primitive n-th roots of unity in GF(p); the power-basis coordinates of the
    coefficients are recovered by an inverse discrete Fourier transform and
    Chinese remaindering.

    :type    m: numpy.array
    :param   m: square object array of CyclotomicElement (rational scalars allowed)
    :type    method: str
    :param   method: ``auto``, ``leverrier`` or ``modular``
    :type    leverrier_max_dimension: int
    :param   leverrier_max_dimension: largest dimension routed to Faddeev-LeVerrier by ``auto``
    :type    n: int
    :param   n: order of w, only needed when no entry is a CyclotomicElement. Optional
    :rtype:  CyclotomicPolynomial
    """
    a, found = _cyclotomic_matrix(m)
    if n is None:
        n = found
    elif found is not None and found != n:
        raise ValueError("matrix entries belong to a different cyclotomic field")
    if n is None:
        raise ValueError("cyclotomic order could not be determined")
    dim = a.shape[0]
    if method == "auto":
        method = "leverrier" if dim <= leverrier_max_dimension else "modular"
    if method == "leverrier":
        b = np.empty(a.shape, dtype=object)
        for idx, v in np.ndenumerate(a):
            b[idx] = v if isinstance(v, CyclotomicElement) else CyclotomicElement.scalar(n, v)
        return CyclotomicPolynomial(n, faddeev_leverrier(b))
    if method == "modular":
        return _charpoly_cyclotomic_modular(a, n, workers)
    raise ValueError("unknown characteristic polynomial method " + str(method))


def _coordinate_tensor(a, n):
    dim = a.shape[0]
    coords = np.zeros((n - 1, dim, dim), dtype=object)
    dens = [1]
    for (i, j), v in np.ndenumerate(a):
        cs = v.coords if isinstance(v, CyclotomicElement) else (_normalize_scalar(v),) + (0,) * (n - 2)
        for t, c in enumerate(cs):
            coords[t, i, j] = c
            dens.append(Fraction(c).denominator)
    den = reduce(ilcm, dens, 1)
    scaled = np.empty(coords.shape, dtype=object)
    for idx, c in np.ndenumerate(coords):
        scaled[idx] = int(Fraction(c) * den)
    return scaled, int(den)


def _embedding_bound_bits(scaled):
    # |sigma(a)| <= sum of |coordinates| for every embedding sigma
    dim = scaled.shape[1]
    absolute = np.vectorize(lambda v: abs(int(v)), otypes=[object])(scaled)
    rows = absolute.sum(axis=0).sum(axis=1) if dim > 0 else []
    r = max([int(v) for v in rows] + [1])
    lr = math.log2(r)
    best = 0.0
    for k in range(1, dim + 1):
        best = max(best, _log2_binomial(dim, k) + k * lr)
    return best + 1.0


def _charpoly_cyclotomic_modular(a, n, workers):
    dim = a.shape[0]
    if dim == 0:
        return CyclotomicPolynomial(n, [1])
    scaled, den = _coordinate_tensor(a, n)
    bound = _embedding_bound_bits(scaled)
    bits = modular_prime_bits(max(dim, n))
    primes, guard = select_crt_primes(bound, bits, congruent_to_one_mod=n)
    _logger.debug("cyclotomic charpoly dimension %d over Q(w_%d): %d primes", dim, n, len(primes))

    def coords_mod_p(p):
        r = pow(int(primitive_root(p)), (p - 1) // n, p)
        c = (scaled % p).astype(np.int64)
        values = []
        for j in range(1, n):
            pw = np.array([pow(r, i * j, p) for i in range(n - 1)], dtype=np.int64)
            mj = np.tensordot(pw, c, axes=1) % p
            values.append(charpoly_mod_p(mj, p))
        v = np.array(values, dtype=np.int64)
        # b_i = n^-1 * sum_j V_j * (r^(-ij) - r^j), using b_(n-1) = 0
        w = np.array([[(pow(r, (-i * j) % n, p) - pow(r, j, p)) % p for j in range(1, n)]
                      for i in range(n - 1)], dtype=np.int64)
        inv_n = pow(n, p - 2, p)
        b = (w @ v) % p
        return ((b * inv_n) % p).reshape(-1)

    rows = _map_primes(coords_mod_p, primes + [guard], workers)
    flat = crt_symmetric(primes, rows[:-1])
    for c, g in zip(flat, rows[-1]):
        if c % guard != int(g):
            raise ArithmeticError("cyclotomic characteristic polynomial failed the guard prime check")
    coords = np.array(flat, dtype=object).reshape((n - 1, dim + 1))
    coeffs = []
    for k in range(dim + 1):
        scale = Fraction(1, den ** (dim - k))
        coeffs.append(CyclotomicElement(n, [Fraction(int(coords[i, k])) * scale for i in range(n - 1)]))
    return CyclotomicPolynomial(n, coeffs)
