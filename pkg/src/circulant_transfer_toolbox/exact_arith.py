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

"""Exact integer and rational arithmetic: dense polynomials, polynomial matrices,
   characteristic polynomials over the integers and factoring over prime fields."""

from __future__ import absolute_import

import math
import logging
from fractions import Fraction
from itertools import count
from concurrent.futures import ThreadPoolExecutor

import numpy as np
from sympy import isprime, prevprime, integer_nthroot
from sympy.ntheory.modular import crt1, crt2
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_sqf_list, gf_ddf_zassenhaus, gf_pow_mod, gf_gcd, gf_quo, \
    gf_sub_ground, gf_add, gf_degree, gf_monic, gf_mul, gf_strip

_logger = logging.getLogger(__name__)


def _normalize_scalar(a):
    if isinstance(a, (bool, np.bool_)):
        return int(a)
    if isinstance(a, (int, np.integer)):
        return int(a)
    if isinstance(a, Fraction):
        if a.denominator == 1:
            return a.numerator
        return a
    raise TypeError("exact scalar expected, got " + type(a).__name__)


def exact_divide(value, k):
    """
    Divides a ring element by a nonzero integer without leaving the exact domain

    :type    value: int, fractions.Fraction or CyclotomicElement
    :param   value: the dividend
    :type    k: int
    :param   k: the divisor
    :return: the quotient, an int whenever it is integral
    """
    if isinstance(value, (int, np.integer)):
        return _normalize_scalar(Fraction(int(value), k))
    if isinstance(value, Fraction):
        return _normalize_scalar(value / k)
    return value / k


class IntPolynomial(object):
    """
    Dense univariate polynomial with exact coefficients, stored in ascending degree order.

    Coefficients are Python integers, or Fractions in the rational variant. The zero
    polynomial has an empty coefficient tuple and degree -1.

    :attribute coefficients: tuple of coefficients, index i is the coefficient of x^i
    """

    def __init__(self, coefficients=()):
        c = [_normalize_scalar(a) for a in coefficients]
        while len(c) > 0 and c[-1] == 0:
            c.pop()
        self.coefficients = tuple(c)

    @classmethod
    def monomial(cls, k, c=1):
        return cls([0] * k + [c])

    @classmethod
    def constant(cls, c):
        return cls([c])

    @classmethod
    def from_roots(cls, roots):
        p = cls([1])
        for r in roots:
            p = p * cls([-r, 1])
        return p

    @property
    def degree(self):
        return len(self.coefficients) - 1

    @property
    def leading_coefficient(self):
        if len(self.coefficients) == 0:
            return 0
        return self.coefficients[-1]

    def is_zero(self):
        return len(self.coefficients) == 0

    def is_monic(self):
        return self.leading_coefficient == 1

    def is_integral(self):
        return all(isinstance(a, int) for a in self.coefficients)

    def __getitem__(self, k):
        if k < 0 or k >= len(self.coefficients):
            return 0
        return self.coefficients[k]

    def __call__(self, x):
        r = 0
        for a in reversed(self.coefficients):
            r = r * x + a
        return r

    def _coerce(self, other):
        if isinstance(other, IntPolynomial):
            return other
        return IntPolynomial([other])

    def __add__(self, other):
        other = self._coerce(other)
        a, b = self.coefficients, other.coefficients
        n = max(len(a), len(b))
        return IntPolynomial([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial([-a for a in self.coefficients])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, IntPolynomial):
            s = _normalize_scalar(other)
            return IntPolynomial([a * s for a in self.coefficients])
        a, b = self.coefficients, other.coefficients
        if len(a) == 0 or len(b) == 0:
            return IntPolynomial()
        r = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                r[i + j] += ai * bj
        return IntPolynomial(r)

    __rmul__ = __mul__

    def __pow__(self, k):
        assert k >= 0, "negative polynomial power"
        r = IntPolynomial([1])
        b = self
        while k > 0:
            if k & 1:
                r = r * b
            b = b * b
            k >>= 1
        return r

    def __eq__(self, other):
        if isinstance(other, IntPolynomial):
            return self.coefficients == other.coefficients
        if isinstance(other, (int, np.integer, Fraction)):
            return self.coefficients == IntPolynomial([other]).coefficients
        return NotImplemented

    def __ne__(self, other):
        r = self.__eq__(other)
        if r is NotImplemented:
            return r
        return not r

    def __hash__(self):
        return hash(self.coefficients)

    def divrem(self, other):
        """
        Polynomial long division over the rationals

        :type    other: IntPolynomial
        :param   other: nonzero divisor
        :rtype:  tuple
        :return: (quotient, remainder) with deg(remainder) < deg(other)
        """
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        r = [Fraction(a) for a in self.coefficients]
        db = other.degree
        lb = Fraction(other.leading_coefficient)
        if len(r) - 1 < db:
            return IntPolynomial(), IntPolynomial(self.coefficients)
        q = [Fraction(0)] * (len(r) - db)
        for k in range(len(r) - 1 - db, -1, -1):
            c = r[k + db] / lb
            q[k] = c
            if c != 0:
                for i, bi in enumerate(other.coefficients):
                    r[k + i] -= c * bi
        return IntPolynomial(q), IntPolynomial(r[:db])

    def exact_quotient(self, other):
        q, r = self.divrem(other)
        if not r.is_zero():
            raise ArithmeticError("polynomial division is not exact")
        return q

    def shift(self, k):
        """Multiplies by x^k"""
        if self.is_zero():
            return self
        return IntPolynomial([0] * k + list(self.coefficients))

    def valuation(self):
        """Multiplicity of x as a factor; -1 for the zero polynomial"""
        for i, a in enumerate(self.coefficients):
            if a != 0:
                return i
        return -1

    def nonzero_part(self):
        """Returns (k, g) with self = x^k * g and g(0) != 0"""
        k = self.valuation()
        if k <= 0:
            return max(k, 0), self
        return k, IntPolynomial(self.coefficients[k:])

    def content(self):
        if self.is_zero():
            return 0
        if not self.is_integral():
            raise ValueError("content requires integer coefficients")
        g = 0
        for a in self.coefficients:
            g = math.gcd(g, a)
        if self.leading_coefficient < 0:
            g = -g
        return g

    def primitive_part(self):
        if self.is_zero():
            return self
        if not self.is_integral():
            den = 1
            for a in self.coefficients:
                den = den * Fraction(a).denominator // math.gcd(den, Fraction(a).denominator)
            return (self * den).primitive_part()
        g = self.content()
        return IntPolynomial([a // g for a in self.coefficients])

    def derivative(self):
        return IntPolynomial([i * a for i, a in enumerate(self.coefficients)][1:])

    def monic(self):
        if self.is_zero():
            raise ZeroDivisionError("zero polynomial has no monic associate")
        lc = Fraction(self.leading_coefficient)
        return IntPolynomial([Fraction(a) / lc for a in self.coefficients])

    def to_strings(self):
        """Ascending list of decimal strings, rationals written as p/q"""
        return [str(a) for a in self.coefficients]

    @classmethod
    def from_strings(cls, strings):
        return cls([Fraction(s) for s in strings])

    def format(self, var="x"):
        if self.is_zero():
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            a = self.coefficients[k]
            if a == 0:
                continue
            sign = "-" if a < 0 else "+"
            mag = -a if a < 0 else a
            if k == 0:
                body = str(mag)
            else:
                mon = var if k == 1 else var + "^" + str(k)
                body = mon if mag == 1 else str(mag) + "*" + mon
            terms.append((sign, body))
        s = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            s += " " + sign + " " + body
        return s

    def __str__(self):
        return self.format()

    def __repr__(self):
        return "IntPolynomial(" + repr(list(self.coefficients)) + ")"


X = IntPolynomial([0, 1])


def poly_arith(a, b, op):
    """
    Ring operations on polynomials

    :type    a: IntPolynomial
    :param   a: first operand
    :type    b: IntPolynomial
    :param   b: second operand, ignored for ``content``
    :type    op: str
    :param   op: one of ``add``, ``sub``, ``mul``, ``divrem`` or ``content``
    :return: the result polynomial; (quotient, remainder) for ``divrem``;
             (content, primitive part) of ``a`` for ``content``
    """
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "divrem":
        return a.divrem(b)
    if op == "content":
        return a.content(), a.primitive_part()
    raise ValueError("unknown polynomial operation " + str(op))


def poly_square_root(g):
    """
    Exact square root of a monic polynomial, recovered coefficient by coefficient
    from the top.

    :type    g: IntPolynomial
    :param   g: monic polynomial
    :rtype:  IntPolynomial or None
    :return: monic f with f*f == g, or None when g is not a perfect square
    """
    if g.is_zero():
        return None
    if not g.is_monic():
        raise ValueError("square root requires a monic polynomial")
    if g.degree % 2 != 0:
        return None
    m = g.degree // 2
    f = [Fraction(0)] * (m + 1)
    f[m] = Fraction(1)
    for k in range(1, m + 1):
        # coefficient of x^(2m-k) in f^2 involves f[m-k] linearly
        s = Fraction(0)
        for i in range(m - k + 1, m):
            j = 2 * m - k - i
            if m - k < j <= m:
                s += f[i] * f[j]
        f[m - k] = (Fraction(g[2 * m - k]) - s) / 2
    r = IntPolynomial(f)
    if r * r != g:
        return None
    return r


def integer_sqrt_exact(a):
    """
    Exact integer square root

    :type    a: int
    :param   a: nonnegative integer
    :rtype:  int or None
    :return: s with s*s == a, or None if a is not a perfect square
    """
    a = int(a)
    if a < 0:
        raise ValueError("integer square root of a negative number")
    s, exact = integer_nthroot(a, 2)
    if not exact:
        return None
    return int(s)


class PolyMatrix(object):
    """
    Square matrix whose entries are polynomials in x, stored as a stack of
    coefficient matrices ``M(x) = sum_k coefficients[k] * x^k``.

    Coefficients may be integers, Fractions or cyclotomic field elements; the
    object dtype keeps every product exact.

    :attribute coefficients: object array of shape (degree + 1, dimension, dimension)
    """

    def __init__(self, coefficients):
        c = np.array(coefficients, dtype=object)
        assert c.ndim == 3 and c.shape[1] == c.shape[2], "polynomial matrix must be square"
        top = c.shape[0]
        while top > 1 and _is_zero_slice(c[top - 1]):
            top -= 1
        self.coefficients = c[:top]

    @classmethod
    def from_constant(cls, m):
        m = np.array(m, dtype=object)
        return cls(m.reshape((1,) + m.shape))

    @classmethod
    def from_entries(cls, entries):
        n = len(entries)
        deg = max([max(e.degree, 0) for row in entries for e in row] + [0])
        c = np.zeros((deg + 1, n, n), dtype=object)
        for i in range(n):
            assert len(entries[i]) == n, "polynomial matrix must be square"
            for j in range(n):
                for k, a in enumerate(entries[i][j].coefficients):
                    c[k, i, j] = a
        return cls(c)

    @classmethod
    def column_weighted(cls, m, weights):
        """Builds m * diag(x^weights)"""
        m = np.array(m, dtype=object)
        weights = [int(w) for w in weights]
        c = np.zeros((max(weights + [0]) + 1,) + m.shape, dtype=object)
        for j, w in enumerate(weights):
            c[w, :, j] = m[:, j]
        return cls(c)

    @property
    def dimension(self):
        return self.coefficients.shape[1]

    @property
    def degree(self):
        return self.coefficients.shape[0] - 1

    def entry(self, i, j):
        return IntPolynomial(list(self.coefficients[:, i, j]))

    def evaluate(self, x):
        r = np.zeros(self.coefficients.shape[1:], dtype=object)
        for a in self.coefficients[::-1]:
            r = r * x + a
        return r

    def map_coefficients(self, func):
        c = np.empty(self.coefficients.shape, dtype=object)
        for idx, a in np.ndenumerate(self.coefficients):
            c[idx] = func(a)
        return PolyMatrix(c)

    def __matmul__(self, other):
        a, b = self.coefficients, other.coefficients
        assert a.shape[2] == b.shape[1], "dimension mismatch"
        r = np.zeros((a.shape[0] + b.shape[0] - 1, a.shape[1], b.shape[2]), dtype=object)
        for i in range(a.shape[0]):
            if _is_zero_slice(a[i]):
                continue
            for j in range(b.shape[0]):
                r[i + j] = r[i + j] + np.dot(a[i], b[j])
        return PolyMatrix(r)

    def __pow__(self, k):
        assert k >= 1, "polynomial matrix power must be positive"
        r = None
        b = self
        while k > 0:
            if k & 1:
                r = b if r is None else r @ b
            k >>= 1
            if k > 0:
                b = b @ b
        return r

    def apply(self, vector):
        """
        Multiplies by a polynomial vector

        :type    vector: numpy.array
        :param   vector: object array of shape (degree + 1, dimension)
        :rtype:  numpy.array
        :return: the product as an object array of the same layout
        """
        a = self.coefficients
        v = np.array(vector, dtype=object)
        r = np.zeros((a.shape[0] + v.shape[0] - 1, a.shape[1]), dtype=object)
        for i in range(a.shape[0]):
            for j in range(v.shape[0]):
                r[i + j] = r[i + j] + np.dot(a[i], v[j])
        return r

    def trace_coefficients(self):
        return [sum(np.diagonal(a).tolist(), 0) for a in self.coefficients]

    def trace(self):
        return IntPolynomial(self.trace_coefficients())


def _is_zero_slice(s):
    return all(v == 0 for v in s.flat)


def faddeev_leverrier(a):
    """
    Characteristic polynomial coefficients by the Faddeev-LeVerrier recursion.

    Works over any exact ring containing the rationals whose elements support
    ``+``, ``*`` and division by integers.

    :type    a: numpy.array
    :param   a: square object array
    :rtype:  list
    :return: ascending coefficients of det(lambda*I - a)
    """
    a = np.array(a, dtype=object)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("characteristic polynomial requires a square matrix")
    n = a.shape[0]
    c = [0] * (n + 1)
    c[n] = 1
    am = np.zeros((n, n), dtype=object)
    for k in range(1, n + 1):
        m = am.copy()
        for i in range(n):
            m[i, i] = m[i, i] + c[n - k + 1]
        am = np.dot(a, m)
        c[n - k] = exact_divide(-sum(np.diagonal(am).tolist(), 0), k)
    return c


def _as_integer_matrix(m):
    a = np.array(m, dtype=object)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("characteristic polynomial requires a square matrix")
    r = np.empty(a.shape, dtype=object)
    for idx, v in np.ndenumerate(a):
        try:
            v = _normalize_scalar(v)
        except TypeError:
            raise ValueError("integer matrix expected, got " + type(v).__name__)
        if not isinstance(v, int):
            raise ValueError("integer matrix expected")
        r[idx] = v
    return r


def charpoly_leverrier(m):
    """
    Exact characteristic polynomial of an integer matrix via Faddeev-LeVerrier

    :type    m: numpy.array
    :param   m: square integer matrix
    :rtype:  IntPolynomial
    :return: monic det(lambda*I - m)
    """
    return IntPolynomial(faddeev_leverrier(_as_integer_matrix(m)))


def modular_prime_bits(dimension):
    """Largest prime size so that dimension * p^2 accumulations fit in int64"""
    return min(31, (62 - int(math.ceil(math.log2(dimension + 1)))) // 2)


def _log2_binomial(n, k):
    return (math.lgamma(n + 1) - math.lgamma(k + 1) - math.lgamma(n - k + 1)) / math.log(2)


def charpoly_bound_bits(m):
    """
    Bound in bits on the absolute values of the characteristic polynomial
    coefficients of an integer matrix.

    The coefficient of lambda^(n-k) is a sum of C(n,k) principal minors, each
    bounded by the product of its k largest row norms.
    """
    n = m.shape[0]
    logs = []
    for i in range(n):
        s = sum(int(v) * int(v) for v in m[i])
        logs.append(0.5 * math.log2(s) if s > 1 else 0.0)
    logs.sort(reverse=True)
    best = 0.0
    acc = 0.0
    for k in range(1, n + 1):
        acc += logs[k - 1]
        best = max(best, _log2_binomial(n, k) + acc)
    return best


def _hessenberg_mod_p(h, p):
    n = h.shape[0]
    for j in range(n - 2):
        nz = np.flatnonzero(h[j + 1:, j])
        if nz.size == 0:
            continue
        r = j + 1 + int(nz[0])
        if r != j + 1:
            h[[j + 1, r], :] = h[[r, j + 1], :]
            h[:, [j + 1, r]] = h[:, [r, j + 1]]
        inv = pow(int(h[j + 1, j]), p - 2, p)
        u = (h[j + 2:, j] * inv) % p
        if not u.any():
            continue
        h[j + 2:, :] = (h[j + 2:, :] - np.outer(u, h[j + 1, :]) % p) % p
        h[:, j + 1] = (h[:, j + 1] + (h[:, j + 2:] @ u) % p) % p
    return h


def _hessenberg_charpoly_mod_p(h, p):
    n = h.shape[0]
    polys = np.zeros((n + 1, n + 1), dtype=np.int64)
    polys[0, 0] = 1
    suffix = np.zeros(0, dtype=np.int64)
    for m in range(n):
        prev = polys[m]
        nxt = np.zeros(n + 1, dtype=np.int64)
        nxt[1:] = prev[:-1]
        nxt = (nxt - (h[m, m] * prev) % p) % p
        if m > 0:
            # suffix[i] is the product of subdiagonal entries i+1..m
            suffix = np.append((suffix * h[m, m - 1]) % p, h[m, m - 1])
            coef = (h[:m, m] * suffix) % p
            nxt = (nxt - (coef @ polys[:m]) % p) % p
        polys[m + 1] = nxt
    return polys[n]


def charpoly_mod_p(m, p):
    """
    Characteristic polynomial modulo a word-sized prime by Hessenberg reduction

    :type    m: numpy.array
    :param   m: square integer matrix, any integer dtype or object
    :type    p: int
    :param   p: prime with dimension * p^2 < 2^63
    :rtype:  numpy.array
    :return: ascending int64 coefficients reduced to [0, p)
    """
    a = np.array(m, dtype=object)
    h = (a % p).astype(np.int64)
    return _hessenberg_charpoly_mod_p(_hessenberg_mod_p(h, p), p)


def _prime_stream(bits, congruent_to_one_mod=None):
    if congruent_to_one_mod is None:
        q = 1 << bits
        while True:
            q = prevprime(q)
            yield int(q)
    n = congruent_to_one_mod
    k = ((1 << bits) - 2) // n
    while k > 0:
        q = k * n + 1
        if isprime(q):
            yield q
        k -= 1
    raise ArithmeticError("ran out of primes congruent to 1 mod " + str(n))


def select_crt_primes(bound_bits, bits, congruent_to_one_mod=None):
    """
    Chooses descending primes whose product exceeds twice the coefficient bound,
    plus one guard prime

    :rtype:  tuple
    :return: (crt primes, guard prime)
    """
    stream = _prime_stream(bits, congruent_to_one_mod)
    primes = []
    total = 0.0
    while total <= bound_bits + 2.0:
        q = next(stream)
        primes.append(q)
        total += math.log2(q)
    return primes, next(stream)


def crt_symmetric(primes, residue_rows):
    """
    Chinese remaindering of coefficient vectors into the symmetric range

    :type    primes: list of int
    :param   primes: pairwise coprime moduli
    :type    residue_rows: list of numpy.array
    :param   residue_rows: one residue vector per prime, all of equal length
    :rtype:  list of int
    """
    mm, e, s = crt1(primes)
    out = []
    for idx in range(len(residue_rows[0])):
        v = [int(r[idx]) for r in residue_rows]
        out.append(int(crt2(primes, v, mm, e, s, True)[0]))
    return out


def _map_primes(fn, primes, workers):
    if workers is not None and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as ex:
            return list(ex.map(fn, primes))
    return [fn(q) for q in primes]


def charpoly_exact(m, workers=None):
    """
    Exact characteristic polynomial of an integer matrix.

    Reduces modulo several word-sized primes, computes each characteristic
    polynomial by Hessenberg reduction and reconstructs the integer coefficients
    by Chinese remaindering against a Hadamard-type bound. One extra prime is
    checked against the reconstruction.

    :type    m: numpy.array
    :param   m: square integer matrix
    :type    workers: int
    :param   workers: optional thread count for the per-prime work. Optional
    :rtype:  IntPolynomial
    :return: monic det(lambda*I - m)
    """
    a = _as_integer_matrix(m)
    n = a.shape[0]
    if n == 0:
        return IntPolynomial([1])
    bound = charpoly_bound_bits(a)
    bits = modular_prime_bits(n)
    primes, guard = select_crt_primes(bound, bits)
    _logger.debug("charpoly dimension %d: bound %.1f bits, %d primes of %d bits", n, bound, len(primes), bits)

    rows = _map_primes(lambda q: charpoly_mod_p(a, q), primes + [guard], workers)
    coeffs = crt_symmetric(primes, rows[:-1])
    for c, g in zip(coeffs, rows[-1]):
        if c % guard != int(g):
            raise ArithmeticError("characteristic polynomial failed the guard prime check")
    return IntPolynomial(coeffs)


class PrimeFieldPoly(object):
    """
    Polynomial over GF(p) in ascending order of degree

    :attribute p: the prime modulus
    :attribute coefficients: tuple of residues in [0, p)
    """

    def __init__(self, p, coefficients):
        self.p = int(p)
        c = [int(a) % self.p for a in coefficients]
        while len(c) > 0 and c[-1] == 0:
            c.pop()
        self.coefficients = tuple(c)

    @classmethod
    def from_int_polynomial(cls, f, p):
        cs = []
        for a in f.coefficients:
            a = Fraction(a)
            cs.append(a.numerator * pow(a.denominator, -1, p))
        return cls(p, cs)

    @classmethod
    def from_descending(cls, p, coefficients):
        return cls(p, list(reversed(coefficients)))

    def to_descending(self):
        return [int(a) for a in reversed(self.coefficients)]

    @property
    def degree(self):
        return len(self.coefficients) - 1

    @property
    def leading_coefficient(self):
        return self.coefficients[-1] if self.coefficients else 0

    def is_zero(self):
        return len(self.coefficients) == 0

    def __mul__(self, other):
        assert self.p == other.p, "mismatched modulus"
        return PrimeFieldPoly.from_descending(self.p, gf_mul(self.to_descending(), other.to_descending(), self.p, ZZ))

    def __pow__(self, k):
        r = PrimeFieldPoly(self.p, [1])
        for _ in range(k):
            r = r * self
        return r

    def __eq__(self, other):
        if not isinstance(other, PrimeFieldPoly):
            return NotImplemented
        return self.p == other.p and self.coefficients == other.coefficients

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        return hash((self.p, self.coefficients))

    def __call__(self, x):
        r = 0
        for a in reversed(self.coefficients):
            r = (r * x + a) % self.p
        return r

    def __repr__(self):
        return "PrimeFieldPoly(" + str(self.p) + ", " + repr(list(self.coefficients)) + ")"


def _trial_elements(p, n):
    # x, x+1, ..., then higher degree, in base-p counting order
    for e in count(p):
        if e >= p ** n:
            return
        digits = []
        v = e
        while v > 0:
            digits.append(v % p)
            v //= p
        yield list(reversed(digits))


def _equal_degree_split(f, d, p):
    n = gf_degree(f)
    if n == d:
        return [f]
    for t in _trial_elements(p, n):
        if p == 2:
            s = t
            h = t
            for _ in range(d - 1):
                s = gf_pow_mod(s, 2, f, p, ZZ)
                h = gf_add(h, s, p, ZZ)
        else:
            h = gf_sub_ground(gf_pow_mod(t, (p ** d - 1) // 2, f, p, ZZ), 1, p, ZZ)
        g = gf_gcd(f, gf_strip(h), p, ZZ)
        if 0 < gf_degree(g) < n:
            return _equal_degree_split(g, d, p) + _equal_degree_split(gf_quo(f, g, p, ZZ), d, p)
    raise ArithmeticError("equal-degree splitting exhausted its trial elements")


def factor_mod_p(f):
    """
    Complete factorization over GF(p): square-free decomposition, distinct-degree
    splitting, then equal-degree splitting with a fixed sequence of trial elements.

    :type    f: PrimeFieldPoly
    :param   f: nonzero polynomial
    :rtype:  list
    :return: sorted list of (monic irreducible PrimeFieldPoly, multiplicity)
    """
    p = f.p
    if not isprime(p):
        raise ValueError("modulus " + str(p) + " is not prime")
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    _, sqf = gf_sqf_list(f.to_descending(), p, ZZ)
    factors = []
    for part, mult in sqf:
        if gf_degree(part) <= 0:
            continue
        for g, d in gf_ddf_zassenhaus(part, p, ZZ):
            for irr in _equal_degree_split(g, d, p):
                _, irr = gf_monic(irr, p, ZZ)
                factors.append((PrimeFieldPoly.from_descending(p, irr), mult))
    factors.sort(key=lambda fm: (fm[0].degree, fm[0].coefficients, fm[1]))
    return factors


def degree_pattern(factors):
    """Sorted multiset of factor degrees, repeated by multiplicity"""
    r = []
    for g, mult in factors:
        r.extend([g.degree] * mult)
    return sorted(r)
