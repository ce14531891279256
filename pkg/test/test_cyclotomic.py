#!/usr/bin/env python

import circulant_transfer_toolbox as ctt
from circulant_transfer_toolbox import cyclotomic
from circulant_transfer_toolbox.cyclotomic import CyclotomicElement, CyclotomicPolynomial
from circulant_transfer_toolbox.exact_arith import IntPolynomial
from fractions import Fraction
import numpy as np
import pytest

import numpy.testing as nptest


def _random_element(rng, n, lo=-3, hi=3):
    return CyclotomicElement(n, [int(v) for v in rng.integers(lo, hi + 1, size=n - 1)])


def _random_matrix(rng, n, dim):
    m = np.empty((dim, dim), dtype=object)
    for i in range(dim):
        for j in range(dim):
            m[i, j] = _random_element(rng, n)
    return m


def test_roots_of_unity():
    w = ctt.omega(7)
    assert w ** 7 == 1
    assert w ** 3 == ctt.omega(7, 3)
    assert ctt.omega(7, -1) == ctt.omega(7, 6)
    total = CyclotomicElement.scalar(7, 0)
    for j in range(7):
        total = total + ctt.omega(7, j)
    assert total.is_zero()
    nptest.assert_allclose(w.to_complex(), np.exp(2j * np.pi / 7), atol=1e-12)


def test_invalid_order():
    with pytest.raises(ValueError):
        CyclotomicElement(9, [0] * 8)
    with pytest.raises(ValueError):
        ctt.omega(7) + ctt.omega(5)


def test_field_operations():
    rng = np.random.default_rng(11)
    for _ in range(10):
        a = _random_element(rng, 7)
        b = _random_element(rng, 7)
        assert ctt.cyclotomic_arith(a, b, "add") - b == a
        assert ctt.cyclotomic_arith(a, b, "mul") == b * a
        if not b.is_zero():
            assert ctt.cyclotomic_arith(a, b, "div") * b == a
    with pytest.raises(ValueError):
        ctt.cyclotomic_arith(ctt.omega(7), ctt.omega(7), "pow")
    with pytest.raises(ZeroDivisionError):
        CyclotomicElement.scalar(7, 0).inverse()


def test_inverse_and_norm():
    a = 1 + ctt.omega(7)
    assert a * a.inverse() == 1
    assert ctt.omega(7).norm() == 1
    assert CyclotomicElement.scalar(5, 2).norm() == 16
    assert (a / 2) * 2 == a
    assert (a ** -1) == a.inverse()


def test_galois_action():
    w = ctt.omega(7)
    assert w.galois(3) == ctt.omega(7, 3)
    assert w.conjugate() == ctt.omega(7, 6)
    a = 2 + w - 3 * ctt.omega(7, 4)
    b = 1 - ctt.omega(7, 2)
    for j in range(1, 7):
        assert (a * b).galois(j) == a.galois(j) * b.galois(j)
    with pytest.raises(ValueError):
        w.galois(7)


def test_mu():
    n = 7
    mus = [ctt.mu(n, k) for k in (1, 2, 3)]
    for k, m in zip((1, 2, 3), mus):
        assert m.is_real()
        assert not m.is_rational()
        nptest.assert_allclose(m.to_complex().real, 1 + 2 * np.cos(2 * np.pi * k / n), atol=1e-12)
        assert ctt.real_trace(m - 1) == -1
        assert ctt.real_trace(m) == 2
        assert (m - 1).trace() == -2
    assert mus[0] + mus[1] + mus[2] == 2
    assert not ctt.omega(7).is_real()
    with pytest.raises(ValueError):
        ctt.real_trace(ctt.omega(7))


def test_mu_minimal_polynomial():
    x = CyclotomicPolynomial(7, [0, 1])
    p = CyclotomicPolynomial(7, [1])
    for k in (1, 2, 3):
        p = p * CyclotomicPolynomial(7, [-ctt.mu(7, k), 1])
    assert p.is_rational()
    assert p.to_int_polynomial() == IntPolynomial([1, -1, -2, 1])
    assert x.degree == 1


def test_trace():
    assert CyclotomicElement.scalar(7, 1).trace() == 6
    for j in range(1, 7):
        assert ctt.omega(7, j).trace() == -1
    assert CyclotomicElement(5, [Fraction(1, 2), 0, 0, 0]).trace() == 2


def test_cyclotomic_polynomial():
    f = CyclotomicPolynomial.from_int_polynomial(7, IntPolynomial([0, 0, 3, 1]))
    assert f.degree == 3
    assert f.valuation() == 2
    k, g = f.nonzero_part()
    assert k == 2 and g.to_int_polynomial() == IntPolynomial([3, 1])
    h = CyclotomicPolynomial(7, [ctt.omega(7), 1])
    assert not h.is_real()
    assert h.galois(2) == CyclotomicPolynomial(7, [ctt.omega(7, 2), 1])
    assert (h * h.conjugate()).is_real()
    nptest.assert_allclose(h.complex_coefficients(), [np.exp(2j * np.pi / 7), 1], atol=1e-12)


def test_charpoly_cyclotomic_rational_matrix():
    m = np.array([[2, 1], [1, 2]], dtype=object)
    chi = ctt.charpoly_cyclotomic(m, n=7)
    assert chi.to_int_polynomial() == IntPolynomial([3, -4, 1])
    with pytest.raises(ValueError):
        ctt.charpoly_cyclotomic(m)


def test_charpoly_cyclotomic_methods_agree():
    rng = np.random.default_rng(5)
    for n, dim in ((5, 3), (7, 4), (7, 6)):
        m = _random_matrix(rng, n, dim)
        a = ctt.charpoly_cyclotomic(m, method="leverrier")
        b = ctt.charpoly_cyclotomic(m, method="modular")
        assert a == b
        assert a.degree == dim


def test_charpoly_cyclotomic_fractions():
    m = np.array([[CyclotomicElement(5, [Fraction(1, 2), 1, 0, 0]), 1],
                  [Fraction(1, 3), ctt.omega(5, 2)]], dtype=object)
    a = ctt.charpoly_cyclotomic(m, method="leverrier")
    b = ctt.charpoly_cyclotomic(m, method="modular")
    assert a == b
    #constant term is the determinant
    det = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
    assert a.coefficients[0] == det


def test_charpoly_cyclotomic_galois_equivariant():
    rng = np.random.default_rng(3)
    m = _random_matrix(rng, 7, 3)
    chi = ctt.charpoly_cyclotomic(m)
    mg = np.vectorize(lambda v: v.galois(3), otypes=[object])(m)
    assert ctt.charpoly_cyclotomic(mg) == chi.galois(3)
