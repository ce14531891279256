#!/usr/bin/env python

import circulant_transfer_toolbox as ctt
from circulant_transfer_toolbox import transfer
from circulant_transfer_toolbox.exact_arith import IntPolynomial
import numpy as np
import pytest

import numpy.testing as nptest

_c7_torus_d7 = [1, 49, 980, 10388, 63553, 229908, 486668, 576856, 346381, 81095, 980]


def _c7():
    spec = ctt.cycle_spec(7)
    states = ctt.enumerate_states(spec)
    kernel = ctt.closed_kernel(spec)
    t = ctt.build_transfer(states, kernel)
    return t, ctt.build_weighted_transfer(t)


def _c7_orbit_matrix(t, weighted=False):
    dec = ctt.orbit_decompose(t.states, 7)
    return ctt.orbit_transfer(dec, t.kernel, weighted)


def _f4_roots():
    return sorted(np.roots([1, -5, -29, 47, 42]).real, reverse=True)


def test_build_transfer_c7():
    t, _ = _c7()
    assert t.dimension == 29
    nptest.assert_array_equal(t.matrix, t.matrix.T)
    assert np.all((t.matrix == 0) | (t.matrix == 1))
    row_sums = sorted(t.matrix.sum(axis=1).tolist())
    assert row_sums == [1] * 7 + [2] * 7 + [3] * 7 + [8] * 7 + [29]
    empty = t.states.index(0)
    assert t.matrix[empty].sum() == 29
    assert t.matrix[t.states.index(0b1), t.states.index(0b10)] == 0
    assert t.matrix[t.states.index(0b1), t.states.index(0b1000)] == 1


def test_build_transfer_mismatch():
    states = ctt.enumerate_states(ctt.cycle_spec(7))
    with pytest.raises(ValueError):
        ctt.build_transfer(states, ctt.closed_kernel(ctt.cycle_spec(9)))


def test_weighted_transfer():
    t, wt = _c7()
    nptest.assert_array_equal(wt.at_one(), t.matrix)
    assert wt.matrix.degree == 3
    assert wt.weights == t.states.weights
    assert wt.spec == ctt.cycle_spec(7)


def test_strip_polynomial_c7():
    t, wt = _c7()
    p1 = ctt.strip_polynomial(wt, 1)
    assert p1 == IntPolynomial([1, 7, 14, 7])
    p2 = ctt.strip_polynomial(wt, 2)
    assert p2 == IntPolynomial([1, 14, 56, 56])
    assert p2.value_at_one() == 127
    assert p2.alpha == 3
    assert p2.vertex_count == 14
    p3 = ctt.strip_polynomial(wt, 3)
    assert p3.value_at_one() == 1387
    assert p3.alpha == 6
    assert p3.leading_coefficient == 49
    with pytest.raises(ValueError):
        ctt.strip_polynomial(wt, 0)


def test_strip_polynomial_orbit_compression():
    t, wt = _c7()
    orb = _c7_orbit_matrix(t)
    for d in range(1, 6):
        assert ctt.strip_polynomial(wt, d, orb) == ctt.strip_polynomial(wt, d)


def test_strip_polynomial_composite():
    spec = ctt.CirculantSpec.from_generators(8, [1, 2])
    states = ctt.enumerate_states(spec)
    t = ctt.build_transfer(states, ctt.closed_kernel(spec))
    wt = ctt.build_weighted_transfer(t)
    orb = ctt.orbit_transfer(ctt.orbit_decompose(states, 8), t.kernel)
    assert ctt.strip_polynomial(wt, 1).polynomial == IntPolynomial(states.weight_histogram())
    assert ctt.strip_polynomial(wt, 3, orb) == ctt.strip_polynomial(wt, 3)


def test_torus_polynomial_c7():
    t, wt = _c7()
    p = ctt.torus_polynomial(wt, 7)
    assert p == IntPolynomial(_c7_torus_d7)
    assert p.value_at_one() == 1796859
    assert p.alpha == 10
    assert p.leading_coefficient == 980
    assert p.vertex_count == 49
    assert transfer.integer_power_trace(t.matrix, 7) == 1796859


def test_torus_polynomial_small_d():
    t, wt = _c7()
    assert ctt.torus_polynomial(wt, 2) == ctt.strip_polynomial(wt, 2)
    with pytest.raises(ValueError):
        ctt.torus_polynomial(wt, 1)


def test_independence_polynomial_invariants():
    with pytest.raises(AssertionError):
        transfer.IndependencePolynomial(IntPolynomial([1, 6, 14, 7]), 7, (1, 6), 1, "strip")
    with pytest.raises(AssertionError):
        transfer.IndependencePolynomial(IntPolynomial([2, 7]), 7, (1, 6), 1, "strip")


def test_power_iteration():
    t, _ = _c7()
    rho, v, iterations = ctt.power_iteration(t.matrix)
    nptest.assert_allclose(rho, _f4_roots()[0], atol=1e-9)
    assert np.all(v > 0)
    assert iterations > 1
    nptest.assert_allclose(t.matrix @ v, rho * v, atol=1e-8)


def test_power_iteration_failures():
    with pytest.raises(ctt.ConvergenceError):
        ctt.power_iteration(np.zeros((3, 3)))
    with pytest.raises(ctt.ConvergenceError):
        ctt.power_iteration(np.array([[2.0, 1.0], [1.0, 3.0]]), max_iter=1)


def test_spectral_report_c7():
    t, wt = _c7()
    orb = _c7_orbit_matrix(t)
    r = ctt.spectral_report(t, orb, wt)
    rho = _f4_roots()[0]
    nptest.assert_allclose(r.rho_T, rho, atol=1e-9)
    nptest.assert_allclose(r.rho_orbit, rho, atol=1e-9)
    assert r.perron_vector_min > 0
    _, v, _ = ctt.power_iteration(t.matrix)
    nptest.assert_allclose(r.perron_vector_min, min(v) / max(v), atol=1e-9)
    assert r.perron_vector_min <= 1.0
    assert "min(v) / max(v)" in transfer.SpectralReport.__doc__
    nptest.assert_allclose(r.capacity_stat, rho ** (1.0 / 7), atol=1e-9)
    assert r.capacity_caveat == transfer.CAPACITY_CAVEAT
    assert r.strip_values[:3] == [29, 127, 1387]
    assert len(r.growth_samples) == 20
    assert abs(r.ratio_samples[-1] - rho) < 1e-2
    tail = r.growth_samples[9:]
    assert all(a > b for a, b in zip(tail, tail[1:]))
    assert all(g > rho for g in tail)
    nptest.assert_allclose(r.orbit_eigenvalues, _f4_roots(), atol=1e-9)


def test_spectral_report_without_orbits():
    t, wt = _c7()
    r = ctt.spectral_report(t, None, wt, horizon=5)
    assert len(r.strip_values) == 5
    assert r.strip_values[:3] == [29, 127, 1387]
    assert r.orbit_eigenvalues == []


def test_summary_table_c7():
    t, wt = _c7()
    rows = ctt.summary_table(wt, _c7_orbit_matrix(t))
    values = [(r.d, r.value_at_one, r.alpha, r.leading_coefficient) for r in rows]
    assert values == [(1, 29, 3, 7), (2, 127, 3, 56), (2, 1796859, 10, 980), (3, 1387, 6, 49),
                      (3, 2544256835855451311632423, 33, 16672544)]
    assert rows[-1].documented
    assert not any(r.documented for r in rows[:-1])
    assert rows[2].formula == "tr(M^7)"


def test_check_documented_c7():
    t, wt = _c7()
    checks = ctt.check_documented_c7(wt, _c7_orbit_matrix(t))
    assert sorted(checks) == ["documented_c7", "documented_strip_2", "documented_strip_3", "documented_torus_2",
                              "documented_torus_2_polynomial", "documented_torus_3_consistent"]
    assert all(checks.values())
    assert transfer.DOCUMENTED_C7_TORUS_D2_POLYNOMIAL == IntPolynomial(_c7_torus_d7)

    spec = ctt.cycle_spec(5)
    wt5 = ctt.build_weighted_transfer(ctt.build_transfer(ctt.enumerate_states(spec), ctt.closed_kernel(spec)))
    with pytest.raises(ValueError):
        ctt.check_documented_c7(wt5)


def test_summary_table_other_cycle():
    spec = ctt.cycle_spec(5)
    states = ctt.enumerate_states(spec)
    t = ctt.build_transfer(states, ctt.closed_kernel(spec))
    rows = ctt.summary_table(ctt.build_weighted_transfer(t))
    assert len(rows) == 4
    assert rows[0].value_at_one == 11
