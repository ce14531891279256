#!/usr/bin/env python

import circulant_transfer_toolbox as ctt
from circulant_transfer_toolbox import oracle
from circulant_transfer_toolbox.exact_arith import IntPolynomial
import networkx as nx
import numpy as np
import pytest


def _indpoly(g):
    return ctt.brute_independence_polynomial(g).polynomial


def test_small_graphs():
    path = ctt.ExplicitGraph.from_networkx(nx.path_graph(4))
    assert _indpoly(path) == IntPolynomial([1, 4, 3])
    complete = ctt.ExplicitGraph.from_networkx(nx.complete_graph(5))
    assert _indpoly(complete) == IntPolynomial([1, 5])
    empty = ctt.ExplicitGraph(3, [0, 0, 0])
    assert _indpoly(empty) == IntPolynomial([1, 3, 3, 1])
    petersen = ctt.ExplicitGraph.from_networkx(nx.petersen_graph())
    assert _indpoly(petersen) == IntPolynomial([1, 10, 30, 30, 5])


def test_c7():
    g = ctt.build_strong_stack(ctt.cycle_spec(7), 1)
    r = ctt.brute_independence_polynomial(g)
    assert r.polynomial == IntPolynomial([1, 7, 14, 7])
    assert r.vertex_count == 7
    assert r.memo_size > 0
    assert r.elapsed >= 0


def test_strip_c7():
    spec = ctt.cycle_spec(7)
    assert _indpoly(ctt.build_strong_stack(spec, 2)) == IntPolynomial([1, 14, 56, 56])
    p3 = _indpoly(ctt.build_strong_stack(spec, 3))
    assert p3(1) == 1387
    assert p3.degree == 6
    assert p3.leading_coefficient == 49


def test_torus_matches_transfer():
    spec = ctt.cycle_spec(7)
    t = ctt.build_transfer(ctt.enumerate_states(spec), ctt.closed_kernel(spec))
    wt = ctt.build_weighted_transfer(t)
    for d in (3, 4):
        g = ctt.build_strong_stack(spec, d, "torus")
        assert _indpoly(g) == ctt.torus_polynomial(wt, d).polynomial
    with pytest.warns(UserWarning):
        g2 = ctt.build_strong_stack(spec, 2, "torus")
    assert _indpoly(g2) == IntPolynomial([1, 14, 56, 56])
    assert ctt.torus_polynomial(wt, 2).polynomial == IntPolynomial([1, 14, 56, 56])


def test_permutation_invariance():
    rng = np.random.default_rng(3)
    g = ctt.build_strong_stack(ctt.CirculantSpec.from_generators(8, [1, 3]), 2)
    expected = _indpoly(g)
    for _ in range(5):
        perm = [int(v) for v in rng.permutation(g.vertex_count)]
        assert _indpoly(g.permuted(perm)) == expected


def test_degeneracy_order():
    star = ctt.ExplicitGraph.from_networkx(nx.star_graph(4))
    order = oracle.degeneracy_order(star)
    assert sorted(order) == list(range(5))
    assert star.degree(order[0]) == 1
    assert order.index(0) >= 3


def test_layered_equivalence():
    for spec in (ctt.cycle_spec(5), ctt.cycle_spec(7), ctt.CirculantSpec.from_generators(9, [1, 2])):
        for boundary in ("strip", "torus"):
            for d in (2, 3):
                r = ctt.layered_equivalence_check(spec, d, boundary)
                assert r.equal
                assert r.layered == r.oracle
    strip1 = oracle.layered_configuration_counts(ctt.cycle_spec(7), 1)
    assert strip1 == IntPolynomial([1, 7, 14, 7])


def _sweep_cases():
    cases = []
    for n in range(3, 8):
        for d in range(1, 50 // n + 1):
            for boundary in ("strip", "torus"):
                if boundary == "torus" and d < 2:
                    continue
                marks = pytest.mark.slow if n * d > 30 else ()
                cases.append(pytest.param(n, d, boundary, marks=marks, id="C%d-%s-%d" % (n, boundary, d)))
    return cases


@pytest.mark.filterwarnings("ignore:two-layer torus")
@pytest.mark.parametrize("n,d,boundary", _sweep_cases())
def test_transfer_matches_oracle(n, d, boundary):
    spec = ctt.cycle_spec(n)
    wt = ctt.build_weighted_transfer(ctt.build_transfer(ctt.enumerate_states(spec), ctt.closed_kernel(spec)))
    if boundary == "torus":
        p = ctt.torus_polynomial(wt, d).polynomial
    else:
        p = ctt.strip_polynomial(wt, d).polynomial
    g = ctt.build_strong_stack(spec, d, boundary)
    assert ctt.brute_independence_polynomial(g, cap=50).polynomial == p
    assert oracle.layered_configuration_counts(spec, d, boundary) == p


def test_layered_bad_arguments():
    with pytest.raises(ValueError):
        oracle.layered_configuration_counts(ctt.cycle_spec(7), 1, "torus")
    with pytest.raises(ValueError):
        oracle.layered_configuration_counts(ctt.cycle_spec(7), 2, "mobius")


def test_oracle_cap(monkeypatch):
    g = ctt.build_strong_stack(ctt.cycle_spec(7), 2)
    with pytest.raises(ctt.ResourceCapExceeded):
        ctt.brute_independence_polynomial(g, cap=13)
    with pytest.raises(ctt.ResourceCapExceeded):
        ctt.layered_equivalence_check(ctt.cycle_spec(7), 2, cap=13)

    monkeypatch.setenv(oracle.ORACLE_CAP_ENV, "10")
    assert oracle.oracle_cap() == 10
    with pytest.raises(ctt.ResourceCapExceeded):
        ctt.brute_independence_polynomial(g)
    monkeypatch.setenv(oracle.ORACLE_CAP_ENV, "ten")
    with pytest.raises(ValueError):
        oracle.oracle_cap()
    monkeypatch.setenv(oracle.ORACLE_CAP_ENV, "0")
    with pytest.raises(ValueError):
        oracle.oracle_cap()
    monkeypatch.delenv(oracle.ORACLE_CAP_ENV)
    assert oracle.oracle_cap() == oracle.DEFAULT_ORACLE_CAP


@pytest.mark.slow
def test_torus_c7_d7():
    g = ctt.build_strong_stack(ctt.cycle_spec(7), 7, "torus")
    r = ctt.brute_independence_polynomial(g, cap=49)
    assert r.polynomial == IntPolynomial([1, 49, 980, 10388, 63553, 229908, 486668, 576856, 346381, 81095, 980])
    assert r.polynomial(1) == 1796859
