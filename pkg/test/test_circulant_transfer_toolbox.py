#!/usr/bin/env python

import circulant_transfer_toolbox as ctt
import numpy as np
import networkx as nx
import pytest

import numpy.testing as nptest

#Lucas numbers L_3..L_15, the state counts of the cycles C_3..C_15
_lucas = [4, 7, 11, 18, 29, 47, 76, 123, 199, 322, 521, 843, 1364]


def test_cycle_spec():
    spec = ctt.cycle_spec(7)
    assert spec.n == 7
    assert spec.connection == (1, 6)
    assert spec.is_cycle()
    assert spec.generators() == [1]
    assert spec == ctt.CirculantSpec.from_generators(7, [1])
    assert spec != ctt.CirculantSpec.from_generators(7, [1, 2])


def test_circulant_spec_invalid():
    with pytest.raises(ValueError):
        ctt.CirculantSpec(2, (1, -1))
    with pytest.raises(ValueError):
        ctt.CirculantSpec(7, (1,))
    with pytest.raises(ValueError):
        ctt.CirculantSpec(7, (0, 1, 6))
    with pytest.raises(ValueError):
        ctt.CirculantSpec(7, ())


def test_mask_helpers():
    assert ctt.residues_to_mask([0, 2, 5]) == 0b100101
    assert ctt.mask_to_residues(0b100101) == [0, 2, 5]
    assert ctt.popcount(0b100101) == 3
    assert ctt.circulant_transfer_toolbox.rotate_mask(0b1, 3, 7) == 0b1000
    assert ctt.circulant_transfer_toolbox.rotate_mask(0b1000000, 1, 7) == 0b1
    assert ctt.circulant_transfer_toolbox.reflect_mask(0b10, 7) == 0b1000000


def test_enumerate_states_c7():
    states = ctt.enumerate_states(ctt.cycle_spec(7))
    assert len(states) == 29
    assert states.weight_histogram() == [1, 7, 14, 7]
    assert list(states)[0] == 0
    assert states.weights == sorted(states.weights)
    for s in states:
        assert ctt.is_independent(s, states.spec)


def test_state_counts_lucas():
    for n, expected in zip(range(3, 16), _lucas):
        assert len(ctt.enumerate_states(ctt.cycle_spec(n))) == expected


def test_state_counts_brute_force():
    spec = ctt.CirculantSpec.from_generators(9, [1, 3])
    count = sum(1 for m in range(1 << 9) if ctt.is_independent(m, spec))
    assert len(ctt.enumerate_states(spec)) == count


def test_enumerate_states_size_cap():
    n = ctt.circulant_transfer_toolbox.MAX_STATE_VERTICES + 1
    with pytest.raises(ctt.ResourceCapExceeded):
        ctt.enumerate_states(ctt.cycle_spec(n))


def test_closed_kernel():
    kernel = ctt.closed_kernel(ctt.cycle_spec(7))
    assert kernel.size() == 3
    assert kernel.contains(0) and kernel.contains(1) and kernel.contains(6)
    assert not kernel.contains(3)
    nptest.assert_array_equal(kernel.indicator_vector(), [0, 0, 1, 1, 1, 1, 0])
    assert kernel.blocked(0b1) == 0b1000011


def test_minkowski_difference():
    assert ctt.minkowski_difference(0b1, 0b1, 7) == 0b1
    assert ctt.minkowski_difference(0b101, 0b1, 7) == 0b101
    #{0} - {3} = {4}
    assert ctt.minkowski_difference(0b1, 0b1000, 7) == 0b10000
    assert ctt.minkowski_difference(0, 0b1, 7) == 0


def test_compatible():
    kernel = ctt.closed_kernel(ctt.cycle_spec(7))
    assert ctt.compatible(0b1, 0b1000, kernel)
    assert not ctt.compatible(0b1, 0b10, kernel)
    assert not ctt.compatible(0b1, 0b1, kernel)
    assert ctt.compatible(0, 0b1010101, kernel)


def test_build_strong_stack():
    spec = ctt.cycle_spec(7)
    g = ctt.build_strong_stack(spec, 2, "strip")
    assert g.vertex_count == 14
    assert g.edge_count() == 35

    g3 = ctt.build_strong_stack(spec, 3, "torus")
    assert g3.vertex_count == 21
    assert g3.edge_count() == 84
    assert all(g3.degree(v) == 8 for v in range(21))

    with pytest.warns(UserWarning):
        g2 = ctt.build_strong_stack(spec, 2, "torus")
    assert g2.edge_count() == 35

    with pytest.raises(ValueError):
        ctt.build_strong_stack(spec, 1, "torus")
    with pytest.raises(ValueError):
        ctt.build_strong_stack(spec, 2, "annulus")


def test_explicit_graph_networkx():
    g = ctt.ExplicitGraph.from_networkx(nx.cycle_graph(5))
    assert g.edge_count() == 5
    h = g.to_networkx()
    assert nx.is_isomorphic(h, nx.cycle_graph(5))
    p = g.permuted([4, 3, 2, 1, 0])
    assert p.edge_count() == 5


def test_fourier_of_kernel_exact():
    spectrum = ctt.fourier_of_kernel(ctt.cycle_spec(7))
    assert spectrum.exact
    assert spectrum.values[0] == ctt.CyclotomicElement.scalar(7, 4)
    for k in range(1, 7):
        assert spectrum.values[k] == -ctt.mu(7, k)
    expected = [4] + [-(1 + 2 * np.cos(2 * np.pi * k / 7)) for k in range(1, 7)]
    nptest.assert_allclose(spectrum.as_complex(), expected, atol=1e-9)


@pytest.mark.parametrize("spec", [ctt.cycle_spec(5), ctt.cycle_spec(7), ctt.cycle_spec(11), ctt.cycle_spec(13),
                                  ctt.CirculantSpec.from_generators(11, [1, 3]),
                                  ctt.CirculantSpec.from_generators(13, [2, 5])], ids=repr)
def test_fourier_of_kernel_exact_symmetry(spec):
    n = spec.n
    spectrum = ctt.fourier_of_kernel(spec)
    assert spectrum.exact
    assert spectrum.values[0] == ctt.CyclotomicElement.scalar(n, n - ctt.closed_kernel(spec).size())
    for k in range(1, n):
        assert spectrum.values[n - k] == spectrum.values[k].conjugate()
        assert spectrum.values[k].is_real()
    total = spectrum.values[0]
    for v in spectrum.values[1:]:
        total = total + v
    assert total.is_zero()
    if spec == ctt.cycle_spec(n):
        for k in range(1, n):
            assert spectrum.values[k] == -ctt.mu(n, k)


def test_fourier_of_kernel_numeric():
    spectrum = ctt.fourier_of_kernel(ctt.cycle_spec(8))
    assert not spectrum.exact
    expected = [5] + [-(1 + 2 * np.cos(2 * np.pi * k / 8)) for k in range(1, 8)]
    nptest.assert_allclose(spectrum.as_complex(), expected, atol=1e-9)
