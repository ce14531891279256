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

"""Brute-force independence polynomials of explicit graphs, independent of the transfer matrices"""

from __future__ import absolute_import

import os
import sys
import time
import logging
from typing import NamedTuple

import networkx as nx

from . import circulant_transfer_toolbox as ctt
from .circulant_transfer_toolbox import ResourceCapExceeded
from .exact_arith import IntPolynomial

_logger = logging.getLogger(__name__)

DEFAULT_ORACLE_CAP = 50

ORACLE_CAP_ENV = "CIRCULANT_TRANSFER_ORACLE_CAP"


def oracle_cap():
    """The vertex cap, from the environment when set"""
    v = os.environ.get(ORACLE_CAP_ENV)
    if v is None or v.strip() == "":
        return DEFAULT_ORACLE_CAP
    try:
        cap = int(v)
    except ValueError:
        raise ValueError(ORACLE_CAP_ENV + " must be an integer, got " + repr(v))
    if cap < 1:
        raise ValueError(ORACLE_CAP_ENV + " must be positive")
    return cap


class OraclePolynomial(NamedTuple):
    polynomial: IntPolynomial
    vertex_count: int
    elapsed: float
    memo_size: int


def degeneracy_order(g):
    """
    Smallest-last ordering: vertices in the order they are removed when a vertex
    of minimum remaining degree is deleted repeatedly

    :type    g: ExplicitGraph
    :rtype:  list
    """
    removal = nx.algorithms.coloring.strategy_smallest_last(g.to_networkx(), None)
    return [int(v) for v in reversed(list(removal))]


def _add_shifted(a, b):
    # a + x * b on ascending coefficient lists
    r = list(a) + [0] * max(0, len(b) + 1 - len(a))
    for i, c in enumerate(b):
        r[i + 1] += c
    return r


def brute_independence_polynomial(g, cap=None):
    """
    Independence polynomial of an explicit graph by exhaustive branching: the
    lowest remaining candidate is either excluded, or included together with the
    removal of its neighbours. Counts are memoized on the candidate set.

    :type    g: ExplicitGraph
    :param   g: the graph
    :type    cap: int
    :param   cap: vertex limit, defaults to ``oracle_cap()``. Optional
    :rtype:  OraclePolynomial
    """
    if cap is None:
        cap = oracle_cap()
    if g.vertex_count > cap:
        raise ResourceCapExceeded("graph has " + str(g.vertex_count) + " vertices, oracle cap is " + str(cap))

    order = degeneracy_order(g)
    position = [0] * g.vertex_count
    for i, v in enumerate(order):
        position[v] = i
    nbr = [0] * g.vertex_count
    for v in range(g.vertex_count):
        m = 0
        for u in ctt.mask_to_residues(g.adjacency[v]):
            m |= 1 << position[u]
        nbr[position[v]] = m

    memo = {0: [1]}

    def count(p):
        r = memo.get(p)
        if r is not None:
            return r
        low = p & -p
        v = low.bit_length() - 1
        rest = p ^ low
        if nbr[v] & rest == 0:
            r = _add_shifted(count(rest), count(rest))
        else:
            r = _add_shifted(count(rest), count(rest & ~nbr[v]))
        memo[p] = r
        return r

    start = time.perf_counter()
    limit = sys.getrecursionlimit()
    if limit < g.vertex_count + 100:
        sys.setrecursionlimit(g.vertex_count + 100)
    coeffs = count((1 << g.vertex_count) - 1)
    elapsed = time.perf_counter() - start

    poly = IntPolynomial(coeffs)
    assert poly[0] == 1 and poly[1] == g.vertex_count
    _logger.info("oracle on %d vertices: I(1) = %d in %.2fs, %d memo entries",
                 g.vertex_count, poly(1), elapsed, len(memo))
    return OraclePolynomial(poly, g.vertex_count, elapsed, len(memo))


def layered_configuration_counts(spec, d, boundary="strip"):
    """
    Weight-graded count of layer sequences S_0..S_{d-1} of independent sets with
    (S_i - S_{i+1}) disjoint from the closed kernel for consecutive layers, and
    also for the pair (S_{d-1}, S_0) on the torus.

    :type    spec: CirculantSpec
    :type    d: int
    :type    boundary: str
    :rtype:  IntPolynomial
    """
    if boundary not in ("strip", "torus"):
        raise ValueError("unknown boundary " + str(boundary))
    if d < 1 or (boundary == "torus" and d < 2):
        raise ValueError("layer count " + str(d) + " is too small for the " + boundary)
    states = list(ctt.enumerate_states(spec))
    kernel = ctt.closed_kernel(spec)
    successors = dict((s, [t for t in states if ctt.compatible(s, t, kernel)]) for s in states)

    memo = dict()

    def tail(i, prev, first):
        # sequences for layers i..d-1 given layer i-1 = prev
        key = (i, prev, first)
        if key in memo:
            return memo[key]
        if i == d:
            r = [1] if boundary == "strip" or ctt.compatible(prev, first, kernel) else []
        else:
            r = []
            for t in successors[prev]:
                sub = tail(i + 1, t, first)
                w = ctt.popcount(t)
                for j, c in enumerate(sub):
                    while len(r) <= j + w:
                        r.append(0)
                    r[j + w] += c
        memo[key] = r
        return r

    total = IntPolynomial()
    for s in states:
        f = s if boundary == "torus" else 0
        total = total + IntPolynomial(tail(1, s, f)) * IntPolynomial.monomial(ctt.popcount(s))
    return total


class EquivalenceResult(NamedTuple):
    equal: bool
    layered: IntPolynomial
    oracle: IntPolynomial


def layered_equivalence_check(spec, d, boundary="strip", cap=None):
    """
    Compares the layered description against brute force on the explicit strong
    cylinder or torus

    :type    spec: CirculantSpec
    :type    d: int
    :type    boundary: str
    :type    cap: int
    :param   cap: oracle vertex cap. Optional
    :rtype:  EquivalenceResult
    """
    if cap is None:
        cap = oracle_cap()
    if spec.n * d > cap:
        raise ResourceCapExceeded(str(spec.n * d) + " vertices exceed the oracle cap " + str(cap))
    layered = layered_configuration_counts(spec, d, boundary)
    g = ctt.build_strong_stack(spec, d, boundary)
    brute = brute_independence_polynomial(g, cap).polynomial
    if layered != brute:
        _logger.warning("layered count %s differs from the oracle %s", layered, brute)
    return EquivalenceResult(layered == brute, layered, brute)
