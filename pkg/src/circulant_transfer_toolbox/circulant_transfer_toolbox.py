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

from __future__ import absolute_import

import logging
import warnings

import numpy as np
import networkx as nx
from sympy import isprime

from .cyclotomic import CyclotomicElement

_logger = logging.getLogger(__name__)

#Largest base cycle whose 2^n subsets are scanned when enumerating states
MAX_STATE_VERTICES = 24


class StructuralError(Exception):
    """
    Raised when an exact structural identity fails, for example a characteristic
    polynomial factorization that does not reassemble

    :attribute candidates: dict of the values that disagreed
    """

    def __init__(self, message, candidates=None):
        super(StructuralError, self).__init__(message)
        self.candidates = candidates if candidates is not None else {}


class ResourceCapExceeded(Exception):
    """Raised when a base cycle or explicit graph exceeds an enumeration size cap"""
    pass


class VerificationMismatch(Exception):
    """
    Raised by the verification pipeline

    :attribute failed: list of failed check names
    """

    def __init__(self, message, failed=None):
        super(VerificationMismatch, self).__init__(message)
        self.failed = list(failed) if failed is not None else []


class UnsupportedSpecError(ValueError):
    """Raised when the exact block machinery is asked for composite n or non-free rotation orbits"""
    pass


def residues_to_mask(residues):
    m = 0
    for r in residues:
        m |= 1 << int(r)
    return m


def mask_to_residues(mask):
    r = []
    i = 0
    while mask:
        if mask & 1:
            r.append(i)
        mask >>= 1
        i += 1
    return r


def popcount(mask):
    return bin(mask).count("1")


def rotate_mask(mask, s, n):
    """Returns {a + s mod n : a in mask}"""
    s %= n
    full = (1 << n) - 1
    return ((mask << s) | (mask >> (n - s))) & full


def reflect_mask(mask, n):
    """Returns {-a mod n : a in mask}"""
    r = 0
    for a in mask_to_residues(mask):
        r |= 1 << ((-a) % n)
    return r


class CirculantSpec(object):
    """
    The circulant graph Cay(Z_n, C)

    :attribute n: vertex count, at least 3
    :attribute connection: sorted tuple of residues in C, closed under negation
    """

    def __init__(self, n, connection=(1, -1)):
        """
        Construct a circulant specification

        :type  n: int
        :param n: vertex count, at least 3
        :type  connection: list of int
        :param connection: the connection set C; residues are taken mod n and must be
                           closed under negation
        """
        n = int(n)
        if n < 3:
            raise ValueError("circulant graphs need n >= 3, got " + str(n))
        c = sorted(set(int(a) % n for a in connection))
        if 0 in c:
            raise ValueError("connection set must not contain 0")
        if len(c) == 0:
            raise ValueError("connection set must not be empty")
        for a in c:
            if (n - a) % n not in c:
                raise ValueError("connection set is not symmetric: " + str(a) + " present but "
                                 + str((n - a) % n) + " missing")
        self.n = n
        self.connection = tuple(c)

    @classmethod
    def from_generators(cls, n, generators):
        """Closes a list of residues under negation, so ``[1]`` gives C = {1, n - 1}"""
        gens = [int(g) % int(n) for g in generators]
        return cls(n, gens + [(-g) % int(n) for g in gens])

    @property
    def connection_mask(self):
        return residues_to_mask(self.connection)

    def is_cycle(self):
        return self.connection == tuple(sorted({1, self.n - 1}))

    def generators(self):
        return [c for c in self.connection if c <= self.n // 2]

    def __eq__(self, other):
        if not isinstance(other, CirculantSpec):
            return NotImplemented
        return self.n == other.n and self.connection == other.connection

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        return hash((self.n, self.connection))

    def __repr__(self):
        return "CirculantSpec(" + str(self.n) + ", " + repr(list(self.connection)) + ")"


def cycle_spec(n):
    """The cycle C_n as a circulant, connection {1, n - 1}"""
    return CirculantSpec(n, (1, -1))


class ClosedKernel(object):
    """
    The closed connection set B = C + {0}, the forbidden differences between
    neighbouring layers

    :attribute n: modulus
    :attribute members: bitmask of the residues in B
    """

    def __init__(self, n, members):
        self.n = int(n)
        self.members = int(members)
        assert self.members & 1, "closed kernel must contain 0"
        assert reflect_mask(self.members, self.n) == self.members, "closed kernel must be symmetric"

    def contains(self, j):
        return bool((self.members >> (j % self.n)) & 1)

    def indicator(self, j):
        """c(j) = 1 iff j is not in B"""
        return 0 if self.contains(j) else 1

    def indicator_vector(self):
        return np.array([self.indicator(j) for j in range(self.n)], dtype=np.int64)

    def size(self):
        return popcount(self.members)

    def blocked(self, mask):
        """The union of u + B over u in mask; J is compatible with mask iff J avoids it"""
        r = 0
        for u in mask_to_residues(mask):
            r |= rotate_mask(self.members, u, self.n)
        return r

    def __eq__(self, other):
        if not isinstance(other, ClosedKernel):
            return NotImplemented
        return self.n == other.n and self.members == other.members

    def __hash__(self):
        return hash((self.n, self.members))

    def __repr__(self):
        return "ClosedKernel(" + str(self.n) + ", " + repr(mask_to_residues(self.members)) + ")"


def closed_kernel(spec):
    return ClosedKernel(spec.n, spec.connection_mask | 1)


class StateSet(object):
    """
    Independent sets of a circulant graph, encoded as bitmasks and sorted by
    (cardinality, bitmask)

    :attribute spec: the CirculantSpec the states belong to
    :attribute states: list of bitmasks
    :attribute weights: list of cardinalities, parallel to states
    """

    def __init__(self, spec, states):
        self.spec = spec
        self.states = sorted((int(s) for s in states), key=lambda s: (popcount(s), s))
        self.weights = [popcount(s) for s in self.states]
        self._index = dict((s, i) for i, s in enumerate(self.states))
        assert len(self._index) == len(self.states), "states must be distinct"

    @property
    def n(self):
        return self.spec.n

    def __len__(self):
        return len(self.states)

    def __iter__(self):
        return iter(self.states)

    def index(self, mask):
        return self._index[mask]

    def __contains__(self, mask):
        return mask in self._index

    def weight_histogram(self):
        h = [0] * (max(self.weights) + 1)
        for w in self.weights:
            h[w] += 1
        return h

    def as_array(self):
        return np.array(self.states, dtype=np.int64)


def is_independent(mask, spec):
    for c in spec.connection:
        if mask & rotate_mask(mask, c, spec.n):
            return False
    return True


def enumerate_states(spec):
    """
    Enumerates every independent set of Cay(Z_n, C).

    :type    spec: CirculantSpec
    :param   spec: the circulant graph
    :rtype:  StateSet
    :return: the states sorted by (cardinality, bitmask)
    :raises ResourceCapExceeded: for n above MAX_STATE_VERTICES
    """
    if not isinstance(spec, CirculantSpec):
        raise ValueError("enumerate_states requires a CirculantSpec")
    n = spec.n
    if n > MAX_STATE_VERTICES:
        raise ResourceCapExceeded("state enumeration is limited to n <= " + str(MAX_STATE_VERTICES))
    full = (1 << n) - 1
    masks = np.arange(1 << n, dtype=np.int64)
    ok = np.ones(masks.shape, dtype=bool)
    for c in spec.connection:
        rotated = ((masks << c) | (masks >> (n - c))) & full
        ok &= (masks & rotated) == 0
    states = StateSet(spec, masks[ok].tolist())
    _logger.debug("n=%d: %d independent sets", n, len(states))
    return states


def minkowski_difference(I, J, n):
    """
    The Minkowski difference {a - b mod n : a in I, b in J}

    :type    I: int
    :param   I: bitmask over Z_n
    :type    J: int
    :param   J: bitmask over Z_n
    :type    n: int
    :param   n: modulus
    :rtype:  int
    :return: bitmask of the differences, empty if either input is empty
    """
    r = 0
    for b in mask_to_residues(J):
        r |= rotate_mask(I, -b, n)
    return r


def compatible(I, J, kernel):
    """
    True iff the states I and J may sit on neighbouring layers, that is the
    Minkowski difference I - J avoids B

    :type    kernel: ClosedKernel
    :rtype:  bool
    """
    return (minkowski_difference(I, J, kernel.n) & kernel.members) == 0


class ExplicitGraph(object):
    """
    Simple undirected graph with adjacency stored as neighbour bitsets

    :attribute vertex_count: number of vertices
    :attribute adjacency: list of neighbour bitmasks, one per vertex
    """

    def __init__(self, vertex_count, adjacency):
        self.vertex_count = int(vertex_count)
        self.adjacency = [int(a) for a in adjacency]
        assert len(self.adjacency) == self.vertex_count
        for v, a in enumerate(self.adjacency):
            assert not (a >> v) & 1, "self loop at vertex " + str(v)
            for u in mask_to_residues(a):
                assert (self.adjacency[u] >> v) & 1, "adjacency is not symmetric"

    @classmethod
    def from_networkx(cls, g, nodelist=None):
        if nodelist is None:
            nodelist = list(g.nodes())
        index = dict((v, i) for i, v in enumerate(nodelist))
        adj = [0] * len(nodelist)
        for u, v in g.edges():
            if u == v:
                continue
            adj[index[u]] |= 1 << index[v]
            adj[index[v]] |= 1 << index[u]
        return cls(len(nodelist), adj)

    def to_networkx(self):
        g = nx.Graph()
        g.add_nodes_from(range(self.vertex_count))
        for v, a in enumerate(self.adjacency):
            for u in mask_to_residues(a):
                if u > v:
                    g.add_edge(v, u)
        return g

    def degree(self, v):
        return popcount(self.adjacency[v])

    def edge_count(self):
        return sum(popcount(a) for a in self.adjacency) // 2

    def permuted(self, perm):
        """Relabels vertex v as perm[v]"""
        adj = [0] * self.vertex_count
        for v, a in enumerate(self.adjacency):
            m = 0
            for u in mask_to_residues(a):
                m |= 1 << perm[u]
            adj[perm[v]] = m
        return ExplicitGraph(self.vertex_count, adj)


def build_strong_stack(spec, d, boundary="strip"):
    """
    Explicit strong cylinder G x P_d or strong torus G x C_d, with vertex
    (j, layer) numbered layer * n + j.

    The d = 2 torus is realised as G x K_2, where the two layers constrain each
    other once.

    :type    spec: CirculantSpec
    :param   spec: the base circulant graph
    :type    d: int
    :param   d: layer count
    :type    boundary: str
    :param   boundary: ``strip`` or ``torus``
    :rtype:  ExplicitGraph
    """
    d = int(d)
    if boundary == "strip":
        if d < 1:
            raise ValueError("strip needs d >= 1, got " + str(d))
        layers = nx.path_graph(d)
    elif boundary == "torus":
        if d < 2:
            raise ValueError("the one-layer torus is degenerate, use the strip with d = 1")
        if d == 2:
            warnings.warn("two-layer torus realised as G x K_2")
            layers = nx.complete_graph(2)
        else:
            layers = nx.cycle_graph(d)
    else:
        raise ValueError("unknown boundary " + str(boundary))

    base = nx.circulant_graph(spec.n, spec.generators())
    g = nx.strong_product(base, layers)
    nodelist = [(j, t) for t in range(d) for j in range(spec.n)]
    return ExplicitGraph.from_networkx(g, nodelist)


class KernelSpectrum(object):
    """
    Discrete Fourier transform of the kernel indicator c

    :attribute n: modulus
    :attribute values: list of n values c_hat(k), CyclotomicElement when n is an odd prime
                       and complex otherwise
    :attribute exact: True when the values are CyclotomicElement
    """

    def __init__(self, n, values, exact):
        self.n = n
        self.values = list(values)
        self.exact = exact

    def as_complex(self):
        if self.exact:
            return np.array([v.to_complex() for v in self.values])
        return np.array(self.values, dtype=np.complex128)


def fourier_of_kernel(spec):
    """
    c_hat(k) = sum_j c(j) w^(-jk), where c is the indicator of the complement of B.

    For the cycle kernel B = {-1, 0, 1}, c_hat(0) = n - 3 and c_hat(k) = -mu_k.

    :type    spec: CirculantSpec
    :rtype:  KernelSpectrum
    """
    kernel = closed_kernel(spec)
    n = spec.n
    c = kernel.indicator_vector()
    if n % 2 == 1 and isprime(n):
        values = []
        for k in range(n):
            full = [0] * n
            for j in range(n):
                if c[j]:
                    full[(-j * k) % n] += 1
            values.append(CyclotomicElement.from_full(n, full))
        return KernelSpectrum(n, values, True)
    return KernelSpectrum(n, np.fft.fft(c).tolist(), False)
