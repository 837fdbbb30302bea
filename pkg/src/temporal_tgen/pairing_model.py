"""Temporal configuration model: uniform stub pairings with uniform timestamps."""

from __future__ import annotations

import math
from collections import Counter

import numpy as np

from . import _kernels
from .seq_core import DegreeTuple, InvalidParameter, OddDegreeSum
from .tmgraph import TemporalMultigraph

MAX_NONSIMPLE_STUBS = 12


class Unsupported(InvalidParameter):
    pass


def sample_arrays(D: DegreeTuple, rng, stubs: np.ndarray | None = None):
    if sum(D.degrees) % 2:
        raise OddDegreeSum("pairing model needs an even degree sum")
    if stubs is None:
        stubs = _kernels.stub_labels(D.degrees)
    return _kernels.draw_pairing(stubs, D.T, rng)


def sample(D: DegreeTuple, rng, stubs: np.ndarray | None = None) -> TemporalMultigraph:
    """Draw a temporal multigraph from the configuration model in O(M)."""
    u, v, t = sample_arrays(D, rng, stubs)
    return TemporalMultigraph.from_arrays(D.n, D.T, u, v, t)


def total_configs(D: DegreeTuple) -> int:
    """(M-1)!! * T^(M/2)."""
    M = sum(D.degrees)
    if M % 2:
        raise OddDegreeSum("odd degree sum")
    dfact = 1
    for x in range(M - 1, 0, -2):
        dfact *= x
    return dfact * D.T ** (M // 2)


def _matchings(stubs):
    if not stubs:
        yield []
        return
    first = stubs[0]
    rest = stubs[1:]
    for i in range(len(rest)):
        for tail in _matchings(rest[:i] + rest[i + 1:]):
            yield [(first, rest[i])] + tail


def _count_labelings(nonsimple: Counter, stub_nodes: list[int]) -> int:
    """Number of distinct temporal configurations on the given stubs whose
    image is exactly the edge multiset ``nonsimple``.

    Brute force: enumerate perfect matchings of the stubs; a matching fits when
    its multiset of node pairs equals the target one, and then contributes the
    number of ways to hand out the target timestamps to its pairs.
    """
    pair_target = Counter()
    times_by_pair: dict[tuple[int, int], Counter] = {}
    for (u, v, t), w in nonsimple.items():
        pair_target[(u, v)] += w
        times_by_pair.setdefault((u, v), Counter())[t] += w
    per_fit = 1
    for pair, tc in times_by_pair.items():
        g = pair_target[pair]
        ways = math.factorial(g)
        for w in tc.values():
            ways //= math.factorial(w)
        per_fit *= ways
    stubs = list(range(len(stub_nodes)))
    fits = 0
    for match in _matchings(stubs):
        pairs = Counter()
        for a, b in match:
            x, y = stub_nodes[a], stub_nodes[b]
            pairs[(min(x, y), max(x, y))] += 1
        if pairs == pair_target:
            fits += 1
    return fits * per_fit


def config_count(G: TemporalMultigraph, d) -> int:
    """Number of temporal configurations mapping onto ``G``.

    Factorises into the non-simple part (enumerated), ``prod k_i!`` for the
    simple part and ``prod binom(d_i, k_i)`` for splitting each node's stubs.
    """
    d = list(d)
    if G.degrees() != d:
        raise InvalidParameter("graph does not match the degree sequence")
    nonsimple = Counter({key: w for key, w in G.edge_counter().items()
                         if key[0] == key[1] or w >= 2})
    k = [G.simple_degree(i) for i in range(G.n)]
    stub_nodes = [i for i in range(G.n) for _ in range(d[i] - k[i])]
    if len(stub_nodes) > MAX_NONSIMPLE_STUBS:
        raise Unsupported(f"non-simple part has {len(stub_nodes)} stubs (> {MAX_NONSIMPLE_STUBS})")
    total = _count_labelings(nonsimple, stub_nodes)
    for di, ki in zip(d, k):
        total *= math.factorial(ki) * math.comb(di, ki)
    return total


def config_count_formula(G: TemporalMultigraph, d) -> int:
    """Closed form of :func:`config_count` used to cross-check the enumeration."""
    total = 1
    for i, di in enumerate(d):
        total *= math.factorial(di)
    for (u, v, t), w in G.edge_counter().items():
        total //= math.factorial(w)
        if u == v:
            total //= 2**w
    return total


def enumerate_pairings(D: DegreeTuple) -> Counter:
    """Exhaustive configuration enumeration: canonical multigraph -> count.

    Keys are sorted edge tuples with repeats. Intended for M <= 8.
    """
    M = sum(D.degrees)
    if M % 2:
        raise OddDegreeSum("odd degree sum")
    if M > 10:
        raise Unsupported("pairing enumeration limited to M <= 10")
    stub_nodes = [i for i, di in enumerate(D.degrees) for _ in range(di)]
    counts: Counter = Counter()
    h = M // 2
    ts_all = list(_product_range(D.T, h))
    for match in _matchings(list(range(M))):
        pairs = [(min(stub_nodes[a], stub_nodes[b]), max(stub_nodes[a], stub_nodes[b])) for a, b in match]
        for ts in ts_all:
            g = tuple(sorted((u, v, t) for (u, v), t in zip(pairs, ts)))
            counts[g] += 1
    return counts


def _product_range(T, h):
    if h == 0:
        yield ()
        return
    for rest in _product_range(T, h - 1):
        for t in range(1, T + 1):
            yield rest + (t,)


__all__ = [
    "sample", "sample_arrays", "total_configs", "config_count",
    "config_count_formula", "enumerate_pairings", "Unsupported",
]
