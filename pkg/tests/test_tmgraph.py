from collections import Counter

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from temporal_tgen.oracle import chi_square_counts
from temporal_tgen.tmgraph import TemporalMultigraph


def test_single_edge():
    g = TemporalMultigraph.from_edges(3, 2, [(0, 1, 1)])
    assert g.pair_multiplicity(0, 1) == 1 and g.distinct_timestamps(0, 1) == 1
    assert g.simple_degree(0) == g.simple_degree(1) == 1
    assert g.is_simple()


def test_double_edge():
    g = TemporalMultigraph.from_edges(2, 1, [(0, 1, 1), (1, 0, 1)])
    assert g.temporal_multiplicity(0, 1, 1) == 2
    assert g.simple_degree(0) == g.simple_degree(1) == 0
    assert g.D_sum == 2 and (0, 1, 1) in g.doubles
    assert g.double_edge_count(0) == g.double_edge_count(1) == 1


def test_loop():
    g = TemporalMultigraph.from_edges(3, 2, [(2, 2, 2), (2, 0, 1)])
    assert g.L == 1 and g.single_loop_count(2) == 1
    assert g.deg[2] == 3 and g.simple_degree(2) == g.deg[2] - 2


def test_mixed_queries():
    g = TemporalMultigraph.from_edges(2, 2, [(0, 1, 1), (0, 1, 2)])
    assert g.pair_multiplicity(0, 1) == 2 and g.distinct_timestamps(0, 1) == 2
    assert g.temporal_multiplicity(0, 1, 1) == 1 and g.is_simple()
    g.add_edge(0, 1, 1)
    assert g.pair_multiplicity(0, 1) == 3 and g.distinct_timestamps(0, 1) == 2 and g.D_sum == 2


def test_heavy_multiplicities():
    g = TemporalMultigraph.from_edges(2, 1, [(0, 1, 1)] * 3 + [(0, 0, 1)] * 2)
    assert g.has_heavy() and g.D_sum == 3 and g.L == 2
    assert not g.doubles and not g.single_loops


def test_range_checks():
    g = TemporalMultigraph(2, 2)
    with pytest.raises(IndexError):
        g.add_edge(0, 2, 1)
    with pytest.raises(IndexError):
        g.add_edge(0, 1, 3)
    with pytest.raises(LookupError):
        g.remove_edge(0, 1, 1)


def test_sample_oriented_edge_single_edge():
    g = TemporalMultigraph.from_edges(2, 1, [(0, 1, 1)])
    rng = np.random.default_rng(0)
    draws = Counter(g.sample_oriented_edge(rng) for _ in range(4000))
    assert set(draws) == {(0, 1, 1), (1, 0, 1)}
    assert abs(draws[(0, 1, 1)] / 4000 - 0.5) < 0.05


def test_sample_oriented_edge_loop():
    g = TemporalMultigraph.from_edges(1, 1, [(0, 0, 1)])
    rng = np.random.default_rng(1)
    assert {g.sample_oriented_edge(rng) for _ in range(50)} == {(0, 0, 1)}


def test_sample_oriented_edge_uniform():
    g = TemporalMultigraph.from_edges(4, 2, [(0, 1, 1), (2, 3, 2)])
    rng = np.random.default_rng(2)
    N = 100_000
    draws = Counter(g.sample_oriented_edge(rng) for _ in range(N))
    assert len(draws) == 4
    _, p = chi_square_counts(list(draws.values()), [N / 4] * 4)
    assert p > 0.01


ops = st.lists(st.tuples(st.booleans(), st.integers(0, 5), st.integers(0, 5), st.integers(1, 2)), max_size=80)


@settings(max_examples=200, deadline=None)
@given(ops)
def test_random_operations_keep_invariants(seq):
    g = TemporalMultigraph(6, 2)
    present = Counter()
    for add, u, v, t in seq:
        key = (min(u, v), max(u, v), t)
        if add or present[key] == 0:
            g.add_edge(u, v, t)
            present[key] += 1
        else:
            g.remove_edge(v, u, t)
            present[key] -= 1
        g.check_invariants()
    assert Counter(g.pool) == +present


def test_long_random_sequence():
    rng = np.random.default_rng(5)
    g = TemporalMultigraph(8, 3)
    for _ in range(10_000):
        if g.pool and rng.random() < 0.45:
            g.remove_edge(*g.pool[int(rng.integers(len(g.pool)))])
        else:
            g.add_edge(int(rng.integers(8)), int(rng.integers(8)), int(rng.integers(1, 4)))
    g.check_invariants()


@settings(max_examples=100, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 6), st.integers(0, 6), st.integers(1, 3)), max_size=40))
def test_from_arrays_matches_incremental(edges):
    arr = np.array(edges, dtype=np.int64).reshape(-1, 3)
    a = TemporalMultigraph.from_arrays(7, 3, arr[:, 0], arr[:, 1], arr[:, 2])
    a.check_invariants()
    b = TemporalMultigraph.from_edges(7, 3, edges)
    assert a.edge_counter() == b.edge_counter()
    assert (a.L, a.D_sum, a.k, a.sq_k, a.sq_sp) == (b.L, b.D_sum, b.k, b.sq_k, b.sq_sp)


def test_copy_is_independent():
    g = TemporalMultigraph.from_edges(3, 2, [(0, 1, 1), (1, 2, 2)])
    h = g.copy()
    h.remove_edge(0, 1, 1)
    assert g.temporal_multiplicity(0, 1, 1) == 1 and h.temporal_multiplicity(0, 1, 1) == 0
