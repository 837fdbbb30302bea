from collections import Counter
from fractions import Fraction

import numpy as np
import pytest

from temporal_tgen import _kernels, oracle, pairing_model
from temporal_tgen._rng import make_rng
from temporal_tgen.seq_core import DegreeTuple, InvalidParameter, OddDegreeSum
from temporal_tgen.tmgraph import TemporalMultigraph

SMALL = [
    DegreeTuple((1, 1), 2), DegreeTuple((2, 2), 1), DegreeTuple((2, 2), 2), DegreeTuple((2, 1, 1), 2),
    DegreeTuple((3, 1), 2), DegreeTuple((2, 2, 2), 1), DegreeTuple((4,), 2), DegreeTuple((2, 2, 2), 2),
    DegreeTuple((1, 1, 1, 1), 3), DegreeTuple((3, 3, 2), 1),
]


@pytest.mark.parametrize("M,T,expected", [(2, 2, 2), (4, 1, 3), (6, 2, 120)])
def test_total_configs(M, T, expected):
    assert pairing_model.total_configs(DegreeTuple((1,) * M, T)) == expected


@pytest.mark.parametrize("D", SMALL, ids=str)
def test_config_count_matches_enumeration(D):
    counts = pairing_model.enumerate_pairings(D)
    assert sum(counts.values()) == pairing_model.total_configs(D)
    for g, c in counts.items():
        G = TemporalMultigraph.from_edges(D.n, D.T, g)
        assert pairing_model.config_count(G, D.degrees) == c
        assert pairing_model.config_count_formula(G, D.degrees) == c


def test_config_count_examples():
    one = TemporalMultigraph.from_edges(2, 1, [(0, 1, 1)])
    assert pairing_model.config_count(one, (1, 1)) == 1
    two_ts = TemporalMultigraph.from_edges(2, 2, [(0, 1, 1), (0, 1, 2)])
    assert pairing_model.config_count(two_ts, (2, 2)) == 4
    dbl = TemporalMultigraph.from_edges(2, 1, [(0, 1, 1), (0, 1, 1)])
    loops = TemporalMultigraph.from_edges(2, 1, [(0, 0, 1), (1, 1, 1)])
    assert pairing_model.config_count(dbl, (2, 2)) == 2
    assert pairing_model.config_count(loops, (2, 2)) == 1
    with pytest.raises(InvalidParameter):
        pairing_model.config_count(one, (2, 2))


def test_sample_odd_sum():
    with pytest.raises(OddDegreeSum):
        pairing_model.sample(DegreeTuple((1, 2), 1), make_rng(0))


def test_sample_forced_loop():
    rng = make_rng(1)
    for _ in range(20):
        assert pairing_model.sample(DegreeTuple((2, 0), 1), rng).sorted_edges() == [(0, 0, 1)]


def test_sample_timestamps_uniform():
    rng = make_rng(2)
    counts = Counter(tuple(pairing_model.sample(DegreeTuple((1, 1), 2), rng).sorted_edges()) for _ in range(20_000))
    assert set(counts) == {((0, 1, 1),), ((0, 1, 2),)}
    assert abs(counts[((0, 1, 1),)] / 20_000 - 0.5) < 0.015


@pytest.mark.parametrize("D", [DegreeTuple((2, 1, 1), 2), DegreeTuple((2, 2, 2), 1)], ids=str)
def test_sample_distribution_chi_square(D):
    rng = make_rng(3)
    probs = oracle.pairing_distribution(D)
    N = 30_000
    counts = Counter(tuple(pairing_model.sample(D, rng).sorted_edges()) for _ in range(N))
    assert set(counts) <= set(probs)
    keys = sorted(probs)
    _, p = oracle.chi_square_counts([counts[k] for k in keys], [N * float(probs[k]) for k in keys])
    assert p > 1e-3


def test_numpy_and_numba_kernels_agree():
    rng = np.random.default_rng(4)
    stubs = _kernels.stub_labels([3] * 40 + [1] * 10)
    for _ in range(20):
        perm = rng.permutation(stubs.size)
        ts = rng.integers(1, 3, size=stubs.size // 2)
        a = _kernels.pair_stubs(stubs, perm, ts)
        b = _kernels.pair_stubs_numpy(stubs, perm, ts)
        assert all((x == y).all() for x, y in zip(a, b))
        assert tuple(_kernels.nonsimple_summary(*a, 50, 2)) == tuple(_kernels.nonsimple_summary_numpy(*b, 50, 2))


def test_nonsimple_summary_against_graph():
    rng = make_rng(5)
    D = DegreeTuple((3,) * 10, 2)
    for _ in range(50):
        u, v, t = pairing_model.sample_arrays(D, rng)
        G = TemporalMultigraph.from_arrays(10, 2, u, v, t)
        loops, multi, max_w = _kernels.nonsimple_summary(u, v, t, 10, 2)
        w = Counter(G.pool)
        assert loops == G.L
        assert max_w == max(w.values())
        assert multi == sum(c for c in w.values() if c > 1)
        assert _kernels.is_simple_pairing(u, v, t, 10, 2) == G.is_simple()


def test_expected_loops_fraction_type():
    assert isinstance(oracle.expected_loop_count((2, 2)), Fraction)
