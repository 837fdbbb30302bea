import itertools
import math
from fractions import Fraction

import numpy as np
import pytest

from temporal_tgen import oracle
from temporal_tgen.seq_core import DegreeTuple


@pytest.mark.parametrize("degrees,T,count", [
    ((1, 1), 2, 2), ((2, 2, 2), 1, 1), ((2, 2, 2), 2, 8), ((2, 2), 2, 1), ((2, 2), 1, 0),
    ((1, 1, 1, 1), 1, 3), ((3, 3), 3, 1), ((2, 2, 1, 1), 2, 18),
])
def test_enumerate_examples(degrees, T, count):
    U = oracle.enumerate_simple(DegreeTuple(degrees, T))
    assert len(U) == count
    for g in U.graphs:
        assert all(u < v for u, v, _ in g) and len(set(g)) == len(g)
        deg = [0] * len(degrees)
        for u, v, _ in g:
            deg[u] += 1
            deg[v] += 1
        assert tuple(deg) == degrees


def test_triangle_universe_contents():
    U = oracle.enumerate_simple(DegreeTuple((2, 2, 2), 2))
    expect = {tuple(sorted([(0, 1, a), (0, 2, b), (1, 2, c)])) for a, b, c in itertools.product((1, 2), repeat=3)}
    assert set(U.graphs) == expect


def _tuples(maxM, maxT):
    for n in range(1, 5):
        for d in itertools.product(range(0, 4), repeat=n):
            if 0 < sum(d) <= maxM and sum(d) % 2 == 0 and list(d) == sorted(d, reverse=True):
                for T in range(1, maxT + 1):
                    yield DegreeTuple(d, T)


def test_enumeration_agrees_with_pairing_image():
    for D in _tuples(6, 2):
        assert oracle.enumerate_simple(D).graphs == oracle.simple_from_pairings(D).graphs, D


def _pairing_mean(D, fn):
    return sum(p * fn(g) for g, p in oracle.pairing_distribution(D).items())


def test_expected_loop_examples():
    assert oracle.expected_loop_count((2, 2)) == Fraction(2, 3)
    assert oracle.expected_loop_count((1, 1)) == 0
    assert oracle.expected_loop_count((4,)) == 2
    with pytest.raises(ValueError):
        oracle.expected_loop_count((1, 2))


def test_expected_loop_count_matches_enumeration():
    for D in _tuples(8, 1):
        got = _pairing_mean(D, lambda g: sum(u == v for u, v, _ in g))
        assert got == oracle.expected_loop_count(D.degrees), D


def test_expected_parallel_pairs_matches_enumeration():
    def pairs(g):
        w = {}
        for u, v, t in g:
            if u != v:
                w[(u, v, t)] = w.get((u, v, t), 0) + 1
        return sum(math.comb(x, 2) for x in w.values())

    checked = 0
    for D in _tuples(8, 2):
        if sum(D.degrees) < 4:
            continue
        assert _pairing_mean(D, pairs) == oracle.expected_parallel_pairs(D.degrees, D.T), D
        checked += 1
    assert checked > 10


def test_chi_square_balanced_and_degenerate():
    U = oracle.enumerate_simple(DegreeTuple((2, 2, 2), 2))
    stat, p, dev = oracle.chi_square_uniformity(U.graphs * 100, U)
    assert stat == 0 and p == 1.0 and dev == 0
    stat, p, dev = oracle.chi_square_uniformity([U.graphs[0]] * 800, U)
    assert stat == pytest.approx(5600) and p < 1e-12 and dev == pytest.approx(7)


def test_chi_square_calibration():
    rng = np.random.default_rng(11)
    small = 0
    for _ in range(1000):
        counts = rng.multinomial(8000, [1 / 8] * 8)
        _, p = oracle.chi_square_counts(counts, [1000] * 8)
        small += p < 1e-3
    assert small <= 5


def test_chi2_sf_reference_values():
    # chi-square critical values at 5% for 1 and 10 degrees of freedom
    assert oracle.chi2_sf(3.841, 1) == pytest.approx(0.05, rel=1e-3)
    assert oracle.chi2_sf(18.307, 10) == pytest.approx(0.05, rel=1e-3)


def test_symmetry_accepts_uniform_and_rejects_constant():
    D = DegreeTuple((2, 2, 2, 2), 2)
    U = oracle.enumerate_simple(D)
    rng = np.random.default_rng(5)
    picks = [U.graphs[i] for i in rng.integers(0, len(U), size=20000)]
    _, p = oracle.marginal_symmetry_test(picks, D)
    assert p > 1e-3
    _, p = oracle.marginal_symmetry_test([U.graphs[0]] * 2000, D)
    assert p < 1e-12
    with pytest.raises(ValueError):
        oracle.marginal_symmetry_test(picks, DegreeTuple((2, 2, 1, 1), 2))


def test_outside_universe_and_space_too_large():
    U = oracle.enumerate_simple(DegreeTuple((1, 1), 2))
    with pytest.raises(oracle.SampleOutsideUniverse):
        oracle.chi_square_uniformity([((0, 1, 3),)], U)
    with pytest.raises(oracle.SpaceTooLarge):
        oracle.enumerate_simple(DegreeTuple((2,) * 5, 2))
    with pytest.raises(oracle.SpaceTooLarge):
        oracle.enumerate_simple(DegreeTuple((1, 1), 4))
