import itertools
import math
from collections import Counter
from fractions import Fraction

import numpy as np
import pytest

from temporal_tgen import oracle, suites
from temporal_tgen import switching_engine as se
from temporal_tgen._rng import make_rng
from temporal_tgen.seq_core import SeqScalars, constants, scalars
from temporal_tgen.tmgraph import TemporalMultigraph


def tl_instance():
    # loop at node 0 plus edges 1-3 and 2-4 (0-based labels of the figure's 1..5)
    return TemporalMultigraph.from_edges(5, 3, [(0, 0, 1), (1, 3, 1), (2, 4, 1)])


def td1_instance():
    # double-edge 0-1 plus edges 2-4 and 3-5
    return TemporalMultigraph.from_edges(6, 2, [(0, 1, 1), (0, 1, 1), (2, 4, 1), (3, 5, 2)])


def test_tl_forced_structure():
    G = tl_instance()
    rng = make_rng(0)
    seen = 0
    for _ in range(20_000):
        S = se.draw_tl(G, 0, 1, rng)
        if S is None:
            continue
        seen += 1
        v1, t1, v2, v3, v4, v5 = S.anchors
        assert {frozenset((v2, v4)), frozenset((v3, v5))} == {frozenset((1, 3)), frozenset((2, 4))}
        assert S.removed[0] == (0, 0, 1)
        H = G.copy()
        L0, D0 = H.L, H.D_sum
        se.apply(H, S)
        assert H.L == L0 - 1 and H.D_sum == D0 and H.is_simple()
        created = {k[:2] for k in S.created}
        assert created == {tuple(sorted((0, v2))), tuple(sorted((0, v3))), tuple(sorted((v4, v5)))}
    assert seen > 0


def test_tl_acceptance_frequency_matches_exact_count():
    G = tl_instance()
    f = se.count_tl(G, 0, 1)
    assert f == oracle.brute_f_tl(G, 0, 1)
    rng = make_rng(1)
    N = 100_000
    hits = sum(se.draw_tl(G, 0, 1, rng) is not None for _ in range(N))
    p = f / (G.num_edges * 2) ** 2 / G.T ** 3
    assert abs(hits / N - p) <= 4 * math.sqrt(p * (1 - p) / N)


def test_tl_rejects_edge_at_v1():
    G = TemporalMultigraph.from_edges(5, 2, [(0, 0, 1), (0, 1, 1), (2, 3, 1), (1, 4, 2)])
    assert se.tl_candidate(G, 0, 1, (1, 0, 1), (2, 3, 1), 2, 2, 2) is None


def test_td1_fig_rewiring():
    G = td1_instance()
    S = se.td1_candidate(G, 0, 1, 1, (2, 4, 1), (3, 5, 2), 2, 1, 1)
    assert S is not None
    assert set(S.created) == {(0, 2, 2), (1, 3, 1), (4, 5, 1)}
    se.apply(G, S)
    assert G.temporal_multiplicity(0, 1, 1) == 1 and G.is_simple()


def test_td1_acceptance_frequency():
    G = TemporalMultigraph.from_edges(8, 2, [(0, 1, 1), (0, 1, 1), (2, 4, 1), (3, 5, 2), (5, 6, 1), (6, 7, 2), (2, 7, 2)])
    f = se.count_td1(G, 0, 1, 1)
    assert f == oracle.brute_f_td1(G, 0, 1, 1)
    rng = make_rng(2)
    N = 100_000
    hits = sum(se.draw_td(G, 0, 1, 1, "TD1", rng) is not None for _ in range(N))
    p = f / (2 * G.num_edges) ** 2 / G.T ** 3
    assert abs(hits / N - p) <= 4 * math.sqrt(p * (1 - p) / N)


def test_td_rejects_edge_of_the_double():
    G = td1_instance()
    assert se.td1_candidate(G, 0, 1, 1, (0, 1, 1), (3, 5, 2), 2, 1, 1) is None


def test_td0_erases_both_copies():
    G = TemporalMultigraph.from_edges(10, 1, [(0, 1, 1), (0, 1, 1), (2, 6, 1), (3, 7, 1), (4, 8, 1), (5, 9, 1)])
    S = se.td0_candidate(G, 0, 1, 1, [(2, 6, 1), (3, 7, 1), (4, 8, 1), (5, 9, 1)], [1] * 6)
    assert S is not None
    se.apply(G, S)
    assert G.temporal_multiplicity(0, 1, 1) == 0 and G.is_simple()
    assert G.degrees() == [2, 2] + [1] * 8


def test_apply_rejects_unbalanced_or_colliding():
    G = TemporalMultigraph.from_edges(3, 1, [(0, 1, 1), (1, 2, 1)])
    bad = se.SwitchingChoice("TL", (), ((0, 1, 1),), ((0, 2, 1),))
    with pytest.raises(se.SwitchingError):
        se.apply(G, bad)
    clash = se.SwitchingChoice("TL", (), ((0, 1, 1),), ((1, 2, 1),))
    with pytest.raises(se.SwitchingError):
        se.apply(G, clash)


def test_b_tl_level2_formula():
    G = TemporalMultigraph.from_edges(6, 10, [(1, 3, 1), (2, 4, 1), (2, 4, 5)])
    assert se.b_tl(G, 2, (1, 2, 3, 4)) == 9 * 8
    assert se.b_tl(TemporalMultigraph(6, 7), 2, (1, 2, 3, 4)) == 49


def test_b_tl_level1_brute_force():
    G = TemporalMultigraph.from_edges(7, 2, [(0, 1, 1), (0, 2, 1), (3, 4, 1), (4, 5, 2), (5, 6, 1), (1, 6, 2)])
    for nodes in itertools.combinations(range(7), 3):
        assert se.b_tl(G, 1, nodes) == oracle.brute_b_tl(G, 1, nodes)


def test_b_td_examples():
    G = TemporalMultigraph.from_edges(6, 3, [(0, 2, 1), (0, 3, 1), (0, 4, 1), (1, 5, 1), (1, 2, 2)])
    assert se.b_td(G, "TD0", 0, (0, 1)) == 3 * 2 * 2 * 1
    assert se.b_td(TemporalMultigraph(6, 4), "TD1", 2, (0, 1, 2, 3)) == 16


def test_b_td0_level1_brute_force():
    G = TemporalMultigraph.from_edges(9, 2, [(0, 1, 1), (1, 2, 1), (2, 3, 2), (3, 4, 1), (4, 5, 1),
                                             (5, 6, 2), (6, 7, 1), (7, 8, 2)])
    for r in range(0, 4):
        for Y in itertools.combinations(range(9), r):
            assert se.disjoint_simple_pairs_avoiding(G, Y) == oracle.brute_b_td(G, "TD0", 1, Y)


def test_bruteforce_suite():
    res = suites.bruteforce()
    assert res.passed, res.summary


def test_compositions_match_enumeration():
    for k, parts, below in itertools.product(range(9), (2, 4), range(1, 5)):
        brute = sum(1 for t in itertools.product(range(below), repeat=parts) if sum(t) == k)
        assert se.compositions(k, parts, below) == brute


def bounds_for(M, T, Delta, M2, mu):
    s = SeqScalars(M, M2, Delta, Fraction(M2, M), Fraction(M2 * M2, M * M * T))
    return se.Bounds.build(s, T, mu)


def test_aux_empty_without_epsilon():
    s = scalars([3] * 60, 4)
    b = se.Bounds.build(s, 4, constants(None, s.Delta).mu)
    assert se.AuxDistribution("A", b).empty
    assert se.AuxDistribution("C", b).sample(make_rng(0)) is None


@pytest.mark.parametrize("family", ["A", "B", "C"])
@pytest.mark.parametrize("Delta,mu", [(5, 3), (7, 4), (8, 5)])
def test_aux_probabilities_sum_to_one(family, Delta, mu):
    b = bounds_for(M=4000, T=12, Delta=Delta, M2=4000 * (Delta - 1), mu=mu)
    dist = se.AuxDistribution(family, b)
    parts = 4 if family == "C" else 2
    total = dist.p_identity
    for sizes in itertools.product(range(Delta), repeat=parts):
        if max(sizes) < mu:
            continue
        k = sum(sizes)
        direct = dist.p_identity * Fraction(b.fbar_aux(k)) / Fraction(b.blow_aux(family, k))
        assert dist.probability(sizes) == direct
        total += direct
    assert total == 1


@pytest.mark.parametrize("M,fast", [(1500, False), (2000, True)])
def test_aux_lazy_identity_frequency(M, fast):
    # contexts where the auxiliary mass is far from negligible
    b = bounds_for(M=M, T=8, Delta=7, M2=M * 6, mu=5)
    dist = se.AuxDistribution("A", b)
    pI = float(dist.p_identity)
    assert 0.05 < pI < 0.95
    assert (dist.p_fast_identity is not None) == fast
    rng = make_rng(3)
    N = 100_000
    draws = [dist.sample(rng) for _ in range(N)]
    hits = sum(d is None for d in draws)
    assert abs(hits / N - pI) <= 3 * math.sqrt(pI * (1 - pI) / N)
    counts = Counter(d for d in draws if d is not None)
    for sizes, c in counts.most_common(3):
        p = float(dist.probability(sizes))
        assert abs(c / N - p) <= 4 * math.sqrt(p * (1 - p) / N)


def test_draw_aux_full_degree_never_rejects_on_index():
    # every node has degree Delta, so every uniform index hits a stub
    G = TemporalMultigraph.from_edges(12, 3, [(0, 5, 1), (0, 6, 1), (1, 7, 1), (1, 8, 2), (2, 9, 1), (2, 10, 2),
                                              (3, 11, 1), (3, 4, 2), (5, 6, 2), (7, 8, 1), (9, 10, 1), (11, 4, 3)])
    assert set(G.deg) == {2}
    rng = make_rng(4)
    stubs_hit = 0
    for _ in range(2000):
        idx = rng.integers(0, 2, size=2)
        stubs_hit += all(i < 2 for i in idx)
    assert stubs_hit == 2000


def test_aux_reusing_edge_rejected():
    G = TemporalMultigraph.from_edges(9, 2, [(1, 5, 1), (2, 6, 2), (1, 7, 1), (2, 8, 2)])
    anchors = (0, 1, 2, 3, 4)
    k = (1, 5, 1)
    assert se.aux_candidate(G, "A", anchors, (2, 0), [[k, k], []], [[(2, 6, 2), (2, 8, 2)], []],
                            [1, 2, 1, 2]) is None


def test_td1_probability_identities():
    b = bounds_for(M=400, T=6, Delta=3, M2=800, mu=3)
    p = se.td1_probability(b, 3, 3, Fraction(1), Fraction(1))
    assert 0 < p < 1
    X = p / (1 - p)
    direct = (Fraction(b.fbar_td1()) * b.blow_td0(0, 3, 3) * b.blow_td0(1) * b.blow_td0(2)) / (
        Fraction(b.fbar_td0()) * b.blow_td1(0, 3, 3) * b.blow_td1(1) * b.blow_td1(2))
    assert X == direct


def test_lower_bounds_hold_on_random_eligible_graphs():
    from temporal_tgen import pairing_model
    from temporal_tgen.seq_core import DegreeTuple

    D = DegreeTuple.regular(60, 3, 4)
    s = scalars(D.degrees, D.T)
    b = se.Bounds.build(s, D.T, constants(None, s.Delta).mu)
    rng = make_rng(5)
    checked = 0
    for _ in range(300):
        G = pairing_model.sample(D, rng)
        for v1, _, t1 in sorted(G.single_loops):
            S = se.draw_tl(G, v1, t1, rng)
            if S is None:
                continue
            H = G.copy()
            se.apply(H, S)
            if H.L > s.B_L or H.D_sum > 2 * s.B_D or H.has_heavy():
                continue
            _, _, v2, v3, v4, v5 = S.anchors
            assert b.blow_tl(1) <= se.b_tl(H, 1, (v1, v2, v3)) <= s.M
            if H.pair_multiplicity(v2, v4) < b.mu and H.pair_multiplicity(v3, v5) < b.mu:
                assert b.blow_tl(2) <= se.b_tl(H, 2, (v2, v3, v4, v5)) <= D.T ** 2
            checked += 1
    assert checked > 20
