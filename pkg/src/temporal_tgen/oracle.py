"""Ground truth for tests: exhaustive enumeration, exact expectations, brute-force
switching counts and goodness-of-fit statistics.

The brute-force counters work on a plain list of edges and never read the
incremental counters of :class:`TemporalMultigraph`, so they are independent of
the code they check.
"""

from __future__ import annotations

import itertools
import json
import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from scipy.special import gammaincc

from . import pairing_model
from .seq_core import DegreeTuple, TGenError

Edge = tuple[int, int, int]


class SpaceTooLarge(TGenError):
    pass


class SampleOutsideUniverse(AssertionError):
    """The sampler emitted a graph that does not belong to G(D)."""


# -- enumeration -------------------------------------------------------------------

@dataclass
class EnumerationUniverse:
    graphs: list[tuple[Edge, ...]]
    index: dict[tuple[Edge, ...], int] = field(default_factory=dict)

    def __post_init__(self):
        self.graphs = sorted(self.graphs)
        self.index = {g: i for i, g in enumerate(self.graphs)}
        if len(self.index) != len(self.graphs):
            raise AssertionError("duplicate graphs in universe")

    def __len__(self) -> int:
        return len(self.graphs)

    def __contains__(self, g) -> bool:
        return canonical(g) in self.index


def canonical(g) -> tuple[Edge, ...]:
    edges = g.edges if hasattr(g, "edges") else g
    return tuple(sorted((min(u, v), max(u, v), t) for u, v, t in edges))


def enumerate_simple(D: DegreeTuple) -> EnumerationUniverse:
    """All simple temporal graphs with degrees ``D.degrees`` and lifetime ``D.T``.

    Backtracking: the lowest node with residual degree takes its next edge to a
    higher node, with ``(partner, t)`` increasing so each edge set appears once.
    """
    d = list(D.degrees)
    M, n, T = sum(d), len(d), D.T
    if M > 8 or n > 6 or T > 3:
        raise SpaceTooLarge(f"enumeration limited to M <= 8, n <= 6, T <= 3 (got M={M}, n={n}, T={T})")
    out: list[tuple[Edge, ...]] = []
    if M % 2:
        return EnumerationUniverse(out)
    res = d[:]
    used: set[Edge] = set()
    edges: list[Edge] = []

    def rec():
        u = next((i for i in range(n) if res[i] > 0), None)
        if u is None:
            out.append(tuple(sorted(edges)))
            return
        last = edges[-1] if edges and edges[-1][0] == u else None
        for v in range(u + 1, n):
            if res[v] == 0:
                continue
            for t in range(1, T + 1):
                e = (u, v, t)
                if e in used or (last is not None and (v, t) <= last[1:]):
                    continue
                used.add(e)
                edges.append(e)
                res[u] -= 1
                res[v] -= 1
                rec()
                res[u] += 1
                res[v] += 1
                edges.pop()
                used.discard(e)

    rec()
    return EnumerationUniverse(out)


def simple_from_pairings(D: DegreeTuple) -> EnumerationUniverse:
    """Simple members of the pairing-enumeration image (independent route)."""
    graphs = []
    for g in pairing_model.enumerate_pairings(D):
        if all(u != v for u, v, _ in g) and len(set(g)) == len(g):
            graphs.append(tuple(g))
    return EnumerationUniverse(graphs)


def pairing_distribution(D: DegreeTuple) -> dict[tuple[Edge, ...], Fraction]:
    counts = pairing_model.enumerate_pairings(D)
    total = sum(counts.values())
    return {g: Fraction(c, total) for g, c in counts.items()}


# -- exact expectations --------------------------------------------------------------

def expected_loop_count(d) -> Fraction:
    """Mean number of loop edges in a uniform pairing: sum binom(d_i, 2) / (M - 1)."""
    M = sum(d)
    if M % 2 or M < 2:
        raise ValueError("need an even degree sum >= 2")
    return Fraction(sum(math.comb(x, 2) for x in d), M - 1)


def expected_parallel_pairs(d, T: int) -> Fraction:
    """Mean of ``sum_keys binom(w, 2)`` over cross keys in a uniform temporal pairing.

    Equals the expected number of temporal double-edges whenever triple-edges
    are absent.
    """
    M = sum(d)
    if M % 2 or M < 4:
        raise ValueError("need an even degree sum >= 4")
    s = sum(math.comb(a, 2) * math.comb(b, 2) for a, b in itertools.combinations(d, 2))
    return Fraction(2 * s, (M - 1) * (M - 3) * T)


# -- goodness of fit ---------------------------------------------------------------------

def chi2_sf(stat: float, df: int) -> float:
    if df <= 0:
        return 1.0
    return float(gammaincc(df / 2.0, stat / 2.0))


def chi_square_counts(observed, expected) -> tuple[float, float]:
    """Pearson statistic and p-value for counts against expected counts."""
    stat = sum((o - e) ** 2 / e for o, e in zip(observed, expected))
    return float(stat), chi2_sf(float(stat), len(observed) - 1)


def chi_square_uniformity(samples, universe: EnumerationUniverse) -> tuple[float, float, float]:
    """``(statistic, p_value, max_relative_deviation)`` against uniform on ``universe``."""
    counts = [0] * len(universe)
    N = 0
    for g in samples:
        key = canonical(g)
        pos = universe.index.get(key)
        if pos is None:
            raise SampleOutsideUniverse(f"sample {key} is not in the universe")
        counts[pos] += 1
        N += 1
    if N == 0 or not counts:
        raise ValueError("need samples and a non-empty universe")
    exp = N / len(counts)
    stat, p = chi_square_counts(counts, [exp] * len(counts))
    dev = max(abs(c - exp) / exp for c in counts)
    return stat, p, dev


def cell_counts(samples, n: int, T: int) -> tuple[list[int], int]:
    counts = [0] * (math.comb(n, 2) * T)
    N = 0
    for g in samples:
        N += 1
        for u, v, t in canonical(g):
            i = u * n - u * (u + 1) // 2 + (v - u - 1)
            counts[i * T + (t - 1)] += 1
    return counts, N


def marginal_symmetry_test(samples, D: DegreeTuple, return_counts: bool = False):
    """χ² test that every ``(pair, timestamp)`` cell is equally frequent.

    Valid for constant degrees, where the uniform law on G(D) is invariant
    under node and timestamp relabelling.
    """
    if len(set(D.degrees)) > 1:
        raise ValueError("marginal symmetry needs a regular degree tuple")
    counts, N = cell_counts(samples, D.n, D.T)
    cells = len(counts)
    exp = Fraction(N * sum(D.degrees), 2 * cells)
    if sum(counts) != exp * cells:
        raise AssertionError("cell totals disagree with the edge count")
    stat, p = chi_square_counts(counts, [float(exp)] * cells)
    if return_counts:
        return stat, p, counts
    return stat, p


def report(name: str, **payload) -> str:
    """One JSON line describing a test outcome."""
    def conv(x):
        if isinstance(x, Fraction):
            return str(x)
        if isinstance(x, tuple):
            return list(x)
        return x

    return json.dumps({"test": name, **{k: conv(v) for k, v in payload.items()}}, default=str, sort_keys=True)


# -- brute-force switching counts ------------------------------------------------------
# These scan a plain edge list. ``edges`` is a sequence of (u, v, t) with repeats.

def _edges(G) -> list[Edge]:
    if hasattr(G, "pool"):
        return [tuple(e) for e in G.pool]
    return [(min(u, v), max(u, v), t) for u, v, t in G]


class _Plain:
    """Read-only view recomputed from scratch from an edge list."""

    def __init__(self, G, T: int | None = None):
        self.edges = _edges(G)
        self.T = G.T if T is None else T
        self.w = Counter(self.edges)
        self.ts: dict[tuple[int, int], set[int]] = {}
        for u, v, t in self.edges:
            self.ts.setdefault((u, v), set()).add(t)
        self.simple = [e for e in self.edges if e[0] != e[1] and self.w[e] == 1]
        self.oriented = [(u, v, t) for u, v, t in self.simple] + [(v, u, t) for u, v, t in self.simple]

    def simple_key(self, a, b, t) -> bool:
        return a != b and self.w[(min(a, b), max(a, b), t)] == 1

    def absent(self, a, b, t) -> bool:
        return self.w[(min(a, b), max(a, b), t)] == 0

    def free_ts(self, a, b) -> int:
        return self.T - len(self.ts.get((min(a, b), max(a, b)), ()))

    def simple_at(self, x) -> list[Edge]:
        return [e for e in self.simple if x in e[:2]]

    def oriented_avoiding(self, X) -> int:
        X = set(X)
        return sum(1 for a, b, _ in self.oriented if a not in X and b not in X)


def _all_oriented(P: _Plain) -> list[Edge]:
    # raw space: every edge instance in either direction
    out = []
    for u, v, t in P.edges:
        out.append((u, v, t))
        out.append((v, u, t))
    return out


def brute_f_tl(G, v1: int, t1: int, T: int | None = None) -> int:
    """Valid raw TL choices at the single-loop ``(v1, t1)``."""
    P = _Plain(G, T)
    raw = _all_oriented(P)
    total = 0
    for (v2, v4, t2), (v3, v5, t3) in itertools.product(raw, repeat=2):
        if not (P.simple_key(v2, v4, t2) and P.simple_key(v3, v5, t3)):
            continue
        if {v2, v4} == {v3, v5} and t2 == t3:
            continue
        if v1 in (v2, v3, v4, v5) or len({v4, v5}) < 2 or v4 == v3 or v5 == v2:
            continue
        for t4, t5, t6 in itertools.product(range(1, P.T + 1), repeat=3):
            if v2 == v3 and t4 == t5:
                continue
            if P.absent(v1, v2, t4) and P.absent(v1, v3, t5) and P.absent(v4, v5, t6):
                total += 1
    return total


def brute_f_td1(G, v1: int, v2: int, t1: int, T: int | None = None) -> int:
    P = _Plain(G, T)
    raw = _all_oriented(P)
    total = 0
    for (v3, v5, t2), (v4, v6, t3) in itertools.product(raw, repeat=2):
        if not (P.simple_key(v3, v5, t2) and P.simple_key(v4, v6, t3)):
            continue
        if {v3, v5} == {v4, v6} and t2 == t3:
            continue
        if {v3, v4, v5, v6} & {v1, v2} or v5 == v6 or v6 == v3 or v5 == v4:
            continue
        for t4, t5, t6 in itertools.product(range(1, P.T + 1), repeat=3):
            if P.absent(v1, v3, t4) and P.absent(v2, v4, t5) and P.absent(v5, v6, t6):
                total += 1
    return total


def brute_f_td0(G, v1: int, v2: int, t1: int, T: int | None = None) -> int:
    P = _Plain(G, T)
    raw = _all_oriented(P)
    total = 0
    for picks in itertools.product(raw, repeat=4):
        nodes = [v1, v2] + [p[0] for p in picks] + [p[1] for p in picks]
        if len(set(nodes)) != 10 or not all(P.simple_key(*p) for p in picks):
            continue
        (v3, v7, _), (v4, v8, _), (v5, v9, _), (v6, v10, _) = picks
        new_pairs = ((v1, v3), (v2, v4), (v1, v5), (v2, v6), (v7, v8), (v9, v10))
        for ts in itertools.product(range(1, P.T + 1), repeat=6):
            if all(P.absent(a, b, t) for (a, b), t in zip(new_pairs, ts)):
                total += 1
    return total


def _aux_pairs(family, anchors):
    if family == "A":
        return [(anchors[1], anchors[3]), (anchors[2], anchors[4])]
    if family == "B":
        return [(anchors[2], anchors[4]), (anchors[3], anchors[5])]
    return [(anchors[2 + i], anchors[6 + i]) for i in range(4)]


def brute_f_aux(G, family: str, anchors, sizes, Delta: int, T: int | None = None) -> int:
    """Valid raw points of the ``(Delta T)^(2k)`` aux space."""
    P = _Plain(G, T)
    stubs: dict[int, list[Edge]] = {}
    for e in P.edges:
        stubs.setdefault(e[0], []).append(e)
        stubs.setdefault(e[1], []).append(e)
    pairs = _aux_pairs(family, anchors)
    X = set(anchors)
    slots = []  # (p, q) per edge of every bundle, in order
    for (p, q), s in zip(pairs, sizes):
        slots += [(p, q, j, s) for j in range(s)]
    k = len(slots)

    def other(e, x):
        return e[1] if e[0] == x else e[0]

    total = 0
    choices = []
    for p, q, _, _ in slots:
        sp = stubs.get(p, [])
        sq = stubs.get(q, [])
        choices.append([(ep, eq) for ep in sp for eq in sq])
    for picks in itertools.product(*choices):
        if any(not (P.simple_key(*ep) and P.simple_key(*eq)) for ep, eq in picks):
            continue
        outer = [other(ep, p) for (ep, _), (p, _, _, _) in zip(picks, slots)]
        outer += [other(eq, q) for (_, eq), (_, q, _, _) in zip(picks, slots)]
        a_nodes = outer[:k]
        b_nodes = outer[k:]
        flat = a_nodes + b_nodes
        if set(flat) & X or len(set(flat)) != 2 * k:
            continue
        for ts in itertools.product(range(1, P.T + 1), repeat=2 * k):
            ok = True
            new = []
            for j, (p, q, idx, s) in enumerate(slots):
                tb, to = ts[2 * j], ts[2 * j + 1]
                if idx > 0 and ts[2 * (j - 1)] >= tb:
                    ok = False
                    break
                new += [(p, q, tb), (a_nodes[j], b_nodes[j], to)]
            if ok and all(P.absent(*e) for e in new) and len({canonical([e])[0] for e in new}) == len(new):
                total += 1
    # each stub index in [0, Delta) beyond the degree is a rejection; the raw
    # space has Delta^(2k) T^(2k) points and every valid point is hit once
    return total


def brute_b_tl(G, level: int, nodes, T: int | None = None) -> int:
    P = _Plain(G, T)
    if level == 2:
        v2, v3, v4, v5 = nodes
        return P.free_ts(v2, v4) * P.free_ts(v3, v5)
    if level == 1:
        return P.oriented_avoiding(nodes)
    at = P.simple_at(nodes[0])
    return sum(1 for a, b in itertools.permutations(range(len(at)), 2))


def brute_b_td(G, kind: str, level: int, nodes, T: int | None = None) -> int:
    P = _Plain(G, T)
    if kind == "TD1":
        if level == 2:
            v3, v4, v5, v6 = nodes
            return P.free_ts(v3, v5) * P.free_ts(v4, v6)
        if level == 1:
            return P.oriented_avoiding(nodes)
        return len(P.simple_at(nodes[0])) * len(P.simple_at(nodes[1]))
    if level == 2:
        v3, v4, v5, v6, v7, v8, v9, v10 = nodes
        out = 1
        for a, b in ((v3, v7), (v4, v8), (v5, v9), (v6, v10)):
            out *= P.free_ts(a, b)
        return out
    if level == 1:
        Y = set(nodes)
        ok = [(a, b) for a, b, _ in P.oriented if a not in Y and b not in Y]
        return sum(1 for (a, b), (c, d) in itertools.product(ok, repeat=2) if len({a, b, c, d}) == 4)
    k1, k2 = len(P.simple_at(nodes[0])), len(P.simple_at(nodes[1]))
    return k1 * (k1 - 1) * k2 * (k2 - 1)


def brute_b_aux(G, anchors, outer, T: int | None = None) -> tuple[int, list[int]]:
    """``outer`` lists ``(p, q, a, b)`` per created bundle edge, in order."""
    P = _Plain(G, T)
    ts = 1
    levels = []
    excluded = set(anchors)
    for p, q, a, b in outer:
        ts *= P.free_ts(p, a) * P.free_ts(q, b)
        levels.append(P.oriented_avoiding(excluded))
        excluded |= {a, b}
    return ts, levels


__all__ = [
    "SpaceTooLarge", "SampleOutsideUniverse", "EnumerationUniverse", "canonical",
    "enumerate_simple", "simple_from_pairings", "pairing_distribution",
    "expected_loop_count", "expected_parallel_pairs", "chi2_sf", "chi_square_counts",
    "chi_square_uniformity", "cell_counts", "marginal_symmetry_test", "report",
    "brute_f_tl", "brute_f_td1", "brute_f_td0", "brute_f_aux",
    "brute_b_tl", "brute_b_td", "brute_b_aux",
]
