"""Switchings used by the two removal stages, with their forward and backward counts.

Every switching is drawn from an explicit "upper-bound space" (``fbar`` many
equally likely raw choices); a raw choice is accepted iff it is a valid
switching, which realizes the f-rejection exactly. Backward counts ``b`` are
evaluated on the graph after rewiring and come with lower bounds ``blow`` that
only depend on the degree tuple and on the non-simple signature.

Validity conditions (beyond the textbook definitions) that make every backward
count an exact inverse count:

* TL: additionally ``v4 != v3`` and ``v5 != v2`` and the two edges created at
  ``v1`` must differ.
* TD1: additionally ``v6 != v3`` and ``v5 != v4``.
* TD0: all ten nodes distinct.
* A/B/C: the new edges of a bundle must carry strictly increasing timestamps.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from ._rng import bernoulli, randbelow
from .seq_core import SeqScalars
from .tmgraph import Key, TemporalMultigraph, canon


class SwitchingError(AssertionError):
    """A switching invariant was violated (a bug, never an input problem)."""


@dataclass(frozen=True)
class SwitchingChoice:
    kind: str  # TL, TD1, TD0, A, B, C or I
    anchors: tuple
    removed: tuple[Key, ...] = ()
    created: tuple[Key, ...] = ()
    sizes: tuple[int, ...] = ()
    extra: dict = field(default_factory=dict, compare=False)

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "sizes": list(self.sizes),
            "anchors": list(self.anchors),
            "removed": [list(k) for k in self.removed],
            "created": [list(k) for k in self.created],
        }


IDENTITY = SwitchingChoice("I", ())


# -- bounds -------------------------------------------------------------------

@dataclass(frozen=True)
class Bounds:
    """Per-tuple constants entering every fbar and blow."""

    M: int
    T: int
    Delta: int
    B_L: Fraction
    B_D: Fraction
    mu: int  # effective multiplicity cap, min(mu, Delta)

    @classmethod
    def build(cls, s: SeqScalars, T: int, mu: int) -> "Bounds":
        return cls(s.M, T, s.Delta, s.B_L, s.B_D, min(mu, s.Delta))

    # forward spaces
    def fbar_tl(self) -> int:
        return self.M**2 * self.T**3

    def fbar_td1(self) -> int:
        return self.M**2 * self.T**3

    def fbar_td0(self) -> int:
        return self.M**4 * self.T**6

    def fbar_aux(self, k: int) -> int:
        return (self.Delta * self.T) ** (2 * k)

    # backward lower bounds
    def _ts(self, power: int) -> int:
        return (self.T - (self.mu - 1)) ** power

    def blow_tl(self, level: int, k1: int = 0):
        if level == 2:
            return self._ts(2)
        if level == 1:
            return self.M - 2 * self.B_L - 4 * self.B_D - 6 * self.Delta
        return k1 * (k1 - 1)

    def blow_td1(self, level: int, k1: int = 0, k2: int = 0):
        if level == 2:
            return self._ts(2)
        if level == 1:
            return self.M - 4 * self.B_D - 8 * self.Delta
        return k1 * k2

    def blow_td0(self, level: int, k1: int = 0, k2: int = 0):
        if level == 2:
            return self._ts(4)
        if level == 1:
            base = self.M - 4 * self.B_D
            return (base - 12 * self.Delta) * (base - 16 * self.Delta)
        return k1 * (k1 - 1) * k2 * (k2 - 1)

    def blow_aux_edge(self, family: str, k: int):
        """Lower bound for each of the ``k`` edge levels of an aux reversal."""
        if family == "A":
            return self.M - 2 * self.B_L - 4 * self.B_D - 4 * (k + 3) * self.Delta
        if family == "B":
            return self.M - 4 * self.B_D - 4 * (k + 3) * self.Delta
        return self.M - 4 * self.B_D - 4 * (k + 5) * self.Delta

    def blow_aux_ts(self, k: int) -> int:
        return (self.T - (self.Delta - 1)) ** (2 * k)

    def blow_aux(self, family: str, k: int):
        return self.blow_aux_edge(family, k) ** k * self.blow_aux_ts(k)


# -- helpers ------------------------------------------------------------------

def _absent(G: TemporalMultigraph, keys) -> bool:
    return all(G.temporal_multiplicity(*key) == 0 for key in keys)


def _simple_edge_count_avoiding(G: TemporalMultigraph, X) -> int:
    """Oriented simple edges with both endpoints outside ``X``."""
    touching = set()
    for x in set(X):
        touching.update(G.incident_simple(x))
    return 2 * (G.n_simple - len(touching))


def apply(G: TemporalMultigraph, choice: SwitchingChoice) -> None:
    """Rewire ``G`` according to ``choice`` after re-checking its contract."""
    if choice.kind == "I":
        return
    inc_r = Counter()
    for u, v, _ in choice.removed:
        inc_r[u] += 1
        inc_r[v] += 1
    inc_c = Counter()
    for u, v, _ in choice.created:
        inc_c[u] += 1
        inc_c[v] += 1
    if inc_r != inc_c:
        raise SwitchingError(f"{choice.kind} switching is not degree balanced")
    if len(set(choice.created)) != len(choice.created) or not _absent(G, choice.created):
        raise SwitchingError(f"{choice.kind} switching would create a non-simple edge")
    for key in choice.removed:
        G.remove_edge(*key)
    for key in choice.created:
        G.add_edge(*key)


# -- TL ------------------------------------------------------------------------

def tl_candidate(G, v1, t1, ea, eb, t4, t5, t6):
    """The TL switching given by raw choices, or ``None`` when invalid.

    ``ea = (v2, v4, t2)`` and ``eb = (v3, v5, t3)`` are oriented edges.
    """
    v2, v4, t2 = ea
    v3, v5, t3 = eb
    ka = canon(v2, v4, t2)
    kb = canon(v3, v5, t3)
    if ka == kb or not (G.is_simple_edge(ka) and G.is_simple_edge(kb)):
        return None
    if v1 in (v2, v3, v4, v5) or v4 == v5 or v4 == v3 or v5 == v2:
        return None
    c1, c2, c3 = canon(v1, v2, t4), canon(v1, v3, t5), canon(v4, v5, t6)
    if c1 == c2 or not _absent(G, (c1, c2, c3)):
        return None
    return SwitchingChoice("TL", (v1, t1, v2, v3, v4, v5), ((v1, v1, t1), ka, kb), (c1, c2, c3))


def draw_tl(G: TemporalMultigraph, v1: int, t1: int, rng):
    """Uniform point of the ``M^2 T^3`` space; ``None`` means f-reject."""
    if G.temporal_multiplicity(v1, v1, t1) != 1:
        raise SwitchingError(f"({v1}, {t1}) is not a temporal single-loop")
    ea = G.sample_oriented_edge(rng)
    eb = G.sample_oriented_edge(rng)
    t4, t5, t6 = (int(x) for x in rng.integers(1, G.T + 1, size=3))
    return tl_candidate(G, v1, t1, ea, eb, t4, t5, t6)


def _simple_oriented(G: TemporalMultigraph) -> list[Key]:
    out = []
    for key in G.keys():
        if G.is_simple_edge(key):
            u, v, t = key
            out += [(u, v, t), (v, u, t)]
    return out


def count_tl(G: TemporalMultigraph, v1: int, t1: int) -> int:
    """Exact ``f_TL``: valid edge pairs times free timestamp choices, O(M^2)."""
    if G.temporal_multiplicity(v1, v1, t1) != 1:
        raise SwitchingError(f"({v1}, {t1}) is not a temporal single-loop")
    T = G.T
    ori = _simple_oriented(G)
    total = 0
    for v2, v4, t2 in ori:
        if v1 in (v2, v4):
            continue
        for v3, v5, t3 in ori:
            if v1 in (v3, v5) or v4 == v5 or v4 == v3 or v5 == v2:
                continue
            if canon(v2, v4, t2) == canon(v3, v5, t3):
                continue
            f12 = T - G.distinct_timestamps(v1, v2)
            f13 = f12 - 1 if v2 == v3 else T - G.distinct_timestamps(v1, v3)
            total += f12 * f13 * (T - G.distinct_timestamps(v4, v5))
    return total


def b_tl(G: TemporalMultigraph, level: int, nodes) -> int:
    """Backward counts on the rewired graph.

    level 2: ``nodes = (v2, v3, v4, v5)``; level 1: ``(v1, v2, v3)``;
    level 0: ``(v1,)``.
    """
    T = G.T
    if level == 2:
        v2, v3, v4, v5 = nodes
        return (T - G.distinct_timestamps(v2, v4)) * (T - G.distinct_timestamps(v3, v5))
    if level == 1:
        return _simple_edge_count_avoiding(G, nodes)
    k1 = G.simple_degree(nodes[0])
    return k1 * (k1 - 1)


# -- TD1 / TD0 -----------------------------------------------------------------

def _double_key(G, v1, v2, t1) -> Key:
    key = canon(v1, v2, t1)
    if v1 == v2 or G.temporal_multiplicity(*key) != 2:
        raise SwitchingError(f"{key} is not a temporal double-edge")
    return key


def td1_candidate(G, v1, v2, t1, ea, eb, t4, t5, t6):
    v3, v5, t2 = ea
    v4, v6, t3 = eb
    ka, kb = canon(v3, v5, t2), canon(v4, v6, t3)
    if ka == kb or not (G.is_simple_edge(ka) and G.is_simple_edge(kb)):
        return None
    if {v3, v4, v5, v6} & {v1, v2} or v5 == v6 or v6 == v3 or v5 == v4:
        return None
    created = (canon(v1, v3, t4), canon(v2, v4, t5), canon(v5, v6, t6))
    if not _absent(G, created):
        return None
    return SwitchingChoice("TD1", (v1, v2, t1, v3, v4, v5, v6),
                           (canon(v1, v2, t1), ka, kb), created)


def td0_candidate(G, v1, v2, t1, edges, ts):
    """``edges`` are the oriented ``(v3,v7), (v4,v8), (v5,v9), (v6,v10)``."""
    (v3, v7, t2), (v4, v8, t3), (v5, v9, t4), (v6, v10, t5) = edges
    nodes = (v1, v2, v3, v4, v5, v6, v7, v8, v9, v10)
    if len(set(nodes)) != 10:
        return None
    removed = tuple(canon(a, b, t) for a, b, t in edges)
    if not all(G.is_simple_edge(k) for k in removed):
        return None
    t6, t7, t8, t9, t10, t11 = ts
    created = (canon(v1, v3, t6), canon(v2, v4, t7), canon(v1, v5, t8),
               canon(v2, v6, t9), canon(v7, v8, t10), canon(v9, v10, t11))
    if not _absent(G, created):
        return None
    dk = canon(v1, v2, t1)
    return SwitchingChoice("TD0", (v1, v2, t1) + nodes[2:], (dk, dk) + removed, created)


def draw_td(G: TemporalMultigraph, v1: int, v2: int, t1: int, kind: str, rng):
    _double_key(G, v1, v2, t1)
    if kind == "TD1":
        ea = G.sample_oriented_edge(rng)
        eb = G.sample_oriented_edge(rng)
        t4, t5, t6 = (int(x) for x in rng.integers(1, G.T + 1, size=3))
        return td1_candidate(G, v1, v2, t1, ea, eb, t4, t5, t6)
    if kind == "TD0":
        edges = [G.sample_oriented_edge(rng) for _ in range(4)]
        ts = [int(x) for x in rng.integers(1, G.T + 1, size=6)]
        return td0_candidate(G, v1, v2, t1, edges, ts)
    raise ValueError(f"unknown TD kind {kind!r}")


def count_td1(G: TemporalMultigraph, v1: int, v2: int, t1: int) -> int:
    """Exact ``f_TD1`` in O(M^2)."""
    _double_key(G, v1, v2, t1)
    T = G.T
    ori = [e for e in _simple_oriented(G) if v1 not in e[:2] and v2 not in e[:2]]
    total = 0
    for v3, v5, t2 in ori:
        for v4, v6, t3 in ori:
            if v5 == v6 or v6 == v3 or v5 == v4 or canon(v3, v5, t2) == canon(v4, v6, t3):
                continue
            total += ((T - G.distinct_timestamps(v1, v3)) * (T - G.distinct_timestamps(v2, v4))
                      * (T - G.distinct_timestamps(v5, v6)))
    return total


def count_td0(G: TemporalMultigraph, v1: int, v2: int, t1: int) -> int:
    """Exact ``f_TD0``; the timestamp part is counted per edge choice."""
    _double_key(G, v1, v2, t1)
    ori = [e for e in _simple_oriented(G) if v1 not in e[:2] and v2 not in e[:2]]
    T = G.T
    total = 0
    for e3 in ori:
        for e4 in ori:
            for e5 in ori:
                for e6 in ori:
                    edges = (e3, e4, e5, e6)
                    nodes = [v1, v2] + [e[0] for e in edges] + [e[1] for e in edges]
                    if len(set(nodes)) != 10:
                        continue
                    if not all(G.is_simple_edge(canon(*e)) for e in edges):
                        continue
                    (a3, a7, _), (a4, a8, _), (a5, a9, _), (a6, a10, _) = edges
                    pairs = ((v1, a3), (v2, a4), (v1, a5), (v2, a6), (a7, a8), (a9, a10))
                    ways = 1
                    for x, y in pairs:
                        ways *= T - G.distinct_timestamps(x, y)
                    total += ways
    return total


def b_td(G: TemporalMultigraph, kind: str, level: int, nodes) -> int:
    """Backward counts for TD1 / TD0 on the rewired graph.

    TD1 nodes: level 2 ``(v3, v4, v5, v6)``, level 1 ``(v1..v4)``, level 0
    ``(v1, v2)``. TD0 nodes: level 2 ``(v3..v10)``, level 1 ``(v1..v6)``,
    level 0 ``(v1, v2)``.
    """
    T = G.T
    if kind == "TD1":
        if level == 2:
            v3, v4, v5, v6 = nodes
            return (T - G.distinct_timestamps(v3, v5)) * (T - G.distinct_timestamps(v4, v6))
        if level == 1:
            return _simple_edge_count_avoiding(G, nodes)
        return G.simple_degree(nodes[0]) * G.simple_degree(nodes[1])
    if kind != "TD0":
        raise ValueError(f"unknown TD kind {kind!r}")
    if level == 2:
        v3, v4, v5, v6, v7, v8, v9, v10 = nodes
        out = 1
        for x, y in ((v3, v7), (v4, v8), (v5, v9), (v6, v10)):
            out *= T - G.distinct_timestamps(x, y)
        return out
    if level == 1:
        return disjoint_simple_pairs_avoiding(G, nodes)
    k1, k2 = G.simple_degree(nodes[0]), G.simple_degree(nodes[1])
    return k1 * (k1 - 1) * k2 * (k2 - 1)


def disjoint_simple_pairs_avoiding(G: TemporalMultigraph, Y) -> int:
    """Ordered pairs of node-disjoint oriented simple edges outside ``Y``.

    With ``k'`` and ``s'`` the simple degrees and pair counts restricted to
    nodes outside ``Y``, the count is ``A^2 - 4 sum k'^2 + 4 sum s'^2``.
    Only the neighbourhood of ``Y`` is visited.
    """
    Y = set(Y)
    touching = set()
    for y in Y:
        touching.update(G.incident_simple(y))
    A = 2 * (G.n_simple - len(touching))
    into_y = Counter()  # simple edges from an outside node into Y
    for u, v, _ in touching:
        if u not in Y:
            into_y[u] += 1
        elif v not in Y:
            into_y[v] += 1
    sq_k = G.sq_k - sum(G.k[y] ** 2 for y in Y)
    for x, c in into_y.items():
        sq_k += (G.k[x] - c) ** 2 - G.k[x] ** 2
    pairs = {(u, v) for u, v, _ in touching}
    sq_s = G.sq_sp - sum(G.sp[p] ** 2 for p in pairs)
    return A * A - 4 * sq_k + 4 * sq_s


# -- auxiliary switchings (A, B, C) ---------------------------------------------

def aux_pairs(family: str, anchors) -> list[tuple[int, int]]:
    """Node pairs that receive the new bundles.

    Anchors are ``(v1..v5)`` for A, ``(v1..v6)`` for B and ``(v1..v10)`` for C.
    """
    if family == "A":
        return [(anchors[1], anchors[3]), (anchors[2], anchors[4])]
    if family == "B":
        return [(anchors[2], anchors[4]), (anchors[3], anchors[5])]
    if family == "C":
        return [(anchors[2 + i], anchors[6 + i]) for i in range(4)]
    raise ValueError(f"unknown aux family {family!r}")


def _other(key: Key, x: int) -> int:
    return key[1] if key[0] == x else key[0]


def aux_candidate(G, family, anchors, sizes, picks_p, picks_q, ts):
    """Validate raw aux choices.

    ``picks_p[j]`` / ``picks_q[j]`` are the edge keys chosen at the two ends of
    bundle ``j``; ``ts`` holds ``2 * sum(sizes)`` timestamps, per bundle first
    the new bundle timestamps then the ones of the rewired outer edges.
    """
    X = set(anchors)
    pairs = aux_pairs(family, anchors)
    removed, created, outer = [], [], []
    seen = set()
    pos = 0
    for (p, q), s, ep, eq in zip(pairs, sizes, picks_p, picks_q):
        bundle_ts = ts[pos:pos + s]
        outer_ts = ts[pos + s:pos + 2 * s]
        pos += 2 * s
        if any(bundle_ts[i] >= bundle_ts[i + 1] for i in range(s - 1)):
            return None
        for i in range(s):
            kp, kq = ep[i], eq[i]
            if not (G.is_simple_edge(kp) and G.is_simple_edge(kq)):
                return None
            a, b = _other(kp, p), _other(kq, q)
            if a in X or b in X or a in seen or b in seen or a == b:
                return None
            seen.add(a)
            seen.add(b)
            removed += [kp, kq]
            created += [canon(p, q, bundle_ts[i]), canon(a, b, outer_ts[i])]
            outer.append((p, q, a, b))
    if not _absent(G, created):
        return None
    return SwitchingChoice(family, tuple(anchors), tuple(removed), tuple(created),
                           tuple(sizes), {"outer": outer})


def draw_aux(G: TemporalMultigraph, family: str, anchors, sizes, Delta: int, rng):
    """Uniform point of the ``(Delta T)^(2k)`` space; ``None`` means f-reject.

    An incident edge is chosen by a uniform index in ``[0, Delta)`` into the
    node's stub list, so nodes of degree below ``Delta`` reject with the
    matching probability.
    """
    for p, q in aux_pairs(family, anchors):
        if G.pair_multiplicity(p, q):
            raise SwitchingError(f"aux anchor pair {(p, q)} is not a non-edge")
    stubs = {}
    picks_p, picks_q = [], []
    for (p, q), s in zip(aux_pairs(family, anchors), sizes):
        for node, out in ((p, picks_p), (q, picks_q)):
            if node not in stubs:
                stubs[node] = G.incident_stubs(node)
            chosen = []
            for idx in rng.integers(0, Delta, size=s):
                if idx >= len(stubs[node]):
                    return None
                chosen.append(stubs[node][int(idx)])
            out.append(chosen)
    k = sum(sizes)
    ts = [int(x) for x in rng.integers(1, G.T + 1, size=2 * k)]
    return aux_candidate(G, family, anchors, sizes, picks_p, picks_q, ts)


def count_aux(G: TemporalMultigraph, family: str, anchors, sizes) -> int:
    """Exact ``f`` of an aux switching by scanning every stub and timestamp choice."""
    pairs = aux_pairs(family, anchors)
    slots = [(pq, j) for pq, s in zip(pairs, sizes) for j in range(s)]
    per_slot = [[(kp, kq) for kp in G.incident_stubs(p) for kq in G.incident_stubs(q)]
                for (p, q), _ in slots]
    k = sum(sizes)
    total = 0
    for picks in itertools.product(*per_slot):
        picks_p, picks_q, pos = [], [], 0
        for s in sizes:
            picks_p.append([a for a, _ in picks[pos:pos + s]])
            picks_q.append([b for _, b in picks[pos:pos + s]])
            pos += s
        for ts in itertools.product(range(1, G.T + 1), repeat=2 * k):
            if aux_candidate(G, family, anchors, sizes, picks_p, picks_q, list(ts)) is not None:
                total += 1
    return total


def b_aux(G: TemporalMultigraph, choice: SwitchingChoice) -> tuple[int, list[int]]:
    """Backward counts of an applied aux switching on the rewired graph.

    Returns ``(ts, levels)``: ``ts`` is the number of timestamp choices for
    the reversal of the actual outer edges, ``levels[j]`` the number of
    oriented simple edges avoiding the anchors and the outer edges before
    ``j``. Their product over a nested reversal is the total backward count.
    """
    T = G.T
    excluded = set(choice.anchors)
    ts = 1
    levels = []
    for p, q, a, b in choice.extra["outer"]:
        ts *= (T - G.distinct_timestamps(p, a)) * (T - G.distinct_timestamps(q, b))
        levels.append(_simple_edge_count_avoiding(G, excluded))
        excluded.update((a, b))
    return ts, levels


# -- type distributions ----------------------------------------------------------

def choose_weighted(rng, weights) -> int:
    """Index ``i`` with probability ``weights[i] / sum(weights)`` (exact)."""
    fr = [Fraction(w) for w in weights]
    den = 1
    for w in fr:
        den = den * w.denominator // math.gcd(den, w.denominator)
    ints = [int(w * den) for w in fr]
    u = randbelow(rng, sum(ints))
    for i, w in enumerate(ints):
        if u < w:
            return i
        u -= w
    raise AssertionError("unreachable")


def compositions(k: int, parts: int, below: int) -> int:
    """Tuples of ``parts`` integers in ``[0, below)`` summing to ``k``."""
    comb = math.comb
    if k < 0 or below <= 0:
        return 0
    total = 0
    for j in range(parts + 1):
        r = k - j * below
        if r < 0:
            break
        total += (-1) ** j * comb(parts, j) * comb(r + parts - 1, parts - 1)
    return total


class AuxDistribution:
    """Exact type distribution over ``Theta`` plus the identity.

    ``P(theta) = P(I) * fbar_k / blow_k`` for every size tuple of total ``k``.
    Sampling first tries the grouped fast path: with probability
    ``1 - sum_k g_k fbar_k / blow_k`` (``g_k`` an upper bound on the class
    size) the identity is returned without touching any class. Otherwise a
    class is picked from the grouped weights and thinned to its exact mass;
    the thinned-away mass is returned as the identity so the marginal law is
    exactly ``P``.
    """

    def __init__(self, family: str, bounds: Bounds):
        comb = math.comb
        self.family = family
        self.parts = 4 if family == "C" else 2
        D, mu = bounds.Delta, bounds.mu
        self.Delta, self.mu = D, mu
        self.classes: list[int] = []
        self.ratio: dict[int, Fraction] = {}
        self.count: dict[int, int] = {}
        for k in range(mu, self.parts * (D - 1) + 1):
            n_k = compositions(k, self.parts, D) - compositions(k, self.parts, mu)
            if n_k <= 0:
                continue
            lo = bounds.blow_aux(family, k)
            if lo <= 0 or bounds.blow_aux_edge(family, k) <= 0:
                raise SwitchingError(f"non-positive lower bound for {family} class {k}")
            self.classes.append(k)
            self.count[k] = n_k
            self.ratio[k] = Fraction(bounds.fbar_aux(k)) / Fraction(lo)
        R = sum(self.count[k] * self.ratio[k] for k in self.classes)
        self.p_identity = 1 / (1 + Fraction(R))
        group = (lambda k: k + 1) if self.parts == 2 else (lambda k: comb(k + 3, 3))
        self.grouped = {k: group(k) * self.ratio[k] for k in self.classes}
        gsum = sum(self.grouped.values(), Fraction(0))
        self.p_fast_identity = 1 - gsum if gsum <= 1 else None
        self._members: dict[int, list[tuple[int, ...]]] = {}

    @property
    def empty(self) -> bool:
        return not self.classes

    def probability(self, sizes) -> Fraction:
        k = sum(sizes)
        if len(sizes) != self.parts or k not in self.ratio or max(sizes) < self.mu or max(sizes) >= self.Delta:
            return Fraction(0)
        return self.p_identity * self.ratio[k]

    def members(self, k: int) -> list[tuple[int, ...]]:
        if k not in self._members:
            out = []

            def rec(prefix, left, slots):
                if slots == 0:
                    if left == 0 and max(prefix) >= self.mu:
                        out.append(tuple(prefix))
                    return
                for x in range(min(left, self.Delta - 1) + 1):
                    rec(prefix + [x], left - x, slots - 1)

            rec([], k, self.parts)
            assert len(out) == self.count[k]
            self._members[k] = out
        return self._members[k]

    def sample(self, rng):
        """A size tuple, or ``None`` for the identity."""
        if self.empty:
            return None
        if self.p_fast_identity is not None:
            if bernoulli(rng, self.p_fast_identity):
                return None
            ks = self.classes
            k = ks[choose_weighted(rng, [self.grouped[c] for c in ks])]
            exact = self.count[k] * self.p_identity * self.ratio[k]
            if not bernoulli(rng, exact / self.grouped[k]):
                return None
        else:
            if bernoulli(rng, self.p_identity):
                return None
            ks = self.classes
            k = ks[choose_weighted(rng, [self.count[c] * self.ratio[c] for c in ks])]
        mem = self.members(k)
        return mem[randbelow(rng, len(mem))]


def td1_probability(bounds: Bounds, k1: int, k2: int, pI_B: Fraction, pI_C: Fraction) -> Fraction:
    """``p(TD1) = X / (1 + X)`` with ``X = p(TD1) / p(TD0)``.

    ``k1, k2`` are the simple degrees of the double-edge ends after removal.
    """
    lo1 = bounds.blow_td1(0, k1, k2) * bounds.blow_td1(1) * bounds.blow_td1(2)
    lo0 = bounds.blow_td0(0, k1, k2) * bounds.blow_td0(1) * bounds.blow_td0(2)
    if lo1 <= 0 or lo0 <= 0:
        raise SwitchingError("non-positive TD lower bound")
    X = (Fraction(pI_C) / Fraction(pI_B)) * Fraction(bounds.fbar_td1() * lo0) / Fraction(bounds.fbar_td0() * lo1)
    return X / (1 + X)
