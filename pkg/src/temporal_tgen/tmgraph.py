"""Mutable temporal multigraph with incremental non-simple-edge bookkeeping.

Nodes are 0-based internally, timestamps are 1-based (``1..T``). An edge key
is ``(u, v, t)`` with ``u <= v``; ``u == v`` encodes a loop. Parallel copies of
a key are separate instances in the edge pool.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from typing import Iterable, Sequence

import numpy as np

Key = tuple[int, int, int]


def canon(u: int, v: int, t: int) -> Key:
    return (u, v, t) if u <= v else (v, u, t)


class TemporalMultigraph:
    """Edge pool plus every derived count the switching algorithm reads.

    Derived fields (all updated in O(1) per edge operation):

    * ``w``: instance positions per key, so the temporal multiplicity is ``len``
    * ``m`` / ``c``: pair multiplicity and distinct-timestamp count
    * ``k``: per-node count of stubs on simple edges
    * ``L``: total loop multiplicity, ``D_sum``: multiplicity summed over
      temporal multi-edges (a double-edge contributes 2)
    * registries of temporal single-loops and temporal double-edges
    """

    def __init__(self, n: int, T: int):
        self.n = n
        self.T = T
        self.pool: list[Key] = []
        self._slots: dict[Key, list[int]] = {}
        self.m: dict[tuple[int, int], int] = defaultdict(int)
        self.c: dict[tuple[int, int], int] = defaultdict(int)
        self.deg = [0] * n
        self.k = [0] * n
        self.nbr: list[dict[Key, int]] = [dict() for _ in range(n)]
        self.n_simple = 0
        self.sp: dict[tuple[int, int], int] = {}  # simple edges per pair
        self.sq_k = 0  # sum of k_i^2
        self.sq_sp = 0  # sum of sp^2 over pairs
        self.L = 0
        self.D_sum = 0
        self.single_loops: set[Key] = set()
        self.doubles: set[Key] = set()
        self.loops_at = [0] * n
        self.doubles_at = [0] * n
        self.n_heavy_loops = 0  # loop keys with w >= 2
        self.n_heavy_multi = 0  # cross keys with w >= 3

    @classmethod
    def from_edges(cls, n: int, T: int, edges: Iterable[Sequence[int]]) -> "TemporalMultigraph":
        g = cls(n, T)
        for u, v, t in edges:
            g.add_edge(int(u), int(v), int(t))
        return g

    @classmethod
    def from_arrays(cls, n: int, T: int, us: np.ndarray, vs: np.ndarray, ts: np.ndarray) -> "TemporalMultigraph":
        """Bulk constructor: simple edges are loaded in one pass, the rest via ``_add``."""
        g = cls(n, T)
        us, vs, ts = (np.asarray(a, dtype=np.int64) for a in (us, vs, ts))
        u, v = np.minimum(us, vs), np.maximum(us, vs)
        if u.size == 0:
            return g
        _, inv, cnt = np.unique((u * n + v) * (T + 1) + ts, return_inverse=True, return_counts=True)
        simple = (cnt[inv] == 1) & (u != v)
        su, sv = u[simple], v[simple]
        pool = list(zip(su.tolist(), sv.tolist(), ts[simple].tolist()))
        g.pool = pool
        g._slots = {key: [i] for i, key in enumerate(pool)}
        nbr = g.nbr
        for key in pool:
            nbr[key[0]][key] = 1
            nbr[key[1]][key] = 1
        sdeg = np.bincount(su, minlength=n) + np.bincount(sv, minlength=n)
        g.deg = sdeg.tolist()
        g.k = sdeg.tolist()
        pairs = Counter(zip(su.tolist(), sv.tolist()))
        g.m.update(pairs)
        g.c.update(pairs)
        g.sp = dict(pairs)
        g.sq_k = int((sdeg * sdeg).sum())
        g.sq_sp = sum(x * x for x in pairs.values())
        g.n_simple = len(pool)
        rest = ~simple
        for key in zip(u[rest].tolist(), v[rest].tolist(), ts[rest].tolist()):
            g._add(key)
        return g

    def copy(self) -> "TemporalMultigraph":
        return TemporalMultigraph.from_edges(self.n, self.T, self.pool)

    # -- mutation -----------------------------------------------------------

    def add_edge(self, u: int, v: int, t: int) -> None:
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise IndexError(f"node out of range in {(u, v, t)}")
        if not 1 <= t <= self.T:
            raise IndexError(f"timestamp out of range in {(u, v, t)}")
        self._add(canon(u, v, t))

    def remove_edge(self, u: int, v: int, t: int) -> None:
        key = canon(u, v, t)
        if key not in self._slots:
            raise LookupError(f"edge {key} not present")
        self._remove(key)

    def _add(self, key: Key) -> None:
        u, v, t = key
        slots = self._slots.get(key)
        if slots is None:
            slots = self._slots[key] = []
        w_old = len(slots)
        slots.append(len(self.pool))
        self.pool.append(key)
        self.deg[u] += 1
        self.deg[v] += 1
        nu = self.nbr[u]
        nu[key] = nu.get(key, 0) + 1
        if u == v:
            nu[key] += 1
            self.L += 1
            if w_old == 0:
                self.single_loops.add(key)
                self.loops_at[u] += 1
            elif w_old == 1:
                self.single_loops.discard(key)
                self.loops_at[u] -= 1
                self.n_heavy_loops += 1
            return
        nv = self.nbr[v]
        nv[key] = nv.get(key, 0) + 1
        pair = (u, v)
        self.m[pair] += 1
        if w_old == 0:
            self.c[pair] += 1
            self._simple(u, v, 1)
        elif w_old == 1:
            self._simple(u, v, -1)
            self.D_sum += 2
            self.doubles.add(key)
            self.doubles_at[u] += 1
            self.doubles_at[v] += 1
        elif w_old == 2:
            self.D_sum += 1
            self.doubles.discard(key)
            self.doubles_at[u] -= 1
            self.doubles_at[v] -= 1
            self.n_heavy_multi += 1
        else:
            self.D_sum += 1

    def _simple(self, u: int, v: int, d: int) -> None:
        k = self.k
        self.sq_k += d * (2 * (k[u] + k[v]) + 2 * d)
        k[u] += d
        k[v] += d
        s = self.sp.get((u, v), 0)
        self.sq_sp += d * (2 * s + d)
        if s + d:
            self.sp[(u, v)] = s + d
        else:
            del self.sp[(u, v)]
        self.n_simple += d

    def _remove(self, key: Key) -> None:
        u, v, t = key
        slots = self._slots[key]
        pos = slots.pop()
        w_new = len(slots)
        if w_new == 0:
            del self._slots[key]
        last = self.pool.pop()
        if pos != len(self.pool):
            self.pool[pos] = last
            lslots = self._slots[last]
            lslots[lslots.index(len(self.pool))] = pos
        self.deg[u] -= 1
        self.deg[v] -= 1
        nu = self.nbr[u]
        if u == v:
            nu[key] -= 2
            if nu[key] == 0:
                del nu[key]
            self.L -= 1
            if w_new == 0:
                self.single_loops.discard(key)
                self.loops_at[u] -= 1
            elif w_new == 1:
                self.single_loops.add(key)
                self.loops_at[u] += 1
                self.n_heavy_loops -= 1
            return
        nu[key] -= 1
        if nu[key] == 0:
            del nu[key]
        nv = self.nbr[v]
        nv[key] -= 1
        if nv[key] == 0:
            del nv[key]
        pair = (u, v)
        self.m[pair] -= 1
        if self.m[pair] == 0:
            del self.m[pair]
        if w_new == 0:
            self.c[pair] -= 1
            if self.c[pair] == 0:
                del self.c[pair]
            self._simple(u, v, -1)
        elif w_new == 1:
            self._simple(u, v, 1)
            self.D_sum -= 2
            self.doubles.discard(key)
            self.doubles_at[u] -= 1
            self.doubles_at[v] -= 1
        elif w_new == 2:
            self.D_sum -= 1
            self.doubles.add(key)
            self.doubles_at[u] += 1
            self.doubles_at[v] += 1
            self.n_heavy_multi -= 1
        else:
            self.D_sum -= 1

    # -- queries ------------------------------------------------------------

    @property
    def num_edges(self) -> int:
        return len(self.pool)

    def temporal_multiplicity(self, u: int, v: int, t: int) -> int:
        s = self._slots.get(canon(u, v, t))
        return len(s) if s else 0

    def pair_multiplicity(self, u: int, v: int) -> int:
        if u > v:
            u, v = v, u
        return self.m.get((u, v), 0)

    def distinct_timestamps(self, u: int, v: int) -> int:
        if u > v:
            u, v = v, u
        return self.c.get((u, v), 0)

    def simple_degree(self, i: int) -> int:
        return self.k[i]

    def is_simple_edge(self, key: Key) -> bool:
        return key[0] != key[1] and self.temporal_multiplicity(*key) == 1

    def is_simple(self) -> bool:
        return self.L == 0 and self.D_sum == 0

    def has_heavy(self) -> bool:
        """Any loop with w >= 2 or any temporal multi-edge with w >= 3."""
        return self.n_heavy_loops > 0 or self.n_heavy_multi > 0

    def single_loop_count(self, i: int) -> int:
        return self.loops_at[i]

    def double_edge_count(self, i: int) -> int:
        return self.doubles_at[i]

    def keys(self):
        return self._slots.keys()

    def incident_simple(self, x: int):
        """Simple edge keys at ``x``."""
        for key in self.nbr[x]:
            if key[0] != key[1] and len(self._slots[key]) == 1:
                yield key

    def incident_stubs(self, x: int) -> list[Key]:
        """Incident keys repeated once per stub (loops twice per copy)."""
        out = []
        for key, cnt in self.nbr[x].items():
            out.extend([key] * cnt)
        return out

    def sample_oriented_edge(self, rng) -> tuple[int, int, int]:
        """Uniform oriented stub: returns ``(tail, head, t)``.

        Each of the ``M = 2|E|`` orientations has probability ``1/M``.
        """
        if not self.pool:
            raise ValueError("cannot sample from an empty graph")
        i = int(rng.integers(0, 2 * len(self.pool)))
        u, v, t = self.pool[i >> 1]
        return (v, u, t) if i & 1 else (u, v, t)

    def oriented_edge_at(self, i: int) -> tuple[int, int, int]:
        u, v, t = self.pool[i >> 1]
        return (v, u, t) if i & 1 else (u, v, t)

    def degrees(self) -> list[int]:
        return list(self.deg)

    def sorted_edges(self) -> list[Key]:
        return sorted(self.pool)

    def edge_counter(self) -> Counter:
        return Counter(self.pool)

    def check_invariants(self) -> None:
        """Recompute every derived field from the pool and compare."""
        ref = TemporalMultigraph(self.n, self.T)
        for key in self.pool:
            ref._add(key)
        assert Counter(self.pool) == Counter(ref.pool)
        w = Counter(self.pool)
        assert {k: len(s) for k, s in self._slots.items()} == dict(w)
        for key, slots in self._slots.items():
            assert all(self.pool[p] == key for p in slots)
        m = Counter()
        c = Counter()
        for (u, v, t), cnt in w.items():
            if u != v:
                m[(u, v)] += cnt
                c[(u, v)] += 1
        assert dict(self.m) == dict(m)
        assert dict(self.c) == dict(c)
        k = [0] * self.n
        deg = [0] * self.n
        for (u, v, t), cnt in w.items():
            deg[u] += cnt
            deg[v] += cnt
            if u != v and cnt == 1:
                k[u] += 1
                k[v] += 1
        assert self.k == k and self.deg == deg
        assert self.L == sum(cnt for (u, v, t), cnt in w.items() if u == v)
        assert self.D_sum == sum(cnt for (u, v, t), cnt in w.items() if u != v and cnt >= 2)
        assert self.single_loops == {k for k, cnt in w.items() if k[0] == k[1] and cnt == 1}
        assert self.doubles == {k for k, cnt in w.items() if k[0] != k[1] and cnt == 2}
        assert self.loops_at == ref.loops_at and self.doubles_at == ref.doubles_at
        assert self.n_simple == sum(1 for k, cnt in w.items() if k[0] != k[1] and cnt == 1)
        assert self.n_heavy_loops == sum(1 for k, cnt in w.items() if k[0] == k[1] and cnt >= 2)
        assert self.n_heavy_multi == sum(1 for k, cnt in w.items() if k[0] != k[1] and cnt >= 3)
        assert [dict(x) for x in self.nbr] == [dict(x) for x in ref.nbr]
        sp = Counter()
        for (u, v, t), cnt in w.items():
            if u != v and cnt == 1:
                sp[(u, v)] += 1
        assert self.sp == dict(sp)
        assert self.sq_k == sum(x * x for x in k)
        assert self.sq_sp == sum(x * x for x in sp.values())
