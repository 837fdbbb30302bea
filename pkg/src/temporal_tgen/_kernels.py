"""Hot numeric kernels for the pairing model.

Each kernel has a numba ``@njit`` version and a pure-numpy version with the
same contract. Set ``TGEN_DISABLE_NUMBA=1`` to force the numpy path (numba is
also skipped silently when it cannot be imported).
"""

from __future__ import annotations

import os

import numpy as np

_DISABLED = os.environ.get("TGEN_DISABLE_NUMBA", "").strip().lower() in {"1", "true", "yes"}

try:
    if _DISABLED:
        raise ImportError
    from numba import njit
except ImportError:  # pragma: no cover - depends on environment
    njit = None

USING_NUMBA = njit is not None


def stub_labels(degrees) -> np.ndarray:
    """Urn contents: node ``i`` repeated ``d_i`` times."""
    d = np.asarray(degrees, dtype=np.int64)
    return np.repeat(np.arange(d.size, dtype=np.int64), d)


# -- numpy implementations --------------------------------------------------

def _pair_stubs_np(stubs, perm, times):
    drawn = stubs[perm].reshape(-1, 2)
    u = drawn.min(axis=1)
    v = drawn.max(axis=1)
    return u, v, times.astype(np.int64, copy=False)


def _nonsimple_np(u, v, t, n, T):
    if u.size == 0:
        return 0, 0, 0
    loops = int(np.count_nonzero(u == v))
    keys = (u * n + v) * (T + 1) + t
    keys.sort()
    same = keys[1:] == keys[:-1]
    if not same.any():
        return loops, 0, 1
    # run-length of repeated keys
    starts = np.flatnonzero(np.concatenate(([True], ~same)))
    runs = np.diff(np.append(starts, keys.size))
    return loops, int(runs[runs > 1].sum()), int(runs.max())


# -- numba implementations --------------------------------------------------

def _pair_stubs_loop(stubs, perm, times):
    h = perm.size // 2
    u = np.empty(h, dtype=np.int64)
    v = np.empty(h, dtype=np.int64)
    for i in range(h):
        a = stubs[perm[2 * i]]
        b = stubs[perm[2 * i + 1]]
        if a <= b:
            u[i] = a
            v[i] = b
        else:
            u[i] = b
            v[i] = a
    return u, v, times.astype(np.int64)


def _nonsimple_loop(u, v, t, n, T):
    h = u.size
    if h == 0:
        return 0, 0, 0
    loops = 0
    keys = np.empty(h, dtype=np.int64)
    for i in range(h):
        if u[i] == v[i]:
            loops += 1
        keys[i] = (u[i] * n + v[i]) * (T + 1) + t[i]
    keys.sort()
    multi = 0
    max_w = 1
    run = 1
    for i in range(1, h + 1):
        if i < h and keys[i] == keys[i - 1]:
            run += 1
            continue
        if run > 1:
            multi += run
        if run > max_w:
            max_w = run
        run = 1
    return loops, multi, max_w


if USING_NUMBA:
    _pair_stubs_nb = njit(cache=True)(_pair_stubs_loop)
    _nonsimple_nb = njit(cache=True)(_nonsimple_loop)
    pair_stubs = _pair_stubs_nb
    nonsimple_summary = _nonsimple_nb
else:
    pair_stubs = _pair_stubs_np
    nonsimple_summary = _nonsimple_np

pair_stubs_numpy = _pair_stubs_np
nonsimple_summary_numpy = _nonsimple_np


def draw_pairing(stubs: np.ndarray, T: int, rng):
    """One uniform temporal configuration as parallel ``(u, v, t)`` arrays."""
    perm = rng.permutation(stubs.size)
    times = rng.integers(1, T + 1, size=stubs.size // 2)
    return pair_stubs(stubs, perm, times)


def is_simple_pairing(u, v, t, n: int, T: int) -> bool:
    loops, _, max_w = nonsimple_summary(u, v, t, n, T)
    return loops == 0 and max_w <= 1
