"""Seedable randomness with unbiased ranged draws and exact Bernoulli trials."""

from __future__ import annotations

from fractions import Fraction

import numpy as np

_BITS = 62
_WORD = 1 << _BITS


def make_rng(seed: int | None = None, index: int | None = None) -> np.random.Generator:
    """PCG64 generator; ``index`` derives an independent child stream per sample."""
    if index is None:
        ss = np.random.SeedSequence(seed)
    else:
        ss = np.random.SeedSequence(seed, spawn_key=(index,))
    return np.random.Generator(np.random.PCG64(ss))


def randbelow(rng: np.random.Generator, n: int) -> int:
    """Uniform integer in ``[0, n)`` for arbitrarily large ``n``."""
    if n <= 0:
        raise ValueError("randbelow needs n > 0")
    if n <= _WORD:
        return int(rng.integers(0, n))
    bits = n.bit_length()
    words = (bits + _BITS - 1) // _BITS
    excess = words * _BITS - bits
    while True:
        x = 0
        for w in rng.integers(0, _WORD, size=words):
            x = (x << _BITS) | int(w)
        x >>= excess
        if x < n:
            return x


def bernoulli(rng: np.random.Generator, p: Fraction | int) -> bool:
    """True with probability exactly ``p``; ``p`` must lie in [0, 1]."""
    p = Fraction(p)
    if p < 0 or p > 1:
        raise ValueError(f"probability out of range: {p}")
    if p == 1:
        return True
    if p == 0:
        return False
    return randbelow(rng, p.denominator) < p.numerator


def randint(rng: np.random.Generator, lo: int, hi: int) -> int:
    """Uniform integer in the closed range ``[lo, hi]``."""
    return lo + randbelow(rng, hi - lo + 1)
