"""Degree tuples, derived scalars, algorithm constants and eligibility tests."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np


class TGenError(Exception):
    """Base class for input errors raised by the sampler."""


class InvalidParameter(TGenError, ValueError):
    pass


class OddDegreeSum(TGenError, ValueError):
    pass


class NotRealizable(TGenError, ValueError):
    pass


@dataclass(frozen=True)
class DegreeTuple:
    """Degree sequence ``degrees`` (stub counts) together with the lifetime ``T``."""

    degrees: tuple[int, ...]
    lifetime: int

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(int(d) for d in self.degrees))
        if any(d < 0 for d in self.degrees):
            raise InvalidParameter("degrees must be non-negative")
        if int(self.lifetime) < 1:
            raise InvalidParameter("lifetime must be >= 1")
        object.__setattr__(self, "lifetime", int(self.lifetime))

    @property
    def n(self) -> int:
        return len(self.degrees)

    @property
    def T(self) -> int:
        return self.lifetime

    @classmethod
    def regular(cls, n: int, d: int, lifetime: int) -> "DegreeTuple":
        return cls((d,) * n, lifetime)


@dataclass(frozen=True)
class SeqScalars:
    M: int
    M2: int
    Delta: int
    B_L: Fraction
    B_D: Fraction


@dataclass(frozen=True)
class Constants:
    epsilon: Fraction | None
    lam: int
    kappa: int
    mu: int
    eta: int | None


def scalars(d: Sequence[int], T: int) -> SeqScalars:
    M = sum(d)
    M2 = sum(x * (x - 1) for x in d)
    Delta = max(d, default=0)
    if M == 0:
        return SeqScalars(0, M2, Delta, Fraction(0), Fraction(0))
    B_L = Fraction(M2, M)
    B_D = Fraction(M2 * M2, M * M * T)
    return SeqScalars(M, M2, Delta, B_L, B_D)


def constants(epsilon, Delta: int) -> Constants:
    """Caps on loops, double-edges and multiplicity.

    ``epsilon`` is the exponent in ``Delta**(2+eps) = O(M)``; without it every
    cap falls back to ``Delta``.
    """
    if epsilon is None:
        return Constants(None, Delta, Delta, Delta, None)
    eps = Fraction(str(epsilon)) if isinstance(epsilon, float) else Fraction(epsilon)
    if eps <= 0:
        raise InvalidParameter(f"epsilon must be positive, got {epsilon}")
    inv = 1 / eps
    lam = math.floor(1 + inv)
    mu = math.floor(3 + 2 * inv)
    eta = math.floor(2 + 2 * inv)
    return Constants(eps, lam, lam, mu, eta)


def main_path_eligible(D: DegreeTuple) -> bool:
    """Whether the switching pipeline may be used; otherwise plain rejection is."""
    s = scalars(D.degrees, D.T)
    return (
        s.M > 16 * s.Delta**2 + 4 * s.Delta + 2 * s.B_L + 4 * s.B_D
        and D.T > s.Delta - 1
    )


def is_realizable(D: DegreeTuple) -> bool:
    """Existence of a loopless multigraph with pair multiplicities at most ``T``.

    Such a multigraph is exactly a simple temporal graph after giving parallel
    edges distinct timestamps, so this decides whether any simple temporal graph
    matches ``D``. The test is the capacitated Erdos-Gallai inequality
    (Chungphaisan's criterion) on the descending sequence.
    """
    d = np.asarray(D.degrees, dtype=np.int64)
    d = -np.sort(-d[d > 0])
    if int(d.sum()) % 2:
        return False
    n = d.size
    if n == 0:
        return True
    # multiplicities never exceed the maximum degree, so capping T changes nothing
    T = min(D.T, int(d[0]))
    if T * n * n >= 1 << 62:
        d = d.astype(object)
    k = np.arange(1, n + 1, dtype=np.int64)
    prefix = np.cumsum(d)
    suffix = np.concatenate((np.cumsum(d[::-1])[::-1], [0]))  # suffix[i] = sum d[i:]
    # q[k] = #{i : d_i >= T k}; for i >= k those entries contribute T k, the rest d_i
    q = np.searchsorted(-d, -T * k, side="right")
    big = np.maximum(q, k)
    rhs = T * k * (k - 1) + T * k * (big - k) + suffix[big]
    return bool(np.all(prefix <= rhs))


def validate(D: DegreeTuple) -> None:
    """Raise the typed error that generation would hit for ``D``."""
    if sum(D.degrees) % 2:
        raise OddDegreeSum(f"degree sum {sum(D.degrees)} is odd")
    if not is_realizable(D):
        raise NotRealizable(f"degree tuple is not realizable with lifetime {D.T}")


def parse_degree_lines(lines: Iterable[str]) -> list[int]:
    out = []
    for raw in lines:
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            value = int(line)
        except ValueError:
            raise InvalidParameter(f"not an integer degree: {raw.strip()!r}") from None
        if value < 0:
            raise InvalidParameter(f"negative degree: {value}")
        out.append(value)
    return out


def read_degree_file(path: str | Path) -> list[int]:
    """One degree per line, '#' starts a comment."""
    with open(path, encoding="utf-8") as fh:
        return parse_degree_lines(fh)
