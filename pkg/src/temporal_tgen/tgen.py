"""The T-Gen driver: configuration-model draw, screening, and both removal stages."""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import _kernels, pairing_model
from ._rng import bernoulli, make_rng
from .seq_core import (
    Constants,
    DegreeTuple,
    SeqScalars,
    TGenError,
    constants,
    main_path_eligible,
    scalars,
    validate,
)
from .switching_engine import (
    AuxDistribution,
    Bounds,
    SwitchingError,
    apply,
    aux_pairs,
    b_aux,
    b_td,
    b_tl,
    count_td1,
    count_tl,
    draw_aux,
    draw_td,
    draw_tl,
    td1_probability,
)
from .tmgraph import TemporalMultigraph

RESTART_CAUSES = (
    "initial-conditions",
    "stage1-f", "stage1-b", "stage1-aux", "stage1-mu",
    "stage2-f", "stage2-b", "stage2-aux", "stage2-mu",
    "fallback",
)


class RestartLimitExceeded(TGenError):
    pass


class _Restart(Exception):
    def __init__(self, cause: str):
        super().__init__(cause)
        self.cause = cause


@dataclass
class RunConfig:
    seed: int | None = None
    epsilon: float | Fraction | None = None
    max_restarts: int | None = None
    collect_trace: bool = False
    # compute exact forward counts when the raw space has at most this many points
    exact_f_limit: int = 0

    def __post_init__(self):
        if self.max_restarts is not None and self.max_restarts < 1:
            raise ValueError("max_restarts must be >= 1")


@dataclass
class RunStats:
    restarts_by_cause: Counter = field(default_factory=Counter)
    stage1_iterations: int = 0
    stage2_iterations: int = 0
    switch_counts: Counter = field(default_factory=Counter)
    aux_switch_counts: Counter = field(default_factory=Counter)
    bound_checks: Counter = field(default_factory=Counter)
    pairing_draws: int = 0
    used_fallback: bool = False
    used_simple_shortcut: bool = False
    used_main_path: bool = False
    elapsed: float = 0.0
    trace: list = field(default_factory=list)

    @property
    def restarts(self) -> int:
        return sum(self.restarts_by_cause.values())

    def merge(self, other: "RunStats") -> None:
        self.restarts_by_cause.update(other.restarts_by_cause)
        self.switch_counts.update(other.switch_counts)
        self.aux_switch_counts.update(other.aux_switch_counts)
        self.bound_checks.update(other.bound_checks)
        self.stage1_iterations += other.stage1_iterations
        self.stage2_iterations += other.stage2_iterations
        self.pairing_draws += other.pairing_draws
        self.elapsed += other.elapsed

    def to_json(self) -> dict:
        return {
            "restarts_by_cause": dict(self.restarts_by_cause),
            "stage1_iterations": self.stage1_iterations,
            "stage2_iterations": self.stage2_iterations,
            "switch_counts": dict(self.switch_counts),
            "aux_switch_counts": dict(self.aux_switch_counts),
            "pairing_draws": self.pairing_draws,
            "path": self.path,
            "elapsed": self.elapsed,
        }

    @property
    def path(self) -> str:
        if self.used_fallback:
            return "fallback"
        return "shortcut" if self.used_simple_shortcut else "main"


@dataclass(frozen=True)
class SimpleTemporalGraph:
    """Immutable simple temporal graph; nodes ``0..n-1``, timestamps ``1..T``."""

    n: int
    T: int
    edges: tuple[tuple[int, int, int], ...]

    def degrees(self) -> list[int]:
        d = [0] * self.n
        for u, v, _ in self.edges:
            d[u] += 1
            d[v] += 1
        return d

    def is_simple(self) -> bool:
        return all(u != v for u, v, _ in self.edges) and len(set(self.edges)) == len(self.edges)

    def matches(self, D: DegreeTuple) -> bool:
        return (
            self.n == D.n and self.T == D.T and self.is_simple()
            and all(1 <= t <= D.T for _, _, t in self.edges)
            and self.degrees() == list(D.degrees)
        )


# -- context --------------------------------------------------------------------

@lru_cache(maxsize=64)
def _aux(family: str, bounds: Bounds) -> AuxDistribution:
    return AuxDistribution(family, bounds)


class _Run:
    def __init__(self, D: DegreeTuple, s: SeqScalars, c: Constants, cfg: RunConfig, rng, stats: RunStats):
        self.D, self.s, self.c, self.cfg, self.rng, self.stats = D, s, c, cfg, rng, stats
        self.bounds = Bounds.build(s, D.T, c.mu)
        self.auxA = _aux("A", self.bounds)
        self.auxB = _aux("B", self.bounds)
        self.auxC = _aux("C", self.bounds)

    def trace(self, event: str, **payload):
        if self.cfg.collect_trace:
            self.stats.trace.append({"event": event, **payload})

    def restart(self, cause: str):
        self.trace("restart", cause=cause)
        raise _Restart(cause)

    def check(self, name: str, lo, value, hi) -> None:
        self.stats.bound_checks[name] += 1
        if not (lo <= value <= hi):
            raise SwitchingError(f"bound sandwich violated for {name}: {lo} <= {value} <= {hi}")

    def b_reject(self, lo, value, cause: str) -> None:
        if not bernoulli(self.rng, Fraction(lo) / Fraction(value)):
            self.restart(cause)

    def aux_step(self, G, family, dist, anchors, cause):
        """Draw the aux type; perform and b-check it when it is not the identity."""
        sizes = dist.sample(self.rng)
        self.trace("aux-type", family=family, sizes=list(sizes) if sizes else None)
        if sizes is None:
            return
        pairs = aux_pairs(family, anchors)
        if any(G.pair_multiplicity(p, q) >= 1 for p, q in pairs):
            self.restart(cause)
        k = sum(sizes)
        S = draw_aux(G, family, anchors, sizes, self.bounds.Delta, self.rng)
        if S is None:
            self.restart(cause)
        W_before = (G.L, G.D_sum, G.n_simple)
        apply(G, S)
        if (G.L, G.D_sum, G.n_simple) != W_before:
            raise SwitchingError(f"{family} switching changed the non-simple signature")
        self.stats.aux_switch_counts[family] += 1
        self.trace("switch", **S.to_json())
        ts, levels = b_aux(G, S)
        lo_e = self.bounds.blow_aux_edge(family, k)
        lo_t = self.bounds.blow_aux_ts(k)
        self.check(f"b_{family}_ts", lo_t, ts, G.T ** (2 * k))
        for v in levels:
            self.check(f"b_{family}_edge", lo_e, v, self.s.M)
        total = ts
        for v in levels:
            total *= v
        self.b_reject(lo_e**k * lo_t, total, cause)

    # -- stage 1 -------------------------------------------------------------

    def stage1(self, G: TemporalMultigraph) -> None:
        bd, T = self.bounds, G.T
        for v1, _, t1 in sorted(G.single_loops):
            self.stats.stage1_iterations += 1
            if self.cfg.exact_f_limit and bd.fbar_tl() <= self.cfg.exact_f_limit:
                self.check("f_TL", 0, count_tl(G, v1, t1), bd.fbar_tl())
            L0, D0 = G.L, G.D_sum
            S = draw_tl(G, v1, t1, self.rng)
            if S is None:
                self.restart("stage1-f")
            apply(G, S)
            if G.L != L0 - 1 or G.D_sum != D0 or G.has_heavy():
                raise SwitchingError("TL switching changed more than its loop")
            self.stats.switch_counts["TL"] += 1
            self.trace("switch", **S.to_json())
            _, _, v2, v3, v4, v5 = S.anchors
            if G.pair_multiplicity(v2, v4) >= bd.mu or G.pair_multiplicity(v3, v5) >= bd.mu:
                self.restart("stage1-mu")
            b2 = b_tl(G, 2, (v2, v3, v4, v5))
            self.check("b_TL_2", bd.blow_tl(2), b2, T * T)
            self.b_reject(bd.blow_tl(2), b2, "stage1-b")
            self.aux_step(G, "A", self.auxA, (v1, v2, v3, v4, v5), "stage1-aux")
            b1 = b_tl(G, 1, (v1, v2, v3))
            b0 = b_tl(G, 0, (v1,))
            lo1 = bd.blow_tl(1)
            lo0 = bd.blow_tl(0, G.simple_degree(v1))
            self.check("b_TL_1", lo1, b1, self.s.M)
            self.check("b_TL_0", lo0, b0, lo0)
            self.b_reject(lo0 * lo1, b0 * b1, "stage1-b")
        if G.L:
            raise SwitchingError("loops left after stage 1")

    # -- stage 2 -------------------------------------------------------------

    def stage2(self, G: TemporalMultigraph) -> None:
        bd, T, M = self.bounds, G.T, self.s.M
        for key in sorted(G.doubles):
            v1, v2, t1 = key
            self.stats.stage2_iterations += 1
            k1, k2 = G.simple_degree(v1) + 2, G.simple_degree(v2) + 2
            p1 = td1_probability(bd, k1, k2, self.auxB.p_identity, self.auxC.p_identity)
            kind = "TD1" if bernoulli(self.rng, p1) else "TD0"
            if kind == "TD1" and self.cfg.exact_f_limit and bd.fbar_td1() <= self.cfg.exact_f_limit:
                self.check("f_TD1", 0, count_td1(G, v1, v2, t1), bd.fbar_td1())
            L0, D0 = G.L, G.D_sum
            S = draw_td(G, v1, v2, t1, kind, self.rng)
            if S is None:
                self.restart("stage2-f")
            apply(G, S)
            left = G.temporal_multiplicity(v1, v2, t1)
            if G.L != L0 or G.D_sum != D0 - 2 or G.has_heavy() or left != (1 if kind == "TD1" else 0):
                raise SwitchingError(f"{kind} switching changed more than its double-edge")
            self.stats.switch_counts[kind] += 1
            self.trace("switch", **S.to_json())
            if kind == "TD1":
                v3, v4, v5, v6 = S.anchors[3:]
                if G.pair_multiplicity(v3, v5) >= bd.mu or G.pair_multiplicity(v4, v6) >= bd.mu:
                    self.restart("stage2-mu")
                b2 = b_td(G, "TD1", 2, (v3, v4, v5, v6))
                self.check("b_TD1_2", bd.blow_td1(2), b2, T**2)
                self.b_reject(bd.blow_td1(2), b2, "stage2-b")
                self.aux_step(G, "B", self.auxB, (v1, v2, v3, v4, v5, v6), "stage2-aux")
                b1 = b_td(G, "TD1", 1, (v1, v2, v3, v4))
                b0 = b_td(G, "TD1", 0, (v1, v2))
                lo1 = bd.blow_td1(1)
                lo0 = bd.blow_td1(0, G.simple_degree(v1), G.simple_degree(v2))
                self.check("b_TD1_1", lo1, b1, M)
            else:
                rest = S.anchors[3:]
                v3, v4, v5, v6, v7, v8, v9, v10 = rest
                pairs = ((v3, v7), (v4, v8), (v5, v9), (v6, v10))
                if any(G.pair_multiplicity(x, y) >= bd.mu for x, y in pairs):
                    self.restart("stage2-mu")
                b2 = b_td(G, "TD0", 2, rest)
                self.check("b_TD0_2", bd.blow_td0(2), b2, T**4)
                self.b_reject(bd.blow_td0(2), b2, "stage2-b")
                self.aux_step(G, "C", self.auxC, (v1, v2) + rest, "stage2-aux")
                b1 = b_td(G, "TD0", 1, (v1, v2, v3, v4, v5, v6))
                b0 = b_td(G, "TD0", 0, (v1, v2))
                lo1 = bd.blow_td0(1)
                lo0 = bd.blow_td0(0, G.simple_degree(v1), G.simple_degree(v2))
                self.check("b_TD0_1", lo1, b1, M * M)
            self.check(f"b_{kind}_0", lo0, b0, lo0)
            self.b_reject(lo0 * lo1, b0 * b1, "stage2-b")
        if not G.is_simple():
            raise SwitchingError("graph not simple after stage 2")


# -- public API -----------------------------------------------------------------

def initial_conditions(G: TemporalMultigraph, s: SeqScalars, c: Constants) -> bool:
    if G.L > s.B_L or Fraction(G.D_sum, 2) > s.B_D or G.has_heavy():
        return False
    if G.single_loops and max(G.loops_at) > c.lam:
        return False
    if G.doubles and max(G.doubles_at) > c.kappa:
        return False
    return True


def _freeze(n: int, T: int, edges) -> SimpleTemporalGraph:
    return SimpleTemporalGraph(n, T, tuple(sorted(edges)))


def generate(D: DegreeTuple, cfg: RunConfig | None = None, rng=None):
    """One uniform simple temporal graph matching ``D`` plus its run statistics."""
    cfg = cfg or RunConfig()
    validate(D)
    rng = make_rng(cfg.seed) if rng is None else rng
    s = scalars(D.degrees, D.T)
    c = constants(cfg.epsilon, s.Delta)
    stats = RunStats()
    start = time.perf_counter()
    stubs = _kernels.stub_labels(D.degrees)
    n, T = D.n, D.T

    def count_restart(cause):
        stats.restarts_by_cause[cause] += 1
        if cfg.max_restarts is not None and stats.restarts >= cfg.max_restarts:
            raise RestartLimitExceeded(f"gave up after {stats.restarts} restarts")

    if not main_path_eligible(D):
        stats.used_fallback = True
        while True:
            stats.pairing_draws += 1
            u, v, t = pairing_model.sample_arrays(D, rng, stubs)
            if _kernels.is_simple_pairing(u, v, t, n, T):
                out = _freeze(n, T, zip(u.tolist(), v.tolist(), t.tolist()))
                break
            count_restart("fallback")
    else:
        stats.used_main_path = True
        run = _Run(D, s, c, cfg, rng, stats)
        while True:
            stats.pairing_draws += 1
            u, v, t = pairing_model.sample_arrays(D, rng, stubs)
            loops, _, _ = _kernels.nonsimple_summary(u, v, t, n, T)
            if loops == 0 and _kernels.is_simple_pairing(u, v, t, n, T):
                stats.used_simple_shortcut = True
                out = _freeze(n, T, zip(u.tolist(), v.tolist(), t.tolist()))
                break
            if loops > s.B_L:
                count_restart("initial-conditions")
                continue
            G = TemporalMultigraph.from_arrays(n, T, u, v, t)
            if not initial_conditions(G, s, c):
                count_restart("initial-conditions")
                continue
            run.trace("start", loops=G.L, D_sum=G.D_sum)
            try:
                run.stage1(G)
                run.stage2(G)
            except _Restart as r:
                count_restart(r.cause)
                continue
            stats.used_simple_shortcut = False
            out = _freeze(n, T, G.pool)
            break
    stats.elapsed = time.perf_counter() - start
    if not out.matches(D):
        raise SwitchingError("emitted graph violates its postconditions")
    return out, stats


def _one(args):
    D, cfg, index = args
    return generate(D, cfg, make_rng(cfg.seed, index=index))


def generate_batch(D: DegreeTuple, count: int, cfg: RunConfig | None = None, jobs: int = 1):
    """``count`` samples; sample ``i`` uses the child stream ``(seed, i)``."""
    cfg = cfg or RunConfig()
    if cfg.seed is None:
        cfg = RunConfig(int(np.random.SeedSequence().entropy), cfg.epsilon, cfg.max_restarts,
                        cfg.collect_trace, cfg.exact_f_limit)
    tasks = [(D, cfg, i) for i in range(count)]
    if jobs > 1 and count > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as ex:
            return list(ex.map(_one, tasks, chunksize=max(1, count // (4 * jobs))))
    return [_one(t) for t in tasks]
