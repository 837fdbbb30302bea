"""Command-line frontend: generate, check, enumerate and selftest."""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from . import oracle
from .seq_core import (
    DegreeTuple,
    InvalidParameter,
    NotRealizable,
    OddDegreeSum,
    TGenError,
    constants,
    is_realizable,
    main_path_eligible,
    parse_degree_lines,
    read_degree_file,
    scalars,
)
from .tgen import RestartLimitExceeded, RunConfig, generate_batch

EXIT_OK, EXIT_FAIL, EXIT_NOT_REALIZABLE, EXIT_INVALID = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


class UsageError(Exception):
    pass


def _add_degree_source(p):
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--degrees", help='comma-separated degrees, e.g. "2,2,2"')
    src.add_argument("--degree-file", help="file with one degree per line ('#' comments allowed)")
    src.add_argument("--regular", help="n,d for the d-regular tuple on n nodes")
    p.add_argument("--lifetime", "-T", type=int, required=True, help="number of timestamps T")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tgen", description="Uniform sampler for simple temporal graphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("generate", help="sample graphs")
    _add_degree_source(g)
    g.add_argument("--samples", "-n", type=int, default=1)
    g.add_argument("--seed", type=int)
    g.add_argument("--epsilon", type=float, help="exponent with Delta^(2+eps) = O(M); sets the caps")
    g.add_argument("--max-restarts", type=int)
    g.add_argument("--output", "-o", help="output file (default stdout)")
    g.add_argument("--format", choices=["tsv", "jsonl"], default="tsv")
    g.add_argument("--jobs", "-j", type=int, default=os.cpu_count() or 1)
    g.add_argument("--trace", help="write a JSON-lines trace of every switching and rejection here")

    c = sub.add_parser("check", help="report realizability, scalars and the chosen path")
    _add_degree_source(c)
    c.add_argument("--epsilon", type=float)

    e = sub.add_parser("enumerate", help="enumerate every simple temporal graph of a tiny tuple")
    _add_degree_source(e)
    e.add_argument("--list", action="store_true", help="print every graph")

    from .suites import SUITES

    s = sub.add_parser("selftest", help="run statistical self-tests")
    s.add_argument("--suite", choices=sorted(SUITES) + ["all"], default="uniformity-tiny")
    s.add_argument("--samples", type=int, help="override the suite's sample count")
    s.add_argument("--seed", type=int)
    s.add_argument("--json", action="store_true", help="print JSON reports instead of text")
    return parser


def degree_tuple(args) -> DegreeTuple:
    if args.lifetime is None or args.lifetime < 1:
        raise UsageError("--lifetime must be >= 1")
    try:
        if args.degrees is not None:
            degrees = parse_degree_lines(args.degrees.replace(",", "\n").splitlines())
        elif args.degree_file is not None:
            degrees = read_degree_file(args.degree_file)
        else:
            parts = args.regular.split(",")
            if len(parts) != 2:
                raise UsageError("--regular expects n,d")
            n, d = (int(x) for x in parts)
            if n < 1 or d < 0:
                raise UsageError("--regular needs n >= 1 and d >= 0")
            degrees = [d] * n
    except (ValueError, OSError) as exc:
        raise UsageError(str(exc)) from exc
    if not degrees:
        raise UsageError("empty degree sequence")
    return DegreeTuple(tuple(degrees), args.lifetime)


def format_tsv(g, D: DegreeTuple, index: int, seed: int) -> str:
    lines = [f"# n={D.n} m={len(g.edges)} T={D.T} sample={index} seed={seed}"]
    lines += [f"{u + 1}\t{v + 1}\t{t}" for u, v, t in g.edges]
    return "\n".join(lines) + "\n"


def parse_tsv(text: str) -> list[tuple[dict, list[tuple[int, int, int]]]]:
    """Inverse of the TSV writer; returns 1-based edges per sample."""
    out = []
    for block in text.strip().split("\n\n"):
        rows = block.strip().splitlines()
        if not rows:
            continue
        header = dict(kv.split("=", 1) for kv in rows[0].lstrip("# ").split())
        edges = [tuple(int(x) for x in r.split("\t")) for r in rows[1:]]
        out.append((header, edges))
    return out


def cmd_generate(args) -> int:
    D = degree_tuple(args)
    if args.samples < 1:
        raise UsageError("--samples must be >= 1")
    seed = args.seed
    if seed is None:
        seed = int(np.random.SeedSequence().entropy % (1 << 63))
        print(f"seed: {seed}", file=sys.stderr)
    cfg = RunConfig(seed=seed, epsilon=args.epsilon, max_restarts=args.max_restarts,
                    collect_trace=bool(args.trace))
    results = generate_batch(D, args.samples, cfg, jobs=max(1, args.jobs))
    chunks = []
    for i, (g, stats) in enumerate(results):
        if args.format == "tsv":
            chunks.append(format_tsv(g, D, i, seed))
        else:
            stats_json = stats.to_json()
            stats_json.pop("elapsed", None)
            chunks.append(json.dumps({
                "sample": i, "seed": seed, "nodes": D.n, "lifetime": D.T,
                "edges": [[u + 1, v + 1, t] for u, v, t in g.edges],
                "stats": stats_json,
            }, sort_keys=True) + "\n")
    text = ("\n" if args.format == "tsv" else "").join(chunks)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.trace:
        with open(args.trace, "w", encoding="utf-8") as fh:
            for i, (_, stats) in enumerate(results):
                for event in stats.trace:
                    fh.write(json.dumps({"sample": i, **event}, sort_keys=True) + "\n")
    return EXIT_OK


def cmd_check(args) -> int:
    D = degree_tuple(args)
    s = scalars(D.degrees, D.T)
    if s.M % 2:
        print("realizable: false (odd degree sum)")
        return EXIT_NOT_REALIZABLE
    if not is_realizable(D):
        print("realizable: false, not realizable with this lifetime")
        return EXIT_NOT_REALIZABLE
    c = constants(args.epsilon, s.Delta)
    path = "main" if main_path_eligible(D) else "fallback"
    print(f"realizable: true, path: {path}")
    print(f"n={D.n} T={D.T} M={s.M} M2={s.M2} Delta={s.Delta} B_L={s.B_L} B_D={s.B_D}")
    print(f"lambda={c.lam} kappa={c.kappa} mu={c.mu} eta={c.eta}")
    return EXIT_OK


def cmd_enumerate(args) -> int:
    D = degree_tuple(args)
    universe = oracle.enumerate_simple(D)
    print(f"count: {len(universe)}")
    if args.list:
        for g in universe.graphs:
            print(" ".join(f"{u + 1}-{v + 1}@{t}" for u, v, t in g))
    return EXIT_OK


def cmd_selftest(args) -> int:
    from .suites import SAMPLE_ARG, SUITES

    names = sorted(SUITES) if args.suite == "all" else [args.suite]
    ok = True
    for name in names:
        kwargs = {}
        if args.seed is not None:
            kwargs["seed"] = args.seed
        if args.samples is not None and name in SAMPLE_ARG:
            kwargs[SAMPLE_ARG[name]] = args.samples
        result = SUITES[name](**kwargs)
        print(result.to_json() if args.json else result.line(), flush=True)
        ok = ok and result.passed
    return EXIT_OK if ok else EXIT_FAIL


COMMANDS = {"generate": cmd_generate, "check": cmd_check, "enumerate": cmd_enumerate, "selftest": cmd_selftest}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except NotRealizable as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_REALIZABLE
    except OddDegreeSum as exc:
        print(f"error: not realizable: {exc}", file=sys.stderr)
        return EXIT_NOT_REALIZABLE
    except (UsageError, InvalidParameter, oracle.SpaceTooLarge) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except RestartLimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except TGenError as exc:  # pragma: no cover - defensive
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
