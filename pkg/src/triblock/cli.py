"""Command-line surface: check, aut, rearrange, beta, oracle, fuzz.

Exit codes: 0 = witness/success, 10 = no witness found, 20 = method
infeasible for the input, 2 = input or usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .arrange import Infeasible, rearrange
from .candidates import candidate_set_for_block
from .fuzz import MODE_BOTH, run_trials
from .graphs import Graph, ParseError, parse_edge_list
from .oracle import (
    OracleSizeError,
    brute_force_automorphisms,
    brute_force_isomorphism,
)
from .perms import CapExceeded, closure
from .pipeline import (
    DEFAULT_CAP,
    DEFAULT_RETRY_BUDGET,
    KIND_INFEASIBLE,
    KIND_WITNESS,
    MODE_COMPRESSED,
    MODE_EXACT,
    CandidateCapExceeded,
    Options,
    automorphism_generators,
    decide,
)

EXIT_OK = 0
EXIT_NO_WITNESS = 10
EXIT_INFEASIBLE = 20
EXIT_INPUT = 2


class _InputError(Exception):
    pass


def _default_seed() -> int:
    raw = os.environ.get("TRIBLOCK_SEED", "0")
    try:
        return int(raw)
    except ValueError as exc:
        raise _InputError(f"TRIBLOCK_SEED is not an integer: {raw!r}") from exc


def _read_graph(path: str) -> Graph:
    try:
        with open(path, "rb") as fh:
            return parse_edge_list(fh.read())
    except OSError as exc:
        raise _InputError(f"{path}: {exc.strerror or exc}") from exc
    except ParseError as exc:
        raise _InputError(f"{path}: {exc}") from exc


def _emit(payload: dict, as_json: bool, lines: list[str]) -> None:
    if as_json:
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        for line in lines:
            print(line)


def _options_from_args(args, mode: str) -> Options:
    deadline = None
    if args.timeout_ms is not None:
        deadline = time.monotonic() + args.timeout_ms / 1000.0
    return Options(
        mode=mode,
        cap=args.cap,
        retry_budget=args.retry_budget,
        start_seed=args.seed,
        deadline=deadline,
    )


def _cmd_check(args) -> int:
    g = _read_graph(args.g)
    h = _read_graph(args.h)
    modes = [MODE_EXACT, MODE_COMPRESSED] if args.mode == MODE_BOTH else [args.mode]
    verdicts = {m: decide(g, h, _options_from_args(args, m)) for m in modes}
    primary = verdicts[modes[0]]
    payload = {
        "schema": 1,
        "verdicts": {m: v.to_json_dict() for m, v in verdicts.items()},
        "modes_agree": len({v.kind for v in verdicts.values()}) == 1,
    }
    lines = []
    for m, v in verdicts.items():
        lines.append(f"[{m}] {v.kind}" + (f" reasons={', '.join(v.reasons)}" if v.reasons else ""))
        if v.witness is not None:
            lines.append(f"[{m}] witness: {list(v.witness)}")
    _emit(payload, args.json, lines)
    if primary.kind == KIND_WITNESS:
        return EXIT_OK
    if primary.kind == KIND_INFEASIBLE:
        return EXIT_INFEASIBLE
    return EXIT_NO_WITNESS


def _cmd_aut(args) -> int:
    g = _read_graph(args.g)
    try:
        arrangement = rearrange(g, seed=args.seed % max(g.n, 1))
        gens = automorphism_generators(g, arrangement, mode=args.mode, cap=args.cap)
    except Infeasible as inf:
        _emit(
            {"schema": 1, "infeasible": inf.code, "at_block": inf.at_block},
            args.json,
            [f"infeasible: {inf.code}"],
        )
        return EXIT_INFEASIBLE
    except CandidateCapExceeded as exc:
        _emit({"schema": 1, "error": str(exc)}, args.json, [str(exc)])
        return EXIT_NO_WITNESS
    payload = {
        "schema": 1,
        "n": g.n,
        "generators": [list(p) for p in gens.generators],
        "representative": list(gens.representative) if gens.representative else None,
    }
    lines = [f"{len(gens.generators)} generators on {g.n} points"]
    for p in gens.generators:
        lines.append(f"  {list(p)}")
    if args.order:
        try:
            order = len(closure(gens, cap=args.cap))
            payload["closure_order"] = order
            lines.append(f"closure order: {order}")
        except CapExceeded:
            payload["closure_order"] = None
            payload["closure_order_note"] = f"exceeds cap {args.cap}"
            lines.append(f"closure order: exceeds cap {args.cap}")
    _emit(payload, args.json, lines)
    return EXIT_OK


def _cmd_rearrange(args) -> int:
    g = _read_graph(args.g)
    try:
        a = rearrange(g, seed=args.seed % max(g.n, 1), policy=args.policy)
    except Infeasible as inf:
        _emit(
            {"schema": 1, "infeasible": inf.code, "at_block": inf.at_block},
            args.json,
            [f"infeasible: {inf.code}"],
        )
        return EXIT_INFEASIBLE
    payload = {
        "schema": 1,
        "n": g.n,
        "x": a.x,
        "w": list(a.w),
        "blocks": [
            {"k": b.k, "i": b.i, "j": b.j, "vertices": list(b.vertices)}
            for b in a.blocks
        ],
    }
    lines = [f"{a.x} blocks; w = {list(a.w)}"]
    lines += [f"  block {b.k}: positions [{b.i},{b.j}] vertices {list(b.vertices)}" for b in a.blocks]
    _emit(payload, args.json, lines)
    return EXIT_OK


def _cmd_beta(args) -> int:
    g = _read_graph(args.g)
    h = _read_graph(args.h)
    try:
        a = rearrange(g, seed=args.seed % max(g.n, 1))
    except Infeasible as inf:
        _emit(
            {"schema": 1, "infeasible": inf.code, "at_block": inf.at_block},
            args.json,
            [f"infeasible: {inf.code}"],
        )
        return EXIT_INFEASIBLE
    if not (1 <= args.k <= a.x):
        raise _InputError(f"--k {args.k} out of range 1..{a.x}")
    cs = candidate_set_for_block(h, a.blocks[args.k - 1])
    payload = {
        "schema": 1,
        "k": args.k,
        "i": cs.block.i,
        "j": cs.block.j,
        "count": len(cs),
    }
    lines = [f"block {args.k} (positions [{cs.block.i},{cs.block.j}]): {len(cs)} candidates"]
    if args.full:
        payload["maps"] = [
            {str(pos): v for pos, v in sorted(m.items())} for m in cs.maps()
        ]
        lines += [f"  {sorted(m.items())}" for m in cs.maps()]
    _emit(payload, args.json, lines)
    return EXIT_OK


def _cmd_oracle(args) -> int:
    g = _read_graph(args.g)
    try:
        if args.h is None:
            res = brute_force_automorphisms(g)
            payload = {
                "schema": 1,
                "automorphisms": res.count,
                "nodes_explored": res.nodes_explored,
            }
            _emit(payload, args.json, [f"automorphisms: {res.count} (nodes {res.nodes_explored})"])
            return EXIT_OK
        h = _read_graph(args.h)
        res = brute_force_isomorphism(g, h, enumerate_all=args.all)
    except OracleSizeError as exc:
        raise _InputError(str(exc)) from exc
    payload = {
        "schema": 1,
        "witness": list(res.witness) if res.witness is not None else None,
        "count": res.count,
        "nodes_explored": res.nodes_explored,
    }
    lines = [
        f"witness: {list(res.witness) if res.witness is not None else None}",
        f"count: {res.count}  nodes: {res.nodes_explored}",
    ]
    _emit(payload, args.json, lines)
    return EXIT_OK if res.witness is not None else EXIT_NO_WITNESS


def _cmd_fuzz(args) -> int:
    deadline = None
    if args.timeout_ms is not None:
        deadline = time.monotonic() + args.timeout_ms / 1000.0
    report = run_trials(
        n=args.n,
        trials=args.trials,
        seed=args.seed,
        mode=args.mode,
        edge_prob=args.edge_prob,
        oracle_enabled=False if args.no_oracle else None,
        cap=args.cap,
        retry_budget=args.retry_budget,
        deadline=deadline,
    )
    payload = report.to_json_dict()
    rate = report.completeness_rate()
    lines = [
        f"trials: {report.trials}  agreements: {report.agreements}  "
        f"witnesses: {report.sound_witnesses}  infeasible: {report.infeasible_count}  "
        f"precheck: {report.precheck_rejections}",
        f"counterexamples: {len(report.counterexamples)}  "
        f"mode_disagreements: {len(report.mode_disagreements)}",
        f"completeness on planted isomorphic: "
        + (f"{rate:.4f}" if rate is not None else "n/a"),
    ]
    _emit(payload, args.json, lines)
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="triblock",
        description="Triangle-block graph isomorphism toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, modes=(MODE_EXACT, MODE_COMPRESSED)):
        p.add_argument("--json", action="store_true", help="emit JSON")
        p.add_argument("--mode", choices=modes, default=MODE_EXACT)
        p.add_argument("--cap", type=int, default=DEFAULT_CAP)
        p.add_argument("--retry-budget", type=int, default=DEFAULT_RETRY_BUDGET)
        p.add_argument("--timeout-ms", type=int, default=None)
        p.add_argument("--seed", type=int, default=None)

    p = sub.add_parser("check", help="decide isomorphism of two graphs")
    p.add_argument("g")
    p.add_argument("h")
    common(p, modes=(MODE_EXACT, MODE_COMPRESSED, MODE_BOTH))
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("aut", help="generating set of a graph's symmetries")
    p.add_argument("g")
    p.add_argument("--order", action="store_true", help="report capped closure order")
    common(p)
    p.set_defaults(func=_cmd_aut)

    p = sub.add_parser("rearrange", help="dump the triangle-block arrangement")
    p.add_argument("g")
    p.add_argument("--policy", type=int, default=0)
    common(p)
    p.set_defaults(func=_cmd_rearrange)

    p = sub.add_parser("beta", help="dump one block's candidate assignments")
    p.add_argument("g")
    p.add_argument("h")
    p.add_argument("--k", type=int, required=True, help="block index (1-based)")
    p.add_argument("--full", action="store_true", help="list every candidate map")
    common(p)
    p.set_defaults(func=_cmd_beta)

    p = sub.add_parser("oracle", help="exhaustive brute-force search")
    p.add_argument("g")
    p.add_argument("h", nargs="?", default=None)
    p.add_argument("--all", action="store_true", help="enumerate all witnesses")
    common(p)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("fuzz", help="randomized campaign against the oracle")
    p.add_argument("--n", type=int, default=9)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--edge-prob", type=float, default=0.15)
    p.add_argument("--no-oracle", action="store_true")
    common(p, modes=(MODE_EXACT, MODE_COMPRESSED, MODE_BOTH))
    p.set_defaults(func=_cmd_fuzz)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.seed is None:
            args.seed = _default_seed()
        return args.func(args)
    except _InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
