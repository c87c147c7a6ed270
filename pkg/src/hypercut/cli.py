"""Command-line entry point: ``hypercut {kcut,minmax,stcut,oracle,verify} FILE``.

Input vertex ids (in files and in ``--source``/``--sink``) are 1-indexed.
Every id in the output, vertices and edges alike, is 0-indexed; edge ``i`` is
the ``i``-th edge line of the file.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import _backend
from .errors import (
    BadTerminals,
    HypercutError,
    KOutOfRange,
    ParseError,
    PreconditionViolated,
    TooLarge,
    ValidationError,
)
from .hgr import read_hgr
from .hypergraph import mask_bits
from .kcut import enum_dc, enum_flat
from .minmax import enum_minmax_reps, sorted_reps
from .oracle import (
    PARTITION_CAP,
    SUBSET_CAP,
    cut_tables,
    oracle_report,
    verify_recovery_theorem,
    verify_structure_thm_1,
)
from .terminal import source_minimal_min_st_cut

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_CAP = 0, 2, 3, 4


def _cut_lists(cut_sets):
    return sorted(list(c.edge_ids) for c in cut_sets)


def _instance(G):
    return {"n": G.n, "m": G.m, "p": G.p}


def _vertex_list(text: str) -> list[int]:
    try:
        ids = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated vertex ids, got {text!r}")
    return ids


def _terminals(G, ids, flag):
    for v in ids:
        if not 1 <= v <= G.n:
            raise BadTerminals(f"{flag} vertex {v} not in 1..{G.n}")
    return {v - 1 for v in ids}


def cmd_kcut(G, args):
    if args.algo == "dc":
        res = enum_dc(G, args.k, threads=args.threads)
    else:
        res = enum_flat(G, args.k)
    return {
        "algorithm": args.algo,
        "opt_value": res.opt_value,
        "cut_sets": _cut_lists(res.min_k_cut_sets),
        "stats": res.stats,
    }


def cmd_minmax(G, args):
    res = enum_minmax_reps(G, args.k)
    return {
        "algorithm": "minmax-reps",
        "lambda": res.lambda_,
        "opt_value": res.lambda_,
        "cut_sets": _cut_lists(res.minmax_cut_sets),
        "representatives": [
            [sorted(p) for p in rep.subsets] for rep in sorted_reps(res.representatives)
        ],
        "stats": res.stats,
    }


def cmd_stcut(G, args):
    S = _terminals(G, args.source, "--source")
    T = _terminals(G, args.sink, "--sink")
    cut = source_minimal_min_st_cut(G, S, T)
    return {
        "algorithm": "source-minimal-terminal-cut",
        "source": sorted(S),
        "sink": sorted(T),
        "opt_value": cut.value,
        "source_side": sorted(cut.source_side),
        "cut_sets": [list(cut.cut_set.edge_ids)],
    }


def cmd_oracle(G, args):
    rep = oracle_report(G, args.k, cap=args.max_oracle_n or PARTITION_CAP)
    return {
        "algorithm": "oracle",
        "opt_value": rep.opt_k_cut,
        "cut_sets": _cut_lists(rep.min_k_cut_sets),
        "opt_minmax": rep.opt_minmax,
        "minmax_cut_sets": _cut_lists(rep.minmax_cut_sets),
        "partition_count": rep.partition_count,
    }


def cmd_verify(G, args):
    cap = args.max_oracle_n or SUBSET_CAP
    if G.n > cap:
        raise TooLarge(f"subset enumeration limited to n <= {cap}, got n = {G.n}")
    if not 2 <= args.k <= G.n:
        raise KOutOfRange(f"k must lie in 2..{G.n}, got {args.k}")
    rep = oracle_report(G, args.k, cap=max(cap, G.n))
    weight, _ = cut_tables(G)
    checked, failed, witnesses = 0, [], []
    for u in range(1, G.full_mask):
        side = mask_bits(u)
        if args.theorem == "1":
            if weight[u] >= rep.opt_k_cut:
                continue
            w = verify_structure_thm_1(G, args.k, side, cap=cap)
            entry = None if w is None else [
                [s, t, sorted(S), sorted(T)] for (s, t), (S, T) in sorted(w.items())
            ]
        else:
            if weight[u] != rep.opt_k_cut:
                continue
            w = verify_recovery_theorem(G, args.k, side, cap=cap)
            entry = None if w is None else [sorted(w[0]), sorted(w[1])]
        checked += 1
        if entry is None:
            failed.append(side)
        else:
            witnesses.append({"U": side, "witness": entry})
    return {
        "algorithm": f"verify-{args.theorem}",
        "opt_value": rep.opt_k_cut,
        "checked": checked,
        "failed": failed,
        "witnesses": witnesses,
    }


COMMANDS = {
    "kcut": cmd_kcut,
    "minmax": cmd_minmax,
    "stcut": cmd_stcut,
    "oracle": cmd_oracle,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    out = common.add_mutually_exclusive_group()
    out.add_argument("--json", dest="summary", action="store_false", help="JSON document (default)")
    out.add_argument("--summary", dest="summary", action="store_true", help="short human-readable text")
    common.add_argument("--threads", type=int, default=1, help="worker threads, 0 = all CPUs")
    common.add_argument("--seed", type=int, default=None, help="reserved; all algorithms are deterministic")
    common.add_argument("--max-oracle-n", type=int, default=None, help="vertex cap for brute-force commands")
    common.add_argument("--timing", action="store_true", help="add wall_time_ms to the output")
    common.add_argument("file", help="hypergraph in hMETIS .hgr format")
    common.set_defaults(summary=False)

    parser = argparse.ArgumentParser(prog="hypercut", description="Exact hypergraph k-cut enumeration.")
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("kcut", parents=[common], help="all minimum k-cut-sets")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--algo", choices=("flat", "dc"), default="flat")
    p = sub.add_parser("minmax", parents=[common], help="all minmax k-cut-sets with representatives")
    p.add_argument("--k", type=int, required=True)
    p = sub.add_parser("stcut", parents=[common], help="source-minimal minimum (S,T)-terminal cut")
    p.add_argument("--source", type=_vertex_list, required=True, help="e.g. '1,2'")
    p.add_argument("--sink", type=_vertex_list, required=True)
    p = sub.add_parser("oracle", parents=[common], help="brute-force optima and cut-sets")
    p.add_argument("--k", type=int, required=True)
    p = sub.add_parser("verify", parents=[common], help="check the structural properties on every eligible cut")
    p.add_argument("--theorem", choices=("1", "recovery"), required=True)
    p.add_argument("--k", type=int, required=True)
    return parser


def _summary(doc) -> str:
    lines = [f"{doc['command']} ({doc['algorithm']}) n={doc['instance']['n']} m={doc['instance']['m']}"]
    if "lambda" in doc:
        lines.append(f"lambda: {doc['lambda']}")
    else:
        lines.append(f"opt_value: {doc['opt_value']}")
    if "checked" in doc:
        lines.append(f"checked: {doc['checked']}  failed: {len(doc['failed'])}")
    if "source_side" in doc:
        lines.append("source_side: " + " ".join(map(str, doc["source_side"])))
    if "cut_sets" in doc:
        lines.append(f"cut_sets: {len(doc['cut_sets'])}")
        lines += ["  " + " ".join(map(str, c)) for c in doc["cut_sets"]]
    return "\n".join(lines)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads == 0:
        args.threads = os.cpu_count() or 1
    if args.threads < 0:
        parser.error("--threads must be >= 0")
    start = time.perf_counter()
    try:
        G = read_hgr(args.file)
        doc = {"command": args.command, "instance": _instance(G)}
        if hasattr(args, "k"):
            doc["k"] = args.k
        doc.update(COMMANDS[args.command](G, args))
    except (KOutOfRange, BadTerminals, PreconditionViolated) as exc:
        print(f"hypercut: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ParseError, ValidationError, OSError) as exc:
        print(f"hypercut: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except TooLarge as exc:
        print(f"hypercut: error: TooLarge: {exc}", file=sys.stderr)
        return EXIT_CAP
    except HypercutError as exc:
        print(f"hypercut: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.timing:
        doc["wall_time_ms"] = round((time.perf_counter() - start) * 1000, 3)
        doc["backend"] = _backend.BACKEND
    print(_summary(doc) if args.summary else json.dumps(doc))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
