"""Command-line front end: one subcommand per tool, JSON reports on stdout.

Every invocation prints a single run report object::

    {"subcommand": ..., "input_digest": ..., "version": ...,
     "payload": ..., "wall_time_s": ...}

Payloads are deterministic (sorted keys, no timestamps) so identical
inputs give byte-identical payloads; only ``wall_time_s`` varies.
Diagnostics go to stderr.  Exit codes: 0 when the checked property
holds or an artifact was produced, 1 when a property fails (graph not
critical, certificate invalid, charge below target, configuration not
reducible, audit violations), 2 for usage, parse, or validation errors.

``FILE`` arguments accept ``-`` for stdin.  The ``KEMPE_SEED``
environment variable is reserved for forward compatibility; every
algorithm here is deterministic and ignores it.

Batch manifests: one invocation per line, ``#`` comments and blank
lines ignored, every line validated before anything runs, and nested
``batch`` lines rejected.  Task reports inside the aggregate omit
``wall_time_s`` so the aggregate payload stays deterministic under
``--threads``.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import shlex
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from . import __version__
from .audit import audit_basic, classify_rich, decompose_h
from .coloring import chromatic_index, is_3_critical
from .discharge import run_discharge, solve_parameters
from .families import enumerate_subcubic, petersen_star, woodall_j
from .fixability import (
    StrategyCertificate,
    enumerate_boards,
    losing_boards,
    parse_configuration,
    prove_reducible,
    verify_certificate,
)
from .graphs import COLOR_LETTERS, GraphError, UNCOLORED, emit_graph, parse_graph


def _digest(data):
    return "sha256:" + hashlib.sha256(data).hexdigest()


def _read(path):
    if path == "-":
        return sys.stdin.read().encode()
    with open(path, "rb") as handle:
        return handle.read()


def _load_graph(path):
    data = _read(path)
    return parse_graph(data.decode()), data


def _load_configuration(path):
    data = _read(path)
    return parse_configuration(data.decode()), data


def build_parser():
    parser = argparse.ArgumentParser(
        prog="kempe",
        description="Edge-coloring criticality toolkit for subcubic graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("chi", help="exact chromatic index of a graph")
    p.add_argument("file")

    p = sub.add_parser("critical", help="test 3-criticality")
    p.add_argument("file")

    p = sub.add_parser("gen", help="emit graphs from the built-in families")
    gen_sub = p.add_subparsers(dest="family", required=True)
    g = gen_sub.add_parser("p-star", help="the vertex-deleted Petersen graph")
    g.add_argument("--raw", action="store_true",
                   help="emit graph text blocks instead of a JSON report")
    g = gen_sub.add_parser("jk", help="k-th member of the join chain")
    g.add_argument("k", type=int)
    g.add_argument("--raw", action="store_true")
    g = gen_sub.add_parser("enumerate",
                           help="all connected subcubic graphs on n vertices")
    g.add_argument("n", type=int)
    g.add_argument("--raw", action="store_true")

    p = sub.add_parser("audit", help="scan for forbidden substructures")
    p.add_argument("file")
    p.add_argument("--strict", action="store_true",
                   help="also flag rich vertices on two distinct 3+-components")

    p = sub.add_parser("fix", help="configuration reducibility tools")
    fix_sub = p.add_subparsers(dest="action", required=True)
    f = fix_sub.add_parser("boards", help="enumerate canonical boundary boards")
    f.add_argument("slots", type=int)
    f = fix_sub.add_parser("prove", help="search for a winning strategy")
    f.add_argument("file")
    f.add_argument("--mode", choices=("basic", "stateful"), default="basic")
    f.add_argument("-o", "--output", help="also write the certificate here")
    f = fix_sub.add_parser("verify", help="replay a strategy certificate")
    f.add_argument("file")
    f.add_argument("certificate")

    p = sub.add_parser("discharge", help="replay the charge redistribution")
    p.add_argument("file")
    p.add_argument("--alpha", help="exact fraction, e.g. 26/37")
    p.add_argument("--beta", help="exact fraction, e.g. 1/37")
    p.add_argument("--type-sum", type=int, dest="type_sum",
                   help="derive alpha and beta from this worst rich type sum")

    p = sub.add_parser("solve-params",
                       help="parameters balancing all three vertex classes")
    p.add_argument("type_sum", type=int)

    p = sub.add_parser("batch", help="run a manifest of invocations")
    p.add_argument("manifest")
    p.add_argument("--threads", type=int, default=1)
    return parser


# ------------------------------------------------------------------ handlers
# Each returns (exit_code, payload, input_bytes_or_None).

def _cmd_chi(args):
    g, data = _load_graph(args.file)
    result = chromatic_index(g)
    coloring = {}
    fourth = []
    for eid, (u, v) in enumerate(g.edges):
        name = "%d-%d" % (u, v)
        if result.witness and result.witness[eid] != UNCOLORED:
            coloring[name] = COLOR_LETTERS[result.witness[eid]]
        else:
            fourth.append(name)
    payload = {
        "chi": result.chromatic_index,
        "coloring": coloring,
        "fourth_class": fourth if result.chromatic_index == 4 else [],
    }
    return 0, payload, data


def _cmd_critical(args):
    g, data = _load_graph(args.file)
    if g.max_degree() != 3:
        payload = {
            "critical": False,
            "reason": "maximum degree is %d, not 3" % g.max_degree(),
        }
        return 1, payload, data
    report = is_3_critical(g)
    payload = {"critical": report.critical, "reason": report.reason}
    return (0 if report.critical else 1), payload, data


def _cmd_gen(args):
    if args.family == "p-star":
        graphs = [petersen_star()]
    elif args.family == "jk":
        graphs = [woodall_j(args.k)]
    else:
        graphs = list(enumerate_subcubic(args.n))
    texts = [emit_graph(g) for g in graphs]
    if args.raw:
        sys.stdout.write("\n---\n".join(texts))
        if texts:
            sys.stdout.write("\n")
        return 0, None, None
    return 0, {"count": len(texts), "graphs": texts}, None


def _cmd_audit(args):
    g, data = _load_graph(args.file)
    basic = audit_basic(g)
    h = decompose_h(g)
    rich = classify_rich(g, h)
    threshold = 3 if args.strict else 4
    rich_rows = [
        {
            "vertex": t.vertex,
            "triple": list(t.triple),
            "distinct_components": list(t.distinct_orders),
            "flagged": t.flagged(threshold),
        }
        for t in rich
    ]
    flagged = [row["vertex"] for row in rich_rows if row["flagged"]]
    payload = {
        "basic": [
            {"kind": v.kind, "vertices": list(v.vertices)} for v in basic
        ],
        "h_components": [list(c) for c in h.components],
        "h_flags": [[cid, reason] for cid, reason in h.flags],
        "rich": rich_rows,
        "strict": args.strict,
        "clean": not basic and h.is_clean and not flagged,
    }
    return (0 if payload["clean"] else 1), payload, data


def _cmd_fix_boards(args):
    boards = enumerate_boards(args.slots)
    payload = {
        "slots": args.slots,
        "count": len(boards),
        "boards": [str(b) for b in boards],
    }
    return 0, payload, None


def _cmd_fix_prove(args):
    cfg, data = _load_configuration(args.file)
    certificate = prove_reducible(cfg, mode=args.mode)
    if certificate is None:
        payload = {
            "reducible": False,
            "mode": args.mode,
            "losing_boards": [str(b) for b in losing_boards(cfg, args.mode)],
        }
        return 1, payload, data
    if args.output:
        with open(args.output, "w") as handle:
            handle.write(certificate.to_json())
            handle.write("\n")
    payload = {
        "reducible": True,
        "mode": args.mode,
        "entries": len(certificate.boards),
        "certificate": certificate.payload,
    }
    return 0, payload, data


def _cmd_fix_verify(args):
    cfg, cfg_data = _load_configuration(args.file)
    cert_data = _read(args.certificate)
    certificate = StrategyCertificate.from_json(cert_data.decode())
    result = verify_certificate(cfg, certificate)
    payload = {
        "valid": result.ok,
        "problem": result.problem,
        "entry": result.entry,
    }
    return (0 if result.ok else 1), payload, cfg_data + cert_data


def _cmd_discharge(args):
    g, data = _load_graph(args.file)
    explicit = args.alpha is not None or args.beta is not None
    if explicit and (args.alpha is None or args.beta is None):
        raise GraphError("--alpha and --beta must be given together")
    if explicit and args.type_sum is not None:
        raise GraphError("--type-sum conflicts with explicit --alpha/--beta")
    if explicit:
        try:
            alpha, beta = Fraction(args.alpha), Fraction(args.beta)
        except (ValueError, ZeroDivisionError) as exc:
            raise GraphError("bad fraction: %s" % exc) from None
    else:
        alpha, beta = solve_parameters(
            11 if args.type_sum is None else args.type_sum
        )
    h = decompose_h(g)
    trace = run_discharge(g, h, alpha, beta)
    payload = {
        "alpha": str(trace.alpha),
        "beta": str(trace.beta),
        "target": str(trace.target),
        "holds": trace.holds(),
        "below_target": list(trace.below_target),
        "initial": [str(c) for c in trace.initial],
        "transfers": {
            rule: [str(c) for c in deltas]
            for rule, deltas in trace.transfers.items()
        },
        "final": [str(c) for c in trace.final],
        "total": str(trace.total),
        "h_flags": [[cid, reason] for cid, reason in h.flags],
    }
    return (0 if trace.holds() else 1), payload, data


def _cmd_solve_params(args):
    alpha, beta = solve_parameters(args.type_sum)
    payload = {
        "type_sum": args.type_sum,
        "alpha": str(alpha),
        "beta": str(beta),
        "text": "%s %s" % (alpha, beta),
    }
    return 0, payload, None


def _cmd_batch(args):
    data = _read(args.manifest)
    lines = []
    for raw in data.decode().splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    parser = build_parser()
    jobs = []
    for line in lines:
        argv = shlex.split(line)
        if argv and argv[0] == "batch":
            print("batch manifests cannot nest: %r" % line, file=sys.stderr)
            return 2, None, data
        try:
            parser.parse_args(argv)
        except SystemExit:
            print("manifest line does not parse: %r" % line, file=sys.stderr)
            return 2, None, data
        jobs.append(argv)

    threads = max(1, args.threads)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        results = list(pool.map(run_invocation, jobs))

    tasks = []
    failed = 0
    for line, (code, report) in zip(lines, results):
        if report is not None:
            report = {k: v for k, v in report.items() if k != "wall_time_s"}
        if code != 0:
            failed += 1
        tasks.append({"line": line, "exit_code": code, "report": report})
    payload = {"count": len(tasks), "failed": failed, "tasks": tasks}
    return (0 if failed == 0 else 1), payload, data


_HANDLERS = {
    "chi": _cmd_chi,
    "critical": _cmd_critical,
    "gen": _cmd_gen,
    "audit": _cmd_audit,
    ("fix", "boards"): _cmd_fix_boards,
    ("fix", "prove"): _cmd_fix_prove,
    ("fix", "verify"): _cmd_fix_verify,
    "discharge": _cmd_discharge,
    "solve-params": _cmd_solve_params,
    "batch": _cmd_batch,
}


def run_invocation(argv):
    """Run one parsed-style invocation; returns (exit code, report dict).

    The report is None when the invocation failed before producing one,
    or when it wrote raw output instead (``gen --raw``).
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return (exc.code if isinstance(exc.code, int) else 2), None

    if args.command == "fix":
        handler = _HANDLERS[("fix", args.action)]
        name = "fix %s" % args.action
    else:
        handler = _HANDLERS[args.command]
        name = args.command

    started = time.monotonic()
    try:
        code, payload, input_bytes = handler(args)
    except GraphError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2, None
    except json.JSONDecodeError as exc:
        print("error: certificate is not valid JSON: %s" % exc, file=sys.stderr)
        return 2, None
    except OSError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2, None
    if payload is None:
        return code, None
    report = {
        "subcommand": name,
        "input_digest": None if input_bytes is None else _digest(input_bytes),
        "version": __version__,
        "payload": payload,
        "wall_time_s": round(time.monotonic() - started, 6),
    }
    return code, report


def main(argv=None):
    code, report = run_invocation(
        list(sys.argv[1:]) if argv is None else list(argv)
    )
    if report is not None:
        print(json.dumps(report, sort_keys=True))
    return code


if __name__ == "__main__":
    sys.exit(main())
