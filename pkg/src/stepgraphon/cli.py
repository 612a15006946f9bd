"""Command-line interface.

Subcommands: lambda-max, beta, verify, from-graph, mixing, round.  Inputs
are JSON files holding either a graphon family or a weighted graph; every
run emits a JSON report with the keys command, input, grid, results,
checks, runtime_ms.  Exit code 0 means success with all checks passed,
2 means some verification check failed (the report is still written),
1 means bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

import numpy as np

from .bipartite import beta_exhaustive, beta_graph_exact, mixing_sequence, rounding_sweep, threshold_rounding
from .core import Graphon, WeightedGraph, associated_graphon, graph_from_dict, graphon_from_dict
from .errors import IoError, ParseError, StepGraphonError
from .spectral import antidirichlet, inner_v, lambda_max, lambda_max_graph
from .verify import verify_graph_correspondence, verify_graphon

_FMT = "{:.12g}"


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad flags; this interface reserves 2 for failed checks
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"error: {message}\n")
        raise SystemExit(1)


def _build_parser() -> _Parser:
    parser = _Parser(prog="stepgraphon", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in [
        ("lambda-max", "top of the spectrum of a graphon or graph"),
        ("beta", "bipartiteness ratio by brute force and/or rounding"),
        ("verify", "dual Cheeger-Buser checks on a graphon or graph"),
        ("from-graph", "embed a weighted graph as a step graphon"),
        ("mixing", "doubling-map partition ratios up to a level"),
        ("round", "threshold-rounding sweep of the top eigenfunction"),
    ]:
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("--input", required=True, help="path to a graphon or graph JSON file")
        cmd.add_argument("--out", help="path for the JSON output (default stdout)")
        cmd.add_argument("--csv", help="path for CSV sweep data (mixing, round)")
        cmd.add_argument("--grid", type=int, default=128, help="grid resolution for graphon families")
        cmd.add_argument("--tol", type=float, default=1e-10, help="eigensolver residual tolerance")
        cmd.add_argument("--max-iter", type=int, default=10**6, help="power iteration budget")
        cmd.add_argument("--seed", type=int, default=42, help="seed for any randomized step")
        cmd.add_argument("--restarts", type=int, default=20, help="fractional search restarts")
        cmd.add_argument(
            "--method",
            choices=["exhaustive", "rounding", "both"],
            default="exhaustive",
            help="which beta estimate to compute (beta command)",
        )
        cmd.add_argument("--blocks", type=int, default=1, help="grid cells per vertex (graph inputs)")
        cmd.add_argument("--levels", type=int, default=4, help="maximum doubling level (mixing)")
    return parser


def _load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise IoError(f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path} is not valid JSON: {exc}") from exc


def _load_input(args) -> tuple[str, Graphon | WeightedGraph]:
    data = _load_json(args.input)
    if not isinstance(data, dict):
        raise ParseError(f"{args.input}: expected a JSON object")
    if "family" in data:
        return "graphon", graphon_from_dict(data, args.grid)
    if "weights" in data:
        return "graph", graph_from_dict(data)
    raise ParseError(f'{args.input}: needs a "family" or "weights" key')


def _spectral_results(result) -> dict:
    return {
        "lambda_max": result.lambda_max,
        "method": result.method,
        "iterations": result.iterations,
        "residual": result.residual,
        "eigenfunction_present": result.eigenfunction is not None,
        "eigenfunction": None
        if result.eigenfunction is None
        else result.eigenfunction.values.tolist(),
    }


def _run_lambda_max(kind, subject, args):
    if kind == "graph":
        result = lambda_max_graph(subject, tol=args.tol, max_iter=args.max_iter, seed=args.seed)
        grid = subject.n
    else:
        result = lambda_max(subject, tol=args.tol, max_iter=args.max_iter, seed=args.seed)
        grid = subject.m
    return grid, _spectral_results(result), []


def _run_beta(kind, subject, args):
    results: dict = {}
    if kind == "graph":
        if args.method in ("rounding", "both"):
            raise ParseError("rounding needs a graphon input; graphs support --method exhaustive")
        report = beta_graph_exact(subject)
        results["exhaustive"] = {"beta": report.beta, "witness": report.witness.as_dict()}
        best = report
        grid = subject.n
    else:
        grid = subject.m
        best = None
        if args.method in ("exhaustive", "both"):
            report = beta_exhaustive(subject)
            results["exhaustive"] = {"beta": report.beta, "witness": report.witness.as_dict()}
            best = report
        if args.method in ("rounding", "both"):
            spectral = lambda_max(subject, tol=args.tol, max_iter=args.max_iter, seed=args.seed)
            if spectral.eigenfunction is None:
                results["rounding"] = None
            else:
                rounded = threshold_rounding(subject, spectral.eigenfunction)
                f = spectral.eigenfunction
                bound = float(
                    np.sqrt(antidirichlet(subject, f) / inner_v(subject, f, f))
                )
                results["rounding"] = {
                    "beta": rounded.beta,
                    "witness": rounded.witness.as_dict(),
                    "threshold": rounded.threshold,
                    "bound": bound,
                }
                if best is None or rounded.beta < best.beta:
                    best = rounded
        if best is None:
            raise ParseError(
                "no beta estimate available: no eigenfunction to round and no exhaustive run"
            )
    results["beta"] = best.beta
    results["witness"] = best.witness.as_dict()
    return grid, results, []


def _run_verify(kind, subject, args):
    if kind == "graph":
        report = verify_graph_correspondence(
            subject, k=args.blocks, restarts=args.restarts, seed=args.seed
        )
    else:
        report = verify_graphon(subject, eig_tol=args.tol, max_iter=args.max_iter, seed=args.seed)
    payload = report.to_dict()
    checks = payload.pop("checks")
    payload.pop("grid", None)
    return report.grid, payload, checks


def _run_from_graph(kind, subject, args):
    if kind != "graph":
        raise ParseError("from-graph needs a graph input")
    graphon = associated_graphon(subject, args.blocks)
    artifact = {"family": "grid", "kernel": graphon.kernel.tolist()}
    results = {
        "m": graphon.m,
        "cells_per_vertex": args.blocks,
        "graphon": artifact,
        "graphon_written": args.out,
    }
    if args.out:
        _write_text(args.out, json.dumps(artifact, indent=2) + "\n")
    return graphon.m, results, []


def _run_mixing(kind, subject, args):
    if kind != "graphon":
        raise ParseError("mixing needs a graphon input")
    values = mixing_sequence(subject, args.levels)
    if args.csv:
        _write_csv(args.csv, "n,beta", [(n, v) for n, v in enumerate(values)])
    return subject.m, {"levels": args.levels, "beta": values}, []


def _run_round(kind, subject, args):
    if kind != "graphon":
        raise ParseError("round needs a graphon input")
    spectral = lambda_max(subject, tol=args.tol, max_iter=args.max_iter, seed=args.seed)
    if spectral.eigenfunction is None:
        raise ParseError(
            "the spectral top has no step-function witness at this resolution; nothing to round"
        )
    sweep = rounding_sweep(subject, spectral.eigenfunction)
    rounded = threshold_rounding(subject, spectral.eigenfunction)
    f = spectral.eigenfunction
    bound = float(np.sqrt(antidirichlet(subject, f) / inner_v(subject, f, f)))
    if args.csv:
        _write_csv(args.csv, "t,beta", sweep)
    results = {
        "lambda_max": spectral.lambda_max,
        "beta": rounded.beta,
        "witness": rounded.witness.as_dict(),
        "threshold": rounded.threshold,
        "bound": bound,
    }
    return subject.m, results, []


_RUNNERS = {
    "lambda-max": _run_lambda_max,
    "beta": _run_beta,
    "verify": _run_verify,
    "from-graph": _run_from_graph,
    "mixing": _run_mixing,
    "round": _run_round,
}


def _write_text(path: str, text: str) -> None:
    try:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)
    except OSError as exc:
        raise IoError(f"cannot write {path}: {exc}") from exc


def _write_csv(path: str, header: str, rows) -> None:
    lines = [header]
    for x, y in rows:
        lines.append(f"{_FMT.format(x)},{_FMT.format(y)}")
    _write_text(path, "\n".join(lines) + "\n")


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    if args.grid < 1 or args.tol <= 0.0 or args.max_iter < 1 or args.blocks < 1:
        sys.stderr.write("error: --grid and --blocks must be >= 1, --tol > 0, --max-iter >= 1\n")
        return 1
    started = time.perf_counter()
    try:
        kind, subject = _load_input(args)
        grid, results, checks = _RUNNERS[args.command](kind, subject, args)
    except StepGraphonError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    report = {
        "command": args.command,
        "input": args.input,
        "grid": grid,
        "results": results,
        "checks": checks,
        "runtime_ms": int(round((time.perf_counter() - started) * 1000.0)),
    }
    text = json.dumps(report, indent=2) + "\n"
    if args.out and args.command != "from-graph":
        _write_text(args.out, text)
    else:
        sys.stdout.write(text)
    failed = any(not c["passed"] for c in checks)
    return 2 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
