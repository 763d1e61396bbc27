"""Command-line entry point.

Subcommands run the verification suites and emit a deterministic JSON report
(identical configs produce byte-identical files) plus a human summary on
stdout.  Exit codes: 0 all cases passed, 1 failures, 2 configuration error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .matrices import EnumerationGuardError, check_enumeration_guard
from .reports import RunConfig
from .scalars import GF, QQ
from .suites import SUITES, default_workers, run_suite

__all__ = ["build_parser", "main"]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="glidem",
        description=(
            "Exact verification workbench for idempotent geometry in matrix "
            "algebras via the general linear group."
        ),
    )
    sub = parser.add_subparsers(dest="suite", required=True)
    for name in SUITES:
        p = sub.add_parser(name, help=f"run the {name} suite")
        p.add_argument("--domain", choices=["q", "fp"], default="q")
        p.add_argument("--p", type=int, default=5, help="prime modulus for fp")
        p.add_argument("--dim", type=int, default=2)
        p.add_argument(
            "--mode", choices=["exhaustive", "sampled"], default=None,
            help="defaults to exhaustive over fp, sampled over q",
        )
        p.add_argument("--samples", type=int, default=1000)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--out", type=str, default=None, help="report JSON path")
        p.add_argument("--json", action="store_true", help="full JSON on stdout")
        p.add_argument("--workers", type=int, default=None)
        if name == "witness":
            p.add_argument(
                "--s", type=str, required=True,
                help='input matrix as JSON rows, e.g. "[[1,1],[0,1]]"',
            )
        if name == "enumerate":
            p.add_argument("--kind", type=str, default="all")
            p.add_argument("--list", action="store_true")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    domain = GF(args.p) if args.domain == "fp" else QQ
    mode = args.mode or ("exhaustive" if args.domain == "fp" else "sampled")
    extras = {}
    if args.suite == "witness":
        rows = json.loads(args.s)
        extras["s_rows"] = rows
    if args.suite == "enumerate":
        extras["kind"] = args.kind
        if args.list:
            extras["list"] = True
    cfg = RunConfig(
        domain=domain,
        n=args.dim,
        mode=mode,
        samples=args.samples,
        seed=args.seed,
        out=args.out,
        workers=args.workers if args.workers is not None else default_workers(),
        extras=extras,
    )
    cfg.validate()
    if cfg.mode == "exhaustive":
        check_enumeration_guard(cfg.domain, cfg.n)
    return cfg


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = config_from_args(args)
    except (ValueError, EnumerationGuardError, json.JSONDecodeError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2

    report = run_suite(args.suite, cfg)

    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(report.to_json())
            fh.write("\n")
    if args.json:
        if args.suite == "thmC" and report.rows:
            # per-element verdict rows as JSON lines
            for row in report.rows:
                print(json.dumps(row, sort_keys=True))
        else:
            print(report.to_json())
    else:
        print(report.summary())
        for failure in report.failures[:10]:
            print(f"  failure: {json.dumps(failure, sort_keys=True)}")
        if len(report.failures) > 10:
            print(f"  ... and {len(report.failures) - 10} more failures")
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
