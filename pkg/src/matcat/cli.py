"""Command line entry point: ``matcat check`` and ``matcat eval``."""

from __future__ import annotations

import argparse
import os
import sys

from matcat.errors import MatcatError, UsageError
from matcat.harness import TARGETS, RunConfig, eval_morphism, mutated_options, run_suite
from matcat.report import render_json, render_text


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _config_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--q", default="2", help="braiding parameter, a nonzero rational (default 2)")
    p.add_argument("--max-degree", type=int, default=2)
    p.add_argument("--max-dim", type=int, default=2)
    p.add_argument("--probes", type=int, default=25, help="probe rows per check")
    p.add_argument("--seed", type=int, default=0, help="overridden by MATCAT_SEED")
    p.add_argument("--instance", choices=("graded", "symmetric"), default="graded")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="matcat", description="Exact checks for the matrix category and its bialgebra.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    c = sub.add_parser("check", help="run verification suites")
    c.add_argument("--target", choices=TARGETS, default="all")
    _config_flags(c)
    c.add_argument("--format", choices=("json", "text"), default="json")
    c.add_argument("--out", metavar="FILE", help="write the report here instead of stdout")
    c.add_argument("--timings", action="store_true", help="record elapsed seconds per check")
    c.add_argument("--mutate", choices=("gamma-identity", "no-middle-braid"),
                   help="sabotage the bialgebra to confirm the checks can fail")
    e = sub.add_parser("eval", help="print one row of a morphism expression")
    e.add_argument("--expr", required=True)
    e.add_argument("--row", required=True, help="integer, '*', enc(d1,...) or pair(r1, r2)")
    _config_flags(e)
    return p


def _config(args, report_format="json") -> RunConfig:
    seed = args.seed
    env = os.environ.get("MATCAT_SEED")
    if env is not None:
        try:
            seed = int(env)
        except ValueError:
            raise UsageError("MATCAT_SEED must be an integer")
    return RunConfig(q=args.q, max_degree=args.max_degree, max_dim=args.max_dim,
                     probe_rows=args.probes, seed=seed, instance=args.instance,
                     report_format=report_format)


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.command is None:
            raise UsageError("a subcommand is required: check or eval")
        if args.command == "eval":
            sys.stdout.write(eval_morphism(args.expr, args.row, _config(args)))
            return 0
        cfg = _config(args, args.format)
        options = mutated_options(args.mutate) if args.mutate else None
        reports = run_suite(args.target, cfg, timings=args.timings, hbar_options=options)
        render = render_json if cfg.report_format == "json" else render_text
        text = render(cfg.as_dict(), reports)
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
        return 1 if any(r.status == "fail" for r in reports) else 0
    except UsageError as e:
        sys.stderr.write("matcat: usage error: %s\n" % e)
        return 2
    except MatcatError as e:
        sys.stderr.write("matcat: %s: %s\n" % (type(e).__name__, e))
        return 2


if __name__ == "__main__":
    sys.exit(main())
