"""Command-line interface.

Subcommands:
  energy      per-graph energy reports for a graph6 stream
  alpha       edge-density threshold alpha(d) with its certified bracket
  sweep       exhaustive checks: fact1 (tree exceptions), thm2, thm3
  conjecture  energy-ratio table for the hub-joined triple binary trees
  gen         emit the bounded-degree tree enumeration stream

Exit codes: 0 on expected outcomes, 1 when a sweep finds unexpected
counterexamples (or on I/O failure), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .bounds import alpha
from .enumeration import free_tree_sequences, level_sequence_to_graph
from .graphs import parse_graph6, write_graph6
from .spectra import TOLERANCE
from .sweeps import (
    VerifyOutcome,
    classify_energy_vs_order,
    conjecture_table,
    exceptional_codes,
    fact1_sweep,
    graph_key,
    theorem2_sweep,
    theorem3_sweep,
)

EXPECTED_EXCEPTION_ORDERS = (1, 3, 4, 7)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="c4energy",
        description="graph energy toolkit: spectra, bounds, exhaustive sweeps",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_energy = sub.add_parser("energy", help="energy reports for a graph6 stream")
    p_energy.add_argument("--in", dest="infile", required=True,
                          help="graph6 file, one graph per line ('-' for stdin)")
    p_energy.add_argument("--format", choices=("csv", "json"), default="csv")
    p_energy.set_defaults(func=cmd_energy)

    p_alpha = sub.add_parser("alpha", help="edge-density threshold alpha(d)")
    p_alpha.add_argument("--d", type=int, required=True, help="degree bound, >= 3")
    p_alpha.set_defaults(func=cmd_alpha)

    p_sweep = sub.add_parser("sweep", help="run an exhaustive verification sweep")
    p_sweep.add_argument("which", choices=("fact1", "thm2", "thm3"))
    p_sweep.add_argument("--max-order", type=int, default=None,
                         help="largest order to examine (fact1 defaults to 22)")
    p_sweep.add_argument("--jobs", type=int, default=1)
    p_sweep.add_argument("--out", type=str, default=None,
                         help="report path; a PNG figure lands next to it")
    p_sweep.add_argument("--format", choices=("csv", "json"), default="csv")
    p_sweep.add_argument("--tol", type=float, default=TOLERANCE)
    p_sweep.set_defaults(func=cmd_sweep)

    p_conj = sub.add_parser("conjecture", help="energy-ratio evidence tables")
    p_conj.add_argument("which", choices=("bn",))
    p_conj.add_argument("--max-k", type=int, required=True)
    p_conj.add_argument("--out", type=str, default=None)
    p_conj.set_defaults(func=cmd_conjecture)

    p_gen = sub.add_parser("gen", help="emit enumeration streams")
    p_gen.add_argument("what", choices=("trees",))
    p_gen.add_argument("--n", type=int, required=True)
    p_gen.add_argument("--dmax", type=int, required=True)
    p_gen.add_argument("--graph6", action="store_true",
                       help="emit graph6 lines instead of level sequences")
    p_gen.set_defaults(func=cmd_gen)
    return parser


def cmd_energy(args) -> int:
    from .report import reports_to_csv, reports_to_json
    from .spectra import EnergyReport, spectrum

    if args.infile == "-":
        lines = sys.stdin.read().splitlines()
    else:
        try:
            lines = Path(args.infile).read_text().splitlines()
        except OSError as exc:
            print(f"error: cannot read {args.infile}: {exc}", file=sys.stderr)
            return 2
    rows = []
    for lineno, line in enumerate(lines, 1):
        if not line.strip():
            continue
        try:
            g = parse_graph6(line)
        except ValueError as exc:
            print(f"error: line {lineno}: {exc}", file=sys.stderr)
            return 2
        e, relation = classify_energy_vs_order(g)
        status = {"above": "pass", "equal": "pass", "below": "exception"}[relation]
        rep = EnergyReport(key=graph_key(g), n=g.n, m=g.m, energy=e,
                           mu1=spectrum(g).mu1, deficit=e - g.n)
        rows.append((rep, status))
    text = (reports_to_csv if args.format == "csv" else reports_to_json)("energy", rows)
    sys.stdout.write(text)
    return 0


def cmd_alpha(args) -> int:
    if args.d < 3:
        print("error: --d must be >= 3", file=sys.stderr)
        return 2
    a = alpha(args.d)
    residual = abs(4 * a.value**3 - (2 * args.d + 1) * a.value + args.d)
    print(f"alpha({a.d}) = {a.value!r}")
    print(f"bracket  = [{a.bracket[0]!r}, {a.bracket[1]!r}]")
    print(f"residual = {residual:.3e}  (after {a.iterations} iterations)")
    return 0


def _sweep_expected(outcome: VerifyOutcome, which: str, max_order: int) -> bool:
    if outcome.borderline:
        return False
    if which in ("thm2", "thm3"):
        return not outcome.counterexamples
    expected = {
        code for code in exceptional_codes() if code[0] <= max_order
    }
    got = set()
    for rep in outcome.counterexamples:
        g = parse_graph6(rep.key)
        from .graphs import canonical_code

        got.add(canonical_code(g))
    return got == expected and len(outcome.counterexamples) == len(expected)


def cmd_sweep(args) -> int:
    if args.max_order is None:
        if args.which != "fact1":
            print("error: --max-order is required", file=sys.stderr)
            return 2
        args.max_order = 22
    if args.max_order < 1:
        print("error: --max-order must be >= 1", file=sys.stderr)
        return 2
    if args.jobs < 1:
        print("error: --jobs must be >= 1", file=sys.stderr)
        return 2
    runner = {"fact1": fact1_sweep, "thm2": theorem2_sweep, "thm3": theorem3_sweep}
    try:
        outcome = runner[args.which](args.max_order, jobs=args.jobs, tol=args.tol)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"sweep {outcome.sweep}: examined {outcome.total} graphs "
          f"in {outcome.wall_time:.1f}s")
    for rep in outcome.counterexamples:
        print(f"  E < n: order {rep.n}, code {rep.key}, "
              f"energy {rep.energy:.9f}, deficit {rep.deficit:.9f}")
    for rep in outcome.borderline:
        print(f"  borderline: order {rep.n}, code {rep.key}, energy {rep.energy!r}")
    if args.out:
        from .plots import sweep_figure
        from .report import write_report

        try:
            path = write_report(outcome, args.out, args.format)
            fig = sweep_figure(outcome, Path(args.out).with_suffix(".png"))
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
        print(f"report: {path}")
        print(f"figure: {fig}")
    ok = _sweep_expected(outcome, args.which, args.max_order)
    if not ok:
        print("UNEXPECTED OUTCOME: counterexample or unresolved borderline case",
              file=sys.stderr)
    return 0 if ok else 1


def cmd_conjecture(args) -> int:
    try:
        rows = conjecture_table(args.max_k)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print("k   order   energy            ratio")
    for r in rows:
        print(f"{r.k:<3} {r.order:<7} {r.energy:<17.9f} {r.ratio:.6f}")
    if args.out:
        from .plots import conjecture_figure
        from .report import write_conjecture_table

        try:
            path = write_conjecture_table(rows, args.out)
            fig = conjecture_figure(rows, Path(args.out).with_suffix(".png"))
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
        print(f"table:  {path}")
        print(f"figure: {fig}")
    return 0


def cmd_gen(args) -> int:
    if args.n < 1:
        print("error: --n must be >= 1", file=sys.stderr)
        return 2
    if args.dmax < 1:
        print("error: --dmax must be >= 1", file=sys.stderr)
        return 2
    for levels in free_tree_sequences(args.n, args.dmax):
        if args.graph6:
            print(write_graph6(level_sequence_to_graph(levels)))
        else:
            print(" ".join(map(str, levels)))
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
