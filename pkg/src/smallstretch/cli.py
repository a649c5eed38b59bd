"""Command-line entry point.

Subcommands: pf (spectral bracket of a matrix file), penner (dilatation
of a twist word on a curve system), gamma (shift-graph family queries),
jacobsthal (coprime-gap values and growth fit), bounds (entropy bound
tables), verify-all (full verification grid with report, delimited
output, and figures).

Exit codes: 0 success, 1 a verified property failed or a computation
could not be completed, 2 malformed input.  Identical arguments and seed
produce byte-identical outputs; no timestamps, no environment variables.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path
from typing import Sequence

from . import bounds as bnd
from .digraphs import (build_shift_graph, check_girth_threshold,
                       check_path_counts, shift_graph_dot, validate_shift_graph)
from .intmatrix import NotPrimitiveError, is_primitive, matrix_from_text, pf_eigen
from .numtheory import jacobsthal, jacobsthal_fit, jacobsthal_table
from .penner import (check_penner_word, curve_system_from_json, dilatation,
                     word_from_json)
from .verify import run_all


def _write_or_print(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")
        print(f"wrote {out}")


def _cmd_pf(args: argparse.Namespace) -> int:
    try:
        matrix = matrix_from_text(Path(args.matrix).read_text(encoding="utf-8"))
    except OSError as exc:
        print(f"error: cannot read matrix file: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    report = is_primitive(matrix)
    if not report.primitive:
        print(f"error: matrix is not primitive ({report.reason})", file=sys.stderr)
        return 1
    bracket = pf_eigen(matrix, tol=args.tol)
    print(f"dim: {matrix.dim}")
    print(f"estimate: {bracket.estimate!r}")
    print(f"bracket: [{bracket.lower!r}, {bracket.upper!r}]")
    print(f"width: {bracket.width!r}")
    print(f"iterations: {bracket.iterations}")
    vec = " ".join(repr(x) for x in bracket.eigenvector)
    print(f"eigenvector: {vec}")
    return 0


def _cmd_penner(args: argparse.Namespace) -> int:
    try:
        system = curve_system_from_json(
            json.loads(Path(args.system).read_text(encoding="utf-8")))
        word = word_from_json(
            json.loads(Path(args.word).read_text(encoding="utf-8")))
    except OSError as exc:
        print(f"error: cannot read input: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    check = check_penner_word(system, word)
    print(f"curves: {system.size} ({len(system.curves_on_side('alpha'))} alpha, "
          f"{len(system.curves_on_side('beta'))} beta)")
    print(f"word steps: {len(word)}")
    print(f"coverage certified at iterate: {check.certified_power}")
    if check.certified_power is None:
        print(f"alpha coverage at iterate: {check.alpha_certified_power}")
        print(f"beta coverage at iterate: {check.beta_certified_power}")
    if check.sign_violations:
        for v in check.sign_violations:
            print(f"sign violation: {v}")
    if check.missing_alpha:
        print(f"alpha curves never twisted: {', '.join(check.missing_alpha)}")
    if check.missing_beta:
        print(f"beta curves never twisted: {', '.join(check.missing_beta)}")
    if not check.ok:
        print("word does not satisfy the twist-coverage conditions",
              file=sys.stderr)
        return 1
    try:
        bracket = dilatation(system, word, tol=args.tol)
    except (NotPrimitiveError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(f"dilatation: {bracket.estimate!r}")
    print(f"bracket: [{bracket.lower!r}, {bracket.upper!r}]")
    return 0


def _cmd_gamma(args: argparse.Namespace) -> int:
    try:
        sg = build_shift_graph(args.n, args.k)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    problems = validate_shift_graph(sg)
    girth = check_girth_threshold(args.n, args.k, method="bfs")
    walks = check_path_counts(args.n, args.k, args.D)
    if args.emit == "dot":
        _write_or_print(shift_graph_dot(sg), args.out)
    elif args.emit == "json":
        payload = {
            "n": sg.n, "k": sg.k, "shift": sg.shift,
            "vertices": sg.graph.vertex_count,
            "edges": sg.graph.edge_count,
            "girth": girth.girth,
            "threshold": girth.threshold,
            "girth_holds": girth.holds,
            "predicted_girth": girth.predicted,
            "walk_length": walks.length,
            "degree_cap": walks.max_out_degree,
            "unweighted_max": walks.unweighted_max,
            "unweighted_cap": walks.unweighted_cap,
            "weighted_max": walks.weighted_max,
            "weighted_cap": walks.weighted_cap,
            "structure_violations": list(problems),
        }
        _write_or_print(json.dumps(payload, indent=2) + "\n", args.out)
    else:
        lines = [
            f"shift graph on {sg.n} x {sg.k} residue pairs",
            f"vertices: {sg.graph.vertex_count}",
            f"edges: {sg.graph.edge_count}",
            f"shift: {sg.shift}",
            f"girth: {girth.girth} (threshold {girth.threshold!r}, "
            f"predicted {girth.predicted})",
            f"girth above threshold: {girth.holds}",
            f"walks of length {walks.length}: unweighted max "
            f"{walks.unweighted_max} (cap {walks.unweighted_cap}), "
            f"D={walks.max_out_degree} weighted max {walks.weighted_max} "
            f"(cap {walks.weighted_cap})",
        ]
        if problems:
            lines.extend(f"structure violation: {p}" for p in problems)
        _write_or_print("\n".join(lines) + "\n", args.out)
    if problems or not girth.holds or not walks.holds:
        return 1
    return 0


def _fit_csv(table: Sequence[int]) -> str:
    lines = ["n,jacobsthal,log_squared,ratio"]
    for n in range(3, len(table)):
        ls = math.log(n) ** 2
        lines.append(f"{n},{table[n]},{ls!r},{table[n] / ls!r}")
    return "\n".join(lines) + "\n"


def _cmd_jacobsthal(args: argparse.Namespace) -> int:
    if args.max_n < 1:
        print("error: --max-n must be positive", file=sys.stderr)
        return 2
    if not args.fit:
        print(f"jacobsthal({args.max_n}) = {jacobsthal(args.max_n)}")
        return 0
    if args.max_n < 3:
        print("error: --fit needs --max-n at least 3", file=sys.stderr)
        return 2
    table = jacobsthal_table(args.max_n)
    fit = jacobsthal_fit(args.max_n, table)
    _write_or_print(_fit_csv(table), args.out)
    if args.out is not None:
        print(f"fitted constant {fit.constant!r} at n={fit.argmax}")
    if args.plot is not None:
        from .plotting import save_jacobsthal_fit_figure
        save_jacobsthal_fit_figure(table, fit.constant, args.plot)
        print(f"wrote {args.plot}")
    return 0


def _cmd_bounds(args: argparse.Namespace) -> int:
    if args.g_min < 2 or args.g_max < args.g_min:
        print("error: need 2 <= --g-min <= --g-max", file=sys.stderr)
        return 2
    try:
        records = bnd.bounds_table([args.n], range(args.g_min, args.g_max + 1),
                                   max_out_degree=args.D,
                                   interval_constant=args.K)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.format == "json":
        _write_or_print(bnd.records_to_json(records), args.out)
    else:
        _write_or_print(bnd.records_to_csv(records), args.out)
    if args.plot is not None:
        from .plotting import save_bound_decay_figure
        save_bound_decay_figure(records, args.plot)
        print(f"wrote {args.plot}")
    return 0


def _girth_csv(artifacts) -> str:
    lines = ["n,k,girth,threshold,holds,predicted"]
    for c in artifacts.girth_checks:
        lines.append(f"{c.n},{c.k},{c.girth},{c.threshold!r},{c.holds},{c.predicted}")
    return "\n".join(lines) + "\n"


def _cmd_verify_all(args: argparse.Namespace) -> int:
    report, artifacts = run_all(seed=args.seed, quick=args.quick)
    text = report.render()
    sys.stdout.write(text)
    if args.outdir is not None:
        outdir = Path(args.outdir)
        outdir.mkdir(parents=True, exist_ok=True)
        (outdir / "report.txt").write_text(text, encoding="utf-8")
        (outdir / "bounds.csv").write_text(
            bnd.records_to_csv(artifacts.bound_records), encoding="utf-8")
        (outdir / "jacobsthal_fit.csv").write_text(
            _fit_csv(artifacts.jacobsthal_values), encoding="utf-8")
        (outdir / "girth.csv").write_text(_girth_csv(artifacts), encoding="utf-8")
        from .plotting import (save_bound_decay_figure,
                               save_girth_margin_figure,
                               save_jacobsthal_fit_figure)
        save_jacobsthal_fit_figure(artifacts.jacobsthal_values,
                                   artifacts.fit_constant,
                                   str(outdir / "jacobsthal_fit.png"))
        save_bound_decay_figure(artifacts.bound_records,
                                str(outdir / "bound_decay.png"))
        save_girth_margin_figure(artifacts.girth_checks,
                                 str(outdir / "girth_margins.png"))
        print(f"wrote report and figures under {outdir}")
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="smallstretch",
        description="Desk-scale verification of small-stretch-factor "
                    "machinery: spectral brackets, twist words, shift "
                    "graphs, coprime gaps, and entropy bound tables.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pf", help="certified dominant eigenvalue of a "
                                  "non-negative integer matrix file")
    p.add_argument("matrix", help="matrix text file: dimension line, then rows")
    p.add_argument("--tol", type=float, default=1e-12)
    p.set_defaults(func=_cmd_pf)

    p = sub.add_parser("penner", help="twist-word coverage check and dilatation")
    p.add_argument("--system", required=True, help="curve system JSON file")
    p.add_argument("--word", required=True, help="twist word JSON file")
    p.add_argument("--tol", type=float, default=1e-12)
    p.set_defaults(func=_cmd_penner)

    p = sub.add_parser("gamma", help="shift-graph girth and walk-count queries")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--D", type=int, default=2, help="degree cap for weighted walks")
    p.add_argument("--emit", choices=("summary", "dot", "json"), default="summary")
    p.add_argument("--out", default=None, help="write output to a file")
    p.set_defaults(func=_cmd_gamma)

    p = sub.add_parser("jacobsthal", help="coprime-gap values and growth fit")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--fit", action="store_true",
                   help="emit per-n CSV (n, j(n), ln(n)^2, ratio) up to max-n")
    p.add_argument("--out", default=None)
    p.add_argument("--plot", default=None, help="render the fit figure to a file")
    p.set_defaults(func=_cmd_jacobsthal)

    p = sub.add_parser("bounds", help="entropy bound table for one puncture count")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--g-min", type=int, required=True)
    p.add_argument("--g-max", type=int, required=True)
    p.add_argument("--D", type=int, default=2)
    p.add_argument("--K", type=float, default=bnd.FITTED_INTERVAL_CONSTANT)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", default=None)
    p.add_argument("--plot", default=None, help="render the decay figure to a file")
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("verify-all", help="run the verification grid; with "
                                          "--outdir also write the report, "
                                          "CSV tables, and figures")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--quick", action="store_true",
                   help="smaller grids for smoke and reproducibility runs")
    p.add_argument("--outdir", default=None)
    p.set_defaults(func=_cmd_verify_all)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
