"""Command-line front end: every experiment as a table.

Six subcommands map one-to-one onto the library surface: exact zeta
values (zeta), kernel sampling (kernel), delta-sequence convergence
(action), the two comb routes side by side (comb), partial sums against
closed forms (fourier), and the truncated sinc integral (sinc).

Output is a single table in text, CSV, or JSON.  Formatting is fixed so
that identical invocations are byte-identical: floats print via repr
(shortest round-trip), exact values print as "num/den π^k", CSV is UTF-8
with LF endings, and JSON is one object {command, params, columns, rows}
with rows as arrays.

Exit codes: 0 success, 2 usage error (argparse's own convention), 3
numerical failure (quadrature budget exhausted or an oracle mismatch).
"""

import argparse
import csv
import io
import json
import math
import sys

from .actions import (
    ConvergenceRow,
    delta0_comb_action,
    delta0_partial_action,
    deltaN_action,
    delta1_closed,
    delta2_closed,
    fourier_partial_delta1,
    fourier_partial_delta2,
)
from .kernels import kernel_samples
from .quad import QuadratureError, sinc_truncated
from .testfn import TestFunction, bump_plateau, gaussian_bump
from .zeta_ladder import bernoulli_oracle, zeta_even

__all__ = ["build_parser", "run", "main"]


class _NumericalFailure(Exception):
    pass


def _nonneg_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def _pos_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _samples_count(text: str) -> int:
    value = int(text)
    if value < 2:
        raise argparse.ArgumentTypeError(f"need at least 2 samples, got {value}")
    return value


def _pos_float(text: str) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"must be > 0, got {value}")
    return value


def _n_list(text: str) -> list[int]:
    try:
        values = [int(part) for part in text.split(",") if part != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}")
    if not values or any(n < 0 for n in values):
        raise argparse.ArgumentTypeError(f"need non-negative integers, got {text!r}")
    return values


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zetacomb",
        description="Exact even zeta values and kernel/action verification tables.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--format", choices=("csv", "json", "text"), default="text",
            help="output format (default: text)",
        )
        p.add_argument("--out", metavar="PATH", help="write to PATH instead of stdout")
        p.add_argument(
            "--tol", type=_pos_float, default=1e-10,
            help="quadrature tolerance where applicable (default: 1e-10)",
        )

    p = sub.add_parser("zeta", help="exact zeta(2k) as rational multiples of pi^2k")
    p.add_argument("--max-k", type=_pos_int, required=True, metavar="K",
                   help="emit rows for 2k = 2..2K")
    p.add_argument("--oracle", action="store_true",
                   help="add the Bernoulli-formula column; values must match")
    common(p)

    p = sub.add_parser("kernel", help="sample the order-N kernel in both forms")
    p.add_argument("--n", type=_nonneg_int, required=True, metavar="N")
    p.add_argument("--samples", type=_samples_count, default=2001, metavar="M")
    p.add_argument("--xmin", type=float, default=-math.pi)
    p.add_argument("--xmax", type=float, default=math.pi)
    common(p)

    def phi_args(p: argparse.ArgumentParser) -> None:
        p.add_argument("--phi", choices=("plateau", "gauss"), default="plateau",
                       help="test function family (default: plateau)")
        p.add_argument("--center", type=float, default=None,
                       help="gauss only: bump center (default 0)")
        p.add_argument("--radius", type=_pos_float, default=None,
                       help="gauss only: bump radius (default 1)")

    p = sub.add_parser("action", help="kernel action vs 2*pi*phi(0) over a list of N")
    phi_args(p)
    p.add_argument("--n-list", type=_n_list, required=True, metavar="N1,N2,...")
    common(p)

    p = sub.add_parser("comb", help="partial action vs lattice sum at one N")
    phi_args(p)
    p.add_argument("--n", type=_nonneg_int, required=True, metavar="N")
    common(p)

    p = sub.add_parser("fourier", help="partial sum vs closed form on a grid")
    p.add_argument("--order", type=int, choices=(1, 2), required=True)
    p.add_argument("--n", type=_pos_int, required=True, metavar="N")
    p.add_argument("--samples", type=_samples_count, required=True, metavar="M")
    p.add_argument("--xmin", type=float, required=True)
    p.add_argument("--xmax", type=float, required=True)
    common(p)

    p = sub.add_parser("sinc", help="truncated sinc integral for N = 0..n_max")
    p.add_argument("--n-max", type=_nonneg_int, required=True, metavar="N")
    common(p)

    return parser


def _build_phi(parser: argparse.ArgumentParser, args: argparse.Namespace) -> TestFunction:
    if args.phi == "plateau":
        if args.center is not None or args.radius is not None:
            parser.error("--center/--radius apply only to --phi gauss")
        return bump_plateau(math.pi, 1.5 * math.pi)
    center = 0.0 if args.center is None else args.center
    radius = 1.0 if args.radius is None else args.radius
    return gaussian_bump(center, radius)


def _phi_params(args: argparse.Namespace) -> dict:
    params = {"phi": args.phi}
    if args.phi == "gauss":
        params["center"] = 0.0 if args.center is None else args.center
        params["radius"] = 1.0 if args.radius is None else args.radius
    return params


def _cmd_zeta(parser, args):
    columns = ["two_k", "zeta"]
    if args.oracle:
        columns.append("bernoulli")
    rows = []
    for k in range(1, args.max_k + 1):
        two_k = 2 * k
        value = zeta_even(two_k)
        row = [two_k, str(value)]
        if args.oracle:
            oracle = bernoulli_oracle(two_k)
            if oracle.value != value.value:
                raise _NumericalFailure(
                    f"ladder and Bernoulli oracle disagree at 2k={two_k}"
                )
            row.append(str(oracle))
        rows.append(row)
    return {"max_k": args.max_k, "oracle": args.oracle}, columns, rows


def _cmd_kernel(parser, args):
    try:
        table = kernel_samples(args.n, args.samples, args.xmin, args.xmax)
    except ValueError as exc:
        parser.error(str(exc))
    rows = [[x, values[0], values[1]] for x, values in table.rows]
    params = {"n": args.n, "samples": args.samples, "xmin": args.xmin, "xmax": args.xmax}
    return params, list(table.column_names), rows


def _cmd_action(parser, args):
    phi = _build_phi(parser, args)
    reference = 2.0 * math.pi * phi(0.0)
    rows = []
    for N in args.n_list:
        row = ConvergenceRow.make(N, deltaN_action(phi, N, args.tol), reference)
        rows.append([row.N, row.value, row.reference, row.abs_error])
    params = {**_phi_params(args), "n_list": args.n_list, "tol": args.tol}
    return params, ["N", "value", "reference", "abs_error"], rows


def _cmd_comb(parser, args):
    phi = _build_phi(parser, args)
    partial = delta0_partial_action(phi, args.n, args.tol)
    comb = delta0_comb_action(phi)
    rows = [[args.n, partial, comb, abs(partial - comb)]]
    params = {**_phi_params(args), "n": args.n, "tol": args.tol}
    return params, ["N", "partial_action", "comb_action", "abs_diff"], rows


def _cmd_fourier(parser, args):
    if not args.xmin < args.xmax:
        parser.error(f"need --xmin < --xmax, got [{args.xmin}, {args.xmax}]")
    partial = fourier_partial_delta1 if args.order == 1 else fourier_partial_delta2
    closed = delta1_closed if args.order == 1 else delta2_closed
    step = (args.xmax - args.xmin) / (args.samples - 1)
    rows = []
    for i in range(args.samples):
        x = args.xmax if i == args.samples - 1 else args.xmin + i * step
        p = partial(args.n, x)
        c = closed(x)
        rows.append([x, p, c, abs(p - c)])
    params = {
        "order": args.order, "n": args.n, "samples": args.samples,
        "xmin": args.xmin, "xmax": args.xmax,
    }
    return params, ["x", "partial_sum", "closed_form", "abs_error"], rows


def _cmd_sinc(parser, args):
    rows = []
    for N in range(args.n_max + 1):
        result = sinc_truncated(N, args.tol)
        rows.append([N, result.value, abs(result.value - math.pi)])
    params = {"n_max": args.n_max, "tol": args.tol}
    return params, ["N", "value", "abs_error_vs_pi"], rows


_HANDLERS = {
    "zeta": _cmd_zeta,
    "kernel": _cmd_kernel,
    "action": _cmd_action,
    "comb": _cmd_comb,
    "fourier": _cmd_fourier,
    "sinc": _cmd_sinc,
}


def _format_cell(cell) -> str:
    if isinstance(cell, float):
        return repr(cell)
    return str(cell)


def _render(command: str, params: dict, columns: list, rows: list, fmt: str) -> str:
    if fmt == "json":
        payload = {"command": command, "params": params, "columns": columns, "rows": rows}
        return json.dumps(payload, ensure_ascii=False) + "\n"
    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_format_cell(cell) for cell in row])
        return buffer.getvalue()
    cells = [columns] + [[_format_cell(cell) for cell in row] for row in rows]
    widths = [max(len(line[j]) for line in cells) for j in range(len(columns))]
    lines = [
        "  ".join(cell.ljust(width) for cell, width in zip(line, widths)).rstrip()
        for line in cells
    ]
    return "\n".join(lines) + "\n"


def run(argv=None) -> int:
    """Parse argv, dispatch, write the table; returns the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        params, columns, rows = _HANDLERS[args.subcommand](parser, args)
    except SystemExit as exc:
        # argparse has already printed the diagnostic and usage synopsis
        return exc.code if isinstance(exc.code, int) else 2
    except (QuadratureError, _NumericalFailure) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3
    text = _render(args.subcommand, params, columns, rows, args.format)
    if args.out is None:
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
