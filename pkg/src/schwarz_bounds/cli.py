"""Command line: ``table``, ``verify``, ``sharpness``, ``extremal``.

Exit codes: 0 all checks pass, 1 a mathematical violation was found,
2 usage error. Output is CSV (default) or JSON, preceded in CSV by one
``#`` line echoing the command and its configuration.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import bounds as B
from .extremals import KINDS, Extremal, extremal_coeffs, extremal_via_series
from .optimizer import OptConfig, sweep
from .soundness import RESIDUAL_TOL, soundness_sweep

USAGE_ERROR = 2
VIOLATION = 1


def fmt(x) -> str:
    if isinstance(x, (int, np.integer)) and not isinstance(x, bool):
        return str(int(x))
    if isinstance(x, str):
        return x
    x = float(x)
    if x == 0:
        x = 0.0  # drop the sign of -0.0
    return format(x, ".12g")


def _mu(text: str) -> complex:
    try:
        mu = complex(text.replace(" ", ""))
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid mu {text!r}") from None
    if not np.isfinite(mu):
        raise argparse.ArgumentTypeError("mu must be finite")
    return mu


def _mu_text(mu: complex) -> str:
    return fmt(mu.real) if mu.imag == 0 else f"{fmt(mu.real)}{'+' if mu.imag >= 0 else ''}{fmt(mu.imag)}j"


def _positive_int(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {n}")
    return n


def _nonneg_int(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if n < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {n}")
    return n


def _unit_real(text: str) -> float:
    try:
        t = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a real number, got {text!r}") from None
    if not 0 <= t <= 1:
        raise argparse.ArgumentTypeError(f"t = {t} outside [0, 1]")
    return t


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--out", default=None, help="output path (default: stdout)")
    common.add_argument("--seed", type=_nonneg_int, default=0)

    functional = argparse.ArgumentParser(add_help=False)
    functional.add_argument("--functional", choices=("F1", "F2", "F3"), required=True)
    functional.add_argument("--mu", type=_mu, default=1.0 + 0j)
    functional.add_argument("--variant", choices=B.TH3_VARIANTS, default=None,
                            help="form of the |c1 c3 - c2^2| bound (F2 with mu=1 only)")

    parser = argparse.ArgumentParser(prog="schwarz-bounds", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", parents=[common, functional], help="tabulate a closed-form bound")
    p.add_argument("--grid", type=_positive_int, default=101)

    p = sub.add_parser("verify", parents=[common], help="sampling soundness check of all bounds")
    p.add_argument("--samples", type=_positive_int, default=100_000)
    p.add_argument("--depth", type=_positive_int, default=6)
    p.add_argument("--check-th3-variant", choices=B.TH3_VARIANTS, default="remark")

    p = sub.add_parser("sharpness", parents=[common, functional], help="optimizer vs bound sweep")
    p.add_argument("--grid", type=_positive_int, default=11)
    p.add_argument("--t", type=_unit_real, action="append", default=None,
                   help="explicit grid point (repeatable; overrides --grid)")
    p.add_argument("--depth", type=_positive_int, default=6)
    p.add_argument("--starts", type=_positive_int, default=64)
    p.add_argument("--iters", type=_positive_int, default=200)

    p = sub.add_parser("extremal", parents=[common], help="print an extremal function's coefficients")
    p.add_argument("kind", choices=KINDS)
    p.add_argument("--t", type=_unit_real, default=0.5)
    p.add_argument("--order", type=_positive_int, default=10)
    return parser


def _config_echo(args) -> dict:
    out = {}
    for k, v in sorted(vars(args).items()):
        if k in ("out", "format", "command"):
            continue
        if isinstance(v, complex):
            v = _mu_text(v)
        elif isinstance(v, list):
            v = ",".join(fmt(x) for x in v)
        out[k] = v
    return out


def _emit(args, header: list[str], rows: list[list], extra: dict | None = None, comments=()):
    config = _config_echo(args)
    if args.format == "json":
        doc = {"command": args.command, "config": config}
        if extra:
            doc.update(extra)
        doc["rows"] = [dict(zip(header, r)) for r in rows]
        text = json.dumps(doc, indent=2, default=_json_default) + "\n"
    else:
        echo = " ".join(f"{k}={v}" for k, v in config.items())
        lines = [f"# schwarz-bounds {args.command} {echo}"]
        lines += [f"# {c}" for c in comments]
        lines.append(",".join(header))
        lines += [",".join(fmt(x) for x in r) for r in rows]
        text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json_default(x):
    if isinstance(x, np.integer):
        return int(x)
    if isinstance(x, np.floating):
        return float(x)
    if isinstance(x, complex):
        return [x.real, x.imag]
    raise TypeError(type(x))


def _spec(args) -> B.FunctionalSpec:
    spec = B.FunctionalSpec(args.functional, args.mu)
    if args.variant is not None and (spec.kind != "F2" or spec.mu_abs != 1):
        raise B.DomainError("--variant applies only to --functional F2 with |mu| = 1")
    return spec


def cmd_table(args) -> int:
    spec = _spec(args)
    rows = []
    for t in np.linspace(0.0, 1.0, args.grid) if args.grid > 1 else [0.0]:
        bv, _ = B.operative_bound(spec, t, args.variant)
        rows.append([t, bv.value, bv.branch])
    _, name = B.operative_bound(spec, 0.0, args.variant)
    _emit(args, ["t", "bound", "branch"], rows, {"bound_name": name}, [f"bound={name} functional={spec.describe()}"])
    return 0


def cmd_verify(args) -> int:
    report = soundness_sweep(args.samples, args.depth, args.seed, args.check_th3_variant)
    rows = [[c.klass, c.name, c.max_residual, c.count, "ok" if c.ok else "VIOLATED"] for c in report.checks]
    extra = {"tolerance": RESIDUAL_TOL, "ok": report.ok}
    if not report.ok:
        extra["violations"] = {c.name: [[g.real, g.imag] for g in c.worst.params] for c in report.failures()}
    _emit(args, ["class", "check", "max_residual", "samples", "status"], rows, extra,
          [f"tolerance={fmt(RESIDUAL_TOL)}"])
    for c in report.failures():
        params = ", ".join(f"{g.real:.17g}{g.imag:+.17g}j" for g in c.worst.params)
        print(f"violation {c.name} ({c.klass}): residual {fmt(c.max_residual)} at schur params [{params}]",
              file=sys.stderr)
    return 0 if report.ok else VIOLATION


def cmd_sharpness(args) -> int:
    spec = _spec(args)
    grid = args.t if args.t else list(np.linspace(0.0, 1.0, args.grid))
    cfg = OptConfig(depth=args.depth, starts=args.starts, iters=args.iters, seed=args.seed)
    reports = sweep(spec, grid, cfg, variant=args.variant)
    rows = [[r.t, r.empirical_max, r.bound, r.gap, r.evaluations] for r in reports]
    name = reports[0].bound_name if reports else B.operative_bound(spec, 0.0, args.variant)[1]
    violated = [r for r in reports if r.empirical_max > r.bound + RESIDUAL_TOL]
    _emit(args, ["t", "empirical_max", "bound", "gap", "evaluations"], rows, {"bound_name": name},
          [f"bound={name} functional={spec.describe()}"])
    for r in violated:
        params = ", ".join(f"{g.real:.17g}{g.imag:+.17g}j" for g in r.argmax.params)
        print(f"bound {name} exceeded at t={fmt(r.t)}: {fmt(r.empirical_max)} > {fmt(r.bound)}; "
              f"schur params [{params}]", file=sys.stderr)
    return VIOLATION if violated else 0


def cmd_extremal(args) -> int:
    if args.order < 4:
        raise B.DomainError("--order must be >= 4")
    kind = Extremal(args.kind, args.t)
    closed = extremal_coeffs(kind, args.order).c
    engine = extremal_via_series(kind, args.order).c
    diff = np.abs(closed - engine)
    rows = [[k + 1, closed[k].real, engine[k].real, diff[k]] for k in range(args.order)]
    comments = [f"max_discrepancy={fmt(diff.max())}"]
    if kind.kind == "omega3":
        comments.append("z^6 coefficient is 0 and z^7 is -t(1-t^2)/7 (term-by-term integration)")
    _emit(args, ["k", "closed_form", "via_series", "abs_diff"], rows,
          {"max_discrepancy": float(diff.max())}, comments)
    return 0


COMMANDS = {"table": cmd_table, "verify": cmd_verify, "sharpness": cmd_sharpness, "extremal": cmd_extremal}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (B.DomainError, ValueError) as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
