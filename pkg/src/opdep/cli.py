"""Command line interface.

Commands:
    estimate     empirical pattern dependence from a two-column CSV
    verify       run a named scenario verifier (exit 0 only if it passes)
    model        operations on a serialized model file
    concordance  grid domination check between two piecewise models

Exit codes: 0 success (and, for verify/concordance, the property holds);
1 a verification or domination check failed; 2 usage, parse, or schema
errors; 3 the dependence coefficient is undefined for the input.

Set ``OPDEP_LOG`` to a level name (DEBUG, INFO, ...) to enable logging.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import os
import sys
from pathlib import Path
from typing import Sequence

from . import discrete as disc
from . import piecewise as pw
from .errors import DegenerateDistribution, InvalidParameter, ModelFormatError, OpdepError
from .estimator import TimeSeriesPair, empirical_opd
from .modelio import load_model
from .patterns import enumerate_patterns
from .scenarios import SCENARIOS, run_scenario

log = logging.getLogger("opdep")


def _setup_logging() -> None:
    level_name = os.environ.get("OPDEP_LOG", "").strip().upper()
    if not level_name:
        return
    level = getattr(logging, level_name, None)
    if not isinstance(level, int):
        level = logging.INFO
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text if text.endswith("\n") else text + "\n", encoding="utf-8")
    else:
        print(text)


def _emit_payload(payload: dict, text_lines: list[str], args: argparse.Namespace) -> None:
    if args.format == "json":
        _emit(json.dumps(payload, indent=2), args.out)
    else:
        _emit("\n".join(text_lines), args.out)


def _parse_point(raw: str) -> tuple[float, ...]:
    try:
        return tuple(float(part) for part in raw.split(","))
    except ValueError:
        raise InvalidParameter(f"--point must be comma-separated reals, got {raw!r}") from None


def _read_series_csv(path: str) -> TimeSeriesPair:
    """Two-column CSV; an optional non-numeric first row is a header."""
    xs: list[float] = []
    ys: list[float] = []
    with open(path, newline="", encoding="utf-8") as handle:
        reader = csv.reader(handle)
        first_data_row = True
        for lineno, row in enumerate(reader, start=1):
            if not row or all(not col.strip() for col in row):
                continue
            if len(row) < 2:
                raise InvalidParameter(f"{path}:{lineno}: need at least two columns")
            try:
                x = float(row[0])
                y = float(row[1])
            except ValueError:
                if first_data_row:
                    first_data_row = False
                    continue
                raise InvalidParameter(f"{path}:{lineno}: not numeric: {row[:2]!r}") from None
            first_data_row = False
            xs.append(x)
            ys.append(y)
    if not xs:
        raise InvalidParameter(f"{path}: no data rows")
    return TimeSeriesPair(xs, ys)


def cmd_estimate(args: argparse.Namespace) -> int:
    pair = _read_series_csv(args.csv)
    log.info("read %d rows from %s", len(pair), args.csv)
    estimate = empirical_opd(pair, d=args.order, step=args.step)
    payload = estimate.to_dict()
    lines = [f"{key} {value}" for key, value in payload.items()]
    _emit_payload(payload, lines, args)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    report = run_scenario(args.scenario)
    lines = []
    for check in report.checks:
        status = "PASS" if check.passed else "FAIL"
        lines.append(f"{status} {check.name} (expected {check.expected}, got {check.actual})")
    lines.append(
        f"{report.scenario}: {'PASS' if report.passed else 'FAIL'} ({len(report.checks)} checks)"
    )
    _emit_payload(report.to_dict(), lines, args)
    return 0 if report.passed else 1


def _pattern_table(dist) -> dict[str, float]:
    patterns = enumerate_patterns(dist.order)
    return {",".join(map(str, pat)): prob for pat, prob in zip(patterns, dist.probs)}


def cmd_model(args: argparse.Namespace) -> int:
    model = load_model(args.path)
    kind = "piecewise" if isinstance(model, pw.PiecewiseUniformDensity) else "discrete"
    log.info("loaded %s model of order %d from %s", kind, model.order, args.path)

    if args.action == "validate":
        if kind == "piecewise":
            try:
                pw.validate(model, tol=args.tol)
            except OpdepError as exc:
                _emit_payload(
                    {"valid": False, "kind": kind, "order": model.order, "error": str(exc)},
                    [f"invalid: {exc}"],
                    args,
                )
                return 1
            mass = pw.total_mass(model)
        else:
            # Discrete laws check atom mass on construction, so loading
            # succeeded means the law is valid.
            mass = 1.0
        payload = {"valid": True, "kind": kind, "order": model.order, "total_mass": mass}
        _emit_payload(payload, [f"valid {kind} model, order {model.order}, mass {mass}"], args)
        return 0

    if args.action == "opd":
        if kind == "piecewise":
            value = pw.exact_opd(model)
            coincidence = pw.pattern_coincidence(model)
        else:
            value = disc.exact_opd_discrete(model)
            coincidence = disc.pattern_coincidence_discrete(model)
        payload = {"value": value, "coincidence": coincidence}
        _emit_payload(payload, [f"value {value}", f"coincidence {coincidence}"], args)
        return 0

    if args.action == "patterns":
        if kind == "piecewise":
            px = pw.marginal_pattern_distribution(model, "x")
            py = pw.marginal_pattern_distribution(model, "y")
        else:
            px = disc.marginal_pattern_distribution_discrete(model, "x")
            py = disc.marginal_pattern_distribution_discrete(model, "y")
        payload = {"x": _pattern_table(px), "y": _pattern_table(py)}
        lines = ["x patterns:"]
        lines += [f"  {k} {v}" for k, v in payload["x"].items()]
        lines.append("y patterns:")
        lines += [f"  {k} {v}" for k, v in payload["y"].items()]
        _emit_payload(payload, lines, args)
        return 0

    if args.action == "cdf":
        if args.point is None:
            raise InvalidParameter("model cdf requires --point")
        point = _parse_point(args.point)
        if kind == "piecewise":
            lower = pw.cdf(model, point)
            upper = pw.survival(model, point)
        else:
            lower = disc.cdf(model, point)
            upper = disc.survival(model, point)
        payload = {"point": list(point), "cdf": lower, "survival": upper}
        _emit_payload(payload, [f"cdf {lower}", f"survival {upper}"], args)
        return 0

    if args.action == "sample":
        if args.seed is None:
            raise InvalidParameter("model sample requires an explicit --seed")
        if kind == "piecewise":
            points = pw.sample(model, args.count, args.seed)
            rows = [tuple(float(v) for v in row) for row in points]
        else:
            rows = disc.sample_discrete(model, args.count, args.seed)
        text = "\n".join(",".join(repr(v) for v in row) for row in rows)
        _emit(text, args.out)
        return 0

    raise InvalidParameter(f"unknown model action {args.action!r}")


def cmd_concordance(args: argparse.Namespace) -> int:
    model_a = load_model(args.first)
    model_b = load_model(args.second)
    if not isinstance(model_a, pw.PiecewiseUniformDensity) or not isinstance(
        model_b, pw.PiecewiseUniformDensity
    ):
        raise InvalidParameter("concordance compares two piecewise models")
    report = pw.concordance_check(
        model_a, model_b, tol=args.tol, points_per_axis=args.grid
    )
    lines = [
        f"cdf_dominated {report.cdf_dominated}",
        f"survival_dominated {report.survival_dominated}",
        f"max_cdf_violation {report.max_cdf_violation}",
        f"max_survival_violation {report.max_survival_violation}",
    ]
    for point in report.witness_points[:5]:
        lines.append("witness " + ",".join(repr(v) for v in point))
    _emit_payload(report.to_dict(), lines, args)
    return 0 if report.dominated else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="opdep",
        description="Ordinal pattern dependence: estimation, exact models, verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("json", "text"), default="text")
        p.add_argument("--out", default=None, help="write output to this file")

    p_est = sub.add_parser("estimate", help="empirical dependence from a two-column CSV")
    p_est.add_argument("csv", help="CSV file with x and y columns")
    p_est.add_argument("-d", "--order", type=int, default=2, help="pattern order (default 2)")
    p_est.add_argument("--step", type=int, default=1, help="window offset step (default 1)")
    add_common(p_est)
    p_est.set_defaults(func=cmd_estimate)

    p_ver = sub.add_parser("verify", help="run a scenario verifier")
    p_ver.add_argument("scenario", choices=sorted(SCENARIOS))
    add_common(p_ver)
    p_ver.set_defaults(func=cmd_verify)

    p_mod = sub.add_parser("model", help="operate on a serialized model")
    p_mod.add_argument("action", choices=("validate", "opd", "patterns", "cdf", "sample"))
    p_mod.add_argument("path", help="model JSON file")
    p_mod.add_argument("--point", default=None, help="comma-separated coordinates for cdf")
    p_mod.add_argument("--count", type=int, default=1000, help="sample size (default 1000)")
    p_mod.add_argument("--seed", type=int, default=None, help="RNG seed (required for sample)")
    p_mod.add_argument("--tol", type=float, default=1e-12)
    add_common(p_mod)
    p_mod.set_defaults(func=cmd_model)

    p_con = sub.add_parser("concordance", help="cdf/survival domination of two models")
    p_con.add_argument("first", help="model whose distribution functions must lie below")
    p_con.add_argument("second", help="model whose distribution functions must lie above")
    p_con.add_argument("--grid", type=int, default=9, help="grid points per axis (default 9)")
    p_con.add_argument("--tol", type=float, default=1e-12)
    add_common(p_con)
    p_con.set_defaults(func=cmd_concordance)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    _setup_logging()
    try:
        return args.func(args)
    except ModelFormatError as exc:
        print(f"error: model format: {exc}", file=sys.stderr)
        return 2
    except DegenerateDistribution as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OpdepError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
