"""Command-line interface.

Exit codes: 0 success, 2 usage or input error, 1 internal error,
130 interrupted (partial CSV ends with ``#truncated``).
"""

from __future__ import annotations

import argparse
import csv
import datetime as _dt
import hashlib
import io
import json
import math
import os
import sys
import tempfile
from pathlib import Path

import numpy as np

from . import __version__
from ._backend import BACKEND
from .correction import (
    asymptotic_constant,
    compare_models,
    factor,
    published_factors,
    write_factor_csv,
)
from .estimators import as_sample, c4, estimate, mad_raw, qn_fast, sn_fast
from .fitting import fit_inverse_poly, prediction_error
from .kinds import CorrectionModel, EstimatorKind
from .montecarlo import (
    EFFICIENCY_STUDY,
    FACTOR_STUDY,
    SimulationConfig,
    EFFICIENCY_COLUMNS,
    MOMENT_COLUMNS,
    efficiency_fields,
    moment_fields,
    run_study,
)

SEED_ENV = "ROBUST_SCALE_SEED"
EXIT_OK, EXIT_INTERNAL, EXIT_USAGE, EXIT_INTERRUPTED = 0, 1, 2, 130
TRUNCATION_MARKER = "#truncated"
MISSING_TOKENS = {"", "na", "nan", "null", "none"}


class InputError(Exception):
    """Bad user input; reported on stderr with exit code 2."""


# -- argument helpers -----------------------------------------------------------


def parse_n_list(text: str) -> list[int]:
    """Parse ``"2..5,10,7"`` into ``[2, 3, 4, 5, 7, 10]``."""
    values: set[int] = set()
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        try:
            if ".." in part:
                lo, hi = part.split("..", 1)
                lo_i, hi_i = int(lo), int(hi)
                if hi_i < lo_i:
                    raise InputError(f"empty range {part!r}")
                values.update(range(lo_i, hi_i + 1))
            else:
                values.add(int(part))
        except ValueError:
            raise InputError(f"bad sample-size list entry {part!r}") from None
    return sorted(values)


def _kinds(text: str, allowed=None) -> list[EstimatorKind]:
    try:
        kinds = list(dict.fromkeys(EstimatorKind.parse(t) for t in text.split(",") if t.strip()))
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if allowed is not None:
        bad = [k.value for k in kinds if k not in allowed]
        if bad:
            raise InputError(f"estimator not supported here: {', '.join(bad)}")
    if not kinds:
        raise InputError("no estimators given")
    return kinds


def _seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get(SEED_ENV)
    if env:
        try:
            return int(env)
        except ValueError:
            raise InputError(f"{SEED_ENV} is not an integer: {env!r}") from None
    return 0


# -- input parsing --------------------------------------------------------------


def read_sample(stream, drop_missing: bool = False) -> list[float]:
    """Read newline-separated numbers, or a one-column CSV with a header.

    Empty lines and NA/NaN tokens count as missing values; trailing blank
    lines are ignored.
    """
    lines = stream.read().splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    values: list[float] = []
    missing_line = None
    for lineno, line in enumerate(lines, start=1):
        token = line.strip().strip('"')
        if "," in token:
            raise InputError(f"line {lineno}: expected a single column")
        if token.lower() in MISSING_TOKENS:
            if not drop_missing and missing_line is None:
                missing_line = lineno
            continue
        try:
            value = float(token)
        except ValueError:
            if lineno == 1:
                continue  # header row
            raise InputError(f"line {lineno}: cannot parse {token!r} as a number") from None
        if not math.isfinite(value):
            raise InputError(f"line {lineno}: non-finite value {token!r}")
        values.append(value)
    if missing_line is not None:
        raise InputError(f"line {missing_line}: missing value (use --drop-missing to skip)")
    return values


# -- output plumbing ------------------------------------------------------------


class _Output:
    """Line-buffered text sink that also hashes what it writes."""

    def __init__(self, path: str | None):
        self.path = path
        self._fh = open(path, "w", encoding="utf-8", newline="\n") if path else sys.stdout
        self._hash = hashlib.sha256()

    def write(self, text: str) -> None:
        self._fh.write(text)
        self._fh.flush()
        self._hash.update(text.encode("utf-8"))

    def writerow(self, fields) -> None:
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerow(fields)
        self.write(buf.getvalue())

    @property
    def digest(self) -> str:
        return self._hash.hexdigest()

    def close(self) -> None:
        if self.path:
            self._fh.close()


def _utcnow() -> str:
    return _dt.datetime.now(_dt.timezone.utc).isoformat(timespec="seconds")


def _manifest_path(args) -> str | None:
    if getattr(args, "manifest", None):
        return args.manifest
    if getattr(args, "out", None):
        return args.out + ".manifest.json"
    return None


def _write_manifest(args, config: dict, started: str, out: _Output, truncated: bool) -> None:
    path = _manifest_path(args)
    if path is None:
        return
    argv = list(args.replay_argv)
    if getattr(args, "seed", 0) is None and "seed" in config:
        argv += ["--seed", str(config["seed"])]  # pin a seed taken from the environment
    manifest = {
        "command": args.command,
        "argv": argv,
        "config": config,
        "tool_version": __version__,
        "backend": BACKEND,
        "started": started,
        "finished": _utcnow(),
        "output": out.path,
        "output_sha256": out.digest,
        "truncated": truncated,
    }
    Path(path).write_text(json.dumps(manifest, indent=2) + "\n", encoding="utf-8")


def _progress(args):
    if getattr(args, "quiet", False):
        return None
    return lambda msg: print(msg, file=sys.stderr, flush=True)


def _stream_study(args, config: SimulationConfig, study: str, header, fields) -> int:
    started = _utcnow()
    out = _Output(args.out)
    truncated = False
    try:
        out.writerow(header)
        for row in run_study(config, study, progress=_progress(args)):
            out.writerow(fields(row))
    except KeyboardInterrupt:
        truncated = True
        out.write(TRUNCATION_MARKER + "\n")
    finally:
        out.close()
    manifest_config = {
        "n_values": list(config.n_values),
        "repetitions": config.repetitions,
        "seed": config.seed,
        "estimators": [k.value for k in config.estimators],
        "workers": config.workers,
        "shard_size": config.shard_size,
    }
    _write_manifest(args, manifest_config, started, out, truncated)
    if truncated:
        print("interrupted; partial output written", file=sys.stderr)
        return EXIT_INTERRUPTED
    return EXIT_OK


# -- commands -------------------------------------------------------------------


def cmd_estimate(args) -> int:
    if args.input in (None, "-"):
        values = read_sample(sys.stdin, args.drop_missing)
    else:
        try:
            with open(args.input, encoding="utf-8") as fh:
                values = read_sample(fh, args.drop_missing)
        except OSError as exc:
            raise InputError(f"cannot read {args.input}: {exc.strerror}") from None
    if len(values) < 2:
        raise InputError("need at least 2 observations")
    x = as_sample(values)
    n = x.size
    model = CorrectionModel.parse(args.model)
    out = _Output(None)
    out.writerow(["estimator", "n", "raw", "factor", "constant", "estimate"])
    raw_fn = {EstimatorKind.MAD: mad_raw, EstimatorKind.SN: sn_fast, EstimatorKind.QN: qn_fast}
    for kind in _kinds(args.estimators):
        if kind is EstimatorKind.SD:
            raw, fac, const = float(np.std(x, ddof=1)), 1.0 / c4(n), 1.0
        else:
            raw = raw_fn[kind](x)
            fac, const = factor(kind, n, model), asymptotic_constant(kind)
        value = estimate(x, kind, model)
        out.writerow([kind.value, n, f"{raw:.10g}", f"{fac:.6g}", f"{const:.15g}", f"{value:.10g}"])
    return EXIT_OK


def _sim_config(args, estimators) -> SimulationConfig:
    return SimulationConfig(
        n_values=parse_n_list(args.n),
        repetitions=args.reps,
        seed=_seed(args),
        estimators=estimators,
        workers=args.workers,
        shard_size=args.shard_size,
    )


CALIBRATION_COLUMNS = ("n", "estimator", "factor", "se", "mean_raw", "reps", "seed")


def cmd_calibrate(args) -> int:
    kinds = _kinds(args.estimators, allowed={EstimatorKind.MAD, EstimatorKind.SN, EstimatorKind.QN})
    config = _sim_config(args, kinds)
    moments = []

    def fields(row):
        moments.append(row)
        return [row.n, row.kind.value, f"{row.factor:.6g}", f"{row.se:.3g}",
                f"{row.mean:.10g}", row.count, row.seed]

    status = _stream_study(args, config, FACTOR_STUDY, CALIBRATION_COLUMNS, fields)
    if args.moments:
        with open(args.moments, "w", encoding="utf-8", newline="\n") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(MOMENT_COLUMNS)
            for row in moments:
                writer.writerow(moment_fields(row))
    return status


def cmd_efficiency(args) -> int:
    config = _sim_config(args, ())
    header = EFFICIENCY_COLUMNS + ("reps", "seed")
    return _stream_study(
        args, config, EFFICIENCY_STUDY, header,
        lambda row: efficiency_fields(row) + [str(row.reps), str(row.seed)],
    )


def _read_factor_points(path: str, estimator: str | None) -> list[tuple[int, float]]:
    try:
        fh = sys.stdin if path == "-" else open(path, encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    with fh:
        lines = [ln for ln in fh if ln.strip() and not ln.startswith("#")]
    reader = csv.DictReader(lines)
    if not reader.fieldnames or "n" not in reader.fieldnames or "factor" not in reader.fieldnames:
        raise InputError("factor CSV needs 'n' and 'factor' columns")
    points = []
    for lineno, row in enumerate(reader, start=2):
        if estimator and "estimator" in row and row["estimator"] != estimator:
            continue
        try:
            points.append((int(row["n"]), float(row["factor"])))
        except (TypeError, ValueError):
            raise InputError(f"line {lineno}: bad n/factor values") from None
    return points


def cmd_fit(args) -> int:
    lo, hi = _window(args.window)
    estimator = EstimatorKind.parse(args.estimator).value if args.estimator else None
    points = [p for p in _read_factor_points(args.input, estimator) if lo <= p[0] <= hi]
    fit = fit_inverse_poly(points, args.parity)
    table = dict(points)
    max_diff, n_at = prediction_error(table, fit, range(lo, hi + 1))
    report = fit.to_dict()
    report.update({"window": [lo, hi], "max_abs_diff": max_diff, "n_at_max": n_at})
    print(json.dumps(report, indent=2))
    return EXIT_OK


def _window(text: str) -> tuple[int, int]:
    try:
        lo, hi = text.split("..", 1)
        return int(lo), int(hi)
    except ValueError:
        raise InputError(f"window must look like 101..1000, got {text!r}") from None


def cmd_compare_models(args) -> int:
    try:
        model_a, model_b = (m.strip() for m in args.models.split(","))
    except ValueError:
        raise InputError("--models takes exactly two comma-separated models") from None
    result = compare_models(args.estimator, model_a, model_b, parse_n_list(args.n))
    if args.rows:
        Path(args.rows).write_text(result.to_csv(), encoding="utf-8")
    print(json.dumps({
        "estimator": result.estimator.value,
        "model_a": result.model_a.value,
        "model_b": result.model_b.value,
        "n_min": result.rows[0][0],
        "n_max": result.rows[-1][0],
        "max_abs_diff": round(result.max_abs_diff, 12),
        "n_at_max": result.n_at_max,
    }, indent=2))
    return EXIT_OK


def cmd_factors(args) -> int:
    out = _Output(args.out)
    try:
        if args.published:
            table = published_factors(args.estimator)
            out.writerow(["n", "factor", "model", "estimator"])
            for n in sorted(table):
                out.writerow([n, f"{table[n]:.6g}", "published", EstimatorKind.parse(args.estimator).value])
        else:
            buf = io.StringIO()
            write_factor_csv(buf, args.estimator, args.model, parse_n_list(args.n))
            out.write(buf.getvalue())
    finally:
        out.close()
    return EXIT_OK


def cmd_replay(args) -> int:
    """Re-run the command recorded in a manifest and compare output digests."""
    manifest = json.loads(Path(args.manifest_file).read_text(encoding="utf-8"))
    with tempfile.TemporaryDirectory() as tmp:
        target = os.path.join(tmp, "replay.csv")
        status = main(list(manifest["argv"]) + ["--out", target, "--quiet"])
        if status != EXIT_OK:
            return status
        digest = hashlib.sha256(Path(target).read_bytes()).hexdigest()
    same = digest == manifest["output_sha256"]
    print(json.dumps({"expected": manifest["output_sha256"], "actual": digest, "match": same}))
    return EXIT_OK if same else EXIT_INTERNAL


# -- parser ---------------------------------------------------------------------


def _add_sim_args(p, default_reps: int) -> None:
    p.add_argument("--n", required=True, help="sample sizes, e.g. 2..100 or 3,7,10")
    p.add_argument("--reps", type=int, default=default_reps, help="repetitions per n")
    p.add_argument("--seed", type=int, default=None, help=f"RNG seed (default: ${SEED_ENV} or 0)")
    p.add_argument("--workers", type=int, default=1, help="worker processes")
    p.add_argument("--shard-size", type=int, default=5000, help="repetitions per RNG substream")
    p.add_argument("--out", help="output CSV (default: stdout)")
    p.add_argument("--manifest", help="manifest path (default: OUT.manifest.json)")
    p.add_argument("--quiet", action="store_true", help="no progress on stderr")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="robust-scale",
        description="Robust scale estimation (MAD, Sn, Qn) with finite-sample bias correction.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("estimate", help="estimate scale of a sample")
    p.add_argument("input", nargs="?", help="file with one number per line (default: stdin)")
    p.add_argument("--estimators", default="mad,sn,qn,sd", help="comma list of mad,sn,qn,sd")
    p.add_argument("--model", default="refined",
                   choices=[m.value for m in CorrectionModel], help="bias-correction model")
    p.add_argument("--drop-missing", action="store_true", help="skip NA/NaN/empty entries")
    p.set_defaults(func=cmd_estimate)

    p = sub.add_parser("calibrate", help="Monte-Carlo bias-correction factors")
    _add_sim_args(p, 100_000)
    p.add_argument("--estimators", default="sn,qn", help="comma list of mad,sn,qn")
    p.add_argument("--moments", help="also write n,estimator,mean,variance,... CSV here")
    p.set_defaults(func=cmd_calibrate)

    p = sub.add_parser("efficiency", help="Monte-Carlo Gaussian efficiency")
    _add_sim_args(p, 100_000)
    p.set_defaults(func=cmd_efficiency)

    p = sub.add_parser("fit", help="fit 1 + alpha/n + beta/n^2 to a factor CSV")
    p.add_argument("input", help="CSV with n and factor columns ('-' for stdin)")
    p.add_argument("--parity", choices=["odd", "even"], required=True)
    p.add_argument("--window", default="101..1000", help="inclusive n window (default 101..1000)")
    p.add_argument("--estimator", help="keep rows of this estimator only")
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("compare-models", help="max factor difference between two models")
    p.add_argument("--estimator", required=True, choices=["mad", "sn", "qn"])
    p.add_argument("--models", required=True, help="two models, e.g. refined,croux1992")
    p.add_argument("--n", default="2..100", help="sample sizes (default 2..100)")
    p.add_argument("--rows", help="write per-n CSV rows here")
    p.set_defaults(func=cmd_compare_models)

    p = sub.add_parser("factors", help="export a factor table as CSV")
    p.add_argument("--estimator", required=True, choices=["mad", "sn", "qn"])
    p.add_argument("--model", default="refined", choices=[m.value for m in CorrectionModel])
    p.add_argument("--n", default="2..100")
    p.add_argument("--published", action="store_true",
                   help="emit the published refined table (n up to 10000) instead")
    p.add_argument("--out", help="output CSV (default: stdout)")
    p.set_defaults(func=cmd_factors)

    p = sub.add_parser("replay", help="re-run a manifest and verify the output digest")
    p.add_argument("manifest_file")
    p.set_defaults(func=cmd_replay)
    return parser


def _replay_argv(argv: list[str]) -> list[str]:
    # Recorded argv minus output destinations, so a replay can redirect them.
    out, skip = [], False
    for tok in argv:
        if skip:
            skip = False
            continue
        if tok in ("--out", "--manifest", "--moments"):
            skip = True
            continue
        if tok.startswith(("--out=", "--manifest=", "--moments=")) or tok == "--quiet":
            continue
        out.append(tok)
    return out


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    args.replay_argv = _replay_argv(argv)
    try:
        return args.func(args)
    except (InputError, ValueError) as exc:
        print(f"robust-scale {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except KeyboardInterrupt:
        return EXIT_INTERRUPTED
    except Exception as exc:  # noqa: BLE001
        print(f"robust-scale {args.command}: internal error: {exc!r}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
