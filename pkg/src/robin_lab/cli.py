"""Command-line interface: ``robin-lab <command> ...``.

Exit codes: 0 success, 1 usage error, 2 domain error, 3 solver failure.
JSON is the canonical output (floats via repr, which round-trips every
double); CSV is a flat projection with 17 significant digits.
"""

import argparse
import concurrent.futures
import csv
import dataclasses
import io
import json
import math
import os
import sys
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import asympt, diskext, fem2d, geometry, sl1d, validate
from .errors import DomainError, SolverError

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_SOLVER = 3

COMMANDS = ("disk", "sweep", "shape", "counterexample", "validate")
SHAPES = ("disk", "ellipse", "support-poly")
THREADS_ENV = "ROBIN_LAB_THREADS"

DISK_COLUMNS = ("alpha", "R", "lambda", "k", "lower_bound", "upper_bound", "dlambda_dR", "dlambda_dalpha", "residual")
SWEEP_COLUMNS = ("param", "lambda", "lower_bound", "upper_bound", "derivative")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    alpha: Optional[float] = None
    R: Optional[float] = None
    # sweep
    param: Optional[str] = None
    start: Optional[float] = None
    stop: Optional[float] = None
    num: int = 100
    # shape
    shape: Optional[str] = None
    a: Optional[float] = None
    b: Optional[float] = None
    coeffs: Optional[list] = None
    # counterexample
    kind: Optional[str] = None
    r3: Optional[float] = None
    r: Optional[float] = None
    constraint: str = "area"
    # mesh overrides
    Ns: int = fem2d.DEFAULT_NS
    Nt: int = fem2d.DEFAULT_NT
    n: int = 4096
    T: Optional[float] = None
    output: Optional[str] = None
    format: Optional[str] = None

    def check(self):
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}; choose from {', '.join(COMMANDS)}")
        if self.format not in (None, "csv", "json"):
            raise UsageError(f"unknown format {self.format!r}; use csv or json")
        for name in ("Ns", "Nt", "n"):
            v = getattr(self, name)
            if not (isinstance(v, int) and v > 0):
                raise UsageError(f"mesh override {name} must be a positive integer, got {v!r}")
        if self.T is not None and not self.T > 0:
            raise UsageError(f"mesh override T must be positive, got {self.T!r}")
        need = {
            "disk": ("alpha", "R"),
            "sweep": ("param", "start", "stop"),
            "shape": ("shape", "alpha"),
            "counterexample": ("kind",),
        }.get(self.command, ())
        missing = [f for f in need if getattr(self, f) is None]
        if missing:
            raise UsageError(f"{self.command}: missing {', '.join(missing)}")
        if self.command == "sweep":
            if self.param not in ("alpha", "R"):
                raise UsageError("sweep --param must be alpha or R")
            if self.num < 2 or self.start == self.stop:
                raise UsageError("empty range: sweep needs start != stop and at least 2 points")
            fixed = "R" if self.param == "alpha" else "alpha"
            if getattr(self, fixed) is None:
                raise UsageError(f"sweep over {self.param} needs a fixed --{fixed}")
        if self.command == "shape" and self.shape not in SHAPES:
            raise UsageError(f"unknown shape {self.shape!r}; choose from {', '.join(SHAPES)}")
        if self.command == "counterexample" and self.kind not in ("2d", "3d"):
            raise UsageError("counterexample kind must be 2d or 3d")
        return self

    @classmethod
    def from_dict(cls, data):
        names = {f.name for f in dataclasses.fields(cls)}
        unknown = sorted(set(data) - names)
        if unknown:
            raise UsageError(f"unknown config keys: {', '.join(unknown)}")
        if "command" not in data:
            raise UsageError("config needs a 'command'")
        data = dict(data)
        try:
            # JSON integers become floats so a config and the equivalent flags print identically
            for key in _FLOAT_FIELDS:
                if data.get(key) is not None:
                    data[key] = float(data[key])
            key = "coeffs"
            if data.get(key) is not None:
                data[key] = [float(c) for c in data["coeffs"]]
        except (TypeError, ValueError):
            raise UsageError(f"config field {key!r} must be numeric") from None
        return cls(**data).check()


_FLOAT_FIELDS = ("alpha", "R", "start", "stop", "a", "b", "r3", "r", "T")


# ----------------------------------------------------------------- commands

def cmd_disk(cfg):
    alpha, R = cfg.alpha, cfg.R
    sol = diskext.solve_disk_exterior_2d(alpha, R)
    lo, hi = diskext.bounds_2d(alpha, R)
    return {
        "alpha": alpha,
        "R": R,
        "lambda": sol.lam,
        "k": sol.k,
        "lower_bound": lo,
        "upper_bound": hi,
        "dlambda_dR": diskext.dlambda_dR(alpha, R),
        "dlambda_dalpha": diskext.dlambda_dalpha_disk(alpha, R),
        "residual": sol.residual,
    }


def _sweep_point(param, value, fixed):
    alpha, R = (value, fixed) if param == "alpha" else (fixed, value)
    lam = diskext.disk_lambda(alpha, R)
    lo, hi = diskext.bounds_2d(alpha, R)
    deriv = diskext.dlambda_dalpha_disk(alpha, R) if param == "alpha" else diskext.dlambda_dR(alpha, R)
    return {"param": value, "lambda": lam, "lower_bound": lo, "upper_bound": hi, "derivative": deriv}


def _thread_count():
    raw = os.environ.get(THREADS_ENV)
    if raw is None or raw == "":
        return min(4, os.cpu_count() or 1)
    try:
        n = int(raw)
    except ValueError:
        raise UsageError(f"{THREADS_ENV} must be a positive integer, got {raw!r}") from None
    if n < 1:
        raise UsageError(f"{THREADS_ENV} must be a positive integer, got {raw!r}")
    return n


def cmd_sweep(cfg):
    values = [float(v) for v in np.linspace(cfg.start, cfg.stop, cfg.num)]
    fixed = cfg.R if cfg.param == "alpha" else cfg.alpha
    workers = _thread_count()
    if workers == 1:
        return [_sweep_point(cfg.param, v, fixed) for v in values]
    with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as pool:
        # map() yields in input order whatever the completion order
        return list(pool.map(lambda v: _sweep_point(cfg.param, v, fixed), values))


def _build_curve(cfg):
    if cfg.shape == "disk":
        if cfg.R is None:
            raise UsageError("shape disk needs --R")
        return geometry.disk(cfg.R)
    if cfg.shape == "ellipse":
        if cfg.a is None or cfg.b is None:
            raise UsageError("shape ellipse needs --a and --b")
        return geometry.ellipse(cfg.a, cfg.b)
    if not cfg.coeffs:
        raise UsageError("shape support-poly needs --coeffs")
    return geometry.support_poly(cfg.coeffs)


def cmd_shape(cfg):
    curve = _build_curve(cfg)
    if not cfg.alpha < 0:
        raise DomainError("no discrete eigenvalue for alpha >= 0")
    report = fem2d.verify_theorem(curve, cfg.alpha, Ns=cfg.Ns, Nt=cfg.Nt, T=cfg.T)
    # the reduced 1D quotient reproduces the equal-perimeter disk value
    w = sl1d.WeightPoly(curve.perimeter, 2.0 * math.pi, 0.0)
    report["lambda_reduced"] = sl1d.solve_extrapolated(cfg.alpha, w, n=cfg.n)[0]
    return report


def cmd_counterexample(cfg):
    if cfg.kind == "2d":
        if cfg.r3 is None:
            raise UsageError("counterexample 2d needs --r3")
        alpha = -50.0 if cfg.alpha is None else cfg.alpha
        return asympt.two_disks_2d(alpha, cfg.r3)
    if cfg.r is None or cfg.R is None:
        raise UsageError("counterexample 3d needs --r and --R")
    alpha = -100.0 if cfg.alpha is None else cfg.alpha
    return asympt.hull_3d(alpha, cfg.r, cfg.R, constraint=cfg.constraint)


def cmd_validate(cfg):
    return [dataclasses.asdict(r) for r in validate.run_all()]


HANDLERS = {
    "disk": cmd_disk,
    "sweep": cmd_sweep,
    "shape": cmd_shape,
    "counterexample": cmd_counterexample,
    "validate": cmd_validate,
}


# ------------------------------------------------------------ serialization

def format_value(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return ""
    if isinstance(v, float):
        return format(v, ".17g")
    return str(v)


def to_csv(records, columns=None):
    if isinstance(records, dict):
        records = [records]
    if columns is None:
        columns = list(records[0])
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for rec in records:
        writer.writerow([format_value(rec[c]) for c in columns])
    return buf.getvalue()


def _jsonable(obj):
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, np.generic):
        return obj.item()
    if isinstance(obj, int) and not isinstance(obj, bool) and abs(obj) > 2 ** 53:
        return str(obj)  # huge exact integers (log-cutoff thresholds) stay exact
    return obj


def to_json(records):
    return json.dumps(_jsonable(records), indent=2, allow_nan=True) + "\n"


def render(cfg, result):
    fmt = cfg.format
    if cfg.command == "validate" and fmt is None:
        lines = [f"{'PASS' if r['ok'] else 'FAIL'}  {r['name']:<32s} {r['detail']}" for r in result]
        passed = sum(r["ok"] for r in result)
        lines.append(f"{passed}/{len(result)} invariants passed")
        return "\n".join(lines) + "\n"
    if fmt is None:
        fmt = "csv" if cfg.command == "sweep" else "json"
    if fmt == "json":
        return to_json(result)
    columns = {"disk": DISK_COLUMNS, "sweep": SWEEP_COLUMNS}.get(cfg.command)
    return to_csv(result, columns)


# ------------------------------------------------------------------ parsing

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _coeffs(text):
    try:
        return [float(c) for c in text.split(",") if c.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"coefficients must be comma-separated numbers, got {text!r}") from None


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default=None)
    common.add_argument("--output", "-o", default=None, help="write to this file instead of stdout")

    mesh = _Parser(add_help=False)
    mesh.add_argument("--Ns", type=int, default=fem2d.DEFAULT_NS, help="elements along the curve")
    mesh.add_argument("--Nt", type=int, default=fem2d.DEFAULT_NT, help="elements in the normal direction")
    mesh.add_argument("--n", type=int, default=4096, help="finest 1D element count")
    mesh.add_argument("--T", type=float, default=None, help="truncation length (default: decay rule)")

    p = _Parser(prog="robin-lab", description="Exterior Robin eigenvalue toolkit.")
    p.add_argument("--config", help="JSON file with a RunConfig; replaces all other arguments")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    s = sub.add_parser("disk", parents=[common], help="exterior of a disk: eigenvalue, bounds, derivatives")
    s.add_argument("--alpha", type=float, required=True)
    s.add_argument("--R", type=float, required=True)

    s = sub.add_parser("sweep", parents=[common], help="disk eigenvalue over a range of alpha or R")
    s.add_argument("--param", choices=("alpha", "R"), required=True)
    s.add_argument("--start", type=float, required=True)
    s.add_argument("--stop", type=float, required=True)
    s.add_argument("--num", type=int, default=100)
    s.add_argument("--alpha", type=float)
    s.add_argument("--R", type=float)

    s = sub.add_parser("shape", parents=[common, mesh], help="compare a convex curve with the two disks")
    s.add_argument("shape", choices=SHAPES)
    s.add_argument("--alpha", type=float, required=True)
    s.add_argument("--R", type=float)
    s.add_argument("--a", type=float)
    s.add_argument("--b", type=float)
    s.add_argument("--coeffs", type=_coeffs, help="h = c0 + c1 cos t + c2 cos 2t + ..., comma separated")

    s = sub.add_parser("counterexample", parents=[common], help="large-coupling counterexample reports")
    s.add_argument("kind", choices=("2d", "3d"))
    s.add_argument("--alpha", type=float, help="default -50 (2d) or -100 (3d)")
    s.add_argument("--r3", type=float, help="radius of each disk (2d)")
    s.add_argument("--r", type=float, help="radius of the two balls (3d)")
    s.add_argument("--R", type=float, help="comparison ball radius (3d)")
    s.add_argument("--constraint", choices=("area", "volume"), default="area")

    s = sub.add_parser("validate", parents=[common], help="run the named invariant suite")
    s.add_argument("--json", action="store_true", help="same as --format json")
    return p


def config_from_args(argv):
    args = build_parser().parse_args(argv)
    if args.config:
        if args.command:
            raise UsageError("--config cannot be combined with a subcommand")
        try:
            with open(args.config) as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read config {args.config!r}: {exc}") from None
        if not isinstance(data, dict):
            raise UsageError("config must be a JSON object")
        return RunConfig.from_dict(data)
    if not args.command:
        raise UsageError("missing command; run with --help")
    values = vars(args)
    if values.pop("json", False):
        values["format"] = "json"
    values.pop("config")
    names = {f.name for f in dataclasses.fields(RunConfig)}
    return RunConfig(**{k: v for k, v in values.items() if k in names}).check()


def run(cfg):
    """Execute a RunConfig and return the rendered text."""
    return render(cfg, HANDLERS[cfg.command](cfg))


def main(argv=None):
    try:
        cfg = config_from_args(sys.argv[1:] if argv is None else argv)
        result = HANDLERS[cfg.command](cfg)
        text = render(cfg, result)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except SolverError as exc:
        print(f"solver failure: {exc}", file=sys.stderr)
        return EXIT_SOLVER
    if cfg.output:
        with open(cfg.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if cfg.command == "validate" and not all(r["ok"] for r in result):
        return EXIT_SOLVER
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
