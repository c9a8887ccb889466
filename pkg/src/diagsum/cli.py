"""Command-line front end.

Subcommands:

* ``exact MODEL``: exact diagonal-sum distribution plus its smoothness
  and concentration functionals.
* ``bounds MODEL``: every applicable theorem bound, with the exact
  comparison attached when n is within the enumeration cap.
* ``constants --alpha-list ...``: table of maximized bound constants.
* ``verify``: seeded randomized verification campaigns; exit code 1 when
  any inequality check fails.
* ``hafnian TENSOR``: generalized normalized hafnian of a tensor file
  and its quadratic-mean bounds.

Model files are JSON: ``{"n": 2, "kind": "integer"|"real", "entries":
[[cell, ...], ...]}`` where each cell is ``{"bernoulli": p}``,
``{"constant": c}`` or ``{"atoms": [[location, mass], ...]}``. Integer
kind requires integral locations. Tensor files: ``{"entries": k x n x n
nested lists}`` with scalars either numbers or ``[re, im]`` pairs.

Reports are JSON with sorted keys, no timestamps and no absolute paths,
so a rerun with the same inputs and seed is byte-identical. Numbers use
Python's shortest round-trip representation (>= 15 significant digits
where needed). Output lands on stdout unless ``--out`` is given; files
are written atomically (temp file + rename).
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys
import tempfile
from typing import Any, Sequence

import numpy as np

from . import campaigns
from .bounds import (
    BoundReport,
    bernoulli_matrix_bounds,
    bound_constant,
    concentration_bound,
    fixed_pairing_bound,
    smoothness_bound,
)
from .diag_sum import CapacityError, MatrixModel, exact_distribution
from .dist_core import (
    AtomicDistribution,
    Distribution,
    KindMismatchError,
    LatticeDistribution,
    bernoulli,
    concentration,
    smoothness,
)
from .hafnian import HafnianTensor, gnhaf, gnhaf_bound

__all__ = [
    "ModelParseError",
    "parse_model",
    "model_to_json",
    "load_model",
    "main",
]

DEFAULT_T_GRID = (0.0, 0.5, 1.0, 2.0)

_CLI_SUITES = {
    "all": campaigns.SUITES,
    "bounds": ("constants", "brackets", "dominance", "moments", "independent", "trend"),
    "pairs": ("bernoulli-pairs",),
    "hafnian": ("hafnian", "partition"),
    "decomposition": ("decomposition",),
}


class ModelParseError(ValueError):
    """A model or tensor file failed validation; message names the cell."""


# --- model file I/O ----------------------------------------------------------


def _cell_to_distribution(cell: Any, kind: str, where: str) -> Distribution:
    if not isinstance(cell, dict) or len(cell) != 1:
        raise ModelParseError(
            f"{where}: cell must be one of {{'bernoulli': p}}, "
            f"{{'constant': c}}, {{'atoms': [[location, mass], ...]}}"
        )
    (tag, payload), = cell.items()
    if tag == "bernoulli":
        try:
            p = float(payload)
        except (TypeError, ValueError):
            raise ModelParseError(f"{where}: bernoulli parameter must be a number")
        if not 0.0 <= p <= 1.0:
            raise ModelParseError(f"{where}: bernoulli parameter {p!r} outside [0, 1]")
        if kind == "integer":
            return bernoulli(p)
        return AtomicDistribution.from_atoms([0.0, 1.0], [1.0 - p, p])
    if tag == "constant":
        try:
            value = float(payload)
        except (TypeError, ValueError):
            raise ModelParseError(f"{where}: constant value must be a number")
        if kind == "integer":
            if value != math.floor(value):
                raise ModelParseError(
                    f"{where}: integer kind requires an integral constant, got {value!r}"
                )
            return LatticeDistribution.point(int(value))
        return AtomicDistribution.point(value)
    if tag == "atoms":
        if not isinstance(payload, (list, tuple)) or not payload:
            raise ModelParseError(f"{where}: atoms must be a nonempty list of pairs")
        locs = []
        masses = []
        for item in payload:
            if not isinstance(item, (list, tuple)) or len(item) != 2:
                raise ModelParseError(f"{where}: each atom must be [location, mass]")
            try:
                locs.append(float(item[0]))
                masses.append(float(item[1]))
            except (TypeError, ValueError):
                raise ModelParseError(f"{where}: atom entries must be numbers")
        try:
            if kind == "integer":
                if any(l != math.floor(l) for l in locs):
                    raise ModelParseError(
                        f"{where}: integer kind requires integral atom locations"
                    )
                ilocs = [int(l) for l in locs]
                offset = min(ilocs)
                arr = np.zeros(max(ilocs) - offset + 1)
                for l, m in zip(ilocs, masses):
                    arr[l - offset] += m
                return LatticeDistribution.from_masses(arr, offset=offset)
            return AtomicDistribution.from_atoms(locs, masses)
        except ValueError as exc:
            raise ModelParseError(f"{where}: {exc}")
    raise ModelParseError(f"{where}: unknown cell tag {tag!r}")


def parse_model(obj: Any) -> tuple[MatrixModel, np.ndarray | None]:
    """Parse a model document.

    Returns the model and, when every cell is a Bernoulli cell of an
    integer-kind model, the probability grid (enables the explicit
    Bernoulli-matrix bounds).
    """
    if not isinstance(obj, dict):
        raise ModelParseError("model document must be a JSON object")
    for key in ("n", "kind", "entries"):
        if key not in obj:
            raise ModelParseError(f"model document missing field {key!r}")
    kind = obj["kind"]
    if kind not in ("integer", "real"):
        raise ModelParseError(f"kind must be 'integer' or 'real', got {kind!r}")
    try:
        n = int(obj["n"])
    except (TypeError, ValueError):
        raise ModelParseError(f"n must be an integer, got {obj['n']!r}")
    grid = obj["entries"]
    if not isinstance(grid, list) or len(grid) != n:
        raise ModelParseError(f"entries must be a list of {n} rows")
    cells = []
    ps = np.zeros((n, n)) if kind == "integer" else None
    all_bernoulli = kind == "integer"
    for j, row in enumerate(grid):
        if not isinstance(row, list) or len(row) != n:
            raise ModelParseError(f"entries[{j}] must be a list of {n} cells")
        out_row = []
        for r, cell in enumerate(row):
            where = f"entries[{j}][{r}]"
            out_row.append(_cell_to_distribution(cell, kind, where))
            if all_bernoulli and isinstance(cell, dict) and "bernoulli" in cell:
                ps[j, r] = float(cell["bernoulli"])
            else:
                all_bernoulli = False
        cells.append(out_row)
    try:
        model = MatrixModel(cells)
    except (ValueError, TypeError) as exc:
        raise ModelParseError(str(exc))
    return model, (ps if all_bernoulli else None)


def model_to_json(model: MatrixModel) -> dict:
    """Serialize a model; all cells normalized to the atoms form."""
    rows = []
    for row in model.entries:
        out_row = []
        for cell in row:
            if isinstance(cell, LatticeDistribution):
                atoms = [
                    [int(loc), float(m)]
                    for loc, m in zip(cell.support, cell.masses)
                    if m > 0.0
                ]
            else:
                atoms = [
                    [float(l), float(m)] for l, m in zip(cell.locations, cell.masses)
                ]
            out_row.append({"atoms": atoms})
        rows.append(out_row)
    return {"n": model.n, "kind": model.kind, "entries": rows}


def load_model(path: str) -> tuple[MatrixModel, np.ndarray | None]:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ModelParseError(f"{path}: invalid JSON ({exc})")
    return parse_model(obj)


def _dist_to_json(dist: Distribution) -> dict:
    if isinstance(dist, LatticeDistribution):
        return {
            "kind": "integer",
            "offset": int(dist.offset),
            "masses": [float(m) for m in dist.masses],
        }
    return {
        "kind": "real",
        "atoms": [[float(l), float(m)] for l, m in zip(dist.locations, dist.masses)],
    }


# --- output ------------------------------------------------------------------


def _write_text(text: str, out_path: str | None) -> None:
    if out_path is None or out_path == "-":
        sys.stdout.write(text)
        return
    directory = os.path.dirname(os.path.abspath(out_path))
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, out_path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _write_json(obj: Any, out_path: str | None) -> None:
    _write_text(
        json.dumps(obj, sort_keys=True, indent=2, allow_nan=False) + "\n", out_path
    )


def _write_csv(header: Sequence[str], rows: Sequence[Sequence[Any]], path: str) -> None:
    import io

    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(["" if v is None else repr(v) if isinstance(v, float) else v for v in row])
    _write_text(buf.getvalue(), path)


def _report_to_json(rep: BoundReport) -> dict:
    return {
        "bound_name": rep.bound_name,
        "epsilon": rep.epsilon,
        "aggregate": rep.aggregate,
        "constant": rep.constant,
        "constant_over_sqrt_pi": rep.constant / math.sqrt(math.pi),
        "bound_value": rep.bound_value,
        "bound_clipped": rep.bound_clipped,
        "t": rep.t,
        "exact": rep.exact,
        "slack": rep.slack,
    }


# --- subcommands ---------------------------------------------------------------


def _cmd_exact(args: argparse.Namespace) -> int:
    model, _ = load_model(args.model)
    dist = exact_distribution(model)
    is_lattice = isinstance(dist, LatticeDistribution)
    tv = smoothness(dist) if is_lattice else None
    report = {
        "command": "exact",
        "n": model.n,
        "kind": model.kind,
        "distribution": _dist_to_json(dist),
        "mean": dist.mean(),
        "variance": dist.variance(),
        # d_TV(S, 1+S); small values mean a smooth lattice law
        "smoothness_tv": tv,
        # complement 1 - d_TV(S, 1+S), the quantity the theorems average
        "smoothness_complement": None if tv is None else 1.0 - tv,
        "concentration": {str(t): concentration(dist, t) for t in DEFAULT_T_GRID},
    }
    _write_json(report, args.out)
    return 0


def _cmd_bounds(args: argparse.Namespace) -> int:
    model, ps = load_model(args.model)
    ts = tuple(args.t) if args.t else DEFAULT_T_GRID
    for t in ts:
        if not t >= 0.0:
            raise ModelParseError(f"--t must be >= 0, got {t!r}")
    phi = None
    if args.phi is not None:
        phi = _parse_int_list(args.phi, "--phi")
    reports: list[BoundReport] = []
    if model.kind == "integer":
        reports.append(smoothness_bound(model, epsilon=args.epsilon))
    for t in ts:
        reports.append(concentration_bound(model, t, epsilon=args.epsilon))
    if ps is not None:
        reports.extend(bernoulli_matrix_bounds(ps, epsilon=args.epsilon))
    if phi is not None:
        if model.kind == "integer":
            reports.append(fixed_pairing_bound(model, phi, epsilon=args.epsilon))
        for t in ts:
            reports.append(
                fixed_pairing_bound(model, phi, t=t, epsilon=args.epsilon)
            )
    report = {
        "command": "bounds",
        "n": model.n,
        "kind": model.kind,
        "epsilon_mode": "auto" if args.epsilon is None else "fixed",
        "t_grid": list(ts),
        "reports": [_report_to_json(r) for r in reports],
    }
    _write_json(report, args.out)
    if args.csv:
        header = (
            "bound_name",
            "epsilon",
            "aggregate",
            "constant",
            "constant_over_sqrt_pi",
            "bound_value",
            "bound_clipped",
            "t",
            "exact",
            "slack",
        )
        rows = [[_report_to_json(r)[h] for h in header] for r in reports]
        _write_csv(header, rows, args.csv)
    return 0


def _cmd_constants(args: argparse.Namespace) -> int:
    alphas = _parse_float_list(args.alpha_list, "--alpha-list")
    table = []
    for alpha in alphas:
        res = bound_constant(alpha, args.beta)
        table.append(
            {
                "alpha": res.alpha,
                "beta": res.beta,
                "value": res.value,
                "value_over_sqrt_pi": res.value / math.sqrt(math.pi),
                "maximizer": res.maximizer,
                "quintic_residual": res.quintic_residual,
            }
        )
    _write_json({"command": "constants", "beta": args.beta, "table": table}, args.out)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    names = _CLI_SUITES[args.suite]
    results = campaigns.run_suites(
        names, seed=args.seed, instances=args.instances, nmax=args.nmax
    )
    suites = {}
    for r in results:
        suites[r.name] = {
            "checks": r.checks,
            "violations": r.violations,
            "worst_margin": None if math.isinf(r.worst) else r.worst,
            "passed": bool(r.passed),
            "notes": list(r.notes),
        }
        if r.data:
            suites[r.name]["data"] = r.data
    total = sum(r.violations for r in results)
    report = {
        "command": "verify",
        "suite": args.suite,
        "seed": args.seed,
        "instances": args.instances,
        "nmax": args.nmax,
        "suites": suites,
        "violations_total": total,
    }
    _write_json(report, args.out)
    if args.csv:
        rows = []
        for r in results:
            for row in r.data.get("trend_rows", ()):
                rows.append(
                    [
                        row["n"],
                        row["smoothness_bound"],
                        row["smoothness_exact"],
                        row["concentration0_bound"],
                        row["concentration0_exact"],
                    ]
                )
        _write_csv(
            (
                "n",
                "smoothness_bound",
                "smoothness_exact",
                "concentration0_bound",
                "concentration0_exact",
            ),
            rows,
            args.csv,
        )
    return 1 if total else 0


def _parse_tensor(obj: Any) -> HafnianTensor:
    if not isinstance(obj, dict) or "entries" not in obj:
        raise ModelParseError("tensor document must be an object with 'entries'")

    def scal(x: Any, where: str) -> complex:
        if isinstance(x, (int, float)):
            return complex(float(x), 0.0)
        if isinstance(x, (list, tuple)) and len(x) == 2:
            try:
                return complex(float(x[0]), float(x[1]))
            except (TypeError, ValueError):
                pass
        raise ModelParseError(f"{where}: scalars must be numbers or [re, im] pairs")

    entries = obj["entries"]
    try:
        k = len(entries)
        n = len(entries[0])
        arr = np.empty((k, n, n), dtype=np.complex128)
        for l in range(k):
            if len(entries[l]) != n:
                raise ModelParseError(f"entries[{l}]: expected {n} rows")
            for i in range(n):
                row = entries[l][i]
                if len(row) != n:
                    raise ModelParseError(f"entries[{l}][{i}]: expected {n} columns")
                for j in range(n):
                    arr[l, i, j] = scal(row[j], f"entries[{l}][{i}][{j}]")
    except (TypeError, IndexError):
        raise ModelParseError("entries must be a k x n x n nested list")
    for field in ("k", "n"):
        if field in obj and int(obj[field]) != arr.shape[0 if field == "k" else 1]:
            raise ModelParseError(
                f"declared {field}={obj[field]} does not match entries shape {arr.shape}"
            )
    try:
        return HafnianTensor(arr)
    except ValueError as exc:
        raise ModelParseError(str(exc))


def _cmd_hafnian(args: argparse.Namespace) -> int:
    with open(args.tensor, "r", encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ModelParseError(f"{args.tensor}: invalid JSON ({exc})")
    tensor = _parse_tensor(obj)
    value = gnhaf(tensor)
    rhs_sym, rhs_plain = gnhaf_bound(tensor)
    report = {
        "command": "hafnian",
        "k": tensor.k,
        "n": tensor.n,
        "gnhaf": {"real": value.real, "imag": value.imag, "abs": abs(value)},
        "bound_symmetrized": rhs_sym,
        "bound_plain": rhs_plain,
    }
    _write_json(report, args.out)
    return 0


# --- argument plumbing -----------------------------------------------------------


def _parse_float_list(text: str, flag: str) -> list[float]:
    try:
        vals = [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise ModelParseError(f"{flag} expects comma-separated numbers, got {text!r}")
    if not vals:
        raise ModelParseError(f"{flag} expects at least one number")
    return vals


def _parse_int_list(text: str, flag: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise ModelParseError(f"{flag} expects comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="diagsum",
        description="Exact distributions and proven bounds for random diagonal sums.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_exact = sub.add_parser("exact", help="exact diagonal-sum distribution")
    p_exact.add_argument("model", help="model JSON file")
    p_exact.add_argument("--out", help="output path (default stdout)")
    p_exact.set_defaults(func=_cmd_exact)

    p_bounds = sub.add_parser("bounds", help="evaluate all applicable theorem bounds")
    p_bounds.add_argument("model", help="model JSON file")
    p_bounds.add_argument(
        "--epsilon", type=float, help="pair-quantity cap (default: auto-selected)"
    )
    p_bounds.add_argument(
        "--t",
        type=float,
        action="append",
        help="concentration window width; repeatable (default grid 0, 0.5, 1, 2)",
    )
    p_bounds.add_argument(
        "--phi", help="comma-separated row permutation for the fixed-pairing bound"
    )
    p_bounds.add_argument("--out", help="output path (default stdout)")
    p_bounds.add_argument("--csv", help="also write the reports as CSV")
    p_bounds.set_defaults(func=_cmd_bounds)

    p_const = sub.add_parser("constants", help="maximized bound constants")
    p_const.add_argument(
        "--alpha-list", required=True, help="comma-separated alpha values"
    )
    p_const.add_argument("--beta", type=float, default=0.5, help="power (default 0.5)")
    p_const.add_argument("--out", help="output path (default stdout)")
    p_const.set_defaults(func=_cmd_constants)

    p_verify = sub.add_parser("verify", help="randomized verification campaigns")
    p_verify.add_argument(
        "--suite",
        choices=sorted(_CLI_SUITES),
        default="all",
        help="campaign group (default all)",
    )
    p_verify.add_argument(
        "--seed", type=int, default=campaigns.DEFAULT_SEED, help="campaign seed"
    )
    p_verify.add_argument(
        "--instances", type=int, help="case count per campaign (default: spec counts)"
    )
    p_verify.add_argument(
        "--nmax", type=int, help="largest random model size (default 6; max 9)"
    )
    p_verify.add_argument("--out", help="output path (default stdout)")
    p_verify.add_argument("--csv", help="write trend rows as CSV")
    p_verify.set_defaults(func=_cmd_verify)

    p_haf = sub.add_parser("hafnian", help="generalized normalized hafnian of a tensor")
    p_haf.add_argument("tensor", help="tensor JSON file")
    p_haf.add_argument("--out", help="output path (default stdout)")
    p_haf.set_defaults(func=_cmd_hafnian)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "instances", None) is not None and args.instances < 1:
        print("error: --instances must be >= 1", file=sys.stderr)
        return 2
    if getattr(args, "nmax", None) is not None and not 2 <= args.nmax <= 9:
        print("error: --nmax must be between 2 and 9", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except (
        ModelParseError,
        KindMismatchError,
        CapacityError,
        ValueError,
        RuntimeError,
        OSError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
