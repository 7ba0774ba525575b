"""Command line front end.

Exit codes are a stable contract: 0 is success (for ``check``, an order),
1 is a domain failure (a non-order, an infeasible hull, a fuzz
counterexample), 2 is unusable input (bad flags, unreadable file,
malformed JSON).  Output is deterministic for a fixed (input, seed)
pair.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from .correspondence import ApartmentVertex, intersect_maximal, verify_roundtrip
from .errors import EnumerationLimitError, NegativeCycleError, SplitOrderError
from .exponent import (
    ExponentMatrix,
    first_violation,
    has_containing_maximal,
    hijikata_normal_form,
    is_order,
    order_hull,
)
from .fuzz import FuzzConfig, run_fuzz
from .polytope import enumerate_lattice_points, is_reduced, polytope_of
from .render import render_polytope_svg

MAX_DIMENSION = 6


class UsageError(Exception):
    """Input that could not even be parsed; maps to exit code 2."""


@dataclass(frozen=True)
class RunConfig:
    """One resolved invocation of the tool."""

    subcommand: str
    input_path: Optional[str] = None
    out_path: Optional[str] = None
    prime: int = 2
    n_min: int = 2
    n_max: int = 4
    entry_min: int = -3
    entry_max: int = 5
    trials: int = 10000
    seed: int = 0
    scale: float = 40.0
    margin: float = 1.5

    def __post_init__(self):
        if self.trials < 1:
            raise UsageError("trial count must be >= 1")
        if self.entry_min > self.entry_max:
            raise UsageError("entry range is empty")
        if not 2 <= self.n_min <= self.n_max <= MAX_DIMENSION:
            raise UsageError(
                f"dimension range must satisfy 2 <= n <= {MAX_DIMENSION}"
            )
        if self.prime < 2:
            raise UsageError("prime must be at least 2")
        if self.scale <= 0:
            raise UsageError("scale must be positive")


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def _load_json(path: str):
    try:
        return json.loads(_read_text(path))
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: not valid JSON ({exc})") from exc


def _load_matrix(path: str) -> ExponentMatrix:
    """Exponent matrix from a JSON object {"n": ..., "nu": ...} or bare rows."""
    data = _load_json(path)
    try:
        if isinstance(data, list):
            return ExponentMatrix(data)
        return ExponentMatrix.from_json_dict(data)
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"{path}: not an exponent matrix ({exc})") from exc


def _load_vertices(path: str) -> list[ApartmentVertex]:
    data = _load_json(path)
    try:
        return [ApartmentVertex(coords) for coords in data]
    except (ValueError, TypeError) as exc:
        raise UsageError(f"{path}: not a vertex list ({exc})") from exc


def _bool(flag: bool) -> str:
    return "true" if flag else "false"


def cmd_check(cfg: RunConfig) -> int:
    nu = _load_matrix(cfg.input_path)
    order = is_order(nu)
    feasible = has_containing_maximal(nu)
    print(f"order: {_bool(order)}")
    print(f"reduced: {_bool(is_reduced(nu))}")
    print(f"feasible: {_bool(feasible)}")
    if order:
        return 0
    i, k, j = first_violation(nu)
    print(f"violated: ({i + 1},{j + 1}) via k={k + 1}")
    if feasible:
        print(f"hull: {json.dumps(order_hull(nu).to_json_dict())}")
    else:
        print("hull: unavailable (negative cycle)")
    return 1


def cmd_hull(cfg: RunConfig) -> int:
    nu = _load_matrix(cfg.input_path)
    if not has_containing_maximal(nu):
        print("error: no containing maximal order (negative cycle)", file=sys.stderr)
        return 1
    print(json.dumps(order_hull(nu).to_json_dict()))
    return 0


def cmd_vertices(cfg: RunConfig) -> int:
    nu = _load_matrix(cfg.input_path)
    try:
        points = enumerate_lattice_points(polytope_of(nu))
    except EnumerationLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(json.dumps([list(p.coords) for p in points]))
    print(f"{len(points)} lattice points", file=sys.stderr)
    return 0


def cmd_intersect(cfg: RunConfig) -> int:
    vertices = _load_vertices(cfg.input_path)
    mu = intersect_maximal(vertices)
    print(json.dumps(mu.to_json_dict()))
    return 0


def cmd_roundtrip(cfg: RunConfig) -> int:
    nu = _load_matrix(cfg.input_path)
    try:
        report = verify_roundtrip(nu)
    except NegativeCycleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(json.dumps(report.to_json_dict(), indent=2))
    return 0 if report.ok else 1


def cmd_hijikata(cfg: RunConfig) -> int:
    nu = _load_matrix(cfg.input_path)
    print(hijikata_normal_form(nu))
    return 0


def cmd_draw(cfg: RunConfig) -> int:
    nu = _load_matrix(cfg.input_path)
    svg = render_polytope_svg(nu, scale=cfg.scale, margin=cfg.margin)
    with open(cfg.out_path, "w", encoding="utf-8") as fh:
        fh.write(svg)
    print(f"wrote {cfg.out_path}", file=sys.stderr)
    return 0


def cmd_fuzz(cfg: RunConfig) -> int:
    config = FuzzConfig(
        n_min=cfg.n_min,
        n_max=cfg.n_max,
        entry_min=cfg.entry_min,
        entry_max=cfg.entry_max,
        trials=cfg.trials,
        seed=cfg.seed,
        prime=cfg.prime,
    )
    report = run_fuzz(config)
    print(f"seed: {report.seed}")
    for line in report.summary_lines():
        print(line)
    if report.ok:
        return 0
    print("counterexamples:")
    print(json.dumps(report.failures, indent=2))
    return 1


_COMMANDS = {
    "check": cmd_check,
    "hull": cmd_hull,
    "vertices": cmd_vertices,
    "intersect": cmd_intersect,
    "roundtrip": cmd_roundtrip,
    "hijikata": cmd_hijikata,
    "draw": cmd_draw,
    "fuzz": cmd_fuzz,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="splitorders",
        description="split orders, their polytopes, and the bijection between them",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def matrix_command(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("input", help="JSON file, or - for standard input")
        return p

    matrix_command("check", "decide whether an exponent matrix gives an order")
    matrix_command("hull", "largest order inside the declared shape")
    matrix_command("vertices", "lattice points of the region of an exponent matrix")
    p = sub.add_parser(
        "intersect", help="exponent matrix of an intersection of maximal orders"
    )
    p.add_argument("input", help="JSON list of vertex coordinate lists, or -")
    matrix_command("roundtrip", "verify the shape -> vertices -> intersection round trip")
    matrix_command("hijikata", "level of a 2 x 2 order")
    p = matrix_command("draw", "render the region of a 3 x 3 matrix as SVG")
    p.add_argument("--out", required=True, help="output SVG path")
    p.add_argument("--scale", type=float, default=40.0, help="pixels per lattice step")
    p = sub.add_parser("fuzz", help="run the randomized invariant suites")
    p.add_argument("--trials", type=int, default=10000, help="sample budget per suite")
    p.add_argument("--seed", type=int, default=0, help="master seed, replayable")
    p.add_argument("--n", type=int, default=4, help="largest matrix dimension")
    p.add_argument("--min", type=int, default=-3, dest="entry_min", help="smallest exponent")
    p.add_argument("--max", type=int, default=5, dest="entry_max", help="largest exponent")
    p.add_argument("--prime", type=int, default=2, help="residue characteristic")
    return parser


def _config(ns: argparse.Namespace) -> RunConfig:
    kwargs = {"subcommand": ns.subcommand}
    if hasattr(ns, "input"):
        kwargs["input_path"] = ns.input
    if hasattr(ns, "out"):
        kwargs["out_path"] = ns.out
    if hasattr(ns, "scale"):
        kwargs["scale"] = ns.scale
    for name in ("trials", "seed", "prime", "entry_min", "entry_max"):
        if hasattr(ns, name):
            kwargs[name] = getattr(ns, name)
    if hasattr(ns, "n"):
        kwargs["n_max"] = ns.n
    return RunConfig(**kwargs)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        cfg = _config(ns)
        return _COMMANDS[cfg.subcommand](cfg)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SplitOrderError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
