# src/cyclecalc/cli.py
"""
Command-line interface for CycleCalc.

Usage:
    cyclecalc index graph.txt --method both     # Laplacian index, cycles vs. direct
    cyclecalc detred graph.txt                  # reduced-determinant identity
    cyclecalc --format csv ring-table           # longest stable links on rings
    cyclecalc ring-scan --n 9 --steps 1000      # curves for plotting
    cyclecalc classify --graph-file g.txt --theta-file theta.txt --omega-file omega.txt
    cyclecalc cover --graph-file g.txt          # covering tree as an edge list
    cyclecalc --seed 3 selftest --count 200     # randomized consistency checks

Exit codes: 0 success, 2 unreadable input, 3 disconnected graph,
4 disagreement between independent computations, 5 singular cycle form,
6 not a fixed point, 7 degenerate edge weight.
"""

from __future__ import annotations

import hashlib
import json
import logging
import sys
import time
from dataclasses import asdict, dataclass, field
from functools import wraps
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

import click
import numpy as np
import pandas as pd

from cyclecalc import __version__
from cyclecalc.config import get_settings
from cyclecalc.covering import (
    build_cover,
    build_projections,
    cycle_basis_via_cover,
    laplacian_restriction_check,
)
from cyclecalc.data.exports import dataframe_to_csv_text, to_jsonable
from cyclecalc.exceptions import (
    CycleCalcError,
    DegenerateWeightError,
    FormatError,
    IdentityMismatchError,
    NotAFixedPointError,
    NotConnectedError,
    SingularCycleFormError,
)
from cyclecalc.graphs.core.basics import WeightedGraph, load_graph
from cyclecalc.kuramoto.fixed_points import PhaseConfiguration, classify_fixed_point
from cyclecalc.kuramoto.ring import TABLE_SIZES, ring_scan, ring_table
from cyclecalc.metadata import display_name
from cyclecalc.oracle.random_graphs import RandomGraphSpec, random_graphs
from cyclecalc.oracle.reference import brute_force_index
from cyclecalc.spectral.cycle_form import (
    cycle_form,
    detred_identity_check,
    index_bounds,
    index_via_cycles,
    tree_set_lower_bound,
)
from cyclecalc.spectral.laplacian import direct_index, inertia

__all__ = [
    "cli",
    "Report",
    "EXIT_CODES",
]

logger = logging.getLogger(__name__)

# most specific first
EXIT_CODES = (
    (NotConnectedError, 3),
    (IdentityMismatchError, 4),
    (SingularCycleFormError, 5),
    (NotAFixedPointError, 6),
    (DegenerateWeightError, 7),
    (FormatError, 2),
    (OSError, 2),
    (ValueError, 2),
    (CycleCalcError, 1),
)


@dataclass
class Report:
    """
    Structured result of one command.

    ``results`` and ``rows`` hold plain JSON values only, so that
    ``Report.from_json(report.to_json()) == report``.
    """
    command: str
    arguments: Dict[str, Any]
    input_digest: Optional[str]
    results: Dict[str, Any]
    rows: List[Dict[str, Any]] = field(default_factory=list)
    elapsed_seconds: float = 0.0
    version: str = __version__

    def __post_init__(self) -> None:
        self.arguments = to_jsonable(self.arguments)
        self.results = to_jsonable(self.results)
        self.rows = to_jsonable(self.rows)

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2, sort_keys=True, ensure_ascii=False)

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls(**json.loads(text))


@dataclass
class CliState:
    fmt: str
    seed: Optional[int]
    tol: Optional[float]
    started: float


def file_digest(paths: Sequence[Path]) -> str:
    """SHA-256 over the bytes of the given input files, in order."""
    h = hashlib.sha256()
    for path in paths:
        h.update(Path(path).read_bytes())
    return h.hexdigest()


def _configure_logging(level: int) -> None:
    pkg_logger = logging.getLogger("cyclecalc")
    for handler in list(pkg_logger.handlers):
        if getattr(handler, "_cyclecalc_cli", False):
            pkg_logger.removeHandler(handler)
    handler = logging.StreamHandler(click.get_text_stream("stderr"))
    handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
    handler._cyclecalc_cli = True
    pkg_logger.addHandler(handler)
    pkg_logger.setLevel(level)


def handle_errors(func):
    """Map package exceptions to exit codes, printing only the error message."""
    @wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except (click.exceptions.Exit, click.ClickException):
            raise
        except Exception as exc:  # noqa: BLE001
            for exc_type, code in EXIT_CODES:
                if isinstance(exc, exc_type):
                    click.echo(f"Error: {exc}", err=True)
                    sys.exit(code)
            raise
    return wrapper


def _read_graph(path: Path) -> WeightedGraph:
    return load_graph(Path(path), name=Path(path).name)


def _read_vector(path: Path, name: str) -> np.ndarray:
    try:
        values = np.loadtxt(path, dtype=float, ndmin=1, comments="#")
    except ValueError as exc:
        raise FormatError(f"{name} file {path}: {exc}") from None
    if not np.all(np.isfinite(values)):
        raise FormatError(f"{name} file {path} contains non-finite values.")
    return values


def _vertex_labels(g: WeightedGraph) -> Tuple[int, ...]:
    return g.labels if g.labels is not None else tuple(range(g.n_vertices))


def _to_graph_order(values: np.ndarray, g: WeightedGraph, name: str) -> np.ndarray:
    """Reorder a vector indexed by file vertex id into the compact vertex order of ``g``."""
    labels = _vertex_labels(g)
    if sorted(labels) != list(range(g.n_vertices)):
        raise FormatError(
            f"{name} is indexed by vertex id, so the graph ids must be exactly 0..{g.n_vertices - 1}; "
            f"got {sorted(labels)}."
        )
    if values.shape != (g.n_vertices,):
        raise ValueError(f"{name} must have length {g.n_vertices}, got {values.shape[0]}.")
    return values[np.asarray(labels)]


def _emit(state: CliState, report: Report, text_lines: Sequence[str]) -> None:
    report.elapsed_seconds = round(time.perf_counter() - state.started, 6)
    if state.fmt == "json":
        click.echo(report.to_json())
    elif state.fmt == "csv":
        if report.rows:
            df = pd.DataFrame(report.rows)
        else:
            df = pd.json_normalize(report.results, sep=".")
        click.echo(dataframe_to_csv_text(df), nl=False)
    else:
        click.echo("\n".join(text_lines))


def _inertia_text(label: str, value: Dict[str, int]) -> str:
    return f"{label}: n+ = {value['n_plus']}, n0 = {value['n_zero']}, n- = {value['n_minus']}"


# ----------------------------------------------------------------------
# Command group
# ----------------------------------------------------------------------
@click.group()
@click.version_option(version=__version__, prog_name="cyclecalc")
@click.option(
    "--format", "fmt",
    type=click.Choice(["text", "json", "csv"]),
    default="text",
    show_default=True,
    help="Output format.",
)
@click.option("--seed", type=int, default=None, help="Seed for randomized modes.")
@click.option("--tol", type=float, default=None, help="Relative zero threshold for inertia counts.")
@click.option(
    "--log-level",
    type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"], case_sensitive=False),
    default=None,
    help="Logging level (default from CYCLECALC_LOG_LEVEL).",
)
@click.option("-v", "--verbose", is_flag=True, help="Shorthand for --log-level INFO.")
@click.pass_context
def cli(ctx: click.Context, fmt: str, seed: Optional[int], tol: Optional[float],
        log_level: Optional[str], verbose: bool):
    """
    Spectral index of signed graph Laplacians through the cycle space.

    Graph files hold one edge per line, "tail head weight", with "#" comments,
    or a JSON object {"edges": [[u, v, w], ...]}.
    """
    if log_level is not None:
        level = getattr(logging, log_level.upper())
    elif verbose:
        level = logging.INFO
    else:
        level = get_settings().logging_level
    _configure_logging(level)
    if tol is not None and not tol > 0:
        raise click.BadParameter("must be positive", param_hint="--tol")
    ctx.obj = CliState(fmt=fmt, seed=seed, tol=tol, started=time.perf_counter())


@cli.command()
@click.argument("graph_file", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.option(
    "--method",
    type=click.Choice(["cycles", "direct", "both"]),
    default="cycles",
    show_default=True,
    help="Cycle-space formula, direct eigensolve, or both with an agreement check.",
)
@click.pass_obj
@handle_errors
def index(state: CliState, graph_file: Path, method: str):
    """
    Inertia of the graph Laplacian.

    Examples:
        cyclecalc index diamond.txt --method both
    """
    g = _read_graph(graph_file)
    if not g.is_connected():
        raise NotConnectedError(f"{graph_file} describes a disconnected graph.")

    results: Dict[str, Any] = {"n_vertices": g.n_vertices, "n_edges": g.n_edges, "methods": {}}
    lines = [f"Graph {g.name}: {g.n_vertices} vertices, {g.n_edges} edges"]

    if method in ("cycles", "both"):
        ci = index_via_cycles(g, state.tol)
        results["methods"]["cycles"] = ci.inertia.to_dict()
        results.update(
            n_negative_edges=ci.n_negative_edges,
            cycle_rank=ci.cycle_rank,
            z_inertia=ci.z_inertia.to_dict(),
            degenerate=ci.degenerate,
        )
        lines.append(_inertia_text(display_name(index_via_cycles), ci.inertia.to_dict()))
        lines.append(f"Negative edges: {ci.n_negative_edges}, cycle rank: {ci.cycle_rank}")
    if method in ("direct", "both"):
        direct = direct_index(g, state.tol)
        results["methods"]["direct"] = direct.to_dict()
        lines.append(_inertia_text(display_name(inertia), direct.to_dict()))

    if method == "both":
        a, b = results["methods"]["cycles"], results["methods"]["direct"]
        if a != b:
            raise IdentityMismatchError(f"Cycle-space inertia {a} differs from direct inertia {b}.")
        bounds = index_bounds(g)
        results["bounds"] = bounds._asdict()
        results["tree_set_lower_bound"] = tree_set_lower_bound(g)
        lines.append(
            f"{display_name(index_bounds)}: {bounds.lower} <= n+ <= {bounds.upper}; "
            f"negative tree-set edges: {results['tree_set_lower_bound']}"
        )

    results["inertia"] = next(iter(results["methods"].values()))
    report = Report(
        command="index",
        arguments={"graph_file": str(graph_file), "method": method, "tol": state.tol},
        input_digest=file_digest([graph_file]),
        results=results,
    )
    _emit(state, report, lines)


@cli.command()
@click.argument("graph_file", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.pass_obj
@handle_errors
def detred(state: CliState, graph_file: Path):
    """
    Check det_red(L)/N against det(Z) times the product of the weights.
    """
    g = _read_graph(graph_file)
    rep = detred_identity_check(g, state.tol)
    data = rep.to_dict()
    report = Report(
        command="detred",
        arguments={"graph_file": str(graph_file), "tol": state.tol},
        input_digest=file_digest([graph_file]),
        results=data,
    )
    lines = [
        f"det_red(L)/N     = {rep.lhs:.12g}",
        f"det(Z) prod(gam) = {rep.rhs:.12g}",
        f"|ratio|          = {abs(rep.ratio):.12g}",
        f"sign factor      = {rep.sign_factor:+d} (expected {rep.expected_sign:+d})",
    ]
    _emit(state, report, lines)


def _parse_n_list(ctx, param, value: Optional[str]) -> List[int]:
    if value is None:
        return list(TABLE_SIZES)
    try:
        ns = [int(tok) for tok in value.replace(",", " ").split()]
    except ValueError:
        raise click.BadParameter("expected a comma-separated list of integers") from None
    if not ns or min(ns) < 3:
        raise click.BadParameter("every ring size must be at least 3")
    return ns


@cli.command("ring-table")
@click.option("--n-list", callback=_parse_n_list, default=None,
              help="Comma-separated ring sizes (default 3,4,5,10,20,30,40,50).")
@click.pass_obj
@handle_errors
def ring_table_cmd(state: CliState, n_list: List[int]):
    """
    Longest stable link on rings, one row per ring size.
    """
    df = ring_table(n_list)
    rows = df.to_dict(orient="records")
    report = Report(
        command="ring-table",
        arguments={"n_list": n_list},
        input_digest=None,
        results={"count": len(rows)},
        rows=rows,
    )
    _emit(state, report, [df.to_string(index=False, float_format=lambda x: f"{x:.6f}")])


@cli.command("ring-scan")
@click.option("--n", "n", type=int, default=9, show_default=True, help="Ring size.")
@click.option("--zeta-min", type=float, default=0.0, show_default=True)
@click.option("--zeta-max", type=float, default=float(np.pi / 2), help="Upper end, excluded (default pi/2).")
@click.option("--steps", type=click.IntRange(min=1), default=1000, show_default=True)
@click.pass_obj
@handle_errors
def ring_scan_cmd(state: CliState, n: int, zeta_min: float, zeta_max: float, steps: int):
    """
    Sample h_n, the wrap frequency and cos((n-1) zeta) on a grid.
    """
    df = ring_scan(n, zeta_min, zeta_max, steps)
    rows = df.to_dict(orient="records")
    report = Report(
        command="ring-scan",
        arguments={"n": n, "zeta_min": zeta_min, "zeta_max": zeta_max, "steps": steps},
        input_digest=None,
        results={"count": len(rows), "poles": int(df["pole"].sum())},
        rows=rows,
    )
    _emit(state, report, [dataframe_to_csv_text(df).rstrip("\n")])


@cli.command()
@click.option("--graph-file", required=True, type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.option("--theta-file", required=True, type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.option("--omega-file", required=True, type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.option("--residual-tol", type=float, default=None, help="Fixed-point tolerance (default 1e-8).")
@click.pass_obj
@handle_errors
def classify(state: CliState, graph_file: Path, theta_file: Path, omega_file: Path,
             residual_tol: Optional[float]):
    """
    Unstable-manifold dimension of a Kuramoto fixed point.

    THETA and OMEGA files hold one number per line, line k giving vertex k of
    the graph file, whose vertex ids must be 0..N-1.
    """
    g = _read_graph(graph_file)
    labels = _vertex_labels(g)
    theta = _to_graph_order(_read_vector(theta_file, "theta"), g, "theta")
    omega = _to_graph_order(_read_vector(omega_file, "omega"), g, "omega")
    fp = classify_fixed_point(PhaseConfiguration(theta, omega, g), residual_tol, tol=state.tol)
    rows = [
        {
            "tail": labels[e.tail],
            "head": labels[e.head],
            "coupling": e.weight,
            "jacobian_weight": w,
            "long": w < 0,
        }
        for e, w in zip(g.edges, fp.weights)
    ]
    long_links = [[r["tail"], r["head"]] for r in rows if r["long"]]
    report = Report(
        command="classify",
        arguments={
            "graph_file": str(graph_file),
            "theta_file": str(theta_file),
            "omega_file": str(omega_file),
            "residual_tol": residual_tol,
            "tol": state.tol,
        },
        input_digest=file_digest([graph_file, theta_file, omega_file]),
        results={
            "unstable_dim": fp.unstable_dim,
            "zero_modes": fp.zero_modes,
            "stable": fp.is_stable,
            "residual": fp.residual,
            "long_links": long_links,
        },
        rows=rows,
    )
    lines = [
        f"Unstable dimension: {fp.unstable_dim} ({'stable' if fp.is_stable else 'unstable'})",
        f"Zero modes: {fp.zero_modes}",
        f"Residual: {fp.residual:.3e}",
        "Long links: " + (", ".join(f"({u}, {v})" for u, v in long_links) or "none"),
    ]
    lines += [f"  {r['tail']} {r['head']} {r['jacobian_weight']:.12g}" for r in rows]
    _emit(state, report, lines)


@cli.command()
@click.option("--graph-file", required=True, type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.pass_obj
@handle_errors
def cover(state: CliState, graph_file: Path):
    """
    Print the covering tree T as an edge list, with the vertex map as comments.
    """
    g = _read_graph(graph_file)
    labels = _vertex_labels(g)
    c = build_cover(g)
    rows = [{"tail": e.tail, "head": e.head, "weight": e.weight} for e in c.tree.edges]
    report = Report(
        command="cover",
        arguments={"graph_file": str(graph_file)},
        input_digest=file_digest([graph_file]),
        results={
            "n_tree_vertices": c.tree.n_vertices,
            "n_tree_edges": c.tree.n_edges,
            "n_graph_vertices": g.n_vertices,
            "cycle_rank": c.cycle_rank,
            "phi": [labels[v] for v in c.phi],
        },
        rows=rows,
    )
    _emit(state, report, [c.to_edge_list_text(labels).rstrip("\n")])


@cli.command()
@click.option("--count", type=click.IntRange(min=1), default=100, show_default=True,
              help="Number of random graphs.")
@click.pass_obj
@handle_errors
def selftest(state: CliState, count: int):
    """
    Compare the cycle-space index, reduced determinant and cover constructions
    with direct computations on seeded random graphs.
    """
    seed = 0 if state.seed is None else state.seed
    graphs = random_graphs(RandomGraphSpec(seed=seed), count)
    failures: List[str] = []
    checked_detred = 0
    for k, g in enumerate(graphs):
        ci = index_via_cycles(g, state.tol)
        ref = brute_force_index(g, state.tol)
        if ci.inertia != ref:
            failures.append(f"graph {k}: cycles {ci.inertia} vs direct {ref}")
        bounds = index_bounds(g)
        if not bounds.lower <= ref.n_plus <= bounds.upper:
            failures.append(f"graph {k}: n+ = {ref.n_plus} outside {tuple(bounds)}")
        if not ci.degenerate:
            try:
                detred_identity_check(g, state.tol)
                checked_detred += 1
            except SingularCycleFormError:
                logger.info("Graph %d: cycle form numerically singular, skipping det_red.", k)
            except IdentityMismatchError as exc:
                failures.append(f"graph {k}: {exc}")
        c = build_cover(g)
        pp = build_projections(c)
        if not laplacian_restriction_check(g, c, pp):
            failures.append(f"graph {k}: X^T L_T X differs from L_G")
        z_cover = inertia(cycle_form(g, cycle_basis_via_cover(c, pp)).Z, state.tol)
        if z_cover != ci.z_inertia:
            failures.append(f"graph {k}: cover basis gives {z_cover}, tree basis {ci.z_inertia}")

    if failures:
        for line in failures:
            logger.error(line)
        raise IdentityMismatchError(f"{len(failures)} check(s) failed; first: {failures[0]}")

    report = Report(
        command="selftest",
        arguments={"count": count, "seed": seed, "tol": state.tol},
        input_digest=None,
        results={"graphs": count, "detred_checked": checked_detred, "failures": 0},
    )
    _emit(state, report, [f"{count} graphs checked ({checked_detred} reduced determinants): all consistent"])
