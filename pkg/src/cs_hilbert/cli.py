"""Command-line front end.

Four commands: ``report`` aggregates everything the library knows about one
antichain into a JSON document (optionally rendering a figure), ``verify``
sweeps antichains and re-checks every identity, ``enumerate`` lists the
antichains of a grid, and ``dot`` emits the bipartite graph in DOT format.

Exit codes: 0 on success, 1 on input or configuration errors, and 3 when a
computation disagrees with itself (a counterexample to the identities the
package implements, which is the most important signal the sweep can emit).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from . import dimension, oracle, verify
from .errors import DomainError, PreconditionError
from .grid import Antichain, GridShape, cut, cutting_threshold, normalize_antichain, order_ideal
from .ideals import default_box, hilbert_table, ideal_of_antichain
from .tangent import tangent_dimension_formula

DEFAULT_SWEEP_CAP = 7
CAP_ENV_VAR = "CS_HILBERT_CAP"

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_INCONSISTENT = 3


class CLIInputError(Exception):
    """Bad input to the command line; reported on stderr with exit code 1."""


@dataclass
class RunConfig:
    command: str
    input_source: Optional[str] = None
    output: str = "-"
    box: Optional[tuple[int, int]] = None
    sweep: Optional[tuple[int, int]] = None
    include_smaller: bool = False
    samples: Optional[int] = None
    seed: int = 0
    grid: Optional[tuple[int, int]] = None
    jobs: int = 1
    antichain_only: bool = False
    figure: Optional[str] = None


def _sweep_cap() -> int:
    raw = os.environ.get(CAP_ENV_VAR)
    if raw is None:
        return DEFAULT_SWEEP_CAP
    try:
        cap = int(raw)
    except ValueError as err:
        raise CLIInputError(f"{CAP_ENV_VAR} must be an integer, got {raw!r}") from err
    if cap < 1:
        raise CLIInputError(f"{CAP_ENV_VAR} must be >= 1, got {cap}")
    return cap


def _parse_pair(text: str, flag: str) -> tuple[int, int]:
    parts = text.lower().split("x")
    if len(parts) != 2:
        raise CLIInputError(f"{flag} expects the form AxB, got {text!r}")
    try:
        left, right = int(parts[0]), int(parts[1])
    except ValueError as err:
        raise CLIInputError(f"{flag} expects integers, got {text!r}") from err
    return left, right


def _load_json_document(source: str):
    if source == "-":
        text = sys.stdin.read()
        name = "<stdin>"
    elif source.lstrip().startswith("{"):
        text = source
        name = "<inline>"
    else:
        try:
            text = Path(source).read_text(encoding="utf-8")
        except OSError as err:
            raise CLIInputError(f"cannot read {source}: {err}") from err
        name = source
    try:
        return json.loads(text)
    except json.JSONDecodeError as err:
        raise CLIInputError(
            f"{name}: invalid JSON at line {err.lineno} column {err.colno}: {err.msg}"
        ) from err


def _read_antichain(source: Optional[str]) -> Antichain:
    if source is None:
        raise CLIInputError("an antichain document is required; pass --input")
    doc = _load_json_document(source)
    if not isinstance(doc, dict):
        raise CLIInputError("antichain document must be a JSON object")
    try:
        m, n = int(doc["m"]), int(doc["n"])
        raw = [(int(a), int(b)) for a, b in doc["antichain"]]
    except (KeyError, TypeError, ValueError) as err:
        raise CLIInputError(f"antichain document needs m, n, antichain fields: {err}") from err
    try:
        return normalize_antichain(raw, GridShape(m, n))
    except DomainError as err:
        raise CLIInputError(str(err)) from err


def _write_output(text: str, destination: str) -> None:
    if destination == "-":
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        Path(destination).write_text(text + "\n", encoding="utf-8")


def _cut_block(antichain: Antichain) -> Optional[dict]:
    if antichain.is_empty() or cutting_threshold(antichain) == 0:
        return None
    pieces = cut(antichain)

    def side(shape, sub, originals, ranges):
        (x_lo, x_hi), (y_lo, y_hi) = ranges
        return {
            "m": shape.m,
            "n": shape.n,
            "antichain": [list(p) for p in sub.points],
            "antichain_original": [list(p) for p in originals],
            "x_range": [x_lo, x_hi],
            "y_range": [y_lo, y_hi],
        }

    return {
        "q": pieces.q,
        "left": side(
            pieces.left_shape,
            pieces.left_antichain,
            pieces.left_points_original(),
            pieces.left_ranges(),
        ),
        "right": side(
            pieces.right_shape,
            pieces.right_antichain,
            pieces.right_points_original(),
            pieces.right_ranges(),
        ),
    }


def build_report(antichain: Antichain, box: Optional[tuple[int, int]] = None) -> dict:
    """Aggregate every computation for one antichain into a JSON-ready dict."""
    if box is None:
        box = default_box(antichain.shape)
    ideal = ideal_of_antichain(antichain)
    report = tangent_dimension_formula(antichain)
    hom = oracle.tangent_hom_space(antichain)
    decomposition = oracle.weight_decomposition(hom)
    recursion_dim, trace = dimension.hilbert_scheme_dimension(antichain)
    consistent = report.total == hom.dimension == recursion_dim
    return {
        "antichain": antichain.to_json(),
        "order_ideal_size": len(order_ideal(antichain)),
        "ideal": ideal.to_json(),
        "hilbert_table": hilbert_table(ideal, box).to_json(),
        "cutting_threshold": None if antichain.is_empty() else cutting_threshold(antichain),
        "cut": _cut_block(antichain),
        "tangent": report.to_json(),
        "oracle_dimension": hom.dimension,
        "weight_decomposition": [
            {**weight.to_json(), "multiplicity": decomposition[weight]}
            for weight in sorted(decomposition, key=lambda w: w.sort_key())
        ],
        "dimension": recursion_dim,
        "trace": trace.to_json(),
        "consistent": consistent,
    }


def render_dot(antichain: Antichain, antichain_only: bool = False) -> str:
    """Bipartite graph in DOT format; antichain edges are bold."""
    shape = antichain.shape
    marked = set(antichain.points)
    lines = [
        "graph bigraded_ideal {",
        "  rankdir=TB;",
        "  node [shape=circle, fontsize=10];",
        "  { rank=source; " + " ".join(f"x{i};" for i in range(1, shape.m + 1)) + " }",
        "  { rank=sink; " + " ".join(f"y{j};" for j in range(1, shape.n + 1)) + " }",
    ]
    edges = sorted(marked) if antichain_only else order_ideal(antichain).sorted_points()
    for a, b in edges:
        style = " [style=bold, penwidth=2]" if (a, b) in marked else ""
        lines.append(f"  x{a} -- y{b}{style};")
    lines.append("}")
    return "\n".join(lines)


def _cmd_report(config: RunConfig) -> int:
    antichain = _read_antichain(config.input_source)
    report = build_report(antichain, config.box)
    _write_output(json.dumps(report, indent=2), config.output)
    if config.figure:
        from . import figures

        figures.render_report_figure(antichain, config.figure)
    return EXIT_OK if report["consistent"] else EXIT_INCONSISTENT


def _check_cap(pair: tuple[int, int], flag: str) -> None:
    cap = _sweep_cap()
    if pair[0] > cap or pair[1] > cap:
        raise CLIInputError(
            f"{flag} {pair[0]}x{pair[1]} exceeds the cap {cap}x{cap}; "
            f"set {CAP_ENV_VAR} to opt in to larger sweeps"
        )


def _cmd_verify(config: RunConfig) -> int:
    if config.sweep is not None and config.samples is not None:
        raise CLIInputError("choose either --sweep or --samples, not both")
    if config.sweep is not None:
        _check_cap(config.sweep, "--sweep")
        cases = verify.sweep_antichains(*config.sweep, include_smaller=config.include_smaller)
        document = {
            "mode": "sweep",
            "sweep": list(config.sweep),
            "include_smaller": config.include_smaller,
        }
    elif config.samples is not None:
        if config.grid is None:
            raise CLIInputError("--samples requires --grid MxN")
        _check_cap(config.grid, "--grid")
        shape = GridShape(*config.grid)
        cases = verify.sample_antichains(shape, config.samples, config.seed)
        document = {
            "mode": "random",
            "grid": list(config.grid),
            "samples": config.samples,
            "seed": config.seed,
            "cases": sorted([a.shape.m, a.shape.n, [list(p) for p in a.points]] for a in cases),
        }
    else:
        raise CLIInputError("verify needs --sweep MxN or --samples N --grid MxN")
    document.update(verify.run_cases(cases, jobs=config.jobs))
    _write_output(json.dumps(document, indent=2), config.output)
    return EXIT_OK if document["ok"] else EXIT_INCONSISTENT


def _cmd_enumerate(config: RunConfig) -> int:
    if config.grid is None:
        raise CLIInputError("enumerate needs --grid MxN")
    _check_cap(config.grid, "--grid")
    shape = GridShape(*config.grid)
    from .grid import enumerate_antichains

    antichains = [[list(p) for p in a.points] for a in enumerate_antichains(shape)]
    document = {
        "m": shape.m,
        "n": shape.n,
        "count": len(antichains),
        "antichains": antichains,
    }
    _write_output(json.dumps(document, indent=2), config.output)
    return EXIT_OK


def _cmd_dot(config: RunConfig) -> int:
    antichain = _read_antichain(config.input_source)
    _write_output(render_dot(antichain, config.antichain_only), config.output)
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cs-hilbert",
        description="exact combinatorics of antichain ideals and their Hilbert schemes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_io(p, with_input=True):
        if with_input:
            p.add_argument(
                "--input",
                help="antichain document: a path, '-' for stdin, or inline JSON",
            )
        p.add_argument("--output", default="-", help="output path, '-' for stdout")

    report = sub.add_parser("report", help="full JSON report for one antichain")
    add_io(report)
    report.add_argument("--box", help="Hilbert table box as D1xD2 (default MxN)")
    report.add_argument("--figure", help="also render the graph figure to this file")

    ver = sub.add_parser("verify", help="re-check every identity over a sweep")
    add_io(ver, with_input=False)
    ver.add_argument("--sweep", help="check all antichains of the MxN grid")
    ver.add_argument(
        "--include-smaller",
        action="store_true",
        help="with --sweep, also check every smaller grid",
    )
    ver.add_argument("--samples", type=int, help="number of random antichains")
    ver.add_argument("--seed", type=int, default=0, help="seed for --samples")
    ver.add_argument("--grid", help="grid MxN for --samples")
    ver.add_argument("--jobs", type=int, default=1, help="worker processes")

    enum = sub.add_parser("enumerate", help="list the antichains of a grid")
    add_io(enum, with_input=False)
    enum.add_argument("--grid", help="grid MxN")

    dot = sub.add_parser("dot", help="bipartite graph in DOT format")
    add_io(dot)
    dot.add_argument(
        "--antichain-only",
        action="store_true",
        help="draw only the antichain edges",
    )
    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    config = RunConfig(command=args.command)
    config.input_source = getattr(args, "input", None)
    config.output = getattr(args, "output", "-")
    if getattr(args, "box", None):
        config.box = _parse_pair(args.box, "--box")
    if getattr(args, "sweep", None):
        config.sweep = _parse_pair(args.sweep, "--sweep")
    config.include_smaller = getattr(args, "include_smaller", False)
    config.samples = getattr(args, "samples", None)
    config.seed = getattr(args, "seed", 0)
    if getattr(args, "grid", None):
        config.grid = _parse_pair(args.grid, "--grid")
    config.jobs = getattr(args, "jobs", 1)
    config.antichain_only = getattr(args, "antichain_only", False)
    config.figure = getattr(args, "figure", None)
    return config


_COMMANDS = {
    "report": _cmd_report,
    "verify": _cmd_verify,
    "enumerate": _cmd_enumerate,
    "dot": _cmd_dot,
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        config = _config_from_args(args)
        return _COMMANDS[config.command](config)
    except (CLIInputError, DomainError, PreconditionError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INPUT_ERROR


def run() -> None:
    raise SystemExit(main())
