"""Command-line interface.

Subcommands: spectrum, sigma, exists, classify, construct, verify, sweep.
Graphs come either from a named-family spec (``--graph D~4``) or an edge-list
file (``--file``); numeric output is printed to 10 significant digits; every
subcommand supports ``--format json``. Exit code 0 means the computation ran;
a negative answer (no configuration exists, verification failed) is still 0.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .admissible import (
    existence,
    sigma_cycle,
    sigma_tree,
    trichotomy,
)
from .classify import ComponentClass, classify_index, classify_structure
from .configurations import (
    VERIFY_TOL,
    configuration_document,
    construct_configuration,
    load_configuration,
    verify_configuration,
)
from .graphs import (
    Graph,
    GraphError,
    generate_named,
    is_tree,
    parse_edge_list,
    parse_named_spec,
)
from .spectra import graph_spectrum

SWEEP_HEADER = "tau,min_eigenvalue,exists,rank"


def _fmt(x: float) -> str:
    return f"{x:.10g}"


def _bool(x: bool) -> str:
    return "true" if x else "false"


def _load_graph(args: argparse.Namespace) -> Graph:
    if (args.graph is None) == (args.file is None):
        raise GraphError("give exactly one graph source: --graph or --file")
    if args.graph is not None:
        return generate_named(parse_named_spec(args.graph))
    return parse_edge_list(Path(args.file).read_text())


def _closed_form(shape: ComponentClass) -> str | None:
    """Exact endpoint expression for the recognized families, if any."""
    if shape.family == "A":
        return f"1/(4cos^2(pi/{shape.size + 1}))"
    if shape.family == "D":
        return f"1/(4cos^2(pi/{2 * (shape.size - 1)}))"
    if shape.family in ("E6", "E7", "E8"):
        denom = {"E6": 12, "E7": 18, "E8": 30}[shape.family]
        return f"1/(4cos^2(pi/{denom}))"
    if shape.family == "A~":
        return f"1/(4cos^2(pi/{shape.size + 1}))"
    if shape.is_extended:
        return "1/4"
    return None


def _emit(args: argparse.Namespace, payload: dict, text_lines: list[str]) -> None:
    if args.format == "json":
        print(json.dumps(payload))
    else:
        for line in text_lines:
            print(line)


def cmd_spectrum(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    spec = graph_spectrum(g)
    evals = [float(x) for x in spec.eigenvalues]
    payload = {
        "eigenvalues": evals,
        "index": spec.index,
        "min_eigenvalue": spec.min_eigenvalue,
        "residual_bound": spec.residual_bound,
    }
    lines = [
        "eigenvalues: " + ", ".join(_fmt(x) for x in evals),
        f"index: {_fmt(spec.index)}",
        f"min_eigenvalue: {_fmt(spec.min_eigenvalue)}",
    ]
    _emit(args, payload, lines)
    return 0


def cmd_sigma(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    shapes = classify_structure(g).components
    single = len(shapes) == 1
    if is_tree(g) and g.n >= 2:
        interval = sigma_tree(g)
        position = trichotomy(g)
        payload = {
            "sigma_upper": interval.upper,
            "interval": f"(0, {_fmt(interval.upper)}]",
            "trichotomy": position.value,
        }
        lines = [
            f"sigma_upper: {_fmt(interval.upper)}",
            f"interval: (0, {_fmt(interval.upper)}]",
        ]
        form = _closed_form(shapes[0])
        if form is not None:
            payload["closed_form"] = form
            lines.insert(1, f"closed_form: {form}")
        lines.append(f"trichotomy: {position.value}")
    elif single and shapes[0].family == "A~":
        interval = sigma_cycle(g.n)
        payload = {
            "sigma_upper": interval.upper,
            "interval": f"(0, {_fmt(interval.upper)}]",
            "closed_form": _closed_form(shapes[0]),
        }
        lines = [
            f"sigma_upper: {_fmt(interval.upper)}",
            f"closed_form: {payload['closed_form']}",
            f"interval: (0, {_fmt(interval.upper)}]",
        ]
    else:
        raise GraphError(
            "no formula in scope for this graph shape: sigma needs a tree "
            "with at least one edge, or a cycle"
        )
    _emit(args, payload, lines)
    return 0


def cmd_exists(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    verdict = existence(g, args.tau, psd_tol=args.tol)
    payload = {
        "exists": verdict.exists,
        "min_eigenvalue": verdict.min_eigenvalue,
        "rank": verdict.rank,
    }
    lines = [
        f"exists: {_bool(verdict.exists)}",
        f"min_eigenvalue: {_fmt(verdict.min_eigenvalue)}",
        f"rank: {verdict.rank}",
    ]
    _emit(args, payload, lines)
    return 0


def cmd_classify(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    shapes = classify_structure(g)
    numeric = classify_index(g, tol=args.tol)
    payload = {
        "components": [
            {"label": c.label, "vertices": list(c.vertices)} for c in shapes.components
        ],
        "index": numeric.index,
        "index_class": numeric.kind.value,
    }
    lines = ["components: " + ", ".join(c.label for c in shapes.components)]
    lines.append(f"index: {_fmt(numeric.index)}")
    lines.append(f"index_class: {numeric.kind.value}")
    _emit(args, payload, lines)
    return 0


def cmd_construct(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    config = construct_configuration(g, args.tau)
    report = verify_configuration(config, g, args.tau, verify_tol=args.tol)
    doc = configuration_document(config, g, args.tau, report)
    text = json.dumps(doc, indent=2)
    if args.out is not None:
        Path(args.out).write_text(text + "\n")
        print(f"wrote {args.out} (ambient_dim {config.ambient_dim}, "
              f"verification {'passed' if report.passed else 'FAILED'})")
    else:
        print(text)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    doc = json.loads(Path(getattr(args, "in")).read_text())
    config, g, w = load_configuration(doc)
    report = verify_configuration(config, g, w, verify_tol=args.tol)
    payload = report.as_dict()
    lines = [
        f"idempotency: {_fmt(report.idempotency)}",
        f"symmetry: {_fmt(report.symmetry)}",
        f"braid: {_fmt(report.braid)}",
        f"orthogonality: {_fmt(report.orthogonality)}",
        f"gram: {_fmt(report.gram)}",
        f"passed: {_bool(report.passed)}",
    ]
    _emit(args, payload, lines)
    return 0


def cmd_sweep(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    if args.steps < 1:
        raise ValueError("--steps must be at least 1")
    lo, hi = args.tau_min, args.tau_max
    if not 0.0 < lo <= hi <= 1.0:
        raise ValueError("need 0 < --tau-min <= --tau-max <= 1")
    taus = [
        lo + (hi - lo) * k / (args.steps - 1) if args.steps > 1 else lo
        for k in range(args.steps)
    ]
    rows = []
    for tau in taus:
        verdict = existence(g, tau, psd_tol=args.tol)
        rows.append((tau, verdict.min_eigenvalue, verdict.exists, verdict.rank))
    if args.format == "json":
        print(json.dumps({
            "rows": [
                {"tau": t, "min_eigenvalue": m, "exists": e, "rank": r}
                for t, m, e, r in rows
            ]
        }))
    else:
        print(SWEEP_HEADER)
        for t, m, e, r in rows:
            print(f"{_fmt(t)},{_fmt(m)},{_bool(e)},{r}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="angleset",
        description="Existence and construction of fixed-angle line configurations "
        "attached to finite graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, help_text: str, *, tau: bool = False,
            tol_default: float | None = None, graph_source: bool = True):
        p = sub.add_parser(name, help=help_text)
        if graph_source:
            p.add_argument("--graph", help="named family spec, e.g. A5, D~4, E~8, C6, K1,4")
            p.add_argument("--file", help="path to an edge-list file")
        if tau:
            p.add_argument("--tau", type=float, required=True,
                           help="angle parameter in (0, 1]")
        if tol_default is not None:
            p.add_argument("--tol", type=float, default=tol_default,
                           help=f"tolerance (default {tol_default:g})")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.set_defaults(func=func)
        return p

    add("spectrum", cmd_spectrum, "adjacency eigenvalues, index and minimum")
    add("sigma", cmd_sigma, "admissible parameter interval of a tree or cycle")
    add("exists", cmd_exists, "semidefiniteness verdict for a given tau",
        tau=True, tol_default=1e-9)
    add("classify", cmd_classify, "shape labels and index trichotomy",
        tol_default=1e-9)
    p_construct = add("construct", cmd_construct,
                      "build a configuration and export it as JSON",
                      tau=True, tol_default=VERIFY_TOL)
    p_construct.add_argument("--out", help="output path (default: stdout)")
    p_verify = sub.add_parser("verify", help="re-check an exported configuration")
    p_verify.add_argument("--in", required=True, help="path to a configuration JSON")
    p_verify.add_argument("--tol", type=float, default=VERIFY_TOL,
                          help=f"tolerance (default {VERIFY_TOL:g})")
    p_verify.add_argument("--format", choices=("text", "json"), default="text")
    p_verify.set_defaults(func=cmd_verify)
    p_sweep = sub.add_parser("sweep", help="tabulate existence over a tau range (CSV)")
    p_sweep.add_argument("--graph", help="named family spec, e.g. A5, D~4, E~8, C6, K1,4")
    p_sweep.add_argument("--file", help="path to an edge-list file")
    p_sweep.add_argument("--tau-min", type=float, default=0.01, dest="tau_min")
    p_sweep.add_argument("--tau-max", type=float, default=1.0, dest="tau_max")
    p_sweep.add_argument("--steps", type=int, default=100)
    p_sweep.add_argument("--tol", type=float, default=1e-9)
    p_sweep.add_argument("--format", choices=("text", "json", "csv"), default="csv")
    p_sweep.set_defaults(func=cmd_sweep)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, RuntimeError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
