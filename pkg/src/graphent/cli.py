"""Command-line interface.

Four subcommands: ``compute`` evaluates spectra, energies, indices, and
both entropy routes for one graph; ``verify`` sweeps the claim checkers
over a corpus; ``audit`` evaluates the cross-order inequality claims
without asserting them; ``scan`` finds extremal graphs for a measure over
an enumerated family.

Exit codes: 0 on success, 1 when a verify run records claim failures,
2 for usage or input problems.  Reports are byte-deterministic for a
given command line, including under ``--workers``.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path
from typing import Sequence

from .entropy import (
    closed_form_parts,
    daroczy_entropy,
    functional_entropy,
    probabilities_from_spectrum,
    probability_vector,
    quadratic_entropy,
    renyi_entropy,
)
from .errors import (
    GraphInputError,
    NegativeEigenvalueError,
    NoConvergenceError,
    NotOrientedError,
)
from .formats import parse_arc_list, parse_edge_list, parse_graph6
from .graphs import Graph, OrientedGraph, canonical_orientation
from .matrices import MatrixKind, as_kind, spectrum_of, standard_kinds
from .measures import (
    distance_moment,
    energy,
    first_zagreb,
    general_randic_index,
    hyper_wiener_index,
    wiener_index,
)
from .report import (
    audit_to_object,
    claim_to_object,
    render_csv,
    render_json,
    scan_to_object,
    verification_to_object,
)
from .verifier import (
    CHECK_NAMES,
    SCAN_FAMILIES,
    STATUSES,
    audit_corpus,
    audit_theorem10,
    scan_extremal,
    verify_corpus,
)

_EXIT_USAGE = 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphent",
        description="Spectrum-based graph entropies: compute, verify, audit, scan.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, alpha_default: str) -> None:
        p.add_argument("--alpha", default=alpha_default,
                       help="comma-separated entropy orders (default %(default)s)")
        p.add_argument("--log-base", type=float, default=2.0,
                       help="logarithm base for entropies (default 2)")
        p.add_argument("--seed", type=int, default=0,
                       help="seed mixed into random orientations and corpora")
        p.add_argument("--format", choices=("json", "csv"), default="json",
                       help="output format (default json)")
        p.add_argument("--out", default=None,
                       help="write the report here instead of stdout")

    p_compute = sub.add_parser("compute", help="evaluate one graph")
    p_compute.add_argument("--input", required=True, help="graph file to read")
    p_compute.add_argument("--input-format", choices=("auto", "edges", "arcs", "graph6"),
                           default="auto", help="input syntax (default: by extension)")
    p_compute.add_argument("--matrix", default="all",
                           help="matrix kind tag, or 'all' for every applicable kind")
    p_compute.add_argument("--beta", default="-1,-0.5,1",
                           help="exponents for the general degree-product kinds")
    common(p_compute, "0.5,2,3")

    p_verify = sub.add_parser("verify", help="check claims over a corpus")
    p_verify.add_argument("--corpus", required=True,
                          help="all:<n> | trees:<n> | gnp:<n>,<p>,<count>")
    p_verify.add_argument("--checks", default=",".join(CHECK_NAMES),
                          help="comma-separated subset of %(default)s")
    p_verify.add_argument("--beta", default="-1,-0.5,1",
                          help="exponents for the general degree-product claims")
    p_verify.add_argument("--workers", type=int, default=None,
                          help="worker processes (default: GRAPHENT_WORKERS or 1)")
    common(p_verify, "0.5,2,3")

    p_audit = sub.add_parser(
        "audit",
        help="evaluate the cross-order inequality claims (reported, not asserted; "
             "violations do not change the exit code)")
    p_audit.add_argument("--corpus", default=None,
                         help="audit spectrum distributions of this corpus")
    p_audit.add_argument("--p", default=None,
                         help="audit one explicit distribution, e.g. 0.9,0.1")
    p_audit.add_argument("--matrix", default="all",
                         help="matrix kind tag, or 'all' (corpus mode)")
    common(p_audit, "0.5,1.5,2,3")

    p_scan = sub.add_parser("scan", help="extremal graphs of a family for a measure")
    p_scan.add_argument("--family", required=True, choices=SCAN_FAMILIES)
    p_scan.add_argument("--order", required=True, type=int, help="vertex count")
    p_scan.add_argument("--measure", required=True,
                        help="m1 | randic-index:<b> | wiener | hyper-wiener | wk:<k> | "
                             "energy:<kind> | quadratic:<kind> | renyi:<kind>:<a> | "
                             "daroczy:<kind>:<a>")
    p_scan.add_argument("--ranking", action="store_true",
                        help="retain the full value ranking in the report")
    common(p_scan, "2")

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else _EXIT_USAGE
    try:
        if args.command == "compute":
            return _run_compute(args)
        if args.command == "verify":
            return _run_verify(args)
        if args.command == "audit":
            return _run_audit(args)
        return _run_scan(args)
    except (GraphInputError, ValueError, NotOrientedError,
            NoConvergenceError, NegativeEigenvalueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_USAGE


def _parse_floats(text: str, what: str) -> tuple[float, ...]:
    out = []
    for piece in text.split(","):
        piece = piece.strip()
        if not piece:
            continue
        try:
            out.append(float(piece))
        except ValueError:
            raise ValueError(f"bad {what} {piece!r}") from None
    if not out:
        raise ValueError(f"no {what} values given")
    return tuple(out)


def _load_graph(path: str, input_format: str) -> Graph | OrientedGraph:
    fmt = input_format
    if fmt == "auto":
        suffix = Path(path).suffix.lower()
        if suffix in (".g6", ".graph6"):
            fmt = "graph6"
        elif suffix == ".arcs":
            fmt = "arcs"
        else:
            fmt = "edges"
    data = Path(path).read_bytes()
    if fmt == "graph6":
        return parse_graph6(data)
    text = data.decode("utf-8")
    if fmt == "arcs":
        return parse_arc_list(text)
    return parse_edge_list(text)


def _write_report(doc: dict, args) -> None:
    text = render_json(doc) if args.format == "json" else render_csv(doc)
    if args.out:
        # bytes, not text: keep CSV line endings exact on every platform
        Path(args.out).write_bytes(text.encode("utf-8"))
    else:
        sys.stdout.write(text)


def _resolve_workers(args) -> int:
    if args.workers is not None:
        return max(1, args.workers)
    raw = os.environ.get("GRAPHENT_WORKERS", "").strip()
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            raise ValueError(f"bad GRAPHENT_WORKERS value {raw!r}") from None
    return 1


def _run_compute(args) -> int:
    loaded = _load_graph(args.input, args.input_format)
    plain = loaded.underlying if isinstance(loaded, OrientedGraph) else loaded
    alphas = _parse_floats(args.alpha, "alpha")
    betas = _parse_floats(args.beta, "beta")
    base = args.log_base

    if args.matrix == "all":
        kinds = list(standard_kinds(betas))
        strict = False
    else:
        kinds = [as_kind(args.matrix)]
        strict = True

    matrices = []
    skipped = []
    for kind in kinds:
        try:
            entry = _compute_kind(kind, loaded, plain, alphas, base)
        except ValueError as exc:
            if strict:
                raise
            skipped.append({"kind": str(kind), "reason": str(exc)})
            continue
        matrices.append(entry)

    indices: dict[str, float] = {
        "m1": float(first_zagreb(plain)),
        "randic-index:-1": general_randic_index(plain, -1.0),
        "randic-index:-0.5": general_randic_index(plain, -0.5),
    }
    if plain.is_connected and plain.n >= 1:
        indices["wiener"] = wiener_index(plain)
        indices["hyper-wiener"] = hyper_wiener_index(plain)
        indices["w2"] = distance_moment(plain, 2)
    if plain.m >= 1:
        indices["functional-degree-entropy"] = functional_entropy(
            plain.degrees, log_base=base)

    doc = {
        "report": "compute",
        "input": args.input,
        "graph": {
            "vertices": plain.n,
            "edges": plain.m,
            "connected": plain.is_connected,
            "degrees": list(plain.degrees),
            "oriented_input": isinstance(loaded, OrientedGraph),
        },
        "alphas": list(alphas),
        "log_base": float(base),
        "indices": indices,
        "matrices": matrices,
        "skipped": skipped,
    }
    _write_report(doc, args)
    return 0


def _compute_kind(kind: MatrixKind, loaded: Graph | OrientedGraph, plain: Graph,
                  alphas: tuple[float, ...], base: float) -> dict:
    if kind.needs_orientation:
        target: Graph | OrientedGraph = (
            loaded if isinstance(loaded, OrientedGraph) else canonical_orientation(plain)
        )
        orientation = "input" if isinstance(loaded, OrientedGraph) else "canonical"
    else:
        target = plain
        orientation = None
    spectrum = spectrum_of(kind, target)
    pv = probabilities_from_spectrum(spectrum, base)
    closed = closed_form_parts(kind, target, spectrum=None if kind.tag == "incidence" else spectrum)
    renyi_rows = []
    daroczy_rows = []
    for a in alphas:
        renyi_rows.append({"alpha": a, "direct": renyi_entropy(pv, a),
                           "closed": closed.renyi(a, base)})
        daroczy_rows.append({"alpha": a, "direct": daroczy_entropy(pv, a),
                             "closed": closed.daroczy(a)})
    return {
        "kind": str(kind),
        "orientation": orientation,
        "spectrum": [float(v) for v in spectrum.values],
        "spectrum_kind": spectrum.kind,
        "energy": energy(kind, target),
        "entropy": {
            "quadratic": {"direct": quadratic_entropy(pv), "closed": closed.quadratic_value},
            "renyi": renyi_rows,
            "daroczy": daroczy_rows,
        },
    }


def _run_verify(args) -> int:
    checks = tuple(c.strip() for c in args.checks.split(",") if c.strip())
    report = verify_corpus(
        args.corpus,
        checks=checks,
        alphas=_parse_floats(args.alpha, "alpha"),
        betas=_parse_floats(args.beta, "beta"),
        seed=args.seed,
        log_base=args.log_base,
        workers=_resolve_workers(args),
    )
    _write_report(verification_to_object(report), args)
    return 0 if report.ok else 1


def _run_audit(args) -> int:
    grid = _parse_floats(args.alpha, "alpha")
    if (args.p is None) == (args.corpus is None):
        raise ValueError("audit needs exactly one of --corpus or --p")
    if args.p is not None:
        weights = _parse_floats(args.p, "probability")
        pv = probability_vector(weights, origin="stated", log_base=args.log_base)
        results = audit_theorem10(pv, grid, args.log_base)
        counts: dict[str, dict[str, int]] = {}
        for res in results:
            by_status = counts.setdefault(res.claim_id, {})
            by_status[res.status] = by_status.get(res.status, 0) + 1
        doc = {
            "report": "audit",
            "distribution": list(weights),
            "alpha_grid": list(grid),
            "log_base": float(args.log_base),
            "summary": {cid: {st: by.get(st, 0) for st in STATUSES}
                        for cid, by in counts.items()},
            "claims": [claim_to_object(c) for c in results],
        }
        _write_report(doc, args)
        return 0
    kinds = None if args.matrix == "all" else [as_kind(args.matrix)]
    report = audit_corpus(args.corpus, kinds=kinds, alpha_grid=grid,
                          seed=args.seed, log_base=args.log_base)
    _write_report(audit_to_object(report), args)
    return 0


def _run_scan(args) -> int:
    scan = scan_extremal(args.family, args.order, args.measure,
                         log_base=args.log_base, keep_ranking=args.ranking)
    _write_report(scan_to_object(scan), args)
    return 0


if __name__ == "__main__":
    sys.exit(main())
