"""Command-line interface.

Verbs: analyze, rank, compare, consistency, roundtrip, serve.
Exit codes: 0 success, 1 input/validation error, 2 numerical failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import analysis, em, gmm, measurement
from .core import is_transitive, validate_matrix
from .errors import NumericalError, ValidationError
from .matrixio import MatrixDocument, parse_matrix_document, render_report


def _load(path: str) -> MatrixDocument:
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc}") from None
    fmt = "json" if p.suffix.lower() == ".json" else "csv"
    return parse_matrix_document(text, fmt, source=str(p))


def _gmm_estimate(doc: MatrixDocument, c: float, normalized: bool) -> gmm.PriorityEstimate:
    est = gmm.gmm_estimate(doc.matrix, c)
    return gmm.normalize(est) if normalized else est


def cmd_analyze(args: argparse.Namespace) -> int:
    doc = _load(args.file)
    normalized = not args.no_normalize
    if args.method == "gmm":
        result = _gmm_estimate(doc, args.c, normalized)
    elif args.method == "em":
        result = em.em_estimate(doc.matrix)
    else:
        result = analysis.compare_estimates(
            _gmm_estimate(doc, args.c, normalized), em.em_estimate(doc.matrix)
        )
    print(render_report(result, args.format))
    return 0


def cmd_rank(args: argparse.Namespace) -> int:
    doc = _load(args.file)
    if args.method == "em":
        est = em.em_estimate(doc.matrix)
    else:
        est = gmm.normalize(gmm.gmm_estimate(doc.matrix, args.c))
    print(render_report(est, args.format))
    print(render_report(analysis.rank(est, sigma=args.sigma), args.format))
    return 0


def cmd_compare(args: argparse.Namespace) -> int:
    doc = _load(args.file)
    print(render_report(analysis.compare_methods(doc.matrix, sigma=args.sigma), args.format))
    return 0


def cmd_consistency(args: argparse.Namespace) -> int:
    doc = _load(args.file)
    a = doc.matrix
    print(f"reciprocal: {'yes' if a.reciprocal else 'no'}")
    print(f"transitive (tol {args.tol:g}): {'yes' if is_transitive(a, args.tol) else 'no'}")
    print(f"lambda: {gmm.matrix_lambda(a):.6g}")
    print("error exponents:")
    for i, d in enumerate(gmm.gmm_error_exponents(a)):
        print(f"  ω_{i + 1}  {d:.4f}")
    try:
        print(f"GCI: {analysis.gci(a):.4f}")
    except ValidationError as exc:
        print(f"GCI: n/a ({exc})")
    return 0


def cmd_roundtrip(args: argparse.Namespace) -> int:
    doc = _load(args.file)
    a = doc.matrix
    m = measurement.measurements_from_matrix(a, args.c)
    a2, lam = measurement.matrix_from_measurements(m, args.c)
    m2 = measurement.measurements_from_matrix(a2, args.c)
    matrix_err = float(np.max(np.abs(a2.entries / a.entries - 1.0)))
    samples_err = float(np.max(np.abs(m2.samples / m.samples - 1.0)))
    lam_err = abs(lam - gmm.matrix_lambda(a2))
    ok = matrix_err <= 1e-10 and samples_err <= 1e-10 and lam_err <= 1e-12
    print(f"matrix round-trip max relative error:       {matrix_err:.3e}")
    print(f"measurements round-trip max relative error: {samples_err:.3e}")
    print(f"lambda construction vs product form:        {lam_err:.3e}")
    print("round-trip ok" if ok else "round-trip FAILED")
    if not ok:
        raise NumericalError("round-trip identity violated")
    return 0


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pairrank",
        description="Priorities with error bars from pairwise comparison matrices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("analyze", help="derive priorities with error bars")
    p.add_argument("file")
    p.add_argument("--method", choices=["gmm", "em", "both"], default="gmm")
    p.add_argument("--no-normalize", action="store_true",
                   help="keep the raw scale (geometric-mean method only)")
    p.add_argument("--c", type=float, default=1.0, help="scale constant (default 1)")
    add_format(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("rank", help="rank elements with reliability verdicts")
    p.add_argument("file")
    p.add_argument("--method", choices=["gmm", "em"], default="gmm")
    p.add_argument("--sigma", type=float, default=1.0,
                   help="error-interval multiplier (default 1)")
    p.add_argument("--c", type=float, default=1.0)
    add_format(p)
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("compare", help="cross-validate geometric-mean vs eigenvector results")
    p.add_argument("file")
    p.add_argument("--sigma", type=float, default=1.0)
    add_format(p)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("consistency", help="transitivity, per-element error exponents, GCI")
    p.add_argument("file")
    p.add_argument("--tol", type=float, default=1e-9, help="transitivity tolerance")
    p.set_defaults(func=cmd_consistency)

    p = sub.add_parser("roundtrip", help="matrix/measurements bijection self-test")
    p.add_argument("file")
    p.add_argument("--c", type=float, default=1.0)
    p.set_defaults(func=cmd_roundtrip)

    p = sub.add_parser("serve", help="run the HTTP session service")
    p.add_argument("--port", type=int, default=8080)
    p.add_argument("--host", default="127.0.0.1")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except NumericalError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 2


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
