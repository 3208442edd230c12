"""Matrix ingestion and report serialization.

Input formats:
  CSV  - optional first header row of labels; cells are decimals or
         fractions "p/q" with positive integers p, q.
  JSON - object with required "matrix" (array of arrays; numbers or
         fraction strings) and optional "elements" (array of label strings).

Report output:
  text - fixed-width table, values to 3 decimals, elements shown 1-based
         in the conventional notation (first element is #1).
  json - stable schema at full precision with a top-level schema_version;
         parse_report inverts render_report exactly.
"""

from __future__ import annotations

import csv
import io
import json
import re
from dataclasses import dataclass

import numpy as np

from .analysis import MethodComparison, RankingReport, Verdict
from .core import ComparisonMatrix, ElementLabels, validate_matrix
from .errors import ParseError
from .gmm import Method, PriorityEstimate

SCHEMA_VERSION = 1

_FRACTION_RE = re.compile(r"^\s*([0-9]+)\s*/\s*([0-9]+)\s*$")


@dataclass(frozen=True)
class MatrixDocument:
    """A parsed matrix with optional labels and its provenance."""

    matrix: ComparisonMatrix
    labels: ElementLabels | None = None
    source: str = "inline"


def parse_cell(cell: str | float) -> float:
    """One matrix cell: a number, a decimal string, or a fraction "p/q"."""
    if isinstance(cell, (int, float)) and not isinstance(cell, bool):
        return float(cell)
    text = str(cell).strip()
    m = _FRACTION_RE.match(text)
    if m:
        p, q = int(m.group(1)), int(m.group(2))
        if p == 0 or q == 0:
            raise ValueError(f"fraction {text!r} must have positive numerator and denominator")
        return p / q
    return float(text)


def _parse_csv(text: str, source: str) -> MatrixDocument:
    rows: list[tuple[int, list[str]]] = []
    for lineno, row in enumerate(csv.reader(io.StringIO(text)), start=1):
        if not row or all(not c.strip() for c in row):
            continue
        rows.append((lineno, [c.strip() for c in row]))
    if not rows:
        raise ParseError("empty document")

    labels: ElementLabels | None = None
    first = rows[0][1]
    try:
        for c in first:
            parse_cell(c)
    except ValueError:
        labels = ElementLabels(tuple(first))
        rows = rows[1:]
        if not rows:
            raise ParseError("header row present but no matrix rows follow")

    n_cols = len(rows[0][1])
    grid: list[list[float]] = []
    for lineno, row in rows:
        if len(row) != n_cols:
            raise ParseError(f"expected {n_cols} cells, found {len(row)}", line=lineno)
        parsed = []
        for col, cell in enumerate(row, start=1):
            try:
                parsed.append(parse_cell(cell))
            except ValueError:
                raise ParseError(f"cannot parse cell {cell!r}", line=lineno, col=col) from None
        grid.append(parsed)
    if len(grid) != n_cols:
        raise ParseError(f"matrix has {len(grid)} rows but {n_cols} columns")
    if labels is not None and len(labels) != n_cols:
        raise ParseError(f"{len(labels)} labels for {n_cols} columns")
    return MatrixDocument(matrix=validate_matrix(grid), labels=labels, source=source)


def _parse_json(text: str, source: str) -> MatrixDocument:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno, col=exc.colno) from None
    if not isinstance(doc, dict) or "matrix" not in doc:
        raise ParseError('expected a JSON object with a "matrix" key')
    raw = doc["matrix"]
    if not isinstance(raw, list) or not all(isinstance(r, list) for r in raw):
        raise ParseError('"matrix" must be an array of arrays')
    grid = []
    for i, row in enumerate(raw):
        parsed = []
        for k, cell in enumerate(row):
            try:
                parsed.append(parse_cell(cell))
            except (ValueError, TypeError):
                raise ParseError(f"cannot parse matrix[{i}][{k}] = {cell!r}") from None
        grid.append(parsed)
    labels = None
    if doc.get("elements") is not None:
        elems = doc["elements"]
        if not isinstance(elems, list):
            raise ParseError('"elements" must be an array of strings')
        labels = ElementLabels(tuple(str(e) for e in elems))
        if len(labels) != len(grid):
            raise ParseError(f"{len(labels)} elements for {len(grid)} matrix rows")
    return MatrixDocument(matrix=validate_matrix(grid), labels=labels, source=source)


def parse_matrix_document(text: str, format: str = "csv", source: str = "inline") -> MatrixDocument:
    fmt = str(format).lower()
    if fmt == "csv":
        return _parse_csv(text, source)
    if fmt == "json":
        return _parse_json(text, source)
    raise ParseError(f"unknown format {format!r} (expected csv or json)")


# --- rendering ---------------------------------------------------------------

def _sym(i: int) -> str:
    return f"ω_{i + 1}"


def _value_pm(omega: float, domega: float) -> str:
    return f"{omega:.3f} ± {domega:.3f}"


def _estimate_rows(e: PriorityEstimate) -> list[str]:
    width = max(len(_sym(i)) for i in range(e.n))
    return [
        f"{_sym(i):<{width}}  {_value_pm(e.omega[i], e.domega[i])}"
        for i in range(e.n)
    ]


def _estimate_text(e: PriorityEstimate) -> str:
    head = f"method: {e.method.value}  ({'normalized' if e.normalized else 'unnormalized'}, c={e.c:g}, lambda={e.lam:.6g})"
    return "\n".join([head, *_estimate_rows(e)])


def _pair_text(p: tuple[int, int]) -> str:
    return f"({p[0] + 1}, {p[1] + 1})"


def _ranking_text(r: RankingReport) -> str:
    lines = [
        "order: " + " > ".join(_sym(i) for i in r.order),
        f"pair verdicts (sigma={r.sigma:g}):",
    ]
    for (i, k), v in sorted(r.pair_verdicts.items()):
        lines.append(f"  {_sym(i)} vs {_sym(k)}: {v.value}")
    if r.warnings:
        for p in r.warnings:
            lines.append(f"warning: mean-only ranking of {_pair_text(p)} is not supported by the error intervals")
    else:
        lines.append("all pairwise rankings supported by the error intervals")
    return "\n".join(lines)


def _comparison_text(c: MethodComparison) -> str:
    width = max(len(_sym(i)) for i in range(c.gmm.n))
    col = max(len(_value_pm(c.gmm.omega[i], c.gmm.domega[i])) for i in range(c.gmm.n))
    lines = [f"{'':<{width}}  {'GMM':<{col}}  EM"]
    for i in range(c.gmm.n):
        lines.append(
            f"{_sym(i):<{width}}  {_value_pm(c.gmm.omega[i], c.gmm.domega[i]):<{col}}"
            f"  {_value_pm(c.em.omega[i], c.em.domega[i])}"
        )
    if c.mean_rank_reversal_pairs:
        for p in c.mean_rank_reversal_pairs:
            state = "resolved" if c.resolved else "unresolved"
            lines.append(f"rank reversal pair: {_pair_text(p)} - {state}")
    else:
        lines.append("no mean rank reversal pairs")
    agree = all(c.element_overlap)
    lines.append(
        "method agreement: intervals overlap for all elements" if agree else
        "method agreement: intervals disjoint for elements "
        + ", ".join(_sym(i) for i, ok in enumerate(c.element_overlap) if not ok)
    )
    return "\n".join(lines)


def estimate_to_dict(e: PriorityEstimate) -> dict:
    return {
        "kind": "estimate",
        "method": e.method.value,
        "c": e.c,
        "lam": e.lam,
        "normalized": e.normalized,
        "omega_star": e.omega_star.tolist(),
        "delta": e.delta.tolist(),
        "omega": e.omega.tolist(),
        "domega": e.domega.tolist(),
    }


def ranking_to_dict(r: RankingReport) -> dict:
    return {
        "kind": "ranking",
        "sigma": r.sigma,
        "order": list(r.order),
        "verdicts": [
            {"i": i, "k": k, "verdict": v.value}
            for (i, k), v in sorted(r.pair_verdicts.items())
        ],
        "warnings": [list(p) for p in r.warnings],
    }


def comparison_to_dict(c: MethodComparison) -> dict:
    return {
        "kind": "comparison",
        "gmm": estimate_to_dict(c.gmm),
        "em": estimate_to_dict(c.em),
        "element_overlap": list(c.element_overlap),
        "mean_rank_reversal_pairs": [list(p) for p in c.mean_rank_reversal_pairs],
        "resolved": c.resolved,
    }


def result_to_dict(result: PriorityEstimate | RankingReport | MethodComparison) -> dict:
    if isinstance(result, PriorityEstimate):
        body = estimate_to_dict(result)
    elif isinstance(result, RankingReport):
        body = ranking_to_dict(result)
    elif isinstance(result, MethodComparison):
        body = comparison_to_dict(result)
    else:
        raise TypeError(f"cannot serialize {type(result).__name__}")
    return {"schema_version": SCHEMA_VERSION, **body}


def render_report(result: PriorityEstimate | RankingReport | MethodComparison,
                  format: str = "text") -> str:
    fmt = str(format).lower()
    if fmt == "json":
        return json.dumps(result_to_dict(result), indent=2)
    if fmt != "text":
        raise ParseError(f"unknown format {format!r} (expected text or json)")
    if isinstance(result, PriorityEstimate):
        return _estimate_text(result)
    if isinstance(result, RankingReport):
        return _ranking_text(result)
    if isinstance(result, MethodComparison):
        return _comparison_text(result)
    raise TypeError(f"cannot render {type(result).__name__}")


def estimate_from_dict(d: dict) -> PriorityEstimate:
    return PriorityEstimate(
        method=Method(d["method"]),
        c=d["c"],
        lam=d["lam"],
        omega_star=np.array(d["omega_star"]),
        delta=np.array(d["delta"]),
        omega=np.array(d["omega"]),
        domega=np.array(d["domega"]),
        normalized=d["normalized"],
    )


def parse_report(text: str) -> PriorityEstimate | RankingReport | MethodComparison:
    """Inverse of render_report(..., format="json")."""
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno, col=exc.colno) from None
    if not isinstance(d, dict) or "kind" not in d:
        raise ParseError('expected a report object with a "kind" key')
    kind = d["kind"]
    if kind == "estimate":
        return estimate_from_dict(d)
    if kind == "ranking":
        return RankingReport(
            order=tuple(d["order"]),
            pair_verdicts={(v["i"], v["k"]): Verdict(v["verdict"]) for v in d["verdicts"]},
            warnings=tuple(tuple(p) for p in d["warnings"]),
            sigma=d["sigma"],
        )
    if kind == "comparison":
        return MethodComparison(
            gmm=estimate_from_dict(d["gmm"]),
            em=estimate_from_dict(d["em"]),
            element_overlap=tuple(d["element_overlap"]),
            mean_rank_reversal_pairs=tuple(tuple(p) for p in d["mean_rank_reversal_pairs"]),
            resolved=d["resolved"],
        )
    raise ParseError(f"unknown report kind {kind!r}")


def matrix_to_json(matrix: ComparisonMatrix, labels: ElementLabels | None = None) -> str:
    doc: dict = {"matrix": matrix.to_grid()}
    if labels is not None:
        doc["elements"] = list(labels.labels)
    return json.dumps(doc, indent=2)
