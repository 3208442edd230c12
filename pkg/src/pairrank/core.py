"""Comparison-matrix domain types and consistency primitives.

A comparison matrix holds entries a_ik > 0 estimating the ratio of element
i's value to element k's value. Everything downstream (priority derivation,
error bars, ranking) starts from a validated ComparisonMatrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import BadLabels, NonPositiveEntry, NonSquare, TooSmall, ValidationError

# |a_ik * a_ki - 1| tolerance for calling a matrix reciprocal. Exact
# reciprocity is the mathematical ideal; real inputs carry rounding.
RECIPROCITY_TOL = 1e-6


def _readonly(arr: np.ndarray) -> np.ndarray:
    arr = np.array(arr, dtype=float)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class ComparisonMatrix:
    """Validated n x n strictly positive judgment matrix.

    ``reciprocal`` records whether a_ik * a_ki = 1 holds for all pairs
    (within RECIPROCITY_TOL); several downstream identities are exact only
    in that case. Instances are immutable; build them via validate_matrix.
    """

    entries: np.ndarray
    reciprocal: bool

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", _readonly(self.entries))

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    def transpose(self) -> "ComparisonMatrix":
        return validate_matrix(self.entries.T)

    def to_grid(self) -> list[list[float]]:
        return self.entries.tolist()


@dataclass(frozen=True)
class ElementLabels:
    """Ordered display names for the compared elements."""

    labels: tuple[str, ...]

    def __post_init__(self) -> None:
        labels = tuple(str(x) for x in self.labels)
        if any(not x.strip() for x in labels):
            raise BadLabels("labels must be non-empty strings")
        if len(set(labels)) != len(labels):
            raise BadLabels("labels must be unique")
        object.__setattr__(self, "labels", labels)

    def __len__(self) -> int:
        return len(self.labels)

    def __getitem__(self, i: int) -> str:
        return self.labels[i]


def validate_matrix(raw) -> ComparisonMatrix:
    """Validate a square grid of positive reals and compute its reciprocity flag.

    Entries are copied unmodified. Raises NonSquare, TooSmall, or
    NonPositiveEntry (first offender in row-major order) on bad input.
    """
    try:
        arr = np.array(raw, dtype=float)
    except (TypeError, ValueError) as exc:
        raise ValidationError(f"matrix grid must be rectangular and numeric: {exc}") from None
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        rows = arr.shape[0] if arr.ndim >= 1 else 0
        cols = arr.shape[1] if arr.ndim == 2 else "ragged/none"
        raise NonSquare(rows, cols)
    n = arr.shape[0]
    if n < 2:
        raise TooSmall(n)
    bad = ~(np.isfinite(arr) & (arr > 0))
    if bad.any():
        i, k = np.argwhere(bad)[0]
        raise NonPositiveEntry(int(i), int(k), float(arr[i, k]))
    with np.errstate(over="ignore"):
        # products near the float ceiling overflow to inf, which correctly
        # reads as "not reciprocal"
        reciprocal = bool(np.max(np.abs(arr * arr.T - 1.0)) <= RECIPROCITY_TOL)
    return ComparisonMatrix(entries=arr, reciprocal=reciprocal)


def is_transitive(a: ComparisonMatrix, tol: float = 1e-9) -> bool:
    """True iff a_ik * a_kr = a_ir holds for every triple within relative tol.

    Transitive (fully consistent) matrices are exactly the ones whose
    entries factor as const * v_i / v_k; on them all error terms vanish.
    """
    e = a.entries
    triple = e[:, :, None] * e[None, :, :] / e[:, None, :]
    return bool(np.max(np.abs(triple - 1.0)) <= tol)


def consistent_matrix_from_values(values: Sequence[float], c: float = 1.0) -> ComparisonMatrix:
    """Build the perfectly consistent matrix a_ik = c * values_i / values_k.

    Reciprocal iff c == 1. Useful both as ground truth in tests and for
    seeding matrices from known value ratios.
    """
    v = np.asarray(values, dtype=float)
    if not (np.isfinite(c) and c > 0):
        raise NonPositiveEntry(0, 0, c)
    return validate_matrix(c * v[:, None] / v[None, :])
