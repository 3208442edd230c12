"""Measurement grids and their bijection with positive matrices.

A measurement set is an n x n grid: row i holds n independent measurements
of element i on a common scale. Summarizing a row arithmetically gives
mean +/- standard deviation; summarizing it geometrically gives the log
mean and deviation, mapped back to normal scale with cosh/sinh.

For any such grid and any scale constant c there is exactly one positive
matrix whose entries are the measurements expressed relative to the other
rows' geometric means, and vice versa. These two constructions are exact
inverses, which makes them a strong self-test: a matrix's implied
measurements reproduce the matrix, and the grid's direct log deviations
equal the matrix-route error exponents.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .core import ComparisonMatrix, _readonly, validate_matrix
from .errors import NonPositiveEntry, NonSquare, TooFewSamples, TooSmall
from .gmm import matrix_lambda, row_geometric_means


@dataclass(frozen=True)
class MeasurementSet:
    """n x n grid of strictly positive samples; samples[i][k] is the k-th
    measurement of element i."""

    samples: np.ndarray

    def __post_init__(self) -> None:
        arr = np.array(self.samples, dtype=float)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise NonSquare(arr.shape[0] if arr.ndim >= 1 else 0,
                            arr.shape[1] if arr.ndim == 2 else "ragged/none")
        if arr.shape[0] < 2:
            raise TooSmall(arr.shape[0])
        bad = ~(np.isfinite(arr) & (arr > 0))
        if bad.any():
            i, k = np.argwhere(bad)[0]
            raise NonPositiveEntry(int(i), int(k), float(arr[i, k]))
        object.__setattr__(self, "samples", _readonly(arr))

    @property
    def n(self) -> int:
        return self.samples.shape[0]


class SummaryKind(str, enum.Enum):
    ARITHMETIC = "arithmetic"
    GEOMETRIC = "geometric"


@dataclass(frozen=True)
class SampleSummary:
    mean: float
    error: float
    kind: SummaryKind


def _positive_samples(samples) -> np.ndarray:
    arr = np.asarray(samples, dtype=float)
    if arr.ndim != 1 or len(arr) < 2:
        raise TooFewSamples(int(arr.size) if arr.ndim <= 1 else 0)
    bad = ~(np.isfinite(arr) & (arr > 0))
    if bad.any():
        k = int(np.flatnonzero(bad)[0])
        raise NonPositiveEntry(0, k, float(arr[k]))
    return arr


def arithmetic_summary(samples) -> SampleSummary:
    """Plain mean and standard deviation (1/(n-1) convention)."""
    arr = _positive_samples(samples)
    mean = float(arr.mean())
    error = float(np.sqrt(((arr - mean) ** 2).sum() / (len(arr) - 1)))
    return SampleSummary(mean=mean, error=error, kind=SummaryKind.ARITHMETIC)


def geometric_summary(samples) -> SampleSummary:
    """Log-scale mean and deviation, mapped back to normal scale.

    With g the geometric mean and d the standard deviation of the log
    samples, the normal-scale summary is g*cosh(d) +/- g*sinh(d), so
    mean^2 - error^2 = g^2.
    """
    arr = _positive_samples(samples)
    logs = np.log(arr)
    g = float(np.exp(logs.mean()))
    d = float(np.sqrt(((logs - logs.mean()) ** 2).sum() / (len(arr) - 1)))
    return SampleSummary(mean=g * np.cosh(d), error=g * np.sinh(d), kind=SummaryKind.GEOMETRIC)


def matrix_from_measurements(m: MeasurementSet, c: float = 1.0) -> tuple[ComparisonMatrix, float]:
    """The unique positive matrix whose implied measurements are ``m`` at scale ``c``.

    With w_k the row geometric means and lam = (1/c) * (prod_k w_k)^(1/n):

        a_ik = lam * samples[i][k] / w_k

    Returns the matrix together with lam, which also equals the n^2-th
    root of the product of all its entries.
    """
    if not (np.isfinite(c) and c > 0):
        raise NonPositiveEntry(0, 0, c)
    logs = np.log(m.samples)
    logw = logs.mean(axis=1)
    lam = float(np.exp(logw.mean()) / c)
    a = validate_matrix(lam * m.samples / np.exp(logw)[None, :])
    return a, lam


def measurements_from_matrix(a: ComparisonMatrix, c: float = 1.0) -> MeasurementSet:
    """Inverse construction: the unique grid whose matrix at scale ``c`` is ``a``.

        samples[i][k] = (c / lam) * a_ik * (prod_r a_kr)^(1/n)

    Row geometric means of the result are c times the matrix's row
    geometric means, i.e. row_geometric_means(a, c).
    """
    if not (np.isfinite(c) and c > 0):
        raise NonPositiveEntry(0, 0, c)
    lam = matrix_lambda(a)
    row_gm = row_geometric_means(a, 1.0)
    return MeasurementSet(samples=(c / lam) * a.entries * row_gm[None, :])
