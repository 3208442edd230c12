"""Geometric-mean priorities with per-element error bars.

The matrix is read as n independent log-scale measurements of each element:
entry a_ik, rescaled by the matrix constant lambda and the other row means,
is the k-th implied measurement of element i. The row geometric mean is the
log-scale average, and the standard deviation of the logs is the error
exponent Delta_i. Converting mean +/- deviation back from log scale gives

    omega_i  = omega_star_i * cosh(Delta_i)      (mean priority)
    domega_i = omega_star_i * sinh(Delta_i)      (priority error)

so omega_i^2 - domega_i^2 = omega_star_i^2 exactly. For a transitive matrix
every Delta_i is zero and the row geometric means are exact.

All products are computed as exp-of-mean-of-logs; entry magnitudes that
would overflow a plain product are safe.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace

import numpy as np

from .core import ComparisonMatrix, _readonly
from .errors import ValidationError


class Method(str, enum.Enum):
    GMM = "gmm"
    EM = "em"
    GMM_TRANSPOSED = "gmm_transposed"


@dataclass(frozen=True)
class PriorityEstimate:
    """Per-element priorities with error bars, plus how they were derived.

    Fields per element i:
      omega_star: plain (geometric-mean or eigenvector) value
      delta:      log-scale error exponent, >= 0
      omega:      mean priority
      domega:     priority error

    ``c`` is the free scale constant of the derivation and ``lam`` the
    matrix constant (the principal eigenvalue for the eigenvector method).
    ``normalized`` is set once priorities have been scaled to sum 1.
    """

    method: Method
    c: float
    lam: float
    omega_star: np.ndarray
    delta: np.ndarray
    omega: np.ndarray
    domega: np.ndarray
    normalized: bool = False

    def __post_init__(self) -> None:
        for name in ("omega_star", "delta", "omega", "domega"):
            object.__setattr__(self, name, _readonly(getattr(self, name)))
        n = len(self.omega)
        if not all(len(getattr(self, f)) == n for f in ("omega_star", "delta", "domega")):
            raise ValidationError("estimate arrays must have equal length")
        if np.any(self.omega_star <= 0):
            raise ValidationError("omega_star must be strictly positive")
        if np.any(self.delta < 0) or np.any(self.domega < 0):
            raise ValidationError("delta and domega must be non-negative")

    @property
    def n(self) -> int:
        return len(self.omega)

    def intervals(self, sigma: float = 1.0) -> np.ndarray:
        """(n, 2) array of [omega - sigma*domega, omega + sigma*domega]."""
        half = sigma * self.domega
        return np.stack([self.omega - half, self.omega + half], axis=1)


def row_geometric_means(a: ComparisonMatrix, c: float = 1.0) -> np.ndarray:
    """omega_star_i = c * (prod_k a_ik)^(1/n), the classic geometric-mean priorities."""
    return c * np.exp(np.log(a.entries).mean(axis=1))


def matrix_lambda(a: ComparisonMatrix) -> float:
    """n^2-th root of the product of all entries; identically 1 for reciprocal matrices."""
    return float(np.exp(np.log(a.entries).mean()))


def gmm_error_exponents(a: ComparisonMatrix, c: float = 1.0) -> np.ndarray:
    """Error exponents Delta_i = sqrt( 1/(n-1) * sum_k ln^2( a_ik * w_k / (lam * w_i) ) ).

    The sum runs over all k including k = i (that term is ln^2(1/lam),
    zero for reciprocal matrices). Independent of c, which cancels in the
    ratio w_k / w_i.
    """
    n = a.n
    w = row_geometric_means(a, c)
    logw = np.log(w)
    logs = np.log(a.entries) - np.log(matrix_lambda(a)) + logw[None, :] - logw[:, None]
    return np.sqrt((logs**2).sum(axis=1) / (n - 1))


def gmm_estimate(a: ComparisonMatrix, c: float = 1.0) -> PriorityEstimate:
    """Full geometric-mean estimate: means, error exponents, hyperbolic error bars.

    cosh/sinh can overflow for absurdly inconsistent input; the resulting
    inf flows through unclamped and is surfaced by downstream consumers
    (transposed_estimate reports it as a degenerate interval).
    """
    w = row_geometric_means(a, c)
    delta = gmm_error_exponents(a, c)
    with np.errstate(over="ignore"):
        omega = w * np.cosh(delta)
        domega = w * np.sinh(delta)
    return PriorityEstimate(
        method=Method.GMM,
        c=c,
        lam=matrix_lambda(a),
        omega_star=w,
        delta=delta,
        omega=omega,
        domega=domega,
        normalized=False,
    )


def normalize(e: PriorityEstimate) -> PriorityEstimate:
    """Scale an estimate so the mean priorities sum to 1.

    Means, errors, and plain values are divided by the same factor, so the
    hyperbolic relation between them is preserved; the dimensionless
    exponents are untouched. Idempotent.
    """
    if e.normalized:
        return e
    s = float(e.omega.sum())
    return replace(
        e,
        omega_star=e.omega_star / s,
        omega=e.omega / s,
        domega=e.domega / s,
        normalized=True,
    )
