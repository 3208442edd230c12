"""Eigenvector-method priorities and their error bars.

The principal right eigenvector of a positive matrix is simple and
dominant, so plain power iteration converges; no general eigensolver is
needed. Errors come from reading the matrix as n samples of each element:

    sample_i^(k) = (n / lambda_max) * a_ik * omega_k

whose arithmetic mean over k is exactly omega_i (that is the eigenvalue
equation), and whose standard deviation is the error bar domega_i. Used to
cross-validate the geometric-mean estimates.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import ComparisonMatrix, _readonly
from .errors import NoConvergence
from .gmm import Method, PriorityEstimate

DEFAULT_TOL = 1e-12
DEFAULT_MAX_ITER = 10_000


@dataclass(frozen=True)
class EigenResult:
    """Principal eigenpair: eigenvalue, sum-1 eigenvector, and convergence info."""

    lambda_max: float
    vector: np.ndarray
    iterations: int
    residual: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "vector", _readonly(self.vector))


def principal_eigen(
    a: ComparisonMatrix,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> EigenResult:
    """Power iteration with sum-normalization from a uniform start vector.

    Converged when successive vectors differ by less than ``tol`` in max
    norm; lambda_max is then estimated as sum(A v) / sum(v).
    """
    e = a.entries
    v = np.full(a.n, 1.0 / a.n)
    for it in range(1, max_iter + 1):
        av = e @ v
        v_next = av / av.sum()
        if np.max(np.abs(v_next - v)) < tol:
            v = v_next
            break
        v = v_next
    else:
        raise NoConvergence(max_iter, tol)
    av = e @ v
    lambda_max = float(av.sum() / v.sum())
    residual = float(np.max(np.abs(av - lambda_max * v)))
    return EigenResult(lambda_max=lambda_max, vector=v, iterations=it, residual=residual)


def em_errors(a: ComparisonMatrix, r: EigenResult) -> np.ndarray:
    """Standard deviation of the per-element samples implied by the eigenpair."""
    n = a.n
    samples = (n / r.lambda_max) * a.entries * r.vector[None, :]
    means = samples.mean(axis=1)
    return np.sqrt(((samples - means[:, None]) ** 2).sum(axis=1) / (n - 1))


def em_estimate(
    a: ComparisonMatrix,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> PriorityEstimate:
    """Eigenvector estimate, already normalized (eigenvector scale is arbitrary).

    The eigenvector path has no log-scale exponent, so delta is zero and
    omega_star equals omega.
    """
    r = principal_eigen(a, tol=tol, max_iter=max_iter)
    errors = em_errors(a, r)
    return PriorityEstimate(
        method=Method.EM,
        c=1.0,
        lam=r.lambda_max,
        omega_star=r.vector,
        delta=np.zeros(a.n),
        omega=r.vector,
        domega=errors,
        normalized=True,
    )
