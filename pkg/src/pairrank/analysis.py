"""Reliability-aware ranking, method cross-validation, and consistency indices.

A mean-only ranking of priorities is trusted only where the error
intervals actually separate: the verdict for a pair is RELIABLE_* when one
interval lies strictly above the other and INDISTINGUISHABLE when they
overlap. Comparing the geometric-mean and eigenvector estimates on the
same matrix shows that pairs the classic methods rank in opposite orders
are exactly the pairs whose intervals overlap.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .core import ComparisonMatrix
from .em import em_estimate
from .errors import DegenerateInterval, NotApplicable
from .gmm import Method, PriorityEstimate, gmm_estimate, normalize, row_geometric_means


class Verdict(str, enum.Enum):
    RELIABLE_GT = "reliable_gt"
    RELIABLE_LT = "reliable_lt"
    INDISTINGUISHABLE = "indistinguishable"


@dataclass(frozen=True)
class RankingReport:
    """Total order by mean priority plus per-pair reliability verdicts.

    ``order`` lists element indices by descending mean (ties by ascending
    index). ``pair_verdicts`` maps each pair (i, k) with i < k to the
    verdict for element i relative to element k. ``warnings`` lists pairs
    whose means differ but whose intervals overlap: their mean-only
    ranking is not supported.
    """

    order: tuple[int, ...]
    pair_verdicts: dict[tuple[int, int], Verdict]
    warnings: tuple[tuple[int, int], ...]
    sigma: float = 1.0


@dataclass(frozen=True)
class MethodComparison:
    """Geometric-mean vs eigenvector results on one matrix.

    ``mean_rank_reversal_pairs`` lists pairs the two classic methods rank
    in opposite orders (plain geometric means vs eigenvector entries).
    ``resolved`` is True when every such pair is INDISTINGUISHABLE under
    both methods' error intervals, i.e. the disagreement lies inside the
    error bars. ``element_overlap[i]`` reports whether the two methods'
    intervals for element i overlap.
    """

    gmm: PriorityEstimate
    em: PriorityEstimate
    element_overlap: tuple[bool, ...]
    mean_rank_reversal_pairs: tuple[tuple[int, int], ...]
    resolved: bool


def pair_verdict(e: PriorityEstimate, i: int, k: int, sigma: float = 1.0) -> Verdict:
    """Verdict for element i relative to element k under sigma-scaled intervals."""
    lo_i, hi_i = e.omega[i] - sigma * e.domega[i], e.omega[i] + sigma * e.domega[i]
    lo_k, hi_k = e.omega[k] - sigma * e.domega[k], e.omega[k] + sigma * e.domega[k]
    if lo_i > hi_k:
        return Verdict.RELIABLE_GT
    if lo_k > hi_i:
        return Verdict.RELIABLE_LT
    return Verdict.INDISTINGUISHABLE


def rank(e: PriorityEstimate, sigma: float = 1.0) -> RankingReport:
    """Order elements by descending mean priority and judge each pair's reliability.

    ``sigma`` widens or narrows the intervals (default 1: plain
    mean +/- error).
    """
    idx = np.arange(e.n)
    order = tuple(int(i) for i in sorted(idx, key=lambda i: (-e.omega[i], i)))
    verdicts: dict[tuple[int, int], Verdict] = {}
    warnings: list[tuple[int, int]] = []
    for i in range(e.n):
        for k in range(i + 1, e.n):
            v = pair_verdict(e, i, k, sigma)
            verdicts[(i, k)] = v
            if v is Verdict.INDISTINGUISHABLE and e.omega[i] != e.omega[k]:
                warnings.append((i, k))
    return RankingReport(order=order, pair_verdicts=verdicts, warnings=tuple(warnings), sigma=sigma)


def compare_estimates(gmm_norm: PriorityEstimate, em_norm: PriorityEstimate,
                      sigma: float = 1.0) -> MethodComparison:
    """Build a MethodComparison from already-computed normalized estimates.

    Reversal detection deliberately compares the classic methods' outputs,
    omega_star on each side (plain geometric means vs eigenvector
    entries): the reversal phenomenon is a disagreement between those, and
    the error-corrected means may already agree.
    """
    g_iv, e_iv = gmm_norm.intervals(sigma), em_norm.intervals(sigma)
    overlap = tuple(
        bool(g_iv[i, 0] <= e_iv[i, 1] and e_iv[i, 0] <= g_iv[i, 1])
        for i in range(gmm_norm.n)
    )
    reversals = []
    for i in range(gmm_norm.n):
        for k in range(i + 1, gmm_norm.n):
            g_diff = gmm_norm.omega_star[i] - gmm_norm.omega_star[k]
            e_diff = em_norm.omega_star[i] - em_norm.omega_star[k]
            if g_diff * e_diff < 0:
                reversals.append((i, k))
    g_rank, e_rank = rank(gmm_norm, sigma), rank(em_norm, sigma)
    resolved = all(
        g_rank.pair_verdicts[p] is Verdict.INDISTINGUISHABLE
        and e_rank.pair_verdicts[p] is Verdict.INDISTINGUISHABLE
        for p in reversals
    )
    return MethodComparison(
        gmm=gmm_norm,
        em=em_norm,
        element_overlap=overlap,
        mean_rank_reversal_pairs=tuple(reversals),
        resolved=resolved,
    )


def compare_methods(a: ComparisonMatrix, sigma: float = 1.0) -> MethodComparison:
    """Run both methods on ``a`` and check whether their disagreements are
    covered by the error bars."""
    return compare_estimates(normalize(gmm_estimate(a)), em_estimate(a), sigma)


def transposed_estimate(a: ComparisonMatrix, c: float = 1.0) -> PriorityEstimate:
    """Geometric-mean estimate via the transposed matrix.

    The transpose measures inverse values: applying the geometric-mean
    machinery to it yields inv_i +/- dinv_i, converted back to normal
    values by

        w_i = inv_i / (inv_i^2 - dinv_i^2),  dw_i = dinv_i / (inv_i^2 - dinv_i^2).

    For reciprocal matrices this reproduces the direct estimate exactly.
    The denominator equals the squared geometric mean and is positive
    unless cosh/sinh overflow; that case is surfaced as DegenerateInterval
    rather than clamped.
    """
    t = gmm_estimate(a.transpose(), c)
    denom = t.omega**2 - t.domega**2
    bad = ~(np.isfinite(denom) & (denom > 0))
    if bad.any():
        raise DegenerateInterval(int(np.flatnonzero(bad)[0]))
    return PriorityEstimate(
        method=Method.GMM_TRANSPOSED,
        c=c,
        lam=t.lam,
        omega_star=t.omega_star / denom,
        delta=t.delta,
        omega=t.omega / denom,
        domega=t.domega / denom,
        normalized=False,
    )


def gci(a: ComparisonMatrix) -> float:
    """Aggregate consistency index: scaled sum of squared log residuals
    ln^2(a_ik * w_k / w_i) over the pairs i < k.

    An aggregate heuristic, not a per-element error: contrast it with the
    per-element error exponents, which it equals only in quadratic mean.
    Defined for reciprocal matrices with n >= 3.
    """
    n = a.n
    if n < 3:
        raise NotApplicable(f"consistency index needs n >= 3, got {n}")
    if not a.reciprocal:
        raise NotApplicable("consistency index is defined for reciprocal matrices only")
    w = row_geometric_means(a, 1.0)
    logw = np.log(w)
    logs = np.log(a.entries) + logw[None, :] - logw[:, None]
    upper = np.triu(logs, k=1)
    return float(2.0 / ((n - 1) * (n - 2)) * (upper**2).sum())
