"""Ranking verdicts, method comparison, transposed variant, consistency index."""

import dataclasses
import math

import numpy as np
import pytest

from pairrank import (
    DegenerateInterval,
    Method,
    NotApplicable,
    Verdict,
    compare_estimates,
    compare_methods,
    consistent_matrix_from_values,
    em_estimate,
    gci,
    gmm_estimate,
    normalize,
    pair_verdict,
    rank,
    transposed_estimate,
    validate_matrix,
)

from .conftest import random_reciprocal


def _estimate_with(omega, domega):
    base = gmm_estimate(validate_matrix(np.ones((len(omega), len(omega)))))
    return dataclasses.replace(
        base, omega=np.asarray(omega, dtype=float), domega=np.asarray(domega, dtype=float)
    )


class TestPairVerdict:
    def test_disjoint_above(self):
        e = _estimate_with([3.0, 1.0], [0.9, 0.9])
        assert pair_verdict(e, 0, 1) is Verdict.RELIABLE_GT
        assert pair_verdict(e, 1, 0) is Verdict.RELIABLE_LT

    def test_touching_intervals_are_indistinguishable(self):
        e = _estimate_with([3.0, 1.0], [1.0, 1.0])
        assert pair_verdict(e, 0, 1) is Verdict.INDISTINGUISHABLE

    def test_sigma_widens_intervals(self):
        e = _estimate_with([3.0, 1.0], [0.8, 0.8])
        assert pair_verdict(e, 0, 1, sigma=1.0) is Verdict.RELIABLE_GT
        assert pair_verdict(e, 0, 1, sigma=2.0) is Verdict.INDISTINGUISHABLE

    def test_exact_tie(self):
        e = _estimate_with([1.0, 1.0], [0.0, 0.0])
        assert pair_verdict(e, 0, 1) is Verdict.INDISTINGUISHABLE

    def test_antisymmetry(self, rng):
        for _ in range(40):
            n = int(rng.integers(2, 7))
            e = _estimate_with(rng.uniform(0.5, 3.0, n), rng.uniform(0.0, 1.0, n))
            for i in range(n):
                for k in range(n):
                    if i == k:
                        continue
                    a = pair_verdict(e, i, k)
                    b = pair_verdict(e, k, i)
                    if a is Verdict.RELIABLE_GT:
                        assert b is Verdict.RELIABLE_LT
                    elif a is Verdict.RELIABLE_LT:
                        assert b is Verdict.RELIABLE_GT
                    else:
                        assert b is Verdict.INDISTINGUISHABLE

    def test_shrinking_errors_never_loses_reliability(self, rng):
        for _ in range(40):
            n = int(rng.integers(2, 6))
            omega = rng.uniform(0.5, 3.0, n)
            domega = rng.uniform(0.0, 1.0, n)
            wide = _estimate_with(omega, domega)
            narrow = _estimate_with(omega, domega * 0.5)
            for i in range(n - 1):
                v = pair_verdict(wide, i, i + 1)
                if v is not Verdict.INDISTINGUISHABLE:
                    assert pair_verdict(narrow, i, i + 1) is v


class TestRank:
    def test_saaty_vargas_gmm(self, saaty_vargas):
        report = rank(normalize(gmm_estimate(saaty_vargas)))
        assert report.order == (3, 1, 2, 0, 4)
        assert report.pair_verdicts[(1, 3)] is Verdict.INDISTINGUISHABLE
        assert report.pair_verdicts[(0, 4)] is Verdict.INDISTINGUISHABLE
        assert report.pair_verdicts[(2, 3)] is Verdict.RELIABLE_LT
        assert report.pair_verdicts[(0, 1)] is Verdict.RELIABLE_LT
        assert set(report.warnings) == {(0, 4), (1, 3)}

    def test_saaty_vargas_em(self, saaty_vargas):
        report = rank(em_estimate(saaty_vargas))
        assert report.order == (3, 1, 2, 0, 4)
        indistinct = {p for p, v in report.pair_verdicts.items() if v is Verdict.INDISTINGUISHABLE}
        assert indistinct == {(0, 4), (1, 3), (2, 3)}

    def test_zero_error_strict_order(self):
        e = _estimate_with([3.0, 2.0, 1.0], [0.0, 0.0, 0.0])
        report = rank(e)
        assert report.order == (0, 1, 2)
        assert all(v is not Verdict.INDISTINGUISHABLE for v in report.pair_verdicts.values())
        assert report.warnings == ()

    def test_exact_ties_do_not_warn(self):
        e = _estimate_with([1.0, 1.0], [0.0, 0.0])
        report = rank(e)
        assert report.pair_verdicts[(0, 1)] is Verdict.INDISTINGUISHABLE
        assert report.warnings == ()

    def test_all_pairs_present(self, saaty_vargas):
        report = rank(normalize(gmm_estimate(saaty_vargas)))
        assert set(report.pair_verdicts) == {(i, k) for i in range(5) for k in range(i + 1, 5)}

    def test_sigma_recorded(self, saaty_vargas):
        report = rank(normalize(gmm_estimate(saaty_vargas)), sigma=2.0)
        assert report.sigma == 2.0


class TestCompareMethods:
    def test_saaty_vargas_single_resolved_reversal(self, saaty_vargas):
        cmp = compare_methods(saaty_vargas)
        assert cmp.mean_rank_reversal_pairs == ((1, 3),)
        assert cmp.resolved is True
        assert all(cmp.element_overlap)
        assert cmp.gmm.method is Method.GMM
        assert cmp.em.method is Method.EM

    def test_reversal_detected_on_raw_means(self, saaty_vargas):
        # raw geometric means put element 2 above element 4; the
        # eigenvector orders them the other way round
        cmp = compare_methods(saaty_vargas)
        g, e = cmp.gmm, cmp.em
        assert g.omega_star[1] > g.omega_star[3]
        assert e.omega_star[1] < e.omega_star[3]

    def test_consistent_matrix_no_reversals(self):
        m = consistent_matrix_from_values((1.0, 2.0, 4.0))
        cmp = compare_methods(m)
        assert cmp.mean_rank_reversal_pairs == ()
        assert cmp.resolved is True
        assert all(cmp.element_overlap)

    def test_all_ones(self):
        cmp = compare_methods(validate_matrix(np.ones((3, 3))))
        assert cmp.mean_rank_reversal_pairs == ()
        assert all(cmp.element_overlap)

    def test_random_reciprocal_overlap(self, rng):
        # with one-sigma bands both methods describe the same data; the
        # per-element intervals are expected to intersect
        for _ in range(25):
            m = random_reciprocal(rng, int(rng.integers(3, 7)))
            cmp = compare_methods(m)
            assert all(cmp.element_overlap)

    def test_compare_estimates_requires_same_length(self, saaty_vargas):
        g = normalize(gmm_estimate(saaty_vargas))
        e = em_estimate(consistent_matrix_from_values((1.0, 2.0)))
        with pytest.raises(Exception):
            compare_estimates(g, e)


class TestTransposedEstimate:
    def test_reciprocal_matches_direct(self, saaty_vargas):
        direct = normalize(gmm_estimate(saaty_vargas))
        via_t = normalize(transposed_estimate(saaty_vargas))
        assert via_t.method is Method.GMM_TRANSPOSED
        assert np.allclose(via_t.omega, direct.omega, rtol=0, atol=1e-12)
        assert np.allclose(via_t.domega, direct.domega, rtol=0, atol=1e-12)

    def test_random_reciprocal_matches_direct(self, rng):
        for _ in range(40):
            m = random_reciprocal(rng, int(rng.integers(2, 8)))
            direct = normalize(gmm_estimate(m))
            via_t = normalize(transposed_estimate(m))
            assert np.allclose(via_t.omega, direct.omega, rtol=0, atol=1e-12)
            assert np.allclose(via_t.domega, direct.domega, rtol=0, atol=1e-12)

    def test_consistent_matrix(self):
        est = transposed_estimate(consistent_matrix_from_values((1.0, 2.0, 4.0)))
        assert np.allclose(est.omega, [0.5, 1.0, 2.0], rtol=1e-12, atol=0)
        assert np.all(est.domega < 1e-13)

    def test_degenerate_interval_raises(self):
        # entries at the float range edge push the transposed means past
        # overflow, so the inversion denominator is no longer positive
        grid = [[1e308, 1e-308], [1e-308, 1e308]]
        with np.errstate(over="ignore", invalid="ignore"):
            with pytest.raises(DegenerateInterval):
                transposed_estimate(validate_matrix(grid))


class TestGci:
    def test_saaty_vargas(self, saaty_vargas):
        assert gci(saaty_vargas) == pytest.approx(0.273157866871, abs=1e-10)

    def test_double_loop_oracle(self, saaty_vargas):
        a = saaty_vargas.entries
        n = 5
        w = [math.prod(a[i]) ** (1.0 / n) for i in range(n)]
        acc = sum(
            math.log(a[i, k] * w[k] / w[i]) ** 2 for i in range(n) for k in range(i + 1, n)
        )
        expected = 2.0 * acc / ((n - 1) * (n - 2))
        assert gci(saaty_vargas) == pytest.approx(expected, rel=1e-12)

    def test_consistent_matrix_zero(self):
        assert gci(consistent_matrix_from_values((1.0, 2.0, 4.0))) < 1e-25

    def test_two_elements_not_applicable(self):
        with pytest.raises(NotApplicable):
            gci(validate_matrix([[1.0, 2.0], [0.5, 1.0]]))

    def test_non_reciprocal_not_applicable(self):
        with pytest.raises(NotApplicable):
            gci(validate_matrix([[1.0, 4.0, 1.0], [1.0, 1.0, 1.0], [1.0, 1.0, 1.0]]))

    def test_links_to_error_exponents(self, rng):
        # for reciprocal matrices the pairwise log residuals aggregate the
        # same squares that feed the per-element exponents
        from pairrank import gmm_error_exponents

        for _ in range(40):
            n = int(rng.integers(3, 9))
            m = random_reciprocal(rng, n)
            delta = gmm_error_exponents(m)
            assert gci(m) * (n - 2) == pytest.approx(float((delta ** 2).sum()), rel=1e-10)


class TestPermutationEquivariance:
    def test_estimates_and_ranks_permute(self, rng):
        for _ in range(15):
            n = int(rng.integers(3, 7))
            m = random_reciprocal(rng, n)
            perm = rng.permutation(n)
            permuted = validate_matrix(m.entries[np.ix_(perm, perm)])

            base = normalize(gmm_estimate(m))
            moved = normalize(gmm_estimate(permuted))
            assert np.allclose(moved.omega, base.omega[perm], rtol=1e-12, atol=0)
            assert np.allclose(moved.domega, base.domega[perm], rtol=1e-12, atol=1e-300)

            inv = np.empty(n, dtype=int)
            inv[perm] = np.arange(n)
            base_rank = rank(base)
            moved_rank = rank(moved)
            assert moved_rank.order == tuple(int(inv[o]) for o in base_rank.order)
            for (i, k), v in base_rank.pair_verdicts.items():
                j, l = int(inv[i]), int(inv[k])
                if j < l:
                    assert moved_rank.pair_verdicts[(j, l)] is v
                else:
                    flipped = {
                        Verdict.RELIABLE_GT: Verdict.RELIABLE_LT,
                        Verdict.RELIABLE_LT: Verdict.RELIABLE_GT,
                        Verdict.INDISTINGUISHABLE: Verdict.INDISTINGUISHABLE,
                    }[v]
                    assert moved_rank.pair_verdicts[(l, j)] is flipped

    def test_gci_permutation_invariant(self, rng):
        for _ in range(15):
            n = int(rng.integers(3, 7))
            m = random_reciprocal(rng, n)
            perm = rng.permutation(n)
            permuted = validate_matrix(m.entries[np.ix_(perm, perm)])
            assert gci(permuted) == pytest.approx(gci(m), rel=1e-12)
