from fractions import Fraction
from math import comb

import pytest

from gctholes.errors import GuardError, IntegralityError
from gctholes.partitions import (
    add_to_first_row,
    enumerate_partitions,
    gl_dimension,
    is_hook,
    lambda_of_lemma,
    pad_columns,
)
from gctholes.plethysm import (
    PowerSumVector,
    SchurExpansion,
    brute_force_mult,
    h_in_p,
    h_plethysm_h,
    mult_sym_sym,
    schur_expansion,
    schur_mult,
)


def test_h_in_p_examples():
    assert h_in_p(1).coeffs == {(1,): 1}
    assert h_in_p(2).coeffs == {(2,): Fraction(1, 2), (1, 1): Fraction(1, 2)}
    assert h_in_p(3).coeffs == {(3,): Fraction(1, 3), (2, 1): Fraction(1, 2), (1, 1, 1): Fraction(1, 6)}


@pytest.mark.parametrize("n", range(1, 7))
def test_trivial_plethysms(n):
    assert h_plethysm_h(1, n).coeffs == h_in_p(n).coeffs
    assert h_plethysm_h(n, 1).coeffs == h_in_p(n).coeffs


@pytest.mark.parametrize("d,n", [(2, 2), (3, 2), (2, 3), (4, 3), (3, 4), (5, 2)])
@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_principal_specialization_gives_dimension(d, n, m):
    # p_mu evaluated at m ones is m ** len(mu)
    f = h_plethysm_h(d, n)
    value = sum(c * m ** len(mu) for mu, c in f.coeffs.items())
    assert value == comb(comb(n + m - 1, m - 1) + d - 1, d)


def test_power_sum_vector_rejects_wrong_degree():
    with pytest.raises(ValueError):
        PowerSumVector(3, {(2,): 1})


def test_schur_expansion_rejects_zero():
    with pytest.raises(ValueError):
        SchurExpansion(2, {(2,): 0})


def test_schur_mult_examples():
    f = h_plethysm_h(2, 2)
    assert schur_mult((4,), f) == 1
    assert schur_mult((2, 2), f) == 1
    assert schur_mult((3, 1), f) == 0
    assert schur_mult((2, 1, 1), f) == 0
    assert schur_expansion(2, 2).mults == {(4,): 1, (2, 2): 1}


def test_schur_mult_size_mismatch():
    with pytest.raises(ValueError):
        schur_mult((3,), h_plethysm_h(2, 2))


def test_non_integral_coefficient_aborts():
    with pytest.raises(IntegralityError):
        schur_mult((2,), PowerSumVector(2, {(2,): Fraction(1, 2)}))


def test_paper_plethysm_facts():
    assert mult_sym_sym((6, 3), 3, 3) > 0
    assert mult_sym_sym((3, 3), 2, 3) == 0
    assert mult_sym_sym((4, 4, 4), 4, 3) > 0
    assert mult_sym_sym((7, 3, 2), 4, 3) > 0
    for n in range(3, 7):
        assert mult_sym_sym((2 * n - 2, 2), n, 2) > 0


def test_mult_size_mismatch():
    with pytest.raises(ValueError):
        mult_sym_sym((3, 1), 2, 3)


def test_brute_force_examples():
    assert brute_force_mult((2, 2), 2, 2) == 1
    for n in range(1, 9):
        assert brute_force_mult((n,), n, 1) == 1
    assert brute_force_mult((7, 3, 2), 4, 3) == mult_sym_sym((7, 3, 2), 4, 3)
    assert brute_force_mult((), 0, 3) == 1


def test_brute_force_guard():
    with pytest.raises(GuardError):
        brute_force_mult((17,), 17, 1)
    with pytest.raises(GuardError):
        brute_force_mult((1, 1, 1, 1, 1), 5, 1)
    with pytest.raises(ValueError):
        brute_force_mult((3,), 2, 2)


FACTORIZATIONS = [(d, n) for d in range(1, 10) for n in range(1, 10) if d * n <= 9]


@pytest.mark.parametrize("d,n", FACTORIZATIONS)
def test_oracle_equivalence_small(d, n):
    for lam in enumerate_partitions(d * n, 4):
        assert mult_sym_sym(lam, d, n) == brute_force_mult(lam, d, n), lam


@pytest.mark.parametrize("m", [2, 3])
@pytest.mark.parametrize("d,n", [(d, n) for d in range(1, 13) for n in range(1, 13) if d * n <= 12])
def test_dimension_sum(m, d, n):
    total = sum(mult_sym_sym(lam, d, n) * gl_dimension(lam, m) for lam in enumerate_partitions(d * n, m))
    assert total == comb(comb(n + m - 1, m - 1) + d - 1, d)


def test_hook_exclusion_small():
    for d in range(1, 8):
        for n in range(2, 8):
            if d * n > 12:
                continue
            for lam in enumerate_partitions(d * n):
                if is_hook(lam) and len(lam) >= 2:
                    assert mult_sym_sym(lam, d, n) == 0, (lam, d, n)


def test_row_adding():
    for n in range(1, 13):
        for k in range(1, 13):
            if n * k > 12:
                continue
            for lam in enumerate_partitions(n * k):
                if mult_sym_sym(lam, n, k):
                    for extra in (1, 2):
                        assert mult_sym_sym(add_to_first_row(lam, extra * k), extra + n, k) > 0


@pytest.mark.parametrize("n", [2, 3])
def test_column_cut_equality(n):
    for k in range(1, 10 // n + 1):
        for lam in enumerate_partitions(n * k, n):
            assert mult_sym_sym(lam, n, k) == mult_sym_sym(pad_columns(lam, n, 2), n, k + 2)


def test_lemma_partition_occurs():
    for n in range(2, 6):
        for k in range(2, n + 1):
            assert mult_sym_sym(lambda_of_lemma(n, k), n, k) > 0


@pytest.mark.parametrize("n", [2, 3])
@pytest.mark.parametrize("k", [1, 2, 3])
def test_doubled_partitions_occur(n, k):
    for lam in enumerate_partitions(n * k, n):
        assert mult_sym_sym(tuple(2 * p for p in lam), n, 2 * k) > 0
