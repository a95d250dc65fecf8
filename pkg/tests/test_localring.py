"""Radicals, maximal ideals, local-ring taxonomy, adic and fiber probes."""

import numpy as np
import pytest

from weylkit.errors import InvalidFormError
from weylkit.findim import (
    FinDimAlgebra,
    cyclic_group_algebra,
    full_matrix_algebra,
    product_algebra,
    truncated_polynomial_algebra,
    upper_triangular_algebra,
)
from weylkit.linalg_fp import Subspace
from weylkit.localring import (
    adic_comparison,
    classify_local,
    fiber_decomposability,
    idempotent_ideal_check,
    ideals_over,
    jacobson_radical,
    maximal_two_sided_ideals,
    radical_cross_check,
)


def unit_vec(d, i):
    return np.eye(d, dtype=np.int64)[i]


def test_algebra_axioms_checked():
    good = upper_triangular_algebra(2, 2)
    bad = good.table.copy()
    bad[1, 1, 1] ^= 1  # corrupt e12 * e12
    with pytest.raises(InvalidFormError):
        FinDimAlgebra(bad, good.unit, 2)


# -- radical ------------------------------------------------------------------


def test_radical_examples():
    M2 = full_matrix_algebra(2, 2)
    assert jacobson_radical(M2).is_zero()

    T2 = upper_triangular_algebra(2, 2)
    rad = jacobson_radical(T2)
    # basis order e11, e12, e22: rad = span(e12)
    assert rad.dim == 1 and rad.contains(unit_vec(3, 1))
    assert T2.subspace_product(rad, rad).is_zero()

    P2 = truncated_polynomial_algebra(2, 2)
    rad2 = jacobson_radical(P2)
    assert rad2.dim == 1 and rad2.contains(unit_vec(2, 1))


def test_radical_cross_check_small():
    for A in (
        full_matrix_algebra(2, 2),
        upper_triangular_algebra(2, 2),
        truncated_polynomial_algebra(2, 3),
        truncated_polynomial_algebra(3, 2),
        cyclic_group_algebra(2, 2),
    ):
        assert radical_cross_check(A)


def test_radical_nilpotent():
    for A in (
        upper_triangular_algebra(3, 2),
        truncated_polynomial_algebra(2, 4),
        cyclic_group_algebra(2, 4),
    ):
        rad = jacobson_radical(A)
        power = rad
        for _ in range(A.dim):
            power = A.subspace_product(power, rad)
        assert power.is_zero()


# -- maximal two-sided ideals -------------------------------------------------


def test_maximal_ideals_T2():
    T2 = upper_triangular_algebra(2, 2)
    maxima = maximal_two_sided_ideals(T2)
    assert len(maxima) == 2
    # M_k = {a_kk = 0}; basis order e11, e12, e22
    M1 = Subspace([unit_vec(3, 1), unit_vec(3, 2)], 3, 2)  # a_11 = 0
    M2 = Subspace([unit_vec(3, 0), unit_vec(3, 1)], 3, 2)  # a_22 = 0
    assert set(M.key() for M in maxima) == {M1.key(), M2.key()}


def test_maximal_ideals_T3():
    T3 = upper_triangular_algebra(3, 2)
    maxima = maximal_two_sided_ideals(T3)
    assert len(maxima) == 3
    # pairs (r, c) with r <= c in order; M_k kills the (k,k) diagonal slot
    pairs = [(r, c) for r in range(3) for c in range(r, 3)]
    for k in range(3):
        vecs = [unit_vec(6, t) for t, rc in enumerate(pairs) if rc != (k, k)]
        Mk = Subspace(vecs, 6, 2)
        assert any(M == Mk for M in maxima)


def test_maximal_ideals_simple_and_product():
    M2 = full_matrix_algebra(2, 2)
    maxima = maximal_two_sided_ideals(M2)
    assert len(maxima) == 1 and maxima[0].is_zero()
    FF = product_algebra(
        truncated_polynomial_algebra(2, 1), truncated_polynomial_algebra(2, 1)
    )
    assert len(maximal_two_sided_ideals(FF)) == 2


# -- classification -----------------------------------------------------------


def test_classify_examples():
    assert classify_local(truncated_polynomial_algebra(2, 3)) == "quasi"
    assert classify_local(upper_triangular_algebra(2, 2)) == "not_demi"
    assert classify_local(full_matrix_algebra(2, 2)) == "quasi"
    assert classify_local(upper_triangular_algebra(3, 2)) == "not_demi"
    assert classify_local(cyclic_group_algebra(2, 4)) == "quasi"


def test_idempotent_ideal_checks():
    T2 = upper_triangular_algebra(2, 2)
    for M in maximal_two_sided_ideals(T2):
        assert idempotent_ideal_check(M, T2)
    rad = jacobson_radical(T2)
    assert not idempotent_ideal_check(rad, T2)
    assert idempotent_ideal_check(Subspace([], 3, 2), T2)


def test_nak_equivalence_for_quasi_local():
    # for a unique maximal two-sided ideal: m = rad iff every maximal left
    # ideal contains m (both sides computed independently)
    from weylkit.localring import maximal_left_ideals_brute

    for A in (
        truncated_polynomial_algebra(2, 3),
        full_matrix_algebra(2, 2),
        cyclic_group_algebra(2, 2),
    ):
        maxima = maximal_two_sided_ideals(A)
        assert len(maxima) == 1
        m = maxima[0]
        lhs = m == jacobson_radical(A)
        rhs = all(L.contains_space(m) for L in maximal_left_ideals_brute(A))
        assert lhs == rhs


# -- adic comparison ----------------------------------------------------------


def poly4_with_square_subring():
    A = truncated_polynomial_algebra(2, 4)
    R_basis = [unit_vec(4, 0), unit_vec(4, 2)]  # 1, x^2
    mR = Subspace([unit_vec(4, 2)], 4, 2)  # (x^2) inside R
    return A, R_basis, mR


def test_adic_comparison_poly4():
    A, R_basis, mR = poly4_with_square_subring()
    m = maximal_two_sided_ideals(A)[0]
    assert adic_comparison(A, m, R_basis, mR) == 2


def test_adic_comparison_zero_maximal_ideal():
    A = full_matrix_algebra(2, 2)
    m = maximal_two_sided_ideals(A)[0]  # zero ideal
    R_basis = [A.unit]
    mR = Subspace([], A.dim, 2)
    assert adic_comparison(A, m, R_basis, mR) == 1


def test_adic_comparison_idempotent_ideal_never_included():
    # M_1 in T_2 satisfies M_1^2 = M_1 and never enters m_R A = 0
    T2 = upper_triangular_algebra(2, 2)
    M1 = next(
        M for M in maximal_two_sided_ideals(T2) if idempotent_ideal_check(M, T2)
    )
    R_basis = [T2.unit]
    mR = Subspace([], 3, 2)
    assert adic_comparison(T2, M1, R_basis, mR) is None


def test_quasi_implies_adic_success():
    for A, R_basis, mR in (
        poly4_with_square_subring(),
        (truncated_polynomial_algebra(2, 3), [np.eye(3, dtype=np.int64)[0]],
         Subspace([], 3, 2)),
    ):
        if classify_local(A) == "quasi":
            m = maximal_two_sided_ideals(A)[0]
            assert adic_comparison(A, m, R_basis, mR) is not None


# -- fiber decomposability ----------------------------------------------------


def test_fiber_T2_fails_at_2():
    T2 = upper_triangular_algebra(2, 2)
    R_basis = [T2.unit]
    mR = Subspace([], 3, 2)
    assert ideals_over(T2, R_basis, mR) == maximal_two_sided_ideals(T2)
    assert fiber_decomposability(T2, R_basis, mR) == ("fails_at", 2)


def test_fiber_product_decomposable():
    FF = product_algebra(
        truncated_polynomial_algebra(2, 1), truncated_polynomial_algebra(2, 1)
    )
    R_basis = [FF.unit]
    mR = Subspace([], 2, 2)
    assert fiber_decomposability(FF, R_basis, mR) == "decomposable"


def test_fiber_quasi_local_indecomposable():
    A = truncated_polynomial_algebra(2, 3)
    R_basis = [A.unit]
    mR = Subspace([], 3, 2)
    assert fiber_decomposability(A, R_basis, mR) == "indecomposable"
