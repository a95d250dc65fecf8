"""Normal forms, confluence, Hilbert functions, associated graded."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weylkit.errors import (
    FiltrationError,
    MalformedPresentationError,
    UnsupportedError,
)
from weylkit.presentations import (
    NCPoly,
    Presentation,
    WeightFiltration,
    associated_graded,
    check_confluence,
    commutator,
    fuzz_reduction_order,
    hilbert_function,
    multiply,
    normal_form,
)
from weylkit.weylalg import (
    boundary_chart_presentation,
    localized_weyl,
    weyl_presentation,
)


def weyl(p, n=1):
    return weyl_presentation(p, n).presentation


def chart(p, n=2):
    return boundary_chart_presentation(p, n).presentation


def random_poly(P, rng, max_degree=3, max_terms=3):
    terms = {}
    for _ in range(rng.randrange(1, max_terms + 1)):
        m = [0] * P.ngens
        for _ in range(rng.randrange(0, max_degree + 1)):
            m[rng.randrange(P.ngens)] += 1
        terms[tuple(m)] = rng.randrange(P.p)
    return NCPoly(terms, P.p)


# -- normal_form --------------------------------------------------------------


def test_normal_form_single_relation():
    # g2*g1 -> g1*g2 - h12 with h12 = 1
    for p in (2, 3, 5):
        P = weyl(p)
        got = normal_form(((1, 1), (0, 1)), P)
        want = NCPoly({(1, 1): 1, (0, 0): (-1) % p}, p)
        assert got == want


def test_normal_form_already_normal():
    P = weyl(3)
    g1 = P.gen(0)
    assert normal_form(g1, P) == g1


def test_normal_form_chart_vu():
    # v*u = u*v + u^3
    P = chart(2)
    got = P.normal_form_word(((1, 1), (0, 1)))
    want = NCPoly({(1, 1, 0, 0): 1, (3, 0, 0, 0): 1}, 2)
    assert got == want


def test_normal_form_idempotent_random():
    rng = random.Random(11)
    for P in (weyl(2), weyl(3), chart(2)):
        for _ in range(200):
            x = random_poly(P, rng)
            nf = normal_form(x, P)
            assert normal_form(nf, P) == nf


# -- multiply -----------------------------------------------------------------


def test_multiply_unit_law():
    P = weyl(5)
    rng = random.Random(3)
    for _ in range(20):
        b = random_poly(P, rng)
        assert multiply(P.one(), b, P) == b
        assert multiply(b, P.one(), P) == b


def test_multiply_weyl_p2():
    P = weyl(2)
    assert multiply(P.gen(1), P.gen(0), P) == NCPoly({(1, 1): 1, (0, 0): 1}, 2)


def test_multiply_chart_u_squared():
    P = chart(3)
    u = P.gen(0)
    assert multiply(u, u, P) == NCPoly({(2, 0, 0, 0): 1}, 3)


@pytest.mark.parametrize("maker", [lambda: weyl(2), lambda: weyl(3), lambda: chart(2)])
def test_multiply_associative_random(maker):
    P = maker()
    rng = random.Random(7)
    for _ in range(200):
        a, b, c = (random_poly(P, rng, max_degree=2) for _ in range(3))
        assert multiply(multiply(a, b, P), c, P) == multiply(a, multiply(b, c, P), P)


def test_multiply_bilinear():
    P = weyl(3)
    rng = random.Random(5)
    for _ in range(50):
        a, b, c = (random_poly(P, rng) for _ in range(3))
        assert multiply(a + b, c, P) == multiply(a, c, P) + multiply(b, c, P)
        assert multiply(a, b + c, P) == multiply(a, b, P) + multiply(a, c, P)


# -- commutator ---------------------------------------------------------------


def test_commutator_antisymmetry_and_relations():
    for P in (weyl(2), weyl(3), chart(2), chart(3)):
        for i in range(P.ngens):
            assert commutator(P.gen(i), P.gen(i), P).is_zero()
        for (j, i), c in P.relations.items():
            assert commutator(P.gen(j), P.gen(i), P) == c


def test_commutator_weyl_h12():
    for p in (2, 3, 7):
        P = weyl(p)
        assert commutator(P.gen(0), P.gen(1), P) == P.scalar(1)


def test_commutator_chart_v_gb3():
    P = chart(2)
    v, gb3 = P.gen(1), P.gen(2)
    want = NCPoly({(2, 0, 1, 0): 1}, 2)  # u^2 * gb3
    assert commutator(v, gb3, P) == want


# -- confluence ---------------------------------------------------------------


def test_confluence_weyl_all_supported():
    for p in (2, 3, 5, 7):
        for n in (1, 2):
            report = check_confluence(weyl(p, n))
            assert report.passed and not report.discrepancies


def test_confluence_chart_all_supported():
    for p in (2, 3, 5, 7):
        for n in (1, 2):
            report = check_confluence(chart(p, n))
            assert report.passed


def jacobi_violating_presentation(p=2):
    # [g2,g1] = g3, [g3,g1] = 0, [g3,g2] = g2: the Jacobi identity fails
    return Presentation(
        ("g1", "g2", "g3"),
        p,
        {
            (1, 0): NCPoly({(0, 0, 1): 1}, p),
            (2, 1): NCPoly({(0, 1, 0): 1}, p),
        },
    )


def test_confluence_detects_jacobi_failure():
    P = jacobi_violating_presentation()
    report = check_confluence(P)
    assert not report.passed
    assert len(report.discrepancies) == 1
    overlap, diff = report.discrepancies[0]
    assert overlap == (2, 1, 0)
    g3 = NCPoly({(0, 0, 1): 1}, 2)
    assert diff in (g3, -g3)


def test_reduction_order_fuzz():
    P = weyl(3, 2)
    assert fuzz_reduction_order(P, (3, 2, 1, 0, 2, 1), trials=10, seed=4)
    C = chart(2)
    assert fuzz_reduction_order(C, (1, 1, 0, 2, 3), trials=10, seed=4)


# -- hilbert_function ---------------------------------------------------------


def test_hilbert_function_values():
    assert hilbert_function(weyl(2, 1), 3) == 4
    assert hilbert_function(weyl(2, 2), 0) == 1
    assert hilbert_function(weyl(2, 2), 2) == 10


def test_hilbert_function_counts_normal_monomials():
    # independent count: exponent vectors of total degree d
    import itertools

    P = weyl(3, 2)
    for d in range(7):
        count = sum(
            1
            for m in itertools.product(range(d + 1), repeat=4)
            if sum(m) == d
        )
        assert hilbert_function(P, d) == count


def test_hilbert_function_rejects_localization():
    P = localized_weyl(2, 1)
    with pytest.raises(UnsupportedError):
        hilbert_function(P, 2)


# -- localization rules -------------------------------------------------------


def test_inverse_cancels():
    P = localized_weyl(2, 1)
    one = P.multiply(P.gen(0, -1), P.gen(0))
    assert one == P.one()
    assert P.multiply(P.gen(0), P.gen(0, -1)) == P.one()


def test_inverse_powers_accumulate():
    P = localized_weyl(3, 1)
    got = P.multiply(P.gen(0, -1), P.gen(0, -1))
    assert got == NCPoly({(-2, 0): 1}, 3)


def test_inverse_commutation_oracle():
    # [g1^{-1}, g2] = -g1^{-1} [g1, g2] g1^{-1} = -h12 g1^{-2}
    for p in (2, 3, 5):
        P = localized_weyl(p, 1)
        inv, g2 = P.gen(0, -1), P.gen(1)
        lhs = P.commutator(inv, g2)
        want = NCPoly({(-2, 0): (-1) % p}, p)
        assert lhs == want
        # sanity: multiply back, g1 * (g1^{-1} g2) == g2
        assert P.multiply(P.gen(0), P.multiply(inv, g2)) == g2


def test_negative_exponent_requires_invertible():
    P = weyl(2)
    with pytest.raises(UnsupportedError):
        P.gen(0, -1)


# -- associated graded --------------------------------------------------------


def test_gr_chart_all_ones():
    C = chart(2)
    G = associated_graded(C, WeightFiltration((1, 1, 1, 1)))
    # [v,u], [u,gb], [v,gb] all die; [gb4,gb3] keeps h u^2
    assert G.commutator_rel(1, 0).is_zero()
    assert G.commutator_rel(2, 1).is_zero()
    assert G.commutator_rel(3, 1).is_zero()
    assert G.commutator_rel(3, 2) == NCPoly({(2, 0, 0, 0): 1}, 2)


def test_gr_chart_then_u_adic_is_commutative():
    C = chart(3)
    G = associated_graded(C, WeightFiltration((1, 1, 1, 1)))
    G2 = associated_graded(G, WeightFiltration((1, 0, 0, 0)))
    assert not G2.relations


def test_gr_weyl_all_ones_commutative():
    for p in (2, 3):
        G = associated_graded(weyl(p, 2), WeightFiltration((1, 1, 1, 1)))
        assert not G.relations


def test_gr_rejects_lower_weight_component():
    p = 3
    P = Presentation(
        ("a", "b"), p, {(1, 0): NCPoly({(1, 0): 1}, p)}
    )  # [b,a] = a
    with pytest.raises(FiltrationError):
        associated_graded(P, WeightFiltration((1, 1)))


def test_gr_hilbert_matches_commutative_ring():
    C = chart(2)
    G = associated_graded(C, WeightFiltration((1, 1, 1, 1)))
    import math

    for d in range(7):
        assert hilbert_function(G, d) == math.comb(d + 3, 3)


# -- presentation guards ------------------------------------------------------


def test_termination_guard_rejects_heavy_relation():
    p = 2
    with pytest.raises(MalformedPresentationError):
        # [b,a] = b^3 with unit weights exceeds the guard
        Presentation(("a", "b"), p, {(1, 0): NCPoly({(0, 3): 1}, p)})


def test_chart_relation_needs_weighted_guard():
    # [v,u] = u^3 is fine with weights (1,2) but not with (1,1)
    p = 2
    Presentation(("u", "v"), p, {(1, 0): NCPoly({(3, 0): 1}, p)}, weights=(1, 2))
    with pytest.raises(MalformedPresentationError):
        Presentation(("u", "v"), p, {(1, 0): NCPoly({(3, 0): 1}, p)}, weights=(1, 1))


@settings(max_examples=50, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3)), max_size=4),
       st.sampled_from([2, 3, 5]))
def test_degree_law_hypothesis(monos, p):
    terms = {m: 1 for m in monos}
    x = NCPoly(terms, p)
    if x.is_zero():
        assert x.degree() == float("-inf")
    else:
        assert x.degree() == max(sum(m) for m in x.terms)
