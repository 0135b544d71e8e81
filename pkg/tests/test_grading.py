from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from floerbox.algebra import Alg, grading_of
from floerbox.grading import (IDENTITY, LAMBDA, DoubleCosetContext, GradingError, GroupElement,
                              h_d, normalize_double_coset, product, same_left_coset,
                              same_right_coset)
from floerbox.patterns import H_A_CABLE, H_A_MAZUR


@st.composite
def elements(draw, lo=-12, hi=12):
    b2 = draw(st.integers(lo, hi))
    c2 = draw(st.integers(lo, hi).filter(lambda c: (c + b2) % 2 == 0))
    return GroupElement(draw(st.integers(lo, hi)), b2, c2, draw(st.integers(lo, hi)))


def test_half_integer_constructor():
    g = GroupElement.of("-1/2", Fraction(1, 2), "1/2", 3)
    assert (g.a2, g.b2, g.c2, g.d) == (-1, 1, 1, 3)
    assert g.a == Fraction(-1, 2) and str(g) == "(-1/2; 1/2, 1/2; 3)"


def test_b_plus_c_must_be_integral():
    with pytest.raises(GradingError):
        GroupElement(0, 1, 0, 0)
    with pytest.raises(GradingError):
        GroupElement.of("1/3", 0, 0, 0)


def test_rho1_times_rho2():
    assert grading_of(Alg.RHO1) * grading_of(Alg.RHO2) == GroupElement.of("-1/2", 1, 0, 0)


def test_periodic_loop_lands_in_h_a():
    # x0 -U rho3-> y1 <-U^2- x1 -rho2-> x0: eliminating y1 and x1 leaves
    # gr(x0) = gr(x0) * loop, so loop lies in the left subgroup
    r2, r3 = grading_of(Alg.RHO2), grading_of(Alg.RHO3)
    loop = r3 * GroupElement(0, 0, 0, -1) * LAMBDA * r2
    assert loop == H_A_MAZUR
    assert loop.inv() == GroupElement.of("1/2", 0, -1, 1)


def test_inverses():
    assert IDENTITY.inv() == IDENTITY
    assert LAMBDA.inv() == GroupElement.of(-1, 0, 0, 0)
    r2 = grading_of(Alg.RHO2)
    assert r2.inv() == GroupElement.of("1/2", "-1/2", "-1/2", 0)
    assert r2 * r2.inv() == IDENTITY == r2.inv() * r2


@given(elements(), elements(), elements())
def test_associative(g1, g2, g3):
    assert (g1 * g2) * g3 == g1 * (g2 * g3)


@given(elements())
def test_identity_and_inverse(g):
    assert IDENTITY * g == g == g * IDENTITY
    assert g * g.inv() == IDENTITY


@given(elements())
def test_lambda_is_central(g):
    assert LAMBDA * g == g * LAMBDA


@given(elements(), st.integers(-6, 6), st.integers(-6, 6))
def test_powers_add(g, j, k):
    assert g ** j * g ** k == g ** (j + k)


def test_h_d_values():
    assert h_d(0) == GroupElement.of("-1/2", -1, 0, 0)
    assert h_d(3) == GroupElement.of(-2, -1, -3, 0)


def test_identity_normalizes_to_zero():
    assert normalize_double_coset(IDENTITY, DoubleCosetContext(H_A_MAZUR, h_d(4))) == (0, 0)


def test_kappa_example():
    # x1 with kappa_1 from a generator at M = 0, A = 1, framing 0
    from floerbox.cfd import kappa_grading
    from floerbox.patterns import mazur_cfa_hat
    x1 = mazur_cfa_hat().gen("x1").grading
    got = normalize_double_coset(x1 * kappa_grading(0, 1, 1), DoubleCosetContext(H_A_MAZUR, h_d(0)))
    assert got == (0, -1)


@given(st.integers(-6, 6), st.integers(-6, 6), st.integers(1, 4), st.integers(-8, 8),
       st.integers(-5, 5), st.integers(-5, 5), st.sampled_from(["mazur", "cable21"]))
def test_double_coset_well_defined(M, A, j, n, p, q, pattern):
    from floerbox.cfd import kappa_grading
    from floerbox.patterns import PATTERNS
    pat = PATTERNS[pattern]()
    h_a = pat.h_A
    ctx = DoubleCosetContext(h_a, h_d(n))
    g = pat.gen("x1" if pattern == "mazur" else "b2").grading * kappa_grading(M, A, j)
    assert normalize_double_coset(h_a ** p * g * ctx.h_D ** q, ctx) == normalize_double_coset(g, ctx)


def test_bad_context_rejected():
    with pytest.raises(GradingError):
        DoubleCosetContext(H_A_MAZUR, GroupElement(0, 0, 0, 0))
    with pytest.raises(GradingError):
        DoubleCosetContext(h_d(0), h_d(0))


def test_coset_tests():
    h = h_d(2)
    g = GroupElement.of(1, 0, 0, 2)
    assert same_right_coset(g, g * h ** 3, h)
    assert not same_right_coset(g, g * LAMBDA, h)
    assert same_left_coset(g, H_A_MAZUR ** -2 * g, H_A_MAZUR)


def test_product_helper():
    parts = [grading_of(a) for a in (Alg.RHO1, Alg.RHO2, Alg.RHO3)]
    assert product(*parts) == grading_of(Alg.RHO123)
