from fractions import Fraction

import numpy as np
import pytest

from slocc4 import PureState, TriClass, classify3, classify4
from slocc4.canonical import FamilySpec, make_canonical, okpsi_w_phi0
from slocc4.exact import (
    GR_ONE,
    GR_ZERO,
    GaussianRational,
    clause_quantities_exact,
    exact_rank,
    ghz_invariant_exact,
    lift,
    quartic_exact,
    resultant_quadratics_exact,
    snap_complex,
)

from conftest import FAMILY_TAGS, GHZ3, W3


def gr(re, im=0):
    return GaussianRational(Fraction(re), Fraction(im))


def test_gaussian_rational_arithmetic():
    a = gr(1, 2)
    b = gr(3, -1)
    assert a + b == gr(4, 1)
    assert a - b == gr(-2, 3)
    assert a * b == gr(5, 5)  # (1+2i)(3-i) = 3 - i + 6i + 2 = 5 + 5i
    assert (a / b) * b == a
    assert -a == gr(-1, -2)
    assert 2 * a == gr(2, 4)
    assert a.conjugate() == gr(1, -2)
    assert a.abs2() == Fraction(5)
    assert not GR_ZERO
    assert GR_ONE
    with pytest.raises(ZeroDivisionError):
        a / GR_ZERO


def test_lift_is_exact_for_floats():
    # every finite float is a dyadic rational
    z = 0.1 + 0.3j
    g = GaussianRational.from_complex(z)
    assert g.to_complex() == z
    assert g.re == Fraction(0.1)  # exact binary value, not 1/10
    assert g.re != Fraction(1, 10)


def test_exact_invariant_on_ghz():
    val = ghz_invariant_exact(lift(GHZ3))
    assert val == GR_ONE
    assert ghz_invariant_exact(lift(W3)).is_zero


def test_exact_clause_quantities():
    q = clause_quantities_exact(lift(W3))
    assert q[0] == gr(-1)
    assert q[2] == gr(1)
    assert q[5] == gr(1)
    assert q[1].is_zero and q[3].is_zero and q[4].is_zero


def test_classify3_exact_matches_float():
    for amps in (GHZ3, W3, np.eye(8)[0], okpsi_w_phi0(2 + 3j)):
        state = PureState(amps)
        assert classify3(state, exact=True) == classify3(state)


def test_classify3_exact_borderline_resolves_ambiguity():
    # exactly two clauses fire under the float tolerance (an impossible
    # pattern, reported as ambiguous); exact arithmetic sees the invariant
    # as the genuinely nonzero value (1e-5)^2 and resolves the state to GHZ
    amps = np.array([1, 1, 1, 0, 1e-12, 1e-5, 0, 0], dtype=complex)
    with pytest.raises(Exception):
        classify3(PureState(amps))
    assert classify3(PureState(amps), exact=True) == TriClass.GHZ


def test_quartic_exact_y4_coefficient():
    rng = np.random.default_rng(9)
    phi0 = rng.standard_normal(8) + 1j * rng.standard_normal(8)
    coeffs = quartic_exact(lift(phi0), lift(GHZ3))
    assert coeffs[4] == GR_ONE  # exactly, independent of phi0


def test_quartic_exact_identically_zero_for_lambda_family():
    for lam in (0, 1, -1, 1j, 2 + 3j):
        coeffs = quartic_exact(lift(okpsi_w_phi0(lam)), lift(W3))
        assert all(c.is_zero for c in coeffs)


def test_resultant_exact():
    # x^2 and y^2 share no root; x^2 and x^2 share both
    f = (gr(1), GR_ZERO, GR_ZERO)
    g = (GR_ZERO, GR_ZERO, gr(1))
    assert resultant_quadratics_exact(f, g) == gr(1)
    assert resultant_quadratics_exact(f, f).is_zero


def test_exact_rank():
    rows = [[gr(1), gr(2)], [gr(2), gr(4)]]
    assert exact_rank(rows) == 1
    rows = [[gr(1), gr(0)], [gr(0, 1), gr(1)]]
    assert exact_rank(rows) == 2
    assert exact_rank([[GR_ZERO, GR_ZERO]]) == 0


def test_snap_complex():
    g = snap_complex(complex(1 / 3, -0.25))
    assert g.re == Fraction(1, 3)
    assert g.im == Fraction(-1, 4)


@pytest.mark.parametrize("tag", FAMILY_TAGS)
def test_classify4_exact_matches_numeric(tag):
    state = make_canonical(FamilySpec(tag))
    numeric = classify4(state)
    exact = classify4(state, exact=True)
    assert exact.tag == numeric.tag
    assert exact.cuts == numeric.cuts


def test_classify4_exact_on_irrational_family_member():
    # sqrt(a3 a5) is irrational here, so the float amplitudes are only
    # approximately on the family; exact mode must fall back to numeric
    # semantics rather than classifying the rounding noise
    spec = FamilySpec("WW_W", {"mu": 1j, "a3": 2, "a5": 1 + 1j}, sign=-1)
    state = make_canonical(spec)
    numeric = classify4(state)
    exact = classify4(state, exact=True)
    assert numeric.tag.value == "WW_W"
    assert exact.tag == numeric.tag

    spec = FamilySpec("W0kPsi_W", {"lambda": 0.1 + 0.7j})
    state = make_canonical(spec)
    assert classify4(state, exact=True).tag == classify4(state).tag


def test_degenerate_screen_exact_on_rounded_product():
    # a SLOCC image of a product state is product only up to rounding, so
    # its exact lift has full cut rank at noise level; the numeric screen
    # must still reject it in exact mode
    from slocc4 import apply_slocc
    from slocc4.canonical import random_slocc

    base = PureState(np.kron([1.0, 0.0], np.array(GHZ3)))
    img = apply_slocc(base, random_slocc(4, 1e3, seed=8))
    numeric = classify4(img)
    exact = classify4(img, exact=True)
    assert numeric.is_degenerate and exact.is_degenerate
    assert "qubit 1 separable" in exact.detail
