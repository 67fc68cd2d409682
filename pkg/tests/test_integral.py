import pytest

from uqsl2.integral import IntegralData, verify_qchar, verify_right_integral


def test_integral_values(tower23):
    integ = tower23.integral
    U, f, p = tower23.U, tower23.field, tower23.p
    assert integ.mu(U.monomial(p - 1, p - 1, p + 1)) == integ.zeta
    assert integ.mu(U.one_elt()) == f.zero
    assert integ.mu_twisted(U.one_elt(), U.monomial(p - 1, p - 1, p + 1)) \
        == integ.zeta


def test_p2_closed_values(tower2):
    integ = tower2.integral
    U, f = tower2.U, tower2.field
    assert integ.zeta == -f.one
    assert integ.mu(U.monomial(1, 1, 3)) == -f.one
    assert integ.delta == -f.i
    z = integ.delta.approx()
    assert abs(z - (-1j)) < 1e-12


def test_delta_both_ways(tower23):
    integ = tower23.integral
    rd = tower23.ribbon
    f = tower23.field
    assert integ.mu(rd.r) == integ.delta
    assert integ.mu(rd.r_inv) == integ.delta_inv
    assert integ.delta * integ.mu(rd.r_inv) == f.one
    want = (f.one - f.i) / f.sqrt2 * f.qhalfpow(3 - tower23.p ** 2)
    assert integ.delta == want


def test_right_integral_equations(tower23):
    rep = verify_right_integral(tower23.integral)
    assert rep.ok, [i.witness for i in rep.failures()]


def test_perturbed_mu_fails(tower2):
    integ = tower2.integral
    U = tower2.U
    bad = IntegralData(U=U, zeta=integ.zeta, delta=integ.delta,
                       delta_inv=integ.delta_inv,
                       _mono=U.pack(1, 1, 2))   # wrong K-exponent selected
    rep = verify_right_integral(bad)
    assert not rep.ok


def test_quantum_characters(tower23):
    basis = [z for _, z in tower23.center.ordered_basis()]
    rep = verify_qchar(tower23.integral, basis)
    assert rep.ok, [i.name for i in rep.failures()]


def test_twist_requires_central(tower2):
    with pytest.raises(ValueError):
        tower2.integral.mu_twisted_functional(tower2.U.E())
