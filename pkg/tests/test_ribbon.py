import pytest

from uqsl2.hopf import TensorElement
from uqsl2.ribbon import (RibbonData, build_R_inv, verify_quasitriangular,
                          verify_ribbon)


def test_r_matrix_counit_sides(tower23):
    rd = tower23.ribbon
    D = rd.D
    f = D.field
    eps = lambda m: f.one if m < D.kmod else f.zero
    assert rd.R.apply_functionals([eps, None]).as_element() == D.one_elt()
    assert rd.R.apply_functionals([None, eps]).as_element() == D.one_elt()
    assert rd.R_inv.apply_functionals([None, eps]).as_element() == D.one_elt()


def test_r_inverse(tower23):
    rd = tower23.ribbon
    unit = TensorElement.unit(rd.D, 2)
    assert rd.R * rd.R_inv == unit
    assert rd.R_inv * rd.R == unit


def test_intertwining(tower23):
    rd = tower23.ribbon
    D = rd.D
    for gen in (D.E(), D.F(), D.K()):
        dx = D.coproduct(gen)
        assert rd.R * dx == dx.swap() * rd.R


def test_ribbon_element_relations(tower23):
    rd = tower23.ribbon
    U, f = rd.U, rd.U.field
    assert rd.r.counit() == f.one
    assert rd.r_inv * rd.u == U.K(tower23.p + 1)
    assert rd.r.antipode() == rd.r
    assert rd.r * rd.r == rd.u * rd.u.antipode()
    assert U.coproduct(rd.u) == rd.M_inv * rd.u.tensor(rd.u)
    assert U.coproduct(rd.g) == rd.g.tensor(rd.g)
    assert rd.g.counit() == f.one


def test_full_reports(tower23):
    rep = verify_quasitriangular(tower23.p, tower23.ribbon)
    assert rep.ok, [i.name for i in rep.failures()]
    rep = verify_ribbon(tower23.p, tower23.ribbon)
    assert rep.ok, [i.name for i in rep.failures()]


def test_perturbed_r_fails(tower2):
    rd = tower2.ribbon
    D = rd.D
    f = D.field
    key = next(iter(rd.R.terms))
    bad_terms = dict(rd.R.terms)
    bad_terms[key] = bad_terms[key] + f.one
    bad_R = TensorElement(D, 2, bad_terms)
    bad = RibbonData(D=rd.D, U=rd.U, R=bad_R, R_inv=rd.R_inv, R21=bad_R.swap(),
                     M=rd.M, M_inv=rd.M_inv, u=rd.u, u_inv=rd.u_inv, r=rd.r,
                     r_inv=rd.r_inv, g=rd.g, g_inv=rd.g_inv)
    rep = verify_quasitriangular(2, bad)
    assert not rep.ok
    assert any("nonzero difference" in i.witness or not i.passed
               for i in rep.items)
    with pytest.raises(ArithmeticError):
        build_R_inv(D, bad_R)


def test_monodromy_membership(tower23):
    from uqsl2.hopf import is_in_U
    rd = tower23.ribbon
    # M and r were converted to U-tagged form; their D preimages are even
    from uqsl2.hopf import embed_U_in_D
    assert is_in_U(embed_U_in_D(rd.r, rd.D))
    assert rd.M.algebra is rd.U and rd.M.arity == 2
