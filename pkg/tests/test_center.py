import pytest

from uqsl2.center import (casimir, compute_center, verify_casimir_coproduct,
                          verify_center)
from uqsl2.linalg import Mat


def test_center_dimension(tower23):
    p = tower23.p
    assert len(tower23.center.basis) == 3 * p - 1
    if p == 2:
        assert len(compute_center(tower23.U)) == 5


def test_identity_and_casimir_in_center(tower23):
    U = tower23.U
    from uqsl2.linalg import Echelon
    from uqsl2.center import element_to_vec
    ech = Echelon(tower23.field, U.dim)
    for z in tower23.center.basis:
        ech.add(element_to_vec(z))
    assert ech.contains(element_to_vec(U.one_elt()))
    assert ech.contains(element_to_vec(casimir(U)))


def test_idempotent_labels(tower23):
    p = tower23.p
    cd = tower23.center
    eye_minus = tower23.simples[(p, -1)]
    mat = eye_minus.act(cd.e[0])
    assert mat == Mat.identity(tower23.field, p)
    for j in range(1, p + 1):
        v = tower23.simples[(j, 1)]
        assert v.act(cd.e[j]) == Mat.identity(tower23.field, v.dim)


def test_center_relations_suite(tower23):
    rep = verify_center(tower23.center)
    assert rep.ok, [i.name for i in rep.failures()]


def test_w_examples(tower23):
    p = tower23.p
    cd = tower23.center
    U = tower23.U
    for j in range(1, p):
        assert cd.w_plus[j] * cd.w_minus[j] == U.zero_elt()
        assert cd.e[j] * cd.w_plus[j] == cd.w_plus[j]
        # w_j^+ annihilates the negative-sign model in its own block
        mdl = cd.models[(p - j, -1)]
        assert mdl.act(cd.w_plus[j]).is_zero()
        assert not mdl.act(cd.w_minus[j]).is_zero()


def test_casimir_coproduct(tower23):
    rep = verify_casimir_coproduct(tower23.U)
    assert rep.ok, [i.name for i in rep.failures()]


def test_expand_roundtrip(tower23):
    cd = tower23.center
    f = tower23.field
    z = cd.e[1].scale(f.rational(3)) + cd.w_plus[1]
    coords = cd.expand(z)
    named = cd.ordered_basis()
    rebuilt = tower23.U.zero_elt()
    for c, (_, b) in zip(coords, named):
        rebuilt = rebuilt + b.scale(c)
    assert rebuilt == z
    with pytest.raises(ValueError):
        cd.expand(tower23.U.E())   # not central, not in the span
