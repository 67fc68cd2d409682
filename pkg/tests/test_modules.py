import random

import pytest

from uqsl2.center import casimir
from uqsl2.linalg import Mat
from uqsl2.modules import (partial_qtrace_left, partial_qtrace_right,
                           qtrace_left, qtrace_right, simple)


def test_simple_module_examples(tower23):
    U, f = tower23.U, tower23.field
    x2 = simple(U, 2, 1)
    assert x2.matK.rows[0][0] == f.q and x2.matK.rows[1][1] == f.qpow(-1)
    assert x2.matF.rows[1][0] == f.one          # F v0 = v1
    assert x2.matE.rows[0][1] == f.one          # E v1 = v0
    triv = simple(U, 1, 1)
    assert triv.matE.is_zero() and triv.matF.is_zero()
    assert triv.matK.rows[0][0] == f.one
    assert simple(U, 1, -1).matK.rows[0][0] == -f.one
    with pytest.raises(ValueError):
        simple(U, tower23.p + 1, 1)


def test_tensor_unit_and_dims(tower23):
    U = tower23.U
    x2 = tower23.simples[(2, 1)]
    triv = tower23.simples[(1, 1)]
    t = triv.tensor(x2)
    assert t.matE == x2.matE and t.matK == x2.matK
    assert x2.tensor(x2).dim == 4


def test_act(tower23):
    U, f = tower23.U, tower23.field
    p = tower23.p
    for V in tower23.simples.values():
        assert V.act(U.one_elt()) == Mat.identity(f, V.dim)
        assert V.act(U.E() ** p).is_zero()
    # the Casimir acts as a scalar on every simple
    C = casimir(U)
    for (s, sg), V in tower23.simples.items():
        mat = V.act(C)
        scalar = mat.rows[0][0]
        assert mat == Mat.identity(f, V.dim).scale(scalar)
        want = (f.qpow(s) + f.qpow(-s)).scale(f.rational(sg)) \
            / (f.q - f.qpow(-1)) ** 2
        assert scalar == want


def test_quantum_traces(tower23):
    f = tower23.field
    p = tower23.p
    x1m = tower23.simples[(1, -1)]
    eye = Mat.identity(f, 1)
    assert qtrace_right(eye, x1m) == f.rational((-1) ** (p + 1))
    # sphericality on the simples
    for V in tower23.simples.values():
        eye = Mat.identity(f, V.dim)
        assert qtrace_left(eye, V) == qtrace_right(eye, V)


def test_partial_traces_on_projective_models(tower23):
    f = tower23.field
    p = tower23.p
    x2 = tower23.simples[(2, 1)]
    minus_qq = -(f.q + f.qpow(-1))
    for j in range(1, p):
        mdl = tower23.center.models[(j, 1)]
        amb_l = x2.tensor(mdl.ambient, check=False)
        proj_l = Mat.identity(f, 2).kron(mdl.projector)
        red = partial_qtrace_left(proj_l, x2, mdl.ambient)
        assert red == mdl.projector.scale(minus_qq)
        amb_r = mdl.ambient.tensor(x2, check=False)
        proj_r = mdl.projector.kron(Mat.identity(f, 2))
        red = partial_qtrace_right(proj_r, mdl.ambient, x2)
        assert red == mdl.projector.scale(minus_qq)


def test_partial_trace_composition(tower23):
    # tracing out both factors equals the full quantum trace, both orders
    U, f = tower23.U, tower23.field
    V = tower23.simples[(2, 1)]
    W = tower23.simples[(tower23.p, -1)]
    VW = V.tensor(W, check=False)
    rng = random.Random(4)
    names = [n for n, _ in tower23.center.ordered_basis()]
    for _ in range(4):
        z = tower23.center.element_by_name(rng.choice(names))
        fmat = VW.act(z)          # equivariant because z is central
        assert VW.is_equivariant(fmat)
        full_r = qtrace_right(fmat, VW)
        step = partial_qtrace_right(fmat, V, W)
        assert qtrace_right(step, V) == full_r
        full_l = qtrace_left(fmat, VW)
        step = partial_qtrace_left(fmat, V, W)
        assert qtrace_left(step, W) == full_l


def test_projective_models(tower23):
    p = tower23.p
    f = tower23.field
    for sign in (1, -1):
        mp = tower23.center.models[(p, sign)]
        assert mp.ambient.dim == p and mp.projector == Mat.identity(f, p)
        m1 = tower23.center.models[(p - 1, sign)]
        assert m1.ambient.dim == 2 * p
        assert m1.projector == Mat.identity(f, 2 * p)
        for j in range(1, p):
            mdl = tower23.center.models[(j, sign)]
            assert mdl.rank == 2 * p
            # the projector commutes with the action of the generators
            for gen in (tower23.U.E(), tower23.U.F(), tower23.U.K()):
                gm = mdl.ambient.act(gen)
                assert gm @ mdl.projector == mdl.projector @ gm


def test_projective_model_p3_j1(tower3):
    mdl = tower3.center.models[(1, 1)]
    assert mdl.ambient.dim == 12
    assert mdl.projector.rank() == 6
