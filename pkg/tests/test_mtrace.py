import random

import pytest

from uqsl2.mtrace import (TraceColor, derive_trace_table, expected_pairing_table,
                          pairing, pairing_slow, pairing_table, trace_table,
                          verify_pairing, verify_trace_recursion)


def test_closed_form_values(tower23):
    p, f = tower23.p, tower23.field
    t = trace_table(p, f)
    assert t[("id", p, 1)] == f.rational((-1) ** (p - 1))
    assert t[("id", p, -1)] == f.one
    for j in range(1, p):
        want = (f.qpow(j) + f.qpow(-j)) * f.rational((-1) ** j)
        assert t[("id", j, 1)] == want
    if p == 2:
        assert not t[("id", 1, 1)]          # q + q^-1 = 0 at p = 2


def test_recursion_matches_closed_form(tower23):
    rep = verify_trace_recursion(tower23)
    assert rep.ok, [i.name for i in rep.failures()]


def test_recursion_p4(tower4):
    rep = verify_trace_recursion(tower4)
    assert rep.ok, [i.name for i in rep.failures()]


def test_perturbed_normalization_fails(tower2):
    # flipping the anchor sign must break agreement with the closed form
    derived = derive_trace_table(tower2, "right")
    closed = trace_table(2, tower2.field)
    bad = {k: -v for k, v in closed.items()}
    assert any(derived[k] != bad[k] for k in closed)
    assert all(derived[k] == closed[k] for k in closed)


def test_tr_prime_values(tower23):
    p, f = tower23.p, tower23.field
    td = tower23.traces
    hh = tower23.hh0
    assert td.tr_prime(hh.f_reps[(p, -1)]) == f.one
    for j in range(1, p):
        val = td.tr_prime(tower23.center.w_plus[j] * hh.f_reps[(j, 1)])
        assert val == f.quantum_integer(j) ** 2 * f.rational((-1) ** j)
    rng = random.Random(8)
    for _ in range(6):
        x = tower23.U.element({rng.randrange(tower23.U.dim): f.one})
        y = tower23.U.element({rng.randrange(tower23.U.dim): f.one})
        assert not td.tr_prime(x * y - y * x)


def test_z0(tower23):
    td = tower23.traces
    U, f = tower23.U, tower23.field
    integ = tower23.integral
    g = tower23.ribbon.g
    assert U.is_central(td.z0)
    for m in U.basis():
        x = U.element({m: f.one})
        assert integ.mu(g * td.z0 * x) == td.tr_prime(x)
    assert integ.mu(g * td.z0 * tower23.hh0.f_reps[(tower23.p, -1)]) == f.one


def test_pairing_table_matches_published(tower23):
    got, det = pairing_table(tower23)
    want = expected_pairing_table(tower23)
    assert got == want
    assert det


def test_pairing_entries(tower23):
    p, f = tower23.p, tower23.field
    td = tower23.traces
    hh = tower23.hh0
    e = tower23.center.e
    assert td.tr_prime(e[0] * hh.representative(f"h-{p}")) == f.one
    assert td.tr_prime(e[p] * hh.representative(f"h+{p}")) \
        == f.rational((-1) ** (p - 1))
    for j in range(1, p):
        w = tower23.center.w_plus[j]
        val = td.tr_prime(w * hh.representative(f"h+{j}"))
        assert val == f.quantum_integer(j) ** 2 * f.rational((-1) ** j)
        assert not td.tr_prime(w * hh.representative(f"h-{p - j}"))


def test_quantum_characters_block_orthogonality(tower23):
    p, f = tower23.p, tower23.field
    td = tower23.traces
    for j in range(1, p):
        chi = td.character(f"h{j}")
        for k in range(1, p + 1):
            if k == j:
                continue
            rep = tower23.hh0.f_reps[(k, 1)]
            val = f.zero
            for m, c in rep.terms.items():
                val = val + c * chi(m)
            assert not val


def test_pairing_full_suite(tower23):
    rep = verify_pairing(tower23)
    assert rep.ok, [i.name for i in rep.failures()]


def test_two_slot_pairing_routes(tower2):
    f = tower2.field
    rng = random.Random(31)
    names = tower2.hh0.basis_names()
    for _ in range(6):
        za = tower2.center.e[rng.randrange(3)]
        zb = tower2.center.w_plus[1] if rng.random() < 0.5 else tower2.center.e[1]
        z = za.tensor(zb)
        colors = [TraceColor.named(tower2, rng.choice(names)) for _ in range(2)]
        assert pairing(tower2, z, colors) == pairing_slow(tower2, z, colors)


def test_unknot_pairing_normalization(tower23):
    # full closure of the identity strand against h_p^- gives 1
    from uqsl2.hopf import TensorElement
    p, f = tower23.p, tower23.field
    one = TensorElement.unit(tower23.U, 1)
    val = pairing(tower23, one, [TraceColor.named(tower23, f"h-{p}")])
    assert val == f.one
