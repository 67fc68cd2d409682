import cmath
import math
import random
from fractions import Fraction

import pytest

from uqsl2.cyclo import Cyclo, CycloField, cyclotomic_polynomial


def test_cyclotomic_polynomial_against_sympy():
    sympy = pytest.importorskip("sympy")
    x = sympy.symbols("x")
    for n in (1, 2, 3, 4, 8, 12, 16, 24, 40):
        got = cyclotomic_polynomial(n)
        want = sympy.Poly(sympy.cyclotomic_poly(n, x), x).all_coeffs()[::-1]
        assert got == [int(c) for c in want]


def test_special_roots():
    for p in (2, 3, 4, 5):
        f = CycloField.for_p(p)
        assert f.order == math.lcm(8, 4 * p)
        assert f.zeta8 ** 2 == f.i
        assert f.q_half * f.q_half == f.q
        assert f.root(0) == f.one
        assert f.root(f.order) == f.one
        assert f.i * f.i == f.rational(-1)
    f2 = CycloField.for_p(2)
    assert f2.root(2) == f2.i          # zeta_8^2 = i
    assert f2.q + f2.qpow(-1) == f2.zero


def test_embedding_convention():
    # zeta_N -> e^(2 pi i / N) puts q^(1/2) on the branch e^(i pi / 2p)
    for p in (2, 3, 5):
        f = CycloField.for_p(p)
        assert abs(f.q_half.approx() - cmath.exp(1j * cmath.pi / (2 * p))) < 1e-14
        z = f.one.approx()
        assert abs(z - 1) < 1e-14
        assert abs(f.i.approx() - 1j) < 1e-14


def test_inverse():
    f = CycloField.for_p(3)
    assert f.one.inverse() == f.one
    assert f.q.inverse() == f.qpow(2 * 3 - 1)
    rng = random.Random(17)
    for _ in range(12):
        a = f.zero
        while not a:
            a = f.from_coeffs([Fraction(rng.randint(-4, 4), rng.randint(1, 5))
                               for _ in range(f.phi)])
        assert a * a.inverse() == f.one
    with pytest.raises(ZeroDivisionError):
        f.zero.inverse()


def test_field_axioms_randomized():
    f = CycloField.for_p(3)
    rng = random.Random(5)

    def rand():
        return f.from_coeffs([rng.randint(-3, 3) for _ in range(f.phi)])

    for _ in range(25):
        a, b, c = rand(), rand(), rand()
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c


def test_canonical_form_idempotent():
    f = CycloField.for_p(2)
    a = f.root(5) * f.rational(6, 4)
    again = Cyclo._make(f, list(a.num), a.den)
    assert again.num == a.num and again.den == a.den


def test_approx_is_ring_homomorphism():
    f = CycloField.for_p(3)
    rng = random.Random(9)

    def rand():
        return f.from_coeffs([rng.randint(-20, 20) for _ in range(f.phi)])

    for _ in range(15):
        a, b = rand(), rand()
        assert abs((a + b).approx() - (a.approx() + b.approx())) < 1e-9
        assert abs((a * b).approx() - (a.approx() * b.approx())) < 1e-9


def test_sqrt_positive():
    for p in (2, 3, 5, 6):
        f = CycloField.for_p(p)
        assert f.sqrt_positive(1) == f.one
        for n in range(1, 2 * p + 1):
            if (2 * p) % n:
                continue
            square_free = all(n % (d * d) for d in range(2, n))
            if not square_free:
                with pytest.raises(ValueError):
                    f.sqrt_positive(n)
                continue
            s = f.sqrt_positive(n)
            assert s * s == f.rational(n)
            z = s.approx()
            assert abs(z.imag) < 1e-12 and abs(z.real - math.sqrt(n)) < 1e-12
    f = CycloField.for_p(3)
    s2 = f.sqrt_positive(2)
    assert abs(s2.approx().real - 1.41421356) < 1e-7
    with pytest.raises(ValueError):
        f.sqrt_positive(5)


def test_quantum_integers():
    for p in (2, 3, 4):
        f = CycloField.for_p(p)
        assert f.quantum_integer(1) == f.one
        assert f.quantum_integer(p) == f.zero
        assert f.quantum_factorial(0) == f.one
    f3 = CycloField.for_p(3)
    two = f3.quantum_integer(2)
    assert two == f3.q + f3.qpow(-1)
    assert two
    assert abs(two.approx() - 2 * math.cos(math.pi / 3)) < 1e-12


def test_order_mismatch_and_serialization():
    f2, f3 = CycloField.for_p(2), CycloField.for_p(3)
    with pytest.raises(ValueError):
        f2.one + f3.one
    blob = (f2.i * f2.rational(3, 2)).to_json()
    assert blob["N"] == 8
    assert blob["coeffs"][2] == [3, 2]
    assert abs(blob["approx"][1] - 1.5) < 1e-12
