"""The right integral, its normalization, and the constant delta.

On the PBW basis the right integral is the coefficient functional

    mu(E^m F^n K^l) = zeta * [m = p-1][n = p-1][l = p+1],
    zeta = -sqrt(2/p) ([p-1]!)^2,

certified against the defining equations (mu (x) id) Delta(x) = mu(x) 1
rather than solved from them.  The constant delta is computed two ways,
as (1-i)/sqrt(2) * q^((3-p^2)/2) and as mu(r); both must agree exactly,
which entangles the R-matrix, the ribbon element and the normalization
of mu in a single check.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .cyclo import Cyclo
from .hopf import Algebra, AlgebraElement
from .report import CheckReport
from .ribbon import RibbonData, _square_part, _squarefree_part


@dataclass
class IntegralData:
    U: Algebra
    zeta: Cyclo
    delta: Cyclo
    delta_inv: Cyclo
    _mono: int  # packed E^(p-1) F^(p-1) K^(p+1)

    def mu(self, x: AlgebraElement) -> Cyclo:
        assert x.algebra is self.U
        return self.zeta * x.terms.get(self._mono, self.U.field.zero)

    def mu_mono(self, m: int) -> Cyclo:
        return self.zeta if m == self._mono else self.U.field.zero

    def mu_twisted(self, z: AlgebraElement, x: AlgebraElement) -> Cyclo:
        return self.mu(z * x)

    def mu_twisted_functional(self, z: AlgebraElement,
                              check_central: bool = True) -> Callable[[int], Cyclo]:
        """mu_z as a packed-monomial functional, for tensor-slot contraction."""
        if check_central and not self.U.is_central(z):
            raise ValueError("twist element is not central")
        f = self.U.field
        vals = {}
        for x_mono in self.U.basis():
            acc = f.zero
            for m, c in z.terms.items():
                t = self.U.mono_mul(m, x_mono).get(self._mono)
                if t:
                    acc = acc + c * t
            if acc:
                vals[x_mono] = acc * self.zeta
        return lambda m: vals.get(m, f.zero)


def build_integral(rd: RibbonData) -> IntegralData:
    U = rd.U
    f = U.field
    p = U.p
    # zeta = -sqrt(2/p) ([p-1]!)^2, with sqrt(2/p) = sqrt(2p)/p.
    sq2p = f.rational(_square_part(2 * p)) * f.sqrt_positive(_squarefree_part(2 * p))
    zeta = -(sq2p / f.rational(p)) * f.quantum_factorial(p - 1) ** 2
    delta_closed = (f.one - f.i) / f.sqrt2 * f.qhalfpow(3 - p * p)
    data = IntegralData(U=U, zeta=zeta, delta=delta_closed,
                        delta_inv=delta_closed.inverse(),
                        _mono=U.pack(p - 1, p - 1, p + 1))
    mu_r = data.mu(rd.r)
    if mu_r != delta_closed:
        raise ArithmeticError(
            "mu(r) disagrees with the closed form of delta: "
            f"{mu_r!r} vs {delta_closed!r}")
    mu_rinv = data.mu(rd.r_inv)
    if mu_r * mu_rinv != f.one:
        raise ArithmeticError("mu(r) mu(r^-1) != 1")
    return data


def verify_right_integral(integral: IntegralData) -> CheckReport:
    """(mu (x) id) Delta(x) = mu(x) 1, exhaustively over the PBW basis."""
    U = integral.U
    f = U.field
    rep = CheckReport(f"right-integral(p={U.p})")
    bad = []
    for m in U.basis():
        out: dict = {}
        for (m1, m2), c in U.coproduct_mono(m).items():
            w = integral.mu_mono(m1)
            if w:
                out[m2] = out.get(m2, f.zero) + c * w
        got = AlgebraElement(U, {k: c for k, c in out.items() if c})
        want = U.one_elt().scale(integral.mu_mono(m))
        if got != want:
            bad.append(U.mono_str(m))
    rep.check(f"(mu (x) id)Delta = mu(.)1 on all {U.dim} basis elements",
              not bad, f"failing monomials: {bad[:5]}")
    return rep


def verify_qchar(integral: IntegralData, center_basis: list[AlgebraElement],
                 seed: int = 11, samples: int = 12) -> CheckReport:
    """Each twist mu_z is a quantum character and the twists are independent.

    Checks mu_z(xy) = mu_z(S^2(y) x) on seeded random pairs for every
    center basis element z, and that the evaluation matrix of the twists
    against the PBW basis has full rank 3p-1.
    """
    import random

    from .linalg import Mat

    U = integral.U
    f = U.field
    p = U.p
    rep = CheckReport(f"quantum-characters(p={U.p})")
    rng = random.Random(seed)
    for zi, z in enumerate(center_basis):
        ok = True
        for _ in range(samples):
            x = U.element({rng.randrange(U.dim): f.one})
            y = U.element({rng.randrange(U.dim): f.one})
            lhs = integral.mu(z * (x * y))
            rhs = integral.mu(z * (y.antipode().antipode() * x))
            if lhs != rhs:
                ok = False
                break
        rep.check(f"mu_z quantum character (z = basis[{zi}])", ok)
    rows = []
    for z in center_basis:
        fn = integral.mu_twisted_functional(z, check_central=False)
        rows.append([fn(m) for m in U.basis()])
    rank = Mat(f, rows).rank()
    rep.check(f"rank of twist evaluation matrix = {3 * p - 1}", rank == 3 * p - 1,
              f"got rank {rank}")
    # cyclicity of the g-twist of mu: x -> mu(g x) is a character
    g = U.K(p + 1)
    ok = True
    for _ in range(samples):
        x = U.element({rng.randrange(U.dim): f.one})
        y = U.element({rng.randrange(U.dim): f.one})
        if integral.mu(g * x * y) != integral.mu(g * y * x):
            ok = False
            break
    rep.check("x -> mu(g x) is cyclic", ok)
    return rep
