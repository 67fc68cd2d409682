"""Quasitriangular and ribbon structure of the braided extension.

The extension D carries the explicit R-matrix

    R = (1/4p) sum_{m<p} sum_{n,j<4p} ((q - q^-1)^m / [m]!)
        q^(m(m-1)/2 + m(n-j) - nj/2)  e^m k^n (x) phi^m k^j

and the ribbon element

    r = (1-i)/(2 sqrt(p)) sum_{m<p} sum_{j<2p} ((q - q^-1)^m / [m]!)
        q^(-m/2 + mj + (j+p+1)^2/2)  phi^m e^m k^(2j).

R^-1 is produced as (S (x) id)(R) and certified by multiplication; the
canonical element is u = sum S(beta) alpha with inverse sum beta S^2(alpha);
the monodromy M = R_21 R and the elements u, r land inside U (even
k-exponents), which is asserted before converting to U-tagged form.  The
balancing element is g = r^-1 u = K^(p+1).
"""

from __future__ import annotations

from dataclasses import dataclass

from .hopf import (Algebra, AlgebraElement, TensorElement, build_D, build_U,
                   is_in_U, project_D_to_U)
from .report import CheckReport


def build_R(D: Algebra) -> TensorElement:
    f = D.field
    p = D.p
    terms = {}
    pref = f.rational(1, 4 * p)
    for m in range(p):
        cm = pref * (f.q - f.qpow(-1)) ** m / f.quantum_factorial(m) \
            * f.qhalfpow(m * (m - 1))
        for n in range(4 * p):
            for j in range(4 * p):
                coeff = cm * f.qpow(m * (n - j)) * f.qhalfpow(-n * j)
                key = (D.pack(m, 0, n), D.pack(0, m, j))
                terms[key] = coeff
    return TensorElement(D, 2, {k: c for k, c in terms.items() if c})


def build_R_inv(D: Algebra, R: TensorElement) -> TensorElement:
    """(S (x) id)(R), certified as a two-sided inverse of R."""
    f = D.field
    out: dict = {}
    z = f.zero
    for (m1, m2), c in R.terms.items():
        for ms, cs in D.antipode_mono(m1).items():
            key = (ms, m2)
            out[key] = out.get(key, z) + c * cs
    cand = TensorElement(D, 2, {k: c for k, c in out.items() if c})
    unit = TensorElement.unit(D, 2)
    if R * cand != unit or cand * R != unit:
        raise ArithmeticError("antipode candidate is not a two-sided inverse of R")
    return cand


def build_u(D: Algebra, R: TensorElement) -> tuple[AlgebraElement, AlgebraElement]:
    """u = sum S(beta) alpha and u^-1 = sum beta S^2(alpha)."""
    f = D.field
    u: dict = {}
    uinv: dict = {}
    z = f.zero
    for (ma, mb), c in R.terms.items():
        for msb, csb in D.antipode_mono(mb).items():
            for m, cm in D.mono_mul(msb, ma).items():
                u[m] = u.get(m, z) + c * csb * cm
        for m2a, c2a in D.antipode_mono(ma).items():
            for m2, c2 in D.antipode_mono(m2a).items():
                for m, cm in D.mono_mul(mb, m2).items():
                    uinv[m] = uinv.get(m, z) + c * c2a * c2 * cm
    ue = AlgebraElement(D, {m: c for m, c in u.items() if c})
    uie = AlgebraElement(D, {m: c for m, c in uinv.items() if c})
    if ue * uie != D.one_elt():
        raise ArithmeticError("u * u^-1 != 1")
    return ue, uie


def build_ribbon(D: Algebra) -> AlgebraElement:
    f = D.field
    p = D.p
    pref = (f.one - f.i) / (f.rational(2) * f.sqrt_positive(_squarefree_part(p))
                            * f.rational(_square_part(p)))
    acc = D.zero_elt()
    for m in range(p):
        cm = pref * (f.q - f.qpow(-1)) ** m / f.quantum_factorial(m)
        for j in range(2 * p):
            coeff = cm * f.qhalfpow(-m + 2 * m * j + (j + p + 1) ** 2)
            # phi^m e^m k^(2j), reduced to normal order by the engine
            word = D.monomial(0, m, 0) * D.monomial(m, 0, 2 * j)
            acc = acc + word.scale(coeff)
    return acc


def _squarefree_part(n: int) -> int:
    m, d = n, 2
    out = 1
    while d * d <= m:
        cnt = 0
        while m % d == 0:
            m //= d
            cnt += 1
        if cnt % 2:
            out *= d
        d += 1
    return out * m


def _square_part(n: int) -> int:
    """Integer a with n = a^2 * squarefree_part(n)."""
    import math
    a2 = n // _squarefree_part(n)
    a = math.isqrt(a2)
    assert a * a == a2
    return a


def monodromy(R: TensorElement) -> TensorElement:
    return R.swap() * R


@dataclass
class RibbonData:
    """All ribbon structure of one session, U-tagged where possible."""
    D: Algebra
    U: Algebra
    R: TensorElement          # in D (x) D
    R_inv: TensorElement      # in D (x) D
    R21: TensorElement
    M: TensorElement          # in U (x) U
    M_inv: TensorElement      # in U (x) U
    u: AlgebraElement         # in U
    u_inv: AlgebraElement
    r: AlgebraElement         # in U
    r_inv: AlgebraElement
    g: AlgebraElement         # = K^(p+1)
    g_inv: AlgebraElement

    def r_power(self, k: int) -> AlgebraElement:
        out = self.U.one_elt()
        base = self.r if k >= 0 else self.r_inv
        for _ in range(abs(k)):
            out = out * base
        return out


def build_ribbon_data(p: int) -> RibbonData:
    D = build_D(p)
    U = build_U(p)
    R = build_R(D)
    R_inv = build_R_inv(D, R)
    R21 = R.swap()
    M_d = R21 * R
    assert is_in_U(M_d), "monodromy escaped U (x) U"
    M = project_D_to_U(M_d, U)
    Minv_d = R_inv * R_inv.swap()
    assert is_in_U(Minv_d)
    M_inv = project_D_to_U(Minv_d, U)
    u_d, uinv_d = build_u(D, R)
    assert is_in_U(u_d) and is_in_U(uinv_d), "canonical element escaped U"
    r_d = build_ribbon(D)
    assert is_in_U(r_d), "ribbon element escaped U"
    g_d = D.K(2 * p + 2)
    rinv_d = g_d * uinv_d
    if r_d * rinv_d != D.one_elt():
        raise ArithmeticError("ribbon inverse check failed: r * (g u^-1) != 1")
    if (project_D_to_U(u_d, U) * project_D_to_U(rinv_d, U)
            != U.K(p + 1)):
        raise ArithmeticError("balancing element is not K^(p+1)")
    return RibbonData(
        D=D, U=U, R=R, R_inv=R_inv, R21=R21, M=M, M_inv=M_inv,
        u=project_D_to_U(u_d, U), u_inv=project_D_to_U(uinv_d, U),
        r=project_D_to_U(r_d, U), r_inv=project_D_to_U(rinv_d, U),
        g=U.K(p + 1), g_inv=U.K(-(p + 1)))


# -- verification ---------------------------------------------------------------


def _tensor13(D: Algebra, t: TensorElement) -> TensorElement:
    return t.embed(3, [0, 2])


def _tensor12(D: Algebra, t: TensorElement) -> TensorElement:
    return t.embed(3, [0, 1])


def _tensor23(D: Algebra, t: TensorElement) -> TensorElement:
    return t.embed(3, [1, 2])


def _apply_delta_slot0(D: Algebra, t: TensorElement) -> TensorElement:
    """(Delta (x) id)(t) for arity-2 t."""
    out: dict = {}
    z = D.field.zero
    for (m1, m2), c in t.terms.items():
        for (a1, a2), cc in D.coproduct_mono(m1).items():
            key = (a1, a2, m2)
            out[key] = out.get(key, z) + c * cc
    return TensorElement(D, 3, {k: c for k, c in out.items() if c})


def _apply_delta_slot1(D: Algebra, t: TensorElement) -> TensorElement:
    """(id (x) Delta)(t) for arity-2 t."""
    out: dict = {}
    z = D.field.zero
    for (m1, m2), c in t.terms.items():
        for (a1, a2), cc in D.coproduct_mono(m2).items():
            key = (m1, a1, a2)
            out[key] = out.get(key, z) + c * cc
    return TensorElement(D, 3, {k: c for k, c in out.items() if c})


def verify_quasitriangular(p: int, rd: RibbonData | None = None) -> CheckReport:
    """Exact check of the quasitriangular axioms and the Yang-Baxter equation."""
    rd = rd or build_ribbon_data(p)
    D = rd.D
    rep = CheckReport(f"quasitriangular(p={p})")
    unit2 = TensorElement.unit(D, 2)
    rep.check("R R^-1 = 1", rd.R * rd.R_inv == unit2)
    rep.check("R^-1 R = 1", rd.R_inv * rd.R == unit2)

    def eps_slot(t, slot):
        fn = [None, None]
        fn[slot] = lambda m: D.field.one if m < D.kmod else D.field.zero
        return t.apply_functionals(fn)

    rep.check("(eps (x) id)(R) = 1",
              eps_slot(rd.R, 0).as_element() == D.one_elt())
    rep.check("(id (x) eps)(R) = 1",
              eps_slot(rd.R, 1).as_element() == D.one_elt())
    # intertwining: R Delta(x) = Delta^op(x) R for the generators
    for name, gen in (("e", D.E()), ("phi", D.F()), ("k", D.K())):
        dx = D.coproduct(gen)
        rep.check_zero(f"R Delta({name}) = Delta_op({name}) R",
                       rd.R * dx - dx.swap() * rd.R)
    # hexagon identities
    lhs = _apply_delta_slot0(D, rd.R)
    rhs = _tensor13(D, rd.R) * _tensor23(D, rd.R)
    rep.check_zero("(Delta (x) id)R = R13 R23", lhs - rhs)
    lhs = _apply_delta_slot1(D, rd.R)
    rhs = _tensor13(D, rd.R) * _tensor12(D, rd.R)
    rep.check_zero("(id (x) Delta)R = R13 R12", lhs - rhs)
    # Yang-Baxter
    r12, r13, r23 = (_tensor12(D, rd.R), _tensor13(D, rd.R), _tensor23(D, rd.R))
    rep.check_zero("R12 R13 R23 = R23 R13 R12",
                   r12 * (r13 * r23) - r23 * (r13 * r12))
    return rep


def verify_ribbon(p: int, rd: RibbonData | None = None) -> CheckReport:
    """Exact check of the ribbon relations and the balancing element."""
    rd = rd or build_ribbon_data(p)
    U, D = rd.U, rd.D
    rep = CheckReport(f"ribbon(p={p})")
    rep.check("r central", U.is_central(rd.r))
    rep.check("r r^-1 = 1", rd.r * rd.r_inv == U.one_elt())
    rep.check("eps(r) = 1", rd.r.counit() == U.field.one)
    rep.check("S(r) = r", rd.r.antipode() == rd.r)
    su = rd.u.antipode()
    rep.check_zero("r^2 = u S(u)", rd.r * rd.r - rd.u * su)
    rep.check_zero("Delta(r) = M^-1 (r (x) r)",
                   U.coproduct(rd.r) - rd.M_inv * rd.r.tensor(rd.r))
    rep.check_zero("Delta(u) = M^-1 (u (x) u)",
                   U.coproduct(rd.u) - rd.M_inv * rd.u.tensor(rd.u))
    rep.check("g = r^-1 u = K^(p+1)", rd.r_inv * rd.u == U.K(p + 1))
    rep.check("Delta(g) = g (x) g",
              U.coproduct(rd.g) == rd.g.tensor(rd.g))
    rep.check("eps(g) = 1", rd.g.counit() == U.field.one)
    # S^2 = Ad_u and Ad_g on the PBW basis
    for m in list(U.basis()):
        x = U.element({m: U.field.one})
        s2 = x.antipode().antipode()
        if s2 * rd.u != rd.u * x:
            rep.check(f"S^2 = Ad_u at {U.mono_str(m)}", False, "mismatch")
            break
    else:
        rep.check("S^2(x) u = u x on PBW basis", True)
    # factorizability: the monodromy coefficient matrix has full rank
    rep.check("monodromy matrix invertible (factorizability)",
              _monodromy_rank(rd) == U.dim)
    return rep


def _monodromy_rank(rd: RibbonData) -> int:
    from .linalg import Mat
    U = rd.U
    f = U.field
    z = f.zero
    rows = [[z] * U.dim for _ in range(U.dim)]
    for (m1, m2), c in rd.M.terms.items():
        rows[m1][m2] = c
    return Mat(f, rows).rank()
