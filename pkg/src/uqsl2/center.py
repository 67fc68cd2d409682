"""The center: Casimir element, block idempotents, and radical elements.

The center has dimension 3p-1, spanned by p+1 orthogonal idempotents
e_0 .. e_p and 2p-2 radical elements w_j^+/- (1 <= j <= p-1).  The labels
follow the block structure: e_j (1 <= j <= p-1) is the identity on
P(j,+) and P(p-j,-), e_p on P(p,+), e_0 on P(p,-).  The element w_j^+
acts as the nilpotent endomorphism of P(j,+) singled out by the shifted
Casimir action C - c_j with c_j = (q^j + q^-j)/(q - q^-1)^2, and as zero
everywhere else; w_j^- acts the same way on P(p-j,-).

Idempotents are found by solving for the indicator of each block
character on the simple modules and lifting with z -> 3z^2 - 2z^3 until
exactly idempotent (the center radical squares to zero, so the iteration
terminates immediately); the radical is cross-checked as the kernel of
the trace form of the regular representation of the center on itself.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cyclo import Cyclo
from .hopf import Algebra, AlgebraElement
from .linalg import Mat
from .modules import ModuleRep, ProjectiveModel, projective_model, simple
from .report import CheckReport


def casimir(U: Algebra) -> AlgebraElement:
    """C = FE + (qK + q^-1 K^-1)/(q - q^-1)^2."""
    f = U.field
    denom = ((f.q - f.qpow(-1)) ** 2).inverse()
    fe = U.F() * U.E()
    return fe + (U.K(1).scale(f.q) + U.K(-1).scale(f.qpow(-1))).scale(denom)


def casimir_constant(U: Algebra, j: int) -> Cyclo:
    """c_j = (q^j + q^-j)/(q - q^-1)^2."""
    f = U.field
    return (f.qpow(j) + f.qpow(-j)) / (f.q - f.qpow(-1)) ** 2


def element_to_vec(x: AlgebraElement) -> list:
    U = x.algebra
    z = U.field.zero
    vec = [z] * U.dim
    for m, c in x.terms.items():
        vec[m] = c
    return vec


def compute_center(U: Algebra) -> list[AlgebraElement]:
    """Exact basis of Z(U) as the kernel of the adjoint commutator maps.

    Commuting with K forces E- and F-degrees to be equal, which cuts the
    candidate space down to the 2p^2 monomials E^a F^a K^c before the
    E- and F-commutator kernels are taken.
    """
    f = U.field
    p = U.p
    candidates = [U.pack(a, a, c) for a in range(p) for c in range(U.kmod)]
    E, F = U.E(), U.F()
    rows = [[f.zero] * len(candidates) for _ in range(2 * U.dim)]
    for col, m in enumerate(candidates):
        x = U.element({m: f.one})
        for block, g in enumerate((E, F)):
            comm = g * x - x * g
            for mm, c in comm.terms.items():
                rows[block * U.dim + mm][col] = c
    basis = []
    for vec in Mat(f, rows).nullspace():
        elt = AlgebraElement(U, {m: c for m, c in zip(candidates, vec) if c})
        assert U.is_central(elt)
        basis.append(elt)
    if len(basis) != 3 * p - 1:
        raise ArithmeticError(f"center dimension {len(basis)} != 3p-1 = {3 * p - 1}")
    return basis


def _scalar_action(V: ModuleRep, z: AlgebraElement) -> Cyclo:
    mat = V.act(z)
    s = mat.rows[0][0]
    eye = Mat.identity(V.field, V.dim).scale(s)
    assert mat == eye, f"central element acts non-scalarly on {V.label}"
    return s


def central_idempotents(U: Algebra, center_basis: list[AlgebraElement],
                        simples: dict) -> dict[int, AlgebraElement]:
    """The block idempotents e_0 .. e_p, labeled by action on simples.

    Label j in 1..p: identity on X(j,+); label 0: identity on X(p,-).
    """
    f = U.field
    p = U.p
    probes = [simples[(p, -1)]] + [simples[(j, 1)] for j in range(1, p + 1)]
    char = [[_scalar_action(V, z) for z in center_basis] for V in probes]
    out = {}
    for label in range(p + 1):
        rhs = [f.one if i == label else f.zero for i in range(p + 1)]
        coords = Mat(f, char).solve(rhs)
        z = U.zero_elt()
        for c, b in zip(coords, center_basis):
            z = z + b.scale(c)
        for _ in range(4):
            if z * z == z:
                break
            z = (z * z).scale(3) - (z * z * z).scale(2)
        else:
            raise ArithmeticError(f"idempotent lifting did not converge for e_{label}")
        out[label] = z
    total = U.zero_elt()
    for label, e in out.items():
        total = total + e
        for label2, e2 in out.items():
            expect = e if label == label2 else U.zero_elt()
            if e * e2 != expect:
                raise ArithmeticError(f"e_{label} e_{label2} != delta e")
    if total != U.one_elt():
        raise ArithmeticError("idempotents do not sum to 1")
    return out


@dataclass
class CenterData:
    U: Algebra
    basis: list[AlgebraElement]          # raw kernel basis (span of the center)
    e: dict[int, AlgebraElement]          # labels 0..p
    w_plus: dict[int, AlgebraElement]     # labels 1..p-1
    w_minus: dict[int, AlgebraElement]
    casimir: AlgebraElement
    c: dict[int, Cyclo]                   # c_j for 1 <= j <= p-1
    models: dict[tuple[int, int], ProjectiveModel]

    def ordered_basis(self) -> list[tuple[str, AlgebraElement]]:
        """(name, element) in the fixed order e_0..e_p, w^+_1.., w^-_1..."""
        p = self.U.p
        out = [(f"e{j}", self.e[j]) for j in range(p + 1)]
        out += [(f"w+{j}", self.w_plus[j]) for j in range(1, p)]
        out += [(f"w-{j}", self.w_minus[j]) for j in range(1, p)]
        return out

    def element_by_name(self, name: str) -> AlgebraElement:
        for n, z in self.ordered_basis():
            if n == name:
                return z
        raise KeyError(f"unknown center basis name {name!r}")

    def expand(self, z: AlgebraElement) -> list[Cyclo]:
        """Coordinates of a central element in the ordered basis."""
        rows = [element_to_vec(elt) for _, elt in self.ordered_basis()]
        mat = Mat(self.U.field, rows).transpose()
        return mat.solve(element_to_vec(z), unique=True)


def build_center(U: Algebra, simples: dict) -> CenterData:
    f = U.field
    p = U.p
    basis = compute_center(U)
    e = central_idempotents(U, basis, simples)
    C = casimir(U)
    assert U.is_central(C)
    cjs = {j: casimir_constant(U, j) for j in range(1, p)}
    models = {}
    for sign in (1, -1):
        for j in range(1, p + 1):
            models[(j, sign)] = projective_model(U, j, sign, simples, e)
    w_plus, w_minus = _build_w(U, basis, e, C, cjs, models)
    return CenterData(U=U, basis=basis, e=e, w_plus=w_plus, w_minus=w_minus,
                      casimir=C, c=cjs, models=models)


def _build_w(U: Algebra, center_basis, e, C, cjs, models):
    """Solve for w_j^+/- against their prescribed action on all models.

    On the model of P(j,+) the target of w_j^+ is the nilpotent part of
    the Casimir action, (C - c_j) restricted to the image; w_j^- has the
    matching target on P(p-j,-) (where C - c_j is again the nilpotent
    part, since c_{p-j} = -c_j); both act as zero on every other model.
    """
    f = U.field
    p = U.p
    model_list = list(models.values())
    act_rows = []
    for z in center_basis:
        row = []
        for mdl in model_list:
            mat = mdl.act(z)
            row.extend(x for r in mat.rows for x in r)
        act_rows.append(row)
    A = Mat(f, act_rows).transpose()
    w_plus, w_minus = {}, {}
    for j in range(1, p):
        for sign in (1, -1):
            target_model = (j, 1) if sign == 1 else (p - j, -1)
            rhs = []
            for mdl in model_list:
                if (mdl.j, mdl.sign) == target_model:
                    nilp = mdl.act(C) - mdl.projector.scale(cjs[j])
                    assert (nilp @ nilp).is_zero(), \
                        f"(C - c_{j})^2 != 0 on {mdl.label}"
                    rhs.extend(x for r in nilp.rows for x in r)
                else:
                    rhs.extend(x for r in Mat.zeros(f, mdl.ambient.dim,
                                                    mdl.ambient.dim).rows for x in r)
            coords = A.solve(rhs, unique=True)
            z = U.zero_elt()
            for c, b in zip(coords, center_basis):
                z = z + b.scale(c)
            (w_plus if sign == 1 else w_minus)[j] = z
    return w_plus, w_minus


def radical_by_trace_form(U: Algebra, center: CenterData) -> list[list[Cyclo]]:
    """Kernel of (a,b) -> trace(L_ab on Z): coordinates in the ordered basis."""
    f = U.field
    named = center.ordered_basis()
    n = len(named)
    rows = [element_to_vec(z) for _, z in named]
    coord_mat = Mat(f, rows).transpose()
    # structure constants: (z_i z_j) in the ordered basis
    mult = {}
    for i in range(n):
        for j in range(n):
            prod = named[i][1] * named[j][1]
            mult[(i, j)] = coord_mat.solve(element_to_vec(prod), unique=True)
    gram = [[f.zero] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            # trace of L_{z_i z_j}: sum_k coefficient of z_k in (z_i z_j) z_k
            tr = f.zero
            ab = mult[(i, j)]
            for k in range(n):
                for l, c in enumerate(ab):
                    if c:
                        tr = tr + c * mult[(l, k)][k]
            gram[i][j] = tr
    return Mat(f, gram).nullspace()


def verify_center(center: CenterData) -> CheckReport:
    """All center relations, Prop-4.4.4-style action table, and span checks."""
    U = center.U
    f = U.field
    p = U.p
    rep = CheckReport(f"center(p={p})")
    rep.check("dim Z = 3p-1", len(center.basis) == 3 * p - 1)
    e, wp, wm = center.e, center.w_plus, center.w_minus
    ok = all((e[s] * e[t]) == (e[s] if s == t else U.zero_elt())
             for s in e for t in e)
    rep.check("e_s e_t = delta_{s,t} e_s", ok)
    ok = True
    for s in e:
        for t in range(1, p):
            for w, home in ((wp[t], t), (wm[t], t)):
                expect = w if s == home else U.zero_elt()
                ok = ok and (e[s] * w == expect)
    rep.check("e_s w_t = delta_{s,t} w_t", ok)
    ok = all(not (a * b)
             for ws in (wp, wm) for wt in (wp, wm)
             for a in ws.values() for b in wt.values())
    rep.check("w w = 0 (all signs)", ok)
    total = U.zero_elt()
    for z in e.values():
        total = total + z
    rep.check("sum e_j = 1", total == U.one_elt())
    rep.check("C central", U.is_central(center.casimir))
    # nilpotency of the shifted Casimir inside each block
    ok = True
    for j in range(1, p):
        n = e[j] * (center.casimir - U.one_elt().scale(center.c[j]))
        ok = ok and not (n * n)
    rep.check("(e_j (C - c_j))^2 = 0", ok)
    # action table on the projective models
    table_ok = []
    for (jj, sign), mdl in center.models.items():
        eye = mdl.projector
        zero = Mat.zeros(f, mdl.ambient.dim, mdl.ambient.dim)
        home = (jj if sign == 1 else p - jj) if jj != p else (p if sign == 1 else 0)
        for label, z in e.items():
            expect = eye if label == home else zero
            table_ok.append(mdl.act(z) == expect)
        for j in range(1, p):
            nilp = mdl.act(center.casimir) - eye.scale(center.c[j])
            expect_p = nilp if (sign == 1 and jj == j) else zero
            expect_m = nilp if (sign == -1 and jj == p - j) else zero
            table_ok.append(mdl.act(wp[j]) == expect_p)
            table_ok.append(mdl.act(wm[j]) == expect_m)
    rep.check("action table on projective models", all(table_ok),
              f"{table_ok.count(False)} entries differ")
    # span stability: products of basis elements stay in the span
    from .linalg import Echelon
    ech = Echelon(f, U.dim)
    for _, z in center.ordered_basis():
        ech.add(element_to_vec(z))
    ok = all(ech.contains(element_to_vec(a * b))
             for _, a in center.ordered_basis() for _, b in center.ordered_basis())
    rep.check("Z(U) closed under products", ok)
    # radical via the trace form matches span{w}
    rad = radical_by_trace_form(U, center)
    rep.check("trace-form radical has dim 2p-2", len(rad) == 2 * p - 2)
    wech = Echelon(f, 3 * p - 1)
    named = center.ordered_basis()
    for i, (name, _) in enumerate(named):
        if name.startswith("w"):
            vec = [f.zero] * len(named)
            vec[i] = f.one
            wech.add(vec)
    rep.check("trace-form radical = span{w_j}",
              all(wech.contains(v) for v in rad))
    return rep


def verify_casimir_coproduct(U: Algebra) -> CheckReport:
    """Delta(C) against its five-term expansion."""
    f = U.field
    rep = CheckReport(f"casimir-coproduct(p={U.p})")
    C = casimir(U)
    denom = ((f.q - f.qpow(-1)) ** 2).inverse()
    kinv_fe = U.K(-1).tensor(U.F() * U.E())
    kinve_fk = (U.K(-1) * U.E()).tensor(U.F() * U.K())
    f_e = U.F().tensor(U.E())
    fe_k = (U.F() * U.E()).tensor(U.K())
    kk = U.K(1).tensor(U.K(1)).scale(f.q) + U.K(-1).tensor(U.K(-1)).scale(f.qpow(-1))
    expect = kinv_fe + kinve_fk + f_e + fe_k + kk.scale(denom)
    rep.check_zero("Delta(C) five-term expansion", U.coproduct(C) - expect)
    for name, g in (("E", U.E()), ("F", U.F()), ("K", U.K())):
        rep.check_zero(f"[C, {name}] = 0", C * g - g * C)
    return rep
