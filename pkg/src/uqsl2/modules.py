"""Exact matrix models of modules over the restricted quantum group.

Simple modules are built from highest-weight data: X(s, sign) has basis
v_0 .. v_{s-1} with

    K v_n = sign * q^(s-1-2n) v_n,
    F v_n = v_{n+1}            (v_s = 0),
    E v_n = sign * [n][s-n] v_{n-1}   (E v_0 = 0).

All defining relations are re-verified on construction, so a transcription
slip in the action formulas aborts immediately.  Tensor products act
through the coproduct.  Quantum traces are matrix traces weighted by the
pivot K^(p+1) (right) or its inverse (left); partial versions weight only
the traced factor.

Indecomposable projectives P(j, sign) with j < p are realized as the image
of a central idempotent inside X(p, sign) (x) X(2,+)^((p-j)); P(p, sign)
is the simple X(p, sign) itself.
"""

from __future__ import annotations

from .cyclo import Cyclo
from .hopf import Algebra, AlgebraElement
from .linalg import Mat


class ModuleRep:
    """A finite-dimensional module given by exact generator matrices."""

    def __init__(self, U: Algebra, matE: Mat, matF: Mat, matK: Mat,
                 matKinv: Mat, label: str, check: bool = True):
        self.algebra = U
        self.field = U.field
        self.dim = matE.nrows
        self.matE, self.matF, self.matK, self.matKinv = matE, matF, matK, matKinv
        self.label = label
        # K is diagonal in every basis we ever construct.
        assert all(not matK.rows[i][j] for i in range(self.dim)
                   for j in range(self.dim) if i != j), "non-diagonal K"
        self._kdiag = [matK.rows[i][i] for i in range(self.dim)]
        self._ef_pows: dict[tuple[int, int], Mat] = {}
        if check:
            self.verify_relations()

    # -- structure checks --------------------------------------------------

    def verify_relations(self):
        U, f = self.algebra, self.field
        p = U.p
        eye = Mat.identity(f, self.dim)
        assert (self.matK @ self.matKinv) == eye, f"{self.label}: K K^-1 != 1"
        kp = eye
        for _ in range(U.kmod):
            kp = kp @ self.matK
        assert kp == eye, f"{self.label}: K^{U.kmod} != 1"
        ep = eye
        fp = eye
        for _ in range(p):
            ep = ep @ self.matE
            fp = fp @ self.matF
        assert ep.is_zero(), f"{self.label}: E^p != 0"
        assert fp.is_zero(), f"{self.label}: F^p != 0"
        qc = f.qpow(U.weight)
        assert (self.matK @ self.matE) == (self.matE @ self.matK).scale(qc), \
            f"{self.label}: K E K^-1 != q^{U.weight} E"
        assert (self.matK @ self.matF) == (self.matF @ self.matK).scale(qc.inverse()), \
            f"{self.label}: K F K^-1 != q^-{U.weight} F"
        comm = self.matE @ self.matF - self.matF @ self.matE
        he = U.hexp
        kh = self.mat_kpow(he) - self.mat_kpow(-he)
        rhs = kh.scale((f.q - f.qpow(-1)).inverse())
        assert comm == rhs, f"{self.label}: [E,F] relation fails"

    # -- actions -------------------------------------------------------------

    def mat_kpow(self, t: int) -> Mat:
        return Mat.diagonal(self.field, [d ** (t % self.algebra.kmod)
                                         for d in self._kdiag])

    def g_diag(self, inverse: bool = False) -> list[Cyclo]:
        """Diagonal of the pivot g = K^(p+1) (or its inverse)."""
        t = self.algebra.p + 1
        if inverse:
            t = -t
        t %= self.algebra.kmod
        return [d ** t for d in self._kdiag]

    def _ef(self, a: int, b: int) -> Mat:
        got = self._ef_pows.get((a, b))
        if got is None:
            if a == 0 and b == 0:
                got = Mat.identity(self.field, self.dim)
            elif a > 0:
                got = self.matE @ self._ef(a - 1, b)
            else:
                got = self._ef(0, b - 1) @ self.matF
            self._ef_pows[(a, b)] = got
        return got

    def act(self, x: AlgebraElement) -> Mat:
        """The matrix of x in this module, by PBW substitution."""
        assert x.algebra is self.algebra
        f = self.field
        U = self.algebra
        z = f.zero
        groups: dict[tuple[int, int], list] = {}
        for m, c in x.terms.items():
            a, b, cc = U.unpack(m)
            groups.setdefault((a, b), []).append((cc, c))
        out = Mat.zeros(f, self.dim, self.dim)
        for (a, b), parts in groups.items():
            dvec = [z] * self.dim
            for cc, coeff in parts:
                for i, d in enumerate(self._kdiag):
                    dvec[i] = dvec[i] + coeff * d ** cc
            ef = self._ef(a, b)
            for i in range(self.dim):
                orow = out.rows[i]
                erow = ef.rows[i]
                for jj in range(self.dim):
                    if erow[jj] and dvec[jj]:
                        orow[jj] = orow[jj] + erow[jj] * dvec[jj]
        return out

    def tensor(self, other: "ModuleRep", check: bool = True) -> "ModuleRep":
        """Tensor product module, acting through the coproduct."""
        U, f = self.algebra, self.field
        eyeV = Mat.identity(f, self.dim)
        eyeW = Mat.identity(f, other.dim)
        he = U.hexp
        matE = eyeV.kron(other.matE) + self.matE.kron(other.mat_kpow(he))
        matF = self.mat_kpow(-he).kron(other.matF) + self.matF.kron(eyeW)
        matK = self.matK.kron(other.matK)
        matKinv = self.matKinv.kron(other.matKinv)
        return ModuleRep(U, matE, matF, matK, matKinv,
                         f"({self.label})(x)({other.label})", check=check)

    def is_equivariant(self, fmat: Mat) -> bool:
        """Sampling check: f commutes with the generator actions."""
        for g in (self.matE, self.matF, self.matK):
            if (g @ fmat) != (fmat @ g):
                return False
        return True


def simple(U: Algebra, s: int, sign: int, check: bool = True) -> ModuleRep:
    """The s-dimensional simple module with highest weight sign * q^(s-1)."""
    assert U.kind == "U"
    if not 1 <= s <= U.p:
        raise ValueError(f"simple module label s={s} out of range 1..{U.p}")
    assert sign in (1, -1)
    f = U.field
    z = f.zero
    sgn = f.one if sign == 1 else -f.one
    matE = [[z] * s for _ in range(s)]
    matF = [[z] * s for _ in range(s)]
    kdiag = []
    for n in range(s):
        kdiag.append(sgn * f.qpow(s - 1 - 2 * n))
        if n + 1 < s:
            matF[n + 1][n] = f.one
        if n >= 1:
            matE[n - 1][n] = sgn * f.quantum_integer(n) * f.quantum_integer(s - n)
    kinv = [d.inverse() for d in kdiag]
    name = f"X({s},{'+' if sign == 1 else '-'})"
    return ModuleRep(U, Mat(f, matE), Mat(f, matF),
                     Mat.diagonal(f, kdiag), Mat.diagonal(f, kinv), name, check=check)


# -- quantum traces ------------------------------------------------------------


def qtrace_right(fmat: Mat, V: ModuleRep) -> Cyclo:
    """tr(g . f) with the pivot g = K^(p+1)."""
    out = V.field.zero
    for i, d in enumerate(V.g_diag()):
        out = out + d * fmat.rows[i][i]
    return out


def qtrace_left(fmat: Mat, V: ModuleRep) -> Cyclo:
    out = V.field.zero
    for i, d in enumerate(V.g_diag(inverse=True)):
        out = out + d * fmat.rows[i][i]
    return out


def partial_qtrace_right(fmat: Mat, V: ModuleRep, W: ModuleRep) -> Mat:
    """Partial trace over W of f on V (x) W, weighted by g on W."""
    f = V.field
    gw = W.g_diag()
    dV, dW = V.dim, W.dim
    out = Mat.zeros(f, dV, dV)
    for i in range(dV):
        for i2 in range(dV):
            acc = f.zero
            for j in range(dW):
                v = fmat.rows[i * dW + j][i2 * dW + j]
                if v:
                    acc = acc + gw[j] * v
            out.rows[i][i2] = acc
    return out


def partial_qtrace_left(fmat: Mat, V: ModuleRep, W: ModuleRep) -> Mat:
    """Partial trace over V of f on V (x) W, weighted by g^-1 on V."""
    f = V.field
    gv = V.g_diag(inverse=True)
    dV, dW = V.dim, W.dim
    out = Mat.zeros(f, dW, dW)
    for j in range(dW):
        for j2 in range(dW):
            acc = f.zero
            for i in range(dV):
                v = fmat.rows[i * dW + j][i * dW + j2]
                if v:
                    acc = acc + gv[i] * v
            out.rows[j][j2] = acc
    return out


class ProjectiveModel:
    """P(j, sign) realized as the image of a central idempotent.

    For j = p the model is the simple X(p, sign) with identity projector.
    For j < p the ambient is X(p, sign) (x) X(2,+)^((p-j)) and the
    projector is the action of the block idempotent that is the identity
    on P(j, sign); its rank must be exactly 2p (multiplicity one).
    """

    def __init__(self, j: int, sign: int, ambient: ModuleRep, projector: Mat,
                 rank: int):
        self.j = j
        self.sign = sign
        self.ambient = ambient
        self.projector = projector
        self.rank = rank
        self.field = ambient.field

    @property
    def label(self) -> str:
        return f"P({self.j},{'+' if self.sign == 1 else '-'})"

    def act(self, x: AlgebraElement) -> Mat:
        """Action of x on the model, as an ambient matrix supported on im P."""
        return self.ambient.act(x) @ self.projector

    def trace_left(self, mat: Mat) -> Cyclo:
        """Left quantum trace over the model of an ambient matrix P-supported."""
        return qtrace_left(mat @ self.projector, self.ambient)

    def trace_right(self, mat: Mat) -> Cyclo:
        return qtrace_right(mat @ self.projector, self.ambient)


def projective_model(U: Algebra, j: int, sign: int, simples: dict,
                     idempotents: dict) -> ProjectiveModel:
    """Build the model of P(j, sign); idempotents maps label -> element."""
    p = U.p
    assert 1 <= j <= p
    if j == p:
        V = simples[(p, sign)]
        return ProjectiveModel(p, sign, V, Mat.identity(U.field, V.dim), V.dim)
    amb = simples[(p, sign)]
    x2 = simples[(2, 1)]
    for step in range(p - j):
        amb = amb.tensor(x2, check=(step == p - j - 1))
    e_label = j if sign == 1 else p - j
    proj = amb.act(idempotents[e_label])
    assert (proj @ proj) == proj, "projector is not idempotent"
    rank = proj.rank()
    if rank != 2 * p:
        raise ArithmeticError(
            f"projector rank {rank} != 2p = {2 * p} on {amb.label}: "
            "center labeling inconsistent")
    return ProjectiveModel(j, sign, amb, proj, rank)
