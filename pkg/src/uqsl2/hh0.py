"""Zeroth Hochschild homology: trace classes of the restricted quantum group.

HH_0(U) = U/[U,U] has dimension 3p-1.  A basis of classes is given by

* [f_k^+/-] for 1 <= k <= p, where f_k^+/- is a primitive (non-central)
  idempotent projecting onto one copy of P(k,+/-) inside the regular
  representation, and
* [h_j] = [w_j^+ f_j^+] for 1 <= j <= p-1.

A complete orthogonal set of primitive idempotents is produced from the
simultaneous matrix representation on all simples (whose kernel is the
Jacobson radical): solve for preimages of diagonal matrix units, then
lift with x -> 3x^2 - 2x^3 inside shrinking corner algebras so that
orthogonality is automatic.  Labels and multiplicities are certified by
rank counts: f has rank one on exactly one simple, and the number of
idempotents over label (k, +/-) equals k.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cyclo import Cyclo
from .center import CenterData, element_to_vec
from .hopf import Algebra, AlgebraElement
from .linalg import Echelon, Mat
from .report import CheckReport


def commutator_subspace(U: Algebra) -> Echelon:
    """Exact span of {b1 b2 - b2 b1} over PBW basis pairs."""
    f = U.field
    ech = Echelon(f, U.dim)
    target = U.dim - (3 * U.p - 1)
    for m1 in U.basis():
        for m2 in range(m1 + 1, U.dim):
            prod12 = U.mono_mul(m1, m2)
            prod21 = U.mono_mul(m2, m1)
            vec = [f.zero] * U.dim
            changed = False
            for m, c in prod12.items():
                vec[m] = vec[m] + c
                changed = True
            for m, c in prod21.items():
                vec[m] = vec[m] - c
                changed = True
            if changed and any(vec):
                ech.add(vec)
    if ech.dim != target:
        raise ArithmeticError(
            f"commutator subspace has dim {ech.dim}, expected {target}")
    return ech


def primitive_idempotents(U: Algebra, simples: dict) -> list[tuple[AlgebraElement, tuple[int, int]]]:
    """Complete orthogonal primitive idempotents with labels (k, sign).

    Deterministic order: blocks (1,+) .. (p,+), (1,-) .. (p,-), and inside
    the block of X(k, sign) the k diagonal positions in ascending order.
    """
    f = U.field
    block_order = [(k, 1) for k in range(1, U.p + 1)] + \
                  [(k, -1) for k in range(1, U.p + 1)]
    # Psi: U -> direct sum of matrix blocks over the simples.
    rows = []
    offsets = {}
    off = 0
    for lab in block_order:
        offsets[lab] = off
        off += simples[lab].dim ** 2
    total = off
    mats = {lab: [simples[lab].act(U.element({m: f.one})) for m in U.basis()]
            for lab in block_order}
    rows = [[f.zero] * U.dim for _ in range(total)]
    for col in range(U.dim):
        for lab in block_order:
            s = simples[lab].dim
            mat = mats[lab][col]
            base = offsets[lab]
            for i in range(s):
                for j in range(s):
                    rows[base + i * s + j][col] = mat.rows[i][j]
    psi = Mat(f, rows)
    out = []
    corner = U.one_elt()
    for lab in block_order:
        s = simples[lab].dim
        for i in range(s):
            rhs = [f.zero] * total
            rhs[offsets[lab] + i * s + i] = f.one
            coords = psi.solve(rhs)
            z = AlgebraElement(U, {m: c for m, c in zip(U.basis(), coords) if c})
            z = corner * z * corner
            for _ in range(12):
                if z * z == z:
                    break
                z = (z * z).scale(3) - (z * z * z).scale(2)
            else:
                raise ArithmeticError(f"idempotent lifting stalled at {lab}[{i}]")
            for prev, _ in out:
                if (prev * z) or (z * prev):
                    raise ArithmeticError("lifted idempotents are not orthogonal")
            out.append((z, lab))
            corner = corner - z
    total_sum = U.zero_elt()
    for z, _ in out:
        total_sum = total_sum + z
    if total_sum != U.one_elt():
        raise ArithmeticError("primitive idempotents do not sum to 1")
    # label certification by ranks on the simples
    for z, lab in out:
        for lab2 in block_order:
            rank = simples[lab2].act(z).rank()
            if rank != (1 if lab2 == lab else 0):
                raise ArithmeticError(f"idempotent labeled {lab} has rank {rank} on {lab2}")
    return out


@dataclass
class HH0Data:
    U: Algebra
    commutators: Echelon
    idempotents: list[tuple[AlgebraElement, tuple[int, int]]]
    f_reps: dict[tuple[int, int], AlgebraElement]   # one f per label (k, sign)
    h_reps: dict[int, AlgebraElement]               # h_j = w_j^+ f_j^+
    _coord_mat: Mat                                  # reduced reps, for class_of

    def basis_names(self) -> list[str]:
        p = self.U.p
        return [f"h+{k}" for k in range(1, p + 1)] + \
               [f"h-{k}" for k in range(1, p + 1)] + \
               [f"h{j}" for j in range(1, p)]

    def representative(self, name: str) -> AlgebraElement:
        p = self.U.p
        if name.startswith("h+"):
            return self.f_reps[(int(name[2:]), 1)]
        if name.startswith("h-"):
            return self.f_reps[(int(name[2:]), -1)]
        if name.startswith("h"):
            return self.h_reps[int(name[1:])]
        raise KeyError(f"unknown trace class name {name!r}")

    def class_of(self, x: AlgebraElement) -> list[Cyclo]:
        """Coordinates of [x] in the ordered basis [f_k^+], [f_k^-], [h_j]."""
        assert x.algebra is self.U
        residual = self.commutators.reduce(element_to_vec(x))
        return self._coord_mat.solve(residual, unique=True)


def build_hh0(U: Algebra, simples: dict, center: CenterData) -> HH0Data:
    comms = commutator_subspace(U)
    idems = primitive_idempotents(U, simples)
    f_reps = {}
    for z, lab in idems:
        if lab not in f_reps:
            f_reps[lab] = z
    h_reps = {j: center.w_plus[j] * f_reps[(j, 1)] for j in range(1, U.p)}
    ordered = [f_reps[(k, 1)] for k in range(1, U.p + 1)] + \
              [f_reps[(k, -1)] for k in range(1, U.p + 1)] + \
              [h_reps[j] for j in range(1, U.p)]
    cols = [comms.reduce(element_to_vec(z)) for z in ordered]
    coord_mat = Mat(U.field, cols).transpose()
    if coord_mat.rank() != 3 * U.p - 1:
        raise ArithmeticError("trace classes are linearly dependent modulo [U,U]")
    return HH0Data(U=U, commutators=comms, idempotents=idems,
                   f_reps=f_reps, h_reps=h_reps, _coord_mat=coord_mat)


def verify_hh0(hh0: HH0Data, center: CenterData, seed: int = 5) -> CheckReport:
    import random

    U = hh0.U
    f = U.field
    p = U.p
    rep = CheckReport(f"hh0(p={p})")
    rep.check("codim [U,U] = 3p-1",
              U.dim - hh0.commutators.dim == 3 * p - 1)
    efc = U.E() * U.F() - U.F() * U.E()
    rep.check("EF - FE in [U,U]",
              hh0.commutators.contains(element_to_vec(efc)))
    rep.check("1 not in [U,U]",
              not hh0.commutators.contains(element_to_vec(U.one_elt())))
    rng = random.Random(seed)
    ok = True
    for _ in range(8):
        x = U.element({rng.randrange(U.dim): f.one})
        y = U.element({rng.randrange(U.dim): f.one})
        if any(hh0.class_of(x * y - y * x)):
            ok = False
    rep.check("class_of kills commutators", ok)
    # center action is well-defined on classes
    ok = True
    for _ in range(6):
        x = U.element({rng.randrange(U.dim): f.one})
        y = U.element({rng.randrange(U.dim): f.one})
        z = center.e[rng.randrange(p + 1)]
        if any(hh0.class_of(z * (x * y - y * x))):
            ok = False
    rep.check("[z (xy - yx)] = 0 for central z", ok)
    # multiplicities: k idempotents with label (k, sign)
    from collections import Counter
    counts = Counter(lab for _, lab in hh0.idempotents)
    rep.check("label multiplicities match regular decomposition",
              all(counts[(k, sg)] == k for k in range(1, p + 1) for sg in (1, -1)))
    # [w_j^+ f_j^+] = [w_j^- f_{p-j}^-]
    ok = True
    for j in range(1, p):
        a = center.w_plus[j] * hh0.f_reps[(j, 1)]
        b = center.w_minus[j] * hh0.f_reps[(p - j, -1)]
        if any(c1 != c2 for c1, c2 in zip(hh0.class_of(a), hh0.class_of(b))):
            ok = False
    rep.check("[w_j^+ f_j^+] = [w_j^- f_{p-j}^-]", ok)
    # class of 1 = sum_k k ([f_k^+] + [f_k^-])
    coords = hh0.class_of(U.one_elt())
    expect = [f.rational(k) for k in range(1, p + 1)] * 2 + [f.zero] * (p - 1)
    rep.check("[1] = sum k ([f_k^+] + [f_k^-])", coords == expect)
    # e_j acts on classes like the sum of its block idempotents: check on traces
    ok = True
    for k in range(1, p + 1):
        for sg in (1, -1):
            fk = hh0.f_reps[(k, sg)]
            home = (k if sg == 1 else p - k) if k != p else (p if sg == 1 else 0)
            for label, e in center.e.items():
                cls = hh0.class_of(e * fk)
                expect_cls = hh0.class_of(fk) if label == home else [f.zero] * (3 * p - 1)
                if cls != expect_cls:
                    ok = False
    rep.check("e_j [f_k] = [f_k] on its own block, else 0", ok)
    return rep
