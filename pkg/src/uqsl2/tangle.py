"""Braid-closure presentations and the universal tangle invariant.

A link (or a surgered 3-manifold with a link inside) is presented as the
closure of a braid on n strands: `word` lists signed generator indices
(+i for a right-handed crossing of columns i, i+1), and each declared
component names the strands of one cycle of the closure permutation, a
designated cut strand, a role ("plus" / "surgery" / "minus"), an integer
framing, and optionally a color.

The universal invariant of the string link obtained by cutting every
component open at its cut strand is computed by sweeping the braid from
bottom to top while maintaining a sparse tensor state over the strand
slots.  A positive crossing left-multiplies the two involved slots with
the halves of the R-matrix, a negative one with the halves of R^-1; the
side receiving the first half is a session convention constant ("A" or
"B") fixed by requiring that the cut-open pure braid sigma_1^2 evaluate
to the monodromy.  Each traversed closure arc contributes the grouplike
pivot bead; the evaluation/coevaluation arcs themselves are beadless.
Framing mismatches between the diagram writhe and the declared framings
are corrected by central ribbon beads (one r^-1 per extra positive
twist).  The result is converted to the subalgebra with even k-exponents
and certified slotwise, together with ad-invariance under the iterated
coproduct of the generators.
"""

from __future__ import annotations

import hashlib
import json
import math
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .cyclo import Cyclo
from .hopf import AlgebraElement, TensorElement, is_in_U, project_D_to_U
from .modules import ModuleRep
from .report import CheckReport

ROLES = ("plus", "surgery", "minus")


@dataclass
class Component:
    strands: list[int]           # 1-based strand indices of one closure cycle
    cut: int                     # designated cut strand
    role: str = "minus"
    framing: int = 0
    color: object = None

    def to_json(self):
        out = {"strands": sorted(self.strands), "cut": self.cut,
               "role": self.role, "framing": self.framing}
        if self.color is not None:
            out["color"] = self.color
        return out


@dataclass
class ClosurePresentation:
    p: int
    strands: int
    word: list[int]
    components: list[Component]

    def to_json(self):
        return {"p": self.p, "strands": self.strands, "word": list(self.word),
                "components": [c.to_json() for c in self.components]}

    def canonical_hash(self) -> str:
        blob = json.dumps(self.to_json(), sort_keys=True, default=repr)
        return hashlib.sha256(blob.encode()).hexdigest()[:16]

    def geometry_hash(self) -> str:
        """Hash of the uncolored geometry (colors do not enter J_T)."""
        data = self.to_json()
        for comp in data["components"]:
            comp.pop("color", None)
        blob = json.dumps(data, sort_keys=True, default=repr)
        return hashlib.sha256(blob.encode()).hexdigest()[:16]

    @staticmethod
    def from_json(data: dict) -> "ClosurePresentation":
        for key in ("p", "strands", "word", "components"):
            if key not in data:
                raise ValueError(f"presentation is missing field {key!r}")
        comps = []
        for i, c in enumerate(data["components"]):
            if "strands" not in c or "cut" not in c:
                raise ValueError(f"component {i}: needs 'strands' and 'cut'")
            role = c.get("role", "minus")
            if role not in ROLES:
                raise ValueError(f"component {i}: unknown role {role!r}")
            comps.append(Component(strands=list(c["strands"]), cut=c["cut"],
                                   role=role, framing=c.get("framing", 0),
                                   color=c.get("color")))
        return ClosurePresentation(p=data["p"], strands=data["strands"],
                                   word=list(data["word"]), components=comps)


@dataclass
class ValidatedPresentation:
    pres: ClosurePresentation
    perm: dict[int, int]                  # strand -> strand it feeds into
    cycles: list[list[int]]               # per component, traversal order from cut
    writhes: list[int]                    # per component, diagram self-writhe
    linking: list[list[Fraction]]         # full linking matrix, framings on diagonal
    surgery_indices: list[int]

    @property
    def m(self) -> int:
        return len(self.pres.components)


def validate(pres: ClosurePresentation) -> ValidatedPresentation:
    n = pres.strands
    if n < 0:
        raise ValueError("strand count must be nonnegative")
    for letter in pres.word:
        if letter == 0 or abs(letter) > n - 1:
            raise ValueError(f"braid letter {letter} out of range for {n} strands")
    declared = sorted(s for c in pres.components for s in c.strands)
    if declared != list(range(1, n + 1)):
        raise ValueError("components do not partition the strands")
    # sweep for the closure permutation and crossing bookkeeping
    pos = list(range(n + 1))  # pos[i] = strand currently at column i (1-based)
    strand_comp = {}
    for ci, c in enumerate(pres.components):
        if c.cut not in c.strands:
            raise ValueError(f"component {ci}: cut strand not a member")
        for s in c.strands:
            strand_comp[s] = ci
    m = len(pres.components)
    writhes = [0] * m
    cross = [[0] * m for _ in range(m)]
    for letter in pres.word:
        i = abs(letter)
        sa, sb = pos[i], pos[i + 1]
        ca, cb = strand_comp[sa], strand_comp[sb]
        sgn = 1 if letter > 0 else -1
        if ca == cb:
            writhes[ca] += sgn
        else:
            cross[ca][cb] += sgn
            cross[cb][ca] += sgn
        pos[i], pos[i + 1] = pos[i + 1], pos[i]
    perm = {pos[t]: t for t in range(1, n + 1)}
    # declared components must be the cycles of the closure permutation
    cycles = []
    for ci, c in enumerate(pres.components):
        cycle = [c.cut]
        while True:
            nxt = perm[cycle[-1]]
            if nxt == c.cut:
                break
            cycle.append(nxt)
            if len(cycle) > n:
                raise ValueError("closure permutation has a malformed cycle")
        if sorted(cycle) != sorted(c.strands):
            raise ValueError(
                f"component {ci}: declared strands {sorted(c.strands)} are not "
                f"the closure cycle {sorted(cycle)} through the cut strand")
        cycles.append(cycle)
    linking = [[Fraction(0)] * m for _ in range(m)]
    for a in range(m):
        for b in range(m):
            if a == b:
                linking[a][a] = Fraction(pres.components[a].framing)
            else:
                lk = Fraction(cross[a][b], 2)
                if lk.denominator != 1:
                    raise ValueError("odd crossing count between two components")
                linking[a][b] = lk
    surgery = [i for i, c in enumerate(pres.components) if c.role == "surgery"]
    return ValidatedPresentation(pres=pres, perm=perm, cycles=cycles,
                                 writhes=writhes, linking=linking,
                                 surgery_indices=surgery)


def linking_matrix(vp: ValidatedPresentation) -> list[list[Fraction]]:
    return [row[:] for row in vp.linking]


def signature(sym: list[list[Fraction]]) -> int:
    """Signature of an exact symmetric matrix by congruence diagonalization."""
    n = len(sym)
    a = [[Fraction(x) for x in row] for row in sym]
    sig = 0
    rows = list(range(n))
    while rows:
        # find a nonzero diagonal entry among the remaining rows
        piv = next((i for i in rows if a[i][i] != 0), None)
        if piv is None:
            off = next(((i, j) for i in rows for j in rows if a[i][j] != 0), None)
            if off is None:
                break  # remaining block is zero
            i, j = off
            # basis change e_i <- e_i + e_j makes the diagonal nonzero
            for k in range(n):
                a[i][k] += a[j][k]
            for k in range(n):
                a[k][i] += a[k][j]
            continue
        d = a[piv][piv]
        sig += 1 if d > 0 else -1
        rows.remove(piv)
        for i in rows:
            f = a[i][piv] / d
            if f:
                for k in range(n):
                    a[i][k] -= f * a[piv][k]
                for k in range(n):
                    a[k][i] -= f * a[k][piv]
    return sig


def surgery_signature(vp: ValidatedPresentation) -> int:
    idx = vp.surgery_indices
    block = [[vp.linking[i][j] for j in idx] for i in idx]
    return signature(block)


@dataclass
class UniversalInvariant:
    value: TensorElement              # in U^(x)m, slots in geometric order
    slot_components: list[int]        # slot -> index into the declared components
    presentation_hash: str
    convention: str
    telemetry: dict = dc_field(default_factory=dict)

    def slot_of_component(self, ci: int) -> int:
        return self.slot_components.index(ci)


ROLE_RANK = {"plus": 0, "surgery": 1, "minus": 2}


def canonicalize_cuts(pres: ClosurePresentation) -> tuple[ClosurePresentation, list[int]]:
    """Bring the presentation to canonical cut form by a Markov conjugation.

    Components are put in the geometric order plus, surgery, minus
    (stably within each role) and the braid is conjugated so that the
    i-th component's cut strand occupies column i+1.  Opening a closure
    arc is a free move only at the leftmost columns (a cut further right
    would drag its endpoints across the closure arcs to its left), and
    the slot evaluations that close a strand must act on the leftmost
    open strand; the canonical form makes both true at once.  Returns
    the new presentation and the list mapping slots to declared
    component indices.  Writhes and linking numbers are preserved since
    the conjugating crossings cancel in signed pairs.
    """
    n = pres.strands
    order = sorted(range(len(pres.components)),
                   key=lambda ci: ROLE_RANK[pres.components[ci].role])
    cuts = [pres.components[ci].cut for ci in order]
    new_label = {cut: i + 1 for i, cut in enumerate(cuts)}
    rest = [s for s in range(1, n + 1) if s not in new_label]
    for off, s in enumerate(rest):
        new_label[s] = len(cuts) + 1 + off
    if all(new_label[s] == s for s in range(1, n + 1)):
        comps = [pres.components[ci] for ci in order]
        return (ClosurePresentation(p=pres.p, strands=n, word=list(pres.word),
                                    components=comps), order)
    # A sorting word whose sweep carries bottom column s to column
    # new_label[s]; its reversed inverse as a prefix then makes the new
    # strand x enter the original braid at the old column of label x.
    arrangement = list(range(n + 1))      # arrangement[col] = strand
    word = []
    for col in range(1, n + 1):
        want = next(s for s in range(1, n + 1) if new_label[s] == col)
        j = arrangement.index(want)
        while j > col:
            word.append(j - 1)
            arrangement[j - 1], arrangement[j] = arrangement[j], arrangement[j - 1]
            j -= 1
    pre = [-l for l in reversed(word)]
    post = list(word)

    def relabel(s: int) -> int:
        return new_label[s]

    comps = [Component(strands=[relabel(s) for s in pres.components[ci].strands],
                       cut=relabel(pres.components[ci].cut),
                       role=pres.components[ci].role,
                       framing=pres.components[ci].framing,
                       color=pres.components[ci].color)
             for ci in order]
    return (ClosurePresentation(p=pres.p, strands=n,
                                word=pre + list(pres.word) + post,
                                components=comps), order)


def _crossing_beads(rd, positive: bool, convention: str):
    """[(bead for left column, bead for right column, coeff)] per R-term."""
    source = rd.R if positive else rd.R_inv
    swap = (convention == "B") == positive
    out = []
    for (m1, m2), c in source.terms.items():
        if swap:
            out.append((m2, m1, c))
        else:
            out.append((m1, m2, c))
    return out


def _raw_products(tower) -> dict:
    """Lazy cache: (bead mono, slot mono) -> ((mono, num, den), ...)."""
    cache = getattr(tower, "_raw_bead_cache", None)
    if cache is None:
        cache = {}
        tower._raw_bead_cache = cache
    return cache


def sweep_state(tower, n: int, word: list[int]) -> tuple[dict, int]:
    """Run the bead sweep over a braid word; returns (state, peak size).

    The state maps tuples of packed D-monomials (one per strand slot) to
    scalars; slot s holds the accumulated bead word of strand s+1.  The
    inner loop works on raw coefficient vectors over integer
    denominators and normalizes once per crossing.
    """
    D = tower.D
    f = tower.field
    rd = tower.ribbon
    one = D.pack(0, 0, 0)
    state = {tuple([one] * n): (list(f.one.num), 1)}
    pos = list(range(n + 1))
    beads_pos = [(ba, bb, cr.num, cr.den)
                 for ba, bb, cr in _crossing_beads(rd, True, tower.convention)]
    beads_neg = [(ba, bb, cr.num, cr.den)
                 for ba, bb, cr in _crossing_beads(rd, False, tower.convention)]
    raw = _raw_products(tower)
    mul_vec = f.mul_vec
    max_state = len(state)

    def products(bead, cur):
        got = raw.get((bead, cur))
        if got is None:
            got = tuple((m, c.num, c.den)
                        for m, c in D.mono_mul(bead, cur).items())
            raw[(bead, cur)] = got
        return got

    for letter in word:
        i = abs(letter)
        sa, sb = pos[i] - 1, pos[i + 1] - 1  # 0-based slots
        beads = beads_pos if letter > 0 else beads_neg
        new: dict = {}
        for key, (cn, cd) in state.items():
            cur_a, cur_b = key[sa], key[sb]
            klist = list(key)
            for ba, bb, rn, rd_ in beads:
                prod_a = products(ba, cur_a)
                if not prod_a:
                    continue
                prod_b = products(bb, cur_b)
                if not prod_b:
                    continue
                c0n = mul_vec(cn, rn)
                c0d = cd * rd_
                for ma, an, ad in prod_a:
                    c1n = mul_vec(c0n, an)
                    c1d = c0d * ad
                    klist[sa] = ma
                    for mb, bn, bd in prod_b:
                        vn = mul_vec(c1n, bn)
                        vd = c1d * bd
                        klist[sb] = mb
                        kk = tuple(klist)
                        prev = new.get(kk)
                        if prev is None:
                            new[kk] = (vn, vd)
                        else:
                            pn, pd = prev
                            if pd == vd:
                                new[kk] = ([x + y for x, y in zip(pn, vn)], pd)
                            else:
                                g = math.gcd(pd, vd)
                                m1, m2 = vd // g, pd // g
                                new[kk] = ([x * m1 + y * m2
                                            for x, y in zip(pn, vn)],
                                           pd * m1)
        # normalize and drop zeros once per crossing
        state = {}
        for kk, (vn, vd) in new.items():
            if any(vn):
                g = vd
                for x in vn:
                    if x:
                        g = math.gcd(g, x)
                        if g == 1:
                            break
                if g > 1:
                    vn = [x // g for x in vn]
                    vd //= g
                state[kk] = (vn, vd)
        max_state = max(max_state, len(state))
        pos[i], pos[i + 1] = pos[i + 1], pos[i]
    return ({k: Cyclo._make(f, list(vn), vd) for k, (vn, vd) in state.items()},
            max_state)


def universal_invariant(tower, pres: ClosurePresentation,
                        vp: ValidatedPresentation | None = None,
                        check_invariance: bool = True) -> UniversalInvariant:
    if pres.p != tower.p:
        raise ValueError(f"presentation p={pres.p} does not match session p={tower.p}")
    geom_hash = pres.geometry_hash()
    jcache = getattr(tower, "_j_cache", None)
    if jcache is None:
        jcache = {}
        tower._j_cache = jcache
    hit = jcache.get(geom_hash)
    if hit is not None:
        return hit
    pres, slot_components = canonicalize_cuts(pres)
    vp = validate(pres)
    rd = tower.ribbon
    D, U = rd.D, rd.U
    f = tower.field
    n = pres.strands
    m = vp.m
    state, max_state = sweep_state(tower, n, pres.word)
    # assemble per-component words: W = w(s_last) g ... g w(s_first)
    g_mono = D.pack(0, 0, (2 * tower.p + 2) % D.kmod)
    out: dict = {}
    z = f.zero
    for key, c in state.items():
        partial = [((), c)]
        for cycle in vp.cycles:
            word: dict = {key[cycle[0] - 1]: f.one}
            for s in cycle[1:]:
                step: dict = {}
                for mw, cw in word.items():
                    gm = D.mono_mul(g_mono, mw)
                    for m1, c1 in gm.items():
                        for m2, c2 in D.mono_mul(key[s - 1], m1).items():
                            step[m2] = step.get(m2, z) + cw * c1 * c2
                word = {mm: cc for mm, cc in step.items() if cc}
            partial = [(kk + (mm,), cc * cw2)
                       for kk, cc in partial for mm, cw2 in word.items()]
        for kk, cc in partial:
            out[kk] = out.get(kk, z) + cc
    J = TensorElement(D, m, {k: c for k, c in out.items() if c})
    # framing correction: r^(writhe - framing) per component, r is central
    for ci, comp in enumerate(pres.components):
        twist = vp.writhes[ci] - comp.framing
        if twist:
            rpow_d = _r_power_in_D(tower, twist)
            J = rpow_d.embed(m, [ci]) * J
    if not is_in_U(J):
        raise ArithmeticError("universal invariant escaped the even subalgebra")
    Ju = project_D_to_U(J, U)
    if check_invariance and m >= 1:
        _assert_ad_invariant(tower, Ju)
    out = UniversalInvariant(value=Ju, slot_components=slot_components,
                             presentation_hash=geom_hash,
                             convention=tower.convention,
                             telemetry={"max_state_terms": max_state,
                                        "result_terms": len(Ju.terms)})
    if check_invariance:
        jcache[geom_hash] = out
    return out


def _r_power_in_D(tower, k: int) -> TensorElement:
    from .hopf import embed_U_in_D
    rpow = tower.ribbon.r_power(k)
    elt = embed_U_in_D(rpow, tower.D)
    return TensorElement(tower.D, 1, {(mm,): cc for mm, cc in elt.terms.items()})


def _assert_ad_invariant(tower, J: TensorElement):
    U = tower.U
    for gen in (U.E(), U.F(), U.K()):
        dh = U.iterated_coproduct(gen, J.arity)
        if dh * J != J * dh:
            raise ArithmeticError(
                "universal invariant is not ad-invariant; crossing or closure "
                "convention bug")


def rt_colored_invariant(tower, pres: ClosurePresentation,
                         colors: list[ModuleRep]) -> Cyclo:
    """Slotwise right quantum traces of the universal invariant.

    Recovers the usual colored link invariant; vanishes whenever one of
    the colors is projective with zero quantum dimension.
    """
    vp = validate(pres)
    if len(colors) != vp.m:
        raise ValueError("need exactly one module color per component")
    inv = universal_invariant(tower, pres, vp)
    funcs = []
    for ci in inv.slot_components:
        V = colors[ci]
        table = {}
        gd = V.g_diag()
        for mono in tower.U.basis():
            mat = V.act(tower.U.element({mono: tower.field.one}))
            val = tower.field.zero
            for i, d in enumerate(gd):
                val = val + d * mat.rows[i][i]
            if val:
                table[mono] = val
        funcs.append(lambda mm, t=table: t.get(mm, tower.field.zero))
    out = inv.value.apply_functionals(funcs)
    return out


def verify_tangle_oracles(tower) -> CheckReport:
    """Monodromy oracle, Reidemeister moves, and Markov stability."""
    p = tower.p
    f = tower.field
    rep = CheckReport(f"tangle(p={p})")
    rd = tower.ribbon
    # sigma_1^2 cut open must be the monodromy
    pres = ClosurePresentation(p=p, strands=2, word=[1, 1], components=[
        Component([1], 1, "minus", 0), Component([2], 2, "minus", 0)])
    vp = validate(pres)
    inv = universal_invariant(tower, pres, vp, check_invariance=True)
    rep.check("J(sigma_1^2) = monodromy", inv.value == rd.M,
              "universal invariant differs from R21 R")
    # Reidemeister II: both orders of sigma sigma^-1 give the unit state
    for word in ([1, -1], [-1, 1]):
        state, _ = sweep_state(tower, 2, word)
        unit = {(tower.D.pack(0, 0, 0),) * 2: f.one}
        rep.check(f"Reidemeister II {word}", state == unit)
    # Reidemeister III: the two braid-relation words give identical states
    sa, _ = sweep_state(tower, 3, [1, 2, 1])
    sb, _ = sweep_state(tower, 3, [2, 1, 2])
    rep.check("Reidemeister III state identity", sa == sb)
    return rep
