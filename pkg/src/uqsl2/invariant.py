"""Assembly of the logarithmic surgery invariant from colored presentations.

Given a presentation of (M, L) as a braid closure with components split
into surgery components, center-colored components and trace-class
colored components, the invariant is

    delta^s * < (z+ mu x ... x mu x id)(J_T), h- >

with s the signature of the surgery linking matrix.  Slots of surgery
and center-colored components and all but one trace-colored slot are
closed with quantum characters, which read the component's bead word
cyclically and are therefore independent of the designated cut; the one
remaining open slot closes to a central element that is paired against
its trace-class color through the modified trace.  The presentation is
brought to the canonical cut form (a Markov conjugation) inside the
universal-invariant engine, so any declared cuts are legal.

With no trace-colored component the construction degenerates to the
colored Hennings sum; with exactly one it produces the center-valued
logarithmic knot invariant and its expansion coefficients over the
center basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cyclo import Cyclo
from .hopf import AlgebraElement
from .mtrace import TraceColor
from .report import CheckReport
from .tangle import (ClosurePresentation, Component, surgery_signature,
                     universal_invariant, validate)


@dataclass
class InvariantValue:
    exact: Cyclo
    s: int
    prefactor: Cyclo
    provenance: dict

    @property
    def approx(self) -> complex:
        return self.exact.approx()

    def to_json(self) -> dict:
        z = self.approx
        return {"exact": self.exact.to_json(), "approx": [z.real, z.imag],
                "s": self.s, "prefactor": self.prefactor.to_json(),
                "provenance": self.provenance}


# -- color parsing ---------------------------------------------------------------


def _parse_scalar(field, v) -> Cyclo:
    if isinstance(v, Cyclo):
        return v
    if isinstance(v, bool):
        raise ValueError("boolean is not a scalar")
    if isinstance(v, int):
        return field.rational(v)
    if isinstance(v, str):
        return field.rational(Fraction(v))
    if isinstance(v, (list, tuple)) and len(v) == 2:
        return field.rational(v[0], v[1])
    if isinstance(v, dict) and "terms" in v:
        out = field.zero
        for k, num, den in v["terms"]:
            out = out + field.root(k) * field.rational(num, den)
        return out
    raise ValueError(f"cannot parse scalar coefficient {v!r}")


def parse_center_color(tower, spec) -> AlgebraElement:
    """A central element from a name or a {name: coeff} combination."""
    if spec is None:
        return tower.U.one_elt()
    if isinstance(spec, str):
        return tower.center.element_by_name(spec)
    if isinstance(spec, dict):
        out = tower.U.zero_elt()
        for name, coeff in spec.items():
            z = tower.center.element_by_name(name)
            out = out + z.scale(_parse_scalar(tower.field, coeff))
        return out
    raise ValueError(f"cannot parse center color {spec!r}")


def parse_trace_color(tower, spec) -> TraceColor:
    if isinstance(spec, TraceColor):
        return spec
    if isinstance(spec, str):
        return TraceColor.named(tower, spec)
    if isinstance(spec, dict):
        return TraceColor(tower, {name: _parse_scalar(tower.field, coeff)
                                  for name, coeff in spec.items()})
    raise ValueError(f"cannot parse trace color {spec!r}")


# -- the invariants ---------------------------------------------------------------


def _delta_power(tower, s: int) -> Cyclo:
    base = tower.integral.delta if s >= 0 else tower.integral.delta_inv
    out = tower.field.one
    for _ in range(abs(s)):
        out = out * base
    return out


def h_log(tower, pres: ClosurePresentation, mode: str = "hlog") -> InvariantValue:
    """The full invariant of the colored pair presented by `pres`."""
    vp = validate(pres)
    s = surgery_signature(vp)
    integ = tower.integral
    if vp.m == 0:
        value = tower.field.one
    else:
        inv = universal_invariant(tower, pres, vp)
        funcs = []
        keep_slot = None
        for slot, ci in enumerate(inv.slot_components):
            comp = pres.components[ci]
            if comp.role == "surgery":
                if comp.color is not None:
                    raise ValueError("surgery components are closed with the "
                                     "integral and cannot carry a color")
                funcs.append(lambda m, mu=integ.mu_mono: mu(m))
            elif comp.role == "plus":
                z = parse_center_color(tower, comp.color)
                funcs.append(integ.mu_twisted_functional(z))
            else:
                # trace-colored slots sit rightmost; the last one stays open
                funcs.append(parse_trace_color(tower, comp.color).functional())
                keep_slot = slot
        if keep_slot is None:
            value = inv.value.apply_functionals(funcs)
        else:
            funcs[keep_slot] = None
            rem = inv.value.apply_functionals(funcs).as_element()
            if not tower.U.is_central(rem):
                raise ArithmeticError("open slot did not close to a central "
                                      "element; invariance bug")
            kept = pres.components[inv.slot_components[keep_slot]]
            color = parse_trace_color(tower, kept.color)
            value = tower.traces.tr_prime(rem * color.representative())
    pref = _delta_power(tower, s)
    return InvariantValue(exact=pref * value, s=s, prefactor=pref,
                          provenance={"presentation": pres.canonical_hash(),
                                      "convention": tower.convention,
                                      "p": tower.p, "mode": mode})


def hennings(tower, pres: ClosurePresentation) -> InvariantValue:
    """The invariant with no trace-colored components."""
    if any(c.role == "minus" for c in pres.components):
        raise ValueError("plain surgery evaluation needs no minus components")
    return h_log(tower, pres, mode="hennings")


@dataclass
class CenterValuedInvariant:
    element: AlgebraElement
    a: dict[int, Cyclo]            # coefficients of e_0 .. e_p
    b_plus: dict[int, Cyclo]       # coefficients of w_j^+
    b_minus: dict[int, Cyclo]
    s: int
    provenance: dict

    def to_json(self):
        return {
            "s": self.s,
            "a": {str(j): v.to_json() for j, v in sorted(self.a.items())},
            "b_plus": {str(j): v.to_json() for j, v in sorted(self.b_plus.items())},
            "b_minus": {str(j): v.to_json() for j, v in sorted(self.b_minus.items())},
            "provenance": self.provenance,
        }


def j_log(tower, pres: ClosurePresentation) -> CenterValuedInvariant:
    """The center-valued knot invariant: one minus component, no color needed."""
    minus = [i for i, c in enumerate(pres.components) if c.role == "minus"]
    if len(minus) != 1:
        raise ValueError("center-valued invariant needs exactly one minus component")
    vp = validate(pres)
    s = surgery_signature(vp)
    integ = tower.integral
    inv = universal_invariant(tower, pres, vp)
    funcs = []
    for slot, ci in enumerate(inv.slot_components):
        comp = pres.components[ci]
        if comp.role == "minus":
            funcs.append(None)
        elif comp.role == "surgery":
            funcs.append(lambda m, mu=integ.mu_mono: mu(m))
        else:
            z = parse_center_color(tower, comp.color)
            funcs.append(integ.mu_twisted_functional(z))
    rem = inv.value.apply_functionals(funcs).as_element()
    if not tower.U.is_central(rem):
        raise ArithmeticError("knot slot did not close to a central element")
    rem = rem.scale(_delta_power(tower, s))
    coords = tower.center.expand(rem)
    p = tower.p
    a = {j: coords[j] for j in range(p + 1)}
    b_plus = {j: coords[p + 1 + (j - 1)] for j in range(1, p)}
    b_minus = {j: coords[p + 1 + (p - 1) + (j - 1)] for j in range(1, p)}
    return CenterValuedInvariant(element=rem, a=a, b_plus=b_plus, b_minus=b_minus,
                                 s=s, provenance={"presentation": pres.canonical_hash(),
                                                  "convention": tower.convention,
                                                  "p": tower.p, "mode": "jlog"})


def murakami_check(tower, pres: ClosurePresentation) -> CheckReport:
    """The five relations between expansion coefficients and trace pairings."""
    p = tower.p
    f = tower.field
    rep = CheckReport(f"murakami(p={p}, {pres.canonical_hash()[:8]})")
    jl = j_log(tower, pres)
    minus = [i for i, c in enumerate(pres.components) if c.role == "minus"][0]

    def H(color_spec) -> Cyclo:
        comps = [Component(strands=c.strands, cut=c.cut, role=c.role,
                           framing=c.framing,
                           color=color_spec if ci == minus else c.color)
                 for ci, c in enumerate(pres.components)]
        pres2 = ClosurePresentation(p=pres.p, strands=pres.strands,
                                    word=list(pres.word), components=comps)
        return h_log(tower, pres2).exact

    rep.check_zero("a_0 = H(h_p^-)", jl.a[0] - H(f"h-{p}"))
    rep.check_zero("a_p = (-1)^(p-1) H(h_p^+)",
                   jl.a[p] - f.rational((-1) ** (p - 1)) * H(f"h+{p}"))
    for j in range(1, p):
        br = f.quantum_integer(j) ** 2
        qq = f.qpow(j) + f.qpow(-j)
        sgn = f.rational((-1) ** j)
        rep.check_zero(f"a_{j} relation",
                       jl.a[j] - sgn / br * H(f"h{j}"))
        colors_p = {f"h+{j}": br, f"h{j}": -qq}
        rep.check_zero(f"b_{j}^+ relation",
                       jl.b_plus[j] - sgn / br ** 2 * H(colors_p))
        colors_m = {f"h-{p - j}": br, f"h{j}": -qq}
        rep.check_zero(f"b_{j}^- relation",
                       jl.b_minus[j] - sgn / br ** 2 * H(colors_m))
    return rep
