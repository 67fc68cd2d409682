"""Sparse PBW engine for the restricted quantum group and its braided extension.

Two Hopf algebras share one engine:

* U, on generators E, F, K with E^p = F^p = 0, K^(2p) = 1,
  KEK^-1 = q^2 E, KFK^-1 = q^-2 F, [E,F] = (K - K^-1)/(q - q^-1);
* D, on generators e, phi, k with e^p = phi^p = 0, k^(4p) = 1,
  kek^-1 = q e, k phi k^-1 = q^-1 phi, [e,phi] = (k^2 - k^-2)/(q - q^-1).

Elements are sparse sums of normal-ordered monomials E^a F^b K^c
(0 <= a,b < p, 0 <= c < kmod), packed into single integers.  Products are
reduced one generator at a time using only the defining relations; the
result of every operation is in canonical normal-ordered form.  Tensor
powers are sparse sums over tuples of packed monomials.
"""

from __future__ import annotations

from functools import lru_cache

from .cyclo import Cyclo, CycloField


class Algebra:
    """Engine for one of the two Hopf algebras, fixed by (field, kind)."""

    def __init__(self, field: CycloField, kind: str):
        assert kind in ("U", "D")
        self.field = field
        self.kind = kind
        p = self.p = field.p
        self.kmod = 2 * p if kind == "U" else 4 * p
        # K E K^-1 = q^weight E; [E,F] = (K^hexp - K^-hexp)/(q - q^-1).
        self.weight = 2 if kind == "U" else 1
        self.hexp = 1 if kind == "U" else 2
        self.dim = p * p * self.kmod
        self.gen_names = ("E", "F", "K") if kind == "U" else ("e", "phi", "k")
        f = field
        self._qw = [f.qpow(self.weight * c) for c in range(self.kmod)]
        self._qnegw = [f.qpow(-self.weight * c) for c in range(self.kmod)]
        self._invqq = (f.q - f.qpow(-1)).inverse()
        self._fbe = self._build_fbe()
        self._mono_mul_cache: dict[tuple[int, int], dict] = {}
        self._coproduct_cache: dict[int, dict] = {}
        self._antipode_cache: dict[int, dict] = {}
        self._iter_cop_cache: dict[tuple[int, int], dict] = {}

    # -- monomial packing ------------------------------------------------

    def pack(self, a: int, b: int, c: int) -> int:
        return (a * self.p + b) * self.kmod + c

    def unpack(self, m: int):
        c = m % self.kmod
        ab = m // self.kmod
        return ab // self.p, ab % self.p, c

    def basis(self):
        return range(self.dim)

    def mono_str(self, m: int) -> str:
        a, b, c = self.unpack(m)
        ge, gf, gk = self.gen_names
        parts = []
        if a:
            parts.append(f"{ge}^{a}")
        if b:
            parts.append(f"{gf}^{b}")
        if c:
            parts.append(f"{gk}^{c}")
        return " ".join(parts) if parts else "1"

    # -- element constructors ---------------------------------------------

    def element(self, terms: dict) -> "AlgebraElement":
        return AlgebraElement(self, {m: c for m, c in terms.items() if c})

    def zero_elt(self) -> "AlgebraElement":
        return AlgebraElement(self, {})

    def one_elt(self) -> "AlgebraElement":
        return AlgebraElement(self, {self.pack(0, 0, 0): self.field.one})

    def monomial(self, a: int, b: int, c: int, coeff=None) -> "AlgebraElement":
        coeff = self.field.one if coeff is None else coeff
        return AlgebraElement(self, {self.pack(a, b, c % self.kmod): coeff})

    def E(self):
        return self.monomial(1, 0, 0)

    def F(self):
        return self.monomial(0, 1, 0)

    def K(self, power: int = 1):
        return self.monomial(0, 0, power % self.kmod)

    def from_scalar(self, c) -> "AlgebraElement":
        if isinstance(c, int):
            c = self.field.rational(c)
        return AlgebraElement(self, {self.pack(0, 0, 0): c} if c else {})

    # -- multiplication ----------------------------------------------------

    def _build_fbe(self):
        """Tables for F^b * E in normal order, b = 0 .. p-1.

        Entry lists hold (a', b', c', coeff) with the convention that
        multiplying E^a F^b K^c by E yields
        q^(weight*c) * sum E^(a+a') F^(b') K^(c'+c).
        """
        f = self.field
        invqq = self._invqq
        tables = [[(1, 0, 0, f.one)]]
        for b in range(1, self.p):
            prev = tables[b - 1]
            cur: dict = {}
            # (F^(b-1) E) * F, reducing the trailing K-powers past F.
            for (a1, b1, c1, coeff) in prev:
                if b1 + 1 < self.p:
                    key = (a1, b1 + 1, c1)
                    add = coeff * self._qnegw[c1]
                    cur[key] = cur.get(key, f.zero) + add
            # minus F^(b-1) * (K^hexp - K^-hexp)/(q - q^-1)
            for cexp, sgn in ((self.hexp, -1), ((-self.hexp) % self.kmod, 1)):
                key = (0, b - 1, cexp)
                cur[key] = cur.get(key, f.zero) + sgn * invqq
            tables.append([(a, bb, cc, coeff) for (a, bb, cc), coeff in cur.items() if coeff])
        return tables

    def _rmul_E(self, terms: dict) -> dict:
        out: dict = {}
        z = self.field.zero
        p, kmod = self.p, self.kmod
        for m, coeff in terms.items():
            a, b, c = self.unpack(m)
            base = coeff * self._qw[c]
            for (da, b2, dc, tcoeff) in self._fbe[b]:
                a2 = a + da
                if a2 >= p:
                    continue
                key = self.pack(a2, b2, (c + dc) % kmod)
                out[key] = out.get(key, z) + base * tcoeff
        return {m: c for m, c in out.items() if c}

    def _rmul_F(self, terms: dict) -> dict:
        out: dict = {}
        z = self.field.zero
        for m, coeff in terms.items():
            a, b, c = self.unpack(m)
            if b + 1 >= self.p:
                continue
            key = self.pack(a, b + 1, c)
            out[key] = out.get(key, z) + coeff * self._qnegw[c]
        return {m: c for m, c in out.items() if c}

    def _rmul_Kpow(self, terms: dict, t: int) -> dict:
        t %= self.kmod
        if not t:
            return terms
        kmod = self.kmod
        return {m - m % kmod + (m % kmod + t) % kmod: c for m, c in terms.items()}

    def mono_mul(self, m1: int, m2: int) -> dict:
        """Product of two packed monomials as a canonical term dict (cached)."""
        cached = self._mono_mul_cache.get((m1, m2))
        if cached is not None:
            return cached
        a2, b2, c2 = self.unpack(m2)
        cur = {m1: self.field.one}
        for _ in range(a2):
            cur = self._rmul_E(cur)
        for _ in range(b2):
            cur = self._rmul_F(cur)
        if c2:
            cur = self._rmul_Kpow(cur, c2)
        self._mono_mul_cache[(m1, m2)] = cur
        return cur

    def multiply(self, x: "AlgebraElement", y: "AlgebraElement") -> "AlgebraElement":
        assert x.algebra is self and y.algebra is self, "algebra mismatch"
        out: dict = {}
        z = self.field.zero
        for m1, c1 in x.terms.items():
            for m2, c2 in y.terms.items():
                c12 = c1 * c2
                for m, cm in self.mono_mul(m1, m2).items():
                    out[m] = out.get(m, z) + c12 * cm
        return AlgebraElement(self, {m: c for m, c in out.items() if c})

    # -- Hopf structure ------------------------------------------------------

    def _gen_coproducts(self):
        one = self.pack(0, 0, 0)
        f = self.field
        he = self.hexp % self.kmod
        return {
            "E": {(one, self.pack(1, 0, 0)): f.one,
                  (self.pack(1, 0, 0), self.pack(0, 0, he)): f.one},
            "F": {(self.pack(0, 0, (-self.hexp) % self.kmod), self.pack(0, 1, 0)): f.one,
                  (self.pack(0, 1, 0), one): f.one},
            "K": {(self.pack(0, 0, 1), self.pack(0, 0, 1)): f.one},
        }

    def tensor_mul_terms(self, t1: dict, t2: dict, arity: int) -> dict:
        out: dict = {}
        z = self.field.zero
        for k1, c1 in t1.items():
            for k2, c2 in t2.items():
                partial = [((), c1 * c2)]
                for s in range(arity):
                    prod = self.mono_mul(k1[s], k2[s])
                    partial = [(key + (m,), c * cm)
                               for key, c in partial
                               for m, cm in prod.items()]
                    if not partial:
                        break
                for key, c in partial:
                    out[key] = out.get(key, z) + c
        return {k: c for k, c in out.items() if c}

    def coproduct_mono(self, m: int) -> dict:
        cached = self._coproduct_cache.get(m)
        if cached is not None:
            return cached
        gens = self._gen_coproducts()
        a, b, c = self.unpack(m)
        cur = {(self.pack(0, 0, 0), self.pack(0, 0, 0)): self.field.one}
        for _ in range(a):
            cur = self.tensor_mul_terms(cur, gens["E"], 2)
        for _ in range(b):
            cur = self.tensor_mul_terms(cur, gens["F"], 2)
        for _ in range(c):
            cur = self.tensor_mul_terms(cur, gens["K"], 2)
        self._coproduct_cache[m] = cur
        return cur

    def coproduct(self, x: "AlgebraElement") -> "TensorElement":
        out: dict = {}
        z = self.field.zero
        for m, c in x.terms.items():
            for key, cm in self.coproduct_mono(m).items():
                out[key] = out.get(key, z) + c * cm
        return TensorElement(self, 2, {k: c for k, c in out.items() if c})

    def iterated_coproduct_mono(self, m: int, n: int) -> dict:
        assert n >= 1
        if n == 1:
            return {(m,): self.field.one}
        cached = self._iter_cop_cache.get((m, n))
        if cached is not None:
            return cached
        f = self.field
        one = self.pack(0, 0, 0)
        khe = self.pack(0, 0, self.hexp % self.kmod)
        khei = self.pack(0, 0, (-self.hexp) % self.kmod)
        dE = {}
        dF = {}
        for i in range(n):
            dE[tuple([one] * i + [self.pack(1, 0, 0)] + [khe] * (n - 1 - i))] = f.one
            dF[tuple([khei] * i + [self.pack(0, 1, 0)] + [one] * (n - 1 - i))] = f.one
        a, b, c = self.unpack(m)
        cur = {tuple([one] * n): f.one}
        for _ in range(a):
            cur = self.tensor_mul_terms(cur, dE, n)
        for _ in range(b):
            cur = self.tensor_mul_terms(cur, dF, n)
        if c:
            kc = tuple([self.pack(0, 0, c)] * n)
            cur = self.tensor_mul_terms(cur, {kc: f.one}, n)
        self._iter_cop_cache[(m, n)] = cur
        return cur

    def iterated_coproduct(self, x: "AlgebraElement", n: int) -> "TensorElement":
        out: dict = {}
        z = self.field.zero
        for m, c in x.terms.items():
            for key, cm in self.iterated_coproduct_mono(m, n).items():
                out[key] = out.get(key, z) + c * cm
        return TensorElement(self, n, {k: c for k, c in out.items() if c})

    def counit(self, x: "AlgebraElement") -> Cyclo:
        out = self.field.zero
        for m, c in x.terms.items():
            if m < self.kmod:  # monomials with a = b = 0 satisfy m < kmod
                out = out + c
        return out

    def antipode_mono(self, m: int) -> dict:
        cached = self._antipode_cache.get(m)
        if cached is not None:
            return cached
        a, b, c = self.unpack(m)
        # S(E^a F^b K^c) = K^-c (-K^hexp F)^b (-E K^-hexp)^a, where
        # -K^hexp F = -q^(-weight*hexp) F K^hexp in normal order.
        cur = self.monomial(0, 0, -c)
        sf = self.monomial(0, 1, self.hexp, -self._qnegw[self.hexp % self.kmod])
        se = self.monomial(1, 0, (-self.hexp) % self.kmod, -self.field.one)
        for _ in range(b):
            cur = self.multiply(cur, sf)
        for _ in range(a):
            cur = self.multiply(cur, se)
        self._antipode_cache[m] = cur.terms
        return cur.terms

    def antipode(self, x: "AlgebraElement") -> "AlgebraElement":
        out: dict = {}
        z = self.field.zero
        for m, c in x.terms.items():
            for m2, cm in self.antipode_mono(m).items():
                out[m2] = out.get(m2, z) + c * cm
        return AlgebraElement(self, {m: c for m, c in out.items() if c})

    def is_central(self, x: "AlgebraElement") -> bool:
        for g in (self.E(), self.F(), self.K()):
            if self.multiply(g, x) != self.multiply(x, g):
                return False
        return True


class AlgebraElement:
    """Sparse element of U or D: packed monomial -> nonzero scalar."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: Algebra, terms: dict):
        self.algebra = algebra
        self.terms = terms

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        assert self.algebra is other.algebra
        out = dict(self.terms)
        z = self.algebra.field.zero
        for m, c in other.terms.items():
            out[m] = out.get(m, z) + c
        return AlgebraElement(self.algebra, {m: c for m, c in out.items() if c})

    def __neg__(self):
        return AlgebraElement(self.algebra, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return self.algebra.multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "AlgebraElement":
        if isinstance(c, int):
            c = self.algebra.field.rational(c)
        if not c:
            return AlgebraElement(self.algebra, {})
        return AlgebraElement(self.algebra, {m: x * c for m, x in self.terms.items()})

    def __pow__(self, n: int) -> "AlgebraElement":
        assert n >= 0
        out = self.algebra.one_elt()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.algebra is other.algebra and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __hash__(self):
        return hash((id(self.algebra), tuple(sorted(self.terms))))

    def coeff(self, a: int, b: int, c: int) -> Cyclo:
        return self.terms.get(self.algebra.pack(a, b, c % self.algebra.kmod),
                              self.algebra.field.zero)

    def coproduct(self) -> "TensorElement":
        return self.algebra.coproduct(self)

    def counit(self) -> Cyclo:
        return self.algebra.counit(self)

    def antipode(self) -> "AlgebraElement":
        return self.algebra.antipode(self)

    def tensor(self, other: "AlgebraElement") -> "TensorElement":
        assert self.algebra is other.algebra
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                out[(m1, m2)] = c1 * c2
        return TensorElement(self.algebra, 2, {k: c for k, c in out.items() if c})

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for m in sorted(self.terms):
            bits.append(f"({self.terms[m]!r})*{self.algebra.mono_str(m)}")
        return " + ".join(bits)

    def to_json(self):
        return [{"monomial": self.algebra.mono_str(m), "scalar": self.terms[m].to_json()}
                for m in sorted(self.terms)]


class TensorElement:
    """Sparse element of the m-fold tensor power: mono tuple -> scalar."""

    __slots__ = ("algebra", "arity", "terms")

    def __init__(self, algebra: Algebra, arity: int, terms: dict):
        self.algebra = algebra
        self.arity = arity
        self.terms = terms

    @staticmethod
    def unit(algebra: Algebra, arity: int) -> "TensorElement":
        key = tuple([algebra.pack(0, 0, 0)] * arity)
        return TensorElement(algebra, arity, {key: algebra.field.one})

    def __add__(self, other):
        assert self.algebra is other.algebra and self.arity == other.arity
        out = dict(self.terms)
        z = self.algebra.field.zero
        for k, c in other.terms.items():
            out[k] = out.get(k, z) + c
        return TensorElement(self.algebra, self.arity, {k: c for k, c in out.items() if c})

    def __neg__(self):
        return TensorElement(self.algebra, self.arity,
                             {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, TensorElement):
            assert self.algebra is other.algebra and self.arity == other.arity, \
                "tensor arity/algebra mismatch"
            terms = self.algebra.tensor_mul_terms(self.terms, other.terms, self.arity)
            return TensorElement(self.algebra, self.arity, terms)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "TensorElement":
        if isinstance(c, int):
            c = self.algebra.field.rational(c)
        if not c:
            return TensorElement(self.algebra, self.arity, {})
        return TensorElement(self.algebra, self.arity,
                             {k: x * c for k, x in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return (self.algebra is other.algebra and self.arity == other.arity
                and self.terms == other.terms)

    def __bool__(self):
        return bool(self.terms)

    def swap(self, i: int = 0, j: int = 1) -> "TensorElement":
        """Exchange tensor slots i and j."""
        out = {}
        for k, c in self.terms.items():
            kk = list(k)
            kk[i], kk[j] = kk[j], kk[i]
            out[tuple(kk)] = c
        return TensorElement(self.algebra, self.arity, out)

    def embed(self, arity: int, slots: list[int]) -> "TensorElement":
        """Place the slots of self into the given positions, 1 elsewhere."""
        one = self.algebra.pack(0, 0, 0)
        out = {}
        for k, c in self.terms.items():
            kk = [one] * arity
            for s, m in zip(slots, k):
                kk[s] = m
            out[tuple(kk)] = c
        return TensorElement(self.algebra, arity, out)

    def as_element(self) -> AlgebraElement:
        """View an arity-1 tensor as an algebra element."""
        assert self.arity == 1
        return AlgebraElement(self.algebra, {k[0]: c for k, c in self.terms.items()})

    def apply_functionals(self, funcs: list) -> "TensorElement | Cyclo":
        """Contract slots with scalar functionals; None keeps a slot open.

        Each functional maps a packed monomial to a Cyclo.
        """
        keep = [s for s, fn in enumerate(funcs) if fn is None]
        z = self.algebra.field.zero
        out: dict = {}
        for k, c in self.terms.items():
            for s, fn in enumerate(funcs):
                if fn is not None:
                    c = c * fn(k[s])
                    if not c:
                        break
            else:
                key = tuple(k[s] for s in keep)
                out[key] = out.get(key, z) + c
        out = {k: c for k, c in out.items() if c}
        if not keep:
            return out.get((), z)
        return TensorElement(self.algebra, len(keep), out)

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for k in sorted(self.terms):
            word = " (x) ".join(self.algebra.mono_str(m) for m in k)
            bits.append(f"({self.terms[k]!r})*[{word}]")
        return " + ".join(bits)


@lru_cache(maxsize=None)
def build_algebra(p: int, kind: str) -> Algebra:
    return Algebra(CycloField.for_p(p), kind)


def build_U(p: int) -> Algebra:
    return build_algebra(p, "U")


def build_D(p: int) -> Algebra:
    return build_algebra(p, "D")


# -- U <-> D conversion ------------------------------------------------------


def embed_U_in_D(x: AlgebraElement, D: Algebra) -> AlgebraElement:
    """Hopf embedding E -> e, F -> phi, K -> k^2."""
    U = x.algebra
    assert U.kind == "U" and D.kind == "D" and U.p == D.p
    out = {}
    for m, c in x.terms.items():
        a, b, cc = U.unpack(m)
        out[D.pack(a, b, (2 * cc) % D.kmod)] = c
    return AlgebraElement(D, out)


def is_in_U(y) -> bool:
    """True when every monomial has even k-exponent (slotwise for tensors)."""
    A = y.algebra
    assert A.kind == "D"
    if isinstance(y, AlgebraElement):
        return all(A.unpack(m)[2] % 2 == 0 for m in y.terms)
    return all(A.unpack(m)[2] % 2 == 0 for k in y.terms for m in k)


def project_D_to_U(y, U: Algebra):
    """Relabel a D-element with even k-exponents as a U-element."""
    D = y.algebra
    assert D.kind == "D" and U.kind == "U" and D.p == U.p

    def conv(m):
        a, b, c = D.unpack(m)
        if c % 2:
            raise ValueError(f"element is not in U: odd k-exponent in {D.mono_str(m)}")
        return U.pack(a, b, (c // 2) % U.kmod)

    if isinstance(y, AlgebraElement):
        return AlgebraElement(U, {conv(m): c for m, c in y.terms.items()})
    return TensorElement(U, y.arity,
                         {tuple(conv(m) for m in k): c for k, c in y.terms.items()})
