"""Exact arithmetic in the cyclotomic field Q(zeta_N) with N = lcm(8, 4p).

Values are represented in the power basis of Q[x]/(Phi_N(x)), i.e. as
integer coefficient vectors of length phi(N) over a common positive
denominator, fully reduced.  Reduction modulo the N-th cyclotomic
polynomial is applied after every operation, so equality of values is
equality of representations and zero-testing is exact.

The field is large enough to host q = zeta_N^(N/2p), its square root
q^(1/2) = zeta_N^(N/4p), the imaginary unit i, sqrt(2) = zeta_8 + zeta_8^(-1)
and sqrt(n) for every squarefree n dividing 2p (via quadratic Gauss sums).
The complex embedding is fixed once and for all by zeta_N -> e^(2*pi*i/N),
which pins the branch q^(1/2) = e^(i*pi/2p).
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache


def cyclotomic_polynomial(n: int) -> list[int]:
    """Integer coefficient list (low degree first, monic) of Phi_n."""
    if n == 1:
        return [-1, 1]
    # Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, by exact division.
    num = [0] * (n + 1)
    num[0], num[n] = -1, 1
    for d in range(1, n):
        if n % d == 0:
            num = _polydiv_exact(num, cyclotomic_polynomial(d))
    return num


def _polydiv_exact(num: list[int], den: list[int]) -> list[int]:
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c % den[dd] != 0:
            raise ArithmeticError("non-exact cyclotomic division")
        c //= den[dd]
        out[i - dd] = c
        for j in range(dd + 1):
            num[i - dd + j] -= c * den[j]
    if any(num):
        raise ArithmeticError("non-exact cyclotomic division")
    return out


class CycloField:
    """The cyclotomic field of order N = lcm(8, 4p) for a fixed p >= 2."""

    def __init__(self, p: int):
        if p < 2:
            raise ValueError(f"p must be >= 2, got {p}")
        self.p = p
        self.order = N = math.lcm(8, 4 * p)
        phi_poly = cyclotomic_polynomial(N)
        self.phi = deg = len(phi_poly) - 1
        # Rows of x^t mod Phi_N for t = 0 .. N-1 (integer vectors, Phi_N monic).
        rows = [[0] * deg for _ in range(max(N, 2 * deg - 1))]
        for t in range(deg):
            rows[t][t] = 1
        head = [-c for c in phi_poly[:deg]]
        for t in range(deg, len(rows)):
            prev = rows[t - 1]
            cur = [0] + prev[: deg - 1]
            lead = prev[deg - 1]
            if lead:
                for j in range(deg):
                    cur[j] += lead * head[j]
            rows[t] = cur
        self._rows = [tuple(r) for r in rows]
        self._root_complex = [cmath.exp(2j * cmath.pi * t / N) for t in range(N)]
        self.zero = Cyclo(self, (0,) * deg, 1)
        self.one = Cyclo(self, self._rows[0], 1)
        # p-specific constants of interest.
        self.i = self.root(N // 4)
        self.zeta8 = self.root(N // 8)
        self.q = self.root(N // (2 * p))
        self.q_half = self.root(N // (4 * p))
        self.sqrt2 = self.zeta8 + self.zeta8 ** (-1)

    # -- construction -------------------------------------------------

    def root(self, k: int) -> "Cyclo":
        """zeta_N^k."""
        return Cyclo(self, self._rows[k % self.order], 1)

    def rational(self, a, b: int = 1) -> "Cyclo":
        fr = Fraction(a, b)
        vec = [0] * self.phi
        vec[0] = fr.numerator
        return Cyclo(self, tuple(vec), fr.denominator)

    def from_coeffs(self, coeffs) -> "Cyclo":
        """Value sum coeffs[t] * zeta^t from rationals, any length <= N."""
        num = [0] * self.phi
        den = 1
        for fr in (Fraction(c) for c in coeffs):
            den = den * fr.denominator // math.gcd(den, fr.denominator)
        for t, c in enumerate(coeffs):
            fr = Fraction(c)
            scale = fr.numerator * (den // fr.denominator)
            if scale:
                row = self._rows[t % self.order]
                for j in range(self.phi):
                    num[j] += scale * row[j]
        return Cyclo._make(self, num, den)

    def mul_vec(self, a, b) -> list:
        """Raw product of two coefficient vectors, reduced mod Phi_N.

        Denominators are tracked by the caller; this is the hot path for
        the tangle sweep, bypassing Cyclo object construction.
        """
        deg = self.phi
        conv = [0] * (2 * deg - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        num = conv[:deg]
        rows = self._rows
        for t in range(deg, 2 * deg - 1):
            c = conv[t]
            if c:
                row = rows[t]
                for j in range(deg):
                    num[j] += c * row[j]
        return num

    def qpow(self, k: int) -> "Cyclo":
        """q^k for integer k (q has order 2p)."""
        return self.root((k % (2 * self.p)) * (self.order // (2 * self.p)))

    def qhalfpow(self, k: int) -> "Cyclo":
        """q^(k/2) for integer k, i.e. zeta_{4p}^k."""
        return self.root((k % (4 * self.p)) * (self.order // (4 * self.p)))

    def quantum_integer(self, m: int) -> "Cyclo":
        """[m] = (q^m - q^-m) / (q - q^-1)."""
        return (self.qpow(m) - self.qpow(-m)) / (self.qpow(1) - self.qpow(-1))

    def quantum_factorial(self, m: int) -> "Cyclo":
        """[m]! = [m][m-1]...[1], with [0]! = 1."""
        if m < 0:
            raise ValueError("quantum factorial needs m >= 0")
        out = self.one
        for j in range(1, m + 1):
            out = out * self.quantum_integer(j)
        return out

    def sqrt_positive(self, n: int) -> "Cyclo":
        """The positive real square root of n, for squarefree n dividing 2p.

        sqrt(2) comes from zeta_8 + zeta_8^(-1); an odd part m uses the
        quadratic Gauss sum sum_k zeta_m^(k^2), corrected by -i when
        m = 3 mod 4.
        """
        if n < 1 or (2 * self.p) % n != 0:
            raise ValueError(f"radicand {n} does not divide 2p = {2 * self.p}")
        m = n
        out = self.one
        if m % 2 == 0:
            out = self.sqrt2
            m //= 2
        if m % 2 == 0:
            raise ValueError(f"radicand {n} is not squarefree")
        if m > 1:
            step = self.order // m
            gauss = self.zero
            for k in range(m):
                gauss = gauss + self.root(step * (k * k % m))
            if m % 4 == 3:
                gauss = gauss * (-self.i)
            out = out * gauss
        if out * out != self.rational(n):
            raise ArithmeticError(f"radicand {n} is not squarefree")
        assert out.approx().real > 0
        return out

    def __repr__(self):
        return f"CycloField(p={self.p}, N={self.order})"

    def __reduce__(self):
        return (CycloField.for_p, (self.p,))

    @staticmethod
    @lru_cache(maxsize=None)
    def for_p(p: int) -> "CycloField":
        return CycloField(p)


class Cyclo:
    """An element of Q(zeta_N): integer vector over a positive denominator."""

    __slots__ = ("field", "num", "den")

    def __init__(self, field: CycloField, num: tuple, den: int):
        self.field = field
        self.num = num
        self.den = den

    @staticmethod
    def _make(field: CycloField, num: list, den: int) -> "Cyclo":
        if den < 0:
            num = [-c for c in num]
            den = -den
        g = den
        for c in num:
            if c:
                g = math.gcd(g, c)
                if g == 1:
                    break
        if g > 1:
            num = [c // g for c in num]
            den //= g
        return Cyclo(field, tuple(num), den)

    # -- ring structure ------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Cyclo):
            if other.field is not self.field:
                raise ValueError("cyclotomic order mismatch")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.rational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self, o
        g = math.gcd(a.den, b.den)
        da, db = b.den // g, a.den // g
        num = [x * da + y * db for x, y in zip(a.num, b.num)]
        return Cyclo._make(self.field, num, a.den * da)

    __radd__ = __add__

    def __neg__(self):
        return Cyclo(self.field, tuple(-c for c in self.num), self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        f = self.field
        deg = f.phi
        a, b = self.num, o.num
        conv = [0] * (2 * deg - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        num = conv[:deg]
        rows = f._rows
        for t in range(deg, 2 * deg - 1):
            c = conv[t]
            if c:
                row = rows[t]
                for j in range(deg):
                    num[j] += c * row[j]
        return Cyclo._make(f, num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "Cyclo":
        """Multiplicative inverse via extended gcd with Phi_N."""
        if not self:
            raise ZeroDivisionError("inverse of zero cyclotomic value")
        f = self.field
        phi = [Fraction(c) for c in cyclotomic_polynomial(f.order)]
        a = [Fraction(c, self.den) for c in self.num]
        # Extended Euclid: find u with u*a = gcd (a unit) mod Phi_N.
        r0, r1 = phi, _polytrim(a)
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while len(r1) > 1 or r1[0] != 0:
            q, r = _polydivmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _polysub(s0, _polymul(q, s1))
        lead = r0[-1]
        inv = [c / lead for c in s0]
        out = f.from_coeffs(inv[: f.phi] + [Fraction(0)] * 0)
        assert out * self == f.one
        return out

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = self.field.one
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- predicates and views -------------------------------------------

    def __bool__(self):
        return any(self.num)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def approx(self) -> complex:
        roots = self.field._root_complex
        z = 0j
        for t, c in enumerate(self.num):
            if c:
                z += c * roots[t]
        return z / self.den

    def coeffs(self) -> list[Fraction]:
        return [Fraction(c, self.den) for c in self.num]

    def rational_value(self) -> Fraction:
        """The value as a rational number; raises if not rational."""
        if any(self.num[1:]):
            raise ValueError("value is not rational")
        return Fraction(self.num[0], self.den)

    def to_json(self) -> dict:
        z = self.approx()
        return {
            "N": self.field.order,
            "coeffs": [[fr.numerator, fr.denominator] for fr in self.coeffs()],
            "approx": [z.real, z.imag],
        }

    def __repr__(self):
        terms = []
        for t, fr in enumerate(self.coeffs()):
            if fr:
                coef = "" if fr == 1 and t else str(fr)
                if t == 0:
                    terms.append(str(fr))
                elif t == 1:
                    terms.append(f"{coef}z")
                else:
                    terms.append(f"{coef}z^{t}")
        return " + ".join(terms) if terms else "0"


# -- small Fraction-polynomial helpers (used only by .inverse) -----------


def _polytrim(a):
    while len(a) > 1 and a[-1] == 0:
        a = a[:-1]
    return a


def _polysub(a, b):
    n = max(len(a), len(b))
    a = a + [Fraction(0)] * (n - len(a))
    b = b + [Fraction(0)] * (n - len(b))
    return _polytrim([x - y for x, y in zip(a, b)])


def _polymul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _polytrim(out)


def _polydivmod(a, b):
    a = list(a)
    db = len(b) - 1
    if len(a) - 1 < db:
        return [Fraction(0)], _polytrim(a)
    q = [Fraction(0)] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] / b[db]
        if c:
            q[i - db] = c
            for j in range(db + 1):
                a[i - db + j] -= c * b[j]
    return _polytrim(q), _polytrim(a)
