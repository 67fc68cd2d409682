"""Dense exact linear algebra over a cyclotomic field.

Everything here is plain Gaussian elimination with exact division; the
matrices in this project stay small (a few hundred rows at most), so no
fraction-free tricks are needed.  Matrices are lists of rows of Cyclo
values and are treated as immutable once built.
"""

from __future__ import annotations

from .cyclo import Cyclo, CycloField


class Mat:
    __slots__ = ("field", "rows", "nrows", "ncols")

    def __init__(self, field: CycloField, rows):
        self.field = field
        self.rows = [list(r) for r in rows]
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0

    @staticmethod
    def zeros(field, m, n):
        z = field.zero
        return Mat(field, [[z] * n for _ in range(m)])

    @staticmethod
    def identity(field, n):
        z, o = field.zero, field.one
        return Mat(field, [[o if i == j else z for j in range(n)] for i in range(n)])

    @staticmethod
    def diagonal(field, entries):
        z = field.zero
        n = len(entries)
        return Mat(field, [[entries[i] if i == j else z for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __matmul__(self, other: "Mat") -> "Mat":
        assert self.ncols == other.nrows
        z = self.field.zero
        out = [[z] * other.ncols for _ in range(self.nrows)]
        brows = other.rows
        for i, arow in enumerate(self.rows):
            orow = out[i]
            for k, a in enumerate(arow):
                if a:
                    for j, b in enumerate(brows[k]):
                        if b:
                            orow[j] = orow[j] + a * b
        return Mat(self.field, out)

    def __add__(self, other):
        return Mat(self.field, [[a + b for a, b in zip(r, s)]
                                for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other):
        return Mat(self.field, [[a - b for a, b in zip(r, s)]
                                for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return Mat(self.field, [[-a for a in r] for r in self.rows])

    def scale(self, c) -> "Mat":
        return Mat(self.field, [[a * c for a in r] for r in self.rows])

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return self.rows == other.rows

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.rows)

    def transpose(self) -> "Mat":
        return Mat(self.field, [list(col) for col in zip(*self.rows)])

    def trace(self) -> Cyclo:
        t = self.field.zero
        for i in range(min(self.nrows, self.ncols)):
            t = t + self.rows[i][i]
        return t

    def kron(self, other: "Mat") -> "Mat":
        z = self.field.zero
        m, n = self.nrows, self.ncols
        om, on = other.nrows, other.ncols
        out = [[z] * (n * on) for _ in range(m * om)]
        for i in range(m):
            for j in range(n):
                a = self.rows[i][j]
                if a:
                    for k in range(om):
                        orow = out[i * om + k]
                        brow = other.rows[k]
                        for l in range(on):
                            if brow[l]:
                                orow[j * on + l] = a * brow[l]
        return Mat(self.field, out)

    def rank(self) -> int:
        return len(_echelonize([list(r) for r in self.rows])[1])

    def det(self) -> Cyclo:
        assert self.nrows == self.ncols
        rows = [list(r) for r in self.rows]
        n = self.nrows
        out = self.field.one
        for col in range(n):
            piv = next((r for r in range(col, n) if rows[r][col]), None)
            if piv is None:
                return self.field.zero
            if piv != col:
                rows[col], rows[piv] = rows[piv], rows[col]
                out = -out
            out = out * rows[col][col]
            inv = rows[col][col].inverse()
            rows[col] = [x * inv for x in rows[col]]
            for r in range(col + 1, n):
                f = rows[r][col]
                if f:
                    rows[r] = [x - f * y for x, y in zip(rows[r], rows[col])]
        return out

    def inverse(self) -> "Mat":
        assert self.nrows == self.ncols
        n = self.nrows
        aug = [list(r) + list(e) for r, e in zip(self.rows, Mat.identity(self.field, n).rows)]
        reduced, pivots = _echelonize(aug, upto=n)
        if len(pivots) < n:
            raise ValueError("matrix is singular")
        return Mat(self.field, [row[n:] for row in reduced])

    def nullspace(self) -> list[list[Cyclo]]:
        """Basis of the right kernel."""
        reduced, pivots = _echelonize([list(r) for r in self.rows])
        pivot_cols = [c for c, _ in pivots]
        free_cols = [c for c in range(self.ncols) if c not in pivot_cols]
        z, o = self.field.zero, self.field.one
        basis = []
        for fc in free_cols:
            vec = [z] * self.ncols
            vec[fc] = o
            for (c, r) in reversed(pivots):
                vec[c] = -reduced[r][fc]
            basis.append(vec)
        return basis

    def solve(self, rhs: list, unique: bool = False) -> list[Cyclo]:
        """One exact solution of self @ x = rhs; raises if inconsistent."""
        aug = [list(r) + [b] for r, b in zip(self.rows, rhs)]
        reduced, pivots = _echelonize(aug, upto=self.ncols)
        pivot_rows = {r for _, r in pivots}
        for i, row in enumerate(reduced):
            if i not in pivot_rows and row[self.ncols]:
                raise ValueError("inconsistent linear system")
        if unique and len(pivots) < self.ncols:
            raise ValueError("underdetermined linear system")
        z = self.field.zero
        x = [z] * self.ncols
        for (c, r) in pivots:
            x[c] = reduced[r][self.ncols]
        return x


def _echelonize(rows, upto=None):
    """In-place RREF on the first `upto` columns; returns (rows, pivots).

    pivots is a list of (column, row) pairs in elimination order.
    """
    if not rows:
        return rows, []
    ncols = len(rows[0]) if upto is None else upto
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append((c, r))
        r += 1
        if r == len(rows):
            break
    return rows, pivots


class Echelon:
    """Incremental echelon basis of a subspace, for spans and membership."""

    def __init__(self, field: CycloField, ncols: int):
        self.field = field
        self.ncols = ncols
        self.pivots: dict[int, list] = {}

    def reduce(self, vec) -> list:
        vec = list(vec)
        for c, row in self.pivots.items():
            f = vec[c]
            if f:
                for j in range(self.ncols):
                    if row[j]:
                        vec[j] = vec[j] - f * row[j]
        return vec

    def add(self, vec) -> bool:
        """Insert vec into the span; True if it enlarged the space."""
        vec = self.reduce(vec)
        lead = next((j for j in range(self.ncols) if vec[j]), None)
        if lead is None:
            return False
        inv = vec[lead].inverse()
        self.pivots[lead] = [x * inv for x in vec]
        return True

    def contains(self, vec) -> bool:
        return not any(self.reduce(vec))

    @property
    def dim(self) -> int:
        return len(self.pivots)
