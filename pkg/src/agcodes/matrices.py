"""Dense matrices over GF(q): exact determinants, echelon forms, minors,
and filtered enumeration of the small matrix groups.

Matrices are immutable and hashable.  Row and column labels in the public
API are 1-based so that a minor taken on row set {1,2} and column set {1,3}
reads the same as the mathematical notation; storage is a flat row-major
tuple.  A 0x0 matrix has determinant 1, which makes the empty minor the
constant function 1.
"""

from __future__ import annotations

from itertools import combinations, product
from typing import Iterator

from . import limits
from .fields import GF

__all__ = [
    "MatrixGF",
    "rref_rows_with_transform",
    "enumerate_matrices",
    "enumerate_gl",
    "enumerate_sl",
    "enumerate_rref",
    "cauchy_binet",
]


class MatrixGF:
    __slots__ = ("gf", "nrows", "ncols", "_flat", "_hash")

    def __init__(self, gf: GF, nrows: int, ncols: int, flat: tuple[int, ...]):
        if nrows < 0 or ncols < 0:
            raise ValueError("matrix shape must be non-negative")
        if len(flat) != nrows * ncols:
            raise ValueError(f"need {nrows * ncols} entries, got {len(flat)}")
        if any(not 0 <= x < gf.q for x in flat):
            raise ValueError(f"entries must be element indices in [0, {gf.q})")
        self.gf = gf
        self.nrows = nrows
        self.ncols = ncols
        self._flat = tuple(flat)
        self._hash = hash((gf, nrows, ncols, self._flat))

    # -- constructors --

    @classmethod
    def from_rows(cls, gf: GF, rows: list | tuple) -> MatrixGF:
        rows = [tuple(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        flat = tuple(x for r in rows for x in r)
        return cls(gf, len(rows), ncols, flat)

    @classmethod
    def zeros(cls, gf: GF, nrows: int, ncols: int) -> MatrixGF:
        return cls(gf, nrows, ncols, (0,) * (nrows * ncols))

    @classmethod
    def identity(cls, gf: GF, n: int) -> MatrixGF:
        flat = tuple(1 if i == j else 0 for i in range(n) for j in range(n))
        return cls(gf, n, n, flat)

    # -- access --

    def entry(self, i: int, j: int) -> int:
        """Entry at 1-based position (i, j)."""
        if not (1 <= i <= self.nrows and 1 <= j <= self.ncols):
            raise IndexError(f"position ({i}, {j}) outside {self.nrows}x{self.ncols}")
        return self._flat[(i - 1) * self.ncols + (j - 1)]

    def row(self, i: int) -> tuple[int, ...]:
        if not 1 <= i <= self.nrows:
            raise IndexError(f"row {i} outside {self.nrows}x{self.ncols}")
        return self._flat[(i - 1) * self.ncols : i * self.ncols]

    def col(self, j: int) -> tuple[int, ...]:
        if not 1 <= j <= self.ncols:
            raise IndexError(f"column {j} outside {self.nrows}x{self.ncols}")
        return self._flat[j - 1 :: self.ncols] if self.ncols else ()

    def rows(self) -> list[tuple[int, ...]]:
        return [self.row(i) for i in range(1, self.nrows + 1)]

    @property
    def is_zero(self) -> bool:
        return not any(self._flat)

    # -- arithmetic --

    def _same_field(self, other: MatrixGF) -> None:
        if self.gf != other.gf:
            raise ValueError(f"field mismatch: {self.gf} vs {other.gf}")

    def __add__(self, other: MatrixGF) -> MatrixGF:
        self._same_field(other)
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch in addition")
        add = self.gf.add
        flat = tuple(add(a, b) for a, b in zip(self._flat, other._flat))
        return MatrixGF(self.gf, self.nrows, self.ncols, flat)

    def __sub__(self, other: MatrixGF) -> MatrixGF:
        return self + (-other)

    def __neg__(self) -> MatrixGF:
        neg = self.gf.neg
        return MatrixGF(self.gf, self.nrows, self.ncols, tuple(neg(a) for a in self._flat))

    def scale(self, c: int) -> MatrixGF:
        mul = self.gf.mul
        return MatrixGF(self.gf, self.nrows, self.ncols, tuple(mul(c, a) for a in self._flat))

    def __matmul__(self, other: MatrixGF) -> MatrixGF:
        self._same_field(other)
        if self.ncols != other.nrows:
            raise ValueError(
                f"shape mismatch in product: {self.nrows}x{self.ncols} @ {other.nrows}x{other.ncols}"
            )
        gf = self.gf
        add, mul = gf.add, gf.mul
        n, m, k = self.nrows, other.ncols, self.ncols
        bflat = other._flat
        out = []
        for i in range(n):
            arow = self._flat[i * k : (i + 1) * k]
            for j in range(m):
                s = 0
                for t in range(k):
                    x = arow[t]
                    if x:
                        s = add(s, mul(x, bflat[t * m + j]))
                out.append(s)
        return MatrixGF(gf, n, m, tuple(out))

    def transpose(self) -> MatrixGF:
        flat = tuple(self._flat[i * self.ncols + j] for j in range(self.ncols) for i in range(self.nrows))
        return MatrixGF(self.gf, self.ncols, self.nrows, flat)

    # -- submatrices and minors --

    def submatrix(self, rowset: tuple[int, ...], colset: tuple[int, ...]) -> MatrixGF:
        """Submatrix on 1-based, strictly increasing row and column labels."""
        _check_labels(rowset, self.nrows, "row")
        _check_labels(colset, self.ncols, "column")
        flat = tuple(self._flat[(i - 1) * self.ncols + (j - 1)] for i in rowset for j in colset)
        return MatrixGF(self.gf, len(rowset), len(colset), flat)

    def minor(self, rowset: tuple[int, ...], colset: tuple[int, ...]) -> int:
        """Determinant of the selected square submatrix; empty sets give 1."""
        if len(rowset) != len(colset):
            raise ValueError(f"minor needs equal set sizes, got {len(rowset)} and {len(colset)}")
        return self.submatrix(tuple(rowset), tuple(colset)).det()

    # -- elimination --

    def det(self) -> int:
        if self.nrows != self.ncols:
            raise ValueError(f"determinant of non-square {self.nrows}x{self.ncols} matrix")
        n = self.nrows
        if n == 0:
            return 1
        gf = self.gf
        sub, mul, inv = gf.sub, gf.mul, gf.inv
        rows = [list(self._flat[i * n : (i + 1) * n]) for i in range(n)]
        out = 1
        negate = False
        for c in range(n):
            piv = next((r for r in range(c, n) if rows[r][c]), None)
            if piv is None:
                return 0
            if piv != c:
                rows[c], rows[piv] = rows[piv], rows[c]
                negate = not negate
            pv = rows[c][c]
            out = mul(out, pv)
            pinv = inv(pv)
            for r in range(c + 1, n):
                f = rows[r][c]
                if f:
                    f = mul(f, pinv)
                    prow = rows[c]
                    rows[r] = [sub(x, mul(f, y)) for x, y in zip(rows[r], prow)]
        return gf.neg(out) if negate else out

    def _rref_transform(self) -> tuple[list[list[int]], list[list[int]], list[int]]:
        """Row reduce [self | I]; returns (rref rows, transform rows, pivot cols 0-based)."""
        gf = self.gf
        sub, mul, inv = gf.sub, gf.mul, gf.inv
        m, n = self.nrows, self.ncols
        work = [
            list(self._flat[i * n : (i + 1) * n]) + [1 if t == i else 0 for t in range(m)]
            for i in range(m)
        ]
        pivots: list[int] = []
        r = 0
        for c in range(n):
            if r == m:
                break
            piv = next((x for x in range(r, m) if work[x][c]), None)
            if piv is None:
                continue
            work[r], work[piv] = work[piv], work[r]
            pinv = inv(work[r][c])
            work[r] = [mul(pinv, x) for x in work[r]]
            for x in range(m):
                if x != r and work[x][c]:
                    f = work[x][c]
                    rr = work[r]
                    work[x] = [sub(a, mul(f, b)) for a, b in zip(work[x], rr)]
            pivots.append(c)
            r += 1
        rref = [row[:n] for row in work]
        trans = [row[n:] for row in work]
        return rref, trans, pivots

    def rank(self) -> int:
        return len(self._rref_transform()[2])

    def rref_rows(self) -> MatrixGF:
        """Reduced row echelon form, the canonical representative of the row space."""
        return MatrixGF.from_rows(self.gf, self._rref_transform()[0]) if self.nrows else self

    def rref_cols(self) -> MatrixGF:
        """Reduced column echelon form, the canonical representative of the column space."""
        return self.transpose().rref_rows().transpose()

    def inverse(self) -> MatrixGF:
        if self.nrows != self.ncols:
            raise ValueError("only square matrices can be inverted")
        rref, trans, pivots = self._rref_transform()
        if len(pivots) != self.nrows:
            raise ValueError("matrix is singular")
        return MatrixGF.from_rows(self.gf, trans)

    # -- plumbing --

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, MatrixGF)
            and self.gf == other.gf
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and self._flat == other._flat
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"MatrixGF({self.gf!r}, {self.nrows}x{self.ncols})"

    def __str__(self) -> str:
        return "\n".join(" ".join(str(x) for x in self.row(i)) for i in range(1, self.nrows + 1))

    def tolists(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(1, self.nrows + 1)]


def _check_labels(labels: tuple[int, ...], bound: int, kind: str) -> None:
    for a, b in zip(labels, labels[1:]):
        if a >= b:
            raise ValueError(f"{kind} labels must be strictly increasing, got {labels}")
    if labels and (labels[0] < 1 or labels[-1] > bound):
        raise ValueError(f"{kind} labels {labels} outside 1..{bound}")


def rref_rows_with_transform(m: MatrixGF) -> tuple[MatrixGF, MatrixGF]:
    """(R, T) with R the reduced row echelon form of m and R = T @ m, T invertible."""
    rref, trans, _ = m._rref_transform()
    return MatrixGF.from_rows(m.gf, rref), MatrixGF.from_rows(m.gf, trans)


def enumerate_matrices(gf: GF, nrows: int, ncols: int) -> Iterator[MatrixGF]:
    """All nrows x ncols matrices in row-major lexicographic entry order."""
    limits.ensure("matrices", gf.q ** (nrows * ncols), f"enumerating {nrows}x{ncols} matrices")
    for flat in product(range(gf.q), repeat=nrows * ncols):
        yield MatrixGF(gf, nrows, ncols, flat)


def enumerate_gl(n: int, gf: GF, cap: int | None = None) -> Iterator[MatrixGF]:
    """Invertible n x n matrices, filtered out of the full enumeration."""
    needed = gf.q ** (n * n)
    if cap is not None and needed > cap:
        raise limits.CapExceeded(f"GL({n}) enumeration needs {needed} candidates, cap {cap}")
    limits.ensure("matrices", needed, f"enumerating GL({n}, GF({gf.q}))")
    for m in product(range(gf.q), repeat=n * n):
        mat = MatrixGF(gf, n, n, m)
        if mat.det() != 0:
            yield mat


def enumerate_sl(n: int, gf: GF, cap: int | None = None) -> Iterator[MatrixGF]:
    """Determinant-one n x n matrices, filtered out of the full enumeration."""
    needed = gf.q ** (n * n)
    if cap is not None and needed > cap:
        raise limits.CapExceeded(f"SL({n}) enumeration needs {needed} candidates, cap {cap}")
    limits.ensure("matrices", needed, f"enumerating SL({n}, GF({gf.q}))")
    for m in product(range(gf.q), repeat=n * n):
        mat = MatrixGF(gf, n, n, m)
        if mat.det() == 1:
            yield mat


def enumerate_rref(k: int, n: int, gf: GF) -> Iterator[MatrixGF]:
    """Full-rank k x n reduced row echelon matrices, one per k-dimensional
    row space, ordered by (pivot column set, free entries) lexicographically."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    for pivots in combinations(range(n), k):
        free: list[tuple[int, int]] = []
        for i in range(k):
            for j in range(pivots[i] + 1, n):
                if j not in pivots:
                    free.append((i, j))
        for values in product(range(gf.q), repeat=len(free)):
            rows = [[0] * n for _ in range(k)]
            for i in range(k):
                rows[i][pivots[i]] = 1
            for (i, j), v in zip(free, values):
                rows[i][j] = v
            yield MatrixGF.from_rows(gf, rows)


def cauchy_binet(a: MatrixGF, b: MatrixGF) -> tuple[int, int]:
    """Both sides of the Cauchy-Binet identity for det(a @ b).

    a is r x s, b is s x r with r <= s.  Returns (det(a @ b), sum over all
    r-subsets I of columns of det(a[:, I]) * det(b[I, :])).  The two values
    are equal; returning both keeps the check independent of itself.
    """
    if a.nrows != b.ncols or a.ncols != b.nrows:
        raise ValueError("cauchy_binet needs shapes r x s and s x r")
    r, s = a.nrows, a.ncols
    if r > s:
        raise ValueError(f"need r <= s, got r={r}, s={s}")
    gf = a.gf
    lhs = (a @ b).det()
    rows_a = tuple(range(1, r + 1))
    rhs = 0
    for subset in combinations(range(1, s + 1), r):
        term = gf.mul(a.minor(rows_a, subset), b.minor(subset, rows_a))
        rhs = gf.add(rhs, term)
    return lhs, rhs
