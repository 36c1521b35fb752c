"""The function space spanned by all minors of an l x lp matrix of variables.

A basis element is the determinant of the submatrix on a row set and an equal
sized column set; the 0x0 minor is the constant 1.  The canonical basis order
is: ascending minor order, then lexicographic row set, then lexicographic
column set, so position 0 is always the constant and the last position is the
leading maximal minor for square shapes.  This order is an artifact
convention (any fixed order works); all exported coefficient vectors use it.

A combination is stored densely as a coefficient tuple over that basis.  The
text rendering is one line per nonzero term, "rowset|colset: coeff", with
"-|-" for the constant term.

The expansion engine `det_product_expansion` writes det(X[rows, :] @ V + N)
as a combination of minors of X: split the determinant by which columns are
taken from the constant block N (multilinearity in columns), expand those
columns out (generalized Laplace, sign (-1)^(sum of local row and column
positions)), and open the remaining product minor over column subsets of V
(Cauchy-Binet).  Row translations, basis changes of the column space, and
the translation expansion of det(X + B) are all instances of it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from typing import Iterator, NamedTuple

from .matrices import MatrixGF
from .params import CodeParams, dimension_formula

__all__ = [
    "MinorIndex",
    "MinorCombination",
    "minor_basis",
    "basis_positions",
    "leading_maximal_minor",
    "specialize_row",
    "specialize_col",
    "row_vanishing_locus",
    "det_product_expansion",
    "det_translation_expand",
    "absorb_translation",
]


class MinorIndex(NamedTuple):
    """Row set and column set of one minor, both 1-based strictly increasing."""

    rows: tuple[int, ...]
    cols: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.rows)

    def __str__(self) -> str:
        r = ",".join(str(i) for i in self.rows) or "-"
        c = ",".join(str(j) for j in self.cols) or "-"
        return f"{r}|{c}"


EMPTY_MINOR = MinorIndex((), ())


@lru_cache(maxsize=None)
def minor_basis(p: CodeParams) -> tuple[MinorIndex, ...]:
    """All minors of the l x lp variable matrix in canonical order."""
    out = []
    for size in range(p.l + 1):
        for rows in combinations(range(1, p.l + 1), size):
            for cols in combinations(range(1, p.lp + 1), size):
                out.append(MinorIndex(rows, cols))
    basis = tuple(out)
    assert len(basis) == dimension_formula(p)
    return basis


@lru_cache(maxsize=None)
def basis_positions(p: CodeParams) -> dict[MinorIndex, int]:
    return {mi: pos for pos, mi in enumerate(minor_basis(p))}


@dataclass(frozen=True)
class MinorCombination:
    """A linear combination of minors, dense over the canonical basis."""

    params: CodeParams
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        dim = dimension_formula(self.params)
        if len(self.coeffs) != dim:
            raise ValueError(f"need {dim} coefficients, got {len(self.coeffs)}")
        q = self.params.q
        if any(not 0 <= c < q for c in self.coeffs):
            raise ValueError(f"coefficients must be element indices in [0, {q})")

    # -- constructors --

    @classmethod
    def zero(cls, p: CodeParams) -> MinorCombination:
        return cls(p, (0,) * dimension_formula(p))

    @classmethod
    def constant(cls, p: CodeParams, c: int) -> MinorCombination:
        coeffs = [0] * dimension_formula(p)
        coeffs[0] = c
        return cls(p, tuple(coeffs))

    @classmethod
    def single(cls, p: CodeParams, mi: MinorIndex, c: int = 1) -> MinorCombination:
        coeffs = [0] * dimension_formula(p)
        coeffs[basis_positions(p)[mi]] = c
        return cls(p, tuple(coeffs))

    # -- queries --

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def coeff(self, mi: MinorIndex) -> int:
        return self.coeffs[basis_positions(self.params)[mi]]

    def support(self) -> set[MinorIndex]:
        basis = minor_basis(self.params)
        return {basis[i] for i, c in enumerate(self.coeffs) if c}

    def terms(self) -> Iterator[tuple[MinorIndex, int]]:
        basis = minor_basis(self.params)
        for i, c in enumerate(self.coeffs):
            if c:
                yield basis[i], c

    def evaluate(self, point: MatrixGF) -> int:
        """Value at an l x lp matrix over the same field."""
        p = self.params
        if (point.nrows, point.ncols) != (p.l, p.lp):
            raise ValueError(f"point must be {p.l}x{p.lp}, got {point.nrows}x{point.ncols}")
        gf = p.field()
        if point.gf != gf:
            raise ValueError(f"field mismatch: {point.gf} vs {gf}")
        out = 0
        for mi, c in self.terms():
            out = gf.add(out, gf.mul(c, point.minor(mi.rows, mi.cols)))
        return out

    # -- arithmetic --

    def _same_space(self, other: MinorCombination) -> None:
        if self.params != other.params:
            raise ValueError(f"space mismatch: {self.params} vs {other.params}")

    def __add__(self, other: MinorCombination) -> MinorCombination:
        self._same_space(other)
        add = self.params.field().add
        return MinorCombination(
            self.params, tuple(add(a, b) for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other: MinorCombination) -> MinorCombination:
        return self + (-other)

    def __neg__(self) -> MinorCombination:
        neg = self.params.field().neg
        return MinorCombination(self.params, tuple(neg(a) for a in self.coeffs))

    def scale(self, c: int) -> MinorCombination:
        mul = self.params.field().mul
        return MinorCombination(self.params, tuple(mul(c, a) for a in self.coeffs))

    # -- rendering --

    def to_text(self) -> str:
        return "\n".join(f"{mi}: {c}" for mi, c in self.terms())

    def __str__(self) -> str:
        return self.to_text() or "0"


def leading_maximal_minor(p: CodeParams) -> MinorCombination:
    """The determinant of the first l columns, the orbit anchor everywhere."""
    mi = MinorIndex(tuple(range(1, p.l + 1)), tuple(range(1, p.l + 1)))
    return MinorCombination.single(p, mi)


def _shift_past(labels: tuple[int, ...], removed: int) -> tuple[int, ...]:
    return tuple(x if x < removed else x - 1 for x in labels)


def specialize_row(f: MinorCombination, i: int, a: tuple[int, ...]) -> MinorCombination:
    """Substitute row i of the variable matrix by the constant vector a.

    The result lives on (l-1) x lp matrices: minors not involving row i map
    to the same minor with later rows relabelled; minors involving it are
    expanded along that row, each term picking up the sign of its position.
    """
    p = f.params
    if not 1 <= i <= p.l:
        raise ValueError(f"row {i} outside 1..{p.l}")
    if len(a) != p.lp:
        raise ValueError(f"need a vector of length {p.lp}, got {len(a)}")
    gf = p.field()
    if any(not 0 <= x < gf.q for x in a):
        raise ValueError("vector entries must be element indices")
    target = CodeParams(p.q, p.l - 1, p.lp)
    pos = basis_positions(target)
    out = [0] * dimension_formula(target)
    for mi, c in f.terms():
        if i not in mi.rows:
            j = pos[MinorIndex(_shift_past(mi.rows, i), mi.cols)]
            out[j] = gf.add(out[j], c)
            continue
        u = mi.rows.index(i) + 1
        rest_rows = _shift_past(tuple(r for r in mi.rows if r != i), i)
        for t, col in enumerate(mi.cols, start=1):
            v = gf.mul(c, a[col - 1])
            if v == 0:
                continue
            if (u + t) % 2:
                v = gf.neg(v)
            j = pos[MinorIndex(rest_rows, tuple(x for x in mi.cols if x != col))]
            out[j] = gf.add(out[j], v)
    return MinorCombination(target, tuple(out))


def specialize_col(f: MinorCombination, j: int, b: tuple[int, ...]) -> MinorCombination:
    """Substitute column j by the constant vector b; needs lp > l."""
    p = f.params
    if p.lp == p.l:
        raise ValueError("column specialization needs lp > l, the result must keep l <= lp")
    if not 1 <= j <= p.lp:
        raise ValueError(f"column {j} outside 1..{p.lp}")
    if len(b) != p.l:
        raise ValueError(f"need a vector of length {p.l}, got {len(b)}")
    gf = p.field()
    if any(not 0 <= x < gf.q for x in b):
        raise ValueError("vector entries must be element indices")
    target = CodeParams(p.q, p.l, p.lp - 1)
    pos = basis_positions(target)
    out = [0] * dimension_formula(target)
    for mi, c in f.terms():
        if j not in mi.cols:
            t = pos[MinorIndex(mi.rows, _shift_past(mi.cols, j))]
            out[t] = gf.add(out[t], c)
            continue
        v_local = mi.cols.index(j) + 1
        rest_cols = _shift_past(tuple(x for x in mi.cols if x != j), j)
        for u, row in enumerate(mi.rows, start=1):
            v = gf.mul(c, b[row - 1])
            if v == 0:
                continue
            if (u + v_local) % 2:
                v = gf.neg(v)
            t = pos[MinorIndex(tuple(r for r in mi.rows if r != row), rest_cols)]
            out[t] = gf.add(out[t], v)
    return MinorCombination(target, tuple(out))


def row_vanishing_locus(f: MinorCombination, i: int) -> list[tuple[int, ...]]:
    """All vectors a with specialize_row(f, i, a) identically zero.

    Zero is tested on coefficients, which is the same as vanishing at every
    point because the minors are linearly independent functions.  The sweep
    runs in lexicographic vector order, so the result is sorted.
    """
    p = f.params
    out = []
    for a in product(range(p.q), repeat=p.lp):
        if specialize_row(f, i, a).is_zero:
            out.append(a)
    return out


def det_product_expansion(
    p: CodeParams, rows: tuple[int, ...], col_mix: MatrixGF, shift: MatrixGF
) -> MinorCombination:
    """Coefficients of det(X[rows, :] @ col_mix + shift) over the minor basis.

    X is the l x lp variable matrix of `p`, `rows` selects r of its rows,
    col_mix is lp x r and mixes its columns, and shift is an r x r constant
    block.  See the module docstring for the three-step expansion.
    """
    gf = p.field()
    r = len(rows)
    if any(not 1 <= x <= p.l for x in rows) or list(rows) != sorted(set(rows)):
        raise ValueError(f"rows must be strictly increasing in 1..{p.l}, got {rows}")
    if (col_mix.nrows, col_mix.ncols) != (p.lp, r):
        raise ValueError(f"col_mix must be {p.lp}x{r}, got {col_mix.nrows}x{col_mix.ncols}")
    if (shift.nrows, shift.ncols) != (r, r):
        raise ValueError(f"shift must be {r}x{r}, got {shift.nrows}x{shift.ncols}")
    if col_mix.gf != gf or shift.gf != gf:
        raise ValueError("field mismatch")
    pos = basis_positions(p)
    out = [0] * dimension_formula(p)
    all_local = range(r)
    for s_cols in _subsets(all_local):
        rest_cols = tuple(c + 1 for c in all_local if c not in s_cols)
        s_cols_1 = tuple(c + 1 for c in s_cols)
        for t_rows in combinations(all_local, len(s_cols)):
            c_shift = shift.minor(tuple(t + 1 for t in t_rows), s_cols_1)
            if c_shift == 0:
                continue
            parity = (sum(t_rows) + sum(s_cols)) % 2
            x_rows = tuple(rows[t] for t in all_local if t not in t_rows)
            for picked in combinations(range(1, p.lp + 1), len(x_rows)):
                c_mix = col_mix.minor(picked, rest_cols)
                if c_mix == 0:
                    continue
                v = gf.mul(c_shift, c_mix)
                if parity:
                    v = gf.neg(v)
                j = pos[MinorIndex(x_rows, picked)]
                out[j] = gf.add(out[j], v)
    return MinorCombination(p, tuple(out))


def _subsets(r: range) -> Iterator[tuple[int, ...]]:
    for size in range(len(r) + 1):
        yield from combinations(r, size)


def det_translation_expand(b: MatrixGF) -> MinorCombination:
    """Expansion of det(X + b) over the minors of a square variable matrix."""
    if b.nrows != b.ncols:
        raise ValueError("translation expansion needs a square shift")
    n = b.nrows
    p = CodeParams(b.gf.q, n, n)
    return det_product_expansion(p, tuple(range(1, n + 1)), MatrixGF.identity(b.gf, n), b)


def absorb_translation(f: MinorCombination) -> tuple[MatrixGF, MinorCombination]:
    """Split f = det(X + A) + h for square shapes, h supported below order l-1.

    Requires the maximal minor coefficient of f to be 1.  A is read off the
    submaximal coefficients: entry (i, j) is the complementary-signed
    coefficient of the minor that deletes row i and column j.  A is unique;
    h is the exact remainder and never touches orders l and l-1.
    """
    p = f.params
    if p.l != p.lp:
        raise ValueError("translation absorption needs a square variable matrix")
    l = p.l
    gf = p.field()
    full = tuple(range(1, l + 1))
    if f.coeff(MinorIndex(full, full)) != 1:
        raise ValueError("the maximal minor coefficient must be 1")
    entries = []
    for i in range(1, l + 1):
        for j in range(1, l + 1):
            c = f.coeff(
                MinorIndex(tuple(r for r in full if r != i), tuple(s for s in full if s != j))
            )
            entries.append(gf.neg(c) if (i + j) % 2 else c)
    a = MatrixGF(gf, l, l, tuple(entries))
    h = f - det_translation_expand(a)
    assert all(mi.order <= l - 2 for mi in h.support())
    return a, h
