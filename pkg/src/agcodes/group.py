"""The affine symmetry group of the evaluation domain and its two actions.

An element is a map P -> P A^(-1) + u with u an l x lp translation and A an
invertible lp x lp matrix; composition follows the semidirect product of the
translation group with GL(lp).  The group acts on points, hence by
coordinate permutation on codewords, and symbolically on minor combinations
by substitution: act_on_poly(phi, f) is the exact coefficient vector of
f(X A^(-1) + u), computed by the expansion engine, never by interpolation.

The orbit of the leading maximal minor under this action is the full set of
minimum weight codewords; generate_min_weight_polys walks a bijective
parametrization of it (scalar, canonical column space representative,
translation block) and min_weight_witness inverts it: given f, it either
reconstructs the parameters or refutes membership at one of the structural
steps (empty vanishing locus, stray low-order support, locus dimension,
final anchor comparison).
"""

from __future__ import annotations

from itertools import product

from . import limits
from .code import point_index, points
from .matrices import MatrixGF, enumerate_gl, rref_rows_with_transform, enumerate_rref
from .minors import (
    MinorCombination,
    MinorIndex,
    basis_positions,
    det_product_expansion,
    leading_maximal_minor,
    row_vanishing_locus,
)
from .params import CodeParams, group_order_formula, min_weight_count_formula

__all__ = [
    "AffineMap",
    "apply_point",
    "compose",
    "inverse",
    "act_on_poly",
    "permutation",
    "apply_permutation",
    "enumerate_group",
    "stabilizer_test",
    "stabilizer_criterion",
    "generate_min_weight_polys",
    "min_weight_witness",
    "is_min_weight_form",
]


class AffineMap:
    """P -> P A^(-1) + u on the l x lp matrix domain of `params`."""

    __slots__ = ("params", "u", "a", "a_inv")

    def __init__(self, params: CodeParams, u: MatrixGF, a: MatrixGF):
        gf = params.field()
        if (u.nrows, u.ncols) != (params.l, params.lp) or u.gf != gf:
            raise ValueError(f"translation must be {params.l}x{params.lp} over GF({params.q})")
        if (a.nrows, a.ncols) != (params.lp, params.lp) or a.gf != gf:
            raise ValueError(f"the linear part must be {params.lp}x{params.lp} over GF({params.q})")
        try:
            self.a_inv = a.inverse()
        except ValueError:
            raise ValueError("the linear part must be invertible") from None
        self.params = params
        self.u = u
        self.a = a

    @classmethod
    def identity(cls, params: CodeParams) -> AffineMap:
        gf = params.field()
        return cls(params, MatrixGF.zeros(gf, params.l, params.lp), MatrixGF.identity(gf, params.lp))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, AffineMap)
            and self.params == other.params
            and self.u == other.u
            and self.a == other.a
        )

    def __hash__(self) -> int:
        return hash((self.params, self.u, self.a))

    def __repr__(self) -> str:
        return f"AffineMap(u={self.u._flat}, a={self.a._flat})"


def apply_point(phi: AffineMap, point: MatrixGF) -> MatrixGF:
    """The image P A^(-1) + u of a domain point."""
    return point @ phi.a_inv + phi.u


def compose(phi: AffineMap, psi: AffineMap) -> AffineMap:
    """The map acting as phi after psi."""
    if phi.params != psi.params:
        raise ValueError("cannot compose maps on different domains")
    return AffineMap(phi.params, psi.u @ phi.a_inv + phi.u, phi.a @ psi.a)


def inverse(phi: AffineMap) -> AffineMap:
    """The two-sided inverse map."""
    return AffineMap(phi.params, -(phi.u @ phi.a), phi.a_inv)


def act_on_poly(phi: AffineMap, f: MinorCombination) -> MinorCombination:
    """The exact coefficient vector of f(X A^(-1) + u).

    Each basis minor on rows R and columns C becomes
    det(X[R, :] @ A^(-1)[:, C] + u[R, C]), expanded symbolically.
    """
    p = f.params
    if phi.params != p:
        raise ValueError("map and combination live on different domains")
    gf = p.field()
    out = MinorCombination.zero(p)
    all_rows = tuple(range(1, p.lp + 1))
    for mi, c in f.terms():
        if mi.order == 0:
            out = out + MinorCombination.constant(p, c)
            continue
        v = phi.a_inv.submatrix(all_rows, mi.cols)
        n = phi.u.submatrix(mi.rows, mi.cols)
        out = out + det_product_expansion(p, mi.rows, v, n).scale(c)
    return out


def permutation(phi: AffineMap) -> tuple[int, ...]:
    """The coordinate permutation of phi: position j holds the index of phi(P_j).

    Applying it to the codeword of f (new[j] = old[perm[j]]) yields the
    codeword of act_on_poly(phi, f).
    """
    return tuple(point_index(apply_point(phi, pt)) for pt in points(phi.params))


def apply_permutation(vector: tuple[int, ...], perm: tuple[int, ...]) -> tuple[int, ...]:
    """Pull back a codeword along a coordinate permutation."""
    return tuple(vector[j] for j in perm)


def enumerate_group(p: CodeParams, cap: int | None = None):
    """All affine maps, translations outer, linear parts inner, both in
    lexicographic entry order."""
    order = group_order_formula(p)
    if cap is not None and order > cap:
        raise limits.CapExceeded(f"group of {p} has order {order}, cap {cap}")
    limits.ensure("group", order, f"enumerating the affine group of {p}")
    gf = p.field()
    linear = list(enumerate_gl(p.lp, gf))
    for flat in product(range(p.q), repeat=p.delta):
        u = MatrixGF(gf, p.l, p.lp, flat)
        for a in linear:
            yield AffineMap(p, u, a)


def stabilizer_test(phi: AffineMap) -> bool:
    """Whether phi fixes the leading maximal minor as a function."""
    anchor = leading_maximal_minor(phi.params)
    return act_on_poly(phi, anchor) == anchor


def stabilizer_criterion(phi: AffineMap) -> bool:
    """Structural test for the same stabilizer, without symbolic expansion.

    phi fixes the anchor iff the first l columns of u vanish and the first l
    columns of A^(-1) are an invertible block of determinant 1 on the top l
    rows with zeros below.
    """
    p = phi.params
    l = p.l
    lead = tuple(range(1, l + 1))
    if not phi.u.submatrix(tuple(range(1, l + 1)), lead).is_zero:
        return False
    m = phi.a_inv.submatrix(tuple(range(1, p.lp + 1)), lead)
    top = m.submatrix(lead, lead)
    bottom = m.submatrix(tuple(range(l + 1, p.lp + 1)), lead)
    return bottom.is_zero and top.det() == 1


def _canonical_column_reps(p: CodeParams) -> list[MatrixGF]:
    """One full-rank lp x l matrix per l-dimensional column space, in
    reduced column echelon form; transposes of the row echelon enumeration."""
    return [r.transpose() for r in enumerate_rref(p.l, p.lp, p.field())]


def generate_min_weight_polys(p: CodeParams, cap: int | None = None) -> list[MinorCombination]:
    """Every minimum weight combination, sorted by coefficient vector.

    The parametrization runs over nonzero scalars, canonical column space
    representatives M (lp x l), and translation blocks m (l x l), emitting
    scalar * det(X M + m); it is bijective onto the minimum weight count,
    which is asserted.
    """
    count = min_weight_count_formula(p)
    if cap is not None and count > cap:
        raise limits.CapExceeded(f"minimum weight family of {p} has size {count}, cap {cap}")
    limits.ensure("group", count, f"generating the minimum weight family of {p}")
    gf = p.field()
    lead = tuple(range(1, p.l + 1))
    out = []
    for rep in _canonical_column_reps(p):
        for flat in product(range(p.q), repeat=p.l * p.l):
            shift = MatrixGF(gf, p.l, p.l, flat)
            base = det_product_expansion(p, lead, rep, shift)
            for lam in range(1, p.q):
                out.append(base.scale(lam))
    assert len(out) == count
    assert len({f.coeffs for f in out}) == count, "parametrization must be bijective"
    out.sort(key=lambda f: f.coeffs)
    return out


def min_weight_witness(
    f: MinorCombination,
) -> tuple[int, MatrixGF, MatrixGF] | None:
    """Invert the minimum weight parametrization, or refute membership.

    Returns (scalar, M, m) with f = scalar * det(X M + m), M the canonical
    column space representative, or None when f is not of minimum weight.
    The reconstruction follows the structure of the family: translate a row
    vanishing point of every row to zero, check that only full-order minors
    survive, straighten the remaining column space, and compare against the
    anchor minor.
    """
    p = f.params
    if p.l == 0:
        raise ValueError("the minimum weight family needs l >= 1")
    if f.is_zero:
        return None
    l, lp = p.l, p.lp
    gf = p.field()
    # a vanishing point for every row, lexicographically smallest
    rows_u = []
    for i in range(1, l + 1):
        locus = row_vanishing_locus(f, i)
        if not locus:
            return None
        rows_u.append(locus[0])
    u = MatrixGF.from_rows(gf, rows_u)
    translate = AffineMap(p, u, MatrixGF.identity(gf, lp))
    g = act_on_poly(translate, f)
    if any(mi.order < l for mi in g.support()):
        return None
    if l == lp:
        straighten = AffineMap.identity(p)
    else:
        locus = row_vanishing_locus(g, 1)
        stacked = MatrixGF.from_rows(gf, [list(v) for v in locus])
        reduced = stacked.rref_rows()
        basis_rows = [reduced.row(i) for i in range(1, reduced.rank() + 1)]
        if len(basis_rows) < lp - l:
            return None
        basis_rows = basis_rows[: lp - l]
        # complete to an invertible matrix whose last lp-l rows are the basis
        completion: list[tuple[int, ...]] = []
        have = MatrixGF.from_rows(gf, basis_rows).rank()
        for j in range(lp):
            cand = tuple(1 if t == j else 0 for t in range(lp))
            trial = MatrixGF.from_rows(gf, [*completion, cand, *basis_rows])
            if trial.rank() > have + len(completion):
                completion.append(cand)
            if len(completion) == l:
                break
        a_inv = MatrixGF.from_rows(gf, [*completion, *basis_rows])
        straighten = AffineMap(p, MatrixGF.zeros(gf, l, lp), a_inv.inverse())
    h = act_on_poly(straighten, g)
    anchor_pos = basis_positions(p)[
        MinorIndex(tuple(range(1, l + 1)), tuple(range(1, l + 1)))
    ]
    scalar = h.coeffs[anchor_pos]
    if scalar == 0 or any(c and i != anchor_pos for i, c in enumerate(h.coeffs)):
        return None
    # f = scalar * anchor(X psi_A^(-1) + psi_u) for psi = (translate o straighten)^(-1)
    psi = inverse(compose(translate, straighten))
    lead = tuple(range(1, l + 1))
    m_raw = psi.a_inv.submatrix(tuple(range(1, lp + 1)), lead)
    shift_raw = psi.u.submatrix(lead, lead)
    # straighten the column space representative
    reduced, trans = rref_rows_with_transform(m_raw.transpose())
    m_canon = reduced.transpose()
    g_change = trans.transpose()
    scalar_canon = gf.mul(scalar, gf.inv(g_change.det()))
    shift_canon = shift_raw @ g_change
    witness = det_product_expansion(p, lead, m_canon, shift_canon).scale(scalar_canon)
    if witness != f:
        return None
    return scalar_canon, m_canon, shift_canon


def is_min_weight_form(f: MinorCombination) -> bool:
    """Whether f is a minimum weight combination (has a valid witness)."""
    return min_weight_witness(f) is not None
