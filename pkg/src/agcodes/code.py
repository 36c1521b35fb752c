"""Evaluation codes from minor combinations, and exhaustive scan engines.

The evaluation domain is all l x lp matrices over GF(q).  A point's index is
its flat row-major entry tuple read as a base-q integer, entry (1,1) least
significant, so index 0 is the zero matrix and the enumeration is the natural
odometer over entries.  The generator matrix evaluates the canonical minor
basis at every point in index order; messages are coefficient vectors over
that basis.

Minimum distance and weight distributions come from full message scans.  The
scans partition the message range into disjoint chunks merged by min / sum,
so the result does not depend on the worker count; binary codes pack
codewords into integers and use popcount, everything else counts nonzero
entries directly.  Early exit is taken only when the caller passes a
conjectured distance; blind runs see every message.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from functools import lru_cache

from . import limits
from .matrices import MatrixGF
from .minors import MinorCombination, minor_basis, row_vanishing_locus
from .params import CodeParams, dimension_formula, gl_order, min_distance_formula

__all__ = [
    "point_index",
    "point_matrix",
    "points",
    "LinearCode",
    "build",
    "evaluate_vector",
    "weight",
    "min_distance",
    "weight_distribution",
    "min_weight_codewords",
    "max_minor_weight",
    "rowspec_weight_bound",
]


def point_index(point: MatrixGF) -> int:
    """Base-q integer of the flat entry tuple, entry (1,1) least significant."""
    q = point.gf.q
    out = 0
    for x in reversed(point._flat):
        out = out * q + x
    return out


def point_matrix(p: CodeParams, index: int) -> MatrixGF:
    """Inverse of point_index for the l x lp domain of p."""
    if not 0 <= index < p.npoints:
        raise ValueError(f"point index {index} outside [0, {p.npoints})")
    q = p.q
    flat = []
    for _ in range(p.delta):
        flat.append(index % q)
        index //= q
    return MatrixGF(p.field(), p.l, p.lp, tuple(flat))


@lru_cache(maxsize=None)
def points(p: CodeParams) -> tuple[MatrixGF, ...]:
    """The full evaluation domain in point index order."""
    limits.ensure("points", p.npoints, f"enumerating the domain of {p}")
    return tuple(point_matrix(p, i) for i in range(p.npoints))


class LinearCode:
    """A linear code given by an explicit generator matrix of element indices."""

    def __init__(
        self,
        gf,
        generator: tuple[tuple[int, ...], ...],
        params: CodeParams | None = None,
        label: str = "",
    ):
        generator = tuple(tuple(r) for r in generator)
        if not generator:
            raise ValueError("a generator needs at least one row")
        n = len(generator[0])
        if any(len(r) != n for r in generator):
            raise ValueError("ragged generator rows")
        if any(not 0 <= x < gf.q for r in generator for x in r):
            raise ValueError("generator entries must be element indices")
        self.gf = gf
        self.generator = generator
        self.params = params
        self.label = label
        self._cache: dict = {}

    @property
    def n(self) -> int:
        return len(self.generator[0])

    @property
    def k(self) -> int:
        return len(self.generator)

    def generator_matrix(self) -> MatrixGF:
        return MatrixGF.from_rows(self.gf, self.generator)

    def encode(self, message: tuple[int, ...]) -> tuple[int, ...]:
        """The codeword of a message, one coefficient per generator row."""
        if len(message) != self.k:
            raise ValueError(f"message length must be {self.k}, got {len(message)}")
        gf = self.gf
        add, mul = gf.add, gf.mul
        out = [0] * self.n
        for c, row in zip(message, self.generator):
            if c == 0:
                continue
            if c == 1:
                out = [add(a, b) for a, b in zip(out, row)]
            else:
                out = [add(a, mul(c, b)) for a, b in zip(out, row)]
        return tuple(out)

    def contains(self, vector: tuple[int, ...]) -> bool:
        """Row space membership, decided by a rank comparison."""
        if len(vector) != self.n:
            raise ValueError(f"vector length must be {self.n}, got {len(vector)}")
        g = self.generator_matrix()
        stacked = MatrixGF.from_rows(self.gf, list(self.generator) + [tuple(vector)])
        return stacked.rank() == g.rank()

    def _packed_rows(self) -> list[int]:
        # binary fast path: row j bit at position j of the integer
        key = "packed"
        if key not in self._cache:
            self._cache[key] = [
                sum(bit << j for j, bit in enumerate(row)) for row in self.generator
            ]
        return self._cache[key]

    def __repr__(self) -> str:
        tag = self.label or "linear code"
        return f"<{tag} [{self.n}, {self.k}] over GF({self.gf.q})>"


@lru_cache(maxsize=None)
def build(p: CodeParams) -> LinearCode:
    """The evaluation code of the full minor space on the domain of p."""
    gf = p.field()
    pts = points(p)
    rows = []
    for mi in minor_basis(p):
        rows.append(tuple(pt.minor(mi.rows, mi.cols) for pt in pts))
    code = LinearCode(
        gf, tuple(rows), params=p, label=f"affine[q={p.q},l={p.l},lp={p.lp}]"
    )
    if code.generator_matrix().rank() != code.k:
        raise AssertionError(f"evaluation matrix of {p} is rank deficient")
    if any(all(row[j] == 0 for row in code.generator) for j in range(code.n)):
        raise AssertionError(f"evaluation matrix of {p} has an all-zero column")
    return code


def evaluate_vector(f: MinorCombination) -> tuple[int, ...]:
    """The codeword of f: its values over the point enumeration."""
    return build(f.params).encode(f.coeffs)


def weight(vector: tuple[int, ...]) -> int:
    """Hamming weight."""
    return sum(1 for x in vector if x)


# -- exhaustive message scans --


def _scan_range(
    code: LinearCode,
    lo: int,
    hi: int,
    mode: str,
    early_exit_at: int | None,
) -> tuple[int, dict[int, int], list[int]]:
    """Scan messages lo..hi-1; returns (min weight, distribution, messages at min).

    The distribution is filled only in mode "dist", the message list only in
    mode "words"; the minimum is always tracked.
    """
    gf = code.gf
    q = gf.q
    k, n = code.k, code.n
    best = n + 1
    dist: dict[int, int] = {}
    hits: list[int] = []
    if q == 2:
        rows = code._packed_rows()
        for msg in range(lo, hi):
            cw = 0
            mm = msg
            while mm:
                low = mm & -mm
                cw ^= rows[low.bit_length() - 1]
                mm ^= low
            w = cw.bit_count()
            if mode == "dist":
                dist[w] = dist.get(w, 0) + 1
            if w < best:
                best = w
                if mode == "words":
                    hits = [msg]
                if early_exit_at is not None and best <= early_exit_at and mode == "min":
                    return best, dist, hits
            elif w == best and mode == "words":
                hits.append(msg)
        return best, dist, hits
    add, mul = gf.add, gf.mul
    scaled = [
        [None] + [[mul(c, x) for x in row] for c in range(1, q)] for row in code.generator
    ]
    for msg in range(lo, hi):
        out = [0] * n
        mm = msg
        r = 0
        while mm:
            d = mm % q
            if d:
                srow = scaled[r][d]
                out = [add(a, b) for a, b in zip(out, srow)]
            mm //= q
            r += 1
        w = sum(1 for x in out if x)
        if mode == "dist":
            dist[w] = dist.get(w, 0) + 1
        if w < best:
            best = w
            if mode == "words":
                hits = [msg]
            if early_exit_at is not None and best <= early_exit_at and mode == "min":
                return best, dist, hits
        elif w == best and mode == "words":
            hits.append(msg)
    return best, dist, hits


def _check_workers(workers: int) -> None:
    if workers < 1:
        raise ValueError(f"workers must be positive, got {workers}")


def _scan(
    code: LinearCode,
    mode: str,
    early_exit_at: int | None = None,
    workers: int = 1,
) -> tuple[int, dict[int, int], list[int]]:
    total = code.gf.q**code.k
    limits.ensure("messages", total, f"scanning {code!r}")
    chunks = []
    span = (total - 1 + workers - 1) // workers
    for w in range(workers):
        lo = 1 + w * span
        hi = min(1 + (w + 1) * span, total)
        if lo < hi:
            chunks.append((lo, hi))
    if len(chunks) == 1:
        parts = [_scan_range(code, *chunks[0], mode, early_exit_at)]
    else:
        with ThreadPoolExecutor(max_workers=len(chunks)) as pool:
            parts = list(
                pool.map(lambda c: _scan_range(code, c[0], c[1], mode, early_exit_at), chunks)
            )
    best = min(p[0] for p in parts)
    dist: dict[int, int] = {}
    for p in parts:
        for w, c in p[1].items():
            dist[w] = dist.get(w, 0) + c
    msgs = [m for p in parts for m in p[2] if p[0] == best]
    return best, dist, msgs


def min_distance(
    code: LinearCode, *, early_exit_at: int | None = None, workers: int = 1
) -> int:
    """Minimum weight over all nonzero messages.

    With early_exit_at set, the scan stops as soon as a codeword of that
    weight shows up; pass it only when that value is known to be a lower
    bound (the closed formula).  Without it, every message is visited.
    """
    _check_workers(workers)
    key = ("mindist", early_exit_at)
    if key not in code._cache:
        code._cache[key] = _scan(code, "min", early_exit_at, workers)[0]
    return code._cache[key]


def weight_distribution(code: LinearCode, *, workers: int = 1) -> dict[int, int]:
    """Weight -> count over all q^k messages, including the zero codeword."""
    _check_workers(workers)
    if "dist" not in code._cache:
        _, dist, _ = _scan(code, "dist", None, workers)
        dist[0] = dist.get(0, 0) + 1
        code._cache["dist"] = dict(sorted(dist.items()))
    return dict(code._cache["dist"])


def min_weight_codewords(code: LinearCode, *, workers: int = 1) -> list[tuple[int, ...]]:
    """All codewords of minimum weight, in message index order."""
    _check_workers(workers)
    if "minwords" not in code._cache:
        _, _, msgs = _scan(code, "words", None, workers)
        out = []
        q, k = code.gf.q, code.k
        for m in msgs:
            digits = []
            mm = m
            for _ in range(k):
                digits.append(mm % q)
                mm //= q
            out.append(code.encode(tuple(digits)))
        code._cache["minwords"] = out
    return list(code._cache["minwords"])


def max_minor_weight(p: CodeParams) -> int:
    """Codeword weight of a maximal minor: q^(delta - l^2) * |GL(l, GF(q))|.

    This counts the matrices whose selected l x l submatrix is invertible:
    the free entries are unconstrained, the submatrix ranges over GL.
    """
    return p.q ** (p.delta - p.l * p.l) * gl_order(p.l, p.q)


def rowspec_weight_bound(f: MinorCombination, i: int) -> tuple[Fraction, int]:
    """(lower bound from the row-i vanishing locus, actual weight of f).

    With t points in the locus, the weight of a nonzero f is at least
    (q^lp - t) / (q^lp - q^(lp-l)) times the minimum distance; the actual
    weight is returned alongside for the caller to compare.
    """
    p = f.params
    if f.is_zero:
        raise ValueError("the zero combination has no weight bound")
    t = len(row_vanishing_locus(f, i))
    d = min_distance_formula(p)
    denom = p.q**p.lp - p.q ** (p.lp - p.l)
    bound = Fraction((p.q**p.lp - t) * d, denom)
    actual = weight(evaluate_vector(f))
    return bound, actual
