"""The affine substitution group: composition laws, the symbolic action
against a pointwise oracle, coordinate permutations, stabilizers, the
minimum weight family and its witness reconstruction."""

import random

import pytest

from agcodes.code import build, evaluate_vector, points, weight
from agcodes.fields import field_for_order
from agcodes.group import (
    AffineMap,
    act_on_poly,
    apply_permutation,
    apply_point,
    compose,
    enumerate_group,
    generate_min_weight_polys,
    inverse,
    is_min_weight_form,
    min_weight_witness,
    permutation,
    stabilizer_criterion,
    stabilizer_test,
)
from agcodes.limits import CapExceeded
from agcodes.matrices import MatrixGF
from agcodes.minors import (
    MinorCombination,
    MinorIndex,
    det_product_expansion,
    leading_maximal_minor,
)
from agcodes.params import (
    CodeParams,
    dimension_formula,
    group_order_formula,
    min_distance_formula,
    min_weight_count_formula,
    stabilizer_order_formula,
)

P222 = CodeParams(2, 2, 2)
P223 = CodeParams(2, 2, 3)


def rand_combination(rng, p):
    k = dimension_formula(p)
    while True:
        coeffs = tuple(rng.randrange(p.q) for _ in range(k))
        if any(coeffs):
            return MinorCombination(p, coeffs)


def rand_map(rng, p):
    gf = p.field()
    u = MatrixGF(gf, p.l, p.lp, tuple(rng.randrange(p.q) for _ in range(p.delta)))
    while True:
        a = MatrixGF(gf, p.lp, p.lp, tuple(rng.randrange(p.q) for _ in range(p.lp**2)))
        if a.det() != 0:
            return AffineMap(p, u, a)


def test_affine_map_validation():
    gf = field_for_order(2)
    with pytest.raises(ValueError):
        AffineMap(P222, MatrixGF.zeros(gf, 2, 3), MatrixGF.identity(gf, 2))
    with pytest.raises(ValueError):
        AffineMap(P222, MatrixGF.zeros(gf, 2, 2), MatrixGF.zeros(gf, 2, 2))
    with pytest.raises(ValueError):
        AffineMap(P222, MatrixGF.zeros(field_for_order(4), 2, 2), MatrixGF.identity(gf, 2))


def test_identity_and_apply_point():
    rng = random.Random(3)
    e = AffineMap.identity(P223)
    for pt in points(P223):
        assert apply_point(e, pt) == pt
    phi = rand_map(rng, P223)
    gf = P223.field()
    pt = points(P223)[13]
    assert apply_point(phi, pt) == pt @ phi.a_inv + phi.u


def test_composition_laws():
    rng = random.Random(5)
    p = P223
    e = AffineMap.identity(p)
    pts = points(p)
    for _ in range(15):
        phi, psi, chi = (rand_map(rng, p) for _ in range(3))
        assert compose(phi, e) == compose(e, phi) == phi
        assert compose(phi, inverse(phi)) == e
        assert compose(inverse(phi), phi) == e
        assert compose(compose(phi, psi), chi) == compose(phi, compose(psi, chi))
        for pt in (pts[0], pts[17], pts[42]):
            assert apply_point(compose(phi, psi), pt) == apply_point(phi, apply_point(psi, pt))
    with pytest.raises(ValueError):
        compose(rand_map(rng, P222), rand_map(rng, P223))


def test_act_pointwise_oracle():
    rng = random.Random(7)
    for p in (P222, P223, CodeParams(3, 1, 2)):
        for _ in range(12):
            f, phi = rand_combination(rng, p), rand_map(rng, p)
            g = act_on_poly(phi, f)
            for pt in points(p):
                assert g.evaluate(pt) == f.evaluate(apply_point(phi, pt))


def test_act_structure():
    rng = random.Random(11)
    p = P222
    e = AffineMap.identity(p)
    for _ in range(10):
        f, g = rand_combination(rng, p), rand_combination(rng, p)
        phi, psi = rand_map(rng, p), rand_map(rng, p)
        assert act_on_poly(e, f) == f
        assert act_on_poly(phi, f + g) == act_on_poly(phi, f) + act_on_poly(phi, g)
        # substitution reverses the order of composition
        assert act_on_poly(phi, act_on_poly(psi, f)) == act_on_poly(compose(psi, phi), f)
        # and is undone by the inverse map
        assert act_on_poly(inverse(phi), act_on_poly(phi, f)) == f
    with pytest.raises(ValueError):
        act_on_poly(rand_map(rng, P223), rand_combination(rng, P222))


def test_permutation_properties():
    rng = random.Random(13)
    for p in (P222, CodeParams(3, 1, 2)):
        n = p.npoints
        for _ in range(10):
            phi, psi = rand_map(rng, p), rand_map(rng, p)
            perm = permutation(phi)
            assert sorted(perm) == list(range(n))
            f = rand_combination(rng, p)
            assert apply_permutation(evaluate_vector(f), perm) == evaluate_vector(
                act_on_poly(phi, f)
            )
            # array composition follows the group composition
            combined = permutation(compose(phi, psi))
            assert combined == tuple(permutation(phi)[t] for t in permutation(psi))


def test_enumerate_group():
    p = CodeParams(2, 1, 2)
    group = list(enumerate_group(p))
    assert len(group) == group_order_formula(p) == 24
    assert len(set(group)) == 24
    assert AffineMap.identity(p) in group
    with pytest.raises(CapExceeded):
        list(enumerate_group(P222, cap=50))


def test_stabilizer_routes_agree():
    p = CodeParams(3, 1, 1)
    group = list(enumerate_group(p))
    assert len(group) == 6
    stab = [phi for phi in group if stabilizer_test(phi)]
    assert len(stab) == stabilizer_order_formula(p) == 1
    for phi in group:
        assert stabilizer_criterion(phi) == stabilizer_test(phi)
    # sampled agreement on a bigger shape
    rng = random.Random(17)
    for _ in range(25):
        phi = rand_map(rng, P223)
        assert stabilizer_criterion(phi) == stabilizer_test(phi)


def test_generate_min_weight_family():
    fam = generate_min_weight_polys(P222)
    assert len(fam) == min_weight_count_formula(P222) == 16
    assert len({f.coeffs for f in fam}) == 16
    assert [f.coeffs for f in fam] == sorted(f.coeffs for f in fam)
    d = min_distance_formula(P222)
    for f in fam:
        assert weight(evaluate_vector(f)) == d
        assert is_min_weight_form(f)

    p12 = CodeParams(2, 1, 2)
    fam12 = generate_min_weight_polys(p12)
    assert len(fam12) == min_weight_count_formula(p12) == 6

    p11 = CodeParams(3, 1, 1)
    fam11 = generate_min_weight_polys(p11)
    assert len(fam11) == 6
    with pytest.raises(CapExceeded):
        generate_min_weight_polys(P223, cap=10)


def test_witness_round_trip():
    rng = random.Random(19)
    for p in (P222, CodeParams(2, 1, 2), CodeParams(3, 1, 1)):
        lead = tuple(range(1, p.l + 1))
        for f in generate_min_weight_polys(p):
            got = min_weight_witness(f)
            assert got is not None
            scalar, m, shift = got
            rebuilt = det_product_expansion(p, lead, m, shift).scale(scalar)
            assert rebuilt == f
            # the column space representative is column reduced
            assert m.transpose().rref_rows().transpose() == m


def test_witness_known_forms():
    lead223 = leading_maximal_minor(P223)
    scalar, m, shift = min_weight_witness(lead223)
    assert scalar == 1
    assert m == MatrixGF.from_rows(field_for_order(2), [(1, 0), (0, 1), (0, 0)])
    assert shift.is_zero

    p11 = CodeParams(2, 1, 1)
    f = MinorCombination.constant(p11, 1) + MinorCombination.single(
        p11, MinorIndex((1,), (1,)), 1
    )
    scalar, m, shift = min_weight_witness(f)
    assert (scalar, m.tolists(), shift.tolists()) == (1, [[1]], [[1]])


def test_witness_refutations():
    assert min_weight_witness(MinorCombination.zero(P222)) is None
    assert min_weight_witness(MinorCombination.constant(P222, 1)) is None
    det = leading_maximal_minor(P222)
    assert min_weight_witness(det + MinorCombination.constant(P222, 1)) is None
    x11 = MinorCombination.single(P222, MinorIndex((1,), (1,)), 1)
    assert min_weight_witness(x11) is None
    with pytest.raises(ValueError):
        min_weight_witness(MinorCombination.zero(CodeParams(2, 0, 2)))


def test_witness_decides_membership_exhaustively():
    p = P222
    code = build(p)
    d = min_distance_formula(p)
    q, k = p.q, dimension_formula(p)
    for idx in range(1, q**k):
        digits = []
        mm = idx
        for _ in range(k):
            digits.append(mm % q)
            mm //= q
        f = MinorCombination(p, tuple(digits))
        assert is_min_weight_form(f) == (weight(code.encode(f.coeffs)) == d)
