import pytest
from hypothesis import given, settings, strategies as st

from grouplaw import curve as ec
from grouplaw.curve import O, CurveParams, add, enumerate_points, negate, scalar_mul
from grouplaw.errors import CurveMismatch, NotOnCurve, SingularCurve, TooLarge

from oracles import chord_tangent_sum, curve_points


def as_tuple(P):
    return "O" if P == O else (P.x.residue, P.y.residue)


def small_curves(primes=(5, 7, 11, 13)):
    for p in primes:
        for a in range(p):
            for b in range(p):
                if (4 * a**3 + 27 * b**2) % p:
                    yield CurveParams(p, a, b)


def test_discriminant_examples():
    assert ec.discriminant(CurveParams(7, 1, 1)).residue == 3
    assert ec.discriminant(CurveParams(7, 0, 1)).residue == 6
    with pytest.raises(SingularCurve):
        CurveParams(5, 0, 0)


def test_is_on_curve_examples(toy_curve):
    e = toy_curve.element
    assert ec.is_on_curve(toy_curve, e(0), e(1))
    assert ec.is_on_curve(toy_curve, e(2), e(5))
    assert not ec.is_on_curve(toy_curve, e(1), e(1))
    with pytest.raises(NotOnCurve):
        toy_curve.point(1, 1)


def test_negate_examples(toy_curve):
    assert negate(O) == O
    assert negate(toy_curve.point(0, 1)) == toy_curve.point(0, 6)
    for P in enumerate_points(toy_curve):
        assert negate(negate(P)) == P


def test_add_examples(toy_curve):
    P01, P06 = toy_curve.point(0, 1), toy_curve.point(0, 6)
    P25, P22 = toy_curve.point(2, 5), toy_curve.point(2, 2)
    assert add(P01, O) == P01 and add(O, P01) == P01
    assert add(P01, P06) == O
    assert add(P01, P01) == P25
    assert add(P01, P25) == P22


def test_cross_curve_rejected(toy_curve):
    other = CurveParams(7, 0, 1)
    with pytest.raises(CurveMismatch):
        add(toy_curve.point(0, 1), other.point(0, 1))


def test_scalar_mul_examples(toy_curve):
    G = toy_curve.point(0, 1)
    assert scalar_mul(0, G) == O
    assert scalar_mul(1, G) == G
    assert scalar_mul(2, G) == toy_curve.point(2, 5)
    assert scalar_mul(5, G) == O
    with pytest.raises(ValueError):
        scalar_mul(-1, G)


def test_scalar_mul_matches_repeated_addition(toy_curve):
    for P in enumerate_points(CurveParams(13, 2, 3)):
        acc = O
        for k in range(30):
            assert scalar_mul(k, P) == acc
            acc = add(acc, P)


def test_enumerate_toy_curve(toy_curve):
    pts = enumerate_points(toy_curve)
    assert [as_tuple(P) for P in pts] == ["O", (0, 1), (0, 6), (2, 2), (2, 5)]


@pytest.mark.parametrize("params", list(small_curves((5, 7, 11))), ids=str)
def test_enumerate_matches_brute_force(params):
    pts = enumerate_points(params)
    brute = curve_points(int(params.p), params.a.residue, params.b.residue)
    assert [as_tuple(P) for P in pts] == brute
    assert pts[0] == O


@pytest.mark.parametrize("params", list(small_curves((5, 13))), ids=str)
def test_point_count_matches_character_sum(params):
    p = int(params.p)
    a, b = params.a.residue, params.b.residue
    total = p + 1
    for x in range(p):
        v = (x**3 + a * x + b) % p
        if v:
            total += 1 if pow(v, (p - 1) // 2, p) == 1 else -1
    assert len(enumerate_points(params)) == total


def test_enumeration_guard():
    with pytest.raises(TooLarge):
        enumerate_points(CurveParams(100003, 1, 1))


@pytest.mark.parametrize("params", list(small_curves((5, 7, 11, 13))), ids=str)
def test_addition_table_matches_geometry(params):
    p, a, b = int(params.p), params.a.residue, params.b.residue
    pts = enumerate_points(params)
    for P in pts:
        for Q in pts:
            assert as_tuple(add(P, Q)) == chord_tangent_sum(p, a, b, as_tuple(P), as_tuple(Q))


def test_toy_group_is_cyclic_of_order_5(toy_curve):
    pts = enumerate_points(toy_curve)
    G = toy_curve.point(0, 1)
    multiples = {scalar_mul(k, G) for k in range(5)}
    assert multiples == set(pts)


@pytest.mark.parametrize("params", [CurveParams(5, 1, 1), CurveParams(11, 3, 7), CurveParams(13, 0, 5)], ids=str)
def test_group_axioms_and_facts(params):
    pts = enumerate_points(params)
    for A in pts:
        assert add(A, negate(A)) == O
        if A != O:
            assert (add(A, A) == O) == (A.y.residue == 0)
        for B in pts:
            S = add(A, B)
            assert S == O or ec.is_on_curve(params, S.x, S.y)
            assert S == add(B, A)
            assert negate(S) == add(negate(A), negate(B))
            if A != O and B != O and A.x == B.x:
                assert A == B or A == negate(B)
            for C in pts:
                assert add(add(A, B), C) == add(A, add(B, C))


def test_parse_point(toy_curve):
    assert ec.parse_point("O", toy_curve) == O
    assert ec.parse_point(" 2,5 ", toy_curve) == toy_curve.point(2, 5)
    with pytest.raises(ValueError):
        ec.parse_point("2;5", toy_curve)
    with pytest.raises(NotOnCurve):
        ec.parse_point("1,1", toy_curve)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 50))
def test_scalar_mul_is_homomorphic(seed, k):
    from grouplaw.harness import Stream, random_curve, random_point, random_prime
    rng = Stream(seed)
    params = random_curve(random_prime(40, rng), rng)
    P = random_point(params, rng)
    assert scalar_mul(k + 1, P) == add(scalar_mul(k, P), P)
    assert scalar_mul(2 * k, P) == add(scalar_mul(k, P), scalar_mul(k, P))
