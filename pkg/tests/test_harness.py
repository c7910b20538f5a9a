import pytest

from grouplaw import curve as ec
from grouplaw import harness
from grouplaw.curve import CurveParams, enumerate_points
from grouplaw.errors import TooLarge
from grouplaw.harness import (
    HarnessConfig, Stream, check_curve, exhaustive_check, random_curve, random_point,
    random_prime, randomized_check,
)


def test_random_curve_is_nonsingular_and_deterministic():
    for seed in range(20):
        c1 = random_curve(10007, Stream(seed))
        c2 = random_curve(10007, Stream(seed))
        assert c1 == c2
        assert ec.discriminant(c1).residue != 0


def test_random_curve_p5_hits_several_curves():
    valid = {(a, b) for a in range(5) for b in range(5) if (4 * a**3 + 27 * b**2) % 5}
    assert len(valid) == 20
    rng = Stream(0)
    seen = {(c.a.residue, c.b.residue) for c in (random_curve(5, rng) for _ in range(200))}
    assert len(seen) >= 2
    assert seen <= valid


def test_random_point_covers_toy_curve(toy_curve):
    rng = Stream(42)
    seen = {random_point(toy_curve, rng) for _ in range(400)}
    assert seen == set(enumerate_points(toy_curve))
    assert random_point(toy_curve, Stream(9)) == random_point(toy_curve, Stream(9))


@pytest.mark.parametrize("bits", [3, 8, 31, 64])
def test_random_prime_has_requested_size(bits):
    p = random_prime(bits, Stream(bits))
    assert p.bit_length() == bits and p > 3


def test_toy_curve_slice(toy_curve):
    rep = check_curve(toy_curve, exhaustive=True)
    assert rep.ok and rep.counterexample is None
    assert rep.stats["associativity"].tested == 125
    assert rep.stats["commutativity"].tested == 25
    assert rep.stats["closure"].tested == 25


def test_empty_range():
    rep = exhaustive_check(4)
    assert rep.curves == 0 and rep.configurations == 0 and rep.ok


def test_small_sweep_counts():
    rep = exhaustive_check(7)
    assert rep.primes == [5, 7] and rep.ok
    # curves: 20 nonsingular at p = 5, 42 at p = 7
    assert rep.curves == 62
    for name in ("part1_generic", "part2_repeated", "part3_contains_O"):
        assert rep.branches[name] > 0


def test_guards():
    with pytest.raises(TooLarge):
        exhaustive_check(1009)
    with pytest.raises(TooLarge):
        HarnessConfig(mode="exhaustive", max_p=2000)
    with pytest.raises(ValueError):
        HarnessConfig(trials=0)


def test_randomized_is_deterministic():
    cfg = HarnessConfig(trials=120, prime_bits=31, seed=7)
    r1, r2 = randomized_check(cfg), randomized_check(cfg)
    assert r1.to_json() == r2.to_json()
    assert r1.ok
    assert randomized_check(HarnessConfig(trials=120, seed=8)).to_json() != r1.to_json()


def test_forced_negation_stream():
    rep = randomized_check(HarnessConfig(trials=100, prime_bits=31, seed=1, special_kind="B=-A"))
    assert rep.ok
    assert rep.stats["add_then_subtract"].tested == 100
    assert rep.stats["negation_distributes"].tested == 100


def test_special_injection_reaches_rare_hypotheses():
    rep = randomized_check(HarnessConfig(trials=200, prime_bits=31, seed=3))
    for name in ("unique_neutral", "plus_minus", "sum_is_minus_self", "cancellation", "solve_for_summand"):
        assert rep.stats[name].tested > 0, name
    assert all(v > 0 for v in rep.branches.values())


def test_report_round_trip():
    rep = randomized_check(HarnessConfig(trials=40, seed=2))
    again = harness.HarnessReport.from_dict(__import__("json").loads(rep.to_json()))
    assert again.to_json() == rep.to_json()


def _bad_add(A, B):
    # doubling with the wrong tangent constant
    if isinstance(A, ec.Infinity):
        return B
    if isinstance(B, ec.Infinity):
        return A
    if A.x == B.x and A.y == -B.y:
        return ec.O
    if A == B:
        s = (3 * A.x * A.x) / (2 * A.y)
    else:
        s = (A.y - B.y) / (A.x - B.x)
    x3 = s * s - A.x - B.x
    y3 = -A.y + s * (A.x - x3)
    return ec.Affine(x3, y3, A.curve) if ec.is_on_curve(A.curve, x3, y3) else ec.O


def test_harness_catches_a_broken_law(monkeypatch):
    monkeypatch.setattr(ec, "add", _bad_add)
    monkeypatch.setattr(harness._PointOps, "add", staticmethod(_bad_add))
    rep = check_curve(CurveParams(13, 2, 3), exhaustive=True)
    assert not rep.ok
    assert rep.counterexample is not None
    assert rep.counterexample.p == 13
