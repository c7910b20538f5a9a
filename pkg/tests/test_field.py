import pytest
from hypothesis import given, strategies as st

from grouplaw.errors import ModulusMismatch, NotASquare, NotPrime, ZeroInverse
from grouplaw.field import FpElement, Prime, fp_inv, fp_legendre, fp_sqrt, is_prime, next_prime

from oracles import is_prime_trial, squares_mod

SMALL_PRIMES = [5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 97, 101]
PRIMES = st.sampled_from(SMALL_PRIMES + [2**31 - 1, 2**61 - 1, 18446744073709551557])


def test_is_prime_matches_trial_division():
    for n in range(0, 5000):
        assert is_prime(n) == is_prime_trial(n), n


def test_is_prime_large_known_values():
    assert is_prime(2**61 - 1)
    assert is_prime(18446744073709551557)  # largest 64-bit prime
    assert not is_prime(2**61 + 1)
    # strong pseudoprime to bases 2..37 is impossible below 3.3e24; a Carmichael number
    assert not is_prime(3215031751)


def test_is_prime_rejects_beyond_64_bits():
    with pytest.raises(NotPrime):
        is_prime(2**64 + 13)


@pytest.mark.parametrize("bad", [2, 3, 4, 9, 1, 0, -7])
def test_prime_rejects_small_or_composite(bad):
    with pytest.raises(NotPrime):
        Prime(bad)


def test_next_prime():
    assert next_prime(14) == 17
    assert next_prime(17) == 17


def test_residues_are_canonical():
    assert FpElement(-1, 7).residue == 6
    assert FpElement(15, 7) == FpElement(1, 7)
    assert FpElement(3, 7) == 10


def test_mismatched_moduli_rejected():
    with pytest.raises(ModulusMismatch):
        FpElement(1, 7) + FpElement(1, 11)


def test_inv_examples():
    assert fp_inv(FpElement(2, 7)) == FpElement(4, 7)
    for p in SMALL_PRIMES:
        assert fp_inv(FpElement(1, p)).residue == 1
    with pytest.raises(ZeroInverse):
        fp_inv(FpElement(0, 7))


def test_legendre_examples():
    assert fp_legendre(FpElement(2, 7)) == 1
    assert fp_legendre(FpElement(3, 7)) == -1
    assert fp_legendre(FpElement(0, 11)) == 0


def test_sqrt_examples():
    assert {r.residue for r in fp_sqrt(FpElement(2, 7))} == {3, 4}
    assert {r.residue for r in fp_sqrt(FpElement(0, 13))} == {0}
    with pytest.raises(NotASquare):
        fp_sqrt(FpElement(3, 7))


@pytest.mark.parametrize("p", SMALL_PRIMES)
def test_legendre_and_sqrt_match_enumeration(p):
    roots = squares_mod(p)
    for n in range(p):
        x = FpElement(n, p)
        expected = 0 if n == 0 else (1 if roots[n] else -1)
        assert fp_legendre(x) == expected
        if roots[n]:
            assert {r.residue for r in fp_sqrt(x)} == roots[n]
        else:
            with pytest.raises(NotASquare):
                fp_sqrt(x)


@given(PRIMES, st.integers(min_value=1))
def test_inverse_properties(p, n):
    x = FpElement(n, p)
    if x.residue == 0:
        return
    assert x * fp_inv(x) == 1
    assert fp_inv(fp_inv(x)) == x


@given(PRIMES, st.integers())
def test_sqrt_roots_square_back(p, n):
    x = FpElement(n, p)
    sq = x * x
    roots = fp_sqrt(sq)
    for r in roots:
        assert r * r == sq
    if sq.residue:
        r1, r2 = roots
        assert r1 == -r2


@given(PRIMES, st.integers(), st.integers(), st.integers())
def test_field_axioms(p, i, j, k):
    x, y, z = FpElement(i, p), FpElement(j, p), FpElement(k, p)
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + y == y + x and x * y == y * x
    assert x - x == 0 and -(-x) == x
