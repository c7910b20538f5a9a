"""Prime fields F_p with p > 3 and p below 2**64."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ModulusMismatch, NotASquare, NotPrime, ZeroInverse

__all__ = [
    "MAX_PRIME_BITS",
    "is_prime",
    "Prime",
    "FpElement",
    "fp_inv",
    "fp_legendre",
    "fp_sqrt",
    "next_prime",
]

MAX_PRIME_BITS = 64

# Deterministic for every n < 3.3 * 10**24, which covers all 64-bit inputs.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test for n < 2**64."""
    if n.bit_length() > MAX_PRIME_BITS:
        raise NotPrime(f"{n} exceeds {MAX_PRIME_BITS} bits; primality is not decided")
    if n < 2:
        return False
    for q in _MR_WITNESSES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for w in _MR_WITNESSES:
        x = pow(w, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def next_prime(n: int) -> int:
    """Smallest prime >= n."""
    n = max(n, 2)
    while not is_prime(n):
        n += 1
    return n


class Prime(int):
    """An ``int`` known to be a prime greater than 3 and at most 64 bits."""

    def __new__(cls, value: int):
        if isinstance(value, Prime):
            return value
        value = int(value)
        if value <= 3:
            raise NotPrime(f"modulus must be a prime > 3, got {value}")
        if not is_prime(value):
            raise NotPrime(f"{value} is not prime")
        return super().__new__(cls, value)

    def __repr__(self) -> str:
        return f"Prime({int(self)})"


@dataclass(frozen=True)
class FpElement:
    """Residue modulo a prime, stored canonically in ``[0, modulus)``."""

    residue: int
    modulus: Prime

    def __post_init__(self):
        if not isinstance(self.modulus, Prime):
            object.__setattr__(self, "modulus", Prime(self.modulus))
        object.__setattr__(self, "residue", int(self.residue) % self.modulus)

    def _other(self, other) -> int:
        if isinstance(other, FpElement):
            if other.modulus != self.modulus:
                raise ModulusMismatch(f"F_{self.modulus} vs F_{other.modulus}")
            return other.residue
        if isinstance(other, int):
            return other
        return NotImplemented  # type: ignore[return-value]

    def _new(self, r: int) -> "FpElement":
        return FpElement(r % self.modulus, self.modulus)

    def __add__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._new(self.residue + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._new(self.residue - o)

    def __rsub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._new(o - self.residue)

    def __mul__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._new(self.residue * o)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, int):
            other = FpElement(other, self.modulus)
        return self * fp_inv(other)

    def __neg__(self):
        return self._new(-self.residue)

    def __pow__(self, n: int):
        if n < 0:
            return fp_inv(self) ** (-n)
        return self._new(pow(self.residue, n, self.modulus))

    def __eq__(self, other):
        if isinstance(other, FpElement):
            return self.residue == other.residue and self.modulus == other.modulus
        if isinstance(other, int):
            return self.residue == other % self.modulus
        return NotImplemented

    def __hash__(self):
        return hash((self.residue, int(self.modulus)))

    def __int__(self):
        return self.residue

    def __bool__(self):
        return self.residue != 0

    def __repr__(self):
        return f"{self.residue} (mod {int(self.modulus)})"


def fp_inv(x: FpElement) -> FpElement:
    if x.residue == 0:
        raise ZeroInverse(f"0 has no inverse mod {int(x.modulus)}")
    return FpElement(pow(x.residue, -1, x.modulus), x.modulus)


def fp_legendre(x: FpElement) -> int:
    if x.residue == 0:
        return 0
    t = pow(x.residue, (x.modulus - 1) // 2, x.modulus)
    return 1 if t == 1 else -1


def _smallest_nonresidue(p: int) -> int:
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    return z


def fp_sqrt(x: FpElement) -> frozenset[FpElement]:
    """Both square roots of ``x`` as a set ({0} when x is zero).

    Tonelli-Shanks, using the smallest quadratic nonresidue so the output is
    reproducible.
    """
    p = int(x.modulus)
    n = x.residue
    if n == 0:
        return frozenset({FpElement(0, x.modulus)})
    if fp_legendre(x) != 1:
        raise NotASquare(f"{n} is not a square mod {p}")
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = _smallest_nonresidue(p)
    m, c, t, r = s, pow(z, q, p), pow(n, q, p), pow(n, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        bexp = pow(c, 1 << (m - i - 1), p)
        m, c = i, bexp * bexp % p
        t, r = t * c % p, r * bexp % p
    return frozenset({FpElement(r, x.modulus), FpElement(p - r, x.modulus)})
