"""Sparse multivariate polynomials over Z in the eight fixed variables.

The ring is ``Z[xA, yA, xB, yB, xC, yC, a, b]`` with the curve ideal

    I = (yA^2 - xA^3 - a*xA - b, yB^2 - ..., yC^2 - ...).

Each monomial is packed into a single Python integer: one 16-bit field per
variable (``xA`` most significant) and the total degree above them.  With
this layout monomial multiplication is integer addition and integer
comparison of two keys is the graded-lexicographic order, so sorting keys
gives the canonical term order for free.

The three generators have leading terms ``yA^2``, ``yB^2``, ``yC^2``, which
are pairwise coprime, so they form a Groebner basis of ``I`` and the rewrite
``yV^2 -> xV^3 + a*xV + b`` computes the unique normal form.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence, Union

from .errors import DivisionByZeroPolynomial

__all__ = [
    "VARIABLES",
    "MPoly",
    "RatFunc",
    "poly_build",
    "normal_form",
    "normal_form_scheduled",
    "ideal_generators",
    "rf_arith",
    "rf_equal_mod_ideal",
    "cleared_difference",
    "parse_poly",
]

VARIABLES = ("xA", "yA", "xB", "yB", "xC", "yC", "a", "b")
NVARS = len(VARIABLES)
_INDEX = {name: i for i, name in enumerate(VARIABLES)}

_BITS = 16
_MASK = (1 << _BITS) - 1
MAX_EXPONENT = _MASK
_SHIFTS = tuple(_BITS * (NVARS - 1 - i) for i in range(NVARS))
_DEG_SHIFT = _BITS * NVARS
_DEG_ONE = 1 << _DEG_SHIFT

# (y-variable index, matching x-variable index) for the rewrite rules
_Y_OF = {"A": (1, 0), "B": (3, 2), "C": (5, 4)}


def _pack(exps: Sequence[int]) -> int:
    if len(exps) != NVARS:
        raise ValueError(f"exponent vector must have {NVARS} entries, got {len(exps)}")
    key = 0
    total = 0
    for e, s in zip(exps, _SHIFTS):
        e = int(e)
        if e < 0 or e > MAX_EXPONENT:
            raise OverflowError(f"exponent {e} outside [0, {MAX_EXPONENT}]")
        key |= e << s
        total += e
    return key | (total << _DEG_SHIFT)


def _unpack(key: int) -> tuple[int, ...]:
    return tuple((key >> s) & _MASK for s in _SHIFTS)


def _degree_of_key(key: int) -> int:
    return key >> _DEG_SHIFT


def _mul_into(acc: dict, f: dict, g: dict) -> None:
    """acc += f*g, leaving possible zero coefficients in acc."""
    if len(f) > len(g):
        f, g = g, f
    get = acc.get
    gitems = list(g.items())
    for k1, c1 in f.items():
        for k2, c2 in gitems:
            k = k1 + k2
            acc[k] = get(k, 0) + c1 * c2


def _strip(d: dict) -> dict:
    return {k: c for k, c in d.items() if c}


Coercible = Union["MPoly", int]


class MPoly:
    """Immutable sparse polynomial with integer coefficients.

    Build instances with :func:`poly_build`, :meth:`var`, :meth:`const` or
    :func:`parse_poly`; arithmetic operators accept ``int`` operands too.
    """

    __slots__ = ("_terms", "_hash", "_exps")

    def __init__(self, terms: Mapping[int, int] | None = None, *, _trusted: bool = False):
        if terms is None:
            self._terms: dict[int, int] = {}
        elif _trusted:
            self._terms = terms  # type: ignore[assignment]
        else:
            self._terms = _strip(dict(terms))
        self._hash = None
        self._exps = None

    # construction

    @classmethod
    def zero(cls) -> "MPoly":
        return cls()

    @classmethod
    def one(cls) -> "MPoly":
        return cls.const(1)

    @classmethod
    def const(cls, c: int) -> "MPoly":
        c = int(c)
        return cls({0: c} if c else {}, _trusted=True)

    @classmethod
    def var(cls, name: str) -> "MPoly":
        try:
            i = _INDEX[name]
        except KeyError:
            raise ValueError(f"unknown variable {name!r}; expected one of {VARIABLES}") from None
        return cls({(1 << _SHIFTS[i]) | _DEG_ONE: 1}, _trusted=True)

    @staticmethod
    def _coerce(other) -> "MPoly":
        if isinstance(other, MPoly):
            return other
        if isinstance(other, int):
            return MPoly.const(other)
        return NotImplemented  # type: ignore[return-value]

    # inspection

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and 0 in self._terms)

    def terms(self) -> list[tuple[tuple[int, ...], int]]:
        """Terms in descending graded-lex order as (exponents, coefficient)."""
        return [(_unpack(k), self._terms[k]) for k in sorted(self._terms, reverse=True)]

    def total_degree(self) -> int:
        if not self._terms:
            return -1
        return _degree_of_key(max(self._terms))

    def degree(self, name: str) -> int:
        s = _SHIFTS[_INDEX[name]]
        return max(((k >> s) & _MASK for k in self._terms), default=-1)

    def variables(self) -> set[str]:
        used = set()
        for k in self._terms:
            for name, s in zip(VARIABLES, _SHIFTS):
                if (k >> s) & _MASK:
                    used.add(name)
        return used

    def coefficient(self, exps: Sequence[int]) -> int:
        return self._terms.get(_pack(exps), 0)

    # arithmetic

    def __neg__(self) -> "MPoly":
        return MPoly({k: -c for k, c in self._terms.items()}, _trusted=True)

    def __pos__(self) -> "MPoly":
        return self

    def __add__(self, other) -> "MPoly":
        other = MPoly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if len(self._terms) < len(other._terms):
            small, big = self._terms, other._terms
        else:
            small, big = other._terms, self._terms
        out = dict(big)
        get = out.get
        for k, c in small.items():
            out[k] = get(k, 0) + c
        return MPoly(_strip(out), _trusted=True)

    __radd__ = __add__

    def __sub__(self, other) -> "MPoly":
        other = MPoly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        get = out.get
        for k, c in other._terms.items():
            out[k] = get(k, 0) - c
        return MPoly(_strip(out), _trusted=True)

    def __rsub__(self, other) -> "MPoly":
        other = MPoly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other) -> "MPoly":
        other = MPoly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        f, g = self._terms, other._terms
        if not f or not g:
            return MPoly()
        if len(g) == 1 and 0 in g:
            c = g[0]
            return MPoly({k: c * v for k, v in f.items()}, _trusted=True)
        if len(f) == 1 and 0 in f:
            c = f[0]
            return MPoly({k: c * v for k, v in g.items()}, _trusted=True)
        if _degree_of_key(max(f)) + _degree_of_key(max(g)) > MAX_EXPONENT:
            raise OverflowError("product degree exceeds the packed exponent range")
        acc: dict[int, int] = {}
        _mul_into(acc, f, g)
        return MPoly(_strip(acc), _trusted=True)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MPoly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = MPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # comparison

    def __eq__(self, other) -> bool:
        other = MPoly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # evaluation

    def _exponent_table(self) -> list[tuple[tuple[int, ...], int]]:
        if self._exps is None:
            self._exps = [(_unpack(k), c) for k, c in self._terms.items()]
        return self._exps

    def evaluate(self, values: Mapping[str, int], modulus: int | None = None) -> int:
        """Substitute integers for the variables; reduce mod ``modulus`` if given.

        Variables absent from ``values`` must not occur in the polynomial.
        """
        table = self._exponent_table()
        if not table:
            return 0
        maxexp = [0] * NVARS
        for exps, _ in table:
            for i, e in enumerate(exps):
                if e > maxexp[i]:
                    maxexp[i] = e
        powers = []
        for i, name in enumerate(VARIABLES):
            if maxexp[i] == 0:
                powers.append((1,))
                continue
            if name not in values:
                raise KeyError(f"no value supplied for variable {name}")
            v = int(values[name])
            if modulus is not None:
                v %= modulus
            row = [1]
            for _ in range(maxexp[i]):
                nxt = row[-1] * v
                if modulus is not None:
                    nxt %= modulus
                row.append(nxt)
            powers.append(row)
        p0, p1, p2, p3, p4, p5, p6, p7 = powers
        total = 0
        if modulus is None:
            for (e0, e1, e2, e3, e4, e5, e6, e7), c in table:
                total += c * p0[e0] * p1[e1] * p2[e2] * p3[e3] * p4[e4] * p5[e5] * p6[e6] * p7[e7]
            return total
        m = modulus
        for (e0, e1, e2, e3, e4, e5, e6, e7), c in table:
            total += c * (p0[e0] * p1[e1] % m * p2[e2] % m * p3[e3] % m
                          * p4[e4] % m * p5[e5] % m * p6[e6] % m * p7[e7] % m)
        return total % m

    # text

    def render(self) -> str:
        """Canonical text form, e.g. ``xA^2 - 3*yA*b + 1``."""
        if not self._terms:
            return "0"
        parts: list[str] = []
        for i, (exps, c) in enumerate(self.terms()):
            factors = [name if e == 1 else f"{name}^{e}"
                       for name, e in zip(VARIABLES, exps) if e]
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if i == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        text = self.render()
        if len(text) > 200:
            text = text[:200] + f"... ({len(self)} terms)"
        return f"MPoly({text!r})"


def poly_build(terms: Iterable[tuple[Sequence[int], int]]) -> MPoly:
    """Canonical polynomial from (exponent vector, coefficient) pairs."""
    acc: dict[int, int] = {}
    for exps, c in terms:
        k = _pack(exps)
        acc[k] = acc.get(k, 0) + int(c)
    return MPoly(_strip(acc), _trusted=True)


_TERM_RE = re.compile(r"\s*([+-])\s*")


def parse_poly(text: str) -> MPoly:
    """Inverse of :meth:`MPoly.render`; also accepts any sum of such terms."""
    text = text.strip()
    if not text:
        raise ValueError("empty polynomial text")
    if text[0] not in "+-":
        text = "+" + text
    pieces = _TERM_RE.split(text)
    # split yields ['', sign, body, sign, body, ...]
    if pieces[0].strip():
        raise ValueError(f"malformed polynomial text: {text!r}")
    acc: dict[int, int] = {}
    for sign, body in zip(pieces[1::2], pieces[2::2]):
        body = body.strip()
        if not body:
            raise ValueError(f"malformed polynomial text: {text!r}")
        coeff = 1
        exps = [0] * NVARS
        for factor in body.split("*"):
            factor = factor.strip()
            if factor.isdigit():
                coeff *= int(factor)
                continue
            name, _, power = factor.partition("^")
            if name not in _INDEX:
                raise ValueError(f"unknown factor {factor!r} in {text!r}")
            exps[_INDEX[name]] += int(power) if power else 1
        if sign == "-":
            coeff = -coeff
        k = _pack(exps)
        acc[k] = acc.get(k, 0) + coeff
    return MPoly(_strip(acc), _trusted=True)


# curve ideal

def _substitute_terms(v: str) -> dict:
    """Terms of xV^3 + a*xV + b, the image of yV^2 under the rewrite."""
    x = MPoly.var("x" + v)
    return (x ** 3 + MPoly.var("a") * x + MPoly.var("b"))._terms


_SUB_POWERS: dict[tuple[str, int], dict] = {}


def _sub_power(v: str, q: int) -> dict:
    key = (v, q)
    if key not in _SUB_POWERS:
        if q == 1:
            _SUB_POWERS[key] = _substitute_terms(v)
        else:
            acc: dict[int, int] = {}
            _mul_into(acc, _sub_power(v, q - 1), _sub_power(v, 1))
            _SUB_POWERS[key] = _strip(acc)
    return _SUB_POWERS[key]


def ideal_generators() -> dict[str, MPoly]:
    """The generators yV^2 - xV^3 - a*xV - b for V in A, B, C."""
    out = {}
    for v in "ABC":
        y = MPoly.var("y" + v)
        out[v] = y * y - MPoly(_substitute_terms(v), _trusted=True)
    return out


def _reduce_variable(terms: dict, v: str) -> dict:
    yi, _ = _Y_OF[v]
    s = _SHIFTS[yi]
    out: dict[int, int] = {}
    buckets: dict[int, dict] = {}
    for k, c in terms.items():
        e = (k >> s) & _MASK
        if e < 2:
            out[k] = c
            continue
        q, r = divmod(e, 2)
        drop = e - r
        k2 = k - (drop << s) - drop * _DEG_ONE
        buckets.setdefault(q, {})[k2] = c
    for q, bucket in buckets.items():
        _mul_into(out, bucket, _sub_power(v, q))
    return _strip(out)


def normal_form(f: MPoly) -> MPoly:
    """Remainder of ``f`` modulo the curve ideal; every y-exponent ends up <= 1.

    ``normal_form(f) == 0`` exactly when ``f`` lies in the ideal.
    """
    terms = f._terms
    for v in "ABC":
        yi, _ = _Y_OF[v]
        s = _SHIFTS[yi]
        if any(((k >> s) & _MASK) >= 2 for k in terms):
            terms = _reduce_variable(terms, v)
    if terms is f._terms:
        return f
    return MPoly(terms, _trusted=True)


def normal_form_scheduled(f: MPoly, rng) -> MPoly:
    """Normal form by single-term rewrites in an order chosen by ``rng``.

    Each step picks one reducible term and one of its reducible y-variables
    at random and replaces ``yV^2`` in it once.  Much slower than
    :func:`normal_form`; used to check that the result does not depend on
    the rewrite schedule.
    """
    terms = dict(f._terms)
    while True:
        reducible = []
        for k in terms:
            options = [v for v in "ABC" if ((k >> _SHIFTS[_Y_OF[v][0]]) & _MASK) >= 2]
            if options:
                reducible.append((k, options))
        if not reducible:
            return MPoly(_strip(terms), _trusted=True)
        reducible.sort()
        k, options = reducible[rng.randrange(len(reducible))]
        v = options[rng.randrange(len(options))]
        c = terms.pop(k)
        k2 = k - (2 << _SHIFTS[_Y_OF[v][0]]) - 2 * _DEG_ONE
        for ks, cs in _substitute_terms(v).items():
            kk = k2 + ks
            terms[kk] = terms.get(kk, 0) + c * cs
        terms = _strip(terms)


# rational functions

@dataclass(frozen=True)
class RatFunc:
    """Unreduced fraction ``num / den`` of polynomials.

    No common factors are ever cancelled; equality of two fractions is
    decided by :func:`rf_equal_mod_ideal`.
    """

    num: MPoly
    den: MPoly

    def __post_init__(self):
        if isinstance(self.num, int):
            object.__setattr__(self, "num", MPoly.const(self.num))
        if isinstance(self.den, int):
            object.__setattr__(self, "den", MPoly.const(self.den))
        if self.den.is_zero():
            raise DivisionByZeroPolynomial("denominator is the zero polynomial")

    @classmethod
    def of(cls, value) -> "RatFunc":
        if isinstance(value, RatFunc):
            return value
        if isinstance(value, (MPoly, int)):
            return cls(MPoly._coerce(value), MPoly.one())
        raise TypeError(f"cannot make a RatFunc from {type(value).__name__}")

    def __add__(self, other) -> "RatFunc":
        other = RatFunc.of(other)
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den)

    def __sub__(self, other) -> "RatFunc":
        other = RatFunc.of(other)
        if self.den == other.den:
            return RatFunc(self.num - other.num, self.den)
        return RatFunc(self.num * other.den - other.num * self.den, self.den * other.den)

    def __rsub__(self, other) -> "RatFunc":
        return RatFunc.of(other) - self

    def __mul__(self, other) -> "RatFunc":
        other = RatFunc.of(other)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RatFunc":
        other = RatFunc.of(other)
        if other.num.is_zero():
            raise DivisionByZeroPolynomial("division by the zero polynomial")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> "RatFunc":
        return RatFunc.of(other) / self

    def __pow__(self, n: int) -> "RatFunc":
        return RatFunc(self.num ** n, self.den ** n)

    def reduced(self) -> "RatFunc":
        """Same fraction with numerator and denominator in normal form."""
        return RatFunc(normal_form(self.num), normal_form(self.den))

    def evaluate(self, values: Mapping[str, int], modulus: int) -> int:
        d = self.den.evaluate(values, modulus)
        if d == 0:
            raise DivisionByZeroPolynomial("denominator vanishes at this point")
        return self.num.evaluate(values, modulus) * pow(d, -1, modulus) % modulus

    def __repr__(self) -> str:
        return f"RatFunc({self.num!r}, {self.den!r})"


def rf_arith(op: str, f: RatFunc, g: RatFunc) -> RatFunc:
    ops = {"add": RatFunc.__add__, "sub": RatFunc.__sub__,
           "mul": RatFunc.__mul__, "div": RatFunc.__truediv__}
    try:
        return ops[op](f, g)
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None


def cleared_difference(f: RatFunc, g: RatFunc) -> MPoly:
    """``f.num*g.den - g.num*f.den``, the numerator of ``f - g``."""
    if f.den == g.den:
        return f.num - g.num
    return f.num * g.den - g.num * f.den


def rf_equal_mod_ideal(f: RatFunc, g: RatFunc) -> bool:
    return normal_form(cleared_difference(f, g)).is_zero()
