"""Affine short Weierstrass curves y^2 = x^3 + ax + b over F_p and their "+".

Addition follows the explicit case split:

* O is neutral: ``A + O = O + A = A``;
* ``(x, y) + (x, -y) = O``;
* otherwise ``x3 = s^2 - x1 - x2`` and ``y3 = -y1 + s*(x1 - x3)`` where ``s`` is
  the chord slope ``(y1 - y2)/(x1 - x2)`` or, when ``x1 == x2``, the tangent
  slope ``(3*x1^2 + a)/(2*y1)``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CurveMismatch, NotOnCurve, SingularCurve, TooLarge
from .field import FpElement, Prime, fp_legendre, fp_sqrt

__all__ = [
    "CurveParams",
    "Point",
    "Affine",
    "Infinity",
    "O",
    "discriminant",
    "is_on_curve",
    "negate",
    "add",
    "scalar_mul",
    "enumerate_points",
    "parse_point",
    "ENUMERATION_LIMIT",
]

ENUMERATION_LIMIT = 10**5


def discriminant(params: "CurveParams") -> FpElement:
    """4a^3 + 27b^2 in F_p."""
    return 4 * params.a ** 3 + 27 * params.b ** 2


@dataclass(frozen=True)
class CurveParams:
    p: Prime
    a: FpElement
    b: FpElement

    def __post_init__(self):
        p = Prime(self.p)
        object.__setattr__(self, "p", p)
        for name in ("a", "b"):
            v = getattr(self, name)
            if isinstance(v, FpElement):
                if v.modulus != p:
                    raise CurveMismatch(f"coefficient {name} lives in F_{int(v.modulus)}, not F_{int(p)}")
            else:
                object.__setattr__(self, name, FpElement(int(v), p))
        if discriminant(self).residue == 0:
            raise SingularCurve(
                f"4a^3 + 27b^2 = 0 mod {int(p)} for a={self.a.residue}, b={self.b.residue}")

    def element(self, v: int) -> FpElement:
        return FpElement(v, self.p)

    def rhs(self, x: FpElement) -> FpElement:
        return x ** 3 + self.a * x + self.b

    def point(self, x: int, y: int) -> "Affine":
        return Affine(self.element(x), self.element(y), self)

    def __str__(self):
        return f"y^2 = x^3 + {self.a.residue}x + {self.b.residue} over F_{int(self.p)}"


def is_on_curve(params: CurveParams, x: FpElement, y: FpElement) -> bool:
    return y * y == params.rhs(x)


class Point:
    """Either the point at infinity ``O`` or an affine point."""

    __slots__ = ()

    def __add__(self, other):
        if not isinstance(other, Point):
            return NotImplemented
        return add(self, other)

    def __neg__(self):
        return negate(self)

    def __sub__(self, other):
        if not isinstance(other, Point):
            return NotImplemented
        return add(self, negate(other))

    def __rmul__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return scalar_mul(k, self)

    def sort_key(self) -> tuple:
        raise NotImplementedError


class Infinity(Point):
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return isinstance(other, Infinity)

    def __hash__(self):
        return hash("O")

    def __repr__(self):
        return "O"

    def sort_key(self) -> tuple:
        return (0,)

    def __reduce__(self):
        return (Infinity, ())


O = Infinity()


@dataclass(frozen=True, eq=False)
class Affine(Point):
    x: FpElement
    y: FpElement
    curve: CurveParams

    def __post_init__(self):
        for c in (self.x, self.y):
            if c.modulus != self.curve.p:
                raise CurveMismatch("coordinate modulus differs from the curve's field")
        if not is_on_curve(self.curve, self.x, self.y):
            raise NotOnCurve(f"({self.x.residue}, {self.y.residue}) is not on {self.curve}")

    def __eq__(self, other):
        if not isinstance(other, Affine):
            return NotImplemented if not isinstance(other, Point) else False
        return self.curve == other.curve and self.x == other.x and self.y == other.y

    def __hash__(self):
        return hash((self.x.residue, self.y.residue, self.curve))

    def __repr__(self):
        return f"({self.x.residue},{self.y.residue})"

    def sort_key(self) -> tuple:
        return (1, self.x.residue, self.y.residue)


def negate(P: Point) -> Point:
    if isinstance(P, Infinity):
        return O
    return Affine(P.x, -P.y, P.curve)


def add(A: Point, B: Point) -> Point:
    if isinstance(A, Infinity):
        return B
    if isinstance(B, Infinity):
        return A
    if A.curve != B.curve:
        raise CurveMismatch(f"cannot add points of {A.curve} and {B.curve}")
    curve = A.curve
    if A.x == B.x and A.y == -B.y:
        return O
    if A.x != B.x:
        slope = (A.y - B.y) / (A.x - B.x)
    else:
        # x equal and not opposite forces A == B, hence y != 0
        if A.y != B.y:
            raise AssertionError("tangent branch reached with y_A != y_B")
        if A.y.residue == 0:
            raise AssertionError("tangent branch reached with y = 0")
        slope = (3 * A.x * A.x + curve.a) / (2 * A.y)
    x3 = slope * slope - A.x - B.x
    y3 = -A.y + slope * (A.x - x3)
    return Affine(x3, y3, curve)


def scalar_mul(k: int, A: Point) -> Point:
    """k*A by double-and-add."""
    if k < 0:
        raise ValueError("scalar must be nonnegative")
    result: Point = O
    addend = A
    while k:
        if k & 1:
            result = add(result, addend)
        k >>= 1
        if k:
            addend = add(addend, addend)
    return result


def enumerate_points(params: CurveParams, limit: int = ENUMERATION_LIMIT) -> list[Point]:
    """All points, O first, then affine points in ascending (x, y)."""
    p = int(params.p)
    if p > limit:
        raise TooLarge(f"p = {p} exceeds the enumeration limit {limit}")
    points: list[Point] = [O]
    for xv in range(p):
        x = params.element(xv)
        rhs = params.rhs(x)
        if fp_legendre(rhs) < 0:
            continue
        for y in sorted(fp_sqrt(rhs), key=lambda e: e.residue):
            points.append(Affine(x, y, params))
    return points


def parse_point(text: str, params: CurveParams) -> Point:
    """Parse ``"O"`` or ``"x,y"`` (decimal integers) into a point of ``params``."""
    text = text.strip()
    if text.upper() == "O":
        return O
    try:
        xs, ys = text.split(",")
        return params.point(int(xs), int(ys))
    except ValueError as exc:
        if isinstance(exc, NotOnCurve):
            raise
        raise ValueError(f"bad point {text!r}; expected 'O' or 'x,y'") from None
