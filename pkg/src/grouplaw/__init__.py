"""Exact verification of the elliptic-curve group law.

Submodules:

* :mod:`grouplaw.field` -- prime-field arithmetic;
* :mod:`grouplaw.curve` -- the addition law on y^2 = x^3 + ax + b;
* :mod:`grouplaw.polysym` -- sparse polynomials and reduction modulo the curve ideal;
* :mod:`grouplaw.prover` -- symbolic checks of the identities behind associativity;
* :mod:`grouplaw.harness` -- exhaustive and randomized numeric checks;
* :mod:`grouplaw.cli` -- command-line driver.
"""

from .curve import O, Affine, CurveParams, add, enumerate_points, negate, scalar_mul
from .field import FpElement, Prime
from .polysym import MPoly, RatFunc, normal_form

__version__ = "0.1.0"

__all__ = [
    "O",
    "Affine",
    "CurveParams",
    "add",
    "enumerate_points",
    "negate",
    "scalar_mul",
    "FpElement",
    "Prime",
    "MPoly",
    "RatFunc",
    "normal_form",
]
