"""Symbolic replay of the identities behind associativity of "+".

Every identity is rebuilt from the addition formula by composing
:func:`symbolic_add`, turned into a single polynomial by clearing
denominators, and reduced modulo the curve ideal.  A zero normal form means
the identity holds on the curve wherever the denominators are nonzero.

Intermediate numerators and denominators are kept in normal form.  That only
swaps polynomials for congruent ones modulo the ideal, so the verdict is
unchanged, and it keeps every y-degree at most one, which is what makes the
three-point associativity identity cheap.
"""

from __future__ import annotations

import enum
import json
import random
import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Mapping, Sequence

from . import curve as ec
from .errors import DegenerateSlope, UnknownLemma
from .field import next_prime
from .polysym import MPoly, RatFunc, cleared_difference, normal_form, parse_poly

__all__ = [
    "LemmaId",
    "SymPoint",
    "Component",
    "CheckResult",
    "VerificationReport",
    "generic_point",
    "symbolic_add",
    "check_lemma",
    "run_all",
    "numeric_consistency",
    "TOOL_NAME",
]

TOOL_NAME = "grouplaw"

DEVIATIONS = (
    "addition with O is taken as A + O = O + A = A (O is the neutral element), "
    "not A + O = O",
    "tangent slope uses 2*y_A; the branch is only reachable with A == B",
)


class LemmaId(enum.Enum):
    Assoc3Generic = "Assoc3Generic"
    AssocDouble = "AssocDouble"
    AssocQuad = "AssocQuad"
    NegDistributes = "NegDistributes"
    PmbSimplification = "PmbSimplification"
    DoubleMinusA = "DoubleMinusA"
    AddMinusB = "AddMinusB"
    Claim5Square = "Claim5Square"
    Claim5Factorization = "Claim5Factorization"
    TranscriptionAudit = "TranscriptionAudit"

    @classmethod
    def parse(cls, value) -> "LemmaId":
        if isinstance(value, cls):
            return value
        try:
            return cls(value)
        except ValueError:
            raise UnknownLemma(f"unknown lemma id {value!r}") from None


def _v(name: str) -> MPoly:
    return MPoly.var(name)


@dataclass(frozen=True)
class SymPoint:
    x: RatFunc
    y: RatFunc

    def __neg__(self) -> "SymPoint":
        return SymPoint(self.x, -self.y)

    def evaluate(self, values: Mapping[str, int], modulus: int) -> tuple[int, int]:
        return self.x.evaluate(values, modulus), self.y.evaluate(values, modulus)


def generic_point(label: str) -> SymPoint:
    """The point (xV, yV) for V in A, B, C."""
    return SymPoint(RatFunc.of(_v("x" + label)), RatFunc.of(_v("y" + label)))


class _Tracker:
    """Collects slope denominators and the largest polynomial seen."""

    def __init__(self):
        self.denominators: list[MPoly] = []
        self.peak = 0

    def see(self, *polys: MPoly) -> None:
        for f in polys:
            if len(f) > self.peak:
                self.peak = len(f)


def symbolic_add(A: SymPoint, B: SymPoint, slope: str = "chord",
                 tracker: _Tracker | None = None) -> SymPoint:
    """A + B by the chord or tangent formula, over the rational functions.

    The tangent slope is only meaningful for ``A == B`` and raises otherwise.
    """
    if slope == "chord":
        dx = A.x - B.x
        if normal_form(dx.num).is_zero():
            raise DegenerateSlope("chord slope with x_A - x_B = 0 modulo the ideal")
        alpha = ((A.y - B.y) / dx).reduced()
    elif slope == "tangent":
        if A != B:
            raise DegenerateSlope("tangent slope requires A == B")
        num = 3 * A.x * A.x + _v("a")
        alpha = (num / (2 * A.y)).reduced()
    else:
        raise ValueError(f"slope must be 'chord' or 'tangent', not {slope!r}")
    x = (alpha * alpha - A.x - B.x).reduced()
    y = (-A.y + alpha * (A.x - x)).reduced()
    if tracker is not None:
        tracker.denominators.append(alpha.den)
        tracker.see(alpha.num, alpha.den, x.num, x.den, y.num, y.den)
    return SymPoint(x, y)


# Each check is built once into a _Build: the cleared polynomials it must
# reduce to zero, plus what the numeric cross-check needs.

ROLE_IDENTITY = "identity"   # must reduce to zero
ROLE_PRINTED = "printed"     # transcription of a displayed formula; may be flagged
ROLE_DIFF = "diff"           # informational difference, never decides status


@dataclass
class _Build:
    components: list[tuple[str, MPoly, str]]
    denominators: list[MPoly]
    peak: int
    points: tuple[str, ...]
    hypothesis: Callable[[dict], bool]
    # (label, symbolic point, numeric recomputation from concrete points)
    witnesses: list[tuple[str, SymPoint, Callable[[dict], ec.Point]]] = field(default_factory=list)


def _coord_components(prefix: str, L: SymPoint, R: SymPoint, tr: _Tracker):
    out = []
    for name in ("x", "y"):
        d = cleared_difference(getattr(L, name), getattr(R, name))
        tr.see(d)
        out.append((f"{prefix}{name}", d, ROLE_IDENTITY))
    return out


def _affine(*pts: ec.Point) -> bool:
    return all(not isinstance(P, ec.Infinity) for P in pts)


def _neq_pm(P: ec.Point, Q: ec.Point) -> bool:
    return P != Q and P != -Q


def _assoc3_hyp(p) -> bool:
    A, B, C = p["A"], p["B"], p["C"]
    return (_affine(A, B, C) and _neq_pm(A, B) and _neq_pm(B, C)
            and _neq_pm(A + B, C) and _neq_pm(B + C, A))


def _build_assoc3() -> _Build:
    tr = _Tracker()
    A, B, C = generic_point("A"), generic_point("B"), generic_point("C")
    L = symbolic_add(symbolic_add(A, B, "chord", tr), C, "chord", tr)
    R = symbolic_add(A, symbolic_add(B, C, "chord", tr), "chord", tr)

    return _Build(_coord_components("", L, R, tr), tr.denominators, tr.peak, ("A", "B", "C"), _assoc3_hyp,
                  [("(A+B)+C", L, lambda p: (p["A"] + p["B"]) + p["C"]),
                   ("A+(B+C)", R, lambda p: p["A"] + (p["B"] + p["C"]))])


def _build_assoc_double() -> _Build:
    tr = _Tracker()
    A, B = generic_point("A"), generic_point("B")
    AA = symbolic_add(A, A, "tangent", tr)
    L = symbolic_add(AA, B, "chord", tr)
    R = symbolic_add(A, symbolic_add(A, B, "chord", tr), "chord", tr)

    def hyp(p):
        A, B = p["A"], p["B"]
        return (_affine(A, B) and A != -A and _neq_pm(A, B)
                and _neq_pm(A + A, B) and _neq_pm(A + B, A))

    return _Build(_coord_components("", L, R, tr), tr.denominators, tr.peak, ("A", "B"), hyp,
                  [("(A+A)+B", L, lambda p: (p["A"] + p["A"]) + p["B"]),
                   ("A+(A+B)", R, lambda p: p["A"] + (p["A"] + p["B"]))])


def _build_assoc_quad() -> _Build:
    tr = _Tracker()
    A = generic_point("A")
    AA = symbolic_add(A, A, "tangent", tr)
    L = symbolic_add(AA, AA, "tangent", tr)
    R = symbolic_add(A, symbolic_add(A, AA, "chord", tr), "chord", tr)

    def hyp(p):
        A = p["A"]
        if not _affine(A) or A == -A:
            return False
        D = A + A
        return D != -D and _neq_pm(D + A, A) and _neq_pm(D, A)

    return _Build(_coord_components("", L, R, tr), tr.denominators, tr.peak, ("A",), hyp,
                  [("(A+A)+(A+A)", L, lambda p: (p["A"] + p["A"]) + (p["A"] + p["A"])),
                   ("A+(A+(A+A))", R, lambda p: p["A"] + (p["A"] + (p["A"] + p["A"])))])


def _build_neg_distributes() -> _Build:
    tr = _Tracker()
    A, B = generic_point("A"), generic_point("B")
    L = symbolic_add(-A, -B, "chord", tr)
    R = -symbolic_add(A, B, "chord", tr)

    def hyp(p):
        return _affine(p["A"], p["B"]) and _neq_pm(p["A"], p["B"])

    return _Build(_coord_components("", L, R, tr), tr.denominators, tr.peak, ("A", "B"), hyp,
                  [("-A-B", L, lambda p: (-p["A"]) + (-p["B"])),
                   ("-(A+B)", R, lambda p: -(p["A"] + p["B"]))])


def _build_pmb() -> _Build:
    tr = _Tracker()
    yA, yB = _v("yA"), _v("yB")
    printed = ((-yB - yA) ** 2 - (yB - yA) ** 2) - 4 * yA * yB
    A, B = generic_point("A"), generic_point("B")
    plus = symbolic_add(A, B, "chord", tr)
    minus = symbolic_add(A, -B, "chord", tr)
    dx = _v("xA") - _v("xB")
    # x(A-B) - x(A+B) = 4*yA*yB / (xA-xB)^2, which vanishes only if yA*yB = 0
    derived = cleared_difference(minus.x - plus.x, RatFunc(4 * yA * yB, dx * dx))
    tr.see(printed, derived)

    def hyp(p):
        return _affine(p["A"], p["B"]) and _neq_pm(p["A"], p["B"])

    return _Build([("simplification", printed, ROLE_IDENTITY),
                   ("x(A-B)-x(A+B)", derived, ROLE_IDENTITY)],
                  tr.denominators, tr.peak, ("A", "B"), hyp,
                  [("A+B", plus, lambda p: p["A"] + p["B"]),
                   ("A-B", minus, lambda p: p["A"] - p["B"])])


def _build_double_minus_a() -> _Build:
    tr = _Tracker()
    A = generic_point("A")
    AA = symbolic_add(A, A, "tangent", tr)
    L = symbolic_add(AA, -A, "chord", tr)

    def hyp(p):
        A = p["A"]
        return _affine(A) and A != -A and A + A != -A

    return _Build(_coord_components("", L, A, tr), tr.denominators, tr.peak, ("A",), hyp,
                  [("(A+A)-A", L, lambda p: (p["A"] + p["A"]) - p["A"])])


def _build_add_minus_b() -> _Build:
    tr = _Tracker()
    A, B = generic_point("A"), generic_point("B")
    L = symbolic_add(symbolic_add(A, B, "chord", tr), -B, "chord", tr)

    def hyp(p):
        A, B = p["A"], p["B"]
        return _affine(A, B) and _neq_pm(A, B) and A + B != -B

    return _Build(_coord_components("", L, A, tr), tr.denominators, tr.peak, ("A", "B"), hyp,
                  [("(A+B)-B", L, lambda p: (p["A"] + p["B"]) - p["B"])])


def _claim5_quartic() -> MPoly:
    xA, yA, xB, a, b = _v("xA"), _v("yA"), _v("xB"), _v("a"), _v("b")
    return (4 * xB ** 3 * yA ** 2 - xB ** 2 * (3 * xA ** 2 + a) ** 2
            + xB * (2 * a ** 2 * xA + 6 * xA ** 5 - 12 * b * xA ** 2)
            - (yA ** 2 - b) ** 2 + 4 * a * xA ** 4 + 8 * b * xA ** 3)


def _claim5_hyp(p) -> bool:
    A, B = p["A"], p["B"]
    return _affine(A, B) and A != -A and _neq_pm(A, B)


def _build_claim5_square() -> _Build:
    tr = _Tracker()
    xA, yA, xB, yB, a, b = (_v(n) for n in ("xA", "yA", "xB", "yB", "a", "b"))
    rhs = yA ** 2 + a * xB + b - 2 * xA ** 3 + 3 * xA ** 2 * xB
    squared = 4 * yA ** 2 * yB ** 2 - rhs ** 2 - _claim5_quartic()
    # x_A = x(A+B) rewritten as 2*yA*yB = rhs
    A, B = generic_point("A"), generic_point("B")
    AB = symbolic_add(A, B, "chord", tr)
    slope_eq = cleared_difference(AB.x, RatFunc.of(xA)) - (rhs - 2 * yA * yB)
    tr.see(squared, slope_eq)
    return _Build([("x(A+B)=xA <=> 2yAyB=rhs", slope_eq, ROLE_IDENTITY),
                   ("squared", squared, ROLE_IDENTITY)],
                  tr.denominators, tr.peak, ("A", "B"), _claim5_hyp,
                  [("A+B", AB, lambda p: p["A"] + p["B"])])


def _build_claim5_factorization() -> _Build:
    tr = _Tracker()
    xA, yA, xB, a = _v("xA"), _v("yA"), _v("xB"), _v("a")
    quartic = _claim5_quartic()
    printed = quartic - (4 * yA ** 2 * xB - (3 * xA ** 2 + a) ** 2 + 8 * xA * yA ** 2) * (xB - xA) ** 2
    A = generic_point("A")
    AA = symbolic_add(A, A, "tangent", tr)
    factor = (RatFunc.of(xB) - AA.x) * ((xB - xA) ** 2 * 4 * yA ** 2)
    derived = cleared_difference(RatFunc.of(quartic), factor)
    tr.see(printed, derived)
    return _Build([("printed", printed, ROLE_IDENTITY),
                   ("derived from x(A+A)", derived, ROLE_IDENTITY)],
                  tr.denominators, tr.peak, ("A", "B"), _claim5_hyp,
                  [("A+A", AA, lambda p: p["A"] + p["A"])])


def _tilde_identities(*, alpha_fix: bool, eta_fix: bool, mu_fix: bool) -> tuple[MPoly, MPoly]:
    """The displayed cleared forms of x1 = x2 and y1 = y2.

    With every flag off the formulas are transcribed as printed.  The flags
    apply the three suspected corrections independently:

    * ``alpha_fix``: alpha~ = yB - yA instead of yB - xA;
    * ``eta_fix``: in the y identity, the inner ``(..)eta~^2 - eta~^2`` factor
      reads ``- alpha~^2``;
    * ``mu_fix``: the factors ``(xA+xB+xC)eta~^2 - gamma~^2`` read
      ``(xA+xB+xC)mu~^2 - gamma~^2``.
    """
    xA, yA, xB, yB, xC, yC = (_v(n) for n in ("xA", "yA", "xB", "yB", "xC", "yC"))
    s = xA + xB + xC
    at = (yB - yA) if alpha_fix else (yB - xA)
    gt = yB - yC
    et = xB - xA
    mt = xB - xC
    bt = (yA + yC) * et ** 3 - at * ((2 * xA + xB) * et ** 2 - at ** 2)
    tt = (yA + yB) * mt ** 3 - gt * ((2 * xB + xC) * mt ** 2 - gt ** 2)
    p5 = s * et ** 2 - at ** 2
    q5 = s * mt ** 2 - gt ** 2
    q5_printed = q5 if mu_fix else s * et ** 2 - gt ** 2

    x_id = ((bt ** 2 * mt ** 2 + (((2 * xA - 2 * xC) * mt ** 2 + gt ** 2) * et ** 2 - at ** 2 * mt ** 2)
             * p5 ** 2) * q5_printed ** 2
            - tt ** 2 * p5 ** 2 * et ** 2)

    inner = p5 if eta_fix else s * et ** 2 - et ** 2
    y_id = ((yA - yC) * p5 ** 3 * q5 ** 3 * et ** 3 * mt ** 3
            + bt * (((2 * xC - xA - xB) * et ** 2 + at ** 2) * inner ** 2 - bt ** 2) * q5 ** 3 * mt ** 3
            - tt * (((2 * xA - xB - xC) * mt ** 2 + gt ** 2) * q5_printed ** 2 - tt ** 2) * p5 ** 3 * et ** 3)
    return x_id, y_id


def _build_audit() -> _Build:
    tr = _Tracker()
    printed_x, printed_y = _tilde_identities(alpha_fix=False, eta_fix=False, mu_fix=False)
    derived_x, derived_y = _tilde_identities(alpha_fix=True, eta_fix=True, mu_fix=True)
    components = [
        ("printed x1=x2", printed_x, ROLE_PRINTED),
        ("printed y1=y2", printed_y, ROLE_PRINTED),
        ("derived x1=x2", derived_x, ROLE_IDENTITY),
        ("derived y1=y2", derived_y, ROLE_IDENTITY),
        ("diff x (printed - derived)", printed_x - derived_x, ROLE_DIFF),
        ("diff y (printed - derived)", printed_y - derived_y, ROLE_DIFF),
    ]
    # one correction at a time, to attribute the discrepancy to each typo
    for flags in ({"alpha_fix": True}, {"eta_fix": True}, {"mu_fix": True},
                  {"alpha_fix": True, "mu_fix": True}, {"alpha_fix": True, "eta_fix": True}):
        full = {"alpha_fix": False, "eta_fix": False, "mu_fix": False, **flags}
        fx, fy = _tilde_identities(**full)
        tag = "+".join(sorted(flags))
        components.append((f"x1=x2 with {tag}", fx, ROLE_DIFF))
        components.append((f"y1=y2 with {tag}", fy, ROLE_DIFF))
    for _, poly, _ in components:
        tr.see(poly)
    return _Build(components, tr.denominators, tr.peak, ("A", "B", "C"), _assoc3_hyp)


_BUILDERS: dict[LemmaId, Callable[[], _Build]] = {
    LemmaId.Assoc3Generic: _build_assoc3,
    LemmaId.AssocDouble: _build_assoc_double,
    LemmaId.AssocQuad: _build_assoc_quad,
    LemmaId.NegDistributes: _build_neg_distributes,
    LemmaId.PmbSimplification: _build_pmb,
    LemmaId.DoubleMinusA: _build_double_minus_a,
    LemmaId.AddMinusB: _build_add_minus_b,
    LemmaId.Claim5Square: _build_claim5_square,
    LemmaId.Claim5Factorization: _build_claim5_factorization,
    LemmaId.TranscriptionAudit: _build_audit,
}


@lru_cache(maxsize=None)
def _build(lemma: LemmaId) -> _Build:
    return _BUILDERS[lemma]()


# results

@dataclass(frozen=True)
class Component:
    label: str
    residual: MPoly
    role: str = ROLE_IDENTITY

    def to_dict(self) -> dict:
        return {"label": self.label, "role": self.role,
                "residual_terms": len(self.residual), "residual_text": self.residual.render()}

    @classmethod
    def from_dict(cls, d: Mapping) -> "Component":
        return cls(d["label"], parse_poly(d["residual_text"]), d["role"])


@dataclass(frozen=True)
class CheckResult:
    id: LemmaId
    status: str
    components: tuple[Component, ...]
    peak_term_count: int
    elapsed_millis: int

    @property
    def decisive(self) -> tuple[Component, ...]:
        """Components whose residual decides the status."""
        if self.id is LemmaId.TranscriptionAudit:
            return tuple(c for c in self.components if c.role == ROLE_PRINTED)
        return tuple(c for c in self.components if c.role == ROLE_IDENTITY)

    @property
    def residual(self) -> MPoly:
        """First nonzero decisive residual, or zero."""
        for c in self.decisive:
            if not c.residual.is_zero():
                return c.residual
        return MPoly.zero()

    def residual_text(self) -> str:
        bad = [c for c in self.decisive if not c.residual.is_zero()]
        if not bad:
            return "0"
        if len(self.decisive) == 1:
            return bad[0].residual.render()
        return "; ".join(f"{c.label}: {c.residual.render()}" for c in bad)

    def to_dict(self) -> dict:
        return {
            "id": self.id.value,
            "status": self.status,
            "residual_terms": sum(len(c.residual) for c in self.decisive),
            "residual_text": self.residual_text(),
            "elapsed_ms": self.elapsed_millis,
            "peak_term_count": self.peak_term_count,
            "components": [c.to_dict() for c in self.components],
        }

    @classmethod
    def from_dict(cls, d: Mapping) -> "CheckResult":
        return cls(LemmaId.parse(d["id"]), d["status"],
                   tuple(Component.from_dict(c) for c in d["components"]),
                   d["peak_term_count"], d["elapsed_ms"])


@dataclass(frozen=True)
class VerificationReport:
    results: tuple[CheckResult, ...]

    @property
    def summary(self) -> dict[str, int]:
        counts = {"pass": 0, "fail": 0, "flagged": 0}
        for r in self.results:
            counts[r.status] += 1
        return counts

    @property
    def ok(self) -> bool:
        """True when no check failed (flagged audits are allowed)."""
        return all(r.status != "fail" for r in self.results)

    def to_dict(self) -> dict:
        return {"tool": TOOL_NAME,
                "checks": [r.to_dict() for r in self.results],
                "summary": self.summary,
                "deviations": list(DEVIATIONS)}

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_dict(cls, d: Mapping) -> "VerificationReport":
        return cls(tuple(CheckResult.from_dict(c) for c in d["checks"]))

    @classmethod
    def from_json(cls, text: str) -> "VerificationReport":
        return cls.from_dict(json.loads(text))


def check_lemma(lemma) -> CheckResult:
    lemma = LemmaId.parse(lemma)
    start = time.perf_counter()
    build = _build(lemma)
    components = tuple(Component(label, normal_form(poly), role)
                       for label, poly, role in build.components)
    elapsed = int(round((time.perf_counter() - start) * 1000))
    peak = max([build.peak] + [len(c.residual) for c in components])

    identities_ok = all(c.residual.is_zero() for c in components if c.role == ROLE_IDENTITY)
    printed_ok = all(c.residual.is_zero() for c in components if c.role == ROLE_PRINTED)
    if not identities_ok:
        status = "fail"
    elif not printed_ok:
        status = "flagged"
    else:
        status = "pass"
    return CheckResult(lemma, status, components, peak, elapsed)


def run_all() -> VerificationReport:
    return VerificationReport(tuple(check_lemma(lemma) for lemma in LemmaId))


# numeric cross-check

@dataclass
class ConsistencyReport:
    lemma: LemmaId
    configurations: int
    rejected: int
    failures: list[str]

    @property
    def ok(self) -> bool:
        return not self.failures


def _random_prime(rng: random.Random, bits: int) -> int:
    while True:
        p = next_prime(rng.getrandbits(bits) | (1 << (bits - 1)))
        if p.bit_length() == bits:
            return p


def _random_affine(curve: ec.CurveParams, rng: random.Random) -> ec.Affine:
    from .field import fp_legendre, fp_sqrt
    p = int(curve.p)
    while True:
        x = curve.element(rng.randrange(p))
        rhs = curve.rhs(x)
        if fp_legendre(rhs) >= 0:
            roots = sorted(r.residue for r in fp_sqrt(rhs))
            return ec.Affine(x, curve.element(roots[rng.randrange(len(roots))]), curve)


def numeric_consistency(lemma, trials: int = 50, bits: int = 31, seed: int = 0) -> ConsistencyReport:
    """Evaluate the check's cleared polynomials at random admissible points.

    For each of ``trials`` configurations (random prime, random curve, random
    points satisfying the lemma's hypotheses) this asserts that every slope
    denominator is nonzero, every identity polynomial evaluates to 0 mod p,
    and the symbolic sums agree with :mod:`grouplaw.curve`.
    """
    lemma = LemmaId.parse(lemma)
    build = _build(lemma)
    rng = random.Random(seed)
    failures: list[str] = []
    rejected = 0
    done = 0
    while done < trials:
        p = _random_prime(rng, bits)
        try:
            curve = ec.CurveParams(p, rng.randrange(p), rng.randrange(p))
        except ValueError:
            continue
        pts = {label: _random_affine(curve, rng) for label in ("A", "B", "C")}
        if not build.hypothesis(pts):
            rejected += 1
            continue
        done += 1
        values = {"a": curve.a.residue, "b": curve.b.residue}
        for label, P in pts.items():
            values["x" + label] = P.x.residue
            values["y" + label] = P.y.residue
        where = f"p={p}, a={values['a']}, b={values['b']}, " + ", ".join(
            f"{k}={pts[k]!r}" for k in build.points)
        for den in build.denominators:
            if den.evaluate(values, p) == 0:
                failures.append(f"denominator vanishes at {where}")
        for label, poly, role in build.components:
            if role == ROLE_IDENTITY and poly.evaluate(values, p) != 0:
                failures.append(f"{label} nonzero at {where}")
        for label, sym, numeric in build.witnesses:
            expected = numeric(pts)
            got = sym.evaluate(values, p)
            if isinstance(expected, ec.Infinity) or got != (expected.x.residue, expected.y.residue):
                failures.append(f"{label}: symbolic {got} vs curve {expected!r} at {where}")
    return ConsistencyReport(lemma, done, rejected, failures)


def lemma_ids(names: Sequence[str] | None = None) -> list[LemmaId]:
    if not names:
        return list(LemmaId)
    return [LemmaId.parse(n) for n in names]
