"""Numeric validation of the group axioms and every lemma statement.

Two drivers share one set of property evaluators:

* :func:`exhaustive_check` walks every prime ``5 <= p <= max_p``, every
  nonsingular ``(a, b)`` and every point tuple, using a precomputed addition
  table;
* :func:`randomized_check` samples primes of a given bit size, curves and
  point triples, injecting correlated triples (``B = A``, ``B = -A``,
  ``C = A + B`` ...) in a fixed quarter of the trials.

Implications are only asserted when their hypothesis holds; otherwise the
configuration is counted as skipped.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from . import curve as ec
from .errors import GroupLawError, NotPrime, TooLarge
from .field import Prime, fp_legendre, fp_sqrt, is_prime, next_prime

__all__ = [
    "PROPERTIES",
    "SPECIAL_KINDS",
    "HarnessConfig",
    "HarnessReport",
    "Counterexample",
    "PropertyStats",
    "Stream",
    "random_curve",
    "random_point",
    "exhaustive_check",
    "randomized_check",
    "check_curve",
    "EXHAUSTIVE_GUARD",
]

EXHAUSTIVE_GUARD = 1000

PROPERTIES = (
    "closure",
    "neutral",
    "inverse",
    "commutativity",
    "double_is_zero_iff_y_zero",
    "same_x_means_equal_or_opposite",
    "unique_neutral",          # A+B = A  =>  B = O
    "plus_minus",              # A+B = A-B and A != -A  =>  B = -B
    "negation_distributes",    # -A-B = -(A+B)
    "double_minus_self",       # A != -A, A+A != -A  =>  (A+A)-A = A
    "sum_is_minus_self",       # A+B = -A  =>  B = -A-A
    "cancellation",            # A+B = A+B'  =>  B = B'
    "add_then_subtract",       # (A+B)-B = A
    "solve_for_summand",       # A+B = C  =>  A = C-B
    "associativity_special",   # associativity under the three-part hypothesis
    "associativity",           # (A+B)+C = A+(B+C)
)

BRANCHES = ("part1_generic", "part2_repeated", "part3_contains_O")

SPECIAL_KINDS = ("B=A", "B=-A", "C=A+B", "C=-(A+B)", "A=C", "B=C", "A=O", "B=O", "B=-A-A")

SPECIAL_EVERY = 4   # one trial in four gets a correlated triple


@dataclass
class PropertyStats:
    tested: int = 0
    failures: int = 0
    skipped: int = 0

    def to_dict(self) -> dict:
        return {"tested": self.tested, "failures": self.failures, "skipped": self.skipped}


@dataclass(frozen=True)
class Counterexample:
    property: str
    p: int
    a: int
    b: int
    points: tuple[str, ...]

    def to_dict(self) -> dict:
        return {"property": self.property, "curve": {"p": self.p, "a": self.a, "b": self.b},
                "points": list(self.points)}

    @classmethod
    def from_dict(cls, d) -> "Counterexample":
        c = d["curve"]
        return cls(d["property"], c["p"], c["a"], c["b"], tuple(d["points"]))


@dataclass
class HarnessReport:
    mode: str
    curves: int = 0
    primes: list[int] = field(default_factory=list)
    stats: dict[str, PropertyStats] = field(
        default_factory=lambda: {name: PropertyStats() for name in PROPERTIES})
    branches: dict[str, int] = field(default_factory=lambda: {name: 0 for name in BRANCHES})
    counterexample: Counterexample | None = None

    @property
    def failures(self) -> int:
        return sum(s.failures for s in self.stats.values())

    @property
    def configurations(self) -> int:
        return sum(s.tested for s in self.stats.values())

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def to_dict(self) -> dict:
        return {
            "mode": self.mode,
            "curves": self.curves,
            "primes": self.primes,
            "failures": self.failures,
            "properties": {k: v.to_dict() for k, v in self.stats.items()},
            "branches": dict(self.branches),
            "counterexample": None if self.counterexample is None else self.counterexample.to_dict(),
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, **kwargs)

    @classmethod
    def from_dict(cls, d) -> "HarnessReport":
        rep = cls(d["mode"], d["curves"], list(d["primes"]))
        rep.stats = {k: PropertyStats(**v) for k, v in d["properties"].items()}
        rep.branches = dict(d["branches"])
        if d["counterexample"] is not None:
            rep.counterexample = Counterexample.from_dict(d["counterexample"])
        return rep

    def summary_lines(self) -> list[str]:
        lines = [f"mode={self.mode} curves={self.curves} failures={self.failures}"]
        for name, s in self.stats.items():
            lines.append(f"  {name:34s} tested={s.tested:<9d} failures={s.failures:<4d} skipped={s.skipped}")
        lines.append("  branches: " + ", ".join(f"{k}={v}" for k, v in self.branches.items()))
        if self.counterexample is not None:
            lines.append(f"  counterexample: {self.counterexample.to_dict()}")
        return lines


@dataclass(frozen=True)
class HarnessConfig:
    mode: str = "randomized"
    max_p: int = 13
    prime_bits: int = 31
    trials: int = 1000
    seed: int = 0
    special_kind: str | None = None

    def __post_init__(self):
        if self.mode not in ("exhaustive", "randomized"):
            raise ValueError(f"mode must be 'exhaustive' or 'randomized', not {self.mode!r}")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.mode == "exhaustive" and self.max_p > EXHAUSTIVE_GUARD:
            raise TooLarge(f"max_p = {self.max_p} exceeds the exhaustive guard {EXHAUSTIVE_GUARD}")
        if not 3 <= self.prime_bits <= 64:
            raise ValueError("prime_bits must lie in [3, 64]")
        if self.special_kind is not None and self.special_kind not in SPECIAL_KINDS:
            raise ValueError(f"unknown special kind {self.special_kind!r}")


# random streams

class Stream:
    """Deterministic random stream; ``spawn`` derives independent children."""

    def __init__(self, seed: int | np.random.SeedSequence):
        if not isinstance(seed, np.random.SeedSequence):
            seed = np.random.SeedSequence(int(seed))
        self._seq = seed
        self._gen = np.random.Generator(np.random.PCG64(seed))

    def spawn(self, n: int) -> list["Stream"]:
        return [Stream(s) for s in self._seq.spawn(n)]

    def below(self, n: int) -> int:
        """Uniform integer in [0, n)."""
        return int(self._gen.integers(0, n, dtype=np.uint64))

    def bits(self, k: int) -> int:
        return self.below(1 << k) if k < 64 else (self.below(1 << 32) << 32) | self.below(1 << 32)


def random_prime(bits: int, rng: Stream) -> Prime:
    if bits < 3:
        raise ValueError("need at least 3 bits for a prime > 3")
    while True:
        start = rng.bits(bits - 1) | (1 << (bits - 1))
        try:
            p = next_prime(start)
        except NotPrime:
            continue    # ran past 64 bits
        if p.bit_length() == bits:
            return Prime(p)


def random_curve(p: int, rng: Stream) -> ec.CurveParams:
    """Uniform nonsingular (a, b) by rejection on the discriminant."""
    p = Prime(p)
    while True:
        a, b = rng.below(p), rng.below(p)
        if (4 * a ** 3 + 27 * b ** 2) % p:
            return ec.CurveParams(p, a, b)


def random_point(params: ec.CurveParams, rng: Stream) -> ec.Point:
    """A random point; O with probability 1/(p+1)."""
    p = int(params.p)
    if rng.below(p + 1) == p:
        return ec.O
    while True:
        x = params.element(rng.below(p))
        rhs = params.rhs(x)
        if fp_legendre(rhs) < 0:
            continue
        roots = sorted(fp_sqrt(rhs), key=lambda e: e.residue)
        return ec.Affine(x, roots[rng.below(len(roots))], params)


# property evaluation, generic over the element representation

class _PointOps:
    """Elements are Point objects; sums computed by the curve module."""

    def __init__(self, params: ec.CurveParams):
        self.params = params
        self.zero = ec.O

    add = staticmethod(ec.add)
    neg = staticmethod(ec.negate)

    def is_zero(self, P) -> bool:
        return isinstance(P, ec.Infinity)

    def y_zero(self, P) -> bool:
        return P.y.residue == 0

    def x_of(self, P) -> int:
        return P.x.residue

    def valid(self, P) -> bool:
        return self.is_zero(P) or (P.curve == self.params and ec.is_on_curve(self.params, P.x, P.y))

    def show(self, P) -> str:
        return repr(P)


class _TableOps:
    """Elements are indices into the enumerated point list; sums are lookups."""

    def __init__(self, params: ec.CurveParams):
        self.params = params
        self.points = ec.enumerate_points(params, EXHAUSTIVE_GUARD)
        index = {P: i for i, P in enumerate(self.points)}
        self.zero = 0
        self.negs = [index[ec.negate(P)] for P in self.points]
        self.xs = [None] + [P.x.residue for P in self.points[1:]]
        self.ys = [None] + [P.y.residue for P in self.points[1:]]
        self.table: list[list[int]] = []
        self.bad: list[tuple[int, int]] = []
        for P in self.points:
            row = []
            for Q in self.points:
                try:
                    row.append(index[ec.add(P, Q)])
                except (KeyError, GroupLawError, AssertionError):
                    self.bad.append((index[P], index[Q]))
                    row.append(0)
            self.table.append(row)

    def add(self, i: int, j: int) -> int:
        return self.table[i][j]

    def neg(self, i: int) -> int:
        return self.negs[i]

    def is_zero(self, i: int) -> bool:
        return i == 0

    def y_zero(self, i: int) -> bool:
        return self.ys[i] == 0

    def x_of(self, i: int) -> int:
        return self.xs[i]

    def show(self, i: int) -> str:
        return repr(self.points[i])


class _Recorder:
    def __init__(self, report: HarnessReport, ops):
        self.report = report
        self.ops = ops
        self.stats = report.stats

    def result(self, name: str, ok: bool, *elems) -> None:
        s = self.stats[name]
        s.tested += 1
        if not ok:
            s.failures += 1
            if self.report.counterexample is None:
                prm = self.ops.params
                self.report.counterexample = Counterexample(
                    name, int(prm.p), prm.a.residue, prm.b.residue,
                    tuple(self.ops.show(e) for e in elems))

    def skip(self, name: str) -> None:
        self.stats[name].skipped += 1


def _unary(rec: _Recorder, ops, A) -> None:
    add, neg, O = ops.add, ops.neg, ops.zero
    rec.result("neutral", add(A, O) == A and add(O, A) == A, A)
    rec.result("inverse", ops.is_zero(add(A, neg(A))), A)
    if ops.is_zero(A):
        rec.skip("double_is_zero_iff_y_zero")
    else:
        rec.result("double_is_zero_iff_y_zero", ops.is_zero(add(A, A)) == ops.y_zero(A), A)
    AA = add(A, A)
    if A != neg(A) and AA != neg(A):
        rec.result("double_minus_self", add(AA, neg(A)) == A, A)
    else:
        rec.skip("double_minus_self")


def _binary(rec: _Recorder, ops, A, B) -> None:
    add, neg = ops.add, ops.neg
    AB = add(A, B)
    rec.result("commutativity", AB == add(B, A), A, B)
    if not ops.is_zero(A) and not ops.is_zero(B) and ops.x_of(A) == ops.x_of(B):
        rec.result("same_x_means_equal_or_opposite", A == B or A == neg(B), A, B)
    else:
        rec.skip("same_x_means_equal_or_opposite")
    if AB == A:
        rec.result("unique_neutral", ops.is_zero(B), A, B)
    else:
        rec.skip("unique_neutral")
    if AB == add(A, neg(B)) and A != neg(A):
        rec.result("plus_minus", B == neg(B), A, B)
    else:
        rec.skip("plus_minus")
    rec.result("negation_distributes", add(neg(A), neg(B)) == neg(AB), A, B)
    if AB == neg(A):
        rec.result("sum_is_minus_self", B == add(neg(A), neg(A)), A, B)
    else:
        rec.skip("sum_is_minus_self")
    rec.result("add_then_subtract", add(AB, neg(B)) == A, A, B)


def _vabc_parts(ops, A, B, C, AB, BC, L, R) -> tuple[bool, bool, bool]:
    part1 = AB != C and A != BC
    part2 = A == B or B == C or A == C
    part3 = any(ops.is_zero(e) for e in (A, B, C, AB, BC, L, R))
    return part1, part2, part3


def _ternary(rec: _Recorder, ops, A, B, C) -> None:
    add, neg = ops.add, ops.neg
    AB = add(A, B)
    if AB == add(A, C):
        rec.result("cancellation", B == C, A, B, C)
    else:
        rec.skip("cancellation")
    if AB == C:
        rec.result("solve_for_summand", A == add(C, neg(B)), A, B, C)
    else:
        rec.skip("solve_for_summand")
    BC = add(B, C)
    L = add(AB, C)
    R = add(A, BC)
    assoc = L == R
    rec.result("associativity", assoc, A, B, C)
    parts = _vabc_parts(ops, A, B, C, AB, BC, L, R)
    if any(parts):
        for name, hit in zip(BRANCHES, parts):
            if hit:
                rec.report.branches[name] += 1
        rec.result("associativity_special", assoc, A, B, C)
    else:
        rec.skip("associativity_special")


def _closure_pairs(rec: _Recorder, ops: _TableOps) -> None:
    bad = set(ops.bad)
    n = len(ops.points)
    for i in range(n):
        for j in range(n):
            rec.result("closure", (i, j) not in bad, i, j)


def _check_table(report: HarnessReport, params: ec.CurveParams) -> _TableOps:
    ops = _TableOps(params)
    rec = _Recorder(report, ops)
    n = len(ops.points)
    elems = range(n)
    _closure_pairs(rec, ops)
    for A in elems:
        _unary(rec, ops, A)
        for B in elems:
            _binary(rec, ops, A, B)
            for C in elems:
                _ternary(rec, ops, A, B, C)
    report.curves += 1
    return ops


def _curves_of(p: int) -> Iterator[ec.CurveParams]:
    for a in range(p):
        for b in range(p):
            if (4 * a ** 3 + 27 * b ** 2) % p:
                yield ec.CurveParams(p, a, b)


def exhaustive_check(max_p: int) -> HarnessReport:
    """Every property over every point tuple of every curve with 5 <= p <= max_p."""
    if max_p > EXHAUSTIVE_GUARD:
        raise TooLarge(f"max_p = {max_p} exceeds the exhaustive guard {EXHAUSTIVE_GUARD}")
    report = HarnessReport("exhaustive")
    for p in range(5, max_p + 1):
        if not is_prime(p):
            continue
        report.primes.append(p)
        for params in _curves_of(p):
            _check_table(report, params)
    return report


def check_curve(params: ec.CurveParams, *, exhaustive: bool = True,
                trials: int = 1000, seed: int = 0) -> HarnessReport:
    """All properties on one curve, over every tuple or ``trials`` random triples."""
    if exhaustive:
        if int(params.p) > EXHAUSTIVE_GUARD:
            raise TooLarge(f"p = {int(params.p)} exceeds the exhaustive guard {EXHAUSTIVE_GUARD}")
        report = HarnessReport("exhaustive")
        report.primes.append(int(params.p))
        _check_table(report, params)
        return report
    report = HarnessReport("randomized")
    report.primes.append(int(params.p))
    report.curves = 1
    ops = _PointOps(params)
    rec = _Recorder(report, ops)
    for i, rng in enumerate(Stream(seed).spawn(trials)):
        A, B, C = _triple(params, rng, _kind_for(i, None))
        _trial_checks(rec, ops, A, B, C)
    return report


def _kind_for(i: int, forced: str | None) -> str | None:
    if forced is not None:
        return forced
    if i % SPECIAL_EVERY == 0:
        return SPECIAL_KINDS[(i // SPECIAL_EVERY) % len(SPECIAL_KINDS)]
    return None


def _triple(params: ec.CurveParams, rng: Stream, kind: str | None):
    A = random_point(params, rng)
    B = random_point(params, rng)
    C = random_point(params, rng)
    if kind == "B=A":
        B = A
    elif kind == "B=-A":
        B = ec.negate(A)
    elif kind == "C=A+B":
        C = ec.add(A, B)
    elif kind == "C=-(A+B)":
        C = ec.negate(ec.add(A, B))
    elif kind == "A=C":
        C = A
    elif kind == "B=C":
        C = B
    elif kind == "A=O":
        A = ec.O
    elif kind == "B=O":
        B = ec.O
    elif kind == "B=-A-A":
        B = ec.negate(ec.add(A, A))
    return A, B, C


def _trial_checks(rec: _Recorder, ops: _PointOps, A, B, C) -> None:
    for P, Q in ((A, B), (B, C), (A, C)):
        rec.result("closure", ops.valid(ops.add(P, Q)), P, Q)
    _unary(rec, ops, A)
    _binary(rec, ops, A, B)
    _ternary(rec, ops, A, B, C)


def randomized_check(config: HarnessConfig) -> HarnessReport:
    """Random primes of ``config.prime_bits`` bits, random curves, random triples."""
    if config.mode != "randomized":
        raise ValueError("randomized_check needs mode='randomized'")
    report = HarnessReport("randomized")
    primes = set()
    for i, rng in enumerate(Stream(config.seed).spawn(config.trials)):
        p = random_prime(config.prime_bits, rng)
        params = random_curve(p, rng)
        primes.add(int(p))
        report.curves += 1
        ops = _PointOps(params)
        rec = _Recorder(report, ops)
        A, B, C = _triple(params, rng, _kind_for(i, config.special_kind))
        _trial_checks(rec, ops, A, B, C)
    report.primes = sorted(primes)
    return report


def run(config: HarnessConfig) -> HarnessReport:
    if config.mode == "exhaustive":
        return exhaustive_check(config.max_p)
    return randomized_check(config)
