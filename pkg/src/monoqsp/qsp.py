"""Closed-form QSP phases for x -> x^n (n odd) and their numerical checks."""

from __future__ import annotations

import cmath
import csv
import io
import json
import math
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .cyclotomic import CyclotomicNumber, _check_order
from .dihedral import enumerate_class, gamma
from .errors import DomainError, EvenDegreeError, InvalidOrderError
from .polymat import Mat2, phase_matrix, qsp_product_symbolic, reflection_matrix

__all__ = [
    "CONVENTION",
    "PhaseSchedule",
    "QspSample",
    "SweepResult",
    "CrossCheckVerdict",
    "monomial_phases",
    "signal_matrix",
    "partial_products",
    "evaluate_qsp_general",
    "evaluate_qsp_unit_circle",
    "evaluate_symbolic",
    "residual_sweep",
    "derivative_cross_check",
]

CONVENTION = (
    "S(e^{i phi}) = diag(e^{i phi}, e^{-i phi}) = e^{i phi Z}, interleaved as "
    "T S(e^{i phi_1}) T S(e^{i phi_2}) ... T S(e^{i phi_n}) with "
    "T = [[k1, k2], [k2, k1]], product taken left to right"
)


@dataclass(frozen=True)
class PhaseSchedule:
    """Phase angles 2*pi*m_i/n, i = 1..n, with ``multiples[i-1] = i mod n``."""

    degree: int
    multiples: tuple[int, ...]
    convention: str = CONVENTION

    @property
    def angles(self) -> tuple[float, ...]:
        n = self.degree
        return tuple(2 * math.pi * m / n for m in self.multiples)

    def to_dict(self) -> dict:
        return {
            "degree": self.degree,
            "convention": self.convention,
            "angles_radians": list(self.angles),
            "angles_as_multiples_of_2pi_over_n": list(self.multiples),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_dict(cls, doc: dict) -> PhaseSchedule:
        multiples = tuple(int(m) for m in doc["angles_as_multiples_of_2pi_over_n"])
        sched = cls(int(doc["degree"]), multiples, doc["convention"])
        listed = doc.get("angles_radians")
        if listed is not None and tuple(float(a) for a in listed) != sched.angles:
            raise ValueError("angles_radians disagrees with the integer multiples")
        return sched

    @classmethod
    def from_json(cls, text: str) -> PhaseSchedule:
        return cls.from_dict(json.loads(text))

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["index", "angle"])
        for i, a in enumerate(self.angles, start=1):
            w.writerow([i, repr(a)])
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> PhaseSchedule:
        rows = list(csv.reader(io.StringIO(text)))
        if not rows or rows[0] != ["index", "angle"]:
            raise ValueError("missing 'index,angle' header")
        body = rows[1:]
        n = len(body)
        sched = monomial_phases(n)
        for (idx, angle), expect in zip(body, sched.angles):
            if float(angle) != expect:
                raise ValueError(f"row {idx}: angle {angle} is not the closed-form phase")
        return sched


def monomial_phases(n: int) -> PhaseSchedule:
    """Phases implementing x^n: the i-th angle is 2*pi*i/n (the last is 0).

    Raises :class:`EvenDegreeError` for even n, for which the construction
    does not give x^n.
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise InvalidOrderError(f"degree must be a positive integer, got {n!r}")
    if n % 2 == 0:
        raise EvenDegreeError(
            f"degree {n} is even; closed-form phases exist only for odd degrees"
        )
    return PhaseSchedule(n, tuple(i % n for i in range(1, n + 1)))


def signal_matrix(k1: complex, k2: complex) -> Mat2[complex]:
    return Mat2(k1, k2, k2, k1)


def _phase(angle: float) -> Mat2[complex]:
    z = cmath.exp(1j * angle)
    return Mat2(z, 0j, 0j, z.conjugate())


def partial_products(s: PhaseSchedule, k1: complex, k2: complex) -> Iterator[Mat2[complex]]:
    """Running products after each T and each S factor, in fold order."""
    t = signal_matrix(complex(k1), complex(k2))
    m = Mat2(1 + 0j, 0j, 0j, 1 + 0j)
    for angle in s.angles:
        m = m @ t
        yield m
        m = m @ _phase(angle)
        yield m


def evaluate_qsp_general(s: PhaseSchedule, k1: complex, k2: complex) -> Mat2[complex]:
    """Float product prod_i T(k1, k2) S(e^{i phi_i}), left to right."""
    m = Mat2(1 + 0j, 0j, 0j, 1 + 0j)
    for m in partial_products(s, k1, k2):
        pass
    return m


def unit_signal(x: float) -> tuple[float, complex]:
    if not -1.0 <= x <= 1.0:
        raise DomainError(f"signal value {x} outside [-1, 1]")
    return x, 1j * math.sqrt(1.0 - x * x)


def evaluate_qsp_unit_circle(s: PhaseSchedule, x: float) -> complex:
    """Top-left entry with k1 = x, k2 = i*sqrt(1 - x^2), so T = exp(i theta X)."""
    k1, k2 = unit_signal(x)
    return evaluate_qsp_general(s, k1, k2).e11


def evaluate_symbolic(n: int, k1: complex, k2: complex) -> Mat2[complex]:
    """Entrywise float evaluation of the exact symbolic product."""
    return qsp_product_symbolic(n).map(lambda p: p.evaluate(k1, k2))


@dataclass(frozen=True)
class QspSample:
    x: float
    value: complex
    target: float
    abs_error: float

    @classmethod
    def at(cls, s: PhaseSchedule, x: float) -> QspSample:
        value = evaluate_qsp_unit_circle(s, x)
        target = x**s.degree
        return cls(x, value, target, abs(value - target))


@dataclass(frozen=True)
class SweepResult:
    degree: int
    count: int
    seed: int
    max_error: float
    argmax_x: float


def sample_points(count: int, seed: int) -> np.ndarray:
    """``count`` uniform points in [-1, 1] from numpy's PCG64 ``default_rng(seed)``."""
    return np.random.default_rng(seed).uniform(-1.0, 1.0, size=count)


def residual_sweep(n: int, count: int, seed: int) -> SweepResult:
    """Largest |top-left - x^n| over seeded samples of x in [-1, 1].

    Ties are broken by the total order on (error, x), so the reported
    arg-max does not depend on evaluation order.
    """
    if count < 1:
        raise ValueError("count must be at least 1")
    s = monomial_phases(n)
    samples = (QspSample.at(s, float(x)) for x in sample_points(count, seed))
    worst = max((smp.abs_error, smp.x) for smp in samples)
    return SweepResult(n, count, seed, worst[0], worst[1])


@dataclass(frozen=True)
class CrossCheckVerdict:
    degree: int
    k: int
    passed: bool
    slice_matrix: Mat2[CyclotomicNumber]
    orbit_matrix: Mat2[CyclotomicNumber]
    stray_terms: int = 0

    @property
    def difference(self) -> Mat2[CyclotomicNumber]:
        return self.slice_matrix - self.orbit_matrix


def _x_power_slice(n: int, k: int) -> tuple[Mat2[CyclotomicNumber], int]:
    """Coefficient matrix of x^k y^(n-k) plus a count of any other x^k terms."""
    prod = qsp_product_symbolic(n)
    zero = CyclotomicNumber.zero(n)
    entries, stray = [], 0
    for p in prod.entries():
        col = p.coefficient_of_x(k)
        entries.append(col.get(n - k, zero))
        stray += sum(1 for dy in col if dy != n - k)
    return Mat2(*entries), stray


def _class_sum(n: int, m: int) -> Mat2[CyclotomicNumber]:
    """sum over f in A(m) of S(w^gamma(f)) X^m."""
    zero = CyclotomicNumber.zero(n)
    total = Mat2(zero, zero, zero, zero)
    for f in enumerate_class(n, m):
        total = total + phase_matrix(n, gamma(f))
    if m % 2:
        total = total @ reflection_matrix(n)
    return total


def derivative_cross_check(n: int, k: int) -> CrossCheckVerdict:
    """Compare the x^k slice of the product with its sign-function expansion.

    Differentiating k times in x at x = 0 picks, in each T factor, either the
    identity (from x) or y X; the choices are indexed by sign functions with
    n - k minus signs, and each ordered product of X's and phases collapses to
    S(w^gamma(f)) X^(n-k). Both sides are exact matrices over Z[w].
    """
    _check_order(n)
    if n % 2 == 0:
        raise EvenDegreeError(f"degree {n} is even")
    if not 0 <= k <= n:
        raise ValueError(f"k must lie in [0, {n}], got {k}")
    lhs, stray = _x_power_slice(n, k)
    rhs = _class_sum(n, n - k)
    return CrossCheckVerdict(n, k, lhs == rhs and stray == 0, lhs, rhs, stray)
