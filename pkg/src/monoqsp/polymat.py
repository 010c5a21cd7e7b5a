"""Bivariate polynomials over Z[w], 2x2 matrices, and the symbolic QSP product."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from types import MappingProxyType
from typing import Callable, Generic, Mapping, TypeVar

from . import kernel
from .cyclotomic import CyclotomicNumber, _check_order
from .errors import OrderMismatchError

__all__ = [
    "BivariatePoly",
    "Mat2",
    "signal_matrix_symbolic",
    "phase_matrix",
    "reflection_matrix",
    "qsp_product_symbolic",
    "coefficient_of_x",
    "TheoremVerdict",
    "verify_theorem",
]

R = TypeVar("R")
Monomial = tuple[int, int]


class BivariatePoly:
    """Sparse polynomial in x, y with :class:`CyclotomicNumber` coefficients.

    Terms are a read-only mapping ``(deg_x, deg_y) -> coefficient`` with
    zero coefficients dropped and keys in sorted order, so two polynomials
    are equal exactly when their term mappings are.
    """

    __slots__ = ("order", "terms")

    def __init__(
        self, order: int, terms: Mapping[Monomial, CyclotomicNumber] | None = None
    ) -> None:
        _check_order(order)
        clean = {}
        for mono, c in sorted((terms or {}).items()):
            if isinstance(c, int):
                c = CyclotomicNumber.from_int(order, c)
            if c.order != order:
                raise OrderMismatchError(f"coefficient of order {c.order} in order {order}")
            dx, dy = mono
            if dx < 0 or dy < 0:
                raise ValueError(f"negative exponent in {mono}")
            if not c.is_zero():
                clean[(int(dx), int(dy))] = c
        self.order = order
        self.terms = MappingProxyType(clean)

    @classmethod
    def _make(cls, order: int, terms: dict[Monomial, CyclotomicNumber]) -> BivariatePoly:
        obj = object.__new__(cls)
        obj.order = order
        obj.terms = MappingProxyType(dict(sorted(terms.items())))
        return obj

    @classmethod
    def zero(cls, order: int) -> BivariatePoly:
        return cls(order)

    @classmethod
    def constant(cls, order: int, c: CyclotomicNumber | int = 1) -> BivariatePoly:
        return cls(order, {(0, 0): c})

    @classmethod
    def monomial(
        cls, order: int, deg_x: int, deg_y: int, c: CyclotomicNumber | int = 1
    ) -> BivariatePoly:
        return cls(order, {(deg_x, deg_y): c})

    @classmethod
    def x(cls, order: int) -> BivariatePoly:
        return cls.monomial(order, 1, 0)

    @classmethod
    def y(cls, order: int) -> BivariatePoly:
        return cls.monomial(order, 0, 1)

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        """Largest deg_x + deg_y over the terms, -1 for zero."""
        return max((dx + dy for dx, dy in self.terms), default=-1)

    def _check(self, other: BivariatePoly) -> None:
        if other.order != self.order:
            raise OrderMismatchError(f"orders differ: {self.order} vs {other.order}")

    def __add__(self, other):
        if isinstance(other, (int, CyclotomicNumber)):
            other = BivariatePoly.constant(self.order, other)
        if not isinstance(other, BivariatePoly):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for mono, c in other.terms.items():
            prev = out.get(mono)
            if prev is None:
                out[mono] = c
            else:
                s = prev + c
                if s.is_zero():
                    del out[mono]
                else:
                    out[mono] = s
        return BivariatePoly._make(self.order, out)

    __radd__ = __add__

    def __neg__(self) -> BivariatePoly:
        return BivariatePoly._make(self.order, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, CyclotomicNumber)):
            other = BivariatePoly.constant(self.order, other)
        if not isinstance(other, BivariatePoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            other = CyclotomicNumber.from_int(self.order, other)
        if isinstance(other, CyclotomicNumber):
            if other.order != self.order:
                raise OrderMismatchError(f"orders differ: {self.order} vs {other.order}")
            if other.is_zero():
                return BivariatePoly._make(self.order, {})
            if other.is_one():
                return self
            return BivariatePoly._make(
                self.order, {m: c * other for m, c in self.terms.items()}
            )
        if not isinstance(other, BivariatePoly):
            return NotImplemented
        self._check(other)
        out: dict[Monomial, CyclotomicNumber] = {}
        for (ax, ay), a in self.terms.items():
            for (bx, by), b in other.terms.items():
                mono = (ax + bx, ay + by)
                p = a * b
                prev = out.get(mono)
                out[mono] = p if prev is None else prev + p
        return BivariatePoly._make(
            self.order, {m: c for m, c in out.items() if not c.is_zero()}
        )

    def __rmul__(self, other):
        return self * other

    def __eq__(self, other) -> bool:
        if not isinstance(other, BivariatePoly):
            return NotImplemented
        return self.order == other.order and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.order, tuple(self.terms.items())))

    def evaluate(self, x: complex, y: complex) -> complex:
        """Floating-point value at (x, y), coefficients via ``to_complex``."""
        return sum(
            (c.to_complex() * x**dx * y**dy for (dx, dy), c in self.terms.items()),
            0j,
        )

    def coefficient_of_x(self, k: int) -> dict[int, CyclotomicNumber]:
        """Terms with deg_x == k, as ``deg_y -> coefficient``."""
        return {dy: c for (dx, dy), c in self.terms.items() if dx == k}

    # canonical text: "(dx,dy):[c0,...]" joined by "; ", terms sorted

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        return "; ".join(f"({dx},{dy}):{c.to_text()}" for (dx, dy), c in self.terms.items())

    @classmethod
    def from_text(cls, order: int, text: str) -> BivariatePoly:
        text = text.strip()
        if text == "0":
            return cls(order)
        terms = {}
        for chunk in text.split(";"):
            mono, _, coeff = chunk.strip().partition(":")
            dx, dy = (int(v) for v in mono.strip().strip("()").split(","))
            if (dx, dy) in terms:
                raise ValueError(f"duplicate monomial ({dx},{dy})")
            terms[(dx, dy)] = CyclotomicNumber.from_text(order, coeff)
        return cls(order, terms)

    def __repr__(self) -> str:
        return f"BivariatePoly({self.order}, {self.to_text()!r})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (dx, dy), c in self.terms.items():
            mono = "*".join(
                s for s in (_pow("x", dx), _pow("y", dy)) if s
            )
            coeff = str(c)
            if not mono:
                parts.append(f"({coeff})")
            elif c.is_one():
                parts.append(mono)
            else:
                parts.append(f"({coeff})*{mono}")
        return " + ".join(parts)


def _pow(var: str, e: int) -> str:
    if e == 0:
        return ""
    return var if e == 1 else f"{var}^{e}"


@dataclass(frozen=True)
class Mat2(Generic[R]):
    """2x2 matrix over any ring whose elements support ``+`` and ``*``."""

    e11: R
    e12: R
    e21: R
    e22: R

    @classmethod
    def identity(cls, one: R, zero: R) -> Mat2[R]:
        return cls(one, zero, zero, one)

    @classmethod
    def diag(cls, a: R, b: R, zero: R) -> Mat2[R]:
        return cls(a, zero, zero, b)

    def __matmul__(self, o: Mat2) -> Mat2:
        return Mat2(
            self.e11 * o.e11 + self.e12 * o.e21,
            self.e11 * o.e12 + self.e12 * o.e22,
            self.e21 * o.e11 + self.e22 * o.e21,
            self.e21 * o.e12 + self.e22 * o.e22,
        )

    def __add__(self, o: Mat2) -> Mat2:
        return Mat2(self.e11 + o.e11, self.e12 + o.e12, self.e21 + o.e21, self.e22 + o.e22)

    def __sub__(self, o: Mat2) -> Mat2:
        return Mat2(self.e11 - o.e11, self.e12 - o.e12, self.e21 - o.e21, self.e22 - o.e22)

    def __neg__(self) -> Mat2:
        return Mat2(-self.e11, -self.e12, -self.e21, -self.e22)

    def scale(self, s) -> Mat2:
        return Mat2(self.e11 * s, self.e12 * s, self.e21 * s, self.e22 * s)

    def entries(self) -> tuple[R, R, R, R]:
        return (self.e11, self.e12, self.e21, self.e22)

    def map(self, fn: Callable[[R], object]) -> Mat2:
        return Mat2(*(fn(e) for e in self.entries()))

    def transpose(self) -> Mat2[R]:
        return Mat2(self.e11, self.e21, self.e12, self.e22)

    def conjugate_transpose(self) -> Mat2:
        return self.transpose().map(lambda e: e.conj() if hasattr(e, "conj") else e.conjugate())

    def det(self) -> R:
        return self.e11 * self.e22 - self.e12 * self.e21

    def trace(self) -> R:
        return self.e11 + self.e22


def signal_matrix_symbolic(n: int) -> Mat2[BivariatePoly]:
    """T(x, y) = [[x, y], [y, x]] with coefficients in Z[w], w of order n."""
    x, y = BivariatePoly.x(n), BivariatePoly.y(n)
    return Mat2(x, y, y, x)


def phase_matrix(n: int, i: int) -> Mat2[CyclotomicNumber]:
    """S(w^i) = diag(w^i, w^-i)."""
    return Mat2.diag(
        CyclotomicNumber.root_power(n, i),
        CyclotomicNumber.root_power(n, -i),
        CyclotomicNumber.zero(n),
    )


def reflection_matrix(n: int) -> Mat2[CyclotomicNumber]:
    """X = [[0, 1], [1, 0]] over Z[w]."""
    one, zero = CyclotomicNumber.one(n), CyclotomicNumber.zero(n)
    return Mat2(zero, one, one, zero)


def _fold_generic(n: int) -> Mat2[BivariatePoly]:
    t = signal_matrix_symbolic(n)
    m = Mat2.identity(BivariatePoly.constant(n, 1), BivariatePoly.zero(n))
    for i in range(1, n + 1):
        m = m @ t
        m = m @ phase_matrix(n, i)
    return m


def _fold_kernel(n: int) -> Mat2[BivariatePoly]:
    tensor = kernel.fold_cyclic(n)
    entries = []
    for r in range(2):
        for c in range(2):
            terms = {}
            for a, vec in enumerate(tensor[r][c]):
                if any(vec):
                    coeff = CyclotomicNumber.from_cyclic(n, vec)
                    if not coeff.is_zero():
                        terms[(a, n - a)] = coeff
            entries.append(BivariatePoly._make(n, terms))
    return Mat2(*entries)


@lru_cache(maxsize=64)
def _product(n: int, method: str) -> Mat2[BivariatePoly]:
    if method == "kernel":
        return _fold_kernel(n)
    if method == "generic":
        return _fold_generic(n)
    raise ValueError(f"unknown method {method!r}; use 'kernel' or 'generic'")


def qsp_product_symbolic(n: int, method: str = "kernel") -> Mat2[BivariatePoly]:
    """Exact product T S(w) T S(w^2) ... T S(w^n), folded left to right.

    ``method="generic"`` multiplies :class:`Mat2` values of polynomials
    directly. ``method="kernel"`` runs the same fold over Z[t]/(t^n - 1)
    in :mod:`monoqsp.kernel` and reduces each coefficient at the end; both
    give identical canonical results.
    """
    _check_order(n)
    return _product(n, method)


def coefficient_of_x(p: BivariatePoly, k: int) -> dict[int, CyclotomicNumber]:
    return p.coefficient_of_x(k)


@dataclass(frozen=True)
class TheoremVerdict:
    degree: int
    holds: bool
    witness: BivariatePoly | None = None

    def witness_text(self) -> str | None:
        return None if self.witness is None else self.witness.to_text()


def verify_theorem(n: int, method: str = "kernel") -> TheoremVerdict:
    """Check that the (1,1) entry of the QSP product is exactly x^n."""
    e11 = qsp_product_symbolic(n, method).e11
    target = BivariatePoly.monomial(n, n, 0)
    if e11 == target:
        return TheoremVerdict(n, True)
    return TheoremVerdict(n, False, e11)
