"""Exact arithmetic in Z[w], w = exp(2*pi*i/n).

Elements are stored in the power basis 1, w, ..., w^(phi(n)-1), i.e. reduced
modulo the n-th cyclotomic polynomial, so ring equality is tuple equality.
"""

from __future__ import annotations

import cmath
import math
import sys
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import InvalidOrderError, OrderMismatchError

__all__ = [
    "IntPoly",
    "CyclotomicNumber",
    "cyclotomic_polynomial",
    "totient",
    "cyc_from_power",
    "cyc_add",
    "cyc_mul",
    "cyc_conj",
    "cyc_to_complex",
]


def _check_order(n: int) -> None:
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise InvalidOrderError(f"order must be a positive integer, got {n!r}")


def _strip(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class IntPoly:
    """Dense univariate polynomial over Z; ``coeffs[i]`` multiplies ``t**i``."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", _strip(int(c) for c in self.coeffs))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> IntPoly:
        return cls((0,) * degree + (coeff,))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: IntPoly) -> IntPoly:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPoly(tuple(x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)))

    def __neg__(self) -> IntPoly:
        return IntPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: IntPoly) -> IntPoly:
        return self + (-other)

    def __mul__(self, other: IntPoly) -> IntPoly:
        if self.is_zero() or other.is_zero():
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(tuple(out))

    def __divmod__(self, divisor: IntPoly) -> tuple[IntPoly, IntPoly]:
        """Long division; the divisor must have leading coefficient +1 or -1."""
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        lead = divisor.coeffs[-1]
        if lead not in (1, -1):
            raise ValueError("divisor must be monic up to sign")
        rem = list(self.coeffs)
        dd = divisor.degree
        if len(rem) - 1 < dd:
            return IntPoly(), IntPoly(tuple(rem))
        quot = [0] * (len(rem) - dd)
        for shift in range(len(rem) - 1 - dd, -1, -1):
            q = rem[shift + dd] * lead
            if q:
                quot[shift] = q
                for i, d in enumerate(divisor.coeffs):
                    rem[shift + i] -= q * d
        return IntPoly(tuple(quot)), IntPoly(tuple(rem))

    def __floordiv__(self, divisor: IntPoly) -> IntPoly:
        return divmod(self, divisor)[0]

    def __mod__(self, divisor: IntPoly) -> IntPoly:
        return divmod(self, divisor)[1]

    def __call__(self, t):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            mag = abs(c)
            body = str(mag) if (mag != 1 or i == 0) else ""
            if body and mono:
                body += "*"
            sign = "-" if c < 0 else "+"
            parts.append(f"{sign} {body}{mono}")
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> IntPoly:
    """Return the n-th cyclotomic polynomial.

    Computed by dividing ``t**n - 1`` by the product of the cyclotomic
    polynomials of the proper divisors of n. The division is exact.
    """
    _check_order(n)
    num = IntPoly((-1,) + (0,) * (n - 1) + (1,))
    den = IntPoly((1,))
    for d in range(1, n):
        if n % d == 0:
            den = den * cyclotomic_polynomial(d)
    quot, rem = divmod(num, den)
    assert rem.is_zero(), f"inexact division computing Phi_{n}"
    return quot


def totient(n: int) -> int:
    """Euler's phi, read off as the degree of the n-th cyclotomic polynomial."""
    return cyclotomic_polynomial(n).degree


class _Ring:
    """Per-order reduction data for Z[w]."""

    __slots__ = ("n", "phi", "rows", "roots")

    def __init__(self, n: int) -> None:
        modulus = cyclotomic_polynomial(n).coeffs
        phi = len(modulus) - 1
        # rows[j] is w^j in the power basis, stored sparsely as (index, coeff).
        rows: list[tuple[tuple[int, int], ...]] = []
        vec = [1] + [0] * (phi - 1)
        for _ in range(n):
            rows.append(tuple((i, c) for i, c in enumerate(vec) if c))
            top = vec[-1]
            vec = [0] + vec[:-1]
            if top:
                for i in range(phi):
                    vec[i] -= top * modulus[i]
        self.n = n
        self.phi = phi
        self.rows = tuple(rows)
        self.roots = tuple(cmath.exp(2j * math.pi * j / n) for j in range(phi))

    def reduce(self, cyclic: Sequence[int]) -> tuple[int, ...]:
        """Map a length-n vector over 1, w, ..., w^(n-1) to canonical form."""
        phi = self.phi
        out = list(cyclic[:phi])
        rows = self.rows
        for j in range(phi, self.n):
            c = cyclic[j]
            if c:
                for i, r in rows[j]:
                    out[i] += c * r
        return tuple(out)


@lru_cache(maxsize=None)
def _ring(n: int) -> _Ring:
    _check_order(n)
    return _Ring(n)


class CyclotomicNumber:
    """Immutable element of Z[w] for a fixed order n.

    ``coeffs`` has length phi(n) and holds the integer coordinates over
    1, w, ..., w^(phi(n)-1). Arithmetic between different orders raises
    :class:`OrderMismatchError`; there is no implicit embedding.
    """

    __slots__ = ("order", "coeffs", "_hash")

    def __init__(self, order: int, coeffs: Sequence[int]) -> None:
        ring = _ring(order)
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != ring.phi:
            raise ValueError(
                f"order {order} needs {ring.phi} coefficients, got {len(coeffs)}"
            )
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _make(cls, order: int, coeffs: tuple[int, ...]) -> CyclotomicNumber:
        obj = object.__new__(cls)
        object.__setattr__(obj, "order", order)
        object.__setattr__(obj, "coeffs", coeffs)
        object.__setattr__(obj, "_hash", None)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("CyclotomicNumber is immutable")

    # construction

    @classmethod
    def from_cyclic(cls, order: int, coeffs: Iterable[int]) -> CyclotomicNumber:
        """Element sum(c_j * w^j) for arbitrary integer exponents j >= 0."""
        ring = _ring(order)
        acc = [0] * order
        for j, c in enumerate(coeffs):
            acc[j % order] += c
        return cls._make(order, ring.reduce(acc))

    @classmethod
    def from_int(cls, order: int, value: int) -> CyclotomicNumber:
        ring = _ring(order)
        return cls._make(order, (int(value),) + (0,) * (ring.phi - 1))

    @classmethod
    def zero(cls, order: int) -> CyclotomicNumber:
        return cls.from_int(order, 0)

    @classmethod
    def one(cls, order: int) -> CyclotomicNumber:
        return cls.from_int(order, 1)

    @classmethod
    def root_power(cls, order: int, k: int) -> CyclotomicNumber:
        ring = _ring(order)
        out = [0] * ring.phi
        for i, c in ring.rows[k % order]:
            out[i] = c
        return cls._make(order, tuple(out))

    # predicates

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_one(self) -> bool:
        c = self.coeffs
        return c[0] == 1 and not any(c[1:])

    def _coerce(self, other) -> CyclotomicNumber | None:
        if isinstance(other, CyclotomicNumber):
            if other.order != self.order:
                raise OrderMismatchError(
                    f"orders differ: {self.order} vs {other.order}"
                )
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return CyclotomicNumber.from_int(self.order, other)
        return None

    # ring operations

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CyclotomicNumber._make(
            self.order, tuple(a + b for a, b in zip(self.coeffs, o.coeffs))
        )

    __radd__ = __add__

    def __neg__(self) -> CyclotomicNumber:
        return CyclotomicNumber._make(self.order, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CyclotomicNumber._make(
            self.order, tuple(a - b for a, b in zip(self.coeffs, o.coeffs))
        )

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_one():
            return o
        if o.is_one():
            return self
        n = self.order
        acc = [0] * n
        right = [(j, b) for j, b in enumerate(o.coeffs) if b]
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in right:
                    k = i + j
                    if k >= n:
                        k -= n
                    acc[k] += a * b
        return CyclotomicNumber._make(n, _ring(n).reduce(acc))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> CyclotomicNumber:
        if e < 0:
            raise ValueError("negative powers are only defined for units; use conj")
        result = CyclotomicNumber.one(self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conj(self) -> CyclotomicNumber:
        """Complex conjugate, the ring automorphism w -> w^(n-1)."""
        n = self.order
        acc = [0] * n
        for j, c in enumerate(self.coeffs):
            acc[-j % n] += c
        return CyclotomicNumber._make(n, _ring(n).reduce(acc))

    def __eq__(self, other) -> bool:
        if isinstance(other, CyclotomicNumber):
            return self.order == other.order and self.coeffs == other.coeffs
        if isinstance(other, int) and not isinstance(other, bool):
            return self.coeffs == CyclotomicNumber.from_int(self.order, other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((self.order, self.coeffs))
            object.__setattr__(self, "_hash", h)
        return h

    # numerics

    def to_complex(self) -> complex:
        """Floating-point value; see :meth:`error_bound` for the accuracy."""
        roots = _ring(self.order).roots
        re = math.fsum(c * w.real for c, w in zip(self.coeffs, roots) if c)
        im = math.fsum(c * w.imag for c, w in zip(self.coeffs, roots) if c)
        return complex(re, im)

    def error_bound(self) -> float:
        """Bound on ``abs(self.to_complex() - exact)``.

        Each root of unity is correctly rounded to within a few ulp and the
        sum is accumulated exactly by fsum, so the error is at most
        ``4 * eps * sum(|c_i|)`` plus one final rounding.
        """
        total = sum(abs(c) for c in self.coeffs)
        return 4.0 * sys.float_info.epsilon * (total + 1)

    # text

    def to_text(self) -> str:
        return "[" + ",".join(str(c) for c in self.coeffs) + "]"

    @classmethod
    def from_text(cls, order: int, text: str) -> CyclotomicNumber:
        body = text.strip()
        if not (body.startswith("[") and body.endswith("]")):
            raise ValueError(f"malformed coefficient vector {text!r}")
        inner = body[1:-1].strip()
        coeffs = [int(tok) for tok in inner.split(",")] if inner else []
        return cls(order, coeffs)

    def __repr__(self) -> str:
        return f"CyclotomicNumber({self.order}, {list(self.coeffs)})"

    def __str__(self) -> str:
        terms = []
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if j == 0 else ("w" if j == 1 else f"w^{j}")
            mag = abs(c)
            body = str(mag) if (mag != 1 or j == 0) else ""
            if body and mono:
                body += "*"
            terms.append(("-" if c < 0 else "+", body + mono))
        if not terms:
            return "0"
        s = " ".join(f"{sign} {t}" for sign, t in terms)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


# functional aliases


def cyc_from_power(n: int, k: int) -> CyclotomicNumber:
    """w^(k mod n) in canonical form."""
    return CyclotomicNumber.root_power(n, k)


def cyc_add(a: CyclotomicNumber, b: CyclotomicNumber) -> CyclotomicNumber:
    return a + b


def cyc_mul(a: CyclotomicNumber, b: CyclotomicNumber) -> CyclotomicNumber:
    return a * b


def cyc_conj(a: CyclotomicNumber) -> CyclotomicNumber:
    return a.conj()


def cyc_to_complex(a: CyclotomicNumber) -> complex:
    return a.to_complex()
