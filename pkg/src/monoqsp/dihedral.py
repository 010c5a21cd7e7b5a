"""Sign functions Z_n -> {-1, +1}, the dihedral action on them, and orbit sums.

Group elements are stored in the normal form r^refl c^shift with the
relation c r = r c^-1. The action on sign functions is
``(c^k . f)(i) = f(i - k)`` and ``(r . f)(i) = f(1 - i)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from itertools import product
from typing import Iterator

from .cyclotomic import CyclotomicNumber, _check_order
from .errors import OrderMismatchError, PreconditionError, UnsupportedOrderError
from .polymat import Mat2, phase_matrix, reflection_matrix

__all__ = [
    "DihedralElement",
    "SignFunction",
    "sign_to_bit",
    "gamma",
    "star",
    "act",
    "big_f",
    "normal_form_product",
    "direct_product",
    "enumerate_class",
    "enumerate_all",
    "enumerate_even",
    "orbit",
    "orbits",
    "rep_phi",
    "orbit_sum",
    "Lemma2Verdict",
    "check_lemma2",
]


def sign_to_bit(s: int) -> int:
    """Group isomorphism {+1, -1} -> Z_2: +1 -> 0, -1 -> 1."""
    if s == 1:
        return 0
    if s == -1:
        return 1
    raise ValueError(f"not a sign: {s!r}")


@dataclass(frozen=True)
class DihedralElement:
    order: int
    refl: int
    shift: int

    def __post_init__(self) -> None:
        _check_order(self.order)
        object.__setattr__(self, "refl", self.refl % 2)
        object.__setattr__(self, "shift", self.shift % self.order)

    @classmethod
    def identity(cls, n: int) -> DihedralElement:
        return cls(n, 0, 0)

    @classmethod
    def rotation(cls, n: int, k: int = 1) -> DihedralElement:
        return cls(n, 0, k)

    @classmethod
    def reflection(cls, n: int) -> DihedralElement:
        return cls(n, 1, 0)

    @classmethod
    def elements(cls, n: int) -> list[DihedralElement]:
        """All 2n elements, rotations first."""
        return [cls(n, b, a) for b in (0, 1) for a in range(n)]

    def __mul__(self, other: DihedralElement) -> DihedralElement:
        if not isinstance(other, DihedralElement):
            return NotImplemented
        if other.order != self.order:
            raise OrderMismatchError(f"orders differ: {self.order} vs {other.order}")
        a1 = -self.shift if other.refl else self.shift
        return DihedralElement(self.order, self.refl + other.refl, a1 + other.shift)

    def inverse(self) -> DihedralElement:
        if self.refl:
            return self
        return DihedralElement(self.order, 0, -self.shift)

    def is_identity(self) -> bool:
        return self.refl == 0 and self.shift == 0

    def __str__(self) -> str:
        return f"r^{self.refl} c^{self.shift}"

    @classmethod
    def parse(cls, n: int, text: str) -> DihedralElement:
        r_part, c_part = text.split()
        if not (r_part.startswith("r^") and c_part.startswith("c^")):
            raise ValueError(f"expected 'r^b c^a', got {text!r}")
        return cls(n, int(r_part[2:]), int(c_part[2:]))


@dataclass(frozen=True)
class SignFunction:
    """A map Z_n -> {-1, +1}; ``values[i]`` is f(i).

    Calling ``f(i)`` accepts any integer and uses the periodic extension.
    """

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        vals = tuple(int(v) for v in self.values)
        if not vals:
            raise ValueError("sign function needs at least one value")
        for v in vals:
            if v not in (1, -1):
                raise ValueError(f"values must be +1 or -1, got {v!r}")
        object.__setattr__(self, "values", vals)

    @property
    def order(self) -> int:
        return len(self.values)

    def __call__(self, i: int) -> int:
        return self.values[i % len(self.values)]

    @classmethod
    def constant(cls, n: int, sign: int = 1) -> SignFunction:
        return cls((sign,) * n)

    def minus_count(self) -> int:
        """|f^-1(-1)|, i.e. the k with f in A(k)."""
        return sum(1 for v in self.values if v == -1)

    def sign_product(self) -> int:
        return -1 if self.minus_count() % 2 else 1

    def is_even(self) -> bool:
        """Membership in A_0, the functions whose values multiply to 1."""
        return self.sign_product() == 1

    def is_constant(self) -> bool:
        return len(set(self.values)) == 1

    def partial_product(self, upto: int) -> int:
        """f(1) f(2) ... f(upto); the empty product (upto <= 0) is 1."""
        p = 1
        for j in range(1, upto + 1):
            p *= self(j)
        return p

    def __str__(self) -> str:
        return "".join("+" if v == 1 else "-" for v in self.values)

    @classmethod
    def parse(cls, text: str) -> SignFunction:
        table = {"+": 1, "-": -1, "−": -1}
        try:
            return cls(tuple(table[ch] for ch in text.strip()))
        except KeyError as exc:
            raise ValueError(f"sign string may only contain '+' and '-': {text!r}") from exc


def gamma(f: SignFunction) -> int:
    """Evaluation function: sum_i i * f(1) ... f(i) mod n."""
    n = f.order
    total, running = 0, 1
    for i in range(1, n):
        running *= f(i)
        total += i * running
    return total % n


def star(f: SignFunction) -> SignFunction:
    """The reflected function i -> f(1 - i)."""
    n = f.order
    return SignFunction(tuple(f(1 - i) for i in range(n)))


def _rotate(f: SignFunction, k: int) -> SignFunction:
    n = f.order
    return SignFunction(tuple(f(i - k) for i in range(n)))


def act(g: DihedralElement, f: SignFunction) -> SignFunction:
    """Action of r^b c^a on f: rotate by a, then reflect if b = 1."""
    if g.order != f.order:
        raise OrderMismatchError(f"group order {g.order} vs function order {f.order}")
    h = _rotate(f, g.shift) if g.shift else f
    return star(h) if g.refl else h


def big_f(f: SignFunction) -> int:
    """sum over i in Z_n of f(1) ... f(i).

    The i = 0 summand is the full product f(1) ... f(n), not 1.
    """
    n = f.order
    total = f.partial_product(n)
    running = 1
    for i in range(1, n):
        running *= f(i)
        total += running
    return total


def direct_product(f: SignFunction) -> DihedralElement:
    """Left-to-right group product of r^[f(i)] c^i for i = 1..n."""
    n = f.order
    factors = (DihedralElement(n, sign_to_bit(f(i)), i) for i in range(1, n + 1))
    return reduce(lambda a, b: a * b, factors, DihedralElement.identity(n))


def normal_form_product(f: SignFunction) -> DihedralElement:
    """Closed form of ``direct_product(f)`` from the evaluation function.

    The product of r^[f(i)] c^i over i = 1..n equals c^gamma(f) r^a, with a
    the parity of |f^-1(-1)|. In the stored r^b c^s form this is
    r^0 c^gamma(f) on A_0 and r^1 c^-gamma(f) off it.
    """
    a = f.minus_count() % 2
    g = gamma(f)
    return DihedralElement(f.order, a, -g if a else g)


def _class_values(n: int, k: int, prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    slots = n - len(prefix)
    if slots == 0:
        yield prefix
        return
    if k < slots:
        yield from _class_values(n, k, prefix + (1,))
    if k > 0:
        yield from _class_values(n, k - 1, prefix + (-1,))


def enumerate_class(n: int, k: int) -> Iterator[SignFunction]:
    """Functions with exactly k values equal to -1.

    Lexicographic in the value vector with +1 before -1. Empty for k > n.
    """
    _check_order(n)
    if k < 0 or k > n:
        return
    for vals in _class_values(n, k, ()):
        yield SignFunction(vals)


def enumerate_all(n: int) -> Iterator[SignFunction]:
    """All 2^n sign functions, same ordering as :func:`enumerate_class`."""
    _check_order(n)
    for vals in product((1, -1), repeat=n):
        yield SignFunction(vals)


def enumerate_even(n: int) -> Iterator[SignFunction]:
    """A_0, in the global lexicographic order."""
    return (f for f in enumerate_all(n) if f.is_even())


def orbit(f: SignFunction) -> tuple[SignFunction, ...]:
    """Distinct images of f under all 2n group elements, sorted."""
    seen = {act(g, f) for g in DihedralElement.elements(f.order)}
    return tuple(sorted(seen, key=_order_key))


def _order_key(f: SignFunction) -> tuple[int, ...]:
    return tuple(sign_to_bit(v) for v in f.values)


def orbits(n: int, k: int) -> list[tuple[SignFunction, ...]]:
    """Partition of A(k) into orbits, ordered by their smallest member."""
    out, covered = [], set()
    for f in enumerate_class(n, k):
        if f not in covered:
            o = orbit(f)
            covered.update(o)
            out.append(o)
    return out


def rep_phi(g: DihedralElement) -> Mat2[CyclotomicNumber]:
    """Faithful 2-dimensional representation: c -> S(w), r -> X."""
    n = g.order
    if n < 3:
        raise UnsupportedOrderError(
            f"the 2-dimensional representation is reducible for n = {n}; need n >= 3"
        )
    s = phase_matrix(n, g.shift)
    return reflection_matrix(n) @ s if g.refl else s


def orbit_sum(f: SignFunction) -> Mat2[CyclotomicNumber]:
    """Sum over the orbit of f of rep_phi(normal_form_product(g))."""
    n = f.order
    if n % 2 == 0 or n < 3:
        raise UnsupportedOrderError(f"orbit sums are defined here for odd n >= 3, got {n}")
    zero = CyclotomicNumber.zero(n)
    total = Mat2(zero, zero, zero, zero)
    for g in orbit(f):
        total = total + rep_phi(normal_form_product(g))
    return total


@dataclass(frozen=True)
class Lemma2Verdict:
    """Per-identity results; ``shift_identity`` is None when n is even."""

    star_negates: bool
    shift_identity: bool | None
    reflected_shift: bool

    @property
    def passed(self) -> bool:
        return self.star_negates and self.reflected_shift and self.shift_identity is not False


def check_lemma2(f: SignFunction, k: int) -> Lemma2Verdict:
    if not f.is_even():
        raise PreconditionError(f"{f} is not in A_0")
    n = f.order
    k %= n
    g = gamma(f)
    star_negates = (gamma(star(f)) + g) % n == 0
    shift_identity = None
    if n % 2:
        # empty-product convention: f(1)...f(0) means f(1)...f(n)
        tail = f.partial_product(n - k if k else n)
        lhs = gamma(_rotate(f, k))
        shift_identity = (lhs - (g + big_f(f) * k) * tail) % n == 0
    reflected = (gamma(_rotate(star(f), k)) + gamma(_rotate(f, -k))) % n == 0
    return Lemma2Verdict(star_negates, shift_identity, reflected)
