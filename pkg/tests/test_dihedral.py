from itertools import product
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from monoqsp.cyclotomic import CyclotomicNumber
from monoqsp.dihedral import (
    DihedralElement,
    SignFunction,
    act,
    big_f,
    check_lemma2,
    direct_product,
    enumerate_all,
    enumerate_class,
    enumerate_even,
    gamma,
    normal_form_product,
    orbit,
    orbit_sum,
    orbits,
    rep_phi,
    sign_to_bit,
    star,
)
from monoqsp.errors import OrderMismatchError, PreconditionError, UnsupportedOrderError
from monoqsp.polymat import Mat2, phase_matrix, reflection_matrix

F = SignFunction.parse
E = DihedralElement


def is_zero_matrix(m):
    return all(e.is_zero() for e in m.entries())


def identity_matrix(n):
    return Mat2.identity(CyclotomicNumber.one(n), CyclotomicNumber.zero(n))


# sign functions


def test_sign_to_bit():
    assert sign_to_bit(1) == 0 and sign_to_bit(-1) == 1
    with pytest.raises(ValueError):
        sign_to_bit(0)


def test_periodic_extension():
    f = F("+--")
    assert f(3) == f(0) and f(-1) == f(2) and f(7) == f(1)


def test_string_round_trip():
    assert str(F("+-+-")) == "+-+-"
    assert F("+−") == F("+-")
    with pytest.raises(ValueError):
        F("+x")


def test_a0_membership():
    assert F("+--").is_even() and not F("---").is_even()


# gamma, star, act, big_f


def test_gamma_examples():
    assert gamma(SignFunction.constant(3, 1)) == 0
    assert gamma(F("+--")) == 1
    assert gamma(SignFunction.constant(3, -1)) == 1


def test_star_examples():
    assert star(SignFunction.constant(5, -1)) == SignFunction.constant(5, -1)
    assert star(F("+--")) == F("-+-")


@pytest.mark.parametrize("n", range(1, 9))
def test_star_involution(n):
    for f in enumerate_all(n):
        assert star(star(f)) == f


def test_act_examples():
    f = F("+--")
    assert act(E.identity(3), f) == f
    assert act(E.rotation(3, 1), f) == F("-+-")
    assert act(E.reflection(3), f) == star(f)


def test_act_order_mismatch():
    with pytest.raises(OrderMismatchError):
        act(E.identity(4), F("+--"))


@pytest.mark.parametrize("n", range(3, 9))
def test_act_preserves_class(n):
    for f in enumerate_all(n):
        for g in E.elements(n):
            assert act(g, f).minus_count() == f.minus_count()


def test_big_f_examples():
    assert big_f(SignFunction.constant(3, 1)) == 3
    assert big_f(F("+-+-")) == 0


@pytest.mark.parametrize("n", [3, 5, 7, 9, 11])
def test_big_f_odd_on_a0(n):
    for f in enumerate_even(n):
        assert big_f(f) % 2 == 1


# group elements


def brute_elements(n):
    """Closure of {c, r} under multiplication, as an independent group listing."""
    gens = [E.rotation(n), E.reflection(n)]
    seen = {E.identity(n)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = a * g
                if b not in seen:
                    seen.add(b)
                    nxt.append(b)
        frontier = nxt
    return seen


@pytest.mark.parametrize("n", range(1, 13))
def test_group_axioms(n):
    els = E.elements(n)
    assert set(els) == brute_elements(n) and len(set(els)) == 2 * n
    e = E.identity(n)
    for a in els:
        assert a * e == a == e * a
        assert (a * a.inverse()).is_identity()
    c, r = E.rotation(n), E.reflection(n)
    assert c * r == r * c.inverse()


@pytest.mark.parametrize("n", [3, 4, 6])
def test_group_associative(n):
    els = E.elements(n)
    for a, b, c in product(els, repeat=3):
        assert (a * b) * c == a * (b * c)


def test_element_text():
    g = E(7, 1, 3)
    assert str(g) == "r^1 c^3"
    assert E.parse(7, str(g)) == g


@st.composite
def action_cases(draw):
    n = draw(st.integers(3, 12))
    vals = draw(st.lists(st.sampled_from([1, -1]), min_size=n, max_size=n))
    g = E(n, draw(st.integers(0, 1)), draw(st.integers(0, n - 1)))
    h = E(n, draw(st.integers(0, 1)), draw(st.integers(0, n - 1)))
    return SignFunction(tuple(vals)), g, h


@given(action_cases())
def test_action_laws(case):
    f, g, h = case
    assert act(E.identity(f.order), f) == f
    assert act(g, act(h, f)) == act(g * h, f)


# normal form


def test_normal_form_examples():
    assert normal_form_product(SignFunction.constant(3, 1)) == E(3, 0, 0)
    assert normal_form_product(F("+--")) == E(3, 0, 1)
    # direct product (r c)(r c^2)(r) = r c^2, i.e. c^1 r
    minus = SignFunction.constant(3, -1)
    assert direct_product(minus) == E(3, 1, 2)
    assert normal_form_product(minus) == E(3, 1, 2)
    assert normal_form_product(minus) == E.rotation(3, gamma(minus)) * E.reflection(3)


@pytest.mark.parametrize("n", range(1, 12))
def test_normal_form_oracle(n):
    for f in enumerate_all(n):
        nf = normal_form_product(f)
        assert nf == direct_product(f)
        assert (nf.refl == 0) == f.is_even()
        if f.is_even():
            assert nf.shift == gamma(f)


# enumeration


def test_enumerate_examples():
    assert list(enumerate_class(3, 0)) == [SignFunction.constant(3, 1)]
    assert [str(f) for f in enumerate_class(3, 2)] == ["+--", "-+-", "--+"]
    assert list(enumerate_class(3, 4)) == []


@pytest.mark.parametrize("n", range(1, 10))
def test_enumerate_counts_and_order(n):
    full = list(enumerate_all(n))
    assert len(set(full)) == 2**n
    for k in range(n + 1):
        cls = list(enumerate_class(n, k))
        assert len(cls) == len(set(cls)) == comb(n, k)
        assert cls == [f for f in full if f.minus_count() == k]
    assert sum(1 for _ in enumerate_even(n)) == 2 ** (n - 1)


# orbits


def test_orbit_examples():
    assert orbit(SignFunction.constant(5, -1)) == (SignFunction.constant(5, -1),)
    assert len(orbit(F("+--"))) == 3


@pytest.mark.parametrize("n", range(3, 10))
def test_orbits_partition(n):
    for k in range(n + 1):
        parts = orbits(n, k)
        assert sum(len(o) for o in parts) == comb(n, k)
        for o in parts:
            assert (2 * n) % len(o) == 0
        members = [f for o in parts for f in o]
        assert len(members) == len(set(members))


# representation


def test_rep_phi_examples():
    n = 5
    assert rep_phi(E.identity(n)) == identity_matrix(n)
    assert rep_phi(E.rotation(n, 1)) == phase_matrix(n, 1)
    assert rep_phi(E.reflection(n)) == reflection_matrix(n)


@pytest.mark.parametrize("n", [1, 2])
def test_rep_phi_rejects_small_orders(n):
    with pytest.raises(UnsupportedOrderError):
        rep_phi(E.identity(n))


@pytest.mark.parametrize("n", range(3, 13))
def test_rep_phi_faithful_homomorphism(n):
    els = E.elements(n)
    images = {g: rep_phi(g) for g in els}
    assert len(set(images.values())) == 2 * n
    for g, h in product(els, repeat=2):
        assert images[g * h] == images[g] @ images[h]


@pytest.mark.parametrize("n", [3, 5, 7, 9])
def test_conjugation_bridge(n):
    for f in enumerate_even(n):
        assert phase_matrix(n, gamma(star(f))) == phase_matrix(n, gamma(f)).conjugate_transpose()


# orbit sums


def test_orbit_sum_examples():
    assert is_zero_matrix(orbit_sum(F("+--")))
    assert orbit_sum(SignFunction.constant(3, 1)) == identity_matrix(3)


@pytest.mark.parametrize("n", [3, 5, 7, 9])
def test_orbit_sums_vanish(n):
    for f in enumerate_even(n):
        s = orbit_sum(f)
        if f.is_constant():
            assert s == identity_matrix(n)
        else:
            assert is_zero_matrix(s), str(f)


@pytest.mark.parametrize("n", [2, 4])
def test_orbit_sum_rejects_even(n):
    with pytest.raises(UnsupportedOrderError):
        orbit_sum(SignFunction.constant(n, 1))


def test_even_n_constant_minus_one_survives():
    # for even n the constant -1 lies in A_0 and its one-point orbit sum is nonzero
    n = 4
    minus = SignFunction.constant(n, -1)
    assert minus.is_even()
    assert len(orbit(minus)) == 1
    assert not is_zero_matrix(rep_phi(normal_form_product(minus)))


# Lemma 2 checker


def test_check_lemma2_examples():
    f = F("+--")
    for k in range(3):
        v = check_lemma2(f, k)
        assert v.star_negates and v.shift_identity and v.reflected_shift and v.passed
    v = check_lemma2(SignFunction.constant(3, 1), 1)
    assert v.shift_identity


def test_check_lemma2_precondition():
    with pytest.raises(PreconditionError):
        check_lemma2(F("---"), 0)


def test_check_lemma2_even_n_skips_shift_identity():
    v = check_lemma2(F("+-+-"), 1)
    assert v.shift_identity is None and v.passed


@pytest.mark.parametrize("n", [3, 5, 7])
def test_check_lemma2_exhaustive(n):
    for f in enumerate_even(n):
        for k in range(n):
            assert check_lemma2(f, k).passed
