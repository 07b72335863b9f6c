import random

import pytest
from hypothesis import given, strategies as st

from permlab.gf import field_for, quad_ext_for
from permlab.poly import (
    Poly,
    coeff,
    compose,
    derivative,
    eval_poly,
    fold_exponent,
    poly_divmod,
    poly_from_ints,
    poly_gcd,
    pow_reduce,
    reduce_mod_xq_minus_x,
)


def naive_power(f: Poly, m: int) -> Poly:
    out = Poly.const(f.ctx, 1)
    for _ in range(m):
        out = out * f
    return out


def rand_poly(F, deg, rng):
    return Poly(F, [rng.randrange(F.order) for _ in range(deg + 1)])


def test_eval_examples():
    F4 = field_for(4)
    w = F4.gen
    assert eval_poly(Poly.x(F4), w) == w
    assert eval_poly(Poly.monomial(F4, 4), w) == w
    assert eval_poly(Poly(F4, [1, 1, 1]), w) == 0


def test_reduce_examples():
    F4 = field_for(4)
    assert reduce_mod_xq_minus_x(Poly.monomial(F4, 4), 4) == Poly.x(F4)
    assert reduce_mod_xq_minus_x(Poly.monomial(F4, 6), 4) == Poly.monomial(F4, 3)
    f = Poly(F4, [1, 2, 3, 1])
    assert reduce_mod_xq_minus_x(f, 4) == f


def test_fold_exponent():
    assert fold_exponent(0, 4) == 0
    assert fold_exponent(6, 4) == 3
    assert fold_exponent(3, 4) == 3
    assert fold_exponent(4, 4) == 1


def test_pow_reduce_examples():
    F4 = field_for(4)
    X = Poly.x(F4)
    for m in range(1, 10):
        assert pow_reduce(X, m, 4) == Poly.monomial(F4, (m - 1) % 3 + 1)
    F3 = field_for(3)
    f = Poly(F3, [0, 1, 1])
    assert pow_reduce(f, 1, 3).degree == 2
    w = F4.gen
    g = Poly.from_terms(F4, {6: 1, 4: w, 3: 1})
    assert pow_reduce(g, 1, 4) == Poly.monomial(F4, 1, w)


def test_compose_examples():
    F = field_for(7)
    f = Poly(F, [3, 1, 4])
    X = Poly.x(F)
    assert compose(f, X) == f
    assert compose(Poly.monomial(F, 2), Poly(F, [1, 1])) == Poly(F, [1, 2, 1])
    assert compose(Poly.monomial(F, 3), Poly.monomial(F, 3)) == Poly.monomial(F, 9)


def test_coeff_examples():
    F4 = field_for(4)
    w = F4.gen
    assert coeff(Poly(F4, [0, w, 1]), 1) == w
    assert coeff(Poly.zero(F4), 5) == 0


def test_coeff_of_reduced_power_matches_naive_sum():
    quad = quad_ext_for(3)
    ext = quad.ext
    q, n = 3, 9
    rng = random.Random(5)
    for _ in range(20):
        b, c = rng.randrange(9), rng.randrange(9)
        f = Poly.from_terms(ext, {5: 1, 3: b, 1: c})
        full = naive_power(f, q - 1)
        expect = 0
        for e, v in full.terms().items():
            if e and e % (n - 1) == 0:
                expect = ext.add(expect, v)
        assert coeff(pow_reduce(f, q - 1, n), n - 1) == expect


@pytest.mark.parametrize("q", [4, 5, 7, 8, 9, 16, 25, 27, 81])
def test_reduce_preserves_function(q):
    F = field_for(q)
    rng = random.Random(q)
    for _ in range(5):
        f = rand_poly(F, rng.randrange(3 * q), rng)
        g = reduce_mod_xq_minus_x(f, q)
        assert g.degree < q
        assert all(eval_poly(f, x) == eval_poly(g, x) for x in F.elements())


@pytest.mark.parametrize("q", [3, 4, 5, 8, 9, 16, 27])
def test_pow_reduce_matches_naive(q):
    F = field_for(q)
    rng = random.Random(100 + q)
    for _ in range(6):
        f = rand_poly(F, rng.randrange(1, 6), rng)
        m = rng.randrange(1, 21)
        assert pow_reduce(f, m, q) == reduce_mod_xq_minus_x(naive_power(f, m), q)


@given(st.lists(st.integers(0, 8), min_size=1, max_size=5), st.lists(st.integers(0, 8), min_size=1, max_size=5),
       st.lists(st.integers(0, 8), min_size=1, max_size=5))
def test_compose_associative(a, b, c):
    F = field_for(9)
    f, g, h = Poly(F, a), Poly(F, b), Poly(F, c)
    assert compose(compose(f, g), h) == compose(f, compose(g, h))


@given(st.lists(st.integers(0, 8), min_size=1, max_size=7), st.lists(st.integers(0, 8), min_size=1, max_size=4))
def test_divmod_identity(a, b):
    F = field_for(9)
    f, g = Poly(F, a), Poly(F, b)
    if g.is_zero():
        with pytest.raises(ZeroDivisionError):
            poly_divmod(f, g)
        return
    quo, rem = poly_divmod(f, g)
    assert quo * g + rem == f
    assert rem.is_zero() or rem.degree < g.degree


def test_gcd_is_monic_common_divisor():
    F = field_for(7)
    a = Poly(F, [1, 1]) * Poly(F, [2, 0, 1])
    b = Poly(F, [1, 1]) * Poly(F, [3, 1])
    g = poly_gcd(a, b)
    assert g == Poly(F, [1, 1])
    assert poly_gcd(Poly.zero(F), Poly(F, [2, 4])) == Poly(F, [4, 1])


def test_derivative_and_from_ints():
    F = field_for(5)
    f = poly_from_ints(F, [1, 2, 3, -1])  # 1 + 2X + 3X^2 - X^3
    assert f == Poly(F, [1, 2, 3, 4])
    assert derivative(f) == Poly(F, [2, 1, 2])  # 2 + 6X + 12X^2
    assert derivative(Poly.monomial(F, 5)).is_zero()


def test_poly_arith_and_repr():
    F = field_for(4)
    f = Poly(F, [1, 2, 0, 0])
    assert f.degree == 1
    assert Poly.zero(F).degree == -1
    assert (f - f).is_zero()
    assert (f**3) == f * f * f
    assert f.monic().lead == 1
    with pytest.raises(Exception):
        f + Poly(field_for(5), [1])
