"""Verdicts must not depend on the modulus chosen for F_{q^2}."""

import itertools

import pytest

from permlab.gf import build_quad_ext, field_isomorphisms, is_irreducible, quad_ext_for
from permlab.theorems import (
    QuarticCoeffs,
    Thm13Coeffs,
    thm11_predicate,
    thm12_predicate,
    thm13_predicate,
    thm17_classify,
)


def other_quad(q):
    """Same q, largest monic irreducible quadratic modulus for F_{q^2} (q prime here)."""
    p = q
    mods = [list(m) + [1] for m in itertools.product(range(p), repeat=2) if is_irreducible(list(m) + [1], p)]
    quad = build_quad_ext(p, 1, None, mods[-1])
    assert tuple(quad.ext.modulus) != tuple(quad_ext_for(q).ext.modulus)
    return quad


@pytest.mark.parametrize("q", [3, 5])
def test_thm13_representation_independent(q):
    A, B = quad_ext_for(q), other_quad(q)
    for phi in field_isomorphisms(A.ext, B.ext):
        for b, c in itertools.product(A.ext.elements(), repeat=2):
            assert thm13_predicate(Thm13Coeffs(A, b, c)) == thm13_predicate(Thm13Coeffs(B, phi[b], phi[c]))


def test_quartic_predicates_representation_independent_q3():
    A, B = quad_ext_for(3), other_quad(3)
    isos = field_isomorphisms(A.ext, B.ext)
    assert len(isos) == 2
    for phi in isos:
        for t in itertools.product(A.ext.elements(), repeat=4):
            u = tuple(phi[x] for x in t)
            ca, cb = QuarticCoeffs(A, *t), QuarticCoeffs(B, *u)
            assert thm11_predicate(ca).holds == thm11_predicate(cb).holds
            assert thm12_predicate(ca) == thm12_predicate(cb)


def test_quartic_predicates_representation_independent_q5():
    A, B = quad_ext_for(5), other_quad(5)
    n = A.ext.order
    for phi in field_isomorphisms(A.ext, B.ext):
        # b = 0 slice plus a stride through the rest keeps this quick
        for idx in range(0, n**4, 37):
            t = (idx // n**3, (idx // n**2) % n, (idx // n) % n, idx % n)
            u = tuple(phi[x] for x in t)
            ca, cb = QuarticCoeffs(A, *t), QuarticCoeffs(B, *u)
            assert thm11_predicate(ca).holds == thm11_predicate(cb).holds
            assert thm12_predicate(ca) == thm12_predicate(cb)


def test_thm17_tags_representation_independent_q3():
    A, B = quad_ext_for(3), other_quad(3)
    phi = field_isomorphisms(A.ext, B.ext)[1]
    for t in itertools.product(A.ext.elements(), repeat=4):
        u = tuple(phi[x] for x in t)
        assert thm17_classify(QuarticCoeffs(A, *t)).tag == thm17_classify(QuarticCoeffs(B, *u)).tag
