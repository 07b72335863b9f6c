import collections
import itertools
import random

import pytest

from permlab.gf import field_for, quad_ext_for
from permlab.permcheck import RationalFn, eval_rational, is_permutation_poly, maps_onto, p1_points
from permlab.poly import Poly
from permlab.theorems import (
    CUBE,
    CUBE_MINUS,
    NU_CUBE,
    ClassTag,
    QuarticCoeffs,
    SearchCapExceeded,
    candidate_classes,
    canonical_forms,
    lemma55_normalize,
    mobius_through,
    nu_cube,
    pgl2,
    predicted_class_for_cubic,
    thm17_classify,
    verify_class_witness,
)
from permlab.theorems.projective import mat_to_rational

# permutation members of the quartic family per first-matching class, by exhaustive search
THM17_COUNTS = {
    2: {ClassTag.MONOMIAL_Q2: 24},
    3: {ClassTag.MONOMIAL_Q2: 144, ClassTag.CUBE_PAIR: 48, ClassTag.TWISTED_CUBE_PAIR: 192},
}


def test_thm17_examples():
    q2 = quad_ext_for(2)
    assert thm17_classify(QuarticCoeffs(q2, 0, 0, 1, 0)).tag is ClassTag.MONOMIAL_Q2
    q3 = quad_ext_for(3)
    g = q3.ext.gen
    res = thm17_classify(QuarticCoeffs(q3, 0, 0, 0, g))
    assert res.tag is ClassTag.CUBE_PAIR
    assert verify_class_witness(QuarticCoeffs(q3, 0, 0, 0, g), res)
    q4 = quad_ext_for(4)
    rng = random.Random(4)
    for _ in range(20):
        co = QuarticCoeffs(q4, *(rng.randrange(16) for _ in range(4)))
        if not is_permutation_poly(co.poly()):
            assert thm17_classify(co).tag is ClassTag.NOT_PERMUTATION


@pytest.mark.parametrize("q", [2, 3])
def test_thm17_exhaustive(q):
    quad = quad_ext_for(q)
    counts = collections.Counter()
    for t in itertools.product(quad.ext.elements(), repeat=4):
        co = QuarticCoeffs(quad, *t)
        res = thm17_classify(co)
        assert (res.tag is not ClassTag.NOT_PERMUTATION) == is_permutation_poly(co.poly())
        assert verify_class_witness(co, res)
        if res.tag is not ClassTag.NOT_PERMUTATION:
            counts[res.tag] += 1
    assert dict(counts) == THM17_COUNTS[q]


def test_thm17_q2_classes_overlap():
    quad = quad_ext_for(2)
    co = QuarticCoeffs(quad, 0, 0, 1, 0)
    res = thm17_classify(co, all_classes=True)
    assert res.tag is ClassTag.MONOMIAL_Q2
    assert [r.tag for r in res.others] == [ClassTag.CUBE_PAIR]
    assert all(verify_class_witness(co, r) for r in res.others)


def test_candidate_classes():
    assert candidate_classes(quad_ext_for(4)) == []
    tags = [t for t, _ in candidate_classes(quad_ext_for(3))]
    assert tags == [ClassTag.MONOMIAL_Q2, ClassTag.CUBE_PAIR, ClassTag.TWISTED_CUBE_PAIR]


def test_thm17_cap():
    with pytest.raises(SearchCapExceeded):
        thm17_classify(QuarticCoeffs(quad_ext_for(11), 0, 0, 1, 0))


def cubic(F, c3, c2, c1, c0):
    return RationalFn(Poly(F, [c0, c1, c2, c3]), Poly.const(F, 1))


def test_lemma55_examples():
    F5 = field_for(5)
    assert lemma55_normalize(cubic(F5, 1, 0, 0, 0)).cls == CUBE
    F3 = field_for(3)
    res = lemma55_normalize(cubic(F3, 1, 0, F3.neg(2), 0))
    assert res.cls == CUBE_MINUS and res.alpha == 2


def test_lemma55_recovers_dressed_cube():
    F = field_for(5)
    rng = random.Random(7)
    mats = list(pgl2(F))
    X3 = cubic(F, 1, 0, 0, 0)
    for _ in range(10):
        r = mat_to_rational(F, rng.choice(mats))
        e = mat_to_rational(F, rng.choice(mats))
        h = r.compose(X3.compose(e))
        res = lemma55_normalize(h)
        assert res.cls == CUBE
        assert res.rho.compose(h.compose(res.eta)) == res.canonical


@pytest.mark.parametrize("q", [3, 5])
def test_lemma55_exhaustive_polynomials(q):
    F = field_for(q)
    for c3 in F.nonzero():
        for c2, c1, c0 in itertools.product(F.elements(), repeat=3):
            h = cubic(F, c3, c2, c1, c0)
            if not is_permutation_poly(h.num):
                with pytest.raises(ValueError):
                    lemma55_normalize(h)
                continue
            res = lemma55_normalize(h)
            assert res.cls == predicted_class_for_cubic(F, [c0, c1, c2, c3])
            assert res.rho.compose(h.compose(res.eta)) == res.canonical


@pytest.mark.parametrize("q", [4, 7])
def test_nu_cube_class(q):
    F = field_for(q)
    h = nu_cube(F)
    pts = p1_points(F)
    assert h.degree == 3 and maps_onto(h, pts, pts)
    assert lemma55_normalize(h).cls == NU_CUBE
    assert [c for c, _, _ in canonical_forms(F)] == [NU_CUBE]


def test_pgl2_size_and_mobius_through():
    for q in (2, 3, 4, 5):
        F = field_for(q)
        assert sum(1 for _ in pgl2(F)) == q * (q * q - 1)
    F = field_for(7)
    pts = p1_points(F)
    rng = random.Random(1)
    for _ in range(20):
        src = rng.sample(pts, 3)
        dst = rng.sample(pts, 3)
        m = mat_to_rational(F, mobius_through(F, src, dst))
        assert [eval_rational(m, s) for s in src] == dst


def test_lemma55_rejects_bad_input():
    F = field_for(5)
    with pytest.raises(ValueError):
        lemma55_normalize(RationalFn(Poly(F, [0, 0, 1]), Poly.const(F, 1)))
    with pytest.raises(SearchCapExceeded):
        lemma55_normalize(cubic(field_for(11), 1, 0, 0, 0))
