import itertools
import random

import pytest

from permlab.gf import quad_ext_for
from permlab.permcheck import is_complete_mapping, is_permutation_poly
from permlab.theorems import (
    ENV_VAR,
    THM12_READINGS,
    ConjugacyWitness,
    QuarticCoeffs,
    SearchCapExceeded,
    Thm13Coeffs,
    check_cap,
    conjugacy_index,
    conjugate_coeffs,
    reduced_key,
    search_cap,
    thm11_predicate,
    thm12_clauses,
    thm12_predicate,
    thm13_predicate,
    valid_gammas,
    witness_holds,
)

# complete mappings among all (q^2)^4 quartic tuples, counted by brute force
CM_COUNTS = {2: 8, 3: 33, 4: 0}


def test_thm13_examples():
    q2 = quad_ext_for(2)
    w = q2.ext.gen
    assert thm13_predicate(Thm13Coeffs(q2, 0, 0))
    assert thm13_predicate(Thm13Coeffs(q2, w, 1))


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7])
def test_thm13_exhaustive(q):
    quad = quad_ext_for(q)
    for b, c in itertools.product(quad.ext.elements(), repeat=2):
        co = Thm13Coeffs(quad, b, c)
        assert thm13_predicate(co) == is_permutation_poly(co.poly())


def test_thm12_examples():
    q2 = quad_ext_for(2)
    w = q2.ext.gen
    assert thm12_predicate(QuarticCoeffs(q2, 1, 0, w, 1))
    assert "q=2" in thm12_clauses(QuarticCoeffs(q2, 1, 0, w, 1))
    assert "a=b=d=0" in thm12_clauses(QuarticCoeffs(q2, 0, 0, w, 0))
    q3 = quad_ext_for(3)
    d = next(x for x in q3.ext.nonzero() if not q3.ext.is_square(x))
    co = QuarticCoeffs(q3, 0, 0, 0, d)
    assert thm12_predicate(co) and "additive" in thm12_clauses(co)
    assert is_complete_mapping(co.poly())


def test_thm12_q_1_mod_3_is_false():
    quad = quad_ext_for(4)
    rng = random.Random(0)
    for _ in range(200):
        co = QuarticCoeffs(quad, *(rng.randrange(16) for _ in range(4)))
        assert not thm12_predicate(co)


def test_thm12_unknown_reading():
    with pytest.raises(ValueError):
        thm12_predicate(QuarticCoeffs(quad_ext_for(3), 0, 0, 0, 0), reading="other")


def test_thm12_square_condition_erratum_q9():
    # found by brute force: a complete mapping that the printed a^4 form misses
    quad = quad_ext_for(9)
    co = QuarticCoeffs(quad, 3, 0, 30, 40)
    assert is_complete_mapping(co.poly())
    assert not thm12_predicate(co, reading="literal")
    assert thm12_predicate(co, reading="a_squared")
    assert thm11_predicate(co, cap=9).holds


def test_integer_literals_reduce_into_characteristic():
    # in characteristic 3 the clause with 3ac = b^2 forces b = 0 for any a, c
    quad = quad_ext_for(3)
    co = QuarticCoeffs(quad, 1, 1, 1, 1)
    assert "gcd(q,6)=1" not in thm12_clauses(co)
    assert quad.ext.from_int(144) == 0 and quad_ext_for(2).ext.from_int(144) == 0


def test_thm11_examples():
    q2 = quad_ext_for(2)
    w = q2.ext.gen
    res = thm11_predicate(QuarticCoeffs(q2, 0, 0, w, 0))
    assert res.holds and res.clause == "conjugate"
    assert (res.witness.lam, res.witness.beta, res.witness.gamma) == (0, 1, w)
    assert witness_holds(QuarticCoeffs(q2, 0, 0, w, 0), res.witness)

    res = thm11_predicate(QuarticCoeffs(q2, 0, 0, 1, 0))
    assert not res
    assert is_permutation_poly(QuarticCoeffs(q2, 0, 0, 1, 0).poly())
    assert not is_complete_mapping(QuarticCoeffs(q2, 0, 0, 1, 0).poly())


def test_thm11_additive_case_q3():
    quad = quad_ext_for(3)
    ext = quad.ext
    hits = 0
    for a, d in itertools.product(ext.elements(), repeat=2):
        rootless = all(
            ext.add(ext.add(ext.mul(a, ext.pow(x, 8)), ext.mul(d, ext.mul(x, x))), 1) != 0 for x in ext.nonzero()
        )
        expect = quad.norm(a) != quad.norm(d) and rootless
        res = thm11_predicate(QuarticCoeffs(quad, a, 0, 0, d))
        if expect:
            hits += 1
            assert res.holds
        assert res.holds == is_complete_mapping(QuarticCoeffs(quad, a, 0, 0, d).poly())
    assert hits > 0


@pytest.mark.parametrize("q", [2, 3, 4])
def test_thm11_thm12_brute_force_exhaustive(q):
    quad = quad_ext_for(q)
    cm = 0
    for t in itertools.product(quad.ext.elements(), repeat=4):
        co = QuarticCoeffs(quad, *t)
        bf = is_complete_mapping(co.poly())
        cm += bf
        assert thm11_predicate(co).holds == bf
        for rd in THM12_READINGS:
            assert thm12_predicate(co, reading=rd) == bf
    assert cm == CM_COUNTS[q]


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_every_index_entry_has_a_valid_witness(q):
    quad = quad_ext_for(q)
    for key, (lam, beta, gamma) in conjugacy_index(quad).items():
        t = conjugate_coeffs(quad, lam, beta, gamma)
        assert reduced_key(quad, *t) == key
        co = QuarticCoeffs(quad, *t)
        res = thm11_predicate(co)
        assert res.holds and witness_holds(co, res.witness)
        assert witness_holds(co, ConjugacyWitness(lam, beta, gamma, 0))
        assert is_complete_mapping(co.poly())


@pytest.mark.parametrize("q", [2, 3, 5])
def test_conjugates_of_gamma_monomial(q):
    quad = quad_ext_for(q)
    for gamma in valid_gammas(quad):
        t = conjugate_coeffs(quad, 0, 1, gamma)
        assert t == (0, 0, gamma, 0)


def test_valid_gammas_empty_when_q_1_mod_3():
    assert valid_gammas(quad_ext_for(4)) == []
    assert valid_gammas(quad_ext_for(7)) == []


def test_search_cap(monkeypatch):
    monkeypatch.delenv(ENV_VAR, raising=False)
    assert search_cap("thm11") == 8
    with pytest.raises(SearchCapExceeded):
        check_cap("thm11", 9)
    check_cap("thm11", 9, override=9)
    monkeypatch.setenv(ENV_VAR, "9")
    assert search_cap("thm11") == 9
    check_cap("thm11", 9)
    with pytest.raises(SearchCapExceeded):
        thm11_predicate(QuarticCoeffs(quad_ext_for(11), 1, 0, 0, 0))
