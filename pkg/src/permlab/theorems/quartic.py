"""Predicates for f = aX^{3q} + bX^{2q+1} + cX^{q+2} + dX^3 on F_{q^2} and for X^{q+2} + bX^q + cX."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..gf import LinearQPoly, QuadExtCtx
from ..poly import Poly, eval_poly, fold_exponent
from .caps import check_cap


@dataclass(frozen=True)
class QuarticCoeffs:
    """Coefficients as F_{q^2} ids."""

    quad: QuadExtCtx
    a: int
    b: int
    c: int
    d: int

    @property
    def q(self) -> int:
        return self.quad.q

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def poly(self) -> Poly:
        q = self.q
        return Poly.from_terms(
            self.quad.ext, {3 * q: self.a, 2 * q + 1: self.b, q + 2: self.c, 3: self.d}
        )


@dataclass(frozen=True)
class Thm13Coeffs:
    quad: QuadExtCtx
    b: int
    c: int

    def poly(self) -> Poly:
        q = self.quad.q
        return Poly.from_terms(self.quad.ext, {q + 2: 1, q: self.b, 1: self.c})


@dataclass(frozen=True)
class ConjugacyWitness:
    """L = lam X^q + beta X with f = L^{-1} o gamma X^{q+2} o L."""

    lam: int
    beta: int
    gamma: int
    omega: int  # -gamma^{q-1}


@dataclass(frozen=True)
class Thm11Result:
    holds: bool
    clause: str | None = None  # "conjugate" or "additive"
    witness: ConjugacyWitness | None = None

    def __bool__(self) -> bool:
        return self.holds


# --- X^{q+2} + bX^q + cX ------------------------------------------------------------

def thm13_predicate(co: Thm13Coeffs) -> bool:
    quad = co.quad
    ext, q = quad.ext, quad.q
    if q % 3 != 1 and co.b == 0:
        t = ext.pow(co.c, q - 1) if co.c else 0
        # t^3 - t^2 + t
        val = ext.add(ext.sub(ext.pow(t, 3), ext.mul(t, t)), t)
        if val == 0:
            return True
    return q == 2 and co.b != 0 and co.c == 1


# --- complete mappings by explicit clauses ------------------------------------------

def _additive_clause(co: QuarticCoeffs) -> bool:
    """3 | q, b = c = 0, a^{q+1} != d^{q+1}, and aX^{3q-1} + dX^2 + 1 has no roots in F_{q^2}^*."""
    quad = co.quad
    ext, q = quad.ext, quad.q
    if q % 3 or co.b or co.c:
        return False
    a, d = co.a, co.d
    if quad.norm(a) == quad.norm(d):
        return False
    e = 3 * q - 1
    for x in ext.nonzero():
        v = ext.add(ext.add(ext.mul(a, ext.pow(x, e)), ext.mul(d, ext.mul(x, x))), 1)
        if v == 0:
            return False
    return True


def _clause_30(co: QuarticCoeffs) -> bool:
    quad = co.quad
    ext, q = quad.ext, quad.q
    if co.a or co.b or co.d:
        return False
    c = co.c
    t = ext.pow(c, q - 1) if c else 0
    return ext.add(ext.sub(ext.mul(t, t), t), 1) == 0


def _clause_31(co: QuarticCoeffs) -> bool:
    quad = co.quad
    ext, q = quad.ext, quad.q
    a, b, c, d = co.as_tuple()
    n = ext.from_int
    mul, add, sub, pw = ext.mul, ext.add, ext.sub, ext.pow
    fr = quad.frob
    b2 = mul(b, b)
    d2q = pw(d, 2 * q)
    # 3ac = b^2 != 9 d^{2q}
    if mul(n(3), mul(a, c)) != b2 or b2 == mul(n(9), d2q):
        return False
    s = add(b2, mul(n(3), d2q))  # b^2 + 3 d^{2q}
    # 144 a^{q+3} = -(b^2 + 3d^{2q})^2
    if mul(n(144), pw(a, q + 3)) != ext.neg(mul(s, s)):
        return False
    # 24 a^2 d = (b + d^q)(b^2 + 3d^{2q}) != 0
    a2 = mul(a, a)
    lhs = mul(n(24), mul(a2, d))
    if lhs != mul(add(b, fr(d)), s) or lhs == 0:
        return False
    # 24 a^2 b^q = -(b - 3d^q)(b^2 + 3d^{2q})
    return mul(n(24), mul(a2, fr(b))) == ext.neg(mul(sub(b, mul(n(3), fr(d))), s))


def _clause_34(co: QuarticCoeffs) -> bool:
    quad = co.quad
    ext, q = quad.ext, quad.q
    if q % 3 or co.b or co.d or co.c == 0:
        return False
    minus1 = ext.neg(1)
    if ext.pow(co.c, q - 1) != minus1:
        return False
    r = ext.neg(ext.div(co.a, co.c))
    return ext.pow(r, (q + 1) // 2) == minus1


def _clause_35(co: QuarticCoeffs, a_exp: int = 4) -> bool:
    quad = co.quad
    ext, q = quad.ext, quad.q
    a, b, c, d = co.as_tuple()
    if q % 3 or b:
        return False
    mul, add, pw = ext.mul, ext.add, ext.pow
    if mul(pw(a, q - 1), pw(d, 2 * q - 2)) != ext.neg(1) or a == 0 or d == 0:
        return False
    s = add(pw(d, 4 * q + 4), mul(pw(a, a_exp), pw(d, q + 5)))
    # a square in F_q^*: lies in F_q, nonzero, square there
    if s == 0 or not quad.in_base(s) or not quad.is_square_in_base(s):
        return False
    return add(add(mul(mul(a, c), quad.frob(d)), mul(mul(a, a), d)), pw(d, 3 * q)) == 0


def _clause_32(co: QuarticCoeffs) -> bool:
    quad = co.quad
    ext, q = quad.ext, quad.q
    a, b, c, d = co.as_tuple()
    if q % 2:
        return False
    mul, add, pw = ext.mul, ext.add, ext.pow
    rhs = add(add(pw(c, 2 * q), pw(c, q + 1)), mul(c, c))
    return (
        quad.norm(a) == rhs
        and mul(a, c) == mul(b, b)
        and d == quad.frob(b)
        and not quad.in_base(c)
    )


def _clause_33(co: QuarticCoeffs) -> bool:
    quad = co.quad
    return quad.q == 2 and co.a == co.d and co.b == 0 and not quad.in_base(co.c)


THM12_CLAUSES = {
    "additive": _additive_clause,
    "a=b=d=0": _clause_30,
    "gcd(q,6)=1": _clause_31,
    "3|q,b=d=0": _clause_34,
    "3|q,b=0": _clause_35,
    "2|q": _clause_32,
    "q=2": _clause_33,
}


# "literal" reads the square condition of the 3|q, b=0 clause as printed,
# d^{4q+4} + a^4 d^{q+5}; "a_squared" uses d^{4q+4} + a^2 d^{q+5}, which is the
# form that matches brute force.
THM12_READINGS = ("literal", "a_squared")


def _clauses_for(reading: str) -> dict:
    if reading not in THM12_READINGS:
        raise ValueError(f"unknown reading {reading!r}; expected one of {THM12_READINGS}")
    if reading == "literal":
        return THM12_CLAUSES
    return {**THM12_CLAUSES, "3|q,b=0": lambda co: _clause_35(co, a_exp=2)}


def thm12_clauses(co: QuarticCoeffs, reading: str = "literal") -> list[str]:
    """Names of the coefficient clauses that hold (ignoring the q mod 3 guard)."""
    return [name for name, fn in _clauses_for(reading).items() if fn(co)]


def thm12_predicate(co: QuarticCoeffs, reading: str = "literal") -> bool:
    clauses = _clauses_for(reading)
    if co.q % 3 == 1:
        return False
    return any(fn(co) for fn in clauses.values())


# --- complete mappings via the conjugacy equations--------------------------------------------

def valid_gammas(quad: QuadExtCtx) -> list[int]:
    """gamma != 0 with gamma^{2q-2} - gamma^{q-1} + 1 = 0."""
    ext, q = quad.ext, quad.q
    out = []
    for g in ext.nonzero():
        t = ext.pow(g, q - 1)
        if ext.add(ext.sub(ext.mul(t, t), t), 1) == 0:
            out.append(g)
    return out


def conjugate_coeffs(quad: QuadExtCtx, lam: int, beta: int, gamma: int) -> tuple[int, int, int, int]:
    """(a, b, c, d) of L^{-1} o gamma X^{q+2} o L for L = lam X^q + beta X, solved from the
    four coefficient equations (each side multiplied by lam^{q+1} - beta^{q+1})."""
    ext, q = quad.ext, quad.q
    mul, add, sub, pw = ext.mul, ext.add, ext.sub, ext.pow
    fr = quad.frob
    n2 = ext.from_int(2)
    D = sub(quad.norm(lam), quad.norm(beta))
    if D == 0:
        raise ValueError("lam^{q+1} = beta^{q+1}")
    gq = fr(gamma)
    lq, bq = fr(lam), fr(beta)
    l_q1, b_q1 = quad.norm(lam), quad.norm(beta)
    a = mul(mul(mul(lam, lam), mul(bq, bq)), sub(gq, gamma))
    b = add(
        mul(mul(lam, mul(mul(bq, bq), beta)), sub(gq, mul(n2, gamma))),
        mul(mul(mul(l_q1, lam), bq), sub(mul(n2, gq), gamma)),
    )
    c = sub(
        add(mul(mul(n2, mul(l_q1, b_q1)), sub(gq, gamma)), mul(mul(l_q1, l_q1), gq)),
        mul(mul(b_q1, b_q1), gamma),
    )
    d = sub(mul(mul(mul(lq, lq), mul(lam, beta)), gq), mul(mul(lq, mul(bq, pw(beta, 2))), gamma))
    inv = ext.inv(D)
    return (mul(a, inv), mul(b, inv), mul(c, inv), mul(d, inv))


def reduced_key(quad: QuadExtCtx, a: int, b: int, c: int, d: int) -> tuple[tuple[int, int], ...]:
    """The quartic reduced mod X^{q^2} - X, as sorted (exponent, coeff) pairs."""
    q = quad.q
    n = q * q
    add = quad.ext.add
    out: dict[int, int] = {}
    for e, coef in ((3 * q, a), (2 * q + 1, b), (q + 2, c), (3, d)):
        if coef:
            k = fold_exponent(e, n)
            out[k] = add(out.get(k, 0), coef)
    return tuple(sorted((k, v) for k, v in out.items() if v))


@lru_cache(maxsize=16)
def conjugacy_index(quad: QuadExtCtx) -> dict:
    """Reduced quartic -> first (lam, beta, gamma) in id order realising it."""
    ext, q = quad.ext, quad.q
    gammas = valid_gammas(quad)
    index: dict = {}
    if not gammas:
        return index
    norms = [quad.norm(x) for x in ext.elements()]
    for lam in ext.elements():
        for beta in ext.elements():
            if norms[lam] == norms[beta]:
                continue
            for g in gammas:
                key = reduced_key(quad, *conjugate_coeffs(quad, lam, beta, g))
                if key not in index:
                    index[key] = (lam, beta, g)
    return index


def thm11_predicate(co: QuarticCoeffs, cap: int | None = None) -> Thm11Result:
    """Conjugate to gamma X^{q+2} with gamma^{2q-2} - gamma^{q-1} + 1 = 0, or the additive case.

    The conjugate case looks the quartic up in ``conjugacy_index``, which
    enumerates every (lam, beta, gamma) once per field; q is limited by the
    ``thm11`` search cap.
    """
    quad = co.quad
    if _additive_clause(co):
        return Thm11Result(True, "additive")
    check_cap("thm11", quad.q, cap)
    hit = conjugacy_index(quad).get(reduced_key(quad, *co.as_tuple()))
    if hit is None:
        return Thm11Result(False)
    lam, beta, g = hit
    omega = quad.ext.neg(quad.ext.pow(g, quad.q - 1))
    return Thm11Result(True, "conjugate", ConjugacyWitness(lam, beta, g, omega))


def witness_holds(co: QuarticCoeffs, w: ConjugacyWitness) -> bool:
    """Pointwise check of f = L^{-1} o gamma X^{q+2} o L on F_{q^2}."""
    quad = co.quad
    ext, q = quad.ext, quad.q
    L = LinearQPoly(quad, w.lam, w.beta)
    if not L.is_invertible():
        return False
    Linv = L.inverse()
    f = co.poly()
    for x in ext.elements():
        y = Linv.apply(ext.mul(w.gamma, ext.pow(L.apply(x), q + 2)))
        if y != eval_poly(f, x):
            return False
    return True
