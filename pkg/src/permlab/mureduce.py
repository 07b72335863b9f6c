"""Moving a permutation question on F_{q^2} down to mu_{q+1}.

f = X^r B(X^{q-1}) permutes F_{q^2} iff gcd(r, q-1) = 1 and X^r B(X)^{q-1}
permutes mu_{q+1}; that in turn holds iff B has no roots on mu_{q+1} and
X^r B^{(q)}(1/X) / B(X) permutes mu_{q+1}.  The degree-one maps that permute
mu_{q+1}, or carry it onto P^1(F_q), are built here as well.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .gf import FieldError, QuadExtCtx
from .permcheck import INF, RationalFn, maps_onto, rational_permutes
from .poly import Poly, eval_poly, poly_divmod, poly_gcd

__all__ = [
    "XrBForm",
    "HatForm",
    "split_xr_form",
    "quartic_form",
    "reassemble",
    "lemma51_test",
    "hat_poly",
    "hat_chain",
    "lemma52_test",
    "deg1_mu_map",
    "deg1_bridge",
    "theta_map",
    "theta_inverse",
    "p1_over_ext",
    "bridges_onto",
    "roots_in",
    "divides",
    "poly_gcd",
]


@dataclass(frozen=True)
class XrBForm:
    r: int
    B: Poly


@dataclass(frozen=True)
class HatForm:
    B_hat: Poly
    C: Poly
    g: RationalFn  # lowest terms
    g_num: Poly  # before cancelling C
    g_den: Poly

    @property
    def degree(self) -> int:
        return self.g.degree


def split_xr_form(f: Poly, q: int, r: int | None = None) -> XrBForm:
    """Write f = X^r B(X^{q-1}).

    ``r`` defaults to the smallest exponent of f.  An explicit ``r`` must not
    exceed it and must agree with every exponent mod q-1.
    """
    exps = sorted(f.terms())
    if not exps:
        raise ValueError("zero polynomial has no X^r B(X^(q-1)) form")
    m = q - 1
    if r is None:
        r = exps[0]
    if r < 1:
        raise ValueError("r must be positive")
    if r > exps[0] or any((e - r) % m for e in exps):
        raise ValueError(f"exponents {exps} are not all congruent to r={r} mod {m}, with r minimal")
    terms = {(e - r) // m: c for e, c in f.terms().items()}
    return XrBForm(r, Poly.from_terms(f.ctx, terms))


def quartic_form(quad: QuadExtCtx, a: int, b: int, c: int, d: int) -> XrBForm:
    """aX^{3q}+bX^{2q+1}+cX^{q+2}+dX^3 as X^3 B(X^{q-1}), B = aX^3+bX^2+cX+d."""
    return XrBForm(3, Poly(quad.ext, [d, c, b, a]))


def reassemble(form: XrBForm, q: int) -> Poly:
    """X^r B(X^{q-1}) as an unreduced polynomial."""
    terms = {form.r + (q - 1) * e: c for e, c in form.B.terms().items()}
    return Poly.from_terms(form.B.ctx, terms)


def _permutes_mu(fn: RationalFn, quad: QuadExtCtx) -> bool:
    if fn.is_constant():
        return False
    return rational_permutes(fn, "mu", quad)


def lemma51_test(form: XrBForm, quad: QuadExtCtx) -> bool:
    """gcd(r, q-1) = 1 and X^r B(X)^{q-1} permutes mu_{q+1}."""
    q = quad.q
    if math.gcd(form.r, q - 1) != 1:
        return False
    if form.B.is_zero():
        return False
    ext = quad.ext
    # evaluate pointwise rather than expanding B^{q-1}
    mu = quad.mu
    mu_set = set(mu)
    seen = set()
    for x in mu:
        y = ext.mul(ext.pow(x, form.r), ext.pow(eval_poly(form.B, x), q - 1))
        if y not in mu_set or y in seen:
            return False
        seen.add(y)
    return True


def hat_poly(B: Poly, quad: QuadExtCtx, n: int | None = None) -> Poly:
    """X^n B^{(q)}(1/X): reverse the first n+1 coefficients and raise each to the q-th power."""
    if n is None:
        n = max(B.degree, 0)
    if B.degree > n:
        raise ValueError(f"reversal length {n} below deg B = {B.degree}")
    co = list(B.coeffs) + [0] * (n + 1 - len(B.coeffs))
    return Poly(B.ctx, [quad.frob(c) for c in reversed(co)])


def hat_chain(form: XrBForm, quad: QuadExtCtx, n: int | None = None) -> HatForm:
    """B-hat, C = gcd(B, B-hat) and g = X^r B^{(q)}(1/X) / B.

    The reversal length n defaults to max(r, deg B); the quartic family then
    gets B-hat = d^q X^3 + c^q X^2 + b^q X + a^q and g = B-hat / B.
    """
    B = form.B
    if B.is_zero():
        raise ValueError("B is the zero polynomial")
    if n is None:
        n = max(form.r, B.degree)
    B_hat = hat_poly(B, quad, n)
    C = poly_gcd(B, B_hat)
    # X^r B^{(q)}(1/X) = X^{r-n} B_hat
    shift = form.r - n
    ctx = quad.ext
    if shift >= 0:
        num, den = Poly.monomial(ctx, shift) * B_hat, B
    else:
        num, den = B_hat, Poly.monomial(ctx, -shift) * B
    g = RationalFn(num, den)
    return HatForm(B_hat, C, g, num, den)


def lemma52_test(form: XrBForm, quad: QuadExtCtx) -> bool:
    """B has no roots in mu_{q+1} and g permutes mu_{q+1}."""
    if form.B.is_zero():
        return False
    if any(eval_poly(form.B, x) == 0 for x in quad.mu):
        return False
    return _permutes_mu(hat_chain(form, quad).g, quad)


# --- degree-one maps --------------------------------------------------------------

def _lin(quad: QuadExtCtx, a: int, b: int, c: int, d: int) -> RationalFn:
    """(aX + b) / (cX + d) over F_{q^2}."""
    ctx = quad.ext
    return RationalFn(Poly(ctx, [b, a]), Poly(ctx, [d, c]))


def deg1_mu_map(quad: QuadExtCtx, alpha: int, beta: int) -> RationalFn:
    """(beta^q X + alpha^q) / (alpha X + beta); permutes mu_{q+1} when alpha^{q+1} != beta^{q+1}."""
    if quad.norm(alpha) == quad.norm(beta):
        raise FieldError("need alpha^{q+1} != beta^{q+1}")
    return _lin(quad, quad.frob(beta), quad.frob(alpha), alpha, beta)


def _outside_base(quad: QuadExtCtx, num: int, den: int) -> bool:
    return den != 0 and not quad.in_base(quad.ext.div(num, den))


def deg1_bridge(quad: QuadExtCtx, x: int, y: int, direction: str) -> RationalFn:
    """Degree-one bijections between P^1(F_q) and mu_{q+1}.

    ``"to_mu"``   (x=alpha, y=beta):  (beta^q X + alpha^q) / (beta X + alpha), alpha/beta not in F_q.
    ``"from_mu"`` (x=gamma, y=delta): (gamma X + gamma^q) / (delta X + delta^q), gamma/delta not in F_q.
    """
    fr = quad.frob
    if not _outside_base(quad, x, y):
        raise FieldError("parameter ratio must lie outside F_q (and the second parameter be nonzero)")
    if direction == "to_mu":
        return _lin(quad, fr(y), fr(x), y, x)
    if direction == "from_mu":
        return _lin(quad, x, fr(x), y, fr(y))
    raise ValueError(f"unknown direction {direction!r}")


def theta_map(quad: QuadExtCtx, z: int) -> RationalFn:
    """(zX - z^q) / (X - 1), a bijection mu_{q+1} -> P^1(F_q) for z outside F_q."""
    if quad.in_base(z):
        raise FieldError("z must lie outside F_q")
    ext = quad.ext
    return _lin(quad, z, ext.neg(quad.frob(z)), 1, ext.neg(1))


def theta_inverse(quad: QuadExtCtx, z: int) -> RationalFn:
    """(X - z^q) / (X - z)."""
    if quad.in_base(z):
        raise FieldError("z must lie outside F_q")
    ext = quad.ext
    return _lin(quad, 1, ext.neg(quad.frob(z)), 1, ext.neg(z))


def p1_over_ext(quad: QuadExtCtx) -> list:
    """P^1(F_q) as ext ids plus INF."""
    return quad.base_elements() + [INF]


def bridges_onto(fn: RationalFn, quad: QuadExtCtx, src: str, dst: str) -> bool:
    """Whether fn maps the point set ``src`` bijectively onto ``dst`` (each 'mu' or 'p1')."""
    sets = {"mu": list(quad.mu), "p1": p1_over_ext(quad)}
    return maps_onto(fn, sets[src], sets[dst])


def roots_in(B: Poly, points: Sequence[int]) -> list[int]:
    return [x for x in points if eval_poly(B, x) == 0]


def divides(a: Poly, b: Poly) -> bool:
    return poly_divmod(b, a)[1].is_zero()
