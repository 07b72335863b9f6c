"""Bijectivity oracles over finite fields, F_q x F_q, mu_{q+1} and P^1(F_q)."""

from __future__ import annotations

from typing import Callable, Iterable, Sequence, Union

import numpy as np

from .gf import FieldCtx, QuadExtCtx
from .poly import Poly, coeff, eval_poly, poly_divmod, poly_gcd, pow_reduce


class _Infinity:
    __slots__ = ()

    def __repr__(self) -> str:
        return "INF"

    def __reduce__(self):
        return "INF"


INF = _Infinity()
"""The point at infinity of P^1; compares equal only to itself."""

PointP1 = Union[int, _Infinity]


def is_bijective_values(values: Iterable, size: int) -> bool:
    """True iff ``values`` hits ``size`` distinct ids in ``range(size)``; stops at the first repeat."""
    seen = bytearray(size)
    count = 0
    for v in values:
        if seen[v]:
            return False
        seen[v] = 1
        count += 1
    return count == size


def rows_are_permutations(values: np.ndarray) -> np.ndarray:
    """Row-wise injectivity of a (batch, n) array of ids drawn from an n-set."""
    s = np.sort(values, axis=1)
    return np.all(s[:, 1:] != s[:, :-1], axis=1)


def is_permutation_poly(f: Poly, ctx: FieldCtx | None = None) -> bool:
    ctx = ctx or f.ctx
    return is_bijective_values((eval_poly(f, x) for x in ctx.elements()), ctx.order)


def is_complete_mapping(f: Poly, ctx: FieldCtx | None = None) -> bool:
    """Both x -> f(x) and x -> f(x) + x permute the field."""
    ctx = ctx or f.ctx
    if not is_permutation_poly(f, ctx):
        return False
    return is_permutation_poly(f + Poly.x(ctx), ctx)


def hermite_is_permutation(f: Poly, ctx: FieldCtx | None = None) -> bool:
    """Hermite's criterion over F_n (n = ctx.order).

    f permutes F_n iff f has exactly one root in F_n and, for every 0 < m < n-1
    with p not dividing m, f^m mod X^n - X has degree < n-1.
    """
    ctx = ctx or f.ctx
    n, p = ctx.order, ctx.p
    roots = sum(1 for x in ctx.elements() if eval_poly(f, x) == 0)
    if roots != 1:
        return False
    for m in range(1, n - 1):
        if m % p == 0:
            continue
        if pow_reduce(f, m, n).degree >= n - 1:
            return False
    return True


def bivariate_is_bijection(rule: Callable[[int, int], tuple[int, int]], ctx: FieldCtx) -> bool:
    """Whether (x, y) -> rule(x, y) permutes F_q x F_q (pairs of base ids)."""
    q = ctx.order
    return is_bijective_values(
        (u * q + v for x in range(q) for y in range(q) for (u, v) in (rule(x, y),)), q * q
    )


def coeff_profile(f: Poly, m: int, ctx: FieldCtx | None = None) -> int:
    """Coefficient of X^{n-1} in f^m mod X^n - X (n = field order): the Hermite obstruction."""
    ctx = ctx or f.ctx
    n = ctx.order
    return coeff(pow_reduce(f, m, n), n - 1)


# --- rational functions ---------------------------------------------------------

class RationalFn:
    """num/den over one field, stored in lowest terms with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly, reduce: bool = True) -> None:
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if reduce and not num.is_zero():
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = poly_divmod(num, g)[0]
                den = poly_divmod(den, g)[0]
        if num.is_zero():
            den = Poly.const(den.ctx, 1)
        inv = den.ctx.inv(den.lead)
        self.num = num.scale(inv)
        self.den = den.scale(inv)

    @property
    def ctx(self) -> FieldCtx:
        return self.num.ctx

    @property
    def degree(self) -> int:
        return max(self.num.degree, self.den.degree, 0)

    def is_constant(self) -> bool:
        return self.num.degree <= 0 and self.den.degree <= 0

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RationalFn) and self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"RationalFn({self.num!r} / {self.den!r})"

    def __call__(self, x):
        return eval_rational(self, x)

    def compose(self, inner: "RationalFn") -> "RationalFn":
        """self(inner(X)) as a rational function."""
        n, d = inner.num, inner.den
        k = max(self.num.degree, self.den.degree, 0)
        num = _homogenize(self.num, n, d, k)
        den = _homogenize(self.den, n, d, k)
        return RationalFn(num, den)

    def map_coeffs(self, fn) -> "RationalFn":
        return RationalFn(self.num.map_coeffs(fn), self.den.map_coeffs(fn))


def _homogenize(f: Poly, n: Poly, d: Poly, k: int) -> Poly:
    """sum_i f_i n^i d^(k-i)."""
    ctx = f.ctx
    acc = Poly(ctx)
    for i, c in enumerate(f.coeffs):
        if c:
            acc = acc + ((n**i) * (d ** (k - i))).scale(c)
    return acc


def rational(num: Poly, den: Poly | None = None) -> RationalFn:
    return RationalFn(num, den if den is not None else Poly.const(num.ctx, 1))


def eval_rational(fn: RationalFn, x):
    """Projective evaluation: poles go to INF; at INF compare degrees."""
    ctx = fn.ctx
    if x is INF:
        dn, dd = fn.num.degree, fn.den.degree
        if dn > dd:
            return INF
        if dn < dd:
            return 0
        return ctx.div(fn.num.lead, fn.den.lead)
    d = eval_poly(fn.den, x)
    n = eval_poly(fn.num, x)
    if d == 0:
        if n == 0:
            raise ArithmeticError("0/0 after cancellation")
        return INF
    return ctx.div(n, d)


def p1_points(ctx: FieldCtx) -> list:
    return list(ctx.elements()) + [INF]


def mobius(ctx: FieldCtx, a: int, b: int, c: int, d: int) -> RationalFn:
    """(aX + b) / (cX + d)."""
    if ctx.sub(ctx.mul(a, d), ctx.mul(b, c)) == 0:
        raise ValueError("degenerate Mobius map (ad = bc)")
    return RationalFn(Poly(ctx, [b, a]), Poly(ctx, [d, c]))


def _domain(fn: RationalFn, domain: str, quad: QuadExtCtx | None) -> list:
    if domain == "mu":
        if quad is None:
            raise ValueError("domain 'mu' needs a quadratic extension")
        return list(quad.mu)
    if domain == "p1":
        if quad is not None and fn.ctx == quad.ext:
            return quad.base_elements() + [INF]
        return p1_points(fn.ctx)
    raise ValueError(f"unknown domain {domain!r}")


def maps_onto(fn: RationalFn, src: Sequence, dst: Sequence) -> bool:
    """Whether fn restricts to a bijection from the point set src onto dst."""
    if len(src) != len(dst):
        return False
    target = set(dst)
    seen = set()
    for x in src:
        y = eval_rational(fn, x)
        if y not in target or y in seen:
            return False
        seen.add(y)
    return True


def rational_permutes(fn: RationalFn, domain: str = "mu", quad: QuadExtCtx | None = None) -> bool:
    """Whether fn permutes mu_{q+1} (``domain='mu'``) or P^1(F_q) (``domain='p1'``)."""
    if fn.is_constant():
        raise ValueError("constant rational function")
    pts = _domain(fn, domain, quad)
    return maps_onto(fn, pts, pts)
