"""Dense univariate polynomials over a ``FieldCtx``.

Coefficients are element ids, index = degree, no trailing zeros.  The zero
polynomial has degree ``ZERO_DEGREE``.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .gf import FieldCtx, FieldMismatchError

ZERO_DEGREE = -1


class Poly:
    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldCtx, coeffs: Iterable[int] = ()) -> None:
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.ctx = ctx
        self.coeffs: tuple[int, ...] = tuple(c)

    # -- constructors -------------------------------------------------------
    @classmethod
    def zero(cls, ctx: FieldCtx) -> "Poly":
        return cls(ctx)

    @classmethod
    def const(cls, ctx: FieldCtx, c: int) -> "Poly":
        return cls(ctx, [c])

    @classmethod
    def x(cls, ctx: FieldCtx) -> "Poly":
        return cls(ctx, [0, 1])

    @classmethod
    def monomial(cls, ctx: FieldCtx, e: int, c: int = 1) -> "Poly":
        return cls(ctx, [0] * e + [c])

    @classmethod
    def from_terms(cls, ctx: FieldCtx, terms: Mapping[int, int] | Iterable[tuple[int, int]]) -> "Poly":
        """Build from ``{exponent: coeff}`` (repeated exponents are summed)."""
        items = terms.items() if isinstance(terms, Mapping) else terms
        items = list(items)
        if not items:
            return cls(ctx)
        out = [0] * (max(e for e, _ in items) + 1)
        for e, c in items:
            out[e] = ctx.add(out[e], c)
        return cls(ctx, out)

    # -- basic protocol -----------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def terms(self) -> dict[int, int]:
        return {e: c for e, c in enumerate(self.coeffs) if c}

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Poly) and self.ctx == other.ctx and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.ctx, self.coeffs))

    def __repr__(self) -> str:
        if not self.coeffs:
            return "Poly(0)"
        parts = []
        for e in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[e]
            if not c:
                continue
            cs = self.ctx.fmt(c)
            mono = "" if e == 0 else ("X" if e == 1 else f"X^{e}")
            if not mono:
                parts.append(cs)
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{cs}*{mono}")
        return "Poly(" + " + ".join(parts) + ")"

    def _check(self, other: "Poly") -> None:
        if other.ctx is not self.ctx and other.ctx != self.ctx:
            raise FieldMismatchError("polynomials over different fields")

    # -- ring operations ----------------------------------------------------
    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        add = self.ctx.add
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = add(out[i], c)
        return Poly(self.ctx, out)

    def __neg__(self) -> "Poly":
        return Poly(self.ctx, [self.ctx.neg(c) for c in self.coeffs])

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        ctx = self.ctx
        add, mul = ctx.add, ctx.mul
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly(ctx)
        bt = [(j, c) for j, c in enumerate(b) if c]
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in bt:
                    out[i + j] = add(out[i + j], mul(ai, bj))
        return Poly(ctx, out)

    def scale(self, c: int) -> "Poly":
        mul = self.ctx.mul
        return Poly(self.ctx, [mul(c, x) for x in self.coeffs])

    def __pow__(self, m: int) -> "Poly":
        """Plain (unreduced) power."""
        if m < 0:
            raise ValueError("negative power")
        result = Poly.const(self.ctx, 1)
        base = self
        while m:
            if m & 1:
                result = result * base
            base = base * base
            m >>= 1
        return result

    def monic(self) -> "Poly":
        if not self.coeffs:
            return self
        return self.scale(self.ctx.inv(self.lead))

    def map_coeffs(self, fn) -> "Poly":
        """Apply ``fn`` to each coefficient id (e.g. a Frobenius twist)."""
        return Poly(self.ctx, [fn(c) for c in self.coeffs])

    def __call__(self, x: int) -> int:
        return eval_poly(self, x)


def eval_poly(f: Poly, x: int) -> int:
    """Horner evaluation at the element id x."""
    add, mul = f.ctx.add, f.ctx.mul
    acc = 0
    for c in reversed(f.coeffs):
        acc = add(mul(acc, x), c)
    return acc


def coeff(f: Poly, e: int) -> int:
    return f.coeffs[e] if 0 <= e < len(f.coeffs) else 0


def fold_exponent(e: int, n: int) -> int:
    """Exponent of the normal form of X^e modulo X^n - X."""
    return e if e == 0 else ((e - 1) % (n - 1)) + 1


def reduce_mod_xq_minus_x(f: Poly, n: int) -> Poly:
    """Normal form of f modulo X^n - X (n = size of the coefficient field).

    Folds each exponent e >= 1 to ((e-1) mod (n-1)) + 1; the induced function
    on F_n is unchanged and the result has degree < n.
    """
    if f.degree < n:
        return f
    add = f.ctx.add
    out = [0] * n
    for e, c in enumerate(f.coeffs):
        if c:
            k = fold_exponent(e, n)
            out[k] = add(out[k], c)
    return Poly(f.ctx, out)


def _sparse_mul_reduced(ctx: FieldCtx, a: dict[int, int], b: dict[int, int], n: int) -> dict[int, int]:
    add, mul = ctx.add, ctx.mul
    nm1 = n - 1
    out: dict[int, int] = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = ea + eb
            if e:
                e = (e - 1) % nm1 + 1
            v = add(out.get(e, 0), mul(ca, cb))
            if v:
                out[e] = v
            else:
                out.pop(e, None)
    return out


def pow_reduce(f: Poly, m: int, n: int) -> Poly:
    """f^m reduced modulo X^n - X, for n a power of the characteristic.

    Uses the base-p expansion of m: f^(p^j) is f with coefficients raised to
    p^j and exponents multiplied by p^j, so every factor stays as sparse as f.
    Each product is reduced immediately.
    """
    if m < 1:
        raise ValueError("m must be positive")
    ctx = f.ctx
    p = ctx.p
    base: dict[int, int] = {}
    for e, c in f.terms().items():
        k = fold_exponent(e, n)
        v = ctx.add(base.get(k, 0), c)
        if v:
            base[k] = v
        else:
            base.pop(k, None)
    result: dict[int, int] = {0: 1}
    while m:
        digit = m % p
        for _ in range(digit):
            result = _sparse_mul_reduced(ctx, result, base, n)
        m //= p
        if m:
            nxt: dict[int, int] = {}
            for e, c in base.items():
                k = fold_exponent(e * p, n)
                v = ctx.add(nxt.get(k, 0), ctx.pow(c, p))
                if v:
                    nxt[k] = v
                else:
                    nxt.pop(k, None)
            base = nxt
    return Poly.from_terms(ctx, result) if result else Poly(ctx)


def compose(f: Poly, g: Poly) -> Poly:
    """f(g(X)) without reduction."""
    f._check(g)
    ctx = f.ctx
    acc = Poly(ctx)
    for c in reversed(f.coeffs):
        acc = acc * g + Poly.const(ctx, c)
    return acc


def poly_divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    a._check(b)
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    ctx = a.ctx
    rem = list(a.coeffs)
    db = b.degree
    inv_lead = ctx.inv(b.lead)
    if len(rem) - 1 < db:
        return Poly(ctx), a
    quot = [0] * (len(rem) - db)
    for shift in range(len(rem) - 1 - db, -1, -1):
        c = ctx.mul(rem[shift + db], inv_lead)
        quot[shift] = c
        if c:
            for i, bi in enumerate(b.coeffs):
                rem[shift + i] = ctx.sub(rem[shift + i], ctx.mul(c, bi))
    return Poly(ctx, quot), Poly(ctx, rem[:db] if db > 0 else [])


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd by the remainder sequence; gcd(0, 0) = 0."""
    while not b.is_zero():
        a, b = b, poly_divmod(a, b)[1]
        b = b.monic()
    return a.monic()


def derivative(f: Poly) -> Poly:
    ctx = f.ctx
    return Poly(ctx, [ctx.mul(ctx.from_int(e), c) for e, c in enumerate(f.coeffs)][1:])


def poly_from_ints(ctx: FieldCtx, coeffs: Sequence[int]) -> Poly:
    """Coefficients given as integers (reduced mod p), low degree first."""
    return Poly(ctx, [ctx.from_int(c) for c in coeffs])
