"""Maps (x, y) -> (x^3 - exy^2 - ax - by, y^3 - cx - dy) on F_q x F_q, their one-variable
reductions, and the degree-9 scan over powers of 3."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from ..gf import FieldCtx
from ..permcheck import rows_are_permutations
from ..poly import Poly, compose


@dataclass(frozen=True)
class PairMapCoeffs:
    """Base-field ids; e = 0 gives the map without the xy^2 term."""

    ctx: FieldCtx
    a: int
    b: int
    c: int
    d: int
    e: int = 0

    def rule(self) -> Callable[[int, int], tuple[int, int]]:
        F = self.ctx
        add, sub, mul = F.add, F.sub, F.mul
        a, b, c, d, e = self.a, self.b, self.c, self.d, self.e

        def phi(x: int, y: int) -> tuple[int, int]:
            x3 = mul(mul(x, x), x)
            y2 = mul(y, y)
            u = sub(sub(sub(x3, mul(e, mul(x, y2))), mul(a, x)), mul(b, y))
            v = sub(sub(mul(y2, y), mul(c, x)), mul(d, y))
            return u, v

        return phi


def _nonsquare(F: FieldCtx, x: int) -> bool:
    return x != 0 and not F.is_square(x)


THM14_READINGS = ("literal", "zero_or_nonsquare")


def thm14_predicate(co: PairMapCoeffs, reading: str = "literal") -> bool:
    """The four alternatives for (x^3 - ax - by, y^3 - cx - dy).

    ``reading="literal"`` requires a and d to be nonsquares (so nonzero) in the
    bc = 0, 3 | q alternative.  That misses maps such as (x^3, y^3 - dy) with d
    a nonsquare, which are bijective.  ``reading="zero_or_nonsquare"`` lets each
    of a, d be zero or a nonsquare there, which is what the triangular case
    actually needs.
    """
    if reading not in THM14_READINGS:
        raise ValueError(f"unknown reading {reading!r}")
    if co.e:
        raise ValueError("thm14 covers e = 0 only")
    F = co.ctx
    q = F.order
    a, b, c, d = co.a, co.b, co.c, co.d
    mul, sub = F.mul, F.sub
    bc = mul(b, c)
    if q % 3 != 1 and a == 0 and d == 0 and bc == 0:
        return True
    if q % 3 == 0:
        if bc == 0:
            if reading == "literal":
                ok = _nonsquare(F, a) and _nonsquare(F, d)
            else:
                ok = all(v == 0 or _nonsquare(F, v) for v in (a, d))
            if ok:
                return True
        else:
            b2 = mul(b, b)
            lin = F.add(mul(mul(a, a), a), mul(b2, d))  # a^3 + b^2 d
            const = mul(b2, sub(mul(a, d), bc))  # b^2 (ad - bc)
            if all(
                F.add(sub(F.pow(s, 4), mul(lin, s)), const) != 0 for s in nonzero_squares(F)
            ):
                return True
    return q == 2 and b == 1 and c == 1 and 1 in (a, d)


def nonzero_squares(F: FieldCtx) -> list[int]:
    return sorted({F.mul(y, y) for y in F.nonzero()})


def thm15_predicate(co: PairMapCoeffs) -> bool:
    F = co.ctx
    q = F.order
    if co.e == 0:
        raise ValueError("thm15 needs e != 0")
    if q % 3:
        raise ValueError("thm15 needs 3 | q")
    if co.c != 0:
        return False
    if co.d != 0 and not _nonsquare(F, co.d):
        return False
    if co.a == 0 and _nonsquare(F, co.e):
        return True
    return q == 3 and co.a == F.neg(1) and co.e == 1


# --- one-variable reductions -------------------------------------------------------------

def hu_family(co: PairMapCoeffs, t: int) -> Poly:
    """Fibre polynomial of the pair map over one value of a coordinate.

    e = 0: H_u(X) = ((X^3 - aX - u)/b)^3 - cX - d (X^3 - aX - u)/b, needs b != 0.
    e != 0: H_v(Y) = (Y^3 - dY - v)^3 - ec^2 (Y^3 - dY - v) Y^2 - ac^2 (Y^3 - dY - v) - bc^3 Y,
    needs c != 0.
    """
    F = co.ctx
    mul, neg = F.mul, F.neg
    X = Poly.x(F)
    if co.e == 0:
        if co.b == 0:
            raise ValueError("H_u needs b != 0")
        binv = F.inv(co.b)
        s = Poly(F, [neg(t), neg(co.a), 0, 1]).scale(binv)  # (X^3 - aX - u)/b
        return compose(Poly.monomial(F, 3), s) - X.scale(co.c) - s.scale(co.d)
    if co.c == 0:
        raise ValueError("H_v needs c != 0")
    w = Poly(F, [neg(t), neg(co.d), 0, 1])  # Y^3 - dY - v
    c2 = mul(co.c, co.c)
    return (
        compose(Poly.monomial(F, 3), w)
        - (w * Poly.monomial(F, 2)).scale(mul(co.e, c2))
        - w.scale(mul(co.a, c2))
        - X.scale(mul(co.b, mul(c2, co.c)))
    )


# --- the degree-9 family ----------------------------------------------------------------

@dataclass(frozen=True)
class Prop43Report:
    q: int
    mode: str
    tested: int
    permutations: int
    first_permutation: tuple[int, int, int, int] | None


def _deg9_values(F: FieldCtx, coeffs: np.ndarray) -> np.ndarray:
    """Values of X^9 + aX^5 + bX^3 + cX^2 + dX for rows (a, b, c, d) at every element."""
    T = F.np_tables()
    add, mul = T["add"], T["mul"]
    xs = np.arange(F.order)
    x2 = mul[xs, xs]
    x3 = mul[x2, xs]
    x5 = mul[x3, x2]
    pw = {1: xs, 2: x2, 3: x3, 5: x5, 9: mul[x5, mul[x2, x2]]}
    acc = np.broadcast_to(pw[9], (len(coeffs), F.order))
    for col, e in zip(range(4), (5, 3, 2, 1)):
        acc = add[acc, mul[coeffs[:, col : col + 1], pw[e][None, :]]]
    return acc


def prop43_scan(F: FieldCtx, mode: str = "exhaustive", samples: int = 0, seed: int = 0) -> Prop43Report:
    """Count permutations among X^9 + aX^5 + bX^3 + cX^2 + dX with ac != 0 (3 | q)."""
    q = F.order
    if q % 3:
        raise ValueError("prop43 needs 3 | q")
    nz = np.arange(1, q)
    al = np.arange(q)
    if mode == "exhaustive":
        grid = np.stack(np.meshgrid(nz, al, nz, al, indexing="ij"), axis=-1).reshape(-1, 4)
    elif mode == "sample":
        rng = np.random.default_rng(seed)
        n = samples
        grid = np.stack(
            [rng.integers(1, q, n), rng.integers(0, q, n), rng.integers(1, q, n), rng.integers(0, q, n)], axis=1
        )
    else:
        raise ValueError(f"unknown mode {mode!r}")
    perms = 0
    first = None
    chunk = max(1, 2_000_000 // q)
    for lo in range(0, len(grid), chunk):
        part = grid[lo : lo + chunk]
        ok = rows_are_permutations(_deg9_values(F, part))
        hits = np.nonzero(ok)[0]
        if len(hits):
            perms += len(hits)
            if first is None:
                first = tuple(int(v) for v in part[hits[0]])
    return Prop43Report(q, mode, len(grid), perms, first)


# --- small criteria -------------------------------------------------------------------------

def lemma33_predicate(kind: str, value: int, F: FieldCtx) -> bool:
    """``kind="monomial"``: X^value permutes F_q iff gcd(value, q-1) = 1.
    ``kind="cubic"``: X^3 - value*X (value != 0) permutes F_q iff 3 | q and value is a nonsquare."""
    q = F.order
    if kind == "monomial":
        return math.gcd(value, q - 1) == 1
    if kind == "cubic":
        if value == 0:
            raise ValueError("cubic form needs a != 0")
        return q % 3 == 0 and not F.is_square(value)
    raise ValueError(f"unknown kind {kind!r}")


def weil_threshold(n: int) -> float:
    """((n-2)(n-3) + sqrt((n-2)^2 (n-3)^2 + 8n - 12)) / 2, squared."""
    if n < 3:
        raise ValueError("n must be at least 3")
    m = (n - 2) * (n - 3)
    return ((m + math.sqrt(m * m + 8 * n - 12)) / 2) ** 2
