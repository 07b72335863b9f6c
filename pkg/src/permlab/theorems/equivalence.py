"""F_q-linear equivalence classes of the permuting quartics aX^{3q}+bX^{2q+1}+cX^{q+2}+dX^3.

Every permutation in the family is rho o g o eta^{-1} for one of
  X^{q+2} on F_{q^2}                        (q != 1 mod 3)
  (x, y) -> (x^3, y^3)                      (q != 1 mod 3)
  (x, y) -> (x^3 - e x y^2, y^3), e nonsquare  (3 | q)
with rho, eta F_q-linear isomorphisms.  The search below enumerates every eta,
reads rho off two basis points and checks the whole map pointwise.
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass, field

from ..gf import LinearQPoly, QuadExtCtx, VecIso, invertible_linear_maps, pair_isomorphisms
from ..permcheck import is_bijective_values
from ..poly import eval_poly
from .caps import check_cap
from .quartic import QuarticCoeffs

log = logging.getLogger(__name__)


class ClassTag(enum.Enum):
    MONOMIAL_Q2 = "X^(q+2)"
    CUBE_PAIR = "(X^3, Y^3)"
    TWISTED_CUBE_PAIR = "(X^3 - eXY^2, Y^3)"
    NOT_PERMUTATION = "not a permutation"


@dataclass(frozen=True)
class ClassResult:
    tag: ClassTag
    rho: LinearQPoly | VecIso | None = None
    eta: LinearQPoly | VecIso | None = None
    e: int | None = None  # base-field id for the twisted class
    others: tuple = field(default=())  # further matching classes, when all were tried


def _values(co: QuarticCoeffs) -> list[int]:
    f = co.poly()
    return [eval_poly(f, x) for x in co.quad.ext.elements()]


def _monomial_match(quad: QuadExtCtx, fv: list[int]):
    ext, q = quad.ext, quad.q
    n = ext.order
    gvals = [ext.pow(x, q + 2) for x in ext.elements()]
    if not is_bijective_values(gvals, n):
        return None
    ginv = [0] * n
    for x, y in enumerate(gvals):
        ginv[y] = x
    z = next(x for x in ext.elements() if not quad.in_base(x))
    dz = ext.inv(ext.sub(quad.frob(z), z))
    for eta in invertible_linear_maps(quad):
        # h = f o eta; rho = h o g^{-1} must be A X^q + B X
        r1 = fv[eta.apply(ginv[1])]
        rz = fv[eta.apply(ginv[z])]
        A = ext.mul(ext.sub(rz, ext.mul(z, r1)), dz)
        B = ext.sub(r1, A)
        rho = LinearQPoly(quad, A, B)
        if not rho.is_invertible():
            continue
        if all(rho.apply(gvals[x]) == fv[eta.apply(x)] for x in ext.elements()):
            return rho, eta
    return None


def _pair_rule(quad: QuadExtCtx, e: int):
    F = quad.base
    mul, sub = F.mul, F.sub

    def g(x: int, y: int) -> tuple[int, int]:
        x3 = mul(mul(x, x), x)
        if e:
            x3 = sub(x3, mul(e, mul(x, mul(y, y))))
        return x3, mul(mul(y, y), y)

    return g


def _pair_match(quad: QuadExtCtx, fv: list[int], e: int):
    F, ext = quad.base, quad.ext
    q = F.order
    g = _pair_rule(quad, e)
    pts = [(x, y) for x in F.elements() for y in F.elements()]
    gv = [g(x, y) for x, y in pts]
    if not is_bijective_values((u * q + v for u, v in gv), q * q):
        return None
    for eta in pair_isomorphisms(quad):
        # g fixes (1, 0) and (0, 1), so rho(1, 0) = f(eta(1, 0)), rho(0, 1) = f(eta(0, 1))
        alpha = fv[eta.a]
        beta = fv[eta.b]
        if not alpha or not beta or ext.pow(alpha, q - 1) == ext.pow(beta, q - 1):
            continue
        rho = VecIso(quad, alpha, beta, "from_pair")
        if all(rho.apply(gxy) == fv[eta.apply(xy)] for xy, gxy in zip(pts, gv)):
            return rho, eta
    return None


def candidate_classes(quad: QuadExtCtx):
    """(tag, e) pairs in search order; e runs over the nonsquares of F_q for the twisted class."""
    q = quad.q
    out = []
    if q % 3 != 1:
        out.append((ClassTag.MONOMIAL_Q2, None))
        out.append((ClassTag.CUBE_PAIR, 0))
    if q % 3 == 0:
        F = quad.base
        out.extend((ClassTag.TWISTED_CUBE_PAIR, e) for e in F.nonzero() if not F.is_square(e))
    return out


def thm17_classify(co: QuarticCoeffs, cap: int | None = None, all_classes: bool = False) -> ClassResult:
    """Tag f with the first matching class, trying them in the order listed above.

    With ``all_classes`` every class is tried and extra matches are kept in
    ``others`` and logged.
    """
    quad = co.quad
    check_cap("thm17", quad.q, cap)
    fv = _values(co)
    if not is_bijective_values(fv, quad.ext.order):
        return ClassResult(ClassTag.NOT_PERMUTATION)
    found: list[ClassResult] = []
    for tag, e in candidate_classes(quad):
        if tag is ClassTag.MONOMIAL_Q2:
            hit = _monomial_match(quad, fv)
        else:
            hit = _pair_match(quad, fv, e)
        if hit is None:
            continue
        res = ClassResult(tag, hit[0], hit[1], e if tag is ClassTag.TWISTED_CUBE_PAIR else None)
        if not all_classes:
            return res
        found.append(res)
    if not found:
        # a permutation with no class would contradict the classification; report it as such
        raise LookupError(f"no equivalence class found for permutation {co.as_tuple()} at q={quad.q}")
    if len(found) > 1:
        log.info("q=%d %s matches %s", quad.q, co.as_tuple(), [r.tag.name for r in found])
    first = found[0]
    return ClassResult(first.tag, first.rho, first.eta, first.e, tuple(found[1:]))


def verify_class_witness(co: QuarticCoeffs, res: ClassResult) -> bool:
    """Re-check f = rho o g o eta^{-1} pointwise from the stored witness."""
    quad = co.quad
    fv = _values(co)
    if res.tag is ClassTag.NOT_PERMUTATION:
        return not is_bijective_values(fv, quad.ext.order)
    ext, q = quad.ext, quad.q
    if res.tag is ClassTag.MONOMIAL_Q2:
        rho, eta = res.rho, res.eta
        if not (rho.is_invertible() and eta.is_invertible()):
            return False
        return all(rho.apply(ext.pow(x, q + 2)) == fv[eta.apply(x)] for x in ext.elements())
    g = _pair_rule(quad, res.e or 0)
    F = quad.base
    return all(
        res.rho.apply(g(x, y)) == fv[res.eta.apply((x, y))] for x in F.elements() for y in F.elements()
    )
