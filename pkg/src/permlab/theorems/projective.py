"""Normal forms of degree-3 rational functions permuting P^1(F_q), up to degree-one maps on both sides."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from ..gf import FieldCtx, FieldError, QuadExtCtx, build_quad_ext
from ..permcheck import INF, RationalFn, eval_rational, maps_onto, p1_points
from ..poly import Poly
from .caps import check_cap

CUBE = "X^3"  # q != 1 mod 3
NU_CUBE = "nu^-1 o X^3 o nu"  # q = 1 mod 3
CUBE_MINUS = "X^3 - alpha X"  # 3 | q, alpha nonsquare


@dataclass(frozen=True)
class Lemma55Result:
    cls: str
    rho: RationalFn
    eta: RationalFn
    canonical: RationalFn
    alpha: int | None = None


def _mat_apply(F: FieldCtx, m, pt):
    a, b, c, d = m
    if pt is INF:
        x, z = 1, 0
    else:
        x, z = pt, 1
    num = F.add(F.mul(a, x), F.mul(b, z))
    den = F.add(F.mul(c, x), F.mul(d, z))
    return INF if den == 0 else F.div(num, den)


def _vec(pt):
    return (1, 0) if pt is INF else (pt, 1)


def _frame(F: FieldCtx, pts):
    """Matrix sending INF, 0, 1 to the three distinct points pts."""
    (x1, z1), (x2, z2), (x3, z3) = (_vec(p) for p in pts)
    # solve (x3, z3) = l1 (x1, z1) + l2 (x2, z2)
    det = F.sub(F.mul(x1, z2), F.mul(x2, z1))
    l1 = F.div(F.sub(F.mul(x3, z2), F.mul(x2, z3)), det)
    l2 = F.div(F.sub(F.mul(x1, z3), F.mul(x3, z1)), det)
    return (F.mul(l1, x1), F.mul(l2, x2), F.mul(l1, z1), F.mul(l2, z2))


def _mat_mul(F: FieldCtx, m, n):
    a, b, c, d = m
    e, f, g, h = n
    add, mul = F.add, F.mul
    return (add(mul(a, e), mul(b, g)), add(mul(a, f), mul(b, h)), add(mul(c, e), mul(d, g)), add(mul(c, f), mul(d, h)))


def _mat_inv(F: FieldCtx, m):
    a, b, c, d = m
    return (d, F.neg(b), F.neg(c), a)  # up to the scalar det, irrelevant projectively


def mobius_through(F: FieldCtx, src, dst) -> tuple[int, int, int, int]:
    """The unique degree-one map sending the distinct points src[i] to dst[i]."""
    return _mat_mul(F, _frame(F, dst), _mat_inv(F, _frame(F, src)))


def mat_to_rational(F: FieldCtx, m) -> RationalFn:
    a, b, c, d = m
    return RationalFn(Poly(F, [b, a]), Poly(F, [d, c]))


def pgl2(F: FieldCtx):
    """One matrix (a, b, c, d) per element of PGL_2(F_q): c = 1, or c = 0 and d = 1."""
    q = F.order
    for a, b, d in itertools.product(range(q), repeat=3):
        if F.sub(F.mul(a, d), b):
            yield (a, b, 1, d)
    for a in F.nonzero():
        for b in F.elements():
            yield (a, b, 0, 1)


@lru_cache(maxsize=16)
def _pgl2_images(F: FieldCtx) -> list:
    """(eta, [eta(P) for P in p1_points(F)]) for every eta in PGL_2(F_q)."""
    pts = p1_points(F)
    return [(m, [_mat_apply(F, m, p) for p in pts]) for m in pgl2(F)]


def _quad_for(F: FieldCtx) -> QuadExtCtx:
    return build_quad_ext(F.p, F.k, F.modulus)


def nu_cube(F: FieldCtx) -> RationalFn:
    """nu^{-1} o X^3 o nu with nu = (X - delta^q)/(X - delta), for the first delta outside F_q, over F_q."""
    quad = _quad_for(F)
    ext = quad.ext
    delta = next(x for x in ext.elements() if not quad.in_base(x))
    dq = quad.frob(delta)
    nu = RationalFn(Poly(ext, [ext.neg(dq), 1]), Poly(ext, [ext.neg(delta), 1]))
    nu_inv = RationalFn(Poly(ext, [ext.neg(dq), delta]), Poly(ext, [ext.neg(1), 1]))
    comp = nu_inv.compose(RationalFn(Poly.monomial(ext, 3), Poly.const(ext, 1)).compose(nu))
    try:
        return RationalFn(
            Poly(F, [quad.to_base(c) for c in comp.num.coeffs]),
            Poly(F, [quad.to_base(c) for c in comp.den.coeffs]),
        )
    except FieldError:
        raise AssertionError("nu-conjugated cube is not defined over F_q") from None


def canonical_forms(F: FieldCtx):
    """(class, alpha, rational function) candidates valid for this q, in search order."""
    q = F.order
    X3 = RationalFn(Poly.monomial(F, 3), Poly.const(F, 1))
    out = []
    if q % 3 != 1:
        out.append((CUBE, None, X3))
    if q % 3 == 1:
        out.append((NU_CUBE, None, nu_cube(F)))
    if q % 3 == 0:
        for alpha in F.nonzero():
            if not F.is_square(alpha):
                h = RationalFn(Poly(F, [0, F.neg(alpha), 0, 1]), Poly.const(F, 1))
                out.append((CUBE_MINUS, alpha, h))
    return out


def lemma55_normalize(h: RationalFn, cap: int | None = None) -> Lemma55Result:
    """Find degree-one rho, eta over F_q with rho o h o eta a canonical cubic."""
    F = h.ctx
    q = F.order
    check_cap("lemma55", q, cap)
    if h.degree != 3:
        raise ValueError(f"h has degree {h.degree}, expected 3")
    pts = p1_points(F)
    if not maps_onto(h, pts, pts):
        raise ValueError("h does not permute P^1(F_q)")
    # pts starts 0, 1, ..., so indices 0, 1 and -1 are the anchors 0, 1, INF
    anchor_idx = (-1, 0, 1)
    forms = [
        (cls, alpha, canon, cv, [cv[i] for i in anchor_idx])
        for cls, alpha, canon in canonical_forms(F)
        for cv in ([eval_rational(canon, p) for p in pts],)
    ]
    hv = {p: eval_rational(h, p) for p in pts}
    for eta, eta_pts in _pgl2_images(F):
        k_vals = [hv[p] for p in eta_pts]  # h o eta at each point of pts
        k_anchor = [k_vals[i] for i in anchor_idx]
        for cls, alpha, canon, cv, c_anchor in forms:
            rho = mobius_through(F, k_anchor, c_anchor)
            if all(_mat_apply(F, rho, kv) == c for kv, c in zip(k_vals, cv)):
                rho_fn, eta_fn = mat_to_rational(F, rho), mat_to_rational(F, eta)
                if rho_fn.compose(h.compose(eta_fn)) == canon:
                    return Lemma55Result(cls, rho_fn, eta_fn, canon, alpha)
    raise LookupError("no normal form found")


def predicted_class_for_cubic(F: FieldCtx, coeffs) -> str:
    """Class a degree-3 polynomial permutation of P^1(F_q) must land in.

    For 3 | q: X^3 when the X^2 and X coefficients vanish (the map is additive
    up to a constant), else X^3 - alpha X.  Otherwise by q mod 3.
    """
    q = F.order
    if q % 3 == 0:
        return CUBE if coeffs[1] == 0 and coeffs[2] == 0 else CUBE_MINUS
    return CUBE if q % 3 == 2 else NU_CUBE
