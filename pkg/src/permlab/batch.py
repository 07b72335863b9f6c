"""Vectorised brute-force evaluation for many coefficient tuples at once.

Each row of a coefficient array gives one map; results are (rows, points)
arrays of element ids, so bijectivity is a row-wise sort.
"""

from __future__ import annotations

import numpy as np

from .gf import FieldCtx
from .permcheck import rows_are_permutations


def power_columns(ctx: FieldCtx, exps) -> dict[int, np.ndarray]:
    """x^e for every element x, per exponent e."""
    mul = ctx.np_tables()["mul"]
    xs = np.arange(ctx.order)
    out = {}
    for e in exps:
        acc = np.ones(ctx.order, dtype=np.int64)
        base, k = xs, e
        while k:
            if k & 1:
                acc = mul[acc, base]
            base = mul[base, base]
            k >>= 1
        out[e] = acc
    return out


def sparse_values(ctx: FieldCtx, coeffs: np.ndarray, exps, lead_exp: int | None = None) -> np.ndarray:
    """Values of [X^lead_exp +] sum_j coeffs[:, j] X^{exps[j]} at every element."""
    T = ctx.np_tables()
    add, mul = T["add"], T["mul"]
    all_exps = list(exps) + ([lead_exp] if lead_exp is not None else [])
    pw = power_columns(ctx, all_exps)
    rows = coeffs.shape[0]
    if lead_exp is not None:
        acc = np.broadcast_to(pw[lead_exp], (rows, ctx.order))
    else:
        acc = np.zeros((rows, ctx.order), dtype=np.int64)
    for j, e in enumerate(exps):
        acc = add[acc, mul[coeffs[:, j : j + 1], pw[e][None, :]]]
    return acc


def permutation_rows(ctx: FieldCtx, coeffs: np.ndarray, exps, lead_exp: int | None = None) -> np.ndarray:
    return rows_are_permutations(sparse_values(ctx, coeffs, exps, lead_exp))


def complete_mapping_rows(ctx: FieldCtx, coeffs: np.ndarray, exps) -> np.ndarray:
    """Rows whose polynomial f has both f and f + X permuting the field."""
    vals = sparse_values(ctx, coeffs, exps)
    ok = rows_are_permutations(vals)
    if ok.any():
        add = ctx.np_tables()["add"]
        xs = np.arange(ctx.order)
        sub = vals[ok]
        ok[ok] = rows_are_permutations(add[sub, xs[None, :]])
    return ok


def pair_map_rows(F: FieldCtx, coeffs: np.ndarray) -> np.ndarray:
    """Bijectivity of (x, y) -> (x^3 - exy^2 - ax - by, y^3 - cx - dy); rows are (a, b, c, d, e)."""
    T = F.np_tables()
    add, mul, neg = T["add"], T["mul"], T["neg"]
    q = F.order
    xs = np.repeat(np.arange(q), q)
    ys = np.tile(np.arange(q), q)
    x3 = mul[mul[xs, xs], xs]
    y2 = mul[ys, ys]
    y3 = mul[y2, ys]
    xy2 = mul[xs, y2]
    a, b, c, d, e = (coeffs[:, j : j + 1] for j in range(5))
    u = add[x3[None, :], neg[add[add[mul[e, xy2[None, :]], mul[a, xs[None, :]]], mul[b, ys[None, :]]]]]
    v = add[y3[None, :], neg[add[mul[c, xs[None, :]], mul[d, ys[None, :]]]]]
    return rows_are_permutations(u * q + v)
