"""Small finite fields F_{p^k} and the quadratic extension F_{q^2} / F_q.

Elements are dense integer ids: the polynomial ``sum c_i X^i`` (reduced modulo
the field's defining polynomial) has id ``sum c_i p^i``.  So ``0`` is zero,
``1`` is one and ids below ``p`` are the prime field.

Fields of order up to ``TABLE_LIMIT`` carry exp/log tables; larger ones (up to
``MAX_ORDER``) fall back to polynomial arithmetic on the digit vectors.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Sequence

import numpy as np

MAX_ORDER = 2**32
TABLE_LIMIT = 2**20
# full add tables (odd characteristic) below this order, Zech logs above
_ADD_TABLE_LIMIT = 1024


class FieldError(ValueError):
    """Invalid field construction or element."""


class FieldMismatchError(FieldError):
    """Arithmetic between elements of different fields."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_power(q: int) -> tuple[int, int] | None:
    """Return ``(p, k)`` with ``q == p**k``, or None if q is not a prime power."""
    if q < 2:
        return None
    for p in range(2, q + 1):
        if q % p == 0:
            if not is_prime(p):
                return None
            k = 0
            while q % p == 0:
                q //= p
                k += 1
            return (p, k) if q == 1 else None
    return None


def _factor(n: int) -> list[int]:
    primes = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            primes.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        primes.append(n)
    return primes


# --- F_p[X] helpers on coefficient lists (low degree first) ------------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    a = _trim(list(a))
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
        _trim(a)
    return a


def _pmulmod(a: Sequence[int], b: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _pmod(out, m, p)


def _pgcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _ppowmod(base: Sequence[int], e: int, m: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = _pmod(base, m, p)
    while e:
        if e & 1:
            result = _pmulmod(result, base, m, p)
        base = _pmulmod(base, base, m, p)
        e >>= 1
    return result


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Ben-Or test: monic f of degree k is irreducible iff gcd(f, X^{p^i} - X) = 1, i <= k/2."""
    k = len(modulus) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    xp = [0, 1]
    for _ in range(k // 2):
        xp = _ppowmod(xp, p, modulus, p)
        diff = list(xp) + [0] * max(0, 2 - len(xp))
        diff[1] = (diff[1] - 1) % p
        g = _pgcd(modulus, _trim(diff), p)
        if len(g) > 1:
            return False
    return True


def smallest_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Monic irreducible of degree k whose lower coefficients, read as the base-p
    integer ``sum c_i p^i``, are smallest."""
    for low in range(p**k):
        coeffs = [(low // p**i) % p for i in range(k)] + [1]
        if (k == 1 or coeffs[0] != 0) and is_irreducible(coeffs, p):
            return tuple(coeffs)
    raise FieldError(f"no irreducible polynomial of degree {k} over F_{p}")


# --- field specification and context ------------------------------------------

@dataclass(frozen=True)
class FieldSpec:
    p: int
    k: int = 1

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise FieldError(f"p={self.p} is not prime")
        if self.k < 1:
            raise FieldError(f"k={self.k} must be positive")
        if self.p**self.k > MAX_ORDER:
            raise FieldError(f"field order {self.p}^{self.k} exceeds cap {MAX_ORDER}")

    @property
    def q(self) -> int:
        return self.p**self.k


class FieldCtx:
    """The field F_{p^k} with elements as integer ids in ``range(order)``."""

    def __init__(self, spec: FieldSpec, modulus: Sequence[int] | None = None) -> None:
        p, k = spec.p, spec.k
        if modulus is None:
            modulus = smallest_irreducible(p, k)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise FieldError(f"modulus must be monic of degree {k}: {modulus}")
        if not is_irreducible(modulus, p):
            raise FieldError(f"modulus {modulus} is reducible over F_{p}")
        self.spec = spec
        self.p = p
        self.k = k
        self.order = p**k
        self.modulus = modulus
        self.zero = 0
        self.one = 1
        self.tabulated = self.order <= TABLE_LIMIT
        self._gen: int | None = None
        self._np: dict[str, np.ndarray] = {}
        self._add_tab: list[list[int]] | None = None
        self._zech: list[int] | None = None
        if self.tabulated:
            self._build_tables()
        self._bind_add()

    # -- construction --------------------------------------------------------
    def _digits(self, x: int) -> list[int]:
        p = self.p
        out = []
        while x:
            out.append(x % p)
            x //= p
        return out

    def _from_digits(self, digits: Sequence[int]) -> int:
        x = 0
        for c in reversed(digits):
            x = x * self.p + c
        return x

    def _slow_mul(self, a: int, b: int) -> int:
        return self._from_digits(_pmulmod(self._digits(a), self._digits(b), self.modulus, self.p))

    def _slow_add(self, a: int, b: int) -> int:
        p = self.p
        out, scale = 0, 1
        while a or b:
            out += ((a % p + b % p) % p) * scale
            a //= p
            b //= p
            scale *= p
        return out

    def _build_tables(self) -> None:
        n = self.order
        m = n - 1
        order_primes = _factor(m) if m > 1 else []
        gen = None
        for cand in range(1, n):
            # multiplicative order of cand is m iff cand^(m/r) != 1 for all primes r | m
            if all(self._slow_pow(cand, m // r) != 1 for r in order_primes):
                gen = cand
                break
        assert gen is not None
        self._gen = gen
        exp = [0] * (2 * m if m else 2)
        log = [-1] * n
        x = 1
        for i in range(m):
            exp[i] = x
            log[x] = i
            x = self._slow_mul(x, gen)
        if x != 1:
            raise FieldError("generator search failed; modulus not irreducible?")
        for i in range(m, 2 * m):
            exp[i] = exp[i - m]
        if m == 0:
            exp = [1, 1]
        self._exp = exp
        self._log = log
        self._neg = [self._slow_neg(x) for x in range(n)]
        if self.p != 2:
            if n <= _ADD_TABLE_LIMIT:
                self._add_tab = [[self._slow_add(a, b) for b in range(n)] for a in range(n)]
            else:
                # zech[d] = log(1 + g^d), or -1 when 1 + g^d = 0
                zech = [-1] * m
                for d in range(m):
                    s = self._slow_add(1, exp[d])
                    zech[d] = log[s] if s else -1
                self._zech = zech

    def _slow_neg(self, x: int) -> int:
        p = self.p
        out, scale = 0, 1
        while x:
            out += ((-(x % p)) % p) * scale
            x //= p
            scale *= p
        return out

    def _slow_pow(self, x: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = self._slow_mul(result, x)
            x = self._slow_mul(x, x)
            e >>= 1
        return result

    # -- identity ----------------------------------------------------------------
    @property
    def key(self) -> tuple:
        return (self.p, self.k, self.modulus)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FieldCtx) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f"FieldCtx(F_{self.p}^{self.k}, modulus={self.modulus})"

    def __reduce__(self):
        return (_rebuild_field, (self.p, self.k, self.modulus))

    # -- arithmetic on ids -----------------------------------------------------
    @property
    def gen(self) -> int:
        """The smallest-id primitive element."""
        if self._gen is None:
            m = self.order - 1
            primes = _factor(m) if m > 1 else []
            for cand in range(1, self.order):
                if all(self.pow(cand, m // r) != 1 for r in primes):
                    self._gen = cand
                    break
        return self._gen  # type: ignore[return-value]

    def elements(self) -> range:
        return range(self.order)

    def nonzero(self) -> range:
        return range(1, self.order)

    def from_int(self, n: int) -> int:
        """The image of the integer n under Z -> F_p -> F_q."""
        return n % self.p

    def add(self, a: int, b: int) -> int:
        # replaced per instance by _bind_add
        return self._slow_add(a, b)

    def _bind_add(self) -> None:
        if self.p == 2:
            self.add = operator.xor  # type: ignore[method-assign]
        elif self.tabulated and self._add_tab is not None:
            tab = self._add_tab
            self.add = lambda a, b: tab[a][b]  # type: ignore[method-assign]
        elif self.tabulated:
            exp, log, zech, m = self._exp, self._log, self._zech, self.order - 1

            def add(a: int, b: int) -> int:
                if not a:
                    return b
                if not b:
                    return a
                la = log[a]
                z = zech[(log[b] - la) % m]  # type: ignore[index]
                return 0 if z < 0 else exp[la + z]

            self.add = add  # type: ignore[method-assign]

    def neg(self, a: int) -> int:
        if self.tabulated:
            return self._neg[a]
        return self._slow_neg(a)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if not a or not b:
            return 0
        if self.tabulated:
            return self._exp[self._log[a] + self._log[b]]
        return self._slow_mul(a, b)

    def inv(self, a: int) -> int:
        if not a:
            raise ZeroDivisionError("inverse of zero")
        if self.tabulated:
            return self._exp[(-self._log[a]) % (self.order - 1)]
        return self._slow_pow(a, self.order - 2)

    def div(self, a: int, b: int) -> int:
        if not b:
            raise ZeroDivisionError("division by zero")
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e == 0:
            return 1
        if not a:
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 0
        m = self.order - 1
        if self.tabulated:
            return self._exp[(self._log[a] * e) % m]
        e %= m
        return self._slow_pow(a, e) if e else 1

    def log(self, a: int) -> int:
        if not a:
            raise ValueError("log of zero")
        if self.tabulated:
            return self._log[a]
        x, g = 1, self.gen
        for i in range(self.order - 1):
            if x == a:
                return i
            x = self._slow_mul(x, g)
        raise AssertionError("unreachable")

    def exp(self, i: int) -> int:
        """g^i for the fixed generator g."""
        if self.tabulated:
            return self._exp[i % (self.order - 1)]
        return self.pow(self.gen, i)

    def frobenius(self, a: int, times: int = 1) -> int:
        """a^(p^times)."""
        return self.pow(a, self.p**times)

    def is_square(self, a: int) -> bool:
        """True iff a = y^2 for some y (always true in characteristic 2)."""
        if self.p == 2 or not a:
            return True
        return self.pow(a, (self.order - 1) // 2) == 1

    def sqrt(self, a: int) -> int | None:
        """Some square root of a, or None."""
        if not a:
            return 0
        if self.p == 2:
            return self.pow(a, self.order // 2)
        if not self.is_square(a):
            return None
        la = self.log(a)
        return self.exp(la // 2)

    def element(self, i: int) -> "Fe":
        return Fe(self, i)

    def fmt(self, a: int) -> str:
        """Human-readable element: ``0``, ``1`` or ``g^i``."""
        if a == 0:
            return "0"
        if a == 1:
            return "1"
        return f"g^{self.log(a)}"

    # -- numpy views for batched oracles -----------------------------------------
    def np_tables(self) -> dict[str, np.ndarray]:
        """Dense ``add``/``mul`` tables (order x order) plus ``neg``; built on demand."""
        if not self._np:
            if self.order > 4096:
                raise FieldError("dense tables only for order <= 4096")
            n = self.order
            ids = np.arange(n)
            if self.p == 2:
                add = ids[:, None] ^ ids[None, :]
            else:
                # digit-wise addition mod p
                add = np.zeros((n, n), dtype=np.int64)
                scale = 1
                for _ in range(self.k):
                    da = (ids // scale) % self.p
                    add += ((da[:, None] + da[None, :]) % self.p) * scale
                    scale *= self.p
            log = np.array([self._log[x] if x else 0 for x in range(n)], dtype=np.int64)
            exp = np.array(self._exp, dtype=np.int64)
            mul = exp[log[:, None] + log[None, :]]
            mul[0, :] = 0
            mul[:, 0] = 0
            self._np = {
                "add": add.astype(np.int32),
                "mul": mul.astype(np.int32),
                "neg": np.array(self._neg, dtype=np.int32),
            }
        return self._np


def _rebuild_field(p: int, k: int, modulus: tuple[int, ...]) -> FieldCtx:
    return build_field(FieldSpec(p, k), modulus)


@lru_cache(maxsize=64)
def _cached_field(p: int, k: int, modulus: tuple[int, ...] | None) -> FieldCtx:
    return FieldCtx(FieldSpec(p, k), modulus)


def build_field(spec: FieldSpec, modulus: Sequence[int] | None = None) -> FieldCtx:
    """Build (or fetch from cache) the field described by ``spec``.

    Without an explicit modulus the lexicographically smallest monic
    irreducible is used (see ``smallest_irreducible``).
    """
    if modulus is not None:
        modulus = tuple(int(c) % spec.p for c in modulus)
        if len(modulus) != spec.k + 1 or modulus[-1] != 1:
            raise FieldError(f"modulus must be monic of degree {spec.k}: {modulus}")
    return _cached_field(spec.p, spec.k, modulus)


def field_isomorphisms(src: FieldCtx, dst: FieldCtx) -> list[list[int]]:
    """All isomorphisms src -> dst as id lookup lists (one per root of src.modulus in dst)."""
    if src.order != dst.order:
        raise FieldError("fields of different order are not isomorphic")
    roots = [x for x in dst.elements() if _eval_prime_poly(dst, src.modulus, x) == 0]
    maps = []
    for r in roots:
        powers = [1]
        for _ in range(src.k - 1):
            powers.append(dst.mul(powers[-1], r))
        table = []
        for x in src.elements():
            acc = 0
            for c, rp in zip(src._digits(x), powers):
                acc = dst.add(acc, dst.mul(dst.from_int(c), rp))
            table.append(acc)
        maps.append(table)
    return maps


def _eval_prime_poly(ctx: FieldCtx, coeffs: Sequence[int], x: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = ctx.add(ctx.mul(acc, x), ctx.from_int(c))
    return acc


# --- element wrapper ----------------------------------------------------------

@dataclass(frozen=True)
class Fe:
    """A field element bound to its context; supports the usual operators."""

    ctx: FieldCtx = field(repr=False)
    id: int

    def __post_init__(self) -> None:
        if not 0 <= self.id < self.ctx.order:
            raise FieldError(f"id {self.id} outside field of order {self.ctx.order}")

    def _other(self, other: "Fe | int") -> int:
        if isinstance(other, Fe):
            if other.ctx is not self.ctx and other.ctx != self.ctx:
                raise FieldMismatchError("elements belong to different fields")
            return other.id
        return self.ctx.from_int(other)

    def __add__(self, other: "Fe | int") -> "Fe":
        return Fe(self.ctx, self.ctx.add(self.id, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other: "Fe | int") -> "Fe":
        return Fe(self.ctx, self.ctx.sub(self.id, self._other(other)))

    def __rsub__(self, other: "Fe | int") -> "Fe":
        return Fe(self.ctx, self.ctx.sub(self._other(other), self.id))

    def __mul__(self, other: "Fe | int") -> "Fe":
        return Fe(self.ctx, self.ctx.mul(self.id, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other: "Fe | int") -> "Fe":
        return Fe(self.ctx, self.ctx.div(self.id, self._other(other)))

    def __neg__(self) -> "Fe":
        return Fe(self.ctx, self.ctx.neg(self.id))

    def __pow__(self, e: int) -> "Fe":
        return Fe(self.ctx, self.ctx.pow(self.id, e))

    def inv(self) -> "Fe":
        return Fe(self.ctx, self.ctx.inv(self.id))

    def __bool__(self) -> bool:
        return self.id != 0

    def __str__(self) -> str:
        return self.ctx.fmt(self.id)


def field_arith(x: Fe, y: Fe | None, op: str, n: int | None = None) -> Fe:
    """Dispatch one of add, sub, mul, div, neg, inv, pow on elements."""
    if op in ("add", "sub", "mul", "div"):
        if y is None:
            raise ValueError(f"{op} needs two operands")
        if y.ctx is not x.ctx and y.ctx != x.ctx:
            raise FieldMismatchError("elements belong to different fields")
        return {"add": x.__add__, "sub": x.__sub__, "mul": x.__mul__, "div": x.__truediv__}[op](y)
    if op == "neg":
        return -x
    if op == "inv":
        return x.inv()
    if op == "pow":
        if n is None:
            raise ValueError("pow needs an exponent")
        return x**n
    raise ValueError(f"unknown op {op!r}")


# --- the quadratic extension ------------------------------------------------------

class QuadExtCtx:
    """F_{q^2} built directly as F_{p^{2k}}, with F_q located as the fixed field of x -> x^q.

    ``embed[i]`` is the image of base id ``i``; ``restrict`` inverts it on the fixed field.
    """

    def __init__(self, base: FieldCtx, ext: FieldCtx) -> None:
        if ext.p != base.p or ext.k != 2 * base.k:
            raise FieldError("ext must have degree 2 over base")
        self.base = base
        self.ext = ext
        self.p = base.p
        self.q = base.order
        q = self.q
        if ext.tabulated:
            self._frob = [ext.pow(x, q) for x in ext.elements()]
        else:
            self._frob = None
        # embed: send the base generator to a root of its minimal polynomial lying in F_q
        gb = base.gen
        minpoly = _minimal_poly_over_prime(base, gb)
        h = None
        for j in range(q - 1):
            cand = ext.exp((q + 1) * j)
            if _eval_prime_poly(ext, minpoly, cand) == 0:
                h = cand
                break
        if h is None:
            raise FieldError("could not embed base field")
        embed = [0] * q
        x = 1
        for i in range(q - 1):
            embed[base.exp(i)] = x
            x = ext.mul(x, h)
        self.embed = embed
        self.restrict = {e: i for i, e in enumerate(embed)}
        self._mu: list[int] | None = None

    def __reduce__(self):
        return (_rebuild_quad, (self.base.p, self.base.k, self.base.modulus, self.ext.modulus))

    def __repr__(self) -> str:
        return f"QuadExtCtx(q={self.q})"

    def frob(self, x: int) -> int:
        """x^q on F_{q^2}."""
        if self._frob is not None:
            return self._frob[x]
        return self.ext.pow(x, self.q)

    def in_base(self, x: int) -> bool:
        return self.frob(x) == x

    def to_base(self, x: int) -> int:
        try:
            return self.restrict[x]
        except KeyError:
            raise FieldError(f"element {x} is not in F_{self.q}") from None

    def base_elements(self) -> list[int]:
        """Embedded F_q as ext ids."""
        return list(self.embed)

    def norm(self, x: int) -> int:
        """x^{q+1} (an ext id lying in F_q)."""
        return self.ext.mul(x, self.frob(x))

    def is_square_in_base(self, x: int) -> bool:
        """For an ext id x lying in F_q: is it a square of F_q?"""
        return self.base.is_square(self.to_base(x))

    @property
    def mu(self) -> list[int]:
        if self._mu is None:
            self._mu = mu_subgroup(self).elements
        return self._mu


def _rebuild_quad(p: int, k: int, base_mod: tuple[int, ...], ext_mod: tuple[int, ...]) -> QuadExtCtx:
    return build_quad_ext(p, k, base_mod, ext_mod)


def _minimal_poly_over_prime(ctx: FieldCtx, a: int) -> list[int]:
    """Minimal polynomial of a over F_p, coefficients as ints mod p (low first)."""
    conj = [a]
    x = ctx.frobenius(a)
    while x != a:
        conj.append(x)
        x = ctx.frobenius(x)
    poly = [1]  # ids in ctx
    for r in conj:
        nr = ctx.neg(r)
        out = [0] * (len(poly) + 1)
        for i, c in enumerate(poly):
            out[i + 1] = ctx.add(out[i + 1], c)
            out[i] = ctx.add(out[i], ctx.mul(c, nr))
        poly = out
    if any(c >= ctx.p for c in poly):
        raise AssertionError("minimal polynomial not over the prime field")
    return poly


def build_quad_ext(
    p: int,
    k: int = 1,
    base_modulus: Sequence[int] | None = None,
    ext_modulus: Sequence[int] | None = None,
) -> QuadExtCtx:
    """F_{q^2} over F_q for q = p^k."""
    return _cached_quad(
        p,
        k,
        None if base_modulus is None else tuple(base_modulus),
        None if ext_modulus is None else tuple(ext_modulus),
    )


@lru_cache(maxsize=32)
def _cached_quad(p: int, k: int, base_modulus, ext_modulus) -> QuadExtCtx:
    if p ** (2 * k) > MAX_ORDER:
        raise FieldError(f"q^2 = {p}^{2 * k} exceeds cap {MAX_ORDER}")
    base = build_field(FieldSpec(p, k), base_modulus)
    ext = build_field(FieldSpec(p, 2 * k), ext_modulus)
    return QuadExtCtx(base, ext)


def quad_ext_for(q: int) -> QuadExtCtx:
    pk = prime_power(q)
    if pk is None:
        raise FieldError(f"q={q} is not a prime power")
    return build_quad_ext(*pk)


def field_for(q: int) -> FieldCtx:
    pk = prime_power(q)
    if pk is None:
        raise FieldError(f"q={q} is not a prime power")
    return build_field(FieldSpec(*pk))


def frobenius_q(quad: QuadExtCtx, x: int) -> int:
    """x^q in F_{q^2}."""
    if not isinstance(quad, QuadExtCtx):
        raise FieldError("frobenius_q needs a quadratic extension context")
    return quad.frob(x)


def is_square(ctx: FieldCtx, x: int) -> bool:
    return ctx.is_square(x)


# --- mu_{q+1}, linear maps, vector-space isomorphisms -------------------------------

@dataclass(frozen=True)
class MuSubgroup:
    elements: list[int]

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x: int) -> bool:
        return x in self.elements


def mu_subgroup(quad: QuadExtCtx) -> MuSubgroup:
    """The (q+1)-th roots of unity in F_{q^2}, i.e. the powers of g^{q-1}."""
    ext, q = quad.ext, quad.q
    step = ext.exp(q - 1)
    elems = [1]
    x = step
    while x != 1:
        elems.append(x)
        x = ext.mul(x, step)
    assert len(elems) == q + 1
    return MuSubgroup(sorted(elems))


@dataclass(frozen=True)
class LinearQPoly:
    """L(X) = a X^q + b X on F_{q^2}."""

    quad: QuadExtCtx = field(repr=False)
    a: int
    b: int

    def is_invertible(self) -> bool:
        return self.quad.norm(self.a) != self.quad.norm(self.b)

    def apply(self, x: int) -> int:
        ext = self.quad.ext
        return ext.add(ext.mul(self.a, self.quad.frob(x)), ext.mul(self.b, x))

    def inverse(self) -> "LinearQPoly":
        """(a X^q - b^q X) / (a^{q+1} - b^{q+1})."""
        ext, quad = self.quad.ext, self.quad
        den = ext.sub(quad.norm(self.a), quad.norm(self.b))
        if not den:
            raise FieldError("L is not invertible: a^{q+1} = b^{q+1}")
        inv = ext.inv(den)
        return LinearQPoly(quad, ext.mul(self.a, inv), ext.mul(ext.neg(quad.frob(self.b)), inv))

    def invert(self, y: int) -> int:
        return self.inverse().apply(y)


def linear_q_apply(L: LinearQPoly, x: int) -> int:
    return L.apply(x)


def linear_q_invert(L: LinearQPoly, x: int) -> int:
    return L.invert(x)


def invertible_linear_maps(quad: QuadExtCtx) -> Iterator[LinearQPoly]:
    """All F_q-automorphisms of F_{q^2}, as (a, b) in id order."""
    for a in quad.ext.elements():
        na = quad.norm(a)
        for b in quad.ext.elements():
            if quad.norm(b) != na:
                yield LinearQPoly(quad, a, b)


@dataclass(frozen=True)
class VecIso:
    """F_q-isomorphisms between F_{q^2} and F_q x F_q.

    ``to_pair``:   x -> (ax + (ax)^q, bx + (bx)^q)
    ``from_pair``: (x, y) -> ax + by
    Pair coordinates are base-field ids.
    """

    quad: QuadExtCtx = field(repr=False)
    a: int
    b: int
    direction: str = "from_pair"

    def __post_init__(self) -> None:
        if self.direction not in ("to_pair", "from_pair"):
            raise ValueError(f"bad direction {self.direction!r}")
        ext, q = self.quad.ext, self.quad.q
        if not self.a or not self.b:
            raise FieldError("VecIso parameters must be nonzero")
        if ext.pow(self.a, q - 1) == ext.pow(self.b, q - 1):
            raise FieldError("VecIso needs a^{q-1} != b^{q-1}")

    def _trace(self, z: int) -> int:
        return self.quad.to_base(self.quad.ext.add(z, self.quad.frob(z)))

    def apply(self, v):
        ext, quad = self.quad.ext, self.quad
        if self.direction == "to_pair":
            return (self._trace(ext.mul(self.a, v)), self._trace(ext.mul(self.b, v)))
        x, y = v
        return ext.add(ext.mul(self.a, quad.embed[x]), ext.mul(self.b, quad.embed[y]))


def vec_iso_apply(iso: VecIso, value):
    return iso.apply(value)


def pair_isomorphisms(quad: QuadExtCtx) -> Iterator[VecIso]:
    """All (x, y) -> ax + by isomorphisms F_q x F_q -> F_{q^2}, in id order."""
    ext, q = quad.ext, quad.q
    for a in ext.nonzero():
        ta = ext.pow(a, q - 1)
        for b in ext.nonzero():
            if ext.pow(b, q - 1) != ta:
                yield VecIso(quad, a, b, "from_pair")
