"""Base-p digits, exact multinomials and the carry-free (Lucas/Dickson) test."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True)
class DigitsBaseP:
    p: int
    digits: tuple[int, ...]  # low to high

    def value(self) -> int:
        v = 0
        for d in reversed(self.digits):
            v = v * self.p + d
        return v

    def __getitem__(self, j: int) -> int:
        return self.digits[j] if j < len(self.digits) else 0

    def __len__(self) -> int:
        return len(self.digits)


def base_p_digits(m: int, p: int) -> DigitsBaseP:
    if m < 0:
        raise ValueError("m must be nonnegative")
    out = []
    while m:
        out.append(m % p)
        m //= p
    return DigitsBaseP(p, tuple(out))


def _check_parts(m: int, parts: Sequence[int]) -> None:
    if any(x < 0 for x in parts):
        raise ValueError("parts must be nonnegative")
    if sum(parts) != m:
        raise ValueError(f"parts sum to {sum(parts)}, expected {m}")


def multinomial_exact(m: int, parts: Sequence[int]) -> int:
    """m! / prod(parts!) as an exact integer."""
    _check_parts(m, parts)
    result, remaining = 1, m
    for k in parts:
        result *= math.comb(remaining, k)
        remaining -= k
    return result


def multinomial_coprime_p(m: int, parts: Sequence[int], p: int) -> bool:
    """True iff p does not divide the multinomial, i.e. adding the parts in base p has no carries."""
    _check_parts(m, parts)
    digits = [base_p_digits(x, p) for x in parts]
    target = base_p_digits(m, p)
    width = max([len(target)] + [len(d) for d in digits])
    return all(sum(d[j] for d in digits) == target[j] for j in range(width))


def _has_term(n: int, power: int) -> bool:
    """Whether the base-3 expansion of n includes the term ``power`` (a power of 3)."""
    return (n // power) % 3 >= 1


def _carry_free(parts: Sequence[int], total_digits: DigitsBaseP) -> bool:
    width = len(total_digits)
    for j in range(width + 1):
        s = 0
        for x in parts:
            s += (x // 3**j) % 3
        if s != total_digits[j]:
            return False
    return True


def admissible_tuples(which: str, ell: int):
    """Yield every tuple meeting the hypotheses of the base-3 integer lemma ``which``.

    ``"4.1"``: (n1, n2, n3, n5, n9) with n1+2n2+3n3+5n5+9n9 = Q-1 whose base-3
    expansions together hold one copy of each 3^i (1 <= i <= ell-2) plus a
    partition of 2.  ``"4.2"``: (n1, n2, n5, n9) with n1+2n2+5n5+9n9 = Q-1 and
    one copy of each 3^i (0 <= i <= ell-2, i != 2) plus 2*9 or 9+9.  Both
    conditions say the n_j add up to their total without base-3 carries.
    """
    Q = 3**ell
    if which == "4.1":
        total = (Q + 3) // 6
        weights = (1, 2, 3, 5, 9)
    elif which == "4.2":
        total = (Q + 51) // 6
        weights = (1, 2, 5, 9)
    else:
        raise ValueError(f"unknown lemma {which!r}")
    target = Q - 1
    tdig = base_p_digits(total, 3)
    # loop over all but n1, n2; the two linear equations fix those
    free_w = weights[2:]

    def rec(idx: int, chosen: list[int], wsum: int, csum: int):
        if idx == len(free_w):
            # n1 + n2 = total - csum ; n1 + 2 n2 = target - wsum
            n2 = (target - wsum) - (total - csum)
            n1 = (total - csum) - n2
            if n1 < 0 or n2 < 0:
                return
            parts = (n1, n2, *chosen)
            if _carry_free(parts, tdig):
                yield parts
            return
        w = free_w[idx]
        n = 0
        while wsum + w * n <= target and csum + n <= total:
            yield from rec(idx + 1, chosen + [n], wsum + w * n, csum + n)
            n += 1

    yield from rec(0, [], 0, 0)


@dataclass(frozen=True)
class LemmaIntResult:
    ok: bool
    checked: int
    counterexample: tuple[int, ...] | None = None


def lemma_int_check(which: str, ell: int) -> LemmaIntResult:
    """Enumerate admissible tuples and test the lemma's conclusion on each.

    Conclusion: n5 contains Q/9, and n9 contains Q/27 (for ``"4.2"`` only when
    ell >= 6).  Returns the first violating tuple, if any.
    """
    if which == "4.1":
        if ell < 3:
            raise ValueError("'4.1' needs ell >= 3")
        i5, i9 = 3, 4
        check_n9 = True
    elif which == "4.2":
        if ell < 5:
            raise ValueError("'4.2' needs ell >= 5")
        i5, i9 = 2, 3
        check_n9 = ell >= 6
    else:
        raise ValueError(f"unknown lemma {which!r}")
    Q = 3**ell
    checked = 0
    for t in admissible_tuples(which, ell):
        checked += 1
        good = _has_term(t[i5], Q // 9)
        if check_n9:
            good = good and _has_term(t[i9], Q // 27)
        if not good:
            return LemmaIntResult(False, checked, t)
    return LemmaIntResult(True, checked)
