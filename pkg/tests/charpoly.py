"""Exact characteristic-polynomial oracle for small integer matrices.

Everything here is exact arithmetic: the characteristic polynomial comes from
cofactor expansion of det(xI - M) with integer polynomial entries (memoized
over column subsets), multiple roots are removed by an exact square-free
reduction over the rationals, and sign checks evaluate the polynomial at
rational points. This gives an eigenvalue certificate that shares no code
path with the floating-point solver under test.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Poly = tuple  # coefficients, ascending degree


def _poly_add(a: Poly, b: Poly, sign: int) -> Poly:
    if len(a) < len(b):
        a = a + (0,) * (len(b) - len(a))
    elif len(b) < len(a):
        b = b + (0,) * (len(a) - len(b))
    return tuple(x + sign * y for x, y in zip(a, b))


def _poly_mul(a: Poly, b: Poly) -> Poly:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return tuple(out)


def char_poly(matrix) -> list[int]:
    """Integer coefficients of det(xI - M), ascending degree (monic)."""
    n = len(matrix)
    entries: list[list[Poly]] = []
    for i in range(n):
        row = []
        for j in range(n):
            c = -int(matrix[i][j])
            row.append((c, 1) if i == j else (c,))
        entries.append(row)

    memo: dict[int, Poly] = {0: (1,)}

    def det(mask: int) -> Poly:
        cached = memo.get(mask)
        if cached is not None:
            return cached
        row = n - bin(mask).count("1")
        acc: Poly = (0,)
        sign = 1
        rest = mask
        row_entries = entries[row]
        while rest:
            low = rest & -rest
            j = low.bit_length() - 1
            e = row_entries[j]
            if e != (0,):
                acc = _poly_add(acc, _poly_mul(e, det(mask ^ low)), sign)
            sign = -sign
            rest ^= low
        memo[mask] = acc
        return acc

    full = det((1 << n) - 1)
    return list(full) + [0] * (n + 1 - len(full))


def _derivative(p: Sequence[Fraction]) -> list[Fraction]:
    return [k * c for k, c in enumerate(p)][1:]


def _trim(p: list[Fraction]) -> list[Fraction]:
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _divmod_poly(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    q = [Fraction(0)] * max(1, len(a) - len(b) + 1)
    inv = 1 / b[-1]
    while len(a) >= len(b) and any(a):
        k = len(a) - len(b)
        factor = a[-1] * inv
        q[k] = factor
        for i, c in enumerate(b):
            a[i + k] -= factor * c
        a.pop()
        _trim(a)
        if a == [Fraction(0)]:
            break
    return _trim(q), _trim(a if a else [Fraction(0)])


def _gcd_poly(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a, b = _trim(list(a)), _trim(list(b))
    while b != [Fraction(0)]:
        _, r = _divmod_poly(a, b)
        a, b = b, r
    return [c / a[-1] for c in a]  # monic


def square_free(coeffs: Sequence[int]) -> list[Fraction]:
    """The square-free part p / gcd(p, p'): same roots, all simple."""
    p = [Fraction(c) for c in coeffs]
    g = _gcd_poly(p, _derivative(p))
    if len(g) == 1:
        return p
    q, r = _divmod_poly(p, g)
    assert r == [Fraction(0)], "square-free division must be exact"
    return q


def eval_poly(p: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def brackets_root(p: Sequence[Fraction], value: float,
                  delta: Fraction = Fraction(1, 10**8)) -> bool:
    """True when ``p`` changes sign over [value - delta, value + delta].

    Evaluation is exact; a zero at either endpoint counts as a root in range.
    """
    x = Fraction(value)
    lo = eval_poly(p, x - delta)
    hi = eval_poly(p, x + delta)
    if lo == 0 or hi == 0:
        return True
    return (lo < 0) != (hi < 0)


def bisect_root(p: Sequence[Fraction], lo: Fraction, hi: Fraction,
                bits: int = 48) -> Fraction:
    """Bisect a sign change of ``p`` on [lo, hi] down to 2**-bits width."""
    flo = eval_poly(p, lo)
    if flo == 0:
        return lo
    if eval_poly(p, hi) == 0:
        return hi
    assert (flo < 0) != (eval_poly(p, hi) < 0), "no sign change on bracket"
    for _ in range(bits + (hi - lo).numerator.bit_length()):
        mid = (lo + hi) / 2
        fmid = eval_poly(p, mid)
        if fmid == 0:
            return mid
        if (fmid < 0) == (flo < 0):
            lo, flo = mid, fmid
        else:
            hi = mid
        if hi - lo < Fraction(1, 2**bits):
            break
    return (lo + hi) / 2
