"""Exact integer combinatorics.

Binomial coefficients, integer n-th roots and the closed-form inequalities
used by the containment argument for general points.  Everything is done with
Python integers; there is no floating point in this module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


def binomial(a: int, b: int) -> int:
    """C(a, b), with C(a, b) = 0 whenever b > a (or b < 0)."""
    if a < 0:
        raise ValueError(f"binomial: a must be nonnegative, got {a}")
    if b < 0 or b > a:
        return 0
    return math.comb(a, b)


def integer_nth_root_floor(s: int, n: int) -> int:
    """Largest t with t**n <= s.

    Binary search on t, so exact for arbitrarily large s.
    """
    if n < 1:
        raise ValueError(f"root index must be >= 1, got {n}")
    if s < 0:
        raise ValueError(f"radicand must be nonnegative, got {s}")
    if s < 2 or n == 1:
        return s
    lo, hi = 1, 1 << (s.bit_length() // n + 1)
    # invariant: lo**n <= s < hi**n
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if mid**n <= s:
            lo = mid
        else:
            hi = mid
    return lo


def check_lemma_part1(k: int, n: int) -> bool:
    """k**n <= C(kn - n, n)."""
    if k < 1 or n < 1:
        raise ValueError("k and n must be positive")
    return k**n <= binomial(k * n - n, n)


def check_lemma_part2(n: int) -> bool:
    """3**n <= C(2n, n)."""
    if n < 1:
        raise ValueError("n must be positive")
    return 3**n <= binomial(2 * n, n)


@dataclass(frozen=True)
class RegularityResult:
    s: int
    n: int
    r: int
    reg: int


def regularity_general_points(n: int, s: int) -> RegularityResult:
    """Regularity of the ideal of s general points in P^n.

    reg = r + 1 where C(r - 1 + n, n) < s <= C(r + n, n); r is found by an
    ascending scan from 0.
    """
    if n < 1 or s < 1:
        raise ValueError("n and s must be positive")
    r = 0
    while binomial(r + n, n) < s:
        r += 1
    assert binomial(r - 1 + n, n) < s <= binomial(r + n, n)
    return RegularityResult(s=s, n=n, r=r, reg=r + 1)


def check_ineq(n: int, s: int) -> bool:
    """n * floor(s ** (1/n)) >= n - 1 + reg, with reg the general-point regularity."""
    r = regularity_general_points(n, s).r
    return n * integer_nth_root_floor(s, n) >= n + r


def scan_ineq(n: int, s_lo: int, s_hi: int) -> list[int]:
    """All s in [s_lo, s_hi] where check_ineq fails, ascending."""
    if s_lo > s_hi:
        raise ValueError(f"empty range [{s_lo}, {s_hi}]")
    return [s for s in range(s_lo, s_hi + 1) if not check_ineq(n, s)]
