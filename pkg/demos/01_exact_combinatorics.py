"""
Exact binomial inequalities and regularity of general points
============================================================

Everything here is integer arithmetic, so boundary cases such as s = k^n - 1
versus k^n come out exactly.
"""

from chudnovsky.bigcomb import (
    binomial,
    check_ineq,
    check_lemma_part1,
    check_lemma_part2,
    integer_nth_root_floor,
    regularity_general_points,
    scan_ineq,
)

# k^n <= C(kn - n, n) starts at k = 4, n = 3; k = 3 is too small
print("C(9,3) =", binomial(9, 3), " vs 4^3 =", 4**3)
print("k=4, n=3:", check_lemma_part1(4, 3), "   k=3, n=3:", check_lemma_part1(3, 3))

# central binomials beat 3^n from n = 5 on
print("3^n <= C(2n,n) for n=1..8:", [check_lemma_part2(n) for n in range(1, 9)])

# integer roots never go through floating point
s = 3**40 - 1
print("floor((3^40 - 1)^(1/40)) =", integer_nth_root_floor(s, 40))

# regularity of s general points in P^4: reg = r + 1 with C(r-1+4,4) < s <= C(r+4,4)
for s in (16, 35, 36, 70, 71):
    r = regularity_general_points(4, s)
    print(f"s={s:3d}: r={r.r}, reg={r.reg}, 4*floor(s^(1/4)) >= 4 + r: {check_ineq(4, s)}")

# the window where the root bound alone is not enough
print("failures for 16 <= s <= 80:", scan_ineq(4, 16, 80))
