import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chudnovsky.bigcomb import (
    binomial,
    check_ineq,
    check_lemma_part1,
    check_lemma_part2,
    integer_nth_root_floor,
    regularity_general_points,
    scan_ineq,
)

from oracles import binomial_oracle, count_monomials, nth_root_oracle


@pytest.mark.parametrize("a,b,expected", [(9, 3, 84), (10, 5, 252), (5, 0, 1), (3, 5, 0)])
def test_binomial_examples(a, b, expected):
    assert binomial(a, b) == expected


def test_binomial_matches_oracle_on_grid():
    for a in range(0, 40):
        for b in range(0, 45):
            assert binomial(a, b) == binomial_oracle(a, b)


@settings(max_examples=200, derandomize=True)
@given(st.integers(1, 200), st.data())
def test_binomial_symmetry_and_pascal(a, data):
    b = data.draw(st.integers(0, a))
    assert binomial(a, b) == binomial(a, a - b)
    if b >= 1:
        assert binomial(a, b) == binomial(a - 1, b - 1) + binomial(a - 1, b)


@pytest.mark.parametrize("s,n,expected", [(80, 4, 2), (81, 4, 3), (16, 2, 4), (1, 7, 1), (2**64, 64, 2)])
def test_nth_root_examples(s, n, expected):
    assert integer_nth_root_floor(s, n) == expected


def test_nth_root_matches_brute_force():
    for n in range(1, 6):
        for s in range(1, 1500):
            assert integer_nth_root_floor(s, n) == nth_root_oracle(s, n)


def test_nth_root_rejects_zero_index():
    with pytest.raises(ValueError):
        integer_nth_root_floor(10, 0)


@settings(max_examples=200, derandomize=True)
@given(st.integers(1, 2**256), st.integers(1, 40))
def test_nth_root_brackets(s, n):
    t = integer_nth_root_floor(s, n)
    assert t**n <= s < (t + 1) ** n


def test_nth_root_boundaries_exact():
    for k in range(2, 50):
        for n in (2, 3, 4, 7):
            assert integer_nth_root_floor(k**n, n) == k
            assert integer_nth_root_floor(k**n - 1, n) == k - 1


def test_lemma_examples():
    assert check_lemma_part1(4, 3)
    # 27 > C(6,3) = 20 and 81 > C(8,4) = 70
    assert binomial_oracle(6, 3) == 20 and binomial_oracle(8, 4) == 70
    assert not check_lemma_part1(3, 3)
    assert not check_lemma_part1(3, 4)
    assert check_lemma_part2(5)
    assert not check_lemma_part2(4)
    assert not check_lemma_part2(1)


def test_lemma_ranges():
    assert all(check_lemma_part1(k, n) for k in range(4, 31) for n in range(3, 31))
    assert all(check_lemma_part2(n) for n in range(5, 61))


def test_lemma_part1_agrees_with_oracle():
    for k in range(1, 12):
        for n in range(1, 12):
            assert check_lemma_part1(k, n) == (k**n <= binomial_oracle(k * n - n, n))


def _regularity_oracle(n, s):
    r = 0
    while count_monomials(n, r) < s:
        r += 1
    return r


@pytest.mark.parametrize("n,s,r", [(4, 16, 3), (2, 5, 2), (3, 1, 0), (4, 70, 4), (4, 71, 5)])
def test_regularity_examples(n, s, r):
    res = regularity_general_points(n, s)
    assert (res.r, res.reg) == (r, r + 1)


def test_regularity_against_monomial_count():
    for n in range(1, 5):
        for s in range(1, 120):
            res = regularity_general_points(n, s)
            assert res.r == _regularity_oracle(n, s)
            assert binomial(res.r - 1 + n, n) < s <= binomial(res.r + n, n)


def test_regularity_monotone_in_s():
    for n in range(1, 6):
        rs = [regularity_general_points(n, s).r for s in range(1, 400)]
        assert rs == sorted(rs)


@pytest.mark.parametrize("n,s,expected", [(4, 16, True), (4, 70, True), (4, 71, False)])
def test_check_ineq_examples(n, s, expected):
    assert check_ineq(n, s) is expected


def test_scan_ineq():
    assert scan_ineq(4, 16, 70) == []
    assert scan_ineq(4, 16, 80) == list(range(71, 81))
    assert scan_ineq(4, 30, 30) == []
    with pytest.raises(ValueError):
        scan_ineq(4, 10, 9)


def test_scan_matches_pointwise_evaluation():
    expected = [s for s in range(16, 200) if 4 * nth_root_oracle(s, 4) < 4 + _regularity_oracle(4, s)]
    assert scan_ineq(4, 16, 199) == expected
