from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from chudnovsky.bigcomb import integer_nth_root_floor
from chudnovsky.fatpoints import Certification, derived_seed, sample_points
from chudnovsky.waldschmidt import (
    AlphaSearchError,
    SearchConfig,
    alpha_symbolic,
    chudnovsky_check,
    containment_criterion_check,
    count_alpha,
    floor_instance_spec,
    lemma71_specs,
    verify_71_lemma,
    verify_floor_instance,
    waldschmidt_report,
)

from oracles import alpha_oracle

CFG = SearchConfig(seed=7)
SMALL = SearchConfig(seed=7, trials=1, p=10007)


def test_count_alpha():
    assert count_alpha(2, 5) == 2
    assert count_alpha(2, 1) == 1
    assert count_alpha(4, 16) == 3
    assert count_alpha(4, 71) == 5


@pytest.mark.parametrize("m,alpha", [(1, 2), (2, 4), (3, 6)])
def test_alpha_five_points_in_plane(m, alpha):
    res = alpha_symbolic(2, 5, m, CFG)
    assert res.alpha == alpha and res.lower_degrees_certified
    assert res.certification in (Certification.NONEMPTY_BY_COUNT, Certification.EMPIRICAL_NONEMPTY)
    assert res.ratio == 2


def test_alpha_lower_degree_evidence():
    res = alpha_symbolic(2, 5, 3, CFG)
    assert res.certificates[5].ranks[-1] == 21
    assert alpha_symbolic(2, 5, 2, CFG).certificates[3].ranks[-1] == 10


@pytest.mark.parametrize("n,m", [(1, 3), (2, 1), (2, 4), (3, 2), (4, 2)])
def test_alpha_single_point(n, m):
    assert alpha_symbolic(n, 1, m, CFG).alpha == m


@pytest.mark.parametrize("n,s,m", [(2, 3, 2), (2, 4, 2), (2, 6, 2), (2, 7, 1), (3, 4, 2), (3, 5, 1), (2, 5, 2)])
def test_alpha_matches_symbolic_oracle(n, s, m):
    pts = sample_points(n, s, derived_seed(SMALL.seed, 0), SMALL.p)
    expected = alpha_oracle(n, s, m, [c[:-1] for c in pts.coords], SMALL.p)
    assert alpha_symbolic(n, s, m, SMALL).alpha == expected


def test_binary_and_linear_search_agree():
    for n, s in [(2, 5), (2, 7), (2, 10), (3, 6), (3, 9)]:
        for m in (1, 2, 3):
            assert alpha_symbolic(n, s, m, CFG).alpha == alpha_symbolic(n, s, m, CFG, search="linear").alpha


def test_certificates_downward_closed_on_linear_scans():
    for n, s, m in [(2, 9, 3), (3, 8, 2), (2, 7, 2)]:
        res = alpha_symbolic(n, s, m, CFG, search="linear")
        labels = [res.certificates[d].certification for d in sorted(res.certificates)]
        empties = [c is Certification.CERTIFIED_EMPTY for c in labels]
        assert empties == sorted(empties, reverse=True)


def test_alpha_errors():
    with pytest.raises(ValueError):
        alpha_symbolic(2, 0, 1, CFG)
    with pytest.raises(ValueError):
        alpha_symbolic(2, 3, 1, CFG, search="ternary")
    assert issubclass(AlphaSearchError, RuntimeError)


def test_report_examples():
    r = waldschmidt_report(2, 4, 2, CFG)
    assert [x[2] for x in r.samples] == [2, 2] and r.floor_lower == 2

    r = waldschmidt_report(2, 5, 3, CFG)
    assert [x[2] for x in r.samples] == [2, 2, 2]
    assert r.upper_bound == 2 and r.floor_lower == 2
    assert r.chudnovsky_threshold == Fraction(3, 2)

    r = waldschmidt_report(4, 16, 1, CFG)
    assert r.floor_lower == 2 and r.samples == [(1, 3, Fraction(3))]
    with pytest.raises(ValueError):
        waldschmidt_report(2, 5, 0, CFG)


def test_upper_bound_coherence():
    bounds = [waldschmidt_report(2, 10, k, CFG).upper_bound for k in range(1, 5)]
    assert all(a >= b for a, b in zip(bounds, bounds[1:]))
    assert all(b >= integer_nth_root_floor(10, 2) for b in bounds)


def test_chudnovsky_examples():
    recs = chudnovsky_check(2, 5, [1, 2, 3], CFG)
    assert all(r.holds and r.ratio == 2 and r.threshold == Fraction(3, 2) for r in recs)
    (r,) = chudnovsky_check(3, 1, [2], CFG)
    assert r.ratio == 1 == r.threshold and r.holds
    (r,) = chudnovsky_check(4, 16, [1], CFG)
    assert (r.ratio, r.threshold, r.holds) == (3, Fraction(3, 2), True)
    with pytest.raises(ValueError):
        chudnovsky_check(2, 5, [], CFG)


def test_containment_examples():
    v = containment_criterion_check(4, 16, 1, CFG)
    assert (v.reg, v.required, v.alpha_nm, v.holds) == (4, 7, 9, True)
    cert8 = v.alpha_result.certificates[8]
    assert cert8.certification is Certification.CERTIFIED_EMPTY
    assert (cert8.cols, cert8.conds, cert8.ranks[-1]) == (495, 560, 495)

    v = containment_criterion_check(2, 4, 1, CFG)
    # r = 2 since C(3,2) = 3 < 4 <= C(4,2) = 6
    assert (v.reg, v.required, v.alpha_nm, v.holds) == (3, 4, 4, True)
    assert containment_criterion_check(3, 8, 1, CFG).holds
    with pytest.raises(ValueError):
        containment_criterion_check(1, 3, 1, CFG)


@pytest.mark.parametrize(
    "n,k,m", [(2, 2, 1), (2, 2, 2), (2, 2, 3), (2, 3, 1), (2, 3, 2), (3, 2, 1), (3, 2, 2), (4, 2, 1)]
)
def test_floor_instances(n, k, m):
    assert verify_floor_instance(n, k, m, CFG).certification is Certification.CERTIFIED_EMPTY


def test_floor_instance_shapes():
    c = verify_floor_instance(2, 3, 1, CFG)
    assert (c.cols, c.conds, c.ranks[-1]) == (6, 9, 6)
    c = verify_floor_instance(2, 2, 2, CFG)
    assert (c.cols, c.conds, c.ranks[-1]) == (10, 12, 10)
    assert str(floor_instance_spec(3, 2, 1)) == "L_3(1; 1^8)"
    with pytest.raises(ValueError):
        verify_floor_instance(2, 0, 1, CFG)


def test_lemma71_m1():
    cert = verify_71_lemma(1, CFG)
    assert cert.holds
    assert (cert.main.cols, cert.main.conds, cert.main.ranks[-1]) == (495, 2485, 495)
    assert (cert.intermediate.cols, cert.intermediate.conds) == (495, 1565)
    assert cert.sixteen.certification is Certification.CERTIFIED_EMPTY


def test_lemma71_specs_shapes():
    specs = lemma71_specs(2)
    assert (specs["main"].cols, specs["main"].conds) == (5985, 23430)
    assert str(specs["intermediate"]) == "L_4(17; 16^4, 8^7)"


@pytest.mark.slow
def test_lemma71_m2():
    cert = verify_71_lemma(2, SearchConfig(seed=7, trials=1))
    assert cert.main.certification is Certification.CERTIFIED_EMPTY
    assert cert.main.ranks[-1] == 5985


def _samples():
    out = {}
    for n, s in [(2, 3), (2, 5), (2, 6), (2, 9), (2, 10), (3, 5), (3, 8)]:
        for m in range(1, 5):
            out[(n, s, m)] = alpha_symbolic(n, s, m, CFG)
    return out


@pytest.fixture(scope="module")
def samples():
    return _samples()


def test_subadditivity(samples):
    for (n, s, a), ra in samples.items():
        for b in range(1, 5):
            if (n, s, a + b) in samples:
                assert samples[(n, s, a + b)].alpha <= ra.alpha + samples[(n, s, b)].alpha


def test_skoda_and_floor_bound(samples):
    for (n, s, m), res in samples.items():
        a1 = samples[(n, s, 1)].alpha
        assert n * res.alpha >= m * a1
        if res.lower_degrees_certified:
            assert res.alpha >= m * integer_nth_root_floor(s, n)


@settings(max_examples=25, deadline=None)
@given(st.integers(2, 3), st.integers(1, 9), st.integers(1, 3))
def test_alpha_result_invariants(n, s, m):
    res = alpha_symbolic(n, s, m, CFG)
    assert m <= res.alpha <= res.search_cap
    assert res.certificates[res.alpha].certification is not Certification.CERTIFIED_EMPTY
    assert res.lower_degrees_certified
