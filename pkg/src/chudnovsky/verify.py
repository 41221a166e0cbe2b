"""The finite verification suite behind ``chudnovsky verify-paper``.

Each criterion returns a :class:`CriterionRecord`; records carry the prime and
seed so every rank certificate can be reproduced from the record alone.
"""

from __future__ import annotations

import random
import time
from collections.abc import Callable
from dataclasses import dataclass, field
from fractions import Fraction

from .bigcomb import (
    binomial,
    check_lemma_part1,
    check_lemma_part2,
    integer_nth_root_floor,
    regularity_general_points,
    scan_ineq,
)
from .cremona import Inapplicable, cremona_reduce
from .fatpoints import (
    Certification,
    LinearSystemSpec,
    derived_seed,
    expected_dimension,
    form_to_vector,
    multiply_forms,
    sample_points,
    system_dimension,
    system_kernel_vector,
    vector_to_form,
)
from .waldschmidt import (
    SearchConfig,
    alpha_symbolic,
    chudnovsky_check,
    containment_criterion_check,
    lemma71_specs,
    verify_71_lemma,
    verify_floor_instance,
)


@dataclass
class CriterionRecord:
    criterion: str
    params: dict
    expected: object
    observed: object
    certification: str | None
    prime: int
    seed: int
    elapsed_ms: float | None
    passed: bool
    limit_s: float | None = field(default=None, repr=False)

    def as_dict(self, timing: bool = False) -> dict:
        return {
            "criterion": self.criterion,
            "params": self.params,
            "expected": self.expected,
            "observed": self.observed,
            "certification": self.certification,
            "prime": self.prime,
            "seed": self.seed,
            "elapsed_ms": round(self.elapsed_ms, 1) if timing and self.elapsed_ms is not None else None,
            "pass": self.passed,
        }


def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)


def _cert(c: Certification) -> str:
    return c.value


def criterion_lemma(cfg: SearchConfig) -> dict:
    p1 = [(k, n) for k in range(4, 31) for n in range(3, 31) if not check_lemma_part1(k, n)]
    p2 = [n for n in range(5, 61) if not check_lemma_part2(n)]
    observed = {
        "part1_failures": p1,
        "part2_failures": p2,
        "C(9,3)": binomial(9, 3),
        "C(10,5)": binomial(10, 5),
        "control_part1(3,3)": check_lemma_part1(3, 3),
        "control_part1(3,4)": check_lemma_part1(3, 4),
    }
    expected = {
        "part1_failures": [],
        "part2_failures": [],
        "C(9,3)": 84,
        "C(10,5)": 252,
        "control_part1(3,3)": False,
        "control_part1(3,4)": False,
    }
    ok = observed == expected and binomial(9, 3) > 4**3 and binomial(10, 5) > 3**5
    return dict(params={"k": "4..30", "n_part1": "3..30", "n_part2": "5..60"},
                expected=expected, observed=observed, passed=ok, limit_s=1.0)


def criterion_ineq_scan(cfg: SearchConfig) -> dict:
    observed = {"16..70": scan_ineq(4, 16, 70), "71..80": scan_ineq(4, 71, 80)}
    expected = {"16..70": [], "71..80": list(range(71, 81))}
    return dict(params={"n": 4}, expected=expected, observed=observed,
                passed=observed == expected, limit_s=1.0)


def _two_seed_rank(spec: LinearSystemSpec, cfg: SearchConfig) -> list[dict]:
    out = []
    for t in range(2):
        sd = derived_seed(cfg.seed, t)
        dim = system_dimension(spec, sample_points(spec.n, spec.s, sd, cfg.p))
        out.append({"seed": sd, "rank": dim.rank, "certification": _cert(dim.certification)})
    return out


def criterion_lemma71(cfg: SearchConfig, m: int = 1) -> dict:
    specs = lemma71_specs(m)
    main = _two_seed_rank(specs["main"], cfg)
    cert = verify_71_lemma(m, cfg)
    observed = {
        "main": {"system": str(specs["main"]), "rows": specs["main"].conds,
                 "cols": specs["main"].cols, "trials": main},
        "intermediate": {"system": str(specs["intermediate"]),
                         "certification": _cert(cert.intermediate.certification),
                         "ranks": list(cert.intermediate.ranks)},
        "sixteen": {"system": str(specs["sixteen"]),
                    "certification": _cert(cert.sixteen.certification),
                    "ranks": list(cert.sixteen.ranks)},
    }
    cols = specs["main"].cols
    ok = (
        all(t["rank"] == cols and t["certification"] == "CertifiedEmpty" for t in main)
        and cert.intermediate.certification is Certification.CERTIFIED_EMPTY
        and cert.sixteen.certification is Certification.CERTIFIED_EMPTY
    )
    expected = {"main_rank": cols, "certification": "CertifiedEmpty"}
    if m == 1:
        ok = ok and (specs["main"].conds, cols) == (2485, 495)
        expected["shape"] = [2485, 495]
    return dict(params={"m": m}, expected=expected, observed=observed, passed=ok,
                certification=_cert(Certification.CERTIFIED_EMPTY) if ok else None,
                limit_s=30.0 if m == 1 else 1800.0)


FLOOR_INSTANCES = [(2, 2, 1), (2, 2, 2), (2, 2, 3), (2, 3, 1), (2, 3, 2), (3, 2, 1), (3, 2, 2), (4, 2, 1)]


def criterion_floor(cfg: SearchConfig) -> dict:
    observed = {}
    for n, k, m in FLOOR_INSTANCES:
        c = verify_floor_instance(n, k, m, cfg)
        observed[f"{n},{k},{m}"] = {"system": str(c.spec), "certification": _cert(c.certification),
                                    "ranks": list(c.ranks), "cols": c.cols}
    ok = all(v["certification"] == "CertifiedEmpty" for v in observed.values())
    return dict(params={"instances": [list(t) for t in FLOOR_INSTANCES]},
                expected="CertifiedEmpty for every instance", observed=observed, passed=ok,
                certification="CertifiedEmpty" if ok else None, limit_s=120.0)


def _projectively_equal(u, v, p: int) -> bool:
    u = [int(x) % p for x in u]
    v = [int(x) % p for x in v]
    i = next((j for j, x in enumerate(u) if x), None)
    if i is None or v[i] == 0:
        return False
    return all((u[j] * v[i] - v[j] * u[i]) % p == 0 for j in range(len(u)))


def double_conic_check(cfg: SearchConfig) -> dict:
    """Kernel of L_2(4; 2^5) against the square of the conic through the 5 points."""
    pts = sample_points(2, 5, derived_seed(cfg.seed, 0), cfg.p)
    quartic_spec = LinearSystemSpec.uniform(2, 4, 2, 5)
    conic = system_kernel_vector(LinearSystemSpec.uniform(2, 2, 1, 5), pts)
    quartic = system_kernel_vector(quartic_spec, pts)
    square = multiply_forms(vector_to_form(conic, 2, 2), vector_to_form(conic, 2, 2), cfg.p)
    sq_vec = form_to_vector(square, 2, 4, cfg.p)
    dim = system_dimension(quartic_spec, pts)
    return {
        "expected_dimension": expected_dimension(quartic_spec),
        "affine_dim": dim.affine_dim,
        "kernel_is_conic_squared": quartic is not None and _projectively_equal(quartic, sq_vec, cfg.p),
    }


def criterion_alpha_p2(cfg: SearchConfig) -> dict:
    alphas = {m: alpha_symbolic(2, 5, m, cfg) for m in (1, 2, 3)}
    chud = chudnovsky_check(2, 5, [1, 2, 3], cfg)
    observed = {
        "alpha": {str(m): a.alpha for m, a in alphas.items()},
        "lower_degrees_certified": all(a.lower_degrees_certified for a in alphas.values()),
        "chudnovsky": {str(r.m): [_frac(r.ratio), _frac(r.threshold), r.holds] for r in chud},
        **double_conic_check(cfg),
    }
    expected = {
        "alpha": {"1": 2, "2": 4, "3": 6},
        "lower_degrees_certified": True,
        "chudnovsky": {str(m): ["2", "3/2", True] for m in (1, 2, 3)},
        "expected_dimension": 0,
        "affine_dim": 1,
        "kernel_is_conic_squared": True,
    }
    return dict(params={"n": 2, "s": 5, "m": [1, 2, 3]}, expected=expected, observed=observed,
                passed=observed == expected, limit_s=5.0)


CONTAINMENT_CASES = [(2, 4, 1), (3, 8, 1), (4, 16, 1)]


def criterion_containment(cfg: SearchConfig) -> dict:
    observed = {}
    ok = True
    for n, s, m in CONTAINMENT_CASES:
        v = containment_criterion_check(n, s, m, cfg)
        rec = {"reg": v.reg, "required": v.required, "alpha_nm": v.alpha_nm, "holds": v.holds}
        ok = ok and v.holds and v.alpha_result.lower_degrees_certified
        if (n, s, m) == (4, 16, 1):
            below = v.alpha_result.certificates.get(v.alpha_nm - 1)
            rec["below_alpha"] = {"d": v.alpha_nm - 1, "rank": max(below.ranks) if below else None,
                                  "conds": below.conds if below else None,
                                  "certification": _cert(below.certification) if below else None}
            ok = ok and rec["reg"] == 4 and rec["required"] == 7 and rec["alpha_nm"] == 9
            ok = ok and rec["below_alpha"] == {"d": 8, "rank": 495, "conds": 560,
                                               "certification": "CertifiedEmpty"}
        observed[f"{n},{s},{m}"] = rec
    expected = {"4,16,1": {"reg": 4, "required": 7, "alpha_nm": 9, "holds": True},
                "all": "holds"}
    return dict(params={"cases": [list(c) for c in CONTAINMENT_CASES]}, expected=expected,
                observed=observed, passed=ok, limit_s=180.0)


def random_cremona_specs(count: int, seed: int) -> list[LinearSystemSpec]:
    """Applicable degree-nonincreasing specs in P^2..P^4 with d <= 12, s <= 12.

    Steps with k > 0 are the inverses of steps with k < 0 between the same
    pair of systems, so sampling k <= 0 loses nothing.
    """
    rng = random.Random(seed)
    out: list[LinearSystemSpec] = []
    while len(out) < count:
        n = rng.choice((2, 3, 4))
        d = rng.randint(0, 12)
        s = rng.randint(n + 1, 12)
        spec = LinearSystemSpec(n, d, tuple(rng.randint(1, max(1, d)) for _ in range(s)))
        try:
            step = cremona_reduce(spec)
        except Inapplicable:
            continue
        if step.k <= 0:
            out.append(spec)
    return out


def criterion_cremona(cfg: SearchConfig, count: int = 200) -> dict:
    mismatches = []
    for i, spec in enumerate(random_cremona_specs(count, cfg.seed)):
        step = cremona_reduce(spec)
        a = system_dimension(spec, sample_points(spec.n, spec.s, derived_seed(cfg.seed, 2 * i), cfg.p))
        b = system_dimension(step.after,
                             sample_points(spec.n, step.after.s, derived_seed(cfg.seed, 2 * i + 1), cfg.p))
        if a.affine_dim != b.affine_dim:
            mismatches.append([str(spec), str(step.after), a.affine_dim, b.affine_dim])
    worked = cremona_reduce(LinearSystemSpec(2, 4, (2, 2, 2)))
    pts = sample_points(2, 3, derived_seed(cfg.seed, 0), cfg.p)
    before = system_dimension(worked.before, pts).affine_dim
    after = system_dimension(worked.after, sample_points(2, 0, 0, cfg.p)).affine_dim
    observed = {"specs": count, "mismatches": mismatches,
                "worked_case": [str(worked.before), str(worked.after), before, after]}
    expected = {"specs": count, "mismatches": [],
                "worked_case": ["L_2(4; 2^3)", "L_2(2)", 6, 6]}
    return dict(params={"count": count, "d_max": 12, "s_max": 12}, expected=expected,
                observed=observed, passed=observed == expected, limit_s=120.0)


def property_sweep(seed: int, p: int) -> dict[str, int]:
    """Deterministic randomized property checks; returns cases run per property.

    Raises AssertionError on the first violation.
    """
    rng = random.Random(seed)
    counts: dict[str, int] = {}

    def tick(key):
        counts[key] = counts.get(key, 0) + 1

    for _ in range(200):
        a = rng.randint(1, 200)
        b = rng.randint(0, a)
        assert binomial(a, b) == binomial(a, a - b)
        if b >= 1:
            assert binomial(a, b) == binomial(a - 1, b - 1) + binomial(a - 1, b)
        tick("binomial")
    for _ in range(200):
        s = rng.getrandbits(256) or 1
        n = rng.randint(1, 12)
        t = integer_nth_root_floor(s, n)
        assert t**n <= s < (t + 1) ** n
        tick("nth_root")
    for _ in range(60):
        n = rng.randint(1, 6)
        s = rng.randint(1, 300)
        r = regularity_general_points(n, s)
        assert binomial(r.r - 1 + n, n) < s <= binomial(r.r + n, n)
        tick("regularity")
    for i in range(60):
        n = rng.choice((2, 3))
        s = rng.randint(1, 7)
        d = rng.randint(0, 6)
        mults = tuple(rng.randint(1, 3) for _ in range(s))
        pts = sample_points(n, s, derived_seed(seed, 10_000 + i), p)
        spec = LinearSystemSpec(n, d, mults)
        dim = system_dimension(spec, pts)
        assert dim.affine_dim >= max(0, expected_dimension(spec))
        if dim.affine_dim > 0:
            assert system_dimension(LinearSystemSpec(n, d + 1, mults), pts).affine_dim > 0
        j = rng.randrange(s)
        raised = mults[:j] + (mults[j] + 1,) + mults[j + 1:]
        assert system_dimension(LinearSystemSpec(n, d, raised), pts).affine_dim <= dim.affine_dim
        tick("dimension")
    cfg = SearchConfig(seed=seed, trials=2, p=p)
    for n, s in ((2, 3), (2, 5), (2, 6), (3, 5)):
        alpha = {m: alpha_symbolic(n, s, m, cfg).alpha for m in (1, 2, 3, 4)}
        for a in alpha:
            assert alpha[a] * n >= a * alpha[1]
            tick("skoda")
            for b in alpha:
                if a + b in alpha:
                    assert alpha[a + b] <= alpha[a] + alpha[b]
                    tick("subadditivity")
    return counts


def criterion_properties(cfg: SearchConfig) -> dict:
    try:
        counts = property_sweep(cfg.seed, cfg.p)
        ok = sum(counts.values()) >= 500
        observed = {"cases": counts, "total": sum(counts.values()), "violations": []}
    except AssertionError as exc:
        ok = False
        observed = {"violations": [repr(exc)]}
    return dict(params={"min_cases": 500}, expected={"violations": []}, observed=observed,
                passed=ok, limit_s=None)


CRITERIA: dict[str, Callable[[SearchConfig], dict]] = {
    "1-combinatorial-lemma": criterion_lemma,
    "2-inequality-scan": criterion_ineq_scan,
    "3-lemma71-m1": criterion_lemma71,
    "4-floor-instances": criterion_floor,
    "5-alpha-five-points-P2": criterion_alpha_p2,
    "6-containment-criterion": criterion_containment,
    "7-cremona-validation": criterion_cremona,
    "8-property-suites": criterion_properties,
}
LONG_CRITERIA: dict[str, Callable[[SearchConfig], dict]] = {
    "3L-lemma71-m2": lambda cfg: criterion_lemma71(cfg, m=2),
}


def run_criterion(name: str, fn: Callable[[SearchConfig], dict], cfg: SearchConfig) -> CriterionRecord:
    t0 = time.perf_counter()
    out = fn(cfg)
    elapsed = (time.perf_counter() - t0) * 1000
    limit = out.pop("limit_s", None)
    passed = out.pop("passed")
    if limit is not None and elapsed > limit * 1000:
        passed = False
    return CriterionRecord(
        criterion=name, certification=out.pop("certification", None), prime=cfg.p, seed=cfg.seed,
        elapsed_ms=elapsed, passed=passed, limit_s=limit, **out,
    )


def run_all(cfg: SearchConfig, long: bool = False, only: set[str] | None = None,
            on_record: Callable[[CriterionRecord], None] | None = None) -> list[CriterionRecord]:
    table = dict(CRITERIA)
    if long:
        table.update(LONG_CRITERIA)
    records = []
    for name, fn in table.items():
        if only and name.split("-")[0] not in only and name not in only:
            continue
        rec = run_criterion(name, fn, cfg)
        records.append(rec)
        if on_record:
            on_record(rec)
    return records
