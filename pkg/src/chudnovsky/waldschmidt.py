"""Initial degrees of symbolic powers of general points and derived bounds.

For s general points in P^n the degree-d part of I^(m) is the linear system
L_n(d; m^s), so alpha(I^(m)) is the least d at which that system stops being
(certifiably) empty.  On top of this sit the Waldschmidt upper estimates
alpha(I^(m))/m, the floor(s^(1/n)) lower bound, the Chudnovsky comparison and
the regularity criterion for I^(nm) in M^((n-1)m) I^m.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .bigcomb import binomial, integer_nth_root_floor, regularity_general_points
from .exactla import DEFAULT_PRIME, PrimeField
from .fatpoints import Certification, EmptinessCertificate, LinearSystemSpec, is_empty_certified

DEFAULT_SEED = 20180417


@dataclass(frozen=True)
class SearchConfig:
    seed: int = DEFAULT_SEED
    trials: int = 2
    p: int = DEFAULT_PRIME

    def __post_init__(self):
        PrimeField(self.p)
        if self.trials < 1:
            raise ValueError("trials must be >= 1")


class AlphaSearchError(RuntimeError):
    """The search cap certified empty, contradicting alpha(I^(m)) <= m alpha(I)."""


def count_alpha(n: int, s: int) -> int:
    """Least d with more degree-d monomials than points; an upper bound for alpha(I)."""
    d = 0
    while binomial(d + n, n) <= s:
        d += 1
    return d


@dataclass(frozen=True)
class AlphaResult:
    n: int
    s: int
    m: int
    alpha: int
    search_cap: int
    certificates: dict[int, EmptinessCertificate] = field(repr=False)
    p: int = DEFAULT_PRIME
    seed: int = DEFAULT_SEED

    @property
    def certification(self) -> Certification:
        """How nonemptiness at degree alpha was established."""
        return self.certificates[self.alpha].certification

    @property
    def lower_degrees_certified(self) -> bool:
        """Degree alpha - 1 carries a full-rank certificate (so every lower degree does).

        Degrees below m are empty for any point, so alpha == m needs nothing.
        """
        if self.alpha == self.m:
            return True
        cert = self.certificates.get(self.alpha - 1)
        return cert is not None and cert.certification is Certification.CERTIFIED_EMPTY

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.alpha, self.m)


def alpha_symbolic(
    n: int, s: int, m: int, config: SearchConfig = SearchConfig(), search: str = "binary"
) -> AlphaResult:
    """alpha(I^(m)) for s general points in P^n.

    Degrees are searched in [m, m * count_alpha(n, s)].  A degree counts as
    empty only when it is CertifiedEmpty; emptiness is downward closed in d,
    so binary search is valid.  ``search="linear"`` scans upward instead and
    records a certificate for every degree it visits.
    """
    if s < 1 or m < 1:
        raise ValueError("s and m must be positive")
    cap = m * count_alpha(n, s)
    certs: dict[int, EmptinessCertificate] = {}

    def empty(d: int) -> bool:
        if d not in certs:
            spec = LinearSystemSpec.uniform(n, d, m, s)
            certs[d] = is_empty_certified(spec, config.seed, config.trials, config.p)
        return certs[d].certification is Certification.CERTIFIED_EMPTY

    if search == "linear":
        d = m
        while d <= cap and empty(d):
            d += 1
        if d > cap:
            raise AlphaSearchError(f"L_{n}({cap}; {m}^{s}) certified empty at the search cap")
        alpha = d
    elif search == "binary":
        if empty(cap):
            raise AlphaSearchError(f"L_{n}({cap}; {m}^{s}) certified empty at the search cap")
        # empty(lo) holds (or lo < m, trivially empty); empty(hi) fails
        lo, hi = m - 1, cap
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if empty(mid):
                lo = mid
            else:
                hi = mid
        alpha = hi
    else:
        raise ValueError(f"unknown search strategy {search!r}")
    return AlphaResult(n, s, m, alpha, cap, certs, config.p, config.seed)


@dataclass(frozen=True)
class WaldschmidtReport:
    n: int
    s: int
    samples: list[tuple[int, int, Fraction]]
    upper_bound: Fraction
    floor_lower: int
    chudnovsky_threshold: Fraction
    alphas: list[AlphaResult] = field(repr=False, default_factory=list)


def waldschmidt_report(n: int, s: int, m_max: int, config: SearchConfig = SearchConfig()) -> WaldschmidtReport:
    """Sampled upper estimates alpha(I^(m))/m for m <= m_max against floor(s^(1/n))."""
    if m_max < 1:
        raise ValueError("m_max must be >= 1")
    alphas = [alpha_symbolic(n, s, m, config) for m in range(1, m_max + 1)]
    samples = [(a.m, a.alpha, a.ratio) for a in alphas]
    return WaldschmidtReport(
        n=n,
        s=s,
        samples=samples,
        upper_bound=min(r for _, _, r in samples),
        floor_lower=integer_nth_root_floor(s, n),
        chudnovsky_threshold=Fraction(alphas[0].alpha + n - 1, n),
        alphas=alphas,
    )


@dataclass(frozen=True)
class ChudnovskyRecord:
    m: int
    alpha_m: int
    ratio: Fraction
    threshold: Fraction
    holds: bool


def chudnovsky_check(
    n: int, s: int, m_list, config: SearchConfig = SearchConfig()
) -> list[ChudnovskyRecord]:
    """Compare alpha(I^(m))/m with (alpha(I) + n - 1)/n for each m, exactly."""
    m_list = list(m_list)
    if not m_list:
        raise ValueError("m_list must be nonempty")
    threshold = Fraction(alpha_symbolic(n, s, 1, config).alpha + n - 1, n)
    out = []
    for m in m_list:
        a = alpha_symbolic(n, s, m, config).alpha
        ratio = Fraction(a, m)
        out.append(ChudnovskyRecord(m, a, ratio, threshold, ratio >= threshold))
    return out


@dataclass(frozen=True)
class ContainmentVerdict:
    n: int
    s: int
    m: int
    reg: int
    required: int
    alpha_nm: int
    holds: bool
    alpha_result: AlphaResult = field(repr=False)


def containment_criterion_check(
    n: int, s: int, m: int, config: SearchConfig = SearchConfig()
) -> ContainmentVerdict:
    """Check alpha(I^(nm)) >= (n-1)m + m reg(I).

    This numeric inequality is a sufficient condition for
    I^(nm) in M^((n-1)m) I^m; the ideal containment itself is not tested.
    """
    if n < 2 or s < 1 or m < 1:
        raise ValueError("need n >= 2, s >= 1, m >= 1")
    reg = regularity_general_points(n, s).reg
    required = (n - 1) * m + m * reg
    res = alpha_symbolic(n, s, n * m, config)
    return ContainmentVerdict(n, s, m, reg, required, res.alpha, res.alpha >= required, res)


def floor_instance_spec(n: int, k: int, m: int) -> LinearSystemSpec:
    """L_n(km - 1; m^(k^n)), whose emptiness gives alpha(I^(m)) >= km for k^n points."""
    return LinearSystemSpec.uniform(n, k * m - 1, m, k**n)


def verify_floor_instance(n: int, k: int, m: int, config: SearchConfig = SearchConfig()) -> EmptinessCertificate:
    if min(n, k, m) < 1:
        raise ValueError("n, k, m must be positive")
    return is_empty_certified(floor_instance_spec(n, k, m), config.seed, config.trials, config.p)


@dataclass(frozen=True)
class LemmaCertificate:
    """Certificates for the 71-point bound 9/4 in P^4 at one m."""

    m: int
    main: EmptinessCertificate
    intermediate: EmptinessCertificate
    sixteen: EmptinessCertificate

    @property
    def holds(self) -> bool:
        return all(
            c.certification is Certification.CERTIFIED_EMPTY
            for c in (self.main, self.intermediate, self.sixteen)
        )


def lemma71_specs(m: int) -> dict[str, LinearSystemSpec]:
    return {
        "main": LinearSystemSpec.uniform(4, 9 * m - 1, 4 * m, 71),
        "intermediate": LinearSystemSpec(4, 9 * m - 1, (8 * m,) * 4 + (4 * m,) * 7),
        "sixteen": LinearSystemSpec.uniform(4, 8 * m - 1, 4 * m, 16),
    }


def verify_71_lemma(m: int, config: SearchConfig = SearchConfig()) -> LemmaCertificate:
    """Certify L_4(9m-1; (4m)^71) empty, plus the two auxiliary systems

    L_4(9m-1; (8m)^4, (4m)^7) and L_4(8m-1; (4m)^16).
    """
    if m < 1:
        raise ValueError("m must be positive")
    certs = {
        key: is_empty_certified(spec, config.seed, config.trials, config.p)
        for key, spec in lemma71_specs(m).items()
    }
    return LemmaCertificate(m=m, **certs)
