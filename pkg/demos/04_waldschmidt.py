"""
Initial degrees of symbolic powers
==================================

alpha(I^(m)) for s general points is the first degree whose fat-point system
is not certified empty.  Ratios alpha/m bound the Waldschmidt constant from
above; floor(s^(1/n)) bounds it from below.
"""

from chudnovsky.waldschmidt import (
    SearchConfig,
    alpha_symbolic,
    chudnovsky_check,
    containment_criterion_check,
    verify_floor_instance,
    waldschmidt_report,
)

cfg = SearchConfig(seed=2024)

res = alpha_symbolic(2, 5, 3, cfg)
print(f"alpha(I^(3)) for 5 points in P^2: {res.alpha} ({res.certification.value})")
for d, cert in sorted(res.certificates.items()):
    print(f"   d={d}: {cert.certification.value}, ranks {list(cert.ranks)} of {cert.cols}")

for n, s in ((2, 5), (2, 10), (3, 9)):
    rep = waldschmidt_report(n, s, 4, cfg)
    ratios = ", ".join(str(r) for _, _, r in rep.samples)
    print(f"P^{n}, s={s}: ratios {ratios}; upper {rep.upper_bound}, floor {rep.floor_lower}, "
          f"Chudnovsky threshold {rep.chudnovsky_threshold}")

for r in chudnovsky_check(4, 16, [1, 2], cfg):
    print(f"16 points in P^4, m={r.m}: {r.ratio} >= {r.threshold}: {r.holds}")

v = containment_criterion_check(4, 16, 1, cfg)
print(f"alpha(I^(4)) = {v.alpha_nm} vs (n-1)m + m reg = {v.required}: {v.holds}")

# emptiness of L_n(km - 1; m^(k^n)) gives the floor bound at s = k^n
for n, k, m in ((2, 3, 2), (3, 2, 2), (4, 2, 1)):
    print(verify_floor_instance(n, k, m, cfg).spec, verify_floor_instance(n, k, m, cfg).certification.value)
