"""Command-line front end.

Every command accepts ``--prime``, ``--seed``, ``--trials`` and ``--json``.
The seed falls back to the ``CHUDNOVSKY_SEED`` environment variable and then
to a fixed default, so identical invocations give byte-identical output.

Exit codes: 0 success, 1 a verification did not hold, 2 invalid arguments.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import bigcomb, cremona, fatpoints, verify, waldschmidt
from .exactla import DEFAULT_PRIME, PrimeField
from .fatpoints import LinearSystemSpec
from .waldschmidt import DEFAULT_SEED, SearchConfig

SEED_ENV = "CHUDNOVSKY_SEED"


class UsageError(Exception):
    pass


def parse_mults(text: str) -> tuple[int, ...]:
    """``8x4,4x7`` -> four 8s then seven 4s; a bare ``3`` is one point."""
    out: list[int] = []
    if not text.strip():
        return ()
    for part in text.split(","):
        part = part.strip()
        try:
            if "x" in part:
                m, count = part.split("x")
                out.extend([int(m)] * int(count))
            else:
                out.append(int(part))
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad multiplicity group {part!r}") from None
    return tuple(out)


def parse_range(text: str) -> range:
    """``4..30`` (inclusive) or a single integer."""
    try:
        if ".." in text:
            lo, hi = text.split("..")
            return range(int(lo), int(hi) + 1)
        v = int(text)
        return range(v, v + 1)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}") from None


def parse_int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad integer list {text!r}") from None


def _jsonable(x):
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)
    if isinstance(x, fatpoints.Certification):
        return x.value
    if isinstance(x, LinearSystemSpec):
        return str(x)
    raise TypeError(f"not serialisable: {type(x)}")


class Printer:
    def __init__(self, args, cfg: SearchConfig):
        self.json = args.json
        self.cfg = cfg

    def record(self, kind: str, text: str, **fields):
        if self.json:
            rec = {"record": kind, **fields, "prime": self.cfg.p, "seed": self.cfg.seed}
            print(json.dumps(rec, default=_jsonable, sort_keys=False))
        else:
            print(text)


def _config(args) -> SearchConfig:
    seed = args.seed
    if seed is None:
        env = os.environ.get(SEED_ENV)
        try:
            seed = int(env) if env else DEFAULT_SEED
        except ValueError:
            raise UsageError(f"{SEED_ENV}={env!r} is not an integer") from None
    try:
        return SearchConfig(seed=seed, trials=args.trials, p=args.prime)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _spec(args) -> LinearSystemSpec:
    try:
        spec = LinearSystemSpec(args.n, args.d, args.mults)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return spec


def _check_degree(cfg: SearchConfig, d: int):
    if d >= cfg.p:
        raise UsageError(f"prime {cfg.p} must exceed the degree {d}")


def cmd_dim(args, cfg, out: Printer) -> int:
    spec = _spec(args)
    _check_degree(cfg, spec.d)
    pts = fatpoints.sample_points(spec.n, spec.s, fatpoints.derived_seed(cfg.seed, 0), cfg.p)
    dim = fatpoints.system_dimension(spec, pts)
    note = " (negative degree: empty by convention)" if spec.d < 0 else ""
    out.record(
        "dim",
        f"{spec}: cols {dim.cols}, conds {dim.conds}, rank {dim.rank}, "
        f"affine_dim {dim.affine_dim}, expected {fatpoints.expected_dimension(spec)}, "
        f"{dim.certification}{note}",
        system=spec, cols=dim.cols, conds=dim.conds, rank=dim.rank, affine_dim=dim.affine_dim,
        expected_dimension=fatpoints.expected_dimension(spec), certification=dim.certification,
        point_seed=pts.seed,
    )
    if args.dump:
        with open(args.dump, "w") as fh:
            fatpoints.write_matrix(fh, spec, pts)
    return 0


def _alpha_text(a: waldschmidt.AlphaResult) -> str:
    below = "certified" if a.lower_degrees_certified else "NOT certified"
    return (f"alpha(I^({a.m})) = {a.alpha} for {a.s} general points in P^{a.n} "
            f"[{a.certification}; lower degrees {below}; cap {a.search_cap}]")


def cmd_alpha(args, cfg, out: Printer) -> int:
    a = waldschmidt.alpha_symbolic(args.n, args.s, args.m, cfg)
    out.record("alpha", _alpha_text(a), n=a.n, s=a.s, m=a.m, alpha=a.alpha, search_cap=a.search_cap,
               certification=a.certification, lower_degrees_certified=a.lower_degrees_certified,
               certificates={str(d): c.certification for d, c in sorted(a.certificates.items())})
    return 0


def cmd_wdc(args, cfg, out: Printer) -> int:
    rep = waldschmidt.waldschmidt_report(args.n, args.s, args.m_max, cfg)
    for m, alpha, ratio in rep.samples:
        out.record("sample", f"m={m}: alpha={alpha}, ratio {_jsonable(ratio)}",
                   n=rep.n, s=rep.s, m=m, alpha=alpha, ratio=ratio)
    ok = rep.floor_lower <= rep.upper_bound
    out.record(
        "waldschmidt",
        f"upper estimate {_jsonable(rep.upper_bound)}, floor lower bound {rep.floor_lower}, "
        f"Chudnovsky threshold {_jsonable(rep.chudnovsky_threshold)}"
        f"{'' if ok else '  FLOOR BOUND VIOLATED'}",
        n=rep.n, s=rep.s, upper_bound=rep.upper_bound, floor_lower=rep.floor_lower,
        chudnovsky_threshold=rep.chudnovsky_threshold, consistent=ok,
    )
    return 0 if ok else 1


def cmd_chudnovsky(args, cfg, out: Printer) -> int:
    recs = waldschmidt.chudnovsky_check(args.n, args.s, args.m, cfg)
    for r in recs:
        out.record("chudnovsky",
                   f"m={r.m}: {_jsonable(r.ratio)} >= {_jsonable(r.threshold)}  "
                   f"{'holds' if r.holds else 'FAILS'}",
                   n=args.n, s=args.s, m=r.m, alpha=r.alpha_m, ratio=r.ratio,
                   threshold=r.threshold, holds=r.holds)
    return 0 if all(r.holds for r in recs) else 1


def cmd_containment(args, cfg, out: Printer) -> int:
    v = waldschmidt.containment_criterion_check(args.n, args.s, args.m, cfg)
    verdict = f"holds (alpha={v.alpha_nm} >= {v.required})" if v.holds else f"FAILS (alpha={v.alpha_nm} < {v.required})"
    out.record(
        "containment",
        f"n={v.n} s={v.s} m={v.m}: reg {v.reg}, required {v.required}, "
        f"alpha(I^({v.n * v.m})) = {v.alpha_nm}: {verdict}",
        n=v.n, s=v.s, m=v.m, reg=v.reg, required=v.required, alpha_nm=v.alpha_nm, holds=v.holds,
        certification=v.alpha_result.certification,
    )
    return 0 if v.holds else 1


def cmd_lemma(args, cfg, out: Printer) -> int:
    if args.part == 1:
        if args.k is None:
            raise UsageError("--part 1 needs --k")
        fails = [(k, n) for k in args.k for n in args.n if not bigcomb.check_lemma_part1(k, n)]
        label = f"k^n <= C(kn-n, n) for k in {args.k.start}..{args.k.stop - 1}, n in {args.n.start}..{args.n.stop - 1}"
    else:
        fails = [n for n in args.n if not bigcomb.check_lemma_part2(n)]
        label = f"3^n <= C(2n, n) for n in {args.n.start}..{args.n.stop - 1}"
    text = f"{label}: all hold" if not fails else f"{label}: fails at {fails}"
    out.record("lemma", text, part=args.part, failures=fails, holds=not fails)
    return 0 if not fails else 1


def cmd_lemma71(args, cfg, out: Printer) -> int:
    c = waldschmidt.verify_71_lemma(args.m, cfg)
    for key in ("main", "intermediate", "sixteen"):
        e = getattr(c, key)
        out.record(key, f"{e.spec}: {e.certification} (cols {e.cols}, conds {e.conds}, ranks {list(e.ranks)})",
                   system=e.spec, cols=e.cols, conds=e.conds, ranks=list(e.ranks),
                   seeds=list(e.seeds), certification=e.certification)
    return 0 if c.holds else 1


def cmd_floor(args, cfg, out: Printer) -> int:
    c = waldschmidt.verify_floor_instance(args.n, args.k, args.m, cfg)
    out.record("floor", f"{c.spec}: {c.certification} (cols {c.cols}, conds {c.conds}, ranks {list(c.ranks)})",
               system=c.spec, cols=c.cols, conds=c.conds, ranks=list(c.ranks), seeds=list(c.seeds),
               certification=c.certification)
    return 0 if c.certification.is_empty else 1


def cmd_ineq_scan(args, cfg, out: Printer) -> int:
    try:
        fails = bigcomb.scan_ineq(args.n, args.lo, args.hi)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    text = f"{len(fails)} failures" + (f": {fails}" if fails else "")
    out.record("ineq-scan", text, n=args.n, lo=args.lo, hi=args.hi, failures=fails)
    return 0 if not fails else 1


def cmd_cremona(args, cfg, out: Printer) -> int:
    spec = _spec(args)
    if args.full:
        steps, terminal = cremona.reduce_fully(spec)
    else:
        try:
            steps = [cremona.cremona_reduce(spec)]
        except cremona.Inapplicable as exc:
            out.record("cremona", f"inapplicable: {exc}", system=spec, applicable=False)
            return 0
        terminal = steps[0].after
    for st in steps:
        out.record("step", f"{cremona.format_system(st.before)} -> {cremona.format_system(st.after)}  (k = {st.k})",
                   before=st.before, after=st.after, k=st.k, base_indices=list(st.base_indices))
    out.record("terminal", "\n".join(cremona.format_chain(steps, terminal)) if args.full else
               cremona.format_system(terminal), system=terminal)
    return 0


def cmd_verify_paper(args, cfg, out: Printer) -> int:
    only = set(args.only.split(",")) if args.only else None

    def show(rec: verify.CriterionRecord):
        if not args.json:
            mark = "PASS" if rec.passed else "FAIL"
            print(f"[{mark}] {rec.criterion}  ({rec.elapsed_ms / 1000:.2f} s, prime {rec.prime}, seed {rec.seed})")
            if not rec.passed:
                print(f"       expected {rec.expected}\n       observed {rec.observed}")

    records = verify.run_all(cfg, long=args.long, only=only, on_record=show)
    if args.json:
        print(json.dumps([r.as_dict(timing=args.timing) for r in records], default=_jsonable, indent=1))
    else:
        ok = sum(r.passed for r in records)
        print(f"{ok}/{len(records)} criteria passed")
    return 0 if all(r.passed for r in records) else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--prime", type=int, default=DEFAULT_PRIME, help="field modulus (default 2^61-1)")
    common.add_argument("--seed", type=int, default=None,
                        help=f"base seed (default: ${SEED_ENV}, else {DEFAULT_SEED})")
    common.add_argument("--trials", type=int, default=2, help="random point sets per emptiness test")
    common.add_argument("--json", action="store_true", help="machine-readable output")

    parser = argparse.ArgumentParser(prog="chudnovsky", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dim", parents=[common], help="dimension of L_n(d; mults)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--mults", type=parse_mults, required=True, help="e.g. 4x71 or 8x4,4x7")
    p.add_argument("--dump", metavar="FILE", help="write the interpolation matrix")
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("alpha", parents=[common], help="alpha(I^(m)) for s general points")
    for a in ("--n", "--s", "--m"):
        p.add_argument(a, type=int, required=True)
    p.set_defaults(func=cmd_alpha)

    p = sub.add_parser("wdc", parents=[common], help="Waldschmidt upper estimates and floor bound")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--m-max", type=int, default=3)
    p.set_defaults(func=cmd_wdc)

    p = sub.add_parser("chudnovsky", parents=[common], help="Chudnovsky inequality per m")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--m", type=parse_int_list, default=[1, 2, 3], help="comma-separated m values")
    p.set_defaults(func=cmd_chudnovsky)

    p = sub.add_parser("containment", parents=[common], help="alpha(I^(nm)) >= (n-1)m + m reg(I)")
    for a in ("--n", "--s", "--m"):
        p.add_argument(a, type=int, required=True)
    p.set_defaults(func=cmd_containment)

    p = sub.add_parser("lemma", parents=[common], help="combinatorial inequalities over ranges")
    p.add_argument("--part", type=int, choices=(1, 2), required=True)
    p.add_argument("--k", type=parse_range)
    p.add_argument("--n", type=parse_range, required=True)
    p.set_defaults(func=cmd_lemma)

    p = sub.add_parser("lemma71", parents=[common], help="71 points in P^4 certificates")
    p.add_argument("--m", type=int, default=1)
    p.set_defaults(func=cmd_lemma71)

    p = sub.add_parser("floor", parents=[common], help="emptiness of L_n(km-1; m^(k^n))")
    for a in ("--n", "--k", "--m"):
        p.add_argument(a, type=int, required=True)
    p.set_defaults(func=cmd_floor)

    p = sub.add_parser("ineq-scan", parents=[common], help="scan n floor(s^(1/n)) >= n - 1 + reg")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--from", dest="lo", type=int, required=True)
    p.add_argument("--to", dest="hi", type=int, required=True)
    p.set_defaults(func=cmd_ineq_scan)

    p = sub.add_parser("cremona", parents=[common], help="Cremona reduction of L_n(d; mults)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--mults", type=parse_mults, required=True)
    p.add_argument("--full", action="store_true", help="reduce while the degree drops")
    p.set_defaults(func=cmd_cremona)

    p = sub.add_parser("verify-paper", parents=[common], help="run the full verification suite")
    p.add_argument("--long", action="store_true", help="include the m=2 71-point certificate")
    p.add_argument("--only", help="comma-separated criterion numbers, e.g. 1,2,5")
    p.add_argument("--timing", action="store_true", help="fill elapsed_ms in json output")
    p.set_defaults(func=cmd_verify_paper)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _config(args)
        PrimeField(cfg.p)
        return args.func(args, cfg, Printer(args, cfg))
    except UsageError as exc:
        parser.error(str(exc))  # exits 2
    except ValueError as exc:
        print(f"chudnovsky: error: {exc}", file=sys.stderr)
        return 2
    except waldschmidt.AlphaSearchError as exc:
        print(f"chudnovsky: search failed: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
