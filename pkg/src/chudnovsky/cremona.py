"""Standard Cremona reduction of fat-point linear systems in P^n.

The standard Cremona transformation based at n+1 of the points sends
L_n(d; m_1, ..., m_s) to L_n(d + k; m_1 + k, ..., m_{n+1} + k, m_{n+2}, ...)
with k = (n-1) d - (m_1 + ... + m_{n+1}).  It is an isomorphism in
codimension one of the blow-up, so the dimension of the system is preserved
as long as every transformed multiplicity and the transformed degree stay
nonnegative.  Steps outside that range are refused.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from .fatpoints import LinearSystemSpec


class Inapplicable(ValueError):
    """The Cremona step would leave the nonnegative regime."""


@dataclass(frozen=True)
class ReductionStep:
    before: LinearSystemSpec
    after: LinearSystemSpec
    k: int
    base_indices: tuple[int, ...]


def cremona_transform(n: int, d: int, mults: Sequence[int], indices: Sequence[int]) -> tuple[int, int, list[int]]:
    """Raw transformation at the given n+1 point indices.

    Returns (k, new_degree, new_multiplicities) with no validity checks and
    zero or negative multiplicities kept in place, so that applying it twice
    to the same indices is the identity.
    """
    indices = list(indices)
    if len(indices) != n + 1 or len(set(indices)) != n + 1:
        raise ValueError(f"need {n + 1} distinct base indices, got {indices}")
    k = (n - 1) * d - sum(mults[i] for i in indices)
    new = list(mults)
    for i in indices:
        new[i] += k
    return k, d + k, new


def _base_indices(mults: Sequence[int], n: int) -> tuple[int, ...]:
    # largest multiplicities first, ties by original position
    order = sorted(range(len(mults)), key=lambda i: (-mults[i], i))
    return tuple(order[: n + 1])


def cremona_reduce(spec: LinearSystemSpec) -> ReductionStep:
    """One step based at the n+1 largest multiplicities.

    Zero multiplicities produced by the step are dropped from ``after``; the
    order of the surviving points is kept.
    """
    n = spec.n
    if spec.s < n + 1:
        raise Inapplicable(f"{spec} has fewer than {n + 1} points")
    if spec.d < 0:
        raise Inapplicable(f"{spec} has negative degree")
    idx = _base_indices(spec.mults, n)
    k, d2, m2 = cremona_transform(n, spec.d, spec.mults, idx)
    if d2 < 0 or any(m < 0 for m in m2):
        raise Inapplicable(f"{spec}: step with k = {k} gives degree {d2}, multiplicities {m2}")
    after = LinearSystemSpec(n, d2, tuple(m for m in m2 if m > 0))
    return ReductionStep(spec, after, k, idx)


def reduce_fully(spec: LinearSystemSpec) -> tuple[list[ReductionStep], LinearSystemSpec]:
    """Apply degree-lowering steps (k < 0) until none applies.

    Terminates since each accepted step strictly lowers the degree.
    """
    steps: list[ReductionStep] = []
    current = spec
    while True:
        try:
            step = cremona_reduce(current)
        except Inapplicable:
            break
        if step.k >= 0:
            break
        steps.append(step)
        current = step.after
    return steps, current


def format_system(spec: LinearSystemSpec) -> str:
    """``(d; m1, m2, ...)`` as one line of a reduction chain."""
    return f"({spec.d}; {', '.join(str(m) for m in spec.mults)})"


def format_chain(steps: Sequence[ReductionStep], terminal: LinearSystemSpec) -> list[str]:
    lines = [format_system(s.before) for s in steps]
    lines.append(format_system(terminal))
    return lines
