"""Interpolation matrices for fat-point linear systems.

A system L_n(d; m_1, ..., m_s) is the space of degree-d forms on P^n that
vanish to order m_i at the i-th point.  Columns of the interpolation matrix
are the degree-d monomials in graded-lex order; each fat point contributes
one row per partial derivative of order < m_i, evaluated in the affine chart
x_n = 1.

Very general points are modelled by uniform random points over a large
prime field.  Full column rank at one such specialization proves the system
is empty for general points; rank deficiency is only evidence.
"""

from __future__ import annotations

import enum
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field
from functools import lru_cache
from typing import TextIO

import numpy as np

from . import _kernels as K
from .bigcomb import binomial
from .exactla import DEFAULT_PRIME, EchelonAccumulator, FieldMatrix, PrimeField


class Certification(str, enum.Enum):
    CERTIFIED_EMPTY = "CertifiedEmpty"
    NONEMPTY_BY_COUNT = "NonEmptyByCount"
    EMPIRICAL_NONEMPTY = "EmpiricalNonEmpty"
    # reserved label; never assigned by rank-based certification
    EMPIRICAL_EMPTY_UNCERTIFIED = "EmpiricalEmpty-Uncertified"

    def __str__(self):
        return self.value

    @property
    def is_empty(self) -> bool:
        return self is Certification.CERTIFIED_EMPTY


@dataclass(frozen=True)
class LinearSystemSpec:
    n: int
    d: int
    mults: tuple[int, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"ambient dimension must be >= 1, got {self.n}")
        object.__setattr__(self, "mults", tuple(int(m) for m in self.mults))
        if any(m < 1 for m in self.mults):
            raise ValueError(f"multiplicities must be >= 1, got {self.mults}")

    @classmethod
    def uniform(cls, n: int, d: int, m: int, s: int) -> LinearSystemSpec:
        return cls(n, d, (m,) * s)

    @property
    def s(self) -> int:
        return len(self.mults)

    @property
    def cols(self) -> int:
        return binomial(self.d + self.n, self.n) if self.d >= 0 else 0

    @property
    def conds(self) -> int:
        return sum(binomial(m - 1 + self.n, self.n) for m in self.mults)

    def __str__(self):
        groups: list[str] = []
        i = 0
        while i < len(self.mults):
            j = i
            while j < len(self.mults) and self.mults[j] == self.mults[i]:
                j += 1
            groups.append(f"{self.mults[i]}^{j - i}" if j - i > 1 else str(self.mults[i]))
            i = j
        if not groups:
            return f"L_{self.n}({self.d})"
        return f"L_{self.n}({self.d}; {', '.join(groups)})"


@dataclass(frozen=True)
class PointSet:
    n: int
    s: int
    p: int
    seed: int
    coords: tuple[tuple[int, ...], ...]

    def affine(self) -> np.ndarray:
        """s x n array of the affine coordinates (the chart x_n = 1)."""
        return np.array([c[:-1] for c in self.coords], dtype=np.uint64).reshape(self.s, self.n)


@dataclass(frozen=True)
class SystemDimension:
    spec: LinearSystemSpec
    cols: int
    conds: int
    rank: int
    affine_dim: int
    certification: Certification
    p: int
    seed: int | None


@dataclass(frozen=True)
class EmptinessCertificate:
    spec: LinearSystemSpec
    certification: Certification
    p: int
    seeds: tuple[int, ...] = ()
    ranks: tuple[int, ...] = ()
    cols: int = 0
    conds: int = 0
    dims: tuple[SystemDimension, ...] = field(default=(), repr=False)


@lru_cache(maxsize=256)
def _monomials(n: int, d: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((d,),)
    return tuple((a,) + rest for a in range(d, -1, -1) for rest in _monomials(n - 1, d - a))


def monomials(n: int, d: int) -> list[tuple[int, ...]]:
    """Exponent vectors (a_0, ..., a_n) of degree d, graded-lex order."""
    if d < 0:
        return []
    return list(_monomials(n, d))


@lru_cache(maxsize=64)
def _exponent_array(n: int, d: int) -> np.ndarray:
    mons = _monomials(n, d)
    return np.array([m[:n] for m in mons], dtype=np.int64).reshape(len(mons), n)


@lru_cache(maxsize=64)
def _derivative_indices(n: int, order: int) -> np.ndarray:
    """Multi-indices beta in n variables with |beta| <= order, by total order."""
    rows = [m for k in range(order + 1) for m in _monomials(n - 1, k)]
    return np.array(rows, dtype=np.int64).reshape(len(rows), n)


@lru_cache(maxsize=64)
def _falling_factorials(d: int, p: int) -> np.ndarray:
    ff = np.zeros((d + 1, d + 1), dtype=np.uint64)
    for a in range(d + 1):
        acc = 1
        for b in range(a + 1):
            ff[a, b] = acc % p
            acc *= a - b
    return ff


def derived_seed(seed: int, trial: int) -> int:
    """Independent 63-bit seed for the given trial of a base seed."""
    state = np.random.SeedSequence([int(seed), int(trial)]).generate_state(2, dtype=np.uint32)
    return (int(state[0]) << 31) ^ int(state[1])


def sample_points(n: int, s: int, seed: int, p: int = DEFAULT_PRIME) -> PointSet:
    """s distinct random points (x_1, ..., x_n, 1) with coordinates uniform in F_p."""
    if s < 0:
        raise ValueError(f"number of points must be nonnegative, got {s}")
    if p**n < s:
        raise ValueError(f"F_{p} has only {p**n} affine points, cannot host {s}")
    rng = np.random.default_rng(seed)
    seen: set[tuple[int, ...]] = set()
    coords: list[tuple[int, ...]] = []
    while len(coords) < s:
        x = tuple(int(v) for v in rng.integers(0, p, size=n, dtype=np.uint64)) + (1,)
        if x not in seen:
            seen.add(x)
            coords.append(x)
    return PointSet(n=n, s=s, p=p, seed=seed, coords=tuple(coords))


def _check_char(d: int, p: int) -> None:
    if p <= d:
        raise ValueError(f"prime {p} must exceed the degree {d}")


def condition_rows(point: Sequence[int], m: int, n: int, d: int, p: int = DEFAULT_PRIME) -> np.ndarray:
    """The C(m-1+n, n) derivative conditions of an m-fold point, as uint64 rows.

    ``point`` is either the n affine coordinates or the full homogeneous tuple
    with last coordinate 1.
    """
    _check_char(d, p)
    fld = PrimeField(p)
    pt = [int(c) % p for c in point]
    if len(pt) == n + 1:
        if pt[-1] != 1:
            raise ValueError("homogeneous point must be normalised to last coordinate 1")
        pt = pt[:-1]
    if len(pt) != n:
        raise ValueError(f"point has {len(pt)} coordinates, expected {n}")
    betas = _derivative_indices(n, m - 1)
    if d < 0:
        return np.zeros((len(betas), 0), dtype=np.uint64)
    return K.derivative_rows(
        np.array(pt, dtype=np.uint64), _exponent_array(n, d), betas, _falling_factorials(d, p),
        np.uint64(p), fld.mode,
    )


def _blocks(spec: LinearSystemSpec, pts: PointSet) -> Iterator[np.ndarray]:
    aff = pts.affine()
    for i, m in enumerate(spec.mults):
        yield condition_rows(aff[i], m, spec.n, spec.d, pts.p)


def _check_points(spec: LinearSystemSpec, pts: PointSet) -> None:
    if pts.n != spec.n or pts.s != spec.s:
        raise ValueError(f"point set ({pts.n}, {pts.s}) does not match {spec}")


def system_matrix(spec: LinearSystemSpec, pts: PointSet) -> FieldMatrix:
    """The full conds x cols interpolation matrix."""
    _check_points(spec, pts)
    if spec.d >= 0:
        _check_char(spec.d, pts.p)
    blocks = list(_blocks(spec, pts))
    data = np.vstack(blocks) if blocks else np.zeros((0, spec.cols), dtype=np.uint64)
    return FieldMatrix(data, pts.p)


def _accumulate(spec: LinearSystemSpec, pts: PointSet) -> EchelonAccumulator:
    acc = EchelonAccumulator(spec.cols, pts.p)
    for block in _blocks(spec, pts):
        if not acc.add(block):
            break
    return acc


def system_dimension(spec: LinearSystemSpec, pts: PointSet) -> SystemDimension:
    """Rank and dimension of ``spec`` at the given points.

    Rows are streamed one point at a time and elimination stops as soon as
    full column rank is reached.
    """
    _check_points(spec, pts)
    if spec.d < 0:
        return SystemDimension(spec, 0, spec.conds, 0, 0, Certification.CERTIFIED_EMPTY, pts.p, pts.seed)
    _check_char(spec.d, pts.p)
    cols, conds = spec.cols, spec.conds
    r = _accumulate(spec, pts).rank
    if r == cols:
        cert = Certification.CERTIFIED_EMPTY
    elif cols > conds:
        cert = Certification.NONEMPTY_BY_COUNT
    else:
        cert = Certification.EMPIRICAL_NONEMPTY
    return SystemDimension(spec, cols, conds, r, cols - r, cert, pts.p, pts.seed)


def system_kernel_vector(spec: LinearSystemSpec, pts: PointSet) -> np.ndarray | None:
    """Coefficients (graded-lex) of a nonzero form in the system, or None."""
    _check_points(spec, pts)
    if spec.d < 0:
        return None
    _check_char(spec.d, pts.p)
    return _accumulate(spec, pts).kernel_vector()


def expected_dimension(spec: LinearSystemSpec) -> int:
    """Virtual dimension C(d+n, n) - sum C(m_i-1+n, n); may be negative."""
    return spec.cols - spec.conds


def is_empty_certified(
    spec: LinearSystemSpec, seed: int, trials: int = 2, p: int = DEFAULT_PRIME
) -> EmptinessCertificate:
    """Try up to ``trials`` random point sets to prove ``spec`` empty.

    The point set of trial t depends only on (seed, t, n, s), so systems
    sharing n and s are evaluated at the same points.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    PrimeField(p)
    if spec.d < 0:
        return EmptinessCertificate(spec, Certification.CERTIFIED_EMPTY, p, cols=0, conds=spec.conds)
    if spec.cols > spec.conds:
        return EmptinessCertificate(
            spec, Certification.NONEMPTY_BY_COUNT, p, cols=spec.cols, conds=spec.conds
        )
    seeds, ranks, dims = [], [], []
    for t in range(trials):
        sd = derived_seed(seed, t)
        dim = system_dimension(spec, sample_points(spec.n, spec.s, sd, p))
        seeds.append(sd)
        ranks.append(dim.rank)
        dims.append(dim)
        if dim.certification is Certification.CERTIFIED_EMPTY:
            break
    cert = dims[-1].certification
    return EmptinessCertificate(
        spec, cert, p, tuple(seeds), tuple(ranks), spec.cols, spec.conds, tuple(dims)
    )


def vector_to_form(vec, n: int, d: int) -> dict[tuple[int, ...], int]:
    """Sparse form {exponent: coefficient} from a graded-lex coefficient vector."""
    return {mon: int(c) for mon, c in zip(_monomials(n, d), vec) if int(c)}


def form_to_vector(form: dict[tuple[int, ...], int], n: int, d: int, p: int) -> list[int]:
    return [form.get(mon, 0) % p for mon in _monomials(n, d)]


def multiply_forms(f: dict, g: dict, p: int) -> dict[tuple[int, ...], int]:
    out: dict[tuple[int, ...], int] = {}
    for a, x in f.items():
        for b, y in g.items():
            e = tuple(i + j for i, j in zip(a, b))
            out[e] = (out.get(e, 0) + x * y) % p
    return {e: c for e, c in out.items() if c}


def write_matrix(stream: TextIO, spec: LinearSystemSpec, pts: PointSet) -> None:
    """Dump the interpolation matrix: header ``n d p rows cols``, then one row per line."""
    mat = system_matrix(spec, pts)
    stream.write(f"{spec.n} {spec.d} {pts.p} {mat.rows} {mat.cols}\n")
    for row in mat.data:
        stream.write(" ".join(str(int(x)) for x in row) + "\n")


def read_matrix(stream: TextIO) -> tuple[int, int, FieldMatrix]:
    """Parse a dump written by :func:`write_matrix`; returns (n, d, matrix)."""
    header = stream.readline().split()
    if len(header) != 5:
        raise ValueError(f"bad matrix header: {header!r}")
    n, d, p, rows, cols = (int(x) for x in header)
    data = np.zeros((rows, cols), dtype=np.uint64)
    for i in range(rows):
        vals = stream.readline().split()
        if len(vals) != cols:
            raise ValueError(f"row {i} has {len(vals)} entries, expected {cols}")
        data[i] = [int(v) for v in vals]
    return n, d, FieldMatrix(data, p)
