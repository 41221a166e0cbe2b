"""Dense linear algebra over a word-sized prime field.

Rank and kernel vectors are computed by streaming rows into a semi-echelon
basis, so a tall matrix never needs more than ``cols * cols`` words of
working memory.  This is what makes the 23430 x 5985 interpolation matrix
of 71 eightfold points in P^4 tractable.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from sympy import isprime

from . import _kernels as K

MERSENNE61 = (1 << 61) - 1
DEFAULT_PRIME = MERSENNE61

# rows reduced per compiled call; bounds the scratch block, not the result
BLOCK_ROWS = 16


@lru_cache(maxsize=None)
def _checked_prime(p: int) -> int:
    if not isinstance(p, (int, np.integer)) or p <= 2 or p >= 1 << 63 or not isprime(int(p)):
        raise ValueError(f"modulus must be an odd prime below 2**63, got {p}")
    return int(p)


@dataclass(frozen=True)
class PrimeField:
    p: int = DEFAULT_PRIME

    def __post_init__(self):
        _checked_prime(self.p)

    @property
    def mode(self) -> int:
        if self.p == MERSENNE61:
            return K.MODE_MERSENNE
        if self.p < 1 << 32:
            return K.MODE_SMALL
        return K.MODE_GENERIC

    def inv(self, a: int) -> int:
        return pow(int(a), -1, self.p)


class FieldMatrix:
    """An immutable dense matrix with entries in [0, p)."""

    def __init__(self, entries, field: PrimeField | int = DEFAULT_PRIME):
        if not isinstance(field, PrimeField):
            field = PrimeField(int(field))
        self.field = field
        arr = np.asarray(entries)
        if arr.ndim != 2:
            raise ValueError(f"expected a 2-d array, got shape {arr.shape}")
        if arr.dtype == np.uint64 and (arr.size == 0 or int(arr.max()) < field.p):
            data = arr.copy()
        else:
            # arbitrary (possibly negative or huge) integers: reduce exactly
            obj = np.asarray(arr, dtype=object) % field.p
            data = obj.astype(np.uint64) if obj.size else np.zeros(arr.shape, np.uint64)
        data.flags.writeable = False
        self._data = data

    @classmethod
    def zeros(cls, rows: int, cols: int, field=DEFAULT_PRIME) -> FieldMatrix:
        return cls(np.zeros((rows, cols), dtype=np.uint64), field)

    @classmethod
    def identity(cls, size: int, field=DEFAULT_PRIME) -> FieldMatrix:
        return cls(np.eye(size, dtype=np.uint64), field)

    @property
    def data(self) -> np.ndarray:
        return self._data

    @property
    def shape(self) -> tuple[int, int]:
        return self._data.shape

    @property
    def rows(self) -> int:
        return self._data.shape[0]

    @property
    def cols(self) -> int:
        return self._data.shape[1]

    @property
    def p(self) -> int:
        return self.field.p

    def transpose(self) -> FieldMatrix:
        return FieldMatrix(np.ascontiguousarray(self._data.T), self.field)

    def matvec(self, v) -> np.ndarray:
        """Exact product with an integer vector, returned as object residues."""
        v = np.asarray(v, dtype=object)
        return (self._data.astype(object) @ v) % self.p

    def __eq__(self, other):
        return (
            isinstance(other, FieldMatrix)
            and self.p == other.p
            and self.shape == other.shape
            and np.array_equal(self._data, other._data)
        )

    def __repr__(self):
        return f"FieldMatrix({self.rows}x{self.cols} over F_{self.p})"


@dataclass(frozen=True)
class RankResult:
    rank: int
    pivot_cols: tuple[int, ...]


class EchelonAccumulator:
    """Row space of a stream of row blocks, kept in semi-echelon form.

    Blocks are uint64 arrays already reduced into [0, p).  ``add`` returns
    True while more rows could still raise the rank.
    """

    def __init__(self, cols: int, field: PrimeField | int = DEFAULT_PRIME):
        if not isinstance(field, PrimeField):
            field = PrimeField(int(field))
        self.field = field
        self.cols = cols
        self._basis = np.zeros((max(cols, 1), max(cols, 1)), dtype=np.uint64)
        self._pivots = np.zeros(max(cols, 1), dtype=np.int64)
        self.rank = 0
        self.rows_seen = 0

    @property
    def full(self) -> bool:
        return self.rank == self.cols

    def add(self, block: np.ndarray) -> bool:
        if self.full:
            return False
        block = np.asarray(block, dtype=np.uint64)
        if block.ndim != 2 or block.shape[1] != self.cols:
            raise ValueError(f"block of shape {block.shape} does not have {self.cols} columns")
        p = np.uint64(self.field.p)
        mode = self.field.mode
        for start in range(0, block.shape[0], BLOCK_ROWS):
            chunk = np.array(block[start : start + BLOCK_ROWS], dtype=np.uint64, order="C")
            self.rows_seen += chunk.shape[0]
            self.rank = int(K.absorb_block(chunk, self._basis, self._pivots, self.rank, p, mode))
            if self.full:
                return False
        return True

    def result(self) -> RankResult:
        return RankResult(self.rank, tuple(sorted(int(c) for c in self._pivots[: self.rank])))

    def kernel_vector(self) -> np.ndarray | None:
        """A nonzero vector orthogonal to every row added so far, or None."""
        if self.full:
            return None
        pivots = set(int(c) for c in self._pivots[: self.rank])
        free = next(c for c in range(self.cols) if c not in pivots)
        return K.kernel_from_basis(
            self._basis, self._pivots, self.rank, free, np.uint64(self.field.p), self.field.mode
        )


def _accumulate(m: FieldMatrix) -> EchelonAccumulator:
    acc = EchelonAccumulator(m.cols, m.field)
    if m.rows and m.cols:
        acc.add(m.data)
    return acc


def rank(m: FieldMatrix) -> RankResult:
    """Rank over F_p with the pivot columns of the row-echelon form."""
    return _accumulate(m).result()


def kernel_vector(m: FieldMatrix) -> np.ndarray | None:
    """Nonzero v with m v = 0, or None when m has full column rank."""
    if m.cols == 0:
        return None
    return _accumulate(m).kernel_vector()


def rank_of_blocks(blocks: Iterable[np.ndarray], cols: int, field=DEFAULT_PRIME) -> RankResult:
    """Rank of the matrix formed by stacking ``blocks``, consumed lazily."""
    acc = EchelonAccumulator(cols, field)
    for b in blocks:
        if not acc.add(b):
            break
    return acc.result()
