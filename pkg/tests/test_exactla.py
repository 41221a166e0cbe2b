import numpy as np
import pytest

from chudnovsky.exactla import (
    MERSENNE61,
    EchelonAccumulator,
    FieldMatrix,
    PrimeField,
    kernel_vector,
    rank,
    rank_of_blocks,
)

from oracles import rank_mod_p

# one prime per arithmetic path: Mersenne fold, 64-bit product, double-and-add
PRIMES = [MERSENNE61, 1_000_003, 1_099_511_627_791]


def random_matrix(rng, rows, cols, p):
    return np.array([[int(x) for x in rng.integers(0, 2**62, size=cols)] for _ in range(rows)], dtype=object) % p


def assert_kernel(m: FieldMatrix, v):
    assert v is not None
    assert any(int(x) for x in v)
    assert not any(int(x) for x in m.matvec(v))


def test_prime_field_validation():
    with pytest.raises(ValueError):
        PrimeField(2)
    with pytest.raises(ValueError):
        PrimeField(15)
    with pytest.raises(ValueError):
        PrimeField((1 << 64) - 59)
    assert PrimeField().p == 2**61 - 1


def test_zero_and_identity():
    assert rank(FieldMatrix.zeros(5, 5)).rank == 0
    res = rank(FieldMatrix.identity(4))
    assert res.rank == 4 and res.pivot_cols == (0, 1, 2, 3)
    assert kernel_vector(FieldMatrix.identity(3)) is None
    z = FieldMatrix.zeros(2, 3)
    assert_kernel(z, kernel_vector(z))


@pytest.mark.parametrize("p", PRIMES)
def test_dependent_row(p):
    rng = np.random.default_rng(1)
    r = random_matrix(rng, 2, 3, p)
    m = FieldMatrix(np.vstack([r, (r[0] + r[1]) % p]), p)
    assert rank(m).rank == 2 == rank_mod_p(m.data.tolist(), p)
    assert_kernel(m.transpose(), kernel_vector(m.transpose()))


@pytest.mark.parametrize("p", PRIMES)
@pytest.mark.parametrize("shape,k", [((12, 9), 4), ((9, 12), 7), ((20, 20), 20), ((30, 7), 3), ((1, 5), 1)])
def test_rank_matches_oracle_on_low_rank_products(p, shape, k):
    rng = np.random.default_rng(hash((shape, k)) % 2**32)
    a = random_matrix(rng, shape[0], k, p)
    b = random_matrix(rng, k, shape[1], p)
    m = FieldMatrix((a.dot(b)) % p, p)
    expected = rank_mod_p(m.data.tolist(), p)
    res = rank(m)
    assert res.rank == expected == min(shape[0], shape[1], k)
    assert len(res.pivot_cols) == res.rank
    assert list(res.pivot_cols) == sorted(res.pivot_cols)
    if res.rank < m.cols:
        assert_kernel(m, kernel_vector(m))
    else:
        assert kernel_vector(m) is None


def test_negative_and_huge_entries_are_reduced():
    p = 101
    m = FieldMatrix([[-1, 202, 10**30]], p)
    assert m.data.tolist() == [[100, 0, 10**30 % p]]
    assert m.data.max() < p


def test_immutable():
    m = FieldMatrix.identity(3)
    with pytest.raises(ValueError):
        m.data[0, 0] = 5


def test_transpose_invariance_large():
    rng = np.random.default_rng(7)
    p = MERSENNE61
    for rows, cols, k in [(200, 300, 150), (300, 200, 200), (120, 180, 60)]:
        a = rng.integers(0, p, size=(rows, k), dtype=np.uint64).astype(object)
        b = rng.integers(0, p, size=(k, cols), dtype=np.uint64).astype(object)
        m = FieldMatrix(a.dot(b) % p, p)
        r1, r2 = rank(m).rank, rank(m.transpose()).rank
        assert r1 == r2 == min(rows, cols, k)


def test_row_operations_preserve_rank():
    rng = np.random.default_rng(11)
    p = MERSENNE61
    a = rng.integers(0, p, size=(25, 6), dtype=np.uint64).astype(object)
    b = rng.integers(0, p, size=(6, 18), dtype=np.uint64).astype(object)
    base = a.dot(b) % p
    r0 = rank(FieldMatrix(base, p)).rank
    for _ in range(5):
        perm = rng.permutation(base.shape[0])
        scale = np.array([int(x) for x in rng.integers(1, p, size=base.shape[0], dtype=np.uint64)], dtype=object)
        shuffled = (base[perm] * scale[:, None]) % p
        assert rank(FieldMatrix(shuffled, p)).rank == r0 == 6


def test_rank_deterministic():
    rng = np.random.default_rng(3)
    m = FieldMatrix(rng.integers(0, MERSENNE61, size=(40, 30), dtype=np.uint64))
    assert rank(m) == rank(m)
    assert np.array_equal(kernel_vector(m.transpose()), kernel_vector(m.transpose()))


def test_streaming_matches_whole_matrix():
    rng = np.random.default_rng(5)
    p = MERSENNE61
    a = rng.integers(0, p, size=(90, 10), dtype=np.uint64).astype(object)
    b = rng.integers(0, p, size=(10, 40), dtype=np.uint64).astype(object)
    full = FieldMatrix(a.dot(b) % p, p)
    blocks = [full.data[i : i + 7] for i in range(0, full.rows, 7)]
    assert rank_of_blocks(blocks, 40, p) == rank(full)


def test_accumulator_stops_when_full():
    acc = EchelonAccumulator(3)
    assert acc.add(np.eye(3, dtype=np.uint64)) is False
    assert acc.full and acc.add(np.ones((4, 3), dtype=np.uint64)) is False
    assert acc.rows_seen == 3
    with pytest.raises(ValueError):
        EchelonAccumulator(3).add(np.ones((2, 4), dtype=np.uint64))


def test_empty_shapes():
    assert rank(FieldMatrix(np.zeros((0, 4), dtype=np.uint64))).rank == 0
    assert rank(FieldMatrix(np.zeros((3, 0), dtype=np.uint64))).rank == 0
    assert kernel_vector(FieldMatrix(np.zeros((3, 0), dtype=np.uint64))) is None
