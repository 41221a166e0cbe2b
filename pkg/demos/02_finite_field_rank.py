"""
Rank and kernels over F_p
=========================

Dense elimination modulo the Mersenne prime 2^61 - 1.  Tall matrices can be
fed in blocks; memory stays at one cols x cols echelon basis.
"""

import numpy as np

from chudnovsky.exactla import EchelonAccumulator, FieldMatrix, PrimeField, kernel_vector, rank

F = PrimeField(2**61 - 1)
rng = np.random.default_rng(0)

# a random 40 x 30 matrix of rank 12, built as a product
a = rng.integers(0, 1000, size=(40, 12))
b = rng.integers(0, 1000, size=(12, 30))
m = FieldMatrix(a @ b, F)
print("shape", m.shape, "rank", rank(m))

# a kernel vector really is one
v = kernel_vector(m)
print("M v == 0:", not any(int(x) for x in m.matvec(v)))

# streaming: 2000 random rows, 50 columns; stops once the basis is full
acc = EchelonAccumulator(50, F)
for i in range(0, 2000, 100):
    block = rng.integers(0, 2**61 - 1, size=(100, 50), dtype=np.uint64)
    if not acc.add(block):
        break
print("streamed rank", acc.rank, "after", acc.rows_seen, "rows")

# a small prime uses a different multiplication path but the same API
print("rank mod 7 of [[1,2],[2,4]]:", rank(FieldMatrix([[1, 2], [2, 4]], PrimeField(7))))
