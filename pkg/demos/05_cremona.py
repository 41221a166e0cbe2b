"""
Cremona reduction
=================

The standard Cremona transformation based at n+1 points changes degree and
multiplicities by k = (n-1)d - (sum of the n+1 largest multiplicities) but
keeps the dimension of the system.  We check that numerically.
"""

from chudnovsky.cremona import cremona_reduce, cremona_transform, format_chain, reduce_fully
from chudnovsky.fatpoints import LinearSystemSpec, sample_points, system_dimension


def dim(spec, seed):
    return system_dimension(spec, sample_points(spec.n, spec.s, seed)).affine_dim


step = cremona_reduce(LinearSystemSpec(2, 4, (2, 2, 2)))
print(f"{step.before} -> {step.after}, k = {step.k}; dims {dim(step.before, 1)} = {dim(step.after, 2)}")

# applying the raw map twice at the same base points gives back the input
k, d, m = cremona_transform(3, 7, [4, 3, 3, 2, 1], [0, 1, 2, 3])
print("round trip:", cremona_transform(3, d, m, [0, 1, 2, 3])[1:], "from k =", k)

for spec in (LinearSystemSpec(2, 10, (4, 4, 4, 3, 3, 3, 2)),
             LinearSystemSpec(3, 6, (4, 4, 3, 3, 2, 2)),
             LinearSystemSpec(2, 2, (1,) * 5)):
    steps, terminal = reduce_fully(spec)
    print(" -> ".join(format_chain(steps, terminal)), f"   dims {dim(spec, 3)} = {dim(terminal, 4)}")
