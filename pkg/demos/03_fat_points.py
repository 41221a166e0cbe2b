"""
Linear systems through fat points
=================================

L_n(d; m_1, ..., m_s) is the space of degree-d forms on P^n vanishing to
order m_i at s random points.  Full column rank of the interpolation matrix
at one point set proves emptiness for general points; a rank deficit is only
evidence.
"""

from chudnovsky.fatpoints import (
    LinearSystemSpec,
    condition_rows,
    expected_dimension,
    form_to_vector,
    is_empty_certified,
    multiply_forms,
    sample_points,
    system_dimension,
    system_kernel_vector,
    vector_to_form,
)

# a double point on the line, degree 2: rows for f and f'
print(condition_rows((5, 1), 2, 1, 2, 10007).tolist())

# lines through four points: empty
pts = sample_points(2, 4, seed=1)
print(system_dimension(LinearSystemSpec(2, 1, (1, 1, 1, 1)), pts))

# quartics double at five points: the count says empty, but there is one
spec = LinearSystemSpec.uniform(2, 4, 2, 5)
pts = sample_points(2, 5, seed=1)
dim = system_dimension(spec, pts)
print(spec, "expected", expected_dimension(spec), "actual", dim.affine_dim, dim.certification)

# the survivor is the square of the conic through the five points
p = pts.p
conic = vector_to_form(system_kernel_vector(LinearSystemSpec.uniform(2, 2, 1, 5), pts), 2, 2)
square = form_to_vector(multiply_forms(conic, conic, p), 2, 4, p)
quartic = system_kernel_vector(spec, pts)
scale = int(quartic[0]) * pow(int(square[0]), -1, p) % p
print("kernel == c * conic^2:", all(int(q) == int(s) * scale % p for q, s in zip(quartic, square)))

# the three certification labels
for spec in (LinearSystemSpec.uniform(2, 3, 2, 4),
             LinearSystemSpec.uniform(2, 2, 1, 5),
             LinearSystemSpec.uniform(2, 4, 2, 5)):
    cert = is_empty_certified(spec, seed=3)
    print(f"{str(spec):16s} {cert.certification.value:18s} ranks {list(cert.ranks)} of {cert.cols}")
