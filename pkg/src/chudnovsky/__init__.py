"""Verification toolkit for fat-point linear systems and symbolic powers of points."""

from .bigcomb import (
    RegularityResult,
    binomial,
    check_ineq,
    check_lemma_part1,
    check_lemma_part2,
    integer_nth_root_floor,
    regularity_general_points,
    scan_ineq,
)
from .cremona import Inapplicable, ReductionStep, cremona_reduce, reduce_fully
from .exactla import DEFAULT_PRIME, MERSENNE61, FieldMatrix, PrimeField, RankResult, kernel_vector, rank
from .fatpoints import (
    Certification,
    LinearSystemSpec,
    PointSet,
    SystemDimension,
    condition_rows,
    expected_dimension,
    is_empty_certified,
    monomials,
    sample_points,
    system_dimension,
)
from .waldschmidt import (
    AlphaResult,
    ContainmentVerdict,
    SearchConfig,
    WaldschmidtReport,
    alpha_symbolic,
    chudnovsky_check,
    containment_criterion_check,
    verify_71_lemma,
    verify_floor_instance,
    waldschmidt_report,
)

__version__ = "0.1.0"
