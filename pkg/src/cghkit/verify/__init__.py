from .reports import BoundReport
from .bounds import (
    ROUNDING_DENOMINATOR,
    sqrt_upper,
    BOUND_NAMES,
    phi,
    ell_for_k,
    odd_improvement_coefficient,
    bound_values,
)
from .instances import random_cgh, random_instances
from .coloring import (
    ColoringReduction,
    ExpectedCounts,
    SampleStatistic,
    ColoringExperiment,
    coloring_reduction,
    expected_counts_exact,
    monte_carlo_counts,
)
from .inequalities import (
    check_end_count_inequality,
    check_injections,
    check_good_path_inequalities,
    check_expected_end_count,
    check_odd_reduction,
    check_link_recursion,
    check_peeling,
    check_recurrence,
)
