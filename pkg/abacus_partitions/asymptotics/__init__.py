from abacus_partitions.asymptotics.bounds import (
    BoundReport,
    check_combinatorial_lower,
    check_erdos_upper,
    check_maroti_lower,
    check_pairs_crude_upper,
    check_power_of_four,
    merge_reports,
    run_all_bounds,
)
from abacus_partitions.asymptotics.constants import AsymptoticConstants, precision_context
from abacus_partitions.asymptotics.estimates import (
    hr_estimate,
    p32_estimate,
    q_estimate,
    s_estimate,
    t_estimate,
)
from abacus_partitions.asymptotics.lemmas import (
    EpsilonBound,
    GaussianSum,
    certify_epsilon_bound,
    fit_epsilon_constant,
    gaussian_sum_check,
)
from abacus_partitions.asymptotics.ratios import RatioKind, RatioRow, infer_b, ratio_table

__all__ = [
    "AsymptoticConstants",
    "BoundReport",
    "EpsilonBound",
    "GaussianSum",
    "RatioKind",
    "RatioRow",
    "certify_epsilon_bound",
    "check_combinatorial_lower",
    "check_erdos_upper",
    "check_maroti_lower",
    "check_pairs_crude_upper",
    "check_power_of_four",
    "fit_epsilon_constant",
    "gaussian_sum_check",
    "hr_estimate",
    "infer_b",
    "merge_reports",
    "p32_estimate",
    "precision_context",
    "q_estimate",
    "ratio_table",
    "run_all_bounds",
    "s_estimate",
    "t_estimate",
]
