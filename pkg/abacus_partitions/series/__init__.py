from abacus_partitions.series.identities import (
    Verdict,
    compare_series,
    distinct_parts_product,
    euler_product,
    get_identity,
    theta_series,
    verify_gauss,
    verify_q_identities,
    verify_quotient_identity,
    verify_tree_product,
)
from abacus_partitions.series.truncated import TruncatedSeries

__all__ = [
    "TruncatedSeries",
    "Verdict",
    "compare_series",
    "distinct_parts_product",
    "euler_product",
    "get_identity",
    "theta_series",
    "verify_gauss",
    "verify_q_identities",
    "verify_quotient_identity",
    "verify_tree_product",
]
