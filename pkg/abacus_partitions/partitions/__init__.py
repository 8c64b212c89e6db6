from abacus_partitions.partitions.abacus import (
    AbacusDisplay,
    BeadSequence,
    CoreQuotient,
    HookPosition,
    combine,
    conjugate_via_abacus,
    from_bead_sequence,
    is_self_conjugate,
    normalized_display,
    remove_hook,
    removable_hooks,
    to_bead_sequence,
    two_core,
    two_quotient,
)
from abacus_partitions.partitions.partition import (
    EMPTY,
    Partition,
    conjugate,
    parse_partition,
    staircase,
)
from abacus_partitions.partitions.tree import QuotientTree, tree_decode, tree_encode

__all__ = [
    "AbacusDisplay",
    "BeadSequence",
    "CoreQuotient",
    "EMPTY",
    "HookPosition",
    "Partition",
    "QuotientTree",
    "combine",
    "conjugate",
    "conjugate_via_abacus",
    "from_bead_sequence",
    "is_self_conjugate",
    "normalized_display",
    "parse_partition",
    "remove_hook",
    "removable_hooks",
    "staircase",
    "to_bead_sequence",
    "tree_decode",
    "tree_encode",
    "two_core",
    "two_quotient",
]
