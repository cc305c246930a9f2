from tvb.tropic.trees import (
    LabelledTree,
    caterpillar,
    enumerate_trees,
    insert_leaf,
    star,
)
from tvb.tropic.semigroup import (
    TreeSemigroup,
    enumerate_monomials,
    fibers,
    semigroup_ST,
    toric_ideal_upto,
)
from tvb.tropic.points import (
    FlagTree,
    TropPoint,
    dual_flag,
    dual_generators,
    initial_forms,
    tree_from_flag,
    trop_point_from_tree,
)
from tvb.tropic.wellpoised import (
    CheckStatus,
    TreeCheck,
    WellPoisedReport,
    check_tree,
    fiber_mismatches,
    generic_weights,
    oracle_disagreement,
    wellpoised_check,
    wellpoised_hypersurface,
)


__all__ = [
    "LabelledTree",
    "caterpillar",
    "enumerate_trees",
    "insert_leaf",
    "star",
    "TreeSemigroup",
    "enumerate_monomials",
    "fibers",
    "semigroup_ST",
    "toric_ideal_upto",
    "FlagTree",
    "TropPoint",
    "dual_flag",
    "dual_generators",
    "initial_forms",
    "tree_from_flag",
    "trop_point_from_tree",
    "CheckStatus",
    "TreeCheck",
    "WellPoisedReport",
    "check_tree",
    "fiber_mismatches",
    "oracle_disagreement",
    "generic_weights",
    "wellpoised_check",
    "wellpoised_hypersurface",
]
