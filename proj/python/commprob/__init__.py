"""Exact commuting probability of finite groups."""

from ._commprob import (
    CommprobError,
    Group,
    OrderCapExceeded,
    SpecParseError,
    an_class_splits,
    build_group,
    catalog,
    center_order,
    class_sizes,
    cp,
    cp_alternating_closed,
    cp_centralizer_sum,
    cp_class_count,
    cp_dihedral_closed,
    cp_pairs,
    cp_symmetric_closed,
    derived_order,
    is_simple,
    is_solvable,
    mc_estimate,
    normal_subgroups,
    partition_table,
    run_suite,
    spectrum,
)

__all__ = [
    "CommprobError",
    "Group",
    "OrderCapExceeded",
    "SpecParseError",
    "an_class_splits",
    "build_group",
    "catalog",
    "center_order",
    "class_sizes",
    "cp",
    "cp_alternating_closed",
    "cp_centralizer_sum",
    "cp_class_count",
    "cp_dihedral_closed",
    "cp_pairs",
    "cp_symmetric_closed",
    "derived_order",
    "is_simple",
    "is_solvable",
    "mc_estimate",
    "normal_subgroups",
    "partition_table",
    "run_suite",
    "spectrum",
]
