from .registry import CONSTRUCTIONS, register_construction, lookup_construction, list_constructions
from .generators import (
    ConstructionReport,
    short_pairs_construction,
    stack_free_parts,
    stack_free_construction,
    stack_free_by_predicate,
    clique_union,
    partitioned_construction,
    stack_witness,
    stack_witness_report,
)
from .lift import lift_odd, lift_odd_report
