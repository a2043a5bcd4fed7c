from .paths import (
    check_sequence,
    is_tight_path,
    tight_paths_through,
    find_tight_path,
    contains_tight_path,
)
from .zigzag import (
    End,
    PathWitness,
    zigzag_layout,
    zigzag_witness,
    is_zigzag,
    interval_of_end,
    extension_set,
    enumerate_end_levels,
    enumerate_ends,
    stuck_ends,
    nearest_extension,
    extend_f,
    project_g,
    mirror,
    find_zigzag,
    contains_zigzag,
)
from .good_path import (
    Coloring,
    class_index,
    is_color_regular,
    restrict_color_regular,
    class_shadow,
    is_good_path,
    enumerate_good_end_levels,
    enumerate_good_ends,
    good_extension_set,
    stuck_good_ends,
    extend_good_f,
    find_good_path,
)
from .stack import (
    stack_arrangement,
    find_stack,
    contains_stack,
    find_disjoint_segments,
    contains_disjoint_segments,
)
from .peel import first_neighbor_map, peel_graph
from .oracle import all_tight_paths, brute_force_ends, brute_force_good_ends
from .registry import DETECTORS, register_detector, lookup_detector, list_detectors
