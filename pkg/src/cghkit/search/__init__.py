from .predicate import PatternPredicate, PATTERN_KINDS
from .symmetry import SymmetryGroup, canonical_form, edge_orbits
from .branch_bound import ExtremalResult, max_edges_avoiding
from .table import TABLE_COLUMNS, extremal_table, table_rows, write_table_csv
