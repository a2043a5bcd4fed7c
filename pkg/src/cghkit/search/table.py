"""Grids of extremal numbers next to the closed-form bounds."""
import csv
import io
from itertools import product
from typing import Iterable, List, Optional, TextIO

from ..errors import CghError
from ..utils import SearchOptions, logger
from ..verify.bounds import BOUND_NAMES, bound_values
from .branch_bound import ExtremalResult, max_edges_avoiding
from .predicate import PatternPredicate

__all__ = ["TABLE_COLUMNS", "extremal_table", "write_table_csv", "table_rows"]

TABLE_COLUMNS = ("n", "r", "k", "pattern", "max_edges", "exact") + tuple(
    f"bound_{name}" for name in BOUND_NAMES
)


def extremal_table(
    ns: Iterable[int],
    rs: Iterable[int],
    ks: Iterable[int],
    kinds: Iterable[str],
    convex: bool = True,
    options: Optional[SearchOptions] = None,
) -> List[ExtremalResult]:
    """One search per grid cell; cells outside a pattern's domain are skipped."""
    results = []
    for n, r, k, kind in product(list(ns), list(rs), list(ks), list(kinds)):
        try:
            ordered = kind.replace("-", "_") != "tight_path"
            pattern = PatternPredicate(kind, k, convex=convex or ordered)
            results.append(max_edges_avoiding(n, r, pattern, options=options))
        except CghError as e:
            logger.info(f"skipping cell n={n} r={r} k={k} {kind}: {e}")
    return results


def table_rows(results: Iterable[ExtremalResult]) -> List[dict]:
    rows = []
    for result in results:
        row = {
            "n": result.n,
            "r": result.r,
            "k": result.pattern.k,
            "pattern": result.pattern.label,
            "max_edges": result.max_edges,
            "exact": result.exact,
        }
        bounds = bound_values(result.n, result.r, result.pattern.k) if result.r >= 2 else {}
        for name in BOUND_NAMES:
            value = bounds.get(name)
            row[f"bound_{name}"] = "" if value is None else str(value)
        rows.append(row)
    return rows


def write_table_csv(results: Iterable[ExtremalResult], stream: Optional[TextIO] = None) -> str:
    """Write the table to ``stream`` (or a string buffer) and return the CSV text."""
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=TABLE_COLUMNS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(table_rows(results))
    text = buffer.getvalue()
    if stream is not None:
        stream.write(text)
    return text
