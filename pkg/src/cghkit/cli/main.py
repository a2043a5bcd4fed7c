"""``cghkit`` command line: construct, detect, extremal and verify batch runs.

Exit status: 0 success, 1 a verified inequality failed, 2 invalid arguments,
3 malformed input file, 4 search budget exhausted (partial results written).
"""
import argparse
import inspect
import logging
import sys
from pathlib import Path
from typing import List, Optional

from ..constructions import CONSTRUCTIONS, list_constructions, lookup_construction
from ..core import read_cgh
from ..errors import BudgetExhaustedError, CghError, CghFormatError, PatternPresentError
from ..patterns import DETECTORS, list_detectors, lookup_detector
from ..search import TABLE_COLUMNS, extremal_table, table_rows
from ..utils import SearchOptions, SamplingOptions, cghkit_config, logger
from ..verify import (
    BOUND_NAMES,
    bound_values,
    check_end_count_inequality,
    check_good_path_inequalities,
    check_injections,
    check_link_recursion,
    check_odd_reduction,
    check_peeling,
    check_recurrence,
    coloring_reduction,
    monte_carlo_counts,
    random_instances,
)
from .config import OUTPUT_FORMATS, VERIFY_VERBS, RunConfig, SchemaError
from .writers import write_cgh, write_csv, write_json

__all__ = ["build_parser", "config_from_args", "run", "main"]

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_SCHEMA = 2
EXIT_MALFORMED = 3
EXIT_BUDGET = 4

REPORT_COLUMNS = ("instance", "name", "lhs", "rhs", "holds")


def _setup_logger(verbose: bool):
    if cghkit_config.debug:
        level = logging.DEBUG
    else:
        level = logging.INFO if verbose else logging.WARNING
    logger.configure_logging(name="cghkit", level=level, log_dir=cghkit_config.log_dir)


def _add_common(parser: argparse.ArgumentParser):
    parser.add_argument("--output-dir", type=str, default=None)
    parser.add_argument("--format", dest="output_format", choices=OUTPUT_FORMATS, default="json")
    parser.add_argument("--verbose", action="store_true")


def _add_sizes(parser: argparse.ArgumentParser):
    parser.add_argument("--n", type=int, nargs="+", default=[])
    parser.add_argument("--r", type=int, nargs="+", default=[])
    parser.add_argument("--k", type=int, nargs="+", default=[])


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cghkit")
    subparsers = parser.add_subparsers(dest="subcommand", required=True)

    construct = subparsers.add_parser("construct", help=f"generators: {CONSTRUCTIONS.describe()}")
    construct.add_argument("target", choices=list_constructions())
    _add_sizes(construct)
    construct.add_argument("--cyclic", action=argparse.BooleanOptionalAction, default=True)
    construct.add_argument("--x-count", type=int, default=None)
    construct.add_argument("--input", type=str, default=None)
    _add_common(construct)

    detect = subparsers.add_parser("detect", help=f"detectors: {DETECTORS.describe()}")
    detect.add_argument("target", choices=list_detectors())
    detect.add_argument("--input", type=str, required=True)
    detect.add_argument("--k", type=int, nargs="+", default=[])
    detect.add_argument("--mode", choices=("exhaustive", "sampled"), default="exhaustive")
    detect.add_argument("--budget", type=int, default=None)
    detect.add_argument("--seed", type=int, default=None)
    detect.add_argument("--reflection-closed", action="store_true")
    _add_common(detect)

    extremal = subparsers.add_parser("extremal")
    _add_sizes(extremal)
    extremal.add_argument("--pattern", nargs="+", default=[])
    extremal.add_argument("--abstract", action="store_true")
    extremal.add_argument("--budget", type=int, default=None)
    extremal.add_argument("--no-symmetry", dest="use_symmetry", action="store_false")
    _add_common(extremal)

    verify = subparsers.add_parser("verify")
    verify.add_argument("target", choices=VERIFY_VERBS)
    _add_sizes(verify)
    verify.add_argument("--input", type=str, default=None)
    verify.add_argument("--p", type=float, default=None)
    verify.add_argument("--count", type=int, default=None)
    verify.add_argument("--seed", type=int, default=None)
    verify.add_argument("--samples", type=int, default=None)
    _add_common(verify)
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    names = {field for field in RunConfig.__dataclass_fields__}
    values = {key: value for key, value in vars(args).items() if key in names}
    return RunConfig(**values)


def _summary(text: str):
    print(text)


def _construct(config: RunConfig) -> int:
    generator = lookup_construction(config.target)
    available = {
        "n": lambda: config.single("n"),
        "r": lambda: config.single("r"),
        "k": lambda: config.single("k"),
        "cyclic": lambda: config.cyclic,
        "x_count": lambda: config.x_count,
        "H": lambda: read_cgh(config.input),
    }
    kwargs = {}
    for name in inspect.signature(generator).parameters:
        if name not in available:
            continue
        if name == "H" and config.input is None:
            raise SchemaError(f"construct {config.target} needs --input")
        if name == "x_count" and config.x_count is None:
            raise SchemaError(f"construct {config.target} needs --x-count")
        kwargs[name] = available[name]()
    report = generator(**kwargs)
    out = Path(config.output_dir)
    cgh_path = write_cgh(out / f"{config.target}.cgh", report.cgh, config)
    payload = report.to_json()
    if config.output_format == "json":
        write_json(out / f"{config.target}.json", payload, config)
    else:
        row = {key: payload[key] for key in ("n", "r", "edge_count", "predicted_leading_term", "claim")}
        write_csv(out / f"{config.target}.csv", [row], list(row), config)
    _summary(f"construct {config.target}: {report.edge_count} edges -> {cgh_path}")
    return EXIT_OK


def _check_host_tags(target: str, H):
    tags = DETECTORS.tags(target)
    if "even-r" in tags and H.r % 2:
        raise SchemaError(f"detect {target} needs an even-uniform host, got r={H.r}")
    if "graph" in tags and H.r != 2:
        raise SchemaError(f"detect {target} needs a graph (r=2), got r={H.r}")


def _detect(config: RunConfig) -> int:
    H = read_cgh(config.input)
    k = config.single("k")
    _check_host_tags(config.target, H)
    options = {
        "reflection_closed": config.reflection_closed,
        "mode": config.mode,
        "budget": config.budget,
        "seed": config.seed,
    }
    if config.target == "good-path":
        options["coloring"] = coloring_reduction(H, config.seed).coloring
    witness = lookup_detector(config.target)(H, k, **options)
    payload = {"detector": config.target, "k": k, "found": witness is not None, "witness": witness}
    out = Path(config.output_dir)
    if config.output_format == "json":
        write_json(out / f"detect_{config.target}.json", payload, config)
    else:
        row = {"detector": config.target, "k": k, "found": witness is not None}
        write_csv(out / f"detect_{config.target}.csv", [row], list(row), config)
    status = "found" if witness is not None else "not found"
    _summary(f"detect {config.target} k={k}: {status}")
    return EXIT_OK


def _extremal(config: RunConfig) -> int:
    options = SearchOptions(
        budget=config.budget or cghkit_config.node_budget,
        use_symmetry=config.use_symmetry,
    )
    results = extremal_table(
        config.n, config.r, config.k, config.pattern, convex=not config.abstract, options=options
    )
    out = Path(config.output_dir)
    write_csv(out / "extremal.csv", table_rows(results), TABLE_COLUMNS, config)
    for result in results:
        name = f"extremal_n{result.n}_r{result.r}_k{result.pattern.k}_{result.pattern.label}.cgh"
        write_cgh(out / name, result.witness, config, comments=[f"exact {result.exact}"])
    if config.output_format == "json":
        write_json(out / "extremal.json", {"results": [r.to_json() for r in results]}, config)
    cells = ", ".join(f"{r.pattern.label}(n={r.n},r={r.r},k={r.pattern.k})={r.max_edges}" for r in results)
    _summary(f"extremal: {cells or 'no cells'}")
    if not all(result.exact for result in results):
        return EXIT_BUDGET
    return EXIT_OK


def _hosts(config: RunConfig):
    if config.input is not None:
        yield 0, read_cgh(config.input)
        return
    hosts = random_instances(
        config.single("n"), config.single("r"), config.p, config.count, config.seed
    )
    yield from enumerate(hosts)


def _reports_for(config: RunConfig, index: int, H) -> list:
    verb = config.target
    k = None if verb == "coloring" else config.single("k")
    seed = [config.seed, index] if config.seed is not None else None
    if verb == "ends-inequality":
        return [check_end_count_inequality(H, k)]
    if verb == "injections":
        return list(check_injections(H, k))
    if verb == "coloring":
        samples = config.samples or SamplingOptions().samples
        return monte_carlo_counts(H, samples=samples, seed=seed).reports()
    if verb == "good-paths":
        reduction = coloring_reduction(H, seed)
        return check_good_path_inequalities(reduction.G, reduction.coloring, k)
    if verb == "odd-reduction":
        return [check_odd_reduction(H, k)]
    if verb == "link-recursion":
        return [check_link_recursion(H, k)]
    if verb == "peeling":
        return check_peeling(H, k)
    return [check_recurrence(H, k)]


def _verify_bounds(config: RunConfig) -> int:
    rows, records = [], []
    for n in config.n:
        for r in config.r:
            for k in config.k:
                values = bound_values(n, r, k)
                records.append({"n": n, "r": r, "k": k, "bounds": {
                    name: None if value is None else str(value) for name, value in values.items()
                }})
                for name in BOUND_NAMES:
                    value = values[name]
                    rows.append({"n": n, "r": r, "k": k, "bound": name, "value": "" if value is None else str(value)})
    out = Path(config.output_dir)
    write_json(out / "verify_bounds.json", {"bounds": records}, config)
    write_csv(out / "verify_bounds.csv", rows, ("n", "r", "k", "bound", "value"), config)
    _summary(f"verify bounds: {len(records)} parameter sets")
    return EXIT_OK


def _verify(config: RunConfig) -> int:
    if config.target == "bounds":
        return _verify_bounds(config)
    reports, rows, skipped = [], [], 0
    for index, H in _hosts(config):
        try:
            instance_reports = _reports_for(config, index, H)
        except PatternPresentError as e:
            if config.input is not None:
                raise
            skipped += 1
            logger.info(f"instance {index} skipped: {e}")
            continue
        for report in instance_reports:
            record = report.to_json()
            record["instance"] = index
            reports.append(record)
            rows.append({column: record[column] for column in REPORT_COLUMNS})
    out = Path(config.output_dir)
    write_json(out / f"verify_{config.target}.json", {"reports": reports, "skipped": skipped}, config)
    write_csv(out / f"verify_{config.target}.csv", rows, REPORT_COLUMNS, config)
    failed = sum(1 for record in reports if not record["holds"])
    _summary(
        f"verify {config.target}: {len(reports)} reports, {failed} violated, {skipped} skipped"
    )
    return EXIT_VIOLATION if failed else EXIT_OK


_HANDLERS = {
    "construct": _construct,
    "detect": _detect,
    "extremal": _extremal,
    "verify": _verify,
}


def run(config: RunConfig) -> int:
    try:
        config.validate()
        return _HANDLERS[config.subcommand](config)
    except CghFormatError as e:
        logger.error(f"malformed input {config.input}: {e}")
        return EXIT_MALFORMED
    except BudgetExhaustedError as e:
        logger.error(str(e))
        return EXIT_BUDGET
    except (CghError, ValueError, RuntimeError) as e:
        logger.error(str(e))
        return EXIT_SCHEMA


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    _setup_logger(args.verbose)
    return run(config_from_args(args))


if __name__ == "__main__":
    sys.exit(main())
