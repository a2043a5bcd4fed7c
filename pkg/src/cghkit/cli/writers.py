"""Atomic, reproducible output files carrying their provenance."""
import csv
import io
import json
import os
import tempfile
from pathlib import Path
from typing import Iterable, List, Optional, Sequence

from ..core import Cgh, dumps_cgh
from .config import RunConfig

__all__ = ["write_atomic", "write_json", "write_csv", "write_cgh", "provenance"]


def provenance(config: RunConfig) -> List[str]:
    from .. import __version__

    return [
        f"cghkit {__version__}",
        "config " + json.dumps(config.to_json(), sort_keys=True),
    ]


def write_atomic(path, text: str) -> Path:
    """Replace ``path`` with ``text`` via a temporary file in the same directory."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as f:
            f.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return path


def write_json(path, payload: dict, config: RunConfig) -> Path:
    from .. import __version__

    record = dict(payload)
    record["config"] = config.to_json()
    record["version"] = __version__
    return write_atomic(path, json.dumps(record, sort_keys=True, indent=2) + "\n")


def write_csv(path, rows: Iterable[dict], columns: Sequence[str], config: RunConfig) -> Path:
    buffer = io.StringIO()
    for line in provenance(config):
        buffer.write(f"# {line}\n")
    writer = csv.DictWriter(buffer, fieldnames=list(columns), lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return write_atomic(path, buffer.getvalue())


def write_cgh(path, H: Cgh, config: RunConfig, comments: Optional[Iterable[str]] = None) -> Path:
    lines = provenance(config) + list(comments or ())
    return write_atomic(path, dumps_cgh(H, comments=lines))
