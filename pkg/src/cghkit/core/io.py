"""Plain-text cgh interchange format.

    n r m
    v_1 ... v_r        (m lines, one edge each)

Serialization is canonical (edges sorted lexicographically). Lines starting
with ``#`` carry provenance and are skipped by the parser.
"""
from pathlib import Path
from typing import Iterable, List, Optional, Tuple, Union

from ..errors import CghFormatError, CghError
from .hypergraph import Cgh

__all__ = ["dumps_cgh", "loads_cgh", "read_cgh"]


def dumps_cgh(H: Cgh, comments: Optional[Iterable[str]] = None) -> str:
    lines = [f"# {c}" for c in (comments or ())]
    lines.append(f"{H.n} {H.r} {len(H)}")
    lines.extend(" ".join(str(v) for v in e) for e in H.sorted_edges)
    return "\n".join(lines) + "\n"


def _tokenize(text: str) -> List[Tuple[str, int]]:
    tokens = []
    start = None
    for i, ch in enumerate(text + " "):
        if ch.isspace():
            if start is not None:
                tokens.append((text[start:i], start + 1))
                start = None
        elif start is None:
            start = i
    return tokens


def _parse_ints(text: str, line_no: int, expected: int) -> List[Tuple[int, int]]:
    values = []
    for token, column in _tokenize(text):
        try:
            values.append((int(token), column))
        except ValueError:
            raise CghFormatError(
                f"expected an integer, got {token!r}", line=line_no, column=column
            ) from None
    if len(values) != expected:
        raise CghFormatError(
            f"expected {expected} integers, got {len(values)}", line=line_no, column=1
        )
    return values


def loads_cgh(text: str) -> Cgh:
    rows = [
        (i + 1, line)
        for i, line in enumerate(text.splitlines())
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not rows:
        raise CghFormatError("empty cgh file, missing header 'n r m'", line=1)
    header_line, header = rows[0]
    (n, _), (r, _), (m, _) = _parse_ints(header, header_line, 3)
    if n < 1 or r < 1 or m < 0:
        raise CghFormatError(
            f"invalid header values n={n} r={r} m={m}", line=header_line, column=1
        )
    body = rows[1:]
    if len(body) != m:
        last = body[-1][0] if body else header_line
        raise CghFormatError(
            f"header announces {m} edges but {len(body)} edge lines follow",
            line=last,
        )
    edges = set()
    for line_no, line in body:
        parsed = _parse_ints(line, line_no, r)
        for v, column in parsed:
            if not 0 <= v < n:
                raise CghFormatError(
                    f"vertex {v} outside [0, {n})", line=line_no, column=column
                )
        edge = tuple(sorted(v for v, _ in parsed))
        if len(set(edge)) != r:
            raise CghFormatError(f"repeated vertex in edge {edge}", line=line_no)
        if edge in edges:
            raise CghFormatError(f"duplicate edge {edge}", line=line_no)
        edges.add(edge)
    try:
        return Cgh.from_edges(n, r, edges)
    except CghError as e:
        raise CghFormatError(str(e)) from e


def read_cgh(path: Union[str, Path]) -> Cgh:
    return loads_cgh(Path(path).read_text(encoding="utf-8"))
