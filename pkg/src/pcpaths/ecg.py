"""ECG v1 text format and Graphviz DOT export.

ECG v1::

    n m
    u v c      (m lines, 0-based vertices, non-negative colour)

Blank lines and lines starting with ``#`` are ignored on read.
"""

from __future__ import annotations

from pathlib import Path
from typing import IO

from .graph import EdgeColouredGraph, GraphError

DOT_PALETTE = (
    "red", "blue", "forestgreen", "orange", "purple", "brown",
    "magenta", "cyan4", "gold3", "navy", "darkolivegreen", "deeppink",
)


class ECGFormatError(GraphError):
    """Malformed ECG text."""


def dumps(g: EdgeColouredGraph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v} {c}" for u, v, c in sorted(g.edges()))
    return "\n".join(lines) + "\n"


def loads(text: str) -> EdgeColouredGraph:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            rows.append((lineno, [int(tok) for tok in line.split()]))
        except ValueError:
            raise ECGFormatError(f"line {lineno}: non-integer token in {raw!r}") from None
    if not rows:
        raise ECGFormatError("missing header line 'n m'")
    lineno, header = rows[0]
    if len(header) != 2 or min(header) < 0:
        raise ECGFormatError(f"line {lineno}: header must be 'n m' with n, m >= 0")
    n, m = header
    body = rows[1:]
    if len(body) != m:
        raise ECGFormatError(f"header declares {m} edges, found {len(body)}")
    g = EdgeColouredGraph(n)
    for lineno, row in body:
        if len(row) != 3:
            raise ECGFormatError(f"line {lineno}: expected 'u v c'")
        try:
            g.add_edge(*row)
        except GraphError as exc:
            raise ECGFormatError(f"line {lineno}: {exc}") from None
    return g


def write(g: EdgeColouredGraph, path: str | Path) -> None:
    Path(path).write_text(dumps(g))


def read(path: str | Path) -> EdgeColouredGraph:
    return loads(Path(path).read_text())


def load_stream(fh: IO[str]) -> EdgeColouredGraph:
    return loads(fh.read())


def to_dot(g: EdgeColouredGraph, name: str = "G") -> str:
    out = [f"graph {name} {{"]
    for v in g.vertices():
        out.append(f"  {v};")
    for u, v, c in g.edges():
        colour = DOT_PALETTE[c % len(DOT_PALETTE)]
        out.append(f'  {u} -- {v} [color="{colour}", label="{c}"];')
    out.append("}")
    return "\n".join(out) + "\n"
