"""Text formats for hypergraphs and Berge certificates.

Hypergraph file::

    # optional comment lines (e.g. a partition header)
    r n m
    <r increasing vertex ids>      (m lines, ascending lexicographic order)

Certificate file::

    path l | cycle t
    <vertex ids>
    <edge indexes into the host file's edge order>
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable

from .hypergraph import Hypergraph
from .search import BergeCycle, BergePath


class FormatError(ValueError):
    """Malformed input file; ``line`` is the 1-based offending line, if any."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _ints(text: str, lineno: int) -> list[int]:
    if text != text.strip() or "  " in text:
        raise FormatError("stray whitespace", lineno)
    try:
        return [int(tok) for tok in text.split(" ")] if text else []
    except ValueError:
        raise FormatError(f"expected integers, got {text!r}", lineno) from None


def format_hypergraph(H: Hypergraph, comments: Iterable[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"{H.r} {H.n} {H.m}")
    lines.extend(" ".join(map(str, e)) for e in H.edges)
    return "\n".join(lines) + "\n"


def parse_hypergraph(text: str) -> tuple[Hypergraph, list[str]]:
    """Parse hypergraph text, returning the hypergraph and any header comments."""
    if "\r" in text:
        raise FormatError("CR line endings are not allowed")
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    comments = []
    idx = 0
    while idx < len(lines) and lines[idx].startswith("#"):
        comments.append(lines[idx][1:].strip())
        idx += 1
    if idx >= len(lines):
        raise FormatError("missing header line 'r n m'", idx + 1)
    header = _ints(lines[idx], idx + 1)
    if len(header) != 3:
        raise FormatError("header must be 'r n m'", idx + 1)
    r, n, m = header
    if r < 2 or n < 0 or m < 0:
        raise FormatError(f"invalid header values r={r} n={n} m={m}", idx + 1)
    body = lines[idx + 1:]
    if len(body) != m:
        raise FormatError(f"header declares {m} edges but file has {len(body)}", idx + 1)
    edges = []
    prev = None
    for offset, raw in enumerate(body):
        lineno = idx + 2 + offset
        e = tuple(_ints(raw, lineno))
        if len(e) != r:
            raise FormatError(f"edge has {len(e)} vertices, expected {r}", lineno)
        if any(v < 0 or v >= n for v in e):
            raise FormatError(f"vertex id out of range [0, {n})", lineno)
        if any(a >= b for a, b in zip(e, e[1:])):
            raise FormatError("vertex ids must be strictly increasing", lineno)
        if prev is not None:
            if e == prev:
                raise FormatError("duplicate edge", lineno)
            if e < prev:
                raise FormatError("edges not in ascending lexicographic order", lineno)
        prev = e
        edges.append(e)
    return Hypergraph(n, r, edges), comments


def read_hypergraph(path: str | Path) -> Hypergraph:
    return parse_hypergraph(Path(path).read_text())[0]


def write_hypergraph(H: Hypergraph, path: str | Path, comments: Iterable[str] = ()) -> None:
    Path(path).write_text(format_hypergraph(H, comments), newline="\n")


def format_certificate(cert: BergePath | BergeCycle) -> str:
    kind = "path" if isinstance(cert, BergePath) else "cycle"
    return (
        f"{kind} {cert.length}\n"
        + " ".join(map(str, cert.vertices)) + "\n"
        + " ".join(map(str, cert.edge_indexes)) + "\n"
    )


def parse_certificate(text: str) -> BergePath | BergeCycle:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if len(lines) != 3:
        raise FormatError(f"certificate must have 3 lines, found {len(lines)}")
    head = lines[0].split(" ")
    if len(head) != 2 or head[0] not in ("path", "cycle"):
        raise FormatError("first line must be 'path L' or 'cycle T'", 1)
    try:
        length = int(head[1])
    except ValueError:
        raise FormatError(f"bad length {head[1]!r}", 1) from None
    vertices = tuple(_ints(lines[1], 2))
    edges = tuple(_ints(lines[2], 3))
    if len(edges) != length:
        raise FormatError(f"declared length {length} but {len(edges)} edge indexes", 3)
    if head[0] == "path":
        if len(vertices) != length + 1:
            raise FormatError(f"path of length {length} needs {length + 1} vertices", 2)
        return BergePath(vertices, edges)
    if len(vertices) != length:
        raise FormatError(f"cycle of length {length} needs {length} vertices", 2)
    return BergeCycle(vertices, edges)


def read_certificate(path: str | Path) -> BergePath | BergeCycle:
    return parse_certificate(Path(path).read_text())


def write_certificate(cert: BergePath | BergeCycle, path: str | Path) -> None:
    Path(path).write_text(format_certificate(cert), newline="\n")
