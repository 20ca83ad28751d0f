"""Edge-list interchange format.

Header line ``"n m"`` followed by ``m`` lines ``"u v"``: decimal ASCII, single
spaces, LF line endings, no trailing whitespace. A single final LF is accepted
on input and never written on output.
"""
from pathlib import Path
from typing import Union
import hashlib
import re

from config import MAX_VERTICES
from .graph_interface import Graph, GraphError

_PAIR = re.compile(r"(0|[1-9][0-9]*) (0|[1-9][0-9]*)")


class EdgeListParseError(GraphError):
    def __init__(self, line_number: int, message: str):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class MalformedLineError(EdgeListParseError):
    pass


class VertexOutOfRangeError(EdgeListParseError):
    pass


class DuplicateEdgeError(EdgeListParseError):
    pass


class LoopError(EdgeListParseError):
    pass


def parse_edge_list(text: Union[bytes, str]) -> Graph:
    if isinstance(text, bytes):
        try:
            text = text.decode("ascii")
        except UnicodeDecodeError as e:
            raise MalformedLineError(1, f"non-ASCII input ({e.reason})") from e
    if text.endswith("\n"):
        text = text[:-1]
    lines = text.split("\n")

    header = _PAIR.fullmatch(lines[0])
    if header is None:
        raise MalformedLineError(1, f"expected header 'n m', got {lines[0]!r}")
    n, m = int(header.group(1)), int(header.group(2))
    if n > MAX_VERTICES:
        raise MalformedLineError(1, f"header declares {n} vertices, the limit is {MAX_VERTICES}")

    seen = set()
    for offset, line in enumerate(lines[1:], start=2):
        if offset > m + 1:
            raise MalformedLineError(offset, f"unexpected line after the {m} declared edges")
        match = _PAIR.fullmatch(line)
        if match is None:
            raise MalformedLineError(offset, f"expected 'u v', got {line!r}")
        u, v = int(match.group(1)), int(match.group(2))
        if u >= n or v >= n:
            raise VertexOutOfRangeError(offset, f"vertex {max(u, v)} is outside 0..{n - 1}")
        if u == v:
            raise LoopError(offset, f"loop at vertex {u}")
        edge = (min(u, v), max(u, v))
        if edge in seen:
            raise DuplicateEdgeError(offset, f"duplicate edge {edge[0]} {edge[1]}")
        seen.add(edge)
    if len(seen) < m:
        raise MalformedLineError(len(lines) + 1, f"header declares {m} edges, input ends after {len(seen)}")
    return Graph(n, seen)


def serialize_edge_list(g: Graph) -> bytes:
    lines = [f"{g.n} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines).encode("ascii")


def read_edge_list(path: Union[str, Path]) -> Graph:
    return parse_edge_list(Path(path).read_bytes())


def write_edge_list(path: Union[str, Path], g: Graph) -> None:
    Path(path).write_bytes(serialize_edge_list(g))


def graph_digest(g: Graph) -> str:
    """Short SHA-256 digest of the canonical edge list."""
    return hashlib.sha256(serialize_edge_list(g)).hexdigest()[:16]
