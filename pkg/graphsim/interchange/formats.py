"""
Edge list and partition file formats

Edge list:   optional "n <count>" header, then one "u v" pair per line
Partition:   one "vertex part" pair per line, every vertex exactly once
Blank lines and lines starting with '#' are skipped in both. Vertex ids are
0-based unless one_based is set, in which case they are shifted down by one
on ingest.
"""

import logging
from pathlib import Path
from typing import Dict, Iterator, List, Optional, Tuple, Union

from partitions.exceptions import GraphError
from partitions.graph import Graph, build_graph
from partitions.partition import Partition

from .exceptions import ParseError

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


def _records(text: str) -> Iterator[Tuple[int, List[str]]]:
    for number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if stripped and not stripped.startswith("#"):
            yield number, stripped.split()


def _vertex(token: str, number: int, one_based: bool) -> int:
    try:
        vertex = int(token, 10)
    except ValueError:
        raise ParseError(number, f"vertex id {token!r} is not a decimal integer")
    vertex -= 1 if one_based else 0
    if vertex < 0:
        raise ParseError(number, f"vertex id {token} is out of range")
    return vertex


def parse_edge_list(text: str, one_based: bool = False, symmetric: bool = False) -> Graph:
    """Graph from edge list text. With symmetric, a pair listed in both
    directions (as LFR network files do) counts as one edge."""
    declared: Optional[int] = None
    edges: List[Tuple[int, int]] = []
    seen: Dict[Tuple[int, int], Tuple[int, int]] = {}

    for number, tokens in _records(text):
        if tokens[0] == "n":
            if declared is not None:
                raise ParseError(number, "repeated n header")
            if edges:
                raise ParseError(number, "n header must precede the edges")
            if len(tokens) != 2 or not tokens[1].isdigit():
                raise ParseError(number, "header must read 'n <count>'")
            declared = int(tokens[1])
            continue

        if len(tokens) != 2:
            raise ParseError(number, f"expected 'u v', got {len(tokens)} fields")
        u, v = (_vertex(token, number, one_based) for token in tokens)
        if u == v:
            raise ParseError(number, f"self-loop at vertex {u}")
        if declared is not None and max(u, v) >= declared:
            raise ParseError(number, f"vertex {max(u, v)} outside [0, {declared})")
        key = (min(u, v), max(u, v))
        if key in seen:
            if symmetric and seen[key] == (v, u):
                continue
            raise ParseError(number, f"duplicate edge ({key[0]}, {key[1]})")
        seen[key] = (u, v)
        edges.append(key)

    n = declared if declared is not None else max((v for _, v in edges), default=-1) + 1
    try:
        return build_graph(n, edges)
    except GraphError as exc:
        raise ParseError(1, str(exc))


def write_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edge_list())
    return "\n".join(lines) + "\n"


def parse_partition(text: str, n: int, one_based: bool = False) -> Partition:
    """Partition of the n vertices of a graph; part ids are arbitrary tokens
    and are canonicalized in vertex order"""
    parts: List[Optional[str]] = [None] * n
    last = 0
    for number, tokens in _records(text):
        last = number
        if len(tokens) != 2:
            raise ParseError(number, f"expected 'vertex part', got {len(tokens)} fields")
        vertex = _vertex(tokens[0], number, one_based)
        if vertex >= n:
            raise ParseError(number, f"unknown vertex {vertex}, the graph has {n}")
        if parts[vertex] is not None:
            raise ParseError(number, f"duplicate vertex {vertex}")
        parts[vertex] = tokens[1]

    missing = [vertex for vertex, part in enumerate(parts) if part is None]
    if missing:
        raise ParseError(last + 1, f"vertex {missing[0]} is missing ({len(missing)} unassigned)")
    return Partition.from_labels(parts)


def write_partition(a: Partition) -> str:
    return "".join(f"{vertex} {part}\n" for vertex, part in enumerate(a.labels.tolist()))


def read_edge_list(path: PathLike, one_based: bool = False, symmetric: bool = False) -> Graph:
    try:
        g = parse_edge_list(Path(path).read_text(), one_based=one_based, symmetric=symmetric)
    except ParseError as exc:
        exc.path = path
        raise
    logger.debug("read %s: n=%d m=%d", path, g.n, g.m)
    return g


def read_partition(path: PathLike, n: int, one_based: bool = False) -> Partition:
    try:
        a = parse_partition(Path(path).read_text(), n, one_based=one_based)
    except ParseError as exc:
        exc.path = path
        raise
    logger.debug("read %s: %d parts", path, a.k)
    return a


def write_text(path: PathLike, text: str) -> None:
    Path(path).write_text(text)
    logger.info("wrote %s", path)


def directory_files(path: PathLike) -> List[Path]:
    """Regular, non-hidden files of a directory in name order"""
    directory = Path(path)
    if not directory.is_dir():
        raise FileNotFoundError(f"{directory} is not a directory")
    return sorted(p for p in directory.iterdir() if p.is_file() and not p.name.startswith("."))
