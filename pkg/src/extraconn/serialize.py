"""Graph file formats: graph6 and a plain edge list.

Edge-list text is a header line ``n m`` followed by ``m`` lines ``u v``
(0-indexed).  graph6 follows the standard encoding: an ``N(n)`` header and
the upper triangle of the adjacency matrix packed column by column into
6-bit characters offset by 63.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable

from .graph import Graph, GraphError


class ParseError(GraphError):
    pass


# -- graph6 -------------------------------------------------------------------


def _encode_n(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    raise ParseError("graph too large for graph6")


def to_graph6(g: Graph) -> str:
    bits = []
    for v in range(1, g.n):
        row = g.adj[v]
        bits.extend(row >> u & 1 for u in range(v))
    bits.extend([0] * (-len(bits) % 6))
    chunks = (
        chr(63 + (bits[i] << 5 | bits[i + 1] << 4 | bits[i + 2] << 3 | bits[i + 3] << 2 | bits[i + 4] << 1 | bits[i + 5]))
        for i in range(0, len(bits), 6)
    )
    return _encode_n(g.n) + "".join(chunks)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    if not s or any(not 63 <= ord(c) <= 126 for c in s):
        raise ParseError(f"not a graph6 string: {text.strip()[:40]!r}")
    vals = [ord(c) - 63 for c in s]
    if vals[0] == 63:
        if len(vals) < 4 or vals[1] == 63:
            raise ParseError("unsupported graph6 size header")
        n = vals[1] << 12 | vals[2] << 6 | vals[3]
        body = vals[4:]
    else:
        n = vals[0]
        body = vals[1:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise ParseError(f"graph6 body has {len(body)} characters, expected {need}")
    edges = []
    k = 0
    for v in range(1, n):
        for u in range(v):
            if body[k // 6] >> (5 - k % 6) & 1:
                edges.append((u, v))
            k += 1
    return Graph(n, edges)


# -- edge list ------------------------------------------------------------------


def to_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> Graph:
    rows = [ln.split("#", 1)[0].split() for ln in text.splitlines()]
    rows = [r for r in rows if r]
    if not rows:
        raise ParseError("empty edge list")
    try:
        nums = [[int(x) for x in r] for r in rows]
    except ValueError as exc:
        raise ParseError(f"edge list has a non-integer token: {exc}") from None
    if any(len(r) != 2 for r in nums):
        raise ParseError("every edge-list line must hold exactly two integers")
    n, m = nums[0]
    if len(nums) - 1 != m:
        raise ParseError(f"header announces {m} edges, found {len(nums) - 1}")
    return Graph(n, nums[1:])


# -- detection and files --------------------------------------------------------


def _looks_like_edge_list(text: str) -> bool:
    for ln in text.splitlines():
        ln = ln.split("#", 1)[0].strip()
        if ln:
            parts = ln.split()
            return len(parts) == 2 and all(p.lstrip("-").isdigit() for p in parts)
    return False


def parse_graph(text: str) -> Graph:
    """Parse one graph, auto-detecting edge list versus graph6."""
    if _looks_like_edge_list(text):
        return from_edge_list(text)
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) != 1:
        raise ParseError("expected a single graph6 line")
    return from_graph6(lines[0])


def read_graph(path: str | Path) -> Graph:
    return parse_graph(Path(path).read_text())


def write_graph(g: Graph, path: str | Path, fmt: str = "el") -> None:
    Path(path).write_text(format_graph(g, fmt))


def format_graph(g: Graph, fmt: str = "el") -> str:
    if fmt == "el":
        return to_edge_list(g)
    if fmt == "g6":
        return to_graph6(g) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def read_graph6_lines(lines: Iterable[str]) -> list[Graph]:
    return [from_graph6(ln) for ln in lines if ln.strip() and not ln.startswith("#")]
