"""graph6 and plain edge-list serialization.

graph6 follows the standard ASCII encoding: a size header (one byte ``n+63``
for ``n <= 62``, otherwise ``'~'`` plus three 6-bit bytes), then the upper
triangle in column order ``(0,1), (0,2), (1,2), (0,3), ...`` packed six bits
per byte, big-endian, zero padded.

Edge lists are ``n <count>`` (or a bare count) on the first line, then one
``u v`` pair per line with 0-based indices.
"""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .errors import (
    DuplicateEdgeError,
    EdgeIndexError,
    EdgeListError,
    Graph6HeaderError,
    Graph6LengthError,
    Graph6SizeError,
    LoopError,
)
from .graph import MAX_VERTICES, Graph

_HEADER = ">>graph6<<"


def _data_length(n: int) -> int:
    return (n * (n - 1) // 2 + 5) // 6


def emit_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        out = [chr(n + 63)]
    else:
        out = ["~", chr((n >> 12 & 63) + 63), chr((n >> 6 & 63) + 63), chr((n & 63) + 63)]
    acc = 0
    nbits = 0
    adj = g.adj
    for j in range(1, n):
        col = adj[j]
        for i in range(j):
            acc = (acc << 1) | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(text: str, line: int | None = None) -> Graph:
    s = text.strip("\r\n")
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
    if not s:
        raise Graph6HeaderError("empty graph6 string", line)
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise Graph6HeaderError(f"character {ch!r} outside the graph6 range 63..126", line)
    if s[0] != "~":
        n = ord(s[0]) - 63
        body = s[1:]
    else:
        if len(s) >= 2 and s[1] == "~":
            raise Graph6SizeError("8-byte size header implies more than 64 vertices", line)
        if len(s) < 4:
            raise Graph6HeaderError("truncated size header", line)
        n = ((ord(s[1]) - 63) << 12) | ((ord(s[2]) - 63) << 6) | (ord(s[3]) - 63)
        if n <= 62:
            raise Graph6HeaderError(f"long size header used for n={n}", line)
        body = s[4:]
    if n > MAX_VERTICES:
        raise Graph6SizeError(f"{n} vertices exceeds the cap of {MAX_VERTICES}", line)
    need = _data_length(n)
    if len(body) < need:
        raise Graph6LengthError(f"expected {need} data bytes for n={n}, got {len(body)}", line)
    if len(body) > need:
        raise Graph6LengthError(f"{len(body) - need} trailing bytes after graph6 data", line)

    adj = [0] * n
    i, j = 0, 1
    total = n * (n - 1) // 2
    pos = 0
    for ch in body:
        val = ord(ch) - 63
        for shift in range(5, -1, -1):
            if pos >= total:
                if val >> shift & 1:
                    raise Graph6LengthError("nonzero padding bits", line)
                continue
            if val >> shift & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            pos += 1
            i += 1
            if i == j:
                i = 0
                j += 1
    return Graph(n, adj, _trusted=True)


def read_graph6_lines(stream: Iterable[str]) -> Iterator[Graph]:
    """Parse one graph per non-blank line; errors carry the 1-based line number."""
    for lineno, raw in enumerate(stream, start=1):
        if raw.strip():
            yield parse_graph6(raw.strip(), line=lineno)


def emit_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    rows = [(no, ln.strip()) for no, ln in enumerate(text.splitlines(), start=1)]
    rows = [(no, ln) for no, ln in rows if ln and not ln.startswith("#")]
    if not rows:
        raise EdgeListError("missing vertex-count line", 1)
    head_no, head = rows[0]
    parts = head.split()
    if len(parts) == 2 and parts[0] == "n":
        parts = parts[1:]
    if len(parts) != 1 or not parts[0].isdigit():
        raise EdgeListError(f"expected 'n <count>' header, got {head!r}", head_no)
    n = int(parts[0])
    if n > MAX_VERTICES:
        raise EdgeListError(f"{n} vertices exceeds the cap of {MAX_VERTICES}", head_no)
    adj = [0] * n
    for no, ln in rows[1:]:
        fields = ln.split()
        if len(fields) != 2:
            raise EdgeListError(f"expected 'u v', got {ln!r}", no)
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise EdgeListError(f"non-integer vertex in {ln!r}", no) from None
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeIndexError(f"vertex index out of range 0..{n - 1} in {ln!r}", no)
        if u == v:
            raise LoopError(f"loop at vertex {u}", no)
        if adj[u] >> v & 1:
            raise DuplicateEdgeError(f"duplicate edge {min(u, v)} {max(u, v)}", no)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, adj, _trusted=True)


def read_graph(stream: TextIO | str, fmt: str = "auto") -> Graph:
    """Read a single graph; ``fmt`` is ``graph6``, ``edgelist`` or ``auto``."""
    text = stream if isinstance(stream, str) else stream.read()
    if fmt == "auto":
        first = next((ln for ln in text.splitlines() if ln.strip()), "")
        head = first.split()
        fmt = "edgelist" if head[:1] == ["n"] or first.strip().isdigit() else "graph6"
    if fmt == "edgelist":
        return parse_edge_list(text)
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) != 1:
        raise Graph6LengthError(f"expected exactly one graph6 line, got {len(lines)}", len(lines) or 1)
    return parse_graph6(lines[0].strip(), line=1)
