"""graph6 encoding (6-bit chunks, offset 63, upper triangle by columns) and DOT export."""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .graph import Graph, GraphError


def _encode_n(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, 63 + (n >> 12 & 63), 63 + (n >> 6 & 63), 63 + (n & 63)])
    raise GraphError("graph6 supports n <= 258047 here")


def to_graph6(G: Graph) -> str:
    bits = [1 if G.has_edge(i, j) else 0 for j in range(1, G.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = bytes(
        63 + sum(b << (5 - k) for k, b in enumerate(bits[i:i + 6])) for i in range(0, len(bits), 6)
    )
    return (_encode_n(G.n) + body).decode("ascii")


def from_graph6(line: str) -> Graph:
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    data = s.encode("ascii")
    if not data or any(not 63 <= c <= 126 for c in data):
        raise GraphError(f"malformed graph6 string {line!r}")
    if data[0] == 126:
        if len(data) < 4 or data[1] == 126:
            raise GraphError(f"unsupported graph6 header in {line!r}")
        n = (data[1] - 63) << 12 | (data[2] - 63) << 6 | (data[3] - 63)
        body = data[4:]
    else:
        n = data[0] - 63
        body = data[1:]
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise GraphError(f"graph6 body length does not match n={n} in {line!r}")
    bits = [(c - 63) >> (5 - k) & 1 for c in body for k in range(6)]
    if any(bits[nbits:]):
        raise GraphError(f"nonzero padding bits in {line!r}")
    edges = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bits[pos]:
                edges.append((i, j))
            pos += 1
    return Graph.from_edges(n, edges)


def read_graph6_lines(stream: TextIO) -> Iterator[tuple[int, str]]:
    """Yield (1-based line number, stripped text) for non-blank lines."""
    for num, line in enumerate(stream, 1):
        text = line.strip()
        if text:
            yield num, text


def write_graph6(graphs: Iterable[Graph], stream: TextIO) -> int:
    count = 0
    for G in graphs:
        stream.write(to_graph6(G) + "\n")
        count += 1
    return count


def to_dot(G: Graph, name: str = "G", labels: dict[int, str] | None = None) -> str:
    lines = [f"graph {name} {{"]
    for v in range(G.n):
        extra = f' [label="{labels[v]}"]' if labels and v in labels else ""
        lines.append(f"  {v}{extra};")
    lines.extend(f"  {u} -- {v};" for u, v in G.edges)
    lines.append("}")
    return "\n".join(lines) + "\n"
