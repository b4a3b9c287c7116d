"""Text encodings: graph6, plain edge lists and coloured edge lists."""

from __future__ import annotations

from .graph import Graph, GraphError, graph_from_edge_list

GRAPH6_SHORT_N = 62
GRAPH6_MAX_N = 258047


class CodecError(GraphError):
    pass


def _size_prefix(n: int) -> str:
    if n <= GRAPH6_SHORT_N:
        return chr(n + 63)
    # long form: '~' then n in three 6-bit groups
    return "~" + "".join(chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0))


def to_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX_N:
        raise CodecError(f"graph6 supports n <= {GRAPH6_MAX_N}, got {g.n}")
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    out = [_size_prefix(g.n)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise CodecError("empty graph6 string")
    if any(not (63 <= ord(ch) <= 126) for ch in s):
        raise CodecError(f"invalid graph6 character in {text!r}")
    if s[0] != "~":
        n, body = ord(s[0]) - 63, s[1:]
    elif len(s) >= 2 and s[1] == "~":
        raise CodecError("graph6 8-byte size form (n > 258047) is not supported")
    elif len(s) < 4:
        raise CodecError("truncated graph6 size prefix")
    else:
        n = sum((ord(s[1 + i]) - 63) << (12 - 6 * i) for i in range(3))
        body = s[4:]
        if n <= GRAPH6_SHORT_N:
            raise CodecError("graph6 long size form used for a small graph")
    total = n * (n - 1) // 2
    if len(body) != (total + 5) // 6:
        raise CodecError(f"graph6 body has {len(body)} bytes, expected {(total + 5) // 6}")
    bits = []
    for ch in body:
        val = ord(ch) - 63
        bits.extend((val >> (5 - i)) & 1 for i in range(6))
    if any(bits[total:]):
        raise CodecError("non-zero padding bits in graph6 string")
    pairs = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                pairs.append((i, j))
            k += 1
    return graph_from_edge_list(n, pairs)


def _int_rows(text: str) -> list[list[int]]:
    rows = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            rows.append([int(tok) for tok in line.split()])
        except ValueError:
            raise CodecError(f"non-integer token in line {line!r}") from None
    return rows


def to_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> Graph:
    rows = _int_rows(text)
    if not rows or len(rows[0]) != 2:
        raise CodecError("edge list must start with a line 'n m'")
    n, m = rows[0]
    body = rows[1:]
    if len(body) != m or any(len(r) != 2 for r in body):
        raise CodecError(f"expected {m} lines 'u v'")
    return graph_from_edge_list(n, body)


def to_coloring_text(g: Graph, colors: dict[tuple[int, int], int]) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v} {colors[(u, v)]}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def from_coloring_text(text: str) -> tuple[Graph, dict[tuple[int, int], int]]:
    """Parse ``n m`` followed by ``m`` lines ``u v c``."""
    rows = _int_rows(text)
    if not rows or len(rows[0]) != 2:
        raise CodecError("coloring file must start with a line 'n m'")
    n, m = rows[0]
    body = rows[1:]
    if len(body) != m or any(len(r) != 3 for r in body):
        raise CodecError(f"expected {m} lines 'u v c'")
    g = graph_from_edge_list(n, [(u, v) for u, v, _ in body])
    if g.m != m:
        raise CodecError("duplicate edges in coloring file")
    colors = {(min(u, v), max(u, v)): c for u, v, c in body}
    return g, colors


def parse_graph(text: str, fmt: str) -> Graph:
    if fmt == "graph6":
        return from_graph6(text)
    if fmt == "edgelist":
        return from_edge_list(text)
    raise CodecError(f"unknown graph format {fmt!r}")


def format_graph(g: Graph, fmt: str) -> str:
    if fmt == "graph6":
        return to_graph6(g)
    if fmt == "edgelist":
        return to_edge_list(g)
    raise CodecError(f"unknown graph format {fmt!r}")
