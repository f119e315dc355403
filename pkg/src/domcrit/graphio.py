"""Graph serialization: graph6 and a small edge-list text format.

graph6 is the usual printable-ASCII encoding: the order, then the upper
triangle of the adjacency matrix read column by column, packed six bits per
character with 63 added.  The edge-list format is line oriented: a header
``n <count>``, then one ``u v`` pair per line, with ``#`` comments allowed.
Duplicate edges in an edge list merge silently; loops are rejected.
"""

from __future__ import annotations

from .graph import Graph, MAX_VERTICES


class GraphParseError(ValueError):
    pass


def to_graph6(g: Graph) -> str:
    if g.n <= 62:
        head = chr(g.n + 63)
    else:
        head = "~" + "".join(
            chr(((g.n >> shift) & 63) + 63) for shift in (12, 6, 0)
        )
    bits = []
    for col in range(1, g.n):
        for row in range(col):
            bits.append(g.adj[row] >> col & 1)
    while len(bits) % 6:
        bits.append(0)
    body = []
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i : i + 6]:
            val = val << 1 | b
        body.append(chr(val + 63))
    return head + "".join(body)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise GraphParseError("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise GraphParseError(f"invalid graph6 character {ch!r}")
    if s[0] == "~":
        if len(s) < 4:
            raise GraphParseError("truncated graph6 order")
        if s[1] == "~":
            raise GraphParseError("graph6 orders beyond 258047 are not supported")
        n = 0
        for ch in s[1:4]:
            n = n << 6 | (ord(ch) - 63)
        body = s[4:]
    else:
        n = ord(s[0]) - 63
        body = s[1:]
    if n > MAX_VERTICES:
        raise GraphParseError(f"graph6 order {n} exceeds {MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    if len(body) != expected:
        raise GraphParseError(
            f"graph6 body has {len(body)} characters, expected {expected} for order {n}"
        )
    bits = []
    for ch in body:
        val = ord(ch) - 63
        for shift in range(5, -1, -1):
            bits.append(val >> shift & 1)
    if any(bits[nbits:]):
        raise GraphParseError("nonzero padding bits in graph6 body")
    masks = [0] * n
    idx = 0
    for col in range(1, n):
        for row in range(col):
            if bits[idx]:
                masks[row] |= 1 << col
                masks[col] |= 1 << row
            idx += 1
    return Graph.from_adj(n, masks)


def to_edgelist(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def from_edgelist(text: str) -> Graph:
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise GraphParseError("empty edge list")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "n":
        raise GraphParseError(f"edge list must start with 'n <count>', got {lines[0]!r}")
    try:
        n = int(head[1])
    except ValueError as exc:
        raise GraphParseError(f"bad order in header {lines[0]!r}") from exc
    if n < 0 or n > MAX_VERTICES:
        raise GraphParseError(f"order {n} out of range")
    edges = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise GraphParseError(f"bad edge line {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise GraphParseError(f"bad edge line {line!r}") from exc
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(f"edge ({u},{v}) out of range for order {n}")
        if u == v:
            raise GraphParseError(f"loop at vertex {u} not allowed")
        edges.append((u, v))  # duplicates merge in the bitmask
    return Graph(n, edges)


FORMATS = ("graph6", "edgelist")


def loads(text: str, fmt: str) -> Graph:
    if fmt == "graph6":
        return from_graph6(text)
    if fmt == "edgelist":
        return from_edgelist(text)
    raise GraphParseError(f"unknown format {fmt!r}")


def dumps(g: Graph, fmt: str) -> str:
    if fmt == "graph6":
        return to_graph6(g) + "\n"
    if fmt == "edgelist":
        return to_edgelist(g)
    raise GraphParseError(f"unknown format {fmt!r}")
