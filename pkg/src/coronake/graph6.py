"""graph6 encoding for graphs with at most 62 vertices.

Bits of the upper adjacency triangle are taken column by column,
``x(0,1), x(0,2), x(1,2), x(0,3), ...``, packed six to a byte (most
significant first, zero padded) and offset by 63.
"""

from __future__ import annotations

from .graph import EMPTY, Graph, SizeLimitError

MAX_VERTICES = 62
HEADER = ">>graph6<<"
EMPTY_TOKEN = "K0"


class Graph6Error(ValueError):
    """Malformed graph6 input.

    ``kind`` is one of ``"character"``, ``"size"``, ``"length"`` or
    ``"padding"`` so callers can tell the failure modes apart.
    """

    def __init__(self, kind: str, message: str):
        super().__init__(message)
        self.kind = kind


def _bit_count(n: int) -> int:
    return n * (n - 1) // 2


def parse_graph6(text: str) -> Graph:
    token = text.strip()
    if token.startswith(HEADER):
        token = token[len(HEADER):]
    if not token:
        raise Graph6Error("length", "empty graph6 token")
    for pos, ch in enumerate(token):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error("character", f"character {ch!r} at offset {pos} is outside 63..126")
    n = ord(token[0]) - 63
    if n > MAX_VERTICES:
        raise Graph6Error("size", "multi-byte size fields (n > 62) are not supported")

    nbits = _bit_count(n)
    nbytes = -(-nbits // 6)
    body = token[1:]
    if len(body) < nbytes:
        raise Graph6Error("length", f"expected {nbytes} data bytes for n={n}, got {len(body)}")
    if len(body) > nbytes:
        raise Graph6Error("length", f"{len(body) - nbytes} trailing bytes after graph6 data")

    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(body[k // 6]) - 63
            if byte >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    if nbits % 6:
        pad = 6 - nbits % 6
        if (ord(body[-1]) - 63) & ((1 << pad) - 1):
            raise Graph6Error("padding", "nonzero padding bits in final byte")
    return Graph(n, tuple(adj))


def write_graph6(g: Graph) -> str:
    if g.n > MAX_VERTICES:
        raise SizeLimitError(f"graph6 writer supports n <= {MAX_VERTICES}, got {g.n}")
    out = [chr(63 + g.n)]
    acc = 0
    filled = 0
    for j in range(1, g.n):
        column = g.adj[j]
        for i in range(j):
            acc = acc << 1 | (column >> i & 1)
            filled += 1
            if filled == 6:
                out.append(chr(63 + acc))
                acc = filled = 0
    if filled:
        out.append(chr(63 + (acc << (6 - filled))))
    return "".join(out)


def parse_token(token: str) -> Graph:
    """Parse a graph6 token, or the literal ``K0`` for the empty graph."""
    token = token.strip()
    if token == EMPTY_TOKEN:
        return EMPTY
    return parse_graph6(token)


def format_token(g: Graph) -> str:
    return EMPTY_TOKEN if g.n == 0 else write_graph6(g)


def read_catalog(text: str) -> list[Graph]:
    """One token per line; blank lines and ``#`` comments are skipped."""
    return [parse_token(line) for line in content_lines(text)]


def content_lines(text: str) -> list[str]:
    lines = []
    for raw in text.splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            lines.append(line)
    return lines
