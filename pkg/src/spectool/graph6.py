"""graph6 short-form codec, bit exact.

Layout: first byte is n + 63 (0 <= n <= 62). The upper-triangle bits
x(0,1), x(0,2), x(1,2), x(0,3), x(1,3), x(2,3), ... follow column-major,
packed big-endian into 6-bit groups, zero-padded to a multiple of 6; each
group + 63 gives a printable byte in 63..126. Byte 126 ('~') marks the long
form, which is out of scope here.
"""

from .errors import (
    BadPaddingError,
    EdgeListFormatError,
    MalformedHeaderError,
    TruncatedBodyError,
    UnsupportedOrderError,
)
from .graph import Graph, from_edges

HEADER_LINE = ">>graph6<<"


def from_graph6(text: str) -> Graph:
    """Decode one short-form graph6 string."""
    if text.startswith(HEADER_LINE):
        text = text[len(HEADER_LINE):]
    text = text.strip()
    if not text:
        raise MalformedHeaderError("empty graph6 string")
    first = ord(text[0])
    if first == 126:
        raise UnsupportedOrderError("long-form graph6 (n > 62) not supported")
    if not 63 <= first <= 125:
        raise MalformedHeaderError(f"bad order byte {text[0]!r}")
    n = first - 63
    nbits = n * (n - 1) // 2
    ngroups = (nbits + 5) // 6
    body = text[1:]
    if len(body) < ngroups:
        raise TruncatedBodyError(f"need {ngroups} body bytes, got {len(body)}")
    if len(body) > ngroups:
        raise MalformedHeaderError(f"{len(body) - ngroups} trailing bytes")
    bitstream = 0
    for ch in body:
        code = ord(ch) - 63
        if not 0 <= code <= 63:
            raise MalformedHeaderError(f"bad body byte {ch!r}")
        bitstream = (bitstream << 6) | code
    pad = 6 * ngroups - nbits
    if pad and bitstream & ((1 << pad) - 1):
        raise BadPaddingError("nonzero padding bits")
    bitstream >>= pad
    edges = []
    k = nbits - 1
    for v in range(n):
        for u in range(v):
            if bitstream >> k & 1:
                edges.append((u, v))
            k -= 1
    return from_edges(n, edges)


def to_graph6(g: Graph) -> str:
    """Encode a graph (n <= 62) in short form."""
    if g.n > 62:
        raise UnsupportedOrderError(f"n = {g.n} exceeds the short-form cap 62")
    nbits = g.n * (g.n - 1) // 2
    bitstream = 0
    for v in range(g.n):
        for u in range(v):
            bitstream = (bitstream << 1) | (g.adj[v] >> u & 1)
    pad = -nbits % 6
    bitstream <<= pad
    chars = [chr(g.n + 63)]
    for shift in range(nbits + pad - 6, -6, -6):
        chars.append(chr((bitstream >> shift & 63) + 63))
    return "".join(chars)


def read_graph6_lines(text: str) -> list[Graph]:
    """Decode one graph per nonempty line, skipping format-header lines."""
    graphs = []
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        if line.startswith(HEADER_LINE):
            line = line[len(HEADER_LINE):].strip()
            if not line:
                continue
        graphs.append(from_graph6(line))
    return graphs


def from_edge_list(text: str) -> Graph:
    """Parse the plain text format: an "n m" header then m "u v" lines."""
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise EdgeListFormatError("empty edge list")
    head = lines[0].split()
    if len(head) != 2:
        raise EdgeListFormatError(f"header must be 'n m', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise EdgeListFormatError(f"non-integer header {lines[0]!r}") from exc
    if len(lines) - 1 != m:
        raise EdgeListFormatError(f"expected {m} edge lines, got {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise EdgeListFormatError(f"bad edge line {ln!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise EdgeListFormatError(f"non-integer edge line {ln!r}") from exc
    return from_edges(n, edges)


def to_edge_list(g: Graph) -> str:
    """Inverse of ``from_edge_list`` (edges in increasing order)."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines)


def graph_text(g: Graph) -> tuple[str, str]:
    """(format, text) pair: graph6 up to n = 62, edge list beyond."""
    if g.n <= 62:
        return ("graph6", to_graph6(g))
    return ("edgelist", to_edge_list(g))
