"""graph6 / sparse6 codecs plus the plain edge-list and rotation-system text formats.

graph6 sizes use the one-byte header (n <= 62) or the ``~`` + three-byte
header (63 <= n <= 258047); with at most 128 vertices the eight-byte form
never occurs and is rejected as malformed.
"""

from __future__ import annotations

from .errors import GraphError, ParseError
from .graph import MAX_VERTICES, Graph, norm_edge

G6_HEADER = ">>graph6<<"
S6_HEADER = ">>sparse6<<"


def _text(line) -> str:
    if isinstance(line, (bytes, bytearray)):
        line = line.decode("ascii", errors="replace")
    return line.strip("\r\n")


def _encode_n(n: int) -> list[int]:
    if n <= 62:
        return [n]
    if n <= 258047:
        return [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    raise GraphError("size outside the supported graph6 range")


def _decode_n(vals: list[int]) -> tuple[int, int]:
    if not vals:
        raise ParseError("empty line")
    if vals[0] < 63:
        return vals[0], 1
    if len(vals) >= 2 and vals[1] == 63:
        raise ParseError("eight-byte size header is not supported")
    if len(vals) < 4:
        raise ParseError("truncated size header")
    n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
    if n < 63:
        raise ParseError("non-minimal size header")
    return n, 4


def _values(s: str) -> list[int]:
    vals = []
    for i, ch in enumerate(s):
        o = ord(ch)
        if not 63 <= o <= 126:
            raise ParseError(f"byte {o} at position {i} is outside 63..126")
        vals.append(o - 63)
    return vals


def encode_graph6(g: Graph) -> bytes:
    """graph6 line (no header, no newline) for this exact labelling."""
    bits = []
    for j in range(1, g.n):
        row = g.adj[j]
        bits.extend((row >> i) & 1 for i in range(j))
    bits += [0] * (-len(bits) % 6)
    out = _encode_n(g.n)
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k:k + 6]:
            v = v << 1 | b
        out.append(v)
    return bytes(v + 63 for v in out)


def decode_graph6(line) -> Graph:
    s = _text(line)
    if s.startswith(G6_HEADER):
        s = s[len(G6_HEADER):]
    vals = _values(s)
    n, k = _decode_n(vals)
    if n == 0:
        raise ParseError("graphs need at least one vertex")
    if n > MAX_VERTICES:
        raise ParseError(f"{n} vertices exceed the capacity of {MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    body = vals[k:]
    if len(body) != (nbits + 5) // 6:
        raise ParseError(f"expected {(nbits + 5) // 6} data bytes for n={n}, got {len(body)}")
    adj = [0] * n
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if body[pos // 6] >> (5 - pos % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            pos += 1
    if body and body[-1] & ((1 << (6 * len(body) - nbits)) - 1):
        raise ParseError("nonzero padding bits")
    return Graph(n, tuple(adj))


def decode_sparse6(line) -> Graph:
    s = _text(line)
    if s.startswith(S6_HEADER):
        s = s[len(S6_HEADER):]
    if not s.startswith(":"):
        raise ParseError("sparse6 lines start with ':'")
    vals = _values(s[1:])
    n, k = _decode_n(vals)
    if n == 0 or n > MAX_VERTICES:
        raise ParseError(f"unsupported vertex count {n}")
    width = max(1, (n - 1).bit_length())
    bits = []
    for v in vals[k:]:
        bits.extend((v >> (5 - i)) & 1 for i in range(6))
    edges = []
    v = 0
    pos = 0
    while pos + 1 + width <= len(bits):
        b = bits[pos]
        x = 0
        for bit in bits[pos + 1:pos + 1 + width]:
            x = x << 1 | bit
        pos += 1 + width
        if b:
            v += 1
        if v >= n:
            break
        if x > v:
            v = x
        elif v < n:
            edges.append((x, v))
    try:
        return Graph.from_edges(n, edges)
    except GraphError as exc:
        raise ParseError(str(exc)) from None


def decode_any(line) -> Graph:
    """graph6 or sparse6, by the leading ':'."""
    s = _text(line)
    return decode_sparse6(s) if s.lstrip(">").startswith(":") or s.startswith(S6_HEADER) else decode_graph6(s)


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((no, line))
    return out


def _ints(no: int, parts: list[str]) -> list[int]:
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise ParseError(f"line {no}: expected integers, got {' '.join(parts)!r}") from None


def decode_edge_list(text: str) -> Graph:
    """``n m`` followed by ``m`` lines ``u v`` (0-based)."""
    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty edge list")
    no, head = lines[0]
    hv = _ints(no, head.split())
    if len(hv) != 2:
        raise ParseError(f"line {no}: header must be 'n m'")
    n, m = hv
    if len(lines) - 1 != m:
        raise ParseError(f"header announces {m} edges, found {len(lines) - 1}")
    edges = []
    seen = set()
    for no, line in lines[1:]:
        uv = _ints(no, line.split())
        if len(uv) != 2:
            raise ParseError(f"line {no}: expected 'u v'")
        u, v = uv
        if u == v:
            raise ParseError(f"line {no}: self-loop at {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"line {no}: vertex outside 0..{n - 1}")
        e = norm_edge(u, v)
        if e in seen:
            raise ParseError(f"line {no}: duplicate edge {u} {v}")
        seen.add(e)
        edges.append(e)
    try:
        return Graph.from_edges(n, edges)
    except GraphError as exc:
        raise ParseError(str(exc)) from None


def encode_edge_list(g: Graph) -> str:
    return "".join([f"{g.n} {g.m}\n"] + [f"{u} {v}\n" for u, v in g.edges()])


def decode_embedding(text: str):
    """Lines ``v: w1 w2 ...`` listing neighbours clockwise; returns ``(graph, embedding)``."""
    from .planar import Embedding

    rows: dict[int, tuple[int, ...]] = {}
    for no, line in _content_lines(text):
        head, sep, rest = line.partition(":")
        if not sep:
            raise ParseError(f"line {no}: expected 'v: w1 w2 ...'")
        (v,) = _ints(no, [head.strip()])
        ws = _ints(no, rest.split())
        if v in rows:
            raise ParseError(f"line {no}: vertex {v} listed twice")
        if v in ws:
            raise ParseError(f"line {no}: self-loop at {v}")
        if len(set(ws)) != len(ws):
            raise ParseError(f"line {no}: repeated neighbour")
        rows[v] = tuple(ws)
    n = len(rows)
    if sorted(rows) != list(range(n)):
        raise ParseError("vertices must be listed as 0..n-1")
    try:
        emb = Embedding.from_rotation([rows[v] for v in range(n)])
    except GraphError as exc:
        raise ParseError(str(exc)) from None
    return emb.graph, emb


def encode_embedding(emb) -> str:
    return "".join(f"{v}: {' '.join(map(str, rot))}\n" for v, rot in enumerate(emb.rotation))
