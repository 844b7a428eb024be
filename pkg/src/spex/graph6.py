"""graph6 encoding and decoding.

Format: the order ``N(n)`` followed by the upper triangle of the adjacency
matrix in column-major order (``(0,1), (0,2), (1,2), (0,3), ...``), packed six
bits per byte, each byte offset by 63. ``N(n)`` is one byte for ``n <= 62``,
``'~'`` plus three bytes for ``n <= 258047``, ``'~~'`` plus six bytes beyond.
"""

from __future__ import annotations

from .errors import CapacityError, ParseError
from .graphs import MAX_ORDER, Graph

HEADER = ">>graph6<<"
MAX_G6_ORDER = 68_719_476_735


def _encode_order(n: int) -> str:
    if n < 0 or n > MAX_G6_ORDER:
        raise CapacityError(f"graph6 cannot encode order {n}")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def encode_g6(g: Graph) -> str:
    n = g.n
    adj = g.adj
    out = [_encode_order(n)]
    acc = 0
    nbits = 0
    for j in range(1, n):
        row = adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def decode_g6(text: str) -> Graph:
    s = text.strip()
    base = 0
    if s.startswith(HEADER):
        base = len(HEADER)
        s = s[base:]
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"invalid graph6 character {ch!r}", base + i)
    if not s:
        raise ParseError("empty graph6 string", base)
    if s[0] != "~":
        n, pos = ord(s[0]) - 63, 1
    elif len(s) >= 2 and s[1] == "~":
        if len(s) < 8:
            raise ParseError("truncated 36-bit order field", base + len(s))
        n = 0
        for ch in s[2:8]:
            n = (n << 6) | (ord(ch) - 63)
        pos = 8
    else:
        if len(s) < 4:
            raise ParseError("truncated 18-bit order field", base + len(s))
        n = 0
        for ch in s[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        pos = 4
    if n > MAX_ORDER:
        raise CapacityError(f"order {n} exceeds the cap of {MAX_ORDER} vertices")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = s[pos:]
    if len(body) != need:
        off = base + pos + min(len(body), need)
        raise ParseError(f"expected {need} edge bytes for n={n}, found {len(body)}", off)
    adj = [0] * n
    i, j = 0, 1
    k = 0
    for b, ch in enumerate(body):
        val = ord(ch) - 63
        for shift in range(5, -1, -1):
            if k == nbits:
                if val & ((1 << (shift + 1)) - 1):
                    raise ParseError("non-zero padding bits", base + pos + b)
                break
            if val >> shift & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
            i += 1
            if i == j:
                i, j = 0, j + 1
    return Graph._trusted(n, tuple(adj))
