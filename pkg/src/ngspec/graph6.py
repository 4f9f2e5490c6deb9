"""graph6 encoder/decoder (bit-exact with nauty's ``showg``/``geng`` output)."""

from __future__ import annotations

from pathlib import Path
from typing import Iterator

from .graph import Graph, pair_order

MAX_N = 258047
HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


def _encode_n(n: int) -> str:
    if n < 0 or n > MAX_N:
        raise ValueError(f"graph6 supports 0 <= n <= {MAX_N}, got {n}")
    if n < 63:
        return chr(63 + n)
    return "~" + "".join(chr(63 + (n >> s & 63)) for s in (12, 6, 0))


def write_graph6(g: Graph) -> str:
    out = [_encode_n(g.n)]
    acc = nbits = 0
    for u, v in pair_order(g.n):
        acc = acc << 1 | (g.rows[u] >> v & 1)
        nbits += 1
        if nbits == 6:
            out.append(chr(63 + acc))
            acc = nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    line = text.rstrip("\r\n")
    if line.startswith(HEADER):
        line = line[len(HEADER):]
    if not line:
        raise Graph6Error("empty record", 0)
    for i, ch in enumerate(line):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} outside 63..126", i)
    vals = [ord(ch) - 63 for ch in line]

    if vals[0] < 63:
        n, pos = vals[0], 1
    else:
        if len(vals) > 1 and vals[1] == 63:
            raise Graph6Error(f"n > {MAX_N} is not supported", 1)
        if len(vals) < 4:
            raise Graph6Error("truncated size header", len(vals))
        n = vals[1] << 12 | vals[2] << 6 | vals[3]
        if n < 63:
            raise Graph6Error("non-canonical long size header", 1)
        pos = 4

    pairs = pair_order(n)
    nbytes = (len(pairs) + 5) // 6
    if len(vals) - pos < nbytes:
        raise Graph6Error(f"truncated payload: need {nbytes} data bytes", len(vals))
    if len(vals) - pos > nbytes:
        raise Graph6Error("trailing bytes after payload", pos + nbytes)

    rows = [0] * n
    for i, (u, v) in enumerate(pairs):
        byte = vals[pos + i // 6]
        if byte >> (5 - i % 6) & 1:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
    pad = 6 * nbytes - len(pairs)
    if pad and vals[-1] & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits", len(vals) - 1)
    return Graph(n, tuple(rows))


def read_graph6_file(path: str | Path) -> Iterator[Graph]:
    with open(path, encoding="ascii") as fh:
        for lineno, line in enumerate(fh, 1):
            if not line.strip():
                continue
            try:
                yield parse_graph6(line)
            except Graph6Error as exc:
                raise Graph6Error(f"{path}:{lineno}: {exc.args[0]}", exc.offset) from None
