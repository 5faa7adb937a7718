"""graph6, DOT and edge-list JSON codecs.

Every codec round-trips the edge set exactly.  Vertex ``v`` of a graph is
vertex ``v - 1`` in graph6's 0-based bit layout.
"""

from __future__ import annotations

import json
import re
from pathlib import Path
from typing import Mapping

from .errors import ParseError
from .graph import Graph

FORMATS = ("graph6", "dot", "json")


# graph6 -----------------------------------------------------------------


def _g6_size(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n < 258048:
        return bytes([126, 63 + (n >> 12 & 63), 63 + (n >> 6 & 63), 63 + (n & 63)])
    return bytes([126, 126] + [63 + (n >> s & 63) for s in range(30, -1, -6)])


def encode_graph6(G: Graph) -> str:
    n = G.n
    bits = []
    for v in range(1, n):
        nb = G.neighbors(v + 1)
        bits.extend(1 if (u + 1) in nb else 0 for u in range(v))
    bits.extend([0] * (-len(bits) % 6))
    body = bytes(
        63 + int("".join(map(str, bits[i : i + 6])), 2) for i in range(0, len(bits), 6)
    )
    return (_g6_size(n) + body).decode("ascii")


def decode_graph6(text: str) -> Graph:
    raw = text.strip()
    if raw.startswith(">>graph6<<"):
        raw = raw[len(">>graph6<<") :]
    data = raw.encode("ascii", errors="replace")
    if not data:
        raise ParseError("empty graph6 string", byte=0)
    for pos, c in enumerate(data):
        if not 63 <= c <= 126:
            raise ParseError(f"byte {c!r} outside graph6 range 63..126", byte=pos)
    if data[0] != 126:
        n, pos = data[0] - 63, 1
    elif len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise ParseError("truncated 8-byte size field", byte=len(data))
        n, pos = 0, 8
        for c in data[2:8]:
            n = (n << 6) | (c - 63)
    else:
        if len(data) < 4:
            raise ParseError("truncated 4-byte size field", byte=len(data))
        n, pos = 0, 4
        for c in data[1:4]:
            if c == 126:
                raise ParseError("invalid size field", byte=1)
            n = (n << 6) | (c - 63)
    nbits = n * (n - 1) // 2
    need = -(-nbits // 6)
    body = data[pos:]
    if len(body) != need:
        raise ParseError(
            f"expected {need} data bytes for n={n}, found {len(body)}", byte=pos + min(len(body), need)
        )
    edges = []
    k = 0
    for v in range(1, n):
        for u in range(v):
            c = body[k // 6] - 63
            if c >> (5 - k % 6) & 1:
                edges.append((u + 1, v + 1))
            k += 1
    if nbits % 6 and (body[-1] - 63) & ((1 << (6 - nbits % 6)) - 1):
        raise ParseError("nonzero padding bits", byte=pos + need - 1)
    return Graph(n, edges)


# edge-list JSON ----------------------------------------------------------


def encode_json(G: Graph) -> str:
    return json.dumps({"n": G.n, "edges": [list(e) for e in G.edges]}, separators=(",", ":"))


def decode_json(text: str) -> Graph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", line=exc.lineno, byte=exc.pos) from None
    if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
        raise ParseError('expected an object with keys "n" and "edges"', line=1)
    n, edges = obj["n"], obj["edges"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ParseError(f'"n" must be a non-negative integer, got {n!r}', line=1)
    if not isinstance(edges, list):
        raise ParseError('"edges" must be a list', line=1)
    pairs = []
    for idx, e in enumerate(edges):
        if not (
            isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) and not isinstance(x, bool) for x in e)
        ):
            raise ParseError(f"edge #{idx} is not a pair of integers: {e!r}", line=1)
        u, v = e
        if not (1 <= u <= n and 1 <= v <= n) or u == v:
            raise ParseError(f"edge #{idx} {e!r} invalid for n={n}", line=1)
        pairs.append((u, v))
    return Graph(n, pairs)


# DOT ----------------------------------------------------------------------


def encode_dot(G: Graph, name: str = "G", comments: Mapping[int, str] | None = None) -> str:
    """Undirected DOT.  ``comments`` attaches a ``// text`` note per vertex."""
    lines = [f"graph {name} {{"]
    for v in G.vertices():
        note = comments.get(v) if comments else None
        lines.append(f"  {v};" + (f" // {note}" if note else ""))
    lines.extend(f"  {u} -- {v};" for u, v in G.edges)
    lines.append("}")
    return "\n".join(lines) + "\n"


_DOT_HEADER = re.compile(r"^\s*(strict\s+)?graph\b\s*(\"[^\"]*\"|[A-Za-z_][\w]*)?\s*\{\s*$")
_DOT_NODE = re.compile(r"^(\d+)\s*(\[[^\]]*\])?$")
_DOT_EDGE = re.compile(r"^(\d+)((?:\s*--\s*\d+)+)\s*(\[[^\]]*\])?$")


def decode_dot(text: str) -> Graph:
    """Parse the undirected DOT subset written by :func:`encode_dot`.

    Vertices must be positive integers; the order is the largest id seen.
    Attribute lists are accepted and ignored.
    """
    nodes: set[int] = set()
    edges: list[tuple[int, int]] = []
    opened = closed = False
    in_block_comment = False
    for lineno, line in enumerate(text.splitlines(), start=1):
        if in_block_comment:
            end = line.find("*/")
            if end < 0:
                continue
            line = line[end + 2 :]
            in_block_comment = False
        line = re.sub(r"/\*.*?\*/", "", line)
        if "/*" in line:
            line, in_block_comment = line[: line.index("/*")], True
        line = line.split("//", 1)[0]
        if line.lstrip().startswith("#"):
            continue
        if not line.strip():
            continue
        if not opened:
            if not _DOT_HEADER.match(line):
                raise ParseError("expected 'graph NAME {'", line=lineno)
            opened = True
            continue
        if closed:
            raise ParseError("content after closing brace", line=lineno)
        for stmt in line.split(";"):
            stmt = stmt.strip()
            if not stmt:
                continue
            if stmt == "}":
                closed = True
                continue
            if "->" in stmt:
                raise ParseError("directed edge in undirected graph", line=lineno)
            if (mt := _DOT_EDGE.match(stmt)) is not None:
                chain = [int(mt.group(1))] + [int(x) for x in re.findall(r"\d+", mt.group(2))]
                for u, v in zip(chain, chain[1:]):
                    if u == v:
                        raise ParseError(f"self-loop at {u}", line=lineno)
                    edges.append((u, v))
                nodes.update(chain)
            elif (mt := _DOT_NODE.match(stmt)) is not None:
                nodes.add(int(mt.group(1)))
            elif stmt.split("[")[0].strip() in ("node", "edge", "graph"):
                continue
            else:
                raise ParseError(f"cannot parse statement {stmt!r}", line=lineno)
    if not opened:
        raise ParseError("missing graph header", line=1)
    if not closed:
        raise ParseError("missing closing brace", line=len(text.splitlines()))
    if 0 in nodes:
        raise ParseError("vertex ids are 1-based", line=1)
    return Graph(max(nodes, default=0), edges)


# dispatch -------------------------------------------------------------------


def encode(G: Graph, fmt: str) -> str:
    if fmt == "graph6":
        return encode_graph6(G)
    if fmt == "dot":
        return encode_dot(G)
    if fmt == "json":
        return encode_json(G)
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")


def decode(text: str, fmt: str) -> Graph:
    if fmt == "graph6":
        return decode_graph6(text)
    if fmt == "dot":
        return decode_dot(text)
    if fmt == "json":
        return decode_json(text)
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")


def format_for_path(path: str | Path) -> str:
    suffix = Path(path).suffix.lower()
    return {".g6": "graph6", ".graph6": "graph6", ".dot": "dot", ".gv": "dot", ".json": "json"}.get(
        suffix, "graph6"
    )


def read_graph(path: str | Path, fmt: str | None = None) -> Graph:
    return decode(Path(path).read_text(), fmt or format_for_path(path))
