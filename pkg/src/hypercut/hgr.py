"""hMETIS-style ``.hgr`` reading and writing.

Header ``m n [fmt]``, then one line per hyperedge listing 1-indexed vertex
ids. With ``fmt`` equal to 1 each edge line starts with its positive integer
weight. Lines beginning with ``%`` are comments; blank lines are ignored.
"""

from __future__ import annotations

from .errors import ParseError
from .hypergraph import Hypergraph, validate


def _ints(tokens, lineno, what):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"non-integer {what}: {' '.join(tokens)!r}", lineno) from None


def parse_hgr(text: str) -> Hypergraph:
    lines = [
        (i, line.split())
        for i, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.lstrip().startswith("%")
    ]
    if not lines:
        raise ParseError("missing header line")
    lineno, header = lines[0]
    if len(header) not in (2, 3):
        raise ParseError("header must be 'm n' or 'm n fmt'", lineno)
    vals = _ints(header, lineno, "header")
    m, n = vals[0], vals[1]
    fmt = vals[2] if len(vals) == 3 else 0
    if m < 0 or n < 1:
        raise ParseError(f"bad sizes m={m}, n={n}", lineno)
    if fmt not in (0, 1):
        raise ParseError(f"unsupported fmt {fmt} (only 0 and 1)", lineno)
    body = lines[1:]
    if len(body) != m:
        at = body[m][0] if len(body) > m else None
        raise ParseError(f"expected {m} edge lines, found {len(body)}", at)
    edges, weights = [], []
    for lineno, tokens in body:
        vals = _ints(tokens, lineno, "edge entry")
        w = 1
        if fmt == 1:
            w, vals = vals[0], vals[1:]
            if w < 1:
                raise ParseError(f"weight {w} must be positive", lineno)
        if not vals:
            raise ParseError("edge line lists no vertices", lineno)
        for v in vals:
            if not 1 <= v <= n:
                raise ParseError(f"vertex {v} not in 1..{n}", lineno)
        edges.append([v - 1 for v in vals])
        weights.append(w)
    return validate(n, edges, weights)


def read_hgr(path) -> Hypergraph:
    with open(path, encoding="utf-8") as fh:
        return parse_hgr(fh.read())


def format_hgr(G: Hypergraph) -> str:
    """Serialize ``G``; weights are written only when some weight is not 1."""
    weighted = any(w != 1 for w in G.weights)
    out = [f"{G.m} {G.n} 1" if weighted else f"{G.m} {G.n}"]
    for e in G.edges:
        ids = " ".join(str(v + 1) for v in e.vertices)
        out.append(f"{e.weight} {ids}" if weighted else ids)
    return "\n".join(out) + "\n"
