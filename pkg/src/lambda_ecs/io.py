"""Instance file format and result records.

::

    p ecs <n> <m> <directed:0|1> <weighted:0|1>
    e <u> <v> [weight]
    c <comment>

Vertices are 1-based in files and reports, 0-based inside the library.
Edge ids follow file order.
"""

from __future__ import annotations

import json
import math
from pathlib import Path
from typing import Iterable

from .exceptions import DomainError, ParseError
from .graph import Graph


def _int(tok: str, lineno: int, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"{what} {tok!r} is not an integer", lineno) from None


def _flag(tok: str, lineno: int, what: str) -> bool:
    if tok not in ("0", "1"):
        raise ParseError(f"{what} flag must be 0 or 1, got {tok!r}", lineno)
    return tok == "1"


def parse(text: str) -> Graph:
    header = None
    edges: list[tuple[int, int]] = []
    weights: list[float] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        toks = raw.split()
        if not toks or toks[0] == "c":
            continue
        if toks[0] == "p":
            if header is not None:
                raise ParseError("second problem line", lineno)
            if len(toks) != 6 or toks[1] != "ecs":
                raise ParseError("problem line must read 'p ecs n m directed weighted'", lineno)
            n, m = _int(toks[2], lineno, "n"), _int(toks[3], lineno, "m")
            if n < 1 or m < 0:
                raise ParseError(f"invalid sizes n={n}, m={m}", lineno)
            header = (n, m, _flag(toks[4], lineno, "directed"), _flag(toks[5], lineno, "weighted"))
            continue
        if toks[0] != "e":
            raise ParseError(f"unknown line type {toks[0]!r}", lineno)
        if header is None:
            raise ParseError("edge line before the problem line", lineno)
        n, _, _, weighted = header
        if len(toks) != (4 if weighted else 3):
            raise ParseError(f"edge line needs {'u v weight' if weighted else 'u v'}", lineno)
        u, v = _int(toks[1], lineno, "vertex"), _int(toks[2], lineno, "vertex")
        for x in (u, v):
            if not 1 <= x <= n:
                raise ParseError(f"vertex {x} outside 1..{n}", lineno)
        if u == v:
            raise ParseError(f"self-loop on vertex {u}", lineno)
        if weighted:
            try:
                w = float(toks[3])
            except ValueError:
                raise ParseError(f"weight {toks[3]!r} is not a number", lineno) from None
            if not math.isfinite(w) or w < 0:
                raise ParseError(f"weight {toks[3]} must be a finite number >= 0", lineno)
            weights.append(w)
        edges.append((u - 1, v - 1))
    if header is None:
        raise ParseError("missing problem line")
    n, m, directed, weighted = header
    if len(edges) != m:
        raise ParseError(f"header announces {m} edges but {len(edges)} were given")
    return Graph(n, edges, directed, weights if weighted else None)


def read_graph(path: str | Path) -> Graph:
    return parse(Path(path).read_text(encoding="utf-8"))


def emit(g: Graph, comments: Iterable[str] = ()) -> str:
    lines = [f"c {c}" for c in comments]
    lines.append(f"p ecs {g.n} {g.m} {int(g.directed)} {int(g.weighted)}")
    for e, (u, v) in enumerate(g.edges):
        tail = f" {g.weights[e]!r}" if g.weights is not None else ""
        lines.append(f"e {u + 1} {v + 1}{tail}")
    return "\n".join(lines) + "\n"


def write_graph(g: Graph, path: str | Path, comments: Iterable[str] = ()) -> None:
    Path(path).write_text(emit(g, comments), encoding="utf-8")


def parse_edge_list(text: str, m: int) -> list[int]:
    """1-based edge indices separated by commas or whitespace, returned 0-based."""
    out = []
    for tok in text.replace(",", " ").split():
        idx = int(tok) if tok.lstrip("-").isdigit() else None
        if idx is None or not 1 <= idx <= m:
            raise DomainError(f"edge index {tok!r} outside 1..{m}")
        out.append(idx - 1)
    return out


def result_record(
    status: str,
    lam: int | None = None,
    k: int | None = None,
    edges: Iterable[int] = (),
    verified: bool = False,
    weight: float | None = None,
    irrelevant_count: int = 0,
    candidate_count: int = 0,
    message: str | None = None,
) -> dict:
    rec = {
        "status": status,
        "edges": sorted(e + 1 for e in edges),
        "lambda": lam,
        "k": k,
        "verified": verified,
        "irrelevant_count": irrelevant_count,
        "candidate_count": candidate_count,
    }
    if weight is not None:
        rec["weight"] = weight
    if message is not None:
        rec["message"] = message
    return rec


def dumps(record: dict) -> str:
    return json.dumps(record, sort_keys=False)
