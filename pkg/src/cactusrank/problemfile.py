"""Problem files: one graph plus one divisor, line-based ASCII.

    # comment lines and blank lines are ignored
    n <N>                 exactly one header, first
    e <u> <v>             one line per edge copy (parallel edges repeat)
    d <v0> ... <v_{N-1}>  exactly one divisor line, last

serialize() emits the canonical form (no comments, edges in stored order),
and parsing it back is a byte-exact round trip.  Parsing distinguishes
syntax problems (ParseError, with a line number) from structurally invalid
graphs (GraphError: loops, out-of-range ids, wrong divisor length,
disconnected input).

Canonical comment-free input is parsed on a fast vectorized path; anything
unusual falls back to a line-by-line pass that produces precise errors.
"""

from __future__ import annotations

import operator
from typing import TextIO, Union

from .graph import DisconnectedGraphError, Divisor, GraphError, Multigraph


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def _parse_lines(text: str, check_connected: bool):
    n = None
    edges = []
    divisor = None
    last_line = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        last_line = lineno
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        tag = parts[0]
        if tag == "n":
            if n is not None:
                raise ParseError("duplicate n header", lineno)
            if len(parts) != 2:
                raise ParseError("n header takes one value", lineno)
            try:
                n = int(parts[1])
            except ValueError:
                raise ParseError(f"bad vertex count {parts[1]!r}", lineno) from None
            if n < 1:
                raise ParseError("vertex count must be at least 1", lineno)
        elif tag == "e":
            if n is None:
                raise ParseError("edge before n header", lineno)
            if divisor is not None:
                raise ParseError("edge after divisor line", lineno)
            if len(parts) != 3:
                raise ParseError("edge line takes two endpoints", lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError("edge endpoints must be integers", lineno) from None
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"line {lineno}: edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"line {lineno}: loop edge ({u}, {u}) not allowed")
            edges.append((u, v))
        elif tag == "d":
            if n is None:
                raise ParseError("divisor before n header", lineno)
            if divisor is not None:
                raise ParseError("duplicate divisor line", lineno)
            try:
                divisor = [int(t) for t in parts[1:]]
            except ValueError:
                raise ParseError("divisor entries must be integers", lineno) from None
            if len(divisor) != n:
                raise GraphError(
                    f"line {lineno}: divisor has {len(divisor)} entries, expected {n}"
                )
        else:
            raise ParseError(f"unknown directive {tag!r}", lineno)
    if n is None:
        raise ParseError("missing n header", last_line or None)
    if divisor is None:
        raise ParseError("missing divisor line", last_line or None)
    g = Multigraph._from_validated(n, tuple(edges))
    if check_connected and not g.is_connected():
        raise DisconnectedGraphError("graph in file is disconnected")
    return g, Divisor(divisor)


def parse_string(text: str, *, check_connected: bool = True):
    """Parse problem-file text into (Multigraph, Divisor).

    check_connected=False skips the connectivity pass; callers that feed the
    graph straight into the block scan (which detects disconnection itself)
    use this to avoid touching every edge twice.
    """
    if "#" in text:
        return _parse_lines(text, check_connected)
    toks = text.split()
    # canonical shape: ["n", N, ("e", u, v) * m, "d", x0..x_{N-1}]
    while True:  # single-shot; break = take the slow path
        if len(toks) < 3 or toks[0] != "n":
            break
        try:
            n = int(toks[1])
        except ValueError:
            break
        rem = len(toks) - 3 - n
        if n < 1 or rem < 0 or rem % 3:
            break
        m = rem // 3
        dpos = 2 + 3 * m
        if toks[dpos] != "d":
            break
        if m and set(toks[2:dpos:3]) != {"e"}:
            break
        try:
            us = list(map(int, toks[3:dpos:3]))
            vs = list(map(int, toks[4:dpos:3]))
            dvals = list(map(int, toks[dpos + 1:]))
        except ValueError:
            break
        if m:
            if min(min(us), min(vs)) < 0 or max(max(us), max(vs)) >= n:
                break
            if sum(map(operator.eq, us, vs)):
                break
        g = Multigraph._from_validated(n, tuple(zip(us, vs)))
        if check_connected and not g.is_connected():
            raise DisconnectedGraphError("graph in file is disconnected")
        return g, Divisor(dvals)
    return _parse_lines(text, check_connected)


def parse_file(source: Union[str, TextIO], *, check_connected: bool = True):
    """Parse a path or an open text stream."""
    if hasattr(source, "read"):
        text = source.read()
    else:
        with open(source, "r", encoding="ascii") as fh:
            text = fh.read()
    return parse_string(text, check_connected=check_connected)


def serialize(g: Multigraph, f) -> str:
    """Canonical problem-file text for (g, f)."""
    if len(f) != g.n:
        raise GraphError("divisor length mismatch")
    parts = [f"n {g.n}\n"]
    parts.extend(f"e {u} {v}\n" for u, v in g.edges)
    parts.append("d " + " ".join(map(str, f)) + "\n")
    return "".join(parts)
