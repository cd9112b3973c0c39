"""Loop-free undirected multigraphs and integer divisors (chip configurations).

Vertices are dense integer ids 0..n-1.  Parallel edges are allowed and are
tracked by multiplicity; loops are rejected at construction.  Graphs are
immutable once built, derived views (adjacency, degrees, CSR arrays) are
computed lazily and cached.
"""

from __future__ import annotations

from typing import Iterable, Sequence


class GraphError(ValueError):
    """Invalid graph construction or an operation on an unsuitable graph."""


class DisconnectedGraphError(GraphError):
    """Raised by operations that require a connected graph."""


class Multigraph:
    __slots__ = ("n", "edges", "_adj", "_degrees", "_csr_cache", "_connected")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if not isinstance(n, int) or n < 1:
            raise GraphError(f"vertex count must be a positive integer, got {n!r}")
        es = []
        for e in edges:
            u, v = e
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"loop edge ({u}, {u}) not allowed")
            es.append((u, v))
        self.n = n
        self.edges = tuple(es)
        self._adj = None
        self._degrees = None
        self._csr_cache = None
        self._connected = None

    @classmethod
    def _from_validated(cls, n: int, edges: tuple[tuple[int, int], ...]) -> "Multigraph":
        # fast path for the file parser, which has already range-checked ids
        g = cls.__new__(cls)
        g.n = n
        g.edges = edges
        g._adj = None
        g._degrees = None
        g._csr_cache = None
        g._connected = None
        return g

    @property
    def num_edges(self) -> int:
        """Total edge multiplicity m."""
        return len(self.edges)

    @property
    def adjacency(self) -> tuple[dict, ...]:
        """Per-vertex dict mapping neighbor id to edge multiplicity."""
        if self._adj is None:
            adj = [dict() for _ in range(self.n)]
            for u, v in self.edges:
                adj[u][v] = adj[u].get(v, 0) + 1
                adj[v][u] = adj[v].get(u, 0) + 1
            self._adj = tuple(adj)
        return self._adj

    @property
    def degrees(self) -> tuple[int, ...]:
        if self._degrees is None:
            deg = [0] * self.n
            for u, v in self.edges:
                deg[u] += 1
                deg[v] += 1
            self._degrees = tuple(deg)
        return self._degrees

    def degree(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range")
        return self.degrees[v]

    def multiplicity(self, u: int, v: int) -> int:
        """Number of parallel edges between u and v."""
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise GraphError(f"vertex pair ({u}, {v}) out of range")
        return self.adjacency[u].get(v, 0)

    def _csr(self) -> tuple[list, list]:
        """Flat adjacency: (off, nbr) with neighbors of v in nbr[off[v]:off[v+1]].

        Parallel edges appear once per copy.  Shared by the connectivity check
        and the block scan so the arrays are built a single time.
        """
        if self._csr_cache is None:
            n = self.n
            deg = [0] * n
            for u, v in self.edges:
                deg[u] += 1
                deg[v] += 1
            off = [0] * (n + 1)
            acc = 0
            for i in range(n):
                off[i] = acc
                acc += deg[i]
            off[n] = acc
            cur = off[:n]
            nbr = [0] * acc
            for u, v in self.edges:
                nbr[cur[u]] = v
                cur[u] += 1
                nbr[cur[v]] = u
                cur[v] += 1
            if self._degrees is None:
                self._degrees = tuple(deg)
            self._csr_cache = (off, nbr)
        return self._csr_cache

    def is_connected(self) -> bool:
        if self._connected is None:
            off, nbr = self._csr()
            seen = bytearray(self.n)
            seen[0] = 1
            stack = [0]
            count = 1
            while stack:
                x = stack.pop()
                for i in range(off[x], off[x + 1]):
                    y = nbr[i]
                    if not seen[y]:
                        seen[y] = 1
                        count += 1
                        stack.append(y)
            self._connected = count == self.n
        return self._connected

    def __eq__(self, other):
        if not isinstance(other, Multigraph):
            return NotImplemented
        if self.n != other.n:
            return False
        norm = lambda es: sorted((u, v) if u <= v else (v, u) for u, v in es)
        return norm(self.edges) == norm(other.edges)

    def __repr__(self):
        return f"Multigraph(n={self.n}, m={self.num_edges})"


class Divisor(tuple):
    """Integer chip counts, one per vertex.

    A thin tuple subclass: hashable, comparable, with elementwise arithmetic.
    Plain + and - act coordinatewise (NOT tuple concatenation).
    """

    __slots__ = ()

    @property
    def degree(self) -> int:
        return sum(self)

    def is_effective(self) -> bool:
        return all(v >= 0 for v in self)

    def __add__(self, other):
        if len(other) != len(self):
            raise ValueError("divisor length mismatch")
        return Divisor(a + b for a, b in zip(self, other))

    def __sub__(self, other):
        if len(other) != len(self):
            raise ValueError("divisor length mismatch")
        return Divisor(a - b for a, b in zip(self, other))

    def __neg__(self):
        return Divisor(-a for a in self)

    def __repr__(self):
        return f"Divisor{tuple(self)!r}"


# firing vectors are any integer sequence of length n, no wrapper type needed
FiringVector = Sequence[int]


def degree(f: Sequence[int]) -> int:
    """Sum of all chip counts."""
    return sum(f)


def is_effective(f: Sequence[int]) -> bool:
    return all(v >= 0 for v in f)


def index_divisor(n: int, v: int) -> Divisor:
    """The divisor with a single chip at vertex v."""
    if not 0 <= v < n:
        raise GraphError(f"vertex {v} out of range")
    return Divisor(1 if i == v else 0 for i in range(n))


def genus(g: Multigraph) -> int:
    """Cycle rank m - n + 1 of a connected graph."""
    if not g.is_connected():
        raise DisconnectedGraphError("genus is defined for connected graphs")
    return g.num_edges - g.n + 1


def laplacian_row(g: Multigraph, v: int) -> tuple[int, ...]:
    """Row v of the graph Laplacian: degree on the diagonal, minus multiplicity off it."""
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range")
    row = [0] * g.n
    row[v] = g.degree(v)
    for u, m in g.adjacency[v].items():
        row[u] = -m
    return tuple(row)


def apply_firing(g: Multigraph, f: Sequence[int], x: Sequence[int]) -> Divisor:
    """Move chips along a firing vector: returns f + x.L where L is the Laplacian.

    A vertex v with x(v) = -1 fires (sends one chip down each incident edge);
    x(v) = +1 borrows.  Divisor degree is preserved for every x.
    """
    n = g.n
    if len(f) != n or len(x) != n:
        raise GraphError("divisor / firing vector length mismatch")
    out = list(f)
    adj = g.adjacency
    deg = g.degrees
    for v in range(n):
        xv = x[v]
        if xv:
            out[v] += xv * deg[v]
            for u, m in adj[v].items():
                out[u] -= xv * m
    return Divisor(out)


def canonical_divisor(g: Multigraph) -> Divisor:
    """degree(v) - 2 at every vertex; total degree 2(m - n)."""
    return Divisor(d - 2 for d in g.degrees)
