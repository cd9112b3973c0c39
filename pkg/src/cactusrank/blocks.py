"""Block structure of cactus graphs.

A cactus is a connected graph in which every block (maximal subgraph with no
cut vertex) is a single edge or a simple cycle; equivalently, no edge lies on
two distinct simple cycles.  One depth-first scan recognizes the property,
extracts every block with its cyclic vertex order, and emits the blocks in an
order that is already a valid elimination scheme: each block is contracted
into its attachment vertex only after everything hanging below it is gone.

The scan works on flat CSR arrays and is shared by the public object API here
and by the rank engine (which consumes the raw arrays directly to avoid
building a million small objects).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple

from .graph import DisconnectedGraphError, GraphError, Multigraph


class NotCactusError(GraphError):
    """The graph has a block that is neither an edge nor a simple cycle.

    The offending edge (one that closes a second cycle through some vertex)
    is stored in .edge.
    """

    def __init__(self, edge: tuple[int, int]):
        super().__init__(f"not a cactus: edge {edge} lies on a second cycle")
        self.edge = edge


class BlockKind(enum.Enum):
    EDGE = "edge"
    CYCLE = "cycle"


@dataclass(frozen=True, slots=True)
class Block:
    """A bridge edge or a simple cycle.

    For a cycle, vertices are listed in cyclic order (consecutive entries are
    adjacent, and the last wraps to the first).  A parallel-edge pair is a
    cycle of length 2.
    """

    kind: BlockKind
    vertices: tuple[int, ...]


@dataclass(frozen=True, slots=True)
class BesStep:
    block: Block
    attach: int


@dataclass(frozen=True, slots=True)
class BlockEliminationScheme:
    """Ordered contractions: replaying steps shrinks the graph to root alone.

    At each step the block must be free in the current graph, meaning every
    vertex of the block except the attachment has all of its incident edges
    inside the block.
    """

    steps: tuple[BesStep, ...]
    root: int


@dataclass(frozen=True, slots=True)
class BlockDecomposition:
    blocks: tuple[Block, ...]
    cut_vertices: frozenset[int]
    # block_of_edge[i] = index into blocks for edge id i (position in g.edges)
    block_of_edge: tuple[int, ...]


@dataclass(frozen=True)
class BESTree:
    """Rooted tree on the attachment vertices of a scheme plus its root.

    The parent of a vertex is the attachment of the step that eliminates it;
    the root is eliminated by no step and is its own parent.
    """

    parent: dict[int, int]
    root: int


class RawScheme(NamedTuple):
    """Flat elimination order: block t has kind kinds[t] (0 edge, 1 cycle)
    and vertices verts[offs[t]:offs[t+1]] with the attachment first."""

    kinds: list
    offs: list
    verts: list
    root: int


def _raw_scheme(g: Multigraph) -> RawScheme:
    """One iterative DFS producing blocks in elimination order.

    Each back edge closes exactly one cycle with a stretch of the tree path
    to the root; marking the tree edges it claims catches any edge that two
    cycles would share.  Tree edges left unclaimed are bridges.  Blocks are
    buffered at their top vertex and flushed when that vertex finishes, which
    is exactly the moment they become free.
    """
    n = g.n
    off, nbr = g._csr()
    parent = [-1] * n
    depth = [0] * n
    state = bytearray(n)  # 0 new, 1 active, 2 done
    pskip = bytearray(n)  # one adjacency copy of the parent edge is consumed
    incyc = bytearray(n)  # vertex's parent edge already claimed by a cycle
    pending: list = [None] * n
    kinds: list = []
    offs: list = [0]
    verts: list = []
    ptr = off[:n]
    stack = [0]
    state[0] = 1
    visited = 1
    while stack:
        x = stack[-1]
        p = ptr[x]
        end = off[x + 1]
        px = parent[x]
        dx = depth[x]
        descended = False
        while p < end:
            y = nbr[p]
            p += 1
            st = state[y]
            if st == 0:
                ptr[x] = p
                parent[y] = x
                depth[y] = dx + 1
                state[y] = 1
                stack.append(y)
                visited += 1
                descended = True
                break
            if y == px and not pskip[x]:
                pskip[x] = 1
                continue
            if st == 1 and depth[y] < dx:
                # back edge: the tree path y..x plus this edge is a cycle
                chain = []
                t = x
                while t != y:
                    if incyc[t]:
                        raise NotCactusError((x, y))
                    incyc[t] = 1
                    chain.append(t)
                    t = parent[t]
                chain.append(y)
                chain.reverse()
                pl = pending[y]
                if pl is None:
                    pending[y] = [(1, chain)]
                else:
                    pl.append((1, chain))
            # else: downward half of a non-tree edge, nothing to do
        if descended:
            continue
        ptr[x] = p
        stack.pop()
        state[x] = 2
        pl = pending[x]
        if pl is not None:
            if len(pl) > 1:
                pl.sort(key=lambda b: b[1][1])
            for kind, chain in pl:
                kinds.append(kind)
                verts.extend(chain)
                offs.append(len(verts))
            pending[x] = None
        if x and not incyc[x]:
            # unclaimed tree edge: a bridge, handed to the parent as a block
            pl = pending[px]
            if pl is None:
                pending[px] = [(0, [px, x])]
            else:
                pl.append((0, [px, x]))
    if visited != n:
        raise DisconnectedGraphError(
            f"graph is disconnected ({visited} of {n} vertices reachable)"
        )
    return RawScheme(kinds, offs, verts, 0)


def is_cactus(g: Multigraph) -> bool:
    """True iff every block of g is an edge or a simple cycle.  O(n + m)."""
    try:
        _raw_scheme(g)
    except NotCactusError:
        return False
    return True


def _wrap_blocks(raw: RawScheme) -> tuple[Block, ...]:
    out = []
    offs, verts, kinds = raw.offs, raw.verts, raw.kinds
    for t in range(len(kinds)):
        vs = tuple(verts[offs[t]:offs[t + 1]])
        out.append(Block(BlockKind.CYCLE if kinds[t] else BlockKind.EDGE, vs))
    return tuple(out)


def block_decomposition(g: Multigraph) -> BlockDecomposition:
    """Blocks, cut vertices, and the edge-to-block map of a cactus."""
    raw = _raw_scheme(g)
    blocks = _wrap_blocks(raw)
    count = [0] * g.n
    pair_to_block = {}
    for bi, b in enumerate(blocks):
        vs = b.vertices
        for v in vs:
            count[v] += 1
        if b.kind is BlockKind.EDGE or len(vs) == 2:
            u, v = vs
            pair_to_block[(u, v) if u <= v else (v, u)] = bi
        else:
            k = len(vs)
            for i in range(k):
                u, v = vs[i], vs[(i + 1) % k]
                pair_to_block[(u, v) if u <= v else (v, u)] = bi
    boe = tuple(
        pair_to_block[(u, v) if u <= v else (v, u)] for u, v in g.edges
    )
    cuts = frozenset(v for v in range(g.n) if count[v] >= 2)
    return BlockDecomposition(blocks, cuts, boe)


def build_bes(g: Multigraph) -> BlockEliminationScheme:
    """A valid elimination scheme for a cactus, deterministic for a given
    vertex/edge ordering.  Raises NotCactusError otherwise."""
    raw = _raw_scheme(g)
    blocks = _wrap_blocks(raw)
    steps = tuple(BesStep(b, b.vertices[0]) for b in blocks)
    return BlockEliminationScheme(steps, raw.root)


def bes_tree(scheme: BlockEliminationScheme) -> BESTree:
    """Parent structure over the scheme's attachment vertices and root."""
    eliminated: dict[int, int] = {}
    for step in scheme.steps:
        a = step.attach
        if a not in step.block.vertices:
            raise ValueError("invalid scheme: attachment outside its block")
        for u in step.block.vertices:
            if u == a:
                continue
            if u in eliminated:
                raise ValueError(f"invalid scheme: vertex {u} eliminated twice")
            eliminated[u] = a
    root = scheme.root
    if root in eliminated:
        raise ValueError("invalid scheme: root gets eliminated")
    parent = {root: root}
    for step in scheme.steps:
        a = step.attach
        if a in parent:
            continue
        if a not in eliminated:
            raise ValueError(f"invalid scheme: attachment {a} never eliminated")
        parent[a] = eliminated[a]
    return BESTree(parent, root)


def _free_block_shape(adj, deg, vs: tuple[int, ...], a: int, kind: BlockKind) -> bool:
    """Is (vs, a) a free edge/cycle block of the graph given by adj/deg?"""
    if a not in vs or len(set(vs)) != len(vs):
        return False
    if kind is BlockKind.EDGE:
        if len(vs) != 2:
            return False
        u = vs[0] if vs[1] == a else vs[1]
        return adj[u].get(a, 0) == 1 and deg[u] == 1
    k = len(vs)
    if k < 2:
        return False
    if k == 2:
        u = vs[0] if vs[1] == a else vs[1]
        return adj[u].get(a, 0) == 2 and deg[u] == 2
    for i in range(k):
        u, v = vs[i], vs[(i + 1) % k]
        if adj[u].get(v, 0) != 1:
            return False
    return all(deg[u] == 2 for u in vs if u != a)


def validate_bes(g: Multigraph, scheme: BlockEliminationScheme) -> bool:
    """Replay the scheme on g and check every invariant.  Returns False on
    any violation (wrong block, non-free block, leftovers...), never raises."""
    try:
        n = g.n
        adj = [dict(d) for d in g.adjacency]
        deg = list(g.degrees)
        alive = bytearray([1]) * n
        live_edges = g.num_edges
        for step in scheme.steps:
            vs = step.block.vertices
            a = step.attach
            if not all(isinstance(v, int) and 0 <= v < n and alive[v] for v in vs):
                return False
            if not _free_block_shape(adj, deg, vs, a, step.block.kind):
                return False
            if step.block.kind is BlockKind.EDGE:
                u = vs[0] if vs[1] == a else vs[1]
                pairs = [(a, u)]
            elif len(vs) == 2:
                u = vs[0] if vs[1] == a else vs[1]
                pairs = [(a, u), (a, u)]
            else:
                k = len(vs)
                pairs = [(vs[i], vs[(i + 1) % k]) for i in range(k)]
            for u, v in pairs:
                adj[u][v] -= 1
                adj[v][u] -= 1
                if adj[u][v] == 0:
                    del adj[u][v]
                    del adj[v][u]
                deg[u] -= 1
                deg[v] -= 1
                live_edges -= 1
            for v in vs:
                if v != a:
                    if deg[v] != 0:
                        return False
                    alive[v] = 0
        if live_edges != 0:
            return False
        survivors = [v for v in range(n) if alive[v]]
        return survivors == [scheme.root]
    except Exception:
        return False
