"""Seeded random cactus generator with a pinned, documented PRNG.

Reproducibility contract: the same GeneratorParams always produce the same
graph and divisor, byte for byte after serialization, on any platform.  The
PRNG is splitmix64 (Steele/Lea/Flood): 64-bit state advancing by the constant
0x9E3779B97F4A7C15, output mixed by two xor-shift-multiply rounds.  Bounded
draws use plain modulo; the tiny bias is irrelevant here and keeping the
draw rule trivial makes streams easy to reproduce in other languages.

Construction: cycle lengths start at 2 and grow randomly up to max_cycle_len
while spare vertices last, leftover vertices become pendant edge blocks, the
block list is shuffled, and each block is attached to a uniformly chosen
existing vertex.  The result is connected, has exactly the requested number
of cycle blocks, and uses exactly the requested number of vertices.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Divisor, Multigraph

_MASK = (1 << 64) - 1


class SplitMix64:
    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def randrange(self, k: int) -> int:
        """Uniform-ish draw from 0..k-1 (modulo method, documented)."""
        return self.next_u64() % k


@dataclass(frozen=True)
class GeneratorParams:
    vertices: int
    cycles: int = 0
    max_cycle_len: int = 8
    divisor_degree: int = 0
    seed: int = 0

    def __post_init__(self):
        if self.vertices < 1:
            raise ValueError("vertices must be at least 1")
        if self.cycles < 0:
            raise ValueError("cycles must be nonnegative")
        if self.max_cycle_len < 2:
            raise ValueError("max_cycle_len must be at least 2")
        # every cycle block consumes at least one fresh vertex
        if self.vertices < 1 + self.cycles:
            raise ValueError(
                f"{self.cycles} cycles need at least {1 + self.cycles} vertices"
            )


def generate(params: GeneratorParams) -> tuple[Multigraph, Divisor]:
    rng = SplitMix64(params.seed)
    n = params.vertices
    c = params.cycles
    lens = [2] * c
    budget = n - 1 - c
    pendants = 0
    growable = list(range(c)) if params.max_cycle_len > 2 else []
    for _ in range(budget):
        if growable and rng.randrange(2) == 0:
            j = rng.randrange(len(growable))
            i = growable[j]
            lens[i] += 1
            if lens[i] == params.max_cycle_len:
                growable[j] = growable[-1]
                growable.pop()
        else:
            pendants += 1
    blocks = [lens[i] for i in range(c)] + [0] * pendants  # 0 marks an edge block
    for i in range(len(blocks) - 1, 0, -1):  # Fisher-Yates
        j = rng.randrange(i + 1)
        blocks[i], blocks[j] = blocks[j], blocks[i]
    edges = []
    nv = 1
    for length in blocks:
        at = rng.randrange(nv)
        if length == 0:
            edges.append((at, nv))
            nv += 1
        elif length == 2:
            edges.append((at, nv))
            edges.append((at, nv))
            nv += 1
        else:
            ring = [at] + list(range(nv, nv + length - 1))
            nv += length - 1
            for i in range(length):
                edges.append((ring[i], ring[(i + 1) % length]))
    vals = [rng.randrange(5) - 2 for _ in range(n)]
    diff = params.divisor_degree - sum(vals)
    step = 1 if diff > 0 else -1
    while diff:
        vals[rng.randrange(n)] += step
        diff -= step
    return Multigraph._from_validated(n, tuple(edges)), Divisor(vals)
