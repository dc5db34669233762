"""Graphs, bipartite two-colorings, and stabilizer generators for graph states.

Vertices are 0-indexed everywhere. A graph state on a graph G is stabilized by
the n commuting operators K_i = X_i (x) prod_{j in Ngb(i)} Z_j; only the
supports of those operators are needed here, never explicit matrices.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property


class InvalidParams(ValueError):
    """Malformed graph or family parameters."""


class NotTwoColorable(ValueError):
    """The graph has no proper two-coloring. Carries one witnessing odd cycle."""

    def __init__(self, odd_cycle):
        self.odd_cycle = list(odd_cycle)
        cyc = "-".join(str(v) for v in self.odd_cycle)
        super().__init__(f"graph is not two-colorable; odd cycle {cyc}")


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: vertex count plus a set of unordered edges."""

    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise InvalidParams(f"vertex count must be a positive integer, got {self.n!r}")
        norm = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise InvalidParams(f"self-loop on vertex {u}")
            if u > v:
                u, v = v, u
            if not (0 <= u and v < self.n):
                raise InvalidParams(f"edge ({u},{v}) out of range for n={self.n}")
            norm.add((u, v))
        object.__setattr__(self, "edges", frozenset(norm))

    @cached_property
    def adjacency(self) -> tuple:
        adj = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    def neighbors(self, i: int) -> tuple:
        return self.adjacency[i]

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in sorted(self.edges)]}

    @classmethod
    def from_json(cls, data: dict) -> "Graph":
        return cls(data["n"], frozenset(tuple(e) for e in data["edges"]))


@dataclass(frozen=True)
class TwoColoring:
    """Bipartition into Amber (A) and Blue (B) vertex sets with |A| >= |B|."""

    amber: frozenset
    blue: frozenset

    @property
    def blue_count(self) -> int:
        return len(self.blue)

    @property
    def amber_count(self) -> int:
        return len(self.amber)


@dataclass(frozen=True)
class StabilizerGenerator:
    """Pauli support of one generator: X on x_support, Z on z_support."""

    x_support: frozenset
    z_support: frozenset


def _odd_cycle(parent, u, v):
    """Reconstruct the odd cycle closed by the conflicting edge (u, v)."""
    chain_u = [u]
    while parent[chain_u[-1]] != -1:
        chain_u.append(parent[chain_u[-1]])
    chain_v = [v]
    while parent[chain_v[-1]] != -1:
        chain_v.append(parent[chain_v[-1]])
    pos_u = {x: i for i, x in enumerate(chain_u)}
    for j, x in enumerate(chain_v):
        if x in pos_u:
            i = pos_u[x]
            return chain_u[:i] + list(reversed(chain_v[: j + 1]))
    raise AssertionError("conflicting BFS edge outside a common component")


def two_color(g: Graph) -> TwoColoring:
    """Deterministic proper two-coloring with |Amber| >= |Blue|.

    Breadth-first search from the lowest-index unvisited vertex of each
    component, root colored first; a single global swap at the end enforces
    the size convention. Raises NotTwoColorable on any odd cycle.
    """
    color = [-1] * g.n
    parent = [-1] * g.n
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in g.neighbors(u):
                if color[v] == -1:
                    color[v] = 1 - color[u]
                    parent[v] = u
                    queue.append(v)
                elif color[v] == color[u]:
                    raise NotTwoColorable(_odd_cycle(parent, u, v))
    amber = frozenset(i for i in range(g.n) if color[i] == 0)
    blue = frozenset(i for i in range(g.n) if color[i] == 1)
    if len(amber) < len(blue):
        amber, blue = blue, amber
    return TwoColoring(amber, blue)


def generators(g: Graph) -> list:
    """The n stabilizer generators K_i = X_i (x) prod_{j in Ngb(i)} Z_j."""
    return [
        StabilizerGenerator(frozenset({i}), frozenset(g.neighbors(i)))
        for i in range(g.n)
    ]


def family(name: str, *params: int) -> Graph:
    """Named graph families: chain(k), ring(k), star(k), grid(rows, cols)."""
    if name == "chain":
        (size,) = params
        _require_size(size)
        return Graph(size, frozenset((i, i + 1) for i in range(size - 1)))
    if name == "ring":
        (size,) = params
        _require_size(size)
        if size < 3:
            raise InvalidParams(f"ring needs at least 3 vertices, got {size}")
        return Graph(size, frozenset((i, (i + 1) % size) for i in range(size)))
    if name == "star":
        (size,) = params
        _require_size(size)
        return Graph(size, frozenset((0, i) for i in range(1, size)))
    if name == "grid":
        rows, cols = params
        _require_size(rows)
        _require_size(cols)
        edges = set()
        for r in range(rows):
            for c in range(cols):
                v = r * cols + c
                if c + 1 < cols:
                    edges.add((v, v + 1))
                if r + 1 < rows:
                    edges.add((v, v + cols))
        return Graph(rows * cols, frozenset(edges))
    raise InvalidParams(f"unknown family {name!r}")


def _require_size(size: int):
    if not isinstance(size, int) or size < 1:
        raise InvalidParams(f"size must be a positive integer, got {size!r}")
