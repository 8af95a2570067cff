"""Finite simple undirected graphs, vertex functions, and edge-list I/O.

Graphs are connected, loop-free, multi-edge-free, and have no isolated
vertices (the normalization 1/degree must be defined everywhere). Vertex
ids are dense integers 0..n-1; instances are immutable after construction
and safe to share across threads.
"""

from __future__ import annotations

import warnings
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np


class GraphError(ValueError):
    """Base class for graph construction/validation failures."""


class SelfLoopError(GraphError):
    def __init__(self, vertex: int):
        super().__init__(f"self-loop at vertex {vertex}")
        self.vertex = vertex


class DisconnectedError(GraphError):
    def __init__(self, components: int):
        super().__init__(f"graph is disconnected ({components} components)")
        self.components = components


class IsolatedVertexError(GraphError):
    def __init__(self, vertex: int):
        super().__init__(f"vertex {vertex} has degree 0")
        self.vertex = vertex


class EdgeListParseError(GraphError):
    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph with sorted adjacency lists."""

    vertex_count: int
    adjacency: tuple[tuple[int, ...], ...]

    @classmethod
    def from_edges(
        cls, edges: Iterable[tuple[int, int]], vertex_count: int | None = None
    ) -> "Graph":
        """Build and validate a graph from undirected edge pairs.

        Duplicate edges collapse. Without an explicit `vertex_count` the
        vertex set is the ids appearing in edges; gaps in the id range are
        compacted to 0..n-1 with a warning. With an explicit
        `vertex_count`, every id must be in range and ids of degree 0
        raise IsolatedVertexError.
        """
        pairs: set[tuple[int, int]] = set()
        seen: set[int] = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise SelfLoopError(u)
            if u < 0 or v < 0:
                raise GraphError(f"negative vertex id in edge ({u}, {v})")
            pairs.add((u, v) if u < v else (v, u))
            seen.add(u)
            seen.add(v)
        if not pairs:
            raise GraphError("a graph needs at least one edge")

        if vertex_count is None:
            ids = sorted(seen)
            if ids[-1] != len(ids) - 1:
                warnings.warn(
                    "sparse vertex ids compacted to a dense 0..n-1 range",
                    stacklevel=2,
                )
                relabel = {v: i for i, v in enumerate(ids)}
                pairs = {(relabel[u], relabel[v]) for u, v in pairs}
            n = len(ids)
        else:
            n = int(vertex_count)
            if n <= 0:
                raise GraphError("vertex_count must be positive")
            if max(seen) >= n:
                raise GraphError(f"edge endpoint {max(seen)} out of range 0..{n - 1}")

        neighbors: list[set[int]] = [set() for _ in range(n)]
        for u, v in pairs:
            neighbors[u].add(v)
            neighbors[v].add(u)
        for v, nbrs in enumerate(neighbors):
            if not nbrs:
                raise IsolatedVertexError(v)

        adjacency = tuple(tuple(sorted(nbrs)) for nbrs in neighbors)
        g = cls(vertex_count=n, adjacency=adjacency)
        comp = g._component_count()
        if comp != 1:
            raise DisconnectedError(comp)
        return g

    def _component_count(self) -> int:
        seen = [False] * self.vertex_count
        components = 0
        for start in range(self.vertex_count):
            if seen[start]:
                continue
            components += 1
            queue = deque([start])
            seen[start] = True
            while queue:
                u = queue.popleft()
                for w in self.adjacency[u]:
                    if not seen[w]:
                        seen[w] = True
                        queue.append(w)
        return components

    def degree(self, x: int) -> int:
        return len(self.adjacency[x])

    def neighbors(self, x: int) -> tuple[int, ...]:
        return self.adjacency[x]

    @property
    def edges(self) -> list[tuple[int, int]]:
        """Undirected edges as (u, v) with u < v, ascending."""
        out = []
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if u < v:
                    out.append((u, v))
        return out

    @property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2


@dataclass(frozen=True)
class VertexFunction:
    """Real-valued function on the vertices, stored as a float64 array."""

    values: np.ndarray

    def __post_init__(self):
        vals = np.asarray(self.values, dtype=np.float64)
        if vals.ndim != 1:
            raise ValueError("vertex function values must be one-dimensional")
        if not np.all(np.isfinite(vals)):
            raise ValueError("vertex function values must be finite")
        vals = vals.copy()
        vals.flags.writeable = False
        object.__setattr__(self, "values", vals)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, vertex: int) -> float:
        return float(self.values[vertex])

    def with_value(self, vertex: int, value: float) -> "VertexFunction":
        vals = self.values.copy()
        vals[vertex] = value
        return VertexFunction(vals)

    @classmethod
    def constant(cls, g: Graph, value: float) -> "VertexFunction":
        return cls(np.full(g.vertex_count, float(value)))

    @classmethod
    def indicator(cls, g: Graph, vertex: int) -> "VertexFunction":
        vals = np.zeros(g.vertex_count)
        vals[vertex] = 1.0
        return cls(vals)


@dataclass(frozen=True)
class LocalBall:
    """Radius-2 neighborhood of a center: first and second spheres.

    `index` assigns contiguous coordinates to the sphere-1 vertices first,
    then sphere-2; the center itself carries no coordinate (functions are
    normalized to vanish there when the ball backs a quadratic form).
    """

    center: int
    sphere1: tuple[int, ...]
    sphere2: tuple[int, ...]
    index: dict[int, int]

    @property
    def coordinates(self) -> tuple[int, ...]:
        return self.sphere1 + self.sphere2

    @property
    def size(self) -> int:
        return len(self.sphere1) + len(self.sphere2)


def parse_edge_list(text: str | bytes) -> Graph:
    """Parse '#'-commented "u v" edge lines into a validated Graph."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    edges: list[tuple[int, int]] = []
    for line_no, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListParseError(line_no, f"expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListParseError(line_no, f"non-integer vertex id in {line!r}") from None
        if u < 0 or v < 0:
            raise EdgeListParseError(line_no, f"negative vertex id in {line!r}")
        edges.append((u, v))
    if not edges:
        raise EdgeListParseError(0, "no edges found")
    return Graph.from_edges(edges)


def serialize_edge_list(g: Graph) -> str:
    """One "u v" line per edge, u < v, ascending, LF-terminated."""
    return "".join(f"{u} {v}\n" for u, v in g.edges)


def degree(g: Graph, x: int) -> int:
    """Number of neighbors of x."""
    _check_vertex(g, x)
    return g.degree(x)


def ball(g: Graph, x: int, radius: int) -> LocalBall:
    """Spheres at distance 1 and (for radius 2) exactly 2 around x."""
    _check_vertex(g, x)
    if radius not in (1, 2):
        raise ValueError("radius must be 1 or 2")
    s1 = g.adjacency[x]
    if radius == 1:
        s2: tuple[int, ...] = ()
    else:
        near = set(s1) | {x}
        second = set()
        for y in s1:
            for z in g.adjacency[y]:
                if z not in near:
                    second.add(z)
        s2 = tuple(sorted(second))
    index = {v: i for i, v in enumerate(s1 + s2)}
    return LocalBall(center=x, sphere1=s1, sphere2=s2, index=index)


def _check_vertex(g: Graph, x: int) -> None:
    if not 0 <= x < g.vertex_count:
        raise ValueError(f"vertex {x} out of range 0..{g.vertex_count - 1}")


def check_function(g: Graph, f: VertexFunction | Sequence[float]) -> np.ndarray:
    """Coerce f to a float64 array and check it matches the graph."""
    vals = f.values if isinstance(f, VertexFunction) else np.asarray(f, dtype=np.float64)
    if vals.shape != (g.vertex_count,):
        raise ValueError(
            f"vertex function has shape {vals.shape}, graph has {g.vertex_count} vertices"
        )
    return vals
