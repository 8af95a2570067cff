"""Per-vertex and whole-graph girth.

The girth at x is the length of the shortest cycle through x (math.inf if
x lies on no cycle); the graph girth is the minimum over vertices.
"""

from __future__ import annotations

from collections import deque
from math import inf

from .graph import Graph, _check_vertex

# A girth is an int >= 3 or math.inf.
GirthValue = int | float


def vertex_girth(g: Graph, x: int) -> GirthValue:
    """Shortest cycle length through x, or math.inf.

    Single BFS from x labelling every vertex with its distance and its
    root branch (the first-hop neighbor its BFS tree path uses). Tree
    paths from x to two vertices in different branches are internally
    disjoint, so every edge {u, w} (u, w != x) joining different branches
    closes a simple cycle through x of length dist(u) + dist(w) + 1, and
    the shortest cycle through x always contains such an edge at its far
    end. The minimum over these candidates is therefore exact.
    """
    _check_vertex(g, x)
    n = g.vertex_count
    dist = [-1] * n
    branch = [-1] * n
    dist[x] = 0
    queue: deque[int] = deque()
    for y in g.adjacency[x]:
        dist[y] = 1
        branch[y] = y
        queue.append(y)
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if dist[w] == -1:
                dist[w] = dist[u] + 1
                branch[w] = branch[u]
                queue.append(w)

    best: GirthValue = inf
    for u in range(n):
        if u == x:
            continue
        for w in g.adjacency[u]:
            if w <= u or w == x:
                continue
            if branch[u] != branch[w]:
                length = dist[u] + dist[w] + 1
                if length < best:
                    best = length
    return best


def graph_girth(g: Graph) -> GirthValue:
    """Minimum vertex girth over all vertices."""
    return min(vertex_girth(g, x) for x in range(g.vertex_count))


def has_girth_at_least(g: Graph, lower: int) -> bool:
    """True when no cycle is shorter than `lower` (infinite girth passes)."""
    if lower < 3:
        raise ValueError("girth lower bounds below 3 are vacuous")
    return graph_girth(g) >= lower
