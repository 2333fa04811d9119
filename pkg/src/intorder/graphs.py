"""Finite reflexive graphs, strict partial orders, and path utilities.

Vertices are dense integers 0..n-1. Edges are stored between distinct
vertices only, but adjacency is interpreted reflexively: ``adjacent(v, v)``
is always true and explicit self-loops are rejected on input. Labels are
cosmetic (they survive into certificates) and never affect any algorithm.

Paths are plain sequences of vertices in which consecutive vertices are
distinct and adjacent; a single vertex is a valid path of length zero.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import InputError

VertexPair = tuple[int, int]


def _canonical_edge(u: int, v: int) -> VertexPair:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Undirected graph on vertices 0..n-1, reflexive by convention."""

    n: int
    edges: frozenset[VertexPair]
    labels: tuple[str | None, ...] | None = None

    def __post_init__(self):
        if self.n < 0:
            raise InputError("vertex count must be nonnegative")
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise InputError(
                    f"edge ({u}, {v}) is not canonical or out of range for n={self.n}"
                )
        if self.labels is not None and len(self.labels) != self.n:
            raise InputError("labels must have one entry per vertex (None for unnamed)")

    @cached_property
    def adj(self) -> tuple[frozenset[int], ...]:
        """Neighbor sets, self excluded."""
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    def adjacent(self, u: int, v: int) -> bool:
        """Reflexive adjacency: true when u == v or {u, v} is an edge."""
        return u == v or v in self.adj[u]

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        return self.adj[v] | {v}

    def is_complete(self) -> bool:
        return len(self.edges) == self.n * (self.n - 1) // 2

    def label_of(self, v: int) -> str | int:
        if self.labels is not None and self.labels[v] is not None:
            return self.labels[v]
        return v

    def same_edges(self, other: "Graph") -> bool:
        """Equality of vertex count and edge set, ignoring labels."""
        return self.n == other.n and self.edges == other.edges


def graph_from_edges(
    n: int,
    edge_list: Iterable[Sequence[int]],
    labels: Sequence[str | None] | None = None,
) -> Graph:
    """Build a graph from an (unordered, possibly duplicated) edge list.

    Self-loops are rejected: reflexivity is implicit and never stored.
    """
    if n < 0:
        raise InputError("vertex count must be nonnegative")
    edges: set[VertexPair] = set()
    for pair in edge_list:
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise InputError(f"edge endpoint out of range for n={n}: ({u}, {v})")
        if u == v:
            raise InputError(f"explicit self-loop ({u}, {v}) rejected; adjacency is reflexive implicitly")
        edges.add(_canonical_edge(u, v))
    return Graph(n, frozenset(edges), tuple(labels) if labels is not None else None)


def complete_graph(n: int) -> Graph:
    return Graph(n, frozenset((u, v) for u in range(n) for v in range(u + 1, n)))


def components(g: Graph) -> list[set[int]]:
    """Connected components as vertex sets, sorted by least element."""
    seen = [False] * g.n
    out: list[set[int]] = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = {s}
        seen[s] = True
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in g.adj[v]:
                if not seen[w]:
                    seen[w] = True
                    comp.add(w)
                    queue.append(w)
        out.append(comp)
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) == 1


def complement(g: Graph) -> Graph:
    edges = frozenset(
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if v not in g.adj[u]
    )
    return Graph(g.n, edges, g.labels)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph on the given vertices, reindexed densely in sorted order."""
    kept = sorted(set(vertices))
    for v in kept:
        if not (0 <= v < g.n):
            raise InputError(f"vertex {v} out of range")
    index = {v: i for i, v in enumerate(kept)}
    edges = frozenset(
        (index[u], index[v]) for u, v in g.edges if u in index and v in index
    )
    labels = tuple(g.labels[v] for v in kept) if g.labels is not None else None
    return Graph(len(kept), edges, labels)


def universal_vertices(g: Graph) -> set[int]:
    """Vertices adjacent to every other vertex."""
    return {v for v in range(g.n) if len(g.adj[v]) == g.n - 1}


# ---------------------------------------------------------------------------
# Paths
# ---------------------------------------------------------------------------

def validate_path(g: Graph, path: Sequence[int]) -> list[int]:
    """Check that `path` is a walk in g (consecutive distinct and adjacent)."""
    p = list(path)
    if not p:
        raise InputError("a path must contain at least one vertex")
    for v in p:
        if not (0 <= v < g.n):
            raise InputError(f"path vertex {v} out of range")
    for a, b in zip(p, p[1:]):
        if a == b or b not in g.adj[a]:
            raise InputError(f"consecutive path vertices {a}, {b} are not adjacent")
    return p


def is_minimal_path(g: Graph, path: Sequence[int]) -> bool:
    """True when no two non-consecutive path vertices are adjacent.

    Reflexivity makes repeated vertices fail automatically.
    """
    p = validate_path(g, path)
    for i in range(len(p)):
        for j in range(i + 2, len(p)):
            if g.adjacent(p[i], p[j]):
                return False
    return True


def refine_to_minimal(g: Graph, path: Sequence[int]) -> list[int]:
    """Shortcut a path to a minimal path with the same endpoints.

    Deterministic rule, iterated to a fixpoint: take the smallest i having
    a shortcut, then the largest j > i+1 with p[i] adjacent to p[j], and
    splice out everything strictly between them. The result is a
    subsequence of the input.
    """
    p = validate_path(g, path)
    changed = True
    while changed:
        changed = False
        for i in range(len(p) - 2):
            for j in range(len(p) - 1, i + 1, -1):
                if g.adjacent(p[i], p[j]):
                    # a revisited vertex counts as adjacent reflexively;
                    # merge the two occurrences instead of stuttering
                    tail = p[j + 1 :] if p[i] == p[j] else p[j:]
                    p = p[: i + 1] + tail
                    changed = True
                    break
            if changed:
                break
    return p


# ---------------------------------------------------------------------------
# Strict partial orders
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StrictPartialOrder:
    """Irreflexive, antisymmetric, transitively closed relation on 0..n-1.

    The stored pair set always equals its own transitive closure; this is
    validated on construction, so every accepted instance is a genuine
    strict partial order.
    """

    n: int
    rel: frozenset[VertexPair]

    def __post_init__(self):
        succ: dict[int, set[int]] = {}
        for u, v in self.rel:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InputError(f"relation pair ({u}, {v}) out of range for n={self.n}")
            if u == v:
                raise InputError(f"relation must be irreflexive; got ({u}, {u})")
            if (v, u) in self.rel:
                raise InputError(f"relation must be antisymmetric; got both ({u},{v}) and ({v},{u})")
            succ.setdefault(u, set()).add(v)
        for u, v in self.rel:
            for w in succ.get(v, ()):
                if (u, w) not in self.rel:
                    raise InputError(
                        f"relation is not transitively closed: ({u},{v}) and ({v},{w}) but not ({u},{w})"
                    )

    def less(self, u: int, v: int) -> bool:
        return (u, v) in self.rel

    def comparable(self, u: int, v: int) -> bool:
        return (u, v) in self.rel or (v, u) in self.rel

    def dual(self) -> "StrictPartialOrder":
        return StrictPartialOrder(self.n, frozenset((v, u) for u, v in self.rel))


def order_from_pairs(n: int, pairs: Iterable[Sequence[int]]) -> StrictPartialOrder:
    """Transitively close the given pairs and validate the result."""
    succ: list[set[int]] = [set() for _ in range(n)]
    for pair in pairs:
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise InputError(f"pair ({u}, {v}) out of range for n={n}")
        if u == v:
            raise InputError(f"pair ({u}, {u}) violates irreflexivity")
        succ[u].add(v)
    rel: set[VertexPair] = set()
    for s in range(n):
        reach: set[int] = set()
        stack = list(succ[s])
        while stack:
            x = stack.pop()
            if x in reach:
                continue
            reach.add(x)
            stack.extend(succ[x])
        if s in reach:
            raise InputError(f"pairs contain a cycle through vertex {s}")
        rel.update((s, x) for x in reach)
    return StrictPartialOrder(n, frozenset(rel))


def incomparability_graph(o: StrictPartialOrder) -> Graph:
    """Graph whose distinct vertices are adjacent iff order-incomparable."""
    edges = frozenset(
        (u, v)
        for u in range(o.n)
        for v in range(u + 1, o.n)
        if not o.comparable(u, v)
    )
    return Graph(o.n, edges)


def is_associated(g: Graph, o: StrictPartialOrder) -> bool:
    """True when g is exactly the incomparability graph of o (labels ignored)."""
    if g.n != o.n:
        raise InputError(f"vertex count mismatch: graph has {g.n}, order has {o.n}")
    return incomparability_graph(o).edges == g.edges


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------

def graph_to_jsonable(g: Graph) -> dict:
    out: dict = {"n": g.n, "edges": [list(e) for e in sorted(g.edges)]}
    if g.labels is not None and any(x is not None for x in g.labels):
        out["labels"] = {
            str(v): g.labels[v] for v in range(g.n) if g.labels[v] is not None
        }
    return out


def graph_from_jsonable(obj) -> Graph:
    if not isinstance(obj, dict):
        raise InputError("graph JSON must be an object")
    try:
        n = obj["n"]
        raw_edges = obj["edges"]
    except KeyError as missing:
        raise InputError(f"graph JSON missing key {missing}") from None
    if not isinstance(n, int) or isinstance(n, bool):
        raise InputError("graph JSON field 'n' must be an integer")
    if not isinstance(raw_edges, list):
        raise InputError("graph JSON field 'edges' must be a list of pairs")
    edges = []
    for item in raw_edges:
        if not (isinstance(item, list) and len(item) == 2 and all(isinstance(x, int) and not isinstance(x, bool) for x in item)):
            raise InputError(f"malformed edge entry: {item!r}")
        edges.append((item[0], item[1]))
    labels = None
    if "labels" in obj:
        raw = obj["labels"]
        if not isinstance(raw, dict):
            raise InputError("graph JSON field 'labels' must be an object")
        filled: list[str | None] = [None] * n
        for key, val in raw.items():
            try:
                idx = int(key)
            except ValueError:
                raise InputError(f"label key {key!r} is not a vertex index") from None
            if not (0 <= idx < n):
                raise InputError(f"label key {key!r} out of range")
            filled[idx] = str(val)
        labels = filled
    return graph_from_edges(n, edges, labels)


def parse_graph_json(text: str) -> Graph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from None
    return graph_from_jsonable(obj)


def parse_edgelist(text: str) -> Graph:
    """Parse the plain text format: first line n, then one 'u v' per line.

    Blank lines and '#' comments are ignored.
    """
    n: int | None = None
    edges: list[VertexPair] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        try:
            values = [int(f) for f in fields]
        except ValueError:
            raise InputError(f"line {lineno}: expected integers, got {line!r}") from None
        if n is None:
            if len(values) != 1:
                raise InputError(f"line {lineno}: first line must contain the vertex count only")
            n = values[0]
        else:
            if len(values) != 2:
                raise InputError(f"line {lineno}: expected 'u v', got {line!r}")
            edges.append((values[0], values[1]))
    if n is None:
        raise InputError("empty edge-list input")
    return graph_from_edges(n, edges)
