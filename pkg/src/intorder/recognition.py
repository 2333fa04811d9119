"""Interval graph recognition with positive or negative certificates.

The positive route enumerates maximal cliques and searches for an ordering
in which every vertex's cliques occupy consecutive positions; reading each
vertex's first and last clique position off such an ordering yields a
representation, which is verified before being returned. When no ordering
exists the graph is not interval, and a negative certificate is extracted:
first a chordless cycle of length >= 4, otherwise an asteroidal triple.
If neither exists while the ordering failed, an internal error is raised
rather than guessing; the two routes must agree.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import InputError, InternalInconsistencyError
from .graphs import Graph, validate_path
from .representation import ClosedRepresentation, verify_representation

CHORDLESS_CYCLE = "chordless_cycle"
ASTEROIDAL_TRIPLE = "asteroidal_triple"


@dataclass(frozen=True)
class Obstruction:
    """Why a graph is not an interval graph.

    For kind == "chordless_cycle", `cycle` lists the cycle's vertices once,
    without repeating the first. For kind == "asteroidal_triple", `triple`
    is sorted ascending and `witness_paths` holds three paths: triple[0] to
    triple[1] avoiding the closed neighborhood of triple[2], then
    triple[0]-triple[2] avoiding triple[1]'s, then triple[1]-triple[2]
    avoiding triple[0]'s.
    """

    kind: str
    cycle: tuple[int, ...] | None = None
    triple: tuple[int, int, int] | None = None
    witness_paths: tuple[tuple[int, ...], ...] | None = None


def maximal_cliques(g: Graph) -> list[frozenset[int]]:
    """All maximal cliques, sorted by their sorted vertex tuples."""
    found: list[frozenset[int]] = []

    def expand(r: set[int], p: set[int], x: set[int]) -> None:
        if not p and not x:
            found.append(frozenset(r))
            return
        pivot = max(sorted(p | x), key=lambda w: len(g.adj[w] & p))
        for v in sorted(p - g.adj[pivot]):
            expand(r | {v}, p & g.adj[v], x & g.adj[v])
            p.discard(v)
            x.add(v)

    if g.n:
        expand(set(), set(range(g.n)), set())
    return sorted(found, key=sorted)


def _consecutive_clique_order(cliques: list[frozenset[int]], n: int) -> list[int] | None:
    """Indices ordering the cliques so each vertex's cliques are contiguous.

    Backtracking over positions: placing a clique opens its unseen vertices
    and closes every open vertex it omits; a clique containing any closed
    vertex cannot be placed. The first ordering found (trying cliques in
    index order at each position) is returned.
    """
    k = len(cliques)
    UNSEEN, OPEN, CLOSED = 0, 1, 2
    state = [UNSEEN] * n
    used = [False] * k
    open_set: set[int] = set()
    order: list[int] = []

    def place(depth: int) -> bool:
        if depth == k:
            return True
        for i in range(k):
            if used[i]:
                continue
            c = cliques[i]
            if any(state[v] == CLOSED for v in c):
                continue
            opened = [v for v in c if state[v] == UNSEEN]
            closed = [v for v in open_set if v not in c]
            for v in opened:
                state[v] = OPEN
                open_set.add(v)
            for v in closed:
                state[v] = CLOSED
                open_set.discard(v)
            used[i] = True
            order.append(i)
            if place(depth + 1):
                return True
            order.pop()
            used[i] = False
            for v in closed:
                state[v] = OPEN
                open_set.add(v)
            for v in opened:
                state[v] = UNSEEN
                open_set.discard(v)
        return False

    return order if place(0) else None


def _representation_from_clique_order(
    cliques: list[frozenset[int]], order: list[int], n: int
) -> ClosedRepresentation:
    position = {clique_index: pos for pos, clique_index in enumerate(order)}
    lefts = [Fraction(0)] * n
    rights = [Fraction(0)] * n
    spans: list[list[int]] = [[] for _ in range(n)]
    for i, clique in enumerate(cliques):
        for v in clique:
            spans[v].append(position[i])
    for v in range(n):
        lefts[v] = Fraction(min(spans[v]))
        rights[v] = Fraction(max(spans[v]))
    return ClosedRepresentation(n, tuple(lefts), tuple(rights))


def _lex_least_chordless_cycle(g: Graph, length: int) -> tuple[int, ...] | None:
    """Lexicographically least chordless cycle of exactly this length.

    Canonical form: starts at its minimum vertex, and the second vertex is
    smaller than the last. Depth-first search extends chordless paths in
    ascending vertex order, so the first completed cycle is the least one.
    """
    adj = g.adj

    def dfs(path: list[int], used: set[int]) -> tuple[int, ...] | None:
        c0 = path[0]
        last = path[-1]
        closing = len(path) == length - 1
        for w in sorted(adj[last]):
            if w <= c0 or w in used:
                continue
            if closing:
                if w <= path[1]:
                    continue
                if c0 not in adj[w]:
                    continue
                if any(p in adj[w] for p in path[1:-1]):
                    continue
                return tuple(path) + (w,)
            else:
                if any(p in adj[w] for p in path[:-1]):
                    continue
                result = dfs(path + [w], used | {w})
                if result is not None:
                    return result
        return None

    for c0 in range(g.n):
        result = dfs([c0], {c0})
        if result is not None:
            return result
    return None


def check_triangulated(g: Graph) -> Obstruction | None:
    """None when every simple cycle of length >= 4 has a chord; otherwise
    the shortest (then lexicographically least) chordless cycle."""
    for length in range(4, g.n + 1):
        cycle = _lex_least_chordless_cycle(g, length)
        if cycle is not None:
            return Obstruction(kind=CHORDLESS_CYCLE, cycle=cycle)
    return None


def _components_avoiding(g: Graph, banned: frozenset[int]) -> list[int]:
    """Component ids per vertex in the subgraph avoiding `banned` (-1 inside)."""
    comp = [-1] * g.n
    cid = 0
    for s in range(g.n):
        if s in banned or comp[s] != -1:
            continue
        comp[s] = cid
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in sorted(g.adj[v]):
                if w not in banned and comp[w] == -1:
                    comp[w] = cid
                    queue.append(w)
        cid += 1
    return comp


def _shortest_path_avoiding(g: Graph, src: int, dst: int, banned: frozenset[int]) -> tuple[int, ...]:
    parent = {src: None}
    queue = deque([src])
    while queue:
        v = queue.popleft()
        if v == dst:
            path = []
            cur: int | None = v
            while cur is not None:
                path.append(cur)
                cur = parent[cur]
            return tuple(reversed(path))
        for w in sorted(g.adj[v]):
            if w not in banned and w not in parent:
                parent[w] = v
                queue.append(w)
    raise InternalInconsistencyError(
        f"no path from {src} to {dst} avoiding {sorted(banned)} despite component check"
    )


def find_asteroidal_triple(g: Graph) -> Obstruction | None:
    """The lexicographically least asteroidal triple with witness paths.

    A triple of pairwise non-adjacent vertices qualifies when every two of
    them are connected by a path avoiding the closed neighborhood of the
    third (reflexivity puts the third vertex itself in that neighborhood).
    """
    comp_avoiding = {
        z: _components_avoiding(g, g.closed_neighborhood(z)) for z in range(g.n)
    }

    def connected_avoiding(a: int, b: int, z: int) -> bool:
        comp = comp_avoiding[z]
        return comp[a] != -1 and comp[a] == comp[b]

    for x, y, z in combinations(range(g.n), 3):
        if g.adjacent(x, y) or g.adjacent(x, z) or g.adjacent(y, z):
            continue
        if (
            connected_avoiding(x, y, z)
            and connected_avoiding(x, z, y)
            and connected_avoiding(y, z, x)
        ):
            paths = (
                _shortest_path_avoiding(g, x, y, g.closed_neighborhood(z)),
                _shortest_path_avoiding(g, x, z, g.closed_neighborhood(y)),
                _shortest_path_avoiding(g, y, z, g.closed_neighborhood(x)),
            )
            return Obstruction(kind=ASTEROIDAL_TRIPLE, triple=(x, y, z), witness_paths=paths)
    return None


def recognize(g: Graph) -> ClosedRepresentation | Obstruction:
    """A verified representation, or a re-validated obstruction."""
    cliques = maximal_cliques(g)
    order = _consecutive_clique_order(cliques, g.n)
    if order is not None:
        rep = _representation_from_clique_order(cliques, order, g.n)
        if not verify_representation(g, rep):
            raise InternalInconsistencyError(
                "clique ordering produced a representation that fails verification"
            )
        return rep
    obstruction = check_triangulated(g)
    if obstruction is None:
        obstruction = find_asteroidal_triple(g)
    if obstruction is None:
        raise InternalInconsistencyError(
            "no consecutive clique ordering exists, yet the graph is triangulated "
            "with no asteroidal triple"
        )
    if not validate_obstruction(g, obstruction):
        raise InternalInconsistencyError("extracted obstruction failed re-validation")
    return obstruction


def validate_obstruction(g: Graph, obs: Obstruction) -> bool:
    """Re-check an obstruction directly against the definitions."""
    if obs.kind == CHORDLESS_CYCLE:
        cycle = obs.cycle
        if cycle is None or len(cycle) < 4 or len(set(cycle)) != len(cycle):
            return False
        k = len(cycle)
        for i in range(k):
            for j in range(i + 1, k):
                consecutive = (j - i == 1) or (i == 0 and j == k - 1)
                if g.adjacent(cycle[i], cycle[j]) != consecutive:
                    return False
        return True
    if obs.kind == ASTEROIDAL_TRIPLE:
        if obs.triple is None or obs.witness_paths is None or len(obs.witness_paths) != 3:
            return False
        x, y, z = obs.triple
        if g.adjacent(x, y) or g.adjacent(x, z) or g.adjacent(y, z):
            return False
        expectations = ((x, y, z), (x, z, y), (y, z, x))
        for (a, b, avoid), path in zip(expectations, obs.witness_paths):
            try:
                validate_path(g, path)
            except InputError:
                return False
            if path[0] != a or path[-1] != b:
                return False
            if any(v in g.closed_neighborhood(avoid) for v in path):
                return False
        return True
    return False


def obstruction_to_jsonable(obs: Obstruction, label=None) -> dict:
    name = label if label is not None else (lambda v: v)
    if obs.kind == CHORDLESS_CYCLE:
        return {"kind": obs.kind, "cycle": [name(v) for v in obs.cycle]}
    return {
        "kind": obs.kind,
        "triple": [name(v) for v in obs.triple],
        "witness_paths": [[name(v) for v in path] for path in obs.witness_paths],
    }
